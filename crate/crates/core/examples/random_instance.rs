//! Generates a random bipolar digraph and computes its tree by all three
//! methods.

use fully_optimal::delcon::{alpha_delcon, Formulation};
use fully_optimal::harness::generate_random_bipolar;
use fully_optimal::io::write_graph;
use fully_optimal::optimizer::{alpha_optimize, OptimizeOptions};
use fully_optimal::orientation::alpha_bruteforce;

fn main() -> fully_optimal::Result<()> {
    let seed = std::env::args().nth(1).map_or(3, |s| s.parse().expect("numeric seed"));
    let g = generate_random_bipolar(6, 9, seed)?;
    print!("{}", write_graph(&g));
    println!("brute force   {}", alpha_bruteforce(&g)?);
    println!("delcon cycle  {}", alpha_delcon(&g, Formulation::Cycle)?);
    println!("delcon cocyc  {}", alpha_delcon(&g, Formulation::Cocycle)?);
    println!("optimizer     {}", alpha_optimize(&g, OptimizeOptions::default())?.tree);
    Ok(())
}
