//! Prints the work counters of deletion/contraction and of the full
//! bijection builder on the fixed worst-case family, with the fitted
//! log-log slopes against 2^n and n·2^n.

use fully_optimal::growth::{fit, growth_family, measure};

fn main() -> fully_optimal::Result<()> {
    let points = growth_family().iter().map(measure).collect::<fully_optimal::Result<Vec<_>>>()?;
    println!(" n  delcon  2^n   bijection  n*2^n  minors  optimizer");
    for p in &points {
        println!(
            "{:>2}  {:>6}  {:>4}  {:>9}  {:>5}  {:>6}  {:>9}",
            p.edges,
            p.delcon_visits,
            1u64 << p.edges,
            p.bijection_orientations,
            (p.edges as u64) << p.edges,
            p.bijection_minors,
            p.optimizer_digraphs
        );
    }
    let f = fit(&points);
    println!("slope vs 2^n:   {:.3}", f.delcon_slope);
    println!("slope vs n*2^n: {:.3}", f.bijection_slope);
    Ok(())
}
