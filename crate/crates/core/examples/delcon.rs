//! Computes the tree by deletion/contraction of the largest edge, with both
//! the cycle and the cocycle rule for choosing between the two minors.

use fully_optimal::delcon::{alpha_delcon_counted, Formulation};
use fully_optimal::fixtures::g_star;

fn main() -> fully_optimal::Result<()> {
    let g = g_star();
    for f in Formulation::ALL {
        let (tree, stats) = alpha_delcon_counted(&g, f)?;
        println!("{f}: {tree} ({} recursive calls)", stats.visits);
    }
    Ok(())
}
