//! Recovers orientations from trees: for each uniactive internal tree of the
//! bundled graph, builds the orientation whose fully optimal tree it is and
//! checks the round trip.

use fully_optimal::fixtures::g_star;
use fully_optimal::harness::describe;
use fully_optimal::orientation::{alpha_bruteforce, invert_alpha, uniactive_internal_trees, PDirection};

fn main() -> fully_optimal::Result<()> {
    let g = g_star();
    for tree in uniactive_internal_trees(&g)? {
        let oriented = invert_alpha(&g, &tree, PDirection::Forward)?;
        let back = alpha_bruteforce(&oriented)?;
        let mark = if back == tree { "ok" } else { "MISMATCH" };
        println!("{tree:<10} {}  [{mark}]", describe(&oriented));
    }
    Ok(())
}
