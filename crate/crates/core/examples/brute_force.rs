//! Filters all spanning trees of the bundled graph through the sign
//! criterion, printing activities of each tree and which one is fully
//! optimal.

use fully_optimal::cycles::enumerate_spanning_trees;
use fully_optimal::fixtures::g_star;
use fully_optimal::orientation::{activities, satisfies_full_optimality};
use fully_optimal::EdgeId;

fn main() -> fully_optimal::Result<()> {
    let g = g_star();
    for tree in enumerate_spanning_trees(&g)? {
        let a = activities(&g, &tree)?;
        let optimal = satisfies_full_optimality(&g, EdgeId(1), &tree)?;
        println!(
            "{tree:<10} internal={} external={}{}",
            a.internal,
            a.external,
            if optimal { "  <- fully optimal" } else { "" }
        );
    }
    Ok(())
}
