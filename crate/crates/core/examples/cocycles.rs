//! Lists the bonds of the bundled graph, its directed cocycles through edge 1,
//! and the fundamental cocycles and cycles of its fully optimal tree.

use fully_optimal::cycles::{directed_cocycles_through, enumerate_cocycles, fundamental_cocycle, fundamental_cycle};
use fully_optimal::fixtures::g_star;
use fully_optimal::orientation::alpha_bruteforce;
use fully_optimal::EdgeId;

fn main() -> fully_optimal::Result<()> {
    let g = g_star();
    println!("bonds:");
    for b in enumerate_cocycles(&g)? {
        println!("  {} side={}", b.signed, b.side_labels(&g).join(","));
    }
    println!("directed cocycles through 1:");
    for c in directed_cocycles_through(&g, EdgeId(1))? {
        println!("  {c}");
    }
    let tree = alpha_bruteforce(&g)?;
    println!("tree {tree}");
    for e in g.edge_ids() {
        if tree.contains(e) {
            println!("  C*({e}) = {}", fundamental_cocycle(&g, &tree, e)?);
        } else {
            println!("  C({e})  = {}", fundamental_cycle(&g, &tree, e)?);
        }
    }
    Ok(())
}
