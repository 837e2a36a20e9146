//! Tests each orientation of the triangle for bipolarity under the three
//! equivalent characterizations and shows that they agree.

use fully_optimal::delcon::Orientation;
use fully_optimal::fixtures::t3;
use fully_optimal::orientation::{is_bipolar, Characterization};
use fully_optimal::EdgeId;

fn main() -> fully_optimal::Result<()> {
    let g = t3();
    let m = g.edge_count();
    for bits in 0..1u64 << m {
        let o = Orientation::new(bits, m);
        let oriented = o.apply(&g)?;
        let verdicts: Vec<String> = Characterization::ALL
            .iter()
            .map(|&c| Ok(format!("{}={}", c.name(), is_bipolar(&oriented, EdgeId(1), c)?)))
            .collect::<fully_optimal::Result<_>>()?;
        println!("{o}  {}", verdicts.join("  "));
    }
    Ok(())
}
