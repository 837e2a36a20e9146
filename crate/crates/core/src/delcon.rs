//! Deletion/contraction on the largest edge: a recursive `α` and a builder
//! for the whole bijection between bipolar orientations and uniactive
//! internal trees.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::cycles::{fundamental_cocycle_unchecked, fundamental_cycle_unchecked, SpanningTree};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, OrderedDigraph};
use crate::orientation::{is_bipolar_wrt, require_bipolar_at_min, uniactive_internal_trees};
use crate::signed::SignedEdgeSet;

/// Which sign test decides between the two minors when both are bipolar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formulation {
    /// Fundamental cycle of `ω` w.r.t. `α(G∖ω)`.
    Cycle,
    /// Fundamental cocycle of `ω` w.r.t. `α(G/ω) ∪ ω`.
    Cocycle,
}

impl Formulation {
    pub const ALL: [Formulation; 2] = [Formulation::Cycle, Formulation::Cocycle];
}

impl FromStr for Formulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(Formulation::Cycle),
            "cocycle" => Ok(Formulation::Cocycle),
            other => Err(Error::Precondition(format!("unknown formulation `{other}`"))),
        }
    }
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Formulation::Cycle => "cycle",
            Formulation::Cocycle => "cocycle",
        })
    }
}

/// Whether the smallest element of `set` and `e` carry opposite signs.
fn opposite_to_min(set: &SignedEdgeSet, e: EdgeId) -> bool {
    let min = set.smallest().expect("fundamental sets are nonempty");
    set.sign(min) != set.sign(e)
}

/// Chooses between `α(G∖ω)` and `α(G/ω) ∪ ω` for a digraph whose two minors
/// are both bipolar. Both formulations are evaluated; a disagreement is an
/// alarm.
fn resolve_both(
    g: &OrderedDigraph,
    omega: EdgeId,
    deleted: &SpanningTree,
    contracted: &SpanningTree,
    formulation: Formulation,
) -> Result<SpanningTree> {
    let with_omega = contracted.with(omega);
    let by_cycle = if opposite_to_min(&fundamental_cycle_unchecked(g, deleted, omega), omega) {
        deleted
    } else {
        &with_omega
    };
    let by_cocycle = if opposite_to_min(&fundamental_cocycle_unchecked(g, &with_omega, omega), omega) {
        &with_omega
    } else {
        deleted
    };
    if by_cycle != by_cocycle {
        return Err(Error::Alarm(format!(
            "formulations disagree at edge {omega}: cycle gives {by_cycle}, cocycle gives {by_cocycle}"
        )));
    }
    Ok(match formulation {
        Formulation::Cycle => by_cycle.clone(),
        Formulation::Cocycle => by_cocycle.clone(),
    })
}

/// Work done by [`alpha_delcon_counted`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DelconStats {
    /// Recursive calls, one per minor visited.
    pub visits: u64,
}

/// `α(G)` by recursion on deletion and contraction of the largest edge.
pub fn alpha_delcon(g: &OrderedDigraph, formulation: Formulation) -> Result<SpanningTree> {
    alpha_delcon_counted(g, formulation).map(|(t, _)| t)
}

pub fn alpha_delcon_counted(g: &OrderedDigraph, formulation: Formulation) -> Result<(SpanningTree, DelconStats)> {
    let p = require_bipolar_at_min(g)?;
    let mut stats = DelconStats::default();
    let tree = delcon_rec(&g.detached(), p, formulation, &mut stats)?;
    Ok((tree, stats))
}

fn delcon_rec(g: &OrderedDigraph, p: EdgeId, formulation: Formulation, stats: &mut DelconStats) -> Result<SpanningTree> {
    stats.visits += 1;
    let omega = g.max_edge().expect("bipolar graphs have edges");
    if omega == p {
        return Ok(SpanningTree::new(BTreeSet::from([p])));
    }
    let deleted = g.delete([omega])?.detached();
    let contracted = g.contract([omega])?.detached();
    match (is_bipolar_wrt(&deleted, p), is_bipolar_wrt(&contracted, p)) {
        (true, false) => delcon_rec(&deleted, p, formulation, stats),
        (false, true) => Ok(delcon_rec(&contracted, p, formulation, stats)?.with(omega)),
        (true, true) => {
            let t_del = delcon_rec(&deleted, p, formulation, stats)?;
            let t_con = delcon_rec(&contracted, p, formulation, stats)?;
            resolve_both(g, omega, &t_del, &t_con, formulation)
        }
        (false, false) => Err(Error::Alarm(format!(
            "neither minor at edge {omega} is bipolar although the digraph is"
        ))),
    }
}

/// An orientation of a fixed underlying graph, as a reversal mask over its
/// edges in increasing order: bit `i` set means edge `i` is reversed with
/// respect to its stored direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    bits: u64,
    len: usize,
}

impl Orientation {
    pub fn new(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 64 && (len == 64 || bits >> len == 0));
        Orientation { bits, len }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_reversed(&self, position: usize) -> bool {
        self.bits >> position & 1 == 1
    }

    /// Applies the reversals to `g`, whose edges must number `len`.
    pub fn apply(&self, g: &OrderedDigraph) -> Result<OrderedDigraph> {
        if g.edge_count() != self.len {
            return Err(Error::Precondition(format!(
                "orientation of {} edges applied to {} edges",
                self.len,
                g.edge_count()
            )));
        }
        let flipped: Vec<EdgeId> = g
            .edge_ids()
            .enumerate()
            .filter(|&(i, _)| self.is_reversed(i))
            .map(|(_, id)| id)
            .collect();
        g.reverse_edges(flipped)
    }
}

impl fmt::Display for Orientation {
    /// One character per edge: `0` stored direction, `1` reversed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.is_reversed(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The bijection for one underlying graph with the smallest edge kept in its
/// stored direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionTable {
    edges: Vec<EdgeId>,
    entries: BTreeMap<u64, SpanningTree>,
}

impl BijectionTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn iter(&self) -> impl Iterator<Item = (Orientation, &SpanningTree)> + '_ {
        let len = self.edges.len();
        self.entries.iter().map(move |(&bits, t)| (Orientation { bits, len }, t))
    }

    pub fn get(&self, orientation: &Orientation) -> Option<&SpanningTree> {
        self.entries.get(&orientation.bits)
    }

    /// The tree assigned to an oriented copy of the table's graph.
    pub fn lookup(&self, base: &OrderedDigraph, oriented: &OrderedDigraph) -> Option<&SpanningTree> {
        if base.edge_ids().ne(oriented.edge_ids()) {
            return None;
        }
        let mut bits = 0u64;
        for (i, (a, b)) in base.edges().iter().zip(oriented.edges()).enumerate() {
            let (at, ah) = (base.vertex_label(a.tail), base.vertex_label(a.head));
            let (bt, bh) = (oriented.vertex_label(b.tail), oriented.vertex_label(b.head));
            if (at, ah) == (bh, bt) && at != ah {
                bits |= 1 << i;
            } else if (at, ah) != (bt, bh) {
                return None;
            }
        }
        self.entries.get(&bits)
    }
}

impl fmt::Display for BijectionTable {
    /// One line per orientation: `<bitstring> -> <tree ids>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (o, t) in self.iter() {
            writeln!(f, "{o} -> {t}")?;
        }
        Ok(())
    }
}

/// Work done by [`build_full_bijection_counted`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BijectionStats {
    /// Distinct minors whose table was assembled.
    pub minors_built: u64,
    /// Orientations examined across all minors.
    pub orientations_processed: u64,
}

/// The whole bijection at once, sharing the tables of common minors.
pub fn build_full_bijection(g: &OrderedDigraph, p: EdgeId) -> Result<BijectionTable> {
    build_full_bijection_counted(g, p).map(|(t, _)| t)
}

pub fn build_full_bijection_counted(g: &OrderedDigraph, p: EdgeId) -> Result<(BijectionTable, BijectionStats)> {
    g.require(p)?;
    let min = g.min_edge().ok_or(Error::EmptyGraph)?;
    if p != min {
        return Err(Error::NotMinimumEdge { p, min });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    if m > 40 {
        return Err(Error::TooLarge(format!("{m} edges for the full bijection")));
    }
    let mut builder = Builder {
        root: g.detached(),
        ids: g.edge_ids().collect(),
        p,
        memo: HashMap::new(),
        stats: BijectionStats::default(),
    };
    let entries = builder.table(0, 0, m)?;
    let table = BijectionTable {
        edges: builder.ids.clone(),
        entries: (*entries).clone(),
    };
    verify_bijective(g, &table)?;
    Ok((table, builder.stats))
}

type Entries = std::rc::Rc<BTreeMap<u64, SpanningTree>>;

struct Builder {
    root: OrderedDigraph,
    ids: Vec<EdgeId>,
    p: EdgeId,
    /// Keyed by the masks of deleted and contracted edges (positions in `ids`).
    memo: HashMap<(u64, u64), Entries>,
    stats: BijectionStats,
}

impl Builder {
    /// Table of the minor with the given deletions and contractions, which
    /// always concern the largest `ids.len() - len` edges.
    fn table(&mut self, deleted: u64, contracted: u64, len: usize) -> Result<Entries> {
        if let Some(hit) = self.memo.get(&(deleted, contracted)) {
            return Ok(hit.clone());
        }
        let (sub_del, sub_con) = if len > 1 {
            let bit = 1u64 << (len - 1);
            (
                Some(self.table(deleted | bit, contracted, len - 1)?),
                Some(self.table(deleted, contracted | bit, len - 1)?),
            )
        } else {
            (None, None)
        };
        let minor = self.minor(deleted, contracted)?;
        self.stats.minors_built += 1;
        let omega = self.ids[len - 1];
        let mut entries = BTreeMap::new();
        // Bit 0 (the smallest edge) stays clear.
        for half in 0..(1u64 << (len - 1)) {
            let bits = half << 1;
            self.stats.orientations_processed += 1;
            let orientation = Orientation { bits, len };
            let oriented = orientation.apply(&minor)?;
            if !is_bipolar_wrt(&oriented, self.p) {
                continue;
            }
            let tree = match (&sub_del, &sub_con) {
                (None, None) => SpanningTree::new(BTreeSet::from([self.p])),
                (Some(del), Some(con)) => {
                    let rest = bits & !(1u64 << (len - 1));
                    match (del.get(&rest), con.get(&rest)) {
                        (Some(t), None) => t.clone(),
                        (None, Some(t)) => t.with(omega),
                        (Some(t_del), Some(t_con)) => {
                            resolve_both(&oriented, omega, t_del, t_con, Formulation::Cycle)?
                        }
                        (None, None) => {
                            return Err(Error::Alarm(format!(
                                "orientation {orientation} is bipolar but neither minor at edge {omega} is"
                            )))
                        }
                    }
                }
                _ => unreachable!("both minor tables exist together"),
            };
            entries.insert(bits, tree);
        }
        check_pairs(&entries, len, omega)?;
        let entries = std::rc::Rc::new(entries);
        self.memo.insert((deleted, contracted), entries.clone());
        Ok(entries)
    }

    fn minor(&self, deleted: u64, contracted: u64) -> Result<OrderedDigraph> {
        let pick = |mask: u64| -> Vec<EdgeId> {
            self.ids
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &id)| id)
                .collect()
        };
        Ok(self
            .root
            .delete(pick(deleted))?
            .contract(pick(contracted))?
            .detached())
    }
}

/// Orientations differing only on `ω` that are both bipolar must receive
/// different trees.
fn check_pairs(entries: &BTreeMap<u64, SpanningTree>, len: usize, omega: EdgeId) -> Result<()> {
    if len < 2 {
        return Ok(());
    }
    let bit = 1u64 << (len - 1);
    for (&bits, tree) in entries.range(..bit) {
        if entries.get(&(bits | bit)) == Some(tree) {
            return Err(Error::Alarm(format!(
                "both orientations of edge {omega} map to {tree}"
            )));
        }
    }
    Ok(())
}

fn verify_bijective(g: &OrderedDigraph, table: &BijectionTable) -> Result<()> {
    let uniactive: BTreeSet<SpanningTree> = uniactive_internal_trees(g)?.into_iter().collect();
    let images: BTreeSet<&SpanningTree> = table.entries.values().collect();
    if images.len() != table.len() {
        return Err(Error::Alarm(format!(
            "{} orientations share {} trees",
            table.len(),
            images.len()
        )));
    }
    if let Some(t) = images.iter().find(|t| !uniactive.contains(t)) {
        return Err(Error::Alarm(format!("image {t} is not uniactive internal")));
    }
    if images.len() != uniactive.len() {
        return Err(Error::Alarm(format!(
            "{} images for {} uniactive internal trees",
            images.len(),
            uniactive.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g_star, p2, t3};
    use crate::orientation::alpha_bruteforce;

    #[test]
    fn small_fixtures() {
        for f in Formulation::ALL {
            assert_eq!(alpha_delcon(&p2(), f).unwrap(), SpanningTree::from_ids(&[1]));
            assert_eq!(alpha_delcon(&t3(), f).unwrap(), SpanningTree::from_ids(&[1, 3]));
            assert_eq!(alpha_delcon(&g_star(), f).unwrap(), SpanningTree::from_ids(&[1, 4, 5, 7]));
        }
    }

    #[test]
    fn rejects_non_bipolar() {
        let g = t3().reverse_edge(EdgeId(3)).unwrap();
        assert!(matches!(alpha_delcon(&g, Formulation::Cycle), Err(Error::NotBipolar(_))));
    }

    #[test]
    fn triangle_table() {
        let table = build_full_bijection(&t3(), EdgeId(1)).unwrap();
        assert_eq!(table.to_string(), "000 -> 1 3\n");
        let table = build_full_bijection(&p2(), EdgeId(1)).unwrap();
        assert_eq!(table.to_string(), "00 -> 1\n");
    }

    #[test]
    fn g_star_table_matches_brute_force() {
        let g = g_star();
        let table = build_full_bijection(&g, EdgeId(1)).unwrap();
        assert_eq!(table.lookup(&g, &g), Some(&SpanningTree::from_ids(&[1, 4, 5, 7])));
        for (o, t) in table.iter() {
            assert_eq!(&alpha_bruteforce(&o.apply(&g).unwrap()).unwrap(), t, "{o}");
        }
    }

    #[test]
    fn orientation_round_trip() {
        let g = g_star();
        let o = Orientation { bits: 0b1010_0000, len: 8 };
        assert_eq!(o.to_string(), "00000101");
        let oriented = o.apply(&g).unwrap();
        let table = BijectionTable {
            edges: g.edge_ids().collect(),
            entries: BTreeMap::from([(o.bits, SpanningTree::from_ids(&[1]))]),
        };
        assert!(table.lookup(&g, &oriented).is_some());
    }
}
