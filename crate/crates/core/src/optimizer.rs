//! `α(G)` as a flag of optimal cocycles in successive minors.
//!
//! Each step works on an [`OptimizableDigraph`]: an infinity edge `p`, an
//! acyclic ground set `E` and an ordered objective set `F` with `F ∪ {p}` a
//! spanning tree. Signed cocycles through `p` are linearly ordered by their
//! first discriminating objective edge; the largest one whose ground part is
//! a directed cocycle is the optimal cocycle, and its complement in the
//! ground set yields the next tree edge.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;

use crate::cycles::{
    check_spanning_tree, directed_cocycles_through, enumerate_cocycles, fundamental_cycle, is_bond,
    lex_min_spanning_tree, lift_cocycle, SpanningTree,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, OrderedDigraph};
use crate::io::format_ids;
use crate::orientation::{is_acyclic, is_bipolar_wrt, require_bipolar_at_min};
use crate::signed::{Sign, SignedEdgeSet};

/// A digraph on `E ∪ F` with an infinity edge, a ground set and an
/// objective set.
#[derive(Clone, Debug)]
pub struct OptimizableDigraph {
    graph: OrderedDigraph,
    p: EdgeId,
    ground: BTreeSet<EdgeId>,
    objective: Vec<EdgeId>,
}

impl OptimizableDigraph {
    /// Validates every defining condition.
    pub fn new(
        graph: OrderedDigraph,
        p: EdgeId,
        ground: BTreeSet<EdgeId>,
        objective: Vec<EdgeId>,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidOptimizable(msg));
        if !graph.is_connected() {
            return invalid("graph is disconnected".into());
        }
        if !ground.contains(&p) {
            return invalid(format!("infinity edge {p} is not in the ground set"));
        }
        if objective.contains(&p) {
            return invalid(format!("infinity edge {p} is in the objective set"));
        }
        if objective.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("objective set is not strictly increasing".into());
        }
        let mut covered: BTreeSet<EdgeId> = ground.iter().chain(&objective).copied().collect();
        covered.insert(p);
        if covered != graph.edge_set() {
            return invalid(format!(
                "ground and objective sets cover {{{}}} but the graph has {{{}}}",
                format_ids(&covered),
                format_ids(&graph.edge_set())
            ));
        }
        if !is_acyclic(&graph.restrict(ground.iter().copied())?) {
            return invalid("ground set has a directed cycle".into());
        }
        let mut tree: BTreeSet<EdgeId> = objective.iter().copied().collect();
        tree.insert(p);
        if let Err(e) = check_spanning_tree(&graph, &SpanningTree::new(tree)) {
            return invalid(format!("objective set plus {p} is not a spanning tree: {e}"));
        }
        Ok(OptimizableDigraph {
            graph,
            p,
            ground,
            objective,
        })
    }

    pub fn graph(&self) -> &OrderedDigraph {
        &self.graph
    }

    pub fn p(&self) -> EdgeId {
        self.p
    }

    pub fn ground(&self) -> &BTreeSet<EdgeId> {
        &self.ground
    }

    /// Ascending.
    pub fn objective(&self) -> &[EdgeId] {
        &self.objective
    }

    fn tree(&self) -> SpanningTree {
        let mut edges: BTreeSet<EdgeId> = self.objective.iter().copied().collect();
        edges.insert(self.p);
        SpanningTree::new(edges)
    }
}

impl fmt::Display for OptimizableDigraph {
    /// `p=1 E={1,2,3} F={2}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} E={} F={}",
            self.p,
            braces(&self.ground),
            braces(&self.objective)
        )
    }
}

fn braces<'a>(ids: impl IntoIterator<Item = &'a EdgeId>) -> String {
    let body: Vec<String> = ids.into_iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

/// The starting point: infinity edge `min(E)`, ground set `E`, objective set
/// the lexicographically smallest spanning tree minus `p`.
pub fn make_optimizable(g: &OrderedDigraph) -> Result<OptimizableDigraph> {
    let p = require_bipolar_at_min(g)?;
    let lex = lex_min_spanning_tree(g)?;
    let objective = lex.edges().iter().copied().filter(|&e| e != p).collect();
    OptimizableDigraph::new(g.clone(), p, g.edge_set(), objective)
}

fn require_p(od: &OptimizableDigraph, c: &SignedEdgeSet) -> Result<()> {
    if c.contains(od.p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{c} does not contain the infinity edge {}", od.p)))
    }
}

/// `Σ ±2^(r-i)` over the objective edges `f_i` of `c`, `F = f_2 < … < f_r`.
pub fn cocycle_weight(od: &OptimizableDigraph, c: &SignedEdgeSet) -> Result<BigInt> {
    require_p(od, c)?;
    let top = od.objective.len();
    let mut weight = BigInt::from(0);
    for (j, &f) in od.objective.iter().enumerate() {
        let w = BigInt::from(1) << (top - 1 - j);
        match c.sign(f) {
            Some(Sign::Positive) => weight += w,
            Some(Sign::Negative) => weight -= w,
            None => {}
        }
    }
    Ok(weight)
}

/// The cocycle ordering: the smallest objective edge on which `c` and `d`
/// differ decides, in favour of the set where it is positive (or absent
/// where the other has it negative).
pub fn compare_cocycles(od: &OptimizableDigraph, c: &SignedEdgeSet, d: &SignedEdgeSet) -> Result<Ordering> {
    require_p(od, c)?;
    require_p(od, d)?;
    if c == d {
        return Ok(Ordering::Equal);
    }
    for &f in &od.objective {
        match (c.sign(f), d.sign(f)) {
            (None, None) => {}
            (Some(a), Some(b)) if a == b => {}
            (Some(a), Some(_)) => {
                log::warn!("cocycles {c} and {d} differ in sign on objective edge {f}");
                return Ok(if a == Sign::Positive {
                    Ordering::Greater
                } else {
                    Ordering::Less
                });
            }
            (Some(a), None) => {
                return Ok(if a == Sign::Positive {
                    Ordering::Greater
                } else {
                    Ordering::Less
                })
            }
            (None, Some(b)) => {
                return Ok(if b == Sign::Negative {
                    Ordering::Greater
                } else {
                    Ordering::Less
                })
            }
        }
    }
    Err(Error::Alarm(format!(
        "distinct cocycles {c} and {d} agree on the whole objective set"
    )))
}

/// Signed cocycles with `p` positive whose ground part is a positive cocycle
/// of the ground digraph, largest first.
pub fn candidate_cocycles(od: &OptimizableDigraph) -> Result<Vec<SignedEdgeSet>> {
    let ground_graph = od.graph.restrict(od.ground.iter().copied())?;
    let mut candidates = Vec::new();
    for bond in enumerate_cocycles(&od.graph)? {
        let Some(d) = bond.signed.oriented_by(od.p) else {
            continue;
        };
        let on_ground = d.restricted_to(&od.ground);
        if on_ground.is_positive() && is_bond(&ground_graph, &on_ground.support()) {
            candidates.push(d);
        }
    }
    sort_descending(od, &mut candidates)?;
    Ok(candidates)
}

/// Insertion sort, since the comparator can fail.
fn sort_descending(od: &OptimizableDigraph, items: &mut [SignedEdgeSet]) -> Result<()> {
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && compare_cocycles(od, &items[j - 1], &items[j])? == Ordering::Less {
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    Ok(())
}

/// The maximal candidate cocycle.
pub fn optimal_cocycle(od: &OptimizableDigraph) -> Result<SignedEdgeSet> {
    candidate_cocycles(od)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Alarm(format!("no candidate cocycle in {od}")))
}

/// One pass of the main loop.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub i: usize,
    pub digraph: OptimizableDigraph,
    /// All candidates, largest first.
    pub candidates: Vec<SignedEdgeSet>,
    pub c_opt: SignedEdgeSet,
    pub t: EdgeId,
    pub e_prime: BTreeSet<EdgeId>,
    pub f_prime: Vec<EdgeId>,
    /// The objective edge dropped by the cycle rule, `None` when `t` itself
    /// was an objective edge.
    pub removed: Option<EdgeId>,
}

#[derive(Clone, Debug, Default)]
pub struct AlgorithmTrace {
    pub steps: Vec<TraceStep>,
}

impl AlgorithmTrace {
    /// Canonical line-oriented rendering, stable for golden files.
    pub fn render(&self, tree: &SpanningTree) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let _ = writeln!(out, "G{} {}", s.i - 1, s.digraph);
            let order: Vec<String> = s.candidates.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "i={} order: {}", s.i, order.join(" > "));
            let removed = s.removed.map_or_else(|| "none".to_string(), |e| e.to_string());
            let _ = writeln!(
                out,
                "i={} Copt={} t={} F'={} removed={}",
                s.i,
                s.c_opt,
                s.t,
                braces(&s.f_prime),
                removed
            );
        }
        let _ = writeln!(out, "alpha={tree}");
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OptimizeOptions {
    pub trace: bool,
    /// Check the comparator against the weights and the bond-minimum lemma
    /// at every step; failures are alarms.
    pub check_invariants: bool,
}

#[derive(Clone, Debug)]
pub struct Optimization {
    pub tree: SpanningTree,
    pub trace: Option<AlgorithmTrace>,
    /// Optimizable digraphs whose optimal cocycle was computed.
    pub digraphs: usize,
    /// Filled only when invariants are checked.
    pub lift_mismatches: Vec<LiftMismatch>,
}

/// `α(G)` by the flag-of-optimal-cocycles algorithm.
pub fn alpha_optimize(g: &OrderedDigraph, options: OptimizeOptions) -> Result<Optimization> {
    let g = g.detached();
    let p = require_bipolar_at_min(&g)?;
    let r = g.vertex_count() - 1;
    let mut od = make_optimizable(&g)?;
    let mut tree = BTreeSet::from([p]);
    let mut trace = options.trace.then(AlgorithmTrace::default);
    let mut digraphs = 0;
    let mut lift_mismatches = Vec::new();
    for i in 2..=r {
        digraphs += 1;
        let candidates = candidate_cocycles(&od)?;
        if options.check_invariants {
            check_weights_agree(&od, &candidates)?;
            lift_mismatches.extend(check_bond_minima(&od, i)?);
        }
        let c_opt = candidates
            .first()
            .cloned()
            .ok_or_else(|| Error::Alarm(format!("no candidate cocycle in {od}")))?;
        log::debug!("step {i}: {od}, Copt={c_opt}");
        let e_prime: BTreeSet<EdgeId> = od.ground.difference(&c_opt.support()).copied().collect();
        let t = *e_prime
            .first()
            .ok_or_else(|| Error::Alarm(format!("optimal cocycle {c_opt} covers the ground set")))?;
        let (f_prime, removed) = if od.objective.contains(&t) {
            (od.objective.iter().copied().filter(|&f| f != t).collect::<Vec<_>>(), None)
        } else {
            let cycle = fundamental_cycle(&od.graph, &od.tree(), t)?;
            let worst = *od
                .objective
                .iter()
                .rev()
                .find(|f| cycle.contains(**f))
                .ok_or_else(|| Error::Alarm(format!("cycle of {t} misses the objective set")))?;
            (od.objective.iter().copied().filter(|&f| f != worst).collect(), Some(worst))
        };
        tree.insert(t);
        let next = if i < r {
            let mut keep: BTreeSet<EdgeId> = e_prime.iter().chain(&f_prime).copied().collect();
            keep.insert(od.p);
            let minor = od.graph.restrict(keep)?.contract([od.p])?;
            Some(OptimizableDigraph::new(minor, t, e_prime.clone(), f_prime.clone())?)
        } else {
            None
        };
        if let Some(trace) = trace.as_mut() {
            trace.steps.push(TraceStep {
                i,
                digraph: od.clone(),
                candidates,
                c_opt,
                t,
                e_prime,
                f_prime,
                removed,
            });
        }
        if let Some(next) = next {
            od = next;
        }
    }
    Ok(Optimization {
        tree: SpanningTree::new(tree),
        trace,
        digraphs,
        lift_mismatches,
    })
}

/// The comparator and the weight function order every pair alike.
pub fn check_weights_agree(od: &OptimizableDigraph, candidates: &[SignedEdgeSet]) -> Result<()> {
    let weights: Vec<BigInt> = candidates
        .iter()
        .map(|c| cocycle_weight(od, c))
        .collect::<Result<_>>()?;
    for (a, (c, wc)) in candidates.iter().zip(&weights).enumerate() {
        for (d, wd) in candidates.iter().zip(&weights).skip(a + 1) {
            let by_comparator = compare_cocycles(od, c, d)?;
            if by_comparator != wc.cmp(wd) {
                return Err(Error::Alarm(format!(
                    "{c} vs {d}: comparator says {by_comparator:?}, weights {wc} and {wd}"
                )));
            }
        }
    }
    Ok(())
}

/// A bond of a minor whose lift to the original digraph has a smaller
/// minimum than the bond itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftMismatch {
    pub i: usize,
    pub bond: SignedEdgeSet,
    pub lift: SignedEdgeSet,
}

/// Asserts that every bond's smallest edge lies in `F ∪ {p}`.
///
/// Also compares each bond's minimum with that of its lift to the original
/// digraph. Those can differ: on the eight-edge example, `C*(α;4) = -{3}+{4,6}`
/// induces `+{4,6}` after 3 is deleted. Differences are returned, not raised.
pub fn check_bond_minima(od: &OptimizableDigraph, i: usize) -> Result<Vec<LiftMismatch>> {
    let tree = od.tree();
    let mut mismatches = Vec::new();
    for bond in enumerate_cocycles(&od.graph)? {
        let min = bond.signed.smallest().expect("bonds are nonempty");
        if !tree.contains(min) {
            return Err(Error::Alarm(format!(
                "bond {} has its minimum {min} outside the objective set and {}",
                bond.signed, od.p
            )));
        }
        if od.graph.trace().is_some() {
            let lift = lift_cocycle(&od.graph, &bond.signed)?;
            if lift.smallest() != Some(min) {
                mismatches.push(LiftMismatch {
                    i,
                    bond: bond.signed,
                    lift,
                });
            }
        }
    }
    Ok(mismatches)
}

/// The directed cocycle through `p` with the lexicographically smallest
/// ascending support.
pub fn lexmin_directed_cocycle(g: &OrderedDigraph, p: EdgeId) -> Result<SignedEdgeSet> {
    g.require(p)?;
    if !is_bipolar_wrt(g, p) {
        return Err(Error::NotBipolar(p));
    }
    directed_cocycles_through(g, p)?
        .into_iter()
        .min_by_key(|c| c.support().into_iter().collect::<Vec<_>>())
        .ok_or_else(|| Error::Alarm(format!("no directed cocycle through {p}")))
}
