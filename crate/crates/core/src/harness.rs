//! Corpus generators and the cross-method verification driver.
//!
//! Every check is recorded under a property name so callers can see both how
//! often a property was exercised and where it failed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cycles::{enumerate_spanning_trees, fundamental_cocycle, lift_cocycle, SpanningTree};
use crate::delcon::{alpha_delcon, build_full_bijection, Formulation, Orientation};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, OrderedDigraph};
use crate::optimizer::{
    alpha_optimize, check_bond_minima, check_weights_agree, lexmin_directed_cocycle, OptimizeOptions,
};
use crate::orientation::{
    alpha_bruteforce, criterion_holds, invert_alpha, is_bipolar, is_bipolar_wrt, satisfies_alt_characterization,
    uniactive_internal_trees, Characterization, PDirection,
};

/// Property names used in reports.
pub mod property {
    pub const METHOD_AGREEMENT: &str = "method_agreement";
    pub const FORMULATION_EQUIVALENCE: &str = "formulation_equivalence";
    pub const UNIQUENESS: &str = "uniqueness";
    pub const CRITERION_EQUIVALENCE: &str = "criterion_equivalence";
    pub const CHARACTERIZATION_AGREEMENT: &str = "characterization_agreement";
    pub const COUNTING: &str = "counting";
    pub const P_INDEPENDENCE: &str = "p_independence";
    pub const BIJECTION: &str = "bijection";
    pub const ROUND_TRIP: &str = "round_trip";
    pub const OPPOSITE_INVARIANCE: &str = "opposite_invariance";
    pub const COROLLARY: &str = "corollary";
    pub const MINOR_RESTRICTION: &str = "minor_restriction";
    pub const GREEDY_MIN: &str = "greedy_min";
    pub const COMPARATOR_WEIGHT: &str = "comparator_weight";
    pub const BOND_MINIMUM: &str = "bond_minimum";
    pub const SCHOLIA: &str = "scholia";
    pub const MINOR_COUNT: &str = "minor_count";
    pub const LEXMIN_OBSERVATION: &str = "lexmin_observation";
    pub const GENERATOR: &str = "generator";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub property: &'static str,
    pub details: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub graphs_checked: u64,
    pub instances_checked: u64,
    /// How many times each property was evaluated.
    pub checks: BTreeMap<&'static str, u64>,
    pub failures: Vec<Failure>,
    /// Instances where the first fundamental cocycle is not the lexicographic
    /// minimum among directed cocycles through `p`.
    pub observation_counterexamples: Vec<String>,
    /// Minor bonds whose minimum differs from that of their lift; data only.
    pub lift_mismatches: u64,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures_of(&self, property: &str) -> usize {
        self.failures.iter().filter(|f| f.property == property).count()
    }

    pub fn checks_of(&self, property: &str) -> u64 {
        self.checks.get(property).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.graphs_checked += other.graphs_checked;
        self.instances_checked += other.instances_checked;
        for (k, v) in other.checks {
            *self.checks.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
        self.observation_counterexamples
            .extend(other.observation_counterexamples);
        self.lift_mismatches += other.lift_mismatches;
    }

    fn check(&mut self, property: &'static str, instance: &str, ok: bool, details: impl FnOnce() -> String) {
        *self.checks.entry(property).or_default() += 1;
        if !ok {
            self.fail(property, instance, details());
        }
    }

    fn fail(&mut self, property: &'static str, instance: &str, details: String) {
        self.failures.push(Failure {
            instance: instance.to_string(),
            property,
            details,
        });
    }

    /// Records `result`, returning the value if it is `Ok`.
    fn attempt<T>(&mut self, property: &'static str, instance: &str, result: Result<T>) -> Option<T> {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                *self.checks.entry(property).or_default() += 1;
                self.fail(property, instance, e.to_string());
                None
            }
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs checked: {}", self.graphs_checked)?;
        writeln!(f, "instances checked: {}", self.instances_checked)?;
        for (property, count) in &self.checks {
            writeln!(
                f,
                "  {property}: {count} checks, {} failures",
                self.failures_of(property)
            )?;
        }
        writeln!(
            f,
            "observation counterexamples: {}",
            self.observation_counterexamples.len()
        )?;
        for o in &self.observation_counterexamples {
            writeln!(f, "  {o}")?;
        }
        writeln!(f, "lift minimum mismatches (data only): {}", self.lift_mismatches)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for x in &self.failures {
            writeln!(f, "  [{}] {}: {}", x.property, x.instance, x.details)?;
        }
        writeln!(f, "{}", if self.is_success() { "PASS" } else { "FAIL" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corpus {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub corpus: Corpus,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Random edge orders per graph, on top of the identity order.
    pub orderings: usize,
    pub seed: u64,
    /// Instances for the random corpus.
    pub count: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            corpus: Corpus::Exhaustive,
            max_vertices: 4,
            max_edges: 6,
            orderings: 6,
            seed: 1,
            count: 1000,
        }
    }
}

/// Connected loopless multigraphs with every pair of vertices joined at most
/// twice, one per isomorphism class, on 2 to `max_vertices` vertices and at
/// most `max_edges` edges. Vertices are `v0, v1, …`; edges point from the
/// smaller to the larger index and are numbered pair by pair.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Result<Vec<OrderedDigraph>> {
    if max_vertices > 6 {
        return Err(Error::TooLarge(format!("{max_vertices} vertices for the exhaustive corpus")));
    }
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let perms = permutations(n);
        let mut mult = vec![0u8; pairs.len()];
        multiplicities(&pairs, 0, max_edges, &mut mult, &mut |m| {
            let edges: usize = m.iter().map(|&x| x as usize).sum();
            if edges + 1 < n || !pair_graph_connected(n, &pairs, m) || !is_canonical(n, &pairs, &perms, m) {
                return;
            }
            out.push(pair_graph(n, &pairs, m));
        });
    }
    Ok(out)
}

fn multiplicities(
    pairs: &[(usize, usize)],
    k: usize,
    budget: usize,
    mult: &mut Vec<u8>,
    visit: &mut impl FnMut(&[u8]),
) {
    if k == pairs.len() {
        visit(mult);
        return;
    }
    for x in 0..=2u8.min(budget as u8) {
        mult[k] = x;
        multiplicities(pairs, k + 1, budget - x as usize, mult, visit);
    }
    mult[k] = 0;
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    // Pairs are listed (0,1), (0,2), …, (1,2), …
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Keeps the lexicographically largest relabelling as the representative.
fn is_canonical(n: usize, pairs: &[(usize, usize)], perms: &[Vec<usize>], mult: &[u8]) -> bool {
    perms.iter().all(|perm| {
        let image: Vec<u8> = pairs
            .iter()
            .map(|&(i, j)| mult[pair_index(n, perm[i], perm[j])])
            .collect();
        image.as_slice() <= mult
    })
}

fn pair_graph_connected(n: usize, pairs: &[(usize, usize)], mult: &[u8]) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mult[k] == 0 {
                continue;
            }
            let w = if i == v {
                j
            } else if j == v {
                i
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn pair_graph(n: usize, pairs: &[(usize, usize)], mult: &[u8]) -> OrderedDigraph {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        for _ in 0..mult[k] {
            edges.push((EdgeId(edges.len() as u32 + 1), i, j));
        }
    }
    OrderedDigraph::from_indexed(labels, edges).expect("generated graphs are well formed")
}

/// The same digraph with the `k`-th edge (in increasing order) renamed
/// `new_ids[k]`.
pub fn renumber(g: &OrderedDigraph, new_ids: &[u32]) -> Result<OrderedDigraph> {
    if new_ids.len() != g.edge_count() {
        return Err(Error::Precondition("one new id per edge".into()));
    }
    OrderedDigraph::from_indexed(
        g.vertices().to_vec(),
        g.edges()
            .iter()
            .zip(new_ids)
            .map(|(e, &id)| (EdgeId(id), e.tail, e.head)),
    )
}

/// The identity order plus up to `orderings` further distinct random orders.
pub fn edge_orders(g: &OrderedDigraph, orderings: usize, seed: u64) -> Vec<OrderedDigraph> {
    let m = g.edge_count() as u32;
    let identity: Vec<u32> = (1..=m).collect();
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut out = vec![renumber(g, &identity).expect("same edge count")];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..orderings * 4 {
        if out.len() > orderings {
            break;
        }
        let mut ids = identity.clone();
        ids.shuffle(&mut rng);
        if seen.insert(ids.clone()) {
            out.push(renumber(g, &ids).expect("same edge count"));
        }
    }
    out
}

/// A random digraph on `n_vertices` vertices and `n_edges` edges, bipolar
/// with respect to edge 1.
///
/// A hidden random vertex order puts edge 1 from the first to the last
/// vertex and every other edge from lower to higher; inner vertices get an
/// in-edge and an out-edge first, the rest is filled at random.
pub fn generate_random_bipolar(n_vertices: usize, n_edges: usize, seed: u64) -> Result<OrderedDigraph> {
    let infeasible = || {
        Error::Precondition(format!(
            "no bipolar digraph with {n_vertices} vertices and {n_edges} edges"
        ))
    };
    if n_vertices < 2 || n_edges == 0 || (n_vertices > 2 && n_edges < n_vertices) || n_edges > 64 {
        return Err(infeasible());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let mut order: Vec<usize> = (0..n_vertices).collect();
        order.shuffle(&mut rng);
        let last = n_vertices - 1;
        let mut has_in = vec![false; n_vertices];
        let mut has_out = vec![false; n_vertices];
        has_out[0] = true;
        has_in[last] = true;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 1..last {
            if !has_in[i] {
                let j = rng.gen_range(0..i);
                pairs.push((j, i));
                has_out[j] = true;
                has_in[i] = true;
            }
            if !has_out[i] {
                let k = rng.gen_range(i + 1..n_vertices);
                pairs.push((i, k));
                has_out[i] = true;
                has_in[k] = true;
            }
        }
        if pairs.len() > n_edges - 1 {
            continue;
        }
        while pairs.len() < n_edges - 1 {
            let a = rng.gen_range(0..n_vertices);
            let b = rng.gen_range(0..n_vertices);
            if a != b {
                pairs.push((a.min(b), a.max(b)));
            }
        }
        let mut ids: Vec<u32> = (2..=n_edges as u32).collect();
        ids.shuffle(&mut rng);
        let labels: Vec<String> = order.iter().map(|&v| format!("v{v}")).collect();
        let mut edges = vec![(EdgeId(1), 0, last)];
        edges.extend(pairs.iter().zip(&ids).map(|(&(a, b), &id)| (EdgeId(id), a, b)));
        let g = OrderedDigraph::from_indexed(labels, edges)?;
        for c in Characterization::ALL {
            if !is_bipolar(&g, EdgeId(1), c)? {
                return Err(Error::Alarm(format!(
                    "generated digraph fails the {} characterization",
                    c.name()
                )));
            }
        }
        return Ok(g);
    }
    Err(infeasible())
}

/// Short one-line description of a digraph: `a>b:1 …`.
pub fn describe(g: &OrderedDigraph) -> String {
    g.edges()
        .iter()
        .map(|e| format!("{}:{}>{}", e.id, g.vertex_label(e.tail), g.vertex_label(e.head)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Orientations of `g` keeping its smallest edge in the stored direction.
fn orientations(g: &OrderedDigraph) -> impl Iterator<Item = (Orientation, OrderedDigraph)> + '_ {
    let m = g.edge_count();
    (0..1u64 << (m - 1)).map(move |half| {
        let o = Orientation::new(half << 1, m);
        (o, o.apply(g).expect("matching edge count"))
    })
}

/// Per-graph checks: counting, independence from the choice of `p`,
/// characterization agreement, the full bijection and the round trip.
/// Returns the bipolar orientations with `p` in its stored direction.
pub fn check_graph(g: &OrderedDigraph, report: &mut VerificationReport) -> Vec<OrderedDigraph> {
    use property::*;
    report.graphs_checked += 1;
    let name = describe(g);
    let p = g.min_edge().expect("corpus graphs have edges");
    let m = g.edge_count();

    let Some(uniactive) = report.attempt(COUNTING, &name, uniactive_internal_trees(g)) else {
        return Vec::new();
    };
    let beta = uniactive.len();

    let mut forward = Vec::new();
    let mut reversed = 0usize;
    for bits in 0..1u64 << m {
        let oriented = Orientation::new(bits, m).apply(g).expect("matching edge count");
        let verdicts: Vec<bool> = Characterization::ALL
            .iter()
            .map(|&c| is_bipolar(&oriented, p, c).unwrap_or(false))
            .collect();
        report.check(CHARACTERIZATION_AGREEMENT, &describe(&oriented), verdicts.iter().all(|&v| v == verdicts[0]), || {
            format!("source_sink/cocycle/dual = {verdicts:?}")
        });
        if verdicts[0] {
            if bits & 1 == 0 {
                forward.push(oriented);
            } else {
                reversed += 1;
            }
        }
    }
    report.check(COUNTING, &name, forward.len() == beta && reversed == beta, || {
        format!(
            "{} orientations with p forward, {reversed} with p reversed, beta = {beta}",
            forward.len()
        )
    });

    // Each edge in turn becomes the smallest; the count must not change.
    for (k, e) in g.edges().iter().enumerate() {
        let mut ids: Vec<u32> = Vec::with_capacity(m);
        let mut next = 2;
        for j in 0..m {
            if j == k {
                ids.push(1);
            } else {
                ids.push(next);
                next += 1;
            }
        }
        let reordered = renumber(g, &ids).expect("same edge count");
        let count = orientations(&reordered)
            .filter(|(_, o)| is_bipolar_wrt(o, EdgeId(1)))
            .count();
        report.check(P_INDEPENDENCE, &name, count == beta, || {
            format!("edge {} as p gives {count} orientations, beta = {beta}", e.id)
        });
    }

    if let Some(table) = report.attempt(BIJECTION, &name, build_full_bijection(g, p)) {
        let images: BTreeSet<&SpanningTree> = table.iter().map(|(_, t)| t).collect();
        report.check(BIJECTION, &name, table.len() == beta && images.len() == beta, || {
            format!("table has {} entries and {} images, beta = {beta}", table.len(), images.len())
        });
        for o in &forward {
            let expected = alpha_bruteforce(o).ok();
            report.check(BIJECTION, &describe(o), table.lookup(g, o) == expected.as_ref(), || {
                format!("table gives {:?}, brute force {expected:?}", table.lookup(g, o))
            });
        }
    }

    for t in &uniactive {
        for d in [PDirection::Forward, PDirection::Reverse] {
            let back = invert_alpha(g, t, d).and_then(|o| alpha_bruteforce(&o));
            report.check(ROUND_TRIP, &name, back.as_ref().ok() == Some(t), || {
                format!("tree {t} ({d}) comes back as {back:?}")
            });
        }
    }
    forward
}

/// Checks on one bipolar orientation with `p = min(E)` forward.
pub fn check_instance(g: &OrderedDigraph, report: &mut VerificationReport) {
    use property::*;
    report.instances_checked += 1;
    let name = describe(g);
    let p = g.min_edge().expect("instances have edges");

    let Some(trees) = report.attempt(UNIQUENESS, &name, enumerate_spanning_trees(g)) else {
        return;
    };
    let passing: Vec<&SpanningTree> = trees.iter().filter(|t| criterion_holds(g, p, t)).collect();
    report.check(UNIQUENESS, &name, passing.len() == 1, || {
        format!("{} trees pass the criterion", passing.len())
    });
    let Some(alpha) = report.attempt(UNIQUENESS, &name, alpha_bruteforce(g)) else {
        return;
    };

    for t in &trees {
        let by_alt = satisfies_alt_characterization(g, p, t);
        let by_def = criterion_holds(g, p, t);
        report.check(CRITERION_EQUIVALENCE, &name, by_alt.as_ref().ok() == Some(&by_def), || {
            format!("tree {t}: criterion {by_def}, composition form {by_alt:?}")
        });
    }

    let cycle = alpha_delcon(g, Formulation::Cycle);
    let cocycle = alpha_delcon(g, Formulation::Cocycle);
    report.check(FORMULATION_EQUIVALENCE, &name, cycle.as_ref().ok() == cocycle.as_ref().ok() && cycle.is_ok(), || {
        format!("cycle {cycle:?}, cocycle {cocycle:?}")
    });
    let options = OptimizeOptions {
        trace: true,
        check_invariants: false,
    };
    let optimized = alpha_optimize(g, options);
    let optimized_tree = optimized.as_ref().ok().map(|o| &o.tree);
    report.check(
        METHOD_AGREEMENT,
        &name,
        cycle.as_ref().ok() == Some(&alpha)
            && cocycle.as_ref().ok() == Some(&alpha)
            && optimized_tree == Some(&alpha),
        || format!("brute {alpha}, cycle {cycle:?}, cocycle {cocycle:?}, optimize {optimized_tree:?}"),
    );

    let opposite = alpha_bruteforce(&g.opposite());
    report.check(OPPOSITE_INVARIANCE, &name, opposite.as_ref().ok() == Some(&alpha), || {
        format!("opposite gives {opposite:?}, expected {alpha}")
    });

    check_minors(g, p, &alpha, &name, report);

    // Greedy structure of the tree.
    let b: Vec<EdgeId> = alpha.edges().iter().copied().collect();
    let mut covered = BTreeSet::new();
    let mut greedy_ok = true;
    for &bi in &b {
        let expected = g.edge_ids().find(|e| !covered.contains(e));
        greedy_ok &= expected == Some(bi);
        covered.extend(fundamental_cocycle(g, &alpha, bi).map(|c| c.support()).unwrap_or_default());
    }
    report.check(GREEDY_MIN, &name, greedy_ok, || format!("tree {alpha} is not greedy"));

    let first = fundamental_cocycle(g, &alpha, p);
    let lexmin = lexmin_directed_cocycle(g, p);
    *report.checks.entry(LEXMIN_OBSERVATION).or_default() += 1;
    if first.as_ref().ok() != lexmin.as_ref().ok() {
        report
            .observation_counterexamples
            .push(format!("{name}: C*(α;p) = {first:?}, lexicographic minimum {lexmin:?}"));
    }

    if let Ok(run) = optimized {
        let r = g.vertex_count() - 1;
        report.check(MINOR_COUNT, &name, run.digraphs == r.saturating_sub(1), || {
            format!("{} optimizable digraphs for r = {r}", run.digraphs)
        });
        let steps = run.trace.map(|t| t.steps).unwrap_or_default();
        let mut previous = p;
        for step in &steps {
            let agree = check_weights_agree(&step.digraph, &step.candidates);
            report.check(COMPARATOR_WEIGHT, &name, agree.is_ok(), || format!("step {}: {agree:?}", step.i));
            match check_bond_minima(&step.digraph, step.i) {
                Ok(mismatches) => {
                    report.check(BOND_MINIMUM, &name, true, String::new);
                    report.lift_mismatches += mismatches.len() as u64;
                }
                Err(e) => report.check(BOND_MINIMUM, &name, false, || format!("step {}: {e}", step.i)),
            }
            let expected = fundamental_cocycle(g, &alpha, previous);
            let lifted = if step.digraph.graph().trace().is_some() {
                lift_cocycle(step.digraph.graph(), &step.c_opt)
            } else {
                Ok(step.c_opt.clone())
            };
            report.check(SCHOLIA, &name, lifted.as_ref().ok() == expected.as_ref().ok() && lifted.is_ok(), || {
                format!("step {}: Copt {} lifts to {lifted:?}, expected {expected:?}", step.i, step.c_opt)
            });
            previous = step.t;
        }
    }
}

/// Deletion/contraction structure at the largest edge.
fn check_minors(g: &OrderedDigraph, p: EdgeId, alpha: &SpanningTree, name: &str, report: &mut VerificationReport) {
    use property::*;
    let omega = g.max_edge().expect("instances have edges");
    if omega == p {
        return;
    }
    let deleted = g.delete([omega]).expect("own edge");
    let contracted = g.contract([omega]).expect("own edge");
    let (bd, bc) = (is_bipolar_wrt(&deleted, p), is_bipolar_wrt(&contracted, p));
    let flipped = g.reverse_edge(omega).expect("own edge");
    let bf = is_bipolar_wrt(&flipped, p);
    report.check(COROLLARY, name, bf == (bd && bc), || {
        format!("flipped bipolar {bf}, deletion {bd}, contraction {bc}")
    });
    let t_del = if bd { alpha_bruteforce(&deleted.detached()).ok() } else { None };
    let t_con = if bc { alpha_bruteforce(&contracted.detached()).ok() } else { None };
    if bf && bd && bc {
        let flipped_alpha = alpha_bruteforce(&flipped);
        let got: BTreeSet<Option<SpanningTree>> =
            BTreeSet::from([Some(alpha.clone()), flipped_alpha.ok()]);
        let want: BTreeSet<Option<SpanningTree>> = BTreeSet::from([
            t_del.clone(),
            t_con.as_ref().map(|t| t.with(omega)),
        ]);
        report.check(COROLLARY, name, got == want, || {
            format!("{{α(G), α(-G)}} = {got:?}, minors give {want:?}")
        });
    }
    let restriction_ok = if alpha.contains(omega) {
        t_con == Some(alpha.without(omega))
    } else {
        t_del.as_ref() == Some(alpha)
    };
    report.check(MINOR_RESTRICTION, name, restriction_ok, || {
        format!("α = {alpha}, deletion {t_del:?}, contraction {t_con:?}")
    });
}

/// Runs the whole suite over the configured corpus.
pub fn run_verification(config: &VerifyConfig) -> Result<VerificationReport> {
    let jobs: Vec<(OrderedDigraph, Option<OrderedDigraph>)> = match config.corpus {
        Corpus::Exhaustive => {
            let graphs = connected_multigraphs(config.max_vertices, config.max_edges)?;
            graphs
                .iter()
                .enumerate()
                .flat_map(|(k, g)| {
                    edge_orders(g, config.orderings, config.seed.wrapping_add(k as u64))
                        .into_iter()
                        .map(|h| (h, None))
                })
                .collect()
        }
        Corpus::Random => (0..config.count)
            .map(|k| random_instance(config, k as u64))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .map(|g| (g.clone(), Some(g)))
            .collect(),
    };
    let partials: Vec<VerificationReport> = jobs
        .par_iter()
        .map(|(g, only)| {
            let mut report = VerificationReport::default();
            let forward = check_graph(g, &mut report);
            match only {
                Some(instance) => {
                    report.check(property::GENERATOR, &describe(instance), forward.contains(instance), || {
                        "generated instance is not among the bipolar orientations".into()
                    });
                    check_instance(instance, &mut report);
                }
                None => forward.iter().for_each(|o| check_instance(o, &mut report)),
            }
            report
        })
        .collect();
    let mut report = VerificationReport::default();
    partials.into_iter().for_each(|r| report.merge(r));
    Ok(report)
}

/// The `k`-th random instance of a configuration; sizes vary with `k`.
pub fn random_instance(config: &VerifyConfig, k: u64) -> Result<OrderedDigraph> {
    let seed = config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_v = config.max_vertices.max(2);
    let n = rng.gen_range(2..=max_v);
    let low = if n == 2 { 1 } else { n };
    if config.max_edges < low {
        return Err(Error::Precondition(format!(
            "{} edges cannot make a bipolar digraph on {n} vertices",
            config.max_edges
        )));
    }
    let m = rng.gen_range(low..=config.max_edges);
    generate_random_bipolar(n, m, seed)
}
