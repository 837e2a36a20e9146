//! Cycles, cocycles (bonds) and spanning trees of ordered digraphs.
//!
//! A bond is the set of edges crossing a vertex bipartition whose two shores
//! are both connected. Its canonical signed form makes the edges leaving the
//! shore that holds vertex 0 (the smallest label) positive.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, OrderedDigraph};
use crate::signed::{Sign, SignedEdgeSet};

/// Bond enumeration walks all vertex subsets; refuse anything larger.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// A spanning tree given by its edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    edges: BTreeSet<EdgeId>,
}

impl SpanningTree {
    pub fn new(edges: BTreeSet<EdgeId>) -> Self {
        SpanningTree { edges }
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        SpanningTree::new(ids.iter().copied().map(EdgeId).collect())
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn with(&self, e: EdgeId) -> Self {
        let mut edges = self.edges.clone();
        edges.insert(e);
        SpanningTree { edges }
    }

    pub fn without(&self, e: EdgeId) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(&e);
        SpanningTree { edges }
    }
}

impl fmt::Display for SpanningTree {
    /// Ascending ids separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::format_ids(&self.edges))
    }
}

/// Checks that `tree` is a spanning tree of `g`.
pub fn check_spanning_tree(g: &OrderedDigraph, tree: &SpanningTree) -> Result<()> {
    let n = g.vertex_count();
    if tree.len() + 1 != n {
        return Err(Error::InvalidTree(format!(
            "{} edges for {} vertices",
            tree.len(),
            n
        )));
    }
    let mut uf = UnionFind::<usize>::new(n);
    for &id in tree.edges() {
        let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
        if !uf.union(e.tail, e.head) {
            return Err(Error::InvalidTree(format!("edge {id} closes a cycle")));
        }
    }
    Ok(())
}

/// A cocycle together with one of its shores.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bond {
    /// Vertex indices of the shore; positive edges leave it.
    pub side: BTreeSet<usize>,
    pub signed: SignedEdgeSet,
}

impl Bond {
    /// The cut around `side` with edges leaving `side` positive.
    pub fn around(g: &OrderedDigraph, side: &BTreeSet<usize>) -> Self {
        let inside = membership(g.vertex_count(), side.iter().copied());
        let (positive, negative) = cut_parts(g, &inside);
        Bond {
            side: side.clone(),
            signed: SignedEdgeSet::from_parts_unchecked(positive, negative),
        }
    }

    /// The same cocycle with the opposite sign, i.e. the other shore.
    pub fn negated(&self, g: &OrderedDigraph) -> Self {
        Bond {
            side: (0..g.vertex_count()).filter(|v| !self.side.contains(v)).collect(),
            signed: self.signed.negated(),
        }
    }

    pub fn side_labels<'g>(&self, g: &'g OrderedDigraph) -> Vec<&'g str> {
        self.side.iter().map(|&v| g.vertex_label(v)).collect()
    }

    /// Orients the bond so `e` is positive.
    pub fn oriented_by(&self, g: &OrderedDigraph, e: EdgeId) -> Option<Self> {
        match self.signed.sign(e)? {
            Sign::Positive => Some(self.clone()),
            Sign::Negative => Some(self.negated(g)),
        }
    }
}

fn membership(n: usize, members: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut inside = vec![false; n];
    for v in members {
        inside[v] = true;
    }
    inside
}

fn cut_parts(g: &OrderedDigraph, inside: &[bool]) -> (BTreeSet<EdgeId>, BTreeSet<EdgeId>) {
    let mut positive = BTreeSet::new();
    let mut negative = BTreeSet::new();
    for e in g.edges() {
        match (inside[e.tail], inside[e.head]) {
            (true, false) => {
                positive.insert(e.id);
            }
            (false, true) => {
                negative.insert(e.id);
            }
            _ => {}
        }
    }
    (positive, negative)
}

fn adjacency(g: &OrderedDigraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        adj[e.tail].push(e.head);
        adj[e.head].push(e.tail);
    }
    adj
}

/// Whether the vertices flagged in `mask` induce a nonempty connected subgraph.
fn induced_connected(adj: &[Vec<usize>], mask: u64) -> bool {
    let Some(start) = (0..adj.len()).find(|&v| mask >> v & 1 == 1) else {
        return false;
    };
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

fn require_connected(g: &OrderedDigraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// All bonds of a connected graph, one per bipartition, each with the shore
/// holding vertex 0 as `side`. Ordered by the bitmask of that shore.
pub fn enumerate_cocycles(g: &OrderedDigraph) -> Result<Vec<Bond>> {
    require_connected(g)?;
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices for bond enumeration")));
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let adj = adjacency(g);
    let full = (1u64 << n) - 1;
    let mut bonds = Vec::new();
    // Vertex 0 is always on the side; iterate over the remaining n-1 bits.
    for rest in 0..(1u64 << (n - 1)) {
        let mask = 1 | (rest << 1);
        if mask == full {
            continue;
        }
        if induced_connected(&adj, mask) && induced_connected(&adj, full & !mask) {
            let side: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            bonds.push(Bond::around(g, &side));
        }
    }
    Ok(bonds)
}

/// Directed cocycles containing `p`, signed so that they are all positive.
pub fn directed_cocycles_through(g: &OrderedDigraph, p: EdgeId) -> Result<Vec<SignedEdgeSet>> {
    g.require(p)?;
    Ok(enumerate_cocycles(g)?
        .into_iter()
        .filter_map(|b| b.signed.oriented_by(p))
        .filter(|s| s.is_positive())
        .collect())
}

/// Whether `support` is a cocycle (inclusion-minimal cut) of `g`; `g` may be
/// disconnected.
pub fn is_bond(g: &OrderedDigraph, support: &BTreeSet<EdgeId>) -> bool {
    if support.is_empty() || support.iter().any(|&id| !g.contains_edge(id)) {
        return false;
    }
    let before = g.component_count();
    let (label, after) = g.components_without(support);
    after == before + 1
        && support.iter().all(|&id| {
            let e = g.edge(id).expect("checked above");
            label[e.tail] != label[e.head]
        })
}

/// The fundamental cocycle of tree edge `t`, signed with `t` positive.
pub fn fundamental_cocycle(g: &OrderedDigraph, tree: &SpanningTree, t: EdgeId) -> Result<SignedEdgeSet> {
    check_spanning_tree(g, tree)?;
    if !tree.contains(t) {
        return Err(Error::NotInTree(t));
    }
    Ok(fundamental_cocycle_unchecked(g, tree, t))
}

pub(crate) fn fundamental_cocycle_unchecked(g: &OrderedDigraph, tree: &SpanningTree, t: EdgeId) -> SignedEdgeSet {
    let mut uf = UnionFind::<usize>::new(g.vertex_count());
    for &id in tree.edges().iter().filter(|&&id| id != t) {
        let e = g.edge(id).expect("tree edges belong to the graph");
        uf.union(e.tail, e.head);
    }
    let te = g.edge(t).expect("tree edges belong to the graph");
    let root = uf.find(te.tail);
    let inside: Vec<bool> = (0..g.vertex_count()).map(|v| uf.find(v) == root).collect();
    let (positive, negative) = cut_parts(g, &inside);
    SignedEdgeSet::from_parts_unchecked(positive, negative)
}

/// The fundamental cycle of non-tree edge `e`, signed with `e` positive.
pub fn fundamental_cycle(g: &OrderedDigraph, tree: &SpanningTree, e: EdgeId) -> Result<SignedEdgeSet> {
    check_spanning_tree(g, tree)?;
    if tree.contains(e) {
        return Err(Error::InTree(e));
    }
    g.require(e)?;
    Ok(fundamental_cycle_unchecked(g, tree, e))
}

pub(crate) fn fundamental_cycle_unchecked(g: &OrderedDigraph, tree: &SpanningTree, e: EdgeId) -> SignedEdgeSet {
    let edge = *g.edge(e).expect("edge belongs to the graph");
    let mut positive = BTreeSet::from([e]);
    let mut negative = BTreeSet::new();
    if edge.is_loop() {
        return SignedEdgeSet::from_parts_unchecked(positive, negative);
    }
    // Walk the tree from head(e) back to tail(e).
    let mut incident: Vec<Vec<Edge>> = vec![Vec::new(); g.vertex_count()];
    for &id in tree.edges() {
        let t = *g.edge(id).expect("tree edges belong to the graph");
        incident[t.tail].push(t);
        incident[t.head].push(t);
    }
    let mut via: Vec<Option<Edge>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([edge.head]);
    seen[edge.head] = true;
    while let Some(v) = queue.pop_front() {
        if v == edge.tail {
            break;
        }
        for t in &incident[v] {
            let w = t.other(v).expect("incident edge");
            if !seen[w] {
                seen[w] = true;
                via[w] = Some(*t);
                queue.push_back(w);
            }
        }
    }
    // Reconstruct tail(e) -> ... -> head(e) backwards; the traversal runs from
    // head(e) towards tail(e), so an edge is positive if it points that way.
    let mut v = edge.tail;
    while v != edge.head {
        let t = via[v].expect("tree spans the graph");
        let prev = t.other(v).expect("incident edge");
        if t.tail == prev && t.head == v {
            positive.insert(t.id);
        } else {
            negative.insert(t.id);
        }
        v = prev;
    }
    SignedEdgeSet::from_parts_unchecked(positive, negative)
}

/// Every spanning tree of a connected graph, in lexicographic order of the
/// ascending id sequences.
pub fn enumerate_spanning_trees(g: &OrderedDigraph) -> Result<Vec<SpanningTree>> {
    require_connected(g)?;
    let candidates: Vec<Edge> = g.edges().iter().filter(|e| !e.is_loop()).copied().collect();
    let need = g.vertex_count().saturating_sub(1);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    let parent: Vec<usize> = (0..g.vertex_count()).collect();
    grow_trees(&candidates, 0, need, &parent, &mut chosen, &mut out);
    Ok(out)
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

fn grow_trees(
    candidates: &[Edge],
    from: usize,
    need: usize,
    parent: &[usize],
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<SpanningTree>,
) {
    if chosen.len() == need {
        out.push(SpanningTree::new(chosen.iter().copied().collect()));
        return;
    }
    let missing = need - chosen.len();
    for i in from..candidates.len() {
        if candidates.len() - i < missing {
            break;
        }
        let e = candidates[i];
        let (a, b) = (find(parent, e.tail), find(parent, e.head));
        if a == b {
            continue;
        }
        let mut next = parent.to_vec();
        next[a] = b;
        chosen.push(e.id);
        grow_trees(candidates, i + 1, need, &next, chosen, out);
        chosen.pop();
    }
}

/// Greedy spanning tree by increasing id; the lexicographically smallest one.
pub fn lex_min_spanning_tree(g: &OrderedDigraph) -> Result<SpanningTree> {
    require_connected(g)?;
    let mut uf = UnionFind::<usize>::new(g.vertex_count());
    let edges = g
        .edges()
        .iter()
        .filter(|e| uf.union(e.tail, e.head))
        .map(|e| e.id)
        .collect();
    Ok(SpanningTree::new(edges))
}

/// Elimination of two signed cocycles preserving `f`.
///
/// Returns a cocycle `D` holding `f` with `D+ ⊆ C+ ∪ C'+`, `D- ⊆ C- ∪ C'-`
/// and no element that has opposite signs in `C` and `C'`. With
/// `x = [v ∈ C.side] + [v ∈ C'.side]`, the signed sum of the two cuts splits
/// into the cuts around `{x ≥ 1}` and `{x = 2}`; these are the two cuts
/// bounding `V' = (C1 ∩ C'2) ∪ (C2 ∩ C'1)`. `D` is the bond through `f`
/// inside whichever of them carries `f`.
pub fn eliminate_preserving(
    g: &OrderedDigraph,
    c: &Bond,
    c_prime: &Bond,
    f: EdgeId,
) -> Result<SignedEdgeSet> {
    require_connected(g)?;
    let edge = *g.require(f)?;
    match (c.signed.sign(f), c_prime.signed.sign(f)) {
        (None, None) => {
            return Err(Error::Precondition(format!("edge {f} is in neither cocycle")));
        }
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Precondition(format!(
                "edge {f} has opposite signs in the two cocycles"
            )));
        }
        _ => {}
    }
    let n = g.vertex_count();
    let level: Vec<u8> = (0..n)
        .map(|v| u8::from(c.side.contains(&v)) + u8::from(c_prime.side.contains(&v)))
        .collect();
    let threshold = level[edge.tail].max(level[edge.head]);
    let upper: Vec<bool> = level.iter().map(|&x| x >= threshold).collect();
    let (near, far) = if upper[edge.tail] {
        (edge.tail, edge.head)
    } else {
        (edge.head, edge.tail)
    };
    // Component of the upper level set holding f, then the component of the
    // rest of the graph holding f's other end.
    let adj = adjacency(g);
    let block = reach(&adj, near, |v| upper[v]);
    let shore = reach(&adj, far, |v| !block[v]);
    let inside: Vec<bool> = shore.iter().map(|&x| !x).collect();
    let (positive, negative) = cut_parts(g, &inside);
    Ok(SignedEdgeSet::from_parts_unchecked(positive, negative))
}

fn reach(adj: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] && allowed(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Lifts a signed cocycle of a minor to the unique cocycle of the root graph
/// that avoids the contracted edges and restricts to it once the deleted
/// edges are removed.
pub fn lift_cocycle(minor: &OrderedDigraph, cocycle: &SignedEdgeSet) -> Result<SignedEdgeSet> {
    let trace = minor.trace().ok_or(Error::NoTrace)?;
    require_connected(minor)?;
    let support = cocycle.support();
    if !is_bond(minor, &support) {
        return Err(Error::NotACocycle(cocycle.to_string()));
    }
    let (label, _) = minor.components_without(&support);
    let first = minor.edge(*support.first().expect("bonds are nonempty")).expect("checked");
    let side = match cocycle.sign(first.id) {
        Some(Sign::Positive) => label[first.tail],
        _ => label[first.head],
    };
    for &id in &support {
        let e = minor.edge(id).expect("checked");
        let expected = if label[e.tail] == side {
            Sign::Positive
        } else {
            Sign::Negative
        };
        if cocycle.sign(id) != Some(expected) {
            return Err(Error::NotACocycle(format!(
                "{cocycle}: signs disagree with the cut"
            )));
        }
    }

    let parent = trace.parent();
    let n = parent.vertex_count();
    let mut uf = UnionFind::<usize>::new(n);
    for id in trace.contracted() {
        let e = parent.edge(*id).expect("trace edges belong to the parent");
        uf.union(e.tail, e.head);
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        classes.entry(uf.find(v)).or_default().push(v);
    }
    let mut inside = vec![false; n];
    for members in classes.values() {
        let merged = crate::graph::merged_label(members.iter().map(|&v| parent.vertex_label(v)));
        let image = minor.vertex_index(&merged).ok_or_else(|| {
            Error::Alarm(format!("minor has no vertex `{merged}` for its trace"))
        })?;
        for &v in members {
            inside[v] = label[image] == side;
        }
    }
    let (positive, negative) = cut_parts(parent, &inside);
    let lifted = SignedEdgeSet::from_parts_unchecked(positive, negative);
    if lifted.support().iter().any(|id| trace.contracted().contains(id))
        || &lifted.without(trace.deleted()) != cocycle
    {
        return Err(Error::Alarm(format!("lift of {cocycle} is inconsistent")));
    }
    Ok(lifted)
}
