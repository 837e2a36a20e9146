//! Edge-ordered directed multigraphs and their minors.
//!
//! Edges are identified by [`EdgeId`]; the numeric order of ids is the linear
//! order of the edge set. Every minor operation returns a new graph whose
//! surviving edges keep their id and direction, and which records a
//! [`MinorTrace`] back to the graph it was first derived from. Traces
//! accumulate, so a minor of a minor still points at the original graph.
//!
//! Vertices are opaque labels kept sorted, so vertex index 0 always holds the
//! smallest label. Contracting merges labels into a `+`-joined label built
//! from the sorted label tokens of the merged class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// Identifier of an edge; smaller id means smaller edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for EdgeId {
    fn from(id: u32) -> Self {
        EdgeId(id)
    }
}

/// Collects plain integers into a set of edge ids.
pub fn ids<I: IntoIterator<Item = u32>>(raw: I) -> BTreeSet<EdgeId> {
    raw.into_iter().map(EdgeId).collect()
}

/// A directed edge between two vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: usize) -> Option<usize> {
        if v == self.tail {
            Some(self.head)
        } else if v == self.head {
            Some(self.tail)
        } else {
            None
        }
    }
}

/// Provenance of a minor: which edges of `parent` were contracted or deleted.
#[derive(Clone, Debug)]
pub struct MinorTrace {
    contracted: BTreeSet<EdgeId>,
    deleted: BTreeSet<EdgeId>,
    parent: Arc<OrderedDigraph>,
}

impl MinorTrace {
    pub fn contracted(&self) -> &BTreeSet<EdgeId> {
        &self.contracted
    }

    pub fn deleted(&self) -> &BTreeSet<EdgeId> {
        &self.deleted
    }

    pub fn parent(&self) -> &OrderedDigraph {
        &self.parent
    }
}

/// A directed multigraph whose edges are linearly ordered by id.
///
/// Loops and parallel edges are allowed, and the underlying graph need not be
/// connected. Values are immutable; every operation returns a new graph.
#[derive(Clone, Debug)]
pub struct OrderedDigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    trace: Option<Arc<MinorTrace>>,
}

impl PartialEq for OrderedDigraph {
    /// Structural equality; the minor trace is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for OrderedDigraph {}

impl OrderedDigraph {
    /// Builds a graph from vertex labels and `(id, tail, head)` triples.
    pub fn build<V, A, B>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (u32, A, B)>,
    ) -> Result<Self>
    where
        V: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let lookup = |id: EdgeId, label: &str| {
            labels
                .binary_search_by(|l| l.as_str().cmp(label))
                .map_err(|_| Error::DanglingEndpoint {
                    edge: id,
                    vertex: label.to_string(),
                })
        };
        let mut out = Vec::new();
        for (raw, tail, head) in edges {
            let id = EdgeId(raw);
            out.push(Edge {
                id,
                tail: lookup(id, tail.as_ref())?,
                head: lookup(id, head.as_ref())?,
            });
        }
        Self::checked(labels, out)
    }

    /// Builds a graph from labels and edges given by positions in `labels`.
    /// Labels need not be sorted; indices are remapped accordingly.
    pub fn from_indexed(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (EdgeId, usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let mut out = Vec::new();
        for (id, tail, head) in edges {
            for v in [tail, head] {
                if v >= n {
                    return Err(Error::DanglingEndpoint {
                        edge: id,
                        vertex: format!("#{v}"),
                    });
                }
            }
            out.push(Edge {
                id,
                tail: position[tail],
                head: position[head],
            });
        }
        Self::checked(sorted, out)
    }

    fn checked(vertices: Vec<String>, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_by_key(|e| e.id);
        if edges.iter().any(|e| e.id.0 == 0) {
            return Err(Error::ZeroEdgeId);
        }
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateEdge(w[0].id));
        }
        Ok(OrderedDigraph {
            vertices,
            edges,
            trace: None,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edge_ids().collect()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.position(id).map(|i| &self.edges[i])
    }

    pub(crate) fn position(&self, id: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.position(id).is_some()
    }

    pub(crate) fn require(&self, id: EdgeId) -> Result<&Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn min_edge(&self) -> Option<EdgeId> {
        self.edges.first().map(|e| e.id)
    }

    pub fn max_edge(&self) -> Option<EdgeId> {
        self.edges.last().map(|e| e.id)
    }

    pub fn trace(&self) -> Option<&MinorTrace> {
        self.trace.as_deref()
    }

    /// The same graph with its minor trace dropped.
    pub fn detached(&self) -> Self {
        OrderedDigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            trace: None,
        }
    }

    fn resolve<I: IntoIterator<Item = EdgeId>>(&self, ids: I) -> Result<BTreeSet<EdgeId>> {
        let set: BTreeSet<EdgeId> = ids.into_iter().collect();
        match set.iter().find(|&&id| !self.contains_edge(id)) {
            Some(&id) => Err(Error::UnknownEdge(id)),
            None => Ok(set),
        }
    }

    fn derive(
        &self,
        vertices: Vec<String>,
        edges: Vec<Edge>,
        contracted: BTreeSet<EdgeId>,
        deleted: BTreeSet<EdgeId>,
    ) -> Self {
        let trace = match &self.trace {
            Some(t) => MinorTrace {
                contracted: t.contracted.union(&contracted).copied().collect(),
                deleted: t.deleted.union(&deleted).copied().collect(),
                parent: Arc::clone(&t.parent),
            },
            None => MinorTrace {
                contracted,
                deleted,
                parent: Arc::new(self.clone()),
            },
        };
        OrderedDigraph {
            vertices,
            edges,
            trace: Some(Arc::new(trace)),
        }
    }

    /// Removes the edges in `ids`; vertices are kept.
    pub fn delete<I: IntoIterator<Item = EdgeId>>(&self, ids: I) -> Result<Self> {
        let gone = self.resolve(ids)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| !gone.contains(&e.id))
            .copied()
            .collect();
        Ok(self.derive(self.vertices.clone(), edges, BTreeSet::new(), gone))
    }

    /// Keeps only the edges in `ids`.
    pub fn restrict<I: IntoIterator<Item = EdgeId>>(&self, ids: I) -> Result<Self> {
        let keep = self.resolve(ids)?;
        let gone: Vec<EdgeId> = self.edge_ids().filter(|id| !keep.contains(id)).collect();
        self.delete(gone)
    }

    /// Contracts the edges in `ids`. A contracted loop is simply removed.
    pub fn contract<I: IntoIterator<Item = EdgeId>>(&self, ids: I) -> Result<Self> {
        let merged = self.resolve(ids)?;
        let n = self.vertices.len();
        let mut uf = UnionFind::<usize>::new(n);
        for e in self.edges.iter().filter(|e| merged.contains(&e.id)) {
            uf.union(e.tail, e.head);
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            classes.entry(uf.find(v)).or_default().push(v);
        }
        let mut class_of = vec![0; n];
        let mut labels = Vec::with_capacity(classes.len());
        for (k, members) in classes.values().enumerate() {
            for &v in members {
                class_of[v] = k;
            }
            labels.push(merged_label(members.iter().map(|&v| self.vertices[v].as_str())));
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let vertices: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::LabelCollision(w[0].clone()));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !merged.contains(&e.id))
            .map(|e| Edge {
                id: e.id,
                tail: position[class_of[e.tail]],
                head: position[class_of[e.head]],
            })
            .collect();
        Ok(self.derive(vertices, edges, merged, BTreeSet::new()))
    }

    /// Reverses the direction of edge `id`.
    pub fn reverse_edge(&self, id: EdgeId) -> Result<Self> {
        self.reverse_edges([id])
    }

    /// Reverses every edge in `ids`. A trace, if present, is rewritten so the
    /// parent carries the same reversals.
    pub fn reverse_edges<I: IntoIterator<Item = EdgeId>>(&self, ids: I) -> Result<Self> {
        let flip = self.resolve(ids)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if flip.contains(&e.id) {
                    Edge {
                        id: e.id,
                        tail: e.head,
                        head: e.tail,
                    }
                } else {
                    *e
                }
            })
            .collect();
        let trace = match &self.trace {
            Some(t) => Some(Arc::new(MinorTrace {
                contracted: t.contracted.clone(),
                deleted: t.deleted.clone(),
                parent: Arc::new(t.parent.reverse_edges(flip.iter().copied())?),
            })),
            None => None,
        };
        Ok(OrderedDigraph {
            vertices: self.vertices.clone(),
            edges,
            trace,
        })
    }

    /// The opposite digraph: every edge reversed.
    pub fn opposite(&self) -> Self {
        self.reverse_edges(self.edge_set())
            .expect("own edges are always known")
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        self.components_without(&BTreeSet::new()).1
    }

    /// Component index of every vertex once `excluded` edges are ignored,
    /// together with the number of components.
    pub(crate) fn components_without(&self, excluded: &BTreeSet<EdgeId>) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let mut uf = UnionFind::<usize>::new(n);
        for e in self.edges.iter().filter(|e| !excluded.contains(&e.id)) {
            uf.union(e.tail, e.head);
        }
        let mut index = BTreeMap::new();
        let labels = (0..n)
            .map(|v| {
                let next = index.len();
                *index.entry(uf.find(v)).or_insert(next)
            })
            .collect();
        (labels, index.len())
    }
}

pub(crate) fn merged_label<'a>(members: impl Iterator<Item = &'a str>) -> String {
    let members: Vec<&str> = members.collect();
    if let [single] = members.as_slice() {
        return single.to_string();
    }
    let tokens: BTreeSet<&str> = members.iter().flat_map(|l| l.split('+')).collect();
    tokens.into_iter().collect::<Vec<_>>().join("+")
}

impl fmt::Display for OrderedDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::write_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> OrderedDigraph {
        OrderedDigraph::build(["u", "v", "w"], [(1, "u", "w"), (2, "u", "v"), (3, "v", "w")]).unwrap()
    }

    fn p2() -> OrderedDigraph {
        OrderedDigraph::build(["u", "v"], [(1, "u", "v"), (2, "u", "v")]).unwrap()
    }

    fn endpoints(g: &OrderedDigraph, id: u32) -> (&str, &str) {
        let e = g.edge(EdgeId(id)).unwrap();
        (g.vertex_label(e.tail), g.vertex_label(e.head))
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            OrderedDigraph::build(["u", "v"], [(1, "u", "v"), (1, "v", "u")]),
            Err(Error::DuplicateEdge(EdgeId(1)))
        ));
        assert!(matches!(
            OrderedDigraph::build(["u"], [(1, "u", "x")]),
            Err(Error::DanglingEndpoint { .. })
        ));
        assert!(matches!(
            OrderedDigraph::build(["u", "u"], Vec::<(u32, &str, &str)>::new()),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn loops_and_parallel_edges_are_accepted() {
        let g = OrderedDigraph::build(["u"], [(1, "u", "u")]).unwrap();
        assert!(g.edges()[0].is_loop());
        assert_eq!(p2().edge_count(), 2);
    }

    #[test]
    fn edges_are_sorted_by_id() {
        let g = OrderedDigraph::build(["a", "b"], [(5, "a", "b"), (2, "b", "a")]).unwrap();
        assert_eq!(g.edge_ids().collect::<Vec<_>>(), vec![EdgeId(2), EdgeId(5)]);
    }

    #[test]
    fn delete_keeps_vertices() {
        let g = t3().delete(ids([3])).unwrap();
        assert_eq!(g.edge_set(), ids([1, 2]));
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.trace().unwrap().deleted(), &ids([3]));
        assert_eq!(t3().delete([]).unwrap(), t3());
        assert!(matches!(t3().delete(ids([9])), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn contract_triangle_edge_gives_parallel_pair() {
        let g = t3().contract(ids([3])).unwrap();
        assert_eq!(g.vertices(), ["u", "v+w"]);
        assert_eq!(endpoints(&g, 1), ("u", "v+w"));
        assert_eq!(endpoints(&g, 2), ("u", "v+w"));
    }

    #[test]
    fn contract_parallel_edge_leaves_loop() {
        let g = p2().contract(ids([2])).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edge(EdgeId(1)).unwrap().is_loop());
    }

    #[test]
    fn contracting_a_loop_deletes_it() {
        let g = p2().contract(ids([2])).unwrap().contract(ids([1])).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn traces_accumulate_to_the_root() {
        let g = t3().contract(ids([3])).unwrap().delete(ids([2])).unwrap();
        let trace = g.trace().unwrap();
        assert_eq!(trace.contracted(), &ids([3]));
        assert_eq!(trace.deleted(), &ids([2]));
        assert_eq!(trace.parent(), &t3());
    }

    #[test]
    fn restrict_is_delete_of_complement() {
        assert_eq!(t3().restrict(ids([1, 2, 3])).unwrap(), t3());
        let g = t3().restrict(ids([1])).unwrap();
        assert_eq!(g, t3().delete(ids([2, 3])).unwrap());
        assert!(!g.is_connected());
    }

    #[test]
    fn reverse_is_an_involution() {
        let g = t3();
        let r = g.reverse_edge(EdgeId(1)).unwrap();
        assert_eq!(endpoints(&r, 1), ("w", "u"));
        assert_eq!(r.reverse_edge(EdgeId(1)).unwrap(), g);
    }

    #[test]
    fn reversing_a_minor_rewrites_its_parent() {
        let m = t3().delete(ids([3])).unwrap().reverse_edge(EdgeId(1)).unwrap();
        let parent = m.trace().unwrap().parent();
        let e = parent.edge(EdgeId(1)).unwrap();
        assert_eq!(parent.vertex_label(e.tail), "w");
    }

    #[test]
    fn connectivity() {
        assert!(t3().is_connected());
        let single = OrderedDigraph::build(["x"], Vec::<(u32, &str, &str)>::new()).unwrap();
        assert!(single.is_connected());
    }
}
