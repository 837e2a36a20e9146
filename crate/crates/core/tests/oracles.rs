//! Library results against oracles written here from scratch: the
//! matrix-tree theorem, the Tutte polynomial by its own recursion, minimal
//! cuts by subset search and the sign criterion on hand-rolled fundamental
//! sets.

use std::collections::BTreeSet;

use fully_optimal::cycles::{enumerate_cocycles, enumerate_spanning_trees};
use fully_optimal::delcon::Orientation;
use fully_optimal::fixtures::{g_star, p2, t3};
use fully_optimal::harness::{connected_multigraphs, edge_orders, generate_random_bipolar};
use fully_optimal::orientation::{alpha_bruteforce, beta_invariant, is_bipolar_wrt, uniactive_internal_trees};
use fully_optimal::{EdgeId, OrderedDigraph};

fn corpus() -> Vec<OrderedDigraph> {
    let mut out = connected_multigraphs(4, 6).unwrap();
    out.extend((0..40).map(|s| generate_random_bipolar(3 + (s % 4) as usize, 6 + (s % 3) as usize, s).unwrap()));
    out.push(g_star());
    out
}

fn pairs(g: &OrderedDigraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.tail, e.head)).collect()
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    parent[v] = r;
    r
}

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut count = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// Number of spanning trees as a cofactor of the Laplacian (Bareiss).
fn matrix_tree(n: usize, edges: &[(usize, usize)]) -> i128 {
    if n == 1 {
        return 1;
    }
    let mut l = vec![vec![0i128; n]; n];
    for &(a, b) in edges {
        if a != b {
            l[a][a] += 1;
            l[b][b] += 1;
            l[a][b] -= 1;
            l[b][a] -= 1;
        }
    }
    let mut m: Vec<Vec<i128>> = l[1..].iter().map(|r| r[1..].to_vec()).collect();
    let k = n - 1;
    let mut sign = 1;
    let mut prev = 1i128;
    for i in 0..k {
        if m[i][i] == 0 {
            match (i + 1..k).find(|&r| m[r][i] != 0) {
                Some(r) => {
                    m.swap(i, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
            }
        }
        prev = m[i][i];
    }
    sign * m[k - 1][k - 1]
}

/// Tutte polynomial coefficients `t[i][j]` of `x^i y^j`.
fn tutte(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let size = edges.len() + 1;
    let mut out = vec![vec![0i64; size]; size];
    tutte_into(n, edges.to_vec(), &mut out, 0, 0);
    out
}

fn tutte_into(n: usize, mut edges: Vec<(usize, usize)>, out: &mut Vec<Vec<i64>>, xs: usize, ys: usize) {
    let Some((a, b)) = edges.pop() else {
        out[xs][ys] += 1;
        return;
    };
    if a == b {
        return tutte_into(n, edges, out, xs, ys + 1);
    }
    let bridge = components(n, &edges) > components(n, &[edges.clone(), vec![(a, b)]].concat());
    let merged: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| (if u == b { a } else { u }, if v == b { a } else { v }))
        .collect();
    if bridge {
        tutte_into(n, merged, out, xs + 1, ys);
    } else {
        tutte_into(n, edges, out, xs, ys);
        tutte_into(n, merged, out, xs, ys);
    }
}

#[test]
fn spanning_tree_count_matches_matrix_tree() {
    for g in corpus() {
        let trees = enumerate_spanning_trees(&g).unwrap();
        assert_eq!(trees.len() as i128, matrix_tree(g.vertex_count(), &pairs(&g)));
        let n = g.vertex_count();
        for t in &trees {
            let e: Vec<(usize, usize)> = g.edges().iter().filter(|e| t.contains(e.id)).map(|e| (e.tail, e.head)).collect();
            assert_eq!(e.len(), n - 1);
            assert_eq!(components(n, &e), 1);
        }
    }
}

#[test]
fn beta_matches_tutte_coefficient_and_orientation_count() {
    for g in corpus() {
        let t = tutte(g.vertex_count(), &pairs(&g));
        // T(1,1) counts spanning trees.
        let total: i64 = t.iter().flatten().sum();
        assert_eq!(total as usize, enumerate_spanning_trees(&g).unwrap().len());
        let beta = if g.edge_count() == 1 { 1 } else { t[1][0] as u64 };
        assert_eq!(beta_invariant(&g).unwrap(), beta);
        assert_eq!(uniactive_internal_trees(&g).unwrap().len() as u64, beta);
        let m = g.edge_count();
        let bipolar_forward = (0..1u64 << (m - 1))
            .filter(|h| is_bipolar_wrt(&Orientation::new(h << 1, m).apply(&g).unwrap(), g.min_edge().unwrap()))
            .count() as u64;
        assert_eq!(bipolar_forward, beta);
    }
}

#[test]
fn bonds_are_the_minimal_disconnecting_sets() {
    for g in corpus().into_iter().filter(|g| g.edge_count() <= 9) {
        let n = g.vertex_count();
        let e = pairs(&g);
        let m = e.len();
        let disconnects = |mask: u32| {
            let kept: Vec<(usize, usize)> = (0..m).filter(|i| mask >> i & 1 == 0).map(|i| e[i]).collect();
            components(n, &kept) > 1
        };
        let mut minimal = BTreeSet::new();
        for mask in 1u32..1 << m {
            if disconnects(mask) && (0..m).filter(|i| mask >> i & 1 == 1).all(|i| !disconnects(mask & !(1 << i))) {
                let ids: BTreeSet<EdgeId> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edges()[i].id).collect();
                minimal.insert(ids);
            }
        }
        let bonds: BTreeSet<BTreeSet<EdgeId>> =
            enumerate_cocycles(&g).unwrap().into_iter().map(|b| b.signed.support()).collect();
        assert_eq!(bonds, minimal);
    }
}

/// Signs along the tree path from `from` to `to`, relative to travelling it.
fn tree_path(n: usize, tree: &[(EdgeId, usize, usize)], from: usize, to: usize) -> Vec<(EdgeId, bool)> {
    let mut prev: Vec<Option<(usize, EdgeId, bool)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &(id, a, b) in tree {
            for (x, y, forward) in [(a, b, true), (b, a, false)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((v, id, forward));
                    queue.push_back(y);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut v = to;
    while v != from {
        let (u, id, forward) = prev[v].expect("tree spans");
        out.push((id, forward));
        v = u;
    }
    out
}

/// The sign criterion, on fundamental sets built here.
fn fully_optimal(g: &OrderedDigraph, tree: &BTreeSet<EdgeId>) -> bool {
    let n = g.vertex_count();
    let p = g.min_edge().unwrap();
    let t: Vec<(EdgeId, usize, usize)> =
        g.edges().iter().filter(|e| tree.contains(&e.id)).map(|e| (e.id, e.tail, e.head)).collect();
    for e in g.edges() {
        if tree.contains(&e.id) {
            if e.id == p {
                continue;
            }
            // Cocycle: edges crossing the cut left by removing e, signed as e.
            let rest: Vec<(usize, usize)> = t.iter().filter(|x| x.0 != e.id).map(|x| (x.1, x.2)).collect();
            let mut parent: Vec<usize> = (0..n).collect();
            for &(a, b) in &rest {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
            let tail_side = find(&mut parent, e.tail);
            let smallest = g
                .edges()
                .iter()
                .find(|f| (find(&mut parent, f.tail) == tail_side) != (find(&mut parent, f.head) == tail_side))
                .unwrap();
            let same = find(&mut parent, smallest.tail) == tail_side;
            if same {
                return false;
            }
        } else {
            // Cycle: e then the tree path from its head back to its tail.
            let path = tree_path(n, &t, e.head, e.tail);
            let mut members: Vec<(EdgeId, bool)> = path;
            members.push((e.id, true));
            let (_, forward) = *members.iter().min_by_key(|m| m.0).unwrap();
            if forward {
                return false;
            }
        }
    }
    true
}

#[test]
fn criterion_oracle_picks_exactly_the_brute_force_tree() {
    let mut graphs = vec![t3(), p2(), g_star()];
    for g in connected_multigraphs(4, 6).unwrap() {
        graphs.extend(edge_orders(&g, 6, 9));
    }
    let mut instances = 0;
    for g in graphs {
        let m = g.edge_count();
        for h in 0..1u64 << (m - 1) {
            let o = Orientation::new(h << 1, m).apply(&g).unwrap();
            if !is_bipolar_wrt(&o, o.min_edge().unwrap()) {
                continue;
            }
            instances += 1;
            let passing: Vec<BTreeSet<EdgeId>> = enumerate_spanning_trees(&o)
                .unwrap()
                .into_iter()
                .map(|t| t.edges().clone())
                .filter(|t| fully_optimal(&o, t))
                .collect();
            assert_eq!(passing.len(), 1);
            assert_eq!(&passing[0], alpha_bruteforce(&o).unwrap().edges());
        }
    }
    assert!(instances > 50);
}
