//! Work counters of the recursive algorithms on a fixed family of graphs.
//!
//! The family holds, for each edge count from 4 to 9, a bipolar digraph on
//! which [`alpha_delcon`](crate::delcon::alpha_delcon) makes the most
//! recursive calls among all connected multigraphs of at most six vertices
//! (parallel multiplicity at most 2) under many edge orders. It is the
//! steepest growth the single-image recursion shows at this size.

use crate::delcon::{alpha_delcon_counted, build_full_bijection_counted, Formulation};
use crate::error::Result;
use crate::graph::{EdgeId, OrderedDigraph};
use crate::optimizer::{alpha_optimize, OptimizeOptions};

/// `(vertices, [(tail, head)])`, edges numbered from 1 in list order.
const FAMILY: [(usize, &[(usize, usize)]); 6] = [
    (3, &[(0, 1), (0, 1), (0, 2), (2, 1)]),
    (3, &[(0, 1), (0, 1), (0, 2), (0, 2), (2, 1)]),
    (4, &[(0, 1), (0, 2), (0, 3), (2, 1), (3, 1), (2, 3)]),
    (4, &[(0, 1), (0, 1), (0, 2), (0, 3), (2, 1), (3, 1), (2, 3)]),
    (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 1), (3, 1), (4, 2), (3, 4)]),
    (6, &[(0, 1), (0, 2), (0, 3), (4, 1), (5, 1), (2, 4), (2, 5), (3, 4), (3, 5)]),
];

/// The worst-case family, with 4, 5, …, 9 edges.
pub fn growth_family() -> Vec<OrderedDigraph> {
    FAMILY
        .iter()
        .map(|&(n, edges)| {
            OrderedDigraph::from_indexed(
                (0..n).map(|v| format!("v{v}")).collect(),
                edges.iter().enumerate().map(|(i, &(a, b))| (EdgeId(i as u32 + 1), a, b)),
            )
            .expect("family graphs are well formed")
        })
        .collect()
}

/// Counters for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthPoint {
    pub edges: usize,
    pub vertices: usize,
    pub delcon_visits: u64,
    pub bijection_orientations: u64,
    pub bijection_minors: u64,
    pub optimizer_digraphs: usize,
}

pub fn measure(g: &OrderedDigraph) -> Result<GrowthPoint> {
    let p = g.min_edge().ok_or(crate::error::Error::EmptyGraph)?;
    let (_, delcon) = alpha_delcon_counted(g, Formulation::Cycle)?;
    let (_, bijection) = build_full_bijection_counted(g, p)?;
    let run = alpha_optimize(g, OptimizeOptions::default())?;
    Ok(GrowthPoint {
        edges: g.edge_count(),
        vertices: g.vertex_count(),
        delcon_visits: delcon.visits,
        bijection_orientations: bijection.orientations_processed,
        bijection_minors: bijection.minors_built,
        optimizer_digraphs: run.digraphs,
    })
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Slopes of the two counters against `2^n` and `n·2^n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthFit {
    pub delcon_slope: f64,
    pub bijection_slope: f64,
}

pub fn fit(points: &[GrowthPoint]) -> GrowthFit {
    let pow = |n: usize| 2f64.powi(n as i32);
    let delcon: Vec<(f64, f64)> = points.iter().map(|p| (pow(p.edges), p.delcon_visits as f64)).collect();
    let bijection: Vec<(f64, f64)> = points
        .iter()
        .map(|p| (p.edges as f64 * pow(p.edges), p.bijection_orientations as f64))
        .collect();
    GrowthFit {
        delcon_slope: log_slope(&delcon),
        bijection_slope: log_slope(&bijection),
    }
}
