//! Small graphs shipped with the crate, parsed from `fixtures/`.

use crate::graph::OrderedDigraph;
use crate::io::parse_graph;

pub const G_STAR: &str = include_str!("../fixtures/g_star.graph");
pub const T3: &str = include_str!("../fixtures/t3.graph");
pub const P2: &str = include_str!("../fixtures/p2.graph");

/// Five vertices, eight edges; `α = {1,4,5,7}`.
pub fn g_star() -> OrderedDigraph {
    parse_graph(G_STAR).expect("bundled fixture parses")
}

/// The bipolar triangle `1: u→w, 2: u→v, 3: v→w`.
pub fn t3() -> OrderedDigraph {
    parse_graph(T3).expect("bundled fixture parses")
}

/// Two parallel edges `u→v`.
pub fn p2() -> OrderedDigraph {
    parse_graph(P2).expect("bundled fixture parses")
}
