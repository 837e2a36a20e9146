//! Fully optimal spanning trees of edge-ordered bipolar digraphs.
//!
//! Three independent routes compute the tree `α(G)` of a digraph that is
//! bipolar with respect to its smallest edge:
//!
//! - [`orientation::alpha_bruteforce`] filters all spanning trees through the
//!   sign criterion,
//! - [`delcon::alpha_delcon`] recurses on deletion/contraction of the largest
//!   edge,
//! - [`optimizer::alpha_optimize`] walks a flag of optimal cocycles in
//!   successive minors.
//!
//! [`orientation::invert_alpha`] maps a uniactive internal tree back to its
//! orientation and [`delcon::build_full_bijection`] tabulates the whole
//! correspondence. [`harness`] cross-checks everything over generated corpora.

pub mod cli;
pub mod cycles;
pub mod delcon;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod growth;
pub mod harness;
pub mod io;
pub mod optimizer;
pub mod orientation;
pub mod signed;

pub use cycles::{Bond, SpanningTree};
pub use error::{Error, Result};
pub use graph::{EdgeId, MinorTrace, OrderedDigraph};
pub use signed::{Sign, SignedEdgeSet};
