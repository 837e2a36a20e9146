//! The eight-edge graph: every value printed alongside its worked example.

use std::collections::BTreeSet;

use fully_optimal::cycles::{
    directed_cocycles_through, fundamental_cocycle, fundamental_cycle, lex_min_spanning_tree, lift_cocycle,
};
use fully_optimal::fixtures::g_star;
use fully_optimal::graph::ids;
use fully_optimal::optimizer::{alpha_optimize, candidate_cocycles, make_optimizable, OptimizeOptions};
use fully_optimal::orientation::{alpha_bruteforce, is_bipolar, Characterization};
use fully_optimal::{EdgeId, SignedEdgeSet, SpanningTree};

fn supports(sets: &[SignedEdgeSet]) -> Vec<BTreeSet<EdgeId>> {
    sets.iter().map(|s| s.support()).collect()
}

#[test]
fn bipolar_under_every_characterization() {
    let g = g_star();
    for c in Characterization::ALL {
        assert!(is_bipolar(&g, EdgeId(1), c).unwrap(), "{}", c.name());
    }
}

#[test]
fn minimal_spanning_tree_is_1236() {
    assert_eq!(lex_min_spanning_tree(&g_star()).unwrap(), SpanningTree::from_ids(&[1, 2, 3, 6]));
}

#[test]
fn directed_cocycles_through_p_in_optimal_order() {
    let g = g_star();
    let od = make_optimizable(&g).unwrap();
    let ordered = candidate_cocycles(&od).unwrap();
    let expected = [ids([1, 2, 3]), ids([1, 2, 4, 6]), ids([1, 3, 5, 8]), ids([1, 4, 5, 6, 8]), ids([1, 4, 5, 7])];
    assert_eq!(supports(&ordered), expected);
    assert!(ordered.iter().all(SignedEdgeSet::is_positive));
    // Same set as the plain enumeration of directed cocycles.
    let mut plain = supports(&directed_cocycles_through(&g, EdgeId(1)).unwrap());
    plain.sort();
    let mut sorted = expected.to_vec();
    sorted.sort();
    assert_eq!(plain, sorted);
}

#[test]
fn circuit_134_through_the_first_objective() {
    let g = g_star();
    let f = SpanningTree::from_ids(&[1, 2, 3, 6]).without(EdgeId(3)).with(EdgeId(4));
    // 3 is the largest element common to the circuit and F = 236.
    assert_eq!(fundamental_cycle(&g, &f, EdgeId(3)).unwrap().support(), ids([1, 3, 4]));
}

#[test]
fn second_minor_and_its_circuit_25() {
    let g2 = g_star().contract([EdgeId(1)]).unwrap().delete([EdgeId(3)]).unwrap();
    assert_eq!(g2.edge_set(), ids([2, 4, 5, 6, 7, 8]));
    let tree = SpanningTree::from_ids(&[2, 4, 6]).without(EdgeId(2)).with(EdgeId(5));
    assert_eq!(fundamental_cycle(&g2, &tree, EdgeId(2)).unwrap().support(), ids([2, 5]));
}

#[test]
fn second_and_third_candidate_lists() {
    let g2 = g_star().contract([EdgeId(1)]).unwrap().delete([EdgeId(3)]).unwrap();
    let od2 = fully_optimal::optimizer::OptimizableDigraph::new(g2, EdgeId(4), ids([4, 5, 6, 7, 8]), vec![EdgeId(2), EdgeId(6)])
        .unwrap();
    assert_eq!(
        candidate_cocycles(&od2).unwrap(),
        vec![SignedEdgeSet::from_ids(&[4, 6], &[]), SignedEdgeSet::from_ids(&[4, 5, 7], &[2])]
    );
    let g3 = od2.graph().contract([EdgeId(4)]).unwrap().delete([EdgeId(2)]).unwrap();
    let od3 = fully_optimal::optimizer::OptimizableDigraph::new(g3, EdgeId(5), ids([5, 7, 8]), vec![EdgeId(6)]).unwrap();
    assert_eq!(
        candidate_cocycles(&od3).unwrap(),
        vec![SignedEdgeSet::from_ids(&[5, 8], &[]), SignedEdgeSet::from_ids(&[5, 7], &[6])]
    );
}

#[test]
fn alpha_is_1457_by_every_route() {
    let g = g_star();
    let expected = SpanningTree::from_ids(&[1, 4, 5, 7]);
    assert_eq!(alpha_bruteforce(&g).unwrap(), expected);
    assert_eq!(alpha_optimize(&g, OptimizeOptions::default()).unwrap().tree, expected);
}

#[test]
fn fundamental_cocycles_induce_the_optimal_cocycles() {
    let g = g_star();
    let t = SpanningTree::from_ids(&[1, 4, 5, 7]);
    let c1 = fundamental_cocycle(&g, &t, EdgeId(1)).unwrap();
    let c4 = fundamental_cocycle(&g, &t, EdgeId(4)).unwrap();
    let c5 = fundamental_cocycle(&g, &t, EdgeId(5)).unwrap();
    assert_eq!(c1, SignedEdgeSet::from_ids(&[1, 2, 3], &[]));
    assert_eq!(c4, SignedEdgeSet::from_ids(&[4, 6], &[3]));
    assert_eq!(c5, SignedEdgeSet::from_ids(&[5, 8], &[2]));
    // Restricted to the edges of the successive minors.
    assert_eq!(c4.restricted_to(&ids([4, 5, 6, 7, 8])), SignedEdgeSet::from_ids(&[4, 6], &[]));
    assert_eq!(c5.restricted_to(&ids([5, 7, 8])), SignedEdgeSet::from_ids(&[5, 8], &[]));
}

#[test]
fn optimal_cocycles_lift_back_to_fundamental_cocycles() {
    let g = g_star();
    let g2 = g.contract([EdgeId(1)]).unwrap().delete([EdgeId(3)]).unwrap();
    let g3 = g2.contract([EdgeId(4)]).unwrap().delete([EdgeId(2)]).unwrap();
    let lifted4 = lift_cocycle(&g2, &SignedEdgeSet::from_ids(&[4, 6], &[])).unwrap();
    let lifted5 = lift_cocycle(&g3, &SignedEdgeSet::from_ids(&[5, 8], &[])).unwrap();
    assert_eq!(lifted4, SignedEdgeSet::from_ids(&[4, 6], &[3]));
    assert_eq!(lifted5, SignedEdgeSet::from_ids(&[5, 8], &[2]));
}
