// Shared by several integration test targets; not every helper is used by each.
#![allow(dead_code)]

use proptest::prelude::*;
use rwinv_core::OrientedGraph;

/// Random trivalent multigraph on `n` vertices: a uniformly shuffled
/// perfect matching of the `3n` flags.
pub fn graph_strategy(max_k: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_k).prop_flat_map(|k| Just((0..6 * k).collect::<Vec<usize>>()).prop_shuffle()).prop_map(|flags| {
        let mut partner = vec![0; flags.len()];
        for pair in flags.chunks(2) {
            partner[pair[0]] = pair[1];
            partner[pair[1]] = pair[0];
        }
        OrientedGraph::from_partner(partner).expect("perfect matching")
    })
}

pub fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
