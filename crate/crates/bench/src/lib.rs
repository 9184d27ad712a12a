//! Graphs shared by the benchmarks.

use travel_core::Graph;

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

pub fn complete_bipartite(left: usize, right: usize) -> Graph {
    let edges = (0..left).flat_map(|a| (left..left + right).map(move |b| (a, b)));
    Graph::from_edges(left + right, edges).expect("complete bipartite")
}
