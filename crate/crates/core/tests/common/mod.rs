#![allow(dead_code)]

use travel_core::{Graph, OpTable, TPartitionSystem};

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn c4() -> Graph {
    graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
}

pub fn p4() -> Graph {
    graph(4, &[(0, 1), (1, 2), (2, 3)])
}

/// Triangle 0-1-2 with a pendant vertex 3 on 2.
pub fn paw() -> Graph {
    graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The travel groupoid on the 4-cycle a-b-c-d, a,b,c,d = 0,1,2,3.
pub fn golden_table() -> OpTable {
    OpTable::from_rows(&[[0, 1, 3, 3], [0, 1, 2, 0], [1, 1, 2, 3], [0, 2, 2, 3]]).unwrap()
}

pub fn golden_system() -> TPartitionSystem {
    TPartitionSystem::new(vec![
        vec![vec![0], vec![1], vec![], vec![2, 3]],
        vec![vec![0, 3], vec![1], vec![2], vec![]],
        vec![vec![], vec![0, 1], vec![2], vec![3]],
        vec![vec![0], vec![], vec![1, 2], vec![3]],
    ])
    .unwrap()
}

/// Every labeled simple graph on `n` vertices (2^(n choose 2) of them).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Every operation table on `n` elements, in lexicographic order.
pub fn all_tables(n: usize) -> impl Iterator<Item = OpTable> {
    let cells = n * n;
    let count = n.pow(cells as u32);
    (0..count).map(move |mut code| {
        let mut entries = vec![0; cells];
        for slot in entries.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        OpTable::new(n, entries).unwrap()
    })
}
