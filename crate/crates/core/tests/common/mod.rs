#![allow(dead_code)]

use cis_core::{Graph, GraphRecipe, VertexId};
use proptest::prelude::*;

/// Connectivity of `G[s]` by plain depth-first search over a boolean mask.
pub fn connected_by_dfs(g: &Graph, s: &[VertexId]) -> bool {
    if s.is_empty() {
        return true;
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in s {
        inside[v as usize] = true;
    }
    let mut reached = vec![false; g.vertex_count()];
    let mut stack = vec![s[0]];
    reached[s[0] as usize] = true;
    let mut count = 0;
    while let Some(u) = stack.pop() {
        count += 1;
        for &w in g.neighbors(u) {
            if inside[w as usize] && !reached[w as usize] {
                reached[w as usize] = true;
                stack.push(w);
            }
        }
    }
    count == s.len()
}

/// Articulation points by deleting each member and re-testing connectivity.
pub fn articulation_by_deletion(g: &Graph, s: &[VertexId]) -> Vec<VertexId> {
    if s.len() <= 2 {
        return Vec::new();
    }
    s.iter()
        .copied()
        .filter(|&v| {
            let rest: Vec<VertexId> = s.iter().copied().filter(|&u| u != v).collect();
            !connected_by_dfs(g, &rest)
        })
        .collect()
}

/// Every subset of `0..n` as a sorted vertex list, by bitmask.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<VertexId>> {
    (0u32..(1u32 << n))
        .map(move |mask| (0..n as VertexId).filter(|&v| mask >> v & 1 == 1).collect())
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    GraphRecipe::gnp(n, p, seed).generate().unwrap()
}

/// Arbitrary simple graph on 1..=max_n vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n as VertexId {
                for v in u + 1..n as VertexId {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}
