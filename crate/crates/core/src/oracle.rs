//! Brute-force ground truth: every k-subset of `V` is tested for induced
//! connectivity. Shares no traversal code with the reverse-search modules.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Calls `visit` on every connected k-subset in lexicographic order until it
/// returns `false`. Returns whether the walk ran to completion.
pub fn for_each_connected_subset<F>(g: &Graph, k: usize, cap: usize, mut visit: F) -> Result<bool>
where
    F: FnMut(&[VertexId]) -> bool,
{
    let n = g.vertex_count();
    if k == 0 {
        return Err(Error::InvalidOrder);
    }
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    if k > n {
        return Ok(true);
    }

    let mut inside = vec![false; n];
    let mut reached = vec![false; n];
    let mut stack = Vec::with_capacity(k);
    let mut subset: Vec<VertexId> = (0..k as VertexId).collect();
    loop {
        if subset_is_connected(g, &subset, &mut inside, &mut reached, &mut stack) && !visit(&subset)
        {
            return Ok(false);
        }
        // advance to the next combination
        let mut i = k;
        while i > 0 && subset[i - 1] as usize == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(true);
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn subset_is_connected(
    g: &Graph,
    subset: &[VertexId],
    inside: &mut [bool],
    reached: &mut [bool],
    stack: &mut Vec<VertexId>,
) -> bool {
    for &v in subset {
        inside[v as usize] = true;
    }
    stack.clear();
    stack.push(subset[0]);
    reached[subset[0] as usize] = true;
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
    for &v in subset {
        inside[v as usize] = false;
        reached[v as usize] = false;
    }
    count == subset.len()
}

/// All connected k-subsets of `g`, lexicographically sorted. Refuses graphs
/// with more than [`DEFAULT_ORACLE_CAP`] vertices.
pub fn oracle_bruteforce(g: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    oracle_bruteforce_with_cap(g, k, DEFAULT_ORACLE_CAP)
}

pub fn oracle_bruteforce_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for_each_connected_subset(g, k, cap, |s| {
        out.push(VertexSet::from_sorted(s.to_vec()));
        true
    })?;
    Ok(out)
}

/// Upper bound `n (eΔ)^k / ((Δ - 1) k)` on the number of connected induced
/// k-subgraphs. Undefined for `Δ < 2`; see [`exact_small_degree_count`].
pub fn count_upper_bound(n: usize, delta: usize, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidOrder);
    }
    if delta < 2 {
        return Err(Error::ExactSmallDegree { delta });
    }
    let d = delta as f64;
    Ok(n as f64 * (std::f64::consts::E * d).powi(k as i32) / ((d - 1.0) * k as f64))
}

/// Exact count for graphs with `Δ <= 1`: every vertex for `k = 1`, every edge
/// for `k = 2`, nothing beyond.
pub fn exact_small_degree_count(g: &Graph, k: usize) -> Option<u64> {
    if g.max_degree() > 1 {
        return None;
    }
    Some(match k {
        1 => g.vertex_count() as u64,
        2 => g.edge_count() as u64,
        _ => 0,
    })
}
