//! Immutable undirected simple graphs in sorted adjacency-list form.
//!
//! Edge-list text format: one edge per line as two whitespace-separated
//! non-negative integer ids. Lines starting with `#` are comments and blank
//! lines are ignored. An optional header line `n <count>` declares the vertex
//! count so that trailing isolated vertices can be represented. Duplicate
//! edges collapse; self-loops are rejected.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
    max_degree: usize,
    /// External label of each dense id, when ids were remapped at parse time.
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are collapsed; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v || u as usize >= n || v as usize >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Ok(Graph::from_adjacency(adjacency))
    }

    fn from_adjacency(mut adjacency: Vec<Vec<VertexId>>) -> Graph {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Graph {
            adjacency,
            edge_count: degree_sum / 2,
            max_degree,
            labels: None,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n])
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    /// Sorted neighbors of `v`.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    /// Adjacency test by binary search, `O(log Δ)`.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a as usize].binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        0..self.vertex_count() as VertexId
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// External label of `v`; the id itself unless the graph was relabeled.
    pub fn label(&self, v: VertexId) -> u64 {
        match &self.labels {
            Some(labels) => labels[v as usize],
            None => u64::from(v),
        }
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start as VertexId);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(VertexSet::new(members));
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Serializes as an edge list with an `n <count>` header, edges sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        parse_edge_list(text)
    }
}

/// Parses the edge-list format with ids taken as dense vertex ids. The vertex
/// count is `1 + max id`, or the value of an `n <count>` header.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let raw = scan(text)?;
    let max_seen = raw.edges.iter().map(|&(_, u, v)| u.max(v)).max();
    let n = match raw.declared_n {
        Some(n) => {
            if let Some(&(line, u, v)) = raw.edges.iter().find(|&&(_, u, v)| u.max(v) >= n) {
                return Err(Error::VertexOutOfRange {
                    line,
                    vertex: u.max(v),
                    n,
                });
            }
            n
        }
        None => max_seen.map_or(0, |m| m + 1),
    };
    if n > u64::from(VertexId::MAX) {
        return Err(Error::Parse {
            line: raw.declared_line.unwrap_or(1),
            message: format!("vertex count {n} exceeds the supported maximum"),
        });
    }
    let edges = raw
        .edges
        .iter()
        .map(|&(_, u, v)| (u as VertexId, v as VertexId));
    Graph::from_edges(n as usize, edges)
}

/// Parses the edge-list format with arbitrary (sparse) integer labels,
/// remapping them to dense ids in order of first appearance. The original
/// labels are kept and reported by [`Graph::label`].
pub fn parse_edge_list_relabeled(text: &str) -> Result<Graph> {
    let raw = scan(text)?;
    if let Some(line) = raw.declared_line {
        return Err(Error::Parse {
            line,
            message: "an 'n <count>' header cannot be combined with relabeling".into(),
        });
    }
    let mut index: HashMap<u64, VertexId> = HashMap::new();
    let mut labels = Vec::new();
    let mut dense = |label: u64| -> VertexId {
        *index.entry(label).or_insert_with(|| {
            labels.push(label);
            (labels.len() - 1) as VertexId
        })
    };
    let edges: Vec<_> = raw
        .edges
        .iter()
        .map(|&(_, u, v)| (dense(u), dense(v)))
        .collect();
    let mut graph = Graph::from_edges(labels.len(), edges)?;
    graph.labels = Some(labels);
    Ok(graph)
}

struct RawEdgeList {
    declared_n: Option<u64>,
    declared_line: Option<usize>,
    edges: Vec<(usize, u64, u64)>,
}

fn scan(text: &str) -> Result<RawEdgeList> {
    let mut raw = RawEdgeList {
        declared_n: None,
        declared_line: None,
        edges: Vec::new(),
    };
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_id = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found '{tok}'"),
            })
        };
        match tokens.as_slice() {
            ["n", count] => {
                if raw.declared_n.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "duplicate 'n <count>' header".into(),
                    });
                }
                raw.declared_n = Some(parse_id(count)?);
                raw.declared_line = Some(line_no);
            }
            [a, b] => {
                let (u, v) = (parse_id(a)?, parse_id(b)?);
                if u == v {
                    return Err(Error::SelfLoop {
                        line: line_no,
                        vertex: u,
                    });
                }
                raw.edges.push((line_no, u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two vertex ids, found {} tokens", tokens.len()),
                })
            }
        }
    }
    Ok(raw)
}
