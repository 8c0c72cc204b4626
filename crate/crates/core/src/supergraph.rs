//! Explicit supergraph on small instances: nodes are all connected k-sets,
//! edges join sets sharing `k - 1` vertices whose induced subgraph is
//! connected. Used to check that the supergraph is connected with hop
//! diameter at most `n - k`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::subgraph::SubgraphAnalyzer;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone)]
pub struct Supergraph {
    k: usize,
    nodes: Vec<VertexSet>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<VertexSet, usize>,
}

impl Supergraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Node indices adjacent to node `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn index_of(&self, s: &VertexSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Neighbor sets of `s` under the operator, sorted.
    pub fn neighbor_sets(&self, s: &VertexSet) -> Option<Vec<VertexSet>> {
        let i = self.index_of(s)?;
        Some(
            self.adjacency[i]
                .iter()
                .map(|&j| self.nodes[j].clone())
                .collect(),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(i, list)| {
            list.iter()
                .all(|&j| self.adjacency[j].binary_search(&i).is_ok())
        })
    }

    /// Hop distances from node `source`; `None` marks unreachable nodes.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.nodes.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest hop distance between two nodes; `None` if disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        let mut diameter = 0;
        for source in 0..self.nodes.len() {
            for d in self.distances_from(source) {
                diameter = diameter.max(d?);
            }
        }
        (!self.nodes.is_empty()).then_some(diameter)
    }
}

/// Builds the supergraph from the brute-force node set with pairwise edge
/// tests. Subject to the oracle's vertex cap.
pub fn build_supergraph(g: &Graph, k: usize) -> Result<Supergraph> {
    build_supergraph_with_cap(g, k, oracle::DEFAULT_ORACLE_CAP)
}

pub fn build_supergraph_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Supergraph> {
    let nodes = oracle::oracle_bruteforce_with_cap(g, k, cap)?;
    let mut analyzer = SubgraphAnalyzer::new(g);
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let shared = nodes[i].intersection(&nodes[j]);
            // an empty intersection (k = 1) is vacuously connected
            let linked = shared.len() + 1 == k
                && (shared.is_empty() || analyzer.is_connected_induced(shared.as_slice()));
            if linked {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let index = nodes
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    Ok(Supergraph {
        k,
        nodes,
        adjacency,
        index,
    })
}

/// Outcome of checking the path-length claim on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: usize,
    pub k: usize,
    pub nodes: usize,
    pub edges: usize,
    /// Undirected connectivity. The neighbor relation is symmetric, so this
    /// coincides with strong connectivity of the directed reading.
    pub connected: bool,
    pub symmetric: bool,
    pub diameter: Option<usize>,
    /// `n - k`: a path of at most `n - k + 1` nodes has at most `n - k` hops.
    pub bound: usize,
    pub pass: bool,
}

pub fn check_lemma1(sg: &Supergraph, n: usize, k: usize) -> LemmaReport {
    let connected = sg.is_connected();
    let symmetric = sg.is_symmetric();
    let diameter = sg.diameter();
    let bound = n.saturating_sub(k);
    let pass = connected && symmetric && diameter.is_some_and(|d| d <= bound);
    LemmaReport {
        n,
        k,
        nodes: sg.node_count(),
        edges: sg.edge_count(),
        connected,
        symmetric,
        diameter,
        bound,
        pass,
    }
}

/// Builds the supergraph of a connected host graph and checks it.
pub fn verify_lemma1(g: &Graph, k: usize, cap: usize) -> Result<LemmaReport> {
    if k == 0 {
        return Err(Error::InvalidOrder);
    }
    if g.vertex_count() < k {
        return Err(Error::ComponentTooSmall {
            size: g.vertex_count(),
            k,
        });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedHost);
    }
    let sg = build_supergraph_with_cap(g, k, cap)?;
    Ok(check_lemma1(&sg, g.vertex_count(), k))
}

impl LemmaReport {
    fn diameter_text(&self) -> String {
        self.diameter
            .map_or_else(|| "inf".to_string(), |d| d.to_string())
    }

    /// One `key=value` pair per line.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "k={}", self.k);
        let _ = writeln!(out, "nodes={}", self.nodes);
        let _ = writeln!(out, "edges={}", self.edges);
        let _ = writeln!(out, "connected={}", self.connected);
        let _ = writeln!(out, "connectivity=undirected");
        let _ = writeln!(out, "symmetric={}", self.symmetric);
        let _ = writeln!(out, "diameter={}", self.diameter_text());
        let _ = writeln!(out, "bound={}", self.bound);
        let _ = writeln!(out, "pass={}", self.pass);
        out
    }

    pub fn to_text(&self) -> String {
        format!(
            "supergraph for n={} k={}: {} nodes, {} edges\n\
             connected: {} (undirected; neighbor relation symmetric: {})\n\
             diameter: {} hops, bound n-k = {}\n\
             result: {}\n",
            self.n,
            self.k,
            self.nodes,
            self.edges,
            if self.connected { "yes" } else { "no" },
            if self.symmetric { "yes" } else { "no" },
            self.diameter_text(),
            self.bound,
            if self.pass { "PASS" } else { "FAIL" },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n as VertexId).map(|v| (v - 1, v))).unwrap()
    }

    fn set(v: &[VertexId]) -> VertexSet {
        VertexSet::new(v.to_vec())
    }

    #[test]
    fn path3_pairs_linked() {
        let sg = build_supergraph(&path(3), 2).unwrap();
        assert_eq!(sg.nodes(), &[set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(sg.neighbors(0), &[1]);
    }

    #[test]
    fn path4_chain() {
        let sg = build_supergraph(&path(4), 2).unwrap();
        let a = sg.index_of(&set(&[0, 1])).unwrap();
        let b = sg.index_of(&set(&[1, 2])).unwrap();
        let c = sg.index_of(&set(&[2, 3])).unwrap();
        assert_eq!(sg.neighbors(a), &[b]);
        assert_eq!(sg.neighbors(c), &[b]);
        let report = check_lemma1(&sg, 4, 2);
        assert!(report.connected);
        assert_eq!(report.diameter, Some(2));
        assert_eq!(report.bound, 2);
        assert!(report.pass);
    }

    #[test]
    fn k4_complete_supergraph() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Graph::from_edges(4, edges).unwrap();
        let sg = build_supergraph(&g, 3).unwrap();
        assert_eq!(sg.node_count(), 4);
        assert_eq!(sg.edge_count(), 6);
        let report = check_lemma1(&sg, 4, 3);
        assert_eq!(report.diameter, Some(1));
        assert!(report.pass);
    }

    #[test]
    fn whole_graph_single_node() {
        let report = verify_lemma1(&path(5), 5, 20).unwrap();
        assert_eq!(report.nodes, 1);
        assert_eq!(report.diameter, Some(0));
        assert!(report.pass);
    }

    #[test]
    fn disconnected_intersection_is_not_an_edge() {
        // cycle 0-1-2-3: {0,1,2} and {0,2,3} share {0,2}, which is not connected
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let sg = build_supergraph(&g, 3).unwrap();
        let a = sg.index_of(&set(&[0, 1, 2])).unwrap();
        let b = sg.index_of(&set(&[0, 2, 3])).unwrap();
        assert!(!sg.neighbors(a).contains(&b));
        // The supergraph is a 4-cycle: connected, but two hops separate a and
        // b while n - k allows one.
        let report = check_lemma1(&sg, 4, 3);
        assert!(report.connected);
        assert_eq!(report.diameter, Some(2));
        assert_eq!(report.bound, 1);
        assert!(!report.pass);
    }

    #[test]
    fn verify_preconditions() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(verify_lemma1(&g, 2, 20), Err(Error::DisconnectedHost));
        assert!(matches!(
            verify_lemma1(&path(3), 4, 20),
            Err(Error::ComponentTooSmall { .. })
        ));
        assert!(matches!(
            verify_lemma1(&path(25), 2, 20),
            Err(Error::OracleCapExceeded { .. })
        ));
    }

    #[test]
    fn report_formats() {
        let report = verify_lemma1(&path(4), 2, 20).unwrap();
        let kv = report.to_key_value();
        assert!(kv.contains("diameter=2\n"));
        assert!(kv.contains("pass=true\n"));
        assert!(kv.lines().all(|l| l.split_once('=').is_some()));
        assert!(report.to_text().contains("PASS"));
    }
}
