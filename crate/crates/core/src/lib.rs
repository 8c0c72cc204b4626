//! Enumeration of all connected induced subgraphs of order `k` in an
//! undirected graph.
//!
//! Two reverse-search enumerators traverse the supergraph whose nodes are the
//! connected k-sets, keeping a dictionary of discovered solutions:
//!
//! * [`Algorithm::Irwd`] exchanges a non-articulation vertex of the current
//!   solution for any neighbor of the remainder, so every generated set is
//!   connected by construction.
//! * [`Algorithm::Rwd`] exchanges any vertex for a vertex adjacent to every
//!   component of the remainder.
//!
//! A brute-force oracle, an explicit supergraph checker for small instances
//! and a delay benchmark complete the crate.
//!
//! ```
//! use cis_core::{enumerate_irwd, Graph};
//!
//! let g: Graph = "0 1\n1 2\n2 3".parse().unwrap();
//! let mut found = Vec::new();
//! let count = enumerate_irwd(&g, 2, |s| found.push(s.to_vec())).unwrap();
//! assert_eq!(count, 3);
//! assert_eq!(found, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
//! ```

pub mod bench;
pub mod dictionary;
mod error;
pub mod graph;
pub mod irwd;
pub mod oracle;
pub mod rwd;
pub mod search;
pub mod subgraph;
pub mod supergraph;
mod vertex_set;

pub use bench::{generate_graph, run_benchmark, write_csv, DelayReport, Family, GraphRecipe};
pub use dictionary::DictionaryKind;
pub use error::{Error, Result};
pub use graph::{parse_edge_list, parse_edge_list_relabeled, Graph, VertexId};
pub use irwd::neighbors_in_supergraph;
pub use oracle::{count_upper_bound, oracle_bruteforce, DEFAULT_ORACLE_CAP};
pub use search::{
    collect, enumerate, enumerate_irwd, enumerate_rwd, enumerate_while, initial_solution,
    Algorithm, EnumOptions, EnumerationState, EnumerationStats, ReverseSearch,
};
pub use subgraph::{
    articulation_points, common_component_neighborhood, is_connected_induced, set_neighborhood,
    SubgraphAnalyzer,
};
pub use supergraph::{build_supergraph, check_lemma1, verify_lemma1, LemmaReport, Supergraph};
pub use vertex_set::VertexSet;
