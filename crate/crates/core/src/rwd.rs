//! Baseline expansion: exchange any vertex `v` of `S` for a vertex adjacent to
//! every connected component of `S \ {v}`.
//!
//! The common neighborhood is recomputed from scratch for every removed
//! vertex.

use std::time::Instant;

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::search::{EnumerationStats, Expansion};
use crate::subgraph::SubgraphAnalyzer;
use crate::vertex_set::insert_sorted_into;

pub struct CommonNeighborhoodExchange<'g> {
    analyzer: SubgraphAnalyzer<'g>,
    base: Vec<VertexId>,
    common: Vec<VertexId>,
    candidate: Vec<VertexId>,
}

impl<'g> CommonNeighborhoodExchange<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        CommonNeighborhoodExchange {
            analyzer: SubgraphAnalyzer::new(graph),
            base: Vec::new(),
            common: Vec::new(),
            candidate: Vec::new(),
        }
    }
}

impl Expansion for CommonNeighborhoodExchange<'_> {
    fn expand(
        &mut self,
        s: &[VertexId],
        stats: &mut EnumerationStats,
        timed: bool,
        offer: &mut dyn FnMut(&[VertexId]) -> Result<()>,
    ) -> Result<()> {
        for &v in s {
            self.base.clear();
            self.base.extend(s.iter().copied().filter(|&u| u != v));

            let clock = timed.then(Instant::now);
            self.analyzer
                .common_component_neighborhood_into(&self.base, &mut self.common);
            if let Some(t) = clock {
                stats.common_neighborhood_time += t.elapsed();
            }

            for &w in &self.common {
                if w == v {
                    continue;
                }
                insert_sorted_into(&self.base, w, &mut self.candidate);
                debug_assert!(self.analyzer.is_connected_induced(&self.candidate));
                offer(&self.candidate)?;
            }
        }
        Ok(())
    }
}
