//! Expansion under the connected-intersection neighborhood operator.
//!
//! Two connected k-sets are neighbors when they share `k - 1` vertices that
//! themselves induce a connected subgraph. From a solution `S` the neighbors
//! are therefore `S \ {v} ∪ {w}` where `v` is not an articulation point of
//! `G[S]` and `w` is any vertex adjacent to `S \ {v}`. Every such set is
//! connected without further checks, which is what removes the
//! common-neighborhood computation from the inner loop.

use std::time::Instant;

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::search::{EnumerationStats, Expansion};
use crate::subgraph::SubgraphAnalyzer;
use crate::vertex_set::{insert_sorted_into, VertexSet};

pub struct ConnectedExchange<'g> {
    analyzer: SubgraphAnalyzer<'g>,
    removable: Vec<VertexId>,
    frontier: Vec<VertexId>,
    base: Vec<VertexId>,
    candidate: Vec<VertexId>,
}

impl<'g> ConnectedExchange<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        ConnectedExchange {
            analyzer: SubgraphAnalyzer::new(graph),
            removable: Vec::new(),
            frontier: Vec::new(),
            base: Vec::new(),
            candidate: Vec::new(),
        }
    }
}

impl Expansion for ConnectedExchange<'_> {
    fn expand(
        &mut self,
        s: &[VertexId],
        stats: &mut EnumerationStats,
        timed: bool,
        offer: &mut dyn FnMut(&[VertexId]) -> Result<()>,
    ) -> Result<()> {
        let clock = timed.then(Instant::now);
        let mask = self.analyzer.articulation_mask(s);
        self.removable.clear();
        self.removable
            .extend(s.iter().zip(mask).filter(|(_, &ap)| !ap).map(|(&v, _)| v));
        if let Some(t) = clock {
            stats.articulation_time += t.elapsed();
        }

        for &v in &self.removable {
            let clock = timed.then(Instant::now);
            self.analyzer
                .neighborhood_into(s, Some(v), &mut self.frontier);
            if let Some(t) = clock {
                stats.neighborhood_time += t.elapsed();
            }
            self.base.clear();
            self.base.extend(s.iter().copied().filter(|&u| u != v));
            for &w in &self.frontier {
                insert_sorted_into(&self.base, w, &mut self.candidate);
                offer(&self.candidate)?;
            }
        }
        Ok(())
    }
}

/// All sets produced from `s` by one connected exchange, in generation order.
/// May contain duplicates. Requires `G[s]` connected and `|s| >= 2`.
pub fn neighbors_in_supergraph(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut stats = EnumerationStats::default();
    ConnectedExchange::new(g)
        .expand(s.as_slice(), &mut stats, false, &mut |c| {
            out.push(VertexSet::from_sorted(c.to_vec()));
            Ok(())
        })
        .expect("collecting neighbors cannot fail");
    out
}
