//! Queries on induced subgraphs `G[S]`.
//!
//! [`SubgraphAnalyzer`] owns scratch arrays of length `n` whose entries are
//! invalidated by bumping an epoch counter, so each query costs time in the
//! size of `S` and its neighborhood rather than in `n`. The free functions at
//! the bottom allocate a fresh analyzer per call and are meant for one-off use.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexId};
use crate::vertex_set::VertexSet;

const UNSEEN: u32 = u32::MAX;

/// Epoch-stamped membership marks with an attached per-vertex slot.
#[derive(Debug, Clone)]
struct Marks {
    epoch: Vec<u32>,
    slot: Vec<u32>,
    current: u32,
}

impl Marks {
    fn new(n: usize) -> Self {
        Marks {
            epoch: vec![0; n],
            slot: vec![0; n],
            current: 0,
        }
    }

    fn clear(&mut self) {
        self.current = self.current.wrapping_add(1);
        if self.current == 0 {
            self.epoch.fill(0);
            self.current = 1;
        }
    }

    #[inline]
    fn set(&mut self, v: VertexId, slot: u32) {
        self.epoch[v as usize] = self.current;
        self.slot[v as usize] = slot;
    }

    #[inline]
    fn get(&self, v: VertexId) -> Option<u32> {
        (self.epoch[v as usize] == self.current).then(|| self.slot[v as usize])
    }

    #[inline]
    fn contains(&self, v: VertexId) -> bool {
        self.epoch[v as usize] == self.current
    }
}

/// Reusable scratch state for induced-subgraph queries over one graph.
///
/// Not shareable between concurrent activities; create one per enumeration.
#[derive(Debug, Clone)]
pub struct SubgraphAnalyzer<'g> {
    graph: &'g Graph,
    members: Marks,
    seen: Marks,
    disc: Vec<u32>,
    low: Vec<u32>,
    frames: Vec<Frame>,
    queue: VecDeque<VertexId>,
    component_of: Vec<u32>,
    articulation: Vec<bool>,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    local: u32,
    parent: u32,
    cursor: usize,
}

impl<'g> SubgraphAnalyzer<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        SubgraphAnalyzer {
            graph,
            members: Marks::new(n),
            seen: Marks::new(n),
            disc: Vec::new(),
            low: Vec::new(),
            frames: Vec::new(),
            queue: VecDeque::new(),
            component_of: Vec::new(),
            articulation: Vec::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    fn load(&mut self, s: &[VertexId]) {
        self.members.clear();
        for (i, &v) in s.iter().enumerate() {
            self.members.set(v, i as u32);
        }
    }

    /// Next neighbor of `v` inside the loaded set, resuming at `cursor`.
    ///
    /// Scans the adjacency list of `v` when `deg(v) <= |s|`, otherwise scans
    /// `s` and probes adjacency by binary search. Either way the cost per
    /// vertex is bounded by `min(|s|, Δ)` steps (times `log Δ` in the second
    /// mode).
    #[inline]
    fn next_inside(&self, v: VertexId, s: &[VertexId], cursor: &mut usize) -> Option<u32> {
        let adj = self.graph.neighbors(v);
        if adj.len() <= s.len() {
            while *cursor < adj.len() {
                let w = adj[*cursor];
                *cursor += 1;
                if let Some(local) = self.members.get(w) {
                    return Some(local);
                }
            }
        } else {
            while *cursor < s.len() {
                let i = *cursor;
                *cursor += 1;
                let w = s[i];
                if w != v && adj.binary_search(&w).is_ok() && self.members.contains(w) {
                    return Some(i as u32);
                }
            }
        }
        None
    }

    /// Number of vertices of the loaded set reachable from `s[0]` inside it.
    fn reach_count(&mut self, s: &[VertexId]) -> usize {
        self.seen.clear();
        self.queue.clear();
        self.seen.set(s[0], 0);
        self.queue.push_back(s[0]);
        let mut count = 0;
        while let Some(u) = self.queue.pop_front() {
            count += 1;
            let mut cursor = 0;
            while let Some(local) = self.next_inside(u, s, &mut cursor) {
                let w = s[local as usize];
                if !self.seen.contains(w) {
                    self.seen.set(w, 0);
                    self.queue.push_back(w);
                }
            }
        }
        count
    }

    /// Whether `G[s]` is connected. Panics if `s` is empty.
    pub fn is_connected_induced(&mut self, s: &[VertexId]) -> bool {
        assert!(!s.is_empty(), "connectivity of the empty set is undefined");
        self.load(s);
        self.reach_count(s) == s.len()
    }

    /// Per-member articulation flags of the connected set `s`, indexed like `s`.
    ///
    /// Single restricted depth-first traversal with discovery and low-link
    /// indices. Panics if `s` is empty or `G[s]` is disconnected.
    pub fn articulation_mask(&mut self, s: &[VertexId]) -> &[bool] {
        assert!(!s.is_empty(), "articulation points of the empty set");
        let k = s.len();
        self.load(s);
        self.disc.clear();
        self.disc.resize(k, UNSEEN);
        self.low.clear();
        self.low.resize(k, 0);
        self.articulation.clear();
        self.articulation.resize(k, false);
        self.frames.clear();

        let mut time = 0u32;
        let mut root_children = 0usize;
        self.disc[0] = time;
        self.low[0] = time;
        time += 1;
        self.frames.push(Frame {
            local: 0,
            parent: UNSEEN,
            cursor: 0,
        });

        while let Some(top) = self.frames.last_mut() {
            let (u, parent) = (top.local, top.parent);
            let mut cursor = top.cursor;
            let next = self.next_inside(s[u as usize], s, &mut cursor);
            self.frames.last_mut().unwrap().cursor = cursor;
            match next {
                Some(w) if w == parent => {}
                Some(w) if self.disc[w as usize] == UNSEEN => {
                    self.disc[w as usize] = time;
                    self.low[w as usize] = time;
                    time += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    self.frames.push(Frame {
                        local: w,
                        parent: u,
                        cursor: 0,
                    });
                }
                Some(w) => {
                    let d = self.disc[w as usize];
                    let l = &mut self.low[u as usize];
                    *l = (*l).min(d);
                }
                None => {
                    self.frames.pop();
                    if parent != UNSEEN {
                        let child_low = self.low[u as usize];
                        let pl = &mut self.low[parent as usize];
                        *pl = (*pl).min(child_low);
                        if parent != 0 && child_low >= self.disc[parent as usize] {
                            self.articulation[parent as usize] = true;
                        }
                    }
                }
            }
        }

        assert_eq!(
            time as usize, k,
            "articulation points requested for a disconnected induced subgraph"
        );
        self.articulation[0] = root_children >= 2;
        &self.articulation
    }

    /// Articulation points of the connected induced subgraph `G[s]`.
    pub fn articulation_points(&mut self, s: &[VertexId]) -> VertexSet {
        let mask = self.articulation_mask(s);
        VertexSet::from_sorted(
            s.iter()
                .zip(mask)
                .filter_map(|(&v, &is_ap)| is_ap.then_some(v))
                .collect(),
        )
    }

    /// Vertices outside `s` adjacent to some member of `s`, with `skip`
    /// treated as removed from `s`, appended to `out` in discovery order.
    ///
    /// With `skip = Some(v)` this is the neighborhood of `s \ {v}` except that
    /// `v` itself is not reported.
    pub fn neighborhood_into(
        &mut self,
        s: &[VertexId],
        skip: Option<VertexId>,
        out: &mut Vec<VertexId>,
    ) {
        out.clear();
        self.load(s);
        self.seen.clear();
        for &u in s {
            if Some(u) == skip {
                continue;
            }
            for &w in self.graph.neighbors(u) {
                if !self.members.contains(w) && !self.seen.contains(w) {
                    self.seen.set(w, 0);
                    out.push(w);
                }
            }
        }
    }

    /// All `w ∉ s` adjacent to `s`, sorted.
    pub fn set_neighborhood(&mut self, s: &[VertexId]) -> VertexSet {
        let mut out = Vec::new();
        self.neighborhood_into(s, None, &mut out);
        VertexSet::new(out)
    }

    /// Connected components of `G[s]`, written as a component index per
    /// member of `s`. Returns the number of components. Leaves `s` loaded.
    fn label_components(&mut self, s: &[VertexId]) -> usize {
        self.load(s);
        self.component_of.clear();
        self.component_of.resize(s.len(), UNSEEN);
        let mut count = 0u32;
        for start in 0..s.len() {
            if self.component_of[start] != UNSEEN {
                continue;
            }
            self.component_of[start] = count;
            self.queue.clear();
            self.queue.push_back(start as VertexId);
            while let Some(local) = self.queue.pop_front() {
                let mut cursor = 0;
                while let Some(w) = self.next_inside(s[local as usize], s, &mut cursor) {
                    if self.component_of[w as usize] == UNSEEN {
                        self.component_of[w as usize] = count;
                        self.queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        count as usize
    }

    /// Vertices outside `s` adjacent to every connected component of `G[s]`,
    /// appended to `out` sorted. `s` may induce a disconnected subgraph.
    pub fn common_component_neighborhood_into(&mut self, s: &[VertexId], out: &mut Vec<VertexId>) {
        out.clear();
        if s.is_empty() {
            return;
        }
        let components = self.label_components(s);
        let mut order: Vec<usize> = (0..s.len()).collect();
        order.sort_by_key(|&i| self.component_of[i]);
        // Each candidate owns a slot holding (last component seen, hit count).
        // Members are visited grouped by component, so a component is counted
        // at most once per candidate.
        self.seen.clear();
        let mut tally: Vec<(u32, u32)> = Vec::new();
        for i in order {
            let c = self.component_of[i];
            for &w in self.graph.neighbors(s[i]) {
                if self.members.contains(w) {
                    continue;
                }
                let slot = match self.seen.get(w) {
                    Some(slot) => slot as usize,
                    None => {
                        self.seen.set(w, tally.len() as u32);
                        tally.push((UNSEEN, 0));
                        out.push(w);
                        tally.len() - 1
                    }
                };
                let entry = &mut tally[slot];
                if entry.0 != c {
                    entry.0 = c;
                    entry.1 += 1;
                }
            }
        }
        out.retain(|&w| {
            let slot = self.seen.get(w).unwrap() as usize;
            tally[slot].1 as usize == components
        });
        out.sort_unstable();
    }

    pub fn common_component_neighborhood(&mut self, s: &[VertexId]) -> VertexSet {
        let mut out = Vec::new();
        self.common_component_neighborhood_into(s, &mut out);
        VertexSet::from_sorted(out)
    }
}

/// Whether `G[s]` is connected. Panics if `s` is empty.
pub fn is_connected_induced(g: &Graph, s: &VertexSet) -> bool {
    SubgraphAnalyzer::new(g).is_connected_induced(s.as_slice())
}

/// Articulation points of `G[s]`. Panics if `G[s]` is empty or disconnected.
pub fn articulation_points(g: &Graph, s: &VertexSet) -> VertexSet {
    SubgraphAnalyzer::new(g).articulation_points(s.as_slice())
}

pub fn set_neighborhood(g: &Graph, s: &VertexSet) -> VertexSet {
    SubgraphAnalyzer::new(g).set_neighborhood(s.as_slice())
}

pub fn common_component_neighborhood(g: &Graph, s: &VertexSet) -> VertexSet {
    SubgraphAnalyzer::new(g).common_component_neighborhood(s.as_slice())
}
