//! Breadth-first reverse search over the supergraph of connected k-sets.
//!
//! The engine is parameterized by a dictionary implementation and by an
//! [`Expansion`], the local move that generates supergraph neighbors of a
//! solution. Solutions are emitted when dequeued and expanded lazily on the
//! following call, so the work between two consecutive outputs is exactly one
//! expansion plus its dictionary probes.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;
use std::time::Duration;

use crate::dictionary::{
    Dictionary, DictionaryKind, HashDictionary, OrderedDictionary, SolutionKey,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::irwd::ConnectedExchange;
use crate::oracle;
use crate::rwd::CommonNeighborhoodExchange;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Exchange a non-articulation vertex for any neighbor of the remainder.
    Irwd,
    /// Exchange any vertex for a common neighbor of the remainder's components.
    Rwd,
    /// Test every k-subset.
    Brute,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Irwd, Algorithm::Rwd, Algorithm::Brute];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Irwd => "irwd",
            Algorithm::Rwd => "rwd",
            Algorithm::Brute => "brute",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "irwd" => Ok(Algorithm::Irwd),
            "rwd" => Ok(Algorithm::Rwd),
            "brute" => Ok(Algorithm::Brute),
            _ => Err(Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumOptions {
    pub dictionary: DictionaryKind,
    /// Abort with [`Error::DictionaryFull`] once the dictionary holds this
    /// many solutions.
    pub max_entries: Option<usize>,
    /// Stop after this many solutions have been emitted.
    pub max_solutions: Option<u64>,
    /// Accumulate per-phase timings in [`EnumerationStats`].
    pub timed: bool,
    /// Vertex cap for the brute-force algorithm.
    pub oracle_cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            dictionary: DictionaryKind::Hash,
            max_entries: None,
            max_solutions: None,
            timed: false,
            oracle_cap: oracle::DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EnumerationStats {
    pub solutions: u64,
    /// Dictionary membership probes, one per generated candidate.
    pub dict_lookups: u64,
    pub dict_entries: usize,
    pub articulation_time: Duration,
    pub neighborhood_time: Duration,
    pub common_neighborhood_time: Duration,
    /// Enumeration stopped at `max_solutions` before exhausting the output.
    pub truncated: bool,
}

/// Work queue plus dictionary.
///
/// Every queued solution is in the dictionary, so
/// `emitted + queue_len <= dictionary_len` holds throughout.
#[derive(Debug)]
pub struct EnumerationState<D> {
    queue: VecDeque<SolutionKey>,
    dictionary: D,
    k: usize,
    emitted: u64,
    lookups: u64,
    max_entries: Option<usize>,
}

impl<D: Dictionary> EnumerationState<D> {
    pub fn new(k: usize, max_entries: Option<usize>) -> Self {
        EnumerationState {
            queue: VecDeque::new(),
            dictionary: D::default(),
            k,
            emitted: 0,
            lookups: 0,
            max_entries,
        }
    }

    /// Records `candidate` and queues it if it is new. Returns whether it was.
    pub fn offer(&mut self, candidate: &[VertexId]) -> Result<bool> {
        debug_assert_eq!(candidate.len(), self.k);
        self.lookups += 1;
        if self.dictionary.contains(candidate) {
            return Ok(false);
        }
        if let Some(cap) = self.max_entries {
            if self.dictionary.len() >= cap {
                return Err(Error::DictionaryFull { cap });
            }
        }
        let key: SolutionKey = Rc::from(candidate);
        self.dictionary.insert(Rc::clone(&key));
        self.queue.push_back(key);
        Ok(true)
    }

    pub fn pop(&mut self) -> Option<SolutionKey> {
        let s = self.queue.pop_front()?;
        self.emitted += 1;
        Some(s)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn lookups(&self) -> u64 {
        self.lookups
    }

    pub fn queue_len(&self) -> usize {
        self.queue.len()
    }

    pub fn dictionary_len(&self) -> usize {
        self.dictionary.len()
    }

    pub fn queued(&self) -> impl Iterator<Item = &[VertexId]> {
        self.queue.iter().map(|s| &s[..])
    }

    pub fn dictionary(&self) -> &D {
        &self.dictionary
    }
}

/// A supergraph neighbor generator.
pub trait Expansion {
    /// Passes every neighbor of the connected k-set `s` to `offer`. The same
    /// neighbor may be produced more than once.
    fn expand(
        &mut self,
        s: &[VertexId],
        stats: &mut EnumerationStats,
        timed: bool,
        offer: &mut dyn FnMut(&[VertexId]) -> Result<()>,
    ) -> Result<()>;
}

/// First `k` vertices in breadth-first order from the smallest vertex of
/// `component`, sorted.
pub fn initial_solution(g: &Graph, component: &VertexSet, k: usize) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::InvalidOrder);
    }
    if component.len() < k {
        return Err(Error::ComponentTooSmall {
            size: component.len(),
            k,
        });
    }
    let start = component.as_slice()[0];
    let mut picked = vec![start];
    let mut taken: HashSet<VertexId> = HashSet::from([start]);
    let mut head = 0;
    while picked.len() < k {
        let u = picked[head];
        head += 1;
        for &w in g.neighbors(u) {
            if picked.len() == k {
                break;
            }
            if taken.insert(w) {
                picked.push(w);
            }
        }
    }
    Ok(VertexSet::new(picked))
}

/// Reverse-search enumerator over all components of a graph.
pub struct ReverseSearch<'g, D, X> {
    graph: &'g Graph,
    k: usize,
    components: Vec<VertexSet>,
    next_component: usize,
    next_vertex: VertexId,
    state: EnumerationState<D>,
    expansion: X,
    pending: Option<SolutionKey>,
    stats: EnumerationStats,
    timed: bool,
    max_solutions: Option<u64>,
}

impl<'g, D: Dictionary, X: Expansion> ReverseSearch<'g, D, X> {
    pub fn new(graph: &'g Graph, k: usize, expansion: X, options: &EnumOptions) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidOrder);
        }
        let components = if k == 1 {
            Vec::new()
        } else {
            graph.connected_components()
        };
        Ok(ReverseSearch {
            graph,
            k,
            components,
            next_component: 0,
            next_vertex: 0,
            state: EnumerationState::new(k, options.max_entries),
            expansion,
            pending: None,
            stats: EnumerationStats::default(),
            timed: options.timed,
            max_solutions: options.max_solutions,
        })
    }

    pub fn state(&self) -> &EnumerationState<D> {
        &self.state
    }

    /// Statistics so far; `solutions` counts emitted solutions.
    pub fn stats(&self) -> EnumerationStats {
        let mut stats = self.stats.clone();
        stats.dict_lookups = self.state.lookups;
        stats.dict_entries = self.state.dictionary_len();
        stats
    }

    /// Produces the next solution in traversal order.
    pub fn next_solution(&mut self) -> Result<Option<SolutionKey>> {
        if let Some(limit) = self.max_solutions {
            if self.stats.solutions >= limit {
                if self.k > 1 {
                    self.expand_pending()?;
                }
                self.stats.truncated = self.has_more();
                return Ok(None);
            }
        }
        let next = if self.k == 1 {
            self.next_single_vertex()
        } else {
            self.next_from_queue()?
        };
        if next.is_some() {
            self.stats.solutions += 1;
        }
        Ok(next)
    }

    fn has_more(&self) -> bool {
        if self.k == 1 {
            return (self.next_vertex as usize) < self.graph.vertex_count();
        }
        self.state.queue_len() > 0
            || self.components[self.next_component..]
                .iter()
                .any(|c| c.len() >= self.k)
    }

    fn next_single_vertex(&mut self) -> Option<SolutionKey> {
        if (self.next_vertex as usize) >= self.graph.vertex_count() {
            return None;
        }
        let v = self.next_vertex;
        self.next_vertex += 1;
        Some(Rc::from(vec![v]))
    }

    fn expand_pending(&mut self) -> Result<()> {
        if let Some(s) = self.pending.take() {
            let ReverseSearch {
                state,
                expansion,
                stats,
                timed,
                ..
            } = self;
            expansion.expand(&s, stats, *timed, &mut |candidate| {
                state.offer(candidate).map(drop)
            })?;
        }
        Ok(())
    }

    fn next_from_queue(&mut self) -> Result<Option<SolutionKey>> {
        self.expand_pending()?;
        loop {
            if let Some(s) = self.state.pop() {
                self.pending = Some(Rc::clone(&s));
                return Ok(Some(s));
            }
            let Some(component) = self.components.get(self.next_component) else {
                return Ok(None);
            };
            self.next_component += 1;
            if component.len() < self.k {
                continue;
            }
            let seed = initial_solution(self.graph, component, self.k)?;
            self.state.offer(seed.as_slice())?;
        }
    }

    /// Drives the enumeration, passing each solution to `sink` until it
    /// returns `false` or the output is exhausted.
    pub fn run<F: FnMut(&[VertexId]) -> bool>(mut self, mut sink: F) -> Result<EnumerationStats> {
        while let Some(s) = self.next_solution()? {
            if !sink(&s) {
                self.stats.truncated = true;
                break;
            }
        }
        Ok(self.stats())
    }
}

fn run_with<X: Expansion, F: FnMut(&[VertexId]) -> bool>(
    g: &Graph,
    k: usize,
    expansion: X,
    options: &EnumOptions,
    sink: F,
) -> Result<EnumerationStats> {
    match options.dictionary {
        DictionaryKind::Hash => {
            ReverseSearch::<HashDictionary, X>::new(g, k, expansion, options)?.run(sink)
        }
        DictionaryKind::Ordered => {
            ReverseSearch::<OrderedDictionary, X>::new(g, k, expansion, options)?.run(sink)
        }
    }
}

/// Enumerates every connected induced k-subgraph of `g` with the chosen
/// algorithm, passing canonical sorted member lists to `sink`.
pub fn enumerate<F: FnMut(&[VertexId])>(
    g: &Graph,
    k: usize,
    algorithm: Algorithm,
    options: &EnumOptions,
    mut sink: F,
) -> Result<EnumerationStats> {
    enumerate_while(g, k, algorithm, options, |s| {
        sink(s);
        true
    })
}

/// Like [`enumerate`], but stops as soon as `sink` returns `false`; the
/// returned statistics are then marked truncated.
pub fn enumerate_while<F: FnMut(&[VertexId]) -> bool>(
    g: &Graph,
    k: usize,
    algorithm: Algorithm,
    options: &EnumOptions,
    mut sink: F,
) -> Result<EnumerationStats> {
    match algorithm {
        Algorithm::Irwd => run_with(g, k, ConnectedExchange::new(g), options, sink),
        Algorithm::Rwd => run_with(g, k, CommonNeighborhoodExchange::new(g), options, sink),
        Algorithm::Brute => {
            if k == 0 {
                return Err(Error::InvalidOrder);
            }
            let mut stats = EnumerationStats::default();
            let limit = options.max_solutions.unwrap_or(u64::MAX);
            let complete = oracle::for_each_connected_subset(g, k, options.oracle_cap, |s| {
                if stats.solutions >= limit {
                    return false;
                }
                stats.solutions += 1;
                sink(s)
            })?;
            stats.truncated = !complete;
            Ok(stats)
        }
    }
}

/// Enumerates with the connected-intersection neighborhood operator.
pub fn enumerate_irwd<F: FnMut(&[VertexId])>(g: &Graph, k: usize, sink: F) -> Result<u64> {
    enumerate(g, k, Algorithm::Irwd, &EnumOptions::default(), sink).map(|s| s.solutions)
}

/// Enumerates with the baseline common-neighborhood operator.
pub fn enumerate_rwd<F: FnMut(&[VertexId])>(g: &Graph, k: usize, sink: F) -> Result<u64> {
    enumerate(g, k, Algorithm::Rwd, &EnumOptions::default(), sink).map(|s| s.solutions)
}

/// Collects all solutions as vertex sets, in traversal order.
pub fn collect(
    g: &Graph,
    k: usize,
    algorithm: Algorithm,
    options: &EnumOptions,
) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    enumerate(g, k, algorithm, options, |s| {
        out.push(VertexSet::from_sorted(s.to_vec()))
    })?;
    Ok(out)
}
