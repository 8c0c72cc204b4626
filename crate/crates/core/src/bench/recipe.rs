//! Deterministic graph families for tests and benchmarks.
//!
//! `gnp` instances are reproducible across implementations: the generator is
//! xoshiro256** seeded from the 64-bit seed through SplitMix64 (the reference
//! seeding of xoshiro). Candidate edges `(u, v)` with `u < v` are visited in
//! lexicographic order; each consumes one 64-bit output `x` and is kept iff
//! `(x >> 11) * 2^-53 < p`.

use std::fmt;
use std::str::FromStr;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// Vertex 0 joined to `n - 1` leaves.
    Star,
    Gnp,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Gnp => "gnp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphRecipe {
    pub family: Family,
    pub n: usize,
    /// Edge probability, used by `gnp` only.
    pub p: f64,
    pub seed: u64,
}

impl GraphRecipe {
    pub fn new(family: Family, n: usize) -> Self {
        GraphRecipe {
            family,
            n,
            p: 0.0,
            seed: 0,
        }
    }

    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        GraphRecipe {
            family: Family::Gnp,
            n,
            p,
            seed,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        generate_graph(self)
    }
}

impl fmt::Display for GraphRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gnp => write!(f, "gnp:{}:{}:{}", self.n, self.p, self.seed),
            family => write!(f, "{}:{}", family.as_str(), self.n),
        }
    }
}

/// Parses `family:n` or `gnp:n:p[:seed]` (seed defaults to 0).
impl FromStr for GraphRecipe {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let invalid = |why: &str| Error::InvalidRecipe(format!("'{text}': {why}"));
        let parts: Vec<&str> = text.split(':').collect();
        let family = match parts[0] {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "gnp" => Family::Gnp,
            _ => return Err(invalid("unknown family")),
        };
        let n: usize = parts
            .get(1)
            .ok_or_else(|| invalid("missing vertex count"))?
            .parse()
            .map_err(|_| invalid("vertex count is not a non-negative integer"))?;
        let recipe = match (family, &parts[2..]) {
            (Family::Gnp, [p]) | (Family::Gnp, [p, _]) => {
                let p: f64 = p
                    .parse()
                    .map_err(|_| invalid("probability is not a number"))?;
                let seed = match parts.get(3) {
                    Some(s) => s
                        .parse()
                        .map_err(|_| invalid("seed is not a 64-bit integer"))?,
                    None => 0,
                };
                GraphRecipe::gnp(n, p, seed)
            }
            (Family::Gnp, _) => return Err(invalid("expected gnp:n:p[:seed]")),
            (family, []) => GraphRecipe::new(family, n),
            _ => return Err(invalid("only gnp takes extra parameters")),
        };
        recipe.validate()?;
        Ok(recipe)
    }
}

impl GraphRecipe {
    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidRecipe(format!(
                "p = {} is outside [0, 1]",
                self.p
            )));
        }
        if self.n > VertexId::MAX as usize {
            return Err(Error::InvalidRecipe(format!("n = {} is too large", self.n)));
        }
        Ok(())
    }
}

pub fn generate_graph(recipe: &GraphRecipe) -> Result<Graph> {
    recipe.validate()?;
    let n = recipe.n;
    let last = n as VertexId;
    let edges: Vec<(VertexId, VertexId)> = match recipe.family {
        Family::Path => (1..last).map(|v| (v - 1, v)).collect(),
        Family::Cycle => match n {
            0 | 1 => Vec::new(),
            2 => vec![(0, 1)],
            _ => (0..last).map(|v| (v, (v + 1) % last)).collect(),
        },
        Family::Complete => (0..last)
            .flat_map(|u| (u + 1..last).map(move |v| (u, v)))
            .collect(),
        Family::Star => (1..last).map(|v| (0, v)).collect(),
        Family::Gnp => {
            let mut rng = Xoshiro256StarStar::seed_from_u64(recipe.seed);
            let mut edges = Vec::new();
            for u in 0..last {
                for v in u + 1..last {
                    let x = rng.next_u64();
                    if ((x >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < recipe.p {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
    };
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        let g = generate_graph(&GraphRecipe::new(Family::Path, 5)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        let g = generate_graph(&GraphRecipe::new(Family::Complete, 4)).unwrap();
        assert_eq!(g.edge_count(), 6);
        let g = generate_graph(&GraphRecipe::new(Family::Cycle, 6)).unwrap();
        assert_eq!((g.edge_count(), g.max_degree()), (6, 2));
        let g = generate_graph(&GraphRecipe::new(Family::Star, 5)).unwrap();
        assert_eq!((g.edge_count(), g.max_degree()), (4, 4));
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = generate_graph(&GraphRecipe::gnp(8, 0.4, 7)).unwrap();
        let b = generate_graph(&GraphRecipe::gnp(8, 0.4, 7)).unwrap();
        assert_eq!(a, b);
        let c = generate_graph(&GraphRecipe::gnp(8, 0.4, 8)).unwrap();
        assert_ne!(a.to_edge_list(), c.to_edge_list());
        assert_eq!(
            generate_graph(&GraphRecipe::gnp(6, 0.0, 1))
                .unwrap()
                .edge_count(),
            0
        );
        assert_eq!(
            generate_graph(&GraphRecipe::gnp(6, 1.0, 1))
                .unwrap()
                .edge_count(),
            15
        );
    }

    #[test]
    fn gnp_reference_stream() {
        // First outputs of xoshiro256** seeded through SplitMix64(0); the
        // SplitMix64 state words for seed 0 are the published constants.
        let mut rng = Xoshiro256StarStar::seed_from_u64(0);
        let state = [
            0xe220a8397b1dcdafu64,
            0x6e789e6aa1b965f4,
            0x06c45d188009454f,
            0xf88bb8a8724c81ec,
        ];
        let expected_first = state[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        assert_eq!(rng.next_u64(), expected_first);
    }

    #[test]
    fn recipe_strings() {
        let r: GraphRecipe = "gnp:8:0.4:7".parse().unwrap();
        assert_eq!(r, GraphRecipe::gnp(8, 0.4, 7));
        assert_eq!(r.to_string(), "gnp:8:0.4:7");
        let r: GraphRecipe = "path:10".parse().unwrap();
        assert_eq!(r, GraphRecipe::new(Family::Path, 10));
        assert_eq!("gnp:5:0.5".parse::<GraphRecipe>().unwrap().seed, 0);
        for bad in [
            "tree:4",
            "path",
            "path:x",
            "path:4:0.5",
            "gnp:4",
            "gnp:4:1.5:1",
            "gnp:4:0.5:-1",
        ] {
            assert!(
                matches!(bad.parse::<GraphRecipe>(), Err(Error::InvalidRecipe(_))),
                "{bad}"
            );
        }
    }
}
