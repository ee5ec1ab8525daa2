//! Seeded instance generators.
//!
//! Randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). A draw below `bound` is
//! `(next_u64() * bound) >> 64` computed in 128 bits, and shuffles are
//! Fisher-Yates from the last index down. Together these pin every instance
//! to its `GenSpec`.
//!
//! Vertices are named `v0 .. v{n-1}` in output order.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::{Endpoint, IntervalInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    UniformRandom,
    UnitInterval,
    NestedCliques,
    DisjointTriangles,
    SingleClique,
}

impl Model {
    pub const ALL: [Model; 5] = [
        Model::UniformRandom,
        Model::UnitInterval,
        Model::NestedCliques,
        Model::DisjointTriangles,
        Model::SingleClique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::UniformRandom => "uniform-random",
            Model::UnitInterval => "unit-interval",
            Model::NestedCliques => "nested-cliques",
            Model::DisjointTriangles => "disjoint-triangles",
            Model::SingleClique => "single-clique",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown model `{s}`")))
    }
}

/// Model knobs. `None` picks the model's default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenParams {
    /// Endpoint range `[0, range]` for uniform-random and unit-interval
    /// left endpoints. Default `n`.
    pub range: Option<u64>,
    /// Interval length for unit-interval. Default 3.
    pub length: Option<u64>,
    /// Number of blocks for nested-cliques. Default 4 (capped at `n`).
    pub blocks: Option<usize>,
    /// Vertices shared by consecutive blocks in nested-cliques. Default
    /// `n / (3 * blocks)`.
    pub shared: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub seed: u64,
    pub params: GenParams,
}

impl GenSpec {
    pub fn new(model: Model, n: usize, seed: u64) -> Self {
        GenSpec {
            model,
            n,
            seed,
            params: GenParams::default(),
        }
    }

    pub fn with_params(mut self, params: GenParams) -> Self {
        self.params = params;
        self
    }
}

struct Rng(Xoshiro256PlusPlus);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    fn below(&mut self, bound: u64) -> u64 {
        ((self.0.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Uniform in `0..=max`.
    fn upto(&mut self, max: u64) -> u64 {
        if max == u64::MAX {
            self.0.next_u64()
        } else {
            self.below(max + 1)
        }
    }

    fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

fn int(v: i64) -> Endpoint {
    Ratio::from_integer(v)
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidSpec(format!("value {v} exceeds endpoint range")))
}

/// Builds the instance described by `spec`. Same spec, same instance.
pub fn generate(spec: &GenSpec) -> Result<IntervalInstance> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let p = &spec.params;
    let mut rng = Rng::new(spec.seed);
    let mut spans: Vec<(Endpoint, Endpoint)> = Vec::with_capacity(n);
    match spec.model {
        Model::UniformRandom => {
            let range = p.range.unwrap_or(n as u64);
            to_i64(range)?;
            for _ in 0..n {
                let a = rng.upto(range) as i64;
                let b = rng.upto(range) as i64;
                spans.push((int(a.min(b)), int(a.max(b))));
            }
        }
        Model::UnitInterval => {
            let range = p.range.unwrap_or(n as u64);
            let len = p.length.unwrap_or(3);
            to_i64(
                range
                    .checked_add(len)
                    .ok_or_else(|| Error::InvalidSpec("range + length overflows".into()))?,
            )?;
            for _ in 0..n {
                let lo = rng.upto(range) as i64;
                spans.push((int(lo), int(lo + len as i64)));
            }
        }
        Model::NestedCliques => spans = nested_cliques(n, p, &mut rng)?,
        Model::DisjointTriangles => {
            if !n.is_multiple_of(3) {
                return Err(Error::InvalidSpec(format!(
                    "disjoint-triangles needs n divisible by 3, got {n}"
                )));
            }
            // Group g lives in [10g, 10g + 4]; all three members contain 10g + 2.
            for g in 0..(n / 3) as i64 {
                for _ in 0..3 {
                    let lo = 10 * g + rng.upto(2) as i64;
                    let hi = 10 * g + 2 + rng.upto(2) as i64;
                    spans.push((int(lo), int(hi)));
                }
            }
        }
        Model::SingleClique => {
            let reach = p.range.unwrap_or(n as u64);
            to_i64(reach)?;
            for _ in 0..n {
                let lo = -(rng.upto(reach) as i64);
                let hi = rng.upto(reach) as i64;
                spans.push((int(lo), int(hi)));
            }
        }
    }
    rng.shuffle(&mut spans);
    IntervalInstance::new(
        spans
            .into_iter()
            .enumerate()
            .map(|(i, (lo, hi))| (format!("v{i}"), lo, hi)),
    )
}

/// `blocks` cliques in a chain. Block `i` sits at `8i`; its private members
/// are short intervals around that point and the members shared with block
/// `i+1` span `[8i, 8i+8]`, so clique `i` is
/// `shared(i-1) ∪ private(i) ∪ shared(i)`.
fn nested_cliques(n: usize, p: &GenParams, rng: &mut Rng) -> Result<Vec<(Endpoint, Endpoint)>> {
    let blocks = p.blocks.unwrap_or(4).min(n);
    if blocks == 0 {
        return Err(Error::InvalidSpec(
            "nested-cliques needs at least one block".into(),
        ));
    }
    let shared = p.shared.unwrap_or(n / (3 * blocks));
    let shared_total = shared * (blocks - 1);
    if shared_total + blocks > n {
        return Err(Error::InvalidSpec(format!(
            "nested-cliques with {blocks} blocks and {shared} shared per boundary needs n >= {}",
            shared_total + blocks
        )));
    }
    let private_total = n - shared_total;
    let mut spans = Vec::with_capacity(n);
    for b in 0..blocks {
        let at = 8 * b as i64;
        let privates = private_total / blocks + usize::from(b < private_total % blocks);
        for _ in 0..privates {
            let lo = at - rng.upto(3) as i64;
            let hi = at + rng.upto(3) as i64;
            spans.push((int(lo), int(hi)));
        }
        if b + 1 < blocks {
            for _ in 0..shared {
                spans.push((int(at), int(at + 8)));
            }
        }
    }
    Ok(spans)
}
