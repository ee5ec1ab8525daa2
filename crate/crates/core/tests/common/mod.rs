#![allow(dead_code)]

use tripack::gen::{generate, GenParams, GenSpec, Model};
use tripack::IntervalInstance;

pub struct Case {
    pub label: String,
    pub instance: IntervalInstance,
}

/// `count` uniform-random instances with n cycling through 3..=12.
pub fn uniform_small(count: u64) -> Vec<Case> {
    (0..count)
        .map(|seed| {
            let n = 3 + (seed % 10) as usize;
            let spec = GenSpec::new(Model::UniformRandom, n, seed);
            Case {
                label: format!("uniform-random n={n} seed={seed}"),
                instance: generate(&spec).unwrap(),
            }
        })
        .collect()
}

/// `count` valid instances of a structured family, all with n ≤ 12.
pub fn family_small(model: Model, count: usize) -> Vec<Case> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        let (n, params) = match model {
            Model::DisjointTriangles => (3 * (1 + seed as usize % 4), GenParams::default()),
            Model::NestedCliques => (
                3 + (seed % 10) as usize,
                GenParams {
                    blocks: Some(1 + seed as usize % 4),
                    shared: Some((seed / 4) as usize % 3),
                    ..Default::default()
                },
            ),
            Model::UnitInterval => (
                3 + (seed % 10) as usize,
                GenParams {
                    length: Some(1 + seed % 4),
                    ..Default::default()
                },
            ),
            _ => (1 + (seed % 12) as usize, GenParams::default()),
        };
        let spec = GenSpec::new(model, n, seed).with_params(params.clone());
        if let Ok(instance) = generate(&spec) {
            out.push(Case {
                label: format!("{model} n={n} seed={seed} {params:?}"),
                instance,
            });
        }
        seed += 1;
    }
    out
}

/// Larger instances of every family, beyond the oracle's reach.
pub fn larger() -> Vec<Case> {
    let mut out = Vec::new();
    for model in Model::ALL {
        for (i, n) in [30usize, 60, 90, 150].into_iter().enumerate() {
            let spec = GenSpec::new(model, n, 1000 + i as u64);
            out.push(Case {
                label: format!("{model} n={n}"),
                instance: generate(&spec).unwrap(),
            });
        }
    }
    out
}
