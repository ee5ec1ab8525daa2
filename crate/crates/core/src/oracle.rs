//! Exhaustive ground truth for small graphs, a packing checker, and a greedy
//! baseline.

use std::collections::HashMap;
use std::fmt;

use crate::dp::{Triangle, TrianglePacking};
use crate::error::{Error, Result};
use crate::graph::{AdjacencyGraph, CliqueArrangement, VertexId};

pub const DEFAULT_GUARD: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub count: usize,
    pub witness: TrianglePacking,
    /// Search nodes visited.
    pub explored: u64,
}

/// [`brute_force_max_packing_with_guard`] with [`DEFAULT_GUARD`].
pub fn brute_force_max_packing(graph: &AdjacencyGraph) -> Result<OracleResult> {
    brute_force_max_packing_with_guard(graph, DEFAULT_GUARD)
}

/// Exact maximum triangle packing by branch and bound.
///
/// Branches on the lowest vertex that still lies in an available triangle:
/// either that vertex stays uncovered, or one of its triangles is taken.
/// A branch is cut when `count + ⌊available/3⌋ ≤ best`.
pub fn brute_force_max_packing_with_guard(
    graph: &AdjacencyGraph,
    guard: usize,
) -> Result<OracleResult> {
    let n = graph.vertex_count();
    if n > guard || n > 64 {
        return Err(Error::OracleGuard {
            n,
            guard: guard.min(64),
        });
    }
    let mut triangles: Vec<u64> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !graph.adjacent(VertexId(a), VertexId(b)) {
                continue;
            }
            for c in b + 1..n {
                if graph.adjacent(VertexId(a), VertexId(c))
                    && graph.adjacent(VertexId(b), VertexId(c))
                {
                    triangles.push(1 << a | 1 << b | 1 << c);
                }
            }
        }
    }
    let mut search = Search {
        triangles: &triangles,
        best: Vec::new(),
        current: Vec::new(),
        explored: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.run(all);
    let witness = search
        .best
        .iter()
        .map(|&mask| {
            let vs: Vec<VertexId> = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(VertexId)
                .collect();
            Triangle::new(vs[0], vs[1], vs[2]).expect("distinct bits")
        })
        .collect::<TrianglePacking>();
    Ok(OracleResult {
        count: witness.len(),
        witness,
        explored: search.explored,
    })
}

struct Search<'a> {
    triangles: &'a [u64],
    best: Vec<u64>,
    current: Vec<u64>,
    explored: u64,
}

impl Search<'_> {
    fn run(&mut self, available: u64) {
        self.explored += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if self.current.len() + (available.count_ones() as usize) / 3 <= self.best.len() {
            return;
        }
        let live = self.triangles.iter().filter(|&&t| t & available == t);
        let Some(pivot) = live.clone().map(|&t| t.trailing_zeros()).min() else {
            return;
        };
        let bit = 1u64 << pivot;
        let mine: Vec<u64> = live.filter(|&&t| t & bit != 0).copied().collect();
        for t in mine {
            self.current.push(t);
            self.run(available & !t);
            self.current.pop();
        }
        self.run(available & !bit);
    }
}

/// A reason a packing is invalid, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PackingViolation {
    VertexOutOfRange {
        vertex: VertexId,
    },
    NotAdjacent {
        triangle: Triangle,
        u: VertexId,
        v: VertexId,
    },
    SharedVertex {
        vertex: VertexId,
    },
}

impl fmt::Display for PackingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackingViolation::VertexOutOfRange { vertex } => write!(f, "unknown vertex {vertex}"),
            PackingViolation::NotAdjacent { u, v, .. } => write!(f, "{u} and {v} are not adjacent"),
            PackingViolation::SharedVertex { vertex } => {
                write!(f, "vertex {vertex} is in more than one triangle")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PackingReport {
    pub violations: Vec<PackingViolation>,
}

impl PackingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks pairwise adjacency inside each triangle and disjointness across
/// triangles.
pub fn verify_packing(graph: &AdjacencyGraph, packing: &TrianglePacking) -> PackingReport {
    let n = graph.vertex_count();
    let mut violations = Vec::new();
    let mut uses: HashMap<VertexId, usize> = HashMap::new();
    for t in packing.triangles() {
        let [a, b, c] = t.vertices();
        let out: Vec<VertexId> = [a, b, c].into_iter().filter(|v| v.0 >= n).collect();
        if !out.is_empty() {
            violations.extend(
                out.into_iter()
                    .map(|vertex| PackingViolation::VertexOutOfRange { vertex }),
            );
        } else {
            for (u, v) in [(a, b), (a, c), (b, c)] {
                if !graph.adjacent(u, v) {
                    violations.push(PackingViolation::NotAdjacent { triangle: *t, u, v });
                }
            }
        }
        for v in [a, b, c] {
            *uses.entry(v).or_default() += 1;
        }
    }
    let mut shared: Vec<VertexId> = uses
        .into_iter()
        .filter(|&(_, k)| k > 1)
        .map(|(v, _)| v)
        .collect();
    shared.sort();
    violations.extend(
        shared
            .into_iter()
            .map(|vertex| PackingViolation::SharedVertex { vertex }),
    );
    PackingReport { violations }
}

/// Left-to-right greedy: inside each clique, uncovered members are taken in
/// ascending order three at a time. The result is maximal but not
/// necessarily maximum.
pub fn greedy_maximal_packing(
    graph: &AdjacencyGraph,
    arrangement: &CliqueArrangement,
) -> TrianglePacking {
    let mut covered = vec![false; graph.vertex_count()];
    let mut triangles = Vec::new();
    for c in arrangement.cliques() {
        let free: Vec<VertexId> = c
            .members()
            .iter()
            .copied()
            .filter(|v| !covered[v.0])
            .collect();
        for chunk in free.chunks_exact(3) {
            for v in chunk {
                covered[v.0] = true;
            }
            triangles.push(
                Triangle::new(chunk[0], chunk[1], chunk[2]).expect("clique members are distinct"),
            );
        }
    }
    TrianglePacking::new(triangles)
}
