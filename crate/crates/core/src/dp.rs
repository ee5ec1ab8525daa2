//! Dynamic program over a consecutive clique arrangement.
//!
//! For clique `C_i` and a set `S ⊆ C_i` with `|S| ≤ 2`, the table entry
//! `f_i(S)` is the largest number of vertex-disjoint triangles in the prefix
//! graph `G_i` (induced by `C_1 ∪ .. ∪ C_i`) that cover every vertex of `C_i`
//! except those of `S`. Unreachable states are [`DpValue::Infeasible`] rather
//! than zero, so they never win a maximum.
//!
//! Moving from `C_i` to `C_{i+1}`, a state `S` combines with a predecessor
//! `S' ⊆ C_i` when `S ∩ C_i ⊆ S'`. The leftover old vertices
//! `S'' = (S' ∩ C_{i+1}) \ S` are re-covered together with the fresh vertices
//! `C_{i+1} \ (C_i ∪ S)`; that pool must split into whole triangles.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{CliqueArrangement, MaximalClique, VertexId};

/// A set of at most two uncovered vertices of one clique, kept sorted.
///
/// Ordering is lexicographic on the sorted tuple: `∅ < (a) < (a,b) < (a,c) < (b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryState {
    len: u8,
    ids: [VertexId; 2],
}

impl BoundaryState {
    pub const EMPTY: BoundaryState = BoundaryState {
        len: 0,
        ids: [VertexId(0); 2],
    };

    pub fn single(v: VertexId) -> Self {
        BoundaryState {
            len: 1,
            ids: [v, VertexId(0)],
        }
    }

    /// `None` if `u == v`.
    pub fn pair(u: VertexId, v: VertexId) -> Option<Self> {
        match u.cmp(&v) {
            Ordering::Less => Some(BoundaryState {
                len: 2,
                ids: [u, v],
            }),
            Ordering::Greater => Some(BoundaryState {
                len: 2,
                ids: [v, u],
            }),
            Ordering::Equal => None,
        }
    }

    /// `None` for more than two or repeated vertices.
    pub fn from_slice(vs: &[VertexId]) -> Option<Self> {
        match *vs {
            [] => Some(Self::EMPTY),
            [v] => Some(Self::single(v)),
            [u, v] => Self::pair(u, v),
            _ => None,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.ids[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices().contains(&v)
    }
}

impl Ord for BoundaryState {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for BoundaryState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoundaryState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Three distinct vertices in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([VertexId; 3]);

impl Triangle {
    /// `None` if the vertices are not distinct.
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Option<Self> {
        let mut vs = [a, b, c];
        vs.sort();
        (vs[0] != vs[1] && vs[1] != vs[2]).then_some(Triangle(vs))
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }
}

/// Vertex-disjoint triangles, kept in ascending order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrianglePacking {
    triangles: Vec<Triangle>,
}

impl TrianglePacking {
    pub fn new(mut triangles: Vec<Triangle>) -> Self {
        triangles.sort();
        TrianglePacking { triangles }
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Covered vertices, ascending, with repeats if the packing overlaps.
    pub fn covered(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.triangles.iter().flat_map(|t| t.0).collect();
        vs.sort();
        vs
    }
}

impl FromIterator<Triangle> for TrianglePacking {
    fn from_iter<I: IntoIterator<Item = Triangle>>(iter: I) -> Self {
        TrianglePacking::new(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DpValue {
    Infeasible,
    Feasible(u32),
}

impl DpValue {
    pub fn count(self) -> Option<u32> {
        match self {
            DpValue::Infeasible => None,
            DpValue::Feasible(c) => Some(c),
        }
    }

    pub fn is_feasible(self) -> bool {
        matches!(self, DpValue::Feasible(_))
    }
}

/// How a feasible entry was reached. The triangles formed at the step are
/// not stored; they are recomputed from the two cliques, the state and
/// `predecessor` (see [`formed_triangles`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Backpointer {
    /// `None` in the first table.
    pub predecessor: Option<BoundaryState>,
    /// Triangles formed at this step.
    pub formed: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpEntry {
    pub value: DpValue,
    pub back: Option<Backpointer>,
}

impl DpEntry {
    const INFEASIBLE: DpEntry = DpEntry {
        value: DpValue::Infeasible,
        back: None,
    };
}

/// `f_i` for one clique. Entries are stored in [`enumerate_states`] order.
#[derive(Debug, Clone)]
pub struct DpTable {
    pub index: usize,
    clique: MaximalClique,
    entries: Vec<DpEntry>,
}

impl DpTable {
    pub fn clique(&self) -> &MaximalClique {
        &self.clique
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (BoundaryState, &DpEntry)> + '_ {
        enumerate_states(&self.clique)
            .into_iter()
            .zip(&self.entries)
    }

    /// `None` if `state` is not a subset of this table's clique.
    pub fn get(&self, state: &BoundaryState) -> Option<&DpEntry> {
        let positions: Option<Vec<usize>> = state
            .vertices()
            .iter()
            .map(|&v| self.clique.position(v))
            .collect();
        Some(&self.entries[state_index(self.clique.len(), &positions?)])
    }

    pub fn value(&self, state: &BoundaryState) -> Option<DpValue> {
        self.get(state).map(|e| e.value)
    }

    /// Best feasible entry; ties go to the lexicographically smallest state.
    pub fn best(&self) -> Option<(BoundaryState, u32)> {
        let mut best: Option<(BoundaryState, u32)> = None;
        for (state, entry) in self.entries() {
            if let Some(c) = entry.value.count() {
                if best.is_none_or(|(_, b)| c > b) {
                    best = Some((state, c));
                }
            }
        }
        best
    }
}

/// Index of a state, given the member positions of its vertices, in the
/// lexicographic enumeration of a clique of size `m`.
fn state_index(m: usize, positions: &[usize]) -> usize {
    // Block of position p is (p), (p,p+1), .., (p,m-1) and starts at
    // 1 + p*m - p*(p-1)/2.
    let start = |p: usize| 1 + p * m - p * p.saturating_sub(1) / 2;
    match *positions {
        [] => 0,
        [p] => start(p),
        [p, q] => {
            let (p, q) = if p < q { (p, q) } else { (q, p) };
            start(p) + (q - p)
        }
        _ => unreachable!("boundary states hold at most two vertices"),
    }
}

/// Number of states over a clique of size `m`: `1 + m + m(m-1)/2`.
pub fn state_count(m: usize) -> usize {
    1 + m + m * m.saturating_sub(1) / 2
}

/// All subsets of the clique with at most two members, in lexicographic order.
pub fn enumerate_states(clique: &MaximalClique) -> Vec<BoundaryState> {
    let members = clique.members();
    let mut out = Vec::with_capacity(state_count(members.len()));
    out.push(BoundaryState::EMPTY);
    for (i, &u) in members.iter().enumerate() {
        out.push(BoundaryState::single(u));
        for &v in &members[i + 1..] {
            out.push(BoundaryState {
                len: 2,
                ids: [u, v],
            });
        }
    }
    out
}

fn group_into_triangles(vs: &[VertexId]) -> Vec<Triangle> {
    debug_assert!(vs.len().is_multiple_of(3));
    vs.chunks_exact(3)
        .map(|c| Triangle([c[0], c[1], c[2]]))
        .collect()
}

/// Table for the first clique: states of size `|C_1| mod 3` hold
/// `⌊|C_1|/3⌋`, everything else is infeasible.
pub fn base_case(first: &MaximalClique) -> DpTable {
    let m = first.len();
    let uncovered = m % 3;
    let count = (m / 3) as u32;
    let entries = enumerate_states(first)
        .iter()
        .map(|s| {
            if s.len() == uncovered {
                DpEntry {
                    value: DpValue::Feasible(count),
                    back: Some(Backpointer {
                        predecessor: None,
                        formed: count,
                    }),
                }
            } else {
                DpEntry::INFEASIBLE
            }
        })
        .collect();
    DpTable {
        index: first.index,
        clique: first.clone(),
        entries,
    }
}

/// Predecessor states `S' ⊆ C_i`, `|S'| ≤ 2`, with `S ∩ C_i ⊆ S'`, in
/// lexicographic order. Since `S ⊆ C_{i+1}`, this is the same as requiring
/// `S ∩ C_i ⊆ S' ∩ C_{i+1}`.
pub fn admissible_predecessors(
    s: &BoundaryState,
    ci: &MaximalClique,
    cnext: &MaximalClique,
) -> Vec<BoundaryState> {
    debug_assert!(s.vertices().iter().all(|&v| cnext.contains(v)));
    let required: Vec<VertexId> = s
        .vertices()
        .iter()
        .copied()
        .filter(|&v| ci.contains(v))
        .collect();
    enumerate_states(ci)
        .into_iter()
        .filter(|sp| required.iter().all(|&v| sp.contains(v)))
        .collect()
}

/// The vertices re-covered at a step:
/// `(C_{i+1} \ (C_i ∪ S)) ∪ ((S' ∩ C_{i+1}) \ S)`, ascending.
pub fn recovered_pool(
    ci: &MaximalClique,
    cnext: &MaximalClique,
    s: &BoundaryState,
    sprime: &BoundaryState,
) -> Vec<VertexId> {
    cnext
        .members()
        .iter()
        .copied()
        .filter(|&v| !s.contains(v) && (!ci.contains(v) || sprime.contains(v)))
        .collect()
}

/// Number of triangles formed when stepping from `S'` to `S`, or `None` when
/// the re-covered pool does not split into whole triangles.
pub fn kappa(
    ci: &MaximalClique,
    cnext: &MaximalClique,
    s: &BoundaryState,
    sprime: &BoundaryState,
) -> Option<u32> {
    let pool = recovered_pool(ci, cnext, s, sprime).len();
    pool.is_multiple_of(3).then_some((pool / 3) as u32)
}

/// Triangles formed at a step: the re-covered pool in ascending order, cut
/// into consecutive triples.
pub fn formed_triangles(
    ci: &MaximalClique,
    cnext: &MaximalClique,
    s: &BoundaryState,
    sprime: &BoundaryState,
) -> Vec<Triangle> {
    group_into_triangles(&recovered_pool(ci, cnext, s, sprime))
}

/// Computes `f_{i+1}` from `f_i`.
///
/// Each state takes the best `f_i(S') + κ` over admissible predecessors with a
/// feasible value and an integral `κ`; ties go to the smallest `S'`.
pub fn transition(prev: &DpTable, ci: &MaximalClique, cnext: &MaximalClique) -> DpTable {
    debug_assert_eq!(prev.clique.members(), ci.members());
    let m = ci.len();
    let m_next = cnext.len();

    // Position in C_i of each member of C_{i+1}, if shared.
    let old_pos: Vec<Option<usize>> = cnext.members().iter().map(|&v| ci.position(v)).collect();
    let fresh = old_pos.iter().filter(|p| p.is_none()).count();
    let shared_prev: Vec<bool> = ci.members().iter().map(|&v| cnext.contains(v)).collect();

    // |S' ∩ C_{i+1}| for every predecessor, in state order.
    let mut overlap = Vec::with_capacity(prev.entries.len());
    overlap.push(0usize);
    for p in 0..m {
        overlap.push(shared_prev[p] as usize);
        for q in p + 1..m {
            overlap.push(shared_prev[p] as usize + shared_prev[q] as usize);
        }
    }
    let prev_values: Vec<Option<u32>> = prev.entries.iter().map(|e| e.value.count()).collect();
    let all_prev: Vec<usize> = (0..prev_values.len()).collect();
    let mut candidates: Vec<usize> = Vec::with_capacity(m + 1);

    let mut entries = Vec::with_capacity(state_count(m_next));
    let mut evaluate = |positions: &[usize]| {
        let olds: Vec<usize> = positions.iter().filter_map(|&q| old_pos[q]).collect();
        let fresh_left = fresh - (positions.len() - olds.len());
        let preds: &[usize] = match *olds.as_slice() {
            [] => &all_prev,
            [o] => {
                candidates.clear();
                candidates.extend((0..m).map(|x| {
                    if x == o {
                        state_index(m, &[o])
                    } else {
                        state_index(m, &[o, x])
                    }
                }));
                candidates.sort_unstable();
                &candidates
            }
            [o1, o2] => {
                candidates.clear();
                candidates.push(state_index(m, &[o1, o2]));
                &candidates
            }
            _ => unreachable!(),
        };
        let mut best: Option<(u32, usize, u32)> = None;
        for &c in preds {
            let Some(v) = prev_values[c] else { continue };
            let pool = fresh_left + overlap[c] - olds.len();
            if !pool.is_multiple_of(3) {
                continue;
            }
            let k = (pool / 3) as u32;
            // `preds` ascends, so the first maximizer is the smallest S'.
            if best.is_none_or(|(b, _, _)| v + k > b) {
                best = Some((v + k, c, k));
            }
        }
        match best {
            None => DpEntry::INFEASIBLE,
            Some((value, c, k)) => DpEntry {
                value: DpValue::Feasible(value),
                back: Some(Backpointer {
                    predecessor: Some(state_at(ci, c)),
                    formed: k,
                }),
            },
        }
    };

    entries.push(evaluate(&[]));
    for p in 0..m_next {
        entries.push(evaluate(&[p]));
        for q in p + 1..m_next {
            entries.push(evaluate(&[p, q]));
        }
    }
    DpTable {
        index: cnext.index,
        clique: cnext.clone(),
        entries,
    }
}

/// Inverse of `state_index`.
fn state_at(clique: &MaximalClique, idx: usize) -> BoundaryState {
    let members = clique.members();
    if idx == 0 {
        return BoundaryState::EMPTY;
    }
    let m = members.len();
    let mut start = 1;
    for p in 0..m {
        let block = m - p;
        if idx < start + block {
            let off = idx - start;
            return if off == 0 {
                BoundaryState::single(members[p])
            } else {
                BoundaryState {
                    len: 2,
                    ids: [members[p], members[p + off]],
                }
            };
        }
        start += block;
    }
    unreachable!("state index {idx} out of range for clique of size {m}")
}

/// Runs the whole recurrence and keeps every table.
pub fn build_tables(arrangement: &CliqueArrangement) -> Vec<DpTable> {
    let cliques = arrangement.cliques();
    let mut tables: Vec<DpTable> = Vec::with_capacity(cliques.len());
    let Some(first) = cliques.first() else {
        return tables;
    };
    tables.push(base_case(first));
    for w in cliques.windows(2) {
        let next = transition(tables.last().expect("non-empty"), &w[0], &w[1]);
        tables.push(next);
    }
    tables
}

/// Walks backpointers from `final_state` in the last table.
pub fn reconstruct(tables: &[DpTable], final_state: &BoundaryState) -> Result<TrianglePacking> {
    let Some(last) = tables.last() else {
        return Err(Error::InfeasibleState(final_state.to_string()));
    };
    let mut state = *final_state;
    let mut triangles = Vec::new();
    for k in (0..tables.len()).rev() {
        let table = &tables[k];
        let entry = table.get(&state).filter(|e| e.value.is_feasible());
        let Some(DpEntry {
            back: Some(back), ..
        }) = entry
        else {
            return Err(if k + 1 == tables.len() {
                Error::InfeasibleState(state.to_string())
            } else {
                Error::InfeasibleState(format!(
                    "{state} at clique {} (broken chain from {final_state} in clique {})",
                    table.index, last.index
                ))
            });
        };
        match back.predecessor {
            Some(pred) => {
                let prev = &tables[k - 1];
                let formed = formed_triangles(prev.clique(), table.clique(), &state, &pred);
                debug_assert_eq!(formed.len(), back.formed as usize);
                triangles.extend(formed);
                state = pred;
            }
            None => {
                let rest: Vec<VertexId> = table
                    .clique()
                    .members()
                    .iter()
                    .copied()
                    .filter(|&v| !state.contains(v))
                    .collect();
                triangles.extend(group_into_triangles(&rest));
            }
        }
    }
    Ok(TrianglePacking::new(triangles))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diagnostic {
    /// Every state of the last table was infeasible; the reported packing is
    /// empty. Should not happen on a valid arrangement.
    NoFeasibleFinalState,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NoFeasibleFinalState => write!(f, "no-feasible-final-state"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub count: usize,
    pub packing: TrianglePacking,
    /// Maximizing state of the last table, if any was feasible.
    pub final_state: Option<BoundaryState>,
    /// Entries per table, in clique order.
    pub table_sizes: Vec<usize>,
    pub diagnostics: Vec<Diagnostic>,
    /// Time spent in the recurrence and reconstruction.
    pub elapsed: Duration,
}

/// Maximum triangle packing of the graph whose maximal cliques are
/// `arrangement`. Rejects arrangements that break any structural invariant.
pub fn solve(arrangement: &CliqueArrangement) -> Result<Solution> {
    let report = arrangement.validate_structure();
    if !report.is_valid() {
        return Err(Error::InvalidArrangement(report));
    }
    Ok(solve_unchecked(arrangement))
}

/// [`solve`] without validating the arrangement first.
pub fn solve_unchecked(arrangement: &CliqueArrangement) -> Solution {
    let start = Instant::now();
    let tables = build_tables(arrangement);
    let best = tables.last().and_then(DpTable::best);
    let (count, packing, diagnostics) = match best {
        Some((state, count)) => {
            let packing = reconstruct(&tables, &state).expect("best final state is feasible");
            (count as usize, packing, Vec::new())
        }
        None => (
            0,
            TrianglePacking::default(),
            vec![Diagnostic::NoFeasibleFinalState],
        ),
    };
    let elapsed = start.elapsed();
    Solution {
        count,
        packing,
        final_state: best.map(|(s, _)| s),
        table_sizes: tables.iter().map(DpTable::len).collect(),
        diagnostics,
        elapsed,
    }
}
