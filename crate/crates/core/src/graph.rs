//! Interval instances, their overlap graphs, and consecutive clique
//! arrangements built by an endpoint sweep.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact interval endpoint.
pub type Endpoint = Ratio<i64>;

/// Dense vertex index, `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Closed interval `[lo, hi]` owned by one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub vertex: VertexId,
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// A set of named intervals, one per vertex. Vertex `i` owns `intervals[i]`
/// and is labelled `names[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalInstance {
    names: Vec<String>,
    intervals: Vec<Interval>,
}

impl IntervalInstance {
    /// Builds an instance from `(name, lo, hi)` records. Ids follow record
    /// order. Names must be unique and non-empty without whitespace; `lo <= hi`.
    pub fn new<S: Into<String>>(
        records: impl IntoIterator<Item = (S, Endpoint, Endpoint)>,
    ) -> Result<Self> {
        let mut names = Vec::new();
        let mut intervals = Vec::new();
        let mut seen = HashMap::new();
        for (i, (name, lo, hi)) in records.into_iter().enumerate() {
            let name = name.into();
            check_name(&name).map_err(|message| Error::Parse {
                line: i + 1,
                message,
            })?;
            if lo > hi {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("interval for `{name}` has lo {lo} > hi {hi}"),
                });
            }
            if let Some(prev) = seen.insert(name.clone(), i) {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!(
                        "duplicate vertex name `{name}` (first used by record {})",
                        prev + 1
                    ),
                });
            }
            intervals.push(Interval {
                vertex: VertexId(i),
                lo,
                hi,
            });
            names.push(name);
        }
        Ok(IntervalInstance { names, intervals })
    }

    /// Convenience constructor for integer endpoints.
    pub fn from_ints(records: &[(&str, i64, i64)]) -> Result<Self> {
        Self::new(
            records
                .iter()
                .map(|&(name, lo, hi)| (name, Ratio::from_integer(lo), Ratio::from_integer(hi))),
        )
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name).map(VertexId)
    }

    /// Mirror image under `x -> -x`.
    pub fn reflected(&self) -> Self {
        let intervals = self
            .intervals
            .iter()
            .map(|iv| Interval {
                vertex: iv.vertex,
                lo: -iv.hi,
                hi: -iv.lo,
            })
            .collect();
        IntervalInstance {
            names: self.names.clone(),
            intervals,
        }
    }

    /// Relabels vertices: the vertex with old id `i` gets id `perm[i]`.
    /// Names travel with their intervals.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len(), "permutation length mismatch");
        let mut slots: Vec<Option<(String, Interval)>> = vec![None; self.len()];
        for (old, &new) in perm.iter().enumerate() {
            let iv = self.intervals[old];
            let prev = slots[new].replace((
                self.names[old].clone(),
                Interval {
                    vertex: VertexId(new),
                    lo: iv.lo,
                    hi: iv.hi,
                },
            ));
            assert!(prev.is_none(), "not a permutation");
        }
        let (names, intervals) = slots
            .into_iter()
            .map(|s| s.expect("not a permutation"))
            .unzip();
        IntervalInstance { names, intervals }
    }

    /// Serializes in the `name lo hi` line format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, iv) in self.names.iter().zip(&self.intervals) {
            out.push_str(&format!("{name} {} {}\n", iv.lo, iv.hi));
        }
        out
    }
}

impl FromStr for IntervalInstance {
    type Err = Error;

    /// Parses one `name lo hi` record per line. Blank lines and lines whose
    /// first non-blank character is `#` are skipped. Endpoints are integers or
    /// `p/q` rationals.
    fn from_str(text: &str) -> Result<Self> {
        let mut names = Vec::new();
        let mut intervals = Vec::new();
        let mut seen: HashMap<String, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [name, lo, hi] = fields[..] else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `name lo hi`, found {} field(s)", fields.len()),
                });
            };
            let lo = parse_endpoint(lo).map_err(|message| Error::Parse {
                line: line_no,
                message,
            })?;
            let hi = parse_endpoint(hi).map_err(|message| Error::Parse {
                line: line_no,
                message,
            })?;
            if lo > hi {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("lo {lo} exceeds hi {hi}"),
                });
            }
            if let Some(first) = seen.insert(name.to_string(), line_no) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "duplicate vertex name `{name}` (first defined on line {first})"
                    ),
                });
            }
            intervals.push(Interval {
                vertex: VertexId(names.len()),
                lo,
                hi,
            });
            names.push(name.to_string());
        }
        Ok(IntervalInstance { names, intervals })
    }
}

fn check_name(name: &str) -> std::result::Result<(), String> {
    if name.is_empty() || name.chars().any(char::is_whitespace) || name.starts_with('#') {
        Err(format!("invalid vertex name {name:?}"))
    } else {
        Ok(())
    }
}

fn parse_endpoint(field: &str) -> std::result::Result<Endpoint, String> {
    if let Some((p, q)) = field.split_once('/') {
        let p: i64 = p
            .parse()
            .map_err(|_| format!("bad numerator in `{field}`"))?;
        let q: i64 = q
            .parse()
            .map_err(|_| format!("bad denominator in `{field}`"))?;
        if q == 0 {
            return Err(format!("zero denominator in `{field}`"));
        }
        Ok(Ratio::new(p, q))
    } else {
        field
            .parse::<i64>()
            .map(Ratio::from_integer)
            .map_err(|_| format!("bad endpoint `{field}`"))
    }
}

/// Symmetric, irreflexive adjacency over `0..n`, stored as a dense bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyGraph {
    n: usize,
    matrix: Vec<bool>,
}

impl AdjacencyGraph {
    pub fn empty(n: usize) -> Self {
        AdjacencyGraph {
            n,
            matrix: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v));
        }
        g
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        if u != v {
            self.matrix[u.0 * self.n + v.0] = true;
            self.matrix[v.0 * self.n + u.0] = true;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u.0 < self.n && v.0 < self.n && self.matrix[u.0 * self.n + v.0]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.matrix[u * self.n + v])
                .map(move |v| (VertexId(u), VertexId(v)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }
}

/// `x ~ y` iff the closed intervals of `x` and `y` intersect.
pub fn build_overlap_graph(instance: &IntervalInstance) -> AdjacencyGraph {
    let ivs = instance.intervals();
    let mut g = AdjacencyGraph::empty(ivs.len());
    for (i, a) in ivs.iter().enumerate() {
        for b in &ivs[i + 1..] {
            if a.intersects(b) {
                g.add_edge(a.vertex, b.vertex);
            }
        }
    }
    g
}

/// One maximal clique with its 1-based position in the arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalClique {
    /// Strictly ascending.
    members: Vec<VertexId>,
    pub index: usize,
}

impl MaximalClique {
    pub fn new(index: usize, members: impl IntoIterator<Item = VertexId>) -> Self {
        let members: BTreeSet<VertexId> = members.into_iter().collect();
        MaximalClique {
            members: members.into_iter().collect(),
            index,
        }
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Position of `v` in the sorted member list.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.members.binary_search(&v).ok()
    }

    pub fn is_subset_of(&self, other: &MaximalClique) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }
}

/// Ordered maximal cliques `[C_1, .., C_t]` of a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueArrangement {
    n: usize,
    cliques: Vec<MaximalClique>,
}

impl CliqueArrangement {
    /// Wraps raw member lists; positions are assigned 1..=t in order.
    /// No invariant is checked here, see [`validate_arrangement`].
    pub fn new(n: usize, cliques: impl IntoIterator<Item = Vec<VertexId>>) -> Self {
        let cliques = cliques
            .into_iter()
            .enumerate()
            .map(|(i, m)| MaximalClique::new(i + 1, m))
            .collect();
        CliqueArrangement { n, cliques }
    }

    pub fn from_indices(n: usize, cliques: &[&[usize]]) -> Self {
        Self::new(
            n,
            cliques
                .iter()
                .map(|c| c.iter().map(|&v| VertexId(v)).collect()),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn cliques(&self) -> &[MaximalClique] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn clique_sizes(&self) -> Vec<usize> {
        self.cliques.iter().map(MaximalClique::len).collect()
    }

    /// The graph whose edges are exactly the within-clique pairs.
    pub fn induced_graph(&self) -> AdjacencyGraph {
        let mut g = AdjacencyGraph::empty(self.n);
        for c in &self.cliques {
            for (i, &u) in c.members.iter().enumerate() {
                for &v in &c.members[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Σ |C_i|²·|C_{i+1}|² + |C_t|², the operation count the solver is
    /// expected to track.
    pub fn work_term(&self) -> u128 {
        let sq = |c: &MaximalClique| (c.len() as u128).pow(2);
        let pairs: u128 = self.cliques.windows(2).map(|w| sq(&w[0]) * sq(&w[1])).sum();
        pairs + self.cliques.last().map_or(0, sq)
    }

    /// Checks the invariants that do not need an external graph: ids in
    /// range, t ≤ n, consecutiveness, no containment, every vertex covered,
    /// and maximality against the clique-union graph.
    pub fn validate_structure(&self) -> ArrangementReport {
        validate_arrangement(&self.induced_graph(), self)
    }
}

/// Enumerates maximal cliques by sweeping endpoints left to right.
///
/// Insertions precede removals at equal coordinates (closed intervals). The
/// active set is emitted whenever a removal follows at least one insertion;
/// emitted sets that are contained in another are dropped.
pub fn sweep_maximal_cliques(instance: &IntervalInstance) -> Result<CliqueArrangement> {
    if instance.is_empty() {
        return Err(Error::EmptyInstance);
    }
    // (coordinate, 0 = insert / 1 = remove, vertex)
    let mut events: Vec<(Endpoint, u8, VertexId)> = Vec::with_capacity(2 * instance.len());
    for iv in instance.intervals() {
        events.push((iv.lo, 0, iv.vertex));
        events.push((iv.hi, 1, iv.vertex));
    }
    events.sort();

    let mut active: BTreeSet<VertexId> = BTreeSet::new();
    let mut candidates: Vec<Vec<VertexId>> = Vec::new();
    let mut rising = false;
    for (_, kind, v) in events {
        if kind == 0 {
            active.insert(v);
            rising = true;
        } else {
            if rising {
                candidates.push(active.iter().copied().collect());
                rising = false;
            }
            active.remove(&v);
        }
    }

    let mut kept: Vec<Vec<VertexId>> = Vec::with_capacity(candidates.len());
    for (i, cand) in candidates.iter().enumerate() {
        let dominated = candidates.iter().enumerate().any(|(j, other)| {
            j != i && is_sorted_subset(cand, other) && (cand.len() < other.len() || j < i)
        });
        if !dominated {
            kept.push(cand.clone());
        }
    }
    Ok(CliqueArrangement::new(instance.len(), kept))
}

fn is_sorted_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.by_ref().any(|w| w == v))
}

/// A broken arrangement invariant, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementViolation {
    /// A graph with at least one vertex must have at least one clique.
    NoCliques,
    TooManyCliques {
        t: usize,
        n: usize,
    },
    VertexOutOfRange {
        clique: usize,
        vertex: VertexId,
    },
    EmptyClique {
        clique: usize,
    },
    MisnumberedClique {
        position: usize,
        index: usize,
    },
    NotAClique {
        clique: usize,
        u: VertexId,
        v: VertexId,
    },
    /// The clique is contained in another clique of the arrangement.
    ContainedClique {
        clique: usize,
        container: usize,
    },
    /// `vertex` is adjacent to every member but not in the clique.
    NotMaximal {
        clique: usize,
        vertex: VertexId,
    },
    /// `vertex` is in cliques `before` and `after` but not in `gap`.
    NotConsecutive {
        vertex: VertexId,
        before: usize,
        gap: usize,
        after: usize,
    },
    UncoveredVertex {
        vertex: VertexId,
    },
    UncoveredEdge {
        u: VertexId,
        v: VertexId,
    },
}

impl fmt::Display for ArrangementViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ArrangementViolation::*;
        match self {
            NoCliques => write!(f, "arrangement has no cliques"),
            TooManyCliques { t, n } => write!(f, "{t} cliques exceed {n} vertices"),
            VertexOutOfRange { clique, vertex } => {
                write!(f, "clique {clique} names unknown vertex {vertex}")
            }
            EmptyClique { clique } => write!(f, "clique {clique} is empty"),
            MisnumberedClique { position, index } => {
                write!(f, "clique at position {position} carries index {index}")
            }
            NotAClique { clique, u, v } => {
                write!(f, "clique {clique}: {u} and {v} are not adjacent")
            }
            ContainedClique { clique, container } => {
                write!(f, "clique {clique} is contained in clique {container}")
            }
            NotMaximal { clique, vertex } => {
                write!(f, "clique {clique} can be extended by {vertex}")
            }
            NotConsecutive {
                vertex,
                before,
                gap,
                after,
            } => {
                write!(
                    f,
                    "vertex {vertex} is in cliques {before} and {after} but not {gap}"
                )
            }
            UncoveredVertex { vertex } => write!(f, "vertex {vertex} is in no clique"),
            UncoveredEdge { u, v } => write!(f, "edge {u}-{v} is in no clique"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArrangementReport {
    pub violations: Vec<ArrangementViolation>,
}

impl ArrangementReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ArrangementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every arrangement invariant against `graph`. Clique numbers in the
/// report are 1-based positions.
pub fn validate_arrangement(
    graph: &AdjacencyGraph,
    arrangement: &CliqueArrangement,
) -> ArrangementReport {
    use ArrangementViolation::*;
    let n = graph.vertex_count();
    let cliques = arrangement.cliques();
    let mut violations = Vec::new();

    if n > 0 && cliques.is_empty() {
        violations.push(NoCliques);
    }
    if cliques.len() > n.max(1) {
        violations.push(TooManyCliques {
            t: cliques.len(),
            n,
        });
    }

    let mut first_seen: Vec<Option<usize>> = vec![None; n];
    let mut last_seen: Vec<Option<usize>> = vec![None; n];
    let mut gap_reported = vec![false; n];
    for (pos0, c) in cliques.iter().enumerate() {
        let pos = pos0 + 1;
        if c.index != pos {
            violations.push(MisnumberedClique {
                position: pos,
                index: c.index,
            });
        }
        if c.is_empty() {
            violations.push(EmptyClique { clique: pos });
        }
        let members: Vec<VertexId> = c.members().to_vec();
        if let Some(&bad) = members.iter().find(|v| v.0 >= n) {
            violations.push(VertexOutOfRange {
                clique: pos,
                vertex: bad,
            });
            continue;
        }
        'pairs: for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !graph.adjacent(u, v) {
                    violations.push(NotAClique { clique: pos, u, v });
                    break 'pairs;
                }
            }
        }
        if let Some(w) = (0..n).map(VertexId).find(|&w| {
            !c.contains(w) && !members.is_empty() && members.iter().all(|&u| graph.adjacent(u, w))
        }) {
            violations.push(NotMaximal {
                clique: pos,
                vertex: w,
            });
        }
        for &v in &members {
            if let Some(last) = last_seen[v.0] {
                if last + 1 != pos && !gap_reported[v.0] {
                    gap_reported[v.0] = true;
                    violations.push(NotConsecutive {
                        vertex: v,
                        before: last,
                        gap: last + 1,
                        after: pos,
                    });
                }
            }
            first_seen[v.0].get_or_insert(pos);
            last_seen[v.0] = Some(pos);
        }
    }

    for (i, a) in cliques.iter().enumerate() {
        if let Some(j) = cliques
            .iter()
            .enumerate()
            .position(|(j, b)| j != i && a.is_subset_of(b) && (a.len() < b.len() || j < i))
        {
            violations.push(ContainedClique {
                clique: i + 1,
                container: j + 1,
            });
        }
    }

    for (v, seen) in first_seen.iter().enumerate() {
        if seen.is_none() {
            violations.push(UncoveredVertex {
                vertex: VertexId(v),
            });
        }
    }

    for (u, v) in graph.edges() {
        let (Some(fu), Some(lu), Some(fv), Some(lv)) = (
            first_seen[u.0],
            last_seen[u.0],
            first_seen[v.0],
            last_seen[v.0],
        ) else {
            violations.push(UncoveredEdge { u, v });
            continue;
        };
        let lo = fu.max(fv);
        let hi = lu.min(lv);
        let covered = lo <= hi
            && (lo..=hi).any(|p| {
                let c = &cliques[p - 1];
                c.contains(u) && c.contains(v)
            });
        if !covered {
            violations.push(UncoveredEdge { u, v });
        }
    }

    ArrangementReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[usize]) -> Vec<VertexId> {
        v.iter().map(|&i| VertexId(i)).collect()
    }

    #[test]
    fn overlap_graph_closed_semantics() {
        let inst = IntervalInstance::from_ints(&[("A", 1, 3), ("B", 2, 5), ("C", 4, 7)]).unwrap();
        let g = build_overlap_graph(&inst);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            vec![(VertexId(0), VertexId(1)), (VertexId(1), VertexId(2))]
        );

        let touching = IntervalInstance::from_ints(&[("A", 1, 2), ("B", 2, 3)]).unwrap();
        assert!(build_overlap_graph(&touching).adjacent(VertexId(0), VertexId(1)));

        let single = IntervalInstance::from_ints(&[("A", 0, 0)]).unwrap();
        let g = build_overlap_graph(&single);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));

        assert_eq!(
            build_overlap_graph(&IntervalInstance::from_ints(&[]).unwrap()).vertex_count(),
            0
        );
    }

    #[test]
    fn sweep_examples() {
        let path = IntervalInstance::from_ints(&[("A", 1, 3), ("B", 2, 5), ("C", 4, 7)]).unwrap();
        let arr = sweep_maximal_cliques(&path).unwrap();
        assert_eq!(arr.cliques()[0].members(), ids(&[0, 1]).as_slice());
        assert_eq!(arr.cliques()[1].members(), ids(&[1, 2]).as_slice());
        assert_eq!(arr.len(), 2);

        let common =
            IntervalInstance::from_ints(&[("A", 0, 5), ("B", 3, 4), ("C", -2, 3), ("D", 3, 3)])
                .unwrap();
        let arr = sweep_maximal_cliques(&common).unwrap();
        assert_eq!(arr.len(), 1);
        assert_eq!(arr.cliques()[0].len(), 4);

        let disjoint = IntervalInstance::from_ints(&[("A", 1, 2), ("B", 3, 4)]).unwrap();
        let arr = sweep_maximal_cliques(&disjoint).unwrap();
        assert_eq!(
            arr.cliques()
                .iter()
                .map(|c| c.members().to_vec())
                .collect::<Vec<_>>(),
            vec![ids(&[0]), ids(&[1])]
        );

        assert!(matches!(
            sweep_maximal_cliques(&IntervalInstance::from_ints(&[]).unwrap()),
            Err(Error::EmptyInstance)
        ));
    }

    #[test]
    fn twins_and_rational_endpoints() {
        let inst: IntervalInstance = "a 1/2 3/2\nb 1/2 3/2\nc 3/2 2\n".parse().unwrap();
        let arr = sweep_maximal_cliques(&inst).unwrap();
        assert_eq!(arr.len(), 1);
        assert!(validate_arrangement(&build_overlap_graph(&inst), &arr).is_valid());
    }

    #[test]
    fn validation_reports_gap() {
        // A=0, B=1, C=2, D=3; B in cliques 1 and 3 only.
        let g = AdjacencyGraph::from_edges(4, [(0, 1), (1, 3)]);
        let arr = CliqueArrangement::from_indices(4, &[&[0, 1], &[2], &[1, 3]]);
        let report = validate_arrangement(&g, &arr);
        assert!(report
            .violations
            .contains(&ArrangementViolation::NotConsecutive {
                vertex: VertexId(1),
                before: 1,
                gap: 2,
                after: 3
            }));
    }

    #[test]
    fn validation_reports_uncovered_edge_and_nonmaximal() {
        let g = AdjacencyGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let arr = CliqueArrangement::from_indices(3, &[&[0, 1], &[2]]);
        let report = validate_arrangement(&g, &arr);
        assert!(report
            .violations
            .contains(&ArrangementViolation::UncoveredEdge {
                u: VertexId(0),
                v: VertexId(2)
            }));
        assert!(report
            .violations
            .contains(&ArrangementViolation::NotMaximal {
                clique: 1,
                vertex: VertexId(2)
            }));

        let arr = CliqueArrangement::from_indices(3, &[&[0, 1, 2], &[1, 2]]);
        let report = validate_arrangement(&g, &arr);
        assert!(report
            .violations
            .contains(&ArrangementViolation::ContainedClique {
                clique: 2,
                container: 1
            }));

        let g = AdjacencyGraph::from_edges(3, [(0, 1)]);
        let arr = CliqueArrangement::from_indices(3, &[&[0, 1, 2]]);
        assert!(validate_arrangement(&g, &arr).violations.contains(
            &ArrangementViolation::NotAClique {
                clique: 1,
                u: VertexId(0),
                v: VertexId(2)
            }
        ));
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = "# header\nA 1 2\nA 3\n"
            .parse::<IntervalInstance>()
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(matches!(
            "A 2 1".parse::<IntervalInstance>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "A 1 2\nA 2 3".parse::<IntervalInstance>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "A 1/0 2".parse::<IntervalInstance>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "A x 2".parse::<IntervalInstance>(),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        let text = "x -3/4 2\ny 0 1/3\nz 5 5\n";
        let inst: IntervalInstance = text.parse().unwrap();
        assert_eq!(inst.to_text(), text);
        assert_eq!(inst.to_text().parse::<IntervalInstance>().unwrap(), inst);
    }

    #[test]
    fn work_term_formula() {
        let arr = CliqueArrangement::from_indices(5, &[&[0, 1, 2], &[2, 3, 4]]);
        assert_eq!(arr.work_term(), 9 * 9 + 9);
    }
}
