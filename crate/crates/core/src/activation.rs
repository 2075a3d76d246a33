//! The irreversible threshold activation process and the objects derived
//! from it: target-set checks, residual graphs, and acyclic-orientation
//! certificates.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Result, TsrError};
use crate::graph::{SimpleGraph, ThresholdGraph, Vertex};

/// Sorted, duplicate-free set of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeedSet(Vec<Vertex>);

impl SeedSet {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SeedSet(v)
    }

    pub fn empty() -> Self {
        SeedSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    /// Returns `true` if `v` was absent.
    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, v);
                true
            }
        }
    }

    /// Returns `true` if `v` was present.
    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, v: Vertex) -> SeedSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: Vertex) -> SeedSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn union(&self, other: &SeedSet) -> SeedSet {
        SeedSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &SeedSet) -> SeedSet {
        SeedSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &SeedSet) -> SeedSet {
        SeedSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    /// Members that lie in `vertices` (sorted or not).
    pub fn restrict(&self, vertices: &[Vertex]) -> SeedSet {
        SeedSet::new(vertices.iter().copied().filter(|&v| self.contains(v)))
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> SeedSet {
        SeedSet::new(self.iter().map(f))
    }

    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }
}

/// Serialized with 1-based ids, like the text formats.
impl Serialize for SeedSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.0.iter().map(|v| v + 1))
    }
}

impl FromIterator<Vertex> for SeedSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        SeedSet::new(iter)
    }
}

impl fmt::Display for SeedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn check_members(g: &ThresholdGraph, s: &SeedSet) -> Result<()> {
    match s.iter().find(|&v| !g.contains(v)) {
        Some(v) => Err(TsrError::UnknownVertex(v)),
        None => Ok(()),
    }
}

/// Synchronous activation rounds of one seed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationTrace {
    /// `rounds[t]` holds the vertices first active at step `t`; `rounds[0]`
    /// is the seed set. The last round is non-empty unless the seed is.
    pub rounds: Vec<Vec<Vertex>>,
    /// Step at which each vertex became active, `None` if never.
    pub activation_time: Vec<Option<usize>>,
}

impl ActivationTrace {
    pub fn active(&self) -> SeedSet {
        self.rounds.iter().flatten().copied().collect()
    }

    pub fn active_count(&self) -> usize {
        self.rounds.iter().map(Vec::len).sum()
    }

    pub fn covers_all(&self) -> bool {
        self.activation_time.iter().all(Option::is_some)
    }

    /// `A^(t)`, the cumulative active set after step `t`.
    pub fn active_after(&self, t: usize) -> SeedSet {
        self.rounds.iter().take(t + 1).flatten().copied().collect()
    }

    /// Index of the last step that activated anything.
    pub fn fixpoint_round(&self) -> usize {
        self.rounds.len().saturating_sub(1)
    }
}

/// Runs the synchronous process `A^(t) = A^(t-1) ∪ {v : |N(v) ∩ A^(t-1)| >= τ(v)}`
/// until the first fixpoint.
pub fn activate(g: &ThresholdGraph, s: &SeedSet) -> Result<ActivationTrace> {
    check_members(g, s)?;
    let n = g.n();
    let mut time = vec![None; n];
    let mut count = vec![0u32; n];
    let mut rounds = vec![s.as_slice().to_vec()];
    for v in s.iter() {
        time[v] = Some(0);
    }
    let mut frontier = s.as_slice().to_vec();
    let mut t = 0;
    while !frontier.is_empty() {
        for &u in &frontier {
            for &w in g.neighbors(u) {
                count[w] += 1;
            }
        }
        t += 1;
        let mut next: Vec<Vertex> = frontier
            .iter()
            .flat_map(|&u| g.neighbors(u).iter().copied())
            .filter(|&w| time[w].is_none() && count[w] >= g.tau(w))
            .collect();
        next.sort_unstable();
        next.dedup();
        for &w in &next {
            time[w] = Some(t);
        }
        if !next.is_empty() {
            rounds.push(next.clone());
        }
        frontier = next;
    }
    Ok(ActivationTrace {
        rounds,
        activation_time: time,
    })
}

/// Final active set as a membership mask. Queue-based; reaches the same
/// fixpoint as the synchronous rounds.
pub fn closure_mask(g: &ThresholdGraph, seed: &[bool]) -> Vec<bool> {
    let n = g.n();
    let mut active = seed.to_vec();
    let mut count = vec![0u32; n];
    let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| active[v]).collect();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if active[w] {
                continue;
            }
            count[w] += 1;
            if count[w] >= g.tau(w) {
                active[w] = true;
                queue.push_back(w);
            }
        }
    }
    active
}

/// Whether `seed` activates every vertex. Allocation-light variant used by
/// the exhaustive searches.
pub fn is_target_mask(g: &ThresholdGraph, seed: &[bool]) -> bool {
    let n = g.n();
    let mut active = seed.to_vec();
    let mut count = vec![0u32; n];
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| active[v]).collect();
    let mut total = stack.len();
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if active[w] {
                continue;
            }
            count[w] += 1;
            if count[w] >= g.tau(w) {
                active[w] = true;
                total += 1;
                stack.push(w);
            }
        }
    }
    total == n
}

pub fn is_target_set(g: &ThresholdGraph, s: &SeedSet) -> Result<bool> {
    check_members(g, s)?;
    Ok(is_target_mask(g, &s.membership(g.n())))
}

/// Vertices activated by `s`.
pub fn activated_by(g: &ThresholdGraph, s: &SeedSet) -> Result<SeedSet> {
    check_members(g, s)?;
    let mask = closure_mask(g, &s.membership(g.n()));
    Ok((0..g.n()).filter(|&v| mask[v]).collect())
}

/// The residual `G_S`: the graph left inactive by `S`, with thresholds
/// reduced by the number of active neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub graph: ThresholdGraph,
    /// Residual vertex index to original vertex.
    pub vertex_map: Vec<Vertex>,
}

impl Residual {
    /// Original-id seed set projected onto the residual's ids.
    pub fn project(&self, s: &SeedSet) -> SeedSet {
        self.vertex_map
            .iter()
            .enumerate()
            .filter(|&(_, &v)| s.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn lift(&self, s: &SeedSet) -> SeedSet {
        s.map(|i| self.vertex_map[i])
    }
}

pub fn residual(g: &ThresholdGraph, s: &SeedSet) -> Result<Residual> {
    check_members(g, s)?;
    let active = closure_mask(g, &s.membership(g.n()));
    let keep: Vec<Vertex> = (0..g.n()).filter(|&v| !active[v]).collect();
    let (sub, map) = g.graph().induced(&keep);
    let tau = map
        .iter()
        .map(|&v| {
            let hit = g.neighbors(v).iter().filter(|&&w| active[w]).count() as u32;
            g.tau(v) - hit
        })
        .collect();
    let graph = ThresholdGraph::new(sub, tau)
        .expect("inactive vertices keep 1 <= residual threshold <= residual degree");
    Ok(Residual {
        graph,
        vertex_map: map,
    })
}

/// An orientation of the edges of a graph, one arc `(tail, head)` per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    fn check_covers(&self, g: &SimpleGraph) -> Result<()> {
        if self.arcs.len() != g.m() {
            return Err(TsrError::NotAnOrientation(format!(
                "{} arcs for {} edges",
                self.arcs.len(),
                g.m()
            )));
        }
        let mut seen: Vec<(Vertex, Vertex)> =
            self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != g.m() || seen.iter().any(|&(u, v)| !g.has_edge(u, v)) {
            return Err(TsrError::NotAnOrientation(
                "arcs do not match the edge set".into(),
            ));
        }
        Ok(())
    }

    pub fn in_degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    pub fn is_acyclic(&self, n: usize) -> bool {
        let mut indeg = self.in_degrees(n);
        let mut out = vec![Vec::new(); n];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        let mut stack: Vec<Vertex> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &v in &out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        seen == n
    }
}

/// Checks the orientation certificate: `d` is acyclic and every vertex
/// outside `s` has in-degree at least its threshold.
pub fn certify_orientation(g: &ThresholdGraph, s: &SeedSet, d: &Orientation) -> Result<bool> {
    check_members(g, s)?;
    d.check_covers(g.graph())?;
    if !d.is_acyclic(g.n()) {
        return Ok(false);
    }
    let indeg = d.in_degrees(g.n());
    Ok((0..g.n()).all(|v| s.contains(v) || indeg[v] >= g.tau(v) as usize))
}

/// Orients each edge from the earlier-activated endpoint to the later one,
/// breaking same-step ties by ascending id.
pub fn orientation_from_trace(g: &ThresholdGraph, s: &SeedSet) -> Result<Orientation> {
    let trace = activate(g, s)?;
    if !trace.covers_all() {
        return Err(TsrError::NotATargetSet);
    }
    let key = |v: Vertex| (trace.activation_time[v].unwrap(), v);
    let arcs = g
        .edges()
        .map(|(u, v)| if key(u) < key(v) { (u, v) } else { (v, u) })
        .collect();
    Ok(Orientation { arcs })
}

/// Swaps a threshold-1 seed `v` for its neighbour `w`.
pub fn shrink_threshold1_seed(g: &ThresholdGraph, s: &SeedSet, v: Vertex, w: Vertex) -> Result<SeedSet> {
    check_members(g, s)?;
    if !g.contains(w) {
        return Err(TsrError::UnknownVertex(w));
    }
    if !s.contains(v) {
        return Err(TsrError::PreconditionViolated(format!("vertex {} not in seed set", v + 1)));
    }
    if g.tau(v) != 1 {
        return Err(TsrError::PreconditionViolated(format!(
            "vertex {} has threshold {}",
            v + 1,
            g.tau(v)
        )));
    }
    if !g.has_edge(v, w) {
        return Err(TsrError::PreconditionViolated(format!(
            "{} is not a neighbour of {}",
            w + 1,
            v + 1
        )));
    }
    if !is_target_set(g, s)? {
        return Err(TsrError::NotATargetSet);
    }
    let out = s.without(v).with(w);
    assert!(is_target_set(g, &out)?, "threshold-1 replacement must keep a target set");
    Ok(out)
}
