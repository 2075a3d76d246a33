//! Hardness reductions as instance transformations with seed maps.
//!
//! Each reduction records its stages, so a seed set of the source maps
//! forward to the reduced instance and a seed set of the reduced instance
//! maps back. Vertex ids of the source survive unchanged; new vertices are
//! appended and tagged in [`ReductionOutput::provenance`].

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::activation::SeedSet;
use crate::error::{Result, TsrError};
use crate::gadgets::{attach_sigma, attach_theta, connect_xi, replace_upsilon, subdivide, GadgetMap};
use crate::graph::{classify, disjoint_union, vc_to_tss, SimpleGraph, ThresholdGraph, Vertex};
use crate::oracle::Oracle;

/// A universe `0..n`, a family of non-empty subsets, and a target size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSystem {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl HittingSystem {
    pub fn new(n: usize, mut sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        for (j, f) in sets.iter_mut().enumerate() {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(TsrError::EmptyFamilySet(j));
            }
            if let Some(&e) = f.iter().find(|&&e| e >= n) {
                return Err(TsrError::InvalidInput(format!("element {} outside universe of size {n}", e + 1)));
            }
        }
        if k == 0 || k > n {
            return Err(TsrError::InvalidInput(format!("k = {k} outside [1, {n}]")));
        }
        Ok(HittingSystem { n, sets, k })
    }

    pub fn is_hitting_set(&self, s: &SeedSet) -> bool {
        self.sets.iter().all(|f| f.iter().any(|&e| s.contains(e)))
    }

    /// Number of family sets containing `u`.
    pub fn frequency(&self, u: usize) -> usize {
        self.sets.iter().filter(|f| f.contains(&u)).count()
    }

    /// All size-`k` hitting sets, lexicographic.
    pub fn hitting_sets(&self) -> Vec<SeedSet> {
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(self.k);
        self.collect(0, &mut pick, &mut out);
        out
    }

    fn collect(&self, from: usize, pick: &mut Vec<usize>, out: &mut Vec<SeedSet>) {
        if pick.len() == self.k {
            let s = SeedSet::new(pick.iter().copied());
            if self.is_hitting_set(&s) {
                out.push(s);
            }
            return;
        }
        for u in from..self.n {
            pick.push(u);
            self.collect(u + 1, pick, out);
            pick.pop();
        }
    }

    /// Whether size-`k` hitting sets `x` and `y` are joined by single jumps
    /// through hitting sets.
    pub fn tj_reconfigurable(&self, x: &SeedSet, y: &SeedSet, guard: usize) -> Result<bool> {
        for s in [x, y] {
            if s.len() != self.k || !self.is_hitting_set(s) || s.iter().any(|u| u >= self.n) {
                return Err(TsrError::PreconditionViolated(format!("{s} is not a size-{} hitting set", self.k)));
            }
        }
        let mut seen: HashSet<SeedSet> = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(s) = queue.pop_front() {
            if s == *y {
                return Ok(true);
            }
            for out in s.iter() {
                for into in (0..self.n).filter(|&u| !s.contains(u)) {
                    let t = s.without(out).with(into);
                    if self.is_hitting_set(&t) && seen.insert(t.clone()) {
                        if seen.len() > guard {
                            return Err(TsrError::InstanceTooLarge(format!("more than {guard} hitting sets visited")));
                        }
                        queue.push_back(t);
                    }
                }
            }
        }
        Ok(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    VcCubic,
    Pb342,
    B312,
    Split,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::VcCubic => "vc-cubic",
            ReductionKind::Pb342 => "pb342",
            ReductionKind::B312 => "b312",
            ReductionKind::Split => "split",
        })
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = TsrError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "vc-cubic" => ReductionKind::VcCubic,
            "pb342" => ReductionKind::Pb342,
            "b312" => ReductionKind::B312,
            "split" => ReductionKind::Split,
            _ => return Err(TsrError::InvalidInput(format!("unknown reduction {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Stage {
    Gadget(GadgetMap),
    /// Second copy of vertices `0..n` at `n..2n`.
    Duplicate(usize),
    /// Source elements are vertices `0..n`; the rest is scaffolding.
    Embed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub graph: ThresholdGraph,
    /// One tag per vertex of `graph`.
    pub provenance: Vec<String>,
    stages: Vec<Stage>,
}

impl ReductionOutput {
    /// Source seed set (or hitting set) to a seed set of `graph`.
    pub fn forward(&self, s: &SeedSet) -> SeedSet {
        self.stages.iter().fold(s.clone(), |s, st| match st {
            Stage::Gadget(map) => map.forward(&s),
            Stage::Duplicate(n) => s.union(&s.map(|v| v + n)),
            Stage::Embed(_) => s,
        })
    }

    /// Seed set of `graph` back to the source.
    pub fn backward(&self, s: &SeedSet) -> SeedSet {
        self.stages.iter().rev().fold(s.clone(), |s, st| match st {
            Stage::Gadget(map) => map.backward(&s),
            Stage::Duplicate(n) | Stage::Embed(n) => s.iter().filter(|&v| v < *n).collect(),
        })
    }

    /// Checks the structure the reduction promises: the degree and
    /// threshold profile and bipartiteness, or the split partition.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let c = classify(&self.graph);
        let (degrees, thresholds, bipartite): (&[usize], &[u32], bool) = match self.kind {
            ReductionKind::VcCubic => (&[3], &[3], false),
            ReductionKind::Pb342 => (&[3, 4], &[2], true),
            ReductionKind::B312 => (&[3], &[1, 2], true),
            ReductionKind::Split => {
                return match self.graph.graph().split_partition() {
                    Some(_) => Ok(()),
                    None => Err("not a split graph".into()),
                };
            }
        };
        if !c.is_dt_graph(degrees, thresholds) {
            return Err(format!(
                "profile degrees {:?} thresholds {:?}, expected within {degrees:?} / {thresholds:?}",
                c.degree_set, c.threshold_set
            ));
        }
        if bipartite && !c.is_bipartite {
            return Err("not bipartite".into());
        }
        Ok(())
    }
}

struct Tracker {
    graph: ThresholdGraph,
    provenance: Vec<String>,
    stages: Vec<Stage>,
}

impl Tracker {
    fn new(graph: ThresholdGraph) -> Self {
        let provenance = (0..graph.n()).map(|v| format!("v{}", v + 1)).collect();
        Tracker {
            graph,
            provenance,
            stages: Vec::new(),
        }
    }

    fn apply(&mut self, step: Result<(ThresholdGraph, GadgetMap)>, at: String) -> Result<()> {
        let (graph, map) = step?;
        let mut tags: Vec<(Vertex, String)> = map
            .named
            .iter()
            .map(|(label, &v)| (v, format!("{}({at}).{label}", map.kind)))
            .collect();
        tags.sort();
        self.provenance.extend(tags.into_iter().map(|(_, t)| t));
        self.graph = graph;
        self.stages.push(Stage::Gadget(map));
        Ok(())
    }

    fn finish(self, kind: ReductionKind) -> ReductionOutput {
        debug_assert_eq!(self.provenance.len(), self.graph.n());
        ReductionOutput {
            kind,
            graph: self.graph,
            provenance: self.provenance,
            stages: self.stages,
        }
    }
}

/// Σ-gadget on every degree-2 vertex, ascending. Input and output are
/// vertex cover instances; the output graph carries `τ = degree`.
pub fn reduce_vc23_to_cubic(g: &SimpleGraph) -> Result<ReductionOutput> {
    if let Some(v) = (0..g.n()).find(|&v| !matches!(g.degree(v), 2 | 3)) {
        return Err(TsrError::BadDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut h = g.clone();
    let mut provenance: Vec<String> = (0..g.n()).map(|v| format!("v{}", v + 1)).collect();
    let mut stages = Vec::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) == 2) {
        let (next, map) = attach_sigma(&h, v)?;
        let mut tags: Vec<(Vertex, &String)> = map.named.iter().map(|(l, &u)| (u, l)).collect();
        tags.sort();
        provenance.extend(tags.into_iter().map(|(_, l)| format!("sigma({}).{l}", v + 1)));
        h = next;
        stages.push(Stage::Gadget(map));
    }
    Ok(ReductionOutput {
        kind: ReductionKind::VcCubic,
        graph: vc_to_tss(&h)?,
        provenance,
        stages,
    })
}

fn require_33(g: &ThresholdGraph) -> Result<()> {
    if (0..g.n()).all(|v| g.degree(v) == 3 && g.tau(v) == 3) {
        Ok(())
    } else {
        Err(TsrError::NotA33Graph)
    }
}

/// Υ-replace every vertex, then subdivide every edge.
fn upsilon_then_subdivide(g: &ThresholdGraph) -> Result<Tracker> {
    require_33(g)?;
    let mut t = Tracker::new(g.clone());
    for w in 0..g.n() {
        let step = replace_upsilon(&t.graph, w);
        t.apply(step, format!("{}", w + 1))?;
    }
    let edges: Vec<_> = t.graph.edges().collect();
    for (u, v) in edges {
        let step = subdivide(&t.graph, u, v);
        t.apply(step, format!("{},{}", u + 1, v + 1))?;
    }
    Ok(t)
}

/// Υ-replace every vertex, subdivide every edge, then attach a Θ-gadget
/// (raising the threshold) to every (2,1)- and (3,1)-vertex. The output is
/// a bipartite ({3,4},2)-graph; minimum seeds map as `X ∪ ⋃ M_v`.
pub fn reduce_33_to_pb342(g: &ThresholdGraph) -> Result<ReductionOutput> {
    let mut t = upsilon_then_subdivide(g)?;
    let targets: Vec<Vertex> = (0..t.graph.n())
        .filter(|&v| t.graph.tau(v) == 1 && matches!(t.graph.degree(v), 2 | 3))
        .collect();
    for v in targets {
        let step = attach_theta(&t.graph, v);
        t.apply(step, format!("{}", v + 1))?;
    }
    Ok(t.finish(ReductionKind::Pb342))
}

/// Υ-replace, subdivide, take two disjoint copies, and join the two copies
/// of every (2,1)-vertex by a Ξ-gadget. The output is a bipartite
/// (3,{1,2})-graph; minimum seeds map as `X_1 ⊎ X_2 ⊎ {a_1 per gadget}`.
pub fn reduce_33_to_b312(g: &ThresholdGraph) -> Result<ReductionOutput> {
    let mut t = upsilon_then_subdivide(g)?;
    let n = t.graph.n();
    let (doubled, offset) = disjoint_union(&t.graph, &t.graph);
    let copy: Vec<String> = t.provenance.iter().map(|p| format!("copy2.{p}")).collect();
    t.provenance.extend(copy);
    t.graph = doubled;
    t.stages.push(Stage::Duplicate(n));
    let targets: Vec<Vertex> = (0..n).filter(|&v| t.graph.degree(v) == 2 && t.graph.tau(v) == 1).collect();
    for v in targets {
        let step = connect_xi(&t.graph, v, v + offset);
        t.apply(step, format!("{},{}", v + 1, v + offset + 1))?;
    }
    Ok(t.finish(ReductionKind::B312))
}

/// Split graph whose size-`k` target sets are exactly the size-`k` hitting
/// sets: `v_u` (ids `0..n`) for the universe, `w_F` (next `m` ids) for the
/// family, then `x`. Needs `k < n`, since `τ(v_u)` would exceed the degree
/// otherwise.
pub fn reduce_hitting_to_split(hs: &HittingSystem) -> Result<ReductionOutput> {
    let (n, m) = (hs.n, hs.sets.len());
    let x = n + m;
    let mut g = SimpleGraph::new(n + m + 1);
    for (j, f) in hs.sets.iter().enumerate() {
        for &u in f {
            g.add_edge(u, n + j)?;
        }
        g.add_edge(x, n + j)?;
    }
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
        g.add_edge(u, x)?;
    }
    let mut tau: Vec<u32> = (0..n).map(|u| (hs.frequency(u) + hs.k + 1) as u32).collect();
    tau.extend(std::iter::repeat_n(1, m));
    tau.push((m + hs.k) as u32);
    let mut provenance: Vec<String> = (0..n).map(|u| format!("element({})", u + 1)).collect();
    provenance.extend((0..m).map(|j| format!("set({})", j + 1)));
    provenance.push("apex".into());
    Ok(ReductionOutput {
        kind: ReductionKind::Split,
        graph: ThresholdGraph::new(g, tau)?,
        provenance,
        stages: vec![Stage::Embed(n)],
    })
}

/// The instance a reduction started from.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    Graph(&'a ThresholdGraph),
    Hitting(&'a HittingSystem),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub source: bool,
    pub reduced: bool,
}

impl Verdicts {
    pub fn equivalent(&self) -> bool {
        self.source == self.reduced
    }
}

/// Decides `x ↔ y` on the source and `forward(x) ↔ forward(y)` on the
/// reduced graph, both by exhaustive search.
pub fn verify_reduction(
    source: Source<'_>,
    x: &SeedSet,
    y: &SeedSet,
    out: &ReductionOutput,
    oracle: &Oracle,
) -> Result<Verdicts> {
    let source = match source {
        Source::Graph(g) => oracle.tj_decide(g, x, y)?.reconfigurable(),
        Source::Hitting(hs) => hs.tj_reconfigurable(x, y, oracle.guard)?,
    };
    let reduced = oracle
        .tj_decide(&out.graph, &out.forward(x), &out.forward(y))?
        .reconfigurable();
    Ok(Verdicts { source, reduced })
}
