//! Exhaustive ground truth for small instances: target-set enumeration,
//! minimum size, and breadth-first search over the TJ and k-TAR
//! reconfiguration graphs.
//!
//! Sets are `u128` bitmasks, so the searches handle at most 128 vertices.
//! The searches are lazy: only sets reachable from the start are visited,
//! and the guard bounds the number of visited sets.

use std::collections::HashMap;

use serde::Serialize;

use crate::activation::{check_members, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::{ThresholdGraph, Vertex};
use crate::reconfig::{Model, ReconfigSequence, Step};

pub const DEFAULT_GUARD: usize = 5_000_000;
pub const DEFAULT_MAX_ENUMERATE: usize = 20;
const MASK_BITS: usize = 128;

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Largest `n` accepted by enumeration.
    pub max_enumerate: usize,
    /// Largest number of sets enumerated or visited by one search.
    pub guard: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_enumerate: DEFAULT_MAX_ENUMERATE,
            guard: DEFAULT_GUARD,
        }
    }
}

/// Answer for one `(x, y)` query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairResult {
    pub reconfigurable: bool,
    /// A shortest sequence when reconfigurable.
    pub shortest: Option<ReconfigSequence>,
    /// Number of sets visited by the search.
    pub explored: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub k: usize,
    /// Filled by [`Oracle::report`]; the pair queries leave it empty.
    pub num_target_sets: Option<usize>,
    /// TJ-connected classes of the size-`k` target sets, if enumerated.
    pub components: Option<Vec<Vec<SeedSet>>>,
    pub query: Option<PairResult>,
}

impl OracleReport {
    /// Verdict of the pair query. Panics if there was none.
    pub fn reconfigurable(&self) -> bool {
        self.query.as_ref().expect("report has a pair query").reconfigurable
    }

    pub fn shortest(&self) -> Option<&ReconfigSequence> {
        self.query.as_ref().and_then(|q| q.shortest.as_ref())
    }
}

/// Adjacency as bitmasks, for fast closure checks.
struct MaskGraph {
    n: usize,
    nbr: Vec<u128>,
    tau: Vec<u32>,
    full: u128,
}

impl MaskGraph {
    fn new(g: &ThresholdGraph) -> Result<Self> {
        let n = g.n();
        if n > MASK_BITS {
            return Err(TsrError::InstanceTooLarge(format!(
                "{n} vertices, the oracle handles at most {MASK_BITS}"
            )));
        }
        let nbr = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | bit(w)))
            .collect();
        let full = if n == MASK_BITS { u128::MAX } else { (1u128 << n) - 1 };
        Ok(MaskGraph {
            n,
            nbr,
            tau: g.thresholds().to_vec(),
            full,
        })
    }

    fn is_target(&self, seed: u128) -> bool {
        let mut active = seed;
        loop {
            let before = active;
            let mut rest = self.full & !active;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.nbr[v] & active).count_ones() >= self.tau[v] {
                    active |= bit(v);
                }
            }
            if active == self.full {
                return true;
            }
            if active == before {
                return false;
            }
        }
    }
}

fn bit(v: Vertex) -> u128 {
    1u128 << v
}

fn to_mask(s: &SeedSet) -> u128 {
    s.iter().fold(0, |m, v| m | bit(v))
}

fn from_mask(mut m: u128) -> SeedSet {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    SeedSet::new(out)
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Size-`k` subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted member lists.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u128) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u128, |m, &v| m | bit(v));
        if !f(mask) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl Oracle {
    pub fn with_guard(guard: usize) -> Self {
        Oracle {
            guard,
            ..Oracle::default()
        }
    }

    fn check_enumerable(&self, g: &ThresholdGraph, k: usize) -> Result<()> {
        if g.n() > self.max_enumerate {
            return Err(TsrError::InstanceTooLarge(format!(
                "{} vertices, enumeration cap is {}",
                g.n(),
                self.max_enumerate
            )));
        }
        let c = binomial(g.n(), k);
        if c > self.guard as u128 {
            return Err(TsrError::InstanceTooLarge(format!(
                "C({}, {k}) = {c} exceeds the guard {}",
                g.n(),
                self.guard
            )));
        }
        Ok(())
    }

    fn enumerate_masks(&self, g: &ThresholdGraph, k: usize) -> Result<Vec<u128>> {
        self.check_enumerable(g, k)?;
        let mg = MaskGraph::new(g)?;
        let mut out = Vec::new();
        for_each_subset(mg.n, k, |m| {
            if mg.is_target(m) {
                out.push(m);
            }
            true
        });
        Ok(out)
    }

    /// All size-`k` target sets in lexicographic order.
    pub fn enumerate_target_sets(&self, g: &ThresholdGraph, k: usize) -> Result<Vec<SeedSet>> {
        Ok(self.enumerate_masks(g, k)?.into_iter().map(from_mask).collect())
    }

    /// Smallest `k` with a size-`k` target set.
    pub fn min_target_set_size(&self, g: &ThresholdGraph) -> Result<usize> {
        let mg = MaskGraph::new(g)?;
        for k in 0..=g.n() {
            self.check_enumerable(g, k)?;
            let mut hit = false;
            for_each_subset(mg.n, k, |m| {
                hit = mg.is_target(m);
                !hit
            });
            if hit {
                return Ok(k);
            }
        }
        unreachable!("the full vertex set is a target set")
    }

    /// Partitions the size-`k` target sets into TJ-connected classes. Classes
    /// are listed by their smallest member; members are lexicographic.
    pub fn tj_components(&self, g: &ThresholdGraph, k: usize) -> Result<Vec<Vec<SeedSet>>> {
        let sets = self.enumerate_masks(g, k)?;
        let index: HashMap<u128, usize> = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut parent: Vec<usize> = (0..sets.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let n = g.n();
        for (i, &m) in sets.iter().enumerate() {
            for out in (0..n).filter(|&v| m & bit(v) != 0) {
                for into in (0..n).filter(|&v| m & bit(v) == 0) {
                    if let Some(&j) = index.get(&(m ^ bit(out) ^ bit(into))) {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        let mut classes: Vec<Vec<SeedSet>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for (i, &m) in sets.iter().enumerate() {
            let r = find(&mut parent, i);
            let c = *slot.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(from_mask(m));
        }
        Ok(classes)
    }

    fn check_pair(&self, g: &ThresholdGraph, mg: &MaskGraph, x: &SeedSet, y: &SeedSet) -> Result<()> {
        check_members(g, x)?;
        check_members(g, y)?;
        if !mg.is_target(to_mask(x)) || !mg.is_target(to_mask(y)) {
            return Err(TsrError::NotATargetSet);
        }
        Ok(())
    }

    /// Shortest TJ sequence from `x` to `y`, if any. Jumps are tried in
    /// lexicographic `(out, in)` order, so the answer is reproducible.
    pub fn tj_decide(&self, g: &ThresholdGraph, x: &SeedSet, y: &SeedSet) -> Result<OracleReport> {
        let mg = MaskGraph::new(g)?;
        if x.len() != y.len() {
            return Err(TsrError::SizeMismatch(x.len(), y.len()));
        }
        self.check_pair(g, &mg, x, y)?;
        let n = mg.n;
        let query = self.bfs(to_mask(x), to_mask(y), Model::Tj, |m, push| {
            for out in (0..n).filter(|&v| m & bit(v) != 0) {
                for into in (0..n).filter(|&v| m & bit(v) == 0) {
                    let next = m ^ bit(out) ^ bit(into);
                    if mg.is_target(next) && !push(next, Step::Jump { out, into })? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })?;
        Ok(OracleReport {
            k: x.len(),
            num_target_sets: None,
            components: None,
            query: Some(query),
        })
    }

    /// Shortest `k`-TAR sequence from `x` to `y`: single additions and
    /// removals through target sets of size at most `k + 1`.
    pub fn ktar_decide(&self, g: &ThresholdGraph, x: &SeedSet, y: &SeedSet, k: usize) -> Result<OracleReport> {
        let mg = MaskGraph::new(g)?;
        if x.len() > k || y.len() > k {
            return Err(TsrError::PreconditionViolated(format!(
                "endpoint sizes {} and {} must not exceed k = {k}",
                x.len(),
                y.len()
            )));
        }
        self.check_pair(g, &mg, x, y)?;
        let n = mg.n;
        let query = self.bfs(to_mask(x), to_mask(y), Model::Tar(k), |m, push| {
            let size = m.count_ones() as usize;
            for v in 0..n {
                let next = m ^ bit(v);
                let step = if m & bit(v) != 0 {
                    Step::Remove(v)
                } else if size <= k {
                    Step::Add(v)
                } else {
                    continue;
                };
                if mg.is_target(next) && !push(next, step)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })?;
        Ok(OracleReport {
            k,
            num_target_sets: None,
            components: None,
            query: Some(query),
        })
    }

    /// Breadth-first search with parent pointers. `expand` calls `push` for
    /// each neighbour; `push` returns `Ok(false)` once the goal is reached.
    fn bfs<F>(&self, start: u128, goal: u128, model: Model, mut expand: F) -> Result<PairResult>
    where
        F: FnMut(u128, &mut dyn FnMut(u128, Step) -> Result<bool>) -> Result<bool>,
    {
        let mut parent: HashMap<u128, Option<(u128, Step)>> = HashMap::new();
        parent.insert(start, None);
        let mut frontier = vec![start];
        let mut found = start == goal;
        let guard = self.guard;
        while !found && !frontier.is_empty() {
            let mut next_frontier = Vec::new();
            for &m in &frontier {
                let mut push = |next: u128, step: Step| -> Result<bool> {
                    if parent.contains_key(&next) {
                        return Ok(true);
                    }
                    if parent.len() >= guard {
                        return Err(TsrError::InstanceTooLarge(format!(
                            "search visited more than {guard} sets"
                        )));
                    }
                    parent.insert(next, Some((m, step)));
                    next_frontier.push(next);
                    Ok(next != goal)
                };
                if !expand(m, &mut push)? {
                    found = true;
                    break;
                }
            }
            frontier = next_frontier;
        }
        let explored = parent.len();
        if !found {
            return Ok(PairResult {
                reconfigurable: false,
                shortest: None,
                explored,
            });
        }
        let mut steps = Vec::new();
        let mut cur = goal;
        while let Some(&Some((prev, step))) = parent.get(&cur) {
            steps.push(step);
            cur = prev;
        }
        steps.reverse();
        Ok(PairResult {
            reconfigurable: true,
            shortest: Some(ReconfigSequence {
                start: from_mask(start),
                steps,
                model,
            }),
            explored,
        })
    }

    /// Full report for size `k`: counts, TJ classes, and an optional query.
    pub fn report(
        &self,
        g: &ThresholdGraph,
        k: usize,
        pair: Option<(&SeedSet, &SeedSet)>,
    ) -> Result<OracleReport> {
        let components = self.tj_components(g, k)?;
        let query = match pair {
            Some((x, y)) => self.tj_decide(g, x, y)?.query,
            None => None,
        };
        Ok(OracleReport {
            k,
            num_target_sets: Some(components.iter().map(Vec::len).sum()),
            components: Some(components),
            query,
        })
    }
}

/// [`Oracle::enumerate_target_sets`] with default limits.
pub fn enumerate_target_sets(g: &ThresholdGraph, k: usize) -> Result<Vec<SeedSet>> {
    Oracle::default().enumerate_target_sets(g, k)
}

/// [`Oracle::min_target_set_size`] with default limits.
pub fn min_target_set_size(g: &ThresholdGraph) -> Result<usize> {
    Oracle::default().min_target_set_size(g)
}

/// [`Oracle::tj_decide`] with default limits.
pub fn tj_decide(g: &ThresholdGraph, x: &SeedSet, y: &SeedSet) -> Result<OracleReport> {
    Oracle::default().tj_decide(g, x, y)
}

/// [`Oracle::ktar_decide`] with default limits.
pub fn ktar_decide(g: &ThresholdGraph, x: &SeedSet, y: &SeedSet, k: usize) -> Result<OracleReport> {
    Oracle::default().ktar_decide(g, x, y, k)
}
