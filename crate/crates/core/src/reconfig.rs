//! Reconfiguration steps and sequences under token jumping (TJ), token
//! addition/removal (TAR) and TJ-or-nothing (TJN), with validation and the
//! conversions between the models.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::activation::{is_target_mask, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::{ThresholdGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Remove `out` and add `into` simultaneously.
    Jump { out: Vertex, into: Vertex },
    Add(Vertex),
    Remove(Vertex),
    Noop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Tj,
    /// `k`-TAR: every set has size at most `k + 1`.
    Tar(usize),
    Tjn,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Tj => write!(f, "TJ"),
            Model::Tar(k) => write!(f, "{k}-TAR"),
            Model::Tjn => write!(f, "TJN"),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Jump { out, into } => write!(f, "j {} {}", out + 1, into + 1),
            Step::Add(v) => write!(f, "a {}", v + 1),
            Step::Remove(v) => write!(f, "r {}", v + 1),
            Step::Noop => write!(f, "n"),
        }
    }
}

/// Serialized as its sequence-file line, e.g. `"j 2 5"`.
impl Serialize for Step {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl Serialize for Model {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// A start set plus a list of steps. Sets are reconstructed on demand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconfigSequence {
    pub start: SeedSet,
    pub steps: Vec<Step>,
    pub model: Model,
}

impl ReconfigSequence {
    pub fn new(start: SeedSet, model: Model) -> Self {
        ReconfigSequence {
            start,
            steps: Vec::new(),
            model,
        }
    }

    /// Number of steps (sets minus one).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All intermediate sets, `start` first. Fails on an illegal step.
    pub fn sets(&self) -> Result<Vec<SeedSet>> {
        let mut cur = self.start.clone();
        let mut out = vec![cur.clone()];
        for (i, step) in self.steps.iter().enumerate() {
            apply_step(&mut cur, *step)
                .map_err(|why| TsrError::InvalidInput(format!("step {}: {why}", i + 1)))?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<SeedSet> {
        Ok(self.sets()?.pop().expect("sets always holds the start"))
    }

    pub fn max_size(&self) -> Result<usize> {
        Ok(self.sets()?.iter().map(SeedSet::len).max().unwrap_or(0))
    }

    /// The same route walked backwards. TJ jumps flip, TAR additions and
    /// removals swap.
    pub fn reversed(&self) -> Result<ReconfigSequence> {
        let end = self.end()?;
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match *s {
                Step::Jump { out, into } => Step::Jump {
                    out: into,
                    into: out,
                },
                Step::Add(v) => Step::Remove(v),
                Step::Remove(v) => Step::Add(v),
                Step::Noop => Step::Noop,
            })
            .collect();
        Ok(ReconfigSequence {
            start: end,
            steps,
            model: self.model,
        })
    }
}

fn apply_step(cur: &mut SeedSet, step: Step) -> std::result::Result<(), String> {
    match step {
        Step::Jump { out, into } => {
            if out == into {
                return Err(format!("jump from {} to itself", out + 1));
            }
            if !cur.contains(out) {
                return Err(format!("jump removes {} which is not in the set", out + 1));
            }
            if cur.contains(into) {
                return Err(format!("jump adds {} which is already in the set", into + 1));
            }
            cur.remove(out);
            cur.insert(into);
        }
        Step::Add(v) => {
            if !cur.insert(v) {
                return Err(format!("adds {} which is already in the set", v + 1));
            }
        }
        Step::Remove(v) => {
            if !cur.remove(v) {
                return Err(format!("removes {} which is not in the set", v + 1));
            }
        }
        Step::Noop => {}
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    UnknownVertex(Vertex),
    IllegalStep(String),
    StepNotAllowed(Step),
    NotATargetSet,
    SizeBound { size: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending set: 0 is the start set, `i` is the set after
    /// step `i`.
    pub index: usize,
    pub kind: ViolationKind,
}

/// Outcome of [`validate_sequence`]: `Ok` or the first violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub violation: Option<Violation>,
    pub length: usize,
    pub max_size: usize,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

fn step_allowed(model: Model, step: Step) -> bool {
    matches!(
        (model, step),
        (Model::Tj, Step::Jump { .. })
            | (Model::Tjn, Step::Jump { .. } | Step::Noop)
            | (Model::Tar(_), Step::Add(_) | Step::Remove(_))
    )
}

/// Replays `seq` on `g` and reports the first set that breaks the rules of
/// its model: an illegal step, a non-target set, or a TAR size overflow.
pub fn validate_sequence(g: &ThresholdGraph, seq: &ReconfigSequence) -> ValidityReport {
    let mut report = ValidityReport {
        violation: None,
        length: seq.len(),
        max_size: seq.start.len(),
    };
    let fail = |index, kind| Some(Violation { index, kind });
    let n = g.n();
    let bound = match seq.model {
        Model::Tar(k) => Some(k + 1),
        _ => None,
    };
    let check_set = |index: usize, cur: &SeedSet, mask: &[bool]| -> Option<Violation> {
        if let Some(b) = bound {
            if cur.len() > b {
                return fail(
                    index,
                    ViolationKind::SizeBound {
                        size: cur.len(),
                        bound: b,
                    },
                );
            }
        }
        if !is_target_mask(g, mask) {
            return fail(index, ViolationKind::NotATargetSet);
        }
        None
    };

    if let Some(v) = seq.start.iter().find(|&v| v >= n) {
        report.violation = fail(0, ViolationKind::UnknownVertex(v));
        return report;
    }
    let mut cur = seq.start.clone();
    let mut mask = cur.membership(n);
    if let Some(v) = check_set(0, &cur, &mask) {
        report.violation = Some(v);
        return report;
    }
    for (i, &step) in seq.steps.iter().enumerate() {
        let index = i + 1;
        if !step_allowed(seq.model, step) {
            report.violation = fail(index, ViolationKind::StepNotAllowed(step));
            return report;
        }
        let touched = match step {
            Step::Jump { out, into } => vec![out, into],
            Step::Add(v) | Step::Remove(v) => vec![v],
            Step::Noop => vec![],
        };
        if let Some(&v) = touched.iter().find(|&&v| v >= n) {
            report.violation = fail(index, ViolationKind::UnknownVertex(v));
            return report;
        }
        if let Err(why) = apply_step(&mut cur, step) {
            report.violation = fail(index, ViolationKind::IllegalStep(why));
            return report;
        }
        match step {
            Step::Jump { out, into } => {
                mask[out] = false;
                mask[into] = true;
            }
            Step::Add(v) => mask[v] = true,
            Step::Remove(v) => mask[v] = false,
            Step::Noop => {}
        }
        report.max_size = report.max_size.max(cur.len());
        if let Some(v) = check_set(index, &cur, &mask) {
            report.violation = Some(v);
            return report;
        }
    }
    report
}

/// Splits each jump into "add the incoming vertex, then remove the outgoing
/// one". The result is a `k`-TAR sequence with `k = |start|`.
pub fn tj_to_tar(seq: &ReconfigSequence) -> Result<ReconfigSequence> {
    if seq.model != Model::Tj {
        return Err(TsrError::InvalidInput(format!("expected a TJ sequence, got {}", seq.model)));
    }
    let mut steps = Vec::with_capacity(2 * seq.len());
    for &step in &seq.steps {
        match step {
            Step::Jump { out, into } => {
                steps.push(Step::Add(into));
                steps.push(Step::Remove(out));
            }
            other => {
                return Err(TsrError::InvalidInput(format!("non-jump step {other:?} in TJ sequence")))
            }
        }
    }
    Ok(ReconfigSequence {
        start: seq.start.clone(),
        steps,
        model: Model::Tar(seq.start.len()),
    })
}

/// Rewrites a `k`-TAR sequence between two size-`k` sets into a TJ sequence.
///
/// Whenever a removal of `x` is directly followed by an addition of `y` and
/// the set in between has fewer than `k` elements, the pair is cancelled
/// (`x == y`) or swapped into "add `y`, remove `x`". The leftmost such pair
/// is rewritten first; each rewrite shortens the sequence or moves a removal
/// to the right, so the loop terminates. Afterwards all sets have size `k`
/// or `k + 1` and consecutive add/remove pairs become jumps.
pub fn tar_to_tj(seq: &ReconfigSequence) -> Result<ReconfigSequence> {
    let k = match seq.model {
        Model::Tar(k) => k,
        other => return Err(TsrError::InvalidInput(format!("expected a TAR sequence, got {other}"))),
    };
    let end = seq.end()?;
    if seq.start.len() != k || end.len() != k {
        return Err(TsrError::EndpointSizeMismatch {
            start: seq.start.len(),
            end: end.len(),
            expected: k,
        });
    }
    let steps = seq.steps.clone();
    if let Some(s) = steps.iter().find(|s| !matches!(s, Step::Add(_) | Step::Remove(_))) {
        return Err(TsrError::InvalidInput(format!("non-TAR step {s:?}")));
    }

    // An add undone right away (or a remove redone) is dropped outright.
    let mut kept: Vec<Step> = Vec::with_capacity(steps.len());
    for s in steps {
        match (kept.last(), s) {
            (Some(Step::Add(a)), Step::Remove(b)) | (Some(Step::Remove(a)), Step::Add(b)) if *a == b => {
                kept.pop();
            }
            _ => kept.push(s),
        }
    }
    let mut steps = kept;

    let mut from = 0;
    loop {
        // sizes[i] is the size after steps[..i]
        let mut size = k as isize;
        let mut found = None;
        for i in 0..steps.len() {
            let before = size;
            size += if matches!(steps[i], Step::Add(_)) { 1 } else { -1 };
            if i >= from && i + 1 < steps.len() {
                if let (Step::Remove(x), Step::Add(y)) = (steps[i], steps[i + 1]) {
                    if (before - 1) < k as isize {
                        found = Some((i, x, y));
                        break;
                    }
                }
            }
        }
        let Some((i, x, y)) = found else {
            if from == 0 {
                break;
            }
            from = 0;
            continue;
        };
        if x == y {
            steps.drain(i..i + 2);
        } else {
            steps[i] = Step::Add(y);
            steps[i + 1] = Step::Remove(x);
        }
        from = i.saturating_sub(1);
    }

    let mut jumps = Vec::with_capacity(steps.len() / 2);
    for pair in steps.chunks(2) {
        match pair {
            [Step::Add(y), Step::Remove(x)] => {
                if x != y {
                    jumps.push(Step::Jump { out: *x, into: *y });
                }
            }
            _ => {
                return Err(TsrError::InvalidInput(
                    "TAR sequence leaves the size window [k, k+1]".into(),
                ))
            }
        }
    }
    Ok(ReconfigSequence {
        start: seq.start.clone(),
        steps: jumps,
        model: Model::Tj,
    })
}

/// Drops the do-nothing steps of a TJN sequence.
pub fn strip_noops(seq: &ReconfigSequence) -> ReconfigSequence {
    ReconfigSequence {
        start: seq.start.clone(),
        steps: seq.steps.iter().copied().filter(|s| *s != Step::Noop).collect(),
        model: Model::Tj,
    }
}

/// Restricts a TJ or TJN sequence to a vertex subset. `map[v]` gives the
/// image of `v` in the smaller graph, `None` if `v` is dropped. A jump with
/// both ends dropped becomes a no-op; a jump crossing the boundary is an
/// error because the projection would change the set size.
pub fn project_sequence(seq: &ReconfigSequence, map: &[Option<Vertex>]) -> Result<ReconfigSequence> {
    let image = |v: Vertex| map.get(v).copied().flatten();
    let start = SeedSet::new(seq.start.iter().filter_map(image));
    let mut steps = Vec::with_capacity(seq.len());
    for &step in &seq.steps {
        let s = match step {
            Step::Jump { out, into } => match (image(out), image(into)) {
                (Some(o), Some(i)) => Step::Jump { out: o, into: i },
                (None, None) => Step::Noop,
                _ => {
                    return Err(TsrError::InvalidInput(format!(
                        "jump {} -> {} crosses the projection boundary",
                        out + 1,
                        into + 1
                    )))
                }
            },
            Step::Noop => Step::Noop,
            other => return Err(TsrError::InvalidInput(format!("cannot project TAR step {other:?}"))),
        };
        steps.push(s);
    }
    Ok(ReconfigSequence {
        start,
        steps,
        model: Model::Tjn,
    })
}

/// Incremental builder for TAR routes; skips redundant additions/removals.
#[derive(Debug, Clone)]
pub struct TarBuilder {
    start: SeedSet,
    current: SeedSet,
    steps: Vec<Step>,
}

impl TarBuilder {
    pub fn new(start: SeedSet) -> Self {
        TarBuilder {
            current: start.clone(),
            start,
            steps: Vec::new(),
        }
    }

    pub fn current(&self) -> &SeedSet {
        &self.current
    }

    pub fn add(&mut self, v: Vertex) {
        if self.current.insert(v) {
            self.steps.push(Step::Add(v));
        }
    }

    pub fn remove(&mut self, v: Vertex) {
        if self.current.remove(v) {
            self.steps.push(Step::Remove(v));
        }
    }

    /// Replays the steps of another route on the current set. Jumps become
    /// an addition followed by a removal.
    pub fn extend(&mut self, route: &ReconfigSequence) {
        for &s in &route.steps {
            match s {
                Step::Add(v) => self.add(v),
                Step::Remove(v) => self.remove(v),
                Step::Jump { out, into } => {
                    self.add(into);
                    self.remove(out);
                }
                Step::Noop => {}
            }
        }
    }

    pub fn finish(self, k: usize) -> ReconfigSequence {
        ReconfigSequence {
            start: self.start,
            steps: self.steps,
            model: Model::Tar(k),
        }
    }
}
