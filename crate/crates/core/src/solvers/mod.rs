//! Polynomial-time deciders that also build explicit sequences: graphs with
//! all thresholds 1, graphs of maximum degree 2, and trees.

pub mod deg2;
pub mod threshold1;
pub mod tree;

use serde::Serialize;

use crate::activation::{check_members, is_target_set, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::{ThresholdGraph, Vertex};
use crate::reconfig::{ReconfigSequence, Step, TarBuilder};

pub use deg2::{cycle_analyze, decompose_deg2, deg2_minimum_set, path_canonical, solve_maxdeg2};
pub use threshold1::solve_threshold1;
pub use tree::{chen_tree, solve_tree, tree_tar_to_canonical, TreePlan};

/// Verdict of a solver, with a TJ sequence when the answer is yes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub reconfigurable: bool,
    pub sequence: Option<ReconfigSequence>,
    /// Case of the maximum-degree-2 analysis (1 to 4), if that solver ran.
    pub case: Option<u8>,
}

pub(crate) fn check_endpoints(g: &ThresholdGraph, x: &SeedSet, y: &SeedSet) -> Result<()> {
    check_members(g, x)?;
    check_members(g, y)?;
    if x.len() != y.len() {
        return Err(TsrError::PreconditionViolated(format!(
            "endpoints differ in size ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    for (name, s) in [("start", x), ("end", y)] {
        if !is_target_set(g, s)? {
            return Err(TsrError::PreconditionViolated(format!("{name} set {s} is not a target set")));
        }
    }
    Ok(())
}

/// `x -> c` followed by `y -> c` walked backwards, as one `k`-TAR route.
pub(crate) fn meet(x_route: &ReconfigSequence, y_route: &ReconfigSequence, k: usize) -> Result<ReconfigSequence> {
    let mut b = TarBuilder::new(x_route.start.clone());
    b.extend(x_route);
    b.extend(&y_route.reversed()?);
    Ok(b.finish(k))
}

/// Renames every vertex of a sequence through `map`.
pub(crate) fn lift_sequence(seq: &ReconfigSequence, map: &[Vertex]) -> ReconfigSequence {
    let f = |v: Vertex| map[v];
    ReconfigSequence {
        start: seq.start.map(f),
        steps: seq
            .steps
            .iter()
            .map(|s| match *s {
                Step::Jump { out, into } => Step::Jump {
                    out: f(out),
                    into: f(into),
                },
                Step::Add(v) => Step::Add(f(v)),
                Step::Remove(v) => Step::Remove(f(v)),
                Step::Noop => Step::Noop,
            })
            .collect(),
        model: seq.model,
    }
}
