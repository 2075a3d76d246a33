//! Graphs where every threshold is 1: any nonempty set meeting every
//! component is a target set, so equal-size target sets are always
//! reconfigurable.

use crate::activation::{check_members, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::ThresholdGraph;
use crate::reconfig::{tar_to_tj, ReconfigSequence, TarBuilder};

use super::{check_endpoints, meet, Solution};

fn require_threshold1(g: &ThresholdGraph) -> Result<()> {
    match (0..g.n()).find(|&v| g.tau(v) != 1) {
        Some(v) => Err(TsrError::PreconditionViolated(format!(
            "vertex {} has threshold {}",
            v + 1,
            g.tau(v)
        ))),
        None => Ok(()),
    }
}

/// The smallest vertex of each component.
pub fn canonical(g: &ThresholdGraph) -> SeedSet {
    g.graph().components().iter().map(|c| c[0]).collect()
}

/// `|s|`-TAR route from `s` to [`canonical`]: per component, add its
/// smallest vertex, then drop the other seeds there.
pub fn tar_to_canonical(g: &ThresholdGraph, s: &SeedSet) -> Result<ReconfigSequence> {
    require_threshold1(g)?;
    check_members(g, s)?;
    let mut b = TarBuilder::new(s.clone());
    for comp in g.graph().components() {
        if !comp.iter().any(|&v| s.contains(v)) {
            return Err(TsrError::NotATargetSet);
        }
        b.add(comp[0]);
        for &v in &comp[1..] {
            b.remove(v);
        }
    }
    Ok(b.finish(s.len()))
}

pub fn solve_threshold1(g: &ThresholdGraph, x: &SeedSet, y: &SeedSet) -> Result<Solution> {
    require_threshold1(g)?;
    check_endpoints(g, x, y)?;
    let route = meet(&tar_to_canonical(g, x)?, &tar_to_canonical(g, y)?, x.len())?;
    Ok(Solution {
        reconfigurable: true,
        sequence: Some(tar_to_tj(&route)?),
        case: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::reconfig::validate_sequence;

    fn set(v: &[usize]) -> SeedSet {
        SeedSet::new(v.iter().copied())
    }

    #[test]
    fn p3_pairs() {
        let g = ThresholdGraph::uniform(3, 1, &path_edges(3)).unwrap();
        let sol = solve_threshold1(&g, &set(&[0, 1]), &set(&[1, 2])).unwrap();
        let seq = sol.sequence.unwrap();
        assert!(validate_sequence(&g, &seq).is_valid());
        assert_eq!(seq.end().unwrap(), set(&[1, 2]));
    }

    #[test]
    fn equal_endpoints_give_empty_sequence() {
        let g = ThresholdGraph::uniform(3, 1, &path_edges(3)).unwrap();
        let sol = solve_threshold1(&g, &set(&[2]), &set(&[2])).unwrap();
        assert!(sol.sequence.unwrap().is_empty());
    }

    #[test]
    fn forest_canonical_is_smallest_per_component() {
        let edges = [(0, 3), (3, 5), (1, 4), (2, 6)];
        let g = ThresholdGraph::uniform(7, 1, &edges).unwrap();
        assert_eq!(canonical(&g), set(&[0, 1, 2]));
        let x = set(&[5, 4, 6, 3]);
        let y = set(&[0, 1, 2, 5]);
        let seq = solve_threshold1(&g, &x, &y).unwrap().sequence.unwrap();
        let r = validate_sequence(&g, &seq);
        assert!(r.is_valid(), "{r:?}");
        assert_eq!(seq.end().unwrap(), y);
    }

    #[test]
    fn rejects_higher_thresholds() {
        let g = degree2_example();
        assert!(matches!(
            solve_threshold1(&g, &set(&[0, 2, 8]), &set(&[0, 2, 8])),
            Err(TsrError::PreconditionViolated(_))
        ));
    }
}
