//! Trees: Chen's bottom-up minimum target set, the packing it induces, and
//! the TAR route from any target set to that canonical set.

use std::fmt::Write as _;

use crate::activation::{check_members, is_target_set, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::{ThresholdGraph, Vertex};
use crate::reconfig::{tar_to_tj, ReconfigSequence, TarBuilder};

use super::{check_endpoints, meet, Solution};

/// Output of Chen's algorithm on a rooted tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePlan {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    /// Vertices in postorder, children visited in id order.
    pub postorder: Vec<Vertex>,
    /// Residual need `τ'` of each vertex, floored at 0.
    pub tau_prime: Vec<u32>,
    /// The minimum target set `s_1, ..., s_k` in postorder.
    pub s_star: Vec<Vertex>,
    /// `P_i`: the subtree of `s_i` minus the subtrees of earlier anchors,
    /// sorted by id.
    pub packing: Vec<Vec<Vertex>>,
}

impl TreePlan {
    pub fn canonical(&self) -> SeedSet {
        self.s_star.iter().copied().collect()
    }

    /// One `packing <i>: <ids>` line per anchor, 1-based.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.packing.iter().enumerate() {
            let ids: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(out, "packing {}: {}", i + 1, ids.join(" "));
        }
        out
    }
}

/// Chen's algorithm rooted at the smallest id.
pub fn chen_tree(g: &ThresholdGraph) -> Result<TreePlan> {
    chen_tree_rooted(g, 0)
}

/// Chen's algorithm: in postorder, `τ'(v) = τ(v)` minus the children that
/// are selected or already fully served (`τ' = 0`). A non-root vertex is
/// selected when `τ' >= 2`, the root when `τ' >= 1`.
pub fn chen_tree_rooted(g: &ThresholdGraph, root: Vertex) -> Result<TreePlan> {
    if !g.graph().is_tree() {
        return Err(TsrError::NotATree);
    }
    if !g.contains(root) {
        return Err(TsrError::UnknownVertex(root));
    }
    let n = g.n();
    let mut parent = vec![None; n];
    let mut postorder = Vec::with_capacity(n);
    let mut stack = vec![(root, 0usize)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        let nbrs = g.neighbors(v);
        if let Some(&w) = nbrs[*next..].iter().find(|&&w| Some(w) != parent[v]) {
            *next = nbrs.iter().position(|&u| u == w).unwrap() + 1;
            parent[w] = Some(v);
            stack.push((w, 0));
        } else {
            postorder.push(v);
            stack.pop();
        }
    }

    let mut tau_prime = vec![0u32; n];
    let mut selected = vec![false; n];
    for &v in &postorder {
        let served = g
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == Some(v) && (tau_prime[w] == 0 || selected[w]))
            .count() as u32;
        tau_prime[v] = g.tau(v).saturating_sub(served);
        let need = if v == root { 1 } else { 2 };
        selected[v] = tau_prime[v] >= need;
    }
    let s_star: Vec<Vertex> = postorder.iter().copied().filter(|&v| selected[v]).collect();

    // Each subtree is a contiguous block of the postorder ending at its root.
    let mut size = vec![1usize; n];
    for &v in &postorder {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let pos: Vec<usize> = {
        let mut pos = vec![0; n];
        for (i, &v) in postorder.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let mut claimed = vec![false; n];
    let mut packing = Vec::with_capacity(s_star.len());
    for &s in &s_star {
        let block = &postorder[pos[s] + 1 - size[s]..=pos[s]];
        let mut p: Vec<Vertex> = block.iter().copied().filter(|&v| !claimed[v]).collect();
        for &v in &p {
            claimed[v] = true;
        }
        p.sort_unstable();
        packing.push(p);
    }
    Ok(TreePlan {
        root,
        parent,
        postorder,
        tau_prime,
        s_star,
        packing,
    })
}

/// `|s|`-TAR route from `s` to the canonical set: for each anchor, add
/// `s_i` and drop the other seeds of `P_i`; then drop everything outside
/// the canonical set.
pub fn tree_tar_to_canonical(g: &ThresholdGraph, plan: &TreePlan, s: &SeedSet) -> Result<ReconfigSequence> {
    check_members(g, s)?;
    if !is_target_set(g, s)? {
        return Err(TsrError::NotATargetSet);
    }
    let mut b = TarBuilder::new(s.clone());
    for (&anchor, p) in plan.s_star.iter().zip(&plan.packing) {
        b.add(anchor);
        for &v in p {
            if v != anchor {
                b.remove(v);
            }
        }
    }
    let canon = plan.canonical();
    let extra: Vec<Vertex> = b.current().difference(&canon).iter().collect();
    for v in extra {
        b.remove(v);
    }
    Ok(b.finish(s.len()))
}

/// Same-size target sets of a tree are always reconfigurable.
pub fn solve_tree(g: &ThresholdGraph, x: &SeedSet, y: &SeedSet) -> Result<Solution> {
    check_endpoints(g, x, y)?;
    let plan = chen_tree(g)?;
    let route = meet(
        &tree_tar_to_canonical(g, &plan, x)?,
        &tree_tar_to_canonical(g, &plan, y)?,
        x.len(),
    )?;
    Ok(Solution {
        reconfigurable: true,
        sequence: Some(tar_to_tj(&route)?),
        case: None,
    })
}
