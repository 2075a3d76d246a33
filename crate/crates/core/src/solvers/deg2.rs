//! Graphs of maximum degree 2, i.e. disjoint paths and cycles.
//!
//! Inside a component, `w_1, ..., w_m` are the threshold-2 vertices in
//! traversal order. Paths are walked from the endpoint with the smaller id;
//! cycles start at their smallest vertex and head towards its smaller
//! neighbour. A cycle is terrible when `m` is even and at least 4: its two
//! minimum target sets are then TJ-frozen.

use crate::activation::{is_target_set, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::{ThresholdGraph, Vertex};
use crate::reconfig::{tar_to_tj, ReconfigSequence, TarBuilder};

use super::tree::{chen_tree, tree_tar_to_canonical};
use super::{check_endpoints, lift_sequence, threshold1, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deg2Component {
    pub kind: ComponentKind,
    /// All vertices in traversal order.
    pub order: Vec<Vertex>,
    /// The threshold-2 vertices in traversal order.
    pub w: Vec<Vertex>,
    pub terrible: bool,
}

impl Deg2Component {
    pub fn m(&self) -> usize {
        self.w.len()
    }

    pub fn min_size(&self) -> usize {
        min_size(self.kind, self.m())
    }
}

fn min_size(kind: ComponentKind, m: usize) -> usize {
    match kind {
        ComponentKind::Path => m / 2 + 1,
        ComponentKind::Cycle if m == 0 => 1,
        ComponentKind::Cycle => m.div_ceil(2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deg2Decomposition {
    pub components: Vec<Deg2Component>,
}

impl Deg2Decomposition {
    pub fn min_target_set_size(&self) -> usize {
        self.components.iter().map(Deg2Component::min_size).sum()
    }
}

fn require_max_degree_2(g: &ThresholdGraph) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) > 2) {
        Some(v) => Err(TsrError::DegreeTooLarge {
            vertex: v,
            degree: g.degree(v),
            allowed: 2,
        }),
        None => Ok(()),
    }
}

fn walk(g: &ThresholdGraph, start: Vertex, first: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        order.push(cur);
        match g.neighbors(cur).iter().find(|&&u| u != prev) {
            Some(&next) => (prev, cur) = (cur, next),
            None => break,
        }
    }
    order
}

/// Vertex order of a path graph, from its smaller endpoint.
pub fn path_order(g: &ThresholdGraph) -> Result<Vec<Vertex>> {
    let sg = g.graph();
    if !sg.is_tree() || sg.max_degree() > 2 {
        return Err(TsrError::NotAPath);
    }
    let start = (0..g.n()).find(|&v| g.degree(v) == 1).ok_or(TsrError::NotAPath)?;
    Ok(walk(g, start, g.neighbors(start)[0]))
}

/// Vertex order of a cycle graph, from vertex 0 towards its smaller neighbour.
pub fn cycle_order(g: &ThresholdGraph) -> Result<Vec<Vertex>> {
    let sg = g.graph();
    if g.n() < 3 || !sg.is_connected() || (0..g.n()).any(|v| g.degree(v) != 2) {
        return Err(TsrError::NotACycle);
    }
    Ok(walk(g, 0, g.neighbors(0)[0]))
}

fn threshold2(g: &ThresholdGraph, order: &[Vertex]) -> Vec<Vertex> {
    order.iter().copied().filter(|&v| g.tau(v) == 2).collect()
}

struct Local {
    graph: ThresholdGraph,
    map: Vec<Vertex>,
    kind: ComponentKind,
    order: Vec<Vertex>,
    w: Vec<Vertex>,
}

impl Local {
    fn min_size(&self) -> usize {
        min_size(self.kind, self.w.len())
    }

    fn terrible(&self) -> bool {
        self.kind == ComponentKind::Cycle && self.w.len() >= 4 && self.w.len().is_multiple_of(2)
    }

    fn project(&self, s: &SeedSet) -> SeedSet {
        (0..self.map.len()).filter(|&i| s.contains(self.map[i])).collect()
    }

    /// Route from a local set to this component's canonical minimum set.
    fn route(&self, s: &SeedSet) -> Result<(ReconfigSequence, SeedSet)> {
        match self.kind {
            ComponentKind::Path => {
                let route = path_route(&self.graph, s)?;
                let canon = route.end()?;
                Ok((route, canon))
            }
            ComponentKind::Cycle => {
                let a = cycle_analyze(&self.graph, s)?;
                Ok((a.route, a.canonical))
            }
        }
    }
}

fn locals(g: &ThresholdGraph) -> Result<Vec<Local>> {
    g.component_graphs()
        .into_iter()
        .map(|(graph, map)| {
            let kind = if graph.m() == graph.n() {
                ComponentKind::Cycle
            } else {
                ComponentKind::Path
            };
            let order = match kind {
                ComponentKind::Path => path_order(&graph)?,
                ComponentKind::Cycle => cycle_order(&graph)?,
            };
            let w = threshold2(&graph, &order);
            Ok(Local {
                graph,
                map,
                kind,
                order,
                w,
            })
        })
        .collect()
}

/// The canonical minimum target set: each component's route end from the
/// set of all its vertices.
pub fn deg2_minimum_set(g: &ThresholdGraph) -> Result<SeedSet> {
    require_max_degree_2(g)?;
    let mut out = SeedSet::empty();
    for c in locals(g)? {
        let (_, canon) = c.route(&SeedSet::new(0..c.graph.n()))?;
        out = out.union(&canon.map(|v| c.map[v]));
    }
    Ok(out)
}

pub fn decompose_deg2(g: &ThresholdGraph) -> Result<Deg2Decomposition> {
    require_max_degree_2(g)?;
    let components = locals(g)?
        .into_iter()
        .map(|c| Deg2Component {
            kind: c.kind,
            terrible: c.terrible(),
            order: c.order.iter().map(|&v| c.map[v]).collect(),
            w: c.w.iter().map(|&v| c.map[v]).collect(),
        })
        .collect();
    Ok(Deg2Decomposition { components })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCanonical {
    pub min_size: usize,
    /// `{w_1, w_3, ..., w_m}` for odd `m`, `{w_1, w_3, ..., w_{m-1}, w_m}`
    /// for even `m > 0`, the smallest vertex when `m = 0`.
    pub canonical: SeedSet,
    pub w: Vec<Vertex>,
}

pub fn path_canonical(g: &ThresholdGraph) -> Result<PathCanonical> {
    let order = path_order(g)?;
    let w = threshold2(g, &order);
    let m = w.len();
    let canonical: SeedSet = if m == 0 {
        SeedSet::new([0])
    } else {
        let mut c: Vec<Vertex> = w.iter().step_by(2).copied().collect();
        c.push(w[m - 1]);
        SeedSet::new(c)
    };
    Ok(PathCanonical {
        min_size: m / 2 + 1,
        canonical,
        w,
    })
}

/// `|s|`-TAR route on a path graph from `s` to the canonical set: through
/// the tree canonical set, then backwards along the canonical set's own
/// route to it.
pub fn path_route(g: &ThresholdGraph, s: &SeedSet) -> Result<ReconfigSequence> {
    let pc = path_canonical(g)?;
    if pc.w.is_empty() {
        return threshold1::tar_to_canonical(g, s);
    }
    let plan = chen_tree(g)?;
    let there = tree_tar_to_canonical(g, &plan, s)?;
    let back = tree_tar_to_canonical(g, &plan, &pc.canonical)?;
    super::meet(&there, &back, s.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleCase {
    /// No threshold-2 vertex.
    Threshold1,
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleAnalysis {
    pub case: CycleCase,
    pub w: Vec<Vertex>,
    pub min_size: usize,
    /// Even `m`: `{w_1, w_3, ...}` and `{w_2, w_4, ...}`. Odd `m`: the sets
    /// `{w_i, w_{i+2}, ...}` of threshold-2 vertices, for `i = 1..m`.
    /// `m = 0`: every single vertex.
    pub minimum_sets: Vec<SeedSet>,
    /// Where [`CycleAnalysis::route`] ends.
    pub canonical: SeedSet,
    /// `|s|`-TAR route from `s` to `canonical`.
    pub route: ReconfigSequence,
}

/// Positions `from..=to` of a cyclic order, walking forward.
fn arc(order: &[Vertex], from: usize, to: usize) -> Vec<Vertex> {
    let n = order.len();
    let mut out = vec![order[from]];
    let mut i = from;
    while i != to {
        i = (i + 1) % n;
        out.push(order[i]);
    }
    out
}

fn positions(order: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Even `m`: pick the smallest threshold-2 vertex missing from `s` as `w_1`
/// and settle the intervals `I_i = w_{2i-1} .. w_{2i}` in turn, keeping
/// `w_{2i}`. If `s` holds every threshold-2 vertex, trim it to
/// `{w_1, w_3, ...}` instead.
fn even_route(order: &[Vertex], w: &[Vertex], s: &SeedSet) -> (TarBuilder, SeedSet) {
    let m = w.len();
    let mut b = TarBuilder::new(s.clone());
    let missing = (0..m).filter(|&i| !s.contains(w[i])).min_by_key(|&i| w[i]);
    let Some(q) = missing else {
        let dest: SeedSet = w.iter().step_by(2).copied().collect();
        for v in s.difference(&dest).iter() {
            b.remove(v);
        }
        return (b, dest);
    };
    let rot: Vec<Vertex> = (0..m).map(|j| w[(q + j) % m]).collect();
    let pos = positions(order);
    for i in 0..m / 2 {
        let (lo, hi) = (rot[2 * i], rot[2 * i + 1]);
        b.add(hi);
        for v in arc(order, pos[lo], pos[hi]) {
            if v != hi {
                b.remove(v);
            }
        }
    }
    let dest: SeedSet = rot.iter().skip(1).step_by(2).copied().collect();
    let extra: Vec<Vertex> = b.current().difference(&dest).iter().collect();
    for v in extra {
        b.remove(v);
    }
    (b, dest)
}

/// Odd `m`: with `I_i = w_i ..` (up to just before `w_{i+1}`), settle the
/// first interval that meets `s`, then pairs of intervals, landing on
/// `{w_i, w_{i+2}, ...}`. Then rotate with single jumps
/// (`{w_i, w_{i+2}, ...} -> {w_{i+2}, w_{i+4}, ...}` trades `w_i` for
/// `w_{i+1}`) until reaching `{w_1, w_3, ..., w_m}`.
fn odd_route(order: &[Vertex], w: &[Vertex], s: &SeedSet) -> (TarBuilder, SeedSet) {
    let m = w.len();
    let n = order.len();
    let pos = positions(order);
    let interval = |p: usize| -> Vec<Vertex> {
        let to = (pos[w[(p + 1) % m]] + n - 1) % n;
        if m == 1 {
            return order.to_vec();
        }
        arc(order, pos[w[p]], to)
    };
    let mut b = TarBuilder::new(s.clone());
    let p = (0..m)
        .find(|&p| interval(p).iter().any(|&v| s.contains(v)))
        .expect("a target set meets some interval");
    b.add(w[p]);
    for v in interval(p) {
        if v != w[p] {
            b.remove(v);
        }
    }
    for j in 1..=(m - 1) / 2 {
        let t = (p + 2 * j) % m;
        b.add(w[t]);
        for v in interval((p + 2 * j - 1) % m).into_iter().chain(interval(t)) {
            if v != w[t] {
                b.remove(v);
            }
        }
    }
    let mut i = p;
    while i != 0 {
        b.add(w[(i + 1) % m]);
        b.remove(w[i]);
        i = (i + 2) % m;
    }
    (b, w.iter().step_by(2).copied().collect())
}

pub fn cycle_analyze(g: &ThresholdGraph, s: &SeedSet) -> Result<CycleAnalysis> {
    let order = cycle_order(g)?;
    if !is_target_set(g, s)? {
        return Err(TsrError::NotATargetSet);
    }
    let w = threshold2(g, &order);
    let m = w.len();
    let k = s.len();
    let (case, minimum_sets, route, canonical) = if m == 0 {
        let route = threshold1::tar_to_canonical(g, s)?;
        let canon = route.end()?;
        let all = (0..g.n()).map(|v| SeedSet::new([v])).collect();
        (CycleCase::Threshold1, all, route, canon)
    } else if m.is_multiple_of(2) {
        let (b, dest) = even_route(&order, &w, s);
        let sets = vec![
            w.iter().step_by(2).copied().collect(),
            w.iter().skip(1).step_by(2).copied().collect(),
        ];
        (CycleCase::Even, sets, b.finish(k), dest)
    } else {
        let (b, dest) = odd_route(&order, &w, s);
        let sets = (0..m)
            .map(|i| (0..m.div_ceil(2)).map(|j| w[(i + 2 * j) % m]).collect())
            .collect();
        (CycleCase::Odd, sets, b.finish(k), dest)
    };
    Ok(CycleAnalysis {
        case,
        min_size: min_size(ComponentKind::Cycle, m),
        w,
        minimum_sets,
        canonical,
        route,
    })
}

/// Even `m >= 2`: the `(m/2 + 1)`-TAR route `{w_1, w_3, ...} -> {w_2, w_4, ...}`.
/// Add `w_m`, then trade `w_{2i-1}` for `w_{2i}` for `i < m/2`, then drop
/// `w_{m-1}`.
pub fn cycle_switch(g: &ThresholdGraph) -> Result<ReconfigSequence> {
    let order = cycle_order(g)?;
    let w = threshold2(g, &order);
    let m = w.len();
    if m == 0 || m % 2 == 1 {
        return Err(TsrError::PreconditionViolated(format!(
            "cycle has {m} threshold-2 vertices, need a positive even number"
        )));
    }
    let mut b = TarBuilder::new(w.iter().step_by(2).copied().collect());
    b.add(w[m - 1]);
    for i in 1..m / 2 {
        b.add(w[2 * i - 1]);
        b.remove(w[2 * i - 2]);
    }
    b.remove(w[m - 2]);
    Ok(b.finish(m / 2 + 1))
}

/// Decides TJ-reconfigurability on a graph of maximum degree 2.
///
/// The answer is no exactly when both sets are minimum and they differ on
/// some terrible cycle. Otherwise every differing component is routed to
/// its canonical minimum set, even cycles whose two canonical sets differ
/// are switched over, and `y`'s routes are replayed backwards. When the
/// sets are not minimum, the lexicographically first removable pair
/// `x ∈ X`, `y ∈ Y` is dropped first to make room for the switches; if no
/// single seed is removable, non-minimum components are also routed so
/// that the switches fit.
pub fn solve_maxdeg2(g: &ThresholdGraph, x: &SeedSet, y: &SeedSet) -> Result<Solution> {
    require_max_degree_2(g)?;
    check_endpoints(g, x, y)?;
    let comps = locals(g)?;
    let k = x.len();
    let minimum = k == comps.iter().map(Local::min_size).sum::<usize>();
    let terrible: Vec<&Local> = comps.iter().filter(|c| c.terrible()).collect();
    let case = if terrible.is_empty() {
        1
    } else if !minimum {
        2
    } else if terrible.iter().all(|c| c.project(x) == c.project(y)) {
        3
    } else {
        4
    };
    if case == 4 {
        return Ok(Solution {
            reconfigurable: false,
            sequence: None,
            case: Some(4),
        });
    }

    let mut b = TarBuilder::new(x.clone());
    let removable = |s: &SeedSet| -> Result<Option<Vertex>> {
        for v in s.iter() {
            if is_target_set(g, &s.without(v))? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    };
    let pair = if case == 2 {
        match (removable(x)?, removable(y)?) {
            (Some(a), Some(c)) => Some((a, c)),
            _ => None,
        }
    } else {
        None
    };
    match pair {
        Some((a, c)) => {
            b.remove(a);
            two_phase(&mut b, &comps, &x.without(a), &y.without(c))?;
            b.add(c);
        }
        None => two_phase(&mut b, &comps, x, y)?,
    }
    let route = b.finish(k);
    Ok(Solution {
        reconfigurable: true,
        sequence: Some(tar_to_tj(&route)?),
        case: Some(case),
    })
}

/// Route `xs -> ys` through canonical sets. The size never exceeds
/// `|xs| + 1`, except during the switch of a terrible cycle, which needs
/// `|xs| + 2` and happens only after the other components have shrunk.
fn two_phase(b: &mut TarBuilder, comps: &[Local], xs: &SeedSet, ys: &SeedSet) -> Result<()> {
    let mut switches = Vec::new();
    let mut back = Vec::new();
    for c in comps {
        let (xc, yc) = (c.project(xs), c.project(ys));
        if xc == yc && xc.len() == c.min_size() {
            continue;
        }
        let (rx, cx) = c.route(&xc)?;
        let (ry, cy) = c.route(&yc)?;
        b.extend(&lift_sequence(&rx, &c.map));
        if cx != cy {
            let forward = cycle_switch(&c.graph)?;
            let sw = if forward.start == cx {
                forward
            } else {
                forward.reversed()?
            };
            switches.push(lift_sequence(&sw, &c.map));
        }
        back.push(lift_sequence(&ry.reversed()?, &c.map));
    }
    for s in switches.iter().chain(&back) {
        b.extend(s);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::{min_target_set_size, tj_decide};
    use crate::reconfig::validate_sequence;

    fn set(v: &[Vertex]) -> SeedSet {
        SeedSet::new(v.iter().copied())
    }

    fn cycle_with(tau: Vec<u32>) -> ThresholdGraph {
        let n = tau.len();
        ThresholdGraph::new(cycle(n), tau).unwrap()
    }

    fn path_with(tau: Vec<u32>) -> ThresholdGraph {
        let n = tau.len();
        ThresholdGraph::from_edges(tau, &path_edges(n)).unwrap()
    }

    #[test]
    fn decomposes_the_example() {
        let d = decompose_deg2(&degree2_example()).unwrap();
        assert_eq!(d.components.len(), 2);
        let c = &d.components[0];
        assert_eq!((c.kind, c.m(), c.terrible), (ComponentKind::Cycle, 4, true));
        assert_eq!(c.w, vec![0, 1, 2, 3]);
        let p = &d.components[1];
        assert_eq!((p.kind, p.m(), p.terrible), (ComponentKind::Path, 0, false));
        assert_eq!(d.min_target_set_size(), 3);
    }

    #[test]
    fn small_decompositions() {
        let c5 = cycle_with(vec![2; 5]);
        let d = decompose_deg2(&c5).unwrap();
        assert_eq!((d.components[0].m(), d.components[0].terrible), (5, false));
        let edge = ThresholdGraph::uniform(2, 1, &[(0, 1)]).unwrap();
        let d = decompose_deg2(&edge).unwrap();
        assert_eq!((d.components[0].kind, d.components[0].m()), (ComponentKind::Path, 0));
        let star = ThresholdGraph::uniform(4, 1, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(decompose_deg2(&star), Err(TsrError::DegreeTooLarge { .. })));
    }

    #[test]
    fn path_formulas() {
        // t w w w t
        let g = path_with(vec![1, 2, 2, 2, 1]);
        let pc = path_canonical(&g).unwrap();
        assert_eq!((pc.min_size, pc.canonical.clone()), (2, set(&[1, 3])));
        // t w w w w t
        let g = path_with(vec![1, 2, 2, 2, 2, 1]);
        let pc = path_canonical(&g).unwrap();
        assert_eq!((pc.min_size, pc.canonical.clone()), (3, set(&[1, 3, 4])));
        assert!(is_target_set(&g, &pc.canonical).unwrap());
        assert_eq!(path_canonical(&path_with(vec![1, 1])).unwrap().min_size, 1);
    }

    #[test]
    fn path_without_removable_seed() {
        // {t1, w2, t2} is not minimum yet no single seed can go
        let g = path_with(vec![1, 2, 2, 2, 1]);
        let s = set(&[0, 2, 4]);
        assert!(s.iter().all(|v| !is_target_set(&g, &s.without(v)).unwrap()));
        let route = path_route(&g, &s).unwrap();
        assert!(validate_sequence(&g, &route).is_valid());
        assert_eq!(route.end().unwrap(), set(&[1, 3]));
    }

    // w1 a w2 b c w3 w4 d w5 e w6 f, ids w1..w6 = 0..5, a..f = 6..11
    fn six_cycle() -> ThresholdGraph {
        let order = [0, 6, 1, 7, 8, 2, 3, 9, 4, 10, 5, 11];
        let edges: Vec<_> = (0..12).map(|i| (order[i], order[(i + 1) % 12])).collect();
        let mut tau = vec![2; 6];
        tau.extend([1; 6]);
        ThresholdGraph::from_edges(tau, &edges).unwrap()
    }

    #[test]
    fn six_cycle_route() {
        let g = six_cycle();
        let (w3, w6, a, d, e) = (2, 5, 6, 9, 10);
        let s = set(&[w3, w6, a, d, e]);
        let an = cycle_analyze(&g, &s).unwrap();
        assert_eq!(an.case, CycleCase::Even);
        assert_eq!(an.min_size, 3);
        assert_eq!(an.canonical, set(&[1, 3, 5]));
        let r = validate_sequence(&g, &an.route);
        assert!(r.is_valid(), "{r:?}");
        assert!(r.max_size <= s.len() + 1);
        let sets = an.route.sets().unwrap();
        let (w2, w4) = (1, 3);
        // one stage per interval, then the leftover threshold-1 seed
        assert_eq!(sets[2], set(&[w2, w3, w6, d, e]));
        assert_eq!(sets[4], set(&[w2, w4, w6, d, e]));
        assert_eq!(sets[5], set(&[w2, w4, w6, d]));
        assert_eq!(sets[6], set(&[w2, w4, w6]));
        assert_eq!(sets.len(), 7);
    }

    // w1 a w2 b c w3 d e f w4 g w5 h i; w1..w5 = 0..4, a..i = 5..13
    fn five_cycle() -> ThresholdGraph {
        let order = [0, 5, 1, 6, 7, 2, 8, 9, 10, 3, 11, 4, 12, 13];
        let edges: Vec<_> = (0..14).map(|i| (order[i], order[(i + 1) % 14])).collect();
        let mut tau = vec![2; 5];
        tau.extend([1; 9]);
        ThresholdGraph::from_edges(tau, &edges).unwrap()
    }

    #[test]
    fn five_cycle_route() {
        let g = five_cycle();
        let s = set(&[1, 3, 5, 6, 12, 13]);
        let an = cycle_analyze(&g, &s).unwrap();
        assert_eq!(an.case, CycleCase::Odd);
        assert_eq!(an.min_size, 3);
        assert_eq!(an.canonical, set(&[0, 2, 4]));
        assert_eq!(an.minimum_sets.len(), 5);
        let r = validate_sequence(&g, &an.route);
        assert!(r.is_valid(), "{r:?}");
        assert!(r.max_size <= s.len() + 1);
        let (w1, w2, w3, w4, w5, b, h, i) = (0, 1, 2, 3, 4, 6, 12, 13);
        let sets = an.route.sets().unwrap();
        assert!(sets.contains(&set(&[w1, w2, w4, b, h, i])));
        assert!(sets.contains(&set(&[w1, w3, w4, h, i])));
        assert_eq!(*sets.last().unwrap(), set(&[w1, w3, w5]));
    }

    #[test]
    fn odd_rotation_reaches_every_special_set() {
        let g = cycle_with(vec![2, 1, 2, 2, 1, 2, 2]);
        let an = cycle_analyze(&g, &SeedSet::new(0..7)).unwrap();
        for special in &an.minimum_sets {
            let route = cycle_analyze(&g, special).unwrap().route;
            assert!(validate_sequence(&g, &route).is_valid());
            assert_eq!(route.end().unwrap(), an.canonical);
            assert!(route.max_size().unwrap() <= special.len() + 1);
        }
    }

    #[test]
    fn two_switch_is_a_jump() {
        let g = cycle_with(vec![2, 1, 2, 1]);
        let sw = cycle_switch(&g).unwrap();
        assert_eq!(sw.start, set(&[0]));
        assert_eq!(sw.end().unwrap(), set(&[2]));
        assert_eq!(tar_to_tj(&sw.clone()).map(|_| ()), Err(TsrError::EndpointSizeMismatch { start: 1, end: 1, expected: 2 }));
        let mut as_one = sw;
        as_one.model = crate::reconfig::Model::Tar(1);
        assert_eq!(tar_to_tj(&as_one).unwrap().len(), 1);
    }

    #[test]
    fn switch_on_eight() {
        let g = cycle_with(vec![2; 8]);
        let sw = cycle_switch(&g).unwrap();
        let r = validate_sequence(&g, &sw);
        assert!(r.is_valid());
        assert_eq!(r.max_size, 6);
        assert_eq!(sw.end().unwrap(), set(&[1, 3, 5, 7]));
    }

    #[test]
    fn threshold1_cycle() {
        let g = cycle_with(vec![1; 5]);
        let an = cycle_analyze(&g, &set(&[2, 4])).unwrap();
        assert_eq!((an.case, an.min_size), (CycleCase::Threshold1, 1));
        assert_eq!(an.canonical, set(&[0]));
        assert_eq!(min_target_set_size(&g).unwrap(), 1);
    }

    #[test]
    fn minimum_set_of_example() {
        let g = degree2_example();
        let s = deg2_minimum_set(&g).unwrap();
        assert_eq!(s.len(), decompose_deg2(&g).unwrap().min_target_set_size());
        assert!(is_target_set(&g, &s).unwrap());
    }

    #[test]
    fn example_verdicts() {
        let g = degree2_example();
        let (w1, w2, w3, w4, v1, v2) = (0, 1, 2, 3, 8, 9);
        let no = solve_maxdeg2(&g, &set(&[w1, w3, v1]), &set(&[w2, w4, v1])).unwrap();
        assert_eq!((no.reconfigurable, no.case), (false, Some(4)));
        let x = set(&[w1, w3, v1, v2]);
        let y = set(&[w2, w4, v1, v2]);
        let yes = solve_maxdeg2(&g, &x, &y).unwrap();
        assert_eq!((yes.reconfigurable, yes.case), (true, Some(2)));
        let seq = yes.sequence.unwrap();
        assert!(validate_sequence(&g, &seq).is_valid());
        assert_eq!(seq.end().unwrap(), y);
        assert!(tj_decide(&g, &x, &y).unwrap().reconfigurable());
    }

    #[test]
    fn frozen_cycle_with_movable_path() {
        let g = degree2_example();
        let x = set(&[0, 2, 8]);
        let y = set(&[0, 2, 9]);
        let sol = solve_maxdeg2(&g, &x, &y).unwrap();
        assert_eq!((sol.reconfigurable, sol.case), (true, Some(3)));
        assert!(validate_sequence(&g, &sol.sequence.unwrap()).is_valid());
    }
}
