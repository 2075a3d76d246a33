//! Simple undirected graphs, threshold graphs, and the structural
//! predicates the solvers and reductions rely on.
//!
//! Vertices are dense 0-based indices inside the library. All text formats
//! (see [`crate::format`]) use 1-based ids.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Result, TsrError};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for x in [u, v] {
            if !self.contains(x) {
                return Err(TsrError::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(TsrError::SelfLoop(u));
        }
        let pos = match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(TsrError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => pos,
        };
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(TsrError::EdgeNotFound(u.min(v), u.max(v)));
        }
        let i = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(i);
        let j = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(j);
        self.m -= 1;
        Ok(())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Proper 2-colouring by BFS, or `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Split partition `(clique, independent)` if the graph is split.
    ///
    /// Uses the degree-sequence test of Hammer and Simeone, then checks the
    /// partition it induces explicitly.
    pub fn split_partition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut order: Vec<Vertex> = (0..self.n()).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        let deg: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let mut k = 0;
        for (i, &d) in deg.iter().enumerate() {
            if d >= i {
                k = i + 1;
            }
        }
        let head: usize = deg[..k].iter().sum();
        let tail: usize = deg[k..].iter().sum();
        if head != k * k.saturating_sub(1) + tail {
            return None;
        }
        let mut clique = order[..k].to_vec();
        let mut independent = order[k..].to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        let is_clique = clique
            .iter()
            .enumerate()
            .all(|(i, &u)| clique[i + 1..].iter().all(|&v| self.has_edge(u, v)));
        let is_independent = independent
            .iter()
            .enumerate()
            .all(|(i, &u)| independent[i + 1..].iter().all(|&v| !self.has_edge(u, v)));
        (is_clique && is_independent).then_some((clique, independent))
    }

    /// Subgraph induced by `vertices` (in the given order) plus the map from
    /// new index to old vertex.
    pub fn induced(&self, vertices: &[Vertex]) -> (SimpleGraph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced subgraph of a simple graph is simple");
                }
            }
        }
        (g, vertices.to_vec())
    }
}

/// Simple graph with a threshold per vertex. Always satisfies
/// `1 <= tau(v) <= d(v)`, so it never has isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdGraph {
    graph: SimpleGraph,
    tau: Vec<u32>,
}

impl ThresholdGraph {
    pub fn new(graph: SimpleGraph, tau: Vec<u32>) -> Result<Self> {
        if tau.len() != graph.n() {
            return Err(TsrError::InvalidInput(format!(
                "{} thresholds for {} vertices",
                tau.len(),
                graph.n()
            )));
        }
        for (v, &t) in tau.iter().enumerate() {
            let degree = graph.degree(v);
            if t < 1 || t as usize > degree {
                return Err(TsrError::ThresholdOutOfRange {
                    vertex: v,
                    tau: t,
                    degree,
                });
            }
        }
        Ok(ThresholdGraph { graph, tau })
    }

    pub fn from_edges(tau: Vec<u32>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let graph = SimpleGraph::from_edges(tau.len(), edges)?;
        ThresholdGraph::new(graph, tau)
    }

    /// Every vertex gets the same threshold.
    pub fn uniform(n: usize, tau: u32, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        ThresholdGraph::from_edges(vec![tau; n], edges)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.graph.neighbors(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.degree(v)
    }

    pub fn tau(&self, v: Vertex) -> u32 {
        self.tau[v]
    }

    pub fn thresholds(&self) -> &[u32] {
        &self.tau
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.graph.contains(v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.graph.edges()
    }

    pub fn into_parts(self) -> (SimpleGraph, Vec<u32>) {
        (self.graph, self.tau)
    }

    /// Induced subgraph on `vertices`, keeping the thresholds. Fails if the
    /// result would violate the threshold invariant.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<(ThresholdGraph, Vec<Vertex>)> {
        let (g, map) = self.graph.induced(vertices);
        let tau = map.iter().map(|&v| self.tau[v]).collect();
        Ok((ThresholdGraph::new(g, tau)?, map))
    }

    /// Connected components as standalone threshold graphs.
    pub fn component_graphs(&self) -> Vec<(ThresholdGraph, Vec<Vertex>)> {
        self.graph
            .components()
            .into_iter()
            .map(|c| self.induced(&c).expect("components keep every degree"))
            .collect()
    }
}

/// Structural summary of a threshold graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphClassReport {
    pub n: usize,
    pub m: usize,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub max_degree: usize,
    pub degree_set: BTreeSet<usize>,
    pub threshold_set: BTreeSet<u32>,
}

impl GraphClassReport {
    /// Whether every vertex is a `(d, t)`-vertex with `d` in `degrees` and
    /// `t` in `thresholds`.
    pub fn is_dt_graph(&self, degrees: &[usize], thresholds: &[u32]) -> bool {
        self.degree_set.iter().all(|d| degrees.contains(d))
            && self.threshold_set.iter().all(|t| thresholds.contains(t))
    }
}

pub fn classify(g: &ThresholdGraph) -> GraphClassReport {
    GraphClassReport {
        n: g.n(),
        m: g.m(),
        is_connected: g.graph.is_connected(),
        is_tree: g.graph.is_tree(),
        is_bipartite: g.graph.is_bipartite(),
        max_degree: g.graph.max_degree(),
        degree_set: (0..g.n()).map(|v| g.degree(v)).collect(),
        threshold_set: g.tau.iter().copied().collect(),
    }
}

/// `g1 ⊕ g2`. Vertices of `g2` are shifted by `g1.n()`; the shift is returned.
pub fn disjoint_union(g1: &ThresholdGraph, g2: &ThresholdGraph) -> (ThresholdGraph, usize) {
    let offset = g1.n();
    let mut graph = g1.graph.clone();
    for _ in 0..g2.n() {
        graph.add_vertex();
    }
    for (u, v) in g2.edges() {
        graph
            .add_edge(u + offset, v + offset)
            .expect("shifted edges are fresh");
    }
    let mut tau = g1.tau.clone();
    tau.extend_from_slice(&g2.tau);
    let g = ThresholdGraph::new(graph, tau).expect("union of valid graphs is valid");
    (g, offset)
}

/// Replaces edge `(u, v)` by a path `u - w - v` through a new vertex `w`
/// with threshold 1.
pub fn subdivide_edge(g: &ThresholdGraph, u: Vertex, v: Vertex) -> Result<(ThresholdGraph, Vertex)> {
    let mut graph = g.graph.clone();
    graph.remove_edge(u, v)?;
    let w = graph.add_vertex();
    graph.add_edge(u, w)?;
    graph.add_edge(w, v)?;
    let mut tau = g.tau.clone();
    tau.push(1);
    Ok((ThresholdGraph::new(graph, tau)?, w))
}

/// Thresholds equal to degrees: target sets are exactly the vertex covers.
pub fn vc_to_tss(g: &SimpleGraph) -> Result<ThresholdGraph> {
    degree_offset_thresholds(g, 0)
}

/// Thresholds equal to degree minus one: target sets are exactly the
/// feedback vertex sets.
pub fn fvs_to_tss(g: &SimpleGraph) -> Result<ThresholdGraph> {
    degree_offset_thresholds(g, 1)
}

fn degree_offset_thresholds(g: &SimpleGraph, offset: usize) -> Result<ThresholdGraph> {
    let mut tau = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let degree = g.degree(v);
        if degree < offset + 1 {
            return Err(TsrError::DegreeTooSmall {
                vertex: v,
                degree,
                required: offset + 1,
            });
        }
        tau.push((degree - offset) as u32);
    }
    ThresholdGraph::new(g.clone(), tau)
}

/// Small named graphs used by fixtures, generators and tests.
pub mod families {
    use super::*;

    pub fn path_edges(n: usize) -> Vec<(Vertex, Vertex)> {
        (1..n).map(|i| (i - 1, i)).collect()
    }

    pub fn cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
        let mut e = path_edges(n);
        if n >= 3 {
            e.push((0, n - 1));
        }
        e
    }

    pub fn complete_edges(n: usize) -> Vec<(Vertex, Vertex)> {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect()
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, &cycle_edges(n)).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, &complete_edges(n)).expect("clique is simple")
    }

    /// `C4` with threshold 2 plus `P2` with threshold 1: vertices
    /// `c1..c4 = 0..3`, `p1, p2 = 4, 5`.
    pub fn cycle4_plus_edge() -> ThresholdGraph {
        ThresholdGraph::from_edges(
            vec![2, 2, 2, 2, 1, 1],
            &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5)],
        )
        .expect("fixture is valid")
    }

    /// A cycle with four threshold-2 vertices separated by threshold-1
    /// vertices, plus a threshold-1 edge.
    ///
    /// Cycle order `w1 a w2 b c w3 w4 d`; ids `w1..w4 = 0..3`,
    /// `a, b, c, d = 4..7`, path `v1, v2 = 8, 9`.
    pub fn degree2_example() -> ThresholdGraph {
        let (w1, w2, w3, w4, a, b, c, d, v1, v2) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
        ThresholdGraph::from_edges(
            vec![2, 2, 2, 2, 1, 1, 1, 1, 1, 1],
            &[
                (w1, a),
                (a, w2),
                (w2, b),
                (b, c),
                (c, w3),
                (w3, w4),
                (w4, d),
                (d, w1),
                (v1, v2),
            ],
        )
        .expect("fixture is valid")
    }

    /// The 14-vertex rooted tree used to illustrate the tree algorithm.
    /// Ids `r, a, b, c, d, e, f, g, h, i, j, k, l, m = 0..13`.
    pub fn chen_example_tree() -> ThresholdGraph {
        let (r, a, b, c, d, e, f, g, h, i, j, k, l, m) =
            (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13);
        ThresholdGraph::from_edges(
            vec![1, 2, 2, 1, 3, 3, 1, 2, 2, 1, 1, 1, 1, 1],
            &[
                (r, a),
                (a, b),
                (b, c),
                (b, d),
                (c, e),
                (c, f),
                (d, g),
                (d, h),
                (e, i),
                (e, j),
                (g, k),
                (g, l),
                (h, m),
            ],
        )
        .expect("fixture is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn rejects_threshold_above_degree() {
        let err = ThresholdGraph::from_edges(vec![1, 3, 1], &path_edges(3)).unwrap_err();
        assert!(matches!(err, TsrError::ThresholdOutOfRange { vertex: 1, tau: 3, degree: 2 }));
    }

    #[test]
    fn rejects_self_loop_and_duplicate() {
        assert_eq!(SimpleGraph::from_edges(2, &[(1, 1)]), Err(TsrError::SelfLoop(1)));
        assert_eq!(
            SimpleGraph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(TsrError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn classify_star_and_odd_cycle() {
        let star = ThresholdGraph::uniform(4, 1, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = classify(&star);
        assert!(r.is_tree && r.is_bipartite);
        assert_eq!(r.max_degree, 3);
        assert_eq!(r.degree_set, BTreeSet::from([1, 3]));

        let c5 = ThresholdGraph::new(cycle(5), vec![2; 5]).unwrap();
        let r = classify(&c5);
        assert!(!r.is_bipartite && !r.is_tree);
        assert!(r.is_dt_graph(&[2], &[2]));
        assert!(!r.is_dt_graph(&[2], &[1]));
    }

    #[test]
    fn union_of_two_edges() {
        let e = ThresholdGraph::uniform(2, 1, &[(0, 1)]).unwrap();
        let (u, off) = disjoint_union(&e, &e);
        assert_eq!((u.n(), u.m(), off), (4, 2, 2));
        assert!(u.has_edge(2, 3));
        assert!(!classify(&u).is_connected);
    }

    #[test]
    fn union_reproduces_cycle_plus_edge() {
        let c4 = ThresholdGraph::new(cycle(4), vec![2; 4]).unwrap();
        let p2 = ThresholdGraph::uniform(2, 1, &[(0, 1)]).unwrap();
        let (g, _) = disjoint_union(&c4, &p2);
        assert_eq!(g, cycle4_plus_edge());
        assert_eq!((g.n(), g.m()), (6, 5));
    }

    #[test]
    fn subdivide_single_edge() {
        let p2 = ThresholdGraph::uniform(2, 1, &[(0, 1)]).unwrap();
        let (p3, w) = subdivide_edge(&p2, 0, 1).unwrap();
        assert_eq!((p3.n(), p3.m(), w), (3, 2, 2));
        assert_eq!(p3.tau(w), 1);
        assert!(p3.has_edge(0, 2) && p3.has_edge(1, 2) && !p3.has_edge(0, 1));
    }

    #[test]
    fn subdivide_missing_edge() {
        let p3 = ThresholdGraph::uniform(3, 1, &path_edges(3)).unwrap();
        assert_eq!(subdivide_edge(&p3, 0, 2).unwrap_err(), TsrError::EdgeNotFound(0, 2));
    }

    #[test]
    fn subdividing_every_edge_is_bipartite() {
        let k4 = ThresholdGraph::new(complete(4), vec![3; 4]).unwrap();
        let mut g = k4.clone();
        for (u, v) in k4.edges() {
            g = subdivide_edge(&g, u, v).unwrap().0;
        }
        assert!(classify(&g).is_bipartite);
        assert_eq!(g.n(), 4 + 6);
    }

    #[test]
    fn vc_and_fvs_thresholds() {
        assert_eq!(vc_to_tss(&cycle(3)).unwrap().thresholds(), &[2, 2, 2]);
        // K4 is cubic
        assert_eq!(fvs_to_tss(&complete(4)).unwrap().thresholds(), &[2, 2, 2, 2]);
        let p2 = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(fvs_to_tss(&p2), Err(TsrError::DegreeTooSmall { .. })));
        let isolated = SimpleGraph::new(1);
        assert!(matches!(vc_to_tss(&isolated), Err(TsrError::DegreeTooSmall { .. })));
    }

    #[test]
    fn split_recognition() {
        // triangle with a pendant is split, C4 and 2K2 are not
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let (clique, indep) = g.split_partition().unwrap();
        assert_eq!(clique.len() + indep.len(), 4);
        assert!(cycle(4).split_partition().is_none());
        let two_k2 = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.split_partition().is_none());
    }

    #[test]
    fn fixtures_are_valid() {
        let g = degree2_example();
        assert_eq!((g.n(), g.m()), (10, 9));
        assert_eq!(classify(&g).max_degree, 2);
        let t = chen_example_tree();
        assert!(classify(&t).is_tree);
    }
}
