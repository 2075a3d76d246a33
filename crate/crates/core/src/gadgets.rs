//! Gadget constructions. Every constructor keeps the host's vertex ids and
//! appends the gadget's vertices after them; the returned [`GadgetMap`]
//! names them and carries the seed maps between host and result.

use std::collections::BTreeMap;
use std::fmt;

use crate::activation::SeedSet;
use crate::error::{Result, TsrError};
use crate::graph::{SimpleGraph, ThresholdGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    OneWay,
    Upsilon,
    Theta,
    Xi,
    Sigma,
    Subdivision,
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::OneWay => "oneway",
            GadgetKind::Upsilon => "upsilon",
            GadgetKind::Theta => "theta",
            GadgetKind::Xi => "xi",
            GadgetKind::Sigma => "sigma",
            GadgetKind::Subdivision => "subdivision",
        })
    }
}

impl std::str::FromStr for GadgetKind {
    type Err = TsrError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "oneway" | "one-way" => GadgetKind::OneWay,
            "upsilon" => GadgetKind::Upsilon,
            "theta" => GadgetKind::Theta,
            "xi" => GadgetKind::Xi,
            "sigma" => GadgetKind::Sigma,
            "subdivision" | "sd" => GadgetKind::Subdivision,
            _ => return Err(TsrError::InvalidInput(format!("unknown gadget kind {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub kind: GadgetKind,
    /// Vertices `0..host_n` belong to the host.
    pub host_n: usize,
    pub internal: Vec<Vertex>,
    /// Host vertices the gadget hangs off, by their role name.
    pub anchors: BTreeMap<String, Vertex>,
    pub named: BTreeMap<String, Vertex>,
    /// Seeds added by [`GadgetMap::forward`]: `M` for Θ and Σ, `{a_1}` for Ξ.
    pub seed: SeedSet,
}

impl GadgetMap {
    fn new(kind: GadgetKind, host_n: usize) -> Self {
        GadgetMap {
            kind,
            host_n,
            internal: Vec::new(),
            anchors: BTreeMap::new(),
            named: BTreeMap::new(),
            seed: SeedSet::empty(),
        }
    }

    pub fn get(&self, label: &str) -> Option<Vertex> {
        self.named.get(label).or_else(|| self.anchors.get(label)).copied()
    }

    fn at(&self, label: &str) -> Vertex {
        self.get(label).expect("label set by the constructor")
    }

    pub fn is_internal(&self, v: Vertex) -> bool {
        v >= self.host_n
    }

    /// Host seed set to a seed set of the result.
    pub fn forward(&self, s: &SeedSet) -> SeedSet {
        s.union(&self.seed)
    }

    /// Seed set of the result back to the host.
    pub fn backward(&self, s: &SeedSet) -> SeedSet {
        match self.kind {
            GadgetKind::Upsilon => phi_upsilon(s, self),
            GadgetKind::Subdivision => phi_sd(s, self),
            _ => s.iter().filter(|&v| !self.is_internal(v)).collect(),
        }
    }

    /// `label id` lines, 1-based, anchors first.
    pub fn describe(&self) -> String {
        let mut out = format!("kind {}\n", self.kind);
        for (label, v) in self.anchors.iter().chain(&self.named) {
            out.push_str(&format!("{label} {}\n", v + 1));
        }
        out
    }
}

struct Builder {
    graph: SimpleGraph,
    tau: Vec<u32>,
    map: GadgetMap,
}

impl Builder {
    fn new(g: &ThresholdGraph, kind: GadgetKind) -> Self {
        let (graph, tau) = g.clone().into_parts();
        let map = GadgetMap::new(kind, graph.n());
        Builder { graph, tau, map }
    }

    fn anchor(&mut self, label: &str, v: Vertex) -> Result<Vertex> {
        if v >= self.map.host_n {
            return Err(TsrError::UnknownVertex(v));
        }
        self.map.anchors.insert(label.to_string(), v);
        Ok(v)
    }

    fn vertex(&mut self, label: &str, tau: u32) -> Vertex {
        let v = self.graph.add_vertex();
        self.tau.push(tau);
        self.map.internal.push(v);
        self.map.named.insert(label.to_string(), v);
        v
    }

    fn edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.graph.add_edge(u, v)
    }

    fn edges(&mut self, labels: &[(&str, &str)]) -> Result<()> {
        for (a, b) in labels {
            let (u, v) = (self.map.at(a), self.map.at(b));
            self.edge(u, v)?;
        }
        Ok(())
    }

    /// One-way gadget connecting from `from` to `to`, labels suffixed with
    /// `tag`; `bottom` adds the edge `(b_1, b_2)`.
    fn oneway(&mut self, from: Vertex, to: Vertex, tag: &str, bottom: bool) -> Result<()> {
        let t = self.vertex(&format!("t{tag}"), 1);
        let h = self.vertex(&format!("h{tag}"), 2);
        let sep = if tag.is_empty() { "" } else { "," };
        let b1 = self.vertex(&format!("b{tag}{sep}1"), 1);
        let b2 = self.vertex(&format!("b{tag}{sep}2"), 1);
        for (u, v) in [(t, b1), (t, b2), (h, b1), (h, b2), (from, t), (to, h)] {
            self.edge(u, v)?;
        }
        if bottom {
            self.edge(b1, b2)?;
        }
        Ok(())
    }

    fn finish(self) -> Result<(ThresholdGraph, GadgetMap)> {
        Ok((ThresholdGraph::new(self.graph, self.tau)?, self.map))
    }
}

/// Attaches a one-way gadget `{t, h, b1, b2}` connecting from `v` to `w`.
pub fn attach_oneway(g: &ThresholdGraph, v: Vertex, w: Vertex) -> Result<(ThresholdGraph, GadgetMap)> {
    if v == w {
        return Err(TsrError::SameVertex(v));
    }
    let mut b = Builder::new(g, GadgetKind::OneWay);
    b.anchor("v", v)?;
    b.anchor("w", w)?;
    b.oneway(v, w, "", false)?;
    b.finish()
}

/// Replaces the (3,3)-vertex `w` with a Υ-gadget. The neighbours
/// `x < y < z` are taken in id order. `w` keeps its id, now with
/// threshold 2.
pub fn replace_upsilon(g: &ThresholdGraph, w: Vertex) -> Result<(ThresholdGraph, GadgetMap)> {
    if !g.contains(w) {
        return Err(TsrError::UnknownVertex(w));
    }
    if g.degree(w) != 3 || g.tau(w) != 3 {
        return Err(TsrError::NotA33Vertex(w));
    }
    let nb = g.neighbors(w).to_vec();
    let mut b = Builder::new(g, GadgetKind::Upsilon);
    b.anchor("w", w)?;
    for (label, &u) in ["x", "y", "z"].iter().zip(&nb) {
        b.anchor(label, u)?;
        b.graph.remove_edge(w, u)?;
    }
    b.tau[w] = 2;
    b.vertex("v_x", 1);
    b.vertex("v_y", 1);
    b.vertex("v_xy", 2);
    b.edges(&[("x", "v_x"), ("y", "v_y"), ("v_x", "v_xy"), ("v_y", "v_xy")])?;
    b.vertex("v_z", 1);
    b.vertex("wbar", 2);
    b.vertex("v_w", 1);
    b.edges(&[
        ("w", "v_z"),
        ("v_z", "wbar"),
        ("wbar", "v_w"),
        ("v_w", "w"),
        ("v_w", "v_xy"),
        ("v_z", "z"),
    ])?;
    let (vx, vy, wbar) = (b.map.at("v_x"), b.map.at("v_y"), b.map.at("wbar"));
    b.oneway(w, vx, "_x", true)?;
    b.oneway(wbar, vy, "_y", true)?;
    b.finish()
}

/// Attaches a Θ-gadget to `v` and raises `τ(v)` by one. The gadget's
/// minimum target set `M = {r, t_{1,2}, t_{2,3}}` is `map.seed`.
pub fn attach_theta(g: &ThresholdGraph, v: Vertex) -> Result<(ThresholdGraph, GadgetMap)> {
    let mut b = Builder::new(g, GadgetKind::Theta);
    b.anchor("v", v)?;
    theta_body(&mut b)?;
    let r = b.map.at("r");
    b.edge(r, v)?;
    b.tau[v] += 1;
    b.map.seed = ["r", "t12", "t23"].iter().map(|l| b.map.at(l)).collect();
    b.finish()
}

fn theta_body(b: &mut Builder) -> Result<()> {
    let mut t = [[0; 6]; 2];
    for (i, row) in t.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = b.vertex(&format!("t{}{}", i + 1, j + 1), 2);
        }
    }
    for row in &t {
        for j in 0..6 {
            b.edge(row[j], row[(j + 1) % 6])?;
        }
    }
    for (&outer, &inner) in t[0].iter().zip(&t[1]) {
        b.edge(outer, inner)?;
    }
    b.edge(t[1][2], t[1][5])?;
    let r = b.vertex("r", 2);
    b.edge(r, t[0][0])?;
    b.edge(r, t[0][4])
}

/// Connects a Ξ-gadget between `v1` and `v2` and raises both thresholds.
/// `map.seed` is `{a_1}`.
pub fn connect_xi(g: &ThresholdGraph, v1: Vertex, v2: Vertex) -> Result<(ThresholdGraph, GadgetMap)> {
    if v1 == v2 {
        return Err(TsrError::SameVertex(v1));
    }
    let mut b = Builder::new(g, GadgetKind::Xi);
    b.anchor("v1", v1)?;
    b.anchor("v2", v2)?;
    xi_body(&mut b)?;
    b.edges(&[("v1", "a1"), ("v2", "a2")])?;
    b.tau[v1] += 1;
    b.tau[v2] += 1;
    b.map.seed = SeedSet::new([b.map.at("a1")]);
    b.finish()
}

fn xi_body(b: &mut Builder) -> Result<()> {
    for i in 1..=2 {
        for (c, tau) in [("a", 2), ("b", 1), ("c", 1), ("d", 1)] {
            b.vertex(&format!("{c}{i}"), tau);
        }
    }
    b.edges(&[
        ("a1", "b1"),
        ("b1", "c1"),
        ("c1", "d1"),
        ("d1", "a1"),
        ("a2", "b2"),
        ("b2", "c2"),
        ("c2", "d2"),
        ("d2", "a2"),
        ("b1", "b2"),
        ("c1", "c2"),
        ("d1", "d2"),
    ])
}

/// Connects a Σ-gadget to `v` of a plain graph (a vertex cover instance;
/// thresholds come later from [`crate::graph::vc_to_tss`]). `map.seed` is
/// the frozen cover `M = {r, t_2, t_4}`.
pub fn attach_sigma(g: &SimpleGraph, v: Vertex) -> Result<(SimpleGraph, GadgetMap)> {
    if !g.contains(v) {
        return Err(TsrError::UnknownVertex(v));
    }
    let mut graph = g.clone();
    let mut map = GadgetMap::new(GadgetKind::Sigma, g.n());
    map.anchors.insert("v".into(), v);
    for label in ["r", "t1", "t2", "t3", "t4"] {
        let u = graph.add_vertex();
        map.internal.push(u);
        map.named.insert(label.into(), u);
    }
    for (a, b) in SIGMA_EDGES {
        graph.add_edge(map.at(a), map.at(b))?;
    }
    graph.add_edge(map.at("r"), v)?;
    map.seed = ["r", "t2", "t4"].iter().map(|l| map.at(l)).collect();
    Ok((graph, map))
}

const SIGMA_EDGES: [(&str, &str); 7] = [
    ("r", "t1"),
    ("r", "t3"),
    ("t1", "t2"),
    ("t1", "t4"),
    ("t2", "t3"),
    ("t2", "t4"),
    ("t3", "t4"),
];

/// Subdivides `(u, v)` with a threshold-1 vertex `w`. `φ_sd` sends `w` to `u`.
pub fn subdivide(g: &ThresholdGraph, u: Vertex, v: Vertex) -> Result<(ThresholdGraph, GadgetMap)> {
    let (h, w) = crate::graph::subdivide_edge(g, u, v)?;
    let mut map = GadgetMap::new(GadgetKind::Subdivision, g.n());
    map.anchors.insert("u".into(), u);
    map.anchors.insert("v".into(), v);
    map.named.insert("w".into(), w);
    map.internal.push(w);
    Ok((h, map))
}

/// `φ_sd`: replace the subdivision vertex by `u`.
pub fn phi_sd(s: &SeedSet, map: &GadgetMap) -> SeedSet {
    let w = map.at("w");
    if s.contains(w) {
        s.without(w).with(map.at("u"))
    } else {
        s.clone()
    }
}

/// `φ_Υ`: unchanged if `s` avoids `w` and the gadget, otherwise its host
/// part plus `w`.
pub fn phi_upsilon(s: &SeedSet, map: &GadgetMap) -> SeedSet {
    let w = map.at("w");
    if s.iter().all(|v| v != w && !map.is_internal(v)) {
        s.clone()
    } else {
        s.iter().filter(|&v| !map.is_internal(v)).collect::<SeedSet>().with(w)
    }
}

/// The gadget on its own, over the smallest host that makes it a valid
/// instance:
///
/// - oneway: host edge `1-2`, τ ≡ 1, gadget from 1 to 2;
/// - upsilon: host star with a (3,3) centre `1` and leaves `2, 3, 4`;
/// - theta, xi: no host (the apex `r`, resp. `a_1`, `a_2`, keep their
///   stated thresholds with one fewer neighbour);
/// - sigma: no host, τ = degree;
/// - subdivision: host edge `1-2`, τ ≡ 1.
pub fn standalone(kind: GadgetKind) -> Result<(ThresholdGraph, GadgetMap)> {
    let edge = || ThresholdGraph::uniform(2, 1, &[(0, 1)]);
    match kind {
        GadgetKind::OneWay => attach_oneway(&edge()?, 0, 1),
        GadgetKind::Subdivision => subdivide(&edge()?, 0, 1),
        GadgetKind::Upsilon => {
            let star = ThresholdGraph::from_edges(vec![3, 1, 1, 1], &[(0, 1), (0, 2), (0, 3)])?;
            replace_upsilon(&star, 0)
        }
        GadgetKind::Theta => {
            let mut b = Builder::new(&ThresholdGraph::uniform(0, 1, &[])?, GadgetKind::Theta);
            theta_body(&mut b)?;
            b.map.seed = ["r", "t12", "t23"].iter().map(|l| b.map.at(l)).collect();
            b.finish()
        }
        GadgetKind::Xi => {
            let mut b = Builder::new(&ThresholdGraph::uniform(0, 1, &[])?, GadgetKind::Xi);
            xi_body(&mut b)?;
            b.tau[b.map.at("a1")] = 2;
            b.finish()
        }
        GadgetKind::Sigma => {
            let mut g = SimpleGraph::new(5);
            let names = ["r", "t1", "t2", "t3", "t4"];
            let id = |l: &str| names.iter().position(|&n| n == l).unwrap();
            for (a, b) in SIGMA_EDGES {
                g.add_edge(id(a), id(b))?;
            }
            let mut map = GadgetMap::new(GadgetKind::Sigma, 0);
            for (i, l) in names.iter().enumerate() {
                map.named.insert(l.to_string(), i);
                map.internal.push(i);
            }
            map.seed = ["r", "t2", "t4"].iter().map(|l| map.at(l)).collect();
            Ok((crate::graph::vc_to_tss(&g)?, map))
        }
    }
}
