//! Line-oriented text formats. Every id in a file is 1-based; the parsers
//! shift to 0-based on the way in and the writers shift back.
//!
//! ```text
//! p tsr <n> <m>        graph header, then `v <id> <tau>` and `e <u> <v>` lines
//! s <id> ...           seed set
//! q <model> <k>        sequence header, then an `s` line and one step per line:
//!                      `j <out> <in>`, `a <v>`, `r <v>`, `n`
//! a <u> <v>            one arc of an orientation
//! p hs <n> <m> <k>     hitting system header, then `f <elem> ...` per set
//! ```
//!
//! Blank lines and anything after `#` are ignored.

use std::fmt::Write as _;

use crate::activation::{ActivationTrace, Orientation, SeedSet};
use crate::error::{Result, TsrError};
use crate::graph::{SimpleGraph, ThresholdGraph, Vertex};
use crate::reconfig::{Model, ReconfigSequence, Step};
use crate::reductions::HittingSystem;

fn malformed(line: usize, reason: impl Into<String>) -> TsrError {
    TsrError::MalformedLine {
        line,
        reason: reason.into(),
    }
}

/// Non-empty lines with comments stripped, paired with their 1-based line
/// numbers and split into tokens.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| malformed(line, format!("bad {what} `{tok}`")))
}

fn id(line: usize, tok: &str) -> Result<Vertex> {
    let v: usize = num(line, tok, "vertex id")?;
    if v == 0 {
        return Err(malformed(line, "vertex ids start at 1"));
    }
    Ok(v - 1)
}

fn bounded_id(line: usize, tok: &str, n: usize) -> Result<Vertex> {
    let v = id(line, tok)?;
    if v >= n {
        return Err(malformed(line, format!("vertex {} exceeds n = {n}", v + 1)));
    }
    Ok(v)
}

fn arity(line: usize, toks: &[&str], want: usize) -> Result<()> {
    if toks.len() != want {
        return Err(malformed(
            line,
            format!("`{}` expects {} fields, got {}", toks[0], want - 1, toks.len() - 1),
        ));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<ThresholdGraph> {
    let mut lines = tokens(text);
    let (hline, head) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    if head.len() != 4 || head[0] != "p" || head[1] != "tsr" {
        return Err(malformed(hline, "expected header `p tsr <n> <m>`"));
    }
    let n: usize = num(hline, head[2], "vertex count")?;
    let m: usize = num(hline, head[3], "edge count")?;

    let mut tau: Vec<Option<u32>> = vec![None; n];
    let mut graph = SimpleGraph::new(n);
    let mut last = hline;
    for (line, toks) in lines {
        last = line;
        match toks[0] {
            "v" => {
                arity(line, &toks, 3)?;
                let v = bounded_id(line, toks[1], n)?;
                let t: u32 = num(line, toks[2], "threshold")?;
                if tau[v].replace(t).is_some() {
                    return Err(malformed(line, format!("vertex {} declared twice", v + 1)));
                }
            }
            "e" => {
                arity(line, &toks, 3)?;
                let u = bounded_id(line, toks[1], n)?;
                let v = bounded_id(line, toks[2], n)?;
                graph.add_edge(u, v)?;
            }
            other => return Err(malformed(line, format!("unknown line type `{other}`"))),
        }
    }
    let missing: Vec<String> = (0..n)
        .filter(|&v| tau[v].is_none())
        .map(|v| (v + 1).to_string())
        .collect();
    if !missing.is_empty() {
        return Err(TsrError::IdGap(format!("no `v` line for {}", missing.join(", "))));
    }
    if graph.m() != m {
        return Err(malformed(last, format!("header declares {m} edges, found {}", graph.m())));
    }
    ThresholdGraph::new(graph, tau.into_iter().map(Option::unwrap).collect())
}

/// Canonical form: vertices in id order, edges sorted with `u < v`.
pub fn serialize_graph(g: &ThresholdGraph) -> String {
    let mut out = format!("p tsr {} {}\n", g.n(), g.m());
    for v in 0..g.n() {
        let _ = writeln!(out, "v {} {}", v + 1, g.tau(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

fn ids_line(tag: &str, ids: impl IntoIterator<Item = Vertex>) -> String {
    let mut s = tag.to_string();
    for v in ids {
        let _ = write!(s, " {}", v + 1);
    }
    s
}

fn seed_tokens(line: usize, toks: &[&str]) -> Result<SeedSet> {
    let ids = toks[1..]
        .iter()
        .map(|t| id(line, t))
        .collect::<Result<Vec<_>>>()?;
    let set = SeedSet::new(ids.iter().copied());
    if set.len() != ids.len() {
        return Err(malformed(line, "repeated vertex in seed set"));
    }
    Ok(set)
}

pub fn parse_seed(text: &str) -> Result<SeedSet> {
    let mut found = None;
    for (line, toks) in tokens(text) {
        if toks[0] != "s" {
            return Err(malformed(line, "expected `s <ids...>`"));
        }
        if found.is_some() {
            return Err(malformed(line, "more than one seed line"));
        }
        found = Some(seed_tokens(line, &toks)?);
    }
    found.ok_or_else(|| malformed(1, "no seed line"))
}

pub fn serialize_seed(s: &SeedSet) -> String {
    ids_line("s", s.iter()) + "\n"
}

pub fn parse_sequence(text: &str) -> Result<ReconfigSequence> {
    let mut lines = tokens(text);
    let (hline, head) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    if head[0] != "q" || head.len() != 3 {
        return Err(malformed(hline, "expected header `q <model> <k>`"));
    }
    let k: usize = num(hline, head[2], "k")?;
    let model = match head[1].to_ascii_lowercase().as_str() {
        "tj" => Model::Tj,
        "tjn" => Model::Tjn,
        "tar" => Model::Tar(k),
        other => return Err(malformed(hline, format!("unknown model `{other}`"))),
    };
    let (sline, stoks) = lines
        .next()
        .ok_or_else(|| malformed(hline, "missing start line"))?;
    if stoks[0] != "s" {
        return Err(malformed(sline, "expected start line `s <ids...>`"));
    }
    let start = seed_tokens(sline, &stoks)?;
    let mut steps = Vec::new();
    for (line, toks) in lines {
        let step = match toks[0] {
            "j" => {
                arity(line, &toks, 3)?;
                let out = id(line, toks[1])?;
                let into = id(line, toks[2])?;
                if out == into {
                    return Err(malformed(line, "jump must move between distinct vertices"));
                }
                Step::Jump { out, into }
            }
            "a" => {
                arity(line, &toks, 2)?;
                Step::Add(id(line, toks[1])?)
            }
            "r" => {
                arity(line, &toks, 2)?;
                Step::Remove(id(line, toks[1])?)
            }
            "n" => {
                arity(line, &toks, 1)?;
                Step::Noop
            }
            other => return Err(malformed(line, format!("unknown step `{other}`"))),
        };
        steps.push(step);
    }
    Ok(ReconfigSequence { start, steps, model })
}

pub fn serialize_sequence(seq: &ReconfigSequence) -> String {
    let (name, k) = match seq.model {
        Model::Tj => ("tj", seq.start.len()),
        Model::Tjn => ("tjn", seq.start.len()),
        Model::Tar(k) => ("tar", k),
    };
    let mut out = format!("q {name} {k}\n{}\n", ids_line("s", seq.start.iter()));
    for step in &seq.steps {
        let _ = match *step {
            Step::Jump { out: o, into } => writeln!(out, "j {} {}", o + 1, into + 1),
            Step::Add(v) => writeln!(out, "a {}", v + 1),
            Step::Remove(v) => writeln!(out, "r {}", v + 1),
            Step::Noop => writeln!(out, "n"),
        };
    }
    out
}

pub fn parse_orientation(text: &str) -> Result<Orientation> {
    let mut arcs = Vec::new();
    for (line, toks) in tokens(text) {
        if toks[0] != "a" {
            return Err(malformed(line, "expected `a <u> <v>`"));
        }
        arity(line, &toks, 3)?;
        arcs.push((id(line, toks[1])?, id(line, toks[2])?));
    }
    Ok(Orientation { arcs })
}

pub fn serialize_orientation(d: &Orientation) -> String {
    d.arcs
        .iter()
        .map(|&(u, v)| format!("a {} {}\n", u + 1, v + 1))
        .collect()
}

/// One `round <t>: <ids>` line per step that activated something.
pub fn format_trace(trace: &ActivationTrace) -> String {
    let mut out = String::new();
    for (t, round) in trace.rounds.iter().enumerate() {
        let ids: Vec<String> = round.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "round {t}: {}", ids.join(" "));
    }
    out
}

pub fn parse_hitting_system(text: &str) -> Result<HittingSystem> {
    let mut lines = tokens(text);
    let (hline, head) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    if head.len() != 5 || head[0] != "p" || head[1] != "hs" {
        return Err(malformed(hline, "expected header `p hs <n> <m> <k>`"));
    }
    let n: usize = num(hline, head[2], "universe size")?;
    let m: usize = num(hline, head[3], "family size")?;
    let k: usize = num(hline, head[4], "k")?;
    let mut sets = Vec::with_capacity(m);
    let mut last = hline;
    for (line, toks) in lines {
        last = line;
        if toks[0] != "f" {
            return Err(malformed(line, "expected `f <elems...>`"));
        }
        let mut set = toks[1..]
            .iter()
            .map(|t| bounded_id(line, t, n))
            .collect::<Result<Vec<_>>>()?;
        set.sort_unstable();
        set.dedup();
        sets.push(set);
    }
    if sets.len() != m {
        return Err(malformed(last, format!("header declares {m} sets, found {}", sets.len())));
    }
    HittingSystem::new(n, sets, k)
}

pub fn serialize_hitting_system(hs: &HittingSystem) -> String {
    let mut out = format!("p hs {} {} {}\n", hs.n, hs.sets.len(), hs.k);
    for f in &hs.sets {
        out += &ids_line("f", f.iter().copied());
        out.push('\n');
    }
    out
}

/// `origin <id> <tag>` lines, one per vertex.
pub fn format_provenance(tags: &[String]) -> String {
    tags.iter()
        .enumerate()
        .map(|(v, tag)| format!("origin {} {tag}\n", v + 1))
        .collect()
}
