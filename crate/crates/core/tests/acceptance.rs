//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tsr_core::activation::activate;
use tsr_core::gadgets::{standalone, GadgetKind};
use tsr_core::generate::{
    cycle_with_spacing, path_with_spacing, random_connected, random_deg2, random_hitting_system, random_tree,
};
use tsr_core::graph::families::{chen_example_tree, complete_edges, cycle, cycle4_plus_edge, degree2_example};
use tsr_core::graph::vc_to_tss;
use tsr_core::oracle::Oracle;
use tsr_core::reconfig::{tar_to_tj, tj_to_tar};
use tsr_core::reductions::{
    reduce_33_to_b312, reduce_33_to_pb342, reduce_hitting_to_split, reduce_vc23_to_cubic, verify_reduction,
    ReductionOutput, Source,
};
use tsr_core::solvers::deg2::{cycle_switch, decompose_deg2};
use tsr_core::solvers::{chen_tree, solve_maxdeg2, tree_tar_to_canonical};
use tsr_core::{is_target_set, validate_sequence, Model, SeedSet, ThresholdGraph};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn theta_certificate() -> Outcome {
    let start = Instant::now();
    let (r, map) = standalone(GadgetKind::Theta).map_err(e)?;
    let oracle = Oracle::default();
    let min = oracle.min_target_set_size(&r).map_err(e)?;
    ensure(min == 3, || format!("minimum size {min}"))?;
    let at = |l: &str| map.get(l).expect("label exists");
    let m = SeedSet::new(["r", "t12", "t23"].map(at));
    ensure(map.seed == m, || format!("gadget seed {}", map.seed))?;
    let trace = activate(&r, &m).map_err(e)?;
    let schedule: [&[&str]; 8] = [
        &["r", "t12", "t23"],
        &["t11", "t13", "t22"],
        &["t21"],
        &["t26"],
        &["t16"],
        &["t15"],
        &["t25", "t14"],
        &["t24"],
    ];
    ensure(trace.rounds.len() == schedule.len(), || format!("{} rounds", trace.rounds.len()))?;
    for (t, names) in schedule.iter().enumerate() {
        let want = SeedSet::new(names.iter().map(|l| at(l)));
        let got = SeedSet::new(trace.rounds[t].iter().copied());
        ensure(got == want, || format!("round {t}: got {got}, want {want}"))?;
    }
    let mut pairs = 0;
    for u in 0..r.n() {
        for v in u + 1..r.n() {
            pairs += 1;
            ensure(!is_target_set(&r, &SeedSet::new([u, v])).map_err(e)?, || {
                format!("{{{}, {}}} activates everything", u + 1, v + 1)
            })?;
        }
    }
    ensure(pairs == 78, || format!("{pairs} pairs"))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(1), || format!("took {took:?}"))?;
    Ok(format!("min 3, 8 rounds, 78/78 pairs fail, {took:?}"))
}

fn path_cycle_formulas() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc2);
    let oracle = Oracle {
        max_enumerate: 40,
        ..Oracle::default()
    };
    let mut checked = 0;
    for m in 0..=8usize {
        for _ in 0..20 {
            let p = path_with_spacing(&mut rng, m, 2).map_err(e)?;
            let c = cycle_with_spacing(&mut rng, m, 2).map_err(e)?;
            let want_c = match m {
                0 => 1,
                _ => m.div_ceil(2),
            };
            for (g, want, name) in [(&p, m / 2 + 1, "path"), (&c, want_c, "cycle")] {
                let solver = decompose_deg2(g).map_err(e)?.min_target_set_size();
                let exact = oracle.min_target_set_size(g).map_err(e)?;
                ensure(solver == want && exact == want, || {
                    format!("{name} m={m} n={}: solver {solver}, oracle {exact}, formula {want}", g.n())
                })?;
                checked += 1;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("{checked} instances, {took:?}"))
}

fn even_cycle_rigidity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc3);
    let oracle = Oracle {
        max_enumerate: 40,
        ..Oracle::default()
    };
    for m in [4usize, 6, 8] {
        for _ in 0..3 {
            let g = cycle_with_spacing(&mut rng, m, 2).map_err(e)?;
            let k = oracle.min_target_set_size(&g).map_err(e)?;
            let comps = oracle.tj_components(&g, k).map_err(e)?;
            let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
            ensure(sizes == [1, 1], || format!("m={m}: TJ classes {sizes:?}"))?;
            let (x, y) = (&comps[0][0], &comps[1][0]);
            let tar = oracle.ktar_decide(&g, x, y, m / 2 + 1).map_err(e)?;
            ensure(tar.reconfigurable(), || format!("m={m}: not {}-TAR-connected", m / 2 + 1))?;
            let tight = oracle.ktar_decide(&g, x, y, m / 2).map_err(e)?;
            ensure(!tight.reconfigurable(), || format!("m={m}: {}-TAR-connected", m / 2))?;
            let switch = cycle_switch(&g).map_err(e)?;
            let r = validate_sequence(&g, &switch);
            let fits = switch.model == Model::Tar(m / 2 + 1) && r.max_size == m / 2 + 2;
            ensure(r.is_valid() && fits, || format!("m={m}: switch {r:?}"))?;
        }
    }
    Ok("m = 4, 6, 8: two rigid minimum sets, (m/2+1)-TAR-connected".into())
}

fn deg2_example_fixtures() -> Outcome {
    let g = degree2_example();
    let (w1, w2, w3, w4, v1, v2) = (0, 1, 2, 3, 8, 9);
    let x1 = SeedSet::new([w1, w3, v1]);
    let y1 = SeedSet::new([w2, w4, v1]);
    let x2 = SeedSet::new([w1, w3, v1, v2]);
    let y2 = SeedSet::new([w2, w4, v1, v2]);
    let oracle = Oracle::default();
    let no_solver = solve_maxdeg2(&g, &x1, &y1).map_err(e)?;
    let no_oracle = oracle.tj_decide(&g, &x1, &y1).map_err(e)?;
    ensure(!no_solver.reconfigurable && !no_oracle.reconfigurable(), || "X1 <-> Y1 reconfigurable".into())?;
    let yes_solver = solve_maxdeg2(&g, &x2, &y2).map_err(e)?;
    let yes_oracle = oracle.tj_decide(&g, &x2, &y2).map_err(e)?;
    ensure(yes_solver.reconfigurable && yes_oracle.reconfigurable(), || "X2 <-> Y2 not reconfigurable".into())?;
    let shortest = yes_oracle.shortest().expect("yes has a sequence");
    ensure(shortest.len() == 3, || format!("shortest length {}", shortest.len()))?;
    let seq = yes_solver.sequence.as_ref().expect("yes has a sequence");
    ensure(validate_sequence(&g, seq).is_valid() && seq.end().map_err(e)? == y2, || "solver sequence invalid".into())?;
    Ok("X1/Y1 NO, X2/Y2 YES with shortest length 3".into())
}

fn deg2_solver_vs_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc5);
    let oracle = Oracle::default();
    let (mut pairs, mut yes, mut mismatches) = (0usize, 0usize, 0usize);
    for _ in 0..500 {
        let n = rng.gen_range(2..=12);
        let g = random_deg2(&mut rng, n).map_err(e)?;
        let min = oracle.min_target_set_size(&g).map_err(e)?;
        for k in [min, min + 1] {
            if k > g.n() {
                continue;
            }
            let comps = oracle.tj_components(&g, k).map_err(e)?;
            let label: HashMap<&SeedSet, usize> =
                comps.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |s| (s, i))).collect();
            for (x, &lx) in &label {
                for (y, &ly) in &label {
                    let sol = solve_maxdeg2(&g, x, y).map_err(e)?;
                    pairs += 1;
                    if sol.reconfigurable != (lx == ly) {
                        mismatches += 1;
                        continue;
                    }
                    if let Some(seq) = &sol.sequence {
                        yes += 1;
                        ensure(validate_sequence(&g, seq).is_valid() && seq.end().map_err(e)? == **y, || {
                            format!("invalid sequence {x} -> {y} on {g:?}")
                        })?;
                    }
                }
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches in {pairs} pairs"))?;
    Ok(format!("500 instances, {pairs} pairs, {yes} sequences validated"))
}

fn tree_solver() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc6);
    let oracle = Oracle::default();
    let mut sets = 0usize;
    for _ in 0..200 {
        let n = rng.gen_range(2..=14);
        let g = random_tree(&mut rng, n).map_err(e)?;
        let plan = chen_tree(&g).map_err(e)?;
        let min = oracle.min_target_set_size(&g).map_err(e)?;
        ensure(plan.s_star.len() == min, || format!("|S*| = {} vs {min} on {g:?}", plan.s_star.len()))?;
        for k in min..=(min + 2).min(n) {
            for s in oracle.enumerate_target_sets(&g, k).map_err(e)? {
                sets += 1;
                ensure(plan.packing.iter().all(|p| p.iter().any(|&v| s.contains(v))), || {
                    format!("{s} misses a packing on {g:?}")
                })?;
                let route = tree_tar_to_canonical(&g, &plan, &s).map_err(e)?;
                let r = validate_sequence(&g, &route);
                ensure(r.is_valid() && r.max_size <= s.len() + 1, || format!("route from {s}: {r:?}"))?;
                ensure(route.end().map_err(e)? == plan.canonical(), || format!("route from {s} ends elsewhere"))?;
            }
        }
    }
    let fig5 = chen_tree(&chen_example_tree()).map_err(e)?.s_star.len();
    ensure(fig5 == 4, || format!("example tree |S*| = {fig5}"))?;
    Ok(format!("200 trees, {sets} target sets, example tree |S*| = 4"))
}

fn tj_tar_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc7);
    let oracle = Oracle::default();
    let (mut pairs, mut yes) = (0usize, 0usize);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(&mut rng, n, p).map_err(e)?;
        let k = oracle.min_target_set_size(&g).map_err(e)?;
        let sets = oracle.enumerate_target_sets(&g, k).map_err(e)?;
        for x in &sets {
            for y in &sets {
                pairs += 1;
                let tj = oracle.tj_decide(&g, x, y).map_err(e)?;
                let tar = oracle.ktar_decide(&g, x, y, k).map_err(e)?;
                ensure(tj.reconfigurable() == tar.reconfigurable(), || format!("{x} {y} on {g:?}"))?;
                if !tj.reconfigurable() {
                    continue;
                }
                yes += 1;
                let as_tar = tj_to_tar(tj.shortest().unwrap()).map_err(e)?;
                let as_tj = tar_to_tj(tar.shortest().unwrap()).map_err(e)?;
                for seq in [&as_tar, &as_tj] {
                    ensure(validate_sequence(&g, seq).is_valid() && seq.end().map_err(e)? == *y, || {
                        format!("conversion {x} -> {y} invalid on {g:?}")
                    })?;
                }
                ensure(as_tar.model == Model::Tar(k) && as_tj.model == Model::Tj, || "wrong models".into())?;
            }
        }
    }
    Ok(format!("300 graphs, {pairs} pairs, {yes} round trips"))
}

fn reduction_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc8);
    let oracle = Oracle::default();
    let mut outputs: Vec<(String, ReductionOutput)> = Vec::new();
    let (mut systems, mut pairs) = (0, 0);
    while systems < 10 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=2.min(n - 1));
        let m = rng.gen_range(1..=4);
        let hs = random_hitting_system(&mut rng, n, m, k).map_err(e)?;
        let hitting = hs.hitting_sets();
        if hitting.is_empty() {
            continue;
        }
        systems += 1;
        let out = reduce_hitting_to_split(&hs).map_err(e)?;
        for x in &hitting {
            for y in &hitting {
                let v = verify_reduction(Source::Hitting(&hs), x, y, &out, &oracle).map_err(e)?;
                ensure(v.equivalent(), || format!("split {hs:?}: {x} {y} {v:?}"))?;
                pairs += 1;
            }
        }
        outputs.push((format!("split {hs:?}"), out));
    }
    for len in [4, 6] {
        let host = cycle(len);
        let source = vc_to_tss(&host).map_err(e)?;
        let out = reduce_vc23_to_cubic(&host).map_err(e)?;
        let k = oracle.min_target_set_size(&source).map_err(e)?;
        let covers = oracle.enumerate_target_sets(&source, k).map_err(e)?;
        for x in &covers {
            for y in &covers {
                let v = verify_reduction(Source::Graph(&source), x, y, &out, &oracle).map_err(e)?;
                ensure(v.equivalent(), || format!("sigma C{len}: {x} {y} {v:?}"))?;
                pairs += 1;
            }
        }
        outputs.push((format!("sigma C{len}"), out));
    }
    let k4 = ThresholdGraph::uniform(4, 3, &complete_edges(4)).map_err(e)?;
    outputs.push(("pb342 K4".into(), reduce_33_to_pb342(&k4).map_err(e)?));
    outputs.push(("b312 K4".into(), reduce_33_to_b312(&k4).map_err(e)?));
    for (name, out) in &outputs {
        out.audit().map_err(|a| format!("{name}: {a}"))?;
    }
    Ok(format!("{pairs} pairs equivalent, {} audits pass", outputs.len()))
}

fn oplus_counterexample() -> Outcome {
    let g = cycle4_plus_edge();
    let oracle = Oracle::default();
    let (x, y) = (SeedSet::new([0, 2, 4, 5]), SeedSet::new([1, 3, 4, 5]));
    let joint = oracle.tj_decide(&g, &x, &y).map_err(e)?;
    ensure(joint.reconfigurable(), || "joint pair not reconfigurable".into())?;
    let g1 = ThresholdGraph::new(cycle(4), vec![2; 4]).map_err(e)?;
    let part = oracle.tj_decide(&g1, &SeedSet::new([0, 2]), &SeedSet::new([1, 3])).map_err(e)?;
    ensure(!part.reconfigurable(), || "restricted pair reconfigurable".into())?;
    Ok(format!("joint YES (length {}), restricted NO", joint.shortest().unwrap().len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("theta gadget certificate", theta_certificate),
        ("path and cycle minimum formulas", path_cycle_formulas),
        ("even-cycle rigidity", even_cycle_rigidity),
        ("degree-2 example fixtures", deg2_example_fixtures),
        ("max-degree-2 solver vs oracle", deg2_solver_vs_oracle),
        ("tree solver", tree_solver),
        ("TJ / TAR equivalence", tj_tar_equivalence),
        ("reduction equivalence and audits", reduction_equivalence),
        ("disjoint union needs minimum pairs", oplus_counterexample),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{took:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{took:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
