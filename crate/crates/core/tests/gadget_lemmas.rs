//! Seed-map and reconfigurability preservation of the gadgets, checked by
//! exhaustive search on small hosts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tsr_core::gadgets::{attach_sigma, attach_theta, connect_xi, replace_upsilon, subdivide, GadgetMap};
use tsr_core::generate::random_connected;
use tsr_core::graph::families::{complete_edges, cycle, cycle4_plus_edge};
use tsr_core::graph::{disjoint_union, vc_to_tss};
use tsr_core::oracle::Oracle;
use tsr_core::{is_target_set, SeedSet, ThresholdGraph};

fn oracle() -> Oracle {
    Oracle {
        max_enumerate: 40,
        ..Oracle::default()
    }
}

/// Minimum sets of `g` map to minimum sets of `h`, and every pair keeps its
/// TJ verdict.
fn check_pairs(g: &ThresholdGraph, h: &ThresholdGraph, map: &GadgetMap) -> (usize, usize) {
    let o = oracle();
    let k = o.min_target_set_size(g).unwrap();
    let mins = o.enumerate_target_sets(g, k).unwrap();
    let k2 = o.min_target_set_size(h).unwrap();
    assert_eq!(k2, k + map.seed.len(), "{g:?}");
    for s in &mins {
        assert!(is_target_set(h, &map.forward(s)).unwrap());
    }
    let mut no = 0;
    for x in &mins {
        for y in &mins {
            let before = o.tj_decide(g, x, y).unwrap().reconfigurable();
            let after = o.tj_decide(h, &map.forward(x), &map.forward(y)).unwrap().reconfigurable();
            assert_eq!(before, after, "{g:?} {x} {y}");
            no += usize::from(!before);
        }
    }
    (mins.len() * mins.len(), no)
}

/// Every minimum set of `h` maps back to a minimum set of `g`.
fn check_backward(g: &ThresholdGraph, h: &ThresholdGraph, map: &GadgetMap) {
    let o = oracle();
    let k = o.min_target_set_size(g).unwrap();
    let k2 = o.min_target_set_size(h).unwrap();
    for s in o.enumerate_target_sets(h, k2).unwrap() {
        let back = map.backward(&s);
        assert_eq!(back.len(), k, "{s} -> {back}");
        assert!(is_target_set(g, &back).unwrap(), "{s} -> {back}");
    }
}

#[test]
fn subdivision_preserves_minimum_sets_and_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5d);
    for _ in 0..80 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(&mut rng, n, p).unwrap();
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let (h, map) = subdivide(&g, u, v).unwrap();
        assert_eq!(h.n(), n + 1);
        check_pairs(&g, &h, &map);
        check_backward(&g, &h, &map);
    }
}

#[test]
fn subdivision_converse_fails_on_k5() {
    // seeding w in place of u loses u's edge to the other seed
    let g = ThresholdGraph::uniform(5, 1, &complete_edges(5)).unwrap();
    let g = ThresholdGraph::new(g.graph().clone(), vec![2, 3, 2, 4, 3]).unwrap();
    let (h, map) = subdivide(&g, 0, 1).unwrap();
    let w = map.get("w").unwrap();
    let o = oracle();
    assert_eq!(o.min_target_set_size(&g).unwrap(), 2);
    assert_eq!(o.min_target_set_size(&h).unwrap(), 2);
    let s = SeedSet::new([1, w]);
    assert_eq!(map.backward(&s), SeedSet::new([0, 1]));
    assert!(is_target_set(&g, &SeedSet::new([0, 1])).unwrap());
    assert!(!is_target_set(&h, &s).unwrap());
}

#[test]
fn theta_preserves_minimum_sets_and_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e);
    for _ in 0..25 {
        let n = rng.gen_range(2..=5);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(&mut rng, n, p).unwrap();
        let v = rng.gen_range(0..n);
        let (h, map) = attach_theta(&g, v).unwrap();
        assert_eq!(h.tau(v), g.tau(v) + 1);
        assert!((0..n).filter(|&u| u != v).all(|u| h.tau(u) == g.tau(u)));
        check_pairs(&g, &h, &map);
        check_backward(&g, &h, &map);
    }
    // a NO pair survives the gadget
    let g = cycle4_plus_edge();
    let (h, map) = attach_theta(&g, 4).unwrap();
    assert!(check_pairs(&g, &h, &map).1 > 0);
}

#[test]
fn xi_preserves_minimum_sets_and_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x71);
    for _ in 0..25 {
        let n = rng.gen_range(2..=5);
        let p = rng.gen_range(0.1..0.7);
        let g = random_connected(&mut rng, n, p).unwrap();
        let v1 = rng.gen_range(0..n);
        let v2 = (v1 + rng.gen_range(1..n)) % n;
        let (h, map) = connect_xi(&g, v1, v2).unwrap();
        check_pairs(&g, &h, &map);
        check_backward(&g, &h, &map);
        let o = oracle();
        let k = o.min_target_set_size(&h).unwrap();
        for s in o.enumerate_target_sets(&h, k).unwrap() {
            assert_eq!(s.iter().filter(|&u| map.is_internal(u)).count(), 1, "{s}");
        }
    }
    let g = cycle4_plus_edge();
    let (h, map) = connect_xi(&g, 4, 5).unwrap();
    assert!(check_pairs(&g, &h, &map).1 > 0);
}

#[test]
fn upsilon_preserves_minimum_sets_and_verdicts() {
    let k4 = ThresholdGraph::uniform(4, 3, &complete_edges(4)).unwrap();
    for w in 0..4 {
        let (h, map) = replace_upsilon(&k4, w).unwrap();
        check_pairs(&k4, &h, &map);
        check_backward(&k4, &h, &map);
    }
    // terrible cycle next to a (3,3)-vertex: NO pairs must stay NO
    let (g, _) = disjoint_union(&k4, &cycle4_plus_edge());
    let (h, map) = replace_upsilon(&g, 0).unwrap();
    let (pairs, no) = check_pairs(&g, &h, &map);
    assert!(no > 0 && no < pairs);
}

#[test]
fn sigma_keeps_minimum_covers() {
    for len in [4, 5] {
        let host = cycle(len);
        let g = vc_to_tss(&host).unwrap();
        let (h_simple, map) = attach_sigma(&host, 0).unwrap();
        let h = vc_to_tss(&h_simple).unwrap();
        check_pairs(&g, &h, &map);
        check_backward(&g, &h, &map);
    }
}
