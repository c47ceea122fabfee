mod common;

use gridreach::auxgraph::{precedes, straight_walk, AuxParams, Gridline};
use gridreach::generate::pad_to_multiple;
use gridreach::oracle::oracle_reach;
use gridreach::{
    emit_lgg, gen_random, parse_lgg, reach, EngineConfig, GraphBuilder, LayeredGridGraph, Vertex,
};
use proptest::prelude::*;

fn graph(n: usize, bits: &[bool]) -> LayeredGridGraph {
    let mut b = GraphBuilder::new(n);
    let mut it = bits.iter().cycle();
    for y in 0..=n {
        for x in 0..=n {
            if y < n && *it.next().unwrap() {
                b.set_north(x, y, true).unwrap();
            }
            if x < n && *it.next().unwrap() {
                b.set_east(x, y, true).unwrap();
            }
        }
    }
    b.build()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = LayeredGridGraph> {
    (1..=max_n, prop::collection::vec(any::<bool>(), 1..64)).prop_map(|(n, bits)| graph(n, &bits))
}

fn arb_query(n: usize) -> impl Strategy<Value = (Vertex, Vertex)> {
    (0..=n, 0..=n, 0..=n, 0..=n).prop_map(|(a, b, c, d)| (Vertex::new(a, b), Vertex::new(c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn lgg_round_trip(g in arb_graph(12)) {
        let text = emit_lgg(&g);
        let back = parse_lgg(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_lgg(&back), text);
    }

    #[test]
    fn engine_matches_oracle(
        (g, q) in arb_graph(14).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_query(n)) }),
        k in 2usize..5,
        base in prop::option::of(2usize..4),
    ) {
        let (s, t) = q;
        let mut cfg = EngineConfig::explicit_k(k).with_audit(true);
        cfg.base_side_max = base;
        let a = reach(&g, s, t, &cfg).unwrap();
        prop_assert_eq!(a.reachable, oracle_reach(&g.view(), s, t).unwrap());
        prop_assert_eq!(a.metrics.visit_once_violations, 0);
        prop_assert_eq!(a.metrics.stack_bound_violations, 0);
        prop_assert!(a.metrics.pops <= a.metrics.pushes);
    }

    #[test]
    fn memo_changes_nothing_but_speed(seed in any::<u64>(), n in 6usize..20, eps in 0.3f64..1.0) {
        let g = gen_random(n, 0.6, 0.6, seed);
        let (s, t) = (Vertex::new(0, 1), Vertex::new(n, n - 1));
        let plain = reach(&g, s, t, &EngineConfig::epsilon(eps)).unwrap();
        let memo = reach(&g, s, t, &EngineConfig::epsilon(eps).with_memo(true)).unwrap();
        prop_assert_eq!(plain.reachable, memo.reachable);
        prop_assert!(memo.metrics.peak_tracked_words <= plain.metrics.peak_tracked_words);
    }

    #[test]
    fn adding_an_edge_keeps_reachability(seed in any::<u64>(), n in 2usize..14, x in 0usize..14, y in 0usize..14, north in any::<bool>()) {
        let g = gen_random(n, 0.5, 0.5, seed);
        let (x, y) = (x % n, y % n);
        let mut b = GraphBuilder::new(n);
        for (u, v) in g.edges() {
            if v.y > u.y { b.set_north(u.x, u.y, true).unwrap(); } else { b.set_east(u.x, u.y, true).unwrap(); }
        }
        if north { b.set_north(x, y, true).unwrap(); } else { b.set_east(x, y, true).unwrap(); }
        let bigger = b.build();
        let cfg = EngineConfig::epsilon(1.0);
        let (s, t) = (Vertex::new(0, 0), Vertex::new(n, n));
        if reach(&g, s, t, &cfg).unwrap().reachable {
            prop_assert!(reach(&bigger, s, t, &cfg).unwrap().reachable);
        }
    }

    #[test]
    fn padding_preserves_answers(seed in any::<u64>(), n in 2usize..15, k in 2usize..6, q in arb_query(14)) {
        let g = gen_random(n, 0.6, 0.6, seed);
        let padded = pad_to_multiple(&g, k);
        prop_assert_eq!(padded.n() % k, 0);
        let s = Vertex::new(q.0.x % (n + 1), q.0.y % (n + 1));
        let t = Vertex::new(q.1.x % (n + 1), q.1.y % (n + 1));
        let cfg = EngineConfig::explicit_k(k);
        prop_assert_eq!(
            reach(&g, s, t, &cfg).unwrap().reachable,
            reach(&padded, s, t, &cfg).unwrap().reachable
        );
    }

    #[test]
    fn straight_walk_matches_oracle(seed in any::<u64>(), n in 1usize..16, c in 0usize..16, a in 0usize..16, b in 0usize..16, vertical in any::<bool>()) {
        let g = gen_random(n, 0.8, 0.8, seed);
        let (c, a, b) = (c % (n + 1), a % (n + 1), b % (n + 1));
        let (u, v) = if vertical { (Vertex::new(c, a), Vertex::new(c, b)) } else { (Vertex::new(a, c), Vertex::new(b, c)) };
        prop_assert_eq!(straight_walk(&g.view(), u, v).unwrap(), oracle_reach(&g.view(), u, v).unwrap());
    }

    #[test]
    fn precedes_is_a_strict_total_order(k in 2usize..5, b in 1usize..5, idx in 1usize..6, vertical in any::<bool>()) {
        let p = AuxParams::new(k * b, k).unwrap();
        let i = 1 + (idx - 1) % (k + 1);
        let line = if vertical { Gridline::vertical(i) } else { Gridline::horizontal(i) };
        let off = (i - 1) * b;
        let pts: Vec<Vertex> = (0..=p.n())
            .map(|t| if vertical { Vertex::new(off, t) } else { Vertex::new(t, off) })
            .collect();
        for &a in &pts {
            prop_assert!(!precedes(&p, line, a, a).unwrap());
            for &c in &pts {
                if a != c {
                    prop_assert!(precedes(&p, line, a, c).unwrap() ^ precedes(&p, line, c, a).unwrap());
                }
                for &d in &pts {
                    if precedes(&p, line, a, c).unwrap() && precedes(&p, line, c, d).unwrap() {
                        prop_assert!(precedes(&p, line, a, d).unwrap());
                    }
                }
            }
        }
    }
}
