mod common;

use hga_core::f2::F2Vec;
use hga_core::fixtures::{dual_numbers, exterior, klein, monomial_x2_xy_y3, truncated_cubic, upper_triangular};
use hga_core::graded::DgAlgebra;
use hga_core::hochschild::{hochschild_cohomology, GradedAlgebra};
use hga_core::twist::{
    quantize, random_twist_levels, triviality_reduce, EquivalenceVerdict, QuantizeVerdict, TwistCarrier, TwistV1,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BUDGET: u64 = 1 << 20;

fn cases() -> Vec<(&'static str, DgAlgebra, TwistCarrier, usize)> {
    vec![
        ("dual_numbers", dual_numbers(), TwistCarrier::Formal, 5),
        ("truncated_cubic", truncated_cubic(), TwistCarrier::Formal, 5),
        ("upper_triangular", upper_triangular(), TwistCarrier::Formal, 5),
        ("exterior", exterior(), TwistCarrier::Stasheff, 6),
        ("klein(1,0)", klein(1, 0), TwistCarrier::Stasheff, 5),
        ("klein(1,0)", klein(1, 0), TwistCarrier::Formal, 5),
        ("x2,xy,y3 (1,0)", monomial_x2_xy_y3(1, 0), TwistCarrier::Formal, 5),
    ]
}

#[test]
fn quantize_agrees_with_exhaustive_enumeration() {
    let mut compared = 0;
    for (name, a, c, t) in cases() {
        let h = GradedAlgebra::new(a).unwrap();
        let levels = t - 2;
        let log2 = common::quantize_space_log2(&h, c, levels);
        if log2 > 20 {
            eprintln!("{name} {c:?}: oracle space 2^{log2}, skipped");
            continue;
        }
        let (m, n) = c.twist_bidegree(1);
        let hh = hochschild_cohomology(&h, m, n).unwrap();
        for w in 1u64..1 << hh.dimension().min(6) {
            let alpha = F2Vec::from_word(hh.dimension(), w);
            let (v, _) = quantize(&h, c, &alpha, t, BUDGET).unwrap();
            let oracle = common::quantize_oracle(&h, c, &hh.representative(&alpha), levels);
            match v {
                QuantizeVerdict::Quantized(q) => {
                    assert!(oracle, "{name} {c:?} {w}");
                    assert_eq!(h.check_v1(&q), None);
                    assert_eq!(hh.coordinates(q.component(3)).unwrap(), alpha);
                }
                QuantizeVerdict::Obstructed(o) => {
                    assert!(!oracle, "{name} {c:?} {w}");
                    assert!(!o.vanishes());
                }
                QuantizeVerdict::Inconclusive => panic!("budget"),
            }
            compared += 1;
        }
    }
    eprintln!("quantize instances compared: {compared}");
    assert!(compared > 0);
}

#[test]
fn triviality_agrees_with_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut compared = 0;
    let mut trivial = 0;
    for (name, a, c, t) in cases() {
        let h = GradedAlgebra::new(a).unwrap();
        let levels = t - 2;
        let log2 = common::triviality_space_log2(&h, c, levels);
        if log2 > 20 {
            eprintln!("{name} {c:?}: oracle space 2^{log2}, skipped");
            continue;
        }
        for _ in 0..10 {
            let m = TwistV1::from_levels(c, random_twist_levels(&h, c, levels, 8, &mut rng).unwrap()).unwrap();
            let (v, _) = triviality_reduce(&h, &m, BUDGET).unwrap();
            let oracle = common::triviality_oracle(&h, c, m.levels());
            match v {
                EquivalenceVerdict::Equivalent(g) => {
                    assert!(oracle, "{name} {c:?}");
                    assert!(h.act_v1(&g, &m).unwrap().is_zero());
                    trivial += 1;
                }
                EquivalenceVerdict::Obstructed(_) => assert!(!oracle, "{name} {c:?}"),
                EquivalenceVerdict::Inconclusive => panic!("budget"),
            }
            compared += 1;
        }
    }
    eprintln!("triviality instances compared: {compared}, trivial: {trivial}");
    assert!(compared > 0);
}

#[test]
fn backtracking_instances_succeed_after_a_blocked_first_lift() {
    for (a, c, check_oracle) in [
        (klein(1, 0), TwistCarrier::Stasheff, false),
        (monomial_x2_xy_y3(1, 0), TwistCarrier::Formal, true),
    ] {
        let h = GradedAlgebra::new(a).unwrap();
        let (m, n) = c.twist_bidegree(1);
        let hh = hochschild_cohomology(&h, m, n).unwrap();
        let hit = (1u64..1 << hh.dimension()).find_map(|w| {
            let alpha = F2Vec::from_word(hh.dimension(), w);
            let (v, stats) = quantize(&h, c, &alpha, 5, BUDGET).unwrap();
            match v {
                QuantizeVerdict::Quantized(q) if stats.backtracks > 0 => Some((alpha, q)),
                _ => None,
            }
        });
        let (alpha, q) = hit.expect("a backtracking instance");
        assert_eq!(h.check_v1(&q), None);
        if check_oracle {
            // The oracle stops at its first success, so the large space is fine here.
            assert!(common::quantize_oracle(&h, c, &hh.representative(&alpha), 3));
        }
    }
}
