use hga_core::deform::{
    check_ainf, check_ainf_morphism, classify_morphism, gauge_to_morphism, morphism_to_gauge, twist_to_stasheff,
    AinfMorphism, MorphismKind, Multilinear,
};
use hga_core::fixtures::{exterior, klein};
use hga_core::hochschild::{CochainSpace, GradedAlgebra};
use hga_core::twist::{
    find_equivalence, random_gauge_levels, random_twist_levels, EquivalenceVerdict, GaugeV1, TwistCarrier, TwistV1,
    DEFAULT_BUDGET,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const T: usize = 5;

#[test]
fn gauges_are_ainf_isomorphisms_and_are_found_again() {
    let c = TwistCarrier::Stasheff;
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for a in [exterior(), klein(1, 0)] {
        let h = GradedAlgebra::new(a).unwrap();
        for _ in 0..10 {
            let m = TwistV1::from_levels(c, random_twist_levels(&h, c, T - 2, 8, &mut rng).unwrap()).unwrap();
            let g = GaugeV1::from_levels(c, random_gauge_levels(&h, c, T - 1, &mut rng).unwrap()).unwrap();
            let gm = h.act_v1(&g, &m).unwrap();
            let (src, dst) = (twist_to_stasheff(&h, &m).unwrap(), twist_to_stasheff(&h, &gm).unwrap());
            assert_eq!(check_ainf(&src, T + 1), None);
            assert_eq!(check_ainf(&dst, T + 1), None);
            let f = gauge_to_morphism(&h, &g).unwrap();
            assert_eq!(check_ainf_morphism(&f, &src, &dst, T), None);
            assert_eq!(classify_morphism(&f, &src, &dst).kind, MorphismKind::Isomorphism);
            assert_eq!(morphism_to_gauge(&h, &f, T).unwrap(), g);
            let (v, _) = find_equivalence(&h, &m, &gm, DEFAULT_BUDGET).unwrap();
            let EquivalenceVerdict::Equivalent(found) = v else { panic!("{v:?}") };
            assert_eq!(h.act_v1(&found, &m).unwrap(), gm);
        }
    }
}

#[test]
fn constructed_morphism_with_quadratic_part_only() {
    // f = (id, f2, 0, ...) on Λ(x): the target is the push-forward g*m.
    let h = GradedAlgebra::new(exterior()).unwrap();
    let c = TwistCarrier::Stasheff;
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let f2 = CochainSpace::new(&h, 2, -1).unwrap().random(&mut rng);
    let g = GaugeV1::new(c, T, [(2, f2.clone())]).unwrap();
    let m = TwistV1::from_levels(c, random_twist_levels(&h, c, T - 2, 8, &mut rng).unwrap()).unwrap();
    let gm = h.act_v1(&g, &m).unwrap();
    let (src, dst) = (twist_to_stasheff(&h, &m).unwrap(), twist_to_stasheff(&h, &gm).unwrap());
    let mut maps = vec![Multilinear::identity(h.dim()), Multilinear::from_cochain(&h, &f2)];
    maps.extend((3..T).map(Multilinear::zero));
    let f = AinfMorphism::new(&src, &dst, maps).unwrap();
    assert_eq!(check_ainf_morphism(&f, &src, &dst, T), None);
    let (v, _) = find_equivalence(&h, &m, &gm, DEFAULT_BUDGET).unwrap();
    assert!(matches!(v, EquivalenceVerdict::Equivalent(_)));
}
