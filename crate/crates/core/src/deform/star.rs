use serde::Serialize;

use super::multilinear::tuples;
use super::{DeformError, Failure};
use crate::f2::F2Vec;
use crate::hochschild::{hochschild_cohomology, Cochain, GradedAlgebra};
use crate::twist::{
    quantize, triviality_reduce, EquivalenceVerdict, GaugeV2, QuantizeVerdict, TwistCarrier, TwistV2,
};

/// `a⋆b = ab + Σ_{i=1}^N B_i(a,b) t^i`, each `B_i ∈ C^{2,0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarProduct {
    coeffs: Vec<Cochain>,
}

/// `G = id + Σ_{i=1}^N G_i t^i`, each `G_i ∈ C^{1,0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeSeries {
    coeffs: Vec<Cochain>,
}

fn check_coeffs(what: &str, coeffs: &[Cochain], arity: usize) -> Result<(), DeformError> {
    if coeffs.is_empty() {
        return Err(DeformError::Shape(format!("{what}: order must be at least 1")));
    }
    for (k, c) in coeffs.iter().enumerate() {
        if c.bidegree() != (arity, 0) && !(c.is_zero() && c.degree() == 0) {
            return Err(DeformError::Shape(format!(
                "{what}_{}: bidegree {:?}, expected ({arity}, 0)",
                k + 1,
                c.bidegree()
            )));
        }
    }
    Ok(())
}

fn normalized(coeffs: Vec<Cochain>, arity: usize) -> Vec<Cochain> {
    coeffs.into_iter().map(|c| if c.is_zero() { Cochain::zero(arity, 0) } else { c }).collect()
}

impl StarProduct {
    pub fn new(coeffs: Vec<Cochain>) -> Result<Self, DeformError> {
        check_coeffs("B", &coeffs, 2)?;
        Ok(Self { coeffs: normalized(coeffs, 2) })
    }

    pub fn zero(order: usize) -> Result<Self, DeformError> {
        Self::new(vec![Cochain::zero(2, 0); order])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `B_i` for `1 <= i <= N`.
    pub fn coefficient(&self, i: usize) -> &Cochain {
        &self.coeffs[i - 1]
    }

    pub fn coefficients(&self) -> &[Cochain] {
        &self.coeffs
    }

    /// `B_i(x, y)` with `B_0 = μ`.
    fn apply(&self, h: &GradedAlgebra, i: usize, x: u64, y: u64) -> u64 {
        if i == 0 {
            h.mul_words(x, y)
        } else {
            h.eval(&self.coeffs[i - 1], &[x, y])
        }
    }
}

impl GaugeSeries {
    pub fn new(coeffs: Vec<Cochain>) -> Result<Self, DeformError> {
        check_coeffs("G", &coeffs, 1)?;
        Ok(Self { coeffs: normalized(coeffs, 1) })
    }

    pub fn identity(order: usize) -> Result<Self, DeformError> {
        Self::new(vec![Cochain::zero(1, 0); order])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, i: usize) -> &Cochain {
        &self.coeffs[i - 1]
    }

    pub fn coefficients(&self) -> &[Cochain] {
        &self.coeffs
    }

    /// `G_i(x)` with `G_0 = id`.
    fn apply(&self, h: &GradedAlgebra, i: usize, x: u64) -> u64 {
        if i == 0 {
            x
        } else {
            h.eval(&self.coeffs[i - 1], &[x])
        }
    }
}

fn names(h: &GradedAlgebra, t: &[usize]) -> Vec<String> {
    t.iter().map(|&b| h.name(b).to_string()).collect()
}

/// Associativity of `⋆` order by order: `Σ_{i+j=n} B_i(a, B_j(b,c)) =
/// Σ_{i+j=n} B_i(B_j(a,b), c)` for `n <= N` and all basis triples.
pub fn check_star(h: &GradedAlgebra, b: &StarProduct) -> Option<Failure> {
    for n in 1..=b.order() {
        for t in tuples(h.dim(), 3) {
            let [x, y, z] = [t[0], t[1], t[2]].map(|i| 1u64 << i);
            let mut acc = 0;
            for i in 0..=n {
                let j = n - i;
                acc ^= b.apply(h, i, x, b.apply(h, j, y, z));
                acc ^= b.apply(h, i, b.apply(h, j, x, y), z);
            }
            if acc != 0 {
                return Some(Failure { order: n, witness: names(h, &t) });
            }
        }
    }
    None
}

/// Coefficients of `a⋆b` in `t^0, ..., t^N`, for arbitrary vectors `a, b`.
pub fn star_eval(h: &GradedAlgebra, b: &StarProduct, x: u64, y: u64) -> Vec<u64> {
    (0..=b.order()).map(|i| b.apply(h, i, x, y)).collect()
}

fn gauge_sides(h: &GradedAlgebra, b: &StarProduct, bp: &StarProduct, g: &GaugeSeries, n: usize, x: u64, y: u64) -> (u64, u64) {
    let mut lhs = 0;
    for r in 0..=n {
        lhs ^= g.apply(h, r, b.apply(h, n - r, x, y));
    }
    let mut rhs = 0;
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            rhs ^= bp.apply(h, i, g.apply(h, j, x), g.apply(h, k, y));
        }
    }
    (lhs, rhs)
}

/// `G(a⋆b) = G(a) ⋆' G(b)` order by order: `Σ_{r+s=n} G_r(B_s(a,b)) =
/// Σ_{i+j+k=n} B'_i(G_j(a), G_k(b))` for `n <= N`.
pub fn check_gauge(
    h: &GradedAlgebra,
    b: &StarProduct,
    bp: &StarProduct,
    g: &GaugeSeries,
) -> Result<Option<Failure>, DeformError> {
    if b.order() != bp.order() || b.order() != g.order() {
        return Err(DeformError::Shape("star products and gauge series must share the order N".into()));
    }
    for n in 1..=b.order() {
        for t in tuples(h.dim(), 2) {
            let (lhs, rhs) = gauge_sides(h, b, bp, g, n, 1 << t[0], 1 << t[1]);
            if lhs != rhs {
                return Ok(Some(Failure { order: n, witness: names(h, &t) }));
            }
        }
    }
    Ok(None)
}

/// The star product `B'` with `G(a⋆b) = G(a) ⋆' G(b)`, solved order by
/// order: the only unknown at order `n` is `B'_n(a,b)`.
pub fn gauge_transform(h: &GradedAlgebra, b: &StarProduct, g: &GaugeSeries) -> Result<StarProduct, DeformError> {
    if b.order() != g.order() {
        return Err(DeformError::Shape("star product and gauge series must share the order N".into()));
    }
    let mut bp = StarProduct::zero(b.order())?;
    for n in 1..=b.order() {
        let mut entries = Vec::new();
        for t in tuples(h.dim(), 2) {
            // With B'_n still zero, the residual is exactly B'_n(a,b).
            let (lhs, rhs) = gauge_sides(h, b, &bp, g, n, 1 << t[0], 1 << t[1]);
            entries.push((t, lhs ^ rhs));
        }
        bp.coeffs[n - 1] = Cochain::from_tuples(h, 2, 0, entries)?;
    }
    Ok(bp)
}

/// `b_q = B_q t^q` as a twisting element in the formal carrier.
pub fn star_to_twist(b: &StarProduct) -> Result<TwistV2, DeformError> {
    let comps = b.coeffs.iter().cloned().enumerate().map(|(i, c)| (i + 1, c));
    Ok(TwistV2::new(TwistCarrier::Formal, b.order(), comps)?)
}

pub fn twist_to_star(b: &TwistV2) -> Result<StarProduct, DeformError> {
    if b.carrier() != TwistCarrier::Formal {
        return Err(DeformError::Carrier("formal"));
    }
    StarProduct::new(b.levels().to_vec())
}

pub fn gauge_series_to_v2(g: &GaugeSeries) -> Result<GaugeV2, DeformError> {
    let comps = g.coeffs.iter().cloned().enumerate().map(|(i, c)| (i + 1, c));
    Ok(GaugeV2::new(TwistCarrier::Formal, g.order(), comps)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    /// Coordinates of `[B_1]` in the basis of `HH^2`.
    pub class: String,
    /// `quantized`, `obstructed` or `inconclusive`.
    pub verdict: &'static str,
    pub obstruction_order: Option<usize>,
    /// Whether the quantization found is not gauge-trivial; `None` when
    /// nothing was quantized or the budget ran out.
    pub nontrivial: Option<bool>,
    pub evaluations: u64,
    pub backtracks: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GerstenhaberReport {
    pub order: usize,
    pub budget: u64,
    pub hh2: usize,
    pub hh3: usize,
    /// `HH^3 = 0`: every infinitesimal deformation extends to order `N`.
    pub integrability_certificate: bool,
    /// `HH^2 = 0`: every star product of order `N` is trivial.
    pub rigidity_certificate: bool,
    pub classes: Vec<ClassVerdict>,
}

impl GerstenhaberReport {
    pub fn inconclusive(&self) -> bool {
        self.classes.iter().any(|c| c.verdict == "inconclusive" || (c.verdict == "quantized" && c.nontrivial.is_none()))
    }
}

/// Second and third Hochschild cohomology of an ungraded algebra, the two
/// certificates, and a quantization verdict for classes of `HH^2` (every
/// nonzero class when `dim HH^2 <= 4`, else a basis).
pub fn gerstenhaber_report(h: &GradedAlgebra, order: usize, budget: u64) -> Result<GerstenhaberReport, DeformError> {
    if order < 1 {
        return Err(DeformError::Shape("order N must be at least 1".into()));
    }
    let hh2 = hochschild_cohomology(h, 2, 0)?.dimension();
    let hh3 = hochschild_cohomology(h, 3, 0)?.dimension();
    let candidates: Vec<F2Vec> = if hh2 <= 4 {
        (1u64..1 << hh2).map(|w| F2Vec::from_word(hh2, w)).collect()
    } else {
        (0..hh2).map(|i| F2Vec::unit(hh2, i)).collect()
    };
    let mut classes = Vec::new();
    for alpha in candidates {
        let (v, stats) = quantize(h, TwistCarrier::Formal, &alpha, order + 2, budget)?;
        let class = (0..hh2).map(|i| if alpha.get(i) { '1' } else { '0' }).collect();
        let mut cv = ClassVerdict {
            class,
            verdict: "inconclusive",
            obstruction_order: None,
            nontrivial: None,
            evaluations: stats.evaluations,
            backtracks: stats.backtracks,
        };
        match v {
            QuantizeVerdict::Quantized(m) => {
                cv.verdict = "quantized";
                let (e, _) = triviality_reduce(h, &m, budget)?;
                cv.nontrivial = match e {
                    EquivalenceVerdict::Equivalent(_) => Some(false),
                    EquivalenceVerdict::Obstructed(_) => Some(true),
                    EquivalenceVerdict::Inconclusive => None,
                };
            }
            QuantizeVerdict::Obstructed(o) => {
                cv.verdict = "obstructed";
                cv.obstruction_order = Some(o.level);
            }
            QuantizeVerdict::Inconclusive => {}
        }
        classes.push(cv);
    }
    Ok(GerstenhaberReport {
        order,
        budget,
        hh2,
        hh3,
        integrability_certificate: hh3 == 0,
        rigidity_certificate: hh2 == 0,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_numbers, truncated_cubic, upper_triangular};
    use crate::hochschild::CochainSpace;
    use crate::twist::{random_gauge_levels, random_twist_levels, DEFAULT_BUDGET};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn dual() -> GradedAlgebra {
        GradedAlgebra::new(dual_numbers()).unwrap()
    }

    fn random_star(h: &GradedAlgebra, n: usize, rng: &mut StdRng) -> StarProduct {
        twist_to_star(&TwistV2::new(
            TwistCarrier::Formal,
            n,
            random_twist_levels(h, TwistCarrier::Formal, n, 8, rng).unwrap().into_iter().enumerate().map(|(i, c)| (i + 1, c)),
        ).unwrap()).unwrap()
    }

    #[test]
    fn zero_deformation_is_associative() {
        let h = dual();
        assert_eq!(check_star(&h, &StarProduct::zero(3).unwrap()), None);
        assert!(star_to_twist(&StarProduct::zero(3).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn first_order_is_the_cocycle_condition() {
        let h = dual();
        let space = CochainSpace::new(&h, 2, 0).unwrap();
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..40 {
            let b1 = space.random(&mut rng);
            let star = StarProduct::new(vec![b1.clone()]).unwrap();
            assert_eq!(check_star(&h, &star).is_none(), h.delta(&b1).is_zero());
        }
    }

    #[test]
    fn corrupted_second_coefficient_fails_at_two() {
        let h = dual();
        let mut rng = StdRng::seed_from_u64(5);
        let b = random_star(&h, 3, &mut rng);
        assert_eq!(check_star(&h, &b), None);
        let mut coeffs = b.coefficients().to_vec();
        let x = Cochain::from_tuples(&h, 2, 0, [(vec![1, 0], 0b01)]).unwrap();
        coeffs[1] = coeffs[1].add(&x);
        let bad = StarProduct::new(coeffs).unwrap();
        assert_eq!(check_star(&h, &bad).unwrap().order, 2);
    }

    #[test]
    fn star_eval_is_bilinear_and_unital() {
        let h = GradedAlgebra::new(truncated_cubic()).unwrap();
        let mut rng = StdRng::seed_from_u64(8);
        let b = random_star(&h, 3, &mut rng);
        for _ in 0..20 {
            let [x, y, z]: [u64; 3] = [0; 3].map(|_| rng.gen_range(0..8));
            let lhs = star_eval(&h, &b, x ^ y, z);
            let rhs: Vec<u64> = star_eval(&h, &b, x, z).iter().zip(star_eval(&h, &b, y, z)).map(|(a, c)| a ^ c).collect();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.len(), 4);
        }
        let unit_free = StarProduct::zero(2).unwrap();
        assert_eq!(star_eval(&h, &unit_free, 0b100, 0b001), vec![0b100, 0, 0]);
    }

    #[test]
    fn first_order_gauge_is_a_coboundary_shift() {
        let h = dual();
        let mut rng = StdRng::seed_from_u64(11);
        let b = random_star(&h, 1, &mut rng);
        let g1 = CochainSpace::new(&h, 1, 0).unwrap().random(&mut rng);
        let g = GaugeSeries::new(vec![g1.clone()]).unwrap();
        let bp = gauge_transform(&h, &b, &g).unwrap();
        assert_eq!(bp.coefficient(1), &b.coefficient(1).add(&h.delta(&g1)));
    }

    #[test]
    fn transformed_product_is_equivalent_and_matches_the_action() {
        let mut rng = StdRng::seed_from_u64(12);
        for a in [dual_numbers(), truncated_cubic(), upper_triangular()] {
            let h = GradedAlgebra::new(a).unwrap();
            for _ in 0..5 {
                let b = random_star(&h, 4, &mut rng);
                let g = GaugeSeries::new(random_gauge_levels(&h, TwistCarrier::Formal, 4, &mut rng).unwrap()).unwrap();
                let bp = gauge_transform(&h, &b, &g).unwrap();
                assert_eq!(check_gauge(&h, &b, &bp, &g).unwrap(), None);
                assert_eq!(check_star(&h, &bp), None);
                let moved = h.act_v2(&gauge_series_to_v2(&g).unwrap(), &star_to_twist(&b).unwrap()).unwrap();
                assert_eq!(moved, star_to_twist(&bp).unwrap());
            }
        }
    }

    #[test]
    fn identity_gauge_fixes_the_product() {
        let h = dual();
        let mut rng = StdRng::seed_from_u64(13);
        let b = random_star(&h, 3, &mut rng);
        assert_eq!(check_gauge(&h, &b, &b, &GaugeSeries::identity(3).unwrap()).unwrap(), None);
    }

    #[test]
    fn report_certificates() {
        let upper = GradedAlgebra::new(upper_triangular()).unwrap();
        let r = gerstenhaber_report(&upper, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.rigidity_certificate && r.integrability_certificate);
        assert!(r.classes.is_empty());
        let r = gerstenhaber_report(&dual(), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.hh2, r.hh3), (2, 2));
        assert_eq!(r.classes.len(), 3);
        assert!(r.classes.iter().all(|c| c.verdict == "quantized" && c.nontrivial == Some(true)));
    }
}
