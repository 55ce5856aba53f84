//! Obstruction theory: quantizing a class into a twisting element, and
//! finding gauges between twisting elements. Both searches walk the levels
//! depth first, enumerating the affine set of lifts at each level in Gray
//! code order against a shared budget.

use std::collections::HashMap;

use serde::Serialize;

use super::engine::{action_rest, check_levels, quadratic_term};
use super::types::{GaugeV1, TwistV1};
use super::{TwistCarrier, TwistError};
use crate::f2::{F2Vec, GrayAffine};
use crate::hochschild::{hochschild_cohomology, Cochain, CochainSpace, GradedAlgebra, HochschildCohomology};

pub const DEFAULT_BUDGET: u64 = 10_000;
const TRACE_CAP: usize = 64;

pub(crate) struct CohomologyCache<'h> {
    h: &'h GradedAlgebra,
    map: HashMap<(usize, i32), HochschildCohomology>,
}

impl<'h> CohomologyCache<'h> {
    pub(crate) fn new(h: &'h GradedAlgebra) -> Self {
        Self { h, map: HashMap::new() }
    }

    pub(crate) fn get(&mut self, (m, n): (usize, i32)) -> Result<&HochschildCohomology, TwistError> {
        if !self.map.contains_key(&(m, n)) {
            let hh = hochschild_cohomology(self.h, m, n)?;
            self.map.insert((m, n), hh);
        }
        Ok(&self.map[&(m, n)])
    }
}

/// A cohomology class blocking the next step, with the components that were
/// fixed when it appeared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionClass {
    pub level: usize,
    pub bidegree: (usize, i32),
    pub cocycle: Cochain,
    pub coordinates: F2Vec,
    pub fixed: Vec<Cochain>,
}

impl ObstructionClass {
    pub fn vanishes(&self) -> bool {
        self.coordinates.is_zero()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub budget: u64,
    pub evaluations: u64,
    pub backtracks: u64,
    pub obstructed_branches: u64,
    pub deepest_level: usize,
    pub trace: Vec<String>,
}

impl SearchStats {
    fn note(&mut self, line: String) {
        if self.trace.len() < TRACE_CAP {
            self.trace.push(line);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuantizeVerdict {
    Quantized(TwistV1),
    Obstructed(ObstructionClass),
    /// The budget ran out before the search finished.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    /// `g * m = m'`.
    Equivalent(GaugeV1),
    Obstructed(ObstructionClass),
    Inconclusive,
}

struct Search<'h> {
    h: &'h GradedAlgebra,
    carrier: TwistCarrier,
    levels: usize,
    cache: CohomologyCache<'h>,
    stats: SearchStats,
    exhausted: bool,
    first_block: Option<ObstructionClass>,
}

/// Outcome of one lift problem `δx = z`.
enum Lift {
    Blocked,
    Choices { space: CochainSpace, base: F2Vec, directions: Vec<F2Vec> },
}

impl<'h> Search<'h> {
    fn new(h: &'h GradedAlgebra, carrier: TwistCarrier, levels: usize, budget: u64) -> Self {
        Self {
            h,
            carrier,
            levels,
            cache: CohomologyCache::new(h),
            stats: SearchStats { budget, ..SearchStats::default() },
            exhausted: false,
            first_block: None,
        }
    }

    /// Solves `δx = z` for `z` in bidegree `target`. A blocked lift records
    /// the class of `z`. `modulo_boundaries` replaces the kernel by a
    /// complement of the coboundaries inside it.
    fn lift(
        &mut self,
        level: usize,
        target: (usize, i32),
        z: &Cochain,
        fixed: &[Cochain],
        modulo_boundaries: bool,
    ) -> Result<Lift, TwistError> {
        self.stats.deepest_level = self.stats.deepest_level.max(level);
        let hh = self.cache.get(target)?;
        if !hh.is_cocycle(z)? {
            return Err(TwistError::ObstructionNotCocycle(level));
        }
        let sol = hh.is_coboundary(z)?;
        let Some(base) = sol.particular else {
            let coordinates = hh.coordinates(z)?;
            self.stats.obstructed_branches += 1;
            self.stats.note(format!("level {level}: class {coordinates:?} in {target:?} blocks"));
            if self.first_block.is_none() {
                self.first_block = Some(ObstructionClass {
                    level,
                    bidegree: target,
                    cocycle: z.clone(),
                    coordinates,
                    fixed: fixed.to_vec(),
                });
            }
            return Ok(Lift::Blocked);
        };
        let space = hh.lower_space().clone();
        let directions = if modulo_boundaries {
            let below = (target.0 - 1, target.1);
            self.cache.get(below)?.quotient().transversal().to_vec()
        } else {
            sol.kernel_basis
        };
        if directions.len() >= 64 {
            return Err(TwistError::LiftSpaceTooLarge(directions.len()));
        }
        Ok(Lift::Choices { space, base, directions })
    }

    /// Charges one evaluation; false once the budget is spent.
    fn charge(&mut self) -> bool {
        if self.stats.evaluations >= self.stats.budget {
            self.exhausted = true;
            return false;
        }
        self.stats.evaluations += 1;
        true
    }

    /// Extends `m` to a twisting element on all levels.
    fn quantize(&mut self, m: &mut Vec<Cochain>) -> Result<bool, TwistError> {
        let l = m.len() + 1;
        if l > self.levels {
            return Ok(true);
        }
        let z = quadratic_term(self.h, self.carrier, m, l);
        let Lift::Choices { space, base, directions } =
            self.lift(l, self.carrier.obstruction_bidegree(l), &z, m, true)?
        else {
            return Ok(false);
        };
        if l == self.levels {
            if !self.charge() {
                return Ok(false);
            }
            m.push(space.from_vector(&base));
            return Ok(true);
        }
        self.stats.note(format!("level {l}: {} lift choices", 1u64 << directions.len()));
        for v in GrayAffine::new(base, &directions) {
            if !self.charge() {
                return Ok(false);
            }
            m.push(space.from_vector(&v));
            if self.quantize(m)? {
                return Ok(true);
            }
            m.pop();
            if self.exhausted {
                return Ok(false);
            }
            self.stats.backtracks += 1;
        }
        Ok(false)
    }

    /// Extends `g` level by level so that `g * m` agrees with `target`.
    fn equivalence(&mut self, g: &mut Vec<Cochain>, m: &[Cochain], target: &[Cochain]) -> Result<bool, TwistError> {
        let l = g.len() + 1;
        if l > self.levels {
            return Ok(true);
        }
        let mut z = action_rest(self.h, self.carrier, g, m, &target[..l - 1], l);
        z.add_assign(&m[l - 1]);
        z.add_assign(&target[l - 1]);
        let Lift::Choices { space, base, directions } =
            self.lift(l, self.carrier.twist_bidegree(l), &z, g, false)?
        else {
            return Ok(false);
        };
        if l == self.levels {
            if !self.charge() {
                return Ok(false);
            }
            g.push(space.from_vector(&base));
            return Ok(true);
        }
        self.stats.note(format!("level {l}: {} gauge choices", 1u64 << directions.len()));
        for v in GrayAffine::new(base, &directions) {
            if !self.charge() {
                return Ok(false);
            }
            g.push(space.from_vector(&v));
            if self.equivalence(g, m, target)? {
                return Ok(true);
            }
            g.pop();
            if self.exhausted {
                return Ok(false);
            }
            self.stats.backtracks += 1;
        }
        Ok(false)
    }
}

/// The class of `Σ m^k ⌣₁ m^{n-k+1}` for a partial twisting element
/// `m^3, ..., m^{n-2}` (given as a `TwistV1` truncated at `n - 2`), living
/// in `H^{n,3-n}`. It vanishes iff `m^{n-1}` exists.
pub fn quantization_obstruction(h: &GradedAlgebra, partial: &TwistV1) -> Result<ObstructionClass, TwistError> {
    let carrier = partial.carrier();
    let m = partial.levels();
    if let Some(l) = check_levels(h, carrier, m) {
        return Err(TwistError::NotTwisting(l));
    }
    let level = m.len() + 1;
    let bidegree = carrier.obstruction_bidegree(level);
    let cocycle = quadratic_term(h, carrier, m, level);
    let hh = hochschild_cohomology(h, bidegree.0, bidegree.1)?;
    if !hh.is_cocycle(&cocycle)? {
        return Err(TwistError::ObstructionNotCocycle(level));
    }
    let coordinates = hh.coordinates(&cocycle)?;
    Ok(ObstructionClass { level, bidegree, cocycle, coordinates, fixed: m.to_vec() })
}

/// Searches for a twisting element `m^3 + ... + m^T` with `[m^3] = alpha`,
/// where `alpha` holds coordinates in the cohomology of the first level.
/// Lifts are taken modulo coboundaries: changing a lift by `δx` is the
/// perturbation by `x`, which preserves extendability.
pub fn quantize(
    h: &GradedAlgebra,
    carrier: TwistCarrier,
    alpha: &F2Vec,
    t: usize,
    budget: u64,
) -> Result<(QuantizeVerdict, SearchStats), TwistError> {
    if t < 3 {
        return Err(TwistError::Truncation { found: t, min: 3 });
    }
    let levels = t - 2;
    let mut search = Search::new(h, carrier, levels, budget);
    let first = search.cache.get(carrier.twist_bidegree(1))?;
    if alpha.len() != first.dimension() {
        return Err(TwistError::ClassLength { expected: first.dimension(), found: alpha.len() });
    }
    if alpha.is_zero() {
        return Ok((QuantizeVerdict::Quantized(TwistV1::zero(carrier, t)?), search.stats));
    }
    let mut m = vec![first.representative(alpha)];
    let verdict = if search.quantize(&mut m)? {
        QuantizeVerdict::Quantized(TwistV1::from_levels(carrier, m)?)
    } else if search.exhausted {
        QuantizeVerdict::Inconclusive
    } else {
        QuantizeVerdict::Obstructed(search.first_block.take().expect("a failed search records its block"))
    };
    Ok((verdict, search.stats))
}

/// Searches for a gauge `g` with `g * m = target`, solving `δg_l = m_l +
/// m'_l + (terms in lower levels)` level by level over the full solution
/// set.
pub fn find_equivalence(
    h: &GradedAlgebra,
    m: &TwistV1,
    target: &TwistV1,
    budget: u64,
) -> Result<(EquivalenceVerdict, SearchStats), TwistError> {
    let carrier = m.carrier();
    if carrier != target.carrier() || m.truncation() != target.truncation() {
        return Err(TwistError::Mismatch);
    }
    for x in [m, target] {
        if let Some(l) = check_levels(h, carrier, x.levels()) {
            return Err(TwistError::NotTwisting(l));
        }
    }
    let levels = m.levels().len();
    let mut search = Search::new(h, carrier, levels, budget);
    let mut g = Vec::with_capacity(levels + 1);
    let verdict = if search.equivalence(&mut g, m.levels(), target.levels())? {
        let (a, d) = carrier.gauge_bidegree(levels + 1);
        g.push(Cochain::zero(a, d));
        EquivalenceVerdict::Equivalent(GaugeV1::from_levels(carrier, g)?)
    } else if search.exhausted {
        EquivalenceVerdict::Inconclusive
    } else {
        EquivalenceVerdict::Obstructed(search.first_block.take().expect("a failed search records its block"))
    };
    Ok((verdict, search.stats))
}

/// Kills the components of `m` one at a time; success yields `g` with
/// `g * m = 0`.
pub fn triviality_reduce(h: &GradedAlgebra, m: &TwistV1, budget: u64) -> Result<(EquivalenceVerdict, SearchStats), TwistError> {
    find_equivalence(h, m, &TwistV1::zero(m.carrier(), m.truncation())?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_numbers, exterior};
    use crate::twist::random_twist_levels;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn lambda() -> GradedAlgebra {
        GradedAlgebra::new(exterior()).unwrap()
    }

    #[test]
    fn zero_class_quantizes_to_zero() {
        let h = lambda();
        let dim = hochschild_cohomology(&h, 3, -1).unwrap().dimension();
        let (v, stats) = quantize(&h, TwistCarrier::Stasheff, &F2Vec::zeros(dim), 6, 10).unwrap();
        assert_eq!(v, QuantizeVerdict::Quantized(TwistV1::zero(TwistCarrier::Stasheff, 6).unwrap()));
        assert_eq!(stats.evaluations, 0);
    }

    #[test]
    fn zero_is_trivial_with_unit_gauge() {
        let h = lambda();
        let m = TwistV1::zero(TwistCarrier::Stasheff, 6).unwrap();
        let (v, _) = triviality_reduce(&h, &m, 100).unwrap();
        let EquivalenceVerdict::Equivalent(g) = v else { panic!("{v:?}") };
        assert_eq!(h.act_v1(&g, &m).unwrap(), m);
    }

    #[test]
    fn nonzero_first_class_blocks_triviality_at_level_one() {
        let h = GradedAlgebra::new(dual_numbers()).unwrap();
        let hh = hochschild_cohomology(&h, 2, 0).unwrap();
        assert!(hh.dimension() > 0);
        let b1 = hh.class_representatives()[0].clone();
        let (v, _) = quantize(&h, TwistCarrier::Formal, &F2Vec::unit(hh.dimension(), 0), 4, DEFAULT_BUDGET).unwrap();
        let QuantizeVerdict::Quantized(m) = v else { panic!("{v:?}") };
        assert_eq!(m.component(3), &b1);
        let (v, _) = triviality_reduce(&h, &m, DEFAULT_BUDGET).unwrap();
        let EquivalenceVerdict::Obstructed(o) = v else { panic!("{v:?}") };
        assert_eq!((o.level, o.bidegree), (1, (2, 0)));
        assert!(!o.vanishes());
    }

    #[test]
    fn found_gauges_trivialize() {
        let h = GradedAlgebra::new(dual_numbers()).unwrap();
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..10 {
            let levels = random_twist_levels(&h, TwistCarrier::Formal, 3, 8, &mut rng).unwrap();
            let m = TwistV1::from_levels(TwistCarrier::Formal, levels).unwrap();
            let (v, _) = triviality_reduce(&h, &m, DEFAULT_BUDGET).unwrap();
            match v {
                EquivalenceVerdict::Equivalent(g) => assert!(h.act_v1(&g, &m).unwrap().is_zero()),
                EquivalenceVerdict::Obstructed(o) => assert!(!o.vanishes()),
                EquivalenceVerdict::Inconclusive => panic!("budget"),
            }
        }
    }

    #[test]
    fn first_obstruction_is_class_of_cup_one_square() {
        let h = GradedAlgebra::new(dual_numbers()).unwrap();
        let hh = hochschild_cohomology(&h, 2, 0).unwrap();
        let b1 = hh.class_representatives()[0].clone();
        let partial = TwistV1::new(TwistCarrier::Formal, 3, [(3, b1.clone())]).unwrap();
        let o = quantization_obstruction(&h, &partial).unwrap();
        assert_eq!(o.cocycle, h.cup1(&b1, &b1));
        assert_eq!(o.bidegree, (3, 0));
        let hh3 = hochschild_cohomology(&h, 3, 0).unwrap();
        assert_eq!(o.vanishes(), hh3.lift(&o.cocycle).unwrap().is_some());
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let h = lambda();
        let hh = hochschild_cohomology(&h, 3, -1).unwrap();
        if hh.dimension() == 0 {
            return;
        }
        let alpha = F2Vec::unit(hh.dimension(), 0);
        let (v, stats) = quantize(&h, TwistCarrier::Stasheff, &alpha, 6, 0).unwrap();
        assert!(matches!(v, QuantizeVerdict::Inconclusive | QuantizeVerdict::Obstructed(_)));
        assert_eq!(stats.evaluations, 0);
    }
}
