use rand::Rng;

use super::engine::{act_levels, quadratic_term};
use super::search::CohomologyCache;
use super::{TwistCarrier, TwistError};
use crate::f2::F2Vec;
use crate::hochschild::{Cochain, CochainSpace, GradedAlgebra};

fn random_combination<R: Rng + ?Sized>(base: F2Vec, dirs: &[F2Vec], rng: &mut R) -> F2Vec {
    dirs.iter().fold(base, |acc, d| if rng.gen() { acc.xor(d) } else { acc })
}

/// A uniformly random gauge element on `levels` levels.
pub fn random_gauge_levels<R: Rng + ?Sized>(
    h: &GradedAlgebra,
    carrier: TwistCarrier,
    levels: usize,
    rng: &mut R,
) -> Result<Vec<Cochain>, TwistError> {
    (1..=levels)
        .map(|l| {
            let (a, d) = carrier.gauge_bidegree(l);
            Ok(CochainSpace::new(h, a, d)?.random(rng))
        })
        .collect()
}

/// A random twisting element on `levels` levels: a random first cocycle
/// extended by random lifts, then moved by a random gauge. Falls back to
/// zero when `attempts` first cocycles all meet an obstruction.
pub fn random_twist_levels<R: Rng + ?Sized>(
    h: &GradedAlgebra,
    carrier: TwistCarrier,
    levels: usize,
    attempts: usize,
    rng: &mut R,
) -> Result<Vec<Cochain>, TwistError> {
    let mut cache = CohomologyCache::new(h);
    let mut found = None;
    'attempt: for _ in 0..attempts {
        let first = cache.get(carrier.twist_bidegree(1))?;
        let q = first.quotient();
        let cycles: Vec<F2Vec> = q.boundary_basis().iter().chain(q.transversal()).cloned().collect();
        let z = random_combination(F2Vec::zeros(first.space().dim()), &cycles, rng);
        let mut m = vec![first.space().from_vector(&z)];
        for l in 2..=levels {
            let obstruction = quadratic_term(h, carrier, &m, l);
            let hh = cache.get(carrier.obstruction_bidegree(l))?;
            let sol = hh.is_coboundary(&obstruction)?;
            let Some(p) = sol.particular else {
                continue 'attempt;
            };
            m.push(hh.lower_space().from_vector(&random_combination(p, &sol.kernel_basis, rng)));
        }
        found = Some(m);
        break;
    }
    let m = match found {
        Some(mut m) => {
            m.truncate(levels);
            m
        }
        None => (1..=levels)
            .map(|l| {
                let (a, d) = carrier.twist_bidegree(l);
                Cochain::zero(a, d)
            })
            .collect(),
    };
    let g = random_gauge_levels(h, carrier, levels, rng)?;
    Ok(act_levels(h, carrier, &g, &m))
}
