use serde::Serialize;

use super::ainf::{AinfAlgebra, AinfMorphism};
use super::multilinear::Multilinear;
use super::DeformError;
use crate::hochschild::{hochschild_cohomology, Cochain, GradedAlgebra};
use crate::twist::{GaugeV1, TwistCarrier, TwistV1};

fn check_module(h: &GradedAlgebra, m: &AinfAlgebra) -> Result<(), DeformError> {
    if m.dim() != h.dim() {
        return Err(DeformError::ModuleMismatch(format!("dimension {} vs {}", m.dim(), h.dim())));
    }
    if let Some(b) = (0..h.dim()).find(|&b| m.module().degree(b) != h.degree(b)) {
        return Err(DeformError::ModuleMismatch(format!("degree of {}", h.name(b))));
    }
    Ok(())
}

/// Reads a minimal A(∞)-structure extending `(H, μ)` as the twisting element
/// `m^3 + ... + m^T` with `T = max(I, 3)`.
pub fn stasheff_to_twist(h: &GradedAlgebra, m: &AinfAlgebra) -> Result<TwistV1, DeformError> {
    check_module(h, m)?;
    if !m.is_minimal() {
        return Err(DeformError::NotMinimal);
    }
    let mu = Multilinear::from_cochain(h, &Cochain::multiplication(h));
    let zero2 = Multilinear::zero(2);
    let m2 = m.op(2).unwrap_or(&zero2);
    for x in 0..h.dim() {
        for y in 0..h.dim() {
            if m2.value(&[x, y]) != mu.value(&[x, y]) {
                return Err(DeformError::WrongMultiplication(format!("({},{})", h.name(x), h.name(y))));
            }
        }
    }
    let t = m.max_arity().max(3);
    let levels = (3..=t)
        .map(|p| match m.op(p) {
            Some(op) => op.to_cochain(h, 2 - p as i32),
            None => Ok(Cochain::zero(p, 2 - p as i32)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TwistV1::from_levels(TwistCarrier::Stasheff, levels)?)
}

/// `(H, 0, μ, m^3, ..., m^T)`.
pub fn twist_to_stasheff(h: &GradedAlgebra, m: &TwistV1) -> Result<AinfAlgebra, DeformError> {
    if m.carrier() != TwistCarrier::Stasheff {
        return Err(DeformError::Carrier("stasheff"));
    }
    let mut ops = vec![Multilinear::zero(1), Multilinear::from_cochain(h, &Cochain::multiplication(h))];
    ops.extend(m.levels().iter().map(|c| Multilinear::from_cochain(h, c)));
    AinfAlgebra::new(h.algebra().space().clone(), Some(h.unit()), ops)
}

/// `id + g^2 + ... + g^T` as a morphism with `f_1 = id`.
pub fn gauge_to_morphism(h: &GradedAlgebra, g: &GaugeV1) -> Result<AinfMorphism, DeformError> {
    if g.carrier() != TwistCarrier::Stasheff {
        return Err(DeformError::Carrier("stasheff"));
    }
    let mut maps = vec![Multilinear::identity(h.dim())];
    maps.extend(g.levels().iter().map(|c| Multilinear::from_cochain(h, c)));
    let m = twist_to_stasheff(h, &TwistV1::zero(TwistCarrier::Stasheff, 3)?)?;
    AinfMorphism::new(&m, &m, maps)
}

/// Inverse of [`gauge_to_morphism`] at truncation `t`; components above
/// `t` are ignored.
pub fn morphism_to_gauge(h: &GradedAlgebra, f: &AinfMorphism, t: usize) -> Result<GaugeV1, DeformError> {
    let id = Multilinear::identity(h.dim());
    let f1 = f.component(1).cloned().unwrap_or_else(|| Multilinear::zero(1));
    if let Some(b) = (0..h.dim()).find(|&b| f1.value(&[b]) != id.value(&[b])) {
        return Err(DeformError::NotIdentity(h.name(b).to_string()));
    }
    let comps = (2..=t)
        .map(|p| match f.component(p) {
            Some(c) => Ok((p, c.to_cochain(h, 1 - p as i32)?)),
            None => Ok((p, Cochain::zero(p, 1 - p as i32))),
        })
        .collect::<Result<Vec<_>, DeformError>>()?;
    Ok(GaugeV1::new(TwistCarrier::Stasheff, t, comps)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeDimension {
    pub arity: usize,
    pub degree: i32,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalityReport {
    pub nmax: usize,
    pub dimensions: Vec<BidegreeDimension>,
    /// Every A(∞)-deformation is trivial up to arity `nmax`.
    pub certified: bool,
    /// Nonzero `HH^{n,2-n}`: where a non-trivial deformation could live.
    pub candidates: Vec<(usize, i32)>,
}

/// `HH^{n,2-n}(H,H)` for `3 <= n <= nmax`.
pub fn intrinsic_formality(h: &GradedAlgebra, nmax: usize) -> Result<FormalityReport, DeformError> {
    let mut dimensions = Vec::new();
    for n in 3..=nmax {
        let degree = 2 - n as i32;
        let dimension = hochschild_cohomology(h, n, degree)?.dimension();
        dimensions.push(BidegreeDimension { arity: n, degree, dimension });
    }
    let candidates: Vec<(usize, i32)> =
        dimensions.iter().filter(|d| d.dimension > 0).map(|d| (d.arity, d.degree)).collect();
    Ok(FormalityReport { nmax, certified: candidates.is_empty(), dimensions, candidates })
}
