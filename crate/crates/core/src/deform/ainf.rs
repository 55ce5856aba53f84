use serde::Serialize;

use super::multilinear::{tuples, Multilinear};
use super::{DeformError, Failure};
use crate::f2::{F2Matrix, F2Vec, QuotientSpace};
use crate::graded::{DgAlgebra, GradedBasis};

/// Operations `m_1, ..., m_I` on a graded module, `m_i` of arity `i` and
/// degree `2 - i`. `unit` optionally names a basis element excluded from the
/// letters of the bar construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AinfAlgebra {
    module: GradedBasis,
    unit: Option<usize>,
    ops: Vec<Multilinear>,
}

/// Components `f_1, ..., f_I`, `f_i` of arity `i` and degree `1 - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AinfMorphism {
    maps: Vec<Multilinear>,
}

fn check_maps(
    what: &str,
    maps: &[Multilinear],
    src: &GradedBasis,
    dst: &GradedBasis,
    shift: impl Fn(usize) -> i32,
) -> Result<(), DeformError> {
    if src.dim() > 64 || dst.dim() > 64 {
        return Err(DeformError::Shape(format!("{what}: modules above dimension 64 are not supported")));
    }
    for (k, f) in maps.iter().enumerate() {
        let i = k + 1;
        if f.arity() != i {
            return Err(DeformError::Shape(format!("{what}: component {i} has arity {}", f.arity())));
        }
        for (t, v) in f.entries() {
            if t.iter().any(|&b| b >= src.dim()) || (dst.dim() < 64 && v >> dst.dim() != 0) {
                return Err(DeformError::Shape(format!("{what}: component {i} has an out-of-range entry")));
            }
        }
        if let Some((t, o)) = f.degree_violation(src.degrees(), dst.degrees(), shift(i)) {
            let names: Vec<&str> = t.iter().map(|&b| src.name(b)).collect();
            return Err(DeformError::Degree {
                what: format!("{what}_{i}"),
                entry: format!("({}) -> {}", names.join(","), dst.name(o)),
            });
        }
    }
    Ok(())
}

impl AinfAlgebra {
    pub fn new(module: GradedBasis, unit: Option<usize>, ops: Vec<Multilinear>) -> Result<Self, DeformError> {
        if unit.is_some_and(|u| u >= module.dim()) {
            return Err(DeformError::Shape("unit index out of range".into()));
        }
        check_maps("m", &ops, &module, &module, |i| 2 - i as i32)?;
        Ok(Self { module, unit, ops })
    }

    /// A dg algebra as `(A, d, μ, 0, ...)`.
    pub fn from_dga(a: &DgAlgebra) -> Result<Self, DeformError> {
        let d = a.dim();
        let m1 = Multilinear::from_entries(1, (0..d).map(|x| (vec![x], a.d_basis(x).to_word())));
        let m2 = Multilinear::from_entries(
            2,
            (0..d).flat_map(|x| (0..d).map(move |y| (vec![x, y], a.mul_basis(x, y).to_word()))),
        );
        Self::new(a.space().clone(), Some(a.unit()), vec![m1, m2])
    }

    pub fn module(&self) -> &GradedBasis {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// The same operations with no distinguished unit.
    pub fn without_unit(&self) -> Self {
        Self { unit: None, ..self.clone() }
    }

    pub fn max_arity(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[Multilinear] {
        &self.ops
    }

    /// `m_i`, or `None` above the stored range (where it vanishes).
    pub fn op(&self, i: usize) -> Option<&Multilinear> {
        i.checked_sub(1).and_then(|k| self.ops.get(k))
    }

    pub fn is_minimal(&self) -> bool {
        self.op(1).is_none_or(Multilinear::is_zero)
    }

    fn names(&self, t: &[usize]) -> Vec<String> {
        t.iter().map(|&b| self.module.name(b).to_string()).collect()
    }
}

impl AinfMorphism {
    pub fn new(source: &AinfAlgebra, target: &AinfAlgebra, maps: Vec<Multilinear>) -> Result<Self, DeformError> {
        check_maps("f", &maps, &source.module, &target.module, |i| 1 - i as i32)?;
        Ok(Self { maps })
    }

    pub fn identity(m: &AinfAlgebra) -> Self {
        Self { maps: vec![Multilinear::identity(m.dim())] }
    }

    pub fn maps(&self) -> &[Multilinear] {
        &self.maps
    }

    pub fn component(&self, i: usize) -> Option<&Multilinear> {
        i.checked_sub(1).and_then(|k| self.maps.get(k))
    }
}

fn bit(b: usize) -> u64 {
    1u64 << b
}

/// `Σ_j Σ_k outer_{n+1-j}(a_1..a_k, inner_j(a_{k+1}..a_{k+j}), ..., a_n)` on
/// the basis tuple `t`.
fn insertion_sum(outer: &[Multilinear], inner: &[Multilinear], t: &[usize]) -> u64 {
    let n = t.len();
    let mut acc = 0;
    let mut args = Vec::with_capacity(n);
    for j in 1..=n.min(inner.len()) {
        let i = n + 1 - j;
        let Some(out) = outer.get(i - 1) else { continue };
        if out.is_zero() || inner[j - 1].is_zero() {
            continue;
        }
        for k in 0..=n - j {
            let inner_args: Vec<u64> = t[k..k + j].iter().map(|&b| bit(b)).collect();
            let x = inner[j - 1].eval(&inner_args);
            if x == 0 {
                continue;
            }
            args.clear();
            args.extend(t[..k].iter().map(|&b| bit(b)));
            args.push(x);
            args.extend(t[k + j..].iter().map(|&b| bit(b)));
            acc ^= out.eval(&args);
        }
    }
    acc
}

/// `Σ_r Σ m'_r(f_{i_1}(...), ..., f_{i_r}(...))` over compositions of `t`.
fn composition_sum(f: &[Multilinear], target: &[Multilinear], t: &[usize]) -> u64 {
    fn go(f: &[Multilinear], target: &[Multilinear], t: &[usize], start: usize, vals: &mut Vec<u64>) -> u64 {
        if start == t.len() {
            return target.get(vals.len() - 1).map_or(0, |m| m.eval(vals));
        }
        let mut acc = 0;
        for len in 1..=(t.len() - start).min(f.len()) {
            if vals.len() + 1 > target.len() {
                break;
            }
            let args: Vec<u64> = t[start..start + len].iter().map(|&b| bit(b)).collect();
            let x = f[len - 1].eval(&args);
            if x == 0 {
                continue;
            }
            vals.push(x);
            acc ^= go(f, target, t, start + len, vals);
            vals.pop();
        }
        acc
    }
    if t.is_empty() {
        return 0;
    }
    go(f, target, t, 0, &mut Vec::new())
}

/// The A(∞) relations `Σ m_i(..., m_j(...), ...) = 0` for every arity
/// `n <= window` and every basis tuple. Returns the first failure.
pub fn check_ainf(m: &AinfAlgebra, window: usize) -> Option<Failure> {
    for n in 1..=window {
        for t in tuples(m.dim(), n) {
            if insertion_sum(&m.ops, &m.ops, &t) != 0 {
                return Some(Failure { order: n, witness: m.names(&t) });
            }
        }
    }
    None
}

/// The morphism relations `Σ f(..., m_j(...), ...) = Σ m'_r(f(...), ..., f(...))`
/// for every arity `n <= window`.
pub fn check_ainf_morphism(f: &AinfMorphism, source: &AinfAlgebra, target: &AinfAlgebra, window: usize) -> Option<Failure> {
    for n in 1..=window {
        for t in tuples(source.dim(), n) {
            if insertion_sum(&f.maps, &source.ops, &t) != composition_sum(&f.maps, &target.ops, &t) {
                return Some(Failure { order: n, witness: source.names(&t) });
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MorphismKind {
    Isomorphism,
    WeakEquivalence,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismClass {
    pub kind: MorphismKind,
    /// Whether `f_1 m_1 = m'_1 f_1`.
    pub chain_map: bool,
    pub f1_rank: usize,
    pub source_homology: usize,
    pub target_homology: usize,
    /// Rank of the map induced on homology (0 when `f_1` is not a chain map).
    pub induced_rank: usize,
}

fn linear_matrix(f: Option<&Multilinear>, src: usize, dst: usize) -> F2Matrix {
    let cols: Vec<F2Vec> = (0..src).map(|b| F2Vec::from_word(dst, f.map_or(0, |f| f.value(&[b])))).collect();
    F2Matrix::from_columns(dst, &cols).expect("columns of the right length")
}

fn homology(d: &F2Matrix) -> QuotientSpace {
    let n = d.cols();
    let boundaries: Vec<F2Vec> = (0..n).map(|j| d.column(j)).collect();
    QuotientSpace::new(n, &d.kernel(), &boundaries).expect("d squares to zero on (M, m1)")
}

/// Isomorphism iff `f_1` is invertible; weak equivalence iff `f_1` is a
/// chain map inducing an isomorphism on the homology of `(M, m_1)`.
/// Requires `m_1 m_1 = 0` on both sides.
pub fn classify_morphism(f: &AinfMorphism, source: &AinfAlgebra, target: &AinfAlgebra) -> MorphismClass {
    let (s, t) = (source.dim(), target.dim());
    let f1 = linear_matrix(f.component(1), s, t);
    let d = linear_matrix(source.op(1), s, s);
    let dt = linear_matrix(target.op(1), t, t);
    let chain_map = f1.mul(&d).expect("shapes") == dt.mul(&f1).expect("shapes");
    let f1_rank = f1.rank();
    let (hs, ht) = (homology(&d), homology(&dt));
    let induced_rank = if chain_map {
        let images: Vec<F2Vec> = hs
            .transversal()
            .iter()
            .map(|z| ht.coordinates(&f1.mul_vec(z).expect("shapes")).expect("chain maps send cycles to cycles"))
            .collect();
        if images.is_empty() || ht.dimension() == 0 {
            0
        } else {
            F2Matrix::from_columns(ht.dimension(), &images).expect("shapes").rank()
        }
    } else {
        0
    };
    let weak = chain_map && hs.dimension() == ht.dimension() && induced_rank == hs.dimension();
    let iso = chain_map && s == t && f1_rank == s;
    let kind = if iso {
        MorphismKind::Isomorphism
    } else if weak {
        MorphismKind::WeakEquivalence
    } else {
        MorphismKind::Neither
    };
    MorphismClass {
        kind,
        chain_map,
        f1_rank,
        source_homology: hs.dimension(),
        target_homology: ht.dimension(),
        induced_rank,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyModelReport {
    pub window: usize,
    pub minimal: bool,
    pub ainf: Option<Failure>,
    pub morphism: Option<Failure>,
    pub classification: MorphismClass,
}

impl HomologyModelReport {
    pub fn holds(&self) -> bool {
        self.minimal
            && self.ainf.is_none()
            && self.morphism.is_none()
            && self.classification.kind != MorphismKind::Neither
    }
}

/// Verifies a candidate minimal model `model` of the dg algebra `a` with
/// comparison morphism `f: model -> a`. Nothing is constructed.
pub fn verify_homology_model(
    a: &DgAlgebra,
    model: &AinfAlgebra,
    f: &AinfMorphism,
    window: usize,
) -> Result<HomologyModelReport, DeformError> {
    let target = AinfAlgebra::from_dga(a)?;
    check_maps("f", &f.maps, &model.module, &target.module, |i| 1 - i as i32)?;
    Ok(HomologyModelReport {
        window,
        minimal: model.is_minimal(),
        ainf: check_ainf(model, window),
        morphism: check_ainf_morphism(f, model, &target, window),
        classification: classify_morphism(f, model, &target),
    })
}
