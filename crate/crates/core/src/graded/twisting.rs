use std::collections::BTreeSet;

use serde::Serialize;

use super::{bar, cobar, DgAlgebra, DgCoalgebra, StructureError, TruncatedBar, TruncatedCobar, ValidationReport};
use crate::f2::{F2Matrix, F2Vec};

/// A degree +1 map from a dg coalgebra to a dg algebra, one target vector per
/// source basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingCochainMap {
    values: Vec<F2Vec>,
}

impl TwistingCochainMap {
    pub fn new(source: &DgCoalgebra, target: &DgAlgebra, values: Vec<F2Vec>) -> Result<Self, StructureError> {
        if values.len() != source.dim() {
            return Err(StructureError::TableShape { table: "tau", expected: source.dim(), found: values.len() });
        }
        for (c, v) in values.iter().enumerate() {
            target.space().check_vector(v)?;
            let expected = source.space().degree(c) + 1;
            if !target.space().is_of_degree(v, expected) {
                return Err(StructureError::NotHomogeneous {
                    what: format!("tau({})", source.space().name(c)),
                    expected,
                });
            }
        }
        Ok(Self { values })
    }

    pub fn zero(source: &DgCoalgebra, target: &DgAlgebra) -> Self {
        Self { values: vec![F2Vec::zeros(target.dim()); source.dim()] }
    }

    pub fn value(&self, c: usize) -> &F2Vec {
        &self.values[c]
    }

    pub fn values(&self) -> &[F2Vec] {
        &self.values
    }

    pub fn apply(&self, v: &F2Vec, target_dim: usize) -> F2Vec {
        let mut out = F2Vec::zeros(target_dim);
        for c in v.ones() {
            out.xor_assign(&self.values[c]);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrownReport {
    pub holds: bool,
    pub witness: Option<String>,
}

/// Checks `d tau + tau d = tau cup tau` on every source basis element, where
/// `tau cup tau = mu (tau x tau) Delta`.
pub fn check_brown(source: &DgCoalgebra, target: &DgAlgebra, tau: &TwistingCochainMap) -> BrownReport {
    for c in 0..source.dim() {
        let mut lhs = target.d(tau.value(c));
        lhs.xor_assign(&tau.apply(source.d_basis(c), target.dim()));
        let mut rhs = F2Vec::zeros(target.dim());
        for (i, j) in source.comult_pairs(c) {
            rhs.xor_assign(&target.mul(tau.value(i), tau.value(j)));
        }
        if lhs != rhs {
            return BrownReport { holds: false, witness: Some(source.space().name(c).to_string()) };
        }
    }
    BrownReport { holds: true, witness: None }
}

/// Projection `[a] -> a` from the truncated bar construction.
pub fn universal_bar_cochain(bar: &TruncatedBar, a: &DgAlgebra) -> (DgCoalgebra, TwistingCochainMap) {
    let coalg = bar.coalgebra();
    let values = bar
        .words()
        .iter()
        .map(|w| match w.as_slice() {
            [g] => F2Vec::unit(a.dim(), bar.generators()[*g]),
            _ => F2Vec::zeros(a.dim()),
        })
        .collect();
    (coalg, TwistingCochainMap { values })
}

/// Inclusion `c -> [c]` into the truncated cobar construction.
pub fn universal_cobar_cochain(c: &DgCoalgebra, cobar: &TruncatedCobar) -> (DgAlgebra, TwistingCochainMap) {
    let alg = cobar.algebra();
    let values = (0..c.dim())
        .map(|b| match cobar.generator_of_basis(b).and_then(|g| cobar.word_index(&[g])) {
            Some(w) => F2Vec::unit(alg.dim(), w),
            None => F2Vec::zeros(alg.dim()),
        })
        .collect();
    (alg, TwistingCochainMap { values })
}

/// Multiplicative extension `f_tau` on the truncated cobar construction.
#[derive(Clone, Debug)]
pub struct CobarExtension {
    pub cobar: TruncatedCobar,
    /// `images[w]` is `f_tau` of cobar word `w`.
    pub images: Vec<F2Vec>,
    pub verified_to_length: usize,
    pub report: ValidationReport,
}

pub fn extend_to_cobar(
    source: &DgCoalgebra,
    target: &DgAlgebra,
    tau: &TwistingCochainMap,
    max_len: usize,
) -> Result<CobarExtension, StructureError> {
    if !tau.value(source.counit()).is_zero() {
        return Err(StructureError::NonzeroOnCounit);
    }
    let om = cobar(source, max_len)?;
    let images: Vec<F2Vec> = om
        .words()
        .iter()
        .map(|w| {
            w.iter().fold(target.unit_vector(), |acc, &g| target.mul(&acc, tau.value(om.generators()[g])))
        })
        .collect();
    let f = |v: &F2Vec| {
        let mut out = F2Vec::zeros(target.dim());
        for w in v.ones() {
            out.xor_assign(&images[w]);
        }
        out
    };
    let mut report = ValidationReport::default();
    if images[0] != target.unit_vector() {
        report.push("unit", vec!["[]".into()]);
    }
    for (ui, u) in om.words().iter().enumerate() {
        for (vi, v) in om.words().iter().enumerate() {
            if u.len() + v.len() > max_len {
                continue;
            }
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            let uvi = om.word_index(&uv).expect("within truncation");
            if images[uvi] != target.mul(&images[ui], &images[vi]) {
                report.push("multiplicative", vec![om.word_name(ui).into(), om.word_name(vi).into()]);
            }
        }
    }
    for (wi, w) in om.words().iter().enumerate() {
        if w.len() + 1 > max_len {
            continue;
        }
        if f(om.diff(wi)) != target.d(&images[wi]) {
            report.push("chain map", vec![om.word_name(wi).into()]);
        }
    }
    Ok(CobarExtension { cobar: om, images, verified_to_length: max_len, report })
}

/// Comultiplicative coextension `g_tau` into the truncated bar construction.
#[derive(Clone, Debug)]
pub struct BarCoextension {
    pub bar: TruncatedBar,
    /// `images[c]` is `g_tau` of source basis element `c`, over bar words.
    pub images: Vec<F2Vec>,
    pub verified_to_length: usize,
    pub report: ValidationReport,
}

/// Reduced iterated diagonal: `n`-tuples with no counit factor.
fn iterated_diagonal(source: &DgCoalgebra, c: usize, n: usize) -> BTreeSet<Vec<usize>> {
    let e = source.counit();
    let mut out = BTreeSet::new();
    if c == e || n == 0 {
        return out;
    }
    if n == 1 {
        out.insert(vec![c]);
        return out;
    }
    for (i, j) in source.comult_pairs(c) {
        if i == e || j == e {
            continue;
        }
        for mut t in iterated_diagonal(source, i, n - 1) {
            t.push(j);
            if !out.remove(&t) {
                out.insert(t);
            }
        }
    }
    out
}

pub fn extend_to_bar(
    source: &DgCoalgebra,
    target: &DgAlgebra,
    tau: &TwistingCochainMap,
    max_len: usize,
    allow_non_reduced: bool,
) -> Result<BarCoextension, StructureError> {
    if !tau.value(source.counit()).is_zero() {
        return Err(StructureError::NonzeroOnCounit);
    }
    for (c, v) in tau.values().iter().enumerate() {
        if v.get(target.unit()) {
            return Err(StructureError::NotAugmented(format!(
                "tau({}) has a unit component",
                source.space().name(c)
            )));
        }
    }
    let ba = bar(target, max_len, allow_non_reduced)?;
    let nwords = ba.dim();
    let mut images = Vec::with_capacity(source.dim());
    for c in 0..source.dim() {
        let mut img = F2Vec::zeros(nwords);
        if c == source.counit() {
            img.flip(0);
        }
        for n in 1..=max_len {
            for tuple in iterated_diagonal(source, c, n) {
                // Expand tau(c_1) x ... x tau(c_n) into words.
                let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
                for &ck in &tuple {
                    let letters: Vec<usize> = tau
                        .value(ck)
                        .ones()
                        .map(|b| ba.generator_of_basis(b).expect("augmented"))
                        .collect();
                    partial = partial
                        .iter()
                        .flat_map(|p| {
                            letters.iter().map(move |&l| {
                                let mut q = p.clone();
                                q.push(l);
                                q
                            })
                        })
                        .collect();
                }
                for w in partial {
                    img.flip(ba.word_index(&w).expect("within truncation"));
                }
            }
        }
        images.push(img);
    }

    let mut report = ValidationReport::default();
    let name = |c: usize| source.space().name(c).to_string();
    let len = |w: usize| ba.words()[w].len();
    for c in 0..source.dim() {
        // Coalgebra map: deconcatenation of g(c) against (g x g) Delta(c).
        let mut lhs: BTreeSet<(usize, usize)> = BTreeSet::new();
        let toggle = |s: &mut BTreeSet<(usize, usize)>, p| {
            if !s.remove(&p) {
                s.insert(p);
            }
        };
        for w in images[c].ones() {
            let word = &ba.words()[w];
            for k in 0..=word.len() {
                let l = ba.word_index(&word[..k]).expect("prefix");
                let r = ba.word_index(&word[k..]).expect("suffix");
                toggle(&mut lhs, (l, r));
            }
        }
        let mut rhs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (i, j) in source.comult_pairs(c) {
            for l in images[i].ones() {
                for r in images[j].ones() {
                    if len(l) + len(r) <= max_len {
                        toggle(&mut rhs, (l, r));
                    }
                }
            }
        }
        if lhs != rhs {
            report.push("coalgebra map", vec![name(c)]);
        }
        let counit_ok = images[c].get(0) == (c == source.counit());
        if !counit_ok {
            report.push("counit", vec![name(c)]);
        }
        // Chain map, compared on words of length below the cap.
        let mut dg = ba.apply_diff(&images[c]);
        let mut gd = F2Vec::zeros(nwords);
        for b in source.d_basis(c).ones() {
            gd.xor_assign(&images[b]);
        }
        dg.xor_assign(&gd);
        if dg.ones().any(|w| len(w) < max_len) {
            report.push("chain map", vec![name(c)]);
        }
    }
    Ok(BarCoextension { bar: ba, images, verified_to_length: max_len, report })
}

/// Tests `dt = t t` for `t` of degree one.
pub fn check_dga_twisting(a: &DgAlgebra, t: &F2Vec) -> Result<bool, StructureError> {
    a.space().check_vector(t)?;
    if !a.space().is_of_degree(t, 1) {
        return Err(StructureError::NotHomogeneous { what: "twisting element".into(), expected: 1 });
    }
    Ok(a.d(t) == a.mul(t, t))
}

/// Two-sided inverse of a degree-zero element, by solving `g x = 1` over the
/// degree-zero part.
pub fn inverse_in_degree_zero(a: &DgAlgebra, g: &F2Vec) -> Result<F2Vec, StructureError> {
    a.space().check_vector(g)?;
    if !a.space().is_of_degree(g, 0) {
        return Err(StructureError::NotHomogeneous { what: "gauge element".into(), expected: 0 });
    }
    let zero_part = a.space().indices_of_degree(0);
    let columns: Vec<F2Vec> = zero_part.iter().map(|&b| a.mul(g, &F2Vec::unit(a.dim(), b))).collect();
    let m = F2Matrix::from_columns(a.dim(), &columns).expect("consistent lengths");
    let sol = m.solve(&a.unit_vector()).expect("consistent lengths");
    let coords = sol.particular.ok_or(StructureError::NotInvertible)?;
    let inv = F2Vec::from_indices(a.dim(), coords.ones().map(|k| zero_part[k]));
    if a.mul(&inv, g) != a.unit_vector() {
        return Err(StructureError::NotInvertible);
    }
    Ok(inv)
}

/// Gauge action `g * t = g t g^-1 + dg g^-1`.
pub fn berikashvili_act(a: &DgAlgebra, g: &F2Vec, t: &F2Vec) -> Result<F2Vec, StructureError> {
    let inv = inverse_in_degree_zero(a, g)?;
    if !a.space().is_of_degree(t, 1) {
        return Err(StructureError::NotHomogeneous { what: "twisting element".into(), expected: 1 });
    }
    let mut out = a.mul(&a.mul(g, t), &inv);
    out.xor_assign(&a.mul(&a.d(g), &inv));
    Ok(out)
}
