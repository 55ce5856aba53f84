//! JSON input documents. A document holds named sections (`algebra`,
//! `coalgebra`, `cochain`, `twist`, `gauge`, `star`, `ainf`, ...); each section
//! is parsed with serde and then validated structurally, with errors naming
//! the offending field.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::deform::{AinfAlgebra, AinfMorphism, GaugeSeries, Multilinear, StarProduct};
use crate::f2::F2Vec;
use crate::graded::{DgAlgebra, DgCoalgebra, GradedBasis};
use crate::hochschild::{Cochain, GradedAlgebra};
use crate::twist::{GaugeV1, TwistCarrier, TwistV1};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputError {
    pub file: String,
    pub field: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.file, self.field, self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisDoc {
    pub name: String,
    pub degree: i32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub basis: Vec<BasisDoc>,
    #[serde(default)]
    pub unit: Option<String>,
    /// `[a, b, [terms of a*b]]`; omitted pairs multiply to zero.
    #[serde(default)]
    pub mult: Vec<(String, String, Vec<String>)>,
    #[serde(default)]
    pub diff: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub basis: Vec<BasisDoc>,
    #[serde(default)]
    pub counit: Option<String>,
    /// `[c, [[left, right], ...]]`; every basis element needs an entry.
    #[serde(default)]
    pub comult: Vec<(String, Vec<(String, String)>)>,
    #[serde(default)]
    pub diff: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub arity: usize,
    pub internal_degree: i32,
    /// `[[input names], [output terms]]`.
    #[serde(default)]
    pub entries: Vec<(Vec<String>, Vec<String>)>,
}

/// A twisting or gauge element, components keyed by their upper index `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelsDoc {
    pub carrier: TwistCarrier,
    pub truncation: usize,
    #[serde(default)]
    pub components: BTreeMap<String, CochainDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    /// Coefficients of `t^1, ..., t^N`.
    pub coefficients: Vec<CochainDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub arity: usize,
    #[serde(default)]
    pub entries: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AinfDoc {
    pub basis: Vec<BasisDoc>,
    #[serde(default)]
    pub unit: Option<String>,
    /// `m_1, m_2, ...` in order.
    pub ops: Vec<MapDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    /// `f_1, f_2, ...` in order.
    pub maps: Vec<MapDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<CoalgebraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cochain: Option<CochainDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<LevelsDoc>,
    /// Second twisting element, for equivalence searches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<LevelsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge: Option<LevelsDoc>,
    /// Coordinates of a class in the cohomology of the first level.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<SeriesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star_prime: Option<SeriesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge_series: Option<SeriesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ainf: Option<AinfDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ainf_target: Option<AinfDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<MorphismDoc>,
}

/// Resolves names against a basis, with error locations.
struct Names<'a> {
    file: &'a str,
    index: HashMap<&'a str, usize>,
    degrees: Vec<i32>,
}

impl<'a> Names<'a> {
    fn new(file: &'a str, field: &str, basis: &'a [BasisDoc]) -> Result<Self, InputError> {
        if basis.is_empty() {
            return Err(err(file, field, "basis is empty"));
        }
        if basis.len() > 64 {
            return Err(err(file, field, format!("basis has {} elements, at most 64 are supported", basis.len())));
        }
        let mut index = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if index.insert(b.name.as_str(), i).is_some() {
                return Err(err(file, &format!("{field}[{i}].name"), format!("duplicate basis name `{}`", b.name)));
            }
        }
        Ok(Self { file, index, degrees: basis.iter().map(|b| b.degree).collect() })
    }

    fn get(&self, field: &str, name: &str) -> Result<usize, InputError> {
        self.index.get(name).copied().ok_or_else(|| err(self.file, field, format!("unknown basis element `{name}`")))
    }

    fn word(&self, field: &str, terms: &[String]) -> Result<u64, InputError> {
        let mut w = 0u64;
        for (k, t) in terms.iter().enumerate() {
            w ^= 1 << self.get(&format!("{field}[{k}]"), t)?;
        }
        Ok(w)
    }

    fn tuple(&self, field: &str, names: &[String]) -> Result<Vec<usize>, InputError> {
        names.iter().enumerate().map(|(k, n)| self.get(&format!("{field}[{k}]"), n)).collect()
    }

    /// Every term of `w` has degree `want`.
    fn homogeneous(&self, w: u64, want: i32) -> bool {
        (0..self.degrees.len()).all(|b| w >> b & 1 == 0 || self.degrees[b] == want)
    }
}

fn err(file: &str, field: &str, message: impl Into<String>) -> InputError {
    InputError { file: file.to_string(), field: field.to_string(), message: message.into() }
}

fn basis_space(file: &str, field: &str, basis: &[BasisDoc]) -> Result<GradedBasis, InputError> {
    GradedBasis::new(basis.iter().map(|b| (b.name.clone(), b.degree))).map_err(|e| err(file, field, e.to_string()))
}

fn diff_table(names: &Names, field: &str, dim: usize, diff: &[(String, Vec<String>)]) -> Result<Vec<F2Vec>, InputError> {
    let mut table = vec![None; dim];
    for (k, (x, terms)) in diff.iter().enumerate() {
        let f = format!("{field}[{k}]");
        let i = names.get(&format!("{f}[0]"), x)?;
        if table[i].is_some() {
            return Err(err(names.file, &f, format!("second differential entry for `{x}`")));
        }
        let w = names.word(&format!("{f}[1]"), terms)?;
        if !names.homogeneous(w, names.degrees[i] + 1) {
            return Err(err(names.file, &f, format!("d({x}) is not of degree {}", names.degrees[i] + 1)));
        }
        table[i] = Some(w);
    }
    Ok(table.into_iter().map(|w| F2Vec::from_word(dim, w.unwrap_or(0))).collect())
}

impl Document {
    pub fn parse(file: &str, text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| err(file, &format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, InputError> {
        let file = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| err(&file, "-", e.to_string()))?;
        Self::parse(&file, &text)
    }

    /// Structural validation of every section present.
    pub fn validate(&self, file: &str) -> Result<(), InputError> {
        if let Some(a) = &self.algebra {
            let alg = a.build(file)?;
            if self.needs_graded() {
                let h = GradedAlgebra::new(alg).map_err(|e| err(file, "algebra", e.to_string()))?;
                self.validate_over(file, &h)?;
            }
        } else if self.needs_graded() {
            return Err(err(file, "algebra", "required by the cochain sections but missing"));
        }
        if let Some(c) = &self.coalgebra {
            c.build(file)?;
        }
        let src = self.ainf.as_ref().map(|a| a.build(file, "ainf")).transpose()?;
        let dst = self.ainf_target.as_ref().map(|a| a.build(file, "ainf_target")).transpose()?;
        if let Some(m) = &self.morphism {
            let s = src.as_ref().ok_or_else(|| err(file, "ainf", "required by `morphism` but missing"))?;
            m.build(file, s, dst.as_ref().unwrap_or(s))?;
        }
        Ok(())
    }

    fn needs_graded(&self) -> bool {
        self.cochain.is_some()
            || self.twist.is_some()
            || self.target.is_some()
            || self.gauge.is_some()
            || self.star.is_some()
            || self.star_prime.is_some()
            || self.gauge_series.is_some()
    }

    fn validate_over(&self, file: &str, h: &GradedAlgebra) -> Result<(), InputError> {
        if let Some(c) = &self.cochain {
            c.build(file, "cochain", h)?;
        }
        for (name, doc) in [("twist", &self.twist), ("target", &self.target)] {
            if let Some(d) = doc {
                d.twist(file, name, h)?;
            }
        }
        if let Some(g) = &self.gauge {
            g.gauge(file, "gauge", h)?;
        }
        for (name, doc) in [("star", &self.star), ("star_prime", &self.star_prime)] {
            if let Some(s) = doc {
                s.star(file, name, h)?;
            }
        }
        if let Some(g) = &self.gauge_series {
            g.gauge_series(file, "gauge_series", h)?;
        }
        Ok(())
    }
}

impl AlgebraDoc {
    pub fn build(&self, file: &str) -> Result<DgAlgebra, InputError> {
        let names = Names::new(file, "algebra.basis", &self.basis)?;
        let unit_name = self.unit.as_deref().ok_or_else(|| err(file, "algebra.unit", "required field missing"))?;
        let unit = names.get("algebra.unit", unit_name)?;
        let d = self.basis.len();
        let mut table: Vec<Option<u64>> = vec![None; d * d];
        for (k, (a, b, terms)) in self.mult.iter().enumerate() {
            let f = format!("algebra.mult[{k}]");
            let (x, y) = (names.get(&format!("{f}[0]"), a)?, names.get(&format!("{f}[1]"), b)?);
            if table[x * d + y].is_some() {
                return Err(err(file, &f, format!("second entry for the pair ({a},{b})")));
            }
            let w = names.word(&format!("{f}[2]"), terms)?;
            if !names.homogeneous(w, names.degrees[x] + names.degrees[y]) {
                return Err(err(file, &f, format!("degree-inconsistent product ({a},{b})")));
            }
            table[x * d + y] = Some(w);
        }
        let mult = table.into_iter().map(|w| F2Vec::from_word(d, w.unwrap_or(0))).collect();
        let diff = diff_table(&names, "algebra.diff", d, &self.diff)?;
        let space = basis_space(file, "algebra.basis", &self.basis)?;
        DgAlgebra::new(space, unit, mult, diff).map_err(|e| err(file, "algebra", e.to_string()))
    }

    pub fn from_algebra(a: &DgAlgebra) -> Self {
        let sp = a.space();
        let names = |v: &F2Vec| v.ones().map(|i| sp.name(i).to_string()).collect::<Vec<_>>();
        let d = a.dim();
        let mut mult = Vec::new();
        for x in 0..d {
            for y in 0..d {
                if !a.mul_basis(x, y).is_zero() {
                    mult.push((sp.name(x).to_string(), sp.name(y).to_string(), names(a.mul_basis(x, y))));
                }
            }
        }
        let diff = (0..d)
            .filter(|&x| !a.d_basis(x).is_zero())
            .map(|x| (sp.name(x).to_string(), names(a.d_basis(x))))
            .collect();
        Self {
            basis: (0..d).map(|i| BasisDoc { name: sp.name(i).to_string(), degree: sp.degree(i) }).collect(),
            unit: Some(sp.name(a.unit()).to_string()),
            mult,
            diff,
        }
    }
}

impl CoalgebraDoc {
    pub fn build(&self, file: &str) -> Result<DgCoalgebra, InputError> {
        let names = Names::new(file, "coalgebra.basis", &self.basis)?;
        let counit_name = self.counit.as_deref().ok_or_else(|| err(file, "coalgebra.counit", "required field missing"))?;
        let counit = names.get("coalgebra.counit", counit_name)?;
        let d = self.basis.len();
        let mut pairs: Vec<Option<Vec<(usize, usize)>>> = vec![None; d];
        for (k, (c, ps)) in self.comult.iter().enumerate() {
            let f = format!("coalgebra.comult[{k}]");
            let i = names.get(&format!("{f}[0]"), c)?;
            if pairs[i].is_some() {
                return Err(err(file, &f, format!("second comultiplication entry for `{c}`")));
            }
            let mut list = Vec::new();
            for (j, (l, r)) in ps.iter().enumerate() {
                let g = format!("{f}[1][{j}]");
                let (a, b) = (names.get(&format!("{g}[0]"), l)?, names.get(&format!("{g}[1]"), r)?);
                if names.degrees[a] + names.degrees[b] != names.degrees[i] {
                    return Err(err(file, &g, format!("degree-inconsistent term ({l},{r}) of Δ({c})")));
                }
                list.push((a, b));
            }
            pairs[i] = Some(list);
        }
        if let Some(i) = pairs.iter().position(Option::is_none) {
            return Err(err(file, "coalgebra.comult", format!("no entry for `{}`", self.basis[i].name)));
        }
        let diff = diff_table(&names, "coalgebra.diff", d, &self.diff)?;
        let space = basis_space(file, "coalgebra.basis", &self.basis)?;
        DgCoalgebra::from_pairs(space, counit, pairs.into_iter().map(Option::unwrap).collect(), diff)
            .map_err(|e| err(file, "coalgebra", e.to_string()))
    }
}

fn graded_names<'a>(file: &'a str, h: &'a GradedAlgebra) -> Names<'a> {
    Names {
        file,
        index: (0..h.dim()).map(|b| (h.name(b), b)).collect(),
        degrees: (0..h.dim()).map(|b| h.degree(b)).collect(),
    }
}

fn entries(
    names: &Names,
    field: &str,
    arity: usize,
    raw: &[(Vec<String>, Vec<String>)],
) -> Result<Vec<(Vec<usize>, u64)>, InputError> {
    raw.iter()
        .enumerate()
        .map(|(k, (t, terms))| {
            let f = format!("{field}.entries[{k}]");
            if t.len() != arity {
                return Err(err(names.file, &f, format!("tuple of length {}, expected {arity}", t.len())));
            }
            Ok((names.tuple(&format!("{f}[0]"), t)?, names.word(&format!("{f}[1]"), terms)?))
        })
        .collect()
}

impl CochainDoc {
    pub fn build(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<Cochain, InputError> {
        let names = graded_names(file, h);
        let e = entries(&names, field, self.arity, &self.entries)?;
        Cochain::from_tuples(h, self.arity, self.internal_degree, e).map_err(|x| err(file, field, x.to_string()))
    }

    pub fn from_cochain(h: &GradedAlgebra, c: &Cochain) -> Self {
        let names = |w: u64| (0..h.dim()).filter(|&b| w >> b & 1 == 1).map(|b| h.name(b).to_string()).collect();
        Self {
            arity: c.arity(),
            internal_degree: c.degree(),
            entries: c
                .entries(h)
                .into_iter()
                .map(|(t, v)| (t.iter().map(|&b| h.name(b).to_string()).collect(), names(v)))
                .collect(),
        }
    }
}

impl LevelsDoc {
    fn components(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<Vec<(usize, Cochain)>, InputError> {
        self.components
            .iter()
            .map(|(k, c)| {
                let f = format!("{field}.components.{k}");
                let p: usize = k.parse().map_err(|_| err(file, &f, "component keys must be integers"))?;
                Ok((p, c.build(file, &f, h)?))
            })
            .collect()
    }

    pub fn twist(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<TwistV1, InputError> {
        let comps = self.components(file, field, h)?;
        TwistV1::new(self.carrier, self.truncation, comps).map_err(|e| err(file, field, e.to_string()))
    }

    pub fn gauge(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<GaugeV1, InputError> {
        let comps = self.components(file, field, h)?;
        GaugeV1::new(self.carrier, self.truncation, comps).map_err(|e| err(file, field, e.to_string()))
    }

    pub fn from_twist(h: &GradedAlgebra, m: &TwistV1) -> Self {
        Self {
            carrier: m.carrier(),
            truncation: m.truncation(),
            components: m
                .components()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p.to_string(), CochainDoc::from_cochain(h, c)))
                .collect(),
        }
    }

    pub fn from_gauge(h: &GradedAlgebra, g: &GaugeV1) -> Self {
        Self {
            carrier: g.carrier(),
            truncation: g.truncation(),
            components: g
                .components()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p.to_string(), CochainDoc::from_cochain(h, c)))
                .collect(),
        }
    }
}

impl SeriesDoc {
    fn coeffs(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<Vec<Cochain>, InputError> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c.build(file, &format!("{field}.coefficients[{k}]"), h))
            .collect()
    }

    pub fn star(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<StarProduct, InputError> {
        StarProduct::new(self.coeffs(file, field, h)?).map_err(|e| err(file, field, e.to_string()))
    }

    pub fn gauge_series(&self, file: &str, field: &str, h: &GradedAlgebra) -> Result<GaugeSeries, InputError> {
        GaugeSeries::new(self.coeffs(file, field, h)?).map_err(|e| err(file, field, e.to_string()))
    }

    pub fn from_cochains(h: &GradedAlgebra, coeffs: &[Cochain]) -> Self {
        Self { coefficients: coeffs.iter().map(|c| CochainDoc::from_cochain(h, c)).collect() }
    }
}

fn maps(names: &Names, field: &str, docs: &[MapDoc]) -> Result<Vec<Multilinear>, InputError> {
    docs.iter()
        .enumerate()
        .map(|(k, m)| {
            let f = format!("{field}[{k}]");
            if m.arity != k + 1 {
                return Err(err(names.file, &f, format!("arity {} in position {}, expected {}", m.arity, k + 1, k + 1)));
            }
            Ok(Multilinear::from_entries(m.arity, entries(names, &f, m.arity, &m.entries)?))
        })
        .collect()
}

impl AinfDoc {
    pub fn build(&self, file: &str, field: &str) -> Result<AinfAlgebra, InputError> {
        let names = Names::new(file, &format!("{field}.basis"), &self.basis)?;
        let unit = self.unit.as_deref().map(|u| names.get(&format!("{field}.unit"), u)).transpose()?;
        let ops = maps(&names, &format!("{field}.ops"), &self.ops)?;
        let space = basis_space(file, &format!("{field}.basis"), &self.basis)?;
        AinfAlgebra::new(space, unit, ops).map_err(|e| err(file, field, e.to_string()))
    }

    pub fn from_ainf(m: &AinfAlgebra) -> Self {
        let sp = m.module();
        Self {
            basis: (0..m.dim()).map(|i| BasisDoc { name: sp.name(i).to_string(), degree: sp.degree(i) }).collect(),
            unit: m.unit().map(|u| sp.name(u).to_string()),
            ops: m.ops().iter().map(|op| map_doc(sp, op)).collect(),
        }
    }
}

fn map_doc(sp: &GradedBasis, op: &Multilinear) -> MapDoc {
    MapDoc {
        arity: op.arity(),
        entries: op
            .entries()
            .map(|(t, v)| {
                (
                    t.iter().map(|&b| sp.name(b).to_string()).collect(),
                    (0..sp.dim()).filter(|&b| v >> b & 1 == 1).map(|b| sp.name(b).to_string()).collect(),
                )
            })
            .collect(),
    }
}

impl MorphismDoc {
    /// Input names resolve in the source, output names in the target.
    pub fn build(&self, file: &str, source: &AinfAlgebra, target: &AinfAlgebra) -> Result<AinfMorphism, InputError> {
        let module_names = |m: &AinfAlgebra| -> Vec<BasisDoc> {
            (0..m.dim()).map(|i| BasisDoc { name: m.module().name(i).to_string(), degree: m.module().degree(i) }).collect()
        };
        let (sb, tb) = (module_names(source), module_names(target));
        let (sn, tn) = (Names::new(file, "ainf.basis", &sb)?, Names::new(file, "ainf_target.basis", &tb)?);
        let mut out = Vec::new();
        for (k, m) in self.maps.iter().enumerate() {
            let f = format!("morphism.maps[{k}]");
            if m.arity != k + 1 {
                return Err(err(file, &f, format!("arity {} in position {}, expected {}", m.arity, k + 1, k + 1)));
            }
            let mut e = Vec::new();
            for (j, (t, terms)) in m.entries.iter().enumerate() {
                let g = format!("{f}.entries[{j}]");
                if t.len() != m.arity {
                    return Err(err(file, &g, format!("tuple of length {}, expected {}", t.len(), m.arity)));
                }
                e.push((sn.tuple(&format!("{g}[0]"), t)?, tn.word(&format!("{g}[1]"), terms)?));
            }
            out.push(Multilinear::from_entries(m.arity, e));
        }
        AinfMorphism::new(source, target, out).map_err(|e| err(file, "morphism", e.to_string()))
    }

    pub fn from_morphism(target: &AinfAlgebra, f: &AinfMorphism) -> Self {
        Self { maps: f.maps().iter().map(|m| map_doc(target.module(), m)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_numbers, exterior};

    fn dual_doc() -> AlgebraDoc {
        AlgebraDoc::from_algebra(&dual_numbers())
    }

    #[test]
    fn algebra_round_trip() {
        for a in [dual_numbers(), exterior()] {
            let doc = AlgebraDoc::from_algebra(&a);
            assert_eq!(doc.build("t").unwrap(), a);
        }
    }

    #[test]
    fn missing_unit_names_the_field() {
        let mut doc = dual_doc();
        doc.unit = None;
        let e = doc.build("t.json").unwrap_err();
        assert_eq!(e.field, "algebra.unit");
    }

    #[test]
    fn degree_inconsistent_product_names_the_pair() {
        let text = r#"{"algebra": {"basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 1}],
            "unit": "1", "mult": [["1", "1", ["1"]], ["x", "x", ["x"]]]}}"#;
        let doc = Document::parse("t.json", text).unwrap();
        let e = doc.validate("t.json").unwrap_err();
        assert_eq!(e.field, "algebra.mult[1]");
        assert!(e.message.contains("(x,x)"), "{e}");
    }

    #[test]
    fn unknown_names_and_fields_are_rejected() {
        let text = r#"{"algebra": {"basis": [{"name": "1", "degree": 0}], "unit": "u"}}"#;
        let e = Document::parse("t", text).unwrap().validate("t").unwrap_err();
        assert!(e.message.contains("`u`"));
        assert!(Document::parse("t", r#"{"algebr": {}}"#).is_err());
    }

    #[test]
    fn cochain_and_twist_round_trip() {
        let h = GradedAlgebra::new(exterior()).unwrap();
        let c = Cochain::from_tuples(&h, 3, -1, [(vec![0, 1, 1], 0b10)]).unwrap();
        let doc = CochainDoc::from_cochain(&h, &c);
        assert_eq!(doc.build("t", "cochain", &h).unwrap(), c);
        let m = TwistV1::new(TwistCarrier::Stasheff, 4, [(3, c)]).unwrap();
        assert_eq!(LevelsDoc::from_twist(&h, &m).twist("t", "twist", &h).unwrap(), m);
    }

    #[test]
    fn ainf_round_trip() {
        let m = AinfAlgebra::from_dga(&exterior()).unwrap();
        assert_eq!(AinfDoc::from_ainf(&m).build("t", "ainf").unwrap(), m);
    }
}
