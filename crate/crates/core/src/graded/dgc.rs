use std::collections::BTreeSet;

use super::{GradedBasis, StructureError, ValidationReport};
use crate::f2::F2Vec;

/// A finite dg coalgebra. `comult[c]` is a vector over the tensor basis,
/// pair `(i, j)` at index `i * dim + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgCoalgebra {
    space: GradedBasis,
    counit: usize,
    comult: Vec<F2Vec>,
    diff: Vec<F2Vec>,
}

impl DgCoalgebra {
    pub fn new(space: GradedBasis, counit: usize, comult: Vec<F2Vec>, diff: Vec<F2Vec>) -> Result<Self, StructureError> {
        let d = space.dim();
        if counit >= d {
            return Err(StructureError::TableShape { table: "counit", expected: d, found: counit });
        }
        if comult.len() != d {
            return Err(StructureError::TableShape { table: "comult", expected: d, found: comult.len() });
        }
        if diff.len() != d {
            return Err(StructureError::TableShape { table: "diff", expected: d, found: diff.len() });
        }
        for v in &comult {
            if v.len() != d * d {
                return Err(StructureError::VectorLength { expected: d * d, found: v.len() });
            }
        }
        for v in &diff {
            space.check_vector(v)?;
        }
        Ok(Self { space, counit, comult, diff })
    }

    /// Builds the comultiplication from explicit pair lists.
    pub fn from_pairs(
        space: GradedBasis,
        counit: usize,
        pairs: Vec<Vec<(usize, usize)>>,
        diff: Vec<F2Vec>,
    ) -> Result<Self, StructureError> {
        let d = space.dim();
        let comult = pairs
            .into_iter()
            .map(|ps| F2Vec::from_indices(d * d, ps.into_iter().map(|(i, j)| i * d + j)))
            .collect();
        Self::new(space, counit, comult, diff)
    }

    pub fn ground_field() -> Self {
        let space = GradedBasis::new([("1", 0)]).expect("single name");
        Self::new(space, 0, vec![F2Vec::unit(1, 0)], vec![F2Vec::zeros(1)]).expect("well-formed")
    }

    pub fn space(&self) -> &GradedBasis {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn counit(&self) -> usize {
        self.counit
    }

    pub fn d_basis(&self, c: usize) -> &F2Vec {
        &self.diff[c]
    }

    pub fn d(&self, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.dim());
        for a in v.ones() {
            out.xor_assign(&self.diff[a]);
        }
        out
    }

    /// Terms `(i, j)` of the comultiplication of a basis element.
    pub fn comult_pairs(&self, c: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let d = self.dim();
        self.comult[c].ones().map(move |k| (k / d, k % d))
    }

    pub fn comult_vector(&self, c: usize) -> &F2Vec {
        &self.comult[c]
    }

    pub fn is_connected(&self) -> bool {
        self.space.degrees().iter().all(|&g| g >= 0) && self.space.indices_of_degree(0) == vec![self.counit]
    }

    pub fn is_n_reduced(&self, n: i32) -> bool {
        self.is_connected() && self.space.degrees().iter().all(|&g| g == 0 || g > n)
    }

    /// Checks degree laws, `dd = 0`, the coderivation rule, coassociativity and
    /// both counit laws.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let d = self.dim();
        let sp = &self.space;
        let name = |i: usize| sp.name(i).to_string();
        for c in 0..d {
            if !sp.is_of_degree(&self.diff[c], sp.degree(c) + 1) {
                report.push("differential degree", vec![name(c)]);
            }
            if !self.d(&self.diff[c]).is_zero() {
                report.push("dd = 0", vec![name(c)]);
            }
            if self.comult_pairs(c).any(|(i, j)| sp.degree(i) + sp.degree(j) != sp.degree(c)) {
                report.push("comultiplication degree", vec![name(c)]);
            }
            let mut left = F2Vec::zeros(d);
            let mut right = F2Vec::zeros(d);
            for (i, j) in self.comult_pairs(c) {
                if i == self.counit {
                    left.flip(j);
                }
                if j == self.counit {
                    right.flip(i);
                }
            }
            if left != F2Vec::unit(d, c) {
                report.push("left counit", vec![name(c)]);
            }
            if right != F2Vec::unit(d, c) {
                report.push("right counit", vec![name(c)]);
            }
            // Coderivation: Delta d = (d x 1 + 1 x d) Delta.
            let mut lhs = F2Vec::zeros(d * d);
            for e in self.diff[c].ones() {
                lhs.xor_assign(&self.comult[e]);
            }
            let mut rhs = F2Vec::zeros(d * d);
            for (i, j) in self.comult_pairs(c) {
                for di in self.diff[i].ones() {
                    rhs.flip(di * d + j);
                }
                for dj in self.diff[j].ones() {
                    rhs.flip(i * d + dj);
                }
            }
            if lhs != rhs {
                report.push("coderivation", vec![name(c)]);
            }
            let mut l3: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
            let mut r3: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
            let toggle = |s: &mut BTreeSet<(usize, usize, usize)>, t| {
                if !s.remove(&t) {
                    s.insert(t);
                }
            };
            for (i, j) in self.comult_pairs(c) {
                for (a, b) in self.comult_pairs(i) {
                    toggle(&mut l3, (a, b, j));
                }
                for (a, b) in self.comult_pairs(j) {
                    toggle(&mut r3, (i, a, b));
                }
            }
            if l3 != r3 {
                report.push("coassociativity", vec![name(c)]);
            }
        }
        report
    }
}
