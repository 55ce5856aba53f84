use super::{GradedBasis, Homogeneity, StructureError, ValidationReport};
use crate::f2::F2Vec;

/// A finite dg algebra: basis, unit, multiplication table and differential.
///
/// Tables are stored densely; `mult[a * dim + b]` is the product of basis
/// elements `a` and `b`. Validity (associativity, Leibniz rule, ...) is not
/// assumed; see [`DgAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgAlgebra {
    space: GradedBasis,
    unit: usize,
    mult: Vec<F2Vec>,
    diff: Vec<F2Vec>,
}

impl DgAlgebra {
    pub fn new(space: GradedBasis, unit: usize, mult: Vec<F2Vec>, diff: Vec<F2Vec>) -> Result<Self, StructureError> {
        let d = space.dim();
        if unit >= d {
            return Err(StructureError::TableShape { table: "unit", expected: d, found: unit });
        }
        if mult.len() != d * d {
            return Err(StructureError::TableShape { table: "mult", expected: d * d, found: mult.len() });
        }
        if diff.len() != d {
            return Err(StructureError::TableShape { table: "diff", expected: d, found: diff.len() });
        }
        for v in mult.iter().chain(&diff) {
            space.check_vector(v)?;
        }
        Ok(Self { space, unit, mult, diff })
    }

    /// Algebra with zero differential.
    pub fn graded(space: GradedBasis, unit: usize, mult: Vec<F2Vec>) -> Result<Self, StructureError> {
        let diff = vec![F2Vec::zeros(space.dim()); space.dim()];
        Self::new(space, unit, mult, diff)
    }

    /// The ground field: a single unit of degree zero.
    pub fn ground_field() -> Self {
        let space = GradedBasis::new([("1", 0)]).expect("single name");
        Self::graded(space, 0, vec![F2Vec::unit(1, 0)]).expect("well-formed")
    }

    pub fn space(&self) -> &GradedBasis {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn unit_vector(&self) -> F2Vec {
        F2Vec::unit(self.dim(), self.unit)
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &F2Vec {
        &self.mult[a * self.dim() + b]
    }

    pub fn d_basis(&self, a: usize) -> &F2Vec {
        &self.diff[a]
    }

    pub fn mul(&self, u: &F2Vec, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.dim());
        for a in u.ones() {
            for b in v.ones() {
                out.xor_assign(self.mul_basis(a, b));
            }
        }
        out
    }

    pub fn d(&self, v: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.dim());
        for a in v.ones() {
            out.xor_assign(&self.diff[a]);
        }
        out
    }

    pub fn has_zero_differential(&self) -> bool {
        self.diff.iter().all(F2Vec::is_zero)
    }

    pub fn is_connected(&self) -> bool {
        let degs = self.space.degrees();
        degs.iter().all(|&g| g >= 0) && self.space.indices_of_degree(0) == vec![self.unit]
    }

    pub fn is_n_reduced(&self, n: i32) -> bool {
        self.is_connected() && self.space.degrees().iter().all(|&g| g == 0 || g > n)
    }

    /// Checks degree additivity, `dd = 0`, the Leibniz rule, associativity and
    /// the unit laws on every basis tuple.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let d = self.dim();
        let name = |i: usize| self.space.name(i).to_string();
        let sp = &self.space;
        for a in 0..d {
            if !sp.is_of_degree(&self.diff[a], sp.degree(a) + 1) {
                report.push("differential degree", vec![name(a)]);
            }
            if !self.d(&self.diff[a]).is_zero() {
                report.push("dd = 0", vec![name(a)]);
            }
            let u = self.unit_vector();
            let ea = F2Vec::unit(d, a);
            if self.mul(&u, &ea) != ea {
                report.push("left unit", vec![name(a)]);
            }
            if self.mul(&ea, &u) != ea {
                report.push("right unit", vec![name(a)]);
            }
            for b in 0..d {
                let ab = self.mul_basis(a, b);
                if !matches!(sp.homogeneity(ab), Homogeneity::Zero)
                    && sp.homogeneity(ab) != Homogeneity::Degree(sp.degree(a) + sp.degree(b))
                {
                    report.push("degree additivity", vec![name(a), name(b)]);
                }
                let eb = F2Vec::unit(d, b);
                let lhs = self.d(ab);
                let rhs = self.mul(&self.diff[a], &eb).xor(&self.mul(&ea, &self.diff[b]));
                if lhs != rhs {
                    report.push("Leibniz", vec![name(a), name(b)]);
                }
                for c in 0..d {
                    let ec = F2Vec::unit(d, c);
                    let left = self.mul(ab, &ec);
                    let right = self.mul(&ea, self.mul_basis(b, c));
                    if left != right {
                        report.push("associativity", vec![name(a), name(b), name(c)]);
                    }
                }
            }
        }
        report
    }
}
