//! Bigraded Hochschild cochains `C^{m,n}(H,H)` of a finite graded algebra:
//! the differential, cup product, brace operations and cohomology.

mod cochain;
mod cohomology;

pub use cochain::{Cochain, CochainSum};
pub use cohomology::{hochschild_cohomology, CochainSpace, HochschildCohomology};

use thiserror::Error;

use crate::graded::{DgAlgebra, StructureError};

/// Basis tuples are packed into a `u64` in base `dim`; this bounds the arity.
pub const MAX_ARITY: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochschildError {
    #[error("algebra has a nonzero differential")]
    NonzeroDifferential,
    #[error("algebra of dimension {0} exceeds the supported 64")]
    TooLarge(usize),
    #[error("algebra fails validation: {0}")]
    Invalid(String),
    #[error("arity {arity} exceeds the capacity {max} for this algebra")]
    ArityTooLarge { arity: usize, max: usize },
    #[error("entry {entry} breaks the internal degree {degree}")]
    NotHomogeneous { entry: String, degree: i32 },
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("basis index {0} out of range")]
    BadIndex(usize),
    #[error("tuple has length {found}, expected {expected}")]
    BadTuple { expected: usize, found: usize },
    #[error("cochain has bidegree ({0}, {1}) outside the space")]
    WrongBidegree(usize, i32),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A graded algebra (zero differential) of dimension at most 64, with its
/// multiplication cached as bitmasks.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    alg: DgAlgebra,
    dim: usize,
    base: u64,
    mul: Vec<u64>,
    /// `preimage[b]` lists pairs `(x, y)` with `b` in the support of `x y`.
    preimage: Vec<Vec<(u64, u64)>>,
    pow: Vec<u64>,
    max_arity: usize,
}

impl GradedAlgebra {
    pub fn new(alg: DgAlgebra) -> Result<Self, HochschildError> {
        let dim = alg.dim();
        if dim > 64 {
            return Err(HochschildError::TooLarge(dim));
        }
        if !alg.has_zero_differential() {
            return Err(HochschildError::NonzeroDifferential);
        }
        let report = alg.validate();
        if let Some(v) = report.violations.first() {
            return Err(HochschildError::Invalid(format!("{} at {:?}", v.law, v.witness)));
        }
        let mut mul = vec![0u64; dim * dim];
        let mut preimage = vec![Vec::new(); dim];
        for x in 0..dim {
            for y in 0..dim {
                let w = alg.mul_basis(x, y).to_word();
                mul[x * dim + y] = w;
                for b in 0..dim {
                    if w >> b & 1 == 1 {
                        preimage[b].push((x as u64, y as u64));
                    }
                }
            }
        }
        let mut pow = vec![1u64];
        let mut max_arity = 0;
        while max_arity < MAX_ARITY {
            match pow[max_arity].checked_mul(dim.max(2) as u64) {
                Some(p) => {
                    pow.push(p);
                    max_arity += 1;
                }
                None => break,
            }
        }
        Ok(Self { alg, dim, base: dim.max(2) as u64, mul, preimage, pow, max_arity })
    }

    pub fn algebra(&self) -> &DgAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self, b: usize) -> i32 {
        self.alg.space().degree(b)
    }

    pub fn unit(&self) -> usize {
        self.alg.unit()
    }

    pub fn name(&self, b: usize) -> &str {
        self.alg.space().name(b)
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub(crate) fn base(&self) -> u64 {
        self.base
    }

    pub(crate) fn pow(&self, k: usize) -> u64 {
        self.pow[k]
    }

    pub fn mul_basis(&self, x: usize, y: usize) -> u64 {
        self.mul[x * self.dim + y]
    }

    /// Product of two elements given as basis bitmasks.
    pub fn mul_words(&self, u: u64, v: u64) -> u64 {
        let mut out = 0;
        for x in bits(u) {
            for y in bits(v) {
                out ^= self.mul[x * self.dim + y];
            }
        }
        out
    }

    pub(crate) fn preimage(&self, b: usize) -> &[(u64, u64)] {
        &self.preimage[b]
    }

    /// The degree of a nonzero homogeneous element, `None` otherwise.
    pub fn word_degree(&self, v: u64) -> Option<i32> {
        let mut it = bits(v).map(|b| self.degree(b));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub(crate) fn encode(&self, tuple: &[usize]) -> u64 {
        tuple.iter().fold(0u64, |acc, &t| acc * self.base + t as u64)
    }

    pub(crate) fn decode(&self, mut key: u64, arity: usize, out: &mut [usize]) {
        for i in (0..arity).rev() {
            out[i] = (key % self.base) as usize;
            key /= self.base;
        }
    }

    pub fn format_word(&self, v: u64) -> String {
        if v == 0 {
            return "0".into();
        }
        bits(v).map(|b| self.name(b)).collect::<Vec<_>>().join("+")
    }
}

/// Indices of set bits, lowest first.
pub(crate) fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}
