use std::collections::HashMap;

use rand::Rng;

use super::{bits, Cochain, GradedAlgebra, HochschildError, MAX_ARITY};
use crate::f2::{AffineSolutionSet, F2Matrix, F2Vec, QuotientSpace};

/// Coordinates on `C^{m,n}`: one basis vector per elementary cochain
/// `(input tuple -> single output basis element)` of the right degree.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    arity: usize,
    degree: i32,
    elems: Vec<(u64, usize)>,
    index: HashMap<(u64, usize), usize>,
}

impl CochainSpace {
    pub fn new(h: &GradedAlgebra, arity: usize, degree: i32) -> Result<Self, HochschildError> {
        if arity > h.max_arity() {
            return Err(HochschildError::ArityTooLarge { arity, max: h.max_arity() });
        }
        let d = h.dim();
        let mut elems = Vec::new();
        let mut buf = [0usize; MAX_ARITY];
        let count = (d as u64).pow(arity as u32);
        for key_n in 0..count {
            // Tuples in lexicographic order, re-packed in the algebra's base.
            let mut k = key_n;
            for i in (0..arity).rev() {
                buf[i] = (k % d as u64) as usize;
                k /= d as u64;
            }
            let key = h.encode(&buf[..arity]);
            let want = buf[..arity].iter().map(|&b| h.degree(b)).sum::<i32>() + degree;
            for out in 0..d {
                if h.degree(out) == want {
                    elems.push((key, out));
                }
            }
        }
        let index = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Self { arity, degree, elems, index })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn elementary(&self, i: usize) -> Cochain {
        let (key, out) = self.elems[i];
        Cochain::from_raw(self.arity, self.degree, vec![(key, 1u64 << out)])
    }

    pub fn to_vector(&self, c: &Cochain) -> Result<F2Vec, HochschildError> {
        let mut v = F2Vec::zeros(self.dim());
        if c.is_zero() {
            return Ok(v);
        }
        if c.bidegree() != (self.arity, self.degree) {
            return Err(HochschildError::WrongBidegree(c.arity(), c.degree()));
        }
        for &(key, val) in c.raw() {
            for b in bits(val) {
                let i = self.index.get(&(key, b)).ok_or(HochschildError::WrongBidegree(c.arity(), c.degree()))?;
                v.flip(*i);
            }
        }
        Ok(v)
    }

    pub fn from_vector(&self, v: &F2Vec) -> Cochain {
        let raw = v.ones().map(|i| (self.elems[i].0, 1u64 << self.elems[i].1)).collect();
        Cochain::from_raw(self.arity, self.degree, raw)
    }

    /// Uniformly random cochain of this bidegree.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Cochain {
        let v = F2Vec::from_indices(self.dim(), (0..self.dim()).filter(|_| rng.gen::<bool>()));
        self.from_vector(&v)
    }

    /// Random cochain with roughly `density` of the elementary cochains.
    pub fn random_sparse<R: Rng + ?Sized>(&self, rng: &mut R, density: f64) -> Cochain {
        let v = F2Vec::from_indices(self.dim(), (0..self.dim()).filter(|_| rng.gen_bool(density)));
        self.from_vector(&v)
    }

    /// Matrix of the differential `C^{m,n} -> C^{m+1,n}`.
    pub fn delta_matrix(&self, h: &GradedAlgebra, target: &CochainSpace) -> F2Matrix {
        let columns: Vec<F2Vec> = (0..self.dim())
            .map(|i| target.to_vector(&h.delta(&self.elementary(i))).expect("delta preserves bidegree"))
            .collect();
        F2Matrix::from_columns(target.dim(), &columns).expect("consistent lengths")
    }
}

/// `HH^{m,n}(H,H)` with the data needed to decide coboundaries and produce
/// canonical representatives.
#[derive(Clone, Debug)]
pub struct HochschildCohomology {
    space: CochainSpace,
    lower: CochainSpace,
    delta_in: F2Matrix,
    delta_out: F2Matrix,
    quotient: QuotientSpace,
}

pub fn hochschild_cohomology(h: &GradedAlgebra, m: usize, n: i32) -> Result<HochschildCohomology, HochschildError> {
    let space = CochainSpace::new(h, m, n)?;
    let upper = CochainSpace::new(h, m + 1, n)?;
    let delta_out = space.delta_matrix(h, &upper);
    let (lower, delta_in) = if m == 0 {
        let lower = CochainSpace { arity: 0, degree: n, elems: Vec::new(), index: HashMap::new() };
        (lower, F2Matrix::zeros(space.dim(), 0))
    } else {
        let lower = CochainSpace::new(h, m - 1, n)?;
        let mat = lower.delta_matrix(h, &space);
        (lower, mat)
    };
    let cycles = delta_out.kernel();
    let boundaries: Vec<F2Vec> = (0..delta_in.cols()).map(|j| delta_in.column(j)).collect();
    let quotient = QuotientSpace::new(space.dim(), &cycles, &boundaries).expect("delta squares to zero");
    Ok(HochschildCohomology { space, lower, delta_in, delta_out, quotient })
}

impl HochschildCohomology {
    pub fn bidegree(&self) -> (usize, i32) {
        (self.space.arity, self.space.degree)
    }

    pub fn dimension(&self) -> usize {
        self.quotient.dimension()
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn lower_space(&self) -> &CochainSpace {
        &self.lower
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn cycle_rank(&self) -> usize {
        self.quotient.cycle_rank()
    }

    pub fn boundary_rank(&self) -> usize {
        self.quotient.boundary_rank()
    }

    pub fn is_cocycle(&self, z: &Cochain) -> Result<bool, HochschildError> {
        let v = self.space.to_vector(z)?;
        Ok(self.delta_out.mul_vec(&v).expect("consistent lengths").is_zero())
    }

    /// Solutions `x` in `C^{m-1,n}` of `delta x = z`, in lower-space coordinates.
    pub fn is_coboundary(&self, z: &Cochain) -> Result<AffineSolutionSet, HochschildError> {
        let v = self.space.to_vector(z)?;
        Ok(self.delta_in.solve(&v).expect("consistent lengths"))
    }

    /// Some `x` with `delta x = z`, if one exists.
    pub fn lift(&self, z: &Cochain) -> Result<Option<Cochain>, HochschildError> {
        Ok(self.is_coboundary(z)?.particular.map(|x| self.lower.from_vector(&x)))
    }

    /// Canonical representative of the class of a cocycle.
    pub fn reduce(&self, z: &Cochain) -> Result<Cochain, HochschildError> {
        Ok(self.space.from_vector(&self.quotient.reduce(&self.space.to_vector(z)?)))
    }

    pub fn coordinates(&self, z: &Cochain) -> Result<F2Vec, HochschildError> {
        let v = self.space.to_vector(z)?;
        self.quotient.coordinates(&v).map_err(|_| HochschildError::NotACocycle)
    }

    pub fn representative(&self, coords: &F2Vec) -> Cochain {
        self.space.from_vector(&self.quotient.representative(coords))
    }

    /// Cocycles spanning a complement of the coboundaries.
    pub fn class_representatives(&self) -> Vec<Cochain> {
        self.quotient.transversal().iter().map(|v| self.space.from_vector(v)).collect()
    }

    /// All solutions of `delta x = z` as particular solution plus kernel.
    pub fn lift_space(&self, z: &Cochain) -> Result<Option<(Cochain, Vec<Cochain>)>, HochschildError> {
        let sol = self.is_coboundary(z)?;
        Ok(sol.particular.map(|p| {
            (self.lower.from_vector(&p), sol.kernel_basis.iter().map(|k| self.lower.from_vector(k)).collect())
        }))
    }
}
