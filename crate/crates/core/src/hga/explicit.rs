use super::{HgaCarrier, HgaError};
use crate::f2::F2Vec;
use crate::graded::DgAlgebra;

/// A finite dg algebra with brace operations given by tables. `braces[k-1]`
/// holds `E_{1,k}` on basis tuples `(a, b_1, ..., b_k)` packed in base `dim`
/// with `a` most significant; `E_{1,k}` vanishes for `k` past the tables.
#[derive(Clone, Debug)]
pub struct ExplicitHga {
    alg: DgAlgebra,
    braces: Vec<Vec<F2Vec>>,
}

impl ExplicitHga {
    pub fn new(alg: DgAlgebra, braces: Vec<Vec<F2Vec>>) -> Result<Self, HgaError> {
        let d = alg.dim();
        for (i, table) in braces.iter().enumerate() {
            let k = i + 1;
            let expected = d.pow(k as u32 + 1);
            if table.len() != expected {
                return Err(HgaError::BraceTable { k, expected, found: table.len() });
            }
            for (idx, v) in table.iter().enumerate() {
                alg.space().check_vector(v)?;
                let tuple = unpack(idx, d, k + 1);
                let want = tuple.iter().map(|&b| alg.space().degree(b)).sum::<i32>() - k as i32;
                if !v.is_zero() && !alg.space().is_of_degree(v, want) {
                    let names: Vec<&str> = tuple.iter().map(|&b| alg.space().name(b)).collect();
                    return Err(HgaError::BraceDegree(format!("E(1,{k})({})", names.join(","))));
                }
            }
        }
        Ok(Self { alg, braces })
    }

    pub fn algebra(&self) -> &DgAlgebra {
        &self.alg
    }

    pub fn tables(&self) -> &[Vec<F2Vec>] {
        &self.braces
    }

    /// Basis vectors of the algebra, the natural sweep window.
    pub fn basis(&self) -> Vec<F2Vec> {
        (0..self.alg.dim()).map(|b| F2Vec::unit(self.alg.dim(), b)).collect()
    }

    /// Overwrites one table entry; used to build corrupted variants.
    pub fn set_entry(&mut self, k: usize, tuple: &[usize], value: F2Vec) {
        let idx = pack(tuple, self.alg.dim());
        self.braces[k - 1][idx] = value;
    }
}

fn unpack(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

fn pack(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * d + t)
}

impl HgaCarrier for ExplicitHga {
    type Elem = F2Vec;

    fn zero(&self) -> F2Vec {
        F2Vec::zeros(self.alg.dim())
    }

    fn add(&self, a: &F2Vec, b: &F2Vec) -> F2Vec {
        a.xor(b)
    }

    fn is_zero(&self, a: &F2Vec) -> bool {
        a.is_zero()
    }

    fn d(&self, a: &F2Vec) -> F2Vec {
        self.alg.d(a)
    }

    fn mul(&self, a: &F2Vec, b: &F2Vec) -> F2Vec {
        self.alg.mul(a, b)
    }

    fn brace(&self, a: &F2Vec, bs: &[&F2Vec]) -> F2Vec {
        let k = bs.len();
        if k == 0 {
            return a.clone();
        }
        let d = self.alg.dim();
        let mut out = self.zero();
        let Some(table) = self.braces.get(k - 1) else {
            return out;
        };
        let supports: Vec<Vec<usize>> = std::iter::once(a).chain(bs.iter().copied()).map(|v| v.ones().collect()).collect();
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut choice = vec![0usize; k + 1];
        loop {
            let idx = supports.iter().zip(&choice).fold(0, |acc, (s, &c)| acc * d + s[c]);
            out.xor_assign(&table[idx]);
            let mut r = k + 1;
            loop {
                if r == 0 {
                    return out;
                }
                r -= 1;
                choice[r] += 1;
                if choice[r] < supports[r].len() {
                    break;
                }
                choice[r] = 0;
            }
        }
    }

    fn max_brace_arity(&self) -> Option<usize> {
        Some(self.braces.len())
    }

    fn basis_decompose(&self, a: &F2Vec) -> Vec<F2Vec> {
        a.ones().map(|b| F2Vec::unit(self.alg.dim(), b)).collect()
    }

    fn describe(&self, a: &F2Vec) -> String {
        self.alg.space().format(a)
    }
}
