use super::HgaCarrier;
use crate::hochschild::{Cochain, CochainSpace, GradedAlgebra, HochschildError};

/// The Hochschild complex of a graded algebra as a homotopy G-algebra:
/// differential `delta`, cup product and brace operations. Elements are
/// homogeneous cochains; sums of different bidegrees are rejected.
#[derive(Clone, Debug)]
pub struct HochschildHga<'h> {
    h: &'h GradedAlgebra,
}

impl<'h> HochschildHga<'h> {
    pub fn new(h: &'h GradedAlgebra) -> Self {
        Self { h }
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        self.h
    }
}

impl HgaCarrier for HochschildHga<'_> {
    type Elem = Cochain;

    fn zero(&self) -> Cochain {
        Cochain::zero(0, 0)
    }

    fn add(&self, a: &Cochain, b: &Cochain) -> Cochain {
        a.add(b)
    }

    fn is_zero(&self, a: &Cochain) -> bool {
        a.is_zero()
    }

    fn d(&self, a: &Cochain) -> Cochain {
        self.h.delta(a)
    }

    fn mul(&self, a: &Cochain, b: &Cochain) -> Cochain {
        self.h.cup(a, b)
    }

    fn brace(&self, a: &Cochain, bs: &[&Cochain]) -> Cochain {
        self.h.brace(a, bs)
    }

    fn max_brace_arity(&self) -> Option<usize> {
        None
    }

    fn basis_decompose(&self, a: &Cochain) -> Vec<Cochain> {
        let (m, n) = a.bidegree();
        a.raw()
            .iter()
            .flat_map(|&(k, v)| {
                crate::hochschild::bits(v).map(move |b| Cochain::from_raw(m, n, vec![(k, 1u64 << b)]))
            })
            .collect()
    }

    fn weight(&self, a: &Cochain) -> usize {
        a.arity()
    }

    fn describe(&self, a: &Cochain) -> String {
        a.format(self.h)
    }
}

/// Elementary cochains of arity at most `max_arity`, over every internal
/// degree that admits one.
pub fn hochschild_window(h: &GradedAlgebra, max_arity: usize) -> Result<Vec<Cochain>, HochschildError> {
    let degs: Vec<i32> = (0..h.dim()).map(|b| h.degree(b)).collect();
    let (lo, hi) = (*degs.iter().min().unwrap_or(&0), *degs.iter().max().unwrap_or(&0));
    let mut out = Vec::new();
    for m in 0..=max_arity {
        let span = (hi - lo) * (m as i32 + 1);
        let n_min = lo - hi * m as i32;
        for n in n_min..=n_min + span {
            let sp = CochainSpace::new(h, m, n)?;
            out.extend((0..sp.dim()).map(|i| sp.elementary(i)));
        }
    }
    Ok(out)
}
