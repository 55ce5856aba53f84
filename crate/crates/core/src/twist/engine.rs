//! Level-wise formulas. Slices hold levels `1, 2, ...` at indices `0, 1, ...`;
//! a missing level counts as zero.

use super::TwistCarrier;
use crate::hochschild::{Cochain, GradedAlgebra};

fn level(xs: &[Cochain], l: usize) -> Option<&Cochain> {
    xs.get(l - 1).filter(|c| !c.is_zero())
}

/// `Σ_{i+j=l} m_i ⌣₁ m_j`, the right side of the twisting condition.
pub fn quadratic_term(h: &GradedAlgebra, carrier: TwistCarrier, m: &[Cochain], l: usize) -> Cochain {
    let (a, d) = carrier.obstruction_bidegree(l);
    let mut acc = Cochain::zero(a, d);
    for i in 1..l {
        if let (Some(x), Some(y)) = (level(m, i), level(m, l - i)) {
            acc.add_assign(&h.cup1(x, y));
        }
    }
    acc
}

/// First level `l <= m.len()` where `δm_l ≠ Σ m_i ⌣₁ m_j`, if any.
pub fn check_levels(h: &GradedAlgebra, carrier: TwistCarrier, m: &[Cochain]) -> Option<usize> {
    (1..=m.len()).find(|&l| h.delta(&m[l - 1]) != quadratic_term(h, carrier, m, l))
}

/// `Σ_{k>=1} Σ E_{1,k}(f; g_{b_1}, ..., g_{b_k})` over `b_i >= 1` summing to
/// `rest`, accumulated into `acc`.
fn brace_series(h: &GradedAlgebra, f: &Cochain, g: &[Cochain], rest: usize, acc: &mut Cochain) {
    fn go<'a>(
        h: &GradedAlgebra,
        f: &Cochain,
        g: &'a [Cochain],
        rest: usize,
        args: &mut Vec<&'a Cochain>,
        acc: &mut Cochain,
    ) {
        if rest == 0 {
            if !args.is_empty() {
                acc.add_assign(&h.brace(f, args));
            }
            return;
        }
        if args.len() == f.arity() {
            return;
        }
        for b in 1..=rest {
            if let Some(x) = level(g, b) {
                args.push(x);
                go(h, f, g, rest - b, args, acc);
                args.pop();
            }
        }
    }
    if f.is_zero() {
        return;
    }
    go(h, f, g, rest, &mut Vec::new(), acc);
}

/// `ḡ * g = ḡ + g + Σ_k E_{1,k}(ḡ; g, ..., g)` on the first `n` levels.
pub fn gauge_mul_levels(
    h: &GradedAlgebra,
    carrier: TwistCarrier,
    gbar: &[Cochain],
    g: &[Cochain],
    n: usize,
) -> Vec<Cochain> {
    (1..=n)
        .map(|l| {
            let (a, d) = carrier.gauge_bidegree(l);
            let mut acc = Cochain::zero(a, d);
            for x in [level(gbar, l), level(g, l)].into_iter().flatten() {
                acc.add_assign(x);
            }
            for p in 1..l {
                if let Some(x) = level(gbar, p) {
                    brace_series(h, x, g, l - p, &mut acc);
                }
            }
            acc
        })
        .collect()
}

/// The inverse `h` with `g * h = e`, solved level by level: the new level
/// enters `g * h` only through the linear term.
pub fn gauge_inverse_levels(h: &GradedAlgebra, carrier: TwistCarrier, g: &[Cochain]) -> Vec<Cochain> {
    let mut inv: Vec<Cochain> = Vec::with_capacity(g.len());
    for l in 1..=g.len() {
        let (a, d) = carrier.gauge_bidegree(l);
        let mut acc = Cochain::zero(a, d);
        if let Some(x) = level(g, l) {
            acc.add_assign(x);
        }
        for p in 1..l {
            if let Some(x) = level(g, p) {
                brace_series(h, x, &inv, l - p, &mut acc);
            }
        }
        inv.push(acc);
    }
    inv
}

/// Everything in `(g * m)_l` except `m_l + δg_l`, given the already solved
/// lower levels `mbar` of the result.
pub(crate) fn action_rest(
    h: &GradedAlgebra,
    carrier: TwistCarrier,
    g: &[Cochain],
    m: &[Cochain],
    mbar: &[Cochain],
    l: usize,
) -> Cochain {
    let (a, d) = carrier.twist_bidegree(l);
    let mut acc = Cochain::zero(a, d);
    for i in 1..l {
        if let Some(x) = level(g, i) {
            if let Some(y) = level(g, l - i) {
                acc.add_assign(&h.cup(x, y));
            }
            if let Some(y) = level(m, l - i) {
                acc.add_assign(&h.cup1(x, y));
            }
        }
        if let Some(y) = level(mbar, i) {
            brace_series(h, y, g, l - i, &mut acc);
        }
    }
    acc
}

/// `m̄ = g * m`, solved from `m̄ = m + dg + g·g + E_{1,1}(g; m) + Σ_k
/// E_{1,k}(m̄; g, ..., g)` on the levels of `m`.
pub fn act_levels(h: &GradedAlgebra, carrier: TwistCarrier, g: &[Cochain], m: &[Cochain]) -> Vec<Cochain> {
    let mut out: Vec<Cochain> = Vec::with_capacity(m.len());
    for l in 1..=m.len() {
        let mut acc = action_rest(h, carrier, g, m, &out, l);
        acc.add_assign(&m[l - 1]);
        if let Some(x) = level(g, l) {
            acc.add_assign(&h.delta(x));
        }
        out.push(acc);
    }
    out
}
