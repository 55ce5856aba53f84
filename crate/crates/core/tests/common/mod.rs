//! Independent oracles shared by the integration tests: dense Gaussian
//! elimination on `Vec<bool>` rows, a pointwise Hochschild differential, and
//! exhaustive enumerators for the obstruction searches.
#![allow(dead_code)]

use hga_core::hochschild::{Cochain, CochainSpace, GradedAlgebra};
use hga_core::twist::{act_levels, TwistCarrier};

/// Row-reduces in place; returns pivot columns.
pub fn eliminate(rows: &mut Vec<Vec<bool>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(columns: &[Vec<bool>], rows: usize) -> usize {
    let mut m: Vec<Vec<bool>> = (0..rows).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    eliminate(&mut m, columns.len()).len()
}

/// All `x` with `A x = b` for `A` given by columns: a particular solution
/// and a kernel basis, or `None`.
pub fn solve(columns: &[Vec<bool>], b: &[bool]) -> Option<(Vec<bool>, Vec<Vec<bool>>)> {
    let n = columns.len();
    let mut m: Vec<Vec<bool>> = (0..b.len())
        .map(|i| columns.iter().map(|c| c[i]).chain(std::iter::once(b[i])).collect())
        .collect();
    let pivots = eliminate(&mut m, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![false; n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][n];
    }
    let mut kernel = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut k = vec![false; n];
        k[free] = true;
        for (r, &p) in pivots.iter().enumerate() {
            k[p] = m[r][free];
        }
        kernel.push(k);
    }
    Some((x, kernel))
}

fn mul_vec(h: &GradedAlgebra, u: u64, v: u64) -> u64 {
    let mut out = 0;
    for a in 0..h.dim() {
        for b in 0..h.dim() {
            if u >> a & 1 == 1 && v >> b & 1 == 1 {
                out ^= h.mul_basis(a, b);
            }
        }
    }
    out
}

fn tuples(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..d).map(move |x| {
            let mut t = t.clone();
            t.push(x);
            t
        })).collect();
    }
    out
}

/// Elementary cochains `(tuple, output)` of arity `m` and internal degree `n`.
fn elementary(h: &GradedAlgebra, m: usize, n: i32) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for t in tuples(h.dim(), m) {
        let want = t.iter().map(|&b| h.degree(b)).sum::<i32>() + n;
        for o in 0..h.dim() {
            if h.degree(o) == want {
                out.push((t.clone(), o));
            }
        }
    }
    out
}

/// Pointwise `δf` of the elementary cochain `(tuple, out)`, written as a
/// dense vector over all `(m+1)`-tuples times outputs.
fn naive_delta(h: &GradedAlgebra, m: usize, e: &(Vec<usize>, usize)) -> Vec<bool> {
    let d = h.dim();
    let f = |args: &[u64]| -> u64 {
        // Multilinear extension on basis-vector arguments.
        if args.iter().zip(&e.0).all(|(&a, &t)| a >> t & 1 == 1) { 1 << e.1 } else { 0 }
    };
    let mut v = Vec::new();
    for t in tuples(d, m + 1) {
        let a: Vec<u64> = t.iter().map(|&x| 1u64 << x).collect();
        let mut val = mul_vec(h, a[0], f(&a[1..])) ^ mul_vec(h, f(&a[..m]), a[m]);
        for i in 0..m {
            let prod = mul_vec(h, a[i], a[i + 1]);
            let mut args: Vec<u64> = a[..i].to_vec();
            args.push(prod);
            args.extend_from_slice(&a[i + 2..]);
            // Expand the merged argument over basis elements.
            for b in 0..d {
                if prod >> b & 1 == 1 {
                    args[i] = 1 << b;
                    val ^= f(&args);
                }
            }
        }
        v.extend((0..d).map(|o| val >> o & 1 == 1));
    }
    v
}

/// `dim HH^{m,n}` by dense ranks of a pointwise differential.
pub fn naive_hh_dim(h: &GradedAlgebra, m: usize, n: i32) -> usize {
    let here = elementary(h, m, n);
    let out: Vec<Vec<bool>> = here.iter().map(|e| naive_delta(h, m, e)).collect();
    let rows = h.dim().pow(m as u32 + 1) * h.dim();
    let cycles = here.len() - rank(&out, rows);
    let boundaries = if m == 0 {
        0
    } else {
        let below = elementary(h, m - 1, n);
        let cols: Vec<Vec<bool>> = below.iter().map(|e| naive_delta(h, m - 1, e)).collect();
        rank(&cols, h.dim().pow(m as u32) * h.dim())
    };
    cycles - boundaries
}

fn to_bits(space: &CochainSpace, c: &Cochain) -> Vec<bool> {
    let v = space.to_vector(c).unwrap();
    (0..space.dim()).map(|i| v.get(i)).collect()
}

fn from_bits(space: &CochainSpace, bits: &[bool]) -> Cochain {
    let v = hga_core::f2::F2Vec::from_bits(bits);
    space.from_vector(&v)
}

/// The linear problem `δx = z` with `x` in bidegree `src`.
struct Delta {
    src: CochainSpace,
    dst: CochainSpace,
    columns: Vec<Vec<bool>>,
}

impl Delta {
    fn new(h: &GradedAlgebra, (a, d): (usize, i32)) -> Self {
        let src = CochainSpace::new(h, a, d).unwrap();
        let dst = CochainSpace::new(h, a + 1, d).unwrap();
        let columns = (0..src.dim()).map(|i| to_bits(&dst, &h.delta(&src.elementary(i)))).collect();
        Self { src, dst, columns }
    }

    fn kernel_dim(&self) -> usize {
        self.src.dim() - rank(&self.columns, self.dst.dim())
    }

    /// Every solution of `δx = z`.
    fn solutions(&self, z: &Cochain) -> Vec<Cochain> {
        let Some((p, kernel)) = solve(&self.columns, &to_bits(&self.dst, z)) else { return vec![] };
        assert!(kernel.len() < 24, "oracle space too large");
        (0u64..1 << kernel.len())
            .map(|mask| {
                let mut x = p.clone();
                for (i, k) in kernel.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for (a, b) in x.iter_mut().zip(k) {
                            *a ^= *b;
                        }
                    }
                }
                from_bits(&self.src, &x)
            })
            .collect()
    }
}

fn cup1_square_sum(h: &GradedAlgebra, m: &[Cochain], l: usize, bidegree: (usize, i32)) -> Cochain {
    let mut acc = Cochain::zero(bidegree.0, bidegree.1);
    for i in 1..l {
        acc.add_assign(&h.brace(&m[i - 1], &[&m[l - i - 1]]));
    }
    acc
}

/// Number of points in the full search space of the quantization oracle,
/// as a power of two.
pub fn quantize_space_log2(h: &GradedAlgebra, c: TwistCarrier, levels: usize) -> usize {
    let first = Delta::new(h, c.gauge_bidegree(1));
    let boundaries = first.src.dim() - first.kernel_dim();
    boundaries + (2..=levels).map(|l| Delta::new(h, c.twist_bidegree(l)).kernel_dim()).sum::<usize>()
}

/// Whether some twisting element on `levels` levels has first component
/// in `rep + im δ`, by enumerating every such first component and every
/// solution at each later level.
pub fn quantize_oracle(h: &GradedAlgebra, c: TwistCarrier, rep: &Cochain, levels: usize) -> bool {
    let first = Delta::new(h, c.gauge_bidegree(1));
    let images: Vec<Cochain> = {
        let mut basis = first.columns.clone();
        let pivots = eliminate(&mut basis, first.dst.dim());
        basis.truncate(pivots.len());
        assert!(basis.len() < 24, "oracle space too large");
        (0u64..1 << basis.len())
            .map(|mask| {
                let mut v = vec![false; first.dst.dim()];
                for (i, b) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x ^= *y;
                        }
                    }
                }
                from_bits(&first.dst, &v)
            })
            .collect()
    };
    let deltas: Vec<Delta> = (2..=levels).map(|l| Delta::new(h, c.twist_bidegree(l))).collect();
    fn go(h: &GradedAlgebra, c: TwistCarrier, m: &mut Vec<Cochain>, deltas: &[Delta], levels: usize) -> bool {
        let l = m.len() + 1;
        if l > levels {
            return true;
        }
        let z = cup1_square_sum(h, m, l, c.obstruction_bidegree(l));
        for x in deltas[l - 2].solutions(&z) {
            m.push(x);
            if go(h, c, m, deltas, levels) {
                return true;
            }
            m.pop();
        }
        false
    }
    images.iter().any(|b| go(h, c, &mut vec![rep.add(b)], &deltas, levels))
}

pub fn triviality_space_log2(h: &GradedAlgebra, c: TwistCarrier, levels: usize) -> usize {
    (1..=levels).map(|l| Delta::new(h, c.gauge_bidegree(l)).kernel_dim()).sum()
}

/// Whether some gauge kills `m`: level by level, the new gauge component
/// enters the action only through `δg_l`, so every candidate solves a
/// linear equation whose solutions are all enumerated.
pub fn triviality_oracle(h: &GradedAlgebra, c: TwistCarrier, m: &[Cochain]) -> bool {
    let deltas: Vec<Delta> = (1..=m.len()).map(|l| Delta::new(h, c.gauge_bidegree(l))).collect();
    fn go(h: &GradedAlgebra, c: TwistCarrier, g: &mut Vec<Cochain>, m: &[Cochain], deltas: &[Delta]) -> bool {
        let l = g.len() + 1;
        if l > m.len() {
            return act_levels(h, c, g, m).iter().all(Cochain::is_zero);
        }
        let (a, d) = c.gauge_bidegree(l);
        g.push(Cochain::zero(a, d));
        let residual = act_levels(h, c, g, &m[..l])[l - 1].clone();
        g.pop();
        for x in deltas[l - 1].solutions(&residual) {
            g.push(x);
            if go(h, c, g, m, deltas) {
                return true;
            }
            g.pop();
        }
        false
    }
    go(h, c, &mut Vec::new(), m, &deltas)
}
