//! Small algebras used throughout the tests, the acceptance suite and the CLI.

use crate::f2::F2Vec;
use crate::graded::{DgAlgebra, GradedBasis};
use crate::hochschild::GradedAlgebra;

fn from_table(names: &[(&str, i32)], products: &[(usize, usize, &[usize])]) -> DgAlgebra {
    let space = GradedBasis::new(names.iter().map(|&(n, g)| (n, g))).expect("distinct names");
    let d = space.dim();
    let mut mult = vec![F2Vec::zeros(d); d * d];
    for &(a, b, out) in products {
        mult[a * d + b] = F2Vec::from_indices(d, out.iter().copied());
    }
    DgAlgebra::graded(space, 0, mult).expect("well-formed table")
}

/// F2[x]/(x^n), ungraded, basis 1, x, ..., x^(n-1).
pub fn truncated_polynomial(n: usize) -> DgAlgebra {
    let names: Vec<String> = (0..n).map(|i| match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x{i}"),
    }).collect();
    let space = GradedBasis::new(names.into_iter().map(|s| (s, 0))).expect("distinct names");
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(if a + b < n { F2Vec::unit(n, a + b) } else { F2Vec::zeros(n) });
        }
    }
    DgAlgebra::graded(space, 0, mult).expect("well-formed table")
}

/// Dual numbers F2[x]/(x^2).
pub fn dual_numbers() -> DgAlgebra {
    truncated_polynomial(2)
}

/// F2[x]/(x^3).
pub fn truncated_cubic() -> DgAlgebra {
    truncated_polynomial(3)
}

/// Upper-triangular 2x2 matrices with basis 1, a = e12, b = e22.
pub fn upper_triangular() -> DgAlgebra {
    from_table(
        &[("1", 0), ("a", 0), ("b", 0)],
        &[(0, 0, &[0]), (0, 1, &[1]), (0, 2, &[2]), (1, 0, &[1]), (2, 0, &[2]), (1, 2, &[1]), (2, 2, &[2])],
    )
}

/// Exterior algebra on one generator of degree 1.
pub fn exterior() -> DgAlgebra {
    from_table(&[("1", 0), ("x", 1)], &[(0, 0, &[0]), (0, 1, &[1]), (1, 0, &[1])])
}

/// F2[x,y]/(x^2, y^2) with |x| = deg_x and |y| = deg_y, basis 1, x, y, xy.
/// With |x| = 1, |y| = 0 its quantization search needs to backtrack.
pub fn klein(deg_x: i32, deg_y: i32) -> DgAlgebra {
    from_table(
        &[("1", 0), ("x", deg_x), ("y", deg_y), ("xy", deg_x + deg_y)],
        &[
            (0, 0, &[0]), (0, 1, &[1]), (0, 2, &[2]), (0, 3, &[3]),
            (1, 0, &[1]), (2, 0, &[2]), (3, 0, &[3]),
            (1, 2, &[3]), (2, 1, &[3]),
        ],
    )
}

/// F2[x,y]/(x^2, xy, y^3) with |x| = deg_x and |y| = deg_y, basis 1, x, y, y2.
pub fn monomial_x2_xy_y3(deg_x: i32, deg_y: i32) -> DgAlgebra {
    from_table(
        &[("1", 0), ("x", deg_x), ("y", deg_y), ("y2", 2 * deg_y)],
        &[
            (0, 0, &[0]), (0, 1, &[1]), (0, 2, &[2]), (0, 3, &[3]),
            (1, 0, &[1]), (2, 0, &[2]), (3, 0, &[3]),
            (2, 2, &[3]),
        ],
    )
}

/// The four bundled graded algebras, by name.
pub fn bundled() -> Vec<(&'static str, DgAlgebra)> {
    vec![
        ("dual_numbers", dual_numbers()),
        ("truncated_cubic", truncated_cubic()),
        ("upper_triangular", upper_triangular()),
        ("exterior", exterior()),
    ]
}

pub fn bundled_graded() -> Vec<(&'static str, GradedAlgebra)> {
    bundled()
        .into_iter()
        .map(|(n, a)| (n, GradedAlgebra::new(a).expect("bundled algebras are valid")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_algebras_validate() {
        for (name, a) in bundled() {
            assert!(a.validate().is_valid(), "{name}");
        }
    }
}
