//! Twisting elements `dm = m ⌣₁ m` in the bigraded Hochschild hGa, the gauge
//! group acting on them, and the obstruction-theoretic searches built on the
//! action.
//!
//! Everything is indexed by a level `l >= 1`. A [`TwistCarrier`] fixes the
//! bidegree of each level: in the Stasheff grading level `l` of a twisting
//! element is `m^{l+2} ∈ C^{l+2,-l}` and of a gauge element `g^{l+1} ∈
//! C^{l+1,-l}`; in the formal grading level `l` is the coefficient of `t^l`,
//! an arity 2 (resp. arity 1) cochain of internal degree 0. Both gradings of
//! twisting elements (`m^p` and `b_q`) are views on the same levels.

mod engine;
mod random;
mod search;
mod types;

pub use engine::{
    act_levels, check_levels, gauge_inverse_levels, gauge_mul_levels, quadratic_term,
};
pub use random::{random_gauge_levels, random_twist_levels};
pub use search::{
    find_equivalence, quantization_obstruction, quantize, triviality_reduce, EquivalenceVerdict,
    ObstructionClass, QuantizeVerdict, SearchStats, DEFAULT_BUDGET,
};
pub use types::{GaugeV1, GaugeV2, TwistV1, TwistV2};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hochschild::HochschildError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("component {label} has bidegree {found:?}, expected {expected:?}")]
    Bidegree { label: String, expected: (usize, i32), found: (usize, i32) },
    #[error("component {label} lies outside the truncation")]
    OutOfRange { label: String },
    #[error("truncation {found} is below the minimum {min}")]
    Truncation { found: usize, min: usize },
    #[error("operands live in different carriers or truncations")]
    Mismatch,
    #[error("not a twisting element: condition fails at level {0}")]
    NotTwisting(usize),
    #[error("obstruction at level {0} is not a cocycle")]
    ObstructionNotCocycle(usize),
    #[error("class coordinates have length {found}, cohomology has dimension {expected}")]
    ClassLength { expected: usize, found: usize },
    #[error("lift space of dimension {0} is too large to enumerate")]
    LiftSpaceTooLarge(usize),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
}

/// Which bigrading of the Hochschild complex the levels live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistCarrier {
    /// `m^p ∈ C^{p,2-p}`, `g^p ∈ C^{p,1-p}`: A(∞)-deformations of a graded algebra.
    Stasheff,
    /// `B_l t^l` with `B_l ∈ C^{2,0}`, `G_l t^l` with `G_l ∈ C^{1,0}`: formal
    /// deformations of the multiplication.
    Formal,
}

impl TwistCarrier {
    pub fn twist_bidegree(self, level: usize) -> (usize, i32) {
        match self {
            TwistCarrier::Stasheff => (level + 2, -(level as i32)),
            TwistCarrier::Formal => (2, 0),
        }
    }

    pub fn gauge_bidegree(self, level: usize) -> (usize, i32) {
        match self {
            TwistCarrier::Stasheff => (level + 1, -(level as i32)),
            TwistCarrier::Formal => (1, 0),
        }
    }

    /// Bidegree of the quadratic obstruction cochain at `level`.
    pub fn obstruction_bidegree(self, level: usize) -> (usize, i32) {
        let (a, d) = self.twist_bidegree(level);
        (a + 1, d)
    }
}
