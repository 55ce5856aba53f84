//! Deformation front-ends. Star products `a⋆b = ab + Σ B_i(a,b) t^i` with
//! their gauge equivalences map to twisting elements in the formal carrier;
//! minimal A(∞)-structures extending a graded multiplication map to
//! twisting elements in the Stasheff carrier. Every check is truncated (order
//! `N` in `t`, arity window for A(∞)) and reports its bound.

mod ainf;
mod ainf_bar;
mod multilinear;
mod stasheff;
mod star;

pub use ainf::{
    check_ainf, check_ainf_morphism, classify_morphism, verify_homology_model, AinfAlgebra, AinfMorphism,
    HomologyModelReport, MorphismClass, MorphismKind,
};
pub use ainf_bar::{ainf_bar, AinfBar, AinfBarReport};
pub use multilinear::Multilinear;
pub use stasheff::{
    gauge_to_morphism, intrinsic_formality, morphism_to_gauge, stasheff_to_twist, twist_to_stasheff,
    BidegreeDimension, FormalityReport,
};
pub use star::{
    check_gauge, check_star, gauge_series_to_v2, gauge_transform, gerstenhaber_report, star_eval, star_to_twist,
    twist_to_star, ClassVerdict, GaugeSeries, GerstenhaberReport, StarProduct,
};

use serde::Serialize;
use thiserror::Error;

use crate::graded::StructureError;
use crate::hochschild::HochschildError;
use crate::twist::TwistError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeformError {
    #[error("{what}: entry {entry} breaks the degree law")]
    Degree { what: String, entry: String },
    #[error("{0}")]
    Shape(String),
    #[error("structure is not minimal: m1 is nonzero")]
    NotMinimal,
    #[error("m2 differs from the multiplication at {0}")]
    WrongMultiplication(String),
    #[error("first morphism component is not the identity at {0}")]
    NotIdentity(String),
    #[error("module does not match the algebra: {0}")]
    ModuleMismatch(String),
    #[error("expected a twisting element in the {0} carrier")]
    Carrier(&'static str),
    #[error("not augmented: {0}")]
    NotAugmented(String),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// The first violated identity: its order (power of `t`, or arity) and the
/// basis tuple witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub order: usize,
    pub witness: Vec<String>,
}
