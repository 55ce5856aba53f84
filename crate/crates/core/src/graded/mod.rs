//! Finite differential graded algebras and coalgebras over GF(2), their
//! truncated bar and cobar constructions, twisting cochains and classical
//! twisting elements with the gauge action of invertible degree-zero elements.

mod bar;
mod basis;
mod cobar;
mod dga;
mod dgc;
mod twisting;

pub use bar::{bar, enumerate_words as bar_words, TruncatedBar};
pub use basis::{GradedBasis, Homogeneity};
pub use cobar::{cobar, TruncatedCobar};
pub use dga::DgAlgebra;
pub use dgc::DgCoalgebra;
pub use twisting::{
    berikashvili_act, check_brown, check_dga_twisting, extend_to_bar, extend_to_cobar,
    inverse_in_degree_zero, universal_bar_cochain, universal_cobar_cochain, BarCoextension,
    BrownReport, CobarExtension, TwistingCochainMap,
};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis element `{0}`")]
    UnknownName(String),
    #[error("table `{table}` has {found} entries, expected {expected}")]
    TableShape { table: &'static str, expected: usize, found: usize },
    #[error("vector of length {found} does not match dimension {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error("{what} is not homogeneous of degree {expected}")]
    NotHomogeneous { what: String, expected: i32 },
    #[error("algebra is not connected and 1-reduced; pass the non-reduced flag to accept a truncated bar construction")]
    NotReduced,
    #[error("coalgebra is not connected")]
    NotConnected,
    #[error("structure is not augmented: {0}")]
    NotAugmented(String),
    #[error("element is not invertible in degree zero")]
    NotInvertible,
    #[error("twisting cochain fails Brown's condition at `{0}`")]
    BrownFailure(String),
    #[error("twisting cochain must vanish on the counit")]
    NonzeroOnCounit,
    #[error("algebra has dimension {0}, above the supported maximum of 64")]
    TooLarge(usize),
    #[error("a graded algebra must have zero differential")]
    NonzeroDifferential,
}

/// A violated identity, named by law, with the basis tuple that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<String>) -> Self {
        Self { law: law.into(), witness }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &str, witness: Vec<String>) {
        self.violations.push(Violation::new(law, witness));
    }

    pub fn has_law(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}
