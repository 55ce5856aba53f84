//! Homotopy G-algebras: a carrier interface, exhaustive axiom sweeps, the
//! commutator bracket and the multiplication on the bar construction.

mod axioms;
mod bar_bialgebra;
mod explicit;
mod hochschild_carrier;
mod lie;

pub use axioms::{verify_axioms, verify_low_dim, AxiomConfig, AxiomReport, LawLedger, LawTally};
pub use bar_bialgebra::{build_bar_bialgebra, BarBialgebra, BarBialgebraReport, BarElem};
pub use explicit::ExplicitHga;
pub use hochschild_carrier::{hochschild_window, HochschildHga};
pub use lie::{bracket, verify_lie};

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::graded::StructureError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HgaError {
    #[error("brace table E(1,{k}) has {found} entries, expected {expected}")]
    BraceTable { k: usize, expected: usize, found: usize },
    #[error("brace value breaks the degree law at {0}")]
    BraceDegree(String),
    #[error("axioms fail upstream ({0} violations)")]
    AxiomFailure(usize),
    #[error("bar truncation must be at least 2, got {0}")]
    TruncationTooSmall(usize),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A dg algebra with brace operations `E_{1,k}`. Elements need not be
/// homogeneous unless the carrier says so.
pub trait HgaCarrier {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn d(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `E_{1,k}(a; bs)`; `E_{1,0}` must be the identity.
    fn brace(&self, a: &Self::Elem, bs: &[&Self::Elem]) -> Self::Elem;
    /// Largest `k` with possibly nonzero `E_{1,k}`, if bounded.
    fn max_brace_arity(&self) -> Option<usize>;
    /// Splits an element into basis elements summing to it.
    fn basis_decompose(&self, a: &Self::Elem) -> Vec<Self::Elem>;
    /// Size measure used to bound sweeps (cochain arity for Hochschild).
    fn weight(&self, _a: &Self::Elem) -> usize {
        0
    }
    fn describe(&self, a: &Self::Elem) -> String;

    fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Self::Elem>) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.add(a, b))
    }
}
