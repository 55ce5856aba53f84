//! Homotopy G-algebra structure on Hochschild cochains over GF(2), with
//! twisting elements, gauge actions and deformation theory built on top.

pub mod f2;
pub mod graded;
pub mod hochschild;
pub mod hga;
pub mod twist;
pub mod deform;
pub mod fixtures;
pub mod io;
