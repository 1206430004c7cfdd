//! Exact computations in extended affine Weyl groups and affine Hecke algebras.

pub mod error;
pub mod hecke_bernstein;
pub mod hecke_im;
pub mod laurent;
pub mod linalg;
pub mod quotient_ht;
pub mod ratfn;
pub mod root_data;
pub mod scalar;
pub mod weyl_affine;

pub use error::{Error, Result};
