//! Certificate-producing calculus for splitting a degree-`abmn` topological
//! Azumaya algebra over a low-dimensional CW complex into a tensor product
//! of degree-`am` and degree-`bn` algebras.
//!
//! The crate builds the splitting homomorphism data exactly (Bézout witness,
//! connectivity matrices, the `Tr` composite) and checks every identity that
//! can be checked at desk scale: integer identities exactly, group-level
//! statements through Smith normal form, and matrix-level statements
//! numerically on concrete unitaries.

pub mod arith;
pub mod engine;
pub mod error;
pub mod fgab;
pub mod homotopy;
pub mod induced;
pub mod matrix;
pub mod par;
pub mod verify;
mod serde_big;

pub use error::{Error, Result};
