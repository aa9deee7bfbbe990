//! Braid group homomorphisms, their images in symplectic groups, and the
//! finite combinatorics used to rule out exotic targets.
//!
//! Exact arithmetic everywhere: integer matrices and classes are `BigInt`,
//! rational quantities are `BigRational`.

pub mod braid;
pub mod error;
pub mod finite;
pub mod graph;
pub mod hom;
pub mod homology;
pub mod matrix;
pub mod oracle;
pub mod periodic;
pub mod suite;
pub mod text;

pub use error::{Error, Result};
