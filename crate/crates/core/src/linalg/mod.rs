//! Dense and Krylov eigensolvers for real symmetric matrices.

pub mod dense;
pub mod lanczos;

pub use dense::{symmetric_eigen, tridiagonal_eigen, SymmetricEigen};
pub use lanczos::{largest_eigenpair, LanczosOptions, RitzPair};
