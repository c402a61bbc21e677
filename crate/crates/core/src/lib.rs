//! Flip graphs of convex polygon triangulations (associahedron graphs), their extreme
//! adjacency eigenvalues, pentagon and hexagon censuses, and eigenvalue bounds derived
//! from collections of regular subgraphs.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, JSON reports and the
//! command line live in the companion `assoc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod census;
pub mod error;
pub mod flipgraph;
pub mod graph;
pub mod iso;
pub mod linalg;
pub mod reference;
pub mod spectra;
pub mod triangulation;
pub mod walk;

pub use error::{Error, Result};
pub use flipgraph::{build_associahedron, diagonal_slice, Associahedron};
pub use graph::Graph;
pub use triangulation::{crosses, enumerate_triangulations, Diagonal, DualTree, Triangulation};

/// Size limits guarding the exponential and cubic-cost routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest polygon size for enumeration and flip-graph construction.
    pub max_n: usize,
    /// Largest graph accepted by the isomorphism checker.
    pub iso_vertices: usize,
    /// Largest graph accepted by the dense eigensolver.
    pub dense_vertices: usize,
    /// Largest graph accepted by brute-force cycle and subgraph searches.
    pub oracle_vertices: usize,
    /// Largest box product that will be materialised.
    pub product_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 14,
            iso_vertices: 5000,
            dense_vertices: 5000,
            oracle_vertices: 20_000,
            product_vertices: 1 << 22,
        }
    }
}
