//! Exact computations with compressed Gorenstein Artinian algebras over prime
//! fields: apolar ideals of dual generators, Hilbert functions, minimal graded
//! free resolutions over polynomial, hypersurface and Artinian rings, induced
//! maps on Tor, and the closed-form Poincare series identities they satisfy.

pub mod apolarity;
pub mod compressed;
pub mod error;
pub mod harness;
pub mod homology;
pub mod linalg;
pub mod polyring;
pub mod series;

pub use error::{Error, Result};
