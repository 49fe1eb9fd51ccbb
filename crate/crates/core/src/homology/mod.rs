//! Betti numbers and maps on Tor: Koszul homology over `Q`, truncated minimal
//! free resolutions over `Q`, `Q/(h)` and finite-dimensional quotients, and
//! chain-map lifts.

pub mod checks;
pub mod free;
pub mod koszul;
pub mod lift;
pub mod module;
pub mod resolution;
pub mod ring;

pub use checks::{
    golod_criterion_check, induced_tor_ranks, socle_factorization_check, tor_ranks, GolodCriterionReport,
    SocleFactorizationReport,
};
pub use free::{FreeComplex, FreeModule};
pub use koszul::koszul_betti;
pub use lift::{lift_chain_map, tor_base_change_map, tor_induced_map, tor_matrix, ChainMap};
pub use module::{GradedModule, ModuleMap};
pub use resolution::{
    minimal_resolution, minimal_resolution_with, poincare_truncated, resolution_audit, BettiDocument, BettiTable,
    GradedResolution, ResolutionOptions,
};
pub use ring::{Ring, RingKind};
