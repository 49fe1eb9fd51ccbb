//! Scenario runner: picks a compressed instance for `(e, s, p, seed)`, runs the
//! verification suites end to end and assembles machine-readable reports.

mod report;
mod suites;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::apolarity::{build_algebra, generic_coordinate_change, sample_dual_generator, CoordinateChange, DualGenerator, GradedArtinianAlgebra};
use crate::compressed::{is_compressed, profile, CompressedProfile, CompressedReport};
use crate::error::{Error, Result};
use crate::linalg::{is_prime, DEFAULT_PRIME};
use crate::polyring::Form;

pub use report::{CheckRecord, Status, Timing, VerificationReport};
pub use suites::{
    measure_dr, run_golod_powers_suite, run_main_theorem_suite, run_map_checks, run_socle_quotient_suite, DrRoute, MapCheck,
    Measurements,
};

/// Number of consecutive seeds tried before giving up on a compressed sample.
pub const MAX_ATTEMPTS: u32 = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub e: usize,
    pub s: usize,
    pub p: u32,
    pub seed: u64,
    /// Homological truncation `N`; `None` picks the default for `e`.
    pub trunc: Option<usize>,
    /// Optional cap on the internal degrees searched by resolutions.
    pub max_degree: Option<usize>,
    /// Run the socle degree 3 case, which the main theorem excludes.
    pub allow_s3: bool,
    /// Include the Tor-map checks in the main suite.
    pub map_checks: bool,
    /// Include the socle factorization check (and use generic coordinates).
    pub socle_check: bool,
    /// Record wall-clock timings; off by default so reports are reproducible.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(e: usize, s: usize) -> Self {
        RunConfig {
            e,
            s,
            p: DEFAULT_PRIME,
            seed: 0,
            trunc: None,
            max_degree: None,
            allow_s3: false,
            map_checks: false,
            socle_check: false,
            timings: false,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn trunc(mut self, n: usize) -> Self {
        self.trunc = Some(n);
        self
    }

    /// `N = 5` for `e ≤ 3` and `N = 4` beyond.
    pub fn truncation(&self) -> usize {
        self.trunc.unwrap_or(if self.e <= 3 { 5 } else { 4 })
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) || self.p == 2 || self.p as usize <= self.s {
            return Err(Error::BadPrime {
                p: self.p,
                s: Some(self.s as u32),
            });
        }
        if self.e < 2 {
            return Err(Error::InvalidConfig(format!("need e >= 2, got {}", self.e)));
        }
        if self.s < 2 {
            return Err(Error::InvalidConfig(format!("need s >= 2, got {}", self.s)));
        }
        if self.s == 3 && !self.allow_s3 {
            return Err(Error::SocleDegreeExcluded);
        }
        Ok(())
    }

    pub fn profile(&self) -> CompressedProfile {
        profile(self.e, self.s)
    }
}

/// A compressed algebra together with the form `h` used to build `P = Q/(h)`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub config: RunConfig,
    /// Seed that produced the accepted sample.
    pub seed_used: u64,
    pub retries: u32,
    pub generator: DualGenerator,
    pub algebra: Arc<GradedArtinianAlgebra>,
    pub compressed: CompressedReport,
    /// Element of `I_t` with a nonzero coefficient on `x_1^t` when generic
    /// coordinates were requested.
    pub h: Form,
    pub coordinate_change: Option<CoordinateChange>,
}

fn first_ideal_element(r: &GradedArtinianAlgebra, t: usize) -> Option<Form> {
    r.ideal_basis(t).into_iter().next().map(|coeffs| Form {
        num_vars: r.num_vars(),
        degree: t,
        coeffs,
    })
}

/// Tries `seed, seed + 1, ...` until the sampled algebra is compressed with
/// full embedding dimension (and, with `generic_coordinates`, until the
/// chosen `h` has a nonzero `x_1^t` coefficient).
pub fn sample_instance(cfg: &RunConfig, generic_coordinates: bool) -> Result<Instance> {
    cfg.validate()?;
    let t = cfg.profile().t;
    for k in 0..MAX_ATTEMPTS {
        let seed = cfg.seed.wrapping_add(k as u64);
        let gen = sample_dual_generator(cfg.e, cfg.s, cfg.p, seed)?;
        let r = build_algebra(&gen)?;
        if r.effective_embedding_dim() != cfg.e {
            continue;
        }
        let Ok(rep) = is_compressed(&r) else { continue };
        if !rep.compressed() {
            continue;
        }
        let Some(h0) = first_ideal_element(&r, t) else { continue };
        let (gen, algebra, h, change) = if generic_coordinates {
            let (g2, sigma) = generic_coordinate_change(&gen, seed);
            let h = sigma.apply_form(&h0);
            let lead = h.coeffs[0];
            if lead == 0 {
                continue;
            }
            let f = g2.field();
            let h = h.scale(f, f.inv(lead));
            let r2 = build_algebra(&g2)?;
            (g2, r2, h, Some(sigma))
        } else {
            (gen, r, h0, None)
        };
        let compressed = is_compressed(&algebra)?;
        return Ok(Instance {
            config: cfg.clone(),
            seed_used: seed,
            retries: k,
            generator: gen,
            algebra: Arc::new(algebra),
            compressed,
            h,
            coordinate_change: change,
        });
    }
    Err(Error::GenericSamplingFailed { attempts: MAX_ATTEMPTS })
}

/// Instance built from a given dual generator rather than a random one.
pub fn instance_from_generator(cfg: &RunConfig, gen: DualGenerator) -> Result<Instance> {
    let mut cfg = cfg.clone();
    cfg.e = gen.num_vars();
    cfg.s = gen.degree();
    cfg.p = gen.field().modulus();
    cfg.validate()?;
    let r = build_algebra(&gen)?;
    let compressed = is_compressed(&r)?;
    let t = cfg.profile().t;
    let h = first_ideal_element(&r, t).ok_or_else(|| Error::InvalidConfig(format!("apolar ideal has no elements of degree {t}")))?;
    Ok(Instance {
        seed_used: cfg.seed,
        config: cfg,
        retries: 0,
        generator: gen,
        algebra: Arc::new(r),
        compressed,
        h,
        coordinate_change: None,
    })
}
