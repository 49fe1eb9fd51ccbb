//! Compressedness: the bound `ε_i`, the parameters `(t, r)`, the three
//! equivalent tests and their consequences.

use serde::{Deserialize, Serialize};

use crate::apolarity::{annihilator, power_ideal, socle, GradedArtinianAlgebra};
use crate::error::{Error, Result};
use crate::polyring::binomial;

/// `ε_i = min(C(e-1+s-i, e-1), C(e-1+i, e-1))` for `0 ≤ i ≤ s`.
pub fn eps(e: usize, s: usize) -> Vec<usize> {
    assert!(e >= 1, "embedding dimension must be positive");
    (0..=s)
        .map(|i| binomial(e - 1 + s - i, e - 1).min(binomial(e - 1 + i, e - 1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressedProfile {
    pub e: usize,
    pub s: usize,
    pub t: usize,
    pub r: usize,
    pub eps: Vec<usize>,
    pub lambda_max: usize,
    /// `2 ≤ 2t-2 ≤ s ≤ 3t-4`.
    pub inequality_holds: bool,
    /// `s ≥ 2`, `s ≠ 3`, `e > 1`.
    pub in_main_theorem: bool,
}

pub fn profile(e: usize, s: usize) -> CompressedProfile {
    let t = (s + 2) / 2;
    let r = s + 1 - t;
    let eps = eps(e, s);
    let lambda_max = eps.iter().sum();
    let inequality_holds = 2 <= 2 * t - 2 && 2 * t - 2 <= s && s + 4 <= 3 * t;
    CompressedProfile {
        e,
        s,
        t,
        r,
        eps,
        lambda_max,
        inequality_holds,
        in_main_theorem: s >= 2 && s != 3 && e > 1,
    }
}

/// Outcome of the three tests of compressedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressedReport {
    pub declared_e: usize,
    pub effective_e: usize,
    pub s: usize,
    pub hilbert_function: Vec<usize>,
    pub eps: Vec<usize>,
    pub length: usize,
    pub lambda_max: usize,
    pub v: usize,
    pub length_route: bool,
    pub hilbert_route: bool,
    pub annihilator_route: bool,
}

impl CompressedReport {
    pub fn compressed(&self) -> bool {
        self.length_route
    }
}

/// Rank of the socle of `R`.
pub fn socle_rank(r: &GradedArtinianAlgebra) -> usize {
    socle(r).total_dim()
}

/// `v(R)`: the initial degree of the defining ideal in the minimal
/// presentation, i.e. the least `d ≥ 1` where `h_R(d)` falls short of the
/// number of monomials in `h_R(1)` variables. Returns `s + 1` when none does.
pub fn order_of_ideal(r: &GradedArtinianAlgebra) -> usize {
    let h = r.hilbert_function();
    let e = r.effective_embedding_dim();
    (1..h.len())
        .find(|&d| h[d] < binomial(e.max(1) - 1 + d, e.max(1) - 1))
        .unwrap_or(h.len())
}

/// Runs the length, Hilbert function and annihilator tests against the
/// effective embedding dimension; panics if they disagree.
pub fn is_compressed(r: &GradedArtinianAlgebra) -> Result<CompressedReport> {
    let socle_rank = socle_rank(r);
    if socle_rank != 1 {
        return Err(Error::NotGorenstein { socle_rank });
    }
    let e = r.effective_embedding_dim();
    if e < 2 {
        return Err(Error::InvalidConfig(format!("effective embedding dimension {e} is below 2")));
    }
    let s = r.top_degree();
    let prof = profile(e, s);
    let h = r.hilbert_function();
    let length = r.length();
    let v = order_of_ideal(r);
    let length_route = length == prof.lambda_max;
    let hilbert_route = h == prof.eps;
    let annihilator_route =
        v >= prof.t && annihilator(r, &power_ideal(r, prof.t)).equals(r, &power_ideal(r, s + 1 - prof.t));
    assert!(
        length_route == hilbert_route && hilbert_route == annihilator_route,
        "compressedness tests disagree: length {length_route}, hilbert {hilbert_route}, annihilator {annihilator_route}"
    );
    Ok(CompressedReport {
        declared_e: r.num_vars(),
        effective_e: e,
        s,
        hilbert_function: h,
        eps: prof.eps,
        length,
        lambda_max: prof.lambda_max,
        v,
        length_route,
        hilbert_route,
        annihilator_route,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsequencesReport {
    pub v: usize,
    pub t: usize,
    pub v_equals_t: bool,
    /// Degrees `i` in `0..=s+1` where `ann(m^i) ≠ m^{s+1-i}`.
    pub annihilator_failures: Vec<usize>,
    pub gorenstein: bool,
}

impl ConsequencesReport {
    pub fn passed(&self) -> bool {
        self.v_equals_t && self.annihilator_failures.is_empty() && self.gorenstein
    }
}

pub fn consequences_check(r: &GradedArtinianAlgebra) -> ConsequencesReport {
    let s = r.top_degree();
    let prof = profile(r.effective_embedding_dim(), s);
    let v = order_of_ideal(r);
    let annihilator_failures = (0..=s + 1)
        .filter(|&i| !annihilator(r, &power_ideal(r, i)).equals(r, &power_ideal(r, s + 1 - i)))
        .collect();
    ConsequencesReport {
        v,
        t: prof.t,
        v_equals_t: v == prof.t,
        annihilator_failures,
        gorenstein: socle_rank(r) == 1,
    }
}
