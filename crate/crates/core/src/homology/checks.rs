//! Map-level checks on a compressed algebra: vanishing of induced maps on
//! Tor and the factorization of the top power of the maximal ideal.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::apolarity::{annihilator, power_ideal, variables_ideal, GradedArtinianAlgebra};
use crate::compressed::profile;
use crate::error::{Error, Result};
use crate::linalg::{span_rank, FieldElement};
use crate::polyring::{Form, Monomial};

use super::lift::{lift_chain_map, tor_matrix};
use super::module::{GradedModule, ModuleMap};
use super::resolution::{minimal_resolution, GradedResolution};
use super::ring::Ring;

/// Ranks of `Tor_i(f, k)` for `i` in `range`, from one lift through its end.
pub fn tor_ranks(
    f: &ModuleMap,
    source: &GradedResolution,
    target: &GradedResolution,
    range: std::ops::RangeInclusive<usize>,
    seed: Option<u64>,
) -> Result<Vec<usize>> {
    let chain = lift_chain_map(f, &source.complex, &target.complex, *range.end(), seed)?;
    Ok(range
        .map(|i| tor_matrix(&chain, &source.complex, &target.complex, i).rank())
        .collect())
}

/// Resolves both ends of the map induced by the identity of the ambient
/// algebra and returns the Tor ranks over `ring`.
pub fn induced_tor_ranks(
    ring: &Arc<Ring>,
    source: &Arc<GradedModule>,
    target: &Arc<GradedModule>,
    range: std::ops::RangeInclusive<usize>,
    seed: Option<u64>,
) -> Result<Vec<usize>> {
    let f = ModuleMap::induced(source, target)
        .ok_or_else(|| Error::InvalidConfig("modules are not compatible subquotients".into()))?;
    let n = *range.end();
    let rs = minimal_resolution(ring, source, n);
    let rt = minimal_resolution(ring, target, n);
    tor_ranks(&f, &rs, &rt, range, seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolodCriterionReport {
    pub a: usize,
    /// Ranks of `Tor_i^P(R, k) → Tor_i^P(R/m^a, k)` for `i = 1..=N`.
    pub condition1_ranks: Vec<usize>,
    /// Ranks of `Tor_i^P(m^{2a}, k) → Tor_i^P(m^a, k)` for `i = 0..=N`.
    pub condition2_ranks: Vec<usize>,
}

impl GolodCriterionReport {
    pub fn condition1(&self) -> bool {
        self.condition1_ranks.iter().all(|&r| r == 0)
    }

    pub fn condition2(&self) -> bool {
        self.condition2_ranks.iter().all(|&r| r == 0)
    }
}

/// The two vanishing conditions that make `P → R` a Golod homomorphism.
pub fn golod_criterion_check(
    r: &Arc<GradedArtinianAlgebra>,
    p: &Arc<Ring>,
    a: usize,
    n: usize,
    seed: Option<u64>,
) -> Result<GolodCriterionReport> {
    let big = Arc::new(GradedModule::from_algebra(r));
    let small = Arc::new(GradedModule::quotient(r, &power_ideal(r, a)));
    let condition1_ranks = induced_tor_ranks(p, &big, &small, 1..=n, seed)?;
    let inner = Arc::new(GradedModule::ideal(r, &power_ideal(r, 2 * a)));
    let outer = Arc::new(GradedModule::ideal(r, &power_ideal(r, a)));
    let condition2_ranks = induced_tor_ranks(p, &inner, &outer, 0..=n, seed)?;
    Ok(GolodCriterionReport {
        a,
        condition1_ranks,
        condition2_ranks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleFactorizationReport {
    pub t: usize,
    pub r: usize,
    pub h_in_ideal: bool,
    /// Hilbert function of `q = ann(x_2, ..., x_e)`.
    pub q_dims: Vec<usize>,
    pub q_inside_m_r: bool,
    pub q_not_inside_m_r1: bool,
    /// `x_1^{t-1} q = m^s`.
    pub factorization: bool,
}

impl SocleFactorizationReport {
    pub fn passed(&self) -> bool {
        self.h_in_ideal && self.q_inside_m_r && self.q_not_inside_m_r1 && self.factorization
    }
}

/// Coefficient of `x_1^t` in `h`, which must be nonzero.
pub fn leading_coefficient(h: &Form) -> FieldElement {
    h.coeffs.first().copied().unwrap_or(0)
}

pub fn socle_factorization_check(r: &GradedArtinianAlgebra, h: &Form) -> Result<SocleFactorizationReport> {
    let e = r.num_vars();
    let s = r.top_degree();
    let prof = profile(r.effective_embedding_dim(), s);
    let (t, rr) = (prof.t, prof.r);
    if h.num_vars != e || h.degree != t || leading_coefficient(h) == 0 {
        return Err(Error::CoordinateForm);
    }
    let h_in_ideal = r.reduce_form(h).iter().all(|&x| x == 0);
    let q = annihilator(r, &variables_ideal(r, &(1..e).collect::<Vec<_>>()));
    let q_dims: Vec<usize> = (0..=s).map(|d| q.dim(d)).collect();
    let q_inside_m_r = q_dims[..rr].iter().all(|&d| d == 0);
    let q_not_inside_m_r1 = q_dims[rr] > 0;
    let mut x = vec![0u16; e];
    x[0] = (t - 1) as u16;
    let x = Monomial::new(x);
    let f = r.field();
    let mut low_zero = true;
    let mut top_images = Vec::new();
    for d in 0..=s {
        if d + t - 1 > s {
            break;
        }
        for v in &q.pieces[d] {
            let w = r.mul_monomial(&x, d, v);
            if d + t - 1 == s {
                top_images.push(w);
            } else if w.iter().any(|&c| c != 0) {
                low_zero = false;
            }
        }
    }
    let factorization = low_zero && span_rank(f, r.dim(s), &top_images) == r.dim(s);
    Ok(SocleFactorizationReport {
        t,
        r: rr,
        h_in_ideal,
        q_dims,
        q_inside_m_r,
        q_not_inside_m_r1,
        factorization,
    })
}
