use std::sync::Arc;

use serde_json::{json, Value};

use crate::apolarity::{power_ideal, quotient_algebra, socle};
use crate::compressed::consequences_check;
use crate::error::{Error, Result};
use crate::homology::{
    golod_criterion_check, induced_tor_ranks, koszul_betti, minimal_resolution_with, socle_factorization_check,
    tor_base_change_map, BettiTable, GradedModule, GradedResolution, ResolutionOptions, Ring,
};
use crate::series::{
    change_of_rings_pop, dr_even_closed_form, dr_from_poqr, golod_poincare, golod_quotient_formula, poqr_even_closed_form,
    series_identity_check, socle_golod_residue_series, socle_quotient_poq, IntegerPolynomial, TruncatedIntegerSeries,
};

use super::report::{ReportBuilder, Status, VerificationReport};
use super::{sample_instance, Instance, RunConfig};

fn poly_of(table: &BettiTable) -> IntegerPolynomial {
    IntegerPolynomial::new(table.totals().into_iter().map(|b| b as i128).collect())
}

fn verdict(ok: bool, complete: bool) -> Status {
    if !complete {
        Status::Inconclusive
    } else {
        Status::from_bool(ok)
    }
}

/// Rings and modules attached to one instance.
pub struct Measurements {
    pub instance: Instance,
    pub q: Arc<Ring>,
    pub p: Arc<Ring>,
    pub r: Arc<Ring>,
    pub module_r: Arc<GradedModule>,
    pub module_k: Arc<GradedModule>,
    options: ResolutionOptions,
}

impl Measurements {
    pub fn new(instance: Instance) -> Self {
        let f = instance.algebra.field();
        let e = instance.algebra.num_vars();
        let module_r = Arc::new(GradedModule::from_algebra(&instance.algebra));
        let options = ResolutionOptions {
            max_degree: instance.config.max_degree,
        };
        Measurements {
            q: Ring::polynomial(f, e),
            p: Ring::hypersurface(f, instance.h.clone()),
            r: Ring::artinian(instance.algebra.clone()),
            module_r,
            module_k: Arc::new(GradedModule::residue_field(f, e)),
            options,
            instance,
        }
    }

    pub fn e(&self) -> usize {
        self.instance.algebra.num_vars()
    }

    pub fn resolve(&self, ring: &Arc<Ring>, module: &Arc<GradedModule>, n: usize) -> GradedResolution {
        minimal_resolution_with(ring, module, n, self.options)
    }

    pub fn power(&self, i: usize) -> Arc<GradedModule> {
        Arc::new(GradedModule::ideal(&self.instance.algebra, &power_ideal(&self.instance.algebra, i)))
    }

    pub fn truncation(&self, i: usize) -> Arc<GradedModule> {
        Arc::new(GradedModule::quotient(&self.instance.algebra, &power_ideal(&self.instance.algebra, i)))
    }

    pub fn socle_quotient(&self) -> Arc<GradedModule> {
        Arc::new(GradedModule::quotient(&self.instance.algebra, &socle(&self.instance.algebra)))
    }

    /// `Po^Q_R` from Koszul homology.
    pub fn poqr(&self) -> IntegerPolynomial {
        poly_of(&koszul_betti(&self.module_r))
    }

    /// `rank Soc(m^r)`.
    pub fn socle_rank_of_m_r(&self) -> usize {
        let r = self.instance.config.profile().r;
        self.power(r).socle_dims().iter().sum()
    }
}

/// The three ways of computing `d_R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DrRoute {
    /// From the measured Betti numbers over `Q` and `a = rank Soc(m^r)`.
    Measured,
    /// The closed form in `e` and `s` (even `s` only).
    ClosedForm,
    /// Betti numbers over `Q` from the even-socle closed form, then as in `Measured`.
    BettiClosedForm,
}

pub fn measure_dr(inst: &Instance, route: DrRoute) -> Result<IntegerPolynomial> {
    let (e, s) = (inst.config.e, inst.config.s);
    match route {
        DrRoute::Measured => {
            let m = Measurements::new(inst.clone());
            Ok(dr_from_poqr(&m.poqr(), e, m.socle_rank_of_m_r() as i128))
        }
        DrRoute::ClosedForm => dr_even_closed_form(e, s),
        DrRoute::BettiClosedForm => Ok(dr_from_poqr(&poqr_even_closed_form(e, s)?, e, 1)),
    }
}

fn series_json(s: &TruncatedIntegerSeries) -> Value {
    json!({ "coefficients": s.coeffs, "order": s.order })
}

fn table_json(t: &BettiTable) -> Value {
    json!({ "totals": t.totals(), "graded": t.steps })
}

pub fn run_main_theorem_suite(cfg: &RunConfig) -> Result<VerificationReport> {
    let inst = sample_instance(cfg, cfg.socle_check)?;
    let n = cfg.truncation();
    let mut rep = ReportBuilder::new("main", &inst, n);
    let m = Measurements::new(inst);
    let (e, s) = (cfg.e, cfg.s);
    let r_alg = m.instance.algebra.clone();

    let c = m.instance.compressed.clone();
    rep.check("compressed", "equivalent characterizations of compressed Gorenstein algebras", true, || {
        let ok = c.length_route && c.hilbert_route && c.annihilator_route;
        Ok((Status::from_bool(ok), serde_json::to_value(&c).unwrap()))
    });
    rep.check("consequences", "order of the ideal, annihilator chain and Gorenstein property of compressed algebras", true, || {
        let cr = consequences_check(&r_alg);
        Ok((Status::from_bool(cr.passed()), serde_json::to_value(&cr).unwrap()))
    });

    let koszul = koszul_betti(&m.module_r);
    let res_q = m.resolve(&m.q, &m.module_r, e + 1);
    rep.check("betti_q_oracle", "Betti numbers over the polynomial ring via Koszul homology", true, || {
        let engine = res_q.betti_table();
        let ok = engine.same_betti(&koszul) && res_q.check_structure();
        Ok((verdict(ok, res_q.is_complete()), json!({ "koszul": table_json(&koszul), "engine": table_json(&engine) })))
    });
    rep.check("self_duality", "self-dual minimal resolution of a Gorenstein algebra over Q", true, || {
        let mut ok = koszul.length() == e + 1;
        for i in 0..=e {
            for &(j, b) in &koszul.steps[i] {
                ok &= j <= e + s && koszul.beta(e - i, e + s - j) == b;
            }
        }
        Ok((Status::from_bool(ok), table_json(&koszul)))
    });

    let poqr = poly_of(&koszul);
    let a = m.socle_rank_of_m_r();
    let dr = dr_from_poqr(&poqr, e, a as i128);
    rep.check("dr_measured", "denominator from the Betti numbers over Q and the socle rank of m^r", true, || {
        Ok((Status::from_bool(a == 1 && dr.degree() == Some(e + 2)), json!({ "poqr": poqr, "a": a, "dr": dr })))
    });
    if s % 2 == 0 {
        rep.check("dr_closed_form", "denominator depending only on e and s for even socle degree", true, || {
            let closed = dr_even_closed_form(e, s)?;
            Ok((Status::from_bool(closed == dr), json!({ "closed_form": closed, "measured": dr })))
        });
        rep.check("betti_closed_form", "graded Betti numbers over Q of a compressed algebra of even socle degree", true, || {
            let closed = poqr_even_closed_form(e, s)?;
            let via = dr_from_poqr(&closed, e, 1);
            Ok((Status::from_bool(closed == poqr && via == dr), json!({ "closed_form": closed, "measured": poqr, "dr": via })))
        });
    } else {
        rep.check("dr_closed_form_refuses_odd", "the closed form in e and s requires an even socle degree", true, || {
            let refused = matches!(dr_even_closed_form(e, s), Err(Error::OddSocle(_)));
            Ok((Status::from_bool(refused), json!({ "refused": refused })))
        });
    }

    let res_k = m.resolve(&m.r, &m.module_k, n);
    let pork = res_k.poincare_series();
    let k_complete = res_k.is_complete();
    rep.check("residue_field_resolution", "minimal resolution of the residue field over R", true, || {
        let ok = res_k.check_structure() && crate::homology::resolution_audit(&res_k);
        Ok((verdict(ok, k_complete), json!({ "series": series_json(&pork), "graded": res_k.betti_table().steps })))
    });
    rep.check("denominator_identity", "Po^R_k(z) d_R(z) = (1+z)^e", true, || {
        let lhs = pork.mul(&dr.to_series(n));
        let rhs = IntegerPolynomial::one_plus_z_pow(e).to_series(n);
        Ok((verdict(series_identity_check(&lhs, &rhs), k_complete), json!({ "product": series_json(&lhs), "expected": series_json(&rhs) })))
    });
    rep.check("golod_bound", "Serre upper bound by the Golod series", true, || {
        let bound = golod_poincare(e, &poqr, n);
        Ok((verdict(pork.bounded_by(&bound), k_complete), json!({ "measured": series_json(&pork), "bound": series_json(&bound) })))
    });

    let res_pr = m.resolve(&m.p, &m.module_r, n);
    let popr = res_pr.poincare_series();
    let res_pk = m.resolve(&m.p, &m.module_k, n);
    let popk = res_pk.poincare_series();
    let p_complete = res_pr.is_complete() && res_pk.is_complete();
    rep.check("change_of_rings", "change of rings from Q to the hypersurface P for the module R", true, || {
        let mut ker = vec![0i128; n + 1];
        ker[1] += 1;
        if e <= n {
            ker[e] += a as i128;
        }
        let predicted = change_of_rings_pop(&poqr.to_series(n), &TruncatedIntegerSeries::from_coeffs(ker));
        let ok = series_identity_check(&predicted, &popr) && res_pr.check_structure();
        Ok((verdict(ok, res_pr.is_complete()), json!({ "measured": series_json(&popr), "predicted": series_json(&predicted) })))
    });
    rep.check("hypersurface_residue_field", "residue field over a hypersurface", true, || {
        let predicted = IntegerPolynomial::one_plus_z_pow(e)
            .to_series(n)
            .div(&IntegerPolynomial::new(vec![1, 0, -1]).to_series(n))
            .unwrap();
        let ok = series_identity_check(&predicted, &popk);
        Ok((verdict(ok, res_pk.is_complete()), json!({ "measured": series_json(&popk), "predicted": series_json(&predicted) })))
    });
    rep.check("golod_homomorphism_formula", "Poincare series of k over R through the Golod homomorphism P to R", true, || {
        let predicted = golod_quotient_formula(&popk, &popr);
        let ok = series_identity_check(&predicted, &pork);
        Ok((verdict(ok, p_complete && k_complete), json!({ "predicted": series_json(&predicted), "measured": series_json(&pork) })))
    });

    if cfg.map_checks {
        map_checks_into(&mut rep, &m, &MapCheck::ALL, n)?;
    }
    if cfg.socle_check {
        socle_check_into(&mut rep, &m);
    }
    Ok(rep.finish())
}

/// Tor-map checks of the `maps` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapCheck {
    Nu,
    Phi,
    Rho,
    GolodCriterion,
}

impl MapCheck {
    pub const ALL: [MapCheck; 4] = [MapCheck::Nu, MapCheck::Phi, MapCheck::Rho, MapCheck::GolodCriterion];
}

fn map_checks_into(rep: &mut ReportBuilder, m: &Measurements, checks: &[MapCheck], n: usize) -> Result<()> {
    let e = m.e();
    let prof = m.instance.config.profile();
    let (t, r) = (prof.t, prof.r);
    let seed = Some(m.instance.seed_used);
    for &check in checks {
        match check {
            MapCheck::Nu => {
                rep.check("nu_m_r", "inclusion m^{r+1} into m^r on Tor over Q: zero below e, bijective at e", true, || {
                    let small = m.power(r + 1);
                    let big = m.power(r);
                    let ranks = induced_tor_ranks(&m.q, &small, &big, 0..=e, None)?;
                    let again = induced_tor_ranks(&m.q, &small, &big, 0..=e, seed)?;
                    let src = koszul_betti(&small).totals();
                    let tgt = koszul_betti(&big).totals();
                    let ok = ranks[..e].iter().all(|&x| x == 0) && ranks[e] == src[e] && ranks[e] == tgt[e] && ranks == again;
                    Ok((Status::from_bool(ok), json!({ "ranks": ranks, "source_betti": src, "target_betti": tgt })))
                });
            }
            MapCheck::Phi => {
                rep.check("phi_m_r", "base change from Q to P is zero on Tor_e of m^r", true, || {
                    let mr = m.power(r);
                    let rq = m.resolve(&m.q, &mr, e);
                    let rp = m.resolve(&m.p, &mr, e);
                    let phi = tor_base_change_map(&rq, &rp, e, None)?;
                    let again = tor_base_change_map(&rq, &rp, e, seed)?;
                    let ok = phi.rank() == 0 && again.rank() == 0;
                    Ok((verdict(ok, rp.is_complete()), json!({ "rank": phi.rank(), "shape": [phi.rows(), phi.cols()] })))
                });
                rep.check("phi_r", "base change from Q to P on Tor of R: kernel of rank one in degree 1, injective in between, zero at e", true, || {
                    let rq = m.resolve(&m.q, &m.module_r, e);
                    let rp = m.resolve(&m.p, &m.module_r, e);
                    let mut ranks = Vec::new();
                    let mut dims = Vec::new();
                    for i in 1..=e {
                        let phi = tor_base_change_map(&rq, &rp, i, seed)?;
                        ranks.push(phi.rank());
                        dims.push(phi.cols());
                    }
                    let mut ok = dims[0] - ranks[0] == 1 && ranks[e - 1] == 0;
                    for i in 1..e - 1 {
                        ok &= ranks[i] == dims[i];
                    }
                    Ok((verdict(ok, rp.is_complete()), json!({ "degrees": (1..=e).collect::<Vec<_>>(), "ranks": ranks, "source_dims": dims })))
                });
            }
            MapCheck::Rho => {
                rep.check("rho_p", "projection R/m^t to R/m^{t-1} is zero on Tor over P in positive degrees", true, || {
                    let ranks = induced_tor_ranks(&m.p, &m.truncation(t), &m.truncation(t - 1), 1..=n, seed)?;
                    Ok((Status::from_bool(ranks.iter().all(|&x| x == 0)), json!({ "ranks": ranks })))
                });
                rep.check("rho_q", "projection R/m^t to R/m^{t-1} is zero on Tor over Q in positive degrees", true, || {
                    let ranks = induced_tor_ranks(&m.q, &m.truncation(t), &m.truncation(t - 1), 1..=e, seed)?;
                    Ok((Status::from_bool(ranks.iter().all(|&x| x == 0)), json!({ "ranks": ranks })))
                });
            }
            MapCheck::GolodCriterion => {
                rep.check("golod_criterion", "vanishing conditions making P to R a Golod homomorphism, with a = t-1", true, || {
                    let g = golod_criterion_check(&m.instance.algebra, &m.p, t - 1, n, seed)?;
                    Ok((Status::from_bool(g.condition1() && g.condition2()), serde_json::to_value(&g).unwrap()))
                });
            }
        }
    }
    Ok(())
}

fn socle_check_into(rep: &mut ReportBuilder, m: &Measurements) {
    rep.check("socle_factorization", "m^s = x_1^{t-1} ann(x_2, ..., x_e) in generic coordinates", true, || {
        let f = socle_factorization_check(&m.instance.algebra, &m.instance.h)?;
        Ok((Status::from_bool(f.passed()), serde_json::to_value(&f).unwrap()))
    });
}

/// The `maps` command: selected Tor-map checks on one instance.
pub fn run_map_checks(cfg: &RunConfig, checks: &[MapCheck], socle: bool) -> Result<VerificationReport> {
    let inst = sample_instance(cfg, socle || cfg.socle_check)?;
    let n = cfg.truncation();
    let mut rep = ReportBuilder::new("maps", &inst, n);
    let m = Measurements::new(inst);
    map_checks_into(&mut rep, &m, checks, n)?;
    if socle || cfg.socle_check {
        socle_check_into(&mut rep, &m);
    }
    Ok(rep.finish())
}

pub fn run_golod_powers_suite(cfg: &RunConfig) -> Result<VerificationReport> {
    let inst = sample_instance(cfg, false)?;
    let n = cfg.truncation();
    let mut rep = ReportBuilder::new("golod-powers", &inst, n);
    let r = inst.algebra.clone();
    let e = cfg.e;
    let options = ResolutionOptions { max_degree: cfg.max_degree };
    for i in 2..=cfg.s {
        rep.check(&format!("golod_power_{i}"), "R/m^i is a Golod ring for 2 <= i <= s", true, || {
            let a = Arc::new(quotient_algebra(&r, &power_ideal(&r, i))?);
            let poq = poly_of(&koszul_betti(&GradedModule::from_algebra(&a)));
            let ring = Ring::artinian(a.clone());
            let k = Arc::new(GradedModule::residue_field(r.field(), e));
            let res = minimal_resolution_with(&ring, &k, n, options);
            let measured = res.poincare_series();
            let golod = golod_poincare(e, &poq, n);
            let ok = series_identity_check(&measured, &golod);
            Ok((verdict(ok, res.is_complete()), json!({ "poq": poq, "measured": series_json(&measured), "golod": series_json(&golod) })))
        });
    }
    Ok(rep.finish())
}

pub fn run_socle_quotient_suite(cfg: &RunConfig) -> Result<VerificationReport> {
    let inst = sample_instance(cfg, false)?;
    let n = cfg.truncation();
    let mut rep = ReportBuilder::new("socle", &inst, n);
    let m = Measurements::new(inst);
    let e = cfg.e;
    let poqr = m.poqr();
    let soc_alg = Arc::new(quotient_algebra(&m.instance.algebra, &socle(&m.instance.algebra))?);
    let poq_soc = poly_of(&koszul_betti(&GradedModule::from_algebra(&soc_alg)));
    rep.check("socle_quotient_betti", "Betti numbers over Q of R/Soc(R) from those of R", true, || {
        let predicted = socle_quotient_poq(&poqr, e);
        Ok((Status::from_bool(predicted == poq_soc), json!({ "measured": poq_soc, "predicted": predicted, "poqr": poqr })))
    });
    rep.check("socle_quotient_golod", "R/Soc(R) is a Golod ring", true, || {
        let ring = Ring::artinian(soc_alg.clone());
        let res = m.resolve(&ring, &m.module_k, n);
        let measured = res.poincare_series();
        let golod = golod_poincare(e, &poq_soc, n);
        let ok = series_identity_check(&measured, &golod);
        Ok((verdict(ok, res.is_complete()), json!({ "measured": series_json(&measured), "golod": series_json(&golod) })))
    });
    rep.check("residue_field_via_socle_quotient", "Poincare series of k over R from the Golod socle quotient", true, || {
        let res = m.resolve(&m.r, &m.module_k, n);
        let measured = res.poincare_series();
        let predicted = socle_golod_residue_series(e, &poqr, n);
        let ok = series_identity_check(&measured, &predicted);
        Ok((verdict(ok, res.is_complete()), json!({ "measured": series_json(&measured), "predicted": series_json(&predicted) })))
    });
    Ok(rep.finish())
}
