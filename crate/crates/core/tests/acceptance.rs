//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use gorenstein::apolarity::{build_algebra, sample_dual_generator};
use gorenstein::compressed::{eps, is_compressed, profile};
use gorenstein::harness::*;
use gorenstein::homology::{koszul_betti, minimal_resolution, GradedModule, Ring};
use gorenstein::linalg::DEFAULT_PRIME;
use gorenstein::series::{dr_even_closed_form, dr_from_poqr, golod_poincare, poqr_even_closed_form, IntegerPolynomial};
use gorenstein::Error;

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn poly(c: &[i64]) -> IntegerPolynomial {
    IntegerPolynomial::from_i64(c)
}

/// Measured `Po^Q_R`, `d_R` via the measured route, and `β^R(k)` through `n`.
fn measure(cfg: &RunConfig, n: usize) -> Result<(Instance, IntegerPolynomial, IntegerPolynomial, Vec<i128>), String> {
    let inst = sample_instance(cfg, false).map_err(|e| e.to_string())?;
    let m = Measurements::new(inst.clone());
    let poqr = m.poqr();
    let dr = measure_dr(&inst, DrRoute::Measured).map_err(|e| e.to_string())?;
    let res = minimal_resolution(&m.r, &m.module_k, n);
    ensure(res.is_complete() && res.check_structure(), "residue field resolution is not certified")?;
    Ok((inst, poqr, dr, res.poincare_series().coeffs))
}

fn identity_holds(pork: &[i128], dr: &IntegerPolynomial, e: usize, n: usize) -> bool {
    let lhs = gorenstein::series::TruncatedIntegerSeries::from_coeffs(pork[..=n].to_vec()).mul(&dr.to_series(n));
    lhs.coeffs == IntegerPolynomial::one_plus_z_pow(e).to_series(n).coeffs
}

fn all_routes(inst: &Instance) -> bool {
    let c = &inst.compressed;
    c.length_route && c.hilbert_route && c.annihilator_route
}

fn criterion_1() -> Outcome {
    let (inst, poqr, dr, pork) = measure(&RunConfig::new(2, 4).seed(1), 8)?;
    ensure(all_routes(&inst), "not compressed on all three routes")?;
    ensure(poqr == poly(&[1, 2, 1]), format!("Po^Q_R = {poqr}"))?;
    let target = poly(&[1, 0, -2, 0, 1]);
    ensure(dr == target, format!("d_R via measured route = {dr}"))?;
    let t2 = dr_even_closed_form(2, 4).map_err(|e| e.to_string())?;
    ensure(t2 == target, format!("d_R closed form = {t2}"))?;
    ensure(pork == (1..=9).collect::<Vec<i128>>(), format!("beta^R(k) = {pork:?}"))?;
    ensure(identity_holds(&pork, &dr, 2, 8), "Po d != (1+z)^2 mod z^9")?;
    Ok(format!("d_R = {dr}, beta^R(k) = {pork:?}"))
}

fn criterion_2() -> Outcome {
    let (inst, poqr, dr, pork) = measure(&RunConfig::new(3, 4).seed(1), 5)?;
    ensure(inst.compressed.hilbert_function == vec![1, 3, 6, 3, 1], "Hilbert function")?;
    ensure(inst.compressed.length == 14, "length")?;
    let m = GradedModule::from_algebra(&inst.algebra);
    let kt = koszul_betti(&m);
    ensure(kt.steps == vec![vec![(0, 1)], vec![(3, 7)], vec![(4, 7)], vec![(7, 1)]], format!("graded Betti over Q {:?}", kt.steps))?;
    let target = poly(&[1, 0, -7, -7, 0, 1]);
    ensure(poqr == poly(&[1, 7, 7, 1]), format!("Po^Q_R = {poqr}"))?;
    ensure(dr == target, format!("measured route {dr}"))?;
    ensure(dr_even_closed_form(3, 4).map_err(|e| e.to_string())? == target, "closed form in e, s")?;
    ensure(dr_from_poqr(&poqr_even_closed_form(3, 4).map_err(|e| e.to_string())?, 3, 1) == target, "Betti closed form route")?;
    ensure(pork == vec![1, 3, 10, 29, 91, 272], format!("beta^R(k) = {pork:?}"))?;
    ensure(identity_holds(&pork, &dr, 3, 5), "Po d != (1+z)^3 mod z^6")?;
    Ok(format!("d_R = {dr}, beta^R(k) = {pork:?}"))
}

fn criterion_3() -> Outcome {
    let (inst, poqr, dr, pork) = measure(&RunConfig::new(2, 5).seed(1), 6)?;
    ensure(all_routes(&inst), "not compressed")?;
    ensure(inst.compressed.hilbert_function == vec![1, 2, 3, 3, 2, 1], "Hilbert function")?;
    ensure(poqr == poly(&[1, 2, 1]), format!("Po^Q_R = {poqr}"))?;
    ensure(dr == poly(&[1, 0, -2, 0, 1]), format!("d_R = {dr}"))?;
    ensure(identity_holds(&pork, &dr, 2, 6), "identity to order 6")?;
    ensure(dr_even_closed_form(2, 5) == Err(Error::OddSocle(5)), "closed form did not refuse odd s")?;
    Ok(format!("d_R = {dr}, closed form refuses s = 5"))
}

fn criterion_4() -> Outcome {
    ensure(eps(4, 4) == vec![1, 4, 10, 4, 1], "eps")?;
    ensure(profile(4, 4).lambda_max == 20, "lambda")?;
    let (inst, _poqr, dr, pork) = measure(&RunConfig::new(4, 4).seed(1), 4)?;
    ensure(inst.compressed.length == 20 && all_routes(&inst), "instance not compressed of length 20")?;
    ensure(dr.degree() == Some(6), format!("deg d_R = {:?}", dr.degree()))?;
    ensure(dr_even_closed_form(4, 4).map_err(|e| e.to_string())? == dr, "measured and closed-form d_R differ")?;
    ensure(identity_holds(&pork, &dr, 4, 4), "identity mod z^5")?;
    Ok(format!("d_R = {dr}, beta^R(k) = {pork:?}"))
}

fn require_pass(rep: &VerificationReport, names: &[&str]) -> Result<(), String> {
    for n in names {
        match rep.check(n) {
            Some(c) if c.status == Status::Pass => {}
            Some(c) => return Err(format!("{n}: {:?} {}", c.status, c.witness)),
            None => return Err(format!("{n}: missing")),
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let cfg = RunConfig::new(3, 4).seed(1).trunc(3);
    let rep = run_map_checks(&cfg, &MapCheck::ALL, false).map_err(|e| e.to_string())?;
    require_pass(&rep, &["nu_m_r", "phi_m_r", "phi_r", "rho_p", "rho_q", "golod_criterion"])?;
    let nu = &rep.check("nu_m_r").unwrap().witness["ranks"];
    let phi = &rep.check("phi_r").unwrap().witness["ranks"];
    Ok(format!("nu ranks {nu}, phi_R ranks {phi}"))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for (e, s) in [(3, 4), (2, 5)] {
        let start = Instant::now();
        let rep = run_golod_powers_suite(&RunConfig::new(e, s).seed(1).trunc(6)).map_err(|e| e.to_string())?;
        let names: Vec<String> = (2..=s).map(|i| format!("golod_power_{i}")).collect();
        require_pass(&rep, &names.iter().map(String::as_str).collect::<Vec<_>>())?;
        ensure(start.elapsed() < Duration::from_secs(300), format!("({e},{s}) exceeded 5 min"))?;
        notes.push(format!("({e},{s}) i=2..{s}"));
    }
    Ok(notes.join(", "))
}

fn criterion_7() -> Outcome {
    let rep = run_socle_quotient_suite(&RunConfig::new(3, 4).seed(1).trunc(5)).map_err(|e| e.to_string())?;
    require_pass(&rep, &["socle_quotient_betti", "socle_quotient_golod", "residue_field_via_socle_quotient"])?;
    let w = &rep.check("socle_quotient_betti").unwrap().witness["measured"];
    ensure(*w == serde_json::json!([1, 8, 10, 3]), format!("Po^Q_(R/Soc) = {w}"))?;
    Ok(format!("Po^Q_(R/Soc) coefficients {w}"))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for (e, s) in [(2, 4), (2, 5), (2, 6), (3, 4), (3, 6)] {
        for seed in 0..20u64 {
            let gen = sample_dual_generator(e, s, DEFAULT_PRIME, 1000 + seed).map_err(|e| e.to_string())?;
            let r = Arc::new(build_algebra(&gen).map_err(|e| e.to_string())?);
            let tag = format!("({e},{s}) seed {seed}");
            let eff = r.effective_embedding_dim();
            let lambda_max = profile(eff, s).lambda_max;
            ensure(r.length() <= lambda_max, format!("{tag}: length bound"))?;
            if eff >= 2 {
                let rep = catch_unwind(AssertUnwindSafe(|| is_compressed(&r))).map_err(|_| format!("{tag}: routes disagree"))?;
                let rep = rep.map_err(|e| format!("{tag}: {e}"))?;
                ensure((r.length() == lambda_max) == rep.compressed(), format!("{tag}: equality vs compressed"))?;
            }
            let m = Arc::new(GradedModule::from_algebra(&r));
            let kt = koszul_betti(&m);
            let q = Ring::polynomial(r.field(), e);
            let res_q = minimal_resolution(&q, &m, e + 1);
            ensure(res_q.betti_table().same_betti(&kt), format!("{tag}: Koszul and engine disagree"))?;
            for i in 0..=e {
                for &(j, b) in &kt.steps[i] {
                    ensure(j <= e + s && kt.beta(e - i, e + s - j) == b, format!("{tag}: duality at ({i},{j})"))?;
                }
            }
            let n = if e == 2 { 6 } else { 4 };
            let ring = Ring::artinian(r.clone());
            let k = Arc::new(GradedModule::residue_field(r.field(), e));
            let pork = minimal_resolution(&ring, &k, n).poincare_series();
            let poqr = IntegerPolynomial::new(kt.totals().into_iter().map(|b| b as i128).collect());
            ensure(pork.bounded_by(&golod_poincare(e, &poqr, n)), format!("{tag}: Golod bound"))?;
            count += 1;
        }
    }
    Ok(format!("{count} samples"))
}

fn criterion_9() -> Outcome {
    let mut notes = Vec::new();
    for (e, s) in [(3, 4), (2, 5)] {
        let rep = run_map_checks(&RunConfig::new(e, s).seed(1), &[], true).map_err(|e| e.to_string())?;
        require_pass(&rep, &["socle_factorization"])?;
        let w = &rep.check("socle_factorization").unwrap().witness;
        notes.push(format!("({e},{s}) q dims {}", w["q_dims"]));
    }
    Ok(notes.join(", "))
}

/// Name, body and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() {
    let criteria: [Criterion; 9] = [
        ("e=2 s=4 denominator and residue field series", criterion_1, 5),
        ("e=3 s=4 Betti numbers, three denominator routes", criterion_2, 120),
        ("e=2 s=5 odd socle degree", criterion_3, 30),
        ("e=4 s=4 degree six denominator", criterion_4, 600),
        ("Tor-map suite on e=3 s=4", criterion_5, 300),
        ("Golod powers on (3,4) and (2,5)", criterion_6, 600),
        ("socle quotient on e=3 s=4", criterion_7, 120),
        ("property corpus", criterion_8, 1800),
        ("socle factorization in generic coordinates", criterion_9, 60),
    ];
    let mut failed = 0;
    for (k, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(*limit) => Err(format!("took {elapsed:.2?}, limit {limit}s")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}  [{elapsed:.2?}]  {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}  [{elapsed:.2?}]  {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
