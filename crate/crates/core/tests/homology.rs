use std::sync::Arc;

use gorenstein::apolarity::{build_algebra, power_ideal, sample_dual_generator, socle, DualGenerator, GradedArtinianAlgebra};
use gorenstein::homology::*;
use gorenstein::linalg::{PrimeField, DEFAULT_PRIME};
use gorenstein::polyring::{binomial, Form};

fn fp() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn parse(text: &str) -> Arc<GradedArtinianAlgebra> {
    Arc::new(build_algebra(&DualGenerator::parse(fp(), text).unwrap()).unwrap())
}

fn generic(e: usize, s: usize, seed: u64) -> Arc<GradedArtinianAlgebra> {
    Arc::new(build_algebra(&sample_dual_generator(e, s, DEFAULT_PRIME, seed).unwrap()).unwrap())
}

fn first_ideal_form(r: &GradedArtinianAlgebra, t: usize) -> Form {
    Form {
        num_vars: r.num_vars(),
        degree: t,
        coeffs: r.ideal_basis(t)[0].clone(),
    }
}

#[test]
fn residue_field_over_polynomial_ring() {
    for e in 1..=4 {
        let q = Ring::polynomial(fp(), e);
        let k = Arc::new(GradedModule::residue_field(fp(), e));
        let res = minimal_resolution(&q, &k, e + 1);
        let t = res.betti_table();
        for i in 0..=e {
            assert_eq!(t.steps[i], vec![(i, binomial(e, i))]);
        }
        assert!(t.steps[e + 1].is_empty());
        assert!(res.check_structure() && resolution_audit(&res));
        assert!(t.same_betti(&koszul_betti(&k)));
    }
}

#[test]
fn complete_intersection_of_squares() {
    let r = parse("1 1 1\n");
    let m = Arc::new(GradedModule::from_algebra(&r));
    let kt = koszul_betti(&m);
    assert_eq!(kt.steps, vec![vec![(0, 1)], vec![(2, 2)], vec![(4, 1)]]);
    let q = Ring::polynomial(fp(), 2);
    assert!(minimal_resolution(&q, &m, 3).betti_table().same_betti(&kt));

    let ring = Ring::artinian(r.clone());
    let k = Arc::new(GradedModule::residue_field(fp(), 2));
    let res = minimal_resolution(&ring, &k, 8);
    assert_eq!(res.betti_table().totals(), (1..=9).collect::<Vec<_>>());
    assert!(res.check_structure() && resolution_audit(&res) && res.is_complete());
}

#[test]
fn generic_three_four() {
    let r = generic(3, 4, 7);
    assert_eq!(r.hilbert_function(), vec![1, 3, 6, 3, 1]);
    let m = Arc::new(GradedModule::from_algebra(&r));
    let kt = koszul_betti(&m);
    assert_eq!(kt.steps, vec![vec![(0, 1)], vec![(3, 7)], vec![(4, 7)], vec![(7, 1)]]);
    let q = Ring::polynomial(fp(), 3);
    let res_q = minimal_resolution(&q, &m, 4);
    assert!(res_q.betti_table().same_betti(&kt));
    assert!(res_q.check_structure() && resolution_audit(&res_q));

    let ring = Ring::artinian(r.clone());
    let k = Arc::new(GradedModule::residue_field(fp(), 3));
    let res = minimal_resolution(&ring, &k, 5);
    assert_eq!(res.betti_table().totals(), vec![1, 3, 10, 29, 91, 272]);
    assert!(res.check_structure() && resolution_audit(&res));

    let h = first_ideal_form(&r, 3);
    let p = Ring::hypersurface(fp(), h);
    let res_p = minimal_resolution(&p, &m, 6);
    assert_eq!(res_p.betti_table().totals(), vec![1, 6, 7, 6, 6, 6, 6]);
    assert!(res_p.check_structure() && resolution_audit(&res_p));
    let kp = minimal_resolution(&p, &k, 6);
    assert_eq!(kp.betti_table().totals(), vec![1, 3, 4, 4, 4, 4, 4]);
}

#[test]
fn audit_catches_a_missing_generator() {
    let r = generic(2, 4, 3);
    let ring = Ring::artinian(r.clone());
    let k = Arc::new(GradedModule::residue_field(fp(), 2));
    let res = minimal_resolution(&ring, &k, 4);
    let mut table = res.betti_table();
    assert!(resolution::euler_characteristic_holds(&table, &ring, &k, 4));
    let last = table.steps[2].last_mut().unwrap();
    last.1 -= 1;
    assert!(!resolution::euler_characteristic_holds(&table, &ring, &k, 4));
}

#[test]
fn tor_maps_on_three_four() {
    let r = generic(3, 4, 7);
    let q = Ring::polynomial(fp(), 3);
    let m2 = Arc::new(GradedModule::ideal(&r, &power_ideal(&r, 2)));
    let m3 = Arc::new(GradedModule::ideal(&r, &power_ideal(&r, 3)));
    // ν on m^2: zero below e, bijective at e.
    let ranks = induced_tor_ranks(&q, &m3, &m2, 0..=3, None).unwrap();
    assert_eq!(&ranks[..3], &[0, 0, 0]);
    let res2 = minimal_resolution(&q, &m2, 3);
    let res3 = minimal_resolution(&q, &m3, 3);
    assert_eq!(res2.betti_table().total(3), ranks[3]);
    assert_eq!(res3.betti_table().total(3), ranks[3]);
    // Lift independence.
    assert_eq!(induced_tor_ranks(&q, &m3, &m2, 0..=3, Some(99)).unwrap(), ranks);

    let h = first_ideal_form(&r, 3);
    let p = Ring::hypersurface(fp(), h);
    let rm = Arc::new(GradedModule::from_algebra(&r));
    let rq = minimal_resolution(&q, &rm, 3);
    let rp = minimal_resolution(&p, &rm, 3);
    let phi1 = tor_base_change_map(&rq, &rp, 1, None).unwrap();
    assert_eq!(phi1.cols() - phi1.rank(), 1);
    let phi2 = tor_base_change_map(&rq, &rp, 2, Some(5)).unwrap();
    assert_eq!(phi2.rank(), phi2.cols());
    assert_eq!(tor_base_change_map(&rq, &rp, 3, None).unwrap().rank(), 0);
    let pm2 = minimal_resolution(&p, &m2, 3);
    assert_eq!(tor_base_change_map(&res2, &pm2, 3, None).unwrap().rank(), 0);

    let a3 = Arc::new(GradedModule::quotient(&r, &power_ideal(&r, 3)));
    let a2 = Arc::new(GradedModule::quotient(&r, &power_ideal(&r, 2)));
    assert_eq!(induced_tor_ranks(&p, &a3, &a2, 1..=3, None).unwrap(), vec![0, 0, 0]);
    assert_eq!(induced_tor_ranks(&q, &a3, &a2, 1..=3, None).unwrap(), vec![0, 0, 0]);

    let rep = golod_criterion_check(&r, &p, 2, 3, None).unwrap();
    assert!(rep.condition1() && rep.condition2(), "{rep:?}");
}

#[test]
fn identity_lift_is_identity() {
    let r = generic(2, 4, 1);
    let q = Ring::polynomial(fp(), 2);
    let m = Arc::new(GradedModule::from_algebra(&r));
    let res = minimal_resolution(&q, &m, 2);
    let id = ModuleMap::identity(&m);
    for i in 0..=2 {
        let t = tor_induced_map(&id, &res, &res, i, None).unwrap();
        assert_eq!(t, gorenstein::linalg::Matrix::identity(fp(), res.betti_table().total(i)));
    }
    let zero = ModuleMap::zero(&m, &m);
    assert!(tor_induced_map(&zero, &res, &res, 2, None).unwrap().is_zero());
}

#[test]
fn socle_quotient_betti() {
    let r = generic(3, 4, 7);
    let soc = socle(&r);
    let m = Arc::new(GradedModule::quotient(&r, &soc));
    assert_eq!(koszul_betti(&m).totals(), vec![1, 8, 10, 3]);
}
