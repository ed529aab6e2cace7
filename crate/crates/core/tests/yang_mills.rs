use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qhopf::calculus::{unit_displacement, MINUS, PLUS};
use qhopf::checks::{random_base_form, random_homogeneous};
use qhopf::conventions::{exact_geometry, geometry_at, Conventions, PROBE_LENGTH};
use qhopf::sphere::BaseForm;
use qhopf::yang_mills::{probe_family, standard_solutions, winding_potential, Displacement, YmsmTriple};
use qhopf::{AlgebraElement, Error, Monomial, ScalarQ};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn exact_form(p: &AlgebraElement<ScalarQ>) -> Displacement<ScalarQ> {
    let geo = exact_geometry().unwrap();
    let (x, y) = geo.horizontal_d(p);
    Displacement::new(BaseForm::grade1(x, y).unwrap()).unwrap()
}

/// A random degree-0 element without constant term.
fn primitive(seed: u64) -> AlgebraElement<ScalarQ> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p: AlgebraElement<ScalarQ> = random_homogeneous(&mut rng, 0, 4, 3);
    AlgebraElement::from_terms(p.iter().filter(|(m, _)| !m.is_one()).map(|(m, c)| (*m, c.clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn primitives_are_recovered(seed in any::<u64>()) {
        let geo = exact_geometry().unwrap();
        let p = primitive(seed);
        let d = exact_form(&p);
        prop_assert_eq!(geo.find_primitive(&d.lam_of_sigma, 4).unwrap(), p);
    }

    #[test]
    fn characterization(seed in any::<u64>(), exact in any::<bool>()) {
        let geo = exact_geometry().unwrap();
        let d = if exact {
            exact_form(&primitive(seed))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Displacement::new(random_base_form(&mut rng, 1, 4).unwrap()).unwrap()
        };
        let ym = geo.ym_residual(&d).unwrap().is_zero();
        let closed = geo.base_d(&d.lam_of_sigma).unwrap().is_zero();
        let prim = geo.find_primitive(&d.lam_of_sigma, 4).is_ok();
        prop_assert_eq!(ym, closed);
        prop_assert_eq!(closed, prim);
        if exact {
            prop_assert!(ym);
        }
    }

    #[test]
    fn ym_functional_decreases_along_itself(seed in any::<u64>()) {
        // the variation in the direction of d itself is -1/2 <d lambda, d lambda> <= 0
        let geo = geometry_at(BigRational::new(1.into(), 2.into())).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = Displacement::new(random_base_form::<BigRational>(&mut rng, 1, 4).unwrap()).unwrap();
        let v = geo.ym_variation(&d, &d).unwrap();
        let closed = geo.base_d(&d.lam_of_sigma).unwrap().is_zero();
        prop_assert!(!v.is_positive());
        prop_assert_eq!(v.is_zero(), closed);
    }
}

#[test]
fn canonical_connection_is_yang_mills() {
    let geo = exact_geometry().unwrap();
    assert!(geo.ym_residual(&Displacement::zero()).unwrap().is_zero());
    assert!(geo.find_primitive(&BaseForm::zero(1), 0).unwrap().is_zero());
}

#[test]
fn non_closed_displacements_are_rejected() {
    let geo = exact_geometry().unwrap();
    let lam = unit_displacement::<ScalarQ>(MINUS, Monomial::new(2, 0, 0)).unwrap();
    assert!(matches!(geo.find_primitive(&lam, 4), Err(Error::Invalid(_))));
    assert!(!geo.ym_residual(&Displacement::new(lam).unwrap()).unwrap().is_zero());
}

#[test]
fn low_filtration_asks_for_more() {
    let geo = exact_geometry().unwrap();
    let d = exact_form(&AlgebraElement::monomial(Monomial::new(0, 2, 2)));
    assert!(matches!(geo.find_primitive(&d.lam_of_sigma, 2), Err(Error::IncreaseFiltration(2))));
    assert!(geo.find_primitive(&d.lam_of_sigma, 4).is_ok());
}

#[test]
fn winding_potential_values() {
    // 1/2 q^4 (1 + q^2 + ... + q^{2(n-1)})
    let q = ScalarQ::q();
    assert!(winding_potential(&q, 0).is_zero());
    assert_eq!(winding_potential(&q, 1), ScalarQ::from_ratio(1, 2) * ScalarQ::q_pow(4));
    let three = (ScalarQ::q_pow(4) + ScalarQ::q_pow(6) + ScalarQ::q_pow(8)) * ScalarQ::from_ratio(1, 2);
    assert_eq!(winding_potential(&q, 3), three);
    let v = winding_potential(&0.5f64, 2);
    assert!((v - 0.5 * 0.0625 * 1.25).abs() < 1e-15);
}

#[test]
fn matter_equations_hold() {
    let geo = exact_geometry().unwrap();
    for n in 1..=3 {
        for t in standard_solutions(&ScalarQ::q(), n).unwrap() {
            let (l, r) = geo.ymsm_matter_residual(&t).unwrap();
            assert!(l.is_zero() && r.is_zero(), "n = {n}: {l} / {r}");
        }
    }
}

#[test]
fn scalar_matter_triple() {
    // n = 0 with V' = 1/2 (1+q^2)^2 and the lowest scalar eigenfunctions
    let geo = exact_geometry().unwrap();
    let v = (ScalarQ::one() + ScalarQ::q_pow(2)).pow(2) * ScalarQ::from_ratio(1, 2);
    let p = AlgebraElement::monomial(Monomial::new(1, 0, 1));
    let t = YmsmTriple::new(Displacement::zero(), 0, p.clone(), geo.group().star(&p), v).unwrap();
    let (l, r) = geo.ymsm_matter_residual(&t).unwrap();
    assert!(l.is_zero() && r.is_zero());
}

#[test]
fn triples_check_degrees() {
    let x = AlgebraElement::monomial(Monomial::new(1, 0, 0));
    assert!(YmsmTriple::new(Displacement::zero(), 1, x.clone(), x.clone(), ScalarQ::zero()).is_err());
    assert!(Displacement::<ScalarQ>::new(BaseForm::zero(2)).is_err());
}

#[test]
fn gauge_calibration_is_one_and_transfers() {
    let conv = Conventions::standard().unwrap();
    assert_eq!(conv.gauge_constant, ScalarQ::one());
    assert!(conv.report.gauge.validated);
    let geo = conv.exact_geometry();
    let probes = probe_family::<ScalarQ>(PROBE_LENGTH);
    assert_eq!(probes.len(), 16);
    let t = &standard_solutions(&ScalarQ::q(), 2).unwrap()[1];
    assert!(geo.gauge_scan(t, &probes, &conv.gauge_constant).unwrap().iter().all(|r| r.is_zero()));
}

#[test]
fn trivial_winding_has_no_coupling() {
    let geo = exact_geometry().unwrap();
    let s = AlgebraElement::monomial(Monomial::new(1, 0, 1));
    let t = YmsmTriple::new(Displacement::zero(), 0, s.clone(), s, ScalarQ::zero()).unwrap();
    for p in probe_family::<ScalarQ>(2) {
        let (l, r) = geo.gauge_terms(&t, &p).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }
}

#[test]
fn perturbed_triple_is_detected() {
    let conv = Conventions::standard().unwrap();
    let geo = conv.exact_geometry();
    let t1 = &AlgebraElement::monomial(Monomial::new(2, 0, 0)) + &AlgebraElement::monomial(Monomial::new(0, 2, 0));
    let t2 = AlgebraElement::monomial(Monomial::new(-2, 0, 0));
    let t = YmsmTriple::new(Displacement::zero(), 2, t1, t2, winding_potential(&ScalarQ::q(), 2)).unwrap();
    let probes = probe_family::<ScalarQ>(PROBE_LENGTH);
    let res = geo.gauge_scan(&t, &probes, &conv.gauge_constant).unwrap();
    assert!(res.iter().any(|r| !r.is_zero()));
    // alpha^2 and gamma^2 share an eigenvalue, so only the gauge equation sees the mismatch
    let (l, r) = geo.ymsm_matter_residual(&t).unwrap();
    assert!(l.is_zero() && r.is_zero());
}

#[test]
fn probes_are_degree_correct() {
    for p in probe_family::<ScalarQ>(4) {
        p.lam_of_sigma.validate().unwrap();
        let (x, y) = p.lam_of_sigma.components().unwrap();
        assert!(x.is_zero() != y.is_zero());
    }
    assert!(unit_displacement::<ScalarQ>(PLUS, Monomial::new(2, 0, 0)).is_err());
}
