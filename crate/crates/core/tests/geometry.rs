use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qhopf::calculus::Geometry;
use qhopf::checks::{random_base_form, random_homogeneous};
use qhopf::conventions::{exact_geometry, geometry_at, scalar_matter_polynomials};
use qhopf::sphere::BaseForm;
use qhopf::{AlgebraElement, Monomial, ScalarQ};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn at_half() -> Geometry<BigRational> {
    geometry_at(BigRational::new(1.into(), 2.into())).unwrap()
}

fn sphere_function(seed: u64, max_len: u32) -> AlgebraElement<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_homogeneous(&mut rng, 0, max_len, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>()) {
        let geo = exact_geometry().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_base_form::<ScalarQ>(&mut rng, 0, 4).unwrap();
        prop_assert!(geo.base_d(&geo.base_d(&f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn exact_forms_integrate_to_zero(seed in any::<u64>()) {
        let geo = at_half();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_base_form::<BigRational>(&mut rng, 1, 5).unwrap();
        prop_assert!(geo.integral(&geo.base_d(&phi).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn inner_product_is_positive(seed in any::<u64>(), grade in 0u8..3) {
        let geo = at_half();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_base_form::<BigRational>(&mut rng, grade, 4).unwrap();
        prop_assume!(!phi.is_zero());
        prop_assert!(geo.global_inner(&phi, &phi).unwrap().is_positive());
    }

    #[test]
    fn scalar_laplacian_is_symmetric_and_nonnegative(s1 in any::<u64>(), s2 in any::<u64>()) {
        let geo = at_half();
        let f = sphere_function(s1, 4);
        let g = sphere_function(s2, 4);
        let lf = geo.laplacian0(&f).unwrap();
        let lg = geo.laplacian0(&g).unwrap();
        let zero = |p: AlgebraElement<BigRational>| BaseForm::grade0(p).unwrap();
        let a = geo.global_inner(&zero(lf.clone()), &zero(g.clone())).unwrap();
        let b = geo.global_inner(&zero(f.clone()), &zero(lg)).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(!geo.global_inner(&zero(lf), &zero(f)).unwrap().is_negative());
    }

    #[test]
    fn hodge_square(seed in any::<u64>(), grade in 0u8..3) {
        let geo = exact_geometry().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_base_form::<ScalarQ>(&mut rng, grade, 4).unwrap();
        let twice = geo.hodge_left(&geo.hodge_left(&phi).unwrap()).unwrap();
        let expect = if grade == 1 { phi.scale(&ScalarQ::from_ratio(-1, 4)) } else { phi };
        prop_assert_eq!(twice, expect);
    }
}

#[test]
fn canonical_curvature() {
    let geo = exact_geometry().unwrap();
    let r = geo.curvature(&BaseForm::zero(1)).unwrap();
    let c = (ScalarQ::one() + ScalarQ::q_pow(2)) * ScalarQ::q();
    assert_eq!(r, BaseForm::grade2(AlgebraElement::scalar(c)).unwrap());
    assert!(geo.codifferential_left(&r).unwrap().is_zero());
}

#[test]
fn scalar_matter_eigenvalue() {
    let geo = exact_geometry().unwrap();
    let lam = (ScalarQ::one() + ScalarQ::q_pow(2)).pow(2) * ScalarQ::from_ratio(1, 2);
    let m = |a, k, l| AlgebraElement::monomial(Monomial::new(a, k, l));
    let mut p = AlgebraElement::one();
    p.add_term(Monomial::new(0, 1, 1), -(ScalarQ::one() + ScalarQ::q_pow(2)));
    let polys = [p, m(1, 0, 1), m(-1, 1, 0)];
    assert_eq!(polys, scalar_matter_polynomials(geo.group()));
    for p in &polys {
        assert_eq!(geo.laplacian0(p).unwrap(), p.scale(&lam), "{p}");
    }
}

#[test]
fn constants_are_closed() {
    let geo = exact_geometry().unwrap();
    let one = BaseForm::grade0(AlgebraElement::one()).unwrap();
    assert!(geo.base_d(&one).unwrap().is_zero());
    assert!(geo.laplacian0(&AlgebraElement::one()).unwrap().is_zero());
}

#[test]
fn regular_displacements_are_trivial() {
    let geo = exact_geometry().unwrap();
    for len in [2, 4] {
        let s = geo.regular_qpc_solver(len).unwrap();
        assert!(s.solutions.is_empty(), "length {len}: {} solutions", s.solutions.len());
        assert!(s.equations > s.unknowns);
    }
    assert!(geo.regular_qpc_solver(1).is_err());
}

#[test]
fn grade_errors() {
    let geo = exact_geometry().unwrap();
    assert!(geo.codifferential_left(&BaseForm::zero(0)).is_err());
    assert!(geo.curvature(&BaseForm::zero(2)).is_err());
    // a 1-form with the wrong degrees is rejected
    let bad = BaseForm::<ScalarQ>::grade1(AlgebraElement::one(), AlgebraElement::zero());
    assert!(bad.is_err());
}

#[test]
fn rational_points_agree_with_exact() {
    let exact = exact_geometry().unwrap();
    let geo = at_half();
    let half = BigRational::new(1.into(), 2.into());
    let f = AlgebraElement::monomial(Monomial::new(1, 1, 2));
    let e = exact.laplacian0(&f).unwrap().map_coeffs(|c| c.evaluate_rational(&half).unwrap());
    let r = geo.laplacian0(&f.map_coeffs(|c: &ScalarQ| c.evaluate_rational(&half).unwrap())).unwrap();
    assert_eq!(e, r);
}
