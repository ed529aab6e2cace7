use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qhopf::coefficients::parse_scalar;
use qhopf::{q_binomial, q_number, LaurentPoly, ScalarQ};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i32..=4, -5i64..=5, 1i64..=3), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn scalar() -> impl Strategy<Value = ScalarQ> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            ScalarQ::from_poly(n)
        } else {
            ScalarQ::from_poly(n) / ScalarQ::from_poly(d)
        }
    })
}

/// Sample points away from every pole of the generated denominators.
fn points() -> [BigRational; 3] {
    [rat(3, 7), rat(-5, 11), rat(13, 17)]
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, ScalarQ::zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar()) {
        for p in points() {
            let (ea, eb) = (a.evaluate_rational(&p), b.evaluate_rational(&p));
            if let (Ok(x), Ok(y)) = (ea, eb) {
                prop_assert_eq!((&a * &b).evaluate_rational(&p).unwrap(), &x * &y);
                prop_assert_eq!((&a + &b).evaluate_rational(&p).unwrap(), &x + &y);
            }
        }
    }

    #[test]
    fn canonical_text_round_trips(a in scalar()) {
        let text = a.to_string();
        let back = parse_scalar(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn normal_form_is_reduced(a in scalar(), b in laurent()) {
        // the representation is unique: multiplying numerator and
        // denominator by a common factor changes nothing
        prop_assume!(!b.is_zero());
        let f = ScalarQ::from_poly(b);
        prop_assert_eq!((&a * &f) / f, a);
    }

    #[test]
    fn q_number_addition(m in -6i32..=6, n in -6i32..=6) {
        // [m + n] = [m] + q^{2m} [n]
        prop_assert_eq!(q_number(m + n), &q_number(m) + &(&ScalarQ::q_pow(2 * m) * &q_number(n)));
    }

    #[test]
    fn q_binomial_pascal(n in 1u32..=7, k in 1u32..=7) {
        prop_assume!(k <= n);
        // [n, k]_t = [n-1, k-1]_t + t^k [n-1, k]_t
        let t = ScalarQ::q_pow(2);
        let lhs = q_binomial(n, k, &t);
        let rhs = &q_binomial(n - 1, k - 1, &t) + &(&t.pow(k as i32) * &q_binomial(n - 1, k, &t));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn q_numbers_match_geometric_sums() {
    for r in 0..8 {
        let direct = (ScalarQ::one() - ScalarQ::q_pow(2 * r)) / (ScalarQ::one() - ScalarQ::q_pow(2));
        assert_eq!(q_number(r), direct, "r = {r}");
    }
    assert_eq!(q_number(-1), -ScalarQ::q_pow(-2));
}

#[test]
fn q_binomial_classical_values() {
    // at q = 1 the Gaussian binomials become ordinary binomials
    let t = ScalarQ::q_pow(2);
    let one = BigRational::one();
    let expect = [1, 5, 10, 10, 5, 1];
    for (k, e) in expect.iter().enumerate() {
        assert_eq!(q_binomial(5, k as u32, &t).evaluate_rational(&one).unwrap(), BigRational::from_integer((*e).into()));
    }
    assert!(q_binomial(3, 4, &t).is_zero());
}

#[test]
fn parse_errors_report_location() {
    let err = parse_scalar("1 + * q").unwrap_err();
    assert_eq!(err.pos, 4, "{err}");
    assert!(parse_scalar("(1 + q").is_err());
    assert!(parse_scalar("1/(1 - 1)").is_err());
}

#[test]
fn poles_are_reported() {
    let f = ScalarQ::from_int(1) / (ScalarQ::from_int(1) - ScalarQ::q_pow(2));
    assert!(f.evaluate_rational(&BigRational::one()).is_err());
    assert!(f.evaluate_rational(&rat(-1, 1)).is_err());
    assert_eq!(f.evaluate_rational(&rat(1, 2)).unwrap(), rat(4, 3));
}

#[test]
fn latex_forms() {
    assert_eq!(ScalarQ::from_ratio(1, 2).to_latex(), r"\tfrac{1}{2}");
    let f = ScalarQ::from_int(1) / (ScalarQ::from_int(1) + ScalarQ::q_pow(2));
    assert!(f.to_latex().starts_with(r"\frac{"), "{}", f.to_latex());
}
