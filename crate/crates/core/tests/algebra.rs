use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qhopf::{AlgebraElement, Generator, Monomial, QuantumGroup, ScalarQ};

fn group() -> QuantumGroup<ScalarQ> {
    QuantumGroup::new(ScalarQ::q())
}

fn half() -> QuantumGroup<BigRational> {
    QuantumGroup::new(BigRational::new(1.into(), 2.into()))
}

fn monomial(max: u32) -> impl Strategy<Value = Monomial> {
    (-(max as i32)..=max as i32, 0..=max, 0..=max).prop_map(|(a, k, l)| Monomial::new(a, k, l))
}

fn element(max: u32) -> impl Strategy<Value = AlgebraElement<ScalarQ>> {
    proptest::collection::vec((monomial(max), -3i64..=3, -2i32..=2), 1..4)
        .prop_map(|ts| AlgebraElement::from_terms(ts.into_iter().map(|(m, c, e)| (m, ScalarQ::from_int(c) * ScalarQ::q_pow(e)))))
}

fn word() -> impl Strategy<Value = Vec<Generator>> {
    proptest::collection::vec(proptest::sample::select(Generator::ALL.to_vec()), 0..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(x in element(2), y in element(2), z in element(2)) {
        let g = group();
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(x in element(2), y in element(2)) {
        let g = group();
        prop_assert_eq!(g.star(&g.star(&x)), x.clone());
        prop_assert_eq!(g.star(&g.mul(&x, &y)), g.mul(&g.star(&y), &g.star(&x)));
    }

    #[test]
    fn coproduct_is_multiplicative(x in element(1), y in element(1)) {
        let g = group();
        prop_assert_eq!(g.coproduct(&g.mul(&x, &y)), g.tensor_mul(&g.coproduct(&x), &g.coproduct(&y)));
    }

    #[test]
    fn normal_form_agrees_with_stepwise_products(w in word()) {
        let g = group();
        let folded = w.iter().fold(AlgebraElement::one(), |acc, gen| g.mul(&acc, &g.generator(*gen)));
        prop_assert_eq!(g.normal_form(&w, ScalarQ::one()), folded);
    }

    #[test]
    fn degree_is_additive(x in monomial(3), y in monomial(3)) {
        let g = group();
        let p = g.mul(&AlgebraElement::monomial(x), &AlgebraElement::monomial(y));
        prop_assert!(p.has_degree(x.degree() + y.degree()));
    }

    #[test]
    fn haar_is_positive(x in element(2)) {
        // h(x* x) > 0 at q = 1/2 for nonzero x
        let g = half();
        let xr = x.map_coeffs(|c| c.evaluate_rational(g.q()).unwrap());
        prop_assume!(!xr.is_zero());
        let v = g.haar(&g.mul(&g.star(&xr), &xr));
        prop_assert!(v.is_positive(), "h(x*x) = {}", v);
    }

    #[test]
    fn counit_is_a_character(x in element(2), y in element(2)) {
        let g = group();
        prop_assert_eq!(g.counit(&g.mul(&x, &y)), g.counit(&x) * g.counit(&y));
    }
}

#[test]
fn defining_relations() {
    let g = group();
    use Generator::*;
    let q = ScalarQ::q();
    let a = g.generator(Alpha);
    let c = g.generator(Gamma);
    let cs = g.generator(GammaStar);
    let as_ = g.generator(AlphaStar);
    // alpha gamma = q gamma alpha, gamma gamma* = gamma* gamma
    assert_eq!(g.mul(&a, &c), g.mul(&c, &a).scale(&q));
    assert_eq!(g.mul(&a, &cs), g.mul(&cs, &a).scale(&q));
    assert_eq!(g.mul(&c, &cs), g.mul(&cs, &c));
    // alpha* alpha + gamma* gamma = 1, alpha alpha* + q^2 gamma gamma* = 1
    assert_eq!(&g.mul(&as_, &a) + &g.mul(&cs, &c), AlgebraElement::one());
    assert_eq!(&g.mul(&a, &as_) + &g.mul(&c, &cs).scale(&ScalarQ::q_pow(2)), AlgebraElement::one());
}

/// `h((gamma gamma*)^k) = (1 - q^2) / (1 - q^{2k+2})`.
fn haar_oracle(k: u32) -> ScalarQ {
    let one = ScalarQ::one();
    (one.clone() - ScalarQ::q_pow(2)) / (one - ScalarQ::q_pow(2 * k as i32 + 2))
}

#[test]
fn haar_closed_form() {
    let g = group();
    for k in 0..=6 {
        assert_eq!(g.haar_gamma_power(k), haar_oracle(k), "k = {k}");
    }
    assert!(g.haar(&AlgebraElement::monomial(Monomial::new(1, 1, 1))).is_zero());
    assert!(g.haar(&AlgebraElement::monomial(Monomial::new(0, 2, 1))).is_zero());
}

#[test]
fn haar_of_alpha_alpha_star() {
    // alpha alpha* = 1 - q^2 gamma gamma*, so h = 1 - q^2 / (1 + q^2)
    let g = group();
    let x = g.mul(&AlgebraElement::monomial(Monomial::new(1, 0, 0)), &AlgebraElement::monomial(Monomial::new(-1, 0, 0)));
    let expect = ScalarQ::one() / (ScalarQ::one() + ScalarQ::q_pow(2));
    assert_eq!(g.haar(&x), expect);
}

#[test]
fn antipode_inverts_generators() {
    // m (S (x) id) phi(g) = epsilon(g) 1 on each generator
    let g = group();
    for gen in Generator::ALL {
        let t = g.coproduct_generator(gen);
        let mut acc = AlgebraElement::zero();
        for ((a, b), c) in t.terms() {
            let p = g.mul(&g.antipode(&AlgebraElement::monomial(*a)), &AlgebraElement::monomial(*b));
            acc.add_scaled(&p, c);
        }
        let eps = g.counit(&g.generator(gen));
        assert_eq!(acc, AlgebraElement::scalar(eps), "{gen:?}");
    }
}

#[test]
fn specialisation_agrees_with_exact_products() {
    let exact = group();
    let at = half();
    let x = AlgebraElement::monomial(Monomial::new(-2, 1, 0));
    let y = AlgebraElement::monomial(Monomial::new(1, 1, 2));
    let p = exact.mul(&x, &y).map_coeffs(|c| c.evaluate_rational(at.q()).unwrap());
    let conv = |e: &AlgebraElement<ScalarQ>| e.map_coeffs(|c| c.evaluate_rational(at.q()).unwrap());
    assert_eq!(at.mul(&conv(&x), &conv(&y)), p);
    assert!(!p.is_zero());
}
