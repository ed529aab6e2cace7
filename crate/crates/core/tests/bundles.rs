use num_traits::{One, Zero};
use proptest::prelude::*;
use qhopf::bundles::{
    closed_form, generator_set, growth_differences, growth_scan, reference_normalisation, row5_decomposition,
    verify_generators, Section, Side,
};
use qhopf::conventions::exact_geometry;
use qhopf::{AlgebraElement, Monomial, ScalarQ};

fn qp(e: i32) -> ScalarQ {
    ScalarQ::q_pow(e)
}

/// `[r] = (1 - q^{2r}) / (1 - q^2)`, written out independently of the
/// library's q-numbers.
fn br(r: i32) -> ScalarQ {
    (ScalarQ::one() - qp(2 * r)) / (ScalarQ::one() - qp(2))
}

fn half() -> ScalarQ {
    ScalarQ::from_ratio(1, 2)
}

/// Left eigenvalue of the family with leading monomial `alpha^a gamma^k gamma*^l`.
fn left_oracle(a: i32, k: i32, l: i32) -> ScalarQ {
    let m = a.abs();
    let n = a + k - l;
    match (a.signum(), k > 0, l > 0) {
        (0, false, false) => ScalarQ::zero(),
        (1, _, false) | (0, true, false) => half() * br(n) * qp(4),
        (-1, false, _) | (0, false, true) => {
            let big = -n;
            half() * br(big) * qp(2 * (1 - big))
        }
        (1, false, true) => half() * (br(l) * br(m + 1) * qp(2 * (1 - l)) + br(m) * br(l + 1) * qp(2 * (2 - l))),
        (-1, true, false) => half() * (br(m) * br(k + 1) * qp(2 * (1 - m)) + br(k) * br(m + 1) * qp(2 * (2 - m))),
        (0, true, true) => half() * (br(l) * qp(2 * (1 - l)) + br(k) * qp(4) + ScalarQ::from_int(2) * br(l) * br(k) * qp(2 * (2 - l))),
        (1, true, true) => {
            half()
                * (br(m) * br(l + 1) * qp(4 - 2 * l)
                    + br(k) * br(l + 1) * qp(4 + 2 * m - 2 * l)
                    + br(l) * br(m + 1) * qp(2 - 2 * l)
                    + br(l) * br(k) * qp(4 + 2 * m - 2 * l))
        }
        _ => {
            half()
                * (br(m) * br(k + 1) * qp(2 - 2 * m)
                    + br(l) * br(k + 1) * qp(2 - 2 * m - 2 * l)
                    + br(k) * br(m + 1) * qp(4 - 2 * m)
                    + br(l) * br(k) * qp(4 - 2 * m - 2 * l))
        }
    }
}

fn right_oracle(a: i32, k: i32, l: i32) -> ScalarQ {
    let m = a.abs();
    let n = a + k - l;
    match (a.signum(), k > 0, l > 0) {
        (0, false, false) => ScalarQ::zero(),
        (1, _, false) | (0, true, false) => half() * br(n) * qp(2 * (1 - n)),
        (-1, false, _) | (0, false, true) => half() * br(-n) * qp(4),
        (1, false, true) => half() * (br(m) * br(l + 1) * qp(2 * (1 - m)) + br(l) * br(m + 1) * qp(2 * (2 - m))),
        (-1, true, false) => half() * (br(k) * br(m + 1) * qp(2 * (1 - k)) + br(m) * br(k + 1) * qp(2 * (2 - k))),
        (0, true, true) => half() * (br(l) * qp(2 * (2 - k)) + br(k) * qp(2 * (1 - n)) + br(l) * br(k) * (ScalarQ::one() + qp(4)) * qp(2 * (1 - k))),
        (1, true, true) => {
            half()
                * (br(m) * br(l + 1) * qp(2 - 2 * m - 2 * k)
                    + br(k) * br(l + 1) * qp(2 - 2 * k)
                    + br(l) * br(m + 1) * qp(4 - 2 * m - 2 * k)
                    + br(l) * br(k) * qp(6 - 2 * k))
        }
        _ => {
            half()
                * (br(m) * br(k + 1) * qp(4 - 2 * k + 2 * l)
                    + br(l) * br(k + 1) * qp(4 - 2 * k)
                    + br(k) * br(m + 1) * qp(2 - 2 * k + 2 * l)
                    + br(k) * br(l) * qp(2 - 2 * k))
        }
    }
}

fn oracle(side: Side, m: Monomial) -> ScalarQ {
    let (a, k, l) = (m.a_power, m.k as i32, m.l as i32);
    match side {
        Side::Left => left_oracle(a, k, l),
        Side::Right => right_oracle(a, k, l),
    }
}

#[test]
fn closed_forms_match_written_out_tables() {
    for a in -5..=5 {
        for k in 0..=5 {
            for l in 0..=5 {
                let m = Monomial::new(a, k, l);
                for side in [Side::Left, Side::Right] {
                    assert_eq!(closed_form(side, m), oracle(side, m), "{side:?} {m}");
                }
            }
        }
    }
}

#[test]
fn computed_spectra_match_tables() {
    let geo = exact_geometry().unwrap();
    let ns: Vec<i32> = (-3..=3).collect();
    let blocks = geo.spectral_blocks(&ns, 3, &[Side::Left, Side::Right], 2).unwrap();
    let mut count = 0;
    for b in &blocks {
        for pair in geo.spectrum(b).unwrap() {
            assert_eq!(pair.eigenvalue, oracle(b.side, pair.leading), "{:?} n = {} {}", b.side, b.n, pair.leading);
            count += 1;
        }
    }
    assert!(count > 150);
}

#[test]
fn eigenvectors_satisfy_the_eigen_equation() {
    let geo = exact_geometry().unwrap();
    let blocks = geo.spectral_blocks(&[-2, 0, 1], 2, &[Side::Left, Side::Right], 2).unwrap();
    for b in &blocks {
        for pair in geo.spectrum(b).unwrap() {
            let image = geo.apply_laplacian(b.side, b.n, &pair.eigenvector).unwrap();
            assert_eq!(image, pair.eigenvector.scale(&pair.eigenvalue), "{:?} {}", b.side, pair.leading);
            assert_eq!(pair.eigenvector.coeff(&pair.leading), ScalarQ::one());
        }
    }
}

#[test]
fn spectra_do_not_depend_on_the_buffer() {
    let geo = exact_geometry().unwrap();
    for side in [Side::Left, Side::Right] {
        for n in [-1, 2] {
            let lo = geo.spectrum(&geo.laplacian_matrix(n, 2, side, 1).unwrap()).unwrap();
            let hi = geo.spectrum(&geo.laplacian_matrix(n, 2, side, 3).unwrap()).unwrap();
            let key = |v: &Vec<qhopf::bundles::EigenPair<ScalarQ>>| v.iter().map(|p| (p.leading, p.eigenvalue.clone())).collect::<Vec<_>>();
            assert_eq!(key(&lo), key(&hi), "{side:?} n = {n}");
        }
    }
}

#[test]
fn reference_right_eigenvector() {
    let geo = exact_geometry().unwrap();
    let lead = Monomial::new(1, 1, 1);
    let pair = geo
        .spectrum(&geo.laplacian_matrix(1, 2, Side::Right, 2).unwrap())
        .unwrap()
        .into_iter()
        .find(|p| p.leading == lead)
        .unwrap();
    let c = qp(4) + ScalarQ::from_int(2) * qp(2) + qp(-2) + ScalarQ::from_int(3);
    let d = qp(4) + ScalarQ::from_int(2) * qp(2) + qp(-2) + ScalarQ::from_int(2);
    let expect = AlgebraElement::from_terms([
        (Monomial::new(1, 0, 0), -(c.clone() * (ScalarQ::one() + qp(2)) / d)),
        (lead, c.clone()),
    ]);
    assert_eq!(reference_normalisation(Side::Right, lead), Some(c.clone()));
    assert_eq!(pair.eigenvector.scale(&c), expect);
}

#[test]
fn reference_left_eigenvector_is_an_eigenvector() {
    let geo = exact_geometry().unwrap();
    let lead = Monomial::new(1, 1, 1);
    let c = qp(6) + ScalarQ::from_int(3) * qp(4) + ScalarQ::from_int(2) * qp(2) + ScalarQ::one();
    assert_eq!(reference_normalisation(Side::Left, lead), Some(c.clone()));
    let pair = geo
        .spectrum(&geo.laplacian_matrix(1, 2, Side::Left, 2).unwrap())
        .unwrap()
        .into_iter()
        .find(|p| p.leading == lead)
        .unwrap();
    let v = pair.eigenvector.scale(&c);
    assert_eq!(v.len(), 2);
    assert_eq!(geo.apply_laplacian(Side::Left, 1, &v).unwrap(), v.scale(&left_oracle(1, 1, 1)));
}

#[test]
fn row5_split_matches_closed_form() {
    for m in 1..=6u32 {
        for l in 1..=6u32 {
            assert_eq!(row5_decomposition(m, l), closed_form(Side::Left, Monomial::new(m as i32, 0, l)), "m = {m}, l = {l}");
        }
    }
}

#[test]
fn row5_grows_in_m() {
    for n in -4..=4 {
        let scan = growth_scan(n, 0.5, 8).unwrap();
        assert!(scan.strictly_increasing, "n = {n}: {:?}", scan.values);
    }
}

#[test]
fn classical_growth_differences() {
    // at q = 1 row 5 is m^2 - mn + m - n/2, with differences 2m + 2 - n
    for n in [-2, 0, 3] {
        let m0 = (n.max(0) + 1) as f64;
        for (i, d) in growth_differences(n, 0.9999, 8).unwrap().into_iter().enumerate() {
            let m = m0 + i as f64;
            assert!((d - (2.0 * m + 2.0 - n as f64)).abs() < 1e-2, "n = {n}, m = {m}: {d}");
        }
    }
}

#[test]
fn generator_identities() {
    let geo = exact_geometry().unwrap();
    for n in -3..=3 {
        let r = verify_generators(geo.group(), &generator_set(n)).unwrap();
        assert!(r.unitarity && r.z_weighted, "n = {n}");
    }
}

#[test]
fn sections_check_their_degree() {
    let s = AlgebraElement::<ScalarQ>::monomial(Monomial::new(1, 1, 0));
    assert!(Section::new(2, s.clone()).is_ok());
    assert!(Section::new(1, s).is_err());
    let geo = exact_geometry().unwrap();
    assert!(geo.apply_laplacian(Side::Left, 0, &AlgebraElement::monomial(Monomial::new(1, 0, 0))).is_err());
}

#[test]
fn left_laplacian_commutes_with_itself() {
    let geo = exact_geometry().unwrap();
    for n in -2..=2 {
        let w = AlgebraElement::monomial(qhopf::bundles::commutation_witness_monomial(n));
        assert!(geo.commutator(Side::Left, Side::Left, n, &w).unwrap().is_zero());
    }
}

fn section(n: i32) -> impl Strategy<Value = AlgebraElement<ScalarQ>> {
    proptest::collection::vec((-2i32..=2, 0u32..=2, -3i64..=3), 1..4).prop_map(move |ts| {
        AlgebraElement::from_terms(ts.into_iter().filter_map(|(a, k, c)| {
            let l = a + k as i32 - n;
            (l >= 0).then(|| (Monomial::new(a, k, l as u32), ScalarQ::from_int(c)))
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn right_laplacian_is_the_star_conjugate((n, s) in (-2i32..=2).prop_flat_map(|n| (Just(n), section(n)))) {
        let geo = exact_geometry().unwrap();
        let g = geo.group();
        let left = geo.apply_laplacian(Side::Left, n, &s).unwrap();
        let right = geo.apply_laplacian(Side::Right, -n, &g.star(&s)).unwrap();
        prop_assert_eq!(g.star(&left), right);
    }

    #[test]
    fn laplacians_are_linear(a in section(0), b in section(0), c in -3i64..=3) {
        let geo = exact_geometry().unwrap();
        let c = ScalarQ::from_int(c);
        for side in [Side::Left, Side::Right] {
            let lhs = geo.apply_laplacian(side, 0, &(&a + &b.scale(&c))).unwrap();
            let rhs = &geo.apply_laplacian(side, 0, &a).unwrap() + &geo.apply_laplacian(side, 0, &b).unwrap().scale(&c);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
