//! Canonical JSON of core values.

use proptest::prelude::*;
use qhopf::bundles::Side;
use qhopf::{AlgebraElement, Monomial, ScalarQ};
use qhopf_cli::report::SpectralReport;
use qhopf_cli::{build_spectral_report, Command, NRange, RunConfig};

fn monomial() -> impl Strategy<Value = Monomial> {
    (-4i32..=4, 0u32..=4, 0u32..=4).prop_map(|(a, k, l)| Monomial::new(a, k, l))
}

fn scalar() -> impl Strategy<Value = ScalarQ> {
    (-6i64..=6, 1i64..=5, -3i32..=3, -3i64..=3, -2i32..=2).prop_map(|(n, d, e, m, f)| {
        let num = ScalarQ::from_ratio(n, d) * ScalarQ::q_pow(e) + ScalarQ::from_int(m) * ScalarQ::q_pow(f);
        num / (ScalarQ::from_int(1) + ScalarQ::q_pow(2))
    })
}

proptest! {
    #[test]
    fn scalar_text_round_trip(s in scalar()) {
        let text = serde_json::to_string(&s).unwrap();
        let back: ScalarQ = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn element_round_trip(terms in proptest::collection::vec((monomial(), scalar()), 0..6)) {
        let x = AlgebraElement::from_terms(terms);
        let text = serde_json::to_string(&x).unwrap();
        let back: AlgebraElement<ScalarQ> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn element_json_is_ascending_term_list() {
    let x = AlgebraElement::from_terms([
        (Monomial::new(0, 1, 1), ScalarQ::from_ratio(1, 2)),
        (Monomial::new(-1, 0, 0), ScalarQ::q()),
        (Monomial::ONE, ScalarQ::from_int(3)),
    ]);
    let v: serde_json::Value = serde_json::to_value(&x).unwrap();
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 3);
    let monos: Vec<Monomial> = list
        .iter()
        .map(|t| Monomial::new(t["a_power"].as_i64().unwrap() as i32, t["k"].as_u64().unwrap() as u32, t["l"].as_u64().unwrap() as u32))
        .collect();
    let mut sorted = monos.clone();
    sorted.sort();
    assert_eq!(monos, sorted);
    assert_eq!(list.iter().find(|t| t["a_power"] == -1).unwrap()["coeff"], "q");
}

#[test]
fn scalar_with_denominator_round_trip() {
    let s: ScalarQ = serde_json::from_str("\"(1 - q^2)/(1 + q^2 + q^4)\"").unwrap();
    let again: ScalarQ = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(s, again);
    assert!(serde_json::from_str::<ScalarQ>("\"(1 + q\"").is_err());
}

#[test]
fn spectral_report_round_trip() {
    let mut cfg = RunConfig::new(Command::Spectrum);
    cfg.n_range = NRange { lo: 0, hi: 1 };
    cfg.filtration = 2;
    let r = build_spectral_report(&cfg).unwrap();
    assert!(r.blocks.iter().any(|b| b.side == Side::Right));
    let text = serde_json::to_string(&r).unwrap();
    let back: SpectralReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}
