use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::ScalarQ;

/// The q²-number `[r] = (1 - q^{2r}) / (1 - q^2)`.
///
/// For `r >= 1` this is the polynomial `1 + q^2 + ... + q^{2(r-1)}`. The
/// same formula is used for `r <= 0`, where `[-r] = -q^{-2r} [r]`.
pub fn q_number(r: i32) -> ScalarQ {
    if r >= 0 {
        ScalarQ::from_poly(LaurentPoly::from_terms((0..r).map(|j| (2 * j, num_rational::BigRational::one()))))
    } else {
        -(&ScalarQ::q_pow(2 * r) * &q_number(-r))
    }
}

/// Gaussian binomial coefficient at the given base.
///
/// Returns zero when `k > n`.
pub fn q_binomial(n: u32, k: u32, base: &ScalarQ) -> ScalarQ {
    if k > n {
        return ScalarQ::zero();
    }
    let one = ScalarQ::one();
    let mut num = ScalarQ::one();
    let mut den = ScalarQ::one();
    for i in 1..=k {
        num = &num * &(&one - &base.pow((n - k + i) as i32));
        den = &den * &(&one - &base.pow(i as i32));
    }
    &num / &den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_numbers() {
        assert_eq!(q_number(1), ScalarQ::one());
        assert_eq!(q_number(2), "1 + q^2".parse().unwrap());
        assert_eq!(q_number(3), "1 + q^2 + q^4".parse().unwrap());
        assert_eq!(q_number(0), ScalarQ::zero());
        assert_eq!(q_number(-1), "-q^-2".parse().unwrap());
    }

    #[test]
    fn binomial_base_q_minus_two() {
        let b = ScalarQ::q_pow(-2);
        assert_eq!(q_binomial(2, 1, &b), "1 + q^-2".parse().unwrap());
        assert_eq!(q_binomial(5, 0, &b), ScalarQ::one());
        assert_eq!(q_binomial(2, 3, &b), ScalarQ::zero());
    }
}
