use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

use crate::coefficients::ScalarQ;

/// Coefficient field of the algebra.
///
/// The same code runs over exact Q(q), exact rationals at a fixed q, and
/// floating point at a fixed q.
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + Send + Sync + 'static {
    /// True when equality tests are exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    /// Zero test used when pruning terms. Floating types use a tolerance.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Preference for pivots in elimination; larger is better.
    fn pivot_score(&self) -> f64 {
        if self.is_negligible() {
            0.0
        } else {
            1.0
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn powi(&self, e: i32) -> Self {
        let base = if e < 0 { self.inverse().expect("zero to a negative power") } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * b.clone();
            }
            n >>= 1;
            if n > 0 {
                b = b.clone() * b;
            }
        }
        acc
    }

    /// Approximate real value, when the element is a number.
    fn approx(&self) -> Option<f64>;

    /// Canonical text.
    fn render(&self) -> String;
}

impl Scalar for ScalarQ {
    const EXACT: bool = true;
    fn from_i64(v: i64) -> Self {
        ScalarQ::from_int(v)
    }
    fn from_rational(r: &BigRational) -> Self {
        ScalarQ::from_rational(r.clone())
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn powi(&self, e: i32) -> Self {
        self.pow(e)
    }
    fn approx(&self) -> Option<f64> {
        self.constant_f64()
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn approx(&self) -> Option<f64> {
        self.to_f64()
    }
    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn from_rational(r: &BigRational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn is_negligible(&self) -> bool {
                self.abs() < $tol
            }
            fn pivot_score(&self) -> f64 {
                self.abs() as f64
            }
            fn approx(&self) -> Option<f64> {
                Some(*self as f64)
            }
            fn render(&self) -> String {
                format!("{:e}", self)
            }
        }
    };
}

float_scalar!(f64, 1e-13);
float_scalar!(f32, 1e-5);

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn powers_agree_across_fields() {
        let q = ScalarQ::q();
        assert_eq!(Scalar::powi(&q, -3), ScalarQ::q_pow(-3));
        let h = BigRational::new(1.into(), 2.into());
        assert_eq!(h.powi(-2), BigRational::from_integer(4.into()));
        assert!((0.5f64.powi(3) - 0.125).abs() < 1e-15);
        assert!(BigRational::one().inverse().is_some());
    }
}
