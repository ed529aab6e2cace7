use std::fmt;

use serde::Serialize;

use crate::quantum_group::AlgebraElement;
use crate::Scalar;

/// Left-invariant 1-form `c_- eta_- + c_0 eta_0 + c_+ eta_+`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantForm<S> {
    pub c: [S; 3],
}

impl<S: Scalar> InvariantForm<S> {
    pub fn new(c_minus: S, c_zero: S, c_plus: S) -> Self {
        InvariantForm { c: [c_minus, c_zero, c_plus] }
    }

    pub fn zero() -> Self {
        InvariantForm { c: std::array::from_fn(|_| S::zero()) }
    }

    pub fn basis(i: usize) -> Self {
        InvariantForm { c: std::array::from_fn(|j| if i == j { S::one() } else { S::zero() }) }
    }

    pub fn c_minus(&self) -> &S {
        &self.c[0]
    }
    pub fn c_zero(&self) -> &S {
        &self.c[1]
    }
    pub fn c_plus(&self) -> &S {
        &self.c[2]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_negligible())
    }
}

/// A 1-form on the total space in left-trivialised coordinates
/// `sum_i coeff_i eta_i`.
#[derive(Clone, PartialEq)]
pub struct TotalForm1<S: Scalar> {
    pub c: [AlgebraElement<S>; 3],
}

/// A 2-form in the basis `eta_- eta_+, eta_- eta_0, eta_0 eta_+`.
#[derive(Clone, PartialEq)]
pub struct TotalForm2<S: Scalar> {
    pub c: [AlgebraElement<S>; 3],
}

macro_rules! total_form_common {
    ($t:ident) => {
        impl<S: Scalar> $t<S> {
            pub fn zero() -> Self {
                $t { c: std::array::from_fn(|_| AlgebraElement::zero()) }
            }

            pub fn is_zero(&self) -> bool {
                self.c.iter().all(|x| x.is_zero())
            }

            pub fn scale(&self, s: &S) -> Self {
                $t { c: std::array::from_fn(|i| self.c[i].scale(s)) }
            }

            pub fn add(&self, other: &Self) -> Self {
                $t { c: std::array::from_fn(|i| &self.c[i] + &other.c[i]) }
            }

            pub fn sub(&self, other: &Self) -> Self {
                $t { c: std::array::from_fn(|i| &self.c[i] - &other.c[i]) }
            }
        }

        impl<S: Scalar> fmt::Debug for $t<S> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[{}; {}; {}]", self.c[0], self.c[1], self.c[2])
            }
        }
    };
}

total_form_common!(TotalForm1);
total_form_common!(TotalForm2);

impl<S: Scalar> TotalForm1<S> {
    pub fn new(coeff_minus: AlgebraElement<S>, coeff_zero: AlgebraElement<S>, coeff_plus: AlgebraElement<S>) -> Self {
        TotalForm1 { c: [coeff_minus, coeff_zero, coeff_plus] }
    }

    pub fn coeff_minus(&self) -> &AlgebraElement<S> {
        &self.c[0]
    }
    pub fn coeff_zero(&self) -> &AlgebraElement<S> {
        &self.c[1]
    }
    pub fn coeff_plus(&self) -> &AlgebraElement<S> {
        &self.c[2]
    }

    /// Drops the `eta_0` component.
    pub fn horizontal(&self) -> Self {
        TotalForm1 { c: [self.c[0].clone(), AlgebraElement::zero(), self.c[2].clone()] }
    }
}

impl<S: Scalar> TotalForm2<S> {
    /// Coefficient of `dvol = eta_- eta_+`.
    pub fn dvol(&self) -> &AlgebraElement<S> {
        &self.c[0]
    }

    pub fn is_horizontal(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }
}
