//! Exact computer algebra for the quantum Hopf fibration SU_q(2) -> S^2_q.

pub mod bundles;
pub mod calculus;
pub mod checks;
pub mod conventions;
pub mod coefficients;
mod error;
pub mod linalg;
pub mod quantum_group;
mod scalar;
pub mod sphere;
pub mod yang_mills;

pub use coefficients::{q_binomial, q_number, LaurentPoly, ScalarQ};
pub use error::{CoeffError, Error, Result};
pub use quantum_group::{AlgebraElement, Generator, Homogeneity, Monomial, QuantumGroup, TensorElement};
pub use scalar::Scalar;

pub type ExactGroup = QuantumGroup<ScalarQ>;
pub type RationalGroup = QuantumGroup<num_rational::BigRational>;
pub type NumericGroup = QuantumGroup<f64>;
