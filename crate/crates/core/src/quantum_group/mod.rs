//! SU_q(2): PBW normal forms, star, Hopf structure, grading and Haar state.

mod element;
mod group;
mod haar;
mod monomial;

pub use element::{AlgebraElement, Homogeneity, TensorElement};
pub use group::QuantumGroup;
pub use monomial::{Generator, Monomial};
