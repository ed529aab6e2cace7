//! The 3D calculus on SU_q(2), the 1D calculus on U(1), and the canonical
//! connection.

mod connection;
mod forms;
mod geometry;
pub mod germs;
mod maps;
mod tables;

pub use connection::{unit_displacement, RegularSolutions};
pub use forms::{InvariantForm, TotalForm1, TotalForm2};
pub use geometry::{Geometry, Jet};
pub use germs::{adopted_ideal, ideal_family, listed_ideal, GermQuotient, CLASS_MONOMIALS};
pub use maps::{GermMaps, Rho};
pub use tables::{
    omega2_dimension, representatives, CalculusTables, CircleCalculus, GermsData, TwoFormQuotient, MINUS, PLUS, TWO_FORM_BASIS, ZERO,
};

