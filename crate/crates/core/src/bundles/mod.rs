//! Associated bundles of winding n and their covariant Laplacians.

mod generators;
mod laplacian;
mod section;
mod tables;

pub use generators::{generator_set, verify_generators, GeneratorReport, GeneratorSet};
pub use laplacian::{chain_monomial, chain_start, commutation_witness_monomial, BundleForm, EigenPair, Side, SpectralBlock};
pub use section::Section;
pub use tables::{closed_form, growth_differences, growth_scan, reference_normalisation, display_row, row5_decomposition, GrowthScan, TableRow};
