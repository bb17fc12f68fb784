//! Exact computation in R. Thompson's group F with generators `x0, x1`.
//!
//! Elements are canonical forest-pair diagrams ([`Diagram`]); the word length
//! is computed from the diagram ([`metric::norm`]) and checked against
//! breadth-first enumeration of the Cayley graph ([`cayley`]). The remaining
//! modules cover the normal-form language and its growth series
//! ([`growth_lang`]), density of finite subgraphs ([`subgraphs`]), the
//! density witness family ([`gamma_family`]), and piecewise-linear maps as an
//! independent equality check ([`plmaps`]).

pub mod cayley;
pub mod diagrams;
pub mod error;
pub mod flow;
pub mod gamma_family;
pub mod growth_lang;
pub mod metric;
pub mod plmaps;
pub mod scalar;
pub mod subgraphs;
pub mod words;

pub use diagrams::{Diagram, Forest, NormalForm, Tree};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use words::{parse_word, GenWord, Letter, Sign};

/// Exact rational used for densities and ratios.
pub type Rational = num_rational::Ratio<num_bigint::BigInt>;
/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;
/// Density computed as a float, for reporting.
pub type DensityF64 = f64;
