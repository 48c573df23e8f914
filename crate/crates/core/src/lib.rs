//! Vanishing ideals of sets over finite prime fields that are parameterized by
//! rational functions, their Hilbert-function invariants, and the basic
//! parameters of the associated projective Reed–Muller-type codes.

pub mod error;
pub mod exec;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod parser;
pub mod points;
pub mod poly;
pub mod rmcode;
pub mod vanishing;

pub use error::{Error, Result};
pub use exec::{Config, Exec};
pub use field::{FieldElement, PrimeField};
pub use groebner::{GroebnerBasis, Ideal};
pub use parser::{parse_polynomial, parse_spec, Mode, ParameterizationSpec};
pub use poly::{Monomial, MonomialOrder, Polynomial, RationalFunction, Ring, RingRef};
