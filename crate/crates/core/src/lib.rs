//! Binomial ideals of linear codes over finite fields: code ideals, Graver
//! bases and universal Gröbner bases, together with the linear algebra,
//! toric-ideal and Buchberger machinery underneath them.

pub mod binomial;
pub mod cone;
pub mod error;
pub mod field;
pub mod generators;
pub mod graver;
pub mod groebner;
pub mod io;
pub mod matrices;
pub mod order;
pub mod toric;
pub mod universal;

pub use binomial::{Binomial, BinomialSet, ExponentVector, VariableBlock, VariableSpace};
pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField, Word};
pub use generators::IdealKind;
pub use matrices::{IntMatrix, LinearCode};
pub use order::MonomialOrder;
