//! Exact differential-operator representations of linear operators on the
//! real polynomial ring.
//!
//! Every linear operator `T` on `R[x]` has a unique expansion
//! `T = sum_k Q_k(x) D^k`. This crate computes prefixes of that expansion,
//! classifies the degree pattern of the `Q_k`, evaluates closed forms for
//! several operator families, builds truncated operator symbols, and decides
//! hyperbolicity and zero interlacing with Sturm chains. All arithmetic is
//! exact over the rationals.

pub mod bases;
pub mod catalog;
pub mod diffrep;
pub mod error;
pub mod operators;
pub mod poly;
pub mod rational;
pub mod realroot;
pub mod symbol;

pub use bases::{BasisSpec, SequenceSpec};
pub use diffrep::{DiffOpPrefix, MonotoneVerdict, OrderEvidence};
pub use error::{Error, Result};
pub use operators::{FunctionalSpec, OperatorSpec, PreserveReport};
pub use poly::{Degree, Poly};
pub use rational::Rational;
pub use realroot::{Hyperbolicity, Isolation, SturmChain};
pub use symbol::TruncatedBiSeries;
