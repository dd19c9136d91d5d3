//! The Block Lie algebra over `Z`, its Verma modules, and a decision
//! procedure for quasifinite irreducibility.
//!
//! Everything is generic over a [`Scalar`]; the aliases below fix the
//! scalars to exact rationals.

pub mod algebra;
pub mod criterion;
pub mod error;
pub mod files;
pub mod laurent;
pub mod linalg;
pub mod oracle;
pub mod order;
pub mod scalar;
pub mod verma;

pub use algebra::BasisSymbol;
pub use criterion::{AnalysisParams, Report, Verdict};
pub use error::{Error, Result};
pub use order::{GammaGroup, OrderSpec, OrderVerdict};
pub use scalar::{parse_rational, Scalar};
pub use verma::{PbwMonomial, RowCertificate, Strategy};

pub type Rational = num_rational::BigRational;
pub type Element = algebra::LieElement<Rational>;
pub type Realized = algebra::RealizedElement<Rational>;
pub type Laurent = laurent::LaurentPoly<Rational>;
pub type Weight = verma::Weight<Rational>;
pub type Recurrence = verma::Recurrence<Rational>;
pub type Vector = verma::ModuleVector<Rational>;
pub type Word = verma::LieWord<Rational>;
pub type Witness = criterion::WitnessPolynomial<Rational>;
pub type Series = criterion::SeriesWindow<Rational>;
