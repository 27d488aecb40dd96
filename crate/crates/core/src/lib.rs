//! Exact synthesis of the Hirzebruch chi_y-genus in Chern numbers, together
//! with the Hodge/Betti moment functionals and Chern-number constraints that
//! follow from expanding chi_y at y = -1.
//!
//! The algebraic kernel ([`YPolynomial`], [`TruncatedSeries`],
//! [`ChernPolynomial`]) is generic over a [`Scalar`] coefficient type.
//! Exact rationals are the default and the only type the checkers accept;
//! `f64` is available for quick numeric experiments. The aliases below pin
//! the kernel to exact arithmetic.
//!
//! ```
//! use chiy_core::{genus, ChernNumbers, Partition, Rational};
//!
//! let formula = genus::hrr_genus_formula::<Rational>(2);
//! let mut chern = ChernNumbers::new(2);
//! chern.insert(Partition::new([1, 1]), 9).unwrap();
//! chern.insert(Partition::new([2]), 3).unwrap();
//! let chi_y = genus::evaluate_genus(&formula, &chern).unwrap();
//! assert_eq!(chi_y.to_string(), "1 - y + y^2");
//! ```

pub mod chern;
pub mod constraints;
pub mod crosscheck;
pub mod error;
pub mod genus;
pub mod hodge;
pub mod localization;
pub mod partition;
pub mod report;
pub mod scalar;
pub mod series;
pub mod symmetric;
pub mod ypoly;

pub use chern::{ChernNumbers, ChernPolynomial};
pub use error::{Error, Result};
pub use hodge::{BettiVector, HodgeDiamond, MomentSpec, Tier};
pub use localization::{FixedPoint, FixedPointData};
pub use partition::Partition;
pub use report::{ConstraintReport, Quantity, Status};
pub use scalar::Scalar;
pub use series::{CoefficientMode, SeriesOp, TruncatedSeries};
pub use ypoly::YPolynomial;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub type RationalYPolynomial = YPolynomial<Rational>;
pub type RationalSeries = TruncatedSeries<Rational>;
pub type RationalChernPolynomial = ChernPolynomial<Rational>;

pub type FloatYPolynomial = YPolynomial<f64>;
pub type FloatSeries = TruncatedSeries<f64>;
pub type FloatChernPolynomial = ChernPolynomial<f64>;
