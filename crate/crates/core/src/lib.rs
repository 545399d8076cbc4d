//! Balance of rectangles in Sturmian words.
//!
//! The slope `α` is given by a finite prefix of its continued fraction and
//! every comparison involving `α` is decided exactly from the convergents,
//! reporting [`Error::InsufficientDepth`] instead of guessing. All routines
//! are generic over the integer type; see [`Scalar`].

pub mod charact;
pub mod error;
pub mod exactalpha;
pub mod ostrowski;
pub mod scalar;
pub mod sweep;
pub mod torus;
pub mod words;

use num_bigint::BigInt;

pub use charact::{classify_xstar_shape, decide, BalanceVerdict, CaseTag, XStarShape};
pub use error::{Error, Result};
pub use exactalpha::{parse_alpha, ContinuedFraction, LinearForm, Side, Sign};
pub use ostrowski::{decode, encode, OstrowskiRep};
pub use scalar::Scalar;
pub use torus::{points_of_alpha, IntervalBalanceVerdict, TorusPointSet};
pub use words::{rect_weight, window_scan, FloorTable, WeightScanReport};

/// Exact slope for any depth.
pub type BigAlpha = ContinuedFraction<BigInt>;
/// Slope with `i128` convergents; fails with [`Error::Overflow`] past `q_K ≈ 10^38`.
pub type FastAlpha = ContinuedFraction<i128>;
pub type BigForm = LinearForm<BigInt>;
pub type FastForm = LinearForm<i128>;
pub type BigRep = OstrowskiRep<BigInt>;
pub type FastRep = OstrowskiRep<i128>;
