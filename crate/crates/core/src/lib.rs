//! Lucas, Fibonacci, Chebyshev and Dickson polynomials, generated both by
//! their three-term recurrences and as traces of powers and symmetric tensor
//! powers of 2×2 companion matrices.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and the
//! only division anywhere is [`BivarPoly::halve_exact`], which fails instead
//! of rounding.
//!
//! ```
//! use dickson::{families::{family_recurrence, family_trace}, FamilyId};
//!
//! let by_recurrence = family_recurrence(FamilyId::ChebyshevT, 5);
//! let by_trace = family_trace(FamilyId::ChebyshevT, 5).unwrap();
//! assert_eq!(by_recurrence, by_trace);
//! assert_eq!(by_trace.to_string(), "16x^5 - 20x^3 + 5x");
//! ```

pub mod error;
pub mod families;
pub mod identities;
pub mod matrix;
pub mod parallel;
pub mod poly;
pub mod seq_eval;

pub use error::{Error, Result};
pub use families::FamilyId;
pub use identities::VerificationReport;
pub use matrix::PolyMatrix;
pub use parallel::Exec;
pub use poly::{BivarPoly, Style};

pub use num_bigint::BigInt;
