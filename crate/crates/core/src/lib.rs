//! Exact enumeration of Catalan words avoiding three-letter vincular patterns.
//!
//! A Catalan word is a sequence of positive integers starting at 1 in which
//! each letter exceeds its predecessor by at most one. This crate counts the
//! words of each length that avoid a given dashed pattern in several
//! independent ways, so that the results can be checked against each other:
//!
//! - [`enumerate`] generates words exhaustively and filters them through the
//!   occurrence matcher in [`words`]. This is the ground truth.
//! - [`counters`] fills refined recurrence tables and evaluates closed forms.
//! - [`genfun`] expands generating functions as truncated power series over
//!   exact rationals, built on [`series`].
//! - [`bijections`] holds the constructive maps between words, Dyck paths,
//!   Motzkin paths and marked words.
//!
//! The numeric core is generic. Counting recurrences run over any [`Count`]
//! type and power series over any [`Field`]; the aliases below fix the exact
//! arbitrary-precision choices used everywhere by default.
//!
//! ```
//! use vincular::counters::sequence_by_recurrence;
//! use vincular::genfun::series_for;
//! use vincular::{parse_pattern, Int, QSeries};
//!
//! let p = parse_pattern("21-2")?;
//! let counts: Vec<Int> = sequence_by_recurrence(&p, 30)?;
//! let series: QSeries = series_for(&p, 30)?;
//! assert_eq!(series.to_integers()?[30], counts[29].clone().into());
//! # Ok::<(), vincular::Error>(())
//! ```

pub mod bijections;
pub mod counters;
pub mod enumerate;
mod error;
pub mod genfun;
pub mod golden;
mod scalar;
pub mod series;
pub mod words;

pub use error::{Error, Result};
pub use scalar::{Count, Field};
pub use words::{avoids, find_occurrence, parse_pattern, CatalanWord, Occurrence, VincularPattern};

/// Arbitrary-precision counting type used by default.
pub type Int = num_bigint::BigUint;

/// Exact rational scalar used for generating-function work.
pub type Rational = num_rational::BigRational;

/// Truncated power series with exact rational coefficients.
pub type QSeries = series::Series<Rational>;

/// Refined recurrence table with arbitrary-precision entries.
pub type IntTable = counters::RefinedTable<Int>;
