//! Exact arithmetic on integer partitions through their central hooks.
//!
//! The crate is organized around one free monoid. Every partition factors
//! uniquely as a product of 1-hooks ([`monoid`]); identifying partitions with
//! the same hook sizes gives a quotient monoid whose elements are difference
//! sequences multiplied by concatenation ([`quotient`]). The class sizes are
//! products of differences, which drives the exact counting formulas in
//! [`counting`]. [`series`] recomputes the same numbers from generating
//! functions and [`oracle`] recomputes them by brute force.
//!
//! ```
//! use hookmonoid::{factor, product, Partition};
//!
//! let dot: Partition = "1".parse().unwrap();
//! let square = product(&dot, &dot);
//! assert_eq!(square.parts(), &[2, 2]);
//! assert_eq!(factor(&square).len(), 2);
//! ```

pub mod counting;
pub mod error;
pub mod matrix;
pub mod monoid;
pub mod oracle;
pub mod partition;
pub mod quotient;
pub mod series;
pub mod verify;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

pub use counting::{DifferenceSet, PnrMethod, WeightExtremes};
pub use error::{Error, Result};
pub use matrix::{Shape, TriangularMatrix3};
pub use monoid::{durfee_split, factor, multiply_hooks, peel_inner, product, Hook};
pub use partition::{
    render, BoundedPartition, DifferenceSequence, FrobeniusSymbol, HookType, Orientation,
    Partition, RenderOptions,
};
pub use quotient::{ClassIndex, IndexSet};
pub use series::{GfForm, MultiPoly, Series, DEFAULT_TRUNCATION};

/// Coefficient ring for series and matrices.
pub trait Scalar: Clone + Num + FromPrimitive {}

impl<T: Clone + Num + FromPrimitive> Scalar for T {}

/// Unbounded natural numbers; every count in the crate has this type.
pub type Natural = BigUint;

pub type IntSeries = Series<BigInt>;
pub type RatSeries = Series<BigRational>;
pub type Matrix3 = TriangularMatrix3<BigUint>;
pub type IntMultiPoly = MultiPoly<BigInt>;
