//! Exact computation with congruences on tropical Laurent polynomial
//! semirings: congruence varieties as finite unions of rational polyhedral
//! cells, their dimensions and Booleanized (recession) counterparts, Krull
//! dimensions of the quotient semirings, and the prime-congruence machinery
//! of t-admissible matrices.
//!
//! All arithmetic is exact over the rationals; there is no floating point
//! anywhere in the crate.

pub mod canon;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod polyhedron;
pub mod prime;
pub mod rat;
pub mod scalar;
pub mod variety;

pub use canon::{canonicalize, func_eq};
pub use error::{Error, Result};
pub use poly::{Monomial, TropPoly};
pub use polyhedron::{equal_on, Extended, PolyhedralSet};
pub use rat::{clear_denominators, point_indicator, TropRat};
pub use scalar::{Rat, TropScalar};
