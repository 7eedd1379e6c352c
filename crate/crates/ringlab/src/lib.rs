//! Computational toolkit for finite associative unital rings.
//!
//! Rings are presented by structure constants over a basis of additive
//! generators (see [`FiniteRing`]), which keeps validation at basis scale and
//! element arithmetic bilinear. On top of that the crate computes radicals,
//! annihilators and ideal lattices, decides a family of ring-class predicates
//! with counterexample witnesses, builds the usual ring extensions, and
//! replays a catalog of algebraic results over a corpus of rings with a
//! deterministic, machine-readable report.

mod bits;

pub mod analysis;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod ideals;
pub mod parse;
pub mod predicates;
mod present;
pub mod ring;
pub mod set;
pub mod theorems;

pub use error::{Result, RingError};
pub use ring::{Caps, FiniteRing, RingElement, ValidationReport};
pub use set::{ElementSet, SetKind};
