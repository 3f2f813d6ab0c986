//! Exact computations in the graded tilting category of quantum `sl2` at a
//! root of unity.
//!
//! Three models are implemented side by side and checked against each other:
//! explicit Weyl-module matrices ([`uqweyl`]), the zigzag quiver algebra and
//! its translation functors ([`quiver`], [`tiltcat`]), and the marked
//! two-colour Soergel diagram calculus with its evaluation functor
//! ([`soergel`], [`endofun`]).

pub mod alcove;
pub mod endofun;
pub mod error;
pub mod linalg;
pub mod quiver;
pub mod scalars;
pub mod soergel;
pub mod tiltcat;
pub mod uqweyl;
pub mod verify;

pub use error::{Error, Result};
pub use scalars::{CycScalar, LaurentPoly, Rational, RootOfUnitySpec};
