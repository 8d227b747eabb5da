//! Exact computer algebra for the Hopf monoid of set compositions.

pub mod arrows;
pub mod error;
pub mod linalg;
pub mod products;
pub mod scalar;
pub mod setcomp;
pub mod species;
pub mod verify;
pub mod zie;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use setcomp::{Composition, FiniteSet, Label};
