//! Exact scalars and sparse vectors.

mod qvec;
mod rat;

pub use qvec::{BasisIndex, Pattern, QVec};
pub use rat::{canonical_cmp, Rat};
