//! Exact-arithmetic workbench for finite-sums (Hindman), pairwise-sum (Owings)
//! and Δ-system constructions.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and vectors
//! are sparse maps from basis indices to rationals. Searches and
//! constructions produce certificates that can be re-checked by direct
//! evaluation.

pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod delta;
pub mod error;
pub mod exact;
pub mod search;
pub mod semigroup;
pub mod sumsets;
pub mod verify;

pub use certificate::{Certificate, Payload, Verdict};
pub use coloring::{ColorValue, Coloring, ColoringName, ColoringSpec, Point};
pub use delta::{extract_delta_system, verify_delta_system, DeltaSystem, SetFamily};
pub use error::{Error, Result};
pub use exact::{Pattern, QVec, Rat};
pub use search::{Budget, Meter};
pub use semigroup::{Carrier, FinSemigroup, Naturals};
