//! Constructive procedures extracted from the existence arguments: greedy
//! bases with injective subset sums, the finite-semigroup pipeline, the
//! pair-coloring pullback, support arithmetic, pattern sequences for pairwise
//! sums, and the greedy sumset construction in interval sets.

pub mod baire;
pub mod greedy;
pub mod interval;
pub mod owings;
pub mod pipeline;
pub mod pullback;
pub mod support;

pub use baire::{baire_sumset_construct, BaireRun};
pub use greedy::{greedy_fs_basis, subset_sums, subset_sums_injective};
pub use interval::{Interval, IntervalSet};
pub use owings::{owings_fixture_from_coloring, owings_pattern_construct, PatternFixture};
pub use pipeline::{fin_fin_pipeline, PipelineCase, PipelineOptions, PipelineRun};
pub use pullback::{ramsey_pullback_fs, PullbackWitness};
pub use support::{support_arithmetic, support_arithmetic_check};
