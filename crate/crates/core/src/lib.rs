//! Thompson groups F, V, V̂ and the braided groups BV, BV̂.
//!
//! Normal forms for the positive monoid of F, canonical fractions in the hat
//! groups, the `L · M · R` forms and the word problem in V and BV, and checks of the
//! group presentations up to a bounded index.

pub mod braid;
pub mod error;
pub mod hat;
pub mod lmr;
pub mod perms;
pub mod presentations;
pub mod selftest;
pub mod syntax;
pub mod thompson_f;
pub mod words;

pub use error::{Budget, Error, Result};
pub use hat::{GroupMode, HatFraction};
pub use lmr::{BvMode, LmrForm};
pub use perms::Permutation;
pub use presentations::{Group, RelationInstance, Verdict};
pub use syntax::parse_word;
pub use thompson_f::FNormal;
pub use words::{Family, GenSymbol, Index, Sign, Word};
