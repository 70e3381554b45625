//! Incidence algebras of cobweb posets in exact arithmetic.
//!
//! A cobweb poset is designated by a sequence of level sizes `F_0, F_1, ...`:
//! level `s` holds `F_s` pairwise incomparable elements `⟨j,s⟩`, and every
//! element of a lower level lies below every element of a higher one.
//!
//! - [`sequence`]: the designating sequence and its generators.
//! - [`poset`], [`oracle`]: explicit finite posets and brute-force counting.
//! - [`incidence`]: the full incidence algebra over an explicit poset.
//! - [`reduced`]: the standard reduced algebra on rank pairs.
//! - [`verify`]: cross-checks of every closed form against enumeration.

pub mod error;
pub mod exact;
pub mod incidence;
pub mod named;
pub mod oracle;
pub mod poset;
pub mod reduced;
pub mod sequence;
pub mod verify;

pub use error::{Error, RankWitness, Result};
pub use exact::Exact;
pub use incidence::IncidenceFunction;
pub use named::StandardFunction;
pub use poset::{FinitePoset, Vertex};
pub use reduced::{incidence_coefficient, RankType, ReducedFunction};
pub use sequence::{FSequence, SequenceSpec};
