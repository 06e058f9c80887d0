//! Bounded, co-bounded subsets `Δ ⊂ Z` closed under `+m` and `+n`.
//!
//! Words act by deleting generators: letter `j` removes the `j`-th smallest
//! `m`-generator. A parking word `p` with `p · Δ = Δ + n` exists for every
//! `(m, n)`-invariant set, and exactly one such `p` is monotone.

mod action;
mod decompose;
mod enumerate;
mod set;
mod skeleton;

pub use action::{act_letter_set, act_word_set, associated_monotone, equivalent, phi};
pub use decompose::{decompose, phi_extended, reassemble, same_region, Decomposition, Theta};
pub use enumerate::{enumerate_bounded_sets, enumerate_invariant_sets};
pub use set::InvariantSet;
pub use skeleton::{gamma, skeleton, EntryKind, Skeleton, SkeletonEntry};
