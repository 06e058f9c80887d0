//! The action of letters on the sorted, sum-zero chamber `V^m`.
//!
//! Letter `i` adds `m` to coordinate `i`, subtracts `1` from every
//! coordinate, and resorts. Points carry exact rational coordinates with a
//! common denominator, so equality tests in cycle detection are exact.

mod action;
mod centroid;
mod orbit;
mod point;
mod window;

pub use action::{
    act_letter, act_letter_unbalanced, act_word, act_word_unbalanced, star_shift, ActionTrace,
    TraceStep,
};
pub use centroid::{fundamental_centroid, is_centroid, is_centroid_coords, residue_partition};
pub use orbit::{find_fixed_point, find_fixed_point_default, orbit_analysis, OrbitReport};
pub use point::{AmbientPoint, Permutation, Rational, WeylPoint};
pub use window::{centroid_of_alcove, enumerate_sommers_windows, AffineWindow};
