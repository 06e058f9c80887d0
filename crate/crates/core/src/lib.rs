//! Rational `(m, n)`-parking functions and the dynamics attached to them.
//!
//! The crate is organised by the objects words act on:
//!
//! * [`words`]: parking words, Dyck paths and their text codecs.
//! * [`weyl`]: the piecewise-linear action of letters on the sorted sum-zero
//!   chamber, permutation traces, centroids, orbit analysis and affine windows.
//! * [`invset`]: bounded, co-bounded invariant subsets of the integers, their
//!   generators and skeletons, the generator-removal action, the associated
//!   monotone parking function and the Dyck-path map.
//! * [`pak_stanley`]: the Pak-Stanley map on restricted windows and its two
//!   inverse algorithms.
//! * [`oracle`]: brute-force cross-checks and named verification suites.
//!
//! All arithmetic is exact. Sweeps over words and sets run through
//! [`par::Execution`], which uses rayon when the `parallel` feature is on.

pub mod budget;
pub mod error;
pub mod invset;
pub mod oracle;
pub mod pak_stanley;
pub mod par;
pub mod weyl;
pub mod words;

pub use error::{Error, Result};
pub use invset::{Decomposition, InvariantSet, Skeleton, Theta};
pub use par::Execution;
pub use weyl::{AffineWindow, AmbientPoint, OrbitReport, Permutation, WeylPoint};
pub use words::{DyckPath, ParkingWord};
