//! Exact arithmetic for the forests of rooted infinite binary trees of
//! positive rationals generated by the matrix pair `L_u = [[1,0],[u,1]]`,
//! `R_v = [[1,v],[0,1]]`.
//!
//! The `(1,1)` case is the Calkin-Wilf tree. For general `(u, v)` the
//! orphans, the rationals in `[1/u, v]`, are the tree roots, and the
//! forest partitions the positive rationals. Mirror positions of the
//! `(u,v)` tree at `z` and the `(v,u)` tree at `1/z` multiply to 1.
//!
//! Everything is computed over arbitrary-precision integers; there is no
//! floating point anywhere. All values are immutable and all operations
//! are pure.

pub mod classical;
pub mod forest;
pub mod matrix;
pub mod rational;
pub mod verify;

pub use forest::{ForestConfig, TreeAddress};
pub use matrix::{Letter, Mat2, PathWord};
pub use rational::Rational;
pub use verify::VerificationReport;
