//! Generalized twisted quantum doubles of finite subgroups of SU(2).
//!
//! The crate builds the quasi-Hopf algebra `D^w(G, N)` for a finite group
//! `G`, a normal subgroup `N` and a 3-cocycle `w` on `G/N`, classifies its
//! simple modules, computes fusion rules exactly, and assembles the McKay
//! graph obtained by tensoring with the natural 2-dimensional module.
//!
//! All arithmetic is exact, in cyclotomic fields.

pub mod chartab;
pub mod cocycle;
pub mod config;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod group;
pub mod linalg;
pub mod matrix;
pub mod mckay;
pub mod modp;
pub mod par;
pub mod polyhedral;
pub mod qdouble;
pub mod rational;

pub use cyclotomic::{Cyclotomic, Root};
pub use error::{Error, Result};
pub use group::{ConjugacyClass, FiniteGroup, QuotientMap, Subgroup};
pub use par::Exec;
pub use rational::Rational;
