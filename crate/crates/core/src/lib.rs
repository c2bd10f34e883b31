//! Exact computational toolkit for blocks of finite-dimensional modules over
//! minimal nilpotent W-algebras.
//!
//! The crate builds finite root systems and Weyl groups in exact arithmetic
//! and layers on top of them:
//!
//! * [`subalg`]: full-rank (Levi and Borel–de Siebenthal) root subsystems,
//!   ranked by dimension, with W-conjugacy testing;
//! * [`zigzag`]: the zigzag algebra of a graph as a structure-constant table;
//! * [`kfunctor`]: integer models of translation functors on Grothendieck
//!   groups;
//! * [`primid`]: τ-labels of the primitive ideals attached to the minimal
//!   two-sided cell;
//! * [`integral`]: integral root subsystems and the block-status decision
//!   procedure.
//!
//! Roots are stored in simple-root coordinates and weights in
//! fundamental-weight coordinates, both indexed with Bourbaki node numbering
//! (0-based internally, 1-based in every serialized form).
//!
//! Data-parallel loops go through [`exec::Exec`]; with the default `parallel`
//! feature they run on rayon, otherwise sequentially.

pub mod error;
pub mod exec;
pub mod integral;
pub mod kfunctor;
pub mod linalg;
pub mod primid;
pub mod rootsys;
pub mod subalg;
pub mod verify;
pub mod weyl;
pub mod zigzag;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rootsys::{DynkinType, Family, RootSystem, RootVec, Weight};
pub use weyl::WeylElement;

/// Exact rational scalar used throughout.
pub type Q = num_rational::Ratio<i64>;
