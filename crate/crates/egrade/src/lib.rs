//! Exact classification, construction and verification of special pure
//! gradings on the exceptional simple Lie algebras E6, E7 and E8.
//!
//! Everything is computed over the integers or over `F_2`: root systems and
//! their mod-2 quadratic forms, integral Chevalley bases with explicit
//! structure constants, elementary-2-group gradings assembled from totally
//! isotropic subspaces, Weyl-group stabilizers, and isomorphism invariants
//! for coarsenings. No floating point is involved anywhere, so every table
//! and group order produced here is exact.

pub mod chevalley;
mod error;
pub mod f2;
pub mod doc;
pub mod gradings;
pub mod invariants;
pub mod par;
pub mod quadform;
pub mod rootsys;
pub mod symmetry;

pub use error::{Error, Result};
pub use f2::{F2LinearMap, F2Subspace, F2Vector};
pub use gradings::{classify, GradingType, UniversalGrading};
pub use invariants::{compute_inv, is_isomorphic, weyl_orbit_oracle, CoarseGrading, InvSequence};
pub use quadform::QuadraticSpace;
pub use rootsys::{Kind, RootSystem};
pub use symmetry::{full_weyl_order, ws_membership, ws_order};
