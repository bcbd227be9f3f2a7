//! Spaces of invariant functions for finite group actions.
//!
//! Given a finite group `G` acting on a finite set `X`, this crate computes the
//! space `L^G(X)` of functions `X → ℂ` that are constant along the action,
//! together with the structure that comes with it: orbit-indicator bases, the
//! fixed-point formula for its dimension, orthogonal projection and Bessel's
//! inequality under the normalized inner product, the kernel of the summation
//! functional, and restriction and induction between `L(X)` and `L(Y)` for an
//! invariant subset `Y`, including an exact check of Frobenius reciprocity.
//! In the other direction, [`partition_group`] builds a permutation group whose
//! orbits are a prescribed partition.
//!
//! All scalars are exact Gaussian rationals ([`GaussianRational`]), so every
//! identity is checked as an equality.
//!
//! ```
//! use std::sync::Arc;
//! use fixedspace::{FiniteGroup, GroupAction, Rational};
//!
//! let z4 = Arc::new(FiniteGroup::cyclic(4));
//! let action = GroupAction::translation(z4.clone());
//! let h = z4.subgroup_generated(&[2]);
//! assert_eq!(action.burnside_dimension(&h).unwrap(), Rational::from(2usize));
//! ```

#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod action;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exact_arith;
pub mod function_space;
pub mod group;
pub mod json;
pub mod partition_group;
pub mod res_ind;

pub use action::{ActionError, GroupAction, Partition, PartitionError, Point};
pub use error::Error;
pub use exact_arith::{GaussianRational, Rational};
pub use function_space::{FunctionError, FunctionOnX};
pub use group::{Element, FiniteGroup, GroupError, Permutation, PermutationGroup, Subgroup};
pub use res_ind::{FunctionOnY, InvariantSubset, ResIndError};
