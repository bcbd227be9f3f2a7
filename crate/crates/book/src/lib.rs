//! The chapters of the guide in `book/src`, compiled so that every code
//! sample runs as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/actions.md")]
pub mod actions {}

#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}

#[doc = include_str!("../../../book/src/sigma.md")]
pub mod sigma {}

#[doc = include_str!("../../../book/src/reciprocity.md")]
pub mod reciprocity {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/corpus.md")]
pub mod corpus {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
