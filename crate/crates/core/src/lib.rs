//! Finite groups given by multiplication tables, Cayley sum graphs over them,
//! and perfect / total perfect codes in those graphs.
//!
//! Everything here is allocation-only (`no_std` + `alloc`). File formats,
//! the command-line driver and parallel corpus runs live in the `cayley-sum`
//! companion crate.
//!
//! Elements of a group are dense indices `0..order`; subsets of a group are
//! [`ElementSet`]s. A [`Group`] materializes its full multiplication table,
//! inverses and conjugacy classes at construction time.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classes;
pub mod codes;
pub mod corpus;
pub mod enumerate;
mod error;
pub mod exact_cover;
pub mod families;
pub mod graph;
pub mod group;
pub mod quotient;
pub mod set;
pub mod subgroup;
pub mod suites;
pub mod v8n;

pub use classes::ConjugacyPartition;
pub use codes::{CodeKind, CodeScope, CodeWitness, CriterionReport};
pub use error::{Error, Result};
pub use families::GroupSpec;
pub use graph::{CayleySumGraph, ConnectionSet};
pub use group::{Arith, Element, FamilyTag, Group};
pub use quotient::QuotientResult;
pub use set::ElementSet;
pub use subgroup::Subgroup;
