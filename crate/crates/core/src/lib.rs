//! Exact character theory for finite permutation groups.
//!
//! The crate enumerates a group from permutation generators, computes its
//! irreducible characters exactly (modular Dixon–Schneider with a lift to
//! cyclotomic integers), derives codegrees and codegree prime graphs, and
//! classifies groups whose non-linear codegrees are pairwise coprime.

pub mod chartable;
pub mod classifier;
pub mod codegree;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod modular;
pub mod numtheory;
pub mod oracles;
pub mod perm;
pub mod structure;

pub use error::{GroupError, Result};
pub use group::{ConjClass, Group, Quotient, Subgroup, DEFAULT_ORDER_BOUND};
pub use perm::Permutation;
pub use chartable::{character_kernel, character_table, inertia_group, CharacterTable};
pub use cyclotomic::CyclotomicInt;
pub use codegree::{cod_relative, codegree, prime_graph, CodegreeReport, PrimeGraph};
pub use classifier::{classify, classify_with_table, is_star_group, Branch, Certificate};
