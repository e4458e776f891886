//! Exact finite group theory: groups as multiplication tables, subgroups,
//! homomorphisms, left actions, cosets and normal cores.

mod action;
mod group;
mod hom;
mod perm;
mod subgroup;

pub use action::GroupAction;
pub use group::{validate_group, AxiomViolation, FiniteGroup, GroupAxiom};
pub use hom::{check_hom, GroupHom};
pub use perm::{all_permutations, Permutation, SymmetricGroup};
pub use subgroup::{normal_core, quotient_group, CosetSpace, Subgroup};
