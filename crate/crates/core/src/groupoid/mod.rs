//! Finite groupoids over a fixed base, morphisms over the identity of the
//! base, standard constructions, hom-set enumeration and quotients.

mod enumerate;
#[allow(clippy::module_inception)]
mod groupoid;
mod morphism;
mod quotient;
mod standard;

pub use enumerate::{enumerate_group_homs, enumerate_morphisms, enumerate_morphisms_filtered};
pub use groupoid::{FiniteGroupoid, GroupoidAxiom, GroupoidTables, GroupoidViolation};
pub use morphism::{check_morphism, GroupoidMorphism};
pub use quotient::{check_effective_quotient, factor_through, quotient_groupoid, ArrowCongruence};
pub use standard::{group_over_point, kernel, pair_groupoid, pullback, trivial_groupoid, unit_groupoid, wide_subgroupoid};
