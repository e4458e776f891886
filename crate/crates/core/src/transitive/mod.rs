//! Transitive pairs `(θ, H)`, the gauge groupoid functor `R`, the canonical
//! morphisms `a` and `χ`, the augmented bisection functor `Bis̄`, and the
//! coreflection `E = R∘Bis̄`.

mod bundle;
mod canonical;
mod gauge;
mod laws;
mod pair;

pub use bundle::{build_bundle, PrincipalBundle};
pub use canonical::{
    a_canonical, a_kernel, a_section, a_section_with, augment, augment_with, bisbar, bisbar_on_morphism, chi_canonical,
    coreflector, Augmented, Coreflection,
};
pub use gauge::{gauge_groupoid, gauge_on_morphism, GaugeGroupoid};
pub use laws::{
    a_naturality, bisbar_or_skip, bundle_automorphism_law, bundle_automorphisms, canonical_laws, chi_naturality,
    coreflection_laws, equivalence_laws, gauge_laws, gauge_pair_groupoid_law, kernel_law, r_adjunction_naturality_in_groupoid,
    r_adjunction_naturality_in_pair, r_functor_laws, triangle_bisbar, triangle_bisbar_tables, triangle_gauge, unit_data,
    RAdjunction, UnitData,
};
pub use pair::{
    enumerate_pair_morphisms, pair_kernel, validate_pair_morphism, Flag, PairMorphism, PairMorphismReport, PairValidation,
    TransitivePair,
};

#[cfg(test)]
mod tests;
