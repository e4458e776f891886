//! The action groupoid functor `⋉`, the adjunction `⋉ ⊣ Bis` with unit
//! `const` and counit `ev`, the comonad `B = ⋉ ∘ Bis`, the reconstruction
//! of `G` as a quotient of `B(G)`, and limit preservation by `Bis`.

mod adjunction;
mod comonad;
mod groupoid;
mod limits;
mod reconstruction;

pub use adjunction::{
    const_unit, constant_section, curry_hom, ev_counit, ltimes_bijection_laws, ltimes_hom_sets,
    ltimes_naturality_in_group, ltimes_naturality_in_groupoid, triangle_bis, triangle_ltimes, uncurry_hom,
    LtimesHomSets,
};
pub use comonad::{comultiplication, comultiplication_section, ComonadTables, ComultiplicationTables};
pub use groupoid::{
    b_on_morphism, bisection_action, bisection_action_of, ltimes, ltimes_on_morphism, ActionGroupoid,
    BisectionAction,
};
pub use limits::{kernel_preservation, pullback_preservation};
pub use reconstruction::{quotient_reconstruction_laws, reconstruct, reconstruction_relation, Reconstruction};

#[cfg(test)]
mod tests;
