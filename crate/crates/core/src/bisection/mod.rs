//! Bisections of a finite groupoid and the bisection group `Bis(G)`.
//!
//! The product is `(σ ⋆ τ)(x) = σ(β(τ(x)))·τ(x)` and the inverse
//! `σ⁻¹(x) = ι(σ((β∘σ)⁻¹(x)))`. `β_*: σ ↦ β∘σ` makes `Bis(G)` an object
//! of the slice over `Sym(M)`.

mod group;
mod section;
mod slice;

pub use group::{
    arrow_without_bisection, beta_star, bis_on_morphism, enumerate_bisections, enumerate_sections,
    has_bisection_through_each_arrow, section_name, stabilizer_subgroups, BisectionGroup,
};
pub use section::{check_bisection, Bisection};
pub(crate) use section::star_tables;
pub use slice::{enumerate_slice_morphisms, SliceMorphism, SlicedGroupHom};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, Permutation};
    use crate::groupoid::{group_over_point, pair_groupoid, unit_groupoid};
    use crate::{Error, Limits};

    fn objs(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    // In P(M) a bisection is determined by f = β∘σ: σ(x) = (f(x), x).
    fn pair_bisection(p: &crate::groupoid::FiniteGroupoid, f: &Permutation) -> Bisection {
        let m = f.len();
        Bisection::new(p, (0..m).map(|x| f.apply(x) * m + x).collect()).unwrap()
    }

    #[test]
    fn star_on_pair_groupoid_is_composition() {
        let p3 = pair_groupoid(&objs(3));
        let perms = crate::algebra::all_permutations(3);
        for f in &perms {
            for h in &perms {
                let s = pair_bisection(&p3, f);
                let t = pair_bisection(&p3, h);
                let st = s.star(&t, &p3).unwrap();
                assert_eq!(st, pair_bisection(&p3, &f.compose(h)));
            }
        }
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p3 = pair_groupoid(&objs(3));
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap(); // (123)
        let s = pair_bisection(&p3, &c);
        assert_eq!(s.invert(&p3).unwrap(), pair_bisection(&p3, &c.inverse()));
        assert_eq!(c.inverse().cycle_notation(&objs(3)), "(132)");
        let unit = Bisection::unit(&p3);
        assert_eq!(s.star(&s.invert(&p3).unwrap(), &p3).unwrap(), unit);
        assert_eq!(s.star(&unit, &p3).unwrap(), s);
        assert_eq!(unit.invert(&p3).unwrap(), unit);
    }

    #[test]
    fn mixed_groupoids_rejected() {
        let p3 = pair_groupoid(&objs(3));
        let u3 = unit_groupoid(&objs(3));
        let s = Bisection::unit(&p3);
        let t = Bisection::unit(&u3);
        assert!(matches!(s.star(&t, &p3), Err(Error::MixedGroupoids)));
    }

    #[test]
    fn non_bisections_rejected() {
        let p3 = pair_groupoid(&objs(3));
        // (1,1),(1,2),(3,3): target 1 hit twice
        assert!(Bisection::new(&p3, vec![0, 1, 8]).is_err());
        // wrong source
        assert!(Bisection::new(&p3, vec![1, 4, 8]).is_err());
    }

    #[test]
    fn pair_groupoid_bisections_are_sym3() {
        let p3 = pair_groupoid(&objs(3));
        let bis = enumerate_bisections(&p3, &Limits::default()).unwrap();
        assert_eq!(bis.order(), 6);
        let (sym, hom) = beta_star(&bis).to_sym(720).unwrap();
        assert!(hom.is_bijective(sym.group()));
        for i in 0..6 {
            let s = bis.bisection(&p3, i);
            assert_eq!(s.invert(&p3).unwrap().invert(&p3).unwrap(), s);
        }
    }

    #[test]
    fn small_bisection_groups() {
        let l = Limits::default();
        assert_eq!(enumerate_bisections(&unit_groupoid(&objs(3)), &l).unwrap().order(), 1);
        let z2 = group_over_point(&FiniteGroup::cyclic(2), "*");
        let bis = enumerate_bisections(&z2, &l).unwrap();
        assert_eq!(bis.order(), 2);
        assert!(beta_star(&bis).permutations().iter().all(Permutation::is_identity));
        let (loops, fixed) = stabilizer_subgroups(&z2, &bis, 0).unwrap();
        assert_eq!((loops.order(), fixed.order()), (2, 1));
    }

    #[test]
    fn pair_groupoid_stabilizers() {
        let p3 = pair_groupoid(&objs(3));
        let bis = enumerate_bisections(&p3, &Limits::default()).unwrap();
        let (loops, fixed) = stabilizer_subgroups(&p3, &bis, 0).unwrap();
        assert_eq!(loops, fixed);
        assert_eq!(loops.order(), 2);
        assert!(matches!(stabilizer_subgroups(&p3, &bis, 3), Err(Error::PointNotInBase(3))));
    }

    #[test]
    fn caps_are_errors() {
        let p3 = pair_groupoid(&objs(3));
        let tight = Limits {
            search_nodes: 4,
            group_order: 720,
        };
        assert!(matches!(enumerate_bisections(&p3, &tight), Err(Error::CapExceeded { .. })));
        let small = Limits {
            search_nodes: 1000,
            group_order: 5,
        };
        assert!(matches!(enumerate_bisections(&p3, &small), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn every_arrow_lies_on_a_bisection() {
        let p3 = pair_groupoid(&objs(3));
        for a in p3.arrows() {
            let s = Bisection::through(&p3, a);
            assert!(check_bisection(&p3, s.section()).is_ok());
            assert!(s.section().contains(&a));
        }
    }
}
