use super::*;
use crate::algebra::{FiniteGroup, GroupAction, SymmetricGroup};
use crate::bisection::{enumerate_bisections, SliceMorphism, SlicedGroupHom};
use crate::groupoid::{enumerate_morphisms, group_over_point, pair_groupoid, unit_groupoid, FiniteGroupoid};
use crate::harness::engine::{all_pass, run_all, Status};
use crate::Limits;

fn objs(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn swap_m2() -> SlicedGroupHom {
    let act = GroupAction::from_fn(FiniteGroup::cyclic(2), objs(2), |k, x| if k == 1 { 1 - x } else { x }).unwrap();
    SlicedGroupHom::from_action(&act)
}

fn s3_natural() -> SlicedGroupHom {
    let sym = SymmetricGroup::on(&objs(3), 720).unwrap();
    let act = GroupAction::from_fn(sym.group().clone(), objs(3), |k, x| sym.permutation(k).apply(x)).unwrap();
    SlicedGroupHom::from_action(&act)
}

// Oracle: count sections of α with bijective β∘σ over all |α⁻¹(x)| choices.
fn brute_force_bisections(g: &FiniteGroupoid) -> usize {
    fn rec(g: &FiniteGroupoid, x: usize, chosen: &mut Vec<usize>) -> usize {
        if x == g.object_count() {
            let mut targets: Vec<usize> = chosen.iter().map(|&a| g.target(a)).collect();
            targets.sort_unstable();
            targets.dedup();
            return usize::from(targets.len() == g.object_count());
        }
        let mut n = 0;
        for a in g.arrows().filter(|&a| g.source(a) == x) {
            chosen.push(a);
            n += rec(g, x + 1, chosen);
            chosen.pop();
        }
        n
    }
    rec(g, 0, &mut Vec::new())
}

#[test]
fn action_groupoid_shapes() {
    let z = ltimes(&swap_m2());
    assert_eq!(z.groupoid().arrow_count(), 4);
    assert!(z.groupoid().check_axioms().is_ok());
    assert!(z.groupoid().is_locally_trivial());
    let s = ltimes(&s3_natural());
    assert_eq!(s.groupoid().arrow_count(), 18);
    assert!(s.groupoid().check_axioms().is_ok());
    assert!(s.groupoid().is_locally_trivial());
    let t = ltimes(&SlicedGroupHom::from_action(&GroupAction::trivial(FiniteGroup::cyclic(3), objs(2))));
    assert!(t.groupoid().check_axioms().is_ok());
    assert!(!t.groupoid().is_locally_trivial());
}

#[test]
fn bisection_counts_match_brute_force() {
    let l = Limits::default();
    let z = ltimes(&swap_m2());
    assert_eq!(brute_force_bisections(z.groupoid()), 2);
    assert_eq!(enumerate_bisections(z.groupoid(), &l).unwrap().order(), 2);
    for (k, m) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let t = ltimes(&SlicedGroupHom::from_action(&GroupAction::trivial(FiniteGroup::cyclic(k), objs(m))));
        let expected = brute_force_bisections(t.groupoid());
        assert_eq!(expected, k.pow(m as u32));
        assert_eq!(enumerate_bisections(t.groupoid(), &l).unwrap().order(), expected);
    }
    let s = ltimes(&s3_natural());
    let expected = brute_force_bisections(s.groupoid());
    assert_eq!(enumerate_bisections(s.groupoid(), &l).unwrap().order(), expected);
    assert_eq!(expected, 48);
}

#[test]
fn swap_action_maps_uniquely_to_pair_groupoid() {
    let l = Limits::default();
    let z = ltimes(&swap_m2());
    let p2 = pair_groupoid(&objs(2));
    let homs = enumerate_morphisms(z.groupoid(), &p2, 10_000).unwrap();
    assert_eq!(homs.len(), 1);
    let bis = enumerate_bisections(&p2, &l).unwrap();
    let c = curry_hom(&homs[0], &z, &p2, &bis).unwrap();
    assert!(c.as_hom().is_bijective(bis.group()));
    assert_eq!(uncurry_hom(&c, &z, &bis), homs[0]);
}

#[test]
fn ev_on_pair_groupoid_has_fibers_of_two() {
    let p3 = pair_groupoid(&objs(3));
    let bg = bisection_action(&p3, &Limits::default()).unwrap();
    assert_eq!(bg.groupoid().arrow_count(), 18);
    let ev = ev_counit(&bg);
    assert!(crate::groupoid::check_morphism(bg.groupoid(), &p3, ev.map()).is_ok());
    let mut fibers = [0; 9];
    for &a in ev.map() {
        fibers[a] += 1;
    }
    assert!(fibers.iter().all(|&f| f == 2));
    let (rec, laws) = quotient_reconstruction_laws("P3", &p3, &bg, &ev).unwrap();
    assert!(all_pass(&run_all(&laws)));
    assert_eq!(rec.quotient.arrow_count(), 9);
}

#[test]
fn ev_is_an_isomorphism_for_unit_and_point_groupoids() {
    for g in [unit_groupoid(&objs(3)), group_over_point(&FiniteGroup::cyclic(2), "*")] {
        let bg = bisection_action(&g, &Limits::default()).unwrap();
        assert!(ev_counit(&bg).is_isomorphism(&g));
    }
}

#[test]
fn ev_is_the_uncurry_of_the_identity() {
    let p3 = pair_groupoid(&objs(3));
    let bg = bisection_action(&p3, &Limits::default()).unwrap();
    let id = SliceMorphism::identity(bg.action().sliced());
    assert_eq!(uncurry_hom(&id, bg.action(), bg.bis()), bg.ev());
    assert_eq!(curry_hom(&bg.ev(), bg.action(), &p3, bg.bis()).unwrap(), id);
}

#[test]
fn const_unit_examples() {
    let l = Limits::default();
    let z = ltimes(&swap_m2());
    let bz = enumerate_bisections(z.groupoid(), &l).unwrap();
    let c = const_unit(&z, &bz).unwrap();
    assert!(c.as_hom().is_bijective(bz.group()));

    let t = ltimes(&SlicedGroupHom::from_action(&GroupAction::trivial(FiniteGroup::cyclic(3), objs(2))));
    let bt = enumerate_bisections(t.groupoid(), &l).unwrap();
    let c = const_unit(&t, &bt).unwrap();
    assert!(c.as_hom().is_injective(bt.group()));
    assert!(!c.as_hom().is_bijective(bt.group()));

    let u = ltimes(&SlicedGroupHom::from_action(&GroupAction::trivial(FiniteGroup::trivial(), objs(3))));
    let bu = enumerate_bisections(u.groupoid(), &l).unwrap();
    assert_eq!(const_unit(&u, &bu).unwrap().map(), &[0]);
}

#[test]
fn ltimes_on_morphism_examples() {
    let s3 = s3_natural();
    let big = ltimes(&s3);
    let k = s3.group();
    // the copy of Z2 generated by (23), acting naturally
    let t = k.index_of("(23)").unwrap();
    let z2 = FiniteGroup::cyclic(2);
    let small = SlicedGroupHom::new(z2, objs(3), vec![s3.permutation(k.identity()).clone(), s3.permutation(t).clone()]).unwrap();
    let psi = SliceMorphism::new(&small, &s3, vec![k.identity(), t]).unwrap();
    let f = ltimes_on_morphism(&psi, &ltimes(&small), &big);
    assert_eq!(f.map().len(), 6);
    assert!(crate::groupoid::check_morphism(ltimes(&small).groupoid(), big.groupoid(), f.map()).is_ok());
    let id = ltimes_on_morphism(&SliceMorphism::identity(&s3), &big, &big);
    assert_eq!(id, crate::groupoid::GroupoidMorphism::identity(big.groupoid()));
}

#[test]
fn comonad_laws_on_pair_groupoid() {
    let l = Limits::default();
    let p3 = pair_groupoid(&objs(3));
    let bg = bisection_action(&p3, &l).unwrap();
    let bbg = bisection_action(bg.groupoid(), &l).unwrap();
    assert_eq!(bbg.bis().order(), 48);
    assert_eq!(bbg.groupoid().arrow_count(), 144);
    let tables = ComonadTables::build(&bg, Some(&bbg)).unwrap();
    let reports = run_all(&tables.laws("P3"));
    assert_eq!(reports.len(), 3);
    assert!(all_pass(&reports), "{:?}", reports);
    let ext = ComonadTables::build(&bg, None).unwrap();
    assert!(all_pass(&run_all(&ext.laws("P3"))));
}

#[test]
fn corrupted_comultiplication_is_caught_and_replayable() {
    let l = Limits::default();
    let p3 = pair_groupoid(&objs(3));
    let bg = bisection_action(&p3, &l).unwrap();
    let bbg = bisection_action(bg.groupoid(), &l).unwrap();
    let clean = ComonadTables::build(&bg, Some(&bbg)).unwrap();
    // redirect δ on arrow 0 to every other arrow over the same point; some
    // redirection must break all three laws at once
    let m = 3;
    let mut all_three = false;
    for tau in 1..bbg.bis().order() {
        let mut tables = clean.clone();
        tables.full.as_mut().unwrap().delta[0] = tau * m;
        let laws = tables.laws("P3");
        let reports: Vec<_> = laws.iter().map(|law| law.run()).collect();
        for (law, r) in laws.iter().zip(&reports) {
            if r.status == Status::Fail {
                let w = r.witness.as_ref().unwrap();
                assert!(law.replay(w));
            }
        }
        assert!(reports.iter().any(|r| r.status == Status::Fail));
        all_three |= reports.iter().all(|r| r.status == Status::Fail);
    }
    assert!(all_three);
}

#[test]
fn triangle_identities_hold() {
    let l = Limits::default();
    for s in [swap_m2(), s3_natural()] {
        let a = ltimes(&s);
        let ba = bisection_action(a.groupoid(), &l).unwrap();
        assert_eq!(triangle_ltimes("t", &a, &ba).unwrap().run().status, Status::Pass);
    }
    let p3 = pair_groupoid(&objs(3));
    let bg = bisection_action(&p3, &l).unwrap();
    let bbg = bisection_action(bg.groupoid(), &l).unwrap();
    assert_eq!(triangle_bis("t", &p3, &bg, Some(&bbg)).unwrap().run().status, Status::Pass);
    assert_eq!(triangle_bis("t", &p3, &bg, None).unwrap().run().status, Status::Pass);
}

#[test]
fn adjunction_bijection_on_small_instances() {
    let l = Limits::default();
    let z = ltimes(&swap_m2());
    for g in [pair_groupoid(&objs(2)), z.groupoid().clone()] {
        let bis = enumerate_bisections(&g, &l).unwrap();
        let homs = ltimes_hom_sets(&z, &g, &bis, 100_000).unwrap();
        assert!(!homs.groupoid_side.is_empty());
        assert!(all_pass(&run_all(&ltimes_bijection_laws("x", &z, &g, &bis, &homs))));
    }
}
