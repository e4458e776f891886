use super::*;
use crate::algebra::{FiniteGroup, GroupAction, Subgroup, SymmetricGroup};
use crate::bisection::enumerate_bisections;
use crate::error::Error;
use crate::groupoid::{enumerate_morphisms, group_over_point, pair_groupoid, trivial_groupoid, unit_groupoid, FiniteGroupoid};
use crate::harness::engine::{run_all, Law, Status};
use crate::Limits;

fn objs(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn s3_action() -> GroupAction {
    let s = SymmetricGroup::on(&objs(3), 720).unwrap();
    let perms: Vec<_> = s.group().elements().map(|e| s.permutation(e).clone()).collect();
    GroupAction::from_permutations(s.group().clone(), objs(3), &perms).unwrap()
}

fn s3_pair_he() -> TransitivePair {
    let a = s3_action();
    let h = Subgroup::trivial(a.group());
    TransitivePair::new(a, 0, h).unwrap()
}

fn s3_pair_stab() -> TransitivePair {
    let a = s3_action();
    let h = a.stabilizer(0).unwrap();
    TransitivePair::new(a, 0, h).unwrap()
}

fn z2_pair_he() -> TransitivePair {
    let z2 = FiniteGroup::cyclic(2);
    let a = GroupAction::from_fn(z2.clone(), objs(2), |k, x| if k == 0 { x } else { 1 - x }).unwrap();
    TransitivePair::new(a, 0, Subgroup::trivial(&z2)).unwrap()
}

/// `Sym(M3)×Z2` acting through the first factor, `H = Stab×Z2`.
fn augmented_pair() -> TransitivePair {
    let s = s3_action();
    let k = s.group().direct_product(&FiniteGroup::cyclic(2));
    // direct product elements are (a, b) ↦ a*2 + b
    let a = GroupAction::from_fn(k.clone(), objs(3), |e, x| s.act(e / 2, x)).unwrap();
    let h = a.stabilizer(0).unwrap();
    TransitivePair::new(a, 0, h).unwrap()
}

fn pass_all(laws: &[Law]) {
    for r in run_all(laws) {
        assert_eq!(r.status, Status::Pass, "{}", r.to_text());
    }
}

#[test]
fn pair_validation_examples() {
    assert_eq!(s3_pair_he().validation().regular, Flag::Vacuous);
    s3_pair_stab();
    let z2 = FiniteGroup::cyclic(2);
    let trivial = GroupAction::trivial(z2.clone(), objs(2));
    assert!(matches!(
        TransitivePair::new(trivial, 0, Subgroup::trivial(&z2)),
        Err(Error::P1Violated(p)) if p == "2"
    ));
    // H must fix the basepoint
    let a = s3_action();
    let moving = a.stabilizer(1).unwrap();
    assert!(matches!(TransitivePair::new(a, 0, moving), Err(Error::P2Violated(_))));
}

#[test]
fn pair_kernel_examples() {
    let a = s3_action();
    let h = a.stabilizer(0).unwrap();
    assert_eq!(h.order(), 2);
    let p = TransitivePair::new(a, 0, h).unwrap();
    assert_eq!(pair_kernel(&p).order(), 1);
    assert_eq!(pair_kernel(&s3_pair_he()).order(), 1);

    // abelian K: the kernel is H itself
    let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
    let a = GroupAction::from_fn(v4, objs(2), |e, x| if e / 2 == 0 { x } else { 1 - x }).unwrap();
    let h = a.stabilizer(0).unwrap();
    let p = TransitivePair::new(a, 0, h.clone()).unwrap();
    assert_eq!(pair_kernel(&p), h);

    assert_eq!(pair_kernel(&augmented_pair()).order(), 2);
}

#[test]
fn pair_morphism_examples() {
    let (he, stab) = (s3_pair_he(), s3_pair_stab());
    let id = PairMorphism::identity(&he).map().to_vec();
    assert!(validate_pair_morphism(&he, &he, id.clone()).unwrap().is_isomorphism);
    let inc = validate_pair_morphism(&he, &stab, id.clone()).unwrap();
    assert!(!inc.is_isomorphism);
    // Stab → {e} over the identity fails the subgroup condition
    assert!(matches!(
        validate_pair_morphism(&stab, &he, id),
        Err(Error::ConditionViolated { which, .. }) if which == "subgroup"
    ));
    // the trivial homomorphism breaks the slice condition
    let trivial = vec![he.group().identity(); 6];
    assert!(matches!(
        validate_pair_morphism(&he, &stab, trivial),
        Err(Error::ConditionViolated { which, .. }) if which == "slice"
    ));
    // over id_M the slice condition pins φ = id on S3
    assert_eq!(enumerate_pair_morphisms(&he, &stab, 100_000).unwrap().len(), 1);
    assert_eq!(enumerate_pair_morphisms(&stab, &he, 100_000).unwrap().len(), 0);
}

#[test]
fn bundle_shapes() {
    let b = build_bundle(&s3_pair_he()).unwrap();
    assert_eq!(b.total_size(), 6);
    assert_eq!(b.structure_group().order(), 2);
    for x in 0..3 {
        assert_eq!(b.fiber(x).len(), 2);
    }
    let b = build_bundle(&s3_pair_stab()).unwrap();
    assert_eq!(b.total_size(), 3);
    assert_eq!(b.structure_group().order(), 1);
    let mut proj = b.projection().to_vec();
    proj.sort_unstable();
    assert_eq!(proj, [0, 1, 2]);
}

#[test]
fn gauge_groupoid_examples() {
    let r = gauge_groupoid(&s3_pair_he()).unwrap();
    assert_eq!(r.groupoid().arrow_count(), 18);
    assert!(r.groupoid().check_axioms().is_ok());
    for x in 0..3 {
        assert_eq!(r.groupoid().vertex_group(x).unwrap().0.order(), 2);
    }
    pass_all(&gauge_laws("S3-He", &r));

    let r2 = gauge_groupoid(&s3_pair_stab()).unwrap();
    assert_eq!(r2.groupoid().arrow_count(), 9);
    pass_all(&gauge_laws("S3-Stab", &r2));
    pass_all(&[gauge_pair_groupoid_law("S3-Stab", &r2)]);
    assert_eq!(gauge_pair_groupoid_law("S3-He", &r).run().status, Status::Fail);
}

#[test]
fn gauge_on_morphism_collapses_pairs() {
    let (he, stab) = (s3_pair_he(), s3_pair_stab());
    let (r, r2) = (gauge_groupoid(&he).unwrap(), gauge_groupoid(&stab).unwrap());
    let inc = PairMorphism::new(&he, &stab, PairMorphism::identity(&he).map().to_vec()).unwrap();
    let f = gauge_on_morphism(&inc, &r, &r2).unwrap();
    let mut fibers = [0; 9];
    for &a in f.map() {
        fibers[a] += 1;
    }
    assert!(fibers.iter().all(|&n| n == 2));
    let id_he = PairMorphism::identity(&he);
    let id_stab = PairMorphism::identity(&stab);
    pass_all(&r_functor_laws("S3", [&r, &r, &r2], &id_he, &inc).unwrap());
    pass_all(&r_functor_laws("S3", [&r, &r2, &r2], &inc, &id_stab).unwrap());
}

#[test]
fn canonical_a_on_the_stabilizer_pair_is_the_natural_action() {
    let r = gauge_groupoid(&s3_pair_stab()).unwrap();
    let bis = enumerate_bisections(r.groupoid(), &Limits::default()).unwrap();
    assert_eq!(bis.order(), 6);
    let a = a_canonical(&r, &bis).unwrap();
    let hom = a.as_hom();
    assert!(hom.is_bijective(bis.group()));
    for k in 0..6 {
        assert_eq!(bis.beta(a.apply(k)).images(), r.pair().action().permutation(k).images());
    }
}

#[test]
fn canonical_laws_hold_on_pairs() {
    for (name, p) in [
        ("S3-He", s3_pair_he()),
        ("S3-Stab", s3_pair_stab()),
        ("Z2-He", z2_pair_he()),
        ("augmented", augmented_pair()),
    ] {
        let r = gauge_groupoid(&p).unwrap();
        pass_all(&canonical_laws(name, &r));
        assert_eq!(a_kernel(&r), pair_kernel(&p), "{}", name);
    }
}

#[test]
fn augmented_pair_kills_the_extra_factor() {
    let p = augmented_pair();
    let r = gauge_groupoid(&p).unwrap();
    // (e, 1) is element 1 of S3×Z2
    assert!(a_kernel(&r).contains(1));
    assert_eq!(a_kernel(&r).order(), 2);
    assert_eq!(r.groupoid().arrow_count(), 9);
}

#[test]
fn kernel_law_catches_a_corrupted_table() {
    let p = s3_pair_he();
    let r = gauge_groupoid(&p).unwrap();
    let units: Vec<usize> = (0..3).map(|x| r.groupoid().unit(x)).collect();
    let mut tables: Vec<Vec<usize>> = (0..6).map(|k| a_section(&r, k)).collect();
    tables[3] = units.clone();
    let law = kernel_law("S3-He", &p, &tables, units);
    let report = law.run();
    assert_eq!(report.status, Status::Fail);
    assert!(law.replay(&report.witness.unwrap()));
}

#[test]
fn bisbar_examples() {
    let p3 = pair_groupoid(&objs(3));
    let bis = enumerate_bisections(&p3, &Limits::default()).unwrap();
    let pair = bisbar(&p3, &bis, 0).unwrap();
    assert_eq!(pair.h(), pair.stabilizer());
    assert_eq!(pair.h().order(), 2);

    let u3 = unit_groupoid(&objs(3));
    let bis = enumerate_bisections(&u3, &Limits::default()).unwrap();
    assert!(matches!(bisbar(&u3, &bis, 0), Err(Error::HypothesisNotMet(_))));

    let z2 = group_over_point(&FiniteGroup::cyclic(2), "*");
    let bis = enumerate_bisections(&z2, &Limits::default()).unwrap();
    let pair = bisbar(&z2, &bis, 0).unwrap();
    assert_eq!(pair.group().order(), 2);
    assert_eq!(pair.stabilizer().order(), 2);
    assert_eq!(pair.h().order(), 1);
}

#[test]
fn chi_is_an_isomorphism_on_covered_groupoids() {
    let swap = {
        let z2 = FiniteGroup::cyclic(2);
        let a = GroupAction::from_fn(z2, objs(2), |k, x| if k == 0 { x } else { 1 - x }).unwrap();
        crate::action::ltimes(&crate::bisection::SlicedGroupHom::from_action(&a)).groupoid().clone()
    };
    for (g, n) in [
        (pair_groupoid(&objs(3)), 9),
        (group_over_point(&FiniteGroup::cyclic(2), "*"), 2),
        (swap, 4),
    ] {
        let aug = augment(&g, 0, &Limits::default()).unwrap();
        assert_eq!(aug.gauge.groupoid().arrow_count(), n);
        assert!(aug.chi.is_isomorphism(&g));
        pass_all(&[triangle_bisbar("g", &aug)]);
    }
}

#[test]
fn r_adjunction_on_small_instances() {
    let p3 = pair_groupoid(&objs(3));
    let aug = augment(&p3, 0, &Limits::default()).unwrap();
    for p in [s3_pair_stab(), s3_pair_he()] {
        let r = gauge_groupoid(&p).unwrap();
        let adj = RAdjunction::build(&r, &p3, &aug, 100_000).unwrap();
        assert!(!adj.pair_side.is_empty());
        assert_eq!(adj.pair_side.len(), adj.groupoid_side.len());
        pass_all(&adj.laws("pair→P3"));
    }
}

#[test]
fn r_adjunction_naturality() {
    let p3 = pair_groupoid(&objs(3));
    let aug = augment(&p3, 0, &Limits::default()).unwrap();
    let (he, stab) = (s3_pair_he(), s3_pair_stab());
    let (r_he, r_stab) = (gauge_groupoid(&he).unwrap(), gauge_groupoid(&stab).unwrap());
    let adj_he = RAdjunction::build(&r_he, &p3, &aug, 100_000).unwrap();
    let adj_stab = RAdjunction::build(&r_stab, &p3, &aug, 100_000).unwrap();
    let inc = PairMorphism::new(&he, &stab, PairMorphism::identity(&he).map().to_vec()).unwrap();
    pass_all(&[r_adjunction_naturality_in_pair("inc", &inc, (&r_he, &adj_he), (&r_stab, &adj_stab)).unwrap()]);
    pass_all(&[a_naturality("inc", &inc, &r_he, &r_stab).unwrap()]);

    for psi in enumerate_morphisms(&p3, &p3, 100_000).unwrap() {
        pass_all(&[r_adjunction_naturality_in_groupoid("ψ", &psi, (&adj_stab, &aug), (&adj_stab, &aug)).unwrap()]);
        pass_all(&[chi_naturality("ψ", &psi, &aug, &aug).unwrap()]);
    }
}

#[test]
fn corrupted_chi_breaks_the_r_adjunction() {
    let p3 = pair_groupoid(&objs(3));
    let aug = augment(&p3, 0, &Limits::default()).unwrap();
    let r = gauge_groupoid(&s3_pair_stab()).unwrap();
    let mut adj = RAdjunction::build(&r, &p3, &aug, 100_000).unwrap();
    // P3 has no parallel arrows, so the corruption has to move endpoints
    let victim = adj.chi.iter().position(|&a| a == p3.unit(0)).unwrap();
    adj.chi[victim] = p3.unit(1);
    let laws = adj.laws("corrupt");
    let failing: Vec<_> = run_all(&laws).into_iter().filter(|r| r.status == Status::Fail).collect();
    assert!(!failing.is_empty());
    for rep in failing {
        let law = laws.iter().find(|l| l.id == rep.law).unwrap();
        assert!(law.replay(rep.witness.as_ref().unwrap()));
    }
}

#[test]
fn triangle_gauge_and_equivalence_on_the_free_pair() {
    let r = gauge_groupoid(&s3_pair_he()).unwrap();
    let u = unit_data(&r, &Limits::default()).unwrap();
    assert_eq!(u.bis_r.order(), 48);
    assert_eq!(u.bar.pair.h().order(), 8);
    assert_eq!(u.bar.gauge.groupoid().arrow_count(), 18);
    pass_all(&[triangle_gauge("S3-He", &r, &u)]);

    for g in [
        pair_groupoid(&objs(3)),
        group_over_point(&FiniteGroup::cyclic(2), "*"),
        r.groupoid().clone(),
    ] {
        let aug = augment(&g, 0, &Limits::default()).unwrap();
        pass_all(&equivalence_laws("g", &g, &aug, &Limits::default()).unwrap());
    }
}

#[test]
fn bundle_automorphisms_match_bisections() {
    for p in [z2_pair_he(), s3_pair_stab(), s3_pair_he()] {
        let r = gauge_groupoid(&p).unwrap();
        let bis = enumerate_bisections(r.groupoid(), &Limits::default()).unwrap();
        assert_eq!(bundle_automorphisms(&r).len(), bis.order());
        pass_all(&[bundle_automorphism_law("p", &r, &bis)]);
    }
}

#[test]
fn coreflection_on_covered_groupoids() {
    let p3 = pair_groupoid(&objs(3));
    let c = coreflector(&p3, 0, &Limits::default()).unwrap();
    assert!(!c.is_proper(&p3));
    assert!(c.restricted.is_isomorphism(&c.covered));
    let h = gauge_groupoid(&s3_pair_he()).unwrap().groupoid().clone();
    pass_all(&coreflection_laws("R(S3,He)→P3", &h, &p3, &c, 100_000).unwrap());
    pass_all(&coreflection_laws("P3→P3", &p3, &p3, &c, 100_000).unwrap());
}

#[test]
fn two_component_base_is_fully_covered() {
    // M×Z2×M over a two-point base: every arrow of a finite groupoid lies on
    // some bisection, so E(g) is all of g
    let g: FiniteGroupoid = trivial_groupoid(&objs(2), &FiniteGroup::cyclic(2));
    let c = coreflector(&g, 0, &Limits::default()).unwrap();
    assert_eq!(c.covered.arrow_count(), g.arrow_count());
    assert!(!c.is_proper(&g));
}
