use bisgpd::action::ltimes;
use bisgpd::algebra::{FiniteGroup, GroupAction, Permutation};
use bisgpd::bisection::{enumerate_bisections, SlicedGroupHom};
use bisgpd::groupoid::trivial_groupoid;
use bisgpd::harness::fixtures::points;
use bisgpd::harness::format::{emit, load, Instance};
use bisgpd::Limits;
use proptest::prelude::*;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The cyclic group generated by `p`, acting through its powers.
fn cyclic_action(p: &Permutation) -> GroupAction {
    let mut powers = vec![Permutation::identity(p.len())];
    while !powers.last().unwrap().compose(p).is_identity() {
        let next = powers.last().unwrap().compose(p);
        powers.push(next);
    }
    GroupAction::from_permutations(FiniteGroup::cyclic(powers.len()), points(p.len()), &powers).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn trivial_groupoid_bisections(n in 1usize..=4, k in 1usize..=3, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        // larger instances exceed the group-order cap by design
        prop_assume!(factorial(n) * k.pow(n as u32) <= Limits::default().group_order);
        let g = trivial_groupoid(&points(n), &FiniteGroup::cyclic(k));
        let bis = enumerate_bisections(&g, &Limits::default()).unwrap();
        prop_assert_eq!(bis.order(), factorial(n) * k.pow(n as u32));
        let [a, b, c] = [0, 1, 2].map(|i| picks[i].index(bis.order()));
        let grp = bis.group();
        prop_assert_eq!(grp.mul(grp.mul(a, b), c), grp.mul(a, grp.mul(b, c)));
        let s = bis.bisection(&g, a).star(&bis.bisection(&g, b), &g).unwrap();
        prop_assert_eq!(bis.index_of(s.section()), Some(grp.mul(a, b)));
    }

    #[test]
    fn action_files_round_trip(p in (1usize..=5).prop_flat_map(permutation)) {
        let action = cyclic_action(&p);
        let text = emit("random", &Instance::Action(action.clone()));
        let back = load(&text).unwrap();
        prop_assert_eq!(emit(&back.name, &back.instance), text);
        let lt = ltimes(&SlicedGroupHom::from_action(&action));
        prop_assert!(lt.groupoid().check_axioms().is_ok());
        prop_assert_eq!(lt.groupoid().arrow_count(), action.group().order() * p.len());
    }
}
