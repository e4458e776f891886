//! The deterministic fixture registry.

use crate::action::ltimes;
use crate::algebra::{FiniteGroup, GroupAction, Subgroup, SymmetricGroup};
use crate::bisection::SlicedGroupHom;
use crate::error::{Error, Result};
use crate::groupoid::{group_over_point, pair_groupoid, trivial_groupoid, unit_groupoid};
use crate::harness::format::{Instance, Named};
use crate::transitive::TransitivePair;

/// Registry names, in emission order.
pub const FIXTURES: &[&str] = &[
    "Z2",
    "S3",
    "Z2-swap-action",
    "Z2-trivial-action",
    "S3-natural-action",
    "P2",
    "P3",
    "U3",
    "Z2-point",
    "S3-point",
    "Z2-swap-M2",
    "Z2-trivial-M2",
    "S3-M3",
    "two-component-lt",
    "Z2-pair-He",
    "S3-pair-He",
    "S3-pair-Stab",
    "augmented-B=Z2",
];

pub fn points(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn s3() -> FiniteGroup {
    SymmetricGroup::on(&points(3), 720).expect("S3 fits").group().clone()
}

pub fn s3_natural() -> GroupAction {
    let s = SymmetricGroup::on(&points(3), 720).expect("S3 fits");
    let perms: Vec<_> = s.group().elements().map(|e| s.permutation(e).clone()).collect();
    GroupAction::from_permutations(s.group().clone(), points(3), &perms).expect("natural action")
}

pub fn z2_swap() -> GroupAction {
    GroupAction::from_fn(FiniteGroup::cyclic(2), points(2), |k, x| if k == 0 { x } else { 1 - x }).expect("swap action")
}

fn pair(action: GroupAction, h: impl FnOnce(&GroupAction) -> Subgroup) -> TransitivePair {
    let h = h(&action);
    TransitivePair::new(action, 0, h).expect("fixture pair is valid")
}

/// Builds a registry fixture.
pub fn fixture(name: &str) -> Result<Named> {
    let instance = match name {
        "Z2" => Instance::Group(FiniteGroup::cyclic(2)),
        "S3" => Instance::Group(s3()),
        "Z2-swap-action" => Instance::Action(z2_swap()),
        "Z2-trivial-action" => Instance::Action(GroupAction::trivial(FiniteGroup::cyclic(2), points(2))),
        "S3-natural-action" => Instance::Action(s3_natural()),
        "P2" => Instance::Groupoid(pair_groupoid(&points(2))),
        "P3" => Instance::Groupoid(pair_groupoid(&points(3))),
        "U3" => Instance::Groupoid(unit_groupoid(&points(3))),
        "Z2-point" => Instance::Groupoid(group_over_point(&FiniteGroup::cyclic(2), "*")),
        "S3-point" => Instance::Groupoid(group_over_point(&s3(), "*")),
        "Z2-swap-M2" => Instance::Groupoid(ltimes(&SlicedGroupHom::from_action(&z2_swap())).groupoid().clone()),
        "Z2-trivial-M2" => Instance::Groupoid(
            ltimes(&SlicedGroupHom::from_action(&GroupAction::trivial(FiniteGroup::cyclic(2), points(2))))
                .groupoid()
                .clone(),
        ),
        "S3-M3" => Instance::Groupoid(ltimes(&SlicedGroupHom::from_action(&s3_natural())).groupoid().clone()),
        // M×Z2×M over the two-point base {1, 2}
        "two-component-lt" => Instance::Groupoid(trivial_groupoid(&points(2), &FiniteGroup::cyclic(2))),
        "Z2-pair-He" => Instance::Pair(pair(z2_swap(), |a| Subgroup::trivial(a.group()))),
        "S3-pair-He" => Instance::Pair(pair(s3_natural(), |a| Subgroup::trivial(a.group()))),
        "S3-pair-Stab" => Instance::Pair(pair(s3_natural(), |a| a.stabilizer(0).expect("basepoint"))),
        "augmented-B=Z2" => {
            let s = s3_natural();
            let k = s.group().direct_product(&FiniteGroup::cyclic(2));
            let action = GroupAction::from_fn(k, points(3), |e, x| s.act(e / 2, x)).expect("acts through S3");
            Instance::Pair(pair(action, |a| a.stabilizer(0).expect("basepoint")))
        }
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    Ok(Named {
        name: name.to_string(),
        instance,
    })
}

pub fn all_fixtures() -> Vec<Named> {
    FIXTURES.iter().map(|n| fixture(n).expect("registered")).collect()
}
