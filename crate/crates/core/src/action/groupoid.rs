use crate::bisection::{beta_star, bis_on_morphism, enumerate_bisections, BisectionGroup, SliceMorphism, SlicedGroupHom};
use crate::error::Result;
use crate::groupoid::{FiniteGroupoid, GroupoidMorphism};
use crate::Limits;

/// `K ⋉ M`: arrow `(k, x)` has index `k·|M| + x`, goes `x → k.x`, and
/// `(k, k'.x)·(k', x) = (kk', x)`.
#[derive(Clone, Debug)]
pub struct ActionGroupoid {
    groupoid: FiniteGroupoid,
    sliced: SlicedGroupHom,
}

pub fn ltimes(s: &SlicedGroupHom) -> ActionGroupoid {
    let k = s.group();
    let m = s.objects().len();
    let count = k.order() * m;
    let labels = (0..count)
        .map(|a| format!("({},{})", k.name(a / m), s.objects()[a % m]))
        .collect();
    let source = (0..count).map(|a| a % m).collect();
    let target = (0..count).map(|a| s.act(a / m, a % m)).collect();
    let unit = (0..m).map(|x| k.identity() * m + x).collect();
    let inverse = (0..count)
        .map(|a| k.inv(a / m) * m + s.act(a / m, a % m))
        .collect();
    let groupoid = FiniteGroupoid::from_fn_unchecked(s.objects().to_vec(), labels, source, target, unit, inverse, |a, b| {
        k.mul(a / m, b / m) * m + b % m
    });
    ActionGroupoid {
        groupoid,
        sliced: s.clone(),
    }
}

impl ActionGroupoid {
    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn sliced(&self) -> &SlicedGroupHom {
        &self.sliced
    }

    pub fn arrow(&self, k: usize, x: usize) -> usize {
        k * self.groupoid.object_count() + x
    }

    pub fn element(&self, a: usize) -> usize {
        a / self.groupoid.object_count()
    }

    pub fn point(&self, a: usize) -> usize {
        a % self.groupoid.object_count()
    }
}

/// `⋉(ψ) = ψ × id_M`.
pub fn ltimes_on_morphism(psi: &SliceMorphism, source: &ActionGroupoid, target: &ActionGroupoid) -> GroupoidMorphism {
    let map = source
        .groupoid
        .arrows()
        .map(|a| target.arrow(psi.apply(source.element(a)), source.point(a)))
        .collect();
    GroupoidMorphism::from_map_unchecked(map)
}

/// `B(G) = Bis(G) ⋉ M`, kept together with the enumerated `Bis(G)`.
#[derive(Clone, Debug)]
pub struct BisectionAction {
    bis: BisectionGroup,
    action: ActionGroupoid,
}

pub fn bisection_action(g: &FiniteGroupoid, limits: &Limits) -> Result<BisectionAction> {
    let bis = enumerate_bisections(g, limits)?;
    Ok(bisection_action_of(bis))
}

pub fn bisection_action_of(bis: BisectionGroup) -> BisectionAction {
    let action = ltimes(&beta_star(&bis));
    BisectionAction { bis, action }
}

impl BisectionAction {
    pub fn bis(&self) -> &BisectionGroup {
        &self.bis
    }

    pub fn action(&self) -> &ActionGroupoid {
        &self.action
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.action.groupoid
    }

    /// `ev: (σ, x) ↦ σ(x)`.
    pub fn ev(&self) -> GroupoidMorphism {
        let m = self.action.groupoid.object_count();
        GroupoidMorphism::from_map_unchecked(
            self.action
                .groupoid
                .arrows()
                .map(|a| self.bis.section(a / m)[a % m])
                .collect(),
        )
    }
}

/// `B(φ) = ⋉(Bis(φ))`.
pub fn b_on_morphism(phi: &GroupoidMorphism, source: &BisectionAction, target: &BisectionAction) -> Result<GroupoidMorphism> {
    let bis_phi = bis_on_morphism(phi, &source.bis, &target.bis)?;
    Ok(ltimes_on_morphism(&bis_phi, &source.action, &target.action))
}
