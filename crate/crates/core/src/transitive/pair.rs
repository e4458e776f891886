use serde::Serialize;

use crate::algebra::{check_hom, normal_core, FiniteGroup, GroupAction, Subgroup};
use crate::error::{Error, Result};
use crate::groupoid::enumerate_group_homs;

/// A transitive action `θ` of `K` on `M` with a basepoint `m` and a subgroup
/// `H` normal in `Stab_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivePair {
    action: GroupAction,
    basepoint: usize,
    h: Subgroup,
    stabilizer: Subgroup,
}

/// Flags for conditions with no finite content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Checked,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairValidation {
    pub transitive: Flag,
    pub normal_in_stabilizer: Flag,
    pub regular: Flag,
    pub co_banach: Flag,
}

impl TransitivePair {
    pub fn new(action: GroupAction, basepoint: usize, h: Subgroup) -> Result<Self> {
        if basepoint >= action.degree() {
            return Err(Error::PointNotInCarrier(basepoint));
        }
        if h.parent_order() != action.group().order() {
            return Err(Error::NotASubgroup("H is not a subgroup of K".into()));
        }
        if let Some(x) = action.unreached_from(basepoint)? {
            return Err(Error::P1Violated(action.points()[x].clone()));
        }
        let stabilizer = action.stabilizer(basepoint)?;
        let k = action.group();
        if let Some(&x) = h.members().iter().find(|&&x| !stabilizer.contains(x)) {
            return Err(Error::P2Violated(format!(
                "{} ∈ H does not fix {}",
                k.name(x),
                action.points()[basepoint]
            )));
        }
        if let Err((g, x)) = h.normal_witness(k, &stabilizer) {
            return Err(Error::P2Violated(format!(
                "{}·{}·{}⁻¹ ∉ H",
                k.name(g),
                k.name(x),
                k.name(g)
            )));
        }
        Ok(TransitivePair {
            action,
            basepoint,
            h,
            stabilizer,
        })
    }

    /// Validation report; the constructor already enforces both conditions.
    pub fn validation(&self) -> PairValidation {
        PairValidation {
            transitive: Flag::Checked,
            normal_in_stabilizer: Flag::Checked,
            regular: Flag::Vacuous,
            co_banach: Flag::Vacuous,
        }
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    pub fn objects(&self) -> &[String] {
        self.action.points()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn stabilizer(&self) -> &Subgroup {
        &self.stabilizer
    }
}

/// Largest subgroup of `H` normal in `K`.
pub fn pair_kernel(p: &TransitivePair) -> Subgroup {
    normal_core(p.group(), &p.h).expect("H is a subgroup of K")
}

/// A homomorphism `φ: K → K'` with `θ'^∧∘φ = θ^∧` and `φ(H) ⊆ H'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMorphism {
    map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMorphismReport {
    pub morphism: PairMorphism,
    pub is_isomorphism: bool,
}

fn violated(which: &str, witness: String) -> Error {
    Error::ConditionViolated {
        which: which.to_string(),
        witness,
    }
}

impl PairMorphism {
    pub fn new(source: &TransitivePair, target: &TransitivePair, map: Vec<usize>) -> Result<Self> {
        Ok(validate_pair_morphism(source, target, map)?.morphism)
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        PairMorphism { map }
    }

    pub fn identity(p: &TransitivePair) -> Self {
        PairMorphism {
            map: p.group().elements().collect(),
        }
    }

    pub fn apply(&self, k: usize) -> usize {
        self.map[k]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `outer ∘ inner`
    pub fn compose(outer: &PairMorphism, inner: &PairMorphism) -> PairMorphism {
        PairMorphism {
            map: inner.map.iter().map(|&k| outer.map[k]).collect(),
        }
    }
}

/// Checks the three conditions; the morphism is an isomorphism iff `φ` is
/// bijective and `φ⁻¹(H') ⊆ H`.
pub fn validate_pair_morphism(source: &TransitivePair, target: &TransitivePair, map: Vec<usize>) -> Result<PairMorphismReport> {
    if source.objects() != target.objects() {
        return Err(Error::BaseMismatch);
    }
    if source.basepoint != target.basepoint {
        return Err(violated("basepoint", format!("{} vs {}", source.basepoint, target.basepoint)));
    }
    let (k, k2) = (source.group(), target.group());
    check_hom(k, k2, &map).map_err(|e| violated("homomorphism", e.to_string()))?;
    let m = source.objects().len();
    for e in k.elements() {
        if let Some(x) = (0..m).find(|&x| target.action.act(map[e], x) != source.action.act(e, x)) {
            return Err(violated(
                "slice",
                format!("θ'({}, {}) ≠ θ({}, {})", k2.name(map[e]), source.objects()[x], k.name(e), source.objects()[x]),
            ));
        }
    }
    if let Some(&x) = source.h.members().iter().find(|&&x| !target.h.contains(map[x])) {
        return Err(violated("subgroup", format!("φ({}) = {} ∉ H'", k.name(x), k2.name(map[x]))));
    }
    let bijective = {
        let mut hit = vec![false; k2.order()];
        map.iter().for_each(|&y| hit[y] = true);
        k.order() == k2.order() && hit.into_iter().all(|h| h)
    };
    let is_isomorphism = bijective && target.h.members().iter().all(|&y| {
        let x = map.iter().position(|&v| v == y).expect("bijective");
        source.h.contains(x)
    });
    Ok(PairMorphismReport {
        morphism: PairMorphism { map },
        is_isomorphism,
    })
}

/// All pair morphisms `source → target`.
pub fn enumerate_pair_morphisms(source: &TransitivePair, target: &TransitivePair, cap: usize) -> Result<Vec<PairMorphism>> {
    if source.objects() != target.objects() {
        return Err(Error::BaseMismatch);
    }
    if source.basepoint != target.basepoint {
        return Ok(Vec::new());
    }
    let m = source.objects().len();
    let homs = enumerate_group_homs(source.group(), target.group(), cap, |k, img| {
        (0..m).all(|x| target.action.act(img, x) == source.action.act(k, x)) && (!source.h.contains(k) || target.h.contains(img))
    })?;
    Ok(homs.into_iter().map(|h| PairMorphism { map: h.into_map() }).collect())
}
