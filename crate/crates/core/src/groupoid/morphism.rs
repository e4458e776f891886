use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;

/// A groupoid morphism over `id_M`, stored as its arrow table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupoidMorphism {
    map: Vec<usize>,
}

impl GroupoidMorphism {
    pub fn new(source: &FiniteGroupoid, target: &FiniteGroupoid, map: Vec<usize>) -> Result<Self> {
        check_morphism(source, target, &map)?;
        Ok(GroupoidMorphism { map })
    }

    /// No validation; lets deliberately broken tables reach the law checkers.
    pub fn from_map_unchecked(map: Vec<usize>) -> Self {
        GroupoidMorphism { map }
    }

    pub fn identity(g: &FiniteGroupoid) -> Self {
        GroupoidMorphism {
            map: g.arrows().collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    /// `outer ∘ inner`
    pub fn compose(outer: &GroupoidMorphism, inner: &GroupoidMorphism) -> GroupoidMorphism {
        GroupoidMorphism {
            map: inner.map.iter().map(|&a| outer.map[a]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|a| seen.insert(*a))
    }

    pub fn is_surjective(&self, target: &FiniteGroupoid) -> bool {
        let mut hit = vec![false; target.arrow_count()];
        for &a in &self.map {
            hit[a] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_isomorphism(&self, target: &FiniteGroupoid) -> bool {
        self.map.len() == target.arrow_count() && self.is_injective()
    }

    /// Inverse of a bijective morphism (automatically a morphism).
    pub fn inverse(&self, target: &FiniteGroupoid) -> Option<GroupoidMorphism> {
        if !self.is_isomorphism(target) {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        Some(GroupoidMorphism { map: inv })
    }

    /// Arrows of the source sent to identities.
    pub fn kernel_arrows(&self, source: &FiniteGroupoid, target: &FiniteGroupoid) -> Vec<usize> {
        source
            .arrows()
            .filter(|&a| self.map[a] == target.unit(source.source(a)))
            .collect()
    }
}

/// Checks that `map` preserves `α`, `β`, units, inverses and composition.
pub fn check_morphism(source: &FiniteGroupoid, target: &FiniteGroupoid, map: &[usize]) -> Result<()> {
    if !source.same_base(target) {
        return Err(Error::BaseMismatch);
    }
    if map.len() != source.arrow_count() {
        return Err(Error::NotAMorphism(format!(
            "table has {} entries for {} arrows",
            map.len(),
            source.arrow_count()
        )));
    }
    for a in source.arrows() {
        let b = map[a];
        if b >= target.arrow_count() {
            return Err(Error::NotAMorphism(format!("image of {} out of range", source.label(a))));
        }
        if target.source(b) != source.source(a) || target.target(b) != source.target(a) {
            return Err(Error::NotAMorphism(format!(
                "{} ↦ {} moves endpoints",
                source.label(a),
                target.label(b)
            )));
        }
    }
    for x in 0..source.object_count() {
        if map[source.unit(x)] != target.unit(x) {
            return Err(Error::NotAMorphism(format!("unit at {} not preserved", source.objects()[x])));
        }
    }
    for a in source.arrows() {
        for &b in source.arrows_to(source.source(a)) {
            if map[source.comp(a, b)] != target.comp(map[a], map[b]) {
                return Err(Error::NotAMorphism(format!(
                    "f({}·{}) ≠ f({})·f({})",
                    source.label(a),
                    source.label(b),
                    source.label(a),
                    source.label(b)
                )));
            }
        }
    }
    Ok(())
}
