use crate::algebra::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A group homomorphism stored as its element table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        check_hom(source, target, &map)?;
        Ok(GroupHom { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        GroupHom { map }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            map: group.elements().collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    /// `outer ∘ inner`
    pub fn compose(outer: &GroupHom, inner: &GroupHom) -> GroupHom {
        GroupHom {
            map: inner.map.iter().map(|&x| outer.map[x]).collect(),
        }
    }

    pub fn kernel(&self, source: &FiniteGroup, target: &FiniteGroup) -> Subgroup {
        let mask = source.elements().map(|x| self.map[x] == target.identity()).collect();
        Subgroup::from_mask_unchecked(mask)
    }

    pub fn image(&self, target: &FiniteGroup) -> Subgroup {
        let mut mask = vec![false; target.order()];
        for &y in &self.map {
            mask[y] = true;
        }
        Subgroup::from_mask_unchecked(mask)
    }

    pub fn is_injective(&self, target: &FiniteGroup) -> bool {
        self.image(target).order() == self.map.len()
    }

    pub fn is_bijective(&self, target: &FiniteGroup) -> bool {
        self.map.len() == target.order() && self.is_injective(target)
    }

    /// Inverse map of a bijective homomorphism.
    pub fn inverse(&self, target: &FiniteGroup) -> Option<GroupHom> {
        if !self.is_bijective(target) {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(GroupHom { map: inv })
    }

    pub fn maps_into(&self, h: &Subgroup, target_sub: &Subgroup) -> bool {
        h.members().iter().all(|&x| target_sub.contains(self.map[x]))
    }
}

pub fn check_hom(source: &FiniteGroup, target: &FiniteGroup, map: &[usize]) -> Result<()> {
    if map.len() != source.order() {
        return Err(Error::NotAHomomorphism(format!(
            "table has {} entries for a group of order {}",
            map.len(),
            source.order()
        )));
    }
    if let Some(x) = map.iter().position(|&y| y >= target.order()) {
        return Err(Error::NotAHomomorphism(format!("image of {} out of range", source.name(x))));
    }
    if map[source.identity()] != target.identity() {
        return Err(Error::NotAHomomorphism("identity not preserved".into()));
    }
    for a in source.elements() {
        for b in source.elements() {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(Error::NotAHomomorphism(format!(
                    "f({}·{}) ≠ f({})·f({})",
                    source.name(a),
                    source.name(b),
                    source.name(a),
                    source.name(b)
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_endomorphisms() {
        let z2 = FiniteGroup::cyclic(2);
        assert!(GroupHom::new(&z2, &z2, vec![0, 0]).is_ok());
        assert!(GroupHom::new(&z2, &z2, vec![0, 1]).is_ok());
        assert!(GroupHom::new(&z2, &z2, vec![1, 0]).is_err());
    }

    #[test]
    fn kernel_and_inverse() {
        let z4 = FiniteGroup::cyclic(4);
        let z2 = FiniteGroup::cyclic(2);
        let f = GroupHom::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(f.kernel(&z4, &z2).members(), &[0, 2]);
        assert!(f.inverse(&z2).is_none());
        let g = GroupHom::new(&z4, &z4, vec![0, 3, 2, 1]).unwrap();
        let gi = g.inverse(&z4).unwrap();
        assert_eq!(GroupHom::compose(&gi, &g), GroupHom::identity(&z4));
    }
}
