use crate::algebra::{check_hom, FiniteGroup, GroupAction, GroupHom, Permutation, SymmetricGroup};
use crate::error::{Error, Result};
use crate::groupoid::enumerate_group_homs;

/// A finite group together with a homomorphism into `Sym(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedGroupHom {
    group: FiniteGroup,
    objects: Vec<String>,
    images: Vec<Permutation>,
}

impl SlicedGroupHom {
    pub fn new(group: FiniteGroup, objects: Vec<String>, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::NotAHomomorphism(format!(
                "{} permutations for {} elements",
                images.len(),
                group.order()
            )));
        }
        if let Some(p) = images.iter().find(|p| p.len() != objects.len()) {
            return Err(Error::NotAHomomorphism(format!("permutation of degree {}", p.len())));
        }
        for a in group.elements() {
            for b in group.elements() {
                if images[group.mul(a, b)] != images[a].compose(&images[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "φ({}·{}) ≠ φ({})∘φ({})",
                        group.name(a),
                        group.name(b),
                        group.name(a),
                        group.name(b)
                    )));
                }
            }
        }
        Ok(SlicedGroupHom { group, objects, images })
    }

    pub(crate) fn from_parts_unchecked(group: FiniteGroup, objects: Vec<String>, images: Vec<Permutation>) -> Self {
        SlicedGroupHom { group, objects, images }
    }

    pub fn from_action(action: &GroupAction) -> Self {
        SlicedGroupHom {
            group: action.group().clone(),
            objects: action.points().to_vec(),
            images: action.permutations(),
        }
    }

    pub fn to_action(&self) -> GroupAction {
        GroupAction::from_permutations(self.group.clone(), self.objects.clone(), &self.images)
            .expect("sliced hom is a valid action")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn permutation(&self, k: usize) -> &Permutation {
        &self.images[k]
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.images
    }

    pub fn act(&self, k: usize, x: usize) -> usize {
        self.images[k].apply(x)
    }

    /// The homomorphism into `Sym(M)` as a table.
    pub fn to_sym(&self, max_order: usize) -> Result<(SymmetricGroup, GroupHom)> {
        let sym = SymmetricGroup::on(&self.objects, max_order)?;
        let map: Vec<usize> = self
            .images
            .iter()
            .map(|p| sym.element_of(p).expect("permutation of the base"))
            .collect();
        let hom = GroupHom::new(&self.group, sym.group(), map)?;
        Ok((sym, hom))
    }
}

/// A homomorphism `ψ: K → K'` with `φ'∘ψ = φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceMorphism {
    map: Vec<usize>,
}

impl SliceMorphism {
    pub fn new(source: &SlicedGroupHom, target: &SlicedGroupHom, map: Vec<usize>) -> Result<Self> {
        if source.objects != target.objects {
            return Err(Error::BaseMismatch);
        }
        if map.len() != source.group.order() || map.iter().any(|&k| k >= target.group.order()) {
            return Err(Error::NotSliceMorphism("table does not fit the groups".into()));
        }
        for k in source.group.elements() {
            if target.images[map[k]] != source.images[k] {
                return Err(Error::NotSliceMorphism(format!(
                    "φ'(ψ({})) ≠ φ({})",
                    source.group.name(k),
                    source.group.name(k)
                )));
            }
        }
        check_hom(&source.group, &target.group, &map)?;
        Ok(SliceMorphism { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        SliceMorphism { map }
    }

    pub fn identity(s: &SlicedGroupHom) -> Self {
        SliceMorphism {
            map: s.group.elements().collect(),
        }
    }

    pub fn apply(&self, k: usize) -> usize {
        self.map[k]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    pub fn as_hom(&self) -> GroupHom {
        GroupHom::from_map_unchecked(self.map.clone())
    }

    /// `outer ∘ inner`
    pub fn compose(outer: &SliceMorphism, inner: &SliceMorphism) -> SliceMorphism {
        SliceMorphism {
            map: inner.map.iter().map(|&k| outer.map[k]).collect(),
        }
    }
}

/// Every slice morphism `source → target`, via filtered homomorphism search.
pub fn enumerate_slice_morphisms(source: &SlicedGroupHom, target: &SlicedGroupHom, cap: usize) -> Result<Vec<SliceMorphism>> {
    if source.objects != target.objects {
        return Err(Error::BaseMismatch);
    }
    let homs = enumerate_group_homs(&source.group, &target.group, cap, |k, img| {
        target.images[img] == source.images[k]
    })?;
    Ok(homs.into_iter().map(|h| SliceMorphism { map: h.into_map() }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn collapsing_map_is_not_in_the_slice() {
        let l = labels(2);
        let swap = SlicedGroupHom::new(
            FiniteGroup::cyclic(2),
            l.clone(),
            vec![Permutation::identity(2), Permutation::from_images(vec![1, 0]).unwrap()],
        )
        .unwrap();
        let trivial = SlicedGroupHom::new(FiniteGroup::trivial(), l, vec![Permutation::identity(2)]).unwrap();
        assert!(matches!(
            SliceMorphism::new(&swap, &trivial, vec![0, 0]),
            Err(Error::NotSliceMorphism(_))
        ));
        assert!(SliceMorphism::new(&swap, &swap, vec![0, 1]).is_ok());
        assert!(SliceMorphism::new(&trivial, &swap, vec![0]).is_ok());
    }

    #[test]
    fn non_homomorphic_images_are_rejected() {
        let l = labels(2);
        let bad = SlicedGroupHom::new(
            FiniteGroup::cyclic(2),
            l,
            vec![Permutation::from_images(vec![1, 0]).unwrap(), Permutation::identity(2)],
        );
        assert!(bad.is_err());
    }
}
