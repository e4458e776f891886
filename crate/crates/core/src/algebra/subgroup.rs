use std::collections::BTreeSet;

use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};

/// A subset of a parent group, verified closed under products and inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&x| x >= group.order()) {
            return Err(Error::NotASubgroup(format!("element id {} out of range", bad)));
        }
        let sub = Self::from_sorted_unchecked(group.order(), set.into_iter().collect());
        if !sub.contains(group.identity()) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &sub.members {
            if !sub.contains(group.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {} missing", group.name(a))));
            }
            for &b in &sub.members {
                if !sub.contains(group.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "{}·{} = {} missing",
                        group.name(a),
                        group.name(b),
                        group.name(group.mul(a, b))
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub(crate) fn from_sorted_unchecked(parent_order: usize, members: Vec<usize>) -> Self {
        let mut mask = vec![false; parent_order];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { members, mask }
    }

    pub(crate) fn from_mask_unchecked(mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        Subgroup { members, mask }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(group.order(), vec![group.identity()])
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(group.order(), group.elements().collect())
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(group: &FiniteGroup, gens: &[usize]) -> Self {
        let mut mask = vec![false; group.order()];
        mask[group.identity()] = true;
        let mut members = vec![group.identity()];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            i += 1;
            for &g in gens {
                let c = group.mul(a, g);
                if !mask[c] {
                    mask[c] = true;
                    members.push(c);
                }
            }
        }
        Self::from_mask_unchecked(mask)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Self::from_mask_unchecked(mask)
    }

    /// `g·H·g⁻¹`
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut mask = vec![false; group.order()];
        for &h in &self.members {
            mask[group.conjugate(g, h)] = true;
        }
        Self::from_mask_unchecked(mask)
    }

    /// `Ok` if normal in `within`; otherwise a pair `(g, h)` with `g·h·g⁻¹ ∉ self`.
    pub fn normal_witness(&self, group: &FiniteGroup, within: &Subgroup) -> std::result::Result<(), (usize, usize)> {
        for &g in within.members() {
            for &h in &self.members {
                if !self.contains(group.conjugate(g, h)) {
                    return Err((g, h));
                }
            }
        }
        Ok(())
    }

    pub fn is_normal_in(&self, group: &FiniteGroup) -> bool {
        self.normal_witness(group, &Subgroup::whole(group)).is_ok()
    }

    pub fn names<'a>(&'a self, group: &'a FiniteGroup) -> Vec<&'a str> {
        self.members.iter().map(|&m| group.name(m)).collect()
    }

    /// The subgroup as a group of its own, with the inclusion map.
    pub fn as_group(&self, group: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let pos: std::collections::HashMap<usize, usize> =
            self.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[&group.mul(a, b)]);
            }
        }
        let inverse = self.members.iter().map(|&a| pos[&group.inv(a)]).collect();
        let names = self.members.iter().map(|&a| group.name(a).to_string()).collect();
        let g = FiniteGroup::from_parts_unchecked(names, table, pos[&group.identity()], inverse);
        (g, self.members.clone())
    }
}

/// Intersection of all conjugates `g·H·g⁻¹`: the largest subgroup of `H`
/// normal in the whole group.
pub fn normal_core(group: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    if h.parent_order() != group.order() {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    let mut core = h.clone();
    for g in group.elements() {
        core = core.intersection(&h.conjugate(group, g));
        if core.order() == 1 {
            break;
        }
    }
    Ok(core)
}

/// Left cosets `kH` ordered by their minimal member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    classes: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(group: &FiniteGroup, h: &Subgroup) -> Result<Self> {
        if h.parent_order() != group.order() {
            return Err(Error::NotASubgroup("subgroup of a different group".into()));
        }
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut classes = Vec::new();
        // scanning in element order makes the first member of each class its minimum
        for k in group.elements() {
            if coset_of[k] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = h.members().iter().map(|&x| group.mul(k, x)).collect();
            class.sort_unstable();
            for &c in &class {
                coset_of[c] = classes.len();
            }
            classes.push(class);
        }
        Ok(CosetSpace { classes, coset_of })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.classes[coset][0]
    }

    pub fn class(&self, coset: usize) -> &[usize] {
        &self.classes[coset]
    }

    pub fn coset_of(&self, k: usize) -> usize {
        self.coset_of[k]
    }

    /// `k·(cH)` as a coset index.
    pub fn left_translate(&self, group: &FiniteGroup, k: usize, coset: usize) -> usize {
        self.coset_of(group.mul(k, self.rep(coset)))
    }
}

/// `G/N` for a normal subgroup, with the cosets it was built from.
pub fn quotient_group(group: &FiniteGroup, n: &Subgroup, suffix: &str) -> Result<(FiniteGroup, CosetSpace)> {
    if let Err((g, h)) = n.normal_witness(group, &Subgroup::whole(group)) {
        return Err(Error::NotASubgroup(format!(
            "not normal: {}·{}·{}⁻¹ leaves the subgroup",
            group.name(g),
            group.name(h),
            group.name(g)
        )));
    }
    let cosets = CosetSpace::new(group, n)?;
    let q = cosets.len();
    let mut table = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            table.push(cosets.coset_of(group.mul(cosets.rep(a), cosets.rep(b))));
        }
    }
    let inverse = (0..q).map(|a| cosets.coset_of(group.inv(cosets.rep(a)))).collect();
    let names = (0..q).map(|a| format!("{}{}", group.name(cosets.rep(a)), suffix)).collect();
    let identity = cosets.coset_of(group.identity());
    Ok((FiniteGroup::new(names, table, identity, inverse)?, cosets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SymmetricGroup;

    fn s3() -> FiniteGroup {
        let labels: Vec<String> = ["1", "2", "3"].iter().map(|s| s.to_string()).collect();
        SymmetricGroup::on(&labels, 720).unwrap().group().clone()
    }

    #[test]
    fn core_of_transposition_subgroup_in_s3_is_trivial() {
        let g = s3();
        let t = g.index_of("(23)").unwrap();
        let h = Subgroup::generated(&g, &[t]);
        assert_eq!(h.order(), 2);
        let core = normal_core(&g, &h).unwrap();
        assert_eq!(core.members(), &[g.identity()]);
    }

    #[test]
    fn core_of_whole_group() {
        let g = s3();
        let w = Subgroup::whole(&g);
        assert_eq!(normal_core(&g, &w).unwrap(), w);
    }

    #[test]
    fn abelian_core_is_the_subgroup() {
        let z2 = FiniteGroup::cyclic(2);
        let k = z2.direct_product(&z2);
        let h = Subgroup::new(&k, [k.index_of("(0,0)").unwrap(), k.index_of("(0,1)").unwrap()]).unwrap();
        assert_eq!(normal_core(&k, &h).unwrap(), h);
    }

    #[test]
    fn not_closed_is_rejected() {
        let g = s3();
        let a = g.index_of("(12)").unwrap();
        let b = g.index_of("(23)").unwrap();
        assert!(matches!(
            Subgroup::new(&g, [g.identity(), a, b]),
            Err(Error::NotASubgroup(_))
        ));
    }

    #[test]
    fn coset_counts() {
        let g = s3();
        let stab = Subgroup::generated(&g, &[g.index_of("(23)").unwrap()]);
        assert_eq!(CosetSpace::new(&g, &stab).unwrap().len(), 3);
        assert_eq!(CosetSpace::new(&g, &Subgroup::trivial(&g)).unwrap().len(), 6);
        assert_eq!(CosetSpace::new(&g, &Subgroup::whole(&g)).unwrap().len(), 1);
    }

    #[test]
    fn coset_reps_are_minimal_members() {
        let g = s3();
        let stab = Subgroup::generated(&g, &[g.index_of("(13)").unwrap()]);
        let cs = CosetSpace::new(&g, &stab).unwrap();
        for c in 0..cs.len() {
            assert_eq!(cs.rep(c), *cs.class(c).iter().min().unwrap());
            for &k in cs.class(c) {
                assert_eq!(cs.coset_of(k), c);
            }
        }
    }

    #[test]
    fn quotient_by_a3() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[g.index_of("(123)").unwrap()]);
        let (q, _) = quotient_group(&g, &a3, "A").unwrap();
        assert_eq!(q.order(), 2);
        let stab = Subgroup::generated(&g, &[g.index_of("(12)").unwrap()]);
        assert!(quotient_group(&g, &stab, "H").is_err());
    }
}
