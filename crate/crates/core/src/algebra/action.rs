use std::collections::HashSet;

use crate::algebra::{FiniteGroup, GroupHom, Permutation, Subgroup, SymmetricGroup};
use crate::error::{Error, Result};

/// A left action of a finite group on a labelled finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    points: Vec<String>,
    table: Vec<usize>,
}

impl GroupAction {
    /// `table[k * |M| + x]` is `k.x`.
    pub fn new(group: FiniteGroup, points: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = points.len();
        if table.len() != group.order() * n {
            return Err(Error::NotAnAction(format!(
                "table has {} entries, expected {}",
                table.len(),
                group.order() * n
            )));
        }
        if table.iter().any(|&y| y >= n) {
            return Err(Error::NotAnAction("image point out of range".into()));
        }
        let act = |k: usize, x: usize| table[k * n + x];
        for x in 0..n {
            if act(group.identity(), x) != x {
                return Err(Error::NotAnAction(format!("e.{} ≠ {}", points[x], points[x])));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                for x in 0..n {
                    if act(g, act(h, x)) != act(group.mul(g, h), x) {
                        return Err(Error::NotAnAction(format!(
                            "{}.({}.{}) ≠ ({}·{}).{}",
                            group.name(g),
                            group.name(h),
                            points[x],
                            group.name(g),
                            group.name(h),
                            points[x]
                        )));
                    }
                }
            }
        }
        Ok(GroupAction { group, points, table })
    }

    pub fn from_fn(group: FiniteGroup, points: Vec<String>, act: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = points.len();
        let table = (0..group.order() * n).map(|i| act(i / n, i % n)).collect();
        Self::new(group, points, table)
    }

    /// `K` acting through a homomorphism into `Sym(M)` given as one permutation per element.
    pub fn from_permutations(group: FiniteGroup, points: Vec<String>, perms: &[Permutation]) -> Result<Self> {
        if perms.len() != group.order() || perms.iter().any(|p| p.len() != points.len()) {
            return Err(Error::NotAnAction("permutation list does not match group and carrier".into()));
        }
        Self::from_fn(group, points, |k, x| perms[k].apply(x))
    }

    pub fn trivial(group: FiniteGroup, points: Vec<String>) -> Self {
        let n = points.len();
        let table = (0..group.order() * n).map(|i| i % n).collect();
        GroupAction { group, points, table }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn act(&self, k: usize, x: usize) -> usize {
        self.table[k * self.points.len() + x]
    }

    pub fn permutation(&self, k: usize) -> Permutation {
        Permutation::from_images((0..self.degree()).map(|x| self.act(k, x)).collect())
            .expect("group elements act bijectively")
    }

    /// One permutation per group element: `θ^∧`.
    pub fn permutations(&self) -> Vec<Permutation> {
        self.group.elements().map(|k| self.permutation(k)).collect()
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn stabilizer(&self, m: usize) -> Result<Subgroup> {
        if m >= self.degree() {
            return Err(Error::PointNotInCarrier(m));
        }
        let mask = self.group.elements().map(|k| self.act(k, m) == m).collect();
        let stab = Subgroup::from_mask_unchecked(mask);
        debug_assert!(Subgroup::new(&self.group, stab.members().iter().copied()).is_ok());
        Ok(stab)
    }

    /// Orbit of `m` in first-reached order.
    pub fn orbit(&self, m: usize) -> Result<Vec<usize>> {
        if m >= self.degree() {
            return Err(Error::PointNotInCarrier(m));
        }
        let mut seen = vec![false; self.degree()];
        let mut orbit = Vec::new();
        for k in self.group.elements() {
            let y = self.act(k, m);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        Ok(orbit)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree() == 0 || self.orbit(0).map(|o| o.len() == self.degree()).unwrap_or(false)
    }

    /// First point not reached from `m`, if any.
    pub fn unreached_from(&self, m: usize) -> Result<Option<usize>> {
        let orbit = self.orbit(m)?;
        let mut reached = vec![false; self.degree()];
        for y in orbit {
            reached[y] = true;
        }
        Ok(reached.iter().position(|r| !r))
    }

    /// Whether the induced action on `n`-tuples of distinct points is transitive.
    /// For `n > |M|` there are no such tuples and the answer is `false`.
    pub fn check_transitivity(&self, n: usize) -> bool {
        let d = self.degree();
        if n > d {
            log::info!("{}-fold transitivity requested on {} points: no distinct tuples, returning false", n, d);
            return false;
        }
        let total: usize = (0..n).map(|i| d - i).product();
        let start: Vec<usize> = (0..n).collect();
        let mut orbit = HashSet::new();
        for k in self.group.elements() {
            orbit.insert(start.iter().map(|&x| self.act(k, x)).collect::<Vec<_>>());
        }
        orbit.len() == total
    }

    /// `θ^∧ : K → Sym(M)` as a homomorphism into an explicit symmetric group.
    pub fn curry(&self, max_order: usize) -> Result<(SymmetricGroup, GroupHom)> {
        let sym = SymmetricGroup::on(&self.points, max_order)?;
        let map = self
            .group
            .elements()
            .map(|k| sym.element_of(&self.permutation(k)).expect("Sym(M) contains every permutation"))
            .collect();
        let hom = GroupHom::new(&self.group, sym.group(), map)?;
        Ok((sym, hom))
    }

    /// Rebuilds the action from a homomorphism into `Sym(M)`.
    pub fn uncurry(group: FiniteGroup, sym: &SymmetricGroup, hom: &GroupHom, points: Vec<String>) -> Result<Self> {
        let perms: Vec<Permutation> = group.elements().map(|k| sym.permutation(hom.apply(k)).clone()).collect();
        Self::from_permutations(group, points, &perms)
    }

    /// Kernel of the action: elements acting as the identity.
    pub fn kernel(&self) -> Subgroup {
        let mask = self
            .group
            .elements()
            .map(|k| (0..self.degree()).all(|x| self.act(k, x) == x))
            .collect();
        Subgroup::from_mask_unchecked(mask)
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().order() == 1
    }
}
