use std::collections::HashMap;
use std::fmt;

use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle notation over the given point labels, `e` for the identity.
    pub fn cycle_notation(&self, labels: &[String]) -> String {
        let compact = labels.iter().all(|l| l.chars().count() == 1);
        let sep = if compact { "" } else { " " };
        let mut seen = vec![false; self.len()];
        let mut out = String::new();
        for start in 0..self.len() {
            if seen[start] || self.0[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(labels[x].as_str());
                x = self.0[x];
            }
            out.push('(');
            out.push_str(&cycle.join(sep));
            out.push(')');
        }
        if out.is_empty() {
            "e".to_string()
        } else {
            out
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All permutations of `0..n` in lexicographic order of their image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if current.len() == n {
            out.push(Permutation(current.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// `Sym(M)` for a labelled finite set, with the permutation behind each element.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    group: FiniteGroup,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl SymmetricGroup {
    /// Fails with `CapExceeded` when `|M|!` exceeds `max_order`.
    pub fn on(labels: &[String], max_order: usize) -> Result<Self> {
        let n = labels.len();
        let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
        match order {
            Some(o) if o <= max_order => {}
            _ => {
                return Err(Error::CapExceeded {
                    explored: order.unwrap_or(usize::MAX),
                    cap: max_order,
                })
            }
        }
        let perms = all_permutations(n);
        let index: HashMap<_, _> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let names = perms.iter().map(|p| p.cycle_notation(labels)).collect();
        let group = FiniteGroup::from_fn(names, |a, b| index[&perms[a].compose(&perms[b])])?;
        Ok(SymmetricGroup { group, perms, index })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn permutation(&self, element: usize) -> &Permutation {
        &self.perms[element]
    }

    pub fn element_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn degree(&self) -> usize {
        self.perms.first().map_or(0, Permutation::len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // a∘b sends 1 -> b -> 2 -> a -> 2, 2 -> 1 -> 0
        assert_eq!(a.compose(&b).images(), &[1, 2, 0]);
    }

    #[test]
    fn cycle_names() {
        let l = labels(3);
        assert_eq!(Permutation::identity(3).cycle_notation(&l), "e");
        assert_eq!(Permutation::from_images(vec![0, 2, 1]).unwrap().cycle_notation(&l), "(23)");
        assert_eq!(Permutation::from_images(vec![1, 2, 0]).unwrap().cycle_notation(&l), "(123)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![2, 0]).is_none());
    }

    #[test]
    fn sym3_has_order_six() {
        let s = SymmetricGroup::on(&labels(3), 720).unwrap();
        assert_eq!(s.group().order(), 6);
        assert_eq!(s.group().name(s.group().identity()), "e");
    }

    #[test]
    fn sym_respects_cap() {
        assert!(matches!(
            SymmetricGroup::on(&labels(7), 720),
            Err(Error::CapExceeded { .. })
        ));
    }
}
