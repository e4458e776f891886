//! Exhaustive enumeration of groupoid morphisms over `id_M` (and of group
//! homomorphisms, as morphisms between one-object groupoids).
//!
//! Backtracking over arrow images with forward propagation: fixing `f(g)`
//! forces `f(ι g)` and every product of `g` with an already-assigned arrow, so
//! in practice only a generating set is ever branched on.

use crate::algebra::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};
use crate::groupoid::{group_over_point, FiniteGroupoid, GroupoidMorphism};

const FREE: usize = usize::MAX;

struct Search<'a, F> {
    a: &'a FiniteGroupoid,
    b: &'a FiniteGroupoid,
    allowed: F,
    candidates: Vec<Vec<usize>>,
    explored: usize,
    cap: usize,
    found: Vec<Vec<usize>>,
}

impl<'a, F: Fn(usize, usize) -> bool> Search<'a, F> {
    fn assign(&self, map: &mut [usize], arrow: usize, image: usize) -> bool {
        let mut stack = vec![(arrow, image)];
        while let Some((g, img)) = stack.pop() {
            if map[g] != FREE {
                if map[g] != img {
                    return false;
                }
                continue;
            }
            if self.b.source(img) != self.a.source(g) || self.b.target(img) != self.a.target(g) || !(self.allowed)(g, img) {
                return false;
            }
            map[g] = img;
            stack.push((self.a.inverse(g), self.b.inverse(img)));
            // g·h for assigned h with β(h) = α(g)
            for &h in self.a.arrows_to(self.a.source(g)) {
                if map[h] != FREE {
                    stack.push((self.a.comp(g, h), self.b.comp(img, map[h])));
                }
            }
            // h·g for assigned h with α(h) = β(g)
            for &h in self.a.arrows_from(self.a.target(g)) {
                if map[h] != FREE {
                    stack.push((self.a.comp(h, g), self.b.comp(map[h], img)));
                }
            }
        }
        true
    }

    fn run(&mut self, map: Vec<usize>) -> Result<()> {
        let next = match map.iter().position(|&x| x == FREE) {
            None => {
                self.found.push(map);
                return Ok(());
            }
            Some(g) => g,
        };
        for i in 0..self.candidates[next].len() {
            self.explored += 1;
            if self.explored > self.cap {
                return Err(Error::CapExceeded {
                    explored: self.explored,
                    cap: self.cap,
                });
            }
            let c = self.candidates[next][i];
            let mut trial = map.clone();
            if self.assign(&mut trial, next, c) {
                self.run(trial)?;
            }
        }
        Ok(())
    }
}

/// All morphisms `a → b` over `id_M` whose arrow images satisfy `allowed`,
/// in lexicographic order of their tables.
pub fn enumerate_morphisms_filtered(
    a: &FiniteGroupoid,
    b: &FiniteGroupoid,
    cap: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<Vec<GroupoidMorphism>> {
    if !a.same_base(b) {
        return Err(Error::BaseMismatch);
    }
    let candidates: Vec<Vec<usize>> = a
        .arrows()
        .map(|g| {
            b.arrows_between(a.target(g), a.source(g))
                .filter(|&c| allowed(g, c))
                .collect()
        })
        .collect();
    let mut search = Search {
        a,
        b,
        allowed,
        candidates,
        explored: 0,
        cap,
        found: Vec::new(),
    };
    let mut map = vec![FREE; a.arrow_count()];
    for x in 0..a.object_count() {
        if !search.assign(&mut map, a.unit(x), b.unit(x)) {
            return Ok(Vec::new());
        }
    }
    search.run(map)?;
    let mut out: Vec<GroupoidMorphism> = search
        .found
        .into_iter()
        .map(GroupoidMorphism::from_map_unchecked)
        .collect();
    out.sort();
    debug_assert!(out.iter().all(|f| crate::groupoid::check_morphism(a, b, f.map()).is_ok()));
    Ok(out)
}

/// `Hom(a, b)` over `id_M`, exhaustive.
pub fn enumerate_morphisms(a: &FiniteGroupoid, b: &FiniteGroupoid, cap: usize) -> Result<Vec<GroupoidMorphism>> {
    enumerate_morphisms_filtered(a, b, cap, |_, _| true)
}

/// All group homomorphisms `source → target` with `allowed(k, image)` for every element.
pub fn enumerate_group_homs(
    source: &FiniteGroup,
    target: &FiniteGroup,
    cap: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<Vec<GroupHom>> {
    let a = group_over_point(source, "*");
    let b = group_over_point(target, "*");
    Ok(enumerate_morphisms_filtered(&a, &b, cap, allowed)?
        .into_iter()
        .map(|f| GroupHom::from_map_unchecked(f.into_map()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SymmetricGroup;
    use crate::groupoid::{pair_groupoid, unit_groupoid};

    fn objs(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn unit_groupoid_has_one_morphism_anywhere() {
        let u = unit_groupoid(&objs(3));
        let p = pair_groupoid(&objs(3));
        assert_eq!(enumerate_morphisms(&u, &p, 1000).unwrap().len(), 1);
        assert_eq!(enumerate_morphisms(&u, &u, 1000).unwrap().len(), 1);
        // nothing maps the pair groupoid into the unit groupoid
        assert!(enumerate_morphisms(&p, &u, 1000).unwrap().is_empty());
    }

    #[test]
    fn z2_endomorphisms_over_a_point() {
        let z2 = group_over_point(&FiniteGroup::cyclic(2), "*");
        assert_eq!(enumerate_morphisms(&z2, &z2, 1000).unwrap().len(), 2);
    }

    // Oracle: test every map S3 -> S3 for the homomorphism property.
    #[test]
    fn s3_endomorphism_count_matches_brute_force() {
        let l = objs(3);
        let s3 = SymmetricGroup::on(&l, 720).unwrap().group().clone();
        let mut brute = 0;
        let mut map = vec![0usize; 6];
        fn rec(i: usize, map: &mut Vec<usize>, g: &FiniteGroup, count: &mut usize) {
            if i == 6 {
                if crate::algebra::check_hom(g, g, map).is_ok() {
                    *count += 1;
                }
                return;
            }
            for c in 0..6 {
                map[i] = c;
                rec(i + 1, map, g, count);
            }
        }
        rec(0, &mut map, &s3, &mut brute);
        let homs = enumerate_group_homs(&s3, &s3, 100_000, |_, _| true).unwrap();
        assert_eq!(homs.len(), brute);
        // 6 automorphisms, 3 maps onto order-2 subgroups, 1 trivial
        assert_eq!(brute, 10);
    }

    #[test]
    fn cap_is_enforced() {
        let l = objs(3);
        let s3 = SymmetricGroup::on(&l, 720).unwrap().group().clone();
        assert!(matches!(
            enumerate_group_homs(&s3, &s3, 3, |_, _| true),
            Err(Error::CapExceeded { .. })
        ));
    }
}
