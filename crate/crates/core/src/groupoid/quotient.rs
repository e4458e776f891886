use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, GroupoidMorphism};

/// An equivalence relation on arrows, stored as `class_of[a]` = the minimal
/// arrow of `a`'s class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowCongruence {
    class_of: Vec<usize>,
}

impl ArrowCongruence {
    pub fn identity(g: &FiniteGroupoid) -> Self {
        ArrowCongruence {
            class_of: g.arrows().collect(),
        }
    }

    /// Equivalence closure of the given pairs (not yet checked for congruence).
    pub fn generated(arrow_count: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut parent: Vec<usize> = (0..arrow_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // keep the smaller root so roots are class minima
            if ra < rb {
                parent[rb] = ra;
            } else if rb < ra {
                parent[ra] = rb;
            }
        }
        let class_of = (0..arrow_count).map(|a| find(&mut parent, a)).collect();
        ArrowCongruence { class_of }
    }

    /// The relation `a ~ b ⟺ key(a) = key(b)`.
    pub fn from_key<K: Eq + std::hash::Hash>(arrow_count: usize, key: impl Fn(usize) -> K) -> Self {
        let mut first = std::collections::HashMap::new();
        let class_of = (0..arrow_count).map(|a| *first.entry(key(a)).or_insert(a)).collect();
        ArrowCongruence { class_of }
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().enumerate().filter(|(a, c)| a == *c).count()
    }

    /// Class minima in increasing order.
    pub fn representatives(&self) -> Vec<usize> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|(a, c)| a == *c)
            .map(|(a, _)| a)
            .collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let reps = self.representatives();
        let mut pos = vec![usize::MAX; self.class_of.len()];
        for (i, &r) in reps.iter().enumerate() {
            pos[r] = i;
        }
        let mut out = vec![Vec::new(); reps.len()];
        for (a, &c) in self.class_of.iter().enumerate() {
            out[pos[c]].push(a);
        }
        out
    }

    /// Related arrows share endpoints; the relation respects `ι` and products.
    pub fn validate(&self, g: &FiniteGroupoid) -> Result<()> {
        if self.class_of.len() != g.arrow_count() {
            return Err(Error::NotACongruence("relation is over a different arrow set".into()));
        }
        for a in g.arrows() {
            let r = self.class_of[a];
            if g.source(a) != g.source(r) || g.target(a) != g.target(r) {
                return Err(Error::NotACongruence(format!(
                    "{} ~ {} with different endpoints",
                    g.label(a),
                    g.label(r)
                )));
            }
        }
        for a in g.arrows() {
            let r = self.class_of[a];
            if !self.related(g.inverse(a), g.inverse(r)) {
                return Err(Error::NotACongruence(format!(
                    "{} ~ {} but their inverses are not related",
                    g.label(a),
                    g.label(r)
                )));
            }
            // comparing every product with the product of representatives
            // covers all pairs by transitivity
            for &b in g.arrows_to(g.source(a)) {
                let rb = self.class_of[b];
                if !self.related(g.comp(a, b), g.comp(r, rb)) {
                    return Err(Error::NotACongruence(format!(
                        "{}·{} and {}·{} fall in different classes",
                        g.label(a),
                        g.label(b),
                        g.label(r),
                        g.label(rb)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `G/R` with its projection. Quotient arrows are the class minima, in
/// increasing order, and keep those arrows' labels.
pub fn quotient_groupoid(g: &FiniteGroupoid, r: &ArrowCongruence) -> Result<(FiniteGroupoid, GroupoidMorphism)> {
    r.validate(g)?;
    let reps = r.representatives();
    let mut pos = vec![usize::MAX; g.arrow_count()];
    for (i, &a) in reps.iter().enumerate() {
        pos[a] = i;
    }
    let class = |a: usize| pos[r.class_of(a)];
    let q = FiniteGroupoid::from_fn(
        g.objects().to_vec(),
        reps.iter().map(|&a| g.label(a).to_string()).collect(),
        reps.iter().map(|&a| g.source(a)).collect(),
        reps.iter().map(|&a| g.target(a)).collect(),
        (0..g.object_count()).map(|x| class(g.unit(x))).collect(),
        reps.iter().map(|&a| class(g.inverse(a))).collect(),
        |i, j| class(g.comp(reps[i], reps[j])),
    )
    .map_err(|v| Error::InternalLawViolation(format!("quotient tables: {}", v)))?;
    let proj = GroupoidMorphism::new(g, &q, g.arrows().map(class).collect())?;
    Ok((q, proj))
}

/// `proj(x) = proj(y) ⟺ x ~ y`, i.e. the kernel pair of `proj` is `r`.
pub fn check_effective_quotient(g: &FiniteGroupoid, r: &ArrowCongruence, proj: &GroupoidMorphism) -> bool {
    let kernel_pair = ArrowCongruence::from_key(g.arrow_count(), |a| proj.apply(a));
    kernel_pair == *r
}

/// The factorisation of `h: G → H` through `proj: G → G/R`, if `h` is constant
/// on classes (coequalises both projections of `R`).
pub fn factor_through(r: &ArrowCongruence, proj: &GroupoidMorphism, quotient: &FiniteGroupoid, h: &GroupoidMorphism) -> Option<GroupoidMorphism> {
    let mut map = vec![usize::MAX; quotient.arrow_count()];
    for (a, &q) in proj.map().iter().enumerate() {
        let img = h.apply(a);
        if h.apply(r.class_of(a)) != img {
            return None;
        }
        map[q] = img;
    }
    Some(GroupoidMorphism::from_map_unchecked(map))
}
