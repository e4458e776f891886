use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupoidAxiom {
    /// Table shapes, ids out of range, duplicate labels.
    Structure,
    /// A composable pair without a product, or a product for a non-composable pair.
    CompositionDomain,
    /// `α(g·h) = α(h)` or `β(g·h) = β(g)` fails.
    SourceTarget,
    Unit,
    Inverse,
    Associativity,
}

impl fmt::Display for GroupoidAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupoidAxiom::Structure => "structure",
            GroupoidAxiom::CompositionDomain => "composition-domain",
            GroupoidAxiom::SourceTarget => "src/tgt",
            GroupoidAxiom::Unit => "unit",
            GroupoidAxiom::Inverse => "inverse",
            GroupoidAxiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidViolation {
    pub axiom: GroupoidAxiom,
    pub witness: Vec<String>,
}

impl fmt::Display for GroupoidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (witness: {})", self.axiom, self.witness.join(", "))
    }
}

impl std::error::Error for GroupoidViolation {}

fn violation(axiom: GroupoidAxiom, witness: Vec<String>) -> GroupoidViolation {
    GroupoidViolation { axiom, witness }
}

/// Raw groupoid tables, before validation. Composition is a list of
/// triples `(g, h, g·h)`, defined exactly when `α(g) = β(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidTables {
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub unit: Vec<usize>,
    pub inverse: Vec<usize>,
    pub comp: Vec<(usize, usize, usize)>,
}

/// A finite groupoid over a fixed finite base.
///
/// `g·h` is defined iff `α(g) = β(h)` and means "first `h`, then `g`";
/// `α(g·h) = α(h)` and `β(g·h) = β(g)`.
#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    labels: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    unit: Vec<usize>,
    inverse: Vec<usize>,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
    target_pos: Vec<usize>,
    comp_offset: Vec<usize>,
    comp: Vec<usize>,
    fingerprint: u64,
}

impl PartialEq for FiniteGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.objects == other.objects
            && self.labels == other.labels
            && self.source == other.source
            && self.target == other.target
            && self.unit == other.unit
            && self.inverse == other.inverse
            && self.comp == other.comp
    }
}

impl Eq for FiniteGroupoid {}

const UNSET: usize = usize::MAX;

impl FiniteGroupoid {
    /// Validates raw tables and builds the groupoid.
    pub fn from_tables(t: &GroupoidTables) -> std::result::Result<Self, GroupoidViolation> {
        let n = t.arrows.len();
        let m = t.objects.len();
        let structure = |msg: String| violation(GroupoidAxiom::Structure, vec![msg]);
        check_distinct("object", &t.objects).map_err(structure)?;
        check_distinct("arrow", &t.arrows).map_err(structure)?;
        if t.source.len() != n || t.target.len() != n || t.inverse.len() != n {
            return Err(structure("source/target/inverse tables must have one entry per arrow".into()));
        }
        if t.unit.len() != m {
            return Err(structure("unit table must have one entry per object".into()));
        }
        if let Some(a) = (0..n).find(|&a| t.source[a] >= m || t.target[a] >= m) {
            return Err(structure(format!("arrow {} has an endpoint outside the base", t.arrows[a])));
        }
        if t.unit.iter().chain(&t.inverse).any(|&a| a >= n) {
            return Err(structure("unit or inverse entry is not an arrow".into()));
        }
        let mut g = Self::skeleton(
            t.objects.clone(),
            t.arrows.clone(),
            t.source.clone(),
            t.target.clone(),
            t.unit.clone(),
            t.inverse.clone(),
        );
        for &(a, b, c) in &t.comp {
            if a >= n || b >= n || c >= n {
                return Err(structure("composition entry is not an arrow".into()));
            }
            if g.source[a] != g.target[b] {
                return Err(violation(
                    GroupoidAxiom::CompositionDomain,
                    vec![g.labels[a].clone(), g.labels[b].clone()],
                ));
            }
            let slot = g.slot(a, b);
            if g.comp[slot] != UNSET && g.comp[slot] != c {
                return Err(structure(format!(
                    "conflicting products for ({}, {})",
                    g.labels[a], g.labels[b]
                )));
            }
            g.comp[slot] = c;
        }
        g.check_axioms()?;
        g.fingerprint = g.compute_fingerprint();
        Ok(g)
    }

    /// Builds the composition table from `comp` over every composable pair, then validates.
    pub fn from_fn(
        objects: Vec<String>,
        labels: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        inverse: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let g = Self::from_fn_unchecked(objects, labels, source, target, unit, inverse, comp);
        g.check_axioms()?;
        Ok(g)
    }

    pub(crate) fn from_fn_unchecked(
        objects: Vec<String>,
        labels: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        inverse: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut g = Self::skeleton(objects, labels, source, target, unit, inverse);
        for a in 0..g.labels.len() {
            let fiber = g.by_target[g.source[a]].clone();
            for b in fiber {
                let slot = g.slot(a, b);
                g.comp[slot] = comp(a, b);
            }
        }
        g.fingerprint = g.compute_fingerprint();
        g
    }

    fn skeleton(
        objects: Vec<String>,
        labels: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        unit: Vec<usize>,
        inverse: Vec<usize>,
    ) -> Self {
        let m = objects.len();
        let n = labels.len();
        let mut by_source = vec![Vec::new(); m];
        let mut by_target = vec![Vec::new(); m];
        let mut target_pos = vec![0; n];
        for a in 0..n {
            by_source[source[a]].push(a);
            target_pos[a] = by_target[target[a]].len();
            by_target[target[a]].push(a);
        }
        let mut comp_offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for a in 0..n {
            comp_offset.push(total);
            total += by_target[source[a]].len();
        }
        comp_offset.push(total);
        FiniteGroupoid {
            objects,
            labels,
            source,
            target,
            unit,
            inverse,
            by_source,
            by_target,
            target_pos,
            comp_offset,
            comp: vec![UNSET; total],
            fingerprint: 0,
        }
    }

    fn slot(&self, a: usize, b: usize) -> usize {
        self.comp_offset[a] + self.target_pos[b]
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.objects.hash(&mut h);
        self.labels.hash(&mut h);
        self.source.hash(&mut h);
        self.target.hash(&mut h);
        self.unit.hash(&mut h);
        self.inverse.hash(&mut h);
        self.comp.hash(&mut h);
        h.finish()
    }

    /// Checks every groupoid axiom in the order: composition domain,
    /// src/tgt, unit, inverse, associativity.
    pub fn check_axioms(&self) -> std::result::Result<(), GroupoidViolation> {
        let n = self.labels.len();
        let l = |a: usize| self.labels[a].clone();
        for a in 0..n {
            for &b in &self.by_target[self.source[a]] {
                let c = self.comp[self.slot(a, b)];
                if c == UNSET {
                    return Err(violation(GroupoidAxiom::CompositionDomain, vec![l(a), l(b)]));
                }
                if c >= n {
                    return Err(violation(GroupoidAxiom::Structure, vec![l(a), l(b)]));
                }
            }
        }
        for a in 0..n {
            for &b in &self.by_target[self.source[a]] {
                let c = self.comp[self.slot(a, b)];
                if self.source[c] != self.source[b] || self.target[c] != self.target[a] {
                    return Err(violation(GroupoidAxiom::SourceTarget, vec![l(a), l(b), l(c)]));
                }
            }
        }
        for (x, &u) in self.unit.iter().enumerate() {
            if self.source[u] != x || self.target[u] != x {
                return Err(violation(GroupoidAxiom::Unit, vec![self.objects[x].clone(), l(u)]));
            }
        }
        for a in 0..n {
            let left = self.unit[self.target[a]];
            let right = self.unit[self.source[a]];
            if self.comp[self.slot(left, a)] != a || self.comp[self.slot(a, right)] != a {
                return Err(violation(GroupoidAxiom::Unit, vec![l(a)]));
            }
        }
        for a in 0..n {
            let i = self.inverse[a];
            if self.source[i] != self.target[a]
                || self.target[i] != self.source[a]
                || self.comp[self.slot(a, i)] != self.unit[self.target[a]]
                || self.comp[self.slot(i, a)] != self.unit[self.source[a]]
            {
                return Err(violation(GroupoidAxiom::Inverse, vec![l(a), l(i)]));
            }
        }
        for a in 0..n {
            for &b in &self.by_target[self.source[a]] {
                let ab = self.comp[self.slot(a, b)];
                for &c in &self.by_target[self.source[b]] {
                    let bc = self.comp[self.slot(b, c)];
                    if self.comp[self.slot(ab, c)] != self.comp[self.slot(a, bc)] {
                        return Err(violation(GroupoidAxiom::Associativity, vec![l(a), l(b), l(c)]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arrow_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
    }

    pub fn object_by_label(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|l| l == label)
    }

    /// `α`
    pub fn source(&self, a: usize) -> usize {
        self.source[a]
    }

    /// `β`
    pub fn target(&self, a: usize) -> usize {
        self.target[a]
    }

    pub fn unit(&self, x: usize) -> usize {
        self.unit[x]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn try_comp(&self, g: usize, h: usize) -> Option<usize> {
        if self.source[g] == self.target[h] {
            Some(self.comp[self.slot(g, h)])
        } else {
            None
        }
    }

    /// `g·h`; panics unless `α(g) = β(h)`.
    pub fn comp(&self, g: usize, h: usize) -> usize {
        self.try_comp(g, h).unwrap_or_else(|| {
            panic!("arrows {} and {} are not composable", self.labels[g], self.labels[h])
        })
    }

    /// `α⁻¹(x)`
    pub fn arrows_from(&self, x: usize) -> &[usize] {
        &self.by_source[x]
    }

    /// `β⁻¹(y)`
    pub fn arrows_to(&self, y: usize) -> &[usize] {
        &self.by_target[y]
    }

    /// Arrows `x → y`.
    pub fn arrows_between(&self, y: usize, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.by_source[x].iter().copied().filter(move |&a| self.target[a] == y)
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_base(&self, other: &FiniteGroupoid) -> bool {
        self.objects == other.objects
    }

    /// Vertex group `α⁻¹(m) ∩ β⁻¹(m)` with its arrows.
    pub fn vertex_group(&self, m: usize) -> Result<(FiniteGroup, Vec<usize>)> {
        if m >= self.object_count() {
            return Err(Error::PointNotInBase(m));
        }
        let arrows: Vec<usize> = self.by_source[m].iter().copied().filter(|&a| self.target[a] == m).collect();
        let pos: HashMap<usize, usize> = arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let names = arrows.iter().map(|&a| self.labels[a].clone()).collect();
        let group = FiniteGroup::from_fn(names, |i, j| pos[&self.comp(arrows[i], arrows[j])])?;
        Ok((group, arrows))
    }

    /// Anchor `(β, α)` surjective onto `M × M`.
    pub fn is_locally_trivial(&self) -> bool {
        let m = self.object_count();
        let mut hit = vec![false; m * m];
        for a in self.arrows() {
            hit[self.target[a] * m + self.source[a]] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Arrow count per anchor pair `(β, α)`, row-major in `β`.
    pub fn anchor_counts(&self) -> Vec<usize> {
        let m = self.object_count();
        let mut counts = vec![0; m * m];
        for a in self.arrows() {
            counts[self.target[a] * m + self.source[a]] += 1;
        }
        counts
    }

    pub fn to_tables(&self) -> GroupoidTables {
        let mut comp = Vec::with_capacity(self.comp.len());
        for a in self.arrows() {
            for &b in &self.by_target[self.source[a]] {
                comp.push((a, b, self.comp[self.slot(a, b)]));
            }
        }
        GroupoidTables {
            objects: self.objects.clone(),
            arrows: self.labels.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            unit: self.unit.clone(),
            inverse: self.inverse.clone(),
            comp,
        }
    }

    /// Same groupoid with arrows relabelled.
    pub fn relabelled(&self, labels: Vec<String>) -> Result<FiniteGroupoid> {
        if labels.len() != self.arrow_count() {
            return Err(Error::Validation("relabel: wrong number of labels".into()));
        }
        check_distinct("arrow", &labels).map_err(Error::Validation)?;
        let mut g = self.clone();
        g.labels = labels;
        g.fingerprint = g.compute_fingerprint();
        Ok(g)
    }
}

fn check_distinct(kind: &str, names: &[String]) -> std::result::Result<(), String> {
    let mut seen = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if seen.insert(n.as_str(), i).is_some() {
            return Err(format!("duplicate {} label `{}`", kind, n));
        }
    }
    Ok(())
}
