use crate::algebra::Permutation;
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;

/// A section `σ` of `α` with `β∘σ` a bijection of the base. Stored as its
/// table `x ↦ σ(x)`, tagged with the owning groupoid's fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bisection {
    groupoid: u64,
    section: Vec<usize>,
}

impl Bisection {
    pub fn new(g: &FiniteGroupoid, section: Vec<usize>) -> Result<Self> {
        check_bisection(g, &section)?;
        Ok(Bisection {
            groupoid: g.fingerprint(),
            section,
        })
    }

    pub(crate) fn from_section_unchecked(g: &FiniteGroupoid, section: Vec<usize>) -> Self {
        Bisection {
            groupoid: g.fingerprint(),
            section,
        }
    }

    /// The unit section `x ↦ 1_x`.
    pub fn unit(g: &FiniteGroupoid) -> Self {
        Bisection {
            groupoid: g.fingerprint(),
            section: (0..g.object_count()).map(|x| g.unit(x)).collect(),
        }
    }

    /// A bisection through `a`: `a` and `a⁻¹` swap its endpoints, units elsewhere.
    pub fn through(g: &FiniteGroupoid, a: usize) -> Self {
        let mut section: Vec<usize> = (0..g.object_count()).map(|x| g.unit(x)).collect();
        let (x, y) = (g.source(a), g.target(a));
        section[x] = a;
        if x != y {
            section[y] = g.inverse(a);
        }
        Bisection {
            groupoid: g.fingerprint(),
            section,
        }
    }

    pub fn groupoid(&self) -> u64 {
        self.groupoid
    }

    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn into_section(self) -> Vec<usize> {
        self.section
    }

    pub fn apply(&self, x: usize) -> usize {
        self.section[x]
    }

    /// `β∘σ`
    pub fn beta(&self, g: &FiniteGroupoid) -> Permutation {
        Permutation::from_images(self.section.iter().map(|&a| g.target(a)).collect())
            .expect("bisection has bijective target map")
    }

    /// `(σ ⋆ τ)(x) = σ(β(τ(x)))·τ(x)`
    pub fn star(&self, other: &Bisection, g: &FiniteGroupoid) -> Result<Bisection> {
        if self.groupoid != g.fingerprint() || other.groupoid != g.fingerprint() {
            return Err(Error::MixedGroupoids);
        }
        Ok(Bisection {
            groupoid: self.groupoid,
            section: star_tables(g, &self.section, &other.section),
        })
    }

    /// `σ⁻¹(x) = ι(σ((β∘σ)⁻¹(x)))`
    pub fn invert(&self, g: &FiniteGroupoid) -> Result<Bisection> {
        if self.groupoid != g.fingerprint() {
            return Err(Error::MixedGroupoids);
        }
        Ok(Bisection {
            groupoid: self.groupoid,
            section: invert_table(g, &self.section),
        })
    }
}

pub(crate) fn star_tables(g: &FiniteGroupoid, s: &[usize], t: &[usize]) -> Vec<usize> {
    t.iter().map(|&tx| g.comp(s[g.target(tx)], tx)).collect()
}

pub(crate) fn invert_table(g: &FiniteGroupoid, s: &[usize]) -> Vec<usize> {
    let mut pre = vec![0; s.len()];
    for (x, &a) in s.iter().enumerate() {
        pre[g.target(a)] = x;
    }
    (0..s.len()).map(|x| g.inverse(s[pre[x]])).collect()
}

pub fn check_bisection(g: &FiniteGroupoid, section: &[usize]) -> Result<()> {
    if section.len() != g.object_count() {
        return Err(Error::NotABisection(format!(
            "{} values for {} objects",
            section.len(),
            g.object_count()
        )));
    }
    let mut hit = vec![false; g.object_count()];
    for (x, &a) in section.iter().enumerate() {
        if a >= g.arrow_count() {
            return Err(Error::NotABisection(format!("arrow id {} out of range", a)));
        }
        if g.source(a) != x {
            return Err(Error::NotABisection(format!(
                "{} does not start at {}",
                g.label(a),
                g.objects()[x]
            )));
        }
        if std::mem::replace(&mut hit[g.target(a)], true) {
            return Err(Error::NotABisection(format!(
                "target {} hit twice",
                g.objects()[g.target(a)]
            )));
        }
    }
    Ok(())
}
