use std::collections::HashMap;

use crate::algebra::{FiniteGroup, Permutation, Subgroup};
use crate::bisection::{
    section::{invert_table, star_tables},
    Bisection, SliceMorphism, SlicedGroupHom,
};
use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, GroupoidMorphism};
use crate::Limits;

/// All bisections of a groupoid, as a group under the star product.
///
/// Element `i` is `sections()[i]`; sections are in lexicographic order of
/// their tables, so the unit section is usually not element 0.
#[derive(Clone, Debug)]
pub struct BisectionGroup {
    groupoid: u64,
    objects: Vec<String>,
    sections: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    group: FiniteGroup,
    beta: Vec<Permutation>,
}

/// Section tables of every bisection, by perfect-matching backtracking over
/// the objects in order: each `x` picks an arrow out of `x` whose target is
/// still unused.
pub fn enumerate_sections(g: &FiniteGroupoid, cap: usize) -> Result<Vec<Vec<usize>>> {
    struct Walk<'a> {
        g: &'a FiniteGroupoid,
        used: Vec<bool>,
        current: Vec<usize>,
        out: Vec<Vec<usize>>,
        explored: usize,
        cap: usize,
    }
    impl Walk<'_> {
        fn go(&mut self, x: usize) -> Result<()> {
            if x == self.g.object_count() {
                self.out.push(self.current.clone());
                return Ok(());
            }
            for &a in self.g.arrows_from(x) {
                let y = self.g.target(a);
                if self.used[y] {
                    continue;
                }
                self.explored += 1;
                if self.explored > self.cap {
                    return Err(Error::CapExceeded {
                        explored: self.explored,
                        cap: self.cap,
                    });
                }
                self.used[y] = true;
                self.current.push(a);
                self.go(x + 1)?;
                self.current.pop();
                self.used[y] = false;
            }
            Ok(())
        }
    }
    let mut walk = Walk {
        g,
        used: vec![false; g.object_count()],
        current: Vec::with_capacity(g.object_count()),
        out: Vec::new(),
        explored: 0,
        cap,
    };
    walk.go(0)?;
    log::debug!("{} bisections after {} nodes", walk.out.len(), walk.explored);
    Ok(walk.out)
}

/// `Bis(G)` with its multiplication table. The group axioms are verified.
pub fn enumerate_bisections(g: &FiniteGroupoid, limits: &Limits) -> Result<BisectionGroup> {
    let mut sections = enumerate_sections(g, limits.search_nodes)?;
    sections.sort();
    if sections.len() > limits.group_order {
        return Err(Error::CapExceeded {
            explored: sections.len(),
            cap: limits.group_order,
        });
    }
    let index: HashMap<Vec<usize>, usize> = sections.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let n = sections.len();
    let lookup = |s: Vec<usize>| -> Result<usize> {
        index
            .get(&s)
            .copied()
            .ok_or_else(|| Error::InternalLawViolation("bisections not closed under ⋆".into()))
    };
    let mut table = Vec::with_capacity(n * n);
    for s in &sections {
        for t in &sections {
            table.push(lookup(star_tables(g, s, t))?);
        }
    }
    let unit: Vec<usize> = (0..g.object_count()).map(|x| g.unit(x)).collect();
    let identity = lookup(unit)?;
    let inverse = sections
        .iter()
        .map(|s| lookup(invert_table(g, s)))
        .collect::<Result<Vec<_>>>()?;
    let names = sections.iter().map(|s| section_name(g, s)).collect();
    let group = FiniteGroup::new(names, table, identity, inverse)?;
    let beta = sections
        .iter()
        .map(|s| Permutation::from_images(s.iter().map(|&a| g.target(a)).collect()).expect("bijective"))
        .collect();
    Ok(BisectionGroup {
        groupoid: g.fingerprint(),
        objects: g.objects().to_vec(),
        sections,
        index,
        group,
        beta,
    })
}

/// `[σ(x₁)|σ(x₂)|…]` in arrow labels.
pub fn section_name(g: &FiniteGroupoid, section: &[usize]) -> String {
    let parts: Vec<&str> = section.iter().map(|&a| g.label(a)).collect();
    format!("[{}]", parts.join("|"))
}

impl BisectionGroup {
    pub fn groupoid(&self) -> u64 {
        self.groupoid
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.sections.len()
    }

    pub fn sections(&self) -> &[Vec<usize>] {
        &self.sections
    }

    pub fn section(&self, i: usize) -> &[usize] {
        &self.sections[i]
    }

    pub fn bisection(&self, g: &FiniteGroupoid, i: usize) -> Bisection {
        Bisection::from_section_unchecked(g, self.sections[i].clone())
    }

    pub fn index_of(&self, section: &[usize]) -> Option<usize> {
        self.index.get(section).copied()
    }

    /// `β∘σᵢ`
    pub fn beta(&self, i: usize) -> &Permutation {
        &self.beta[i]
    }

    pub fn unit_index(&self) -> usize {
        self.group.identity()
    }

    fn check_owner(&self, g: &FiniteGroupoid) -> Result<()> {
        if g.fingerprint() != self.groupoid {
            return Err(Error::MixedGroupoids);
        }
        Ok(())
    }
}

/// `β_*: Bis(G) → Sym(M)`, `σ ↦ β∘σ`.
pub fn beta_star(bis: &BisectionGroup) -> SlicedGroupHom {
    SlicedGroupHom::from_parts_unchecked(bis.group.clone(), bis.objects.clone(), bis.beta.clone())
}

/// `Bis(φ): σ ↦ φ∘σ`, a morphism in the slice over `Sym(M)`.
pub fn bis_on_morphism(phi: &GroupoidMorphism, source: &BisectionGroup, target: &BisectionGroup) -> Result<SliceMorphism> {
    let map = source
        .sections
        .iter()
        .map(|s| {
            let image: Vec<usize> = s.iter().map(|&a| phi.apply(a)).collect();
            target.index_of(&image).ok_or_else(|| {
                Error::InternalLawViolation("φ∘σ is not a bisection of the target".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceMorphism::from_map_unchecked(map))
}

/// `(Loop_m, Bis_m)`: bisections with `σ(m)` a loop at `m`, and those with `σ(m) = 1_m`.
pub fn stabilizer_subgroups(g: &FiniteGroupoid, bis: &BisectionGroup, m: usize) -> Result<(Subgroup, Subgroup)> {
    bis.check_owner(g)?;
    if m >= g.object_count() {
        return Err(Error::PointNotInBase(m));
    }
    let n = bis.order();
    let loops = Subgroup::from_mask_unchecked((0..n).map(|i| bis.beta[i].apply(m) == m).collect());
    let fixed = Subgroup::from_mask_unchecked((0..n).map(|i| bis.sections[i][m] == g.unit(m)).collect());
    if let Err((a, b)) = fixed.normal_witness(&bis.group, &loops) {
        return Err(Error::InternalLawViolation(format!(
            "Bis_m not normal in Loop_m: {} conjugating {}",
            bis.group.name(a),
            bis.group.name(b)
        )));
    }
    Ok((loops, fixed))
}

/// First arrow not in the image of any enumerated bisection, by direct scan.
pub fn arrow_without_bisection(g: &FiniteGroupoid, bis: &BisectionGroup) -> Result<Option<usize>> {
    bis.check_owner(g)?;
    let mut covered = vec![false; g.arrow_count()];
    for s in &bis.sections {
        for &a in s {
            covered[a] = true;
        }
    }
    Ok(covered.iter().position(|c| !c))
}

pub fn has_bisection_through_each_arrow(g: &FiniteGroupoid, bis: &BisectionGroup) -> Result<bool> {
    Ok(arrow_without_bisection(g, bis)?.is_none())
}
