use crate::algebra::{quotient_group, CosetSpace, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::transitive::TransitivePair;

const NONE: usize = usize::MAX;

/// `π: K/H → M`, `kH ↦ k.m`, with structure group `Λ = Stab_m/H` acting on
/// the right by `kH·sH = ksH`.
#[derive(Clone, Debug)]
pub struct PrincipalBundle {
    cosets: CosetSpace,
    projection: Vec<usize>,
    structure: FiniteGroup,
    /// Representative in `K` of each element of `Λ`.
    lambda_reps: Vec<usize>,
    right: Vec<usize>,
    delta: Vec<usize>,
    section: Vec<usize>,
    objects: usize,
}

pub fn build_bundle(p: &TransitivePair) -> Result<PrincipalBundle> {
    let k = p.group();
    let cosets = CosetSpace::new(k, p.h())?;
    let n = cosets.len();
    let m = p.objects().len();
    let projection: Vec<usize> = (0..n).map(|c| p.action().act(cosets.rep(c), p.basepoint())).collect();
    for c in 0..n {
        if cosets.class(c).iter().any(|&x| p.action().act(x, p.basepoint()) != projection[c]) {
            return Err(Error::InternalLawViolation("π depends on the coset representative".into()));
        }
    }

    let (stab, inclusion) = p.stabilizer().as_group(k);
    let h_in_stab = Subgroup::new(
        &stab,
        p.h().members().iter().map(|x| inclusion.iter().position(|y| y == x).expect("H ⊆ Stab_m")),
    )?;
    let (structure, stab_cosets) = quotient_group(&stab, &h_in_stab, "H")?;
    let lambda_reps: Vec<usize> = (0..structure.order()).map(|l| inclusion[stab_cosets.rep(l)]).collect();
    let l = structure.order();

    let mut right = vec![NONE; n * l];
    for c in 0..n {
        for lam in 0..l {
            let target = cosets.coset_of(k.mul(cosets.rep(c), lambda_reps[lam]));
            // independent of both representatives
            for &x in cosets.class(c) {
                for &s in stab_cosets.class(lam) {
                    if cosets.coset_of(k.mul(x, inclusion[s])) != target {
                        return Err(Error::InternalLawViolation("right Λ-action not well defined".into()));
                    }
                }
            }
            right[c * l + lam] = target;
        }
    }

    let mut delta = vec![NONE; n * n];
    for c in 0..n {
        for lam in 0..l {
            let d = right[c * l + lam];
            if projection[d] != projection[c] {
                return Err(Error::InternalLawViolation("Λ moves a point off its fiber".into()));
            }
            if delta[c * n + d] != NONE {
                return Err(Error::InternalLawViolation("Λ does not act freely".into()));
            }
            delta[c * n + d] = lam;
        }
    }
    for c in 0..n {
        for d in 0..n {
            if projection[c] == projection[d] && delta[c * n + d] == NONE {
                return Err(Error::InternalLawViolation("Λ is not transitive on a fiber".into()));
            }
        }
    }

    let section = minimal_section(&projection, m)?;
    Ok(PrincipalBundle {
        cosets,
        projection,
        structure,
        lambda_reps,
        right,
        delta,
        section,
        objects: m,
    })
}

fn minimal_section(projection: &[usize], m: usize) -> Result<Vec<usize>> {
    (0..m)
        .map(|x| {
            projection
                .iter()
                .position(|&y| y == x)
                .ok_or_else(|| Error::InternalLawViolation("π is not surjective".into()))
        })
        .collect()
}

impl PrincipalBundle {
    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    pub fn total_size(&self) -> usize {
        self.cosets.len()
    }

    pub fn project(&self, c: usize) -> usize {
        self.projection[c]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// `Λ_m`
    pub fn structure_group(&self) -> &FiniteGroup {
        &self.structure
    }

    pub fn lambda_rep(&self, lam: usize) -> usize {
        self.lambda_reps[lam]
    }

    /// `c·λ`
    pub fn right(&self, c: usize, lam: usize) -> usize {
        self.right[c * self.structure.order() + lam]
    }

    /// The `λ` with `p·λ = q`, when `π(p) = π(q)`.
    pub fn delta(&self, p: usize, q: usize) -> Option<usize> {
        let d = self.delta[p * self.cosets.len() + q];
        (d != NONE).then_some(d)
    }

    /// Canonical section: the minimal coset over each point.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    /// The maximal coset over each point, used to check section independence.
    pub fn alternative_section(&self) -> Vec<usize> {
        (0..self.objects)
            .map(|x| self.projection.iter().rposition(|&y| y == x).expect("π surjective"))
            .collect()
    }

    pub fn fiber(&self, x: usize) -> Vec<usize> {
        (0..self.cosets.len()).filter(|&c| self.projection[c] == x).collect()
    }
}
