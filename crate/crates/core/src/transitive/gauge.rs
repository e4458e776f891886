use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, GroupoidMorphism};
use crate::transitive::{build_bundle, PairMorphism, PrincipalBundle, TransitivePair};

/// `(K/H × K/H)/Λ_m`. Arrow `⟨p, q⟩` goes `π(q) → π(p)`; arrows are keyed by
/// the lexicographically least pair in their orbit and listed in that order.
#[derive(Clone, Debug)]
pub struct GaugeGroupoid {
    pair: TransitivePair,
    groupoid: FiniteGroupoid,
    bundle: PrincipalBundle,
    reps: Vec<(usize, usize)>,
    arrow_of: Vec<usize>,
}

pub fn gauge_groupoid(p: &TransitivePair) -> Result<GaugeGroupoid> {
    let bundle = build_bundle(p)?;
    let n = bundle.total_size();
    let l = bundle.structure_group().order();
    let mut arrow_of = vec![usize::MAX; n * n];
    let mut reps = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if arrow_of[a * n + b] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push((a, b));
            for lam in 0..l {
                arrow_of[bundle.right(a, lam) * n + bundle.right(b, lam)] = id;
            }
        }
    }
    let k = p.group();
    let name = |c: usize| format!("{}H", k.name(bundle.cosets().rep(c)));
    let labels = reps.iter().map(|&(a, b)| format!("<{},{}>", name(a), name(b))).collect();
    let source = reps.iter().map(|&(_, b)| bundle.project(b)).collect();
    let target = reps.iter().map(|&(a, _)| bundle.project(a)).collect();
    let unit = bundle.section().iter().map(|&c| arrow_of[c * n + c]).collect();
    let inverse = reps.iter().map(|&(a, b)| arrow_of[b * n + a]).collect();
    let groupoid = FiniteGroupoid::from_fn(p.objects().to_vec(), labels, source, target, unit, inverse, |i, j| {
        // ⟨p,q⟩·⟨r,s⟩ = ⟨p, s·δ(r,q)⟩
        let (pp, q) = reps[i];
        let (r, s) = reps[j];
        match bundle.delta(r, q) {
            Some(lam) => arrow_of[pp * n + bundle.right(s, lam)],
            None => usize::MAX,
        }
    })
    .map_err(|v| Error::InternalLawViolation(format!("gauge groupoid: {}", v)))?;
    Ok(GaugeGroupoid {
        pair: p.clone(),
        groupoid,
        bundle,
        reps,
        arrow_of,
    })
}

impl GaugeGroupoid {
    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn pair(&self) -> &TransitivePair {
        &self.pair
    }

    pub fn bundle(&self) -> &PrincipalBundle {
        &self.bundle
    }

    /// `⟨p, q⟩` for cosets `p`, `q`.
    pub fn arrow(&self, p: usize, q: usize) -> usize {
        self.arrow_of[p * self.bundle.total_size() + q]
    }

    /// Canonical representative pair of an arrow.
    pub fn representative(&self, a: usize) -> (usize, usize) {
        self.reps[a]
    }

    /// `⟨kH, gH⟩` for group elements `k`, `g`.
    pub fn arrow_of_elements(&self, k: usize, g: usize) -> usize {
        let c = self.bundle.cosets();
        self.arrow(c.coset_of(k), c.coset_of(g))
    }
}

/// `R(φ): ⟨kH, gH⟩ ↦ ⟨φ(k)H', φ(g)H'⟩`, checked for independence of the
/// representatives `k`, `g`.
pub fn gauge_on_morphism(phi: &PairMorphism, source: &GaugeGroupoid, target: &GaugeGroupoid) -> Result<GroupoidMorphism> {
    let k = source.pair.group();
    let mut map = vec![usize::MAX; source.groupoid.arrow_count()];
    for a in k.elements() {
        for b in k.elements() {
            let here = source.arrow_of_elements(a, b);
            let there = target.arrow_of_elements(phi.apply(a), phi.apply(b));
            if map[here] == usize::MAX {
                map[here] = there;
            } else if map[here] != there {
                return Err(Error::InternalLawViolation(format!(
                    "R(φ) depends on the representatives of {}",
                    source.groupoid.label(here)
                )));
            }
        }
    }
    GroupoidMorphism::new(&source.groupoid, &target.groupoid, map)
}
