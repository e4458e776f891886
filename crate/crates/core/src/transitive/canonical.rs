use crate::algebra::{GroupAction, Subgroup};
use crate::bisection::{
    arrow_without_bisection, enumerate_bisections, stabilizer_subgroups, BisectionGroup, SliceMorphism,
};
use crate::error::{Error, Result};
use crate::groupoid::{wide_subgroupoid, FiniteGroupoid, GroupoidMorphism};
use crate::transitive::{gauge_groupoid, GaugeGroupoid, PairMorphism, TransitivePair};
use crate::Limits;

/// `a(k) = x ↦ ⟨k·s(x), s(x)⟩` for a section `s` of `π`, as a section table
/// of the gauge groupoid.
pub fn a_section_with(r: &GaugeGroupoid, section: &[usize], k: usize) -> Vec<usize> {
    let cosets = r.bundle().cosets();
    let group = r.pair().group();
    section
        .iter()
        .map(|&c| r.arrow(cosets.left_translate(group, k, c), c))
        .collect()
}

/// `a(k)` for the canonical (minimal) section.
pub fn a_section(r: &GaugeGroupoid, k: usize) -> Vec<usize> {
    a_section_with(r, r.bundle().section(), k)
}

/// `a_{θ,H}: K → Bis(R(θ,H))` against an enumerated `Bis(R(θ,H))`.
pub fn a_canonical(r: &GaugeGroupoid, bis: &BisectionGroup) -> Result<SliceMorphism> {
    if bis.groupoid() != r.groupoid().fingerprint() {
        return Err(Error::MixedGroupoids);
    }
    let map = r
        .pair()
        .group()
        .elements()
        .map(|k| {
            bis.index_of(&a_section(r, k))
                .ok_or_else(|| Error::InternalLawViolation(format!("a({}) is not a bisection", r.pair().group().name(k))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceMorphism::from_map_unchecked(map))
}

/// Kernel of `a_{θ,H}`, read off the section tables.
pub fn a_kernel(r: &GaugeGroupoid) -> Subgroup {
    let g = r.groupoid();
    let units: Vec<usize> = (0..g.object_count()).map(|x| g.unit(x)).collect();
    let k = r.pair().group();
    Subgroup::new(k, k.elements().filter(|&e| a_section(r, e) == units)).expect("kernel of a homomorphism")
}

/// `Bis̄(G) = (β∘ev action of Bis(G) on M, Bis_m(G))`. Needs `G` locally
/// trivial with a bisection through each arrow.
pub fn bisbar(g: &FiniteGroupoid, bis: &BisectionGroup, m: usize) -> Result<TransitivePair> {
    if !g.is_locally_trivial() {
        return Err(Error::HypothesisNotMet("not locally trivial".into()));
    }
    if let Some(a) = arrow_without_bisection(g, bis)? {
        return Err(Error::HypothesisNotMet(format!("missing bisection through {}", g.label(a))));
    }
    let action = GroupAction::from_permutations(bis.group().clone(), g.objects().to_vec(), &(0..bis.order()).map(|i| bis.beta(i).clone()).collect::<Vec<_>>())?;
    let (_, fixed) = stabilizer_subgroups(g, bis, m)?;
    TransitivePair::new(action, m, fixed)
}

/// `Bis̄(ψ) = Bis(ψ)` as a pair morphism.
pub fn bisbar_on_morphism(
    psi: &GroupoidMorphism,
    source: (&BisectionGroup, &TransitivePair),
    target: (&BisectionGroup, &TransitivePair),
) -> Result<PairMorphism> {
    let bis_psi = crate::bisection::bis_on_morphism(psi, source.0, target.0)?;
    PairMorphism::new(source.1, target.1, bis_psi.into_map())
}

/// `G` together with `Bis(G)`, `Bis̄(G)`, `E(G) = R(Bis̄(G))` and `χ_G: E(G) → G`.
#[derive(Clone, Debug)]
pub struct Augmented {
    pub bis: BisectionGroup,
    pub pair: TransitivePair,
    pub gauge: GaugeGroupoid,
    pub chi: GroupoidMorphism,
}

pub fn augment(g: &FiniteGroupoid, m: usize, limits: &Limits) -> Result<Augmented> {
    let bis = enumerate_bisections(g, limits)?;
    augment_with(g, bis, m)
}

pub fn augment_with(g: &FiniteGroupoid, bis: BisectionGroup, m: usize) -> Result<Augmented> {
    let pair = bisbar(g, &bis, m)?;
    let gauge = gauge_groupoid(&pair)?;
    let chi = chi_canonical(g, &bis, &gauge)?;
    Ok(Augmented { bis, pair, gauge, chi })
}

/// `χ_G: ⟨σBis_m, τBis_m⟩ ↦ σ(m)·τ(m)⁻¹`, checked on every pair of representatives.
pub fn chi_canonical(g: &FiniteGroupoid, bis: &BisectionGroup, gauge: &GaugeGroupoid) -> Result<GroupoidMorphism> {
    let m = gauge.pair().basepoint();
    let value = |s: usize, t: usize| g.comp(bis.section(s)[m], g.inverse(bis.section(t)[m]));
    let mut map = vec![usize::MAX; gauge.groupoid().arrow_count()];
    for s in 0..bis.order() {
        for t in 0..bis.order() {
            let a = gauge.arrow_of_elements(s, t);
            let v = value(s, t);
            if map[a] == usize::MAX {
                map[a] = v;
            } else if map[a] != v {
                return Err(Error::InternalLawViolation(format!(
                    "χ depends on representatives of {}",
                    gauge.groupoid().label(a)
                )));
            }
        }
    }
    GroupoidMorphism::new(gauge.groupoid(), g, map)
}

/// `E(G)` with `χ^res` onto the wide subgroupoid of arrows lying on bisections.
#[derive(Clone, Debug)]
pub struct Coreflection {
    pub augmented: Augmented,
    pub covered: FiniteGroupoid,
    pub inclusion: GroupoidMorphism,
    /// `χ^res: E(G) → covered`, an isomorphism.
    pub restricted: GroupoidMorphism,
}

impl Coreflection {
    pub fn is_proper(&self, g: &FiniteGroupoid) -> bool {
        self.covered.arrow_count() < g.arrow_count()
    }
}

pub fn coreflector(g: &FiniteGroupoid, m: usize, limits: &Limits) -> Result<Coreflection> {
    let bis = enumerate_bisections(g, limits)?;
    if !g.is_locally_trivial() {
        return Err(Error::HypothesisNotMet("not locally trivial".into()));
    }
    let mut covered_arrows: Vec<usize> = bis.sections().iter().flatten().copied().collect();
    covered_arrows.sort_unstable();
    covered_arrows.dedup();
    let (covered, inclusion) = wide_subgroupoid(g, &covered_arrows)?;
    let augmented = augment_with(g, bis, m)?;
    let restricted_map = augmented
        .chi
        .map()
        .iter()
        .map(|a| {
            covered_arrows
                .binary_search(a)
                .map_err(|_| Error::InternalLawViolation("χ leaves the bisection-covered arrows".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let restricted = GroupoidMorphism::new(augmented.gauge.groupoid(), &covered, restricted_map)?;
    if !restricted.is_isomorphism(&covered) {
        return Err(Error::InternalLawViolation("χ^res is not an isomorphism".into()));
    }
    Ok(Coreflection {
        augmented,
        covered,
        inclusion,
        restricted,
    })
}
