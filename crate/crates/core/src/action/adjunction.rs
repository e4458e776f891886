use crate::action::{ltimes_on_morphism, ActionGroupoid, BisectionAction};
use crate::algebra::check_hom;
use crate::bisection::{beta_star, bis_on_morphism, enumerate_slice_morphisms, BisectionGroup, SliceMorphism};
use crate::error::{Error, Result};
use crate::groupoid::{check_morphism, enumerate_morphisms, FiniteGroupoid, GroupoidMorphism};
use crate::harness::engine::Law;

/// `x ↦ (k, x)` in `K ⋉ M`.
pub fn constant_section(s: &ActionGroupoid, k: usize) -> Vec<usize> {
    (0..s.groupoid().object_count()).map(|x| s.arrow(k, x)).collect()
}

/// `f^∧: k ↦ (x ↦ f(k, x))`.
pub fn curry_hom(f: &GroupoidMorphism, s: &ActionGroupoid, g: &FiniteGroupoid, bis: &BisectionGroup) -> Result<SliceMorphism> {
    if bis.groupoid() != g.fingerprint() {
        return Err(Error::MixedGroupoids);
    }
    let k = s.sliced().group();
    let map = k
        .elements()
        .map(|e| {
            let section: Vec<usize> = constant_section(s, e).into_iter().map(|a| f.apply(a)).collect();
            bis.index_of(&section).ok_or_else(|| {
                Error::InternalLawViolation(format!("f^∧({}) is not a bisection", k.name(e)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    for e in k.elements() {
        if bis.beta(map[e]) != s.sliced().permutation(e) {
            return Err(Error::InternalLawViolation(format!(
                "β_*∘f^∧ and φ differ at {}",
                k.name(e)
            )));
        }
    }
    check_hom(k, bis.group(), &map).map_err(|e| Error::InternalLawViolation(e.to_string()))?;
    Ok(SliceMorphism::from_map_unchecked(map))
}

/// `ψ^∨: (k, x) ↦ ψ(k)(x)`.
pub fn uncurry_hom(psi: &SliceMorphism, s: &ActionGroupoid, bis: &BisectionGroup) -> GroupoidMorphism {
    let map = s
        .groupoid()
        .arrows()
        .map(|a| bis.section(psi.apply(s.element(a)))[s.point(a)])
        .collect();
    GroupoidMorphism::from_map_unchecked(map)
}

/// `ev_G: B(G) → G`.
pub fn ev_counit(bg: &BisectionAction) -> GroupoidMorphism {
    bg.ev()
}

/// `const: K → Bis(K ⋉ M)`, `k ↦ (x ↦ (k, x))`. `bis` must be `Bis(K ⋉ M)`.
pub fn const_unit(s: &ActionGroupoid, bis: &BisectionGroup) -> Result<SliceMorphism> {
    if bis.groupoid() != s.groupoid().fingerprint() {
        return Err(Error::MixedGroupoids);
    }
    let map = s
        .sliced()
        .group()
        .elements()
        .map(|k| {
            bis.index_of(&constant_section(s, k))
                .ok_or_else(|| Error::InternalLawViolation("constant section is not a bisection".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceMorphism::from_map_unchecked(map))
}

/// Both hom-sets of `⋉ ⊣ Bis` for one `(K → Sym(M), G)`.
#[derive(Clone, Debug)]
pub struct LtimesHomSets {
    pub groupoid_side: Vec<GroupoidMorphism>,
    pub slice_side: Vec<SliceMorphism>,
}

pub fn ltimes_hom_sets(s: &ActionGroupoid, g: &FiniteGroupoid, bis: &BisectionGroup, cap: usize) -> Result<LtimesHomSets> {
    Ok(LtimesHomSets {
        groupoid_side: enumerate_morphisms(s.groupoid(), g, cap)?,
        slice_side: enumerate_slice_morphisms(s.sliced(), &beta_star(bis), cap)?,
    })
}

/// curry and uncurry are mutually inverse between the independently
/// enumerated hom-sets.
pub fn ltimes_bijection_laws(
    subject: &str,
    s: &ActionGroupoid,
    g: &FiniteGroupoid,
    bis: &BisectionGroup,
    homs: &LtimesHomSets,
) -> Vec<Law> {
    let (s1, g1, b1, h1) = (s.clone(), g.clone(), bis.clone(), homs.clone());
    let curry_labels = homs.groupoid_side.iter().map(|f| format!("{:?}", f.map())).collect();
    let curry_law = Law::predicate("ltimes-adjunction.uncurry-curry", subject, curry_labels, move |i| {
        let f = &h1.groupoid_side[i];
        let c = curry_hom(f, &s1, &g1, &b1).map_err(|e| e.to_string())?;
        if !h1.slice_side.contains(&c) {
            return Err("f^∧ not among the enumerated slice morphisms".into());
        }
        if uncurry_hom(&c, &s1, &b1) != *f {
            return Err("(f^∧)^∨ ≠ f".into());
        }
        Ok(())
    });
    let (s2, g2, b2, h2) = (s.clone(), g.clone(), bis.clone(), homs.clone());
    let uncurry_labels = homs.slice_side.iter().map(|p| format!("{:?}", p.map())).collect();
    let uncurry_law = Law::predicate("ltimes-adjunction.curry-uncurry", subject, uncurry_labels, move |i| {
        let psi = &h2.slice_side[i];
        let u = uncurry_hom(psi, &s2, &b2);
        check_morphism(s2.groupoid(), &g2, u.map()).map_err(|e| e.to_string())?;
        if !h2.groupoid_side.contains(&u) {
            return Err("ψ^∨ not among the enumerated morphisms".into());
        }
        if curry_hom(&u, &s2, &g2, &b2).map_err(|e| e.to_string())? != *psi {
            return Err("(ψ^∨)^∧ ≠ ψ".into());
        }
        Ok(())
    });
    let count = if homs.groupoid_side.len() == homs.slice_side.len() {
        Ok(())
    } else {
        Err(format!(
            "{} groupoid morphisms, {} slice morphisms",
            homs.groupoid_side.len(),
            homs.slice_side.len()
        ))
    };
    vec![
        curry_law,
        uncurry_law,
        Law::single("ltimes-adjunction.cardinality", subject, count),
    ]
}

/// `curry(φ∘f) = Bis(φ)∘curry(f)` for every `f: K⋉M → G`.
pub fn ltimes_naturality_in_groupoid(
    subject: &str,
    s: &ActionGroupoid,
    source: (&FiniteGroupoid, &BisectionGroup),
    target: (&FiniteGroupoid, &BisectionGroup),
    phi: &GroupoidMorphism,
    homs: &[GroupoidMorphism],
) -> Result<Law> {
    let bis_phi = bis_on_morphism(phi, source.1, target.1)?;
    let (s, g, bg, g2, bg2, phi, homs) = (
        s.clone(),
        source.0.clone(),
        source.1.clone(),
        target.0.clone(),
        target.1.clone(),
        phi.clone(),
        homs.to_vec(),
    );
    let labels = homs.iter().map(|f| format!("{:?}", f.map())).collect();
    Ok(Law::predicate("ltimes-adjunction.natural-in-groupoid", subject, labels, move |i| {
        let f = &homs[i];
        let lhs = curry_hom(&GroupoidMorphism::compose(&phi, f), &s, &g2, &bg2).map_err(|e| e.to_string())?;
        let rhs = SliceMorphism::compose(&bis_phi, &curry_hom(f, &s, &g, &bg).map_err(|e| e.to_string())?);
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("curry(φ∘f) = {:?}, Bis(φ)∘curry(f) = {:?}", lhs.map(), rhs.map()))
        }
    }))
}

/// `curry(f∘⋉(ψ)) = curry(f)∘ψ` for `ψ: K' → K` and every `f: K⋉M → G`.
pub fn ltimes_naturality_in_group(
    subject: &str,
    psi: &SliceMorphism,
    s_source: &ActionGroupoid,
    s_target: &ActionGroupoid,
    g: &FiniteGroupoid,
    bis: &BisectionGroup,
    homs: &[GroupoidMorphism],
) -> Law {
    let ltimes_psi = ltimes_on_morphism(psi, s_source, s_target);
    let (psi, s_source, s_target, g, bis, homs) =
        (psi.clone(), s_source.clone(), s_target.clone(), g.clone(), bis.clone(), homs.to_vec());
    let labels = homs.iter().map(|f| format!("{:?}", f.map())).collect();
    Law::predicate("ltimes-adjunction.natural-in-group", subject, labels, move |i| {
        let f = &homs[i];
        let lhs = curry_hom(&GroupoidMorphism::compose(f, &ltimes_psi), &s_source, &g, &bis).map_err(|e| e.to_string())?;
        let rhs = SliceMorphism::compose(&curry_hom(f, &s_target, &g, &bis).map_err(|e| e.to_string())?, &psi);
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("curry(f∘⋉ψ) = {:?}, curry(f)∘ψ = {:?}", lhs.map(), rhs.map()))
        }
    })
}

/// `ev_{K⋉M} ∘ ⋉(const) = id_{K⋉M}`; `bs` is `B(K⋉M)`.
pub fn triangle_ltimes(subject: &str, s: &ActionGroupoid, bs: &BisectionAction) -> Result<Law> {
    let c = const_unit(s, bs.bis())?;
    let lifted = ltimes_on_morphism(&c, s, bs.action());
    Ok(Law::equation(
        "ltimes-adjunction.triangle-ltimes",
        subject,
        s.groupoid().labels().to_vec(),
        vec![bs.ev().into_map(), lifted.into_map()],
        vec![],
    ))
}

/// `Bis(ev_G) ∘ const_{Bis G} = id_{Bis G}`. With `B(B(G))` at hand this is
/// an equation of tables; otherwise the constant sections are compared
/// extensionally, which needs only `Bis(G)`.
pub fn triangle_bis(subject: &str, g: &FiniteGroupoid, bg: &BisectionAction, bbg: Option<&BisectionAction>) -> Result<Law> {
    let labels = bg.bis().group().names().to_vec();
    let id = "ltimes-adjunction.triangle-bis";
    match bbg {
        Some(bbg) => {
            let c = const_unit(bg.action(), bbg.bis())?;
            let bis_ev = bis_on_morphism(&bg.ev(), bbg.bis(), bg.bis())?;
            Ok(Law::equation(id, subject, labels, vec![bis_ev.into_map(), c.into_map()], vec![]))
        }
        None => {
            let (g, bg) = (g.clone(), bg.clone());
            let ev = bg.ev();
            Ok(Law::predicate(id, subject, labels, move |i| {
                let c = constant_section(bg.action(), i);
                crate::bisection::check_bisection(bg.groupoid(), &c).map_err(|e| e.to_string())?;
                let back: Vec<usize> = c.iter().map(|&a| ev.apply(a)).collect();
                match bg.bis().index_of(&back) {
                    Some(j) if j == i => Ok(()),
                    _ => Err(format!("ev∘const gives {:?}", back.iter().map(|&a| g.label(a)).collect::<Vec<_>>())),
                }
            }))
        }
    }
}
