//! `Bis` preserves kernels and pullbacks, checked on explicit instances.

use std::collections::HashSet;

use crate::bisection::{bis_on_morphism, BisectionGroup};
use crate::error::Result;
use crate::groupoid::{kernel, pullback, FiniteGroupoid, GroupoidMorphism};
use crate::harness::engine::Law;
use crate::bisection::enumerate_bisections;
use crate::Limits;

/// `Bis(ker f) = ker Bis(f)` as subsets of `Bis(A)`.
pub fn kernel_preservation(
    subject: &str,
    f: &GroupoidMorphism,
    a: (&FiniteGroupoid, &BisectionGroup),
    c: (&FiniteGroupoid, &BisectionGroup),
    limits: &Limits,
) -> Result<Law> {
    let (k, inclusion) = kernel(f, a.0, c.0)?;
    let bis_k = enumerate_bisections(&k, limits)?;
    let bis_f = bis_on_morphism(f, a.1, c.1)?;
    let via_kernel: HashSet<usize> = bis_k
        .sections()
        .iter()
        .map(|s| {
            let image: Vec<usize> = s.iter().map(|&x| inclusion.apply(x)).collect();
            a.1.index_of(&image).expect("bisection of a wide subgroupoid")
        })
        .collect();
    let unit = c.1.unit_index();
    let labels = a.1.group().names().to_vec();
    Ok(Law::predicate("limits.kernel", subject, labels, move |s| {
        let in_ker = bis_f.apply(s) == unit;
        if in_ker == via_kernel.contains(&s) {
            Ok(())
        } else if in_ker {
            Err("in ker Bis(f) but not a bisection of ker f".into())
        } else {
            Err("a bisection of ker f outside ker Bis(f)".into())
        }
    }))
}

/// `Bis(A ×_C B) → Bis(A) ×_{Bis C} Bis(B)` is a bijection.
pub fn pullback_preservation(
    subject: &str,
    a: (&FiniteGroupoid, &BisectionGroup, &GroupoidMorphism),
    b: (&FiniteGroupoid, &BisectionGroup, &GroupoidMorphism),
    c: &BisectionGroup,
    limits: &Limits,
) -> Result<Law> {
    let (p, pa, pb) = pullback(a.0, a.2, b.0, b.2)?;
    let bis_p = enumerate_bisections(&p, limits)?;
    let bis_f = bis_on_morphism(a.2, a.1, c)?;
    let bis_g = bis_on_morphism(b.2, b.1, c)?;
    let image: Vec<(usize, usize)> = bis_p
        .sections()
        .iter()
        .map(|s| {
            let sa: Vec<usize> = s.iter().map(|&x| pa.apply(x)).collect();
            let sb: Vec<usize> = s.iter().map(|&x| pb.apply(x)).collect();
            (a.1.index_of(&sa).expect("projection"), b.1.index_of(&sb).expect("projection"))
        })
        .collect();
    let image_set: HashSet<(usize, usize)> = image.iter().copied().collect();
    let injective = image_set.len() == image.len();
    let nb = b.1.order();
    let labels: Vec<String> = (0..a.1.order() * nb)
        .map(|i| format!("({},{})", a.1.group().name(i / nb), b.1.group().name(i % nb)))
        .collect();
    Ok(Law::predicate("limits.pullback", subject, labels, move |i| {
        if !injective {
            return Err("Bis(A ×_C B) → Bis(A) × Bis(B) is not injective".into());
        }
        let (s, t) = (i / nb, i % nb);
        let matched = bis_f.apply(s) == bis_g.apply(t);
        if matched == image_set.contains(&(s, t)) {
            Ok(())
        } else if matched {
            Err("matching pair not hit by a bisection of the pullback".into())
        } else {
            Err("pullback bisection over a non-matching pair".into())
        }
    }))
}
