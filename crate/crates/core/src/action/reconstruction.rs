use crate::action::BisectionAction;
use crate::bisection::arrow_without_bisection;
use crate::error::{Error, Result};
use crate::groupoid::{
    check_effective_quotient, check_morphism, factor_through, quotient_groupoid, ArrowCongruence, FiniteGroupoid,
    GroupoidMorphism,
};
use crate::harness::engine::Law;

/// `G` recovered as `B(G)/R` with `R = {((σ,m),(τ,m)) | σ(m) = τ(m)}`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub relation: ArrowCongruence,
    pub quotient: FiniteGroupoid,
    pub projection: GroupoidMorphism,
    /// `B(G)/R → G`, the factorisation of `ev` through the projection.
    pub comparison: Option<GroupoidMorphism>,
    /// `|ev⁻¹(g)|` per arrow of `G`.
    pub fiber_sizes: Vec<usize>,
}

/// The relation as the equivalence closure of its defining pairs.
pub fn reconstruction_relation(bg: &BisectionAction) -> ArrowCongruence {
    let b = bg.groupoid();
    let m = b.object_count();
    let n = bg.bis().order();
    let mut pairs = Vec::new();
    for x in 0..m {
        for s in 0..n {
            for t in s + 1..n {
                if bg.bis().section(s)[x] == bg.bis().section(t)[x] {
                    pairs.push((s * m + x, t * m + x));
                }
            }
        }
    }
    ArrowCongruence::generated(b.arrow_count(), pairs)
}

pub fn reconstruct(g: &FiniteGroupoid, bg: &BisectionAction, ev: &GroupoidMorphism) -> Result<Reconstruction> {
    if let Some(a) = arrow_without_bisection(g, bg.bis())? {
        return Err(Error::HypothesisNotMet(format!("no bisection through {}", g.label(a))));
    }
    let relation = reconstruction_relation(bg);
    let (quotient, projection) = quotient_groupoid(bg.groupoid(), &relation)?;
    let comparison = factor_through(&relation, &projection, &quotient, ev);
    let mut fiber_sizes = vec![0; g.arrow_count()];
    for &a in ev.map() {
        if let Some(c) = fiber_sizes.get_mut(a) {
            *c += 1;
        }
    }
    Ok(Reconstruction {
        relation,
        quotient,
        projection,
        comparison,
        fiber_sizes,
    })
}

/// Congruence, surjectivity of `ev`, fibers = classes, effectiveness and
/// `B(G)/R ≅ G`. `ev` is passed explicitly so corrupted tables can be fed in.
pub fn quotient_reconstruction_laws(
    subject: &str,
    g: &FiniteGroupoid,
    bg: &BisectionAction,
    ev: &GroupoidMorphism,
) -> Result<(Reconstruction, Vec<Law>)> {
    let rec = reconstruct(g, bg, ev)?;
    let mut laws = Vec::new();
    laws.push(Law::single(
        "quotient.congruence",
        subject,
        rec.relation.validate(bg.groupoid()).map_err(|e| e.to_string()),
    ));
    let sizes = rec.fiber_sizes.clone();
    laws.push(Law::predicate("quotient.ev-surjective", subject, g.labels().to_vec(), move |a| {
        if sizes[a] > 0 {
            Ok(())
        } else {
            Err("empty fiber".into())
        }
    }));
    let (r, evm) = (rec.relation.clone(), ev.clone());
    let count = bg.groupoid().arrow_count();
    laws.push(Law::predicate("quotient.ev-fibers", subject, bg.groupoid().labels().to_vec(), move |a| {
        for b in 0..count {
            if (evm.apply(a) == evm.apply(b)) != r.related(a, b) {
                return Err(format!("disagreement with arrow #{}", b));
            }
        }
        Ok(())
    }));
    laws.push(Law::single(
        "quotient.effective",
        subject,
        if check_effective_quotient(bg.groupoid(), &rec.relation, &rec.projection) {
            Ok(())
        } else {
            Err("kernel pair of the projection differs from R".into())
        },
    ));
    let iso = match &rec.comparison {
        None => Err("ev does not coequalise R".to_string()),
        Some(c) => check_morphism(&rec.quotient, g, c.map())
            .map_err(|e| e.to_string())
            .and_then(|_| {
                if c.is_isomorphism(g) {
                    Ok(())
                } else {
                    Err("comparison B(G)/R → G is not bijective".into())
                }
            }),
    };
    laws.push(Law::single("quotient.isomorphism", subject, iso));
    Ok((rec, laws))
}
