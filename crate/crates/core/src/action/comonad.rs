//! The comonad `B = ⋉ ∘ Bis` with counit `ev` and comultiplication
//! `δ_G(σ, m) = (x ↦ (σ, x), m)`.

use std::collections::HashMap;

use crate::action::{b_on_morphism, const_unit, constant_section, ltimes_on_morphism, BisectionAction};
use crate::bisection::check_bisection;
use crate::error::Result;
use crate::groupoid::{FiniteGroupoid, GroupoidMorphism};
use crate::harness::engine::{Law, Table};

/// `δ_G: B(G) → B(B(G))`, validated as a morphism. `bbg` must be `B(B(G))`.
pub fn comultiplication(bg: &BisectionAction, bbg: &BisectionAction) -> Result<GroupoidMorphism> {
    let c = const_unit(bg.action(), bbg.bis())?;
    let delta = ltimes_on_morphism(&c, bg.action(), bbg.action());
    GroupoidMorphism::new(bg.groupoid(), bbg.groupoid(), delta.into_map())
}

/// Tables of `B(B(G))` level structure.
#[derive(Clone, Debug)]
pub struct ComultiplicationTables {
    /// `δ_G: B(G) → B(B(G))`
    pub delta: Table,
    /// `ev_{B(G)}: B(B(G)) → B(G)`
    pub ev_b: Table,
    /// `B(ev_G): B(B(G)) → B(G)`
    pub b_ev: Table,
    /// Sections of `Bis(B(G))`, over arrows of `B(G)`.
    pub bbis_sections: Vec<Vec<usize>>,
}

/// Everything the comonad laws read, as plain tables.
#[derive(Clone, Debug)]
pub struct ComonadTables {
    pub objects: usize,
    pub bg: FiniteGroupoid,
    /// Sections of `Bis(G)`.
    pub bis_sections: Vec<Vec<usize>>,
    /// `ev_G: B(G) → G`
    pub ev: Table,
    pub full: Option<ComultiplicationTables>,
}

impl ComonadTables {
    /// `bbg = Some(B(B(G)))` enables the table form of all three laws.
    pub fn build(bg: &BisectionAction, bbg: Option<&BisectionAction>) -> Result<Self> {
        let full = match bbg {
            None => None,
            Some(bbg) => {
                let delta = comultiplication(bg, bbg)?;
                let b_ev = b_on_morphism(&bg.ev(), bbg, bg)?;
                Some(ComultiplicationTables {
                    delta: delta.into_map(),
                    ev_b: bbg.ev().into_map(),
                    b_ev: b_ev.into_map(),
                    bbis_sections: bbg.bis().sections().to_vec(),
                })
            }
        };
        Ok(ComonadTables {
            objects: bg.groupoid().object_count(),
            bg: bg.groupoid().clone(),
            bis_sections: bg.bis().sections().to_vec(),
            ev: bg.ev().into_map(),
            full,
        })
    }

    pub fn laws(&self, subject: &str) -> Vec<Law> {
        let labels = self.bg.labels().to_vec();
        match &self.full {
            Some(full) => {
                let m = self.objects;
                let (delta, sections) = (full.delta.clone(), full.bbis_sections.clone());
                let coassoc = Law::predicate("comonad.coassociativity", subject, labels.clone(), move |a| {
                    // δ(a) = (τ, p); δ_{B(G)}(τ, p) = (x ↦ (τ, x), p) and B(δ)(τ, p) = (δ∘τ, p)
                    let d = *delta.get(a).ok_or("δ table too short")?;
                    let tau = sections.get(d / m).ok_or("δ(a) outside B(B(G))")?;
                    let lhs: Vec<usize> = (0..m).map(|x| (d / m) * m + x).collect();
                    let rhs = tau
                        .iter()
                        .map(|&b| delta.get(b).copied().ok_or("δ table too short"))
                        .collect::<std::result::Result<Vec<_>, _>>()?;
                    if lhs == rhs {
                        Ok(())
                    } else {
                        Err(format!("δ_B(δ(a)) has section {:?}, B(δ)(δ(a)) has {:?}", lhs, rhs))
                    }
                });
                vec![
                    Law::equation(
                        "comonad.counit-evaluation",
                        subject,
                        labels.clone(),
                        vec![full.ev_b.clone(), full.delta.clone()],
                        vec![],
                    ),
                    Law::equation(
                        "comonad.counit-bisection",
                        subject,
                        labels,
                        vec![full.b_ev.clone(), full.delta.clone()],
                        vec![],
                    ),
                    coassoc,
                ]
            }
            None => self.extensional_counit_laws(subject, labels),
        }
    }

    // δ(σ, m) = (c_σ, m) with c_σ = x ↦ (σ, x) kept as a section table over B(G).
    fn extensional_counit_laws(&self, subject: &str, labels: Vec<String>) -> Vec<Law> {
        let m = self.objects;
        let bg = self.bg.clone();
        let left = Law::predicate("comonad.counit-evaluation", subject, labels.clone(), move |a| {
            let c: Vec<usize> = (0..m).map(|x| (a / m) * m + x).collect();
            check_bisection(&bg, &c).map_err(|e| e.to_string())?;
            if c[a % m] == a {
                Ok(())
            } else {
                Err(format!("ev gives {}", c[a % m]))
            }
        });
        let index: HashMap<Vec<usize>, usize> =
            self.bis_sections.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let ev = self.ev.clone();
        let right = Law::predicate("comonad.counit-bisection", subject, labels, move |a| {
            let back = (0..m)
                .map(|x| ev.get((a / m) * m + x).copied().ok_or("ev table too short"))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            match index.get(&back) {
                Some(&j) if j * m + a % m == a => Ok(()),
                Some(&j) => Err(format!("B(ev)∘δ gives bisection #{}", j)),
                None => Err(format!("ev∘c_σ = {:?} is not a bisection", back)),
            }
        });
        vec![left, right]
    }
}

/// `δ` on one arrow, as the constant section it lands on.
pub fn comultiplication_section(bg: &BisectionAction, a: usize) -> Vec<usize> {
    constant_section(bg.action(), bg.action().element(a))
}
