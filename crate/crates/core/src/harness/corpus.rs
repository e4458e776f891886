//! The corpus and the law suites run over it.
//!
//! Morphisms between corpus objects are not stored: every suite enumerates
//! the hom-sets it needs (over the identity of the base) under the search cap.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::action::{
    b_on_morphism, bisection_action, bisection_action_of, kernel_preservation, ltimes, ltimes_bijection_laws,
    ltimes_hom_sets, ltimes_naturality_in_group, ltimes_naturality_in_groupoid, ltimes_on_morphism,
    quotient_reconstruction_laws, triangle_bis, triangle_ltimes, ActionGroupoid, BisectionAction, ComonadTables,
};
use crate::algebra::{validate_group, GroupAction};
use crate::bisection::{
    bis_on_morphism, enumerate_bisections, enumerate_slice_morphisms, has_bisection_through_each_arrow, BisectionGroup,
    SliceMorphism, SlicedGroupHom,
};
use crate::error::{Error, Result};
use crate::groupoid::{enumerate_morphisms, FiniteGroupoid, GroupoidMorphism};
use crate::harness::engine::{run_all, Law, LawReport};
use crate::harness::fixtures::all_fixtures;
use crate::harness::format::{load, Instance, Named};
use crate::transitive::{
    a_naturality, augment_with, bisbar_on_morphism, bundle_automorphism_law, canonical_laws, chi_naturality,
    coreflection_laws, coreflector, enumerate_pair_morphisms, equivalence_laws, gauge_groupoid, gauge_laws,
    gauge_on_morphism, gauge_pair_groupoid_law, r_adjunction_naturality_in_groupoid, r_adjunction_naturality_in_pair,
    r_functor_laws, triangle_bisbar, triangle_gauge, unit_data, Augmented, GaugeGroupoid, PairMorphism, RAdjunction,
    TransitivePair,
};
use crate::Limits;

/// Largest `|K/H|` for which bundle automorphisms are brute-forced.
const MAX_BUNDLE_BRUTE_FORCE: usize = 6;

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub groupoids: Vec<(String, FiniteGroupoid)>,
    pub actions: Vec<(String, GroupAction)>,
    pub pairs: Vec<(String, TransitivePair)>,
}

impl Corpus {
    pub fn from_instances(items: impl IntoIterator<Item = Named>) -> Self {
        let mut c = Corpus::default();
        for n in items {
            match n.instance {
                Instance::Groupoid(g) => c.groupoids.push((n.name, g)),
                Instance::Action(a) => c.actions.push((n.name, a)),
                Instance::Pair(p) => c.pairs.push((n.name, p)),
                Instance::Group(_) => {}
            }
        }
        c
    }

    pub fn fixtures() -> Self {
        Corpus::from_instances(all_fixtures())
    }

    /// Every `*.json` file in `dir`, in file-name order.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(|e| Error::Validation(format!("{}: {}", dir.display(), e)))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut items = Vec::with_capacity(paths.len());
        for p in paths {
            let text = std::fs::read_to_string(&p).map_err(|e| Error::Validation(format!("{}: {}", p.display(), e)))?;
            items.push(load(&text).map_err(|e| match e {
                Error::Parse { line, column, message } => Error::Parse {
                    line,
                    column,
                    message: format!("{}: {}", p.display(), message),
                },
                other => Error::Validation(format!("{}: {}", p.display(), other)),
            })?);
        }
        Ok(Corpus::from_instances(items))
    }

    pub fn groupoid(&self, name: &str) -> Option<&FiniteGroupoid> {
        self.groupoids.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn pair(&self, name: &str) -> Option<&TransitivePair> {
        self.pairs.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Bisection,
    Comonad,
    LtimesAdjunction,
    Quotient,
    Gauge,
    Canonical,
    RAdjunction,
    Coreflection,
    Equivalence,
    Functor,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Bisection,
        Suite::Comonad,
        Suite::LtimesAdjunction,
        Suite::Quotient,
        Suite::Gauge,
        Suite::Canonical,
        Suite::RAdjunction,
        Suite::Coreflection,
        Suite::Equivalence,
        Suite::Functor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bisection => "bisection",
            Suite::Comonad => "comonad",
            Suite::LtimesAdjunction => "ltimes-adjunction",
            Suite::Quotient => "quotient",
            Suite::Gauge => "gauge",
            Suite::Canonical => "canonical",
            Suite::RAdjunction => "r-adjunction",
            Suite::Coreflection => "coreflection",
            Suite::Equivalence => "equivalence",
            Suite::Functor => "functor",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{}`", s))
    }
}

/// Laws to run plus reports for instances that could not be checked.
#[derive(Default)]
pub struct Plan {
    pub laws: Vec<Law>,
    pub skipped: Vec<LawReport>,
}

impl Plan {
    fn skip(&mut self, law: &str, subject: &str, reason: impl fmt::Display) {
        self.skipped.push(LawReport::skipped(law, subject, reason.to_string()));
    }

    /// Adds the laws, or a skip report when building them failed.
    fn add(&mut self, law: &str, subject: &str, built: Result<Vec<Law>>) {
        match built {
            Ok(laws) => self.laws.extend(laws),
            Err(e) => self.skip(law, subject, e),
        }
    }

    pub fn run(self) -> Vec<LawReport> {
        let mut reports = run_all(&self.laws);
        reports.extend(self.skipped);
        reports.sort_by(|a, b| (&a.law, &a.subject).cmp(&(&b.law, &b.subject)));
        reports
    }
}

/// Per-groupoid data shared by the suites.
struct Prepared<'a> {
    corpus: &'a Corpus,
    limits: Limits,
    bis: Vec<std::result::Result<BisectionGroup, String>>,
}

impl<'a> Prepared<'a> {
    fn new(corpus: &'a Corpus, limits: Limits) -> Self {
        let bis = corpus
            .groupoids
            .iter()
            .map(|(_, g)| enumerate_bisections(g, &limits).map_err(|e| e.to_string()))
            .collect();
        Prepared { corpus, limits, bis }
    }

    /// Groupoids whose `Bis` was enumerated.
    fn with_bis(&self) -> impl Iterator<Item = (&'a str, &'a FiniteGroupoid, &BisectionGroup)> + '_ {
        self.corpus
            .groupoids
            .iter()
            .zip(&self.bis)
            .filter_map(|((n, g), b)| b.as_ref().ok().map(|b| (n.as_str(), g, b)))
    }

    fn skips(&self, plan: &mut Plan, law: &str) {
        for ((n, _), b) in self.corpus.groupoids.iter().zip(&self.bis) {
            if let Err(e) = b {
                plan.skip(law, n, e);
            }
        }
    }

    fn homs(&self, a: &FiniteGroupoid, b: &FiniteGroupoid) -> Result<Vec<GroupoidMorphism>> {
        if !a.same_base(b) {
            return Ok(Vec::new());
        }
        enumerate_morphisms(a, b, self.limits.search_nodes)
    }

    /// Locally trivial groupoids with a bisection through each arrow, with
    /// `Bis̄` at the first object.
    fn augmented(&self, plan: &mut Plan, law: &str) -> Vec<(&'a str, &'a FiniteGroupoid, Augmented)> {
        let mut out = Vec::new();
        for (n, g, bis) in self.with_bis() {
            if !g.is_locally_trivial() {
                plan.skip(law, n, "not locally trivial");
                continue;
            }
            match has_bisection_through_each_arrow(g, bis) {
                Ok(true) => {}
                Ok(false) => {
                    plan.skip(law, n, "some arrow lies on no bisection");
                    continue;
                }
                Err(e) => {
                    plan.skip(law, n, e);
                    continue;
                }
            }
            match augment_with(g, bis.clone(), 0) {
                Ok(aug) => out.push((n, g, aug)),
                Err(e) => plan.skip(law, n, e),
            }
        }
        out
    }

    fn gauges(&self, plan: &mut Plan, law: &str) -> Vec<(&'a str, GaugeGroupoid)> {
        let mut out = Vec::new();
        for (n, p) in &self.corpus.pairs {
            match gauge_groupoid(p) {
                Ok(r) => out.push((n.as_str(), r)),
                Err(e) => plan.skip(law, n, e),
            }
        }
        out
    }
}

fn arrow(a: &str, b: &str) -> String {
    format!("{}→{}", a, b)
}

/// Every listed section is a bisection of `g`.
pub fn sections_law(subject: &str, g: &FiniteGroupoid, sections: Vec<Vec<usize>>, labels: Vec<String>) -> Law {
    let g = g.clone();
    Law::predicate("bis.sections", subject, labels, move |i| {
        crate::bisection::check_bisection(&g, &sections[i]).map_err(|e| e.to_string())
    })
}

fn bisection_suite(p: &Prepared, plan: &mut Plan) {
    p.skips(plan, "bis.group-axioms");
    for (n, g, bis) in p.with_bis() {
        let k = bis.group();
        let axioms = validate_group(k.names(), k.table(), k.identity(), k.inverse_table()).map_err(|e| e.to_string());
        plan.laws.push(Law::single("bis.group-axioms", n, axioms));
        let (b, order) = (bis.clone(), bis.order());
        let labels = (0..order * order).map(|i| format!("({},{})", k.name(i / order), k.name(i % order))).collect();
        plan.laws.push(Law::predicate("bis.beta-star", n, labels, move |i| {
            let (s, t) = (i / order, i % order);
            let st = b.group().mul(s, t);
            if *b.beta(st) == b.beta(s).compose(b.beta(t)) {
                Ok(())
            } else {
                Err("β∘(σ⋆τ) ≠ (β∘σ)∘(β∘τ)".into())
            }
        }));
        plan.laws.push(sections_law(n, g, bis.sections().to_vec(), k.names().to_vec()));
    }
    // Bis preserves kernels, on every enumerated morphism between corpus groupoids
    let with: Vec<_> = p.with_bis().collect();
    for (na, a, ba) in &with {
        for (nc, c, bc) in &with {
            let subject = arrow(na, nc);
            let built = p.homs(a, c).and_then(|homs| {
                homs.iter()
                    .map(|f| kernel_preservation(&subject, f, (a, ba), (c, bc), &p.limits))
                    .collect()
            });
            plan.add("limits.kernel", &subject, built);
        }
    }
}

fn comonad_suite(p: &Prepared, plan: &mut Plan) {
    p.skips(plan, "comonad.counit-evaluation");
    let mut bgs: Vec<(&str, &FiniteGroupoid, BisectionAction)> = Vec::new();
    for (n, g, bis) in p.with_bis() {
        let bg = bisection_action_of(bis.clone());
        // B(B(G)) only when its bisection group fits under the caps
        let bbg = bisection_action(bg.groupoid(), &p.limits).ok();
        plan.add(
            "comonad.counit-evaluation",
            n,
            ComonadTables::build(&bg, bbg.as_ref()).map(|t| t.laws(n)),
        );
        if bbg.is_none() {
            plan.skip("comonad.coassociativity", n, "Bis(B(G)) exceeds the caps");
        }
        bgs.push((n, g, bg));
    }
    // ev: B ⇒ id is natural
    for (na, a, ba) in &bgs {
        for (nb, b, bb) in &bgs {
            let subject = arrow(na, nb);
            let built = p.homs(a, b).and_then(|homs| {
                homs.iter()
                    .map(|f| {
                        let bf = b_on_morphism(f, ba, bb)?;
                        Ok(Law::equation(
                            "comonad.ev-natural",
                            &subject,
                            ba.groupoid().labels().to_vec(),
                            vec![f.map().to_vec(), ba.ev().into_map()],
                            vec![bb.ev().into_map(), bf.into_map()],
                        ))
                    })
                    .collect()
            });
            plan.add("comonad.ev-natural", &subject, built);
        }
    }
}

fn sliced(corpus: &Corpus) -> Vec<(&str, ActionGroupoid)> {
    corpus
        .actions
        .iter()
        .map(|(n, a)| (n.as_str(), ltimes(&SlicedGroupHom::from_action(a))))
        .collect()
}

fn ltimes_suite(p: &Prepared, plan: &mut Plan) {
    p.skips(plan, "ltimes-adjunction.triangle-bis");
    let actions = sliced(p.corpus);
    let with: Vec<_> = p.with_bis().collect();
    for (na, s) in &actions {
        match bisection_action(s.groupoid(), &p.limits) {
            Ok(bs) => plan.add("ltimes-adjunction.triangle-ltimes", na, triangle_ltimes(na, s, &bs).map(|l| vec![l])),
            Err(e) => plan.skip("ltimes-adjunction.triangle-ltimes", na, e),
        }
        for (ng, g, bis) in &with {
            if s.groupoid().objects() != g.objects() {
                continue;
            }
            let subject = arrow(na, ng);
            let homs = match ltimes_hom_sets(s, g, bis, p.limits.search_nodes) {
                Ok(h) => h,
                Err(e) => {
                    plan.skip("ltimes-adjunction.cardinality", &subject, e);
                    continue;
                }
            };
            plan.laws.extend(ltimes_bijection_laws(&subject, s, g, bis, &homs));
            // naturality in the groupoid slot
            for (ng2, g2, bis2) in &with {
                let built = p.homs(g, g2).and_then(|phis| {
                    phis.iter()
                        .map(|phi| {
                            ltimes_naturality_in_groupoid(
                                &format!("{}; {}", subject, arrow(ng, ng2)),
                                s,
                                (g, bis),
                                (g2, bis2),
                                phi,
                                &homs.groupoid_side,
                            )
                        })
                        .collect()
                });
                plan.add("ltimes-adjunction.natural-in-groupoid", &subject, built);
            }
            // naturality in the group slot
            for (na2, s2) in &actions {
                if s2.groupoid().objects() != s.groupoid().objects() {
                    continue;
                }
                let built = enumerate_slice_morphisms(s2.sliced(), s.sliced(), p.limits.search_nodes).map(|psis| {
                    psis.iter()
                        .map(|psi| {
                            ltimes_naturality_in_group(
                                &format!("{}; {}", subject, arrow(na2, na)),
                                psi,
                                s2,
                                s,
                                g,
                                bis,
                                &homs.groupoid_side,
                            )
                        })
                        .collect()
                });
                plan.add("ltimes-adjunction.natural-in-group", &subject, built);
            }
        }
    }
    for (n, g, bis) in &with {
        let bg = bisection_action_of((*bis).clone());
        let bbg = bisection_action(bg.groupoid(), &p.limits).ok();
        plan.add("ltimes-adjunction.triangle-bis", n, triangle_bis(n, g, &bg, bbg.as_ref()).map(|l| vec![l]));
    }
}

fn quotient_suite(p: &Prepared, plan: &mut Plan) {
    p.skips(plan, "quotient.congruence");
    for (n, g, bis) in p.with_bis() {
        match has_bisection_through_each_arrow(g, bis) {
            Ok(true) => {}
            Ok(false) => {
                plan.skip("quotient.congruence", n, "some arrow lies on no bisection");
                continue;
            }
            Err(e) => {
                plan.skip("quotient.congruence", n, e);
                continue;
            }
        }
        let bg = bisection_action_of(bis.clone());
        let ev = bg.ev();
        plan.add(
            "quotient.congruence",
            n,
            quotient_reconstruction_laws(n, g, &bg, &ev).map(|(_, laws)| laws),
        );
    }
}

fn gauge_suite(p: &Prepared, plan: &mut Plan) {
    for (n, r) in p.gauges(plan, "gauge.arrow-count") {
        plan.laws.extend(gauge_laws(n, &r));
        if r.pair().h() == r.pair().stabilizer() {
            plan.laws.push(gauge_pair_groupoid_law(n, &r));
        }
        if r.bundle().total_size() > MAX_BUNDLE_BRUTE_FORCE {
            plan.skip("gauge.bundle-automorphisms", n, format!("|K/H| = {} is too large to brute-force", r.bundle().total_size()));
            continue;
        }
        match enumerate_bisections(r.groupoid(), &p.limits) {
            Ok(bis) => plan.laws.push(bundle_automorphism_law(n, &r, &bis)),
            Err(e) => plan.skip("gauge.bundle-automorphisms", n, e),
        }
    }
}

fn canonical_suite(p: &Prepared, plan: &mut Plan) {
    let gauges = p.gauges(plan, "a.anchor");
    for (n, r) in &gauges {
        plan.laws.extend(canonical_laws(n, r));
        plan.add(
            "r-adjunction.triangle-gauge",
            n,
            unit_data(r, &p.limits).map(|u| vec![triangle_gauge(n, r, &u)]),
        );
    }
    for (n, _, aug) in p.augmented(plan, "r-adjunction.triangle-bisbar") {
        plan.laws.push(triangle_bisbar(n, &aug));
    }
    // naturality of a over every enumerated pair morphism
    for (ns, rs) in &gauges {
        for (nt, rt) in &gauges {
            if rs.pair().objects() != rt.pair().objects() {
                continue;
            }
            let subject = arrow(ns, nt);
            let built = enumerate_pair_morphisms(rs.pair(), rt.pair(), p.limits.search_nodes)
                .and_then(|fs| fs.iter().map(|f| a_naturality(&subject, f, rs, rt)).collect());
            plan.add("a.natural", &subject, built);
        }
    }
}

fn r_adjunction_suite(p: &Prepared, plan: &mut Plan) {
    let gauges = p.gauges(plan, "r-adjunction.cardinality");
    let augs = p.augmented(plan, "r-adjunction.cardinality");
    let mut adjs: Vec<Vec<Option<RAdjunction>>> = Vec::new();
    for (np, r) in &gauges {
        let mut row = Vec::new();
        for (ng, g, aug) in &augs {
            if r.groupoid().objects() != g.objects() || r.pair().basepoint() != aug.pair.basepoint() {
                row.push(None);
                continue;
            }
            let subject = arrow(np, ng);
            match RAdjunction::build(r, g, aug, p.limits.search_nodes) {
                Ok(adj) => {
                    plan.laws.extend(adj.laws(&subject));
                    row.push(Some(adj));
                }
                Err(e) => {
                    plan.skip("r-adjunction.cardinality", &subject, e);
                    row.push(None);
                }
            }
        }
        adjs.push(row);
    }
    // naturality in the groupoid slot
    for (i, (np, _)) in gauges.iter().enumerate() {
        for (j, (ng, g, aug)) in augs.iter().enumerate() {
            for (k, (ng2, g2, aug2)) in augs.iter().enumerate() {
                let (Some(src), Some(tgt)) = (&adjs[i][j], &adjs[i][k]) else { continue };
                let subject = format!("{}; {}", np, arrow(ng, ng2));
                let built = p.homs(g, g2).and_then(|psis| {
                    psis.iter()
                        .map(|psi| r_adjunction_naturality_in_groupoid(&subject, psi, (src, aug), (tgt, aug2)))
                        .collect()
                });
                plan.add("r-adjunction.natural-groupoid", &subject, built);
            }
        }
    }
    // naturality in the pair slot
    for (i, (np, r)) in gauges.iter().enumerate() {
        for (k, (np2, r2)) in gauges.iter().enumerate() {
            if r.pair().objects() != r2.pair().objects() {
                continue;
            }
            for (j, (ng, _, _)) in augs.iter().enumerate() {
                let (Some(src), Some(tgt)) = (&adjs[i][j], &adjs[k][j]) else { continue };
                let subject = format!("{}; {}", arrow(np, np2), ng);
                let built = enumerate_pair_morphisms(r.pair(), r2.pair(), p.limits.search_nodes).and_then(|fs| {
                    fs.iter()
                        .map(|f| r_adjunction_naturality_in_pair(&subject, f, (r, src), (r2, tgt)))
                        .collect()
                });
                plan.add("r-adjunction.natural-pair", &subject, built);
            }
        }
    }
    for (n, _, aug) in &augs {
        plan.laws.push(triangle_bisbar(n, aug));
    }
    for (n, r) in &gauges {
        plan.add(
            "r-adjunction.triangle-gauge",
            n,
            unit_data(r, &p.limits).map(|u| vec![triangle_gauge(n, r, &u)]),
        );
    }
}

fn coreflection_suite(p: &Prepared, plan: &mut Plan) {
    let gauges = p.gauges(plan, "coreflection.cardinality");
    for (ng, g, _) in p.with_bis() {
        if !g.is_locally_trivial() {
            plan.skip("coreflection.cardinality", ng, "not locally trivial");
            continue;
        }
        let c = match coreflector(g, 0, &p.limits) {
            Ok(c) => c,
            Err(e) => {
                plan.skip("coreflection.cardinality", ng, e);
                continue;
            }
        };
        let image = if c.restricted.is_isomorphism(&c.covered) {
            Ok(())
        } else {
            Err("χ^res is not an isomorphism".to_string())
        };
        plan.laws.push(Law::single("coreflection.image", ng, image));
        let sources = p
            .corpus
            .groupoids
            .iter()
            .map(|(n, h)| (n.as_str(), h))
            .chain(gauges.iter().map(|(n, r)| (*n, r.groupoid())));
        for (nh, h) in sources {
            if !h.same_base(g) || !h.is_locally_trivial() {
                continue;
            }
            let subject = arrow(nh, ng);
            plan.add("coreflection.cardinality", &subject, coreflection_laws(&subject, h, g, &c, p.limits.search_nodes));
        }
    }
}

fn equivalence_suite(p: &Prepared, plan: &mut Plan) {
    let augs = p.augmented(plan, "equivalence.groupoid");
    for (n, g, aug) in &augs {
        plan.add("equivalence.groupoid", n, equivalence_laws(n, g, aug, &p.limits));
    }
    // naturality of χ, and of a on the pairs Bis̄(G)
    for (na, a, aug_a) in &augs {
        for (nb, b, aug_b) in &augs {
            let subject = arrow(na, nb);
            let built = p.homs(a, b).and_then(|psis| {
                let mut laws = Vec::new();
                for psi in &psis {
                    laws.push(chi_naturality(&subject, psi, aug_a, aug_b)?);
                    let bar = bisbar_on_morphism(psi, (&aug_a.bis, &aug_a.pair), (&aug_b.bis, &aug_b.pair))?;
                    laws.push(a_naturality(&subject, &bar, &aug_a.gauge, &aug_b.gauge)?);
                }
                Ok(laws)
            });
            plan.add("chi.natural", &subject, built);
        }
    }
}

fn composition_law(id: &str, subject: &str, cases: Vec<(String, Vec<usize>, Vec<usize>)>) -> Law {
    let labels = cases.iter().map(|(l, _, _)| l.clone()).collect();
    Law::predicate(id, subject, labels, move |i| {
        let (_, lhs, rhs) = &cases[i];
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("F(g∘f) = {:?}, F(g)∘F(f) = {:?}", lhs, rhs))
        }
    })
}

fn compose_tables(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// Identity and composition laws for `Bis`, `⋉`, `B`, `R`, `Bis̄` and `E`.
fn functor_suite(p: &Prepared, plan: &mut Plan) {
    let with: Vec<_> = p.with_bis().collect();
    let bgs: Vec<BisectionAction> = with.iter().map(|(_, _, b)| bisection_action_of((*b).clone())).collect();
    let augs = p.augmented(plan, "functor.bisbar.composition");
    for (i, (na, a, ba)) in with.iter().enumerate() {
        let id = GroupoidMorphism::identity(a);
        let bis_id = bis_on_morphism(&id, ba, ba).map(|m| m.into_map());
        plan.laws.push(Law::single(
            "functor.bis.identity",
            na,
            match bis_id {
                Ok(m) if m == (0..ba.order()).collect::<Vec<_>>() => Ok(()),
                Ok(m) => Err(format!("Bis(id) = {:?}", m)),
                Err(e) => Err(e.to_string()),
            },
        ));
        let b_id = b_on_morphism(&id, &bgs[i], &bgs[i]).map(|m| m.into_map());
        plan.laws.push(Law::single(
            "functor.b.identity",
            na,
            match b_id {
                Ok(m) if m == (0..bgs[i].groupoid().arrow_count()).collect::<Vec<_>>() => Ok(()),
                Ok(m) => Err(format!("B(id) = {:?}", m)),
                Err(e) => Err(e.to_string()),
            },
        ));
        for (j, (nb, b, bb)) in with.iter().enumerate() {
            for (k, (nc, c, bc)) in with.iter().enumerate() {
                let subject = format!("{}→{}", arrow(na, nb), nc);
                let built = (|| -> Result<Vec<Law>> {
                    let (fs, gs) = (p.homs(a, b)?, p.homs(b, c)?);
                    let mut bis_cases = Vec::new();
                    let mut b_cases = Vec::new();
                    for (x, f) in fs.iter().enumerate() {
                        for (y, g) in gs.iter().enumerate() {
                            let label = format!("g#{}∘f#{}", y, x);
                            let gf = GroupoidMorphism::compose(g, f);
                            let lhs = bis_on_morphism(&gf, ba, bc)?.into_map();
                            let rhs = SliceMorphism::compose(&bis_on_morphism(g, bb, bc)?, &bis_on_morphism(f, ba, bb)?);
                            bis_cases.push((label.clone(), lhs, rhs.into_map()));
                            let lhs = b_on_morphism(&gf, &bgs[i], &bgs[k])?.into_map();
                            let rhs = compose_tables(
                                b_on_morphism(g, &bgs[j], &bgs[k])?.map(),
                                b_on_morphism(f, &bgs[i], &bgs[j])?.map(),
                            );
                            b_cases.push((label, lhs, rhs));
                        }
                    }
                    if bis_cases.is_empty() {
                        return Ok(Vec::new());
                    }
                    Ok(vec![
                        composition_law("functor.bis.composition", &subject, bis_cases),
                        composition_law("functor.b.composition", &subject, b_cases),
                    ])
                })();
                plan.add("functor.bis.composition", &subject, built);
            }
        }
    }

    // ⋉ on slice morphisms
    let actions = sliced(p.corpus);
    for (na, sa) in &actions {
        for (nb, sb) in &actions {
            for (nc, sc) in &actions {
                if sa.groupoid().objects() != sb.groupoid().objects() || sb.groupoid().objects() != sc.groupoid().objects() {
                    continue;
                }
                let subject = format!("{}→{}", arrow(na, nb), nc);
                let built = (|| -> Result<Vec<Law>> {
                    let fs = enumerate_slice_morphisms(sa.sliced(), sb.sliced(), p.limits.search_nodes)?;
                    let gs = enumerate_slice_morphisms(sb.sliced(), sc.sliced(), p.limits.search_nodes)?;
                    let mut cases = Vec::new();
                    for (x, f) in fs.iter().enumerate() {
                        for (y, g) in gs.iter().enumerate() {
                            let lhs = ltimes_on_morphism(&SliceMorphism::compose(g, f), sa, sc).into_map();
                            let rhs = compose_tables(ltimes_on_morphism(g, sb, sc).map(), ltimes_on_morphism(f, sa, sb).map());
                            cases.push((format!("g#{}∘f#{}", y, x), lhs, rhs));
                        }
                    }
                    Ok(if cases.is_empty() {
                        Vec::new()
                    } else {
                        vec![composition_law("functor.ltimes.composition", &subject, cases)]
                    })
                })();
                plan.add("functor.ltimes.composition", &subject, built);
            }
        }
    }

    // R on pair morphisms
    let gauges = p.gauges(plan, "functor.r.identity");
    for (na, ra) in &gauges {
        for (nb, rb) in &gauges {
            for (nc, rc) in &gauges {
                let subject = format!("{}→{}", arrow(na, nb), nc);
                let built = (|| -> Result<Vec<Law>> {
                    if ra.pair().objects() != rb.pair().objects() || rb.pair().objects() != rc.pair().objects() {
                        return Ok(Vec::new());
                    }
                    let fs = enumerate_pair_morphisms(ra.pair(), rb.pair(), p.limits.search_nodes)?;
                    let gs = enumerate_pair_morphisms(rb.pair(), rc.pair(), p.limits.search_nodes)?;
                    let mut laws = Vec::new();
                    for f in &fs {
                        for g in &gs {
                            laws.extend(r_functor_laws(&subject, [ra, rb, rc], f, g)?);
                        }
                    }
                    Ok(laws)
                })();
                plan.add("functor.r.composition", &subject, built);
            }
        }
    }

    // Bis̄ and E = R∘Bis̄ on groupoid morphisms
    for (na, a, aug_a) in &augs {
        for (nb, b, aug_b) in &augs {
            for (nc, c, aug_c) in &augs {
                let subject = format!("{}→{}", arrow(na, nb), nc);
                let built = (|| -> Result<Vec<Law>> {
                    let (fs, gs) = (p.homs(a, b)?, p.homs(b, c)?);
                    let mut bar_cases = Vec::new();
                    let mut e_cases = Vec::new();
                    for (x, f) in fs.iter().enumerate() {
                        for (y, g) in gs.iter().enumerate() {
                            let label = format!("g#{}∘f#{}", y, x);
                            let gf = GroupoidMorphism::compose(g, f);
                            let bar = |h: &GroupoidMorphism, s: &Augmented, t: &Augmented| {
                                bisbar_on_morphism(h, (&s.bis, &s.pair), (&t.bis, &t.pair))
                            };
                            let (bgf, bg, bf) = (bar(&gf, aug_a, aug_c)?, bar(g, aug_b, aug_c)?, bar(f, aug_a, aug_b)?);
                            bar_cases.push((label.clone(), bgf.map().to_vec(), PairMorphism::compose(&bg, &bf).map().to_vec()));
                            let e = |h: &PairMorphism, s: &Augmented, t: &Augmented| gauge_on_morphism(h, &s.gauge, &t.gauge);
                            let lhs = e(&bgf, aug_a, aug_c)?.into_map();
                            let rhs = compose_tables(e(&bg, aug_b, aug_c)?.map(), e(&bf, aug_a, aug_b)?.map());
                            e_cases.push((label, lhs, rhs));
                        }
                    }
                    if bar_cases.is_empty() {
                        return Ok(Vec::new());
                    }
                    Ok(vec![
                        composition_law("functor.bisbar.composition", &subject, bar_cases),
                        composition_law("functor.e.composition", &subject, e_cases),
                    ])
                })();
                plan.add("functor.bisbar.composition", &subject, built);
            }
        }
    }
}

/// Builds the laws of one suite over the corpus.
pub fn plan(suite: Suite, corpus: &Corpus, limits: &Limits) -> Plan {
    let prepared = Prepared::new(corpus, *limits);
    let mut plan = Plan::default();
    match suite {
        Suite::Bisection => bisection_suite(&prepared, &mut plan),
        Suite::Comonad => comonad_suite(&prepared, &mut plan),
        Suite::LtimesAdjunction => ltimes_suite(&prepared, &mut plan),
        Suite::Quotient => quotient_suite(&prepared, &mut plan),
        Suite::Gauge => gauge_suite(&prepared, &mut plan),
        Suite::Canonical => canonical_suite(&prepared, &mut plan),
        Suite::RAdjunction => r_adjunction_suite(&prepared, &mut plan),
        Suite::Coreflection => coreflection_suite(&prepared, &mut plan),
        Suite::Equivalence => equivalence_suite(&prepared, &mut plan),
        Suite::Functor => functor_suite(&prepared, &mut plan),
    }
    log::debug!("{}: {} laws, {} skipped", suite, plan.laws.len(), plan.skipped.len());
    plan
}

/// Runs one suite; reports are sorted by law id, then subject.
pub fn check(suite: Suite, corpus: &Corpus, limits: &Limits) -> Vec<LawReport> {
    plan(suite, corpus, limits).run()
}
