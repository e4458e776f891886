//! Law builders for the gauge construction, the canonical morphisms `a` and
//! `χ`, the adjunction `R ⊣ Bis̄`, the coreflection and the equivalence.

use crate::algebra::all_permutations;
use crate::bisection::{check_bisection, enumerate_bisections, star_tables, BisectionGroup};
use crate::error::{Error, Result};
use crate::groupoid::{enumerate_morphisms, FiniteGroupoid, GroupoidMorphism};
use crate::harness::engine::Law;
use crate::transitive::{
    a_canonical, a_section, a_section_with, bisbar, bisbar_on_morphism, enumerate_pair_morphisms,
    gauge_on_morphism, pair_kernel, validate_pair_morphism, Augmented, Coreflection, GaugeGroupoid, PairMorphism,
    TransitivePair,
};
use crate::Limits;

fn element_point_labels(p: &TransitivePair) -> Vec<String> {
    let k = p.group();
    k.elements()
        .flat_map(|e| p.objects().iter().map(move |x| format!("({},{})", k.name(e), x)))
        .collect()
}

fn morphism_labels(n: usize, prefix: &str) -> Vec<String> {
    (0..n).map(|i| format!("{}#{}", prefix, i)).collect()
}

/// `|arrows| = |M|²·|Λ_m|`, and `λ ↦ ⟨s(x)λ, s(x)⟩` is an isomorphism onto
/// each vertex group.
pub fn gauge_laws(subject: &str, r: &GaugeGroupoid) -> Vec<Law> {
    let g = r.groupoid().clone();
    let b = r.bundle().clone();
    let m = g.object_count();
    let lam = b.structure_group().order();
    let count = if g.arrow_count() == m * m * lam {
        Ok(())
    } else {
        Err(format!("{} arrows, expected {}·{}·{}", g.arrow_count(), m, m, lam))
    };
    let r2 = r.clone();
    let vertex = Law::predicate("gauge.vertex-group", subject, g.objects().to_vec(), move |x| {
        let s = b.section()[x];
        let embed = |l: usize| r2.arrow(b.right(s, l), s);
        let images: Vec<usize> = (0..lam).map(embed).collect();
        let (vg, arrows) = g.vertex_group(x).map_err(|e| e.to_string())?;
        if vg.order() != lam {
            return Err(format!("vertex group of order {}, Λ of order {}", vg.order(), lam));
        }
        let mut sorted = images.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != lam || images.iter().any(|a| !arrows.contains(a)) {
            return Err("λ ↦ ⟨s(x)λ, s(x)⟩ is not a bijection onto the vertex group".into());
        }
        let structure = b.structure_group();
        for l1 in 0..lam {
            for l2 in 0..lam {
                if g.comp(images[l1], images[l2]) != images[structure.mul(l1, l2)] {
                    return Err(format!("not multiplicative at ({}, {})", structure.name(l1), structure.name(l2)));
                }
            }
        }
        Ok(())
    });
    vec![Law::single("gauge.arrow-count", subject, count), vertex]
}

/// When `H = Stab_m`: `⟨p, q⟩ ↦ (π(p), π(q))` is an isomorphism onto the pair groupoid.
pub fn gauge_pair_groupoid_law(subject: &str, r: &GaugeGroupoid) -> Law {
    let g = r.groupoid();
    let m = g.object_count();
    let ok = (|| {
        if r.pair().h() != r.pair().stabilizer() {
            return Err("H is not the stabilizer".to_string());
        }
        let pair = crate::groupoid::pair_groupoid(g.objects());
        let map: Vec<usize> = g
            .arrows()
            .map(|a| {
                let (p, q) = r.representative(a);
                r.bundle().project(p) * m + r.bundle().project(q)
            })
            .collect();
        let f = GroupoidMorphism::new(g, &pair, map).map_err(|e| e.to_string())?;
        if f.is_isomorphism(&pair) {
            Ok(())
        } else {
            Err("anchor map is not bijective".to_string())
        }
    })();
    Law::single("gauge.pair-groupoid", subject, ok)
}

/// Laws of `a_{θ,H}` that need no enumeration of `Bis(R(θ,H))`.
pub fn canonical_laws(subject: &str, r: &GaugeGroupoid) -> Vec<Law> {
    let p = r.pair().clone();
    let k = p.group().clone();
    let g = r.groupoid().clone();
    let n = p.objects().len();
    let tables: Vec<Vec<usize>> = k.elements().map(|e| a_section(r, e)).collect();
    let alternative: Vec<Vec<usize>> = k
        .elements()
        .map(|e| a_section_with(r, &r.bundle().alternative_section(), e))
        .collect();

    let (t, g1, p1) = (tables.clone(), g.clone(), p.clone());
    let anchor = Law::predicate("a.anchor", subject, element_point_labels(&p), move |i| {
        let (e, x) = (i / n, i % n);
        let got = g1.target(t[e][x]);
        let want = p1.action().act(e, x);
        if got == want {
            Ok(())
        } else {
            Err(format!("β(a(k)(x)) = {}, k.x = {}", g1.objects()[got], g1.objects()[want]))
        }
    });

    let (t, g1) = (tables.clone(), g.clone());
    let bisection = Law::predicate("a.bisection", subject, k.names().to_vec(), move |e| {
        check_bisection(&g1, &t[e]).map_err(|err| err.to_string())
    });

    let (t, g1, k1) = (tables.clone(), g.clone(), k.clone());
    let order = k.order();
    let hom_labels = k
        .elements()
        .flat_map(|a| k.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", k.name(a), k.name(b)))
        .collect();
    let homomorphism = Law::predicate("a.homomorphism", subject, hom_labels, move |i| {
        let (a, b) = (i / order, i % order);
        if star_tables(&g1, &t[a], &t[b]) == t[k1.mul(a, b)] {
            Ok(())
        } else {
            Err("a(k)⋆a(k') ≠ a(kk')".into())
        }
    });

    let (t, g1) = (tables.clone(), g.clone());
    let m = p.basepoint();
    let h_members = p.h().members().to_vec();
    let subgroup = Law::predicate(
        "a.subgroup",
        subject,
        h_members.iter().map(|&e| k.name(e).to_string()).collect(),
        move |i| {
            let a = t[h_members[i]][m];
            if a == g1.unit(m) {
                Ok(())
            } else {
                Err(format!("a(h)(m) = {}", g1.label(a)))
            }
        },
    );

    let t = tables.clone();
    let independence = Law::predicate("a.section-independence", subject, k.names().to_vec(), move |e| {
        if t[e] == alternative[e] {
            Ok(())
        } else {
            Err("maximal-coset section gives a different bisection".into())
        }
    });

    vec![
        anchor,
        bisection,
        homomorphism,
        subgroup,
        independence,
        kernel_law(subject, &p, &tables, (0..n).map(|x| g.unit(x)).collect()),
    ]
}

/// `ker(a) = normal_core(K, H)`, from explicit `a` tables.
pub fn kernel_law(subject: &str, p: &TransitivePair, a_tables: &[Vec<usize>], units: Vec<usize>) -> Law {
    let core = pair_kernel(p);
    let k = p.group().clone();
    let tables = a_tables.to_vec();
    Law::predicate("a.kernel", subject, k.names().to_vec(), move |e| {
        let in_kernel = tables[e] == units;
        if in_kernel == core.contains(e) {
            Ok(())
        } else if in_kernel {
            Err(format!("{} ∈ ker a but not in the core of H", k.name(e)))
        } else {
            Err(format!("{} in the core of H but a({0}) ≠ 1", k.name(e)))
        }
    })
}

/// `Bis(χ_G)∘a_{Bis̄ G} = id`, on section tables.
pub fn triangle_bisbar(subject: &str, aug: &Augmented) -> Law {
    let sections: Vec<Vec<usize>> = (0..aug.bis.order()).map(|i| aug.bis.section(i).to_vec()).collect();
    let a_tables: Vec<Vec<usize>> = (0..aug.bis.order()).map(|i| a_section(&aug.gauge, i)).collect();
    let chi = aug.chi.map().to_vec();
    triangle_bisbar_tables(subject, aug.bis.group().names().to_vec(), sections, a_tables, chi)
}

pub fn triangle_bisbar_tables(
    subject: &str,
    labels: Vec<String>,
    sections: Vec<Vec<usize>>,
    a_tables: Vec<Vec<usize>>,
    chi: Vec<usize>,
) -> Law {
    Law::predicate("r-adjunction.triangle-bisbar", subject, labels, move |i| {
        let image: Vec<usize> = a_tables[i].iter().map(|&a| chi[a]).collect();
        if image == sections[i] {
            Ok(())
        } else {
            Err(format!("χ∘a(σ) = {:?}, σ = {:?}", image, sections[i]))
        }
    })
}

/// `a_p` as a pair morphism `p → Bis̄(R(p))`, with the data it lives on.
#[derive(Clone, Debug)]
pub struct UnitData {
    pub bis_r: BisectionGroup,
    pub bar: Augmented,
    pub a: PairMorphism,
    /// `R(a_p): R(p) → R(Bis̄(R(p)))`
    pub r_a: GroupoidMorphism,
}

pub fn unit_data(r: &GaugeGroupoid, limits: &Limits) -> Result<UnitData> {
    let bis_r = enumerate_bisections(r.groupoid(), limits)?;
    let m = r.pair().basepoint();
    let bar = crate::transitive::augment_with(r.groupoid(), bis_r.clone(), m)?;
    let a = PairMorphism::new(r.pair(), &bar.pair, a_canonical(r, &bis_r)?.into_map())?;
    let r_a = gauge_on_morphism(&a, r, &bar.gauge)?;
    Ok(UnitData { bis_r, bar, a, r_a })
}

/// `χ_{R(p)}∘R(a_p) = id_{R(p)}`.
pub fn triangle_gauge(subject: &str, r: &GaugeGroupoid, u: &UnitData) -> Law {
    Law::equation(
        "r-adjunction.triangle-gauge",
        subject,
        r.groupoid().labels().to_vec(),
        vec![u.bar.chi.map().to_vec(), u.r_a.map().to_vec()],
        vec![],
    )
}

/// The hom-set bijection `Hom(p, Bis̄ G) ≅ Hom(R p, G)`.
#[derive(Clone, Debug)]
pub struct RAdjunction {
    pub pair_side: Vec<PairMorphism>,
    pub groupoid_side: Vec<GroupoidMorphism>,
    /// `χ_G`, kept as a table so it can be corrupted in tests.
    pub chi: Vec<usize>,
    a_tables: Vec<Vec<usize>>,
    r_maps: Vec<GroupoidMorphism>,
    sections: Vec<Vec<usize>>,
}

impl RAdjunction {
    pub fn build(r: &GaugeGroupoid, g: &FiniteGroupoid, aug: &Augmented, cap: usize) -> Result<Self> {
        let pair_side = enumerate_pair_morphisms(r.pair(), &aug.pair, cap)?;
        let groupoid_side = enumerate_morphisms(r.groupoid(), g, cap)?;
        let r_maps = pair_side
            .iter()
            .map(|phi| gauge_on_morphism(phi, r, &aug.gauge))
            .collect::<Result<Vec<_>>>()?;
        Ok(RAdjunction {
            pair_side,
            groupoid_side,
            chi: aug.chi.map().to_vec(),
            a_tables: r.pair().group().elements().map(|k| a_section(r, k)).collect(),
            r_maps,
            sections: aug.bis.sections().to_vec(),
        })
    }

    /// `I(φ) = χ_G∘R(φ)`
    pub fn i(&self, phi: usize) -> Vec<usize> {
        self.r_maps[phi].map().iter().map(|&a| self.chi[a]).collect()
    }

    /// `J(ψ)(k) = ψ∘a(k)`, as indices in `Bis(G)`.
    pub fn j(&self, psi: &[usize]) -> std::result::Result<Vec<usize>, String> {
        self.a_tables
            .iter()
            .map(|t| {
                let s: Vec<usize> = t.iter().map(|&a| psi[a]).collect();
                self.sections
                    .binary_search(&s)
                    .map_err(|_| format!("ψ∘a(k) = {:?} is not a bisection", s))
            })
            .collect()
    }

    pub fn laws(&self, subject: &str) -> Vec<Law> {
        let this = std::sync::Arc::new(self.clone());
        let t = this.clone();
        let ji = Law::predicate(
            "r-adjunction.j-after-i",
            subject,
            morphism_labels(self.pair_side.len(), "φ"),
            move |i| {
                let back = t.j(&t.i(i))?;
                if back == t.pair_side[i].map() {
                    Ok(())
                } else {
                    Err(format!("J(I(φ)) = {:?}", back))
                }
            },
        );
        let t = this.clone();
        let ij = Law::predicate(
            "r-adjunction.i-after-j",
            subject,
            morphism_labels(self.groupoid_side.len(), "ψ"),
            move |i| {
                let psi = t.groupoid_side[i].map();
                let phi = t.j(psi)?;
                let idx = t
                    .pair_side
                    .iter()
                    .position(|f| f.map() == phi.as_slice())
                    .ok_or_else(|| format!("J(ψ) = {:?} is not a pair morphism", phi))?;
                let back = t.i(idx);
                if back == psi {
                    Ok(())
                } else {
                    Err(format!("I(J(ψ)) = {:?}", back))
                }
            },
        );
        let (a, b) = (self.pair_side.len(), self.groupoid_side.len());
        let card = Law::single(
            "r-adjunction.cardinality",
            subject,
            if a == b { Ok(()) } else { Err(format!("{} pair morphisms, {} groupoid morphisms", a, b)) },
        );
        vec![card, ij, ji]
    }
}

/// Naturality of `I` in the groupoid slot: `I(Bis̄(ψ')∘φ) = ψ'∘I(φ)` for
/// `ψ': G → G'`.
pub fn r_adjunction_naturality_in_groupoid(
    subject: &str,
    psi: &GroupoidMorphism,
    source: (&RAdjunction, &Augmented),
    target: (&RAdjunction, &Augmented),
) -> Result<Law> {
    let bar = bisbar_on_morphism(psi, (&source.1.bis, &source.1.pair), (&target.1.bis, &target.1.pair))?;
    let (src, tgt) = (source.0.clone(), target.0.clone());
    let psi = psi.map().to_vec();
    Ok(Law::predicate(
        "r-adjunction.natural-groupoid",
        subject,
        morphism_labels(src.pair_side.len(), "φ"),
        move |i| {
            let pushed = PairMorphism::compose(&PairMorphism::from_map_unchecked(bar.map().to_vec()), &src.pair_side[i]);
            let j = tgt
                .pair_side
                .iter()
                .position(|f| *f == pushed)
                .ok_or("Bis̄(ψ)∘φ is not an enumerated pair morphism")?;
            let lhs = tgt.i(j);
            let rhs: Vec<usize> = src.i(i).iter().map(|&a| psi[a]).collect();
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("I(Bis̄ψ∘φ) = {:?}, ψ∘I(φ) = {:?}", lhs, rhs))
            }
        },
    ))
}

/// Naturality of `I` in the pair slot: `I(φ∘f) = I(φ)∘R(f)` for `f: p' → p`.
pub fn r_adjunction_naturality_in_pair(
    subject: &str,
    f: &PairMorphism,
    source: (&GaugeGroupoid, &RAdjunction),
    target: (&GaugeGroupoid, &RAdjunction),
) -> Result<Law> {
    let rf = gauge_on_morphism(f, source.0, target.0)?.map().to_vec();
    let (src, tgt) = (source.1.clone(), target.1.clone());
    let f = f.clone();
    Ok(Law::predicate(
        "r-adjunction.natural-pair",
        subject,
        morphism_labels(tgt.pair_side.len(), "φ"),
        move |i| {
            let pulled = PairMorphism::compose(&tgt.pair_side[i], &f);
            let j = src
                .pair_side
                .iter()
                .position(|g| *g == pulled)
                .ok_or("φ∘f is not an enumerated pair morphism")?;
            let lhs = src.i(j);
            let rhs: Vec<usize> = rf.iter().map(|&a| tgt.i(i)[a]).collect();
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("I(φ∘f) = {:?}, I(φ)∘R(f) = {:?}", lhs, rhs))
            }
        },
    ))
}

/// `R(f)∘a_p(k) = a_{p'}(f(k))` pointwise, for a pair morphism `f: p → p'`.
pub fn a_naturality(subject: &str, f: &PairMorphism, source: &GaugeGroupoid, target: &GaugeGroupoid) -> Result<Law> {
    let rf = gauge_on_morphism(f, source, target)?;
    let p = source.pair();
    let n = p.objects().len();
    let lhs: Vec<Vec<usize>> = p.group().elements().map(|k| a_section(source, k)).collect();
    let rhs: Vec<Vec<usize>> = p.group().elements().map(|k| a_section(target, f.apply(k))).collect();
    let rf = rf.map().to_vec();
    Ok(Law::predicate("a.natural", subject, element_point_labels(p), move |i| {
        let (k, x) = (i / n, i % n);
        let (l, r) = (rf[lhs[k][x]], rhs[k][x]);
        if l == r {
            Ok(())
        } else {
            Err(format!("R(f)(a(k)(x)) = {}, a'(f(k))(x) = {}", l, r))
        }
    }))
}

/// `ψ∘χ_G = χ_{G'}∘R(Bis̄(ψ))`.
pub fn chi_naturality(subject: &str, psi: &GroupoidMorphism, source: &Augmented, target: &Augmented) -> Result<Law> {
    let bar = bisbar_on_morphism(psi, (&source.bis, &source.pair), (&target.bis, &target.pair))?;
    let r_bar = gauge_on_morphism(&bar, &source.gauge, &target.gauge)?;
    Ok(Law::equation(
        "chi.natural",
        subject,
        source.gauge.groupoid().labels().to_vec(),
        vec![psi.map().to_vec(), source.chi.map().to_vec()],
        vec![target.chi.map().to_vec(), r_bar.map().to_vec()],
    ))
}

/// The bijection `Hom(H, E(G)) ≅ Hom(H, G)` with `I(φ) = χ∘φ` and
/// `J(ψ) = (χ^res)⁻¹∘ψ`.
pub fn coreflection_laws(subject: &str, h: &FiniteGroupoid, g: &FiniteGroupoid, c: &Coreflection, cap: usize) -> Result<Vec<Law>> {
    let e = c.augmented.gauge.groupoid();
    let into_e = enumerate_morphisms(h, e, cap)?;
    let into_g = enumerate_morphisms(h, g, cap)?;
    let chi = c.augmented.chi.map().to_vec();
    let mut chi_inv = vec![usize::MAX; g.arrow_count()];
    for (a, &b) in chi.iter().enumerate() {
        chi_inv[b] = a;
    }
    let (e_maps, g_maps) = (
        into_e.iter().map(|f| f.map().to_vec()).collect::<Vec<_>>(),
        into_g.iter().map(|f| f.map().to_vec()).collect::<Vec<_>>(),
    );
    let (em, gm, ch, ci) = (e_maps.clone(), g_maps.clone(), chi.clone(), chi_inv.clone());
    let ji = Law::predicate("coreflection.j-after-i", subject, morphism_labels(e_maps.len(), "φ"), move |i| {
        let back: Vec<usize> = em[i].iter().map(|&a| ci[ch[a]]).collect();
        if back == em[i] {
            Ok(())
        } else {
            Err(format!("J(I(φ)) = {:?}", back))
        }
    });
    let (em, gm2) = (e_maps.clone(), g_maps.clone());
    let ij = Law::predicate("coreflection.i-after-j", subject, morphism_labels(g_maps.len(), "ψ"), move |i| {
        let j: Vec<usize> = gm2[i]
            .iter()
            .map(|&a| match chi_inv[a] {
                usize::MAX => Err(format!("arrow {} is not on a bisection", a)),
                b => Ok(b),
            })
            .collect::<std::result::Result<_, _>>()?;
        if !em.contains(&j) {
            return Err("J(ψ) is not a morphism into E(G)".into());
        }
        let back: Vec<usize> = j.iter().map(|&a| chi[a]).collect();
        if back == gm2[i] {
            Ok(())
        } else {
            Err(format!("I(J(ψ)) = {:?}", back))
        }
    });
    let (a, b) = (e_maps.len(), gm.len());
    let card = Law::single(
        "coreflection.cardinality",
        subject,
        if a == b { Ok(()) } else { Err(format!("{} into E(G), {} into G", a, b)) },
    );
    Ok(vec![card, ij, ji])
}

/// `R(Bis̄ G) ≅ G` via `χ_G`, and `Bis̄(R(Bis̄ G)) ≅ Bis̄ G` via `a`.
pub fn equivalence_laws(subject: &str, g: &FiniteGroupoid, aug: &Augmented, limits: &Limits) -> Result<Vec<Law>> {
    let chi_iso = if aug.chi.is_isomorphism(g) {
        Ok(())
    } else {
        Err("χ_G is not an isomorphism".to_string())
    };
    let u = unit_data(&aug.gauge, limits)?;
    let a_iso = match validate_pair_morphism(&aug.pair, &u.bar.pair, u.a.map().to_vec()) {
        Ok(rep) if rep.is_isomorphism => Ok(()),
        Ok(_) => Err("a is not a pair isomorphism".to_string()),
        Err(e) => Err(e.to_string()),
    };
    Ok(vec![
        Law::single("equivalence.groupoid", subject, chi_iso),
        Law::single("equivalence.pair", subject, a_iso),
        triangle_gauge(subject, &aug.gauge, &u),
    ])
}

/// `Λ`-equivariant bijections of `K/H` covering a bijection of `M`, by brute force.
pub fn bundle_automorphisms(r: &GaugeGroupoid) -> Vec<Vec<usize>> {
    let b = r.bundle();
    let n = b.total_size();
    let l = b.structure_group().order();
    all_permutations(n)
        .into_iter()
        .map(|p| p.images().to_vec())
        .filter(|f| {
            (0..n).all(|c| (0..l).all(|lam| f[b.right(c, lam)] == b.right(f[c], lam)))
                && (0..n).all(|c| (0..n).all(|d| (b.project(c) == b.project(d)) == (b.project(f[c]) == b.project(f[d]))))
        })
        .collect()
}

/// `f ↦ (x ↦ ⟨f(s(x)), s(x)⟩)` is an isomorphism from bundle automorphisms
/// (under composition) onto `Bis(R(θ,H))`.
pub fn bundle_automorphism_law(subject: &str, r: &GaugeGroupoid, bis: &BisectionGroup) -> Law {
    let autos = bundle_automorphisms(r);
    let s = r.bundle().section().to_vec();
    let image = |f: &[usize]| -> Vec<usize> { s.iter().map(|&c| r.arrow(f[c], c)).collect() };
    let ok = (|| {
        let mut hit = vec![false; bis.order()];
        let idx: Vec<usize> = autos
            .iter()
            .map(|f| {
                let t = image(f);
                bis.index_of(&t).ok_or_else(|| format!("{:?} is not a bisection", t))
            })
            .collect::<std::result::Result<_, _>>()?;
        for &i in &idx {
            if std::mem::replace(&mut hit[i], true) {
                return Err("two automorphisms give the same bisection".to_string());
            }
        }
        if autos.len() != bis.order() {
            return Err(format!("{} automorphisms, |Bis| = {}", autos.len(), bis.order()));
        }
        for (i, f) in autos.iter().enumerate() {
            for (j, g) in autos.iter().enumerate() {
                let fg: Vec<usize> = g.iter().map(|&c| f[c]).collect();
                let k = bis.index_of(&image(&fg)).ok_or("composite is not a bisection")?;
                if k != bis.group().mul(idx[i], idx[j]) {
                    return Err(format!("not multiplicative at automorphisms #{} and #{}", i, j));
                }
            }
        }
        Ok(())
    })();
    Law::single("gauge.bundle-automorphisms", subject, ok)
}

/// Functor laws of `R` on pair morphisms `f: p0 → p1`, `g: p1 → p2`.
pub fn r_functor_laws(
    subject: &str,
    gauges: [&GaugeGroupoid; 3],
    f: &PairMorphism,
    g: &PairMorphism,
) -> Result<Vec<Law>> {
    let id = gauge_on_morphism(&PairMorphism::identity(gauges[0].pair()), gauges[0], gauges[0])?;
    let rf = gauge_on_morphism(f, gauges[0], gauges[1])?;
    let rg = gauge_on_morphism(g, gauges[1], gauges[2])?;
    let rgf = gauge_on_morphism(&PairMorphism::compose(g, f), gauges[0], gauges[2])?;
    let labels = gauges[0].groupoid().labels().to_vec();
    Ok(vec![
        Law::equation("functor.r.identity", subject, labels.clone(), vec![id.into_map()], vec![]),
        Law::equation(
            "functor.r.composition",
            subject,
            labels,
            vec![rgf.into_map()],
            vec![rg.into_map(), rf.into_map()],
        ),
    ])
}

/// `Bis̄` on a groupoid, with the reason when the hypothesis fails.
pub fn bisbar_or_skip(g: &FiniteGroupoid, bis: &BisectionGroup, m: usize) -> std::result::Result<TransitivePair, String> {
    bisbar(g, bis, m).map_err(|e| match e {
        Error::HypothesisNotMet(s) => s,
        other => other.to_string(),
    })
}
