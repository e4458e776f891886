use crate::algebra::FiniteGroup;
use crate::groupoid::{FiniteGroupoid, GroupoidMorphism};

/// `P(M)`: one arrow `(y,x): x → y` for every pair, `(z,y)·(y,x) = (z,x)`.
pub fn pair_groupoid(objects: &[String]) -> FiniteGroupoid {
    let m = objects.len();
    let idx = |y: usize, x: usize| y * m + x;
    let labels = (0..m * m)
        .map(|a| format!("({},{})", objects[a / m], objects[a % m]))
        .collect();
    let source = (0..m * m).map(|a| a % m).collect();
    let target = (0..m * m).map(|a| a / m).collect();
    let unit = (0..m).map(|x| idx(x, x)).collect();
    let inverse = (0..m * m).map(|a| idx(a % m, a / m)).collect();
    FiniteGroupoid::from_fn_unchecked(objects.to_vec(), labels, source, target, unit, inverse, |g, h| {
        idx(g / m, h % m)
    })
}

/// Only identities.
pub fn unit_groupoid(objects: &[String]) -> FiniteGroupoid {
    let m = objects.len();
    let labels = objects.iter().map(|x| format!("1_{}", x)).collect();
    let ids: Vec<usize> = (0..m).collect();
    FiniteGroupoid::from_fn_unchecked(objects.to_vec(), labels, ids.clone(), ids.clone(), ids.clone(), ids, |g, _| g)
}

/// A group as a one-object groupoid; arrows carry the element names.
pub fn group_over_point(group: &FiniteGroup, point: &str) -> FiniteGroupoid {
    let n = group.order();
    FiniteGroupoid::from_fn_unchecked(
        vec![point.to_string()],
        group.names().to_vec(),
        vec![0; n],
        vec![0; n],
        vec![group.identity()],
        group.inverse_table().to_vec(),
        |a, b| group.mul(a, b),
    )
}

/// `M × V × M`: arrows `(y, v, x): x → y`, `(z,u,y)·(y,v,x) = (z, uv, x)`.
/// Locally trivial with every vertex group `≅ V`.
pub fn trivial_groupoid(objects: &[String], group: &FiniteGroup) -> FiniteGroupoid {
    let m = objects.len();
    let v = group.order();
    let idx = |y: usize, g: usize, x: usize| (y * v + g) * m + x;
    let parts = |a: usize| (a / (v * m), (a / m) % v, a % m);
    let count = m * v * m;
    let labels = (0..count)
        .map(|a| {
            let (y, g, x) = parts(a);
            format!("({},{},{})", objects[y], group.name(g), objects[x])
        })
        .collect();
    let source = (0..count).map(|a| parts(a).2).collect();
    let target = (0..count).map(|a| parts(a).0).collect();
    let unit = (0..m).map(|x| idx(x, group.identity(), x)).collect();
    let inverse = (0..count)
        .map(|a| {
            let (y, g, x) = parts(a);
            idx(x, group.inv(g), y)
        })
        .collect();
    FiniteGroupoid::from_fn_unchecked(objects.to_vec(), labels, source, target, unit, inverse, |a, b| {
        let (z, u, _) = parts(a);
        let (_, w, x) = parts(b);
        idx(z, group.mul(u, w), x)
    })
}

/// The wide subgroupoid on the given arrow set (must contain all units and
/// be closed under products and inverses), with its inclusion.
pub fn wide_subgroupoid(g: &FiniteGroupoid, arrows: &[usize]) -> crate::Result<(FiniteGroupoid, GroupoidMorphism)> {
    let mut keep: Vec<usize> = arrows.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let mut pos = vec![usize::MAX; g.arrow_count()];
    for (i, &a) in keep.iter().enumerate() {
        pos[a] = i;
    }
    let missing = |a: usize| pos[a] == usize::MAX;
    if let Some(x) = (0..g.object_count()).find(|&x| missing(g.unit(x))) {
        return Err(crate::Error::Validation(format!("unit at {} missing", g.objects()[x])));
    }
    for &a in &keep {
        if missing(g.inverse(a)) {
            return Err(crate::Error::Validation(format!("inverse of {} missing", g.label(a))));
        }
        for &b in g.arrows_to(g.source(a)) {
            if !missing(b) && missing(g.comp(a, b)) {
                return Err(crate::Error::Validation(format!(
                    "{}·{} missing",
                    g.label(a),
                    g.label(b)
                )));
            }
        }
    }
    let sub = FiniteGroupoid::from_fn(
        g.objects().to_vec(),
        keep.iter().map(|&a| g.label(a).to_string()).collect(),
        keep.iter().map(|&a| g.source(a)).collect(),
        keep.iter().map(|&a| g.target(a)).collect(),
        (0..g.object_count()).map(|x| pos[g.unit(x)]).collect(),
        keep.iter().map(|&a| pos[g.inverse(a)]).collect(),
        |i, j| pos[g.comp(keep[i], keep[j])],
    )?;
    let inclusion = GroupoidMorphism::new(&sub, g, keep)?;
    Ok((sub, inclusion))
}

/// Kernel of a morphism: the wide subgroupoid of arrows sent to units.
pub fn kernel(f: &GroupoidMorphism, source: &FiniteGroupoid, target: &FiniteGroupoid) -> crate::Result<(FiniteGroupoid, GroupoidMorphism)> {
    wide_subgroupoid(source, &f.kernel_arrows(source, target))
}

/// `A ×_C B` for `f: A → C ← B: g`, arrows the pairs `(a, b)` with `f(a) = g(b)`,
/// with both projections.
pub fn pullback(
    a: &FiniteGroupoid,
    f: &GroupoidMorphism,
    b: &FiniteGroupoid,
    g: &GroupoidMorphism,
) -> crate::Result<(FiniteGroupoid, GroupoidMorphism, GroupoidMorphism)> {
    if !a.same_base(b) {
        return Err(crate::Error::BaseMismatch);
    }
    let pairs: Vec<(usize, usize)> = a
        .arrows()
        .flat_map(|x| b.arrows().filter(move |&y| f.apply(x) == g.apply(y)).map(move |y| (x, y)))
        .collect();
    let index: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let p = FiniteGroupoid::from_fn(
        a.objects().to_vec(),
        pairs.iter().map(|&(x, y)| format!("({},{})", a.label(x), b.label(y))).collect(),
        pairs.iter().map(|&(x, _)| a.source(x)).collect(),
        pairs.iter().map(|&(x, _)| a.target(x)).collect(),
        (0..a.object_count()).map(|o| index[&(a.unit(o), b.unit(o))]).collect(),
        pairs.iter().map(|&(x, y)| index[&(a.inverse(x), b.inverse(y))]).collect(),
        |i, j| index[&(a.comp(pairs[i].0, pairs[j].0), b.comp(pairs[i].1, pairs[j].1))],
    )?;
    let pa = GroupoidMorphism::new(&p, a, pairs.iter().map(|&(x, _)| x).collect())?;
    let pb = GroupoidMorphism::new(&p, b, pairs.iter().map(|&(_, y)| y).collect())?;
    Ok((p, pa, pb))
}
