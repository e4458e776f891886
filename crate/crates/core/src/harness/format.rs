//! The instance file format: JSON with explicit tables. Names are strings;
//! every product, action value, unit and inverse is listed, nothing is
//! inferred by closure. See `docs/instance-format.md` for the grammar.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{FiniteGroup, GroupAction, Subgroup};
use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, GroupoidTables};
use crate::transitive::TransitivePair;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBody {
    pub elements: Vec<String>,
    /// `(a, b, a·b)`
    pub mult: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub mult: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub name: String,
    pub group: GroupBody,
    pub points: Vec<String>,
    /// `(k, x, k.x)`
    pub act: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidSpec {
    pub name: String,
    pub objects: Vec<String>,
    /// `(arrow, source, target)`
    pub arrows: Vec<(String, String, String)>,
    /// `(object, unit arrow)`
    pub units: Vec<(String, String)>,
    /// `(arrow, inverse)`
    pub inverses: Vec<(String, String)>,
    /// `(g, h, g·h)` for every pair with `α(g) = β(h)`
    pub comp: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub name: String,
    pub group: GroupBody,
    pub points: Vec<String>,
    pub act: Vec<(String, String, String)>,
    pub basepoint: String,
    pub h: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InstanceFile {
    Group(GroupSpec),
    Action(ActionSpec),
    Groupoid(GroupoidSpec),
    Pair(PairSpec),
}

/// A validated instance.
#[derive(Clone, Debug)]
pub enum Instance {
    Group(FiniteGroup),
    Action(GroupAction),
    Groupoid(FiniteGroupoid),
    Pair(TransitivePair),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Group(_) => "group",
            Instance::Action(_) => "action",
            Instance::Groupoid(_) => "groupoid",
            Instance::Pair(_) => "pair",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub instance: Instance,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

fn index(kind: &str, names: &[String]) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return Err(invalid(format!("duplicate {} `{}`", kind, n)));
        }
    }
    Ok(map)
}

fn lookup(map: &HashMap<String, usize>, kind: &str, name: &str) -> Result<usize> {
    map.get(name).copied().ok_or_else(|| invalid(format!("unknown {} `{}`", kind, name)))
}

/// Fills a dense table from triples, requiring each slot exactly once.
fn dense(
    what: &str,
    rows: &[(String, String, String)],
    first: (&HashMap<String, usize>, &str),
    second: (&HashMap<String, usize>, &str),
    value: (&HashMap<String, usize>, &str),
) -> Result<Vec<usize>> {
    let width = second.0.len();
    let mut table = vec![usize::MAX; first.0.len() * width];
    for (a, b, c) in rows {
        let slot = lookup(first.0, first.1, a)? * width + lookup(second.0, second.1, b)?;
        if table[slot] != usize::MAX {
            return Err(invalid(format!("{} entry for ({}, {}) given twice", what, a, b)));
        }
        table[slot] = lookup(value.0, value.1, c)?;
    }
    if let Some(slot) = table.iter().position(|&v| v == usize::MAX) {
        let rev = |m: &HashMap<String, usize>, i: usize| m.iter().find(|(_, &v)| v == i).map(|(k, _)| k.clone()).unwrap_or_default();
        return Err(invalid(format!(
            "{} entry for ({}, {}) missing",
            what,
            rev(first.0, slot / width),
            rev(second.0, slot % width)
        )));
    }
    Ok(table)
}

fn build_group(elements: &[String], mult: &[(String, String, String)]) -> Result<FiniteGroup> {
    let idx = index("element", elements)?;
    let n = elements.len();
    let table = dense("mult", mult, (&idx, "element"), (&idx, "element"), (&idx, "element"))?;
    FiniteGroup::from_fn(elements.to_vec(), |a, b| table[a * n + b])
}

fn build_action(group: &GroupBody, points: &[String], act: &[(String, String, String)]) -> Result<GroupAction> {
    let k = build_group(&group.elements, &group.mult)?;
    let gi = index("element", &group.elements)?;
    let pi = index("point", points)?;
    let table = dense("act", act, (&gi, "element"), (&pi, "point"), (&pi, "point"))?;
    GroupAction::new(k, points.to_vec(), table)
}

fn build_groupoid(s: &GroupoidSpec) -> Result<FiniteGroupoid> {
    let oi = index("object", &s.objects)?;
    let labels: Vec<String> = s.arrows.iter().map(|(a, _, _)| a.clone()).collect();
    let ai = index("arrow", &labels)?;
    let source = s.arrows.iter().map(|(_, x, _)| lookup(&oi, "object", x)).collect::<Result<Vec<_>>>()?;
    let target = s.arrows.iter().map(|(_, _, y)| lookup(&oi, "object", y)).collect::<Result<Vec<_>>>()?;
    let mut unit = vec![usize::MAX; s.objects.len()];
    for (x, a) in &s.units {
        let x = lookup(&oi, "object", x)?;
        if std::mem::replace(&mut unit[x], lookup(&ai, "arrow", a)?) != usize::MAX {
            return Err(invalid(format!("unit of `{}` given twice", s.objects[x])));
        }
    }
    if let Some(x) = unit.iter().position(|&u| u == usize::MAX) {
        return Err(invalid(format!("missing unit for object `{}`", s.objects[x])));
    }
    let mut inverse = vec![usize::MAX; labels.len()];
    for (a, b) in &s.inverses {
        let a = lookup(&ai, "arrow", a)?;
        if std::mem::replace(&mut inverse[a], lookup(&ai, "arrow", b)?) != usize::MAX {
            return Err(invalid(format!("inverse of `{}` given twice", labels[a])));
        }
    }
    if let Some(a) = inverse.iter().position(|&u| u == usize::MAX) {
        return Err(invalid(format!("missing inverse entry for arrow `{}`", labels[a])));
    }
    let comp = s
        .comp
        .iter()
        .map(|(g, h, gh)| Ok((lookup(&ai, "arrow", g)?, lookup(&ai, "arrow", h)?, lookup(&ai, "arrow", gh)?)))
        .collect::<Result<Vec<_>>>()?;
    let tables = GroupoidTables {
        objects: s.objects.clone(),
        arrows: labels,
        source,
        target,
        unit,
        inverse,
        comp,
    };
    FiniteGroupoid::from_tables(&tables).map_err(|v| invalid(format!("groupoid axiom: {}", v)))
}

fn build_pair(s: &PairSpec) -> Result<TransitivePair> {
    let action = build_action(&s.group, &s.points, &s.act)?;
    let pi = index("point", &s.points)?;
    let m = lookup(&pi, "point", &s.basepoint)?;
    let gi = index("element", &s.group.elements)?;
    let members = s.h.iter().map(|e| lookup(&gi, "element", e)).collect::<Result<Vec<_>>>()?;
    let h = Subgroup::new(action.group(), members)?;
    TransitivePair::new(action, m, h)
}

/// Syntax only; reports line and column.
pub fn parse_file(text: &str) -> Result<InstanceFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

impl InstanceFile {
    pub fn name(&self) -> &str {
        match self {
            InstanceFile::Group(s) => &s.name,
            InstanceFile::Action(s) => &s.name,
            InstanceFile::Groupoid(s) => &s.name,
            InstanceFile::Pair(s) => &s.name,
        }
    }

    /// Validates the tables and builds the object.
    pub fn build(&self) -> Result<Named> {
        let instance = match self {
            InstanceFile::Group(s) => Instance::Group(build_group(&s.elements, &s.mult)?),
            InstanceFile::Action(s) => Instance::Action(build_action(&s.group, &s.points, &s.act)?),
            InstanceFile::Groupoid(s) => Instance::Groupoid(build_groupoid(s)?),
            InstanceFile::Pair(s) => Instance::Pair(build_pair(s)?),
        };
        Ok(Named {
            name: self.name().to_string(),
            instance,
        })
    }

    pub fn from_instance(name: &str, instance: &Instance) -> Self {
        let name = name.to_string();
        match instance {
            Instance::Group(g) => {
                let body = group_body(g);
                InstanceFile::Group(GroupSpec {
                    name,
                    elements: body.elements,
                    mult: body.mult,
                })
            }
            Instance::Action(a) => InstanceFile::Action(ActionSpec {
                name,
                group: group_body(a.group()),
                points: a.points().to_vec(),
                act: act_rows(a),
            }),
            Instance::Groupoid(g) => InstanceFile::Groupoid(groupoid_spec(name, g)),
            Instance::Pair(p) => InstanceFile::Pair(PairSpec {
                name,
                group: group_body(p.group()),
                points: p.objects().to_vec(),
                act: act_rows(p.action()),
                basepoint: p.objects()[p.basepoint()].clone(),
                h: p.h().members().iter().map(|&e| p.group().name(e).to_string()).collect(),
            }),
        }
    }

    /// Canonical text: one table row per line, trailing newline.
    pub fn emit(&self) -> String {
        let value = serde_json::to_value(self).expect("instance serializes");
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }
}

/// Parse and validate.
pub fn load(text: &str) -> Result<Named> {
    parse_file(text)?.build()
}

pub fn emit(name: &str, instance: &Instance) -> String {
    InstanceFile::from_instance(name, instance).emit()
}

fn group_body(g: &FiniteGroup) -> GroupBody {
    GroupBody {
        elements: g.names().to_vec(),
        mult: g
            .elements()
            .flat_map(|a| g.elements().map(move |b| (a, b)))
            .map(|(a, b)| (g.name(a).to_string(), g.name(b).to_string(), g.name(g.mul(a, b)).to_string()))
            .collect(),
    }
}

fn act_rows(a: &GroupAction) -> Vec<(String, String, String)> {
    let (k, pts) = (a.group(), a.points());
    k.elements()
        .flat_map(|e| (0..pts.len()).map(move |x| (e, x)))
        .map(|(e, x)| (k.name(e).to_string(), pts[x].clone(), pts[a.act(e, x)].clone()))
        .collect()
}

fn groupoid_spec(name: String, g: &FiniteGroupoid) -> GroupoidSpec {
    let obj = |x: usize| g.objects()[x].clone();
    let lab = |a: usize| g.label(a).to_string();
    let mut comp = Vec::new();
    for a in g.arrows() {
        for &b in g.arrows_to(g.source(a)) {
            comp.push((lab(a), lab(b), lab(g.comp(a, b))));
        }
    }
    GroupoidSpec {
        name,
        objects: g.objects().to_vec(),
        arrows: g.arrows().map(|a| (lab(a), obj(g.source(a)), obj(g.target(a)))).collect(),
        units: (0..g.object_count()).map(|x| (obj(x), lab(g.unit(x)))).collect(),
        inverses: g.arrows().map(|a| (lab(a), lab(g.inverse(a)))).collect(),
        comp,
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(items: &[Value]) -> String {
    let parts: Vec<String> = items.iter().map(|x| serde_json::to_string(x).expect("scalar")).collect();
    format!("[{}]", parts.join(", "))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(k).expect("key serializes"));
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().all(is_scalar) => out.push_str(&inline(items)),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalar")),
    }
}
