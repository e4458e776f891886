use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupAxiom {
    /// Table shape, element ids out of range, duplicate names.
    Closure,
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupAxiom::Closure => "closure",
            GroupAxiom::Identity => "identity",
            GroupAxiom::Inverse => "inverse",
            GroupAxiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

/// First violated group axiom, with the offending elements by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: GroupAxiom,
    pub witness: Vec<String>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (witness: {})", self.axiom, self.witness.join(", "))
    }
}

impl std::error::Error for AxiomViolation {}

/// A finite group stored as a full multiplication table.
///
/// The order of `names` is the canonical element order: every "minimal
/// representative" in this crate is a minimum with respect to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates every axiom; `table[a * n + b]` is `a·b`.
    pub fn new(names: Vec<String>, table: Vec<usize>, identity: usize, inverse: Vec<usize>) -> Result<Self> {
        validate_group(&names, &table, identity, &inverse)?;
        Ok(FiniteGroup {
            names,
            table,
            identity,
            inverse,
        })
    }

    /// Builds the table from `mul`, locating the identity and inverses, then validates.
    pub fn from_fn(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or_else(|| AxiomViolation {
                axiom: GroupAxiom::Identity,
                witness: vec!["no two-sided identity".into()],
            })?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n).find(|&b| table[a * n + b] == identity).ok_or_else(|| AxiomViolation {
                axiom: GroupAxiom::Inverse,
                witness: vec![names[a].clone()],
            })?;
            inverse.push(inv);
        }
        Self::new(names, table, identity, inverse)
    }

    /// Trusted constructor for tables derived from already validated groups.
    pub(crate) fn from_parts_unchecked(names: Vec<String>, table: Vec<usize>, identity: usize, inverse: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), names.len() * names.len());
        FiniteGroup {
            names,
            table,
            identity,
            inverse,
        }
    }

    pub fn trivial() -> Self {
        Self::from_parts_unchecked(vec!["e".into()], vec![0], 0, vec![0])
    }

    /// `Z/n`, elements named `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let names = (0..n).map(|i| i.to_string()).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((a + b) % n);
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        Self::from_parts_unchecked(names, table, 0, inverse)
    }

    /// `self × other` with lexicographic element order, names `(a,b)`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let names = (0..n * m)
            .map(|i| format!("({},{})", self.names[i / m], other.names[i % m]))
            .collect();
        let mut table = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                table.push(self.mul(x / m, y / m) * m + other.mul(x % m, y % m));
            }
        }
        let inverse = (0..n * m).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        Self::from_parts_unchecked(names, table, self.identity * m + other.identity, inverse)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `g·x·g⁻¹`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name_index(&self) -> HashMap<&str, usize> {
        self.names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Same group with elements renamed; the table is untouched.
    pub fn renamed(&self, names: Vec<String>) -> Result<FiniteGroup> {
        if names.len() != self.order() {
            return Err(Error::Validation("rename: wrong number of names".into()));
        }
        check_distinct(&names)?;
        Ok(FiniteGroup {
            names,
            ..self.clone()
        })
    }
}

fn check_distinct(names: &[String]) -> std::result::Result<(), AxiomViolation> {
    let mut seen = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if let Some(j) = seen.insert(n.as_str(), i) {
            return Err(AxiomViolation {
                axiom: GroupAxiom::Closure,
                witness: vec![format!("duplicate element `{}` at positions {} and {}", n, j, i)],
            });
        }
    }
    Ok(())
}

/// Checks a raw group table. Order of checks: closure, identity, inverse,
/// associativity; the first failure is returned with a witness.
pub fn validate_group(
    names: &[String],
    table: &[usize],
    identity: usize,
    inverse: &[usize],
) -> std::result::Result<(), AxiomViolation> {
    let n = names.len();
    let closure = |msg: String| AxiomViolation {
        axiom: GroupAxiom::Closure,
        witness: vec![msg],
    };
    if n == 0 {
        return Err(closure("empty element list".into()));
    }
    check_distinct(names)?;
    if table.len() != n * n {
        return Err(closure(format!("table has {} entries, expected {}", table.len(), n * n)));
    }
    if inverse.len() != n {
        return Err(closure(format!("inverse table has {} entries, expected {}", inverse.len(), n)));
    }
    if identity >= n {
        return Err(closure("identity is not an element".into()));
    }
    if let Some(i) = table.iter().position(|&c| c >= n) {
        return Err(closure(format!("{}·{} is not an element", names[i / n], names[i % n])));
    }
    if let Some(a) = inverse.iter().position(|&c| c >= n) {
        return Err(closure(format!("inverse of {} is not an element", names[a])));
    }

    let mul = |a: usize, b: usize| table[a * n + b];
    for x in 0..n {
        if mul(identity, x) != x || mul(x, identity) != x {
            return Err(AxiomViolation {
                axiom: GroupAxiom::Identity,
                witness: vec![names[identity].clone(), names[x].clone()],
            });
        }
    }
    for x in 0..n {
        let y = inverse[x];
        if mul(x, y) != identity || mul(y, x) != identity {
            return Err(AxiomViolation {
                axiom: GroupAxiom::Inverse,
                witness: vec![names[x].clone(), names[y].clone()],
            });
        }
    }

    // Light's test: (x·s)·y = x·(s·y) for all x, y and s in a set generating the magma.
    for s in magma_generators(n, &mul) {
        for x in 0..n {
            let xs = mul(x, s);
            for y in 0..n {
                if mul(xs, y) != mul(x, mul(s, y)) {
                    return Err(AxiomViolation {
                        axiom: GroupAxiom::Associativity,
                        witness: vec![names[x].clone(), names[s].clone(), names[y].clone()],
                    });
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set of the magma `(0..n, mul)`; closure uses all pairwise
/// products so it does not presuppose associativity.
fn magma_generators(n: usize, mul: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    while let Some(g) = (0..n).find(|&x| !inside[x]) {
        gens.push(g);
        inside[g] = true;
        members.push(g);
        let mut frontier = 0;
        // every new member is multiplied with every member on both sides
        while frontier < members.len() {
            let a = members[frontier];
            frontier += 1;
            let mut i = 0;
            while i < frontier {
                let b = members[i];
                i += 1;
                for c in [mul(a, b), mul(b, a)] {
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn z2_passes() {
        assert!(validate_group(&names(&["e", "s"]), &[0, 1, 1, 0], 0, &[0, 1]).is_ok());
    }

    #[test]
    fn idempotent_s_has_no_inverse() {
        let err = validate_group(&names(&["e", "s"]), &[0, 1, 1, 1], 0, &[0, 1]).unwrap_err();
        assert_eq!(err.axiom, GroupAxiom::Inverse);
        assert_eq!(err.witness[0], "s");
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = validate_group(&names(&["e", "e"]), &[0, 1, 1, 0], 0, &[0, 1]).unwrap_err();
        assert_eq!(err.axiom, GroupAxiom::Closure);
    }

    #[test]
    fn out_of_range_entry_rejected() {
        let err = validate_group(&names(&["e", "s"]), &[0, 1, 1, 2], 0, &[0, 1]).unwrap_err();
        assert_eq!(err.axiom, GroupAxiom::Closure);
    }

    #[test]
    fn non_associative_loop_is_caught() {
        // the smallest loop that is not a group (order 5), identity 0
        let t = [
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = validate_group(&names(&["0", "1", "2", "3", "4"]), &t, 0, &[0, 1, 2, 3, 4]).unwrap_err();
        assert_eq!(err.axiom, GroupAxiom::Associativity);
        let idx = |s: &str| s.parse::<usize>().unwrap();
        let (x, s, y) = (idx(&err.witness[0]), idx(&err.witness[1]), idx(&err.witness[2]));
        assert_ne!(t[t[x * 5 + s] * 5 + y], t[x * 5 + t[s * 5 + y]]);
    }

    #[test]
    fn products_and_cyclic_groups() {
        let z2 = FiniteGroup::cyclic(2);
        let k = z2.direct_product(&z2);
        assert_eq!(k.order(), 4);
        assert!(k.is_abelian());
        assert!(validate_group(k.names(), k.table(), k.identity(), k.inverse_table()).is_ok());
        assert_eq!(k.name(3), "(1,1)");
    }
}
