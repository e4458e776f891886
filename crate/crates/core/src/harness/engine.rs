//! Pointwise law checking over explicit tables.
//!
//! A [`Law`] is a family of statements indexed by `0..domain`. Equations
//! compare two composites of tables (applied right to left), so a failure
//! names the first element on which the composites disagree, and replaying
//! that element alone reproduces it.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub type Table = Vec<usize>;

type PredicateFn = dyn Fn(usize) -> std::result::Result<(), String> + Send + Sync;

#[derive(Clone)]
pub enum Check {
    /// `lhs[0] ∘ lhs[1] ∘ … = rhs[0] ∘ rhs[1] ∘ …`; an empty chain is the identity.
    Equation { lhs: Vec<Table>, rhs: Vec<Table> },
    Predicate(Arc<PredicateFn>),
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Equation { lhs, rhs } => write!(f, "Equation({} = {} tables)", lhs.len(), rhs.len()),
            Check::Predicate(_) => f.write_str("Predicate"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Law {
    pub id: String,
    pub subject: String,
    /// Display labels of the domain elements.
    pub labels: Vec<String>,
    pub check: Check,
}

fn eval(chain: &[Table], x: usize) -> std::result::Result<usize, String> {
    chain.iter().rev().try_fold(x, |acc, t| {
        t.get(acc)
            .copied()
            .ok_or_else(|| format!("table of size {} applied to {}", t.len(), acc))
    })
}

impl Law {
    pub fn equation(id: &str, subject: &str, labels: Vec<String>, lhs: Vec<Table>, rhs: Vec<Table>) -> Self {
        Law {
            id: id.to_string(),
            subject: subject.to_string(),
            labels,
            check: Check::Equation { lhs, rhs },
        }
    }

    pub fn predicate(
        id: &str,
        subject: &str,
        labels: Vec<String>,
        f: impl Fn(usize) -> std::result::Result<(), String> + Send + Sync + 'static,
    ) -> Self {
        Law {
            id: id.to_string(),
            subject: subject.to_string(),
            labels,
            check: Check::Predicate(Arc::new(f)),
        }
    }

    /// A law with a single statement.
    pub fn single(id: &str, subject: &str, ok: std::result::Result<(), String>) -> Self {
        Law::predicate(id, subject, vec![subject.to_string()], move |_| ok.clone())
    }

    pub fn domain(&self) -> usize {
        self.labels.len()
    }

    pub fn check_at(&self, i: usize) -> std::result::Result<(), String> {
        match &self.check {
            Check::Equation { lhs, rhs } => {
                let (l, r) = (eval(lhs, i)?, eval(rhs, i)?);
                if l == r {
                    Ok(())
                } else {
                    Err(format!("lhs gives {}, rhs gives {}", l, r))
                }
            }
            Check::Predicate(f) => f(i),
        }
    }

    pub fn run(&self) -> LawReport {
        let start = Instant::now();
        let failure = (0..self.domain()).find_map(|i| self.check_at(i).err().map(|d| (i, d)));
        let elapsed_us = start.elapsed().as_micros() as u64;
        match failure {
            None => LawReport {
                law: self.id.clone(),
                subject: self.subject.clone(),
                status: Status::Pass,
                witness: None,
                elapsed_us,
            },
            Some((index, detail)) => LawReport {
                law: self.id.clone(),
                subject: self.subject.clone(),
                status: Status::Fail,
                witness: Some(Witness {
                    index,
                    element: self.labels[index].clone(),
                    detail,
                }),
                elapsed_us,
            },
        }
    }

    /// Re-checks only the witnessed element; true if it still fails.
    pub fn replay(&self, witness: &Witness) -> bool {
        witness.index < self.domain() && self.check_at(witness.index).is_err()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub element: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_us: u64,
}

impl LawReport {
    pub fn skipped(law: &str, subject: &str, reason: impl Into<String>) -> Self {
        LawReport {
            law: law.to_string(),
            subject: subject.to_string(),
            status: Status::Skipped,
            witness: Some(Witness {
                index: 0,
                element: subject.to_string(),
                detail: reason.into(),
            }),
            elapsed_us: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{:<7} {} [{}]", self.status, self.law, self.subject);
        if let Some(w) = &self.witness {
            s.push_str(&format!(" at {}: {}", w.element, w.detail));
        }
        s
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Runs laws on the worker pool; reports come back sorted by law id, then subject.
pub fn run_all(laws: &[Law]) -> Vec<LawReport> {
    let mut reports: Vec<LawReport> = laws.par_iter().map(Law::run).collect();
    reports.sort_by(|a, b| (&a.law, &a.subject).cmp(&(&b.law, &b.subject)));
    reports
}

pub fn all_pass(reports: &[LawReport]) -> bool {
    reports.iter().all(LawReport::passed)
}

/// Identity table on `n` elements.
pub fn identity_table(n: usize) -> Table {
    (0..n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equations_compose_right_to_left() {
        let f = vec![1, 2, 0];
        let g = vec![2, 0, 1];
        let labels = vec!["a".into(), "b".into(), "c".into()];
        let law = Law::equation("inverse", "Z3", labels.clone(), vec![f.clone(), g.clone()], vec![]);
        assert_eq!(law.run().status, Status::Pass);

        let mut bad = g.clone();
        bad[1] = 1;
        let law = Law::equation("inverse", "Z3", labels, vec![f, bad], vec![]);
        let report = law.run();
        assert_eq!(report.status, Status::Fail);
        let w = report.witness.unwrap();
        assert_eq!(w.element, "b");
        assert!(law.replay(&w));
    }

    #[test]
    fn out_of_range_tables_fail_instead_of_panicking() {
        let law = Law::equation("x", "y", vec!["0".into()], vec![vec![5], vec![0]], vec![vec![0]]);
        assert_eq!(law.run().status, Status::Fail);
    }

    #[test]
    fn reports_are_sorted() {
        let laws = vec![
            Law::single("b", "s", Ok(())),
            Law::single("a", "t", Ok(())),
            Law::single("a", "s", Err("no".into())),
        ];
        let r = run_all(&laws);
        let keys: Vec<_> = r.iter().map(|r| (r.law.as_str(), r.subject.as_str())).collect();
        assert_eq!(keys, [("a", "s"), ("a", "t"), ("b", "s")]);
        assert!(!all_pass(&r));
        assert!(r[0].to_json_line().contains("\"status\":\"fail\""));
    }
}
