//! Suite dispatch and the report format.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use fatcat_core::double::{
    interchange_suite, verify_enrichment_closure, CellPredicate, GridCounterexample,
};
use fatcat_core::fat::verify_lemma1;
use fatcat_core::instances::{LatticeConnection, Limits};
use fatcat_core::monoidal::verify_fat_coherence;
use fatcat_core::{FiniteCategory, ValidationReport};

use crate::document::{Resolved, SpecDocument};
use crate::error::LoadError;

pub const SUITES: &[&str] = &[
    "axioms",
    "lemma1",
    "interchange",
    "enrichment",
    "coherence-base",
    "coherence-fat",
    "crossed-module",
    "biholonomy",
];

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub input: String,
    pub kind: String,
    pub pass: bool,
    pub checks: u64,
    pub laws: Vec<LawCount>,
    pub violations: Vec<ViolationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<GridCounterexampleRecord>,
    /// `table[t][s]` is the bi-holonomy `g(t, s)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LawCount {
    pub law: String,
    pub checked: u64,
    pub violations: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ViolationRecord {
    pub law: String,
    pub witness: Vec<String>,
    pub details: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GridCounterexampleRecord {
    pub squares: Vec<String>,
    pub rows_first: String,
    pub columns_first: String,
}

impl From<GridCounterexample> for GridCounterexampleRecord {
    fn from(g: GridCounterexample) -> Self {
        GridCounterexampleRecord {
            squares: g.squares.to_vec(),
            rows_first: g.rows_first,
            columns_first: g.columns_first,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub input: String,
    pub predicate: String,
    pub limits: Limits,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            input: String::new(),
            predicate: "two-sided-translation".into(),
            limits: Limits::default(),
        }
    }
}

impl Report {
    fn from_validation(suite: &str, doc: &SpecDocument, input: &str, r: &ValidationReport) -> Self {
        let laws = r
            .tallies()
            .iter()
            .map(|t| LawCount {
                law: t.law.clone(),
                checked: t.checked,
                violations: r.violations_of(&t.law).count() as u64,
            })
            .collect();
        let violations: Vec<ViolationRecord> = r
            .violations()
            .iter()
            .map(|v| ViolationRecord {
                law: v.law.clone(),
                witness: v.witness.clone(),
                details: v.details.clone(),
            })
            .collect();
        Report {
            suite: suite.to_string(),
            input: input.to_string(),
            kind: doc.kind().to_string(),
            pass: violations.is_empty(),
            checks: r.checks(),
            laws,
            violations,
            predicate: None,
            counterexample: None,
            table: None,
            elapsed_ms: None,
        }
    }

    pub fn checks_for(&self, law: &str) -> u64 {
        self.laws
            .iter()
            .filter(|l| l.law == law)
            .map(|l| l.checked)
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let status = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "suite {}  input {}  ({})  {status}",
            self.suite, self.input, self.kind
        );
        if let Some(p) = &self.predicate {
            let _ = writeln!(out, "predicate {p}");
        }
        let width = self
            .laws
            .iter()
            .map(|l| l.law.len())
            .max()
            .unwrap_or(3)
            .max(3);
        let _ = writeln!(
            out,
            "{:<width$}  {:>12}  {:>10}",
            "law", "checked", "violations"
        );
        for l in &self.laws {
            let _ = writeln!(
                out,
                "{:<width$}  {:>12}  {:>10}",
                l.law, l.checked, l.violations
            );
        }
        let _ = writeln!(out, "total checks {}", self.checks);
        if let Some(table) = &self.table {
            let _ = writeln!(out, "g(t, s), rows t, columns s:");
            for (t, row) in table.iter().enumerate() {
                let _ = writeln!(out, "  t={t}: {}", row.join(" "));
            }
        }
        const SHOWN: usize = 20;
        for v in self.violations.iter().take(SHOWN) {
            let _ = writeln!(
                out,
                "  [{}] ({}): {}",
                v.law,
                v.witness.join(", "),
                v.details
            );
        }
        if self.violations.len() > SHOWN {
            let _ = writeln!(out, "  … and {} more", self.violations.len() - SHOWN);
        }
        if let Some(cx) = &self.counterexample {
            let _ = writeln!(out, "first failing grid:");
            for s in &cx.squares {
                let _ = writeln!(out, "  {s}");
            }
            let _ = writeln!(out, "  rows first:    {}", cx.rows_first);
            let _ = writeln!(out, "  columns first: {}", cx.columns_first);
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}

fn applicable(suite: &str, kind: &str) -> bool {
    match suite {
        "axioms" | "lemma1" | "interchange" | "enrichment" => {
            matches!(kind, "category" | "monoidal")
        }
        "coherence-base" | "coherence-fat" => kind == "monoidal",
        "crossed-module" => kind == "crossed_module",
        "biholonomy" => kind == "lattice",
        _ => false,
    }
}

/// Runs one suite on a document. Input problems (unknown suite, wrong
/// kind, unresolvable names) are errors; law failures are in the report.
pub fn run_suite(
    doc: &SpecDocument,
    suite: &str,
    opts: &SuiteOptions,
) -> Result<Report, LoadError> {
    if !SUITES.contains(&suite) {
        return Err(LoadError::UnknownSuite(suite.to_string()));
    }
    if !applicable(suite, doc.kind()) {
        return Err(LoadError::Inapplicable {
            suite: suite.to_string(),
            kind: doc.kind().to_string(),
        });
    }
    let predicate = if suite == "enrichment" {
        Some(
            CellPredicate::by_name(&opts.predicate)
                .ok_or_else(|| LoadError::UnknownPredicate(opts.predicate.clone()))?,
        )
    } else {
        None
    };
    let resolved = doc.resolve(&opts.limits)?;
    let base = |r: &Resolved| -> Option<FiniteCategory> {
        match r {
            Resolved::Category(c) => Some(c.clone()),
            Resolved::Monoidal(m) => Some(m.base().clone()),
            _ => None,
        }
    };
    let mut counterexample = None;
    let mut table = None;
    let validation = match (suite, &resolved) {
        ("axioms", r) => base(r).expect("applicable").validate(),
        ("lemma1", r) => {
            let c = base(r).expect("applicable");
            let mut v = c.validate();
            if v.is_ok() {
                v = verify_lemma1(&c);
            }
            v
        }
        ("interchange", r) => {
            let c = base(r).expect("applicable");
            let mut v = c.validate();
            if v.is_ok() {
                let (sweep, first) = interchange_suite(&c);
                counterexample = first.map(Into::into);
                v = sweep;
            }
            v
        }
        ("enrichment", r) => {
            let c = base(r).expect("applicable");
            let mut v = c.validate();
            if v.is_ok() {
                v = verify_enrichment_closure(
                    &c,
                    predicate.as_ref().expect("enrichment predicate"),
                );
            }
            v
        }
        ("coherence-base", Resolved::Monoidal(m)) => m.validate(),
        ("coherence-fat", Resolved::Monoidal(m)) => {
            let mut v = m.base().validate();
            if v.is_ok() {
                v = verify_fat_coherence(m);
            }
            v
        }
        ("crossed-module", Resolved::CrossedModule(cm)) => cm.verify(),
        ("biholonomy", Resolved::Lattice(l)) => {
            let g = l.group();
            table = Some(
                l.biholonomy_table()
                    .iter()
                    .map(|row| row.iter().map(|&x| g.label(x).to_string()).collect())
                    .collect(),
            );
            biholonomy_laws(l)
        }
        _ => unreachable!("applicability checked above"),
    };
    let mut report = Report::from_validation(suite, doc, &opts.input, &validation);
    report.predicate = predicate.map(|p| p.name().to_string());
    report.counterexample = counterexample;
    report.pass = report.violations.is_empty() && report.counterexample.is_none();
    report.table = table;
    Ok(report)
}

/// Consistency laws of the bi-holonomy table: degenerate rectangles are
/// trivial, rectangles paste horizontally, and for abelian groups the value
/// is the product of the plaquettes inside.
fn biholonomy_laws(l: &LatticeConnection) -> ValidationReport {
    let g = l.group();
    let lbl = |x: usize| g.label(x).to_string();
    let mut r = ValidationReport::new();
    let (tt, ss) = (l.t_extent(), l.s_extent());
    for t in 0..=tt {
        for s in 0..=ss {
            let value = l.rectangle(0, 0, t, s);
            if t == 0 || s == 0 {
                r.check(
                    "biholonomy-degenerate",
                    value == g.identity(),
                    || vec![t.to_string(), s.to_string()],
                    || format!("g({t}, {s}) = {}", lbl(value)),
                );
            }
            for t1 in 1..t {
                let base = l.row_transport(0, 0, t1);
                let pasted = g.product(&[
                    l.rectangle(0, 0, t1, s),
                    g.inverse(base),
                    l.rectangle(t1, 0, t, s),
                    base,
                ]);
                r.check(
                    "biholonomy-pasting",
                    pasted == value,
                    || vec![t1.to_string(), t.to_string(), s.to_string()],
                    || format!("pasted {} vs direct {}", lbl(pasted), lbl(value)),
                );
            }
            if g.is_abelian() {
                let mut product = g.identity();
                for a in 0..t {
                    for b in 0..s {
                        product = g.mul(l.plaquette_biholonomy(a, b).expect("in range"), product);
                    }
                }
                r.check(
                    "biholonomy-plaquette-product",
                    product == value,
                    || vec![t.to_string(), s.to_string()],
                    || format!("plaquettes {} vs g = {}", lbl(product), lbl(value)),
                );
            }
        }
    }
    r
}
