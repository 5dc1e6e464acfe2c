//! Self-checks behind `ribbonmod verify`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::coxeter::{builtin_diagram, descent_class_multiset, format_multiset, residue_histogram};
use crate::cvec::{self, cvec_closed_form, cvec_naive, cvec_theorem, tuple_string, Method};
use crate::golden::{descent_class_lists, read_csv, GoldenRecord, GoldenTable};
use crate::ribbon::oracle::oracle_descent_class_sizes;
use crate::ribbon::ribbon;
use crate::{Error, Family, Prime, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Oracles,
    Formulas,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tables" => Ok(Suite::Tables),
            "oracles" => Ok(Suite::Oracles),
            "formulas" => Ok(Suite::Formulas),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidInput(format!("unknown suite {other:?}"))),
        }
    }
}

/// One report line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_failures(name: impl Into<String>, checked: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} checked")
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            format!("{} of {checked} failed: {}", failures.len(), shown.join("; "))
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag}  {}: {}", self.name, self.detail)
    }
}

pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("small prime")
}

/// Recomputes one reference vector: a family p-vector or an exceptional
/// residue histogram.
pub fn compute_record(record: &GoldenRecord) -> Result<Vec<BigUint>> {
    let p = Prime::new(record.p)?;
    match record.n {
        Some(n) => {
            let family: Family = record.group.parse()?;
            Ok(cvec::cvec(family, n, p, Method::Auto)?.counts)
        }
        None => {
            let g = builtin_diagram(&record.group)?;
            Ok(residue_histogram(&g, p)?
                .into_iter()
                .map(BigUint::from)
                .collect())
        }
    }
}

fn record_label(r: &GoldenRecord) -> String {
    match r.n {
        Some(n) => format!("{}{n} p={}", r.group, r.p),
        None => format!("{} p={}", r.group, r.p),
    }
}

/// Compares every record against a fresh computation.
pub fn check_records(name: impl Into<String>, records: &[GoldenRecord]) -> Check {
    let failures = records
        .iter()
        .filter_map(|r| match compute_record(r) {
            Ok(got) if got == r.counts => None,
            Ok(got) => Some(format!(
                "{}: expected {}, computed {}",
                record_label(r),
                tuple_string(&r.counts),
                tuple_string(&got)
            )),
            Err(e) => Some(format!("{}: {e}", record_label(r))),
        })
        .collect();
    Check::from_failures(name, records.len(), failures)
}

/// Checks a CSV file in the reference schema.
pub fn verify_csv_file(path: &Path) -> Result<Check> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let records = read_csv(file)?;
    Ok(check_records(path.display().to_string(), &records))
}

fn table_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for t in GoldenTable::ALL {
        let name = format!("reference vectors data/{}.csv", t.stem());
        match t.records() {
            Ok(recs) => out.push(check_records(name, &recs)),
            Err(e) => out.push(Check::from_failures(name, 0, vec![e.to_string()])),
        }
    }
    let mut failures = Vec::new();
    let mut checked = 0;
    match descent_class_lists() {
        Ok(lists) => {
            for (group, want) in lists {
                checked += 1;
                match builtin_diagram(&group).and_then(|g| descent_class_multiset(&g)) {
                    Ok(got) if got == want => {}
                    Ok(got) => failures.push(format!(
                        "{group}: expected {}, computed {}",
                        format_multiset(&want),
                        format_multiset(&got)
                    )),
                    Err(e) => failures.push(format!("{group}: {e}")),
                }
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    for m in 3..=12u32 {
        checked += 1;
        let want = format!("1^2, {}^2", m - 1);
        match builtin_diagram(&format!("I2:{m}")).and_then(|g| descent_class_multiset(&g)) {
            Ok(got) if format_multiset(&got) == want => {}
            Ok(got) => failures.push(format!("I2:{m}: {}", format_multiset(&got))),
            Err(e) => failures.push(format!("I2:{m}: {e}")),
        }
    }
    out.push(Check::from_failures(
        "exceptional descent-class multisets",
        checked,
        failures,
    ));
    out
}

/// Oracle sweep limits: A up to 8, B up to 6, D up to 7.
pub fn oracle_bound(family: Family) -> u32 {
    match family {
        Family::A => 8,
        Family::B => 6,
        Family::D => 7,
    }
}

/// Formula ribbon numbers and their residue histograms against direct
/// group enumeration.
pub fn oracle_check(family: Family) -> Check {
    let lo = if family == Family::D { 2 } else { 1 };
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in lo..=oracle_bound(family) {
        let sizes = match oracle_descent_class_sizes(family, n) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("{family}{n}: {e}"));
                continue;
            }
        };
        for (set, &size) in &sizes {
            checked += 1;
            match ribbon(family, set) {
                Ok(v) if v == BigUint::from(size) => {}
                Ok(v) => failures.push(format!("{family}{n} {set}: formula {v}, group {size}")),
                Err(e) => failures.push(format!("{family}{n} {set}: {e}")),
            }
        }
        if sizes.len() as u64 != 1u64 << family.index_count_log2(n) {
            failures.push(format!("{family}{n}: {} classes", sizes.len()));
        }
        for q in PRIMES {
            checked += 1;
            let mut hist = vec![0u64; q as usize];
            for &s in sizes.values() {
                hist[(s % q) as usize] += 1;
            }
            let want: Vec<BigUint> = hist.into_iter().map(BigUint::from).collect();
            match cvec_naive(family, n as u64, prime(q)) {
                Ok(v) if v.counts == want => {}
                Ok(v) => failures.push(format!("{family}{n} p={q}: histogram {v}")),
                Err(e) => failures.push(format!("{family}{n} p={q}: {e}")),
            }
        }
    }
    Check::from_failures(
        format!("type {family} formulas vs group enumeration (n <= {})", oracle_bound(family)),
        checked,
        failures,
    )
}

/// `cvec_naive = cvec_theorem` for `n` in `lo..=hi` and every prime in
/// [`PRIMES`].
pub fn method_agreement(family: Family, hi: u64) -> Check {
    let lo = if family == Family::D { 4 } else { 2 };
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in lo..=hi {
        for q in PRIMES {
            checked += 1;
            let res = cvec_naive(family, n, prime(q))
                .and_then(|a| cvec_theorem(family, n, prime(q)).map(|b| (a, b)));
            match res {
                Ok((a, b)) if a.same_counts(&b) => {}
                Ok((a, b)) => failures.push(format!("{family}{n} p={q}: naive {a}, theorem {b}")),
                Err(e) => failures.push(format!("{family}{n} p={q}: {e}")),
            }
        }
    }
    Check::from_failures(
        format!("type {family} enumeration vs support reduction (n <= {hi})"),
        checked,
        failures,
    )
}

/// Closed forms against the support reduction for `n ≤ hi`.
pub fn closed_form_agreement(hi: u64, primes: &[u64]) -> Check {
    let mut failures = Vec::new();
    let mut checked = 0;
    for family in Family::ALL {
        for &q in primes {
            for n in 2..=hi {
                let Some(c) = cvec_closed_form(family, n, prime(q)) else { continue };
                checked += 1;
                match cvec_theorem(family, n, prime(q)) {
                    Ok(t) if t.same_counts(&c) => {}
                    Ok(t) => failures.push(format!(
                        "{family}{n} p={q} ({}): closed {c}, theorem {t}",
                        c.provenance
                    )),
                    Err(e) => failures.push(format!("{family}{n} p={q}: {e}")),
                }
            }
        }
    }
    Check::from_failures(
        format!("closed forms vs support reduction (n <= {hi})"),
        checked,
        failures,
    )
}

pub fn run(suite: Suite) -> Vec<Check> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Tables | Suite::All) {
        out.extend(table_checks());
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        out.extend(Family::ALL.map(oracle_check));
    }
    if matches!(suite, Suite::Formulas | Suite::All) {
        out.push(closed_form_agreement(40, &[2, 3, 5, 7, 11]));
        out.extend(Family::ALL.map(|f| method_agreement(f, 12)));
    }
    out
}
