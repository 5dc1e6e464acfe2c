//! Dimension p-vectors: how many descent classes have size `≡ i (mod p)`.
//!
//! For a family `F` and size `n`, entry `i` of the vector counts the
//! (pseudo-)compositions whose ribbon number is congruent to `i` modulo `p`.
//! Three routes compute it:
//!
//! * [`cvec_naive`]: materialise every ribbon number and reduce;
//! * [`cvec_theorem`]: reduce to the subsets of the digit-bounded support
//!   set, so the cost depends on the digits of `n`, not on `n`;
//! * [`cvec_closed_form`]: explicit answers for special shapes of `n`.

mod chains;
mod closed;
mod macdonald;
mod support;
mod theorem;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::ribbon::{ribbon_table, TABLE_MAX_N};
use crate::{Error, Family, Prime, Result};

pub use chains::{chi, chi_b};
pub use closed::{cvec_closed_form, ClosedForm};
pub use macdonald::{f_lambda_hook, macdonald_mp, partitions};
pub use support::{r_t, r_t_all, support_set, SupportSet, MAX_SUPPORT};
pub use theorem::cvec_theorem;

/// Which route produced a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Naive,
    Theorem,
    /// A parity result: every class size is odd.
    Parity,
    ClosedForm(ClosedForm),
}

impl Provenance {
    pub fn method_name(&self) -> &'static str {
        match self {
            Provenance::Naive => "naive",
            Provenance::Theorem | Provenance::Parity => "theorem",
            Provenance::ClosedForm(_) => "closed-form",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Naive => f.write_str("naive"),
            Provenance::Theorem => f.write_str("theorem"),
            Provenance::Parity => f.write_str("theorem (parity)"),
            Provenance::ClosedForm(c) => write!(f, "closed-form ({c})"),
        }
    }
}

/// Method selector for [`cvec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    Theorem,
    Closed,
    /// Closed form if one applies, else theorem, else naive.
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "theorem" => Ok(Method::Theorem),
            "closed" | "closed-form" => Ok(Method::Closed),
            "auto" => Ok(Method::Auto),
            other => Err(Error::InvalidInput(format!("unknown method {other:?}"))),
        }
    }
}

/// Residue histogram of ribbon numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionPVector {
    pub family: Family,
    pub n: u64,
    pub p: Prime,
    pub counts: Vec<BigUint>,
    pub provenance: Provenance,
}

impl DimensionPVector {
    pub(crate) fn new(
        family: Family,
        n: u64,
        p: Prime,
        counts: Vec<BigUint>,
        provenance: Provenance,
    ) -> Self {
        debug_assert_eq!(counts.len() as u64, p.get());
        DimensionPVector {
            family,
            n,
            p,
            counts,
            provenance,
        }
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Expected total: `2^(n-1)` for A, `2^n` for B and D.
    pub fn expected_total(family: Family, n: u64) -> BigUint {
        BigUint::from(1u32) << (if family.is_signed() { n } else { n - 1 })
    }

    /// Counts as `u64`; panics if any count does not fit.
    pub fn counts_u64(&self) -> Vec<u64> {
        self.counts
            .iter()
            .map(|c| c.to_u64().expect("count fits in u64"))
            .collect()
    }

    /// Same counts, ignoring provenance.
    pub fn same_counts(&self, other: &DimensionPVector) -> bool {
        self.family == other.family
            && self.n == other.n
            && self.p == other.p
            && self.counts == other.counts
    }

    /// `(c_0, c_1, ..., c_{p-1})`.
    pub fn tuple_string(&self) -> String {
        tuple_string(&self.counts)
    }
}

pub(crate) fn tuple_string(counts: &[BigUint]) -> String {
    let inner: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

impl fmt::Display for DimensionPVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tuple_string())
    }
}

/// Histogram of exact ribbon numbers reduced mod `p`. Limited to
/// `n ≤ 22` since every class size is materialised.
pub fn cvec_naive(family: Family, n: u64, p: Prime) -> Result<DimensionPVector> {
    if n > TABLE_MAX_N as u64 {
        return Err(Error::Capacity {
            what: "naive p-vector size",
            limit: TABLE_MAX_N as u64,
            got: n,
        });
    }
    let table = ribbon_table(family, n as u32)?;
    let q = p.get() as u128;
    let mut hist = vec![0u64; p.get() as usize];
    for v in table {
        hist[(v % q) as usize] += 1;
    }
    Ok(DimensionPVector::new(
        family,
        n,
        p,
        hist.into_iter().map(BigUint::from).collect(),
        Provenance::Naive,
    ))
}

/// Dispatches on `method`.
pub fn cvec(family: Family, n: u64, p: Prime, method: Method) -> Result<DimensionPVector> {
    match method {
        Method::Naive => cvec_naive(family, n, p),
        Method::Theorem => cvec_theorem(family, n, p),
        Method::Closed => cvec_closed_form(family, n, p).ok_or_else(|| {
            Error::InvalidInput(format!(
                "no closed form applies to type {family} with n = {n}, p = {p}"
            ))
        }),
        Method::Auto => {
            if let Some(v) = cvec_closed_form(family, n, p) {
                return Ok(v);
            }
            match cvec_theorem(family, n, p) {
                Ok(v) => Ok(v),
                Err(theorem_err) => cvec_naive(family, n, p).map_err(|_| theorem_err),
            }
        }
    }
}

/// Histogram helper: residues to counts, zeroes filled in.
pub(crate) fn histogram(p: Prime, residues: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut h = vec![0u64; p.get() as usize];
    for r in residues {
        h[r as usize] += 1;
    }
    h
}

/// Turns subset counts `N(i)` into class counts, using the shared
/// multiplier rule: each subset stands for `2^free` classes, split evenly
/// between the two signs unless `unsigned` (no free positions, `p = 2`).
pub(crate) fn expand_counts(p: Prime, hist: &[u64], free: u64, unsigned: bool) -> Vec<BigUint> {
    (0..p.get())
        .map(|i| {
            if unsigned || i == 0 {
                BigUint::from(hist[i as usize]) << free
            } else {
                debug_assert!(free >= 1);
                let both = hist[i as usize] + hist[p.neg(i) as usize];
                BigUint::from(both) << (free - 1)
            }
        })
        .collect()
}

pub(crate) fn zeros(p: Prime) -> Vec<BigUint> {
    vec![BigUint::zero(); p.get() as usize]
}
