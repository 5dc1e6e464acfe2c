//! Explicit p-vectors for special shapes of `n`.

use std::fmt;

use num_bigint::BigUint;

use super::chains::{chi, chi_b};
use super::{expand_counts, histogram, zeros, DimensionPVector, Provenance};
use crate::arith::BasePDigits;
use crate::ribbon::ribbon_table;
use crate::{Family, Prime};

/// Largest leading digit `m` for which the `m p^d` forms enumerate the
/// `2^m` ribbons of size `m`.
const MAX_LEADING: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `n = m p^d` with `m < p`.
    MultiplePower,
    /// `n` is a sum of `k` distinct powers of `p`, `2 ≤ k ≤ 4`.
    DistinctPowers(u32),
    /// `n = 2p^d + p^e`, `p` odd.
    TwicePlusPower,
    /// Signed families at `p = 2`: every class size is odd.
    Parity,
    /// Type D with `n = p^d`, `d ≥ 1`.
    DPower,
    /// Type D with `n = 2p^d`.
    DTwicePower,
    /// Type D with `n = 3p^d`, `p > 3`.
    DThricePower,
    /// Type D with `n = 1 + p^d`.
    DOnePlusPower,
    /// Type D with `n = p^d + p^e`, `d, e ≥ 1`.
    DTwoPowers,
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::MultiplePower => f.write_str("n = m p^d"),
            ClosedForm::DistinctPowers(k) => write!(f, "n = sum of {k} distinct powers"),
            ClosedForm::TwicePlusPower => f.write_str("n = 2p^d + p^e"),
            ClosedForm::Parity => f.write_str("parity"),
            ClosedForm::DPower => f.write_str("n = p^d"),
            ClosedForm::DTwicePower => f.write_str("n = 2p^d"),
            ClosedForm::DThricePower => f.write_str("n = 3p^d"),
            ClosedForm::DOnePlusPower => f.write_str("n = 1 + p^d"),
            ClosedForm::DTwoPowers => f.write_str("n = p^d + p^e"),
        }
    }
}

/// `(position, digit)` for every nonzero base-`p` digit of `n`.
fn nonzero_digits(nd: &BasePDigits) -> Vec<(usize, u64)> {
    nd.digits()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(j, &d)| (j, d))
        .collect()
}

/// Ones-only digits: the number of powers, when it is between 2 and 4.
fn distinct_power_count(nz: &[(usize, u64)]) -> Option<u32> {
    let k = nz.len() as u32;
    (nz.iter().all(|&(_, d)| d == 1) && (2..=4).contains(&k)).then_some(k)
}

/// Histogram of `(-1)^|T| stat(T)` over every `T` drawn from `masks`.
fn chain_histogram(p: Prime, masks: &[u32], stat: impl Fn(&[u32]) -> i64) -> Vec<u64> {
    let mut t = Vec::with_capacity(masks.len());
    let residues = (0..1u64 << masks.len()).map(|sel| {
        t.clear();
        t.extend(crate::compositions::bits(sel).map(|i| masks[i as usize]));
        let sign = if t.len() % 2 == 0 { 1 } else { -1 };
        p.reduce(sign * stat(&t))
    });
    histogram(p, residues.collect::<Vec<_>>())
}

/// Residue histogram of all ribbon numbers of size `m`.
fn ribbon_histogram(family: Family, m: u64, p: Prime) -> Option<Vec<u64>> {
    let table = ribbon_table(family, m as u32).ok()?;
    let q = p.get() as u128;
    Some(histogram(p, table.into_iter().map(|v| (v % q) as u64)))
}

/// Scales `pattern` by `2^shift`, placing entry `i` at residue `i`.
fn scaled(p: Prime, pattern: &[(u64, u64)], shift: u64) -> Vec<BigUint> {
    let mut counts = zeros(p);
    for &(i, c) in pattern {
        counts[i as usize] += BigUint::from(c) << shift;
    }
    counts
}

fn closed_a(n: u64, p: Prime, nd: &BasePDigits) -> Option<(ClosedForm, Vec<BigUint>)> {
    let nz = nonzero_digits(nd);
    let q = p.get();
    if let [(d, m)] = nz[..] {
        if m > MAX_LEADING {
            return None;
        }
        let h = ribbon_histogram(Family::A, m, p)?;
        let counts = expand_counts(p, &h, n - m, q == 2 || d == 0);
        return Some((ClosedForm::MultiplePower, counts));
    }
    if let Some(k) = distinct_power_count(&nz) {
        let masks: Vec<u32> = (1..(1u32 << k) - 1).collect();
        let h = chain_histogram(p, &masks, |t| chi(t, k));
        let free = n + 1 - (1u64 << k);
        return Some((ClosedForm::DistinctPowers(k), expand_counts(p, &h, free, q == 2)));
    }
    let shape_ok = p.is_odd()
        && nz.len() == 2
        && nz.iter().filter(|&&(_, d)| d == 2).count() == 1
        && nz.iter().filter(|&&(_, d)| d == 1).count() == 1;
    if !shape_ok {
        return None;
    }
    let s = n - 5;
    let counts = match q {
        3 if n == 5 => scaled(p, &[(0, 6), (1, 8), (2, 2)], 0),
        3 => scaled(p, &[(0, 6), (1, 5), (2, 5)], s),
        _ => scaled(p, &[(0, 6), (1, 4), (q - 1, 4), (2, 1), (q - 2, 1)], s),
    };
    Some((ClosedForm::TwicePlusPower, counts))
}

fn parity(n: u64, p: Prime) -> Vec<BigUint> {
    scaled(p, &[(1, 1)], n)
}

fn closed_b(n: u64, p: Prime, nd: &BasePDigits) -> Option<(ClosedForm, Vec<BigUint>)> {
    if !p.is_odd() {
        return Some((ClosedForm::Parity, parity(n, p)));
    }
    let nz = nonzero_digits(nd);
    if let [(d, m)] = nz[..] {
        if m > MAX_LEADING {
            return None;
        }
        let h = ribbon_histogram(Family::B, m, p)?;
        let counts = expand_counts(p, &h, n - m, d == 0);
        return Some((ClosedForm::MultiplePower, counts));
    }
    let k = distinct_power_count(&nz)?;
    let masks: Vec<u32> = (0..(1u32 << k) - 1).collect();
    let h = chain_histogram(p, &masks, |t| chi_b(t, k));
    let free = n + 1 - (1u64 << k);
    Some((ClosedForm::DistinctPowers(k), expand_counts(p, &h, free, false)))
}

/// `r(T)` for the type D shapes as exact integers. `T` is a bitmask over
/// the labelled support: bit 0 is position `0`, bit 1 is position `1`, and
/// the remaining bits follow [`d_support`].
pub(crate) fn d_table(form: ClosedForm, t: u32) -> i64 {
    let size = t.count_ones();
    match form {
        ClosedForm::DPower => match t {
            0b11 => -1,
            0b01 | 0b10 => 0,
            _ => 1,
        },
        ClosedForm::DTwicePower => match t {
            0b111 => -1,
            0b011 => -3,
            0b101 | 0b110 => -1,
            0b001 | 0b010 => 1,
            0b100 => 3,
            _ => 1,
        },
        ClosedForm::DThricePower => match t {
            0b1111 => -1,
            0b0111 => -5,
            0b1011 => -11,
            0b1101 | 0b1110 => -3,
            0b0011 => -7,
            0b1100 => 7,
            0b0101 | 0b0110 => -3,
            0b1001 | 0b1010 => 3,
            0b0001 | 0b0010 => 3,
            0b0100 => 11,
            0b1000 => 5,
            _ => 1,
        },
        ClosedForm::DOnePlusPower => match size {
            2 | 3 => -1,
            _ => 1,
        },
        ClosedForm::DTwoPowers => match (size, t) {
            (4 | 3, _) => 1,
            (2, 0b0011 | 0b1100) => -3,
            (2, _) => -1,
            _ => 1,
        },
        _ => unreachable!("not a type D shape"),
    }
}

/// The type D shape of `n`, if any, with its labelled support positions.
pub(crate) fn d_support(nd: &BasePDigits) -> Option<(ClosedForm, Vec<u64>)> {
    let p = nd.prime().get();
    let pow = |j: usize| p.pow(j as u32);
    match nonzero_digits(nd)[..] {
        [(d, 1)] if d >= 1 => Some((ClosedForm::DPower, vec![0, 1])),
        [(d, 2)] if d >= 1 => Some((ClosedForm::DTwicePower, vec![0, 1, pow(d)])),
        [(d, 3)] if d >= 1 && p > 3 => {
            Some((ClosedForm::DThricePower, vec![0, 1, pow(d), 2 * pow(d)]))
        }
        [(0, 1), (d, 1)] => Some((ClosedForm::DOnePlusPower, vec![0, 1, pow(d)])),
        [(d, 1), (e, 1)] if d >= 1 => Some((ClosedForm::DTwoPowers, vec![0, 1, pow(d), pow(e)])),
        _ => None,
    }
}

fn closed_d(n: u64, p: Prime, nd: &BasePDigits) -> Option<(ClosedForm, Vec<BigUint>)> {
    if !p.is_odd() {
        return Some((ClosedForm::Parity, parity(n, p)));
    }
    let (form, labels) = d_support(nd)?;
    let size = labels.len() as u32;
    let h = histogram(p, (0..1u32 << size).map(|t| p.reduce(d_table(form, t))));
    Some((form, expand_counts(p, &h, n - size as u64, false)))
}

/// The p-vector when `n` has one of the special shapes, else `None`.
pub fn cvec_closed_form(family: Family, n: u64, p: Prime) -> Option<DimensionPVector> {
    let min = if family == Family::D { 4 } else { 2 };
    if n < min {
        return None;
    }
    let nd = BasePDigits::new(n, p);
    let (form, counts) = match family {
        Family::A => closed_a(n, p, &nd),
        Family::B => closed_b(n, p, &nd),
        Family::D => closed_d(n, p, &nd),
    }?;
    Some(DimensionPVector::new(
        family,
        n,
        p,
        counts,
        Provenance::ClosedForm(form),
    ))
}
