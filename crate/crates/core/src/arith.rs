//! Base-p digits and factorial-family arithmetic, exact and modulo a prime.
//!
//! The modular side rests on the digit-wise factorisation of multinomial
//! coefficients: writing every part in base `p`, a multinomial is congruent
//! to the product over digit columns of the small multinomials formed by
//! that column, and vanishes unless no column carries.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Largest modulus accepted by [`Prime::new`]. Trial division up to `2^16`
/// settles primality below this bound.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// A prime modulus, checked by trial division at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::ModulusTooLarge(p));
        }
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// Reduces a signed integer into `0..p`.
    #[inline]
    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    /// The residue `-i mod p`.
    #[inline]
    pub fn neg(self, i: u64) -> u64 {
        (self.0 - i % self.0) % self.0
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Little-endian base-p expansion of a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasePDigits {
    digits: Vec<u64>,
    p: Prime,
}

impl BasePDigits {
    pub fn new(mut n: u64, p: Prime) -> Self {
        let mut digits = Vec::new();
        while n > 0 {
            digits.push(n % p.get());
            n /= p.get();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        BasePDigits { digits, p }
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Digit at position `j`, reading zero past the top digit.
    #[inline]
    pub fn digit(&self, j: usize) -> u64 {
        self.digits.get(j).copied().unwrap_or(0)
    }

    /// Number of stored digits (`k + 1` when the top digit has index `k`).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.p.get() as u128 + d as u128)
    }

    /// `Π_j (n_j + 1)`: the number of digit-bounded integers `0 ≤ m ≤ n`.
    pub fn bounded_count(&self) -> u128 {
        self.digits.iter().map(|&d| d as u128 + 1).product()
    }

    /// Whether every digit below the top one equals `p - 1`. Vacuously true
    /// for single-digit values.
    pub fn is_carry_saturated(&self) -> bool {
        let k = self.digits.len() - 1;
        self.digits[..k].iter().all(|&d| d == self.p.get() - 1)
    }

    /// True when `m`'s digits are bounded digit-wise by these digits.
    pub fn dominates(&self, m: u64) -> bool {
        let p = self.p.get();
        let mut m = m;
        let mut j = 0;
        while m > 0 {
            if m % p > self.digit(j) {
                return false;
            }
            m /= p;
            j += 1;
        }
        true
    }

    /// All integers `b_0 + b_1 p + ... + b_k p^k` with `0 ≤ b_j ≤ n_j`, sorted.
    pub fn bounded_values(&self) -> Vec<u64> {
        let mut out = vec![0u64];
        let mut place = 1u64;
        for &d in &self.digits {
            let prev = std::mem::take(&mut out);
            for b in 0..=d {
                out.extend(prev.iter().map(|&v| v + b * place));
            }
            place = place.saturating_mul(self.p.get());
        }
        out.sort_unstable();
        out
    }
}

pub fn base_p_digits(n: u64, p: Prime) -> BasePDigits {
    BasePDigits::new(n, p)
}

/// `n! / (m_1! ... m_k!)` when the parts sum to `n`, otherwise zero.
pub fn multinomial_exact(n: u64, parts: &[u64]) -> BigUint {
    let total: u128 = parts.iter().map(|&m| m as u128).sum();
    if total != n as u128 {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut filled = 0u64;
    for &m in parts {
        filled += m;
        acc *= binomial_big(filled, m);
    }
    acc
}

fn binomial_big(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r *= n - i;
        r /= i + 1;
    }
    r
}

/// Fixed-width multinomial; `None` on overflow or mismatched sum.
pub(crate) fn multinomial_u128(n: u64, parts: &[u64]) -> Option<u128> {
    if parts.iter().map(|&m| m as u128).sum::<u128>() != n as u128 {
        return None;
    }
    let mut acc: u128 = 1;
    let mut filled = 0u64;
    for &m in parts {
        filled += m;
        let k = m.min(filled - m);
        let mut r: u128 = 1;
        for i in 0..k {
            r = r.checked_mul((filled - i) as u128)? / (i as u128 + 1);
        }
        acc = acc.checked_mul(r)?;
    }
    Some(acc)
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of a unit modulo a prime.
pub fn inv_mod(a: u64, p: Prime) -> u64 {
    debug_assert!(a % p.get() != 0);
    pow_mod(a, p.get() - 2, p.get())
}

/// `2^e mod p`.
pub fn pow2_mod_p(e: u64, p: Prime) -> u64 {
    pow_mod(2, e, p.get())
}

/// Factorial tables mod `p` for arguments below `p`, used to evaluate
/// per-column multinomials `C(n_j; β_1j, ..., β_lj)`.
#[derive(Debug, Clone)]
pub struct DigitMultinomial {
    p: Prime,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl DigitMultinomial {
    /// Tables large enough for digits up to `max_digit` (at most `p - 1`).
    pub fn new(p: Prime, max_digit: u64) -> Self {
        let top = max_digit.min(p.get() - 1) as usize;
        let mut fact = Vec::with_capacity(top + 1);
        fact.push(1u64);
        for i in 1..=top {
            fact.push(mul_mod(fact[i - 1], i as u64, p.get()));
        }
        let inv_fact = fact.iter().map(|&f| inv_mod(f, p)).collect();
        DigitMultinomial { p, fact, inv_fact }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn fact(&self, d: u64) -> u64 {
        self.fact[d as usize]
    }

    #[inline]
    pub fn inv_fact(&self, d: u64) -> u64 {
        self.inv_fact[d as usize]
    }
}

/// `C(n; parts) mod p` by the digit-wise product. Returns zero when the parts
/// do not sum to `n` or when some digit column fails to add up to `n_j`.
pub fn multinomial_mod_p(n: u64, parts: &[u64], p: Prime) -> u64 {
    if parts.iter().map(|&m| m as u128).sum::<u128>() != n as u128 {
        return 0;
    }
    let nd = BasePDigits::new(n, p);
    let max_digit = nd.digits().iter().copied().max().unwrap_or(0);
    let tables = DigitMultinomial::new(p, max_digit);
    multinomial_mod_p_with(&nd, parts, &tables)
}

/// As [`multinomial_mod_p`] with precomputed digits of `n` and tables.
pub fn multinomial_mod_p_with(nd: &BasePDigits, parts: &[u64], tables: &DigitMultinomial) -> u64 {
    let p = nd.prime().get();
    let k = nd.len();
    let mut col_sum = vec![0u64; k];
    let mut denom = 1u64;
    for &m in parts {
        let mut m = m;
        let mut j = 0;
        while m > 0 {
            if j >= k {
                return 0;
            }
            let d = m % p;
            col_sum[j] += d;
            if col_sum[j] > nd.digit(j) {
                return 0;
            }
            denom = mul_mod(denom, tables.inv_fact(d), p);
            m /= p;
            j += 1;
        }
    }
    let mut acc = denom;
    for (j, &s) in col_sum.iter().enumerate() {
        if s != nd.digit(j) {
            return 0;
        }
        acc = mul_mod(acc, tables.fact(s), p);
    }
    acc
}
