#![allow(dead_code)]

use ribbonmod::{BasePDigits, Family, Prime};

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

/// Exponent of the power of two that the corollaries guarantee divides the
/// count of classes of residue `i`, clamped at zero.
pub fn two_adic_bound(family: Family, n: u64, p: Prime, i: u64) -> u64 {
    let nd = BasePDigits::new(n, p);
    let prod = nd.bounded_count() as i64;
    let sat = nd.is_carry_saturated();
    let n = n as i64;
    let e = match family {
        Family::A if !p.is_odd() || i == 0 || sat => n + 2 - prod,
        Family::A => n + 1 - prod,
        Family::B if i == 0 || sat => n + 2 - prod,
        Family::B => n + 1 - prod,
        Family::D if (nd.digit(0) > 0 && i == 0) || sat => n + 2 - prod,
        Family::D if nd.digit(0) == 0 && i != 0 => n - prod,
        Family::D => n + 1 - prod,
    };
    e.max(0) as u64
}

/// Type A with `n = p^d`, `p` odd, `i ≠ 0`: the support set is empty, so
/// the pairing `T ↔ P∖T` that supplies one factor of two is the identity
/// and only `2^(n-2)` divides.
pub fn empty_support_exception(family: Family, n: u64, p: Prime, i: u64) -> bool {
    family == Family::A
        && p.is_odd()
        && i != 0
        && BasePDigits::new(n, p).bounded_count() == 2
}

/// Whether `counts[i] = counts[p - i]` is required.
pub fn must_be_palindromic(n: u64, p: Prime) -> bool {
    !BasePDigits::new(n, p).is_carry_saturated()
}
