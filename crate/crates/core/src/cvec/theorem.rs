use num_bigint::BigUint;

use super::support::r_t_all;
use super::{expand_counts, histogram, zeros, DimensionPVector, Provenance};
use crate::arith::BasePDigits;
use crate::{Error, Family, Prime, Result};

/// The p-vector from the reduced sums over the support set.
///
/// Each `T ⊆ P` stands for the `2^free` descent sets that agree with `T` on
/// `P`; they share `±r(T) mod p`, with both signs equally often unless
/// `p = 2` or `P` is everything. The signed families at `p = 2` have every
/// class size odd.
pub fn cvec_theorem(family: Family, n: u64, p: Prime) -> Result<DimensionPVector> {
    let min = if family == Family::D { 4 } else { 2 };
    if n < min {
        return Err(Error::InvalidInput(format!(
            "the support reduction for type {family} needs n >= {min}"
        )));
    }
    if family.is_signed() && !p.is_odd() {
        let mut counts = zeros(p);
        counts[1] = BigUint::from(1u32) << n;
        return Ok(DimensionPVector::new(family, n, p, counts, Provenance::Parity));
    }
    let (support, values) = r_t_all(family, n, p)?;
    let hist = histogram(p, values.into_iter().map(u64::from));
    let free = support.index_count() - support.len() as u64;
    let unsigned = !p.is_odd() || BasePDigits::new(n, p).is_carry_saturated();
    debug_assert!(unsigned || free > 0);
    Ok(DimensionPVector::new(
        family,
        n,
        p,
        expand_counts(p, &hist, free, unsigned),
        Provenance::Theorem,
    ))
}
