//! Ribbon numbers (descent-class sizes) for types A, B and D.
//!
//! Every formula here is the inclusion-exclusion of the "descent set
//! contained in `D(β)`" counts over the coarsenings `β ≼ α`:
//!
//! | family | `|{w : D(w) ⊆ D(β)}|` |
//! |--------|------------------------|
//! | A      | `C(n; β)` |
//! | B      | `2^(n-β_1) C(n; β)` |
//! | D      | `ν(β)`, split on `β_1 = 0`, `β_1 = 1`, `β_1 > 1` |

mod det;
pub mod oracle;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{
    self, mul_mod, multinomial_exact, multinomial_mod_p_with, pow2_mod_p, BasePDigits,
    DigitMultinomial,
};
use crate::compositions::{
    parts_from_mask, submasks, Composition, DescentKind, DescentSet, PseudoComposition,
    RibbonIndex,
};
use crate::{Error, Family, Prime, Result};

pub use det::ribbon_a_det;
pub use oracle::{oracle_descent_class_sizes, SignedPermutation};

/// Exact size of a descent class.
pub type RibbonValue = BigUint;

/// Largest `n` for which [`ribbon_table`] materialises every class size.
pub const TABLE_MAX_N: u32 = 22;

/// Type A ribbon number `r_α`.
pub fn ribbon_a(alpha: &Composition) -> RibbonValue {
    let n = alpha.n() as u64;
    alternating_sum(alpha, |beta| multinomial_exact(n, &beta.parts()))
}

/// Type B ribbon number `r^B_α`.
pub fn ribbon_b(alpha: &PseudoComposition) -> RibbonValue {
    let n = alpha.n() as u64;
    alternating_sum(alpha, |beta| {
        let parts = beta.parts();
        multinomial_exact(n, &parts) << (n - parts[0])
    })
}

/// Type D ribbon number `r^D_α`. Requires `n ≥ 2`; for `n < 4` the even
/// signed permutation group is not of type D, but the count is still the
/// descent-class size under the same descent convention.
pub fn ribbon_d(alpha: &PseudoComposition) -> Result<RibbonValue> {
    check_d(alpha.n())?;
    Ok(alternating_sum(alpha, nu_exact))
}

fn check_d(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "type D descent sets need n >= 2".to_string(),
        ));
    }
    Ok(())
}

/// Whether `n` is outside the range where the even signed permutations form
/// a Coxeter group of type D.
pub fn is_degenerate_d(n: u32) -> bool {
    n < 4
}

/// `|{w ∈ D_n : D(w) ⊆ D(β)}|`.
fn nu_exact(beta: &PseudoComposition) -> BigUint {
    let n = beta.n() as u64;
    let parts = beta.parts();
    match parts[0] {
        0 => multinomial_exact(n, &parts) << (n - 1),
        1 => multinomial_exact(n, &merged_head(&parts)) << (n - 1),
        b1 => multinomial_exact(n, &parts) << (n - b1),
    }
}

/// `(1 + β_2, β_3, ...)` for `β_1 = 1`.
fn merged_head(parts: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(parts.len() - 1);
    out.push(1 + parts[1]);
    out.extend_from_slice(&parts[2..]);
    out
}

fn alternating_sum<I: RibbonIndex>(alpha: &I, weight: impl Fn(&I) -> BigUint) -> BigUint {
    let len = alpha.length();
    let mut acc = BigInt::zero();
    for beta in alpha.coarsenings() {
        let w = BigInt::from_biguint(Sign::Plus, weight(&beta));
        if (len - beta.length()) % 2 == 0 {
            acc += w;
        } else {
            acc -= w;
        }
    }
    acc.to_biguint().expect("descent class sizes are nonnegative")
}

/// Ribbon number of any family given its descent set.
pub fn ribbon(family: Family, set: &DescentSet) -> Result<RibbonValue> {
    check_kind(family, set)?;
    match family {
        Family::A => Ok(ribbon_a(&Composition::from_descent_set(set.n(), set)?)),
        Family::B => Ok(ribbon_b(&PseudoComposition::from_descent_set(set.n(), set)?)),
        Family::D => ribbon_d(&PseudoComposition::from_descent_set(set.n(), set)?),
    }
}

fn check_kind(family: Family, set: &DescentSet) -> Result<()> {
    if DescentKind::from(family) != set.kind() {
        return Err(Error::InvalidInput(format!(
            "descent set kind {:?} does not match family {family}",
            set.kind()
        )));
    }
    Ok(())
}

/// Digit-bounded positions that can carry a surviving descent, as a mask
/// over `{0, ..., n-1}`. Includes `0` for the signed families and `1` for D.
pub(crate) fn surviving_positions(family: Family, nd: &BasePDigits) -> u64 {
    let n = nd.value() as u64;
    let mut mask = 0u64;
    for v in nd.bounded_values() {
        if v < n && (family.is_signed() || v > 0) {
            mask |= 1 << v;
        }
    }
    if family == Family::D && n > 1 {
        mask |= 1 << 1;
    }
    mask
}

/// The ribbon number modulo `p`, evaluated term by term with the digit-wise
/// multinomial. Only coarsenings whose descents lie on digit-bounded
/// positions are visited; all others vanish mod `p`.
pub fn ribbon_mod_p(family: Family, set: &DescentSet, p: Prime) -> Result<u64> {
    check_kind(family, set)?;
    if family == Family::D {
        check_d(set.n())?;
    }
    let n = set.n() as u64;
    let nd = BasePDigits::new(n, p);
    let tables = DigitMultinomial::new(p, p.get() - 1);
    let live = set.mask() & surviving_positions(family, &nd);
    let len = set.len();
    let q = p.get();
    let mut acc = 0u64;
    for sub in submasks(live) {
        let parts = parts_from_mask(set.n(), sub);
        let term = match family {
            Family::A => multinomial_mod_p_with(&nd, &parts, &tables),
            Family::B => mul_mod(
                pow2_mod_p(n - parts[0], p),
                multinomial_mod_p_with(&nd, &parts, &tables),
                q,
            ),
            Family::D => nu_mod_p(&nd, &parts, &tables),
        };
        if (len - sub.count_ones()) % 2 == 0 {
            acc = (acc + term) % q;
        } else {
            acc = (acc + q - term) % q;
        }
    }
    Ok(acc)
}

/// `ν(β) mod p`: for `β_1 ∈ {0, 1}` the multinomial of
/// `β' = (0, β_1 + β_2, β_3, ...)` weighted by `2^(n-1)`, otherwise
/// `2^(n-β_1) C(n; β)`.
pub(crate) fn nu_mod_p(nd: &BasePDigits, parts: &[u64], tables: &DigitMultinomial) -> u64 {
    let p = nd.prime();
    let n = nd.value() as u64;
    match parts[0] {
        0 => mul_mod(
            pow2_mod_p(n - 1, p),
            multinomial_mod_p_with(nd, parts, tables),
            p.get(),
        ),
        1 => mul_mod(
            pow2_mod_p(n - 1, p),
            multinomial_mod_p_with(nd, &merged_head(parts), tables),
            p.get(),
        ),
        b1 => mul_mod(
            pow2_mod_p(n - b1, p),
            multinomial_mod_p_with(nd, parts, tables),
            p.get(),
        ),
    }
}

/// Every ribbon number of the family at size `n`, indexed compactly: entry
/// `m` belongs to descent mask `m << 1` in type A and mask `m` otherwise.
///
/// Computed by a Möbius transform of the "contained in" counts over the
/// Boolean lattice. Every intermediate value is itself a count of group
/// elements, so `u128` cannot overflow for `n ≤ 22`.
pub fn ribbon_table(family: Family, n: u32) -> Result<Vec<u128>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if n > TABLE_MAX_N {
        return Err(Error::Capacity {
            what: "ribbon table size",
            limit: TABLE_MAX_N as u64,
            got: n as u64,
        });
    }
    if family == Family::D {
        check_d(n)?;
    }
    let bits = family.index_count_log2(n);
    let shift = if family.is_signed() { 0 } else { 1 };
    let n64 = n as u64;
    let mut table: Vec<u128> = (0..1u64 << bits)
        .into_par_iter()
        .map(|m| {
            let parts = parts_from_mask(n, m << shift);
            let c = |parts: &[u64]| arith::multinomial_u128(n64, parts).expect("fits in u128");
            match family {
                Family::A => c(&parts),
                Family::B => c(&parts) << (n64 - parts[0]),
                Family::D => match parts[0] {
                    0 => c(&parts) << (n64 - 1),
                    1 => c(&merged_head(&parts)) << (n64 - 1),
                    b1 => c(&parts) << (n64 - b1),
                },
            }
        })
        .collect();
    for b in 0..bits {
        let half = 1usize << b;
        table.par_chunks_mut(half * 2).for_each(|chunk| {
            let (lo, hi) = chunk.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h -= *l;
            }
        });
    }
    Ok(table)
}

/// Sum of all class sizes: the group order.
pub fn group_order(family: Family, n: u32) -> BigUint {
    let fact = (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i);
    match family {
        Family::A => fact,
        Family::B => fact << n,
        Family::D => fact << (n.saturating_sub(1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{enumerate_compositions, enumerate_pseudo_compositions};
    use num_traits::ToPrimitive;

    fn comp(p: &[u64]) -> Composition {
        Composition::from_parts(p).unwrap()
    }
    fn pseudo(p: &[u64]) -> PseudoComposition {
        PseudoComposition::from_parts(p).unwrap()
    }
    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(ribbon_a(&comp(&[2, 2])), big(5));
        assert_eq!(ribbon_a(&comp(&[1, 2, 1])), big(5));
        assert_eq!(ribbon_a(&comp(&[1, 3])), big(3));
        assert_eq!(ribbon_a(&comp(&[1, 1, 2])), big(3));
        assert_eq!(ribbon_a(&comp(&[1, 1, 1, 1])), big(1));
        assert_eq!(ribbon_a(&comp(&[1, 2])), big(2));
        for n in 1..=20 {
            assert_eq!(ribbon_a(&comp(&[n])), big(1));
        }
    }

    #[test]
    fn type_b_examples() {
        let cases: &[(&[u64], u64)] = &[
            (&[1], 1),
            (&[0, 1], 1),
            (&[2], 1),
            (&[0, 1, 1], 1),
            (&[1, 1], 3),
            (&[0, 2], 3),
            (&[3], 1),
            (&[0, 1, 1, 1], 1),
            (&[2, 1], 5),
            (&[0, 1, 2], 5),
            (&[0, 3], 7),
            (&[1, 1, 1], 7),
            (&[1, 2], 11),
            (&[0, 2, 1], 11),
        ];
        for &(parts, want) in cases {
            assert_eq!(ribbon_b(&pseudo(parts)), big(want), "{parts:?}");
        }
    }

    #[test]
    fn type_d_examples() {
        assert_eq!(ribbon_d(&pseudo(&[4])).unwrap(), big(1));
        let total: BigUint = enumerate_pseudo_compositions(4)
            .unwrap()
            .map(|a| ribbon_d(&a).unwrap())
            .sum();
        assert_eq!(total, big(192));
        assert!(ribbon_d(&pseudo(&[1])).is_err());
        assert!(is_degenerate_d(3) && !is_degenerate_d(4));
    }

    #[test]
    fn type_d_against_group_enumeration() {
        let sizes = oracle_descent_class_sizes(Family::D, 4).unwrap();
        let a = pseudo(&[0, 4]);
        assert_eq!(ribbon_d(&a).unwrap(), big(sizes[&a.descent_set()]));
    }

    #[test]
    fn mod_p_examples() {
        let p3 = Prime::new(3).unwrap();
        let p2 = Prime::new(2).unwrap();
        assert_eq!(ribbon_mod_p(Family::A, &comp(&[2, 2]).descent_set(), p3).unwrap(), 2);
        for n in 1..=8 {
            for a in enumerate_pseudo_compositions(n).unwrap() {
                assert_eq!(ribbon_mod_p(Family::B, &a.descent_set(), p2).unwrap(), 1);
                if n >= 4 {
                    assert_eq!(ribbon_mod_p(Family::D, &a.descent_set(), p2).unwrap(), 1);
                }
            }
        }
        assert!(ribbon_mod_p(Family::B, &comp(&[2, 2]).descent_set(), p3).is_err());
    }

    #[test]
    fn modular_consistency() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let p = Prime::new(q).unwrap();
            for n in 1..=12 {
                for a in enumerate_compositions(n).unwrap() {
                    let exact = ribbon_a(&a) % q;
                    assert_eq!(
                        ribbon_mod_p(Family::A, &a.descent_set(), p).unwrap(),
                        exact.to_u64().unwrap()
                    );
                }
                for a in enumerate_pseudo_compositions(n).unwrap() {
                    let exact = ribbon_b(&a) % q;
                    assert_eq!(
                        ribbon_mod_p(Family::B, &a.descent_set(), p).unwrap(),
                        exact.to_u64().unwrap()
                    );
                    if n >= 2 {
                        let exact = ribbon_d(&a).unwrap() % q;
                        assert_eq!(
                            ribbon_mod_p(Family::D, &a.descent_set(), p).unwrap(),
                            exact.to_u64().unwrap(),
                            "D {a} mod {q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_direct_formulas() {
        for n in 1..=10u32 {
            let t = ribbon_table(Family::A, n).unwrap();
            for (m, a) in enumerate_compositions(n).unwrap().enumerate() {
                assert_eq!(BigUint::from(t[m]), ribbon_a(&a));
            }
            let tb = ribbon_table(Family::B, n).unwrap();
            for (m, a) in enumerate_pseudo_compositions(n).unwrap().enumerate() {
                assert_eq!(BigUint::from(tb[m]), ribbon_b(&a));
            }
            if n >= 2 {
                let td = ribbon_table(Family::D, n).unwrap();
                for (m, a) in enumerate_pseudo_compositions(n).unwrap().enumerate() {
                    assert_eq!(BigUint::from(td[m]), ribbon_d(&a).unwrap());
                }
            }
        }
        assert!(matches!(
            ribbon_table(Family::A, 23),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn symmetry_mass_and_oddness() {
        for n in 1..=12u32 {
            for fam in Family::ALL {
                if fam == Family::D && n < 2 {
                    continue;
                }
                let t = ribbon_table(fam, n).unwrap();
                let total: u128 = t.iter().sum();
                assert_eq!(BigUint::from(total), group_order(fam, n), "{fam} {n}");
                let last = t.len() - 1;
                for (m, &v) in t.iter().enumerate() {
                    assert!(v >= 1);
                    assert_eq!(v, t[last ^ m], "{fam} {n} symmetry");
                    if fam.is_signed() {
                        assert_eq!(v % 2, 1, "{fam} {n} odd");
                    }
                }
            }
        }
    }
}
