//! Determinant route to type A ribbon numbers, kept as an independent check
//! on the inclusion-exclusion sum.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::RibbonValue;
use crate::compositions::{Composition, RibbonIndex};

/// `r_α = n! · det(1 / (σ_j − σ_{i−1})!)` with `1/k! = 0` for `k < 0`.
///
/// The matrix is scaled by `n!` so that every entry is the integer
/// `n! / k!`, its determinant is taken by fraction-free (Bareiss)
/// elimination, and the scaling is divided back out.
pub fn ribbon_a_det(alpha: &Composition) -> RibbonValue {
    let sigma = alpha.prefix_sums();
    let len = sigma.len() - 1;
    let n = alpha.n() as u64;
    let fact: Vec<BigInt> = std::iter::once(BigInt::one())
        .chain((1..=n).scan(BigInt::one(), |acc, i| {
            *acc *= i;
            Some(acc.clone())
        }))
        .collect();
    let n_fact = fact[n as usize].clone();

    let mut m: Vec<Vec<BigInt>> = (1..=len)
        .map(|i| {
            (1..=len)
                .map(|j| {
                    if sigma[j] >= sigma[i - 1] {
                        &n_fact / &fact[(sigma[j] - sigma[i - 1]) as usize]
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();

    let det = bareiss(&mut m);
    let scale = num_traits::pow(n_fact, len - 1);
    let (q, r) = (&det / &scale, &det % &scale);
    debug_assert!(r.is_zero());
    q.abs().to_biguint().unwrap_or_else(BigUint::zero)
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let size = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[size - 1][size - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::enumerate_compositions;
    use crate::ribbon::ribbon_a;

    #[test]
    fn examples() {
        let c = |p: &[u64]| Composition::from_parts(p).unwrap();
        assert_eq!(ribbon_a_det(&c(&[1, 2, 1])), BigUint::from(5u32));
        assert_eq!(ribbon_a_det(&c(&[2])), BigUint::from(1u32));
        assert_eq!(ribbon_a_det(&c(&[1, 1, 1, 1])), BigUint::from(1u32));
    }

    #[test]
    fn agrees_with_inclusion_exclusion() {
        for n in 1..=12 {
            for a in enumerate_compositions(n).unwrap() {
                assert_eq!(ribbon_a_det(&a), ribbon_a(&a), "{a}");
            }
        }
    }
}
