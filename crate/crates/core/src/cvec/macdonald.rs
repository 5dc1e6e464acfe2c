//! Counting irreducible characters of the symmetric group of degree prime
//! to `p`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::BasePDigits;
use crate::{Error, Prime, Result};

/// Largest base-`p` digit for which the series coefficients are expanded.
pub const MAX_DIGIT: u64 = 4096;

/// Coefficients `[x^0 .. x^top]` of `P(x)^e`, `P` the partition generating
/// function, via `m a_m = e Σ_{k=1}^{m} σ(k) a_(m-k)`.
fn partition_power(e: &BigUint, top: u64) -> Vec<BigUint> {
    let top = top as usize;
    let sigma: Vec<BigUint> = (0..=top as u64)
        .map(|k| BigUint::from((1..=k).filter(|d| k % d == 0).sum::<u64>()))
        .collect();
    let mut a = vec![BigUint::one()];
    for m in 1..=top {
        let s: BigUint = (1..=m).map(|k| &sigma[k] * &a[m - k]).sum();
        a.push(e * s / BigUint::from(m));
    }
    a
}

/// `Π_j [x^(n_j)] P(x)^(p^j)` over the base-`p` digits `n_j` of `n`.
pub fn macdonald_mp(n: u64, p: Prime) -> Result<BigUint> {
    let nd = BasePDigits::new(n, p);
    let top = nd.digits().iter().copied().max().unwrap_or(0);
    if top > MAX_DIGIT {
        return Err(Error::Capacity {
            what: "base-p digit",
            limit: MAX_DIGIT,
            got: top,
        });
    }
    let mut acc = BigUint::one();
    let mut power = BigUint::one();
    for &nj in nd.digits() {
        acc *= partition_power(&power, nj).swap_remove(nj as usize);
        power *= p.get();
    }
    Ok(acc)
}

/// Partitions of `n` as weakly decreasing part lists, in reverse
/// lexicographic order.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `f_λ = n! / Π hooks`, the number of standard Young tableaux.
pub fn f_lambda_hook(lambda: &[u64]) -> Result<BigUint> {
    if lambda.iter().any(|&x| x == 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!(
            "{lambda:?} is not a partition"
        )));
    }
    let n: u64 = lambda.iter().sum();
    let conj = |c: u64| lambda.iter().filter(|&&r| r > c).count() as u64;
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.iter().enumerate() {
        for c in 0..row {
            hooks *= row - c + conj(c) - i as u64 - 1;
        }
    }
    let fact = (1..=n).fold(BigUint::one(), |acc, k| acc * k);
    debug_assert!((&fact % &hooks).is_zero());
    Ok(fact / hooks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(macdonald_mp(4, p(2)).unwrap(), BigUint::from(4u32));
        assert_eq!(macdonald_mp(3, p(2)).unwrap(), BigUint::from(2u32));
        assert_eq!(macdonald_mp(1, p(5)).unwrap(), BigUint::one());
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(f_lambda_hook(&[3, 2]).unwrap(), BigUint::from(5u32));
        assert!(f_lambda_hook(&[1, 2]).is_err());
    }

    #[test]
    fn series_is_partition_counts() {
        let a = partition_power(&BigUint::one(), 12);
        let counts: Vec<u64> = (0..=12).map(|n| partitions(n).len() as u64).collect();
        let got: Vec<u64> = a.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(got, counts);
    }

    #[test]
    fn hook_lengths_square_to_factorial() {
        for n in 1..=10u64 {
            let total: BigUint = partitions(n)
                .iter()
                .map(|l| f_lambda_hook(l).unwrap().pow(2))
                .sum();
            assert_eq!(total, (1..=n).fold(BigUint::one(), |a, k| a * k));
        }
    }

    #[test]
    fn matches_degree_count() {
        for q in [2u64, 3, 5, 7] {
            for n in 1..=10u64 {
                let zero = BigUint::zero();
                let count = partitions(n)
                    .iter()
                    .filter(|l| f_lambda_hook(l).unwrap() % q != zero)
                    .count();
                assert_eq!(macdonald_mp(n, p(q)).unwrap(), BigUint::from(count), "n={n} p={q}");
            }
        }
    }
}
