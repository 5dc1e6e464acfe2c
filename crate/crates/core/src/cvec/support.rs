//! The support set `P` and the reduced sums `r(T)` for `T ⊆ P`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{
    inv_mod, mul_mod, multinomial_mod_p_with, pow2_mod_p, BasePDigits, DigitMultinomial,
};
use crate::{Error, Family, Prime, Result};

/// Largest support set whose subsets [`r_t_all`] will sweep.
pub const MAX_SUPPORT: usize = 26;

/// Positions where a descent can survive reduction mod `p`: the
/// digit-bounded integers `b_0 + b_1 p + ... + b_k p^k` (`0 ≤ b_j ≤ n_j`),
/// minus `{0, n}` for A, minus `{n}` for B, and with `1` adjoined then `n`
/// removed for D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    pub family: Family,
    pub n: u64,
    pub p: Prime,
    pub elements: Vec<u64>,
}

impl SupportSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Size of the whole index set: `n - 1` for A, `n` for B and D.
    pub fn index_count(&self) -> u64 {
        if self.family.is_signed() {
            self.n
        } else {
            self.n - 1
        }
    }

    /// Whether `P` is the whole index set.
    pub fn is_full(&self) -> bool {
        self.len() as u64 == self.index_count()
    }

    /// Elements selected by a bitmask over positions in `elements`.
    pub fn select(&self, mask: u64) -> Vec<u64> {
        crate::compositions::bits(mask)
            .map(|i| self.elements[i as usize])
            .collect()
    }
}

fn min_n(family: Family) -> u64 {
    match family {
        Family::A | Family::B => 2,
        Family::D => 4,
    }
}

pub fn support_set(family: Family, n: u64, p: Prime) -> Result<SupportSet> {
    if n < min_n(family) {
        return Err(Error::InvalidInput(format!(
            "type {family} support set needs n >= {}",
            min_n(family)
        )));
    }
    let nd = BasePDigits::new(n, p);
    let mut elements: Vec<u64> = nd
        .bounded_values()
        .into_iter()
        .filter(|&v| v != n && (family.is_signed() || v != 0))
        .collect();
    if family == Family::D && !elements.contains(&1) {
        elements.push(1);
        elements.sort_unstable();
    }
    Ok(SupportSet {
        family,
        n,
        p,
        elements,
    })
}

/// Evaluates one summand of `r(T)` for a descent set given by sorted
/// positions.
struct TermEval {
    family: Family,
    nd: BasePDigits,
    tables: DigitMultinomial,
    half: u64,
}

impl TermEval {
    fn new(family: Family, n: u64, p: Prime) -> Self {
        let nd = BasePDigits::new(n, p);
        let top = nd.digits().iter().copied().max().unwrap_or(0);
        TermEval {
            family,
            tables: DigitMultinomial::new(p, top),
            half: if p.is_odd() { inv_mod(2, p) } else { 0 },
            nd,
        }
    }

    /// `Π_j 2^(n_j - b_j)` over the digits `b_j` of `first`.
    fn pow2_digits(&self, first: u64) -> u64 {
        let p = self.nd.prime();
        let mut acc = 1u64;
        let mut rest = first;
        for (j, &nj) in self.nd.digits().iter().enumerate() {
            let bj = rest % p.get();
            rest /= p.get();
            debug_assert!(bj <= nj, "digit {j} of {first} exceeds n's");
            acc = mul_mod(acc, pow2_mod_p(nj - bj, p), p.get());
        }
        acc
    }

    fn eval(&self, parts: &mut Vec<u64>) -> u64 {
        let q = self.nd.prime().get();
        match self.family {
            Family::A => multinomial_mod_p_with(&self.nd, parts, &self.tables),
            Family::B => {
                let c = multinomial_mod_p_with(&self.nd, parts, &self.tables);
                if c == 0 {
                    return 0;
                }
                mul_mod(c, self.pow2_digits(parts[0]), q)
            }
            Family::D => {
                if parts[0] == 1 {
                    // β' = (0, 1 + β_2, β_3, ...)
                    parts[0] = 0;
                    parts[1] += 1;
                }
                let c = multinomial_mod_p_with(&self.nd, parts, &self.tables);
                if c == 0 {
                    return 0;
                }
                if parts[0] == 0 {
                    mul_mod(mul_mod(self.half, self.pow2_digits(0), q), c, q)
                } else {
                    mul_mod(self.pow2_digits(parts[0]), c, q)
                }
            }
        }
    }
}

fn fill_parts(parts: &mut Vec<u64>, n: u64, positions: impl Iterator<Item = u64>) {
    parts.clear();
    let mut prev = 0;
    for d in positions {
        parts.push(d - prev);
        prev = d;
    }
    parts.push(n - prev);
}

fn check_family_prime(family: Family, p: Prime) -> Result<()> {
    if family.is_signed() && !p.is_odd() {
        return Err(Error::InvalidInput(format!(
            "the type {family} support reduction needs an odd prime"
        )));
    }
    Ok(())
}

/// `r(T)` straight from its definition: the signed sum over descent sets
/// `D(β) ⊆ T` of the digit-wise weights.
pub fn r_t(family: Family, t: &[u64], n: u64, p: Prime) -> Result<u64> {
    check_family_prime(family, p)?;
    let support = support_set(family, n, p)?;
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    if let Some(&bad) = t.iter().find(|x| support.elements.binary_search(x).is_err()) {
        return Err(Error::InvalidInput(format!(
            "{bad} is not in the support set {:?}",
            support.elements
        )));
    }
    if t.len() > MAX_SUPPORT {
        return Err(Error::Capacity {
            what: "subset size",
            limit: MAX_SUPPORT as u64,
            got: t.len() as u64,
        });
    }
    let eval = TermEval::new(family, n, p);
    let q = p.get();
    let mut parts = Vec::new();
    let mut acc = 0u64;
    for sub in 0..1u64 << t.len() {
        fill_parts(
            &mut parts,
            n,
            crate::compositions::bits(sub).map(|i| t[i as usize]),
        );
        let term = eval.eval(&mut parts);
        if (t.len() as u32 - sub.count_ones()) % 2 == 0 {
            acc = (acc + term) % q;
        } else {
            acc = (acc + q - term) % q;
        }
    }
    Ok(acc)
}

/// `r(T)` for every `T ⊆ P`, indexed by bitmask over `P`'s elements.
///
/// The weights of all descent sets are computed once and then inverted over
/// the Boolean lattice in `O(|P| 2^|P|)`.
pub fn r_t_all(family: Family, n: u64, p: Prime) -> Result<(SupportSet, Vec<u32>)> {
    check_family_prime(family, p)?;
    let support = support_set(family, n, p)?;
    if support.len() > MAX_SUPPORT {
        return Err(Error::Capacity {
            what: "support set size",
            limit: MAX_SUPPORT as u64,
            got: support.len() as u64,
        });
    }
    let eval = TermEval::new(family, n, p);
    let q = p.get();
    let size = support.len();
    let mut values: Vec<u32> = (0..1u64 << size)
        .into_par_iter()
        .map_init(Vec::new, |parts, sub| {
            fill_parts(parts, n, crate::compositions::bits(sub).map(|i| support.elements[i as usize]));
            eval.eval(parts) as u32
        })
        .collect();
    for b in 0..size {
        let half = 1usize << b;
        values.par_chunks_mut(half * 2).for_each(|chunk| {
            let (lo, hi) = chunk.split_at_mut(half);
            for (h, &l) in hi.iter_mut().zip(lo.iter()) {
                *h = ((*h as u64 + q - l as u64) % q) as u32;
            }
        });
    }
    debug_assert!(values.first().map_or(true, |v| !v.is_zero()));
    Ok((support, values))
}
