//! Brute-force descent-class sizes by enumerating group elements.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::compositions::{DescentKind, DescentSet};
use crate::{Error, Family, Result};

/// A signed permutation of `[n]`, stored as its word `w(1) ... w(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(i)` for `1 ≤ i ≤ n`, extended by `w(-i) = -w(i)` and `w(0) = 0`.
    pub fn apply(&self, i: i32) -> i32 {
        match i {
            0 => 0,
            i if i > 0 => self.images[i as usize - 1],
            i => -self.images[(-i) as usize - 1],
        }
    }

    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Even signed permutations form the type D subgroup.
    pub fn is_even(&self) -> bool {
        self.negatives() % 2 == 0
    }

    /// Descents `i ∈ {0..n-1}` with `w(i) > w(i+1)` and `w(0) = 0`.
    pub fn descent_mask_b(&self) -> u64 {
        signed_descents(&self.images, 0)
    }

    /// As [`Self::descent_mask_b`] but with `w(0) = -w(2)`; needs `n ≥ 2`.
    pub fn descent_mask_d(&self) -> u64 {
        signed_descents(&self.images, -self.images[1])
    }
}

fn signed_descents(word: &[i32], w0: i32) -> u64 {
    let mut mask = u64::from(w0 > word[0]);
    for i in 1..word.len() {
        if word[i - 1] > word[i] {
            mask |= 1 << i;
        }
    }
    mask
}

fn type_a_descents(word: &[u8]) -> u64 {
    let mut mask = 0u64;
    for i in 1..word.len() {
        if word[i - 1] > word[i] {
            mask |= 1 << i;
        }
    }
    mask
}

/// Lexicographic successor; false once the last permutation is reached.
fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Enumeration budgets per family.
pub fn oracle_limit(family: Family) -> u32 {
    match family {
        Family::A => 9,
        Family::B | Family::D => 7,
    }
}

/// Tallies every group element by its descent set.
pub fn oracle_descent_class_sizes(family: Family, n: u32) -> Result<BTreeMap<DescentSet, u64>> {
    let limit = oracle_limit(family);
    if n > limit {
        return Err(Error::Capacity {
            what: "group enumeration size",
            limit: limit as u64,
            got: n as u64,
        });
    }
    let min = if family == Family::D { 2 } else { 1 };
    if n < min {
        return Err(Error::InvalidInput(format!(
            "type {family} enumeration needs n >= {min}"
        )));
    }
    let perms = all_permutations(n as usize);
    let slots = 1usize << n;
    let tally: Vec<u64> = match family {
        Family::A => {
            let mut t = vec![0u64; slots];
            for w in &perms {
                t[type_a_descents(w) as usize] += 1;
            }
            t
        }
        Family::B | Family::D => (0..1u32 << n)
            .into_par_iter()
            .filter(|signs| family == Family::B || signs.count_ones() % 2 == 0)
            .fold(
                || vec![0u64; slots],
                |mut t, signs| {
                    let mut word = vec![0i32; n as usize];
                    for w in &perms {
                        for (k, &x) in w.iter().enumerate() {
                            word[k] = if signs >> k & 1 == 1 { -(x as i32) } else { x as i32 };
                        }
                        let mask = if family == Family::B {
                            signed_descents(&word, 0)
                        } else {
                            signed_descents(&word, -word[1])
                        };
                        t[mask as usize] += 1;
                    }
                    t
                },
            )
            .reduce(
                || vec![0u64; slots],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            ),
    };
    let kind = DescentKind::from(family);
    let mut out = BTreeMap::new();
    for (mask, &count) in tally.iter().enumerate() {
        if count > 0 {
            out.insert(DescentSet::from_mask(n, kind, mask as u64)?, count);
        }
    }
    Ok(out)
}
