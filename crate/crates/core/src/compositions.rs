//! Compositions, pseudo-compositions and descent sets.
//!
//! Both index types are stored by their descent set as a bitmask: bit `i` is
//! set when `i` is a partial sum. Parts are derived on demand. For an
//! ordinary composition of `n` only bits `1..n` can be set; a
//! pseudo-composition may additionally set bit `0`, which encodes a leading
//! zero part.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Family, Result};

/// Largest `n` accepted by the mask-backed types.
pub const MAX_MASK_N: u32 = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DescentKind {
    /// Subsets of `[n-1]`.
    TypeA,
    /// Subsets of `{0, ..., n-1}`, shared by types B and D.
    Signed,
}

impl From<Family> for DescentKind {
    fn from(f: Family) -> Self {
        if f.is_signed() {
            DescentKind::Signed
        } else {
            DescentKind::TypeA
        }
    }
}

impl DescentKind {
    fn lowest(self) -> u32 {
        match self {
            DescentKind::TypeA => 1,
            DescentKind::Signed => 0,
        }
    }

    /// Mask of all admissible descent positions for `n`.
    pub fn full_mask(self, n: u32) -> u64 {
        let all_below_n = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        match self {
            DescentKind::TypeA => all_below_n & !1,
            DescentKind::Signed => all_below_n,
        }
    }
}

/// A descent set together with its ambient size and index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: u32,
    mask: u64,
    kind: DescentKind,
}

impl DescentSet {
    pub fn new(n: u32, kind: DescentKind, elements: &[u32]) -> Result<Self> {
        check_n(n)?;
        let mut mask = 0u64;
        for &i in elements {
            if i < kind.lowest() || i >= n {
                return Err(Error::DescentOutOfRange { index: i, n });
            }
            mask |= 1 << i;
        }
        Ok(DescentSet { n, mask, kind })
    }

    pub fn from_mask(n: u32, kind: DescentKind, mask: u64) -> Result<Self> {
        check_n(n)?;
        if mask & !kind.full_mask(n) != 0 {
            let index = (mask & !kind.full_mask(n)).trailing_zeros();
            return Err(Error::DescentOutOfRange { index, n });
        }
        Ok(DescentSet { n, mask, kind })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn kind(&self) -> DescentKind {
        self.kind
    }

    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        i < 64 && self.mask >> i & 1 == 1
    }

    pub fn elements(&self) -> Vec<u32> {
        bits(self.mask).collect()
    }

    /// Complement inside the admissible index range.
    pub fn complement(&self) -> Self {
        DescentSet {
            mask: self.kind.full_mask(self.n) & !self.mask,
            ..*self
        }
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in bits(self.mask).enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidComposition("size must be positive".into()));
    }
    if n > MAX_MASK_N {
        return Err(Error::Capacity {
            what: "composition size",
            limit: MAX_MASK_N as u64,
            got: n as u64,
        });
    }
    Ok(())
}

/// Iterates the set bits of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros();
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Iterates all submasks of `mask` in increasing numeric order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// Parts determined by the descent mask: consecutive gaps between
/// `0 < d_1 < ... < d_m < n` (with a leading zero part when bit 0 is set).
pub fn parts_from_mask(n: u32, mask: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize + 1);
    let mut prev = 0u64;
    for i in bits(mask) {
        out.push(i as u64 - prev);
        prev = i as u64;
    }
    out.push(n as u64 - prev);
    out
}

/// Common behaviour of the two index types.
pub trait RibbonIndex: Copy + Eq + fmt::Debug {
    const KIND: DescentKind;

    fn n(&self) -> u32;
    fn mask(&self) -> u64;

    /// Builds from a mask already known to lie in range.
    fn from_mask_unchecked(n: u32, mask: u64) -> Self;

    fn parts(&self) -> Vec<u64> {
        parts_from_mask(self.n(), self.mask())
    }

    /// Number of parts, `|D(α)| + 1`.
    fn length(&self) -> u32 {
        self.mask().count_ones() + 1
    }

    fn descent_set(&self) -> DescentSet {
        DescentSet {
            n: self.n(),
            mask: self.mask(),
            kind: Self::KIND,
        }
    }

    /// Prefix sums `σ_0 = 0, σ_1, ..., σ_ℓ = n`.
    fn prefix_sums(&self) -> Vec<u64> {
        let mut out = vec![0];
        out.extend(bits(self.mask()).map(u64::from));
        out.push(self.n() as u64);
        out
    }

    /// The index whose descent set is the complement of this one.
    fn complement(&self) -> Self {
        Self::from_mask_unchecked(self.n(), Self::KIND.full_mask(self.n()) & !self.mask())
    }

    /// Every coarsening `β ≼ α`, i.e. `D(β) ⊆ D(α)`.
    fn coarsenings(&self) -> Box<dyn Iterator<Item = Self>> {
        let n = self.n();
        Box::new(submasks(self.mask()).map(move |m| Self::from_mask_unchecked(n, m)))
    }

    /// Binary string `a_1 ... a_n` (type A) or `a_0 ... a_n` (signed), with a
    /// one at every descent and at `n`.
    fn binary_string(&self) -> String {
        (Self::KIND.lowest()..=self.n())
            .map(|i| {
                if i == self.n() || self.mask() >> i & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

/// A composition of `n`: positive parts summing to `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    n: u32,
    mask: u64,
}

/// A pseudo-composition of `n`: first part may be zero, the rest positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoComposition {
    n: u32,
    mask: u64,
}

impl RibbonIndex for Composition {
    const KIND: DescentKind = DescentKind::TypeA;

    fn n(&self) -> u32 {
        self.n
    }
    fn mask(&self) -> u64 {
        self.mask
    }
    fn from_mask_unchecked(n: u32, mask: u64) -> Self {
        Composition { n, mask }
    }
}

impl RibbonIndex for PseudoComposition {
    const KIND: DescentKind = DescentKind::Signed;

    fn n(&self) -> u32 {
        self.n
    }
    fn mask(&self) -> u64 {
        self.mask
    }
    fn from_mask_unchecked(n: u32, mask: u64) -> Self {
        PseudoComposition { n, mask }
    }
}

fn mask_from_parts(parts: &[u64], first_may_be_zero: bool) -> Result<(u32, u64)> {
    if parts.is_empty() {
        return Err(Error::InvalidComposition("no parts".into()));
    }
    for (i, &a) in parts.iter().enumerate() {
        if a == 0 && !(i == 0 && first_may_be_zero) {
            return Err(Error::InvalidComposition(format!(
                "part {} is zero in {parts:?}",
                i + 1
            )));
        }
    }
    let n: u64 = parts.iter().sum();
    if n == 0 {
        return Err(Error::InvalidComposition("size must be positive".into()));
    }
    if n > MAX_MASK_N as u64 {
        return Err(Error::Capacity {
            what: "composition size",
            limit: MAX_MASK_N as u64,
            got: n,
        });
    }
    let mut mask = 0u64;
    let mut acc = 0u64;
    for &a in &parts[..parts.len() - 1] {
        acc += a;
        mask |= 1 << acc;
    }
    Ok((n as u32, mask))
}

impl Composition {
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        let (n, mask) = mask_from_parts(parts, false)?;
        Ok(Composition { n, mask })
    }

    pub fn from_descent_set(n: u32, set: &DescentSet) -> Result<Self> {
        if set.kind != DescentKind::TypeA {
            return Err(Error::InvalidInput("expected a type A descent set".into()));
        }
        let set = DescentSet::from_mask(n, DescentKind::TypeA, set.mask)?;
        Ok(Composition { n, mask: set.mask })
    }

    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        let set = DescentSet::from_mask(n, DescentKind::TypeA, mask)?;
        Ok(Composition { n, mask: set.mask })
    }

    /// The one-part composition `(n)`.
    pub fn trivial(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Composition { n, mask: 0 })
    }
}

impl PseudoComposition {
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        let (n, mask) = mask_from_parts(parts, true)?;
        Ok(PseudoComposition { n, mask })
    }

    pub fn from_descent_set(n: u32, set: &DescentSet) -> Result<Self> {
        if set.kind != DescentKind::Signed {
            return Err(Error::InvalidInput("expected a signed descent set".into()));
        }
        let set = DescentSet::from_mask(n, DescentKind::Signed, set.mask)?;
        Ok(PseudoComposition { n, mask: set.mask })
    }

    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        let set = DescentSet::from_mask(n, DescentKind::Signed, mask)?;
        Ok(PseudoComposition { n, mask: set.mask })
    }

    /// The first part, which may be zero.
    pub fn first_part(&self) -> u64 {
        if self.mask == 0 {
            self.n as u64
        } else {
            self.mask.trailing_zeros() as u64
        }
    }
}

macro_rules! impl_text {
    ($t:ty) => {
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self)
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts = self.parts();
                write!(f, "(")?;
                for (i, a) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }

        impl FromStr for $t {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let parts = parse_parts(s)?;
                <$t>::from_parts(&parts)
            }
        }
    };
}

impl_text!(Composition);
impl_text!(PseudoComposition);

/// Parses the comma-separated part syntax `1,2,1` (parentheses optional).
pub fn parse_parts(s: &str) -> Result<Vec<u64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidComposition(format!("bad part {t:?} in {s:?}")))
        })
        .collect()
}

fn check_enum(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if n > MAX_MASK_N {
        return Err(Error::Capacity {
            what: "enumeration size",
            limit: MAX_MASK_N as u64,
            got: n as u64,
        });
    }
    Ok(())
}

/// All `2^(n-1)` compositions of `n` in ascending mask order.
pub fn enumerate_compositions(n: u32) -> Result<impl Iterator<Item = Composition>> {
    check_enum(n)?;
    Ok((0..1u64 << (n - 1)).map(move |m| Composition { n, mask: m << 1 }))
}

/// All `2^n` pseudo-compositions of `n` in ascending mask order.
pub fn enumerate_pseudo_compositions(n: u32) -> Result<impl Iterator<Item = PseudoComposition>> {
    check_enum(n)?;
    Ok((0..1u64 << n).map(move |mask| PseudoComposition { n, mask }))
}
