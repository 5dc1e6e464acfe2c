//! Exact and modular ribbon numbers for finite Coxeter groups.
//!
//! A ribbon number is the size of a descent class: the number of group
//! elements sharing a given descent set. This crate computes them exactly
//! for the symmetric group (type A), the hyperoctahedral group (type B), the
//! even signed permutation group (type D) and every other finite irreducible
//! Coxeter system, and counts how ribbon numbers distribute over residues
//! modulo a prime ("dimension p-vectors").
//!
//! Three independent routes produce each p-vector:
//!
//! * [`cvec::cvec_naive`] evaluates every ribbon number exactly and reduces it;
//! * [`cvec::cvec_theorem`] only inspects the digit-bounded support set and
//!   never enumerates compositions, so `n` may be arbitrarily large;
//! * [`cvec::cvec_closed_form`] dispatches on special shapes of `n`
//!   (multiples of a prime power, sums of distinct prime powers, ...).
//!
//! ```
//! use ribbonmod::{compositions::Composition, ribbon, Family, Prime};
//! use ribbonmod::cvec::{self, Method};
//!
//! let alpha = Composition::from_parts(&[2, 2]).unwrap();
//! assert_eq!(ribbon::ribbon_a(&alpha).to_string(), "5");
//!
//! let p = Prime::new(3).unwrap();
//! let v = cvec::cvec(Family::A, 5, p, Method::Auto).unwrap();
//! assert_eq!(v.counts_u64(), vec![6, 8, 2]);
//! ```

pub mod arith;
pub mod cli;
pub mod compositions;
pub mod coxeter;
pub mod cvec;
mod error;
mod family;
pub mod golden;
pub mod ribbon;
pub mod verify;

pub use arith::{BasePDigits, Prime};
pub use error::{Error, Result};
pub use family::Family;
