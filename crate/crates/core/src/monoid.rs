//! The partition product and hook factorization.
//!
//! `a * b` places `b` inside `a` along the diagonal and widens every central
//! hook of `a` by the first row and first column of `b`. On Frobenius symbols
//! this is a shift followed by concatenation:
//!
//! ```text
//! arms(a * b) = (arms(a) + b_1) ++ arms(b)
//! legs(a * b) = (legs(a) + len(b)) ++ legs(b)
//! ```
//!
//! The product is associative with the empty partition as identity, and every
//! partition is uniquely a product of 1-hooks whose sizes are its difference
//! sequence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{FrobeniusSymbol, Partition};

/// A 1-hook `(arm + 1, 1^leg)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hook {
    pub arm: u32,
    pub leg: u32,
}

impl Hook {
    pub fn new(arm: u32, leg: u32) -> Self {
        Hook { arm, leg }
    }

    pub fn size(&self) -> u32 {
        self.arm + self.leg + 1
    }

    /// All `k` hooks of size `k`, ordered by leg length.
    pub fn all_of_size(k: u32) -> impl Iterator<Item = Hook> {
        (0..k).map(move |leg| Hook::new(k - 1 - leg, leg))
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![self.arm + 1];
        parts.extend(std::iter::repeat_n(1, self.leg as usize));
        Partition::from_parts_unchecked(parts)
    }

    /// `Some` if `p` is a single hook.
    pub fn from_partition(p: &Partition) -> Option<Hook> {
        let f = p.frobenius();
        (f.rank() == 1).then(|| Hook::new(f.arms()[0], f.legs()[0]))
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_partition())
    }
}

pub fn product(a: &Partition, b: &Partition) -> Partition {
    let fa = a.frobenius();
    let fb = b.frobenius();
    let row_shift = b.first_part();
    let col_shift = b.len() as u32;
    let arms = fa
        .arms()
        .iter()
        .map(|x| x + row_shift)
        .chain(fb.arms().iter().copied())
        .collect();
    let legs = fa
        .legs()
        .iter()
        .map(|x| x + col_shift)
        .chain(fb.legs().iter().copied())
        .collect();
    Partition::from_frobenius(&FrobeniusSymbol::new_unchecked(arms, legs))
}

/// Split off the inner hook: `p = q * h`.
pub fn peel_inner(p: &Partition) -> Result<(Partition, Hook)> {
    let f = p.frobenius();
    let r = f.rank();
    if r == 0 {
        return Err(Error::EmptyPartition("inner hook"));
    }
    let inner = Hook::new(f.arms()[r - 1], f.legs()[r - 1]);
    let arms = f.arms()[..r - 1]
        .iter()
        .map(|a| a - inner.arm - 1)
        .collect();
    let legs = f.legs()[..r - 1]
        .iter()
        .map(|l| l - inner.leg - 1)
        .collect();
    let rest = Partition::from_frobenius(&FrobeniusSymbol::new_unchecked(arms, legs));
    Ok((rest, inner))
}

/// The unique hooks `h_1, ..., h_r` with `p = h_1 * (h_2 * ... * h_r)`.
pub fn factor(p: &Partition) -> Vec<Hook> {
    let f = p.frobenius();
    let r = f.rank();
    (0..r)
        .map(|i| {
            if i + 1 == r {
                Hook::new(f.arms()[i], f.legs()[i])
            } else {
                Hook::new(
                    f.arms()[i] - f.arms()[i + 1] - 1,
                    f.legs()[i] - f.legs()[i + 1] - 1,
                )
            }
        })
        .collect()
}

/// Multiply hooks left to right; the inverse of [`factor`].
pub fn multiply_hooks(hooks: &[Hook]) -> Partition {
    hooks.iter().rev().fold(Partition::empty(), |acc, h| {
        product(&h.to_partition(), &acc)
    })
}

/// `p = q * Du_s` with `s` maximal, so `q` has no square right factor.
pub fn durfee_split(p: &Partition) -> (Partition, u32) {
    let hooks = factor(p);
    let s = hooks.iter().rev().take_while(|h| h.size() == 1).count();
    let left = multiply_hooks(&hooks[..hooks.len() - s]);
    (left, s as u32)
}
