//! The quotient monoid of partitions modulo hook type.
//!
//! A class can be named three ways: by its hook type, by its difference
//! sequence, or by a partition of `n - r^2` padded to `r` entries. This module
//! converts between the three, multiplies classes in each coordinate system,
//! and provides the two triangular-matrix representations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::counting::{all_hooktypes, p_hooktype};
use crate::error::{Error, Result};
use crate::matrix::{Shape, TriangularMatrix3};
use crate::partition::{parse_list, BoundedPartition, DifferenceSequence, HookType, Partition};
use crate::{Matrix3, Natural};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexSet {
    HookType,
    Delta,
    Pi,
}

impl IndexSet {
    pub const ALL: [IndexSet; 3] = [IndexSet::HookType, IndexSet::Delta, IndexSet::Pi];

    pub fn name(self) -> &'static str {
        match self {
            IndexSet::HookType => "hooktype",
            IndexSet::Delta => "delta",
            IndexSet::Pi => "pi",
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hooktype" | "h" => Ok(IndexSet::HookType),
            "delta" | "d" => Ok(IndexSet::Delta),
            "pi" | "p" => Ok(IndexSet::Pi),
            other => Err(Error::Parse {
                text: other.to_string(),
                reason: "expected one of hooktype, delta, pi".to_string(),
            }),
        }
    }
}

/// A class of `P(n)/~` named in one of the three index sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassIndex {
    HookType(HookType),
    Delta(DifferenceSequence),
    Pi(BoundedPartition),
}

impl ClassIndex {
    /// Parse `values` as a member of `set` and check it belongs to weight `n`.
    pub fn parse(set: IndexSet, values: &[u32], n: u64) -> Result<Self> {
        let not_member = || Error::NotInIndexSet {
            value: values.to_vec(),
            set: set.name(),
            n,
        };
        let idx = match set {
            IndexSet::HookType => {
                ClassIndex::HookType(HookType::new(values.to_vec()).map_err(|_| not_member())?)
            }
            IndexSet::Delta => ClassIndex::Delta(
                DifferenceSequence::new(values.to_vec()).map_err(|_| not_member())?,
            ),
            IndexSet::Pi => {
                ClassIndex::Pi(BoundedPartition::new(values.to_vec()).map_err(|_| not_member())?)
            }
        };
        if values.is_empty() || idx.weight() != n {
            return Err(not_member());
        }
        Ok(idx)
    }

    pub fn parse_text(set: IndexSet, text: &str, n: u64) -> Result<Self> {
        Self::parse(set, &parse_list(text)?, n)
    }

    pub fn set(&self) -> IndexSet {
        match self {
            ClassIndex::HookType(_) => IndexSet::HookType,
            ClassIndex::Delta(_) => IndexSet::Delta,
            ClassIndex::Pi(_) => IndexSet::Pi,
        }
    }

    pub fn values(&self) -> &[u32] {
        match self {
            ClassIndex::HookType(h) => h.ks(),
            ClassIndex::Delta(d) => d.ds(),
            ClassIndex::Pi(b) => b.mus(),
        }
    }

    pub fn weight(&self) -> u64 {
        match self {
            ClassIndex::HookType(h) => h.weight(),
            ClassIndex::Delta(d) => d.weight(),
            ClassIndex::Pi(b) => b.class_weight(),
        }
    }

    pub fn to_hook_type(&self) -> HookType {
        match self {
            ClassIndex::HookType(h) => h.clone(),
            ClassIndex::Delta(d) => d.to_hook_type().expect("class indices are non-empty"),
            ClassIndex::Pi(b) => pi_to_hooktype(b),
        }
    }

    pub fn to_delta(&self) -> DifferenceSequence {
        match self {
            ClassIndex::HookType(h) => h.to_difference_sequence(),
            ClassIndex::Delta(d) => d.clone(),
            ClassIndex::Pi(b) => pi_to_delta(b),
        }
    }

    pub fn to_pi(&self) -> BoundedPartition {
        match self {
            ClassIndex::HookType(h) => hooktype_to_pi(h),
            ClassIndex::Delta(d) => delta_to_pi(d),
            ClassIndex::Pi(b) => b.clone(),
        }
    }

    pub fn convert(&self, to: IndexSet) -> ClassIndex {
        match to {
            IndexSet::HookType => ClassIndex::HookType(self.to_hook_type()),
            IndexSet::Delta => ClassIndex::Delta(self.to_delta()),
            IndexSet::Pi => ClassIndex::Pi(self.to_pi()),
        }
    }
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassIndex::HookType(h) => h.fmt(f),
            ClassIndex::Delta(d) => d.fmt(f),
            ClassIndex::Pi(b) => b.fmt(f),
        }
    }
}

/// Convert `value`, a member of `from` for weight `n`, into `to`.
pub fn index_convert(value: &[u32], from: IndexSet, to: IndexSet, n: u64) -> Result<Vec<u32>> {
    let idx = ClassIndex::parse(from, value, n)?;
    Ok(idx.convert(to).values().to_vec())
}

/// `mu_i = k_i - (2(r-i) + 1)`.
pub fn hooktype_to_pi(h: &HookType) -> BoundedPartition {
    let r = h.len();
    let mus = h
        .ks()
        .iter()
        .enumerate()
        .map(|(i, &k)| k - (2 * (r - 1 - i) as u32 + 1))
        .collect();
    BoundedPartition::new_unchecked(mus)
}

/// `k_i = mu_i + 2(r-i) + 1`.
pub fn pi_to_hooktype(b: &BoundedPartition) -> HookType {
    let r = b.len();
    let ks = b
        .mus()
        .iter()
        .enumerate()
        .map(|(i, &m)| m + 2 * (r - 1 - i) as u32 + 1)
        .collect();
    HookType::new_unchecked(ks)
}

/// `mu_i = sum_{j >= i} (d_j - 1)`.
pub fn delta_to_pi(d: &DifferenceSequence) -> BoundedPartition {
    let mut mus = vec![0u32; d.len()];
    let mut tail = 0u32;
    for (i, &x) in d.ds().iter().enumerate().rev() {
        tail += x - 1;
        mus[i] = tail;
    }
    BoundedPartition::new_unchecked(mus)
}

/// `d_i = mu_i - mu_(i+1) + 1`, `d_r = mu_r + 1`.
pub fn pi_to_delta(b: &BoundedPartition) -> DifferenceSequence {
    let mus = b.mus();
    let ds = mus
        .iter()
        .enumerate()
        .map(|(i, &m)| m - mus.get(i + 1).copied().unwrap_or(0) + 1)
        .collect();
    DifferenceSequence::new_unchecked(ds)
}

/// Class product on difference sequences: concatenation.
pub fn delta_product(a: &DifferenceSequence, b: &DifferenceSequence) -> DifferenceSequence {
    a.concat(b)
}

/// Class product on hook types: `(k_1 + k'_1 + 1, ..., k_r + k'_1 + 1, k'_1, ..., k'_s)`.
pub fn hooktype_product(a: &HookType, b: &HookType) -> HookType {
    let shift = b.ks()[0] + 1;
    let ks = a
        .ks()
        .iter()
        .map(|k| k + shift)
        .chain(b.ks().iter().copied())
        .collect();
    HookType::new_unchecked(ks)
}

/// Class product on padded partitions: `(mu_1 + l_1, ..., mu_r + l_1, l_1, ..., l_s)`.
pub fn pi_product(a: &BoundedPartition, b: &BoundedPartition) -> BoundedPartition {
    let shift = b.mus()[0];
    let mus = a
        .mus()
        .iter()
        .map(|m| m + shift)
        .chain(b.mus().iter().copied())
        .collect();
    BoundedPartition::new_unchecked(mus)
}

/// Size of the class: `prod d_i`.
pub fn class_cardinality(d: &DifferenceSequence) -> Natural {
    d.product()
}

/// Lower unit-triangular image: `(2,1) = o + 1`, `(3,1) = |p|`, `(3,2) = du(p)`.
pub fn phi3(p: &Partition) -> Matrix3 {
    if p.is_empty() {
        return TriangularMatrix3::identity(Shape::Lower);
    }
    TriangularMatrix3::lower(
        BigUint::from(p.outer_hook_shift()),
        BigUint::from(p.weight()),
        BigUint::from(p.durfee()),
    )
}

/// Upper unit-triangular image: `(1,2) = r`, `(1,3) = sum i d_i`, `(2,3) = sum d_i`.
pub fn phi4(d: &DifferenceSequence) -> Matrix3 {
    let moment: u64 = d
        .ds()
        .iter()
        .enumerate()
        .map(|(i, &x)| (i as u64 + 1) * u64::from(x))
        .sum();
    let total: u64 = d.ds().iter().map(|&x| u64::from(x)).sum();
    TriangularMatrix3::upper(
        BigUint::from(d.len()),
        BigUint::from(moment),
        BigUint::from(total),
    )
}

/// Weight of a difference sequence recovered from its `phi4` image.
pub fn weight_from_phi4(m: &Matrix3) -> BigUint {
    let r = m.get(1, 2);
    let pairs = if r.bits() == 0 {
        BigUint::default()
    } else {
        r * (r - 1u32) / 2u32
    };
    m.get(1, 3) + pairs
}

/// Number of classes of `P(n)/~`.
pub fn class_count(n: u64) -> usize {
    (1..=n.sqrt() as usize)
        .map(|r| crate::counting::hooktypes(n, r).len())
        .sum()
}

/// One row of the class table for weight `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub hook_type: HookType,
    pub delta: DifferenceSequence,
    pub pi: BoundedPartition,
    pub card: Natural,
}

impl ClassRow {
    pub fn rank(&self) -> usize {
        self.hook_type.len()
    }
}

/// All classes of weight `n`, ordered by number of hooks, then by
/// decreasing hook type.
pub fn class_table(n: u64) -> Vec<ClassRow> {
    all_hooktypes(n)
        .into_iter()
        .map(|h| ClassRow {
            delta: h.to_difference_sequence(),
            pi: hooktype_to_pi(&h),
            card: p_hooktype(&h),
            hook_type: h,
        })
        .collect()
}
