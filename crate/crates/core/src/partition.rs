//! Partitions and the coordinates used throughout the crate.
//!
//! A [`Partition`] is stored by its parts. Its central hooks are read off
//! the [`FrobeniusSymbol`] (arm and leg lengths along the main diagonal),
//! which is computed lazily and cached. The hook sizes form a [`HookType`],
//! and the gaps between consecutive hook sizes form a
//! [`DifferenceSequence`], the coordinates in which the partition product
//! becomes plain concatenation.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition is a regular value of weight 0 and Durfee size 0.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<u32>,
    frobenius: OnceLock<FrobeniusSymbol>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<u32>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(repr: PartitionRepr) -> Result<Self> {
        Partition::new(repr.parts)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { parts: p.parts }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let positive = parts.last().is_none_or(|&p| p >= 1);
        if !positive || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p >= 1));
        Partition {
            parts,
            frobenius: OnceLock::new(),
        }
    }

    pub fn empty() -> Self {
        Self::from_parts_unchecked(Vec::new())
    }

    /// The square partition `(s, s, ..., s)` with `s` rows.
    pub fn durfee_square(s: u32) -> Self {
        Self::from_parts_unchecked(vec![s; s as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts (rows of the Ferrers diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Side of the Durfee square, i.e. the number of central hooks.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    pub fn conjugate(&self) -> Partition {
        let columns = self.first_part();
        let mut conj = Vec::with_capacity(columns as usize);
        for c in 0..columns {
            let height = self.parts.iter().take_while(|&&p| p > c).count();
            conj.push(height as u32);
        }
        Self::from_parts_unchecked(conj)
    }

    pub fn frobenius(&self) -> &FrobeniusSymbol {
        self.frobenius.get_or_init(|| {
            let r = self.durfee();
            let conj = self.conjugate();
            let arms = (0..r).map(|i| self.parts[i] - i as u32 - 1).collect();
            let legs = (0..r).map(|i| conj.parts[i] - i as u32 - 1).collect();
            FrobeniusSymbol { arms, legs }
        })
    }

    pub fn from_frobenius(f: &FrobeniusSymbol) -> Partition {
        let r = f.rank();
        if r == 0 {
            return Partition::empty();
        }
        let rows = f.legs[0] as usize + 1;
        let mut parts = Vec::with_capacity(rows);
        for i in 0..r {
            parts.push(f.arms[i] + i as u32 + 1);
        }
        for i in r..rows {
            let width = (0..r).filter(|&j| f.legs[j] as usize + j >= i).count();
            parts.push(width as u32);
        }
        let p = Self::from_parts_unchecked(parts);
        let _ = p.frobenius.set(f.clone());
        p
    }

    /// Sizes of the central hooks, outermost first.
    pub fn hook_type(&self) -> Result<HookType> {
        if self.is_empty() {
            return Err(Error::EmptyPartition("hook type"));
        }
        Ok(HookType {
            ks: self.frobenius().hook_sizes(),
        })
    }

    /// Difference sequence of the hook type; empty for the empty partition.
    pub fn difference_sequence(&self) -> DifferenceSequence {
        match self.hook_type() {
            Ok(h) => h.to_difference_sequence(),
            Err(_) => DifferenceSequence { ds: Vec::new() },
        }
    }

    pub fn outer_hook_size(&self) -> Option<u32> {
        self.frobenius().hook_sizes().first().copied()
    }

    pub fn inner_hook_size(&self) -> Option<u32> {
        self.frobenius().hook_sizes().last().copied()
    }

    /// `o(p) + 1`, taken to be 0 for the empty partition.
    pub fn outer_hook_shift(&self) -> u64 {
        self.outer_hook_size().map_or(0, |o| u64::from(o) + 1)
    }

    pub fn is_durfee_square(&self) -> bool {
        let s = self.len();
        self.parts.iter().all(|&p| p as usize == s)
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

/// Text form: comma separated parts, `0` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() || text == "0" {
            return Ok(Partition::empty());
        }
        Partition::new(parse_list(text)?)
    }
}

/// Parse a comma separated list of non-negative integers. Surrounding
/// parentheses or brackets are tolerated.
pub fn parse_list(text: &str) -> Result<Vec<u32>> {
    let inner = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                text: text.to_string(),
                reason: format!("{:?}: {e}", tok.trim()),
            })
        })
        .collect()
}

pub(crate) fn join(xs: &[u32]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Arm and leg lengths of the central hooks, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusSymbol {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl FrobeniusSymbol {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius {
                side: "arms and legs",
            });
        }
        if arms.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidFrobenius { side: "arms" });
        }
        if legs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidFrobenius { side: "legs" });
        }
        Ok(FrobeniusSymbol { arms, legs })
    }

    pub(crate) fn new_unchecked(arms: Vec<u32>, legs: Vec<u32>) -> Self {
        debug_assert!(Self::new(arms.clone(), legs.clone()).is_ok());
        FrobeniusSymbol { arms, legs }
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn hook_sizes(&self) -> Vec<u32> {
        self.arms
            .iter()
            .zip(&self.legs)
            .map(|(a, l)| a + l + 1)
            .collect()
    }

    pub fn weight(&self) -> u64 {
        self.hook_sizes().iter().map(|&k| u64::from(k)).sum()
    }

    pub fn transpose(&self) -> FrobeniusSymbol {
        FrobeniusSymbol {
            arms: self.legs.clone(),
            legs: self.arms.clone(),
        }
    }
}

/// Central hook sizes `(k_1, ..., k_r)` with `k_i >= k_(i+1) + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct HookType {
    ks: Vec<u32>,
}

impl TryFrom<Vec<u32>> for HookType {
    type Error = Error;

    fn try_from(ks: Vec<u32>) -> Result<Self> {
        HookType::new(ks)
    }
}

impl From<HookType> for Vec<u32> {
    fn from(h: HookType) -> Self {
        h.ks
    }
}

impl HookType {
    pub fn new(ks: Vec<u32>) -> Result<Self> {
        let last_ok = ks.last().is_some_and(|&k| k >= 1);
        if !last_ok || ks.windows(2).any(|w| w[0] < w[1] + 2) {
            return Err(Error::InvalidHookType(ks));
        }
        Ok(HookType { ks })
    }

    pub(crate) fn new_unchecked(ks: Vec<u32>) -> Self {
        debug_assert!(Self::new(ks.clone()).is_ok());
        HookType { ks }
    }

    pub fn ks(&self) -> &[u32] {
        &self.ks
    }

    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.ks.iter().map(|&k| u64::from(k)).sum()
    }

    /// `(k_1 - k_2 - 1, ..., k_(r-1) - k_r - 1, k_r)`.
    pub fn to_difference_sequence(&self) -> DifferenceSequence {
        let mut ds: Vec<u32> = self.ks.windows(2).map(|w| w[0] - w[1] - 1).collect();
        ds.extend(self.ks.last());
        DifferenceSequence { ds }
    }
}

impl fmt::Display for HookType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.ks))
    }
}

impl FromStr for HookType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HookType::new(parse_list(s)?)
    }
}

/// Positive integers `(d_1, ..., d_r)`; the free coordinates of a hook type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DifferenceSequence {
    ds: Vec<u32>,
}

impl TryFrom<Vec<u32>> for DifferenceSequence {
    type Error = Error;

    fn try_from(ds: Vec<u32>) -> Result<Self> {
        DifferenceSequence::new(ds)
    }
}

impl From<DifferenceSequence> for Vec<u32> {
    fn from(d: DifferenceSequence) -> Self {
        d.ds
    }
}

impl DifferenceSequence {
    pub fn new(ds: Vec<u32>) -> Result<Self> {
        if ds.contains(&0) {
            return Err(Error::InvalidDifferenceSequence(ds));
        }
        Ok(DifferenceSequence { ds })
    }

    pub(crate) fn new_unchecked(ds: Vec<u32>) -> Self {
        debug_assert!(!ds.contains(&0));
        DifferenceSequence { ds }
    }

    /// The difference sequence `(1, ..., 1)` of the `r x r` square.
    pub fn ones(r: usize) -> Self {
        DifferenceSequence { ds: vec![1; r] }
    }

    pub fn ds(&self) -> &[u32] {
        &self.ds
    }

    pub fn len(&self) -> usize {
        self.ds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ds.is_empty()
    }

    /// `sum i * d_i + C(r, 2)`.
    pub fn weight(&self) -> u64 {
        let r = self.ds.len() as u64;
        let moment: u64 = self
            .ds
            .iter()
            .enumerate()
            .map(|(i, &d)| (i as u64 + 1) * u64::from(d))
            .sum();
        moment + r * r.saturating_sub(1) / 2
    }

    pub fn product(&self) -> BigUint {
        self.ds
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d))
    }

    /// `k_i = (r - i) + d_i + ... + d_r`.
    pub fn to_hook_type(&self) -> Result<HookType> {
        if self.ds.is_empty() {
            return Err(Error::EmptyPartition("hook type"));
        }
        let r = self.ds.len();
        let mut ks = vec![0u32; r];
        let mut tail = 0u32;
        for i in (0..r).rev() {
            tail += self.ds[i];
            ks[i] = tail + (r - 1 - i) as u32;
        }
        Ok(HookType::new_unchecked(ks))
    }

    pub fn concat(&self, other: &DifferenceSequence) -> DifferenceSequence {
        let mut ds = self.ds.clone();
        ds.extend_from_slice(&other.ds);
        DifferenceSequence { ds }
    }
}

impl fmt::Display for DifferenceSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.ds))
    }
}

impl FromStr for DifferenceSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DifferenceSequence::new(parse_list(s)?)
    }
}

/// A partition of `n - r^2` padded with zeros to exactly `r` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BoundedPartition {
    mus: Vec<u32>,
}

impl TryFrom<Vec<u32>> for BoundedPartition {
    type Error = Error;

    fn try_from(mus: Vec<u32>) -> Result<Self> {
        BoundedPartition::new(mus)
    }
}

impl From<BoundedPartition> for Vec<u32> {
    fn from(b: BoundedPartition) -> Self {
        b.mus
    }
}

impl BoundedPartition {
    pub fn new(mus: Vec<u32>) -> Result<Self> {
        if mus.is_empty() || mus.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(mus));
        }
        Ok(BoundedPartition { mus })
    }

    pub(crate) fn new_unchecked(mus: Vec<u32>) -> Self {
        debug_assert!(Self::new(mus.clone()).is_ok());
        BoundedPartition { mus }
    }

    pub fn mus(&self) -> &[u32] {
        &self.mus
    }

    /// Fixed length `r`, trailing zeros included.
    pub fn len(&self) -> usize {
        self.mus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mus.is_empty()
    }

    /// The weight `n` of the class this indexes: `sum mu_i + r^2`.
    pub fn class_weight(&self) -> u64 {
        let r = self.mus.len() as u64;
        self.mus.iter().map(|&m| u64::from(m)).sum::<u64>() + r * r
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.mus))
    }
}

impl FromStr for BoundedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundedPartition::new(parse_list(s)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Largest row on top.
    #[default]
    English,
    /// Rows stacked from the bottom up, largest at the bottom.
    Cartesian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderOptions {
    pub orientation: Orientation,
    /// Draw each central hook with its own symbol instead of `#`.
    pub mark_hooks: bool,
}

const HOOK_MARKS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// ASCII Ferrers diagram, one line per row, no trailing newline.
pub fn render(p: &Partition, opts: RenderOptions) -> String {
    let mut lines: Vec<String> = p
        .parts()
        .iter()
        .enumerate()
        .map(|(row, &len)| {
            (0..len as usize)
                .map(|col| {
                    if opts.mark_hooks {
                        HOOK_MARKS[row.min(col) % HOOK_MARKS.len()] as char
                    } else {
                        '#'
                    }
                })
                .collect()
        })
        .collect();
    if opts.orientation == Orientation::Cartesian {
        lines.reverse();
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 4, 2, 1]).conjugate(), p(&[4, 3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 3, 3]).conjugate(), p(&[3, 3, 3]));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn text_format() {
        assert_eq!("4,4,2,1".parse::<Partition>().unwrap(), p(&[4, 4, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[4, 4, 2, 1]).to_string(), "4,4,2,1");
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn json_object_form() {
        let json = serde_json::to_string(&p(&[4, 4, 2, 1])).unwrap();
        assert_eq!(json, r#"{"parts":[4,4,2,1]}"#);
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[4, 4, 2, 1]));
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[1,2]}"#).is_err());
    }

    #[test]
    fn durfee_and_weight() {
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(Partition::empty().weight(), 0);
        assert_eq!(p(&[4, 4, 2, 1]).durfee(), 2);
        assert_eq!(p(&[5, 4, 3, 2, 2]).durfee(), 3);
        assert_eq!(p(&[5, 4, 3, 2, 2]).weight(), 16);
    }

    #[test]
    fn frobenius_examples() {
        let f = p(&[4, 4, 2, 1]).frobenius().clone();
        assert_eq!(f.arms(), &[3, 2]);
        assert_eq!(f.legs(), &[3, 1]);
        let f = p(&[1]).frobenius().clone();
        assert_eq!((f.arms(), f.legs()), (&[0][..], &[0][..]));
        let f = FrobeniusSymbol::new(vec![3, 2, 1], vec![3, 2, 1]).unwrap();
        let q = Partition::from_frobenius(&f);
        assert_eq!(q, p(&[4, 4, 4, 3]));
        assert_eq!(q.weight(), 15);
        assert_eq!(f.weight(), 15);
    }

    #[test]
    fn frobenius_rejects_non_strict() {
        assert!(FrobeniusSymbol::new(vec![2, 2], vec![1, 0]).is_err());
        assert!(FrobeniusSymbol::new(vec![2, 1], vec![0, 1]).is_err());
        assert!(FrobeniusSymbol::new(vec![2], vec![1, 0]).is_err());
    }

    #[test]
    fn hook_type_examples() {
        assert_eq!(p(&[4, 4, 2, 1]).hook_type().unwrap().ks(), &[7, 4]);
        assert_eq!(p(&[5, 4, 3, 2, 2]).hook_type().unwrap().ks(), &[9, 6, 1]);
        assert_eq!(p(&[3, 3, 3]).hook_type().unwrap().ks(), &[5, 3, 1]);
        assert!(Partition::empty().hook_type().is_err());
    }

    #[test]
    fn hook_type_validation() {
        assert!(HookType::new(vec![7, 4]).is_ok());
        assert!(HookType::new(vec![5, 4]).is_err());
        assert!(HookType::new(vec![3, 0]).is_err());
        assert!(HookType::new(vec![]).is_err());
    }

    #[test]
    fn delta_conversions() {
        let h = HookType::new(vec![12, 1]).unwrap();
        assert_eq!(h.to_difference_sequence().ds(), &[10, 1]);
        let h = HookType::new(vec![7, 4, 2]).unwrap();
        assert_eq!(h.to_difference_sequence().ds(), &[2, 1, 2]);
        let d = DifferenceSequence::new(vec![2, 4]).unwrap();
        assert_eq!(d.to_hook_type().unwrap().ks(), &[7, 4]);
        assert_eq!(d.weight(), 11);
        assert!(DifferenceSequence::new(vec![1, 0]).is_err());
    }

    #[test]
    fn delta_weight_examples() {
        let w = |ds: &[u32]| DifferenceSequence::new(ds.to_vec()).unwrap().weight();
        assert_eq!(w(&[10, 1]), 13);
        assert_eq!(w(&[4, 1, 1, 2]), 23);
        for r in 0..8 {
            assert_eq!(DifferenceSequence::ones(r).weight(), (r * r) as u64);
        }
    }

    #[test]
    fn bounded_partition_weight() {
        let b = BoundedPartition::new(vec![9, 0]).unwrap();
        assert_eq!(b.class_weight(), 13);
        assert!(BoundedPartition::new(vec![0, 1]).is_err());
    }

    #[test]
    fn render_examples() {
        let plain = RenderOptions::default();
        assert_eq!(render(&p(&[2, 2]), plain), "##\n##");
        assert_eq!(render(&p(&[3, 1]), plain), "###\n#");
        let cart = RenderOptions {
            orientation: Orientation::Cartesian,
            mark_hooks: false,
        };
        assert_eq!(render(&p(&[3, 1]), cart), "#\n###");
        let hooks = RenderOptions {
            orientation: Orientation::English,
            mark_hooks: true,
        };
        assert_eq!(render(&p(&[3, 3, 2]), hooks), "aaa\nabb\nab");
        assert_eq!(render(&Partition::empty(), plain), "");
    }
}
