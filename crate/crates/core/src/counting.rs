//! Exact counting of partitions by hook structure.
//!
//! Everything returns [`Natural`]. Closed forms that involve fractions are
//! evaluated in exact rationals and must come out integral; a fractional
//! result is reported as [`Error::Consistency`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{DifferenceSequence, HookType};
use crate::Natural;

fn nat(x: u64) -> Natural {
    BigUint::from(x)
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

fn into_natural(value: BigRational, what: &str) -> Result<Natural> {
    if !value.is_integer() {
        return Err(Error::Consistency(format!("{what} evaluated to {value}")));
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Consistency(format!("{what} evaluated to {value}")))
}

/// Number of partitions with hook type `h`: the product of its differences.
pub fn p_hooktype(h: &HookType) -> Natural {
    h.to_difference_sequence().product()
}

/// All hook types of weight `n` with `r` hooks, largest `k_1` first.
pub fn hooktypes(n: u64, r: usize) -> Vec<HookType> {
    let mut out = Vec::new();
    if r == 0 || n < (r * r) as u64 {
        return out;
    }
    let mut prefix = Vec::with_capacity(r);
    fill_hooktypes(n, r, u64::MAX, &mut prefix, &mut out);
    out
}

fn fill_hooktypes(
    remaining: u64,
    slots: usize,
    cap: u64,
    prefix: &mut Vec<u32>,
    out: &mut Vec<HookType>,
) {
    if slots == 1 {
        if remaining >= 1 && remaining <= cap {
            prefix.push(remaining as u32);
            out.push(HookType::new_unchecked(prefix.clone()));
            prefix.pop();
        }
        return;
    }
    // the slots after this one need at least (slots-1)^2 cells and each k
    // must leave room for a strictly smaller staircase below it
    let rest_min = ((slots - 1) * (slots - 1)) as u64;
    if remaining < rest_min {
        return;
    }
    let hi = cap.min(remaining - rest_min);
    let lo = (2 * slots - 1) as u64;
    let mut k = hi;
    while k >= lo {
        // largest possible total for the remaining slots under k - 2
        let below = k - 2;
        let s = (slots - 1) as u64;
        let max_rest = s * below - s * (s - 1);
        if max_rest >= remaining - k {
            prefix.push(k as u32);
            fill_hooktypes(remaining - k, slots - 1, below, prefix, out);
            prefix.pop();
        } else {
            break;
        }
        k -= 1;
    }
}

/// Every hook type of weight `n`, grouped by number of hooks.
pub fn all_hooktypes(n: u64) -> Vec<HookType> {
    (1..=n.sqrt() as usize)
        .flat_map(|r| hooktypes(n, r))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PnrMethod {
    /// Sum of hook-type products over all admissible hook types.
    Sum,
    /// Inner-hook recurrence grounded at `p(n, 1) = n`.
    Recurrence,
}

/// Number of partitions of `n` with a Durfee square of side `r`.
pub fn p_nr(n: u64, r: usize, method: PnrMethod) -> Natural {
    match method {
        PnrMethod::Sum => hooktypes(n, r).iter().map(p_hooktype).sum(),
        PnrMethod::Recurrence => DurfeeTable::new(n, r).get(n, r),
    }
}

/// `p(m, j)` for all `m <= n`, `j <= r`, filled by the inner-hook recurrence
/// `p(m, j) = sum_k k * p(m - (k+1) j + 1, j - 1)`.
#[derive(Debug, Clone)]
pub struct DurfeeTable {
    rows: Vec<Vec<Natural>>,
}

impl DurfeeTable {
    pub fn new(n: u64, r: usize) -> Self {
        let n = n as usize;
        let mut rows = vec![vec![Natural::zero(); n + 1]; r + 1];
        if r >= 1 {
            for (m, slot) in rows[1].iter_mut().enumerate().skip(1) {
                *slot = nat(m as u64);
            }
        }
        for j in 2..=r {
            for m in (j * j)..=n {
                let mut acc = Natural::zero();
                let mut k = 1;
                while (k + 1) * j <= m + 1 {
                    let prev = m + 1 - (k + 1) * j;
                    if prev < (j - 1) * (j - 1) {
                        break;
                    }
                    acc += &rows[j - 1][prev] * nat(k as u64);
                    k += 1;
                }
                rows[j][m] = acc;
            }
        }
        DurfeeTable { rows }
    }

    pub fn get(&self, n: u64, r: usize) -> Natural {
        self.rows
            .get(r)
            .and_then(|row| row.get(n as usize))
            .cloned()
            .unwrap_or_default()
    }
}

/// `p(n)` as the sum over Durfee sizes of hook-type sums.
pub fn p_n(n: u64) -> Natural {
    (1..=n.sqrt() as usize)
        .map(|r| p_nr(n, r, PnrMethod::Sum))
        .sum()
}

/// Closed forms for `p(n, 2)` and `p(n, 3)`.
pub fn p_nr_closed(n: u64, r: usize) -> Result<Natural> {
    match r {
        2 => into_natural(p_n2_rational(n), "closed form p(n,2)"),
        3 => into_natural(p_n3_rational(n), "closed form p(n,3)"),
        _ => Err(Error::InvalidArgument(format!(
            "no closed form for r = {r}; only r = 2 and r = 3"
        ))),
    }
}

/// `C(n,3)/4 - (n-1)/8 * (n mod 2)`.
pub fn p_n2_rational(n: u64) -> BigRational {
    let n = n as i64;
    BigRational::new(binomial(n, 3), BigInt::from(4)) - rat(n - 1) * rat(n % 2) / rat(8)
}

/// Quintic over 12960 plus a correction depending on `n mod 6`.
pub fn p_n3_rational(n: u64) -> BigRational {
    let n = n as i64;
    let quintic =
        rat((n + 1) * (n - 5)) * rat(3 * n * n * n - 33 * n * n + 83 * n - 13) / rat(12960);
    let third = rat(3 * n - 8) / rat(81);
    let two_81 = rat(2) / rat(81);
    let half = rat(n - 3) / rat(32);
    let correction = match n % 6 {
        0 => third - half,
        1 => two_81,
        2 => -half,
        3 => third,
        4 => two_81 - half,
        _ => BigRational::zero(),
    };
    quintic + correction
}

/// `h_r(n)`: partitions of `n` that are an `r`-hook with inner hook of size
/// at least 2 (any size for `r = 1`) times a Durfee square, possibly empty.
pub fn h_r(n: u64, r: usize) -> Result<Natural> {
    match r {
        0 => Ok(Natural::zero()),
        1 => Ok(h1_closed(n)),
        _ => {
            let count = h_r_enumerated(n, r);
            if r == 2 && n >= 6 {
                let closed = into_natural(h2_rational(n), "closed form h_2(n)")?;
                if closed != count {
                    return Err(Error::Consistency(format!(
                        "h_2({n}): enumeration gives {count}, closed form gives {closed}"
                    )));
                }
            }
            Ok(count)
        }
    }
}

/// `s(n+1) - s(s+1)(2s+1)/6` with `s = floor(sqrt n)`.
pub fn h1_closed(n: u64) -> Natural {
    let s = n.sqrt();
    nat(s) * nat(n + 1) - nat(s * (s + 1) * (2 * s + 1) / 6)
}

/// `sum_j [C(n-j^2+4, 3)/4 - (n-j^2+3)((j+n) mod 2)/8 - (n-j^2+1)]` for
/// `2 <= j <= floor(sqrt(n-2))`.
pub fn h2_rational(n: u64) -> BigRational {
    let mut acc = BigRational::zero();
    if n < 2 {
        return acc;
    }
    let top = (n - 2).sqrt() as i64;
    let n = n as i64;
    for j in 2..=top {
        let m = n - j * j;
        acc += BigRational::new(binomial(m + 4, 3), BigInt::from(4))
            - rat(m + 3) * rat((j + n) % 2) / rat(8)
            - rat(m + 1);
    }
    acc
}

/// Sum of `prod d_i` over difference sequences `(d_1..d_r, 1^s)` of weight
/// `n` with `d_r >= 2`.
fn h_r_enumerated(n: u64, r: usize) -> Natural {
    let mut total = Natural::zero();
    let mut s = 0usize;
    loop {
        let len = (r + s) as u64;
        let ones_moment: u64 = ((r + 1) as u64..=len).sum();
        let fixed = len * (len - 1) / 2 + ones_moment;
        // smallest head moment: (1,..,1,2)
        let head_min = (r * (r + 1) / 2 + r) as u64;
        if fixed + head_min > n {
            break;
        }
        for head in sequences_with_moment(r, n - fixed, 2) {
            total += head
                .iter()
                .fold(Natural::one(), |acc, &d| acc * nat(d as u64));
        }
        s += 1;
    }
    total
}

/// Positive sequences `(d_1..d_len)` with `sum i*d_i = moment` and
/// `d_len >= last_min`.
pub(crate) fn sequences_with_moment(len: usize, moment: u64, last_min: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if len == 0 {
        if moment == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut seq = vec![0u32; len];
    fill_moment(len, moment, last_min, &mut seq, &mut out);
    out
}

fn fill_moment(
    pos: usize,
    remaining: u64,
    last_min: u32,
    seq: &mut [u32],
    out: &mut Vec<Vec<u32>>,
) {
    let len = seq.len();
    let lower = if pos == len { last_min.max(1) } else { 1 } as u64;
    let weight = pos as u64;
    if pos == 1 {
        if remaining >= lower {
            seq[0] = remaining as u32;
            out.push(seq.to_vec());
        }
        return;
    }
    let below_min = weight * (weight - 1) / 2;
    let mut d = lower;
    while weight * d + below_min <= remaining {
        seq[pos - 1] = d as u32;
        fill_moment(pos - 1, remaining - weight * d, last_min, seq, out);
        d += 1;
    }
}

/// Largest `r` for which `h_r(n)` can be non-zero.
pub fn max_hook_rank(n: u64) -> usize {
    let mut r = 1usize;
    while ((r + 1) * (r + 2)) as u64 <= n {
        r += 1;
    }
    r
}

/// `p(n)` through the disjoint decomposition into the sets `H_r(n)`.
pub fn p_n_hdecomp(n: u64) -> Result<Natural> {
    let mut total = Natural::zero();
    for r in 1..=max_hook_rank(n) {
        total += h_r(n, r)?;
    }
    Ok(total)
}

/// Partitions that are a Durfee square (possibly empty) times a 1-hook:
/// `sum_{x | n, x <= sqrt n} (n/x - x + 1)`.
pub fn dh(n: u64) -> Natural {
    let root = n.sqrt();
    (1..=root)
        .filter(|x| n.is_multiple_of(*x))
        .map(|x| nat(n / x - x + 1))
        .sum()
}

/// `r`-hooks of weight `n` whose inner hook has size `k`.
pub fn pi_count(n: u64, r: usize, k: u32) -> Result<Natural> {
    let by_types: Natural = hooktypes(n, r)
        .iter()
        .filter(|h| h.ks().last() == Some(&k))
        .map(p_hooktype)
        .sum();
    if r >= 2 {
        let shift = (u64::from(k) + 1) * (r as u64 - 1) + u64::from(k);
        let by_bijection = match n.checked_sub(shift) {
            Some(m) => nat(u64::from(k)) * p_nr(m, r - 1, PnrMethod::Recurrence),
            None => Natural::zero(),
        };
        if by_bijection != by_types {
            return Err(Error::Consistency(format!(
                "pi({n},{r},{k}): hook types give {by_types}, inner-hook bijection gives {by_bijection}"
            )));
        }
    }
    Ok(by_types)
}

/// `r`-hooks of weight `n` whose outer hook has size `k`.
pub fn po_count(n: u64, r: usize, k: u32) -> Natural {
    hooktypes(n, r)
        .iter()
        .filter(|h| h.ks().first() == Some(&k))
        .map(p_hooktype)
        .sum()
}

/// A multiset of differences, kept sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DifferenceSet {
    values: Vec<u32>,
}

impl DifferenceSet {
    pub fn new(mut values: Vec<u32>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::InvalidDifferenceSequence(values));
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DifferenceSet { values })
    }

    pub fn of(d: &DifferenceSequence) -> Self {
        let mut values = d.ds().to_vec();
        values.sort_unstable_by(|a, b| b.cmp(a));
        DifferenceSet { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightExtremes {
    pub min: DifferenceSequence,
    pub max: DifferenceSequence,
    /// `|max| - |min| = sum_{i<j} (d_i - d_j)` over the decreasing order.
    pub spread: u64,
}

/// Lightest and heaviest orderings of a difference set.
pub fn weight_extremes(set: &DifferenceSet) -> Result<WeightExtremes> {
    if set.values.is_empty() {
        return Err(Error::InvalidDifferenceSequence(Vec::new()));
    }
    let desc = set.values.clone();
    let mut asc = desc.clone();
    asc.reverse();
    let spread = desc
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| desc[i + 1..].iter().map(move |&b| u64::from(a - b)))
        .sum();
    Ok(WeightExtremes {
        min: DifferenceSequence::new_unchecked(desc),
        max: DifferenceSequence::new_unchecked(asc),
        spread,
    })
}

/// The `r` hook types whose difference set is `{d, 1^(r-1)}`, given by the
/// difference sequences `(1^(r-s-1), d, 1^s)` for `s = 0..r`.
pub fn hooktypes_single_d(d: u32, r: usize) -> Result<Vec<HookType>> {
    if d < 2 || r == 0 {
        return Err(Error::InvalidArgument(format!(
            "single-difference hook types need d >= 2 and r >= 1, got d = {d}, r = {r}"
        )));
    }
    (0..r)
        .map(|s| {
            let mut ds = vec![1u32; r];
            ds[r - s - 1] = d;
            DifferenceSequence::new_unchecked(ds).to_hook_type()
        })
        .collect()
}

/// All difference sequences of weight `n`, in class order.
pub fn difference_sequences(n: u64) -> Vec<DifferenceSequence> {
    all_hooktypes(n)
        .iter()
        .map(HookType::to_difference_sequence)
        .collect()
}

/// Difference sequences of weight `n` keyed by the product of their entries.
pub fn classes_by_product(n: u64) -> BTreeMap<Natural, Vec<DifferenceSequence>> {
    let mut groups: BTreeMap<Natural, Vec<DifferenceSequence>> = BTreeMap::new();
    for d in difference_sequences(n) {
        groups.entry(d.product()).or_default().push(d);
    }
    groups
}
