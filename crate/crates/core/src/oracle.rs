//! Brute-force ground truth: enumerate every partition of `n` and count the
//! ones satisfying a structural filter.

use num_bigint::BigUint;
use num_integer::Roots;

use crate::counting::DifferenceSet;
use crate::partition::{HookType, Partition};
use crate::Natural;

/// All partitions of `n` in reverse lexicographic order, `(n)` first and
/// `(1^n)` last. `n = 0` yields the empty partition once.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

/// Step `parts` to its reverse-lexicographic successor; `false` at `(1^n)`.
fn advance(parts: &mut Vec<u32>) -> bool {
    let Some(i) = parts.iter().rposition(|&p| p > 1) else {
        return false;
    };
    let x = parts[i] - 1;
    let mut rest = (parts.len() - i - 1) as u32 + 1;
    parts.truncate(i);
    parts.push(x);
    while rest > 0 {
        let take = rest.min(x);
        parts.push(take);
        rest -= take;
    }
    true
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if advance(&mut next) {
            self.current = Some(next);
        }
        Some(Partition::from_parts_unchecked(out))
    }
}

pub fn enumerate(n: u32) -> Partitions {
    Partitions::new(n)
}

/// Visit every partition of `n` without allocating one per item.
pub fn for_each_parts(n: u32, mut f: impl FnMut(&[u32])) {
    let mut parts = if n == 0 { Vec::new() } else { vec![n] };
    loop {
        f(&parts);
        if !advance(&mut parts) {
            break;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    /// Durfee square of side `r`.
    Durfee(usize),
    HookType(HookType),
    /// Difference sequence is some ordering of this multiset.
    DifferenceSet(DifferenceSet),
    /// An `rank`-hook whose inner hook has `size` cells.
    Inner {
        rank: usize,
        size: u32,
    },
    /// An `rank`-hook whose outer hook has `size` cells.
    Outer {
        rank: usize,
        size: u32,
    },
    /// A Durfee square (possibly empty) times a 1-hook.
    DuTimesHook,
    /// Every part is congruent to 1 or 4 mod 5.
    PartsPm1Mod5,
}

fn durfee_of(parts: &[u32]) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p as usize > i)
        .count()
}

impl Filter {
    pub fn accepts(&self, parts: &[u32]) -> bool {
        match self {
            Filter::Durfee(r) => durfee_of(parts) == *r,
            Filter::PartsPm1Mod5 => parts.iter().all(|p| matches!(p % 5, 1 | 4)),
            Filter::HookType(h) => Self::hook_sizes(parts) == h.ks(),
            Filter::DifferenceSet(set) => {
                let p = Partition::from_parts_unchecked(parts.to_vec());
                !p.is_empty() && DifferenceSet::of(&p.difference_sequence()) == *set
            }
            Filter::Inner { rank, size } => {
                let ks = Self::hook_sizes(parts);
                ks.len() == *rank && ks.last() == Some(size)
            }
            Filter::Outer { rank, size } => {
                let ks = Self::hook_sizes(parts);
                ks.len() == *rank && ks.first() == Some(size)
            }
            Filter::DuTimesHook => {
                // Du_s * (a+1, 1^l) has arms (a+s, ..., a) and legs (l+s, ..., l)
                let p = Partition::from_parts_unchecked(parts.to_vec());
                let f = p.frobenius();
                let consecutive = |xs: &[u32]| xs.windows(2).all(|w| w[0] == w[1] + 1);
                f.rank() >= 1 && consecutive(f.arms()) && consecutive(f.legs())
            }
        }
    }

    fn hook_sizes(parts: &[u32]) -> Vec<u32> {
        Partition::from_parts_unchecked(parts.to_vec())
            .frobenius()
            .hook_sizes()
    }
}

/// Exhaustive count of partitions of `n` accepted by `filter`.
pub fn count_where(n: u32, filter: &Filter) -> Natural {
    let mut count = 0u64;
    for_each_parts(n, |parts| {
        if filter.accepts(parts) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// Visit every partition of `n` with at most two distinct part sizes.
/// Enough to brute-force [`Filter::DuTimesHook`] far past the range where
/// full enumeration is feasible.
pub fn for_each_two_valued(n: u32, mut f: impl FnMut(&[u32])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut parts = Vec::new();
    for x in 1..=n {
        if n.is_multiple_of(x) {
            parts.clear();
            parts.resize((n / x) as usize, x);
            f(&parts);
        }
        for y in 1..x {
            let mut a = 1;
            while a * x < n {
                let rest = n - a * x;
                if rest.is_multiple_of(y) {
                    parts.clear();
                    parts.resize(a as usize, x);
                    parts.resize((a + rest / y) as usize, y);
                    f(&parts);
                }
                a += 1;
            }
        }
    }
}

/// [`count_where`] restricted to [`for_each_two_valued`].
pub fn count_two_valued_where(n: u32, filter: &Filter) -> Natural {
    let mut count = 0u64;
    for_each_two_valued(n, |parts| {
        if filter.accepts(parts) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// Number of partitions of each `m <= n` grouped by Durfee size:
/// `table[m][r]`. One pass per `m`.
pub fn durfee_counts(n: u32) -> Vec<Vec<u64>> {
    (0..=n)
        .map(|m| {
            let mut row = vec![0u64; m.sqrt() as usize + 1];
            for_each_parts(m, |parts| row[durfee_of(parts)] += 1);
            row
        })
        .collect()
}

/// `p(0..=n)` from Euler's pentagonal number recurrence. Only used as an
/// independent check on [`enumerate`].
pub fn pentagonal_partition_counts(n: usize) -> Vec<Natural> {
    let mut p: Vec<Natural> = Vec::with_capacity(n + 1);
    p.push(BigUint::from(1u32));
    for m in 1..=n {
        let mut plus = BigUint::default();
        let mut minus = BigUint::default();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let bucket = if k % 2 == 1 { &mut plus } else { &mut minus };
            *bucket += &p[m - g1];
            if g2 <= m {
                *bucket += &p[m - g2];
            }
        }
        p.push(plus - minus);
    }
    p
}
