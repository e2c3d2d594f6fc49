//! The cross-check sweep behind `hookmonoid verify`.
//!
//! Each check recomputes one family of identities by at least two routes up
//! to a weight derived from `max_n` and reports the first disagreement.
//! Checks whose cost grows fast are capped at the ranges below.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::counting::{self, DifferenceSet, PnrMethod};
use crate::monoid::{factor, multiply_hooks, product, Hook};
use crate::oracle::{self, Filter};
use crate::partition::{DifferenceSequence, Partition};
use crate::quotient::{self, ClassIndex, IndexSet};
use crate::series::{self, GfForm};

const MONOID_PAIR_WEIGHT: u32 = 8;
const MONOID_TRIPLE_WEIGHT: u32 = 6;
const FACTOR_WEIGHT: u32 = 15;
const HOOKTYPE_WEIGHT: u64 = 25;
const INDEX_WEIGHT: u64 = 30;
const CARD_WEIGHT: u64 = 12;
const DH_WEIGHT: u32 = 100;
const FULL_ENUMERATION_WEIGHT: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: u32,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type Check = fn(u32, usize) -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    (
        "enumeration matches the pentagonal recurrence",
        check_enumeration,
    ),
    (
        "p(n) by hook types, H_r decomposition, series and oracle",
        check_pn_four_ways,
    ),
    (
        "p(n,r) by hook types, recurrence, both series forms and oracle",
        check_pnr,
    ),
    ("closed forms for p(n,2) and p(n,3)", check_closed_forms),
    (
        "hook-type class sizes and the multivariate series",
        check_hooktype_counts,
    ),
    ("free monoid laws", check_monoid_laws),
    (
        "matrix representations are homomorphisms",
        check_representations,
    ),
    (
        "index maps, class count and cardinality homomorphism",
        check_quotient,
    ),
    (
        "inner-hook bijection and outer-hook counts",
        check_inner_outer,
    ),
    ("dh(n) by divisors, oracle and series", check_dh),
    ("weight extremes of difference sets", check_extremes),
];

/// Run every check. `series_bound` is the truncation used for series.
pub fn run(max_n: u32, series_bound: usize) -> VerifyReport {
    let checks = CHECKS
        .iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let result = check(max_n, series_bound);
            let millis = start.elapsed().as_millis();
            let (passed, detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome {
                name: name.to_string(),
                passed,
                detail,
                millis,
            }
        })
        .collect();
    VerifyReport { max_n, checks }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

/// Every partition of weight at most `w`, lightest first.
pub fn partitions_up_to(w: u32) -> Vec<Partition> {
    (0..=w).flat_map(oracle::enumerate).collect()
}

fn check_enumeration(max_n: u32, _: usize) -> Result<String, String> {
    let pent = oracle::pentagonal_partition_counts(max_n as usize);
    for n in 0..=max_n {
        let mut count = 0u64;
        oracle::for_each_parts(n, |_| count += 1);
        ensure(BigUint::from(count) == pent[n as usize], || {
            format!(
                "|P({n})| = {count} but the pentagonal recurrence gives {}",
                pent[n as usize]
            )
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

fn check_pn_four_ways(max_n: u32, bound: usize) -> Result<String, String> {
    let pent = oracle::pentagonal_partition_counts(max_n as usize);
    for n in 1..=max_n {
        let n64 = u64::from(n);
        let a = counting::p_n(n64);
        let b = counting::p_n_hdecomp(n64).map_err(|e| e.to_string())?;
        let c = series::gf_pn_coeff(n64, bound).map_err(|e| e.to_string())?;
        let mut count = 0u64;
        oracle::for_each_parts(n, |_| count += 1);
        let d = BigUint::from(count);
        ensure(
            a == b && big(&a) == c && a == d && d == pent[n as usize],
            || format!("p({n}): hook types {a}, H_r {b}, series {c}, oracle {d}"),
        )?;
    }
    Ok(format!("n <= {max_n}"))
}

fn check_pnr(max_n: u32, bound: usize) -> Result<String, String> {
    let table = oracle::durfee_counts(max_n);
    let rmax = (max_n as f64).sqrt() as usize;
    let rec = counting::DurfeeTable::new(u64::from(max_n), rmax);
    for n in 1..=max_n {
        for (r, &count) in table[n as usize].iter().enumerate().skip(1) {
            let n64 = u64::from(n);
            let oracle_count = BigUint::from(count);
            let sum = counting::p_nr(n64, r, PnrMethod::Sum);
            let recurrence = rec.get(n64, r);
            let product =
                series::gf_pnr_coeff(n64, r, GfForm::Product, bound).map_err(|e| e.to_string())?;
            let derivative = series::gf_pnr_coeff(n64, r, GfForm::Derivative, bound)
                .map_err(|e| e.to_string())?;
            ensure(
                sum == oracle_count
                    && recurrence == oracle_count
                    && product == big(&oracle_count)
                    && derivative == big(&oracle_count),
                || {
                    format!(
                        "p({n},{r}): sum {sum}, recurrence {recurrence}, product gf {product}, \
                         derivative gf {derivative}, oracle {oracle_count}"
                    )
                },
            )?;
        }
    }
    Ok(format!("n <= {max_n}, all r"))
}

fn check_closed_forms(max_n: u32, _: usize) -> Result<String, String> {
    let table = oracle::durfee_counts(max_n);
    for n in 1..=max_n {
        for r in [2usize, 3] {
            let expect = table[n as usize].get(r).copied().unwrap_or(0);
            let closed = counting::p_nr_closed(u64::from(n), r).map_err(|e| e.to_string())?;
            ensure(closed == BigUint::from(expect), || {
                format!("closed form p({n},{r}) = {closed}, oracle {expect}")
            })?;
        }
    }
    Ok(format!("n <= {max_n}"))
}

fn check_hooktype_counts(max_n: u32, _: usize) -> Result<String, String> {
    let cap = u64::from(max_n).min(HOOKTYPE_WEIGHT);
    let mut seen = 0usize;
    for n in 1..=cap {
        let mut by_type = std::collections::HashMap::new();
        oracle::for_each_parts(n as u32, |parts| {
            let p = Partition::new(parts.to_vec()).expect("oracle yields partitions");
            *by_type
                .entry(p.hook_type().expect("non-empty"))
                .or_insert(0u64) += 1;
        });
        for h in counting::all_hooktypes(n) {
            let formula = counting::p_hooktype(&h);
            let brute = BigUint::from(by_type.get(&h).copied().unwrap_or(0));
            ensure(formula == brute, || {
                format!("p({h}) = {formula}, oracle {brute}")
            })?;
            if h.len() <= 3 {
                let mv = series::mv_coeff(&h, cap as u32).map_err(|e| e.to_string())?;
                ensure(mv == big(&formula), || {
                    format!("mv coefficient of {h} is {mv}, expected {formula}")
                })?;
            }
            seen += 1;
        }
        ensure(by_type.len() == counting::all_hooktypes(n).len(), || {
            format!("weight {n}: oracle sees {} hook types", by_type.len())
        })?;
    }
    Ok(format!("{seen} hook types of weight <= {cap}"))
}

fn check_monoid_laws(max_n: u32, _: usize) -> Result<String, String> {
    let pair_w = max_n.min(MONOID_PAIR_WEIGHT);
    let triple_w = max_n.min(MONOID_TRIPLE_WEIGHT);
    let factor_w = max_n.min(FACTOR_WEIGHT);

    for p in partitions_up_to(factor_w) {
        let hooks = factor(&p);
        ensure(multiply_hooks(&hooks) == p, || {
            format!("factor({p}) does not multiply back")
        })?;
        let sizes: Vec<u32> = hooks.iter().map(Hook::size).collect();
        ensure(sizes == p.difference_sequence().ds(), || {
            format!("hook sizes of {p} differ from its difference sequence")
        })?;
        ensure(
            product(&p, &Partition::empty()) == p && product(&Partition::empty(), &p) == p,
            || format!("empty partition is not an identity for {p}"),
        )?;
    }

    let pairs = partitions_up_to(pair_w);
    for a in &pairs {
        for b in &pairs {
            let ab = product(a, b);
            let mut fab = factor(a);
            fab.extend(factor(b));
            ensure(factor(&ab) == fab, || {
                format!("f({a} * {b}) is not f({a}) f({b})")
            })?;
            ensure(ab.durfee() == a.durfee() + b.durfee(), || {
                format!("du({a} * {b})")
            })?;
            ensure(
                ab.conjugate() == product(&a.conjugate(), &b.conjugate()),
                || format!("conjugation does not commute with {a} * {b}"),
            )?;
            let expect = a.weight() + b.weight() + a.durfee() as u64 * b.outer_hook_shift();
            ensure(ab.weight() == expect, || {
                format!("|{a} * {b}| = {}, expected {expect}", ab.weight())
            })?;
        }
    }

    let triples = partitions_up_to(triple_w);
    for a in &triples {
        for b in &triples {
            let ab = product(a, b);
            for c in &triples {
                ensure(product(&ab, c) == product(a, &product(b, c)), || {
                    format!("({a} * {b}) * {c} != {a} * ({b} * {c})")
                })?;
            }
        }
    }
    Ok(format!(
        "factorization <= {factor_w}, pairs <= {pair_w}, triples <= {triple_w}"
    ))
}

fn check_representations(max_n: u32, _: usize) -> Result<String, String> {
    let pair_w = max_n.min(MONOID_PAIR_WEIGHT);
    let pairs = partitions_up_to(pair_w);
    for a in &pairs {
        for b in &pairs {
            let lhs = quotient::phi3(&product(a, b));
            let rhs = &quotient::phi3(a) * &quotient::phi3(b);
            ensure(lhs == rhs, || {
                format!("phi3({a} * {b}) != phi3({a}) phi3({b})")
            })?;
        }
    }
    let deltas = deltas_up_to(u64::from(max_n).min(CARD_WEIGHT));
    for d1 in &deltas {
        for d2 in &deltas {
            let lhs = quotient::phi4(&quotient::delta_product(d1, d2));
            let rhs = &quotient::phi4(d1) * &quotient::phi4(d2);
            ensure(lhs == rhs, || {
                format!("phi4({d1} o {d2}) != phi4({d1}) phi4({d2})")
            })?;
        }
    }
    Ok(format!(
        "partition pairs <= {pair_w}, delta pairs <= {}",
        u64::from(max_n).min(CARD_WEIGHT)
    ))
}

fn deltas_up_to(w: u64) -> Vec<DifferenceSequence> {
    (1..=w).flat_map(counting::difference_sequences).collect()
}

fn check_quotient(max_n: u32, _: usize) -> Result<String, String> {
    let cap = u64::from(max_n).min(INDEX_WEIGHT);
    for n in 1..=cap {
        let classes = counting::all_hooktypes(n);
        for h in &classes {
            let start = ClassIndex::HookType(h.clone());
            for from in IndexSet::ALL {
                let src = start.convert(from);
                for to in IndexSet::ALL {
                    let there = quotient::index_convert(src.values(), from, to, n)
                        .map_err(|e| e.to_string())?;
                    let back =
                        quotient::index_convert(&there, to, from, n).map_err(|e| e.to_string())?;
                    ensure(back == src.values(), || {
                        format!("{from}->{to}->{from} moves {src}")
                    })?;
                }
            }
        }
        let rr = oracle::count_where(n as u32, &Filter::PartsPm1Mod5);
        ensure(BigUint::from(quotient::class_count(n)) == rr, || {
            format!(
                "class_count({n}) = {}, parts = +-1 mod 5 gives {rr}",
                quotient::class_count(n)
            )
        })?;
    }
    let card_w = u64::from(max_n).min(CARD_WEIGHT);
    let deltas = deltas_up_to(card_w);
    for d1 in &deltas {
        for d2 in &deltas {
            let joined = quotient::delta_product(d1, d2);
            ensure(
                quotient::class_cardinality(&joined)
                    == quotient::class_cardinality(d1) * quotient::class_cardinality(d2),
                || format!("card({d1} o {d2}) is not multiplicative"),
            )?;
        }
    }
    Ok(format!("index maps n <= {cap}, card pairs <= {card_w}"))
}

fn check_inner_outer(max_n: u32, _: usize) -> Result<String, String> {
    for r in 1..=3usize {
        for k in 1..=5u32 {
            for n in 0..=u64::from(max_n.min(20)) {
                let target = n + (u64::from(k) + 1) * r as u64 + u64::from(k);
                let pi = counting::pi_count(target, r + 1, k).map_err(|e| e.to_string())?;
                let expect = BigUint::from(k) * counting::p_nr(n, r, PnrMethod::Recurrence);
                ensure(pi == expect, || {
                    format!("pi({target},{},{k}) = {pi}, expected {expect}", r + 1)
                })?;
            }
        }
    }
    let cap = max_n.min(HOOKTYPE_WEIGHT as u32);
    for n in 1..=cap {
        for r in 1..=(n as f64).sqrt() as usize {
            for k in 1..=n {
                let pi = counting::pi_count(u64::from(n), r, k).map_err(|e| e.to_string())?;
                let po = counting::po_count(u64::from(n), r, k);
                let pi_brute = oracle::count_where(n, &Filter::Inner { rank: r, size: k });
                let po_brute = oracle::count_where(n, &Filter::Outer { rank: r, size: k });
                ensure(pi == pi_brute && po == po_brute, || {
                    format!("pi/po({n},{r},{k}) = {pi}/{po}, oracle {pi_brute}/{po_brute}")
                })?;
            }
        }
    }
    Ok(format!(
        "bijection n <= {}, oracle n <= {cap}",
        max_n.min(20)
    ))
}

fn check_dh(max_n: u32, bound: usize) -> Result<String, String> {
    let cap = max_n.min(DH_WEIGHT);
    let gf = series::dh_gf(bound);
    for n in 1..=cap {
        let divisors = counting::dh(u64::from(n));
        let brute = if n <= FULL_ENUMERATION_WEIGHT {
            oracle::count_where(n, &Filter::DuTimesHook)
        } else {
            oracle::count_two_valued_where(n, &Filter::DuTimesHook)
        };
        let coeff = gf.coeff(u64::from(n)).map_err(|e| e.to_string())?;
        ensure(divisors == brute && big(&divisors) == coeff, || {
            format!("dh({n}): divisors {divisors}, oracle {brute}, series {coeff}")
        })?;
    }
    Ok(format!("n <= {cap}"))
}

fn check_extremes(_: u32, _: usize) -> Result<String, String> {
    let mut checked = 0usize;
    for len in 1..=5usize {
        for values in multisets(len, 5) {
            let set = DifferenceSet::new(values.clone()).map_err(|e| e.to_string())?;
            let ext = counting::weight_extremes(&set).map_err(|e| e.to_string())?;
            let (lo, hi) = brute_extremes(&values);
            ensure(ext.min.weight() == lo && ext.max.weight() == hi, || {
                format!(
                    "extremes of {values:?}: got {} / {}, brute {lo} / {hi}",
                    ext.min.weight(),
                    ext.max.weight()
                )
            })?;
            ensure(ext.spread == hi - lo, || format!("spread of {values:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} multisets"))
}

/// Weakly decreasing sequences of `len` values in `1..=max`.
pub fn multisets(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=cap {
            prefix.push(v);
            go(len, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, &mut Vec::new(), &mut out);
    out
}

fn brute_extremes(values: &[u32]) -> (u64, u64) {
    let mut lo = u64::MAX;
    let mut hi = 0;
    for_each_permutation(values, |perm| {
        let w = DifferenceSequence::new(perm.to_vec())
            .expect("positive")
            .weight();
        lo = lo.min(w);
        hi = hi.max(w);
    });
    (lo, hi)
}

/// Heap's algorithm over every ordering (repeats included).
pub fn for_each_permutation(values: &[u32], mut f: impl FnMut(&[u32])) {
    let mut a = values.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = run(12, 128);
        assert!(report.passed(), "{:?}", report.first_failure());
        assert_eq!(report.checks.len(), CHECKS.len());
    }

    #[test]
    fn truncation_failure_is_reported() {
        let report = run(12, 5);
        let fail = report.first_failure().expect("series cannot reach n = 12");
        assert!(fail.detail.contains("truncated"), "{}", fail.detail);
    }

    #[test]
    fn permutations_cover_all_orderings() {
        let mut count = 0;
        for_each_permutation(&[1, 2, 3, 4], |_| count += 1);
        assert_eq!(count, 24);
        assert_eq!(multisets(2, 3).len(), 6);
    }
}
