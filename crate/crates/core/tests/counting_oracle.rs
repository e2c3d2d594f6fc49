use std::collections::HashMap;

use hookmonoid::counting::{
    all_hooktypes, classes_by_product, dh, h1_closed, h_r, hooktypes, hooktypes_single_d,
    p_hooktype, p_n, p_n2_rational, p_n3_rational, p_n_hdecomp, p_nr, p_nr_closed, pi_count,
    po_count, weight_extremes, DurfeeTable,
};
use hookmonoid::oracle::{self, Filter};
use hookmonoid::verify::{for_each_permutation, multisets};
use hookmonoid::{DifferenceSequence, DifferenceSet, HookType, Natural, Partition, PnrMethod};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

fn nat(x: u64) -> Natural {
    BigUint::from(x)
}

fn hook_type_counts(n: u32) -> HashMap<HookType, u64> {
    let mut counts = HashMap::new();
    oracle::for_each_parts(n, |parts| {
        let p = Partition::new(parts.to_vec()).unwrap();
        *counts.entry(p.hook_type().unwrap()).or_insert(0) += 1;
    });
    counts
}

#[test]
fn durfee_counts_agree_three_ways() {
    let table = oracle::durfee_counts(40);
    let rec = DurfeeTable::new(40, 6);
    for n in 1..=40u64 {
        let row = &table[n as usize];
        for r in 1..=7usize {
            let expect = nat(row.get(r).copied().unwrap_or(0));
            assert_eq!(p_nr(n, r, PnrMethod::Sum), expect, "sum p({n},{r})");
            assert_eq!(
                p_nr(n, r, PnrMethod::Recurrence),
                expect,
                "recurrence p({n},{r})"
            );
            if r <= 6 {
                assert_eq!(rec.get(n, r), expect);
            }
        }
    }
}

#[test]
fn partition_counts_agree() {
    let pent = oracle::pentagonal_partition_counts(40);
    for n in 1..=40u64 {
        assert_eq!(p_n(n), pent[n as usize]);
        assert_eq!(p_n_hdecomp(n).unwrap(), pent[n as usize]);
    }
    assert_eq!(p_n(20), nat(627));
}

/// Number of trailing central hooks that form a Durfee square factor.
fn square_tail(hook_sizes: &[u32]) -> usize {
    hook_sizes
        .iter()
        .rev()
        .enumerate()
        .take_while(|&(i, &k)| k as usize == 2 * i + 1)
        .count()
}

#[test]
fn h_r_matches_oracle() {
    for n in 1..=40u32 {
        let mut by_rank: HashMap<usize, u64> = HashMap::new();
        oracle::for_each_parts(n, |parts| {
            let ks = Partition::new(parts.to_vec())
                .unwrap()
                .frobenius()
                .hook_sizes();
            let s = square_tail(&ks);
            // a pure square belongs to the 1-hook bucket
            let r = if s == ks.len() { 1 } else { ks.len() - s };
            *by_rank.entry(r).or_insert(0) += 1;
        });
        for r in 1..=6usize {
            let got = h_r(u64::from(n), r).unwrap();
            let expect = nat(by_rank.get(&r).copied().unwrap_or(0));
            assert_eq!(got, expect, "h_{r}({n})");
        }
    }
}

#[test]
fn h1_and_h2_closed_forms() {
    assert_eq!(h1_closed(1), nat(1));
    assert_eq!(h_r(6, 2).unwrap(), nat(2));
    for n in 6..=60u64 {
        assert!(h_r(n, 2).is_ok(), "h_2({n}) closed form disagrees");
    }
    for n in 0..6u64 {
        assert_eq!(h_r(n, 2).unwrap(), nat(0));
    }
}

#[test]
fn closed_forms_match_oracle_to_sixty() {
    let table = oracle::durfee_counts(60);
    for n in 1..=60u64 {
        let row = &table[n as usize];
        for r in [2usize, 3] {
            let expect = nat(row.get(r).copied().unwrap_or(0));
            assert_eq!(p_nr_closed(n, r).unwrap(), expect, "p({n},{r})");
        }
        assert!(p_n2_rational(n).is_integer());
        assert!(p_n3_rational(n).is_integer());
    }
    assert_eq!(p_nr_closed(9, 3).unwrap(), nat(1));
    assert_eq!(p_nr_closed(10, 3).unwrap(), nat(2));
    assert_eq!(p_nr_closed(11, 3).unwrap(), nat(5));
    assert_eq!(p_nr_closed(7, 2).unwrap(), nat(8));
    assert!(p_nr_closed(10, 4).is_err());
}

#[test]
fn hooktype_class_sizes_match_oracle() {
    for n in 1..=25u32 {
        let counts = hook_type_counts(n);
        let types = all_hooktypes(u64::from(n));
        assert_eq!(types.len(), counts.len(), "n = {n}");
        for h in types {
            assert_eq!(p_hooktype(&h), nat(counts[&h]), "{h}");
            assert_eq!(p_hooktype(&h), h.to_difference_sequence().product());
        }
    }
}

#[test]
fn staircases_are_singletons() {
    for r in 1..=5u32 {
        let ks: Vec<u32> = (0..r).rev().map(|i| 2 * i + 1).collect();
        let h = HookType::new(ks).unwrap();
        assert_eq!(p_hooktype(&h), nat(1));
        assert_eq!(oracle::count_where(r * r, &Filter::HookType(h)), nat(1));
    }
}

#[test]
fn hooktypes_are_complete_and_valid() {
    for n in 1..=30u64 {
        for r in 1..=6usize {
            let list = hooktypes(n, r);
            if n < (r * r) as u64 {
                assert!(list.is_empty());
            }
            for h in &list {
                assert_eq!(h.len(), r);
                assert_eq!(h.weight(), n);
            }
            let mut sorted = list.clone();
            sorted.sort_by(|a, b| b.ks().cmp(a.ks()));
            sorted.dedup();
            assert_eq!(sorted, list);
        }
    }
}

#[test]
fn inner_and_outer_counts_match_oracle() {
    for n in 1..=25u32 {
        for r in 1..=5usize {
            for k in 1..=n {
                let pi = pi_count(u64::from(n), r, k).unwrap();
                let po = po_count(u64::from(n), r, k);
                assert_eq!(
                    pi,
                    oracle::count_where(n, &Filter::Inner { rank: r, size: k })
                );
                assert_eq!(
                    po,
                    oracle::count_where(n, &Filter::Outer { rank: r, size: k })
                );
            }
        }
        for k in 1..=n {
            let expect = if k == n { nat(u64::from(k)) } else { nat(0) };
            assert_eq!(pi_count(u64::from(n), 1, k).unwrap(), expect);
        }
    }
    assert_eq!(pi_count(15, 3, 3).unwrap(), nat(3));
}

#[test]
fn inner_hook_bijection_law() {
    for n in 0..=20u64 {
        for r in 1..=3usize {
            for k in 1..=5u32 {
                let target = n + (u64::from(k) + 1) * r as u64 + u64::from(k);
                let lhs = pi_count(target, r + 1, k).unwrap();
                assert_eq!(lhs, nat(u64::from(k)) * p_nr(n, r, PnrMethod::Recurrence));
            }
        }
    }
}

#[test]
fn dh_matches_oracle_to_one_hundred() {
    for n in 1..=100u32 {
        let expect = if n <= 30 {
            oracle::count_where(n, &Filter::DuTimesHook)
        } else {
            oracle::count_two_valued_where(n, &Filter::DuTimesHook)
        };
        assert_eq!(dh(u64::from(n)), expect, "dh({n})");
    }
    assert_eq!(dh(4), nat(5));
    assert_eq!(dh(1), nat(1));
    assert_eq!(dh(12), nat(19));
}

#[test]
fn weight_extremes_match_exhaustive_search() {
    for len in 1..=6usize {
        for values in multisets(len, 5) {
            let set = DifferenceSet::new(values.clone()).unwrap();
            let ext = weight_extremes(&set).unwrap();
            let mut lo = u64::MAX;
            let mut hi = 0;
            let mut at_lo = Vec::new();
            let mut at_hi = Vec::new();
            for_each_permutation(&values, |perm| {
                let w = DifferenceSequence::new(perm.to_vec()).unwrap().weight();
                if w < lo {
                    lo = w;
                    at_lo.clear();
                }
                if w == lo {
                    at_lo.push(perm.to_vec());
                }
                if w > hi {
                    hi = w;
                    at_hi.clear();
                }
                if w == hi {
                    at_hi.push(perm.to_vec());
                }
            });
            assert_eq!(ext.min.weight(), lo);
            assert_eq!(ext.max.weight(), hi);
            assert_eq!(ext.spread, hi - lo);
            // every optimum is literally the sorted sequence
            assert!(at_lo.iter().all(|p| p == ext.min.ds()), "{values:?}");
            assert!(at_hi.iter().all(|p| p == ext.max.ds()), "{values:?}");
            let mut distinct = values.clone();
            distinct.dedup();
            if distinct.len() >= 2 {
                assert!(lo < hi);
            }
        }
    }
    assert!(weight_extremes(&DifferenceSet::new(Vec::new()).unwrap()).is_err());
}

#[test]
fn equal_weight_equal_product_sequences() {
    for ds in [[4, 1, 1, 2], [2, 4, 1, 1], [2, 2, 1, 2], [8, 1, 1, 1]] {
        let d = DifferenceSequence::new(ds.to_vec()).unwrap();
        assert_eq!(d.weight(), 23);
        assert_eq!(d.product(), nat(8));
    }
    let groups = classes_by_product(23);
    let eights = &groups[&nat(8)];
    for ds in [[4, 1, 1, 2], [2, 4, 1, 1], [2, 2, 1, 2], [8, 1, 1, 1]] {
        assert!(eights.iter().any(|d| d.ds() == ds));
    }
    let total: usize = groups.values().map(Vec::len).sum();
    assert_eq!(total, all_hooktypes(23).len());
}

#[test]
fn single_difference_hook_types_match_filter() {
    for d in 2..=6u32 {
        for r in 1..=5usize {
            let got = hooktypes_single_d(d, r).unwrap();
            assert_eq!(got.len(), r);
            let mut set = vec![1u32; r - 1];
            set.push(d);
            let target = DifferenceSet::new(set).unwrap();
            let mut expect = Vec::new();
            for (s, h) in got.iter().enumerate() {
                let w = (r * r + (r - s) * (d as usize - 1)) as u64;
                assert_eq!(h.weight(), w);
                expect.extend(
                    all_hooktypes(w)
                        .into_iter()
                        .filter(|h| DifferenceSet::of(&h.to_difference_sequence()) == target),
                );
            }
            let mut got_sorted = got.clone();
            got_sorted.sort_by(|a, b| a.ks().cmp(b.ks()));
            expect.sort_by(|a, b| a.ks().cmp(b.ks()));
            expect.dedup();
            assert_eq!(got_sorted, expect, "d = {d}, r = {r}");
        }
    }
    assert!(hooktypes_single_d(1, 3).is_err());
    assert!(hooktypes_single_d(3, 0).is_err());
}

#[test]
fn two_hook_count_is_n_minus_three_times_average_rectangle_area() {
    // rectangles with integer sides a, b >= 1 and perimeter n - 1
    for n in (7..=41u64).step_by(2) {
        let half = (n - 1) / 2;
        let areas: Vec<u64> = (1..half).map(|a| a * (half - a)).collect();
        let average = BigRational::new(
            areas.iter().sum::<u64>().into(),
            (areas.len() as u64).into(),
        );
        let claim = BigRational::from_integer((n - 3).into()) * average;
        let actual = BigRational::from_integer(p_nr(n, 2, PnrMethod::Sum).into());
        assert_eq!(claim, actual, "n = {n}");
    }
}

proptest! {
    #[test]
    fn recurrence_and_sum_agree(n in 1u64..90, r in 1usize..7) {
        prop_assert_eq!(p_nr(n, r, PnrMethod::Sum), p_nr(n, r, PnrMethod::Recurrence));
    }

    #[test]
    fn closed_forms_agree_far_out(n in 61u64..400) {
        prop_assert_eq!(p_nr_closed(n, 2).unwrap(), p_nr(n, 2, PnrMethod::Recurrence));
        prop_assert_eq!(p_nr_closed(n, 3).unwrap(), p_nr(n, 3, PnrMethod::Recurrence));
    }
}
