use std::collections::HashMap;

use hookmonoid::counting::{all_hooktypes, difference_sequences};
use hookmonoid::oracle::{self, Filter};
use hookmonoid::quotient::{
    class_cardinality, class_count, class_table, delta_product, hooktype_product, index_convert,
    phi3, phi4, pi_product, weight_from_phi4,
};
use hookmonoid::verify::partitions_up_to;
use hookmonoid::{
    product, ClassIndex, DifferenceSequence, HookType, IndexSet, Matrix3, Natural, Partition, Shape,
};
use num_bigint::BigUint;
use proptest::prelude::*;

const ORACLE_WEIGHT: u32 = 30;

/// Oracle sizes of every hook-type class up to `ORACLE_WEIGHT`.
fn oracle_class_sizes() -> HashMap<HookType, u64> {
    let mut sizes = HashMap::new();
    for n in 1..=ORACLE_WEIGHT {
        oracle::for_each_parts(n, |parts| {
            let p = Partition::new(parts.to_vec()).unwrap();
            *sizes.entry(p.hook_type().unwrap()).or_insert(0) += 1;
        });
    }
    sizes
}

fn deltas_up_to(w: u64) -> Vec<DifferenceSequence> {
    (1..=w).flat_map(difference_sequences).collect()
}

#[test]
fn all_six_index_maps_round_trip() {
    for n in 1..=30u64 {
        for h in all_hooktypes(n) {
            for from in IndexSet::ALL {
                let value = ClassIndex::HookType(h.clone()).convert(from);
                for to in IndexSet::ALL {
                    let there = index_convert(value.values(), from, to, n).unwrap();
                    let back = index_convert(&there, to, from, n).unwrap();
                    assert_eq!(back, value.values(), "{from} -> {to} on {value}");
                    assert_eq!(ClassIndex::parse(to, &there, n).unwrap().weight(), n);
                }
            }
        }
    }
}

#[test]
fn pi_coordinates_partition_n_minus_r_squared() {
    for n in 1..=30u64 {
        for h in all_hooktypes(n) {
            let pi = ClassIndex::HookType(h.clone()).to_pi();
            let r = h.len() as u64;
            assert_eq!(pi.len() as u64, r);
            assert!(pi.mus().windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(
                pi.mus().iter().map(|&m| u64::from(m)).sum::<u64>(),
                n - r * r
            );
        }
    }
}

#[test]
fn membership_is_checked_against_n() {
    assert!(index_convert(&[7, 4], IndexSet::HookType, IndexSet::Pi, 12).is_err());
    assert!(index_convert(&[7, 6], IndexSet::HookType, IndexSet::Pi, 13).is_err());
    assert!(index_convert(&[], IndexSet::Delta, IndexSet::Pi, 0).is_err());
    assert_eq!(
        index_convert(&[9, 0], IndexSet::Pi, IndexSet::HookType, 13).unwrap(),
        vec![12, 1]
    );
}

#[test]
fn class_count_matches_parts_plus_minus_one_mod_five() {
    for n in 1..=30u64 {
        let expect = oracle::count_where(n as u32, &Filter::PartsPm1Mod5);
        assert_eq!(Natural::from(class_count(n)), expect, "n = {n}");
    }
}

#[test]
fn cardinalities_sum_to_partition_counts() {
    let p = oracle::pentagonal_partition_counts(30);
    let sizes = oracle_class_sizes();
    for n in 1..=30u64 {
        let table = class_table(n);
        let total: Natural = table.iter().map(|row| row.card.clone()).sum();
        assert_eq!(total, p[n as usize], "n = {n}");
        for row in &table {
            assert_eq!(row.card, class_cardinality(&row.delta));
            assert_eq!(row.card, BigUint::from(sizes[&row.hook_type]));
        }
    }
}

#[test]
fn cardinality_is_multiplicative() {
    let sizes = oracle_class_sizes();
    let deltas = deltas_up_to(12);
    let mut oracle_checked = 0;
    for a in &deltas {
        for b in &deltas {
            let ab = delta_product(a, b);
            let card = class_cardinality(&ab);
            assert_eq!(card, class_cardinality(a) * class_cardinality(b));
            if ab.weight() <= u64::from(ORACLE_WEIGHT) {
                let h = ab.to_hook_type().unwrap();
                assert_eq!(card, BigUint::from(sizes[&h]));
                oracle_checked += 1;
            }
        }
    }
    assert!(oracle_checked > 500);
}

#[test]
fn squares_are_the_kernel_of_cardinality() {
    for d in deltas_up_to(30) {
        let square = d.ds().iter().all(|&x| x == 1);
        assert_eq!(class_cardinality(&d) == BigUint::from(1u32), square, "{d}");
    }
}

#[test]
fn products_commute_with_index_maps() {
    for w1 in 1..=19u64 {
        for w2 in 1..=(20 - w1) {
            for h1 in all_hooktypes(w1) {
                for h2 in all_hooktypes(w2) {
                    let c1 = ClassIndex::HookType(h1.clone());
                    let c2 = ClassIndex::HookType(h2.clone());
                    let joined = ClassIndex::HookType(hooktype_product(&h1, &h2));
                    let via_delta = delta_product(&c1.to_delta(), &c2.to_delta());
                    let via_pi = pi_product(&c1.to_pi(), &c2.to_pi());
                    assert_eq!(joined.to_delta(), via_delta);
                    assert_eq!(joined.to_pi(), via_pi);
                    assert_eq!(via_delta.weight(), joined.weight());
                }
            }
        }
    }
}

#[test]
fn quotient_map_is_a_homomorphism() {
    let all = partitions_up_to(8);
    for a in all.iter().skip(1) {
        for b in all.iter().skip(1) {
            let ab = product(a, b);
            let h = hooktype_product(&a.hook_type().unwrap(), &b.hook_type().unwrap());
            assert_eq!(ab.hook_type().unwrap(), h);
            assert_eq!(
                ab.difference_sequence(),
                delta_product(&a.difference_sequence(), &b.difference_sequence())
            );
        }
    }
}

#[test]
fn phi3_is_a_homomorphism() {
    let all = partitions_up_to(8);
    for a in &all {
        for b in &all {
            assert_eq!(phi3(&product(a, b)), &phi3(a) * &phi3(b), "{a} * {b}");
        }
    }
    let dot: Partition = "1".parse().unwrap();
    let square: Partition = "2,2".parse().unwrap();
    assert_eq!(&phi3(&dot) * &phi3(&dot), phi3(&square));
    assert!(phi3(&Partition::empty()).is_identity());
}

#[test]
fn phi4_is_a_homomorphism_and_recovers_weight() {
    let deltas = deltas_up_to(12);
    for a in &deltas {
        assert_eq!(weight_from_phi4(&phi4(a)), BigUint::from(a.weight()));
        assert_eq!(phi4(a).shape(), Shape::Upper);
        for b in &deltas {
            let ab = delta_product(a, b);
            assert_eq!(phi4(&ab), &phi4(a) * &phi4(b));
            assert_eq!(weight_from_phi4(&phi4(&ab)), BigUint::from(ab.weight()));
        }
    }
}

#[test]
fn matrices_serialize_row_major() {
    let d: DifferenceSequence = "(4,1)".parse().unwrap();
    let m = phi4(&d);
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(json, r#"[["1","2","6"],["0","1","5"],["0","0","1"]]"#);
    let back: Matrix3 = serde_json::from_str(&json).unwrap();
    assert_eq!(back, m);
}

fn arb_delta() -> impl Strategy<Value = DifferenceSequence> {
    proptest::collection::vec(1u32..9, 1..6).prop_map(|v| DifferenceSequence::new(v).unwrap())
}

proptest! {
    #[test]
    fn random_delta_triples_keep_every_law(a in arb_delta(), b in arb_delta(), c in arb_delta()) {
        let ab = delta_product(&a, &b);
        prop_assert_eq!(delta_product(&ab, &c), delta_product(&a, &delta_product(&b, &c)));
        prop_assert_eq!(phi4(&ab), &phi4(&a) * &phi4(&b));
        prop_assert_eq!(class_cardinality(&ab), class_cardinality(&a) * class_cardinality(&b));
        let n = ab.weight();
        let ht = index_convert(ab.ds(), IndexSet::Delta, IndexSet::HookType, n).unwrap();
        let pi = index_convert(&ht, IndexSet::HookType, IndexSet::Pi, n).unwrap();
        prop_assert_eq!(index_convert(&pi, IndexSet::Pi, IndexSet::Delta, n).unwrap(), ab.ds().to_vec());
    }
}
