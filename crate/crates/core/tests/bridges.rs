//! Series built from q-functions against direct partition counts.

use macmahon_core::oracles::{for_each_partition, Constraints};
use macmahon_core::qfunc::{pochhammer_finite, pochhammer_infinite, q_binomial_series};
use macmahon_core::{verify, IdentityId, Params, Sign};
use num_bigint::BigInt;

fn count(n: usize, c: &Constraints) -> BigInt {
    let mut total = 0u64;
    for_each_partition(n, c, |_| total += 1);
    BigInt::from(total)
}

#[test]
fn gaussian_binomial_counts_distinct_parts() {
    // [m, i]_q q^(i(i+1)/2) counts partitions into i distinct parts <= m
    let order = 40;
    for m in 0..=8usize {
        for i in 0..=m {
            let series = q_binomial_series(m as i64, i as i64, 1, order).shift_up(i * (i + 1) / 2);
            let c = Constraints {
                max_part: Some(m as u32),
                max_multiplicity: Some(1),
                distinct_sizes: Some(i),
                ..Constraints::default()
            };
            for n in 0..=order {
                assert_eq!(*series.coeff(n), count(n, &c), "m={m} i={i} n={n}");
            }
        }
    }
}

#[test]
fn finite_products_count_bounded_partitions() {
    // 1/(q;q)_m counts partitions with parts <= m
    let order = 30;
    for m in 0..=6usize {
        let inv = pochhammer_finite(Sign::Plus, 1, 1, m, order)
            .invert()
            .unwrap();
        let c = Constraints {
            max_part: Some(m as u32),
            ..Constraints::default()
        };
        for n in 0..=order {
            assert_eq!(*inv.coeff(n), count(n, &c), "m={m} n={n}");
        }
    }
}

#[test]
fn odd_parts_equal_distinct_parts() {
    let order = 40;
    let odd = pochhammer_infinite(Sign::Plus, 1, 2, order)
        .invert()
        .unwrap();
    let distinct = pochhammer_infinite(Sign::Minus, 1, 1, order);
    assert_eq!(odd, distinct);
    let c = Constraints {
        odd_only: true,
        ..Constraints::default()
    };
    for n in 0..=order {
        assert_eq!(*odd.coeff(n), count(n, &c));
    }
}

#[test]
fn low_orders_verify() {
    for order in [0, 1, 5, 17] {
        let params = Params {
            k: Some(2),
            m: Some(4),
            sign: Some(Sign::Minus),
            order: Some(order),
            ..Params::default()
        };
        let r = verify(IdentityId::M2, &params).unwrap();
        assert!(r.passed(), "{r}");
    }
}
