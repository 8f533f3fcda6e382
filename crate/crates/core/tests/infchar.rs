use num_traits::Signed;
use proptest::prelude::*;

use orbitdual::infchar::{is_antisymmetric, rho_plus, rho_s, shifts_to_xi, xi_r, xi_r_columns, xi_rvec};
use orbitdual::partition::partitions_of;
use orbitdual::rational::{half, rat, Rational};
use orbitdual::{Partition, Vector};

fn multiset(v: &Vector) -> Vec<Rational> {
    v.sorted_desc().0
}

#[test]
fn rho_plus_has_half_length_and_is_nonnegative() {
    for n in 1..=16u32 {
        for q in partitions_of(n) {
            let v = rho_plus(q.parts(), n).unwrap();
            assert_eq!(v.len(), (n / 2) as usize, "[{q}]");
            assert!(v.iter().all(|x| *x >= Rational::from_integer(0)), "[{q}] -> ({v})");
        }
    }
}

#[test]
fn xi_rows_and_columns_agree() {
    let rs = [
        rat(0, 1),
        rat(1, 4),
        rat(-1, 4),
        half(),
        rat(1, 3),
        rat(-1, 3),
        rat(49, 100),
        rat(-49, 100),
    ];
    for n in 1..=10u32 {
        for q in partitions_of(n) {
            for r in rs {
                let rows = xi_r(&q, r).unwrap();
                let cols = xi_r_columns(&q, r).unwrap();
                assert_eq!(multiset(&rows), multiset(&cols), "[{q}] r={r}");
            }
        }
    }
}

#[test]
fn xi_rejects_the_lower_endpoint() {
    assert!(xi_r(&"2,1".parse().unwrap(), -half()).is_err());
    assert!(rho_s(&"2".parse().unwrap(), &[half()]).is_err());
}

fn shift() -> impl Strategy<Value = Rational> {
    (-11i128..=11, prop::sample::select(vec![2i128, 3, 4, 5, 6, 12, 24]))
        .prop_map(|(a, d)| rat(a, d))
        .prop_filter("strictly inside (-1/2, 1/2)", |s| s.abs() < half())
}

/// Rows with shifts, sorted by row length so that the shifts line up with
/// the partition.
fn aligned(mut rows: Vec<(u32, Rational)>) -> (Partition, Vec<Rational>) {
    rows.sort_by_key(|r| std::cmp::Reverse(r.0));
    let q = Partition::from_unsorted(rows.iter().map(|r| r.0).collect());
    (q, rows.into_iter().map(|r| r.1).collect())
}

fn shifted_rows() -> impl Strategy<Value = (Partition, Vec<Rational>)> {
    prop::collection::vec((1u32..=5, shift()), 1..=4)
        .prop_filter("|q| <= 10", |rows| rows.iter().map(|r| r.0).sum::<u32>() <= 10)
        .prop_map(aligned)
}

fn antisymmetric() -> impl Strategy<Value = (Partition, Vec<Rational>)> {
    let t = prop::sample::select(vec![rat(1, 4), rat(1, 3), rat(1, 5), rat(2, 5), rat(1, 6)]);
    (prop::collection::vec(1u32..=4, 0..=3), prop::collection::vec((1u32..=3, t), 0..=2)).prop_map(|(singles, pairs)| {
        let mut rows: Vec<(u32, Rational)> = singles.into_iter().map(|q| (q, Rational::from_integer(0))).collect();
        for (q, t) in pairs {
            rows.push((q, t));
            rows.push((q, -t));
        }
        aligned(rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rho_s_is_a_xi_with_translated_shifts((q, s) in shifted_rows()) {
        let r = shifts_to_xi(&q, &s).unwrap();
        prop_assert_eq!(multiset(&rho_s(&q, &s).unwrap()), multiset(&xi_rvec(&q, &r).unwrap()));
    }

    #[test]
    fn antisymmetric_rho_s_is_symmetric_under_negation((q, s) in antisymmetric()) {
        prop_assume!(!q.is_empty());
        prop_assert!(is_antisymmetric(&q, &s).is_some());
        let v = rho_s(&q, &s).unwrap();
        prop_assert_eq!(multiset(&v), multiset(&(-&v)));
    }
}
