use proptest::prelude::*;

use orbitdual::partition::{brute_collapse_oracle, leq, partitions_of};
use orbitdual::{ClassicalFamily, Epsilon, Partition};

const FAMILIES: [ClassicalFamily; 3] = [ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D];

#[test]
fn transpose_is_an_involution() {
    for n in 0..=20 {
        for d in partitions_of(n) {
            assert_eq!(d.transpose().transpose(), d);
            assert_eq!(d.transpose().size(), n);
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=14 {
        let ps = partitions_of(n);
        let rel: Vec<Vec<bool>> = ps.iter().map(|a| ps.iter().map(|b| leq(a, b)).collect()).collect();
        for i in 0..ps.len() {
            assert!(rel[i][i]);
            for j in 0..ps.len() {
                if i != j && rel[i][j] {
                    assert!(!rel[j][i], "[{}] and [{}]", ps[i], ps[j]);
                }
                if !rel[i][j] {
                    continue;
                }
                for k in 0..ps.len() {
                    if rel[j][k] {
                        assert!(rel[i][k], "[{}] [{}] [{}]", ps[i], ps[j], ps[k]);
                    }
                }
            }
        }
    }
}

#[test]
fn collapse_is_the_largest_member_below() {
    for n in 1..=14 {
        for d in partitions_of(n) {
            for f in FAMILIES {
                if !f.accepts_size(n) {
                    continue;
                }
                let c = d.collapse(f).unwrap();
                let eps = f.epsilon().unwrap();
                assert!(c.is_eps_partition(eps), "[{d}] {f} -> [{c}]");
                assert!(leq(&c, &d));
                assert_eq!(c.collapse(f).unwrap(), c);
                assert_eq!(c, brute_collapse_oracle(&d, f).unwrap());
            }
        }
    }
}

#[test]
fn special_classes_are_eps_partitions() {
    for n in 1..=14 {
        for d in partitions_of(n) {
            for eps in [Epsilon::Orthogonal, Epsilon::Symplectic] {
                for e2 in [0, 1] {
                    if d.is_special_class(eps, e2) {
                        assert!(d.is_eps_partition(eps));
                    }
                }
            }
            if d.is_special_class(Epsilon::Orthogonal, 1) {
                assert_eq!(n % 2, 1, "[{d}]");
            }
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..9, 0..10).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn text_round_trip(d in partition()) {
        let back: Partition = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn collapse_below_and_idempotent(d in partition()) {
        for f in FAMILIES {
            if !f.accepts_size(d.size()) {
                continue;
            }
            let c = d.collapse(f).unwrap();
            prop_assert!(leq(&c, &d));
            prop_assert_eq!(c.collapse(f).unwrap(), c.clone());
            if d.is_eps_partition(f.epsilon().unwrap()) {
                prop_assert_eq!(c, d.clone());
            }
        }
    }

    #[test]
    fn dominance_flips_under_transpose((a, b) in (1u32..=16).prop_flat_map(|n| {
        let ps = partitions_of(n);
        (prop::sample::select(ps.clone()), prop::sample::select(ps))
    })) {
        prop_assert_eq!(leq(&a, &b), leq(&b.transpose(), &a.transpose()));
    }
}
