use proptest::prelude::*;

use orbitdual::induction::{induce_zero, induce_zero_factor, orbit_dimension, orbit_tuple_leq, OrbitTuple};
use orbitdual::rootsys::{ClassLabel, ClassicalFactor, LeviDecomposition};
use orbitdual::{ClassicalFamily, Partition};

use ClassicalFamily::{A, B, C, D};

fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (1..=k)
        .flat_map(|first| {
            compositions(k - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn type_a_induction_is_the_transpose() {
    for n in 1..=10 {
        for blocks in compositions(n) {
            let got = induce_zero_factor(&LeviDecomposition::from_sizes(A, &blocks, 0).unwrap()).unwrap();
            let sizes = Partition::from_unsorted(blocks.iter().map(|&c| c as u32).collect());
            assert_eq!(got, sizes.transpose());
            let summed = blocks.iter().fold(Partition::empty(), |acc, &c| acc.add_rows(&Partition::ones(c as u32)));
            assert_eq!(got, summed, "{blocks:?}");
        }
    }
}

fn ambient_positive_roots(f: ClassicalFamily, n: usize) -> usize {
    match f {
        A => n * (n - 1) / 2,
        _ => LeviDecomposition::from_sizes(f, &[], n).unwrap().positive_roots(),
    }
}

fn levi() -> impl Strategy<Value = (ClassicalFamily, Vec<usize>, usize)> {
    (prop::sample::select(vec![A, B, C, D]), 1usize..=7).prop_flat_map(|(f, n)| {
        let residual = if f == A { Just(0).boxed() } else { (0..=n).boxed() };
        residual.prop_flat_map(move |res| {
            let k = n - res;
            prop::sample::select(compositions(k)).prop_map(move |b| (f, b, res))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn induction_ignores_block_order((f, blocks, res) in levi(), seed in any::<u64>()) {
        let base = induce_zero_factor(&LeviDecomposition::from_sizes(f, &blocks, res).unwrap()).unwrap();
        let mut shuffled = blocks.clone();
        let k = shuffled.len();
        for i in (1..k).rev() {
            shuffled.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let other = induce_zero_factor(&LeviDecomposition::from_sizes(f, &shuffled, res).unwrap()).unwrap();
        prop_assert_eq!(other, base);
    }

    #[test]
    fn induced_dimension_counts_roots_outside_the_levi((f, blocks, res) in levi()) {
        let levi = LeviDecomposition::from_sizes(f, &blocks, res).unwrap();
        let n = levi.ambient_rank;
        prop_assume!(n <= 6);
        let d = induce_zero_factor(&levi).unwrap();
        let eps = f.epsilon();
        prop_assert!(eps.is_none_or(|e| d.is_eps_partition(e)), "[{}] not an orbit of {}", d, f);
        prop_assert_eq!(orbit_dimension(f, &d), 2 * (ambient_positive_roots(f, n) - levi.positive_roots()) as u64);
    }
}

fn tuple(parts: &[(&str, ClassicalFamily, usize)]) -> OrbitTuple {
    let mut next = 0;
    OrbitTuple {
        entries: parts
            .iter()
            .map(|(p, f, n)| {
                let coords: Vec<usize> = (next..next + n).collect();
                next += n;
                let factor = ClassicalFactor { family: *f, coords, signs: vec![1; *n], label: ClassLabel::Whole };
                (factor, p.parse().unwrap())
            })
            .collect(),
    }
}

#[test]
fn tuple_order_is_componentwise() {
    let a = tuple(&[("9,1", D, 5), ("5,5", D, 5)]);
    let b = tuple(&[("5,5", D, 5), ("9,1", D, 5)]);
    let zero = tuple(&[("1,1,1,1,1,1,1,1,1,1", D, 5), ("1,1,1,1,1,1,1,1,1,1", D, 5)]);
    assert!(orbit_tuple_leq(&a, &a).unwrap());
    assert!(!orbit_tuple_leq(&a, &b).unwrap() && !orbit_tuple_leq(&b, &a).unwrap());
    assert!(orbit_tuple_leq(&zero, &a).unwrap() && orbit_tuple_leq(&zero, &b).unwrap());
    let other = tuple(&[("9,1", D, 5)]);
    assert!(orbit_tuple_leq(&a, &other).is_err());
}

#[test]
fn induce_zero_keeps_factor_order() {
    let f1 = ClassicalFactor { family: B, coords: vec![0, 1], signs: vec![1, 1], label: ClassLabel::Integer };
    let f2 = ClassicalFactor { family: A, coords: vec![2], signs: vec![1], label: ClassLabel::Pair("1/3".parse().unwrap()) };
    let t = induce_zero(&[
        (f1.clone(), LeviDecomposition::from_sizes(B, &[1, 1], 0).unwrap()),
        (f2.clone(), LeviDecomposition::from_sizes(A, &[1], 0).unwrap()),
    ])
    .unwrap();
    assert_eq!(t.entries[0].0, f1);
    assert_eq!(t.entries[0].1, "5".parse().unwrap());
    assert_eq!(t.entries[1].1, "1".parse().unwrap());
}
