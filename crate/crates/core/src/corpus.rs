//! Reproducible instance sets for the classical checker: the families of
//! characters known to be mildly unipotent, and a random set for comparing
//! the checker against the brute-force oracle.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::infchar::{
    metaplectic_infchar, n_prime, positive_half, q_unipotent_infchar, rho_s, xi_r, xi_rvec, QUnipotentSpec, Variant,
};
use crate::partition::{partitions_of, ClassicalFamily, Partition};
use crate::rational::{half, int, rat, Rational, Vector};
use crate::rootsys::{lattice_preset, Family, Lattice, LatticePreset, LieType};

pub const ORACLE_CORPUS_SEED: u64 = 0x6f72_6269_7464_7561;
pub const RTUPLE_SEED: u64 = 0x7274_7570_6c65;
pub const ORACLE_CORPUS_SIZE: usize = 200;
pub const RTUPLE_COUNT: usize = 50;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub label: String,
    pub lie_type: LieType,
    pub lambda: Vector,
    pub lattice: Lattice,
}

fn instance(label: String, t: LieType, lambda: Vector, preset: LatticePreset) -> Result<Instance> {
    Ok(Instance { label, lie_type: t, lambda, lattice: lattice_preset(t, preset)? })
}

/// `g` of rank `n` whose dual embeds in `sl(N′)` for the given `N′`.
fn q_unipotent_types(np: u32) -> Vec<LieType> {
    let n = (np / 2) as usize;
    let fams: &[ClassicalFamily] =
        if np % 2 == 1 { &[ClassicalFamily::B, ClassicalFamily::C] } else { &[ClassicalFamily::D] };
    fams.iter().filter_map(|&f| LieType::classical(f, n).ok()).collect()
}

/// Every partition of `N′ ∈ {5,…,9}` against each classical `g` of rank
/// `≤ 4` with that `N′`, root lattice; both variants for all-even `q` in
/// type `D`.
pub fn q_unipotent_corpus() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for np in 5..=9 {
        for t in q_unipotent_types(np) {
            debug_assert_eq!(n_prime(t)?, np);
            for q in partitions_of(np) {
                let mut variants = vec![Variant::Default];
                if t.family == Family::D && q.parts().iter().all(|p| p % 2 == 0) {
                    variants.push(Variant::Outer);
                }
                for variant in variants {
                    let spec = QUnipotentSpec { rows: q.parts().to_vec(), g_type: t, variant };
                    let lambda = q_unipotent_infchar(&spec)?.dominant;
                    out.push(instance(format!("{t} q=[{q}] {variant}"), t, lambda, LatticePreset::Root)?);
                }
            }
        }
    }
    Ok(out)
}

/// `q ∈ P_C(2n)`, `n ≤ 4`, in `C_n` with the root lattice.
pub fn metaplectic_corpus() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=4u32 {
        let t = LieType::classical(ClassicalFamily::C, n as usize)?;
        for q in partitions_of(2 * n).into_iter().filter(|q| q.is_eps_partition(crate::Epsilon::Symplectic)) {
            let lambda = metaplectic_infchar(&q)?.dominant;
            out.push(instance(format!("{t} q=[{q}]"), t, lambda, LatticePreset::Root)?);
        }
    }
    Ok(out)
}

/// `ξ_r(q)` in `gl(n)` (type `A_{n-1}`, lattice `ℤ^n`) for every partition of
/// `2 ≤ n ≤ 6` and `r ∈ {0, ¼, ½}`.
pub fn type_a_corpus() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 2..=6u32 {
        let t = LieType::new(Family::A, (n - 1) as usize)?;
        for q in partitions_of(n) {
            for r in [Rational::zero(), rat(1, 4), half()] {
                let lambda = xi_r(&q, r)?.sorted_desc();
                out.push(instance(format!("{t} q=[{q}] r={r}"), t, lambda, LatticePreset::Integer)?);
            }
        }
    }
    Ok(out)
}

fn r_grid() -> Vec<Rational> {
    [(-2, 5), (-1, 3), (-1, 4), (0, 1), (1, 5), (1, 4), (1, 3), (1, 2)].iter().map(|&(a, b)| rat(a, b)).collect()
}

/// Random `ξ_𝐫(q)` in `gl(n)`, `2 ≤ n ≤ 6`, with `r_i` drawn from a fixed
/// grid in `(−½, ½]`.
pub fn rtuple_corpus(count: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = r_grid();
    let mut out = Vec::new();
    for k in 0..count {
        let n: u32 = rng.gen_range(2..=6);
        let parts = partitions_of(n);
        let q = parts.choose(&mut rng).expect("partitions exist").clone();
        let r: Vec<Rational> = (0..q.len()).map(|_| *grid.choose(&mut rng).expect("grid")).collect();
        let t = LieType::new(Family::A, (n - 1) as usize)?;
        let lambda = xi_rvec(&q, &r)?.sorted_desc();
        let rs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push(instance(format!("#{k} {t} q=[{q}] r=({})", rs.join(",")), t, lambda, LatticePreset::Integer)?);
    }
    Ok(out)
}

/// All antisymmetric shift vectors for `q` using the shifts `¼` and `⅓`:
/// each shift is either unused or attached to a nonempty set of pairs of
/// equal parts.
fn antisymmetric_shifts(q: &Partition) -> Vec<Vec<Rational>> {
    let parts = q.parts();
    let mut values: Vec<u32> = parts.to_vec();
    values.dedup();
    // Pair counts per distinct value for each of the two shifts.
    let caps: Vec<usize> = values.iter().map(|&v| q.multiplicity(v) / 2).collect();
    let mut choices: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    fn counts(caps: &[usize]) -> Vec<Vec<usize>> {
        caps.iter().fold(vec![Vec::new()], |acc, &c| {
            acc.into_iter()
                .flat_map(|prefix| {
                    (0..=c).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect()
        })
    }
    for a in counts(&caps) {
        let rest: Vec<usize> = caps.iter().zip(&a).map(|(c, k)| c - k).collect();
        for b in counts(&rest) {
            choices.push((a.clone(), b));
        }
    }
    let shifts = [rat(1, 4), rat(1, 3)];
    let mut out = Vec::new();
    for (a, b) in choices {
        let mut s = vec![Rational::zero(); parts.len()];
        for (vi, &v) in values.iter().enumerate() {
            let idx: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] == v).collect();
            let mut it = idx.into_iter();
            for (count, t) in [(a[vi], shifts[0]), (b[vi], shifts[1])] {
                for _ in 0..count {
                    s[it.next().expect("pair")] = t;
                    s[it.next().expect("pair")] = -t;
                }
            }
        }
        out.push(s);
    }
    out
}

/// `ρ_𝐬(q)` for antisymmetric `(q, 𝐬)` with shifts in `{¼, ⅓}` where `q`
/// is an orbit of `ǧ`: `|q| = 2n+1` in `C_n`, `|q| = 2n` in `B_n` and `D_n`,
/// `n ≤ 4`, root lattice.
pub fn antisymmetric_corpus() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for size in 2..=9u32 {
        let n = (size / 2) as usize;
        let fams: &[ClassicalFamily] =
            if size % 2 == 1 { &[ClassicalFamily::C] } else { &[ClassicalFamily::B, ClassicalFamily::D] };
        for &g in fams {
            let Ok(t) = LieType::classical(g, n) else { continue };
            let dual = t.dual_family().expect("classical");
            let eps = dual.epsilon().expect("orthogonal or symplectic");
            for q in partitions_of(size).into_iter().filter(|q| q.is_eps_partition(eps)) {
                for s in antisymmetric_shifts(&q) {
                    debug_assert!(crate::infchar::is_antisymmetric(&q, &s).is_some());
                    let lambda = positive_half(&rho_s(&q, &s)?, n);
                    let ss: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                    out.push(instance(format!("{t} q=[{q}] s=({})", ss.join(",")), t, lambda, LatticePreset::Root)?);
                }
            }
        }
    }
    Ok(out)
}

/// Random classical `(λ, L)` of rank `≤ 4` within the oracle's bounds.
/// Coordinates are drawn from `{a/d : d ∈ {1,2,3,4}, |a/d| ≤ 5/2}`;
/// lattices from the presets.
pub fn oracle_corpus(count: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let types: Vec<LieType> = ["A1", "A2", "A3", "B2", "B3", "B4", "C2", "C3", "C4", "D2", "D3", "D4"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let presets = [LatticePreset::Root, LatticePreset::Integer, LatticePreset::Weight];
    let mut out = Vec::new();
    while out.len() < count {
        let t = *types.choose(&mut rng).expect("types");
        let preset = *presets.choose(&mut rng).expect("presets");
        // Coordinates mostly share a denominator, as characters do.
        let d: i128 = *[1, 2, 2, 3, 4].choose(&mut rng).expect("denominators");
        let lambda: Vector = (0..t.dim())
            .map(|_| {
                let dd = if rng.gen_bool(0.2) { *[1i128, 2, 3, 4].choose(&mut rng).expect("d") } else { d };
                let lim = 5 * dd / 2;
                rat(rng.gen_range(-lim..=lim), dd)
            })
            .collect();
        let r2 = lambda.dot(&lambda);
        if r2 > int(crate::checker::ORACLE_MAX_NORM_SQ) || (t.rank == 4 && r2 > int(16)) {
            continue;
        }
        let k = out.len();
        out.push(instance(format!("#{k} {t} {preset} ({lambda})"), t, lambda, preset)?);
    }
    Ok(out)
}
