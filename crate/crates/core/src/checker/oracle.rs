//! Independent reference for the classical criterion: box-scan enumeration
//! and factor/Levi structure read off directly from root sets.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::induction::induce_zero_factor;
use crate::partition::{leq, ClassicalFamily, Partition};
use crate::rational::{identity, int, Rational, Vector};
use crate::rootsys::{box_scan, build_root_system, ClassicalFactor, ClassLabel, Lattice, LeviDecomposition, LieType};

use super::{check_lattice, containment_reason, CheckMode, CheckOptions, CheckReport, Hits, Verdict, Witness};

pub const ORACLE_MAX_RANK: usize = 5;
pub const ORACLE_MAX_NORM_SQ: i128 = 30;

fn support(v: &Vector) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Connected components of the coordinates `coords` under the supports of
/// `roots`, each with the roots living on it.
fn components<'a>(coords: &[usize], roots: &[&'a Vector]) -> Vec<(Vec<usize>, Vec<&'a Vector>)> {
    let n = coords.iter().max().map_or(0, |m| m + 1);
    let mut parent: Vec<usize> = (0..n).collect();
    for r in roots {
        let s = support(r);
        for w in s.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut out: Vec<(Vec<usize>, Vec<&Vector>)> = Vec::new();
    let mut rep_of: Vec<usize> = Vec::new();
    for &c in coords {
        let r = find(&mut parent, c);
        match rep_of.iter().position(|&x| x == r) {
            Some(k) => out[k].0.push(c),
            None => {
                rep_of.push(r);
                out.push((vec![c], Vec::new()));
            }
        }
    }
    for root in roots {
        let first = support(root)[0];
        let r = find(&mut parent, first);
        let k = rep_of.iter().position(|&x| x == r).expect("root inside the coordinate set");
        out[k].1.push(root);
    }
    out
}

/// Family of an irreducible component from its roots: a root on one
/// coordinate gives `B` (`±e_i`) or `C` (`±2e_i`); a pair of coordinates
/// carrying both `e_i − e_j` and `e_i + e_j` gives `D`; otherwise `gl`, with
/// signs propagated along the roots.
fn classify(coords: &[usize], roots: &[&Vector]) -> (ClassicalFamily, Vec<i8>) {
    let mut same = BTreeSet::new();
    let mut opposite = BTreeSet::new();
    for r in roots {
        let s = support(r);
        if s.len() == 1 {
            let fam = if r[s[0]] == int(1) || r[s[0]] == int(-1) { ClassicalFamily::B } else { ClassicalFamily::C };
            return (fam, vec![1; coords.len()]);
        }
        if r[s[0]] == r[s[1]] {
            same.insert((s[0], s[1]));
        } else {
            opposite.insert((s[0], s[1]));
        }
    }
    if !same.is_disjoint(&opposite) {
        return (ClassicalFamily::D, vec![1; coords.len()]);
    }
    let mut signs: Vec<Option<i8>> = vec![None; coords.len()];
    signs[0] = Some(1);
    let pos = |i: usize| coords.iter().position(|&c| c == i).expect("coordinate");
    let mut changed = true;
    while changed {
        changed = false;
        for r in roots {
            let s = support(r);
            let (a, b) = (pos(s[0]), pos(s[1]));
            let flip: i8 = if r[s[0]] == r[s[1]] { -1 } else { 1 };
            match (signs[a], signs[b]) {
                (Some(x), None) => {
                    signs[b] = Some(x * flip);
                    changed = true;
                }
                (None, Some(y)) => {
                    signs[a] = Some(y * flip);
                    changed = true;
                }
                _ => {}
            }
        }
    }
    (ClassicalFamily::A, signs.into_iter().map(|s| s.unwrap_or(1)).collect())
}

/// Richardson orbit of the centralizer of `nu` inside a factor given by its
/// coordinates, family and root set.
fn induced_orbit(nu: &Vector, family: ClassicalFamily, coords: &[usize], roots: &[&Vector]) -> Result<Partition> {
    let vanishing: Vec<&Vector> = roots.iter().copied().filter(|r| r.dot(nu).is_zero()).collect();
    let mut blocks = Vec::new();
    let mut residual = 0;
    for (comp, rs) in components(coords, &vanishing) {
        let (fam, _) = classify(&comp, &rs);
        if family != ClassicalFamily::A && fam != ClassicalFamily::A {
            residual += comp.len();
        } else {
            blocks.push(comp.len());
        }
    }
    induce_zero_factor(&LeviDecomposition::from_sizes(family, &blocks, residual)?)
}

/// Brute-force version of [`super::mild_check_classical`]: every point of a
/// coefficient box is filtered exactly and everything is recomputed per
/// point.
pub fn brute_force_mild_oracle(lambda: &Vector, t: LieType, lattice: &Lattice, opts: &CheckOptions) -> Result<CheckReport> {
    let start = Instant::now();
    if !t.is_classical() {
        return Err(Error::NonClassicalType(t.to_string()));
    }
    t.check_dim(lambda)?;
    check_lattice(t, lattice)?;
    let r2 = lambda.dot(lambda);
    if t.rank > ORACLE_MAX_RANK || r2 > int(ORACLE_MAX_NORM_SQ) {
        return Err(Error::BoundExceeded(format!(
            "oracle handles rank <= {ORACLE_MAX_RANK} and norm^2 <= {ORACLE_MAX_NORM_SQ}, got {t} with {r2}"
        )));
    }
    let rs = build_root_system(t);
    // Roots of ǧ are the coroots of 𝔤 in these coordinates.
    let integral: Vec<&Vector> = rs.coroots.iter().filter(|a| a.dot(lambda).is_integer()).collect();
    let all: Vec<usize> = (0..t.dim()).collect();
    let factors: Vec<(ClassicalFamily, Vec<usize>, Vec<&Vector>)> = components(&all, &integral)
        .into_iter()
        .map(|(coords, roots)| (classify(&coords, &roots).0, coords, roots))
        .collect();
    let orbit_lambda: Vec<Partition> = factors
        .iter()
        .map(|(f, c, r)| induced_orbit(lambda, *f, c, r))
        .collect::<Result<_>>()?;

    let points = box_scan(lambda, lattice, &identity(t.dim()), &r2, true)?;
    if let Some(cap) = opts.max_points {
        if points.len() as u64 > cap {
            return Err(Error::PointCapExceeded { cap });
        }
    }
    let mut hits = Hits::new(opts.witness_limit);
    for nu in &points {
        let orbits: Vec<Partition> = factors
            .iter()
            .map(|(f, c, r)| induced_orbit(nu, *f, c, r))
            .collect::<Result<_>>()?;
        if orbit_lambda.iter().zip(&orbits).all(|(a, b)| leq(a, b)) {
            let norm: Rational = nu.dot(nu);
            hits.push_with(nu.clone(), |nu| Witness { nu: nu.clone(), norm_sq: norm, reason: containment_reason(&orbits) });
        }
    }
    let (witness_count, witnesses) = hits.into_parts();
    let names = factors
        .iter()
        .map(|(f, c, _)| {
            ClassicalFactor { family: *f, coords: c.clone(), signs: vec![1; c.len()], label: ClassLabel::Whole }.name()
        })
        .collect();
    Ok(CheckReport {
        verdict: if witness_count == 0 { Verdict::Pass } else { Verdict::Fail },
        mode: CheckMode::Oracle,
        lie_type: t,
        lattice: lattice.clone(),
        lambda: lambda.clone(),
        norm_sq_lambda: r2,
        points_scanned: points.len() as u64,
        canonicalized: false,
        pseudo_levi: names,
        orbit_lambda,
        n_lambda: None,
        witness_count,
        witnesses,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::mild_check_classical;
    use crate::rootsys::{lattice_preset, LatticePreset};

    fn both(lambda: &str, t: &str, preset: LatticePreset) -> (CheckReport, CheckReport) {
        let t: LieType = t.parse().unwrap();
        let l = lattice_preset(t, preset).unwrap();
        let lambda: Vector = lambda.parse().unwrap();
        let o = CheckOptions::default();
        (brute_force_mild_oracle(&lambda, t, &l, &o).unwrap(), mild_check_classical(&lambda, t, &l, &o).unwrap())
    }

    #[test]
    fn examples() {
        let (o, _) = both("1/2", "C1", LatticePreset::Root);
        assert_eq!(o.verdict, Verdict::Pass);
        let (o, c) = both("1,0", "B2", LatticePreset::Root);
        assert_eq!(o.verdict, c.verdict);
        let (o, _) = both("5/2,3/2,1/2", "D3", LatticePreset::Weight);
        assert_eq!(o.verdict, Verdict::Fail);
        assert!(o.witnesses.iter().any(|w| w.nu.to_string() == "2,1,0"));
    }

    #[test]
    fn factors_match_the_class_decomposition() {
        let (o, c) = both("7/2,5/2,3/2,1/2", "D4", LatticePreset::Root);
        assert_eq!(o.pseudo_levi, vec!["so(8)"]);
        assert_eq!(o.orbit_lambda, c.orbit_lambda);
        let (o, _) = both("1/3,2/3,1", "B3", LatticePreset::Root);
        assert_eq!(o.pseudo_levi, vec!["gl(2)", "sp(2)"]);
        // Sign-twisted gl: both root shapes occur, never on the same pair.
        let (o, c) = both("-4/3,2/3,-2/3,-2/3", "C4", LatticePreset::Weight);
        assert_eq!(o.pseudo_levi, vec!["gl(4)"]);
        assert_eq!(o.orbit_lambda, c.orbit_lambda);
    }

    #[test]
    fn bounds_are_enforced() {
        let t: LieType = "A6".parse().unwrap();
        let l = lattice_preset(t, LatticePreset::Root).unwrap();
        let lambda = Vector::zeros(7);
        assert!(matches!(
            brute_force_mild_oracle(&lambda, t, &l, &CheckOptions::default()),
            Err(Error::BoundExceeded(_))
        ));
    }
}
