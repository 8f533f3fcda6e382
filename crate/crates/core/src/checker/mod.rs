//! Mild-unipotence checks: the classical induced-orbit criterion, the
//! exceptional root-count test, an independent brute-force oracle and the
//! norm comparison harness.

mod canonical;
mod exceptional;
mod harness;
mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::induction::induce_zero_factor;
use crate::partition::{leq, ClassicalFamily, Partition};
use crate::rational::{Rational, Vector};
use crate::rootsys::{
    build_root_system, centralizer_levi, integral_pseudo_levi, BallEnumerator, ClassicalFactor, Lattice, LieType,
};

pub use exceptional::mild_check_exceptional;
pub use harness::{norm_comparison_harness, NormComparisonReport, NormViolation, DEFAULT_HARNESS_MAX_RANK};
pub use oracle::{brute_force_mild_oracle, ORACLE_MAX_NORM_SQ, ORACLE_MAX_RANK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    SufficientPass,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Classical,
    Exceptional,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub nu: Vector,
    #[serde(with = "crate::rational::as_string")]
    pub norm_sq: Rational,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub mode: CheckMode,
    pub lie_type: LieType,
    pub lattice: Lattice,
    pub lambda: Vector,
    #[serde(with = "crate::rational::as_string")]
    pub norm_sq_lambda: Rational,
    pub points_scanned: u64,
    /// Whether classical enumeration ran over sign/permutation
    /// representatives only.
    pub canonicalized: bool,
    /// Factors of `ǧ_Λ` (classical modes).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pseudo_levi: Vec<String>,
    /// `Ind 0` of the centralizer of `λ`, per factor (classical modes).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbit_lambda: Vec<Partition>,
    /// Number of roots vanishing on `λ` (exceptional mode).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_lambda: Option<usize>,
    pub witness_count: u64,
    pub witnesses: Vec<Witness>,
    pub wall_time: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub jobs: usize,
    /// Hard cap on points scanned; `None` disables it.
    pub max_points: Option<u64>,
    pub canonicalize: bool,
    /// At most this many witnesses are reported (the smallest in
    /// lexicographic order); `witness_count` always holds the total.
    pub witness_limit: usize,
}

pub const DEFAULT_MAX_POINTS: u64 = 1_000_000_000;
pub const DEFAULT_WITNESS_LIMIT: usize = 1000;

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            jobs: 1,
            max_points: Some(DEFAULT_MAX_POINTS),
            canonicalize: true,
            witness_limit: DEFAULT_WITNESS_LIMIT,
        }
    }
}

/// Bounded, lexicographically ordered witness collection.
#[derive(Clone, Debug)]
pub(crate) struct Hits {
    count: u64,
    limit: usize,
    best: BTreeMap<Vector, Witness>,
}

impl Hits {
    pub(crate) fn new(limit: usize) -> Self {
        Hits { count: 0, limit: limit.max(1), best: BTreeMap::new() }
    }

    fn wants(&self, nu: &Vector) -> bool {
        self.best.len() < self.limit || self.best.last_key_value().is_some_and(|(k, _)| nu < k)
    }

    pub(crate) fn push_with(&mut self, nu: Vector, make: impl FnOnce(&Vector) -> Witness) {
        self.count += 1;
        if self.wants(&nu) {
            let w = make(&nu);
            self.best.insert(nu, w);
            if self.best.len() > self.limit {
                self.best.pop_last();
            }
        }
    }

    pub(crate) fn merge(&mut self, other: Hits) {
        self.count += other.count;
        for (k, w) in other.best {
            if self.wants(&k) {
                self.best.insert(k, w);
                if self.best.len() > self.limit {
                    self.best.pop_last();
                }
            }
        }
    }

    pub(crate) fn into_parts(self) -> (u64, Vec<Witness>) {
        (self.count, self.best.into_values().collect())
    }
}

/// Rejects lattices that do not pair integrally with every coroot; for
/// those the integral root system would vary along the coset.
pub(crate) fn check_lattice(t: LieType, lattice: &Lattice) -> Result<()> {
    lattice.check_dim(t)?;
    let rs = build_root_system(t);
    for b in &lattice.basis {
        if let Some(a) = rs.coroots.iter().find(|a| !rs.pairing(b, a).is_integer()) {
            return Err(Error::InvalidLattice(format!(
                "basis vector ({b}) pairs non-integrally with the coroot ({a})"
            )));
        }
    }
    Ok(())
}

/// `Ind 0` of the centralizer of `v` inside one factor.
pub(crate) fn factor_orbit(v: &Vector, f: &ClassicalFactor) -> Result<Partition> {
    induce_zero_factor(&centralizer_levi(&f.local(v), f))
}

/// Sign/permutation-invariant key of `v` on a factor: sorted `|v_i|` for
/// orthogonal and symplectic factors, sorted `σ_i v_i` for `gl` factors.
fn factor_key(v: &Vector, f: &ClassicalFactor) -> Vec<Rational> {
    let mut key: Vec<Rational> = f
        .coords
        .iter()
        .zip(&f.signs)
        .map(|(&i, &s)| {
            if f.family == ClassicalFamily::A {
                v[i] * Rational::from_integer(s as i128)
            } else {
                num_traits::Signed::abs(&v[i])
            }
        })
        .collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    key
}

pub(crate) fn format_orbits(orbits: &[Partition]) -> String {
    orbits.iter().map(|p| format!("[{p}]")).collect::<Vec<_>>().join(" ")
}

pub(crate) fn containment_reason(orbits: &[Partition]) -> String {
    format!("Ind orbit {} contains the orbit of lambda", format_orbits(orbits))
}

pub(crate) struct Classical {
    pub factors: Vec<ClassicalFactor>,
    pub orbit_lambda: Vec<Partition>,
}

impl Classical {
    pub(crate) fn new(lambda: &Vector, t: LieType) -> Result<Self> {
        let factors = integral_pseudo_levi(lambda, t)?;
        let orbit_lambda = factors.iter().map(|f| factor_orbit(lambda, f)).collect::<Result<Vec<_>>>()?;
        Ok(Classical { factors, orbit_lambda })
    }

    pub(crate) fn names(&self) -> Vec<String> {
        self.factors.iter().map(|f| format!("{} [{}]", f.name(), f.label)).collect()
    }
}

/// Classical criterion: `λ` passes iff no `ν ∈ λ + L` with `‖ν‖ < ‖λ‖`
/// has `Ind_{ǧ_ν} 0 ⪰ Ind_{ǧ_λ} 0` in every factor of `ǧ_Λ`.
pub fn mild_check_classical(lambda: &Vector, t: LieType, lattice: &Lattice, opts: &CheckOptions) -> Result<CheckReport> {
    let start = Instant::now();
    if !t.is_classical() {
        return Err(Error::NonClassicalType(t.to_string()));
    }
    t.check_dim(lambda)?;
    check_lattice(t, lattice)?;
    let ctx = Classical::new(lambda, t)?;
    let r2 = lambda.dot(lambda);
    let coord = if opts.canonicalize { lattice.classify(t.family == crate::rootsys::Family::A) } else { None };
    let (scanned, hits) = match coord {
        Some(c) => canonical::scan(lambda, &ctx, c, &r2, opts)?,
        None => full_scan(lambda, t, lattice, &ctx, &r2, opts)?,
    };
    let (witness_count, witnesses) = hits.into_parts();
    Ok(CheckReport {
        verdict: if witness_count == 0 { Verdict::Pass } else { Verdict::Fail },
        mode: CheckMode::Classical,
        lie_type: t,
        lattice: lattice.clone(),
        lambda: lambda.clone(),
        norm_sq_lambda: r2,
        points_scanned: scanned,
        canonicalized: coord.is_some(),
        pseudo_levi: ctx.names(),
        orbit_lambda: ctx.orbit_lambda,
        n_lambda: None,
        witness_count,
        witnesses,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn full_scan(
    lambda: &Vector,
    t: LieType,
    lattice: &Lattice,
    ctx: &Classical,
    r2: &Rational,
    opts: &CheckOptions,
) -> Result<(u64, Hits)> {
    let form = crate::rational::identity(t.dim());
    let en = BallEnumerator::new(lambda, lattice, &form, r2, true)?;
    type Acc = (u64, Hits, HashMap<(usize, Vec<Rational>), Partition>);
    let accs = en.par_fold(
        opts.jobs,
        opts.max_points,
        || -> Acc { (0, Hits::new(opts.witness_limit), HashMap::new()) },
        |acc: &mut Acc, coeffs, scaled| {
            acc.0 += 1;
            let nu = en.point(coeffs);
            let mut orbits = Vec::with_capacity(ctx.factors.len());
            for (i, (f, t_lambda)) in ctx.factors.iter().zip(&ctx.orbit_lambda).enumerate() {
                let key = (i, factor_key(&nu, f));
                let orbit = match acc.2.get(&key) {
                    Some(p) => p.clone(),
                    None => {
                        let p = factor_orbit(&nu, f)?;
                        acc.2.insert(key, p.clone());
                        p
                    }
                };
                if !leq(t_lambda, &orbit) {
                    return Ok(());
                }
                orbits.push(orbit);
            }
            let norm = en.norm(scaled);
            acc.1.push_with(nu, |nu| Witness { nu: nu.clone(), norm_sq: norm, reason: containment_reason(&orbits) });
            Ok(())
        },
    )?;
    let mut total = 0;
    let mut hits = Hits::new(opts.witness_limit);
    for (n, h, _) in accs {
        total += n;
        hits.merge(h);
    }
    Ok((total, hits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{lattice_preset, LatticePreset};

    fn v(s: &str) -> Vector {
        s.parse().unwrap()
    }

    fn run(lambda: &str, t: &str, preset: LatticePreset, canonicalize: bool) -> CheckReport {
        let t: LieType = t.parse().unwrap();
        let l = lattice_preset(t, preset).unwrap();
        let opts = CheckOptions { canonicalize, ..CheckOptions::default() };
        mild_check_classical(&v(lambda), t, &l, &opts).unwrap()
    }

    #[test]
    fn d3_weight_lattice_fails_at_rho() {
        for canon in [true, false] {
            let r = run("5/2,3/2,1/2", "D3", LatticePreset::Weight, canon);
            assert_eq!(r.verdict, Verdict::Fail);
            assert!(r.witnesses.iter().any(|w| w.nu == v("2,1,0")), "{:?}", r.witnesses);
            let r = run("5/2,3/2,1/2", "D3", LatticePreset::Root, canon);
            assert_eq!(r.verdict, Verdict::Pass);
            assert!(r.witnesses.is_empty());
        }
    }

    #[test]
    fn canonical_witness_is_the_regular_integral_point() {
        let r = run("5/2,3/2,1/2", "D3", LatticePreset::Weight, true);
        assert_eq!(r.witness_count, 1);
        assert_eq!(r.witnesses[0].nu, v("2,1,0"));
        assert_eq!(r.witnesses[0].norm_sq, Rational::from_integer(5));
    }

    #[test]
    fn zero_has_an_empty_ball() {
        let r = run("0,0", "C2", LatticePreset::Root, true);
        assert_eq!((r.verdict, r.points_scanned), (Verdict::Pass, 0));
    }

    #[test]
    fn exceptional_types_are_rejected() {
        let t: LieType = "G2".parse().unwrap();
        let l = lattice_preset(t, LatticePreset::Root).unwrap();
        assert!(matches!(
            mild_check_classical(&v("1,1"), t, &l, &CheckOptions::default()),
            Err(Error::NonClassicalType(_))
        ));
    }

    #[test]
    fn non_integral_lattices_are_rejected() {
        let t: LieType = "C2".parse().unwrap();
        let l = Lattice::new(vec![v("1/2,1/2"), v("0,1")], None).unwrap();
        assert!(matches!(
            mild_check_classical(&v("1,0"), t, &l, &CheckOptions::default()),
            Err(Error::InvalidLattice(_))
        ));
    }

    #[test]
    fn point_cap_is_a_hard_error() {
        let t: LieType = "B3".parse().unwrap();
        let l = lattice_preset(t, LatticePreset::Root).unwrap();
        let opts = CheckOptions { max_points: Some(3), canonicalize: false, ..CheckOptions::default() };
        assert_eq!(
            mild_check_classical(&v("5,3,1"), t, &l, &opts),
            Err(Error::PointCapExceeded { cap: 3 })
        );
    }
}
