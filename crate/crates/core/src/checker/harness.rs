//! Exhaustive check of the norm bound `‖ν‖ ≥ ‖½h_Ǒ‖` for integral `ν`
//! whose Richardson orbit contains `Ǒ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::infchar::{half_h, positive_half};
use crate::partition::{leq, partitions_of, ClassicalFamily, Partition};
use crate::rational::{half, int, Rational, Vector};
use crate::rootsys::{ClassicalFactor, LieType};

use super::factor_orbit;

pub const DEFAULT_HARNESS_MAX_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormViolation {
    pub nu: Vector,
    pub orbit: Partition,
    pub induced: Partition,
    #[serde(with = "crate::rational::as_string")]
    pub norm_sq_nu: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub norm_sq_half_h: Rational,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormComparisonReport {
    pub lie_type: LieType,
    #[serde(with = "crate::rational::as_string")]
    pub max_radius_sq: Rational,
    /// Dominant integral `ν` examined.
    pub vectors: u64,
    /// `(ν, Ǒ)` pairs with `Ǒ ⪯ Ind_{ǧ_ν} 0`.
    pub pairs: u64,
    /// Pairs with `‖ν‖ = ‖½h_Ǒ‖`.
    pub equality_cases: u64,
    pub violations: Vec<NormViolation>,
    pub passed: bool,
}

/// Dominant representatives: nonincreasing tuples of length `n` from
/// `base + ℤ` (nonnegative unless `signed`) with squared sum `≤ r2`.
fn dominant_points(n: usize, base: Rational, signed: bool, r2: &Rational) -> Vec<Vector> {
    let top = r2.floor().to_integer() + 1;
    let vals: Vec<Rational> = (-top..=top)
        .rev()
        .map(|m| base + int(m))
        .filter(|x| (signed || *x >= Rational::from_integer(0)) && x * x <= *r2)
        .collect();
    let mut out = Vec::new();
    fn rec(vals: &[Rational], start: usize, n: usize, used: Rational, r2: &Rational, cur: &mut Vec<Rational>, out: &mut Vec<Vector>) {
        if cur.len() == n {
            out.push(Vector(cur.clone()));
            return;
        }
        for i in start..vals.len() {
            let u = used + vals[i] * vals[i];
            if u <= *r2 {
                cur.push(vals[i]);
                rec(vals, i, n, u, r2, cur, out);
                cur.pop();
            }
        }
    }
    rec(&vals, 0, n, Rational::from_integer(0), r2, &mut Vec::new(), &mut out);
    out
}

/// For every orbit `Ǒ` of `ǧ` and every integral `ν` (up to the Weyl group)
/// with `‖ν‖² ≤ max_radius_sq` and `Ǒ ⪯ Ind_{ǧ_ν} 0`, checks
/// `‖ν‖ ≥ ‖½h_Ǒ‖`, and that equality forces `ν` and `½h_Ǒ` to have the same
/// `|value|` multiset.
///
/// Integral means `⟨ν, α̌⟩ ∈ ℤ` for every coroot `α̌` of `𝔤`. In type `A` this
/// set is a union of lines along `(1,…,1)`; only the cosets `ℤ^n` and
/// `(½ + ℤ)^n` are scanned.
pub fn norm_comparison_harness(t: LieType, max_radius_sq: &Rational, max_rank: usize) -> Result<NormComparisonReport> {
    let dual = t.dual_family().ok_or_else(|| Error::NonClassicalType(t.to_string()))?;
    if t.rank > max_rank {
        return Err(Error::BoundExceeded(format!("rank {} exceeds {max_rank}", t.rank)));
    }
    let n = t.dim();
    let factor = ClassicalFactor::whole(dual, n);
    let size = factor.matrix_size() as u32;
    let orbits: Vec<Partition> = partitions_of(size)
        .into_iter()
        .filter(|p| dual.epsilon().is_none_or(|e| p.is_eps_partition(e)))
        .collect();
    let targets: Vec<(Partition, Vector, Rational)> = orbits
        .into_iter()
        .map(|p| {
            let h = half_h(&p);
            let cartan = if dual == ClassicalFamily::A { h.sorted_desc() } else { positive_half(&h, n) };
            let norm = cartan.dot(&cartan);
            (p, cartan.abs_sorted_desc(), norm)
        })
        .collect();
    // ǧ = so(2n+1) (𝔤 = C_n): coroots ±e_i force ν ∈ ℤ^n.
    let bases: Vec<Rational> =
        if dual == ClassicalFamily::B { vec![int(0)] } else { vec![int(0), half()] };
    let signed = dual == ClassicalFamily::A;

    let mut report = NormComparisonReport {
        lie_type: t,
        max_radius_sq: *max_radius_sq,
        vectors: 0,
        pairs: 0,
        equality_cases: 0,
        violations: Vec::new(),
        passed: true,
    };
    for base in bases {
        for nu in dominant_points(n, base, signed, max_radius_sq) {
            report.vectors += 1;
            let induced = factor_orbit(&nu, &factor)?;
            let norm_nu = nu.dot(&nu);
            for (orbit, target, norm_h) in &targets {
                if !leq(orbit, &induced) {
                    continue;
                }
                report.pairs += 1;
                let violation = |reason: &str| NormViolation {
                    nu: nu.clone(),
                    orbit: orbit.clone(),
                    induced: induced.clone(),
                    norm_sq_nu: norm_nu,
                    norm_sq_half_h: *norm_h,
                    reason: reason.into(),
                };
                if norm_nu < *norm_h {
                    report.violations.push(violation("norm of nu below norm of h/2"));
                } else if norm_nu == *norm_h {
                    report.equality_cases += 1;
                    if nu.abs_sorted_desc() != *target {
                        report.violations.push(violation("equal norms without conjugacy"));
                    }
                }
            }
        }
    }
    report.passed = report.violations.is_empty();
    Ok(report)
}
