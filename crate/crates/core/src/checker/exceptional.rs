//! Root-count test: every `ν` strictly inside the `λ`-ball having more
//! vanishing roots than `λ` is sufficient for mild unipotence.

use std::time::Instant;

use num_integer::Integer;

use crate::error::Result;
use crate::rational::{Rational, Vector};
use crate::rootsys::{build_root_system, n_roots_vanishing, positive_roots, BallEnumerator, Lattice, LieType};

use super::{check_lattice, CheckMode, CheckOptions, CheckReport, Hits, Verdict, Witness};

/// Integer pairings `D·(ν, α)` for positive roots, as an affine function of
/// the basis coefficients.
struct Pairings {
    constant: Vec<i128>,
    /// `linear[i][a] = D·(b_i, α_a)`.
    linear: Vec<Vec<i128>>,
}

impl Pairings {
    fn new(lambda: &Vector, lattice: &Lattice, roots: &[&Vector], pair: impl Fn(&Vector, &Vector) -> Rational) -> Self {
        let raw_c: Vec<Rational> = roots.iter().map(|a| pair(lambda, a)).collect();
        let raw_l: Vec<Vec<Rational>> =
            lattice.basis.iter().map(|b| roots.iter().map(|a| pair(b, a)).collect()).collect();
        let d = raw_c.iter().chain(raw_l.iter().flatten()).fold(1i128, |acc, x| acc.lcm(x.denom()));
        let scale = |x: &Rational| (x * Rational::from_integer(d)).to_integer();
        Pairings { constant: raw_c.iter().map(scale).collect(), linear: raw_l.iter().map(|r| r.iter().map(scale).collect()).collect() }
    }

    /// Number of roots (positive and negative) orthogonal to the point.
    fn vanishing(&self, coeffs: &[i128]) -> usize {
        let mut n = 0;
        for (a, c0) in self.constant.iter().enumerate() {
            let mut s = *c0;
            for (c, row) in coeffs.iter().zip(&self.linear) {
                s += c * row[a];
            }
            if s == 0 {
                n += 2;
            }
        }
        n
    }
}

/// Scans `ν ∈ λ + L` with `‖ν‖ < ‖λ‖` and reports every `ν` with
/// `n_ν ≤ n_λ`. No such `ν` gives `SufficientPass`; otherwise the result is
/// `Inconclusive`.
pub fn mild_check_exceptional(lambda: &Vector, t: LieType, lattice: &Lattice, opts: &CheckOptions) -> Result<CheckReport> {
    let start = Instant::now();
    t.check_dim(lambda)?;
    check_lattice(t, lattice)?;
    let rs = build_root_system(t);
    let n_lambda = n_roots_vanishing(lambda, &rs);
    let r2 = rs.norm_sq(lambda);
    let pos: Vec<&Vector> = positive_roots(&rs).collect();
    let pairings = Pairings::new(lambda, lattice, &pos, |u, v| rs.pairing(u, v));
    let en = BallEnumerator::new(lambda, lattice, &rs.form, &r2, true)?;
    let accs = en.par_fold(
        opts.jobs,
        opts.max_points,
        || (0u64, Hits::new(opts.witness_limit)),
        |acc, coeffs, scaled| {
            acc.0 += 1;
            let n_nu = pairings.vanishing(coeffs);
            if n_nu <= n_lambda {
                let norm = en.norm(scaled);
                acc.1.push_with(en.point(coeffs), |nu| Witness {
                    nu: nu.clone(),
                    norm_sq: norm,
                    reason: format!("n_nu = {n_nu} <= n_lambda = {n_lambda}"),
                });
            }
            Ok(())
        },
    )?;
    let mut scanned = 0;
    let mut hits = Hits::new(opts.witness_limit);
    for (n, h) in accs {
        scanned += n;
        hits.merge(h);
    }
    let (witness_count, witnesses) = hits.into_parts();
    Ok(CheckReport {
        verdict: if witness_count == 0 { Verdict::SufficientPass } else { Verdict::Inconclusive },
        mode: CheckMode::Exceptional,
        lie_type: t,
        lattice: lattice.clone(),
        lambda: lambda.clone(),
        norm_sq_lambda: r2,
        points_scanned: scanned,
        canonicalized: false,
        pseudo_levi: Vec::new(),
        orbit_lambda: Vec::new(),
        n_lambda: Some(n_lambda),
        witness_count,
        witnesses,
        wall_time: start.elapsed().as_secs_f64(),
    })
}
