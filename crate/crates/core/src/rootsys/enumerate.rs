//! Exact Fincke–Pohst enumeration of `shift + L` inside a ball.
//!
//! Gram–Schmidt is run on the basis in reverse order so that the first basis
//! coefficient is the outermost loop, which makes the output lexicographic
//! in the coefficient vector. All pruning is done on integers after a single
//! common rescaling, so no floating point enters any decision.

use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::{bilinear, invert, Matrix, Rational, Vector};

use super::Lattice;

/// Precomputed, integer-scaled enumeration data for one ball.
#[derive(Clone, Debug)]
pub struct BallEnumerator {
    shift: Vector,
    basis: Vec<Vector>,
    k: usize,
    /// `M`
    m: i128,
    /// `mu[j][i] = M μ_{ji}` for `j > i` (Gram–Schmidt order).
    mu: Vec<Vec<i128>>,
    /// `M σ_i`
    sig: Vec<i128>,
    /// Per-level weights `B_i E K`.
    w: Vec<i128>,
    offset: i128,
    bound: i128,
    strict: bool,
    /// Scaled norms divided by this give true squared norms.
    scale: i128,
}

fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> i128 {
    xs.into_iter().fold(1i128, |acc, x| acc.lcm(x.denom()))
}

fn to_int(x: Rational) -> i128 {
    debug_assert!(x.is_integer());
    x.to_integer()
}

impl BallEnumerator {
    pub fn new(shift: &Vector, lattice: &Lattice, form: &Matrix, radius_sq: &Rational, strict: bool) -> Result<Self> {
        if radius_sq.is_negative() {
            return Err(Error::RangeViolation(format!("negative squared radius {radius_sq}")));
        }
        if let Some(d) = lattice.dim() {
            if d != shift.len() {
                return Err(Error::DimensionMismatch { expected: d, got: shift.len() });
            }
        }
        if form.len() != shift.len() {
            return Err(Error::DimensionMismatch { expected: form.len(), got: shift.len() });
        }
        let k = lattice.rank();
        // Gram–Schmidt order: g_i = b_{k-1-i}.
        let g: Vec<&Vector> = lattice.basis.iter().rev().collect();
        let gram: Vec<Vec<Rational>> = g
            .iter()
            .map(|u| g.iter().map(|v| bilinear(form, &u.0, &v.0)).collect())
            .collect();
        let mut mu = vec![vec![Rational::zero(); k]; k];
        let mut b = vec![Rational::zero(); k];
        for j in 0..k {
            for i in 0..j {
                let mut x = gram[j][i];
                for l in 0..i {
                    x -= mu[j][l] * mu[i][l] * b[l];
                }
                mu[j][i] = x / b[i];
            }
            let mut bj = gram[j][j];
            for l in 0..j {
                bj -= mu[j][l] * mu[j][l] * b[l];
            }
            if !bj.is_positive() {
                return Err(Error::UnboundedBall(
                    "lattice Gram matrix is not positive definite".into(),
                ));
            }
            b[j] = bj;
        }
        let mut sigma = vec![Rational::zero(); k];
        for i in 0..k {
            let mut x = bilinear(form, &shift.0, &g[i].0);
            for l in 0..i {
                x -= mu[i][l] * sigma[l] * b[l];
            }
            sigma[i] = x / b[i];
        }
        let mut perp = bilinear(form, &shift.0, &shift.0);
        for i in 0..k {
            perp -= sigma[i] * sigma[i] * b[i];
        }

        let m = lcm_all(mu.iter().flatten().chain(sigma.iter()));
        let e = lcm_all(b.iter());
        let a = Rational::from_integer(m * m * e);
        let kk = (perp * a).denom().lcm((radius_sq * a).denom());
        let mr = Rational::from_integer(m);
        let er = Rational::from_integer(e);
        let kr = Rational::from_integer(kk);
        Ok(BallEnumerator {
            shift: shift.clone(),
            basis: lattice.basis.clone(),
            k,
            m,
            mu: mu.iter().map(|row| row.iter().map(|x| to_int(x * mr)).collect()).collect(),
            sig: sigma.iter().map(|x| to_int(x * mr)).collect(),
            w: b.iter().map(|x| to_int(x * er * kr)).collect(),
            offset: to_int(perp * a * kr),
            bound: to_int(radius_sq * a * kr),
            strict,
            scale: m * m * e * kk,
        })
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    /// True squared norm from a scaled norm handed to a visitor.
    pub fn norm(&self, scaled: i128) -> Rational {
        Rational::new(scaled, self.scale)
    }

    /// `shift + Σ c_i b_i`.
    pub fn point(&self, coeffs: &[i128]) -> Vector {
        let mut v = self.shift.clone();
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if *c != 0 {
                let c = Rational::from_integer(*c);
                for (x, r) in v.0.iter_mut().zip(row.iter()) {
                    *x += c * r;
                }
            }
        }
        v
    }

    /// Integer range of the Gram–Schmidt coordinate at `level` given the
    /// outer coordinates `y[level+1..]` and remaining budget.
    fn range(&self, level: usize, y: &[i128], rem: i128) -> Option<(i128, i128, i128)> {
        if rem < 0 {
            return None;
        }
        let mut c = -self.sig[level];
        for j in level + 1..self.k {
            c -= self.mu[j][level] * y[j];
        }
        let u = Roots::sqrt(&(rem / self.w[level]));
        let lo = -Integer::div_floor(&(u - c), &self.m);
        let hi = Integer::div_floor(&(c + u), &self.m);
        (lo <= hi).then_some((lo, hi, c))
    }

    fn accepts(&self, scaled: i128) -> bool {
        if self.strict {
            scaled < self.bound
        } else {
            scaled <= self.bound
        }
    }

    /// Values of the outermost coordinate (the first basis coefficient).
    pub fn top_values(&self) -> Vec<i128> {
        if self.k == 0 {
            return vec![0];
        }
        let y = vec![0i128; self.k];
        match self.range(self.k - 1, &y, self.bound - self.offset) {
            Some((lo, hi, _)) => (lo..=hi).collect(),
            None => Vec::new(),
        }
    }

    /// Visits every point below the outermost coordinate value `top`.
    /// Visitors receive basis coefficients and the scaled squared norm.
    fn walk_branch<F>(&self, top: i128, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[i128], i128) -> Result<()>,
    {
        if self.k == 0 {
            return if self.accepts(self.offset) { visit(&[], self.offset) } else { Ok(()) };
        }
        let mut y = vec![0i128; self.k];
        let mut coeffs = vec![0i128; self.k];
        let top_level = self.k - 1;
        let Some((_, _, c)) = self.range(top_level, &y, self.bound - self.offset) else {
            return Ok(());
        };
        y[top_level] = top;
        let d = self.m * top - c;
        let used = self.offset + self.w[top_level] * d * d;
        self.descend(top_level, used, &mut y, &mut coeffs, visit)
    }

    fn descend<F>(&self, level: usize, used: i128, y: &mut [i128], coeffs: &mut [i128], visit: &mut F) -> Result<()>
    where
        F: FnMut(&[i128], i128) -> Result<()>,
    {
        coeffs[self.k - 1 - level] = y[level];
        if level == 0 {
            return if self.accepts(used) { visit(coeffs, used) } else { Ok(()) };
        }
        let next = level - 1;
        let Some((lo, hi, c)) = self.range(next, y, self.bound - used) else {
            return Ok(());
        };
        for v in lo..=hi {
            y[next] = v;
            let d = self.m * v - c;
            self.descend(next, used + self.w[next] * d * d, y, coeffs, visit)?;
        }
        Ok(())
    }

    /// Sequential visit of every point, in lexicographic coefficient order.
    pub fn for_each<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(&[i128], i128) -> Result<()>,
    {
        for top in self.top_values() {
            self.walk_branch(top, &mut visit)?;
        }
        Ok(())
    }

    /// Runs one accumulator per outermost value, possibly in parallel, and
    /// returns them in order. `cap` bounds the total number of visited
    /// points; exceeding it is an error regardless of scheduling.
    pub fn par_fold<T, I, F>(&self, jobs: usize, cap: Option<u64>, init: I, visit: F) -> Result<Vec<T>>
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, &[i128], i128) -> Result<()> + Sync,
    {
        let counter = AtomicU64::new(0);
        let limit = cap.unwrap_or(u64::MAX);
        let run = |top: i128| -> Result<T> {
            let mut acc = init();
            let mut local = 0u64;
            self.walk_branch(top, &mut |c: &[i128], n: i128| {
                local += 1;
                if local == 4096 {
                    let total = counter.fetch_add(local, Ordering::Relaxed) + local;
                    local = 0;
                    if total > limit {
                        return Err(Error::PointCapExceeded { cap: limit });
                    }
                }
                visit(&mut acc, c, n)
            })?;
            let total = counter.fetch_add(local, Ordering::Relaxed) + local;
            if total > limit {
                return Err(Error::PointCapExceeded { cap: limit });
            }
            Ok(acc)
        };
        let tops = self.top_values();
        if jobs <= 1 {
            return tops.into_iter().map(run).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidLattice(format!("could not start workers: {e}")))?;
        pool.install(|| tops.into_par_iter().map(run).collect())
    }
}

/// All points of `shift + L` with squared norm `< radius_sq` (strict) or
/// `≤ radius_sq`, in lexicographic order of their basis coefficients.
pub fn enumerate_coset_ball(
    shift: &Vector,
    lattice: &Lattice,
    form: &Matrix,
    radius_sq: &Rational,
    strict: bool,
) -> Result<Vec<Vector>> {
    let e = BallEnumerator::new(shift, lattice, form, radius_sq, strict)?;
    let mut out = Vec::new();
    e.for_each(|c, _| {
        out.push(e.point(c));
        Ok(())
    })?;
    Ok(out)
}

/// Reference enumeration: scans a coefficient box from a crude radius bound
/// and filters exactly. Same output order as [`enumerate_coset_ball`].
pub fn box_scan(
    shift: &Vector,
    lattice: &Lattice,
    form: &Matrix,
    radius_sq: &Rational,
    strict: bool,
) -> Result<Vec<Vector>> {
    let k = lattice.rank();
    let accept = |n: &Rational| if strict { n < radius_sq } else { n <= radius_sq };
    if k == 0 {
        let n = bilinear(form, &shift.0, &shift.0);
        return Ok(if accept(&n) { vec![shift.clone()] } else { Vec::new() });
    }
    let gram: Matrix = lattice
        .basis
        .iter()
        .map(|u| lattice.basis.iter().map(|v| bilinear(form, &u.0, &v.0)).collect())
        .collect();
    let inv = invert(&gram).ok_or_else(|| Error::UnboundedBall("singular Gram matrix".into()))?;
    // Coefficients of the projection of -shift onto the lattice span.
    let rhs: Vec<Rational> = lattice.basis.iter().map(|b| -bilinear(form, &b.0, &shift.0)).collect();
    let center: Vec<f64> = (0..k)
        .map(|i| {
            let t: Rational = (0..k).map(|j| inv[i][j] * rhs[j]).sum();
            to_f64(&t)
        })
        .collect();
    let r = to_f64(radius_sq);
    let bounds: Vec<(i128, i128)> = (0..k)
        .map(|i| {
            let half_width = (r * to_f64(&inv[i][i])).max(0.0).sqrt();
            (
                (center[i] - half_width).floor() as i128 - 1,
                (center[i] + half_width).ceil() as i128 + 1,
            )
        })
        .collect();
    let mut out = Vec::new();
    let mut c: Vec<i128> = bounds.iter().map(|b| b.0).collect();
    loop {
        let mut v = shift.clone();
        for (ci, row) in c.iter().zip(&lattice.basis) {
            let ci = Rational::from_integer(*ci);
            for (x, b) in v.0.iter_mut().zip(row.iter()) {
                *x += ci * b;
            }
        }
        if accept(&bilinear(form, &v.0, &v.0)) {
            out.push(v);
        }
        // Odometer with the last coefficient fastest.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if c[i] < bounds[i].1 {
                c[i] += 1;
                for (cj, bj) in c.iter_mut().zip(&bounds).skip(i + 1) {
                    *cj = bj.0;
                }
                break;
            }
        }
    }
}

fn to_f64(x: &Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, identity, int, rat};
    use crate::rootsys::{lattice_preset, CoordinateLattice, LatticePreset};

    fn z(n: usize) -> Lattice {
        CoordinateLattice::Integer.lattice(n)
    }

    #[test]
    fn unit_ball_in_z2() {
        let pts = enumerate_coset_ball(&Vector::zeros(2), &z(2), &identity(2), &int(1), false).unwrap();
        assert_eq!(pts.len(), 5);
        assert!(pts.contains(&Vector::from_ints(&[0, -1])));
        let strict = enumerate_coset_ball(&Vector::zeros(2), &z(2), &identity(2), &int(1), true).unwrap();
        assert_eq!(strict, vec![Vector::zeros(2)]);
    }

    #[test]
    fn half_shift_ball() {
        let s = Vector(vec![half(), half()]);
        let pts = enumerate_coset_ball(&s, &z(2), &identity(2), &half(), false).unwrap();
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert!(p.iter().all(|x| x.abs() == half()));
        }
    }

    #[test]
    fn even_sum_ball() {
        let l = CoordinateLattice::EvenSum.lattice(2);
        let pts = enumerate_coset_ball(&Vector::zeros(2), &l, &identity(2), &int(2), false).unwrap();
        let mut got: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["-1,-1", "-1,1", "0,0", "1,-1", "1,1"]);
    }

    #[test]
    fn rank_deficient_lattice() {
        // Trace-zero points of (1/3,1/3,1/3) + A2 root lattice.
        let l = lattice_preset("A2".parse().unwrap(), LatticePreset::Root).unwrap();
        let s = Vector(vec![rat(1, 3); 3]);
        let a = enumerate_coset_ball(&s, &l, &identity(3), &int(3), false).unwrap();
        let b = box_scan(&s, &l, &identity(3), &int(3), false).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 7);
    }

    #[test]
    fn singular_gram_is_unbounded() {
        let l = Lattice { basis: vec![Vector::from_ints(&[1, 1])], name: None };
        let degenerate = vec![vec![int(1), int(-1)], vec![int(-1), int(1)]];
        assert!(matches!(
            BallEnumerator::new(&Vector::zeros(2), &l, &degenerate, &int(1), false),
            Err(Error::UnboundedBall(_))
        ));
    }

    #[test]
    fn cap_is_enforced_independent_of_jobs() {
        let e = BallEnumerator::new(&Vector::zeros(3), &z(3), &identity(3), &int(30), true).unwrap();
        let mut total = 0;
        e.for_each(|_, _| {
            total += 1;
            Ok(())
        })
        .unwrap();
        for jobs in [1, 4] {
            let ok = e.par_fold(jobs, Some(total), || 0u64, |a, _, _| {
                *a += 1;
                Ok(())
            });
            assert_eq!(ok.unwrap().iter().sum::<u64>(), total);
            let err = e.par_fold(jobs, Some(total - 1), || (), |_, _, _| Ok(()));
            assert!(matches!(err, Err(Error::PointCapExceeded { .. })));
        }
    }
}
