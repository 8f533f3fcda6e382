//! Enumeration over sign/permutation representatives for coordinate
//! lattices.
//!
//! Within a factor of `ǧ_Λ` the induced orbit and the norm depend only on
//! the multiset of `|ν_i|` (orthogonal/symplectic factors) or of `σ_i ν_i`
//! (`gl` factors). For the lattices recognized by [`CoordinateLattice`],
//! coset membership of the images of one multiset is decided by a single
//! representative, except for an even-sum parity which any sign flip of a
//! half-integral coordinate toggles.

use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Roots;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{leq, ClassicalFamily, Partition};
use crate::rational::{frac, half, int, Rational, Vector};
use crate::rootsys::{ClassicalFactor, CoordinateLattice};

use super::{containment_reason, factor_orbit, CheckOptions, Classical, Hits, Witness};

#[derive(Clone, Debug)]
struct Candidate {
    /// Nonincreasing values `|ν_i|` or `σ_i ν_i`.
    values: Vec<Rational>,
    norm: Rational,
    orbit: Partition,
    contains: bool,
}

struct FactorData<'a> {
    factor: &'a ClassicalFactor,
    /// Values are half-integers, so a sign flip changes the coordinate sum
    /// by an odd integer.
    flippable: bool,
    candidates: Vec<Candidate>,
}

/// `⌊√x⌋` for `x ≥ 0`.
fn floor_sqrt(x: &Rational) -> i128 {
    Roots::sqrt(&x.floor().to_integer().max(0))
}

/// All nonincreasing `k`-tuples from `base + ℤ` (nonnegative unless
/// `signed`) with squared sum `< r2`, sorted by norm.
fn factor_candidates(
    f: &ClassicalFactor,
    base: Rational,
    signed: bool,
    t_lambda: &Partition,
    r2: &Rational,
) -> Result<Vec<Candidate>> {
    let k = f.rank();
    let min_sq = if signed {
        let o = int(1) - base;
        (base * base).min(o * o)
    } else {
        base * base
    };
    let top = floor_sqrt(r2) + 1;
    let values: Vec<Rational> = (-top..=top)
        .rev()
        .map(|m| base + int(m))
        .filter(|x| (signed || !x.is_negative()) && x * x < *r2)
        .collect();

    struct Ctx<'a> {
        vals: &'a [Rational],
        k: usize,
        min_sq: Rational,
        r2: &'a Rational,
        out: Vec<(Vec<Rational>, Rational)>,
    }
    fn rec(c: &mut Ctx, start: usize, used: Rational, cur: &mut Vec<Rational>) {
        if cur.len() == c.k {
            c.out.push((cur.clone(), used));
            return;
        }
        let rest = int((c.k - cur.len() - 1) as i128) * c.min_sq;
        for i in start..c.vals.len() {
            let x = c.vals[i];
            let n = used + x * x;
            if n + rest >= *c.r2 {
                continue;
            }
            cur.push(x);
            rec(c, i, n, cur);
            cur.pop();
        }
    }
    let mut ctx = Ctx { vals: &values, k, min_sq, r2, out: Vec::new() };
    rec(&mut ctx, 0, Rational::zero(), &mut Vec::with_capacity(k));

    let whole = ClassicalFactor { coords: (0..k).collect(), signs: vec![1; k], ..f.clone() };
    let mut out = ctx
        .out
        .into_iter()
        .map(|(values, norm)| {
            let orbit = factor_orbit(&Vector(values.clone()), &whole)?;
            Ok(Candidate { contains: leq(t_lambda, &orbit), values, norm, orbit })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.norm.cmp(&b.norm).then_with(|| b.values.cmp(&a.values)));
    Ok(out)
}

struct Counter<'a> {
    shared: &'a AtomicU64,
    local: u64,
    limit: u64,
}

impl Counter<'_> {
    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local == 4096 {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.limit {
            return Err(Error::PointCapExceeded { cap: self.limit });
        }
        Ok(())
    }
}

struct Search<'a> {
    lambda: &'a Vector,
    coord: CoordinateLattice,
    data: Vec<FactorData<'a>>,
    /// `suffix_min[i]`: least total norm of factors `i..`.
    suffix_min: Vec<Rational>,
    r2: &'a Rational,
}

struct Acc {
    scanned: u64,
    hits: Hits,
}

impl Search<'_> {
    fn assemble(&self, chosen: &[usize]) -> Vector {
        let mut nu = Vector::zeros(self.lambda.len());
        for (d, &c) in self.data.iter().zip(chosen) {
            let f = d.factor;
            for ((&i, &s), x) in f.coords.iter().zip(&f.signs).zip(&d.candidates[c].values) {
                nu[i] = if f.family == ClassicalFamily::A { *x * int(s as i128) } else { *x };
            }
        }
        nu
    }

    fn leaf(&self, chosen: &[usize], acc: &mut Acc, counter: &mut Counter) -> Result<()> {
        let mut nu = self.assemble(chosen);
        if !self.coord.contains(&(&nu - self.lambda)) {
            let Some(d) = self.data.iter().find(|d| d.flippable && d.factor.rank() > 0) else {
                return Ok(());
            };
            let i = *d.factor.coords.last().expect("nonempty factor");
            nu[i] = -nu[i];
            if !self.coord.contains(&(&nu - self.lambda)) {
                return Ok(());
            }
        }
        acc.scanned += 1;
        counter.tick()?;
        let picked: Vec<&Candidate> = self.data.iter().zip(chosen).map(|(d, &c)| &d.candidates[c]).collect();
        if picked.iter().all(|c| c.contains) {
            let norm: Rational = picked.iter().map(|c| c.norm).sum();
            let orbits: Vec<Partition> = picked.iter().map(|c| c.orbit.clone()).collect();
            acc.hits.push_with(nu, |nu| Witness { nu: nu.clone(), norm_sq: norm, reason: containment_reason(&orbits) });
        }
        Ok(())
    }

    fn dfs(&self, used: Rational, chosen: &mut Vec<usize>, acc: &mut Acc, counter: &mut Counter) -> Result<()> {
        let depth = chosen.len();
        if depth == self.data.len() {
            return self.leaf(chosen, acc, counter);
        }
        for (i, c) in self.data[depth].candidates.iter().enumerate() {
            if used + c.norm + self.suffix_min[depth + 1] >= *self.r2 {
                break;
            }
            chosen.push(i);
            self.dfs(used + c.norm, chosen, acc, counter)?;
            chosen.pop();
        }
        Ok(())
    }
}

pub(super) fn scan(
    lambda: &Vector,
    ctx: &Classical,
    coord: CoordinateLattice,
    r2: &Rational,
    opts: &CheckOptions,
) -> Result<(u64, Hits)> {
    let glues = match coord {
        CoordinateLattice::IntegerHalf => vec![Rational::zero(), half()],
        _ => vec![Rational::zero()],
    };
    let limit = opts.max_points.unwrap_or(u64::MAX);
    let shared = AtomicU64::new(0);
    let mut scanned = 0;
    let mut hits = Hits::new(opts.witness_limit);
    let pool = (opts.jobs > 1)
        .then(|| rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build())
        .transpose()
        .map_err(|e| Error::InvalidLattice(format!("could not start workers: {e}")))?;

    for g in glues {
        let mut data = Vec::with_capacity(ctx.factors.len());
        for (f, t_lambda) in ctx.factors.iter().zip(&ctx.orbit_lambda) {
            let signed = f.family == ClassicalFamily::A;
            let first = f.coords[0];
            let base = frac(&(ctx_value(lambda, f, first) + g));
            let candidates = factor_candidates(f, base, signed, t_lambda, r2)?;
            data.push(FactorData { factor: f, flippable: !signed && base == half(), candidates });
        }
        if data.iter().any(|d| d.candidates.is_empty()) {
            continue;
        }
        let mut suffix_min = vec![Rational::zero(); data.len() + 1];
        for i in (0..data.len()).rev() {
            suffix_min[i] = suffix_min[i + 1] + data[i].candidates[0].norm;
        }
        let search = Search { lambda, coord, data, suffix_min, r2 };
        let run = |i: usize| -> Result<Acc> {
            let mut acc = Acc { scanned: 0, hits: Hits::new(opts.witness_limit) };
            let mut counter = Counter { shared: &shared, local: 0, limit };
            let c = &search.data[0].candidates[i];
            if c.norm + search.suffix_min[1] < *r2 {
                search.dfs(c.norm, &mut vec![i], &mut acc, &mut counter)?;
            }
            counter.flush()?;
            Ok(acc)
        };
        let n0 = search.data[0].candidates.len();
        let accs: Vec<Acc> = match &pool {
            Some(p) => p.install(|| (0..n0).into_par_iter().map(run).collect::<Result<_>>())?,
            None => (0..n0).map(run).collect::<Result<_>>()?,
        };
        for a in accs {
            scanned += a.scanned;
            hits.merge(a.hits);
        }
    }
    Ok((scanned, hits))
}

/// `σ_i λ_i` for `gl` factors, `λ_i` otherwise.
fn ctx_value(lambda: &Vector, f: &ClassicalFactor, i: usize) -> Rational {
    let pos = f.coords.iter().position(|&c| c == i).expect("coordinate in factor");
    if f.family == ClassicalFamily::A {
        lambda[i] * int(f.signs[pos] as i128)
    } else {
        lambda[i]
    }
}
