//! Infinitesimal characters built from partitions: `½h`, `ρ⁺`, q-unipotent
//! characters, `ξ_r` / `ξ_𝐫`, shifted `ρ_𝐬` strings and the metaplectic
//! reduction.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ClassicalFamily, Epsilon, Partition};
use crate::rational::{half, int, rat, Rational, Vector};
use crate::rootsys::LieType;

/// Outer-automorphism choice for type-`D` q-unipotent characters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Default,
    Outer,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(Variant::Default),
            "outer" => Ok(Variant::Outer),
            other => Err(Error::InvalidVariant(format!("unknown variant {other:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Default => "default",
            Variant::Outer => "outer",
        })
    }
}

/// A character both as constructed and as a dominant representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfChar {
    pub raw: Vector,
    pub dominant: Vector,
}

/// `((q-1)/2 + s, (q-3)/2 + s, …, (1-q)/2 + s)`
fn rho_string(q: u32, s: Rational) -> impl Iterator<Item = Rational> {
    (0..q as i128).map(move |k| rat(q as i128 - 1 - 2 * k, 2) + s)
}

/// Eigenvalues of `½h` for the `sl(|d|)` orbit of `d`, row by row.
pub fn half_h(d: &Partition) -> Vector {
    d.parts().iter().flat_map(|&q| rho_string(q, Rational::zero())).collect()
}

/// `ρ⁺` of a sequence of rows (any order) of total size `n`: the positive
/// members of each row's ρ-string, then zeros up to length `⌊n/2⌋`.
pub fn rho_plus(rows: &[u32], n: u32) -> Result<Vector> {
    let total: u64 = rows.iter().map(|&q| q as u64).sum();
    if total != n as u64 {
        return Err(Error::SizeMismatch { left: total, right: n as u64 });
    }
    let mut out: Vec<Rational> = rows
        .iter()
        .flat_map(|&q| rho_string(q, Rational::zero()).filter(|x| x.is_positive()))
        .collect();
    out.resize((n / 2) as usize, Rational::zero());
    Ok(Vector(out))
}

/// The first `n` entries of `v` sorted decreasingly: for a multiset closed
/// under negation this is its nonnegative half.
pub fn positive_half(v: &Vector, n: usize) -> Vector {
    let mut s = v.sorted_desc();
    s.0.truncate(n);
    s
}

/// Dominant representative under the Weyl group of the family.
pub fn dominant(v: &Vector, family: ClassicalFamily) -> Vector {
    match family {
        ClassicalFamily::A => v.sorted_desc(),
        ClassicalFamily::B | ClassicalFamily::C => v.abs_sorted_desc(),
        ClassicalFamily::D => {
            let mut out = v.abs_sorted_desc();
            let negatives = v.iter().filter(|x| x.is_negative()).count();
            let has_zero = v.iter().any(|x| x.is_zero());
            if negatives % 2 == 1 && !has_zero {
                let last = out.len() - 1;
                out[last] = -out[last];
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QUnipotentSpec {
    /// Rows of a partition of `N′`; the order only affects the raw output.
    pub rows: Vec<u32>,
    pub g_type: LieType,
    #[serde(default)]
    pub variant: Variant,
}

/// `N′`: the size of the `sl(N′)` containing the dual algebra, with
/// `sp(2n) ⊂ sl(2n+1)`.
pub fn n_prime(g_type: LieType) -> Result<u32> {
    let family = g_type.classical_family().ok_or_else(|| Error::NonClassicalType(g_type.to_string()))?;
    let n = g_type.rank as u32;
    Ok(match family {
        ClassicalFamily::A => n + 1,
        ClassicalFamily::B | ClassicalFamily::C => 2 * n + 1,
        ClassicalFamily::D => 2 * n,
    })
}

pub fn q_unipotent_infchar(spec: &QUnipotentSpec) -> Result<InfChar> {
    let family = spec
        .g_type
        .classical_family()
        .ok_or_else(|| Error::NonClassicalType(spec.g_type.to_string()))?;
    let np = n_prime(spec.g_type)?;
    if spec.rows.contains(&0) {
        return Err(Error::InvalidPartition("rows must be positive".into()));
    }
    if spec.variant == Variant::Outer {
        if family != ClassicalFamily::D {
            return Err(Error::InvalidVariant(format!("outer variant needs type D, got {}", spec.g_type)));
        }
        if spec.rows.iter().any(|q| q % 2 == 1) {
            return Err(Error::InvalidVariant("outer variant needs all parts even".into()));
        }
    }
    if family == ClassicalFamily::A {
        let total: u64 = spec.rows.iter().map(|&q| q as u64).sum();
        if total != np as u64 {
            return Err(Error::SizeMismatch { left: total, right: np as u64 });
        }
        let raw: Vector = spec.rows.iter().flat_map(|&q| rho_string(q, Rational::zero())).collect();
        let dominant = raw.sorted_desc();
        return Ok(InfChar { raw, dominant });
    }
    let mut raw = rho_plus(&spec.rows, np)?;
    let mut dom = raw.abs_sorted_desc();
    if spec.variant == Variant::Outer {
        let last = raw.len() - 1;
        raw[last] = -raw[last];
        dom[last] = -dom[last];
    }
    Ok(InfChar { raw, dominant: dom })
}

fn check_r(r: &Rational) -> Result<()> {
    if *r > -half() && *r <= half() {
        Ok(())
    } else {
        Err(Error::RangeViolation(format!("r = {r} is outside (-1/2, 1/2]")))
    }
}

/// `(-1)^⌊r⌋` for `r ∈ (-½, ½]`.
fn sign_floor(r: &Rational) -> i128 {
    if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Row form of `ξ_r([q])`: `r + σk` for `k = -⌊q/2⌋, …, ⌊(q-1)/2⌋`.
fn xi_row(q: u32, r: Rational) -> impl Iterator<Item = Rational> {
    let sigma = int(sign_floor(&r));
    let q = q as i128;
    (-(q / 2)..=(q - 1) / 2).map(move |k| r + sigma * int(k))
}

/// `ξ_r(q)` by rows.
pub fn xi_r(q: &Partition, r: Rational) -> Result<Vector> {
    check_r(&r)?;
    Ok(q.parts().iter().flat_map(|&qi| xi_row(qi, r)).collect())
}

/// `ξ_r(q)` by columns: value `r + (-1)^{j-1+⌊r⌋}⌊j/2⌋` repeated `c_j` times.
pub fn xi_r_columns(q: &Partition, r: Rational) -> Result<Vector> {
    check_r(&r)?;
    let sigma = sign_floor(&r);
    let mut out = Vec::with_capacity(q.size() as usize);
    for (idx, &c) in q.transpose().parts().iter().enumerate() {
        let j = idx as i128 + 1;
        let sign = if (j - 1) % 2 == 0 { sigma } else { -sigma };
        let x = r + int(sign * (j / 2));
        out.extend(std::iter::repeat_n(x, c as usize));
    }
    Ok(Vector(out))
}

fn check_len(q: &Partition, len: usize) -> Result<()> {
    if q.len() == len {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected: q.len(), got: len })
    }
}

/// `ξ_𝐫(q) = ξ_{r_1}([q_1]) ∪ ξ_{r_2}([q_2]) ∪ …`
pub fn xi_rvec(q: &Partition, r: &[Rational]) -> Result<Vector> {
    check_len(q, r.len())?;
    r.iter().try_for_each(check_r)?;
    Ok(q.parts().iter().zip(r).flat_map(|(&qi, &ri)| xi_row(qi, ri)).collect())
}

/// Concatenated shifted ρ-strings, `|s_i| < ½`.
pub fn rho_s(q: &Partition, s: &[Rational]) -> Result<Vector> {
    check_len(q, s.len())?;
    if let Some(bad) = s.iter().find(|x| x.abs() >= half()) {
        return Err(Error::RangeViolation(format!("|s| = {} is not below 1/2", bad.abs())));
    }
    Ok(q.parts().iter().zip(s).flat_map(|(&qi, &si)| rho_string(qi, si)).collect())
}

/// Shifts `𝐬` rewritten as `ξ` parameters `𝐫` so that `ρ_𝐬(q)` and `ξ_𝐫(q)`
/// agree as multisets. For even rows `s - (-1)^⌊s⌋ ½` is used, with the
/// endpoint `-½` (from `s = 0`) replaced by `½`, which gives the same row.
pub fn shifts_to_xi(q: &Partition, s: &[Rational]) -> Result<Vec<Rational>> {
    check_len(q, s.len())?;
    Ok(q.parts()
        .iter()
        .zip(s)
        .map(|(&qi, &si)| {
            if qi % 2 == 1 {
                si
            } else {
                let r = si - int(sign_floor(&si)) * half();
                if r == -half() {
                    half()
                } else {
                    r
                }
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntisymmetricGrouping {
    /// Rows with zero shift.
    pub d: Partition,
    /// `(p_i, t_i)` with `t_i > 0`, increasing in `t_i`.
    pub pairs: Vec<(Partition, Rational)>,
}

/// The grouping `(d; (p_i, t_i))` when `(q, s)` is antisymmetric.
pub fn is_antisymmetric(q: &Partition, s: &[Rational]) -> Option<AntisymmetricGrouping> {
    if q.len() != s.len() {
        return None;
    }
    let rows_with = |t: Rational| -> Vec<u32> {
        q.parts().iter().zip(s).filter(|(_, &si)| si == t).map(|(&qi, _)| qi).collect()
    };
    let mut ts: Vec<Rational> = s.iter().filter(|x| !x.is_zero()).map(|x| x.abs()).collect();
    ts.sort();
    ts.dedup();
    let mut pairs = Vec::new();
    for t in ts {
        let plus = Partition::from_unsorted(rows_with(t));
        let minus = Partition::from_unsorted(rows_with(-t));
        if plus != minus {
            return None;
        }
        pairs.push((plus, t));
    }
    Some(AntisymmetricGrouping { d: Partition::from_unsorted(rows_with(Rational::zero())), pairs })
}

/// Character attached to `q ∈ P_C(2n)` through `q₊ = q ∪ [1]`, as a
/// q-unipotent character for `C_n`.
pub fn metaplectic_infchar(q: &Partition) -> Result<InfChar> {
    if q.is_empty() || q.size() % 2 == 1 || !q.is_eps_partition(Epsilon::Symplectic) {
        return Err(Error::DomainViolation(format!("[{q}] is not in P_C(2n) with n ≥ 1")));
    }
    let n = (q.size() / 2) as usize;
    let mut rows = q.parts().to_vec();
    rows.push(1);
    let spec = QUnipotentSpec {
        rows,
        g_type: LieType::classical(ClassicalFamily::C, n)?,
        variant: Variant::Default,
    };
    let out = q_unipotent_infchar(&spec)?;
    debug_assert_eq!(out.dominant, positive_half(&half_h(q), n));
    Ok(out)
}
