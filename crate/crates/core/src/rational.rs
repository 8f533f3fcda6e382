//! Exact rational scalars and vectors.
//!
//! Everything in this crate that touches coordinates goes through [`Rational`],
//! a 128-bit fraction. Integrality and vanishing tests are equality tests, so
//! no floating point is used for any decision.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// Representative of `x` modulo 1 in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-0.49"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty rational in {s:?}")));
    }
    let lower = t.to_ascii_lowercase();
    if lower.contains("nan") || lower.contains("inf") || lower.ends_with('i') {
        return Err(Error::NonRealInput(t.to_string()));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad(t))?;
        let d: i128 = d.trim().parse().map_err(|_| bad(t))?;
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in {t:?}")));
        }
        return Ok(rat(n, d));
    }
    if let Some((whole, fractional)) = t.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let w: i128 = if whole_digits.is_empty() {
            0
        } else {
            whole_digits.parse().map_err(|_| bad(t))?
        };
        if fractional.is_empty() || !fractional.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(t));
        }
        let scale = 10i128
            .checked_pow(fractional.len() as u32)
            .ok_or_else(|| bad(t))?;
        let f: i128 = fractional.parse().map_err(|_| bad(t))?;
        let magnitude = rat(w * scale + f, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    t.parse::<i128>().map(int).map_err(|_| bad(t))
}

fn bad(s: &str) -> Error {
    Error::Parse(format!("not a rational number: {s:?}"))
}

pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Exact coordinate vector.
///
/// The ambient type and basis are carried by the surrounding API (a
/// [`crate::rootsys::LieType`] plus its coordinate convention), not by the
/// vector itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    pub fn from_ints(xs: &[i128]) -> Self {
        Vector(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// Coordinates sorted in decreasing order.
    pub fn sorted_desc(&self) -> Vector {
        let mut v = self.0.clone();
        v.sort_by(|a, b| b.cmp(a));
        Vector(v)
    }

    /// Absolute values sorted in decreasing order.
    pub fn abs_sorted_desc(&self) -> Vector {
        let mut v: Vec<Rational> = self.0.iter().map(|x| x.abs()).collect();
        v.sort_by(|a, b| b.cmp(a));
        Vector(v)
    }

    /// Least common denominator of all coordinates.
    pub fn common_denominator(&self) -> i128 {
        self.0.iter().fold(1i128, |acc, x| acc.lcm(x.denom()))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(","))
    }
}

impl FromStr for Vector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Vector::default());
        }
        t.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Vector)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(Vector)
            .map_err(serde::de::Error::custom)
    }
}

/// Square or rectangular matrix of rationals stored row-major.
pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { int(1) } else { Rational::zero() }).collect())
        .collect()
}

/// `u^T F v`.
pub fn bilinear(form: &Matrix, u: &[Rational], v: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, row) in form.iter().enumerate() {
        if u[i].is_zero() {
            continue;
        }
        let mut r = Rational::zero();
        for (j, f) in row.iter().enumerate() {
            if !f.is_zero() && !v[j].is_zero() {
                r += f * v[j];
            }
        }
        acc += u[i] * r;
    }
    acc
}

/// Inverse of a square matrix by Gauss-Jordan elimination; `None` when singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { int(1) } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let delta = f * a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `x * B = target` for `x`, where `B` has independent rows.
/// Returns `None` when `target` is outside the row span.
pub fn solve_row_combination(basis: &Matrix, target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let d = target.len();
    // Columns of the augmented system: unknowns are the k coefficients.
    let mut a: Vec<Vec<Rational>> = (0..d)
        .map(|j| {
            let mut row: Vec<Rational> = (0..k).map(|i| basis[i][j]).collect();
            row.push(target[j]);
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let p = (pivot_row..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, p);
        let pv = a[pivot_row][col];
        for x in a[pivot_row].iter_mut() {
            *x /= pv;
        }
        for r in 0..d {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..=k {
                    let delta = f * a[pivot_row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k]).collect())
}
