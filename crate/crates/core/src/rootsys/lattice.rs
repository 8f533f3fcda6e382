use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{half, int, invert, parse_rational, solve_row_combination, Matrix, Rational, Vector};

use super::{Family, LieType};

/// A lattice given by independent basis rows in ambient coordinates.
///
/// The basis need not be square: the trace-zero lattice of type `A` has
/// rank one less than its ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    pub basis: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticePreset {
    Root,
    Integer,
    Weight,
}

impl FromStr for LatticePreset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "root" => Ok(LatticePreset::Root),
            "integer" => Ok(LatticePreset::Integer),
            "weight" => Ok(LatticePreset::Weight),
            other => Err(Error::Parse(format!("unknown lattice preset {other:?}"))),
        }
    }
}

impl fmt::Display for LatticePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticePreset::Root => "root",
            LatticePreset::Integer => "integer",
            LatticePreset::Weight => "weight",
        })
    }
}

/// Lattices in `e_i` coordinates that are stable under signed (or, for
/// `TraceZero`, plain) coordinate permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordinateLattice {
    /// `ℤⁿ`
    Integer,
    /// Integer vectors with even coordinate sum.
    EvenSum,
    /// `ℤⁿ ∪ (ℤⁿ + ½𝟙)`
    IntegerHalf,
    /// Integer vectors with coordinate sum zero.
    TraceZero,
}

impl CoordinateLattice {
    pub fn lattice(self, n: usize) -> Lattice {
        let rows = match self {
            CoordinateLattice::Integer => unit_rows(n),
            CoordinateLattice::EvenSum => even_sum_rows(n),
            CoordinateLattice::IntegerHalf => {
                let mut rows = unit_rows(n);
                if let Some(last) = rows.last_mut() {
                    *last = Vector(vec![half(); n]);
                }
                rows
            }
            CoordinateLattice::TraceZero => (0..n.saturating_sub(1))
                .map(|i| {
                    let mut v = Vector::zeros(n);
                    v[i] = int(1);
                    v[i + 1] = int(-1);
                    v
                })
                .collect(),
        };
        Lattice { basis: rows, name: None }
    }

    /// Whether `v` lies in the lattice.
    pub fn contains(self, v: &Vector) -> bool {
        let all_int = v.iter().all(|x| x.is_integer());
        let sum: Rational = v.iter().sum();
        match self {
            CoordinateLattice::Integer => all_int,
            CoordinateLattice::EvenSum => all_int && (sum.to_integer() % 2 == 0),
            CoordinateLattice::IntegerHalf => {
                all_int || v.iter().all(|x| (x - half()).is_integer())
            }
            CoordinateLattice::TraceZero => all_int && sum.is_zero(),
        }
    }
}

fn unit_rows(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut v = Vector::zeros(n);
            v[i] = int(1);
            v
        })
        .collect()
}

/// `{e_i - e_{i+1}} ∪ {2 e_n}`; for `n = 1` just `{2 e_1}`.
fn even_sum_rows(n: usize) -> Vec<Vector> {
    let mut rows: Vec<Vector> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut v = Vector::zeros(n);
            v[i] = int(1);
            v[i + 1] = int(-1);
            v
        })
        .collect();
    if n > 0 {
        let mut last = Vector::zeros(n);
        last[n - 1] = int(2);
        rows.push(last);
    }
    rows
}

impl Lattice {
    pub fn new(basis: Vec<Vector>, name: Option<String>) -> Result<Self> {
        let l = Lattice { basis, name };
        l.validate()?;
        Ok(l)
    }

    fn validate(&self) -> Result<()> {
        let Some(first) = self.basis.first() else {
            return Ok(());
        };
        let d = first.len();
        if self.basis.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidLattice("basis rows have different lengths".into()));
        }
        if self.basis.len() > d {
            return Err(Error::InvalidLattice("more basis rows than coordinates".into()));
        }
        let gram: Matrix = self
            .basis
            .iter()
            .map(|u| self.basis.iter().map(|v| u.dot(v)).collect())
            .collect();
        if invert(&gram).is_none() {
            return Err(Error::InvalidLattice("basis rows are linearly dependent".into()));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ambient dimension, or `None` for the zero lattice with no rows.
    pub fn dim(&self) -> Option<usize> {
        self.basis.first().map(|r| r.len())
    }

    pub fn rows(&self) -> Matrix {
        self.basis.iter().map(|r| r.0.clone()).collect()
    }

    /// Integer coefficients of `v` in the basis, if `v` is a lattice point.
    pub fn coefficients(&self, v: &Vector) -> Option<Vec<i128>> {
        if self.basis.is_empty() {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        let c = solve_row_combination(&self.rows(), &v.0)?;
        c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.coefficients(v).is_some()
    }

    /// `self ⊆ other`.
    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|r| other.contains(r))
    }

    pub fn same_as(&self, other: &Lattice) -> bool {
        self.rank() == other.rank() && self.is_sublattice_of(other) && other.is_sublattice_of(self)
    }

    /// Recognizes the coordinate lattices that admit signed-permutation
    /// canonicalization. `TraceZero` is only offered for type `A`.
    pub fn classify(&self, allow_trace_zero: bool) -> Option<CoordinateLattice> {
        let n = self.dim()?;
        let mut candidates = vec![
            CoordinateLattice::Integer,
            CoordinateLattice::EvenSum,
            CoordinateLattice::IntegerHalf,
        ];
        if allow_trace_zero {
            candidates.push(CoordinateLattice::TraceZero);
        }
        candidates.into_iter().find(|c| {
            let cl = c.lattice(n);
            cl.rank() == self.rank()
                && self.basis.iter().all(|r| c.contains(r))
                && cl.basis.iter().all(|r| self.contains(r))
        })
    }

    /// Parses `{"basis": [[...], ...], "name": optional}` where entries are
    /// rational strings or JSON integers.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            basis: Vec<Vec<serde_json::Value>>,
            #[serde(default)]
            name: Option<String>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::InvalidLattice(format!("bad lattice file: {e}")))?;
        let entry = |v: &serde_json::Value| -> Result<Rational> {
            match v {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(|x| int(x as i128))
                    .ok_or_else(|| Error::InvalidLattice(format!("non-integer JSON number {n}; use a \"p/q\" string"))),
                other => Err(Error::InvalidLattice(format!("unexpected entry {other}"))),
            }
        };
        let basis = raw
            .basis
            .iter()
            .map(|row| row.iter().map(entry).collect::<Result<Vec<_>>>().map(Vector))
            .collect::<Result<Vec<_>>>()?;
        Lattice::new(basis, raw.name)
    }

    pub fn check_dim(&self, t: LieType) -> Result<()> {
        match self.dim() {
            Some(d) if d != t.dim() => Err(Error::DimensionMismatch { expected: t.dim(), got: d }),
            _ => Ok(()),
        }
    }
}

/// Fundamental weights in the simple-root basis: the rows of `(Aᵀ)⁻¹`
/// where `A_ij = 2 (α_i, α_j) / (α_i, α_i)`.
pub(crate) fn fundamental_weights(form: &Matrix) -> Matrix {
    let n = form.len();
    let cartan_t: Matrix = (0..n)
        .map(|i| (0..n).map(|j| int(2) * form[j][i] / form[j][j]).collect())
        .collect();
    invert(&cartan_t).expect("Cartan matrices are invertible")
}

/// Named lattices for a type, in that type's coordinates.
///
/// | type | root | integer | weight |
/// |------|------|---------|--------|
/// | `A_r` | trace-zero | `ℤ^{r+1}` | `ℤ^{r+1}` |
/// | `B_n` | `ℤⁿ` | `ℤⁿ` | `ℤⁿ + ℤ·½𝟙` |
/// | `C_n` | even sum | `ℤⁿ` | `ℤⁿ` |
/// | `D_n` | even sum | `ℤⁿ` | `ℤⁿ + ℤ·½𝟙` |
/// | exceptional | simple roots | unsupported | fundamental weights |
pub fn lattice_preset(t: LieType, preset: LatticePreset) -> Result<Lattice> {
    use CoordinateLattice as C;
    let n = t.dim();
    let coordinate = match (t.family, preset) {
        (Family::A, LatticePreset::Root) => Some(C::TraceZero),
        (Family::A, _) => Some(C::Integer),
        (Family::B, LatticePreset::Weight) | (Family::D, LatticePreset::Weight) => Some(C::IntegerHalf),
        (Family::C, LatticePreset::Root) | (Family::D, LatticePreset::Root) => Some(C::EvenSum),
        (Family::B | Family::C | Family::D, _) => Some(C::Integer),
        _ => None,
    };
    let mut lattice = match coordinate {
        Some(c) => c.lattice(n),
        None => match preset {
            LatticePreset::Root => Lattice { basis: unit_rows(n), name: None },
            LatticePreset::Weight => {
                let form = super::exceptional_form(t.family);
                Lattice { basis: fundamental_weights(&form).into_iter().map(Vector).collect(), name: None }
            }
            LatticePreset::Integer => {
                return Err(Error::UnsupportedPreset { preset: preset.to_string(), lie_type: t.to_string() })
            }
        },
    };
    lattice.name = Some(preset.to_string());
    Ok(lattice)
}
