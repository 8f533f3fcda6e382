//! Exact root data for the simple types, lattices, Levi and pseudo-Levi
//! classification, root counting, and lattice-ball enumeration.
//!
//! Coordinate conventions:
//!
//! * `A_r`: `r + 1` coordinates (`gl(r+1)` Cartan), roots `e_i - e_j`.
//! * `B_n`, `C_n`, `D_n`: `n` coordinates `e_i`, Euclidean form.
//! * exceptional types: coordinates in the simple-root basis; the invariant
//!   form is normalized so that long roots have squared length 2.

mod enumerate;
mod lattice;
mod levi;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::ClassicalFamily;
use crate::rational::{bilinear, identity, int, rat, Matrix, Rational, Vector};

pub use enumerate::{box_scan, enumerate_coset_ball, BallEnumerator};
pub use lattice::{lattice_preset, CoordinateLattice, Lattice, LatticePreset};
pub use levi::{
    centralizer_levi, centralizer_levi_roots, factor_roots, integral_pseudo_levi, ClassLabel,
    ClassicalFactor, GlBlock, LeviDecomposition, Residual,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidLieType(format!("{family:?} with rank {rank}")))
        }
    }

    pub fn classical(family: ClassicalFamily, rank: usize) -> Result<Self> {
        let f = match family {
            ClassicalFamily::A => Family::A,
            ClassicalFamily::B => Family::B,
            ClassicalFamily::C => Family::C,
            ClassicalFamily::D => Family::D,
        };
        LieType::new(f, rank)
    }

    pub fn classical_family(&self) -> Option<ClassicalFamily> {
        match self.family {
            Family::A => Some(ClassicalFamily::A),
            Family::B => Some(ClassicalFamily::B),
            Family::C => Some(ClassicalFamily::C),
            Family::D => Some(ClassicalFamily::D),
            _ => None,
        }
    }

    pub fn is_classical(&self) -> bool {
        self.classical_family().is_some()
    }

    /// Number of coordinates of a vector in this type's convention.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// The family of the Langlands dual algebra (classical types only).
    pub fn dual_family(&self) -> Option<ClassicalFamily> {
        self.classical_family().map(|f| match f {
            ClassicalFamily::B => ClassicalFamily::C,
            ClassicalFamily::C => ClassicalFamily::B,
            other => other,
        })
    }

    /// Which coordinate system vectors of this type are written in.
    pub fn basis_name(&self) -> &'static str {
        if self.is_classical() {
            "standard"
        } else {
            "simple-root"
        }
    }

    pub fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() })
        }
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidLieType(s.to_string());
        let (head, digits) = t.split_at(1);
        let rank: usize = digits.parse().map_err(|_| bad())?;
        let family = match head {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => match rank {
                6 => Family::E6,
                7 => Family::E7,
                8 => Family::E8,
                _ => return Err(bad()),
            },
            "F" => Family::F4,
            "G" => Family::G2,
            _ => return Err(bad()),
        };
        LieType::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 | Family::E7 | Family::E8 => "E",
            Family::F4 => "F",
            Family::G2 => "G",
        };
        write!(f, "{letter}{}", self.rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub roots: Vec<Vector>,
    /// `2α / (α, α)`, parallel to `roots`.
    pub coroots: Vec<Vector>,
    /// Symmetric positive-definite invariant form.
    pub form: Matrix,
}

impl RootSystem {
    pub fn norm_sq(&self, v: &Vector) -> Rational {
        bilinear(&self.form, &v.0, &v.0)
    }

    pub fn pairing(&self, u: &Vector, v: &Vector) -> Rational {
        bilinear(&self.form, &u.0, &v.0)
    }

    pub fn positive_root_count(&self) -> usize {
        self.roots.len() / 2
    }

    /// Human-readable statement of the form normalization.
    pub fn normalization(&self) -> &'static str {
        if self.lie_type.is_classical() {
            "euclidean form in e_i coordinates"
        } else {
            "long roots have squared length 2 (simple-root basis)"
        }
    }
}

/// Squared length of `v` under the invariant form of `rs`.
pub fn norm_sq(v: &Vector, rs: &RootSystem) -> Rational {
    rs.norm_sq(v)
}

/// `#{α : (v, α) = 0}`.
pub fn n_roots_vanishing(v: &Vector, rs: &RootSystem) -> usize {
    rs.roots.iter().filter(|a| rs.pairing(v, a).is_zero()).count()
}

/// Closed-form root counts.
pub fn expected_root_count(t: LieType) -> usize {
    let n = t.rank;
    match t.family {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::G2 => 12,
        Family::F4 => 48,
        Family::E6 => 72,
        Family::E7 => 126,
        Family::E8 => 240,
    }
}

pub fn build_root_system(t: LieType) -> RootSystem {
    let (roots, form) = match t.family {
        Family::A | Family::B | Family::C | Family::D => (classical_roots(t), identity(t.dim())),
        _ => {
            let form = exceptional_form(t.family);
            (roots_from_form(&form), form)
        }
    };
    let coroots = roots
        .iter()
        .map(|a| {
            let len = bilinear(&form, &a.0, &a.0);
            a.scale(&(int(2) / len))
        })
        .collect();
    RootSystem { lie_type: t, roots, coroots, form }
}

fn unit(n: usize, i: usize, c: i128) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = int(c);
    v
}

fn classical_roots(t: LieType) -> Vec<Vector> {
    let n = t.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            // e_i - e_j
            let mut v = unit(n, i, 1);
            v[j] = int(-1);
            out.push(Vector(v));
            if t.family != Family::A && i < j {
                for s in [1, -1] {
                    let mut w = unit(n, i, s);
                    w[j] = int(s);
                    out.push(Vector(w));
                }
            }
        }
    }
    match t.family {
        Family::B => (0..n).for_each(|i| {
            out.push(Vector(unit(n, i, 1)));
            out.push(Vector(unit(n, i, -1)));
        }),
        Family::C => (0..n).for_each(|i| {
            out.push(Vector(unit(n, i, 2)));
            out.push(Vector(unit(n, i, -2)));
        }),
        _ => {}
    }
    out
}

/// Gram matrix of the simple roots (Bourbaki numbering), long roots of
/// squared length 2.
pub fn exceptional_form(family: Family) -> Matrix {
    let z = Rational::zero;
    let (n, edges, lengths): (usize, Vec<(usize, usize, Rational)>, Vec<Rational>) = match family {
        Family::G2 => (2, vec![(0, 1, int(-1))], vec![rat(2, 3), int(2)]),
        Family::F4 => (
            4,
            vec![(0, 1, int(-1)), (1, 2, int(-1)), (2, 3, rat(-1, 2))],
            vec![int(2), int(2), int(1), int(1)],
        ),
        Family::E6 | Family::E7 | Family::E8 => {
            let n = match family {
                Family::E6 => 6,
                Family::E7 => 7,
                _ => 8,
            };
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            let mut edges = vec![(0, 2, int(-1)), (1, 3, int(-1)), (2, 3, int(-1))];
            for i in 3..n - 1 {
                edges.push((i, i + 1, int(-1)));
            }
            (n, edges, vec![int(2); n])
        }
        _ => unreachable!("classical families use the Euclidean form"),
    };
    let mut form = vec![vec![z(); n]; n];
    for (i, l) in lengths.into_iter().enumerate() {
        form[i][i] = l;
    }
    for (i, j, v) in edges {
        form[i][j] = v;
        form[j][i] = v;
    }
    form
}

/// All roots, in the simple-root basis, generated from the simple-root Gram
/// matrix by root strings.
fn roots_from_form(form: &Matrix) -> Vec<Vector> {
    let n = form.len();
    // Positive roots as integer coefficient vectors, grouped by height.
    let mut positive: Vec<Vec<i64>> = (0..n).map(|i| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    }).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut layer = positive.clone();
    let to_rat = |v: &[i64]| -> Vec<Rational> { v.iter().map(|&x| int(x as i128)).collect() };
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            let b = to_rat(beta);
            for i in 0..n {
                // p: how far down the i-string from beta goes.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let alpha = unit(n, i, 1);
                let cartan = int(2) * bilinear(form, &b, &alpha) / form[i][i];
                let q = int(p) - cartan;
                if q > Rational::zero() {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        positive.extend(next.iter().cloned());
        layer = next;
    }
    let mut all: Vec<Vector> = positive.iter().map(|v| Vector(to_rat(v))).collect();
    let negatives: Vec<Vector> = all.iter().map(|v| -v).collect();
    all.extend(negatives);
    all
}

/// The Weyl vector `ρ` (half the sum of positive roots) in this type's coordinates.
pub fn rho(rs: &RootSystem) -> Vector {
    let t = rs.lie_type;
    let dim = t.dim();
    let mut acc = Vector::zeros(dim);
    for a in positive_roots(rs) {
        acc = &acc + a;
    }
    acc.scale(&rat(1, 2))
}

/// Positive roots: for classical types those whose first nonzero coordinate
/// is positive; for exceptional types those with nonnegative coefficients.
pub fn positive_roots(rs: &RootSystem) -> impl Iterator<Item = &Vector> {
    rs.roots.iter().filter(|a| {
        a.iter().find(|x| !x.is_zero()).map(|x| *x > Rational::zero()).unwrap_or(false)
    })
}

/// Simple reflection images: `s_α(v) = v - <v, α̌> α`.
pub fn reflect(rs: &RootSystem, v: &Vector, root_index: usize) -> Vector {
    let a = &rs.roots[root_index];
    let c = rs.pairing(v, &rs.coroots[root_index]);
    v - &a.scale(&c)
}

/// Convert fundamental-weight coordinates to the simple-root basis.
pub fn from_fundamental_weights(rs: &RootSystem, coeffs: &Vector) -> Result<Vector> {
    let t = rs.lie_type;
    if t.is_classical() {
        return Err(Error::InvalidLieType(format!(
            "fundamental-weight input is only used for exceptional types, got {t}"
        )));
    }
    t.check_dim(coeffs)?;
    let weights = lattice::fundamental_weights(&rs.form);
    let mut out = Vector::zeros(t.dim());
    for (c, w) in coeffs.iter().zip(&weights) {
        out = &out + &Vector(w.clone()).scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for s in ["A1", "A4", "B3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"] {
            let t = lt(s);
            let rs = build_root_system(t);
            assert_eq!(rs.roots.len(), expected_root_count(t), "{s}");
        }
        assert_eq!(build_root_system(lt("B3")).roots.len(), 18);
    }

    #[test]
    fn coroot_pairing_and_negation() {
        for s in ["B3", "C3", "G2", "F4", "E6"] {
            let rs = build_root_system(lt(s));
            for (a, c) in rs.roots.iter().zip(&rs.coroots) {
                assert_eq!(rs.pairing(a, c), int(2));
                assert!(rs.roots.contains(&-a));
            }
        }
    }

    #[test]
    fn long_roots_have_length_two() {
        for s in ["G2", "F4", "E8"] {
            let rs = build_root_system(lt(s));
            let max = rs.roots.iter().map(|a| rs.norm_sq(a)).max().unwrap();
            assert_eq!(max, int(2), "{s}");
        }
    }

    #[test]
    fn norms_of_counterexample_characters() {
        let rs = build_root_system(lt("D10"));
        let l1: Vector = "9/2,7/2,5/2,3/2,1/2,2,1,2,1,0".parse().unwrap();
        let l2: Vector = "5/2,3/2,1/2,3/2,1/2,4,3,2,1,0".parse().unwrap();
        assert_eq!(norm_sq(&l1, &rs), rat(205, 4));
        assert_eq!(norm_sq(&l2, &rs), rat(165, 4));
        assert_eq!(norm_sq(&Vector::zeros(10), &rs), int(0));
    }

    #[test]
    fn vanishing_root_counts() {
        let g2 = build_root_system(lt("G2"));
        assert_eq!(n_roots_vanishing(&Vector::zeros(2), &g2), 12);
        assert_eq!(n_roots_vanishing(&rho(&g2), &g2), 0);
        let b3 = build_root_system(lt("B3"));
        assert_eq!(n_roots_vanishing(&Vector::from_ints(&[1, 1, 0]), &b3), 4);
    }

    #[test]
    fn parses_types() {
        assert_eq!(lt("D10").dim(), 10);
        assert_eq!(lt("A3").dim(), 4);
        assert_eq!(lt("E8").family, Family::E8);
        assert!("D1".parse::<LieType>().is_err());
        assert!("E9".parse::<LieType>().is_err());
        assert!("F5".parse::<LieType>().is_err());
        assert_eq!(lt("g2").to_string(), "G2");
    }

    #[test]
    fn rho_norms() {
        // With long roots of length 2: |ρ|² = 14/3 for G2, 39 for F4, 620 for E8.
        assert_eq!(norm_sq(&rho(&build_root_system(lt("G2"))), &build_root_system(lt("G2"))), rat(14, 3));
        let f4 = build_root_system(lt("F4"));
        assert_eq!(norm_sq(&rho(&f4), &f4), int(39));
        let e8 = build_root_system(lt("E8"));
        assert_eq!(norm_sq(&rho(&e8), &e8), int(620));
    }
}
