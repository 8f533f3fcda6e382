use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::ClassicalFamily;
use crate::rational::{frac, half, int, Rational, Vector};

use super::LieType;

/// Congruence class of the coordinates carried by a factor of `ǧ_Λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Integer,
    HalfInteger,
    /// `±t + ℤ` with `0 < t < ½`.
    Pair(Rational),
    /// `r + ℤ` with `0 ≤ r < 1` (type `A`).
    Residue(Rational),
    /// A whole algebra, not attached to a congruence class.
    Whole,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Integer => f.write_str("integer"),
            ClassLabel::HalfInteger => f.write_str("half-integer"),
            ClassLabel::Pair(t) => write!(f, "±{t}"),
            ClassLabel::Residue(r) => write!(f, "{r}+Z"),
            ClassLabel::Whole => f.write_str("whole"),
        }
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A simple (or `gl`) factor of a classical algebra, sitting on a subset of
/// the ambient coordinates.
///
/// For `gl` factors inside an orthogonal or symplectic algebra the factor's
/// roots are `σ_i e_i - σ_j e_j`; `signs` stores the `σ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassicalFactor {
    /// `A` for `gl`, otherwise `so(odd)`, `sp`, `so(even)`.
    #[serde(serialize_with = "family_letter")]
    pub family: ClassicalFamily,
    pub coords: Vec<usize>,
    pub signs: Vec<i8>,
    pub label: ClassLabel,
}

fn family_letter<S: Serializer>(f: &ClassicalFamily, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

impl ClassicalFactor {
    /// The factor covering all coordinates of a classical algebra.
    pub fn whole(family: ClassicalFamily, rank: usize) -> Self {
        ClassicalFactor { family, coords: (0..rank).collect(), signs: vec![1; rank], label: ClassLabel::Whole }
    }

    /// Number of coordinates (the rank, except `gl(n)` has `n`).
    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn matrix_size(&self) -> usize {
        matrix_size(self.family, self.rank())
    }

    pub fn name(&self) -> String {
        algebra_name(self.family, self.rank())
    }

    /// `v` restricted to this factor's coordinates.
    pub fn local(&self, v: &Vector) -> Vec<Rational> {
        self.coords.iter().map(|&i| v[i]).collect()
    }

    /// The partition of the zero orbit.
    pub fn zero_orbit_size(&self) -> u32 {
        self.matrix_size() as u32
    }
}

pub(crate) fn matrix_size(family: ClassicalFamily, rank: usize) -> usize {
    match family {
        ClassicalFamily::A => rank,
        ClassicalFamily::B => 2 * rank + 1,
        ClassicalFamily::C | ClassicalFamily::D => 2 * rank,
    }
}

pub(crate) fn algebra_name(family: ClassicalFamily, rank: usize) -> String {
    match family {
        ClassicalFamily::A => format!("gl({rank})"),
        ClassicalFamily::C => format!("sp({})", 2 * rank),
        f => format!("so({})", matrix_size(f, rank)),
    }
}

/// Positive roots of the factor's family on `n` coordinates (`gl(n)` for `A`).
pub(crate) fn positive_root_count(family: ClassicalFamily, n: usize) -> usize {
    match family {
        ClassicalFamily::A => n * n.saturating_sub(1) / 2,
        ClassicalFamily::B | ClassicalFamily::C => n * n,
        ClassicalFamily::D => n * n.saturating_sub(1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GlBlock {
    pub size: usize,
    /// `|v|` for an orthogonal/symplectic factor, `σ_i v_i` for a `gl` factor.
    #[serde(with = "crate::rational::as_string")]
    pub value: Rational,
    /// Local coordinate indices within the ambient factor.
    pub coords: Vec<usize>,
    /// Signs `τ_i` with roots `τ_i e_i - τ_j e_j`.
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Residual {
    #[serde(serialize_with = "family_letter")]
    pub family: ClassicalFamily,
    pub rank: usize,
    pub coords: Vec<usize>,
}

/// A Levi subalgebra of one classical factor: `gl` blocks plus, for `B`,
/// `C`, `D` ambients, a residual block of the ambient family (possibly of
/// rank zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LeviDecomposition {
    #[serde(serialize_with = "family_letter")]
    pub ambient_family: ClassicalFamily,
    pub ambient_rank: usize,
    pub gl_blocks: Vec<GlBlock>,
    pub residual: Option<Residual>,
}

impl LeviDecomposition {
    /// A Levi given only by block sizes, with coordinates assigned in order.
    pub fn from_sizes(family: ClassicalFamily, blocks: &[usize], residual: usize) -> Result<Self> {
        if family == ClassicalFamily::A && residual != 0 {
            return Err(Error::InvalidDecomposition("gl ambients have no residual block".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidDecomposition("gl blocks must be nonempty".into()));
        }
        let mut next = 0;
        let gl_blocks = blocks
            .iter()
            .map(|&size| {
                let coords: Vec<usize> = (next..next + size).collect();
                next += size;
                GlBlock { size, value: int(next as i128), coords, signs: vec![1; size] }
            })
            .collect();
        let res = (family != ClassicalFamily::A).then(|| Residual {
            family,
            rank: residual,
            coords: (next..next + residual).collect(),
        });
        Ok(LeviDecomposition {
            ambient_family: family,
            ambient_rank: next + residual,
            gl_blocks,
            residual: res,
        })
    }

    pub fn residual_rank(&self) -> usize {
        self.residual.as_ref().map_or(0, |r| r.rank)
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.gl_blocks.iter().map(|b| b.size).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let covered: usize = self.gl_blocks.iter().map(|b| b.size).sum::<usize>() + self.residual_rank();
        if covered != self.ambient_rank {
            return Err(Error::InvalidDecomposition(format!(
                "blocks cover {covered} coordinates of a rank-{} factor",
                self.ambient_rank
            )));
        }
        if self.gl_blocks.iter().any(|b| b.size == 0) {
            return Err(Error::InvalidDecomposition("empty gl block".into()));
        }
        match (&self.residual, self.ambient_family) {
            (Some(_), ClassicalFamily::A) => {
                Err(Error::InvalidDecomposition("gl ambients have no residual block".into()))
            }
            (Some(r), f) if r.family != f => {
                Err(Error::InvalidDecomposition("residual family differs from the ambient".into()))
            }
            (None, f) if f != ClassicalFamily::A => {
                Err(Error::InvalidDecomposition("missing residual block".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn positive_roots(&self) -> usize {
        self.gl_blocks.iter().map(|b| positive_root_count(ClassicalFamily::A, b.size)).sum::<usize>()
            + self.residual.as_ref().map_or(0, |r| positive_root_count(r.family, r.rank))
    }

    pub fn name(&self) -> String {
        let mut parts: Vec<String> = self.gl_blocks.iter().map(|b| format!("gl({})", b.size)).collect();
        if let Some(r) = &self.residual {
            if r.rank > 0 || r.family == ClassicalFamily::B {
                parts.push(algebra_name(r.family, r.rank));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

fn sign_of(x: &Rational) -> i8 {
    if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Centralizer of `v` (given in the factor's local coordinates) inside the
/// factor.
pub fn centralizer_levi(v: &[Rational], factor: &ClassicalFactor) -> LeviDecomposition {
    let n = factor.rank();
    debug_assert_eq!(v.len(), n);
    let mut groups: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    let mut zeros = Vec::new();
    let gl = factor.family == ClassicalFamily::A;
    for i in 0..n {
        if gl {
            groups.entry(v[i] * int(factor.signs[i] as i128)).or_default().push(i);
        } else if v[i].is_zero() {
            zeros.push(i);
        } else {
            groups.entry(v[i].abs()).or_default().push(i);
        }
    }
    let gl_blocks = groups
        .into_iter()
        .rev()
        .map(|(value, coords)| GlBlock {
            size: coords.len(),
            value,
            signs: coords.iter().map(|&i| if gl { factor.signs[i] } else { sign_of(&v[i]) }).collect(),
            coords,
        })
        .collect();
    LeviDecomposition {
        ambient_family: factor.family,
        ambient_rank: n,
        gl_blocks,
        residual: (!gl).then_some(Residual { family: factor.family, rank: zeros.len(), coords: zeros }),
    }
}

fn signed_pair(n: usize, i: usize, si: i8, j: usize, sj: i8) -> Vector {
    let mut v = Vector::zeros(n);
    v[i] = int(si as i128);
    v[j] = int(sj as i128);
    v
}

/// Roots of a family on the given local coordinates (`gl` roots use `signs`).
fn roots_on(family: ClassicalFamily, n: usize, coords: &[usize], signs: &[i8]) -> Vec<Vector> {
    let mut out = Vec::new();
    for a in 0..coords.len() {
        for b in 0..coords.len() {
            if a == b {
                continue;
            }
            let (i, j) = (coords[a], coords[b]);
            match family {
                ClassicalFamily::A => out.push(signed_pair(n, i, signs[a], j, -signs[b])),
                _ => {
                    out.push(signed_pair(n, i, 1, j, -1));
                    if a < b {
                        out.push(signed_pair(n, i, 1, j, 1));
                        out.push(signed_pair(n, i, -1, j, -1));
                    }
                }
            }
        }
    }
    let scale = match family {
        ClassicalFamily::B => 1,
        ClassicalFamily::C => 2,
        _ => return out,
    };
    for &i in coords {
        for s in [scale, -scale] {
            let mut v = Vector::zeros(n);
            v[i] = int(s);
            out.push(v);
        }
    }
    out
}

/// Roots of the factor in its local coordinates.
pub fn factor_roots(factor: &ClassicalFactor) -> Vec<Vector> {
    let n = factor.rank();
    let coords: Vec<usize> = (0..n).collect();
    roots_on(factor.family, n, &coords, &factor.signs)
}

/// Roots of a Levi in the ambient factor's local coordinates.
pub fn centralizer_levi_roots(levi: &LeviDecomposition) -> Vec<Vector> {
    let n = levi.ambient_rank;
    let mut out = Vec::new();
    for b in &levi.gl_blocks {
        out.extend(roots_on(ClassicalFamily::A, n, &b.coords, &b.signs));
    }
    if let Some(r) = &levi.residual {
        out.extend(roots_on(r.family, n, &r.coords, &[]));
    }
    out
}

/// Factors of the dual pseudo-Levi `ǧ_Λ` of the integral root system of
/// `λ`, grouped by coordinate congruence class and listed in order of first
/// appearance.
pub fn integral_pseudo_levi(lambda: &Vector, g_type: LieType) -> Result<Vec<ClassicalFactor>> {
    let dual = g_type
        .dual_family()
        .ok_or_else(|| Error::NonClassicalType(g_type.to_string()))?;
    g_type.check_dim(lambda)?;
    let mut order: Vec<ClassLabel> = Vec::new();
    let mut members: BTreeMap<ClassLabel, (Vec<usize>, Vec<i8>)> = BTreeMap::new();
    for (i, x) in lambda.iter().enumerate() {
        let r = frac(x);
        let (label, sign) = if dual == ClassicalFamily::A {
            (ClassLabel::Residue(r), 1)
        } else if r.is_zero() {
            (ClassLabel::Integer, 1)
        } else if r == half() {
            (ClassLabel::HalfInteger, 1)
        } else if r < half() {
            (ClassLabel::Pair(r), 1)
        } else {
            (ClassLabel::Pair(int(1) - r), -1)
        };
        let entry = members.entry(label).or_insert_with(|| {
            order.push(label);
            (Vec::new(), Vec::new())
        });
        entry.0.push(i);
        entry.1.push(sign);
    }
    Ok(order
        .into_iter()
        .map(|label| {
            let (coords, signs) = members.remove(&label).expect("label recorded");
            let family = match (label, dual) {
                (ClassLabel::Integer, f) => f,
                (ClassLabel::HalfInteger, ClassicalFamily::C) => ClassicalFamily::C,
                (ClassLabel::HalfInteger, _) => ClassicalFamily::D,
                _ => ClassicalFamily::A,
            };
            ClassicalFactor { family, coords, signs, label }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::rootsys::build_root_system;
    use ClassicalFamily::*;

    fn v(s: &str) -> Vector {
        s.parse().unwrap()
    }

    #[test]
    fn centralizer_examples() {
        let d5 = ClassicalFactor::whole(D, 5);
        let l = centralizer_levi(&v("2,1,2,1,0").0, &d5);
        assert_eq!(l.block_sizes(), vec![2, 2]);
        assert_eq!(l.residual_rank(), 1);
        assert_eq!(l.name(), "gl(2)+gl(2)+so(2)");
        let cartan = centralizer_levi(&v("9/2,7/2,5/2,3/2,1/2").0, &d5);
        assert_eq!(cartan.block_sizes(), vec![1; 5]);
        assert_eq!(cartan.residual_rank(), 0);
        let b3 = centralizer_levi(&v("0,0,0").0, &ClassicalFactor::whole(B, 3));
        assert!(b3.gl_blocks.is_empty());
        assert_eq!(b3.name(), "so(7)");
    }

    #[test]
    fn centralizer_roots_match_vanishing_roots() {
        let cases = [(D, "2,-1,-2,1,0"), (B, "1/2,-1/2,0"), (C, "3,0,-3,1"), (A, "1,2,1,0")];
        for (family, s) in cases {
            let x = v(s);
            let f = ClassicalFactor::whole(family, x.len());
            let l = centralizer_levi(&x.0, &f);
            let mut got: Vec<Vector> = centralizer_levi_roots(&l);
            let mut want: Vec<Vector> = factor_roots(&f).into_iter().filter(|a| a.dot(&x).is_zero()).collect();
            got.sort();
            want.sort();
            assert_eq!(got, want, "{s}");
        }
    }

    #[test]
    fn pseudo_levi_examples() {
        let l1 = v("9/2,7/2,5/2,3/2,1/2,2,1,2,1,0");
        let f = integral_pseudo_levi(&l1, "D10".parse().unwrap()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].name(), "so(10)");
        assert_eq!(f[0].label, ClassLabel::HalfInteger);
        assert_eq!(f[1].name(), "so(10)");
        assert_eq!(f[1].label, ClassLabel::Integer);
        let d3 = integral_pseudo_levi(&v("5/2,3/2,1/2"), "D3".parse().unwrap()).unwrap();
        assert_eq!(d3.len(), 1);
        assert_eq!(d3[0].name(), "so(6)");
        // g = C4 has dual so(9); the ±1/4 class is a gl(4).
        let q = integral_pseudo_levi(&v("3/4,1/4,-1/4,-3/4"), "C4".parse().unwrap()).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].name(), "gl(4)");
        assert_eq!(q[0].label, ClassLabel::Pair(rat(1, 4)));
        assert_eq!(q[0].signs, vec![-1, 1, -1, 1]);
    }

    #[test]
    fn pseudo_levi_families_follow_the_dual() {
        let half = v("1/2,1/2");
        let b = integral_pseudo_levi(&half, "B2".parse().unwrap()).unwrap();
        assert_eq!(b[0].family, C);
        let c = integral_pseudo_levi(&half, "C2".parse().unwrap()).unwrap();
        assert_eq!(c[0].family, D);
        let ints = v("1,0");
        assert_eq!(integral_pseudo_levi(&ints, "C2".parse().unwrap()).unwrap()[0].family, B);
        assert!(matches!(
            integral_pseudo_levi(&ints, "G2".parse().unwrap()),
            Err(Error::NonClassicalType(_))
        ));
    }

    #[test]
    fn pseudo_levi_coroots_are_the_integral_coroots() {
        let t: LieType = "C3".parse().unwrap();
        let rs = build_root_system(t);
        let lambda = v("1/3,-2/3,1/2");
        let factors = integral_pseudo_levi(&lambda, t).unwrap();
        let mut got = Vec::new();
        for f in &factors {
            for r in factor_roots(f) {
                let mut a = Vector::zeros(3);
                for (k, &i) in f.coords.iter().enumerate() {
                    a[i] = r[k];
                }
                got.push(a);
            }
        }
        let mut want: Vec<Vector> =
            rs.coroots.iter().filter(|c| c.dot(&lambda).is_integer()).cloned().collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn from_sizes_validation() {
        let l = LeviDecomposition::from_sizes(D, &[2, 2], 1).unwrap();
        assert!(l.validate().is_ok());
        assert_eq!(l.ambient_rank, 5);
        assert!(LeviDecomposition::from_sizes(A, &[2], 1).is_err());
    }
}
