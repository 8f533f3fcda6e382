//! Order-preserving bijections between special partition sets and the
//! Lusztig–Spaltenstein / Barbasch–Vogan dualities at the partition level.
//!
//! | map    | domain            | codomain          |
//! |--------|-------------------|-------------------|
//! | `f_BC` | `P_{0,1}(2n+1)`   | `P_{1,0}(2n)`     |
//! | `f_CB` | `P_{1,0}(2n)`     | `P_{0,1}(2n+1)`   |
//! | `f_DC` | `P_{0,0}(2n)`     | `P_{1,1}(2n)`     |
//! | `f_CD` | `P_{1,1}(2n)`     | `P_{0,0}(2n)`     |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ClassicalFamily, Epsilon, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualityMap {
    FBc,
    FCb,
    FDc,
    FCd,
    Ls,
    Bv,
}

impl FromStr for DualityMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f-bc" => Ok(DualityMap::FBc),
            "f-cb" => Ok(DualityMap::FCb),
            "f-dc" => Ok(DualityMap::FDc),
            "f-cd" => Ok(DualityMap::FCd),
            "ls" => Ok(DualityMap::Ls),
            "bv" => Ok(DualityMap::Bv),
            other => Err(Error::Parse(format!("unknown duality map {other:?}"))),
        }
    }
}

impl fmt::Display for DualityMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DualityMap::FBc => "f-bc",
            DualityMap::FCb => "f-cb",
            DualityMap::FDc => "f-dc",
            DualityMap::FCd => "f-cd",
            DualityMap::Ls => "ls",
            DualityMap::Bv => "bv",
        };
        f.write_str(s)
    }
}

/// `P^{sp}_B(2n+1) = P_{0,1}`
pub fn is_b_special(d: &Partition) -> bool {
    d.size() % 2 == 1 && d.is_special_class(Epsilon::Orthogonal, 1)
}

/// `P^{sp}_C(2n) = P_{1,0}`
pub fn is_c_special(d: &Partition) -> bool {
    d.size().is_multiple_of(2) && d.is_special_class(Epsilon::Symplectic, 0)
}

/// `P^{sp}_D(2n) = P_{0,0}`
pub fn is_d_special(d: &Partition) -> bool {
    d.size().is_multiple_of(2) && d.is_special_class(Epsilon::Orthogonal, 0)
}

/// `P^{ms}_C(2n) = P_{1,1}`
pub fn is_c_metaplectic_special(d: &Partition) -> bool {
    d.size().is_multiple_of(2) && d.is_special_class(Epsilon::Symplectic, 1)
}

/// Special partitions for the family (all partitions for type A).
pub fn is_special(d: &Partition, family: ClassicalFamily) -> bool {
    match family {
        ClassicalFamily::A => true,
        ClassicalFamily::B => is_b_special(d),
        ClassicalFamily::C => is_c_special(d),
        ClassicalFamily::D => is_d_special(d),
    }
}

fn require(ok: bool, what: &str, d: &Partition) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::DomainViolation(format!("[{d}] is not in {what}")))
    }
}

pub fn f_bc(d: &Partition) -> Result<Partition> {
    require(is_b_special(d), "P_B^sp", d)?;
    f_bc_unchecked(d)
}

pub fn f_cb(d: &Partition) -> Result<Partition> {
    require(is_c_special(d), "P_C^sp", d)?;
    f_cb_unchecked(d)
}

pub fn f_dc(d: &Partition) -> Result<Partition> {
    require(is_d_special(d), "P_D^sp", d)?;
    f_dc_unchecked(d)
}

pub fn f_cd(d: &Partition) -> Result<Partition> {
    require(is_c_metaplectic_special(d), "P_C^ms", d)?;
    f_cd_unchecked(d)
}

/// `(d⁻)_C` without the domain check.
pub fn f_bc_unchecked(d: &Partition) -> Result<Partition> {
    d.d_minus()?.collapse(ClassicalFamily::C)
}

/// `(d⁺)_B` without the domain check.
pub fn f_cb_unchecked(d: &Partition) -> Result<Partition> {
    d.d_plus().collapse(ClassicalFamily::B)
}

/// `((d⁺)⁻)_C` without the domain check.
pub fn f_dc_unchecked(d: &Partition) -> Result<Partition> {
    d.d_plus().d_minus()?.collapse(ClassicalFamily::C)
}

/// `d_D` without the domain check.
pub fn f_cd_unchecked(d: &Partition) -> Result<Partition> {
    d.collapse(ClassicalFamily::D)
}

/// Lusztig–Spaltenstein duality: the `X`-collapse of the transpose (plain
/// transpose in type A).
pub fn d_ls(d: &Partition, family: ClassicalFamily) -> Result<Partition> {
    require(is_special(d, family), &format!("the special set of type {family}"), d)?;
    d_ls_unchecked(d, family)
}

pub fn d_ls_unchecked(d: &Partition, family: ClassicalFamily) -> Result<Partition> {
    match family {
        ClassicalFamily::A => Ok(d.transpose()),
        f => d.transpose().collapse(f),
    }
}

/// Barbasch–Vogan duality `f ∘ d_LS`, where `family` names the side `d`
/// lives on: B goes to C through `f_BC`, C to B through `f_CB`, D to the
/// metaplectic-special C set through `f_DC`; type A is the transpose.
pub fn d_bv(d: &Partition, family: ClassicalFamily) -> Result<Partition> {
    let dual = d_ls(d, family)?;
    match family {
        ClassicalFamily::A => Ok(dual),
        ClassicalFamily::B => f_bc(&dual),
        ClassicalFamily::C => f_cb(&dual),
        ClassicalFamily::D => f_dc(&dual),
    }
}

pub fn d_bv_unchecked(d: &Partition, family: ClassicalFamily) -> Result<Partition> {
    let dual = d_ls_unchecked(d, family)?;
    match family {
        ClassicalFamily::A => Ok(dual),
        ClassicalFamily::B => f_bc_unchecked(&dual),
        ClassicalFamily::C => f_cb_unchecked(&dual),
        ClassicalFamily::D => f_dc_unchecked(&dual),
    }
}

/// Dispatches a map by name. The `f` maps ignore `family`.
pub fn apply(map: DualityMap, d: &Partition, family: ClassicalFamily, checked: bool) -> Result<Partition> {
    match (map, checked) {
        (DualityMap::FBc, true) => f_bc(d),
        (DualityMap::FBc, false) => f_bc_unchecked(d),
        (DualityMap::FCb, true) => f_cb(d),
        (DualityMap::FCb, false) => f_cb_unchecked(d),
        (DualityMap::FDc, true) => f_dc(d),
        (DualityMap::FDc, false) => f_dc_unchecked(d),
        (DualityMap::FCd, true) => f_cd(d),
        (DualityMap::FCd, false) => f_cd_unchecked(d),
        (DualityMap::Ls, true) => d_ls(d, family),
        (DualityMap::Ls, false) => d_ls_unchecked(d, family),
        (DualityMap::Bv, true) => d_bv(d, family),
        (DualityMap::Bv, false) => d_bv_unchecked(d, family),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClassicalFamily::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn springer_pair_examples() {
        assert_eq!(f_bc(&p("3,1,1")).unwrap(), p("2,2"));
        assert_eq!(f_bc(&p("1,1,1")).unwrap(), p("1,1"));
        assert_eq!(f_bc(&p("5,3,3")).unwrap(), p("4,4,2"));
        assert_eq!(f_cb(&p("2,2")).unwrap(), p("3,1,1"));
        assert_eq!(f_cb(&p("1,1")).unwrap(), p("1,1,1"));
        assert_eq!(f_cb(&p("4,4,2")).unwrap(), p("5,3,3"));
    }

    #[test]
    fn metaplectic_pair_examples() {
        assert_eq!(f_dc(&p("9,1")).unwrap(), p("10"));
        assert_eq!(f_dc(&p("5,5")).unwrap(), p("6,4"));
        assert_eq!(f_dc(&p("1,1")).unwrap(), p("2"));
        assert_eq!(f_cd(&p("6,4")).unwrap(), p("5,5"));
        assert_eq!(f_cd(&p("10")).unwrap(), p("9,1"));
        assert_eq!(f_cd(&p("2")).unwrap(), p("1,1"));
    }

    #[test]
    fn domain_checks() {
        assert!(matches!(f_bc(&p("2,2")), Err(Error::DomainViolation(_))));
        assert!(matches!(f_dc(&p("2,1,1")), Err(Error::DomainViolation(_))));
        // The unchecked route still computes something.
        assert!(f_dc_unchecked(&p("2,1,1")).is_ok());
    }

    #[test]
    fn lusztig_spaltenstein_examples() {
        assert_eq!(d_ls(&p("2,2"), C).unwrap(), p("2,2"));
        assert_eq!(d_ls(&p("3,1"), A).unwrap(), p("2,1,1"));
        // Regular orbit of so(10) goes to the zero orbit.
        assert_eq!(d_ls(&p("9,1"), D).unwrap(), Partition::ones(10));
    }

    #[test]
    fn barbasch_vogan_examples() {
        assert_eq!(d_bv(&p("2,2"), C).unwrap(), p("3,1,1"));
        assert_eq!(d_bv(&p("3,1"), A).unwrap(), p("2,1,1"));
        // d_LS([5,1]) = [1^6], then f_DC([1^6]) = ([2,1^5]⁻)_C = [2,1^4].
        assert_eq!(d_bv(&p("5,1"), D).unwrap(), p("2,1,1,1,1"));
    }
}
