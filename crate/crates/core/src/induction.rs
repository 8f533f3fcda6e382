//! Richardson orbits `Ind_𝔩 0` of Levi subalgebras of classical factors, and
//! per-factor orbit tuples.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{ClassicalFamily, Partition};
use crate::rootsys::{ClassicalFactor, LeviDecomposition};

/// Partition of the Richardson orbit induced from the zero orbit of `levi`.
///
/// Type `A`: the transpose of the block sizes. Types `B`, `C`, `D`: start
/// from the zero orbit of the residual block; for each `gl(a)` block add 2 to
/// the first `a` parts and collapse.
pub fn induce_zero_factor(levi: &LeviDecomposition) -> Result<Partition> {
    levi.validate()?;
    let sizes = levi.block_sizes();
    let family = levi.ambient_family;
    if family == ClassicalFamily::A {
        return Ok(Partition::from_unsorted(sizes.iter().map(|&a| a as u32).collect()).transpose());
    }
    let z = levi.residual_rank() as u32;
    let mut current = match family {
        ClassicalFamily::B => Partition::ones(2 * z + 1),
        _ => Partition::ones(2 * z),
    };
    for a in sizes {
        let mut parts = current.into_parts();
        if parts.len() < a {
            parts.resize(a, 0);
        }
        for p in parts.iter_mut().take(a) {
            *p += 2;
        }
        current = Partition::from_unsorted(parts).collapse(family)?;
    }
    Ok(current)
}

/// Dimension of the nilpotent orbit with partition `d` in the classical
/// algebra of `family` whose natural representation has dimension `|d|`.
pub fn orbit_dimension(family: ClassicalFamily, d: &Partition) -> u64 {
    let n = d.size() as u64;
    let sq: u64 = d.transpose().parts().iter().map(|&c| (c as u64) * (c as u64)).sum();
    let odd = d.parts().iter().filter(|&&p| p % 2 == 1).count() as u64;
    match family {
        ClassicalFamily::A => n * n - sq,
        ClassicalFamily::B | ClassicalFamily::D => n * n.saturating_sub(1) / 2 - (sq - odd) / 2,
        ClassicalFamily::C => n * (n + 1) / 2 - (sq + odd) / 2,
    }
}

/// Per-factor orbits over a labeled list of factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTuple {
    pub entries: Vec<(ClassicalFactor, Partition)>,
}

impl OrbitTuple {
    pub fn partitions(&self) -> Vec<&Partition> {
        self.entries.iter().map(|(_, p)| p).collect()
    }
}

/// Induces in each factor. Factors keep their order and labels.
pub fn induce_zero(levis: &[(ClassicalFactor, LeviDecomposition)]) -> Result<OrbitTuple> {
    let entries = levis
        .iter()
        .map(|(f, l)| {
            if l.ambient_family != f.family || l.ambient_rank != f.rank() {
                return Err(Error::InvalidDecomposition(format!(
                    "Levi of {} does not match factor {}",
                    l.ambient_family,
                    f.name()
                )));
            }
            induce_zero_factor(l).map(|p| (f.clone(), p))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitTuple { entries })
}

/// `a ⪯ b` in every factor.
pub fn orbit_tuple_leq(a: &OrbitTuple, b: &OrbitTuple) -> Result<bool> {
    if a.entries.len() != b.entries.len() || a.entries.iter().zip(&b.entries).any(|(x, y)| x.0 != y.0) {
        return Err(Error::FactorMismatch);
    }
    Ok(a.entries.iter().zip(&b.entries).all(|((_, p), (_, q))| crate::partition::leq(p, q)))
}
