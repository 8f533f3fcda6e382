//! Partition arithmetic for nilpotent orbits of classical Lie algebras.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. Orbits of
//! `so(N)` and `sp(N)` are labelled by ε-partitions (ε = 0 orthogonal, ε = 1
//! symplectic); the `X`-collapse maps an arbitrary partition to the largest
//! ε-partition below it in the dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on `|d|` accepted by [`brute_collapse_oracle`].
pub const DEFAULT_ORACLE_BOUND: u32 = 20;

/// Classical families. `A` is `gl(n)`, `B` is `so(2n+1)`, `C` is `sp(2n)`,
/// `D` is `so(2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicalFamily {
    A,
    B,
    C,
    D,
}

impl ClassicalFamily {
    /// The ε of the form preserved by the family; `None` for type A.
    pub fn epsilon(self) -> Option<Epsilon> {
        match self {
            ClassicalFamily::A => None,
            ClassicalFamily::B | ClassicalFamily::D => Some(Epsilon::Orthogonal),
            ClassicalFamily::C => Some(Epsilon::Symplectic),
        }
    }

    pub fn letter(self) -> char {
        match self {
            ClassicalFamily::A => 'A',
            ClassicalFamily::B => 'B',
            ClassicalFamily::C => 'C',
            ClassicalFamily::D => 'D',
        }
    }

    /// Does a partition of size `n` label orbits in this family?
    pub fn accepts_size(self, n: u32) -> bool {
        match self {
            ClassicalFamily::A => true,
            ClassicalFamily::B => n % 2 == 1,
            ClassicalFamily::C | ClassicalFamily::D => n.is_multiple_of(2),
        }
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(ClassicalFamily::A),
            "B" | "b" => Ok(ClassicalFamily::B),
            "C" | "c" => Ok(ClassicalFamily::C),
            "D" | "d" => Ok(ClassicalFamily::D),
            other => Err(Error::InvalidLieType(other.to_string())),
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// ε ∈ {0, 1}: the sign of the bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Epsilon {
    /// ε = 0
    Orthogonal,
    /// ε = 1
    Symplectic,
}

impl Epsilon {
    pub fn bit(self) -> u32 {
        match self {
            Epsilon::Orthogonal => 0,
            Epsilon::Symplectic => 1,
        }
    }

    pub fn from_bit(b: u32) -> Result<Self> {
        match b {
            0 => Ok(Epsilon::Orthogonal),
            1 => Ok(Epsilon::Symplectic),
            _ => Err(Error::RangeViolation(format!("epsilon must be 0 or 1, got {b}"))),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Epsilon::Orthogonal => Epsilon::Symplectic,
            Epsilon::Symplectic => Epsilon::Orthogonal,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} contains a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `[1^n]`
    pub fn ones(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, s: u32) -> usize {
        self.0.iter().filter(|&&p| p == s).count()
    }

    /// Number of parts `>= s`. For `s = 0` this counts every part.
    pub fn height(&self, s: u32) -> usize {
        self.0.iter().filter(|&&p| p >= s).count()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|i| self.height(i) as u32).collect())
    }

    /// Whether `other ⪯ self` in the dominance order.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size() as u64, right: other.size() as u64 });
        }
        Ok(dominates_unchecked(self, other))
    }

    /// Every part `s ≡ ε (mod 2)` occurs with even multiplicity.
    pub fn is_eps_partition(&self, eps: Epsilon) -> bool {
        let e = eps.bit();
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == s {
                j += 1;
            }
            if s % 2 == e && (j - i) % 2 == 1 {
                return false;
            }
            i = j;
        }
        true
    }

    /// Membership in `P_{ε,ε'}(|d|)`.
    ///
    /// The height test runs over the parts of `d`; for ε = 0 the padding part
    /// `s = 0` is included, whose height is the number of parts.
    pub fn is_special_class(&self, eps: Epsilon, eps_prime: u32) -> bool {
        if !self.is_eps_partition(eps) {
            return false;
        }
        let e = eps.bit();
        let mut tested: Vec<u32> = self.0.iter().copied().filter(|s| s % 2 == e).collect();
        if eps == Epsilon::Orthogonal {
            tested.push(0);
        }
        tested.dedup();
        tested.iter().all(|&s| self.height(s) as u32 % 2 == eps_prime % 2)
    }

    /// `d⁺`: add one to the largest part. `[]⁺ = [1]`.
    pub fn d_plus(&self) -> Partition {
        let mut p = self.0.clone();
        match p.first_mut() {
            Some(first) => *first += 1,
            None => p.push(1),
        }
        Partition(p)
    }

    /// `d⁻`: subtract one from the smallest part, dropping it if it vanishes.
    pub fn d_minus(&self) -> Result<Partition> {
        let mut p = self.0.clone();
        let last = p.last_mut().ok_or(Error::EmptyPartition)?;
        *last -= 1;
        if *last == 0 {
            p.pop();
        }
        Ok(Partition(p))
    }

    /// The `X`-collapse: the dominance-largest ε-partition of the same size
    /// below `self`, for `X ∈ {B, C, D}`.
    ///
    /// Greedy repair: take the largest part `q ≡ ε` of odd multiplicity,
    /// lower its last occurrence by one and raise the first later part that is
    /// `< q - 1` (a padding zero if needed). Repeat until valid.
    pub fn collapse(&self, family: ClassicalFamily) -> Result<Partition> {
        let eps = collapse_epsilon(self, family)?;
        let e = eps.bit();
        let mut parts = self.0.clone();
        while let Some(q) = largest_bad_part(&parts, e) {
            let last = parts.iter().rposition(|&p| p == q).expect("part present");
            parts[last] -= 1;
            let mut j = last + 1;
            while j < parts.len() && parts[j] >= q - 1 {
                j += 1;
            }
            if j == parts.len() {
                parts.push(0);
            }
            parts[j] += 1;
            parts.retain(|&p| p > 0);
        }
        Ok(Partition(parts))
    }

    /// Concatenate parts and re-sort (`d ∪ e`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut p = self.0.clone();
        p.extend_from_slice(&other.0);
        Partition::from_unsorted(p)
    }

    /// Add parts coordinate-wise (`(d + e)_i = d_i + e_i`).
    pub fn add_rows(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_unsorted((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }
}

fn collapse_epsilon(d: &Partition, family: ClassicalFamily) -> Result<Epsilon> {
    let eps = family
        .epsilon()
        .ok_or_else(|| Error::DomainViolation("collapse is defined for B, C, D only".into()))?;
    if !family.accepts_size(d.size()) {
        return Err(Error::ParityMismatch { size: d.size() as u64, family: family.letter() });
    }
    Ok(eps)
}

fn largest_bad_part(parts: &[u32], e: u32) -> Option<u32> {
    let mut i = 0;
    while i < parts.len() {
        let s = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == s {
            j += 1;
        }
        if s % 2 == e && (j - i) % 2 == 1 {
            return Some(s);
        }
        i = j;
    }
    None
}

fn dominates_unchecked(p: &Partition, q: &Partition) -> bool {
    let n = p.len().max(q.len());
    let (mut sp, mut sq) = (0u64, 0u64);
    for i in 0..n {
        sp += p.part(i) as u64;
        sq += q.part(i) as u64;
        if sq > sp {
            return false;
        }
    }
    true
}

/// `q ⪯ p`, assuming equal sizes.
pub fn leq(q: &Partition, p: &Partition) -> bool {
    dominates_unchecked(p, q)
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Independent collapse: scan every partition of `|d|`, keep the ε-partitions
/// dominated by `d`, and return the one dominating all others.
pub fn brute_collapse_oracle(d: &Partition, family: ClassicalFamily) -> Result<Partition> {
    brute_collapse_oracle_bounded(d, family, DEFAULT_ORACLE_BOUND)
}

pub fn brute_collapse_oracle_bounded(
    d: &Partition,
    family: ClassicalFamily,
    bound: u32,
) -> Result<Partition> {
    if d.size() > bound {
        return Err(Error::BoundExceeded(format!("|d| = {} > {bound}", d.size())));
    }
    let eps = collapse_epsilon(d, family)?;
    let candidates: Vec<Partition> = partitions_of(d.size())
        .into_iter()
        .filter(|p| p.is_eps_partition(eps) && leq(p, d))
        .collect();
    candidates
        .iter()
        .find(|m| candidates.iter().all(|p| leq(p, m)))
        .cloned()
        .ok_or_else(|| Error::NoMaximum(d.to_string()))
}

impl PartialOrd for Partition {
    /// Dominance order; `None` for incomparable partitions or different sizes.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        match (leq(self, other), leq(other, self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"a,b,c"` (brackets and `^` exponents like `1^8` are accepted).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.trim().parse::<usize>().map_err(|_| bad_part(tok))?),
                None => (tok, 1),
            };
            let v: u32 = base.trim().parse().map_err(|_| bad_part(tok))?;
            parts.extend(std::iter::repeat_n(v, exp));
        }
        Partition::new(parts)
    }
}

fn bad_part(tok: &str) -> Error {
    Error::Parse(format!("bad partition part {tok:?}"))
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
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
    fn multiplicity_and_height() {
        assert_eq!(p("5,5").multiplicity(5), 2);
        assert_eq!(p("9,1").multiplicity(5), 0);
        assert_eq!(p("3,1,1").multiplicity(1), 2);
        assert_eq!(p("3,1,1").height(1), 3);
        assert_eq!(p("3,1,1").height(3), 1);
        assert_eq!(p("6,4").height(5), 1);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("2,1,1").transpose(), p("3,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("10").transpose(), Partition::ones(10));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("6,4").dominates(&p("5,5")).unwrap());
        assert!(!p("5,5").dominates(&p("6,4")).unwrap());
        assert!(p("9,1").dominates(&p("5,5")).unwrap());
        assert_eq!(
            p("5,5").dominates(&p("5,4")),
            Err(Error::SizeMismatch { left: 10, right: 9 })
        );
    }

    #[test]
    fn eps_and_special_membership() {
        assert!(p("2,2").is_eps_partition(Epsilon::Symplectic));
        assert!(!p("3,1").is_eps_partition(Epsilon::Symplectic));
        assert!(!p("6,4").is_eps_partition(Epsilon::Orthogonal));
        assert!(p("9,1").is_special_class(Epsilon::Orthogonal, 0));
        assert!(p("6,4").is_special_class(Epsilon::Symplectic, 1));
        // No odd parts, so the height condition is vacuous; [2,2]ᵗ = [2,2] is a D-partition.
        assert!(p("2,2").is_special_class(Epsilon::Symplectic, 1));
        assert!(!p("4,2").is_special_class(Epsilon::Orthogonal, 0));
        // Non-special orbit of sp(4).
        assert!(!p("2,1,1").is_special_class(Epsilon::Symplectic, 0));
        assert!(p("2,2").is_special_class(Epsilon::Symplectic, 0));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(p("3,2").collapse(B).unwrap(), p("3,1,1"));
        assert_eq!(p("6,4").collapse(D).unwrap(), p("5,5"));
        assert_eq!(p("2,2").collapse(C).unwrap(), p("2,2"));
        assert_eq!(p("3,1").collapse(C).unwrap(), p("2,2"));
        assert_eq!(
            p("3,1").collapse(B),
            Err(Error::ParityMismatch { size: 4, family: 'B' })
        );
    }

    #[test]
    fn plus_minus() {
        assert_eq!(p("9,1").d_plus(), p("10,1"));
        assert_eq!(p("10,1").d_minus().unwrap(), p("10"));
        assert_eq!(p("5,5").d_plus(), p("6,5"));
        assert_eq!(Partition::empty().d_minus(), Err(Error::EmptyPartition));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_collapse_oracle(&p("3,2"), B).unwrap(), p("3,1,1"));
        assert_eq!(brute_collapse_oracle(&p("10"), C).unwrap(), p("10"));
        assert_eq!(brute_collapse_oracle(&p("2"), D).unwrap(), p("1,1"));
        assert!(matches!(
            brute_collapse_oracle(&p("21"), B),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn parses_exponent_notation() {
        assert_eq!(p("3^2,1^3"), p("3,3,1,1,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
