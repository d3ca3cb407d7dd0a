//! Affine real roots, words in the affine Weyl group, inversion sets and the
//! alcove regions 𝒞 ⊆ 𝒞_s ⊆ 2𝒞.
//!
//! Letters of a word run over `0..=p`: letter 0 is the affine reflection s₀
//! (for α₀ = δ − θ) and letter `i ≥ 1` is the simple reflection for α_i,
//! i.e. simple-root index `i − 1`. A word `[i_ℓ, …, i_1]` denotes the
//! product `s_{i_ℓ} ⋯ s_{i_1}`, so the rightmost letter acts first.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational, RationalVector};
use crate::rootsys::{Root, RootSystem};

/// Real affine root `finite + level·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineRoot {
    #[serde(rename = "coeffs")]
    pub finite: Root,
    #[serde(rename = "delta")]
    pub level: i64,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i64) -> Self {
        Self { finite, level }
    }

    /// Validated constructor: the finite part must be a root.
    pub fn checked(rs: &RootSystem, finite: Root, level: i64) -> Result<Self> {
        rs.check_root(&finite)?;
        Ok(Self { finite, level })
    }

    /// α₀ = δ − θ for letter 0, α_i for letter `i ≥ 1`.
    pub fn simple(rs: &RootSystem, letter: usize) -> Self {
        if letter == 0 {
            Self::new(rs.theta().negated(), 1)
        } else {
            Self::new(rs.simple_root(letter - 1), 0)
        }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }

    pub fn negated(&self) -> Self {
        Self::new(self.finite.negated(), -self.level)
    }
}

impl Ord for AffineRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level
            .cmp(&other.level)
            .then_with(|| self.finite.cmp(&other.finite))
    }
}

impl PartialOrd for AffineRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level {
            0 => write!(f, "{}", self.finite),
            1 => write!(f, "d{:+}", Signed(&self.finite)),
            -1 => write!(f, "-d{:+}", Signed(&self.finite)),
            k => write!(f, "{k}d{:+}", Signed(&self.finite)),
        }
    }
}

struct Signed<'a>(&'a Root);

impl fmt::Display for Signed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.to_string();
        if f.sign_plus() && !s.starts_with('-') {
            write!(f, "+{s}")
        } else {
            write!(f, "{s}")
        }
    }
}

fn check_letter(rs: &RootSystem, letter: usize) -> Result<()> {
    if letter > rs.rank() {
        Err(Error::LetterOutOfRange {
            letter,
            rank: rs.rank(),
        })
    } else {
        Ok(())
    }
}

/// Linear action of one simple reflection on an affine root.
///
/// `s_i(β + kδ) = s_i(β) + kδ` and `s₀(β + kδ) = s_θ(β) + (k + ⟨β, θ^∨⟩)δ`.
pub fn reflect_affine(rs: &RootSystem, letter: usize, r: &AffineRoot) -> AffineRoot {
    if letter == 0 {
        let k = rs.coroot_pairing(r.finite.coeffs(), rs.theta());
        AffineRoot::new(r.finite.minus(&rs.theta().scaled(k)), r.level + k)
    } else {
        AffineRoot::new(rs.reflect(letter - 1, &r.finite), r.level)
    }
}

/// `w(r)`: letters applied right to left.
pub fn apply_word_linear(rs: &RootSystem, letters: &[usize], r: &AffineRoot) -> AffineRoot {
    letters
        .iter()
        .rev()
        .fold(r.clone(), |acc, &i| reflect_affine(rs, i, &acc))
}

/// `w⁻¹(r)`: letters applied left to right.
pub fn apply_inverse_linear(rs: &RootSystem, letters: &[usize], r: &AffineRoot) -> AffineRoot {
    letters
        .iter()
        .fold(r.clone(), |acc, &i| reflect_affine(rs, i, &acc))
}

/// N̂(w) by the recursion N̂(s_i·w) = N̂(w) ∪ {w⁻¹(α_i)} when w⁻¹(α_i) > 0,
/// and N̂(w) \ {−w⁻¹(α_i)} otherwise. Sorted.
pub fn inversion_set(rs: &RootSystem, letters: &[usize]) -> Vec<AffineRoot> {
    let mut inv: Vec<AffineRoot> = Vec::new();
    for (pos, &i) in letters.iter().enumerate().rev() {
        let suffix = &letters[pos + 1..];
        let r = apply_inverse_linear(rs, suffix, &AffineRoot::simple(rs, i));
        if r.is_positive() {
            inv.push(r);
        } else {
            let neg = r.negated();
            inv.retain(|x| *x != neg);
        }
    }
    inv.sort();
    inv
}

/// N̂(w) by scanning every positive affine root of level at most `len(w)`.
pub fn inversion_set_by_scan(rs: &RootSystem, letters: &[usize]) -> Vec<AffineRoot> {
    let finite: Vec<Root> = rs
        .positive_roots()
        .iter()
        .flat_map(|r| [r.clone(), r.negated()])
        .collect();
    let mut out = Vec::new();
    for k in 0..=letters.len() as i64 {
        for beta in &finite {
            let r = AffineRoot::new(beta.clone(), k);
            if r.is_positive() && !apply_word_linear(rs, letters, &r).is_positive() {
                out.push(r);
            }
        }
    }
    out.sort();
    out
}

/// Element of the affine Weyl group given by a word, with its inversion set
/// cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylWord {
    letters: Vec<usize>,
    inversions: Vec<AffineRoot>,
    reduced: bool,
}

impl WeylWord {
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            check_letter(rs, l)?;
        }
        let inversions = inversion_set(rs, &letters);
        let reduced = inversions.len() == letters.len();
        Ok(Self {
            letters,
            inversions,
            reduced,
        })
    }

    pub fn identity() -> Self {
        Self {
            letters: Vec::new(),
            inversions: Vec::new(),
            reduced: true,
        }
    }

    /// `s_i · self`, updating the inversion set incrementally.
    pub fn prepend(&self, rs: &RootSystem, letter: usize) -> Result<Self> {
        check_letter(rs, letter)?;
        let r = apply_inverse_linear(rs, &self.letters, &AffineRoot::simple(rs, letter));
        let mut inversions = self.inversions.clone();
        if r.is_positive() {
            let pos = inversions.binary_search(&r).unwrap_or_else(|p| p);
            inversions.insert(pos, r);
        } else {
            let neg = r.negated();
            inversions.retain(|x| *x != neg);
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        let reduced = self.reduced && inversions.len() == letters.len();
        Ok(Self {
            letters,
            inversions,
            reduced,
        })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inversion_set(&self) -> &[AffineRoot] {
        &self.inversions
    }

    /// ℓ(w) = #N̂(w).
    pub fn length(&self) -> usize {
        self.inversions.len()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The word of w⁻¹.
    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let letters: Vec<usize> = self.letters.iter().rev().copied().collect();
        Self::new(rs, letters).expect("letters already validated")
    }

    /// Right factors `s_{i_j} ⋯ s_{i_1}` for j = 0..=ℓ, shortest first.
    pub fn right_substrings(&self, rs: &RootSystem) -> Vec<WeylWord> {
        let n = self.letters.len();
        (0..=n)
            .map(|j| Self::new(rs, self.letters[n - j..].to_vec()).expect("validated"))
            .collect()
    }

    /// True when N̂(w) = {δ − γ : γ ∈ I} for a set I of positive roots.
    pub fn is_minuscule(&self) -> bool {
        self.inversions
            .iter()
            .all(|r| r.level == 1 && r.finite.negated().is_positive())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// Interior point of 𝒞: `(Σ ω_i^∨)/h` with `h = 1 + ht(θ)`. It satisfies
/// `(α_i, x₀) = 1/h` and `(θ, x₀) = (h − 1)/h`.
pub fn base_point(rs: &RootSystem) -> RationalVector {
    let p = rs.rank();
    let h = 1 + rs.theta().height();
    let sum = (0..p)
        .map(|i| rs.fundamental_coweight(i).expect("index in range"))
        .fold(RationalVector::zero(p), |acc, w| &acc + &w);
    sum.scale(&(int(1) / int(h)))
}

fn affine_reflect_point(rs: &RootSystem, letter: usize, x: &RationalVector) -> RationalVector {
    if letter == 0 {
        // reflection in H_{θ,1}: s_θ(x) + θ^∨
        let theta = rs.theta().to_rational();
        let theta_vee = theta.scale(&(int(2) / int(rs.norm(rs.theta()))));
        let k = rs.inner(x, &theta_vee);
        &(x - &theta.scale(&k)) + &theta_vee
    } else {
        rs.reflect_vector(letter - 1, x)
    }
}

/// Dot action `w·x`, letters applied right to left.
pub fn apply_word_affine(rs: &RootSystem, letters: &[usize], x: &RationalVector) -> RationalVector {
    letters
        .iter()
        .rev()
        .fold(x.clone(), |acc, &i| affine_reflect_point(rs, i, &acc))
}

/// `w⁻¹·x`, letters applied left to right.
pub fn apply_inverse_affine(
    rs: &RootSystem,
    letters: &[usize],
    x: &RationalVector,
) -> RationalVector {
    letters
        .iter()
        .fold(x.clone(), |acc, &i| affine_reflect_point(rs, i, &acc))
}

/// Membership of a point in 𝒞, 2𝒞 and 𝒞_s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub in_c: bool,
    pub in_2c: bool,
    pub in_cs: bool,
}

/// Decides the region of `x`. For simply-laced systems there is no θ_s and
/// 𝒞_s is taken to be 𝒞. Any equality on a wall is an error.
pub fn region(rs: &RootSystem, x: &RationalVector) -> Result<Region> {
    if x.len() != rs.rank() {
        return Err(Error::RankMismatch {
            got: x.len(),
            rank: rs.rank(),
        });
    }
    let zero = int(0);
    let one = int(1);
    let two = int(2);
    let wall = |name: String| Err(Error::AmbiguousRegion(name));

    let mut dominant = true;
    for i in 0..rs.rank() {
        let v = rs.inner(&rs.simple_root(i).to_rational(), x);
        if v == zero {
            return wall(format!("(a{}, x) = 0", i + 1));
        }
        dominant &= v > zero;
    }
    let th: Rational = rs.inner(&rs.theta().to_rational(), x);
    if th == one || th == two {
        return wall(format!("(theta, x) = {th}"));
    }
    let ths = match rs.theta_s() {
        Some(s) => {
            let v = rs.inner(&s.to_rational(), x);
            if v == one {
                return wall("(theta_s, x) = 1".into());
            }
            v
        }
        None => th.clone(),
    };
    let region = Region {
        in_c: dominant && th < one,
        in_2c: dominant && th < two,
        in_cs: dominant && ths < one,
    };
    if (region.in_c && !region.in_cs) || (region.in_cs && !region.in_2c) {
        return Err(Error::InvariantViolation(format!(
            "region chain C ⊆ C_s ⊆ 2C broken at {x}"
        )));
    }
    Ok(region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn root(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn s0_negates_alpha0() {
        let c2 = rs("C2");
        let a0 = AffineRoot::simple(&c2, 0);
        assert_eq!(a0, AffineRoot::new(root(&[-2, -1]), 1));
        assert_eq!(reflect_affine(&c2, 0, &a0), AffineRoot::new(root(&[2, 1]), -1));
    }

    #[test]
    fn s0_on_c2_level_one_root() {
        let c2 = rs("C2");
        let r = AffineRoot::new(root(&[-1, -1]), 1);
        assert_eq!(reflect_affine(&c2, 0, &r), AffineRoot::new(root(&[1, 0]), 0));
    }

    #[test]
    fn word_application() {
        let c2 = rs("C2");
        let a0 = AffineRoot::simple(&c2, 0);
        assert_eq!(apply_word_linear(&c2, &[], &a0), a0);
        let img = apply_word_linear(&c2, &[1, 0], &a0);
        assert_eq!(AffineRoot::new(img.finite, img.level + 1), AffineRoot::new(root(&[0, 1]), 0));
    }

    #[test]
    fn inversion_set_fixtures() {
        let c2 = rs("C2");
        assert_eq!(inversion_set(&c2, &[0]), vec![AffineRoot::new(root(&[-2, -1]), 1)]);
        assert!(inversion_set(&c2, &[]).is_empty());
        let mut expected = vec![
            AffineRoot::new(root(&[-2, -1]), 1),
            AffineRoot::new(root(&[-1, -1]), 1),
        ];
        expected.sort();
        assert_eq!(inversion_set(&c2, &[1, 0]), expected);
        assert_eq!(inversion_set_by_scan(&c2, &[1, 0]), expected);
    }

    #[test]
    fn non_reduced_word_is_flagged() {
        let c2 = rs("C2");
        let w = WeylWord::new(&c2, vec![1, 1]).unwrap();
        assert!(!w.is_reduced());
        assert_eq!(w.length(), 0);
        assert!(WeylWord::new(&c2, vec![3]).is_err());
    }

    #[test]
    fn base_point_values() {
        let c2 = rs("C2");
        let x0 = base_point(&c2);
        assert_eq!(c2.inner(&c2.theta().to_rational(), &x0), rat(3, 4));
        assert_eq!(c2.inner(&c2.theta_s().unwrap().to_rational(), &x0), rat(1, 2));
        for i in 0..2 {
            assert_eq!(c2.inner(&c2.simple_root(i).to_rational(), &x0), rat(1, 4));
        }
    }

    #[test]
    fn affine_action_of_s0() {
        let c2 = rs("C2");
        let x0 = base_point(&c2);
        assert_eq!(apply_word_affine(&c2, &[], &x0), x0);
        let y = apply_inverse_affine(&c2, &[0], &x0);
        assert_eq!(c2.inner(&c2.theta().to_rational(), &y), rat(5, 4));
        assert!(c2.inner(&c2.theta_s().unwrap().to_rational(), &y) < int(1));
    }

    #[test]
    fn regions() {
        let c2 = rs("C2");
        let x0 = base_point(&c2);
        let all = Region { in_c: true, in_2c: true, in_cs: true };
        assert_eq!(region(&c2, &x0).unwrap(), all);
        let none = Region { in_c: false, in_2c: false, in_cs: false };
        assert_eq!(region(&c2, &x0.scale(&int(3))).unwrap(), none);
        let y = apply_word_affine(&c2, &[0], &x0);
        assert_eq!(
            region(&c2, &y).unwrap(),
            Region { in_c: false, in_2c: true, in_cs: true }
        );
        assert!(matches!(
            region(&c2, &RationalVector::zero(2)),
            Err(Error::AmbiguousRegion(_))
        ));
    }
}
