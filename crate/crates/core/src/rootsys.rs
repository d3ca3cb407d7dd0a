//! Finite root systems built from Cartan matrices.
//!
//! Roots are integer coefficient vectors over the simple roots. Simple roots
//! are indexed from 0 in the API (`index 0` is α₁). The Cartan convention is
//! `a_ij = 2(α_i, α_j) / (α_i, α_i)`, so the Gram matrix is `D · A` with `D`
//! the diagonal of half squared lengths. `D` is normalized so that the short
//! simple roots have squared length 2.
//!
//! Simple-root numbering (frozen; the long-ideal fixtures depend on it):
//!
//! | type | diagram | long simple roots |
//! |------|---------|-------------------|
//! | A_p  | 1 - 2 - ... - p | all |
//! | B_p  | 1 - ... - (p-1) => p | α₁..α_{p-1} (α_p = ε_p short) |
//! | C_p  | 1 - ... - (p-1) <= p | α_p = 2ε_p |
//! | D_p  | 1 - ... - (p-2) with p-1 and p both joined to p-2 | all |
//! | E_n  | Bourbaki: 1 - 3 - 4 - 5 - ... - n, with 2 joined to 4 | all |
//! | F4   | 1 - 2 => 3 - 4 | α₃, α₄ |
//! | G2   | 1 <= 2 (triple) | α₂ |
//!
//! F4 and G2 follow the Vinberg–Onishchik numbering, in which
//! θ = 2α₁+4α₂+3α₃+2α₄ for F4 and θ = 3α₁+2α₂ for G2.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, invert, Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Cartan type such as `B4` or `G2`. Only admissible family/rank pairs can
/// be constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason| {
            Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
                reason,
            })
        };
        match family {
            Family::A if rank < 1 => reject("A needs rank >= 1"),
            Family::B if rank < 2 => reject("B needs rank >= 2"),
            Family::C if rank < 2 => reject("C needs rank >= 2"),
            Family::D if rank < 3 => reject("D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => reject("E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => reject("F needs rank 4"),
            Family::G if rank != 2 => reject("G needs rank 2"),
            _ => Ok(Self { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// True for B, C, F4 and G2.
    pub fn has_two_lengths(self) -> bool {
        matches!(self.family, Family::B | Family::C | Family::F | Family::G)
    }

    /// Type of the coroot system: B and C swap, everything else is self-dual.
    pub fn dual(self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        Self { family, ..self }
    }

    /// Every admissible type up to `max_rank`, in family-then-rank order.
    /// D starts at rank 4 (D3 coincides with A3).
    pub fn catalogue(max_rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let ranges: [(Family, usize); 7] = [
            (Family::A, 1),
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 4),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ];
        for (family, lo) in ranges {
            for rank in lo..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Cartan matrix of the frozen numbering table in the module docs.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let p = self.rank;
        let mut a = vec![vec![0i64; p]; p];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (1..p).for_each(|i| bond(i - 1, i, -1, -1)),
            Family::B => {
                (1..p - 1).for_each(|i| bond(i - 1, i, -1, -1));
                // α_{p-1} long, α_p short
                bond(p - 2, p - 1, -1, -2);
            }
            Family::C => {
                (1..p - 1).for_each(|i| bond(i - 1, i, -1, -1));
                // α_{p-1} short, α_p long
                bond(p - 2, p - 1, -2, -1);
            }
            Family::D => {
                (1..p - 1).for_each(|i| bond(i - 1, i, -1, -1));
                bond(p - 3, p - 1, -1, -1);
            }
            Family::E => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (3..p).for_each(|i| bond(i - 1, i, -1, -1));
            }
            Family::F => {
                bond(0, 1, -1, -1);
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
            }
            Family::G => bond(0, 1, -3, -1),
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::ParseType(s.to_string()));
        }
        let rank = digits
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer vector over the simple roots.
///
/// Ordered by height, then lexicographically by coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn simple(rank: usize, index: usize) -> Self {
        let mut c = vec![0; rank];
        c[index] = 1;
        Self(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coefficients non-negative and not all zero.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    pub fn negated(&self) -> Root {
        self.scaled(-1)
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector::from_ints(&self.0)
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    /// Renders as e.g. `2a1+4a2+3a3+2a4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, &self.0, "a")
    }
}

fn write_linear_combination(f: &mut impl fmt::Write, coeffs: &[i64], symbol: &str) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "{symbol}{}", i + 1)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

/// Numbers on both sides of the long-ideal volume identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeIdentity {
    /// ∏ m_i over the coefficients of θ.
    pub prod_m: i64,
    /// ∏ c_i over the coefficients of θ_s.
    pub prod_c: i64,
    pub ratio: i64,
    /// d^a with d = |θ|²/|θ_s|² and a = #long simple roots.
    pub power: i64,
}

/// Immutable root system with its positive roots, highest root and short
/// dominant root.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    half_norms: Vec<i64>,
    gram: Vec<Vec<i64>>,
    gram_inverse: Vec<Vec<Rational>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    theta: Root,
    theta_s: Option<Root>,
    long_norm: i64,
    length_ratio: i64,
    long_simple_count: usize,
}

impl RootSystem {
    /// Builds the system for `t` from the frozen Cartan table.
    pub fn build(t: SimpleType) -> Result<Self> {
        Self::from_cartan(t, t.cartan_matrix())
    }

    /// Builds a system from an explicit Cartan matrix labelled with `t`.
    /// Used for duals, whose numbering of long and short simple roots can
    /// differ from the table.
    pub fn from_cartan(t: SimpleType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let p = t.rank();
        if cartan.len() != p || cartan.iter().any(|r| r.len() != p) {
            return Err(Error::InvariantViolation(format!(
                "Cartan matrix is not {p}x{p}"
            )));
        }
        let half_norms = symmetrizer(&cartan)?;
        let gram: Vec<Vec<i64>> = (0..p)
            .map(|i| (0..p).map(|j| half_norms[i] * cartan[i][j]).collect())
            .collect();
        let gram_q: Vec<Vec<Rational>> = gram
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let gram_inverse = invert(&gram_q)
            .ok_or_else(|| Error::InvariantViolation("Gram matrix is singular".into()))?;

        let positive = generate_positive_roots(&cartan);
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let norm = |r: &Root| -> i64 {
            let c = r.coeffs();
            (0..p)
                .map(|i| (0..p).map(|j| c[i] * gram[i][j] * c[j]).sum::<i64>())
                .sum()
        };
        let theta = positive.last().cloned().expect("rank >= 1");
        let long_norm = norm(&theta);
        let theta_s = positive
            .iter()
            .rev()
            .find(|r| norm(r) < long_norm)
            .cloned();
        let length_ratio = match &theta_s {
            Some(s) => long_norm / norm(s),
            None => 1,
        };
        let long_simple_count = half_norms
            .iter()
            .filter(|&&h| 2 * h == long_norm)
            .count();

        Ok(Self {
            simple_type: t,
            cartan,
            half_norms,
            gram,
            gram_inverse,
            positive,
            index,
            theta,
            theta_s,
            long_norm,
            length_ratio,
            long_simple_count,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrized Cartan form `(α_i, α_j)`.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        self.gram
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    /// Diagonal of `D` in `gram = D · cartan`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.half_norms
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, index: usize) -> Root {
        Root::simple(self.rank(), index)
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn theta_s(&self) -> Option<&Root> {
        self.theta_s.as_ref()
    }

    /// `|θ|² / |θ_s|²`; 1 for simply-laced systems.
    pub fn length_ratio(&self) -> i64 {
        self.length_ratio
    }

    /// Number of long simple roots.
    pub fn long_simple_count(&self) -> usize {
        self.long_simple_count
    }

    pub fn has_two_lengths(&self) -> bool {
        self.theta_s.is_some()
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn index_of(&self, x: &Root) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Root) -> bool {
        x.rank() == self.rank()
            && (self.index.contains_key(x) || self.index.contains_key(&x.negated()))
    }

    pub(crate) fn check_root(&self, x: &Root) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotARoot(x.coeffs().to_vec()))
        }
    }

    pub(crate) fn check_positive(&self, x: &Root) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::NotPositive(x.coeffs().to_vec()))
    }

    /// `x + y` when it is a root.
    pub fn sum_roots(&self, x: &Root, y: &Root) -> Result<Option<Root>> {
        self.check_root(x)?;
        self.check_root(y)?;
        let s = x.plus(y);
        Ok(self.contains(&s).then_some(s))
    }

    /// `(x, y)` for integer vectors.
    pub fn int_inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let p = self.rank();
        (0..p)
            .map(|i| {
                if x[i] == 0 {
                    0
                } else {
                    x[i] * (0..p).map(|j| self.gram[i][j] * y[j]).sum::<i64>()
                }
            })
            .sum()
    }

    pub fn norm(&self, x: &Root) -> i64 {
        self.int_inner(x.coeffs(), x.coeffs())
    }

    pub fn inner(&self, u: &RationalVector, v: &RationalVector) -> Rational {
        let p = self.rank();
        let (u, v) = (u.coords(), v.coords());
        let mut acc = Rational::zero();
        for i in 0..p {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..p {
                if self.gram[i][j] != 0 && !v[j].is_zero() {
                    acc += &u[i] * int(self.gram[i][j]) * &v[j];
                }
            }
        }
        acc
    }

    /// `⟨β, α_i^∨⟩ = Σ_j β_j a_ij`.
    pub fn simple_pairing(&self, beta: &[i64], index: usize) -> i64 {
        self.cartan[index]
            .iter()
            .zip(beta)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `⟨β, γ^∨⟩ = 2(β, γ)/(γ, γ)` for a root `γ`; always an integer.
    pub fn coroot_pairing(&self, beta: &[i64], gamma: &Root) -> i64 {
        let num = 2 * self.int_inner(beta, gamma.coeffs());
        let den = self.norm(gamma);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Simple reflection `s_i(β) = β − ⟨β, α_i^∨⟩ α_i` (linear, 0-based `i`).
    pub fn reflect(&self, index: usize, beta: &Root) -> Root {
        let k = self.simple_pairing(beta.coeffs(), index);
        let mut c = beta.coeffs().to_vec();
        c[index] -= k;
        Root(c)
    }

    /// Reflection in the hyperplane orthogonal to the root `gamma`.
    pub fn reflect_in(&self, gamma: &Root, beta: &Root) -> Root {
        let k = self.coroot_pairing(beta.coeffs(), gamma);
        beta.minus(&gamma.scaled(k))
    }

    /// Simple reflection acting on a rational vector.
    pub fn reflect_vector(&self, index: usize, v: &RationalVector) -> RationalVector {
        let alpha = self.simple_root(index).to_rational();
        let k = self.inner(v, &self.coroot_vector(&self.simple_root(index)));
        v - &alpha.scale(&k)
    }

    fn coroot_vector(&self, x: &Root) -> RationalVector {
        let n = self.norm(x);
        x.to_rational().scale(&(int(2) / int(n)))
    }

    /// `x^∨ = 2x/(x, x)` in the simple-root basis.
    pub fn coroot(&self, x: &Root) -> Result<RationalVector> {
        self.check_root(x)?;
        Ok(self.coroot_vector(x))
    }

    /// Coefficients of `x^∨` over the simple coroots α_i^∨, i.e. the image
    /// of `x` in the root system of [`Self::dualize`].
    pub fn coroot_in_dual(&self, x: &Root) -> Result<Root> {
        self.check_root(x)?;
        let n = self.norm(x);
        let c = x
            .coeffs()
            .iter()
            .zip(&self.half_norms)
            .map(|(&k, &h)| {
                let num = k * 2 * h;
                debug_assert_eq!(num % n, 0);
                num / n
            })
            .collect();
        Ok(Root(c))
    }

    pub fn length_class(&self, x: &Root) -> Result<LengthClass> {
        self.check_root(x)?;
        Ok(self.length_class_unchecked(x))
    }

    pub(crate) fn length_class_unchecked(&self, x: &Root) -> LengthClass {
        if self.norm(x) == self.long_norm {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn is_long(&self, x: &Root) -> bool {
        self.length_class_unchecked(x) == LengthClass::Long
    }

    /// `true` for simple roots of the short length class.
    pub fn is_short_simple(&self, index: usize) -> bool {
        2 * self.half_norms[index] != self.long_norm
    }

    pub fn long_positive_roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| self.is_long(r))
            .cloned()
            .collect()
    }

    pub fn short_positive_roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| !self.is_long(r))
            .cloned()
            .collect()
    }

    /// The coroot system Δ^∨ with simple roots α_i^∨ (transposed Cartan
    /// matrix). [`Self::coroot_in_dual`] is the bijection Δ → Δ^∨.
    pub fn dualize(&self) -> Result<RootSystem> {
        let p = self.rank();
        let transposed = (0..p)
            .map(|i| (0..p).map(|j| self.cartan[j][i]).collect())
            .collect();
        RootSystem::from_cartan(self.simple_type.dual(), transposed)
    }

    /// `ω_i^∨` with `(ω_i^∨, α_j) = δ_ij`.
    pub fn fundamental_coweight(&self, index: usize) -> Result<RationalVector> {
        if index >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index,
                rank: self.rank(),
            });
        }
        Ok(RationalVector::new(self.gram_inverse[index].clone()))
    }

    /// Both sides of `∏ m_i / ∏ c_i = d^a`. Errors if they differ.
    pub fn long_ideal_count_formula(&self) -> Result<VolumeIdentity> {
        let theta_s = self
            .theta_s
            .as_ref()
            .ok_or_else(|| Error::SimplyLaced(self.simple_type.to_string()))?;
        let prod_m: i64 = self.theta.coeffs().iter().product();
        let prod_c: i64 = theta_s.coeffs().iter().product();
        if prod_m % prod_c != 0 {
            return Err(Error::InvariantViolation(format!(
                "{}: ∏m = {prod_m} not divisible by ∏c = {prod_c}",
                self.simple_type
            )));
        }
        let ratio = prod_m / prod_c;
        let power = self.length_ratio.pow(self.long_simple_count as u32);
        if ratio != power {
            return Err(Error::InvariantViolation(format!(
                "{}: ∏m/∏c = {ratio} but d^a = {power}",
                self.simple_type
            )));
        }
        Ok(VolumeIdentity {
            prod_m,
            prod_c,
            ratio,
            power,
        })
    }

    /// ε-coordinates for B_p and C_p in the table numbering
    /// (α_i = ε_i − ε_{i+1}, α_p = ε_p resp. 2ε_p).
    pub fn epsilon_coordinates(&self, x: &Root) -> Option<Vec<i64>> {
        let t = self.simple_type;
        if !matches!(t.family(), Family::B | Family::C) || self.cartan != t.cartan_matrix() {
            return None;
        }
        let k = x.coeffs();
        let p = k.len();
        let mut e: Vec<i64> = (0..p)
            .map(|j| k[j] - if j > 0 { k[j - 1] } else { 0 })
            .collect();
        if t.family() == Family::C {
            e[p - 1] += k[p - 1];
        }
        Some(e)
    }

    /// Human-readable root: simple-root coordinates, plus ε-coordinates for
    /// B and C.
    pub fn render(&self, x: &Root) -> String {
        match self.epsilon_coordinates(x) {
            Some(e) => {
                let mut s = String::new();
                write_linear_combination(&mut s, &e, "e").expect("string write");
                format!("{x} [{s}]")
            }
            None => x.to_string(),
        }
    }
}

/// Positive diagonal `D` with `D · A` symmetric, scaled so that the minimum
/// entry is 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let p = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; p];
    d[0] = Some(int(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..p {
            if j == i || cartan[i][j] == 0 {
                continue;
            }
            if cartan[j][i] == 0 {
                return Err(Error::InvariantViolation(
                    "Cartan matrix is not symmetrizable".into(),
                ));
            }
            let dj = d[i].clone().unwrap() * int(cartan[i][j]) / int(cartan[j][i]);
            match &d[j] {
                None => {
                    d[j] = Some(dj);
                    stack.push(j);
                }
                Some(existing) if *existing != dj => {
                    return Err(Error::InvariantViolation(
                        "Cartan matrix is not symmetrizable".into(),
                    ))
                }
                Some(_) => {}
            }
        }
    }
    let d: Vec<Rational> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::InvariantViolation("Dynkin diagram is disconnected".into())))
        .collect::<Result<_>>()?;
    let min = d.iter().min().cloned().unwrap();
    d.iter()
        .map(|x| {
            let q = x / &min;
            if q.is_integer() {
                i64::try_from(q.to_integer())
                    .map_err(|_| Error::InvariantViolation("symmetrizer overflow".into()))
            } else {
                Err(Error::InvariantViolation("non-integral length ratio".into()))
            }
        })
        .collect()
}

/// Δ⁺ by strings through simple roots, height by height. β + α_i is a root
/// iff `q − ⟨β, α_i^∨⟩ > 0`, where `q` is the length of the α_i-string
/// below β.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let p = cartan.len();
    let pairing = |beta: &Root, i: usize| -> i64 {
        cartan[i].iter().zip(beta.coeffs()).map(|(a, b)| a * b).sum()
    };
    let mut all: HashSet<Root> = HashSet::new();
    let mut frontier: Vec<Root> = (0..p).map(|i| Root::simple(p, i)).collect();
    all.extend(frontier.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..p {
                let alpha = Root::simple(p, i);
                let mut q = 0;
                let mut down = beta.minus(&alpha);
                while all.contains(&down) {
                    q += 1;
                    down = down.minus(&alpha);
                }
                if q - pairing(beta, i) > 0 {
                    let up = beta.plus(&alpha);
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Root> = all.into_iter().collect();
    roots.sort();
    roots
}
