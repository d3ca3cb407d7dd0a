//! Long Abelian ideals of 𝔤 versus Borel-stable commutative subalgebras of
//! the little adjoint module of the Langlands dual 𝔤^∨.
//!
//! Weight spaces of the little adjoint module are lines indexed by the short
//! roots (plus a zero-weight space that candidates never touch). A bracket
//! of two weight vectors is taken to be nonzero exactly when the weight sum
//! is a weight of the target: any root of 𝔤^∨ for the ℤ₂-graded case, a
//! short root (a weight of W′) for the ℤ₃-graded G2 case.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{is_long_ideal, long_ideals, AbelianIdeal};
use crate::poset::{bits, Poset};
use crate::rootsys::{Family, Root, RootSystem, SimpleType};

/// Where `[V, V]` lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BracketTarget {
    /// ℤ₂-grading, `[V, V] ⊆ 𝔤^∨`: a sum that is any root brackets nontrivially.
    Adjoint,
    /// ℤ₃-grading of 𝔰𝔬₈ ⊃ G2, `[W, W] ⊆ W′`: only short-root sums count.
    LittleAdjoint,
}

impl BracketTarget {
    pub fn for_type(t: SimpleType) -> Self {
        if t.family() == Family::G {
            BracketTarget::LittleAdjoint
        } else {
            BracketTarget::Adjoint
        }
    }
}

/// Span of weight vectors for a set of positive short roots of Δ^∨.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DualSubalgebraCandidate {
    roots: Vec<Root>,
}

impl DualSubalgebraCandidate {
    /// Validates that every root is a short positive root of `rs_dual`.
    pub fn new(rs_dual: &RootSystem, mut roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            rs_dual.check_root(r)?;
            rs_dual.check_positive(r)?;
            if rs_dual.is_long(r) && rs_dual.has_two_lengths() {
                return Err(Error::InvariantViolation(format!(
                    "{r} is a long root of the dual system"
                )));
            }
        }
        roots.sort();
        roots.dedup();
        Ok(Self { roots })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

fn is_short_root(rs: &RootSystem, r: &Root) -> bool {
    rs.contains(r) && !rs.is_long(r)
}

/// `I^∨` for a long ideal `I` of `rs`.
pub fn dual_ideal(
    rs: &RootSystem,
    rs_dual: &RootSystem,
    ideal: &AbelianIdeal,
) -> Result<DualSubalgebraCandidate> {
    if !is_long_ideal(rs, ideal) {
        return Err(Error::NotLong);
    }
    let roots = ideal
        .roots()
        .iter()
        .map(|r| rs.coroot_in_dual(r))
        .collect::<Result<Vec<_>>>()?;
    DualSubalgebraCandidate::new(rs_dual, roots)
}

/// Borel stability plus commutativity for the given bracket target.
pub fn is_commutative_bstable(
    rs_dual: &RootSystem,
    candidate: &DualSubalgebraCandidate,
    target: BracketTarget,
) -> bool {
    is_bstable(rs_dual, candidate) && is_commutative(rs_dual, candidate, target)
}

fn is_bstable(rs_dual: &RootSystem, candidate: &DualSubalgebraCandidate) -> bool {
    let members: HashSet<&Root> = candidate.roots().iter().collect();
    candidate.roots().iter().all(|mu| {
        rs_dual.positive_roots().iter().all(|beta| {
            let s = mu.plus(beta);
            !is_short_root(rs_dual, &s) || members.contains(&s)
        })
    })
}

fn is_commutative(
    rs_dual: &RootSystem,
    candidate: &DualSubalgebraCandidate,
    target: BracketTarget,
) -> bool {
    let roots = candidate.roots();
    roots.iter().enumerate().all(|(a, mu)| {
        roots[a..].iter().all(|nu| {
            let s = mu.plus(nu);
            match target {
                BracketTarget::Adjoint => !rs_dual.contains(&s),
                BracketTarget::LittleAdjoint => !is_short_root(rs_dual, &s),
            }
        })
    })
}

/// Stability-closed sets of positive short roots (upper sets of the poset
/// μ < μ + β, β ∈ Δ⁺), filtered by commutativity. Sorted.
pub fn enumerate_commutative_bstable(
    rs_dual: &RootSystem,
    target: BracketTarget,
) -> Result<Vec<DualSubalgebraCandidate>> {
    let short: Vec<Root> = if rs_dual.has_two_lengths() {
        rs_dual.short_positive_roots()
    } else {
        rs_dual.positive_roots().to_vec()
    };
    let position = |r: &Root| short.iter().position(|s| s == r);
    let covers: Vec<u128> = short
        .iter()
        .map(|mu| {
            rs_dual
                .positive_roots()
                .iter()
                .filter_map(|beta| position(&mu.plus(beta)))
                .fold(0u128, |acc, j| acc | 1u128 << j)
        })
        .collect();
    let poset = Poset::from_relation(&covers)?;
    let mut out: Vec<DualSubalgebraCandidate> = poset
        .upper_sets()
        .into_iter()
        .map(|mask| DualSubalgebraCandidate {
            roots: {
                let mut v: Vec<Root> = bits(mask).map(|i| short[i].clone()).collect();
                v.sort();
                v
            },
        })
        .filter(|c| is_commutative(rs_dual, c, target))
        .collect();
    out.sort();
    Ok(out)
}

/// `#Δ_s + #Π_s`, the dimension of the little adjoint module.
pub fn little_adjoint_dimension(rs: &RootSystem) -> usize {
    let short_roots = 2 * rs.short_positive_roots().len();
    let short_simple = (0..rs.rank()).filter(|&i| rs.is_short_simple(i)).count();
    short_roots + short_simple
}

/// Expected little adjoint dimension for B_p, C_p and F4.
pub fn little_adjoint_dimension_table(t: SimpleType) -> Option<usize> {
    let p = t.rank();
    match t.family() {
        Family::B => Some(2 * p + 1),
        Family::C => Some(2 * p * p - p - 1),
        Family::F => Some(26),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityWitness {
    pub ideal: Vec<Root>,
    pub dual: Vec<Root>,
}

/// Count under the other bracket predicate, reported for G2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatePredicate {
    pub target: BracketTarget,
    pub dual_candidates: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub dual_type: SimpleType,
    pub target: BracketTarget,
    pub long_ideals: usize,
    pub dual_candidates: usize,
    pub bijection: bool,
    pub witnesses: Vec<DualityWitness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alternate: Option<AlternatePredicate>,
}

/// Compares the coroot images of the long ideals of `t` with the
/// commutative Borel-stable subalgebras on the dual side.
pub fn verify_duality_bijection(t: SimpleType) -> Result<DualityReport> {
    if !t.has_two_lengths() {
        return Err(Error::UnsupportedType(t.to_string()));
    }
    let rs = RootSystem::build(t)?;
    let rs_dual = rs.dualize()?;
    let target = BracketTarget::for_type(t);

    let long = long_ideals(&rs)?;
    let mut witnesses = Vec::with_capacity(long.len());
    let mut images = Vec::with_capacity(long.len());
    for ideal in &long {
        let d = dual_ideal(&rs, &rs_dual, ideal)?;
        witnesses.push(DualityWitness {
            ideal: ideal.roots().to_vec(),
            dual: d.roots().to_vec(),
        });
        images.push(d);
    }
    images.sort();
    let candidates = enumerate_commutative_bstable(&rs_dual, target)?;

    let alternate = if target == BracketTarget::LittleAdjoint {
        let other = enumerate_commutative_bstable(&rs_dual, BracketTarget::Adjoint)?;
        Some(AlternatePredicate {
            target: BracketTarget::Adjoint,
            dual_candidates: other.len(),
            agrees: other == candidates,
        })
    } else {
        None
    };

    Ok(DualityReport {
        simple_type: t,
        dual_type: rs_dual.simple_type(),
        target,
        long_ideals: long.len(),
        dual_candidates: candidates.len(),
        bijection: images == candidates,
        witnesses,
        alternate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::enumerate_ideals;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn root(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn dual_of_theta_in_c2_is_short_dominant_of_b2() {
        let c2 = rs("C2");
        let b2 = c2.dualize().unwrap();
        let ideals = enumerate_ideals(&c2);
        assert!(dual_ideal(&c2, &b2, &ideals[0]).unwrap().is_empty());
        let d = dual_ideal(&c2, &b2, &ideals[1]).unwrap();
        assert_eq!(d.roots(), &[b2.theta_s().unwrap().clone()]);
        assert!(is_commutative_bstable(&b2, &d, BracketTarget::Adjoint));
        assert_eq!(dual_ideal(&c2, &b2, &ideals[2]), Err(Error::NotLong));
    }

    #[test]
    fn empty_candidate_passes() {
        let b2 = rs("B2");
        let empty = DualSubalgebraCandidate::new(&b2, vec![]).unwrap();
        assert!(is_commutative_bstable(&b2, &empty, BracketTarget::Adjoint));
    }

    #[test]
    fn all_short_roots_of_g2_do_not_commute() {
        let g2 = rs("G2");
        let all = DualSubalgebraCandidate::new(&g2, g2.short_positive_roots()).unwrap();
        assert_eq!(all.len(), 3);
        assert!(!is_commutative_bstable(&g2, &all, BracketTarget::LittleAdjoint));
        assert!(!is_commutative_bstable(&g2, &all, BracketTarget::Adjoint));
    }

    #[test]
    fn candidates_reject_long_roots() {
        let b2 = rs("B2");
        assert!(DualSubalgebraCandidate::new(&b2, vec![b2.theta().clone()]).is_err());
        assert!(DualSubalgebraCandidate::new(&b2, vec![root(&[0, -1])]).is_err());
    }

    #[test]
    fn dual_counts() {
        let count = |t: &str| {
            let d = rs(t).dualize().unwrap();
            enumerate_commutative_bstable(&d, BracketTarget::for_type(t.parse().unwrap()))
                .unwrap()
                .len()
        };
        assert_eq!(count("C2"), 2);
        assert_eq!(count("B3"), 4);
        assert_eq!(count("F4"), 4);
        assert_eq!(count("G2"), 3);
    }

    #[test]
    fn g2_predicates_disagree_and_are_reported() {
        let report = verify_duality_bijection("G2".parse().unwrap()).unwrap();
        assert!(report.bijection);
        assert_eq!((report.long_ideals, report.dual_candidates), (3, 3));
        let alt = report.alternate.unwrap();
        assert_eq!(alt.dual_candidates, 2);
        assert!(!alt.agrees);
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(
            verify_duality_bijection("E6".parse().unwrap()),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn dimension_table() {
        assert_eq!(little_adjoint_dimension(&rs("F4")), 26);
        assert_eq!(little_adjoint_dimension(&rs("B4")), 9);
        assert_eq!(little_adjoint_dimension(&rs("C4")), 27);
    }
}
