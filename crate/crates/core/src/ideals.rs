//! Abelian ideals of the Borel subalgebra as sets of positive roots.
//!
//! Two independent enumerations are provided: a breadth-first search over
//! minuscule elements of the affine Weyl group, and a plain upper-set search
//! in the root poset that uses no Weyl group machinery at all.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::affine::{apply_inverse_affine, apply_inverse_linear, apply_word_linear, base_point,
    region, AffineRoot, WeylWord};
use crate::error::{Error, Result};
use crate::poset::{bits, Poset};
use crate::rootsys::{Root, RootSystem};

/// Largest #Δ⁺ the upper-set oracle accepts.
pub const ORACLE_MAX_POSITIVE_ROOTS: usize = 30;

/// Combinatorial Abelian ideal together with its minuscule element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianIdeal {
    indices: Vec<usize>,
    roots: Vec<Root>,
    word: WeylWord,
}

impl AbelianIdeal {
    fn from_indices(rs: &RootSystem, mut indices: Vec<usize>, word: WeylWord) -> Self {
        indices.sort_unstable();
        let roots = indices
            .iter()
            .map(|&i| rs.positive_roots()[i].clone())
            .collect();
        Self {
            indices,
            roots,
            word,
        }
    }

    /// Roots in the fixed height-then-lexicographic order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Positions of the roots in `rs.positive_roots()`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The minuscule element `w⟨I⟩` as reached by the search.
    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    pub fn is_subset_of(&self, other: &AbelianIdeal) -> bool {
        self.roots.iter().all(|r| other.contains(r))
    }
}

fn positive_indices(rs: &RootSystem, set: &[Root]) -> Result<Vec<usize>> {
    set.iter()
        .map(|r| {
            rs.check_root(r)?;
            rs.check_positive(r)
        })
        .collect()
}

/// Conditions (a) and (b): no two members sum to a root, and the set is
/// closed under adding positive roots.
pub fn is_abelian_ideal(rs: &RootSystem, set: &[Root]) -> Result<bool> {
    let idx: HashSet<usize> = positive_indices(rs, set)?.into_iter().collect();
    let members: Vec<&Root> = idx.iter().map(|&i| &rs.positive_roots()[i]).collect();
    for (a, mu) in members.iter().enumerate() {
        for nu in &members[a..] {
            if rs.contains(&mu.plus(nu)) {
                return Ok(false);
            }
        }
        for nu in rs.positive_roots() {
            if let Some(j) = rs.index_of(&mu.plus(nu)) {
                if !idx.contains(&j) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All Abelian ideals through minuscule elements.
///
/// From a minuscule `w` and a letter `i`, `r = w⁻¹(α_i)`; when `r = δ − γ`
/// with γ ∈ Δ⁺ \ I_w, the element `s_i·w` is minuscule with ideal
/// `I_w ∪ {γ}`. Ideals are returned in breadth-first order (by size), each
/// with the first word that reached it.
pub fn enumerate_ideals(rs: &RootSystem) -> Vec<AbelianIdeal> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<(Vec<usize>, WeylWord)> = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(Vec::new());
    queue.push_back((Vec::new(), WeylWord::identity()));

    while let Some((ideal, word)) = queue.pop_front() {
        for letter in 0..=rs.rank() {
            let r = apply_inverse_linear(rs, word.letters(), &AffineRoot::simple(rs, letter));
            if r.level != 1 {
                continue;
            }
            let Some(gamma) = rs.index_of(&r.finite.negated()) else {
                continue;
            };
            if ideal.binary_search(&gamma).is_ok() {
                continue;
            }
            let mut next = ideal.clone();
            let pos = next.binary_search(&gamma).unwrap_err();
            next.insert(pos, gamma);
            if seen.insert(next.clone()) {
                let w = word.prepend(rs, letter).expect("letter in range");
                queue.push_back((next, w));
            }
        }
        out.push(AbelianIdeal::from_indices(rs, ideal, word));
    }
    out
}

/// The root poset on Δ⁺: γ lies below γ + ν for ν ∈ Δ⁺.
pub fn root_poset(rs: &RootSystem) -> Result<Poset> {
    let roots = rs.positive_roots();
    let covers: Vec<u128> = roots
        .iter()
        .map(|g| {
            roots
                .iter()
                .filter_map(|nu| rs.index_of(&g.plus(nu)))
                .fold(0u128, |acc, j| acc | 1u128 << j)
        })
        .collect();
    Poset::from_relation(&covers)
}

/// Upper sets of the root poset satisfying condition (a), as sorted root
/// lists. Independent of the affine Weyl group.
pub fn oracle_enumerate_ideals(rs: &RootSystem) -> Result<Vec<Vec<Root>>> {
    let n = rs.positive_roots().len();
    if n > ORACLE_MAX_POSITIVE_ROOTS {
        return Err(Error::GuardExceeded {
            what: "#positive roots",
            got: n,
            limit: ORACLE_MAX_POSITIVE_ROOTS,
            hint: "use enumerate_ideals for large systems",
        });
    }
    let poset = root_poset(rs)?;
    let roots = rs.positive_roots();
    let mut out: Vec<Vec<Root>> = poset
        .upper_sets()
        .into_iter()
        .filter(|&mask| {
            let members: Vec<usize> = bits(mask).collect();
            members.iter().enumerate().all(|(a, &i)| {
                members[a..]
                    .iter()
                    .all(|&j| !rs.contains(&roots[i].plus(&roots[j])))
            })
        })
        .map(|mask| bits(mask).map(|i| roots[i].clone()).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// τ(I) = w(α₀) + δ, a long positive root.
pub fn rootlet(rs: &RootSystem, ideal: &AbelianIdeal) -> Result<Root> {
    if ideal.is_empty() {
        return Err(Error::RootletUndefined);
    }
    let img = apply_word_linear(rs, ideal.word().letters(), &AffineRoot::simple(rs, 0));
    let tau = AffineRoot::new(img.finite, img.level + 1);
    if tau.level != 0 || rs.index_of(&tau.finite).is_none() || !rs.is_long(&tau.finite) {
        return Err(Error::InvariantViolation(format!(
            "rootlet {tau} of word {} is not a long positive root",
            ideal.word()
        )));
    }
    Ok(tau.finite)
}

/// Every root of the ideal is long. The empty ideal is long.
pub fn is_long_ideal(rs: &RootSystem, ideal: &AbelianIdeal) -> bool {
    ideal.roots().iter().all(|r| rs.is_long(r))
}

/// The four tests for a long ideal. They always agree; [`Self::check`]
/// turns a disagreement into an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongCharacterizations {
    /// Every root is long.
    pub by_roots: bool,
    /// The word has no short simple reflection (s₀ counts as long).
    pub by_word: bool,
    /// w⁻¹·x₀ lies in 𝒞_s.
    pub by_alcove: bool,
    /// θ − τ(I) has zero short-simple coefficients.
    pub by_rootlet: bool,
}

impl LongCharacterizations {
    pub fn agree(&self) -> bool {
        self.by_roots == self.by_word
            && self.by_roots == self.by_alcove
            && self.by_roots == self.by_rootlet
    }

    pub fn check(self, rs: &RootSystem, ideal: &AbelianIdeal) -> Result<Self> {
        if self.agree() {
            Ok(self)
        } else {
            Err(Error::InvariantViolation(format!(
                "{}: long characterizations disagree for word {}: {self:?}",
                rs.simple_type(),
                ideal.word()
            )))
        }
    }
}

pub fn long_characterizations(
    rs: &RootSystem,
    ideal: &AbelianIdeal,
) -> Result<LongCharacterizations> {
    let by_roots = is_long_ideal(rs, ideal);
    let by_word = ideal
        .word()
        .letters()
        .iter()
        .all(|&l| l == 0 || !rs.is_short_simple(l - 1));
    let image = apply_inverse_affine(rs, ideal.word().letters(), &base_point(rs));
    let by_alcove = region(rs, &image)?.in_cs;
    let by_rootlet = if ideal.is_empty() {
        by_roots
    } else {
        let diff = rs.theta().minus(&rootlet(rs, ideal)?);
        diff.coeffs()
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || !rs.is_short_simple(i))
    };
    Ok(LongCharacterizations {
        by_roots,
        by_word,
        by_alcove,
        by_rootlet,
    })
}

/// Minimal roots of the ideal in the root poset.
pub fn generators(rs: &RootSystem, ideal: &AbelianIdeal) -> Vec<Root> {
    ideal
        .roots()
        .iter()
        .filter(|g| {
            !rs.positive_roots()
                .iter()
                .any(|nu| ideal.contains(&g.minus(nu)))
        })
        .cloned()
        .collect()
}

/// Long ideals of a two-length system; the count is checked against
/// `∏m_i/∏c_i`.
pub fn long_ideals(rs: &RootSystem) -> Result<Vec<AbelianIdeal>> {
    let expected = rs.long_ideal_count_formula()?.ratio;
    let long: Vec<AbelianIdeal> = enumerate_ideals(rs)
        .into_iter()
        .filter(|i| is_long_ideal(rs, i))
        .collect();
    if long.len() as i64 != expected {
        return Err(Error::InvariantViolation(format!(
            "{}: {} long ideals, volume formula predicts {expected}",
            rs.simple_type(),
            long.len()
        )));
    }
    Ok(long)
}

/// Inclusion-maximal long ideals.
pub fn maximal_long_ideals(rs: &RootSystem) -> Result<Vec<AbelianIdeal>> {
    let long = long_ideals(rs)?;
    Ok(long
        .iter()
        .filter(|a| !long.iter().any(|b| b.len() > a.len() && a.is_subset_of(b)))
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    fn root(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    fn find<'a>(ideals: &'a [AbelianIdeal], roots: &[Root]) -> &'a AbelianIdeal {
        let mut want = roots.to_vec();
        want.sort();
        ideals.iter().find(|i| i.roots() == want.as_slice()).unwrap()
    }

    #[test]
    fn abelian_ideal_predicate() {
        let c2 = rs("C2");
        assert!(is_abelian_ideal(&c2, &[]).unwrap());
        assert!(is_abelian_ideal(&c2, &[c2.theta().clone()]).unwrap());
        assert!(!is_abelian_ideal(&c2, &[root(&[2, 1]), root(&[1, 1]), root(&[1, 0])]).unwrap());
        let g2 = rs("G2");
        assert!(is_abelian_ideal(&g2, &[root(&[3, 2]), root(&[3, 1])]).unwrap());
        assert!(matches!(
            is_abelian_ideal(&c2, &[root(&[1, 2])]),
            Err(Error::NotARoot(_))
        ));
        assert!(matches!(
            is_abelian_ideal(&c2, &[root(&[-1, 0])]),
            Err(Error::NotPositive(_))
        ));
    }

    #[test]
    fn c2_ideals() {
        let c2 = rs("C2");
        let ideals = enumerate_ideals(&c2);
        let sets: Vec<Vec<Root>> = ideals.iter().map(|i| i.roots().to_vec()).collect();
        assert_eq!(
            sets,
            vec![
                vec![],
                vec![root(&[2, 1])],
                vec![root(&[1, 1]), root(&[2, 1])],
                vec![root(&[0, 1]), root(&[1, 1]), root(&[2, 1])],
            ]
        );
        assert_eq!(ideals[1].word().letters(), &[0]);
        assert_eq!(ideals[2].word().letters(), &[1, 0]);
    }

    #[test]
    fn a1_ideals() {
        let a1 = rs("A1");
        let ideals = enumerate_ideals(&a1);
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[1].roots(), &[root(&[1])]);
    }

    #[test]
    fn oracle_counts() {
        for (t, n) in [("C2", 4), ("G2", 4), ("B3", 8)] {
            assert_eq!(oracle_enumerate_ideals(&rs(t)).unwrap().len(), n, "{t}");
        }
        assert!(matches!(
            oracle_enumerate_ideals(&rs("E6")),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn rootlets() {
        let c2 = rs("C2");
        let ideals = enumerate_ideals(&c2);
        assert_eq!(rootlet(&c2, &ideals[1]).unwrap(), *c2.theta());
        assert_eq!(rootlet(&c2, &ideals[2]).unwrap(), root(&[0, 1]));
        assert_eq!(rootlet(&c2, &ideals[0]), Err(Error::RootletUndefined));
    }

    #[test]
    fn long_classification_c2() {
        let c2 = rs("C2");
        let ideals = enumerate_ideals(&c2);
        assert!(is_long_ideal(&c2, &ideals[0]));
        assert!(is_long_ideal(&c2, &ideals[1]));
        assert!(!is_long_ideal(&c2, &ideals[2]));
        let all = LongCharacterizations {
            by_roots: true,
            by_word: true,
            by_alcove: true,
            by_rootlet: true,
        };
        assert_eq!(long_characterizations(&c2, &ideals[0]).unwrap(), all);
        assert_eq!(long_characterizations(&c2, &ideals[1]).unwrap(), all);
        let none = LongCharacterizations {
            by_roots: false,
            by_word: false,
            by_alcove: false,
            by_rootlet: false,
        };
        assert_eq!(long_characterizations(&c2, &ideals[2]).unwrap(), none);
    }

    #[test]
    fn f4_maximal_long_ideal_and_generator() {
        let f4 = rs("F4");
        let max = maximal_long_ideals(&f4).unwrap();
        assert_eq!(max.len(), 1);
        let theta = f4.theta().clone();
        let t1 = theta.minus(&root(&[0, 0, 0, 1]));
        let t2 = t1.minus(&root(&[0, 0, 1, 0]));
        let mut want = vec![theta, t1, t2.clone()];
        want.sort();
        assert_eq!(max[0].roots(), want.as_slice());
        assert_eq!(generators(&f4, &max[0]), vec![t2]);
    }

    #[test]
    fn g2_long_ideals() {
        let g2 = rs("G2");
        let long = long_ideals(&g2).unwrap();
        let sets: Vec<Vec<Root>> = long.iter().map(|i| i.roots().to_vec()).collect();
        assert_eq!(
            sets,
            vec![vec![], vec![root(&[3, 2])], vec![root(&[3, 1]), root(&[3, 2])]]
        );
    }

    #[test]
    fn generators_of_theta() {
        let b3 = rs("B3");
        let ideals = enumerate_ideals(&b3);
        let single = find(&ideals, &[b3.theta().clone()]);
        assert_eq!(generators(&b3, single), vec![b3.theta().clone()]);
    }

    #[test]
    fn simply_laced_has_no_long_ideal_count() {
        assert!(matches!(long_ideals(&rs("D4")), Err(Error::SimplyLaced(_))));
    }
}
