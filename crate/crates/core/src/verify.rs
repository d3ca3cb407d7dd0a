//! Per-type invariant suite used by `verify` and the acceptance tests.

use std::collections::HashSet;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::affine::{apply_inverse_affine, base_point, region};
use crate::duality::{little_adjoint_dimension, little_adjoint_dimension_table,
    verify_duality_bijection};
use crate::error::Result;
use crate::ideals::{enumerate_ideals, is_abelian_ideal, long_characterizations, long_ideals,
    oracle_enumerate_ideals, rootlet, AbelianIdeal, ORACLE_MAX_POSITIVE_ROOTS};
use crate::rational::{int, Rational};
use crate::rootsys::{Root, RootSystem, SimpleType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, outcome: std::result::Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeVerification {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub ideals: usize,
    pub long_ideals: Option<usize>,
    pub checks: Vec<Check>,
}

impl TypeVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Outcome = std::result::Result<String, String>;

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> std::result::Result<(), String>,
) -> std::result::Result<usize, String> {
    let mut n = 0;
    for item in items {
        check(&item)?;
        n += 1;
    }
    Ok(n)
}

fn ideal_label(rs: &RootSystem, ideal: &AbelianIdeal) -> String {
    let roots: Vec<String> = ideal.roots().iter().map(|r| rs.render(r)).collect();
    format!("{{{}}} (word {})", roots.join(", "), ideal.word())
}

fn peterson_count(rs: &RootSystem, ideals: &[AbelianIdeal]) -> Outcome {
    let expected = 1usize << rs.rank();
    if ideals.len() == expected {
        Ok(format!("{} = 2^{}", ideals.len(), rs.rank()))
    } else {
        Err(format!("{} ideals, expected 2^{} = {expected}", ideals.len(), rs.rank()))
    }
}

fn ideal_invariants(rs: &RootSystem, ideals: &[AbelianIdeal]) -> Outcome {
    let n = first_failure(ideals, |i| {
        let label = || ideal_label(rs, i);
        if !is_abelian_ideal(rs, i.roots()).map_err(|e| e.to_string())? {
            return Err(format!("not Abelian or not closed: {}", label()));
        }
        if !i.word().is_reduced() || i.word().length() != i.len() {
            return Err(format!("#I != l(w): {}", label()));
        }
        if !i.is_empty() && !i.contains(rs.theta()) {
            return Err(format!("nonempty ideal without theta: {}", label()));
        }
        if !i.word().is_minuscule() {
            return Err(format!("word is not minuscule: {}", label()));
        }
        let from_word: Vec<Root> = {
            let mut v: Vec<Root> = i
                .word()
                .inversion_set()
                .iter()
                .map(|r| r.finite.negated())
                .collect();
            v.sort();
            v
        };
        if from_word != i.roots() {
            return Err(format!("inversion set does not match ideal: {}", label()));
        }
        Ok(())
    })?;
    Ok(format!("(a), (b), #I = l(w), theta in I hold for {n} ideals"))
}

fn right_substrings(rs: &RootSystem, ideals: &[AbelianIdeal]) -> Outcome {
    let n = first_failure(ideals, |i| {
        let full: HashSet<Root> = i.roots().iter().cloned().collect();
        for sub in i.word().right_substrings(rs) {
            if !sub.is_minuscule() {
                return Err(format!("right factor {sub} of {} not minuscule", i.word()));
            }
            if sub
                .inversion_set()
                .iter()
                .any(|r| !full.contains(&r.finite.negated()))
            {
                return Err(format!("right factor {sub} of {} leaves the ideal", i.word()));
            }
        }
        Ok(())
    })?;
    Ok(format!("all right factors of {n} words are minuscule"))
}

fn oracle_equivalence(rs: &RootSystem, ideals: &[AbelianIdeal]) -> Outcome {
    let oracle = oracle_enumerate_ideals(rs).map_err(|e| e.to_string())?;
    let mut bfs: Vec<Vec<Root>> = ideals.iter().map(|i| i.roots().to_vec()).collect();
    bfs.sort();
    if bfs == oracle {
        Ok(format!("{} families agree", oracle.len()))
    } else {
        let witness = bfs
            .iter()
            .find(|s| !oracle.contains(s))
            .or_else(|| oracle.iter().find(|s| !bfs.contains(s)));
        Err(format!(
            "BFS {} vs oracle {}; witness {:?}",
            bfs.len(),
            oracle.len(),
            witness
        ))
    }
}

fn rootlet_soundness(rs: &RootSystem, ideals: &[AbelianIdeal]) -> Outcome {
    let n = first_failure(ideals.iter().filter(|i| !i.is_empty()), |i| {
        let tau = rootlet(rs, i).map_err(|e| format!("{}: {e}", ideal_label(rs, i)))?;
        if rs.index_of(&tau).is_some() && rs.is_long(&tau) {
            Ok(())
        } else {
            Err(format!("rootlet {tau} of {}", ideal_label(rs, i)))
        }
    })?;
    Ok(format!("{n} rootlets are long positive roots"))
}

/// (γ, y) = Σ γ_i (α_i, y) with the simple values precomputed.
fn pair_with(values: &[Rational], gamma: &Root) -> Rational {
    gamma
        .coeffs()
        .iter()
        .zip(values)
        .filter(|(c, _)| **c != 0)
        .map(|(&c, v)| v * int(c))
        .sum()
}

fn simple_values(rs: &RootSystem, y: &crate::rational::RationalVector) -> Vec<Rational> {
    (0..rs.rank())
        .map(|i| rs.inner(&rs.simple_root(i).to_rational(), y))
        .collect()
}

fn alcove_checks(rs: &RootSystem, ideals: &[AbelianIdeal]) -> (Outcome, Outcome) {
    let x0 = base_point(rs);
    let base = simple_values(rs, &x0);
    let (zero, one) = (int(0), int(1));
    let mut separation: Outcome = Ok(String::new());
    let mut chain: Outcome = Ok(String::new());
    for i in ideals {
        let y = apply_inverse_affine(rs, i.word().letters(), &x0);
        match region(rs, &y) {
            Ok(r) if r.in_2c => {}
            Ok(_) => {
                chain = Err(format!("w^-1.x0 outside 2C for {}", ideal_label(rs, i)));
            }
            Err(e) => chain = Err(format!("{}: {e}", ideal_label(rs, i))),
        }
        let vals = simple_values(rs, &y);
        for gamma in rs.positive_roots() {
            let before = pair_with(&base, gamma);
            let after = pair_with(&vals, gamma);
            let ok = if i.contains(gamma) {
                before < one && after > one
            } else {
                after > zero && after < one
            };
            if !ok && separation.is_ok() {
                separation = Err(format!(
                    "H_(gamma,1) with gamma = {gamma}: ({before}, {after}) for {}",
                    ideal_label(rs, i)
                ));
            }
        }
        if chain.is_err() && separation.is_err() {
            break;
        }
    }
    (
        separation.map(|_| {
            format!(
                "separating walls of C and w^-1.C are exactly H_(gamma,1), gamma in I, for {} ideals",
                ideals.len()
            )
        }),
        chain.map(|_| format!("w^-1.x0 in 2C for {} ideals", ideals.len())),
    )
}

fn long_suite(rs: &RootSystem, ideals: &[AbelianIdeal], checks: &mut Vec<Check>) -> Option<usize> {
    let t = rs.simple_type();
    checks.push(Check::new(
        "volume_formula",
        rs.long_ideal_count_formula()
            .map(|v| {
                format!(
                    "prod m = {}, prod c = {}, ratio {} = d^a = {}",
                    v.prod_m, v.prod_c, v.ratio, v.power
                )
            })
            .map_err(|e| e.to_string()),
    ));

    let long = long_ideals(rs);
    let count = long.as_ref().ok().map(Vec::len);
    checks.push(Check::new(
        "long_count",
        long.as_ref()
            .map(|l| format!("{} long ideals = d^a", l.len()))
            .map_err(|e| e.to_string()),
    ));

    let four_way = first_failure(ideals, |i| {
        long_characterizations(rs, i)
            .and_then(|c| c.check(rs, i))
            .map(|_| ())
            .map_err(|e| format!("{e} at {}", ideal_label(rs, i)))
    })
    .map(|n| format!("by_roots = by_word = by_alcove = by_rootlet on {n} minuscule elements"));
    checks.push(Check::new("four_way_long_equivalence", four_way));

    checks.push(Check::new(
        "duality_bijection",
        verify_duality_bijection(t)
            .map_err(|e| e.to_string())
            .and_then(|r| {
                let msg = format!(
                    "{} long ideals <-> {} commutative b-stable subalgebras of the {} little adjoint module",
                    r.long_ideals, r.dual_candidates, r.dual_type
                );
                if r.bijection {
                    Ok(msg)
                } else {
                    Err(msg)
                }
            }),
    ));

    if let Some(expected) = little_adjoint_dimension_table(t) {
        let got = little_adjoint_dimension(rs);
        let msg = format!("#short roots + #short simple = {got}, table {expected}");
        checks.push(Check::new(
            "little_adjoint_dimension",
            if got == expected { Ok(msg) } else { Err(msg) },
        ));
    }
    count
}

/// Runs every applicable check for one type.
pub fn verify_type(t: SimpleType) -> Result<TypeVerification> {
    let rs = RootSystem::build(t)?;
    let ideals = enumerate_ideals(&rs);
    let mut checks = vec![
        Check::new("peterson_count", peterson_count(&rs, &ideals)),
        Check::new("ideal_invariants", ideal_invariants(&rs, &ideals)),
        Check::new("right_substrings", right_substrings(&rs, &ideals)),
    ];
    if rs.positive_roots().len() <= ORACLE_MAX_POSITIVE_ROOTS {
        checks.push(Check::new("oracle_equivalence", oracle_equivalence(&rs, &ideals)));
    }
    checks.push(Check::new("rootlet_soundness", rootlet_soundness(&rs, &ideals)));
    let (separation, chain) = alcove_checks(&rs, &ideals);
    checks.push(Check::new("separation_criterion", separation));
    checks.push(Check::new("containment_chain", chain));

    let long_ideals = if rs.has_two_lengths() {
        long_suite(&rs, &ideals, &mut checks)
    } else {
        None
    };

    Ok(TypeVerification {
        simple_type: t,
        ideals: ideals.len(),
        long_ideals,
        checks,
    })
}

/// Runs [`verify_type`] for several types on separate threads; results come
/// back in input order.
pub fn verify_many(types: &[SimpleType]) -> Result<Vec<TypeVerification>> {
    thread::scope(|s| {
        let handles: Vec<_> = types
            .iter()
            .map(|&t| s.spawn(move || verify_type(t)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_suite_passes() {
        let v = verify_type("C2".parse().unwrap()).unwrap();
        assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
        assert_eq!(v.ideals, 4);
        assert_eq!(v.long_ideals, Some(2));
    }

    #[test]
    fn simply_laced_suite_has_no_long_checks() {
        let v = verify_type("A3".parse().unwrap()).unwrap();
        assert!(v.passed());
        assert!(v.checks.iter().all(|c| c.name != "four_way_long_equivalence"));
    }
}
