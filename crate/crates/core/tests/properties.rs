use abelian_ideals::affine::{
    apply_inverse_affine, apply_inverse_linear, apply_word_affine, apply_word_linear, base_point,
    inversion_set, inversion_set_by_scan, reflect_affine, region, AffineRoot, WeylWord,
};
use abelian_ideals::rational::{rat, RationalVector};
use abelian_ideals::rootsys::{RootSystem, SimpleType};
use abelian_ideals::Error;
use proptest::prelude::*;

const TYPES: &[&str] = &["A3", "B3", "C3", "D4", "G2", "F4", "B4", "C2"];

fn build(name: &str) -> RootSystem {
    RootSystem::build(name.parse::<SimpleType>().unwrap()).unwrap()
}

/// A type, a word in its affine letters, and an affine root.
fn case(max_len: usize) -> impl Strategy<Value = (String, Vec<usize>, AffineRoot)> {
    prop::sample::select(TYPES).prop_flat_map(move |name| {
        let rs = build(name);
        let p = rs.rank();
        let n = rs.positive_roots().len();
        (
            Just(name.to_string()),
            prop::collection::vec(0..=p, 0..=max_len),
            0..n,
            any::<bool>(),
            -3i64..=3,
        )
            .prop_map(move |(name, word, idx, neg, level)| {
                let rs = build(&name);
                let r = rs.positive_roots()[idx].clone();
                let r = if neg { r.negated() } else { r };
                (name, word, AffineRoot::new(r, level))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reflections_are_involutions((name, _word, r) in case(0)) {
        let rs = build(&name);
        for letter in 0..=rs.rank() {
            let once = reflect_affine(&rs, letter, &r);
            prop_assert_eq!(reflect_affine(&rs, letter, &once), r.clone());
        }
    }

    #[test]
    fn word_then_inverse_is_identity((name, word, r) in case(10)) {
        let rs = build(&name);
        let image = apply_word_linear(&rs, &word, &r);
        prop_assert_eq!(apply_inverse_linear(&rs, &word, &image), r);
    }

    #[test]
    fn gram_is_weyl_invariant((name, word, r) in case(10), other in 0usize..8) {
        let rs = build(&name);
        let finite: Vec<usize> = word.into_iter().filter(|&l| l != 0).collect();
        let y = rs.positive_roots()[other % rs.positive_roots().len()].clone();
        let wx = apply_word_linear(&rs, &finite, &r).finite;
        let wy = apply_word_linear(&rs, &finite, &AffineRoot::new(y.clone(), 0)).finite;
        prop_assert_eq!(
            rs.int_inner(wx.coeffs(), wy.coeffs()),
            rs.int_inner(r.finite.coeffs(), y.coeffs())
        );
    }

    #[test]
    fn inversion_recursion_matches_scan((name, word, _r) in case(9)) {
        let rs = build(&name);
        prop_assert_eq!(inversion_set(&rs, &word), inversion_set_by_scan(&rs, &word));
    }

    #[test]
    fn length_is_inversion_count((name, word, _r) in case(9)) {
        let rs = build(&name);
        let w = WeylWord::new(&rs, word.clone()).unwrap();
        let n = w.inversion_set().len();
        prop_assert!(n <= word.len());
        prop_assert_eq!(n % 2, word.len() % 2);
        prop_assert_eq!(w.is_reduced(), n == word.len());
        // Every inversion is a positive affine root sent negative by w.
        for r in w.inversion_set() {
            prop_assert!(r.is_positive());
            prop_assert!(!apply_word_linear(&rs, &word, r).is_positive());
        }
    }

    #[test]
    fn dot_action_round_trips((name, word, _r) in case(10)) {
        let rs = build(&name);
        let x0 = base_point(&rs);
        let y = apply_word_affine(&rs, &word, &x0);
        prop_assert_eq!(apply_inverse_affine(&rs, &word, &y), x0);
    }

    #[test]
    fn regions_are_nested(
        name in prop::sample::select(TYPES),
        coords in prop::collection::vec(-40i64..=40, 8),
    ) {
        let rs = build(name);
        let x = RationalVector::new(
            coords[..rs.rank()].iter().map(|&c| rat(c, 17)).collect()
        );
        match region(&rs, &x) {
            Ok(r) => {
                prop_assert!(!r.in_c || r.in_cs);
                prop_assert!(!r.in_cs || r.in_2c);
            }
            Err(Error::AmbiguousRegion(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}
