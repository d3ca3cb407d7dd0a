//! Independent second passes over the enumerations: explicit matrices for
//! the gl blocks and Weyl orbits for the root systems.

use std::collections::HashSet;

use abelian_ideals::graded_oracle::{block_positions, gl_count, gl_stable_commutative_sets, BlockPosition};
use abelian_ideals::rootsys::{Root, RootSystem, SimpleType};

type Matrix = Vec<Vec<i64>>;

fn unit(n: usize, p: BlockPosition) -> Matrix {
    let mut m = vec![vec![0; n]; n];
    m[p.row - 1][p.col - 1] = 1;
    m
}

fn bracket(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j] - b[i][k] * a[k][j]).sum();
        }
    }
    out
}

fn support(m: &Matrix) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// All subsets of block positions, checked with matrix brackets against the
/// upper-triangular part of gl_r x gl_(n-r).
fn matrix_brute_force(n: usize, r: usize) -> HashSet<Vec<BlockPosition>> {
    let pos = block_positions(n, r);
    let borel: Vec<Matrix> = (1..=n)
        .flat_map(|k| (k + 1..=n).map(move |l| (k, l)))
        .filter(|&(k, l)| (k <= r) == (l <= r))
        .map(|(k, l)| unit(n, BlockPosition { row: k, col: l }))
        .collect();
    let mut out = HashSet::new();
    for mask in 0u32..1 << pos.len() {
        let set: Vec<BlockPosition> = (0..pos.len())
            .filter(|a| mask >> a & 1 == 1)
            .map(|a| pos[a])
            .collect();
        let cells: HashSet<(usize, usize)> = set.iter().map(|p| (p.row, p.col)).collect();
        let commutative = set.iter().all(|&a| {
            set.iter()
                .all(|&b| support(&bracket(&unit(n, a), &unit(n, b))).is_empty())
        });
        let stable = set.iter().all(|&a| {
            borel
                .iter()
                .all(|e| support(&bracket(e, &unit(n, a))).iter().all(|c| cells.contains(c)))
        });
        if commutative && stable {
            out.insert(set);
        }
    }
    out
}

#[test]
fn gl_enumeration_matches_matrix_brackets() {
    for (n, r) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (5, 2)] {
        let fast: HashSet<Vec<BlockPosition>> =
            gl_stable_commutative_sets(n, r).unwrap().into_iter().collect();
        assert_eq!(fast, matrix_brute_force(n, r), "n={n} r={r}");
    }
}

#[test]
fn gl_count_is_symmetric_in_r() {
    for n in 2..=6 {
        for r in 1..n {
            if 2 * r * (n - r) <= 24 {
                assert_eq!(gl_count(n, r).unwrap(), gl_count(n, n - r).unwrap(), "n={n} r={r}");
            }
        }
    }
}

fn weyl_orbit(rs: &RootSystem) -> HashSet<Root> {
    let mut seen: HashSet<Root> = (0..rs.rank()).map(|i| rs.simple_root(i)).collect();
    let mut frontier: Vec<Root> = seen.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for i in 0..rs.rank() {
            let y = rs.reflect(i, &x);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

#[test]
fn string_closure_matches_weyl_orbits() {
    for t in SimpleType::catalogue(8) {
        let rs = RootSystem::build(t).unwrap();
        let from_strings: HashSet<Root> = rs
            .positive_roots()
            .iter()
            .flat_map(|r| [r.clone(), r.negated()])
            .collect();
        assert_eq!(weyl_orbit(&rs), from_strings, "{t}");
    }
}

#[test]
fn classical_root_counts() {
    for t in SimpleType::catalogue(8) {
        let p = t.rank();
        let expected = match t.to_string().as_str() {
            "E6" => 72,
            "E7" => 126,
            "E8" => 240,
            "F4" => 48,
            "G2" => 12,
            s if s.starts_with('A') => p * (p + 1),
            s if s.starts_with('B') || s.starts_with('C') => 2 * p * p,
            s if s.starts_with('D') => 2 * p * (p - 1),
            s => panic!("unexpected type {s}"),
        };
        let rs = RootSystem::build(t).unwrap();
        assert_eq!(2 * rs.positive_roots().len(), expected, "{t}");
    }
}
