//! Stable commutative subspaces of the off-diagonal blocks of gl_n.

use abelian_ideals::graded_oracle::{gl_formula, gl_report, gl_stable_commutative_sets};

pub fn main() -> abelian_ideals::Result<()> {
    for set in gl_stable_commutative_sets(3, 1)? {
        let cells: Vec<String> = set.iter().map(|p| format!("E{}{}", p.row, p.col)).collect();
        println!("  {{{}}}", cells.join(", "));
    }
    for n in 2..=6 {
        for r in 1..n {
            match gl_report(n, r) {
                Ok(g) => println!("n={n} r={r}: count={} formula={} ok={}", g.count, g.formula, g.ok),
                Err(_) => println!("n={n} r={r}: formula={} (brute force skipped)", gl_formula(n, r)),
            }
        }
    }
    Ok(())
}
