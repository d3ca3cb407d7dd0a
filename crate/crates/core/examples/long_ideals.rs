//! Long Abelian ideals: four characterizations and the count d^a.

use abelian_ideals::ideals::{enumerate_ideals, long_characterizations, long_ideals, maximal_long_ideals};
use abelian_ideals::rootsys::RootSystem;

pub fn main() -> abelian_ideals::Result<()> {
    let rs = RootSystem::build("B4".parse()?)?;
    println!("{:<16} {:>6} {:>6} {:>7} {:>8}", "w", "roots", "word", "alcove", "rootlet");
    for ideal in enumerate_ideals(&rs) {
        let c = long_characterizations(&rs, &ideal)?;
        println!(
            "{:<16} {:>6} {:>6} {:>7} {:>8}",
            ideal.word().to_string(),
            c.by_roots,
            c.by_word,
            c.by_alcove,
            c.by_rootlet
        );
    }

    for name in ["B2", "B3", "B4", "B5", "C4", "F4", "G2"] {
        let rs = RootSystem::build(name.parse()?)?;
        let v = rs.long_ideal_count_formula()?;
        println!(
            "{name}: {} long ideals, prod m / prod c = {}/{} = {}",
            long_ideals(&rs)?.len(),
            v.prod_m,
            v.prod_c,
            v.power
        );
        for m in maximal_long_ideals(&rs)? {
            let roots: Vec<String> = m.roots().iter().map(|r| rs.render(r)).collect();
            println!("    maximal {{{}}}", roots.join(", "));
        }
    }
    Ok(())
}
