//! Enumerate Abelian ideals by breadth-first search over minuscule elements
//! and compare with the brute-force upper-set oracle.

use abelian_ideals::ideals::{enumerate_ideals, generators, oracle_enumerate_ideals};
use abelian_ideals::rootsys::{Root, RootSystem, SimpleType};

pub fn main() -> abelian_ideals::Result<()> {
    let rs = RootSystem::build("C3".parse()?)?;
    for ideal in enumerate_ideals(&rs) {
        let gens: Vec<String> = generators(&rs, &ideal).iter().map(|g| rs.render(g)).collect();
        println!("{:<12} size {}  generated by {}", ideal.word().to_string(), ideal.len(), gens.join(", "));
    }

    for t in SimpleType::catalogue(8) {
        let rs = RootSystem::build(t)?;
        let ideals = enumerate_ideals(&rs);
        let oracle = match oracle_enumerate_ideals(&rs) {
            Ok(families) => {
                let mut bfs: Vec<Vec<Root>> = ideals.iter().map(|i| i.roots().to_vec()).collect();
                bfs.sort();
                if bfs == families { "oracle agrees" } else { "ORACLE DISAGREES" }
            }
            Err(_) => "oracle skipped (too many roots)",
        };
        println!("{t:<3} {:>4} ideals  {oracle}", ideals.len());
    }
    Ok(())
}
