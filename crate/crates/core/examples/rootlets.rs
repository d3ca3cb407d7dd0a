//! The rootlet w(alpha_0) + delta of each nontrivial ideal.

use abelian_ideals::ideals::{enumerate_ideals, is_long_ideal, rootlet};
use abelian_ideals::rootsys::RootSystem;

pub fn main() -> abelian_ideals::Result<()> {
    let rs = RootSystem::build("F4".parse()?)?;
    for ideal in enumerate_ideals(&rs).iter().filter(|i| !i.is_empty()) {
        let tau = rootlet(&rs, ideal)?;
        println!(
            "{:<24} size {:>2}  rootlet {:<16}{}",
            ideal.word().to_string(),
            ideal.len(),
            tau.to_string(),
            if is_long_ideal(&rs, ideal) { "  long" } else { "" }
        );
    }
    Ok(())
}
