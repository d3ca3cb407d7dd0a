//! Affine words, inversion sets, and where w^-1 sends the fundamental alcove.

use abelian_ideals::affine::{apply_inverse_affine, base_point, region, WeylWord};
use abelian_ideals::ideals::enumerate_ideals;
use abelian_ideals::rootsys::RootSystem;

pub fn main() -> abelian_ideals::Result<()> {
    let rs = RootSystem::build("C2".parse()?)?;
    let x0 = base_point(&rs);
    println!("x0 = {x0}, (theta, x0) = {}", rs.inner(&rs.theta().to_rational(), &x0));

    // Non-reduced words collapse: s1 s1 s0 has one inversion.
    let w = WeylWord::new(&rs, vec![1, 1, 0])?;
    println!("{w}: reduced = {}, length = {}", w.is_reduced(), w.length());

    println!("\n{:<10} {:<40} {:>5} {:>5} {:>5}", "w", "N(w)", "C", "C_s", "2C");
    for ideal in enumerate_ideals(&rs) {
        let w = ideal.word();
        let inv: Vec<String> = w.inversion_set().iter().map(|r| r.to_string()).collect();
        let y = apply_inverse_affine(&rs, w.letters(), &x0);
        let reg = region(&rs, &y)?;
        println!(
            "{:<10} {:<40} {:>5} {:>5} {:>5}",
            w.to_string(),
            inv.join(", "),
            reg.in_c,
            reg.in_cs,
            reg.in_2c
        );
    }
    Ok(())
}
