//! Build root systems from their Cartan matrices and inspect them.

use abelian_ideals::rootsys::{RootSystem, SimpleType};

pub fn main() -> abelian_ideals::Result<()> {
    for name in ["F4", "G2", "B3", "C3", "E8"] {
        let rs = RootSystem::build(name.parse::<SimpleType>()?)?;
        println!("{name}: {} positive roots", rs.positive_roots().len());
        println!("  cartan   {:?}", rs.cartan());
        println!("  theta    {}", rs.render(rs.theta()));
        if let Some(ts) = rs.theta_s() {
            println!("  theta_s  {}", rs.render(ts));
            println!(
                "  d = {}, long simple roots = {}, dual type {}",
                rs.length_ratio(),
                rs.long_simple_count(),
                rs.dualize()?.simple_type()
            );
        }
    }

    // Root strings and coroots in B3: alpha_3 is short.
    let b3 = RootSystem::build("B3".parse()?)?;
    for r in b3.positive_roots() {
        println!(
            "  {:<20} |r|^2 = {}  coroot in C3 = {}",
            b3.render(r),
            b3.norm(r),
            b3.coroot_in_dual(r)?
        );
    }
    Ok(())
}
