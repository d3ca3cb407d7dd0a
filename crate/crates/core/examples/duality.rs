//! Long ideals of g against commutative b-stable subalgebras of the little
//! adjoint module of the Langlands dual.

use abelian_ideals::duality::{little_adjoint_dimension, verify_duality_bijection};
use abelian_ideals::rootsys::RootSystem;

pub fn main() -> abelian_ideals::Result<()> {
    for name in ["B3", "C3", "F4", "G2"] {
        let report = verify_duality_bijection(name.parse()?)?;
        let dual = RootSystem::build(name.parse()?)?.dualize()?;
        println!(
            "{name}: {} long ideals, {} subalgebras of V(theta_s) for {} (dim {}), bijection {}",
            report.long_ideals,
            report.dual_candidates,
            report.dual_type,
            little_adjoint_dimension(&dual),
            report.bijection
        );
        for w in &report.witnesses {
            let ideal: Vec<String> = w.ideal.iter().map(ToString::to_string).collect();
            let image: Vec<String> = w.dual.iter().map(ToString::to_string).collect();
            println!("    {{{}}} -> {{{}}}", ideal.join(", "), image.join(", "));
        }
        if let Some(alt) = &report.alternate {
            println!(
                "    with the {:?} predicate instead: {} subalgebras",
                alt.target, alt.dual_candidates
            );
        }
    }
    Ok(())
}
