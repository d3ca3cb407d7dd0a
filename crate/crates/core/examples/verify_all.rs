//! Run the invariant suite over the catalogue of simple types.

use abelian_ideals::rootsys::SimpleType;
use abelian_ideals::verify::verify_many;

pub fn main() -> abelian_ideals::Result<()> {
    let max_rank = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    for v in verify_many(&SimpleType::catalogue(max_rank))? {
        let failed: Vec<&str> = v.failures().map(|c| c.name.as_str()).collect();
        println!(
            "{:<3} {:>4} ideals  {:>2} checks  {}",
            v.simple_type.to_string(),
            v.ideals,
            v.checks.len(),
            if failed.is_empty() { "ok".to_string() } else { failed.join(", ") }
        );
    }
    Ok(())
}
