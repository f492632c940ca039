//! Translating the base crown matrix: valence grows by one per step, and the
//! core stays a single cycle exactly when the circulant step is a unit.

use magic_crowns::arithmetic::gcd;
use magic_crowns::graph::Sign;
use magic_crowns::product::FamilyMember;
use magic_crowns::translation::{canonical_core_step, translated_labeling};

fn main() -> magic_crowns::Result<()> {
    let (m, n) = (15, 1);
    let g = FamilyMember::canonical_cycle(m, Sign::Plus)?;
    println!(" r  valence  step  gcd  cycles");
    for r in 1..=m * n + 1 {
        let res = translated_labeling(&g, n, Sign::Plus, r)?;
        let step = canonical_core_step(m, Sign::Plus, r);
        println!(
            "{r:>2}  {:>7}  {step:>4}  {:>3}  {:?}",
            res.labeling.valence(),
            gcd(step as u64, m as u64),
            res.cycle_lengths
        );
    }
    Ok(())
}
