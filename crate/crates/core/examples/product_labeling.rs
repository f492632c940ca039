//! The ⊗_h product of a labeled cycle with a family of labeled cycles, and
//! the cycle of length 15 obtained from C_5 and C_3.

use magic_crowns::graph::Sign;
use magic_crowns::product::{
    induced_product_labeling, product_cycle_sem, ArcAssignment, FamilyMember,
};

fn main() -> magic_crowns::Result<()> {
    let outer = FamilyMember::canonical_cycle(5, Sign::Plus)?.as_labeled();
    let family = vec![
        FamilyMember::canonical_cycle(3, Sign::Plus)?,
        FamilyMember::canonical_cycle(3, Sign::Minus)?,
    ];
    let h = ArcAssignment::new(family, vec![0, 1, 1, 0, 1])?;
    let prod = induced_product_labeling(&outer, &h)?;
    let f = prod.labeling();
    println!(
        "C_5 ⊗_h {{C_3^+, C_3^-}}: order {}, size {}, valence {}, super = {}",
        f.graph().order(),
        f.graph().size(),
        f.valence(),
        f.is_super()
    );
    println!("arc cycle lengths: {:?}", prod.digraph().cycle_lengths());

    let c15 = product_cycle_sem(5, 3)?.labeling();
    println!(
        "C_15 from C_5 and C_3: valence {}, cycle = {}",
        c15.valence(),
        c15.graph().is_cycle()
    );
    Ok(())
}
