//! The canonical super edge-magic labeling of an odd cycle, plus the
//! labelings derived from it by complementation and doubling.

use magic_crowns::labeling::{
    canonical_cycle, em_complement, extend_sem, odd_even, sem_complement, Parity,
};

fn main() -> magic_crowns::Result<()> {
    let m = 7;
    let f = extend_sem(&canonical_cycle(m)?)?;
    println!("C_{m}: vertex labels {:?}", f.vertex_labels());
    println!("      edge labels   {:?}", f.edge_labels());
    println!("      valence {} ({})", f.valence(), f.kind());

    let derived = [
        ("sem complement", sem_complement(&f)?),
        ("em complement", em_complement(&f)),
        ("odd", odd_even(&f, Parity::Odd)?),
        ("even", odd_even(&f, Parity::Even)?),
    ];
    for (name, g) in derived {
        println!("{name:>15}: valence {:>3}, {}", g.valence(), g.kind());
    }
    Ok(())
}
