//! Bounded Bézout coefficients, conflict pairs and the exceptional shifts
//! that they force on crowns `C_pq ⊙ K̄_n`.

use magic_crowns::arithmetic::{bounded_bezout, conflict_pair, conflict_values, exceptional_r};

fn main() -> magic_crowns::Result<()> {
    for (p, q) in [(3, 5), (3, 7), (5, 7), (7, 11)] {
        let b = bounded_bezout(p, q)?;
        let (x, y) = conflict_pair(p, q)?;
        println!(
            "p = {p}, q = {q}: {}·{p} + {}·{q} = 1, conflict pair ({x}, {y}), exceptional r for n = 2: {:?}",
            b.alpha,
            b.beta,
            exceptional_r(p, q, 2)?
        );
    }
    println!("conflicts modulo 45: {:?}", conflict_values(3, 2, 5)?);
    Ok(())
}
