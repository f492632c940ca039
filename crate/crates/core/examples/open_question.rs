//! Crowns on cycles of length `p^k q`. No closed construction is known here,
//! so the constructor searches over factorizations and reports any gaps.

use magic_crowns::coverage::{prime_power_cover, Mode};

fn main() -> magic_crowns::Result<()> {
    for (p, k, q) in [(3, 2, 5), (3, 2, 7), (5, 2, 3), (3, 3, 5)] {
        for n in 1..=2 {
            let cover = prime_power_cover(p, k, q, n, Mode::Sem)?;
            println!(
                "{p}^{k}·{q}, n = {n}: {} of {} valences, missing {:?}",
                cover.achieved.len(),
                cover.interval.len(),
                cover.missing
            );
        }
    }
    Ok(())
}
