//! Every valence of the super edge-magic and edge-magic intervals of a crown
//! `C_pq ⊙ K̄_n`, each with a checked certificate.
//!
//! `cargo run --example perfect_cover -- 3 5 1`

use magic_crowns::certificate::CoverReportDoc;
use magic_crowns::coverage::{perfect_em_cover, perfect_sem_cover};

fn main() -> magic_crowns::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q, n) = match args[..] {
        [p, q, n] => (p, q, n),
        _ => (3, 5, 1),
    };
    for cover in [perfect_sem_cover(p, q, n)?, perfect_em_cover(p, q, n)?] {
        let checked = CoverReportDoc::from_cover(&cover).verify()?;
        println!(
            "{} {} {}: {} certificates, missing {:?}",
            cover.family,
            cover.interval.mode,
            cover.interval,
            checked.len(),
            cover.missing
        );
        for (k, c) in cover.achieved.iter().take(4) {
            println!("  {k:>4} <- {}", c.source());
        }
    }
    Ok(())
}
