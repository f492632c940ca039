//! Exhaustive spectra of small graphs, used to cross-check constructions.

use magic_crowns::coverage::Mode;
use magic_crowns::graph::{build_crown, CrownSpec, Sign};
use magic_crowns::labeling::{cycle_graph, star_loop_graph};
use magic_crowns::oracle::{brute_spectrum, search_space, Guard};

fn main() -> magic_crowns::Result<()> {
    let crown = build_crown(CrownSpec::new(3, 1)?, Sign::Plus)?.underlying();
    let graphs = [
        ("C_5", cycle_graph(5)?),
        ("C_3 ⊙ K̄_1", crown),
        ("K_{1,3}^l", star_loop_graph(3, 1)?),
    ];
    for (name, g) in &graphs {
        for mode in [Mode::Sem, Mode::Em] {
            let report = brute_spectrum(g, mode, Guard::default_for(mode))?;
            println!(
                "{name:<10} {mode}: {:?} (space {})",
                report.spectrum,
                search_space(g, mode)
            );
        }
    }

    let big = build_crown(CrownSpec::new(11, 1)?, Sign::Plus)?.underlying();
    match brute_spectrum(&big, Mode::Sem, Guard::SEM_DEFAULT) {
        Err(e) => println!("C_11 ⊙ K̄_1: {e}"),
        Ok(r) => println!("C_11 ⊙ K̄_1: {:?}", r.spectrum),
    }
    Ok(())
}
