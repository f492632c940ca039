//! Looped stars `K_{1,n}^l`: one super edge-magic labeling per loop position.

use magic_crowns::labeling::star_loop_labeling;

fn main() -> magic_crowns::Result<()> {
    for n in 1..=4 {
        let valences: Vec<usize> = (1..=n + 1)
            .map(|r| star_loop_labeling(n, r).map(|f| f.valence()))
            .collect::<Result<_, _>>()?;
        println!("K_{{1,{n}}}^l: valences {valences:?}");
    }
    let f = star_loop_labeling(3, 2)?;
    println!(
        "n = 3, r = 2: vertices {:?}, edges {:?}",
        f.vertex_labels(),
        f.edge_labels()
    );
    Ok(())
}
