//! Lower bounds on how many distinct edge-magic valences a cycle or crown admits,
//! next to the magic intervals of odd crowns.

use magic_crowns::coverage::{
    crown_em_interval, crown_sem_interval, crown_valence_lower_bound, cycle_valence_lower_bound,
};

fn main() -> magic_crowns::Result<()> {
    for m in [6, 10, 12, 14, 15, 21] {
        print!(
            "m = {m:>2}: C_m has at least {} edge-magic valences",
            cycle_valence_lower_bound(m)?
        );
        for n in 1..=2 {
            print!(
                ", crown n = {n} at least {}",
                crown_valence_lower_bound(m, n)?
            );
        }
        if m % 2 == 1 {
            print!(
                ", I = {}, J = {}",
                crown_sem_interval(m, 1)?,
                crown_em_interval(m, 1)?
            );
        }
        println!();
    }
    Ok(())
}
