// Peeling the levels of the Borcherds superalgebra off the inverse
// minimal-orbit series, extended to non-positive levels by the pairing
// `p <-> 5 - p`.

use sl5susy::koszul::{extend_levels_by_pairing, minimal_orbit_series, peel_levels};

pub fn run_example() -> sl5susy::Result<()> {
    let n = 8;
    let peeled = peel_levels(&minimal_orbit_series(n), n)?;
    println!("peeled levels 1..{n}:");
    print!("{peeled}");

    let paired = extend_levels_by_pairing(&peeled)?;
    println!("levels {}..0 from the pairing:", 5 - n as i64);
    for (p, m) in paired.levels.range(..=0) {
        println!("{p}: {m}");
    }
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
