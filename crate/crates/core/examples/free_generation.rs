// The positive part of the superalgebra is freely generated by the
// coadjoint E(5,10) spectrum: the free enveloping series reproduces the
// peeled levels, and its coefficients alternate in sign by level.

use sl5susy::e510::coadjoint_generator_spectrum;
use sl5susy::koszul::{grading_sign_check, verify_free_generation};
use sl5susy::liecore::sl5;

pub fn run_example() -> sl5susy::Result<()> {
    let n = 10;
    let spectrum = coadjoint_generator_spectrum(n);
    println!("generators:");
    for g in &spectrum.generators {
        println!("  level {}: {} ({:?})", g.level, g.module, g.parity);
    }

    let report = verify_free_generation(n)?;
    println!("assuming {}:", report.assumption);
    for level in &report.levels {
        println!("  level {}: {}", level.level, if level.equal { "equal" } else { "DIFFERENT" });
    }

    let signs = grading_sign_check(&sl5(), &spectrum, n)?;
    println!("uniform signs (-1)^p up to level {}: {}", signs.max_level, signs.passed());
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
