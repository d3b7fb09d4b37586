// The partition function of the minimal orbit, its inverse, and its two
// factorizations by the theta and shifted factors.

use sl5susy::koszul::{minimal_orbit_series, orbit_series_identities};
use sl5susy::liecore::sl5;
use sl5susy::repring::VirtualModule;
use sl5susy::repseries::{geometric_factor, FactorSign};

pub fn run_example() -> sl5susy::Result<()> {
    let n = 10;
    let rs = sl5();
    let z = minimal_orbit_series(n);
    println!("Z_lambda = {}", z.truncate(4)?);
    println!("1 / Z_lambda = {}", z.inverse()?.truncate(3)?);

    let theta = VirtualModule::parse(&rs, "(0010)")?;
    let product = z.mul(&geometric_factor(&theta, 1, FactorSign::Plus, n)?)?;
    println!("Z_lambda (1-t)^(0010) = {product}");

    for identity in orbit_series_identities(n)? {
        println!("{}: {}", identity.name, identity.comparison);
    }
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
