// Weyl dimensions, tensor products, symmetric and exterior powers, and
// conjugation in the representation ring of sl(5).

use sl5susy::liecore::{sl5, Weight};
use sl5susy::repring::VirtualModule;

pub fn run_example() -> sl5susy::Result<()> {
    let rs = sl5();
    let m = |s: &str| VirtualModule::parse(&rs, s);

    let theta = m("(0010)")?;
    println!("dim (0010) = {}", theta.dim());
    println!("(0010) x (0010) = {}", theta.tensor(&theta)?);
    println!("Sym^2 (0010) = {}", theta.sym_power(2)?);
    println!("Ext^2 (0010) = {}", theta.ext_power(2)?);
    println!("conj (1100) = {}", m("(1100)")?.conjugate());

    // Two non-containments that obstruct a P(4) extension.
    let a = m("(2000)")?.tensor(&m("(1000)")?)?;
    let b = m("(0011)")?.tensor(&m("(0001)")?)?;
    println!("(2000) x (1000) = {a}; contains (0010): {}", a.contains(&Weight::new(&[0, 0, 1, 0])));
    println!("(0011) x (0001) = {b}; contains (1000): {}", b.contains(&Weight::new(&[1, 0, 0, 0])));

    // A virtual module: the alternating sum of exterior powers of the
    // vector module is zero, dimension by dimension.
    let v = m("(1000)")?;
    let mut alt = VirtualModule::zero(&rs);
    for (k, e) in v.ext_powers(5)?.iter().enumerate() {
        alt = if k % 2 == 0 { &alt + e } else { &alt - e };
    }
    println!("sum (-1)^k Ext^k (1000) = {alt} (dimension {})", alt.dim());
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
