// Zero-mode cohomology of `lambda_{mn} d/d theta_{mn}` on scalar, vector
// and 1-form superfields, with the Euler characteristic of the scalar
// table checked against the series side.

use sl5susy::pscohomology::{euler_characteristic_crosscheck, lambda_quotient_basis, zero_mode_cohomology, FieldKind};

pub fn run_example() -> sl5susy::Result<()> {
    for g in 1..=3 {
        println!("dim of the quotient ring in degree {g}: {}", lambda_quotient_basis(g)?.basis.len());
    }
    let n_max = 6;
    for field in FieldKind::ALL {
        let table = zero_mode_cohomology(&field.spec(), n_max)?;
        print!("{}", table.to_text());
        if field == FieldKind::Scalar {
            let euler = euler_characteristic_crosscheck(&table, n_max)?;
            println!("Euler characteristic vs Z_lambda (1-t)^(0010): {}", euler.comparison);
        }
    }
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
