// The supersymmetry generators and covariant derivatives on polynomial
// superfields, and their anticommutators.

use sl5susy::pscohomology::superspace_operator_check;
use sl5susy::pscohomology::{OperatorKind, SuperPoly, SuperspaceOperator};

pub fn run_example() -> sl5susy::Result<()> {
    // Q^{12} and Q^{34} are pairs 0 and 7 in lexicographic order.
    let q12 = SuperspaceOperator { kind: OperatorKind::Q, pair: 0 };
    let q34 = SuperspaceOperator { kind: OperatorKind::Q, pair: 7 };
    let x5 = SuperPoly::monomial([0, 0, 0, 0, 1], 0);
    let qq = q12.apply(&q34.apply(&x5)).plus(&q34.apply(&q12.apply(&x5)));
    println!("{{Q^12, Q^34}} x^5 = {:?}", qq.terms());

    let report = superspace_operator_check(1);
    for identity in &report.identities {
        println!("{}: {} evaluations, {} failures", identity.name, identity.evaluations, identity.failures);
    }
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
