// E(5,10) as divergence-free vector fields plus closed 2-forms in five
// variables: level modules, a bracket, random Jacobi trials, the
// gamma identity and graded dimensions.

use sl5susy::e510::{
    bracket, gamma_identity_check, graded_dimension_crosscheck, jacobi_trials, level_table, E510Element, Poly,
    PolyTwoForm, DEFAULT_SEED,
};

pub fn run_example() -> sl5susy::Result<()> {
    let levels: Vec<String> = level_table(-3)?.iter().map(ToString::to_string).collect();
    println!("{}", levels.join(", "));

    // [dx^1 dx^2, dx^3 dx^4] = star(dx^12 ^ dx^34): the contraction over
    // all index orders gives 4 epsilon^{12345} d/dx^5.
    let mut b1: [Poly; 5] = Default::default();
    b1[1] = Poly::var(0);
    let mut b2: [Poly; 5] = Default::default();
    b2[3] = Poly::var(2);
    let g1 = E510Element::odd(PolyTwoForm::exterior_derivative(&b1));
    let g2 = E510Element::odd(PolyTwoForm::exterior_derivative(&b2));
    println!("[dx^12, dx^34] = {}", bracket(&g1, &g2)?);

    let jacobi = jacobi_trials(18, 2, DEFAULT_SEED);
    println!("Jacobi: {} trials of degree <= {}, {} failures", jacobi.trials, jacobi.max_degree, jacobi.failures.len());

    let gamma = gamma_identity_check(1, 4, DEFAULT_SEED);
    println!("gamma identity: {} triples of basis forms, {} failures", gamma.triples_checked, gamma.failures.len());

    for row in graded_dimension_crosscheck(3)?.rows {
        println!("degree {}: {} vector fields, {} 2-forms", row.degree, row.vector_rank, row.form_rank);
    }
    Ok(())
}

fn main() -> sl5susy::Result<()> {
    run_example()
}
