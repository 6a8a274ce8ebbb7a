//! Built-in superalgebras, the axiom check, supercenters, opposites and
//! graded tensor products.

use supermorita::superring::{
    dual_numbers, matrix_superalgebra, opposite, super_skew_field, supercenter, tensor_algebra, validate_algebra,
};
use supermorita::{Field, Scalar};

fn show(v: &[Scalar]) -> String {
    v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", ")
}

fn main() -> supermorita::Result<()> {
    let q = Field::Rationals;
    for a in [super_skew_field(q), matrix_superalgebra(2, 1, q), dual_numbers(q)] {
        let v = validate_algebra(&a);
        println!("{a}: axioms {}, supercenter {}", v.passed(), supercenter(&a).graded_dim());
    }

    let d = super_skew_field(q);
    let dop = opposite(&d)?;
    // θ·°θ = −θ·θ, so D° has θ² = −1.
    println!("in D: θ² = ({})", show(d.product_of_basis(1, 1)));
    println!("in D°: θ² = ({})", show(dop.product_of_basis(1, 1)));

    let dd = tensor_algebra(&d, &d)?;
    println!("D ⊗ D has graded dim {} and supercenter {}", dd.algebra.graded_dim(), supercenter(&dd.algebra).graded_dim());
    Ok(())
}
