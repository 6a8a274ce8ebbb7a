//! The super Azumaya test, supercommutants, and the unit and counit of
//! `A ⊗ −` against `−^A`.

use std::sync::Arc;

use supermorita::azumaya::{counit, is_super_azumaya, supercommutant, tensor_with_base, unit_map};
use supermorita::superring::{dual_numbers, matrix_superalgebra, super_skew_field};
use supermorita::{Field, SuperSpace};

fn main() -> supermorita::Result<()> {
    let q = Field::Rationals;
    for a in [super_skew_field(q), matrix_superalgebra(1, 1, q), dual_numbers(q)] {
        let (az, rep) = is_super_azumaya(&a)?;
        let witness = rep.get_fact("kernel witness").unwrap_or("none");
        println!("{}: Azumaya {az}, kernel witness {witness}", a.name());
    }

    let a = Arc::new(super_skew_field(q));
    let n = SuperSpace::with_dims(q, 1, 2);
    let m = tensor_with_base(&a, &n);
    let c = supercommutant(&m)?;
    println!("M = D ⊗ k^{{1|2}}: M^A has graded dim {}", c.graded_dim());
    let eps = counit(&c)?;
    println!("counit A ⊗ M^A → M bijective: {}", eps.is_bijective());
    let (_, eta) = unit_map(&a, &n)?;
    println!("unit N → (A ⊗ N)^A bijective: {}", eta.is_bijective());
    Ok(())
}
