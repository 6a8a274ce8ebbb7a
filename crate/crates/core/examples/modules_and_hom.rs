use std::sync::Arc;

use supermorita::supermodule::{
    free_module, o_functor, parity_reverse, regular_bimodule, tensor_over, underline_hom, validate_module,
};
use supermorita::superring::super_skew_field;
use supermorita::{Field, Side};

fn main() -> supermorita::Result<()> {
    let d = Arc::new(super_skew_field(Field::Rationals));
    let p = free_module(&d, 1, 1, Side::Right);
    println!("{} has graded dim {}", p.name(), p.graded_dim());
    println!("module axioms hold: {}", validate_module(&p).iter().all(|c| c.passed));

    let pp = parity_reverse(&p);
    println!("ΠP has graded dim {}; Π²P = P: {}", pp.graded_dim(), parity_reverse(&pp) == p);

    let h = underline_hom(&p, &regular_bimodule(&d).restrict(Side::Right), Side::Right)?;
    println!("Hom_D(P, D) has graded dim {}", h.space().graded_dim());

    let left = o_functor(&p);
    println!("P° is a left module over {}", left.left().unwrap().algebra.name());

    let t = tensor_over(&p, &regular_bimodule(&d))?;
    println!("P ⊗_D D has graded dim {}", t.module.graded_dim());
    Ok(())
}
