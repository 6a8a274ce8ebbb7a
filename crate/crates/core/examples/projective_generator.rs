//! Projectivity and generator tests, with their certificates.

use std::sync::Arc;

use supermorita::io::residue_module;
use supermorita::morita::{dual_basis_search, is_generator, is_projective, trace_ideal};
use supermorita::supermodule::free_module;
use supermorita::superring::{dual_numbers, super_skew_field};
use supermorita::{Field, Side, SuperModule};

fn describe(p: &SuperModule) -> supermorita::Result<()> {
    let proj = is_projective(p, Side::Right)?;
    let db = dual_basis_search(p, Side::Right)?;
    let tr = trace_ideal(p, Side::Right)?;
    let gen = is_generator(p, Side::Right)?;
    println!("{} ({}):", p.name(), p.graded_dim());
    println!("  projective {}, dual basis of size {}", proj.projective, db.map_or(0, |b| b.len()));
    println!("  trace ideal dim {}, generator {}", tr.span.dim(), gen.generator);
    if let Some(split) = gen.split {
        println!("  R splits off {} (verified {})", split.sum.graded_dim(), split.verified);
    }
    Ok(())
}

fn main() -> supermorita::Result<()> {
    let q = Field::Rationals;
    let d = Arc::new(super_skew_field(q));
    describe(&free_module(&d, 0, 1, Side::Right))?;
    let dn = Arc::new(dual_numbers(q));
    describe(&residue_module(&dn)?)?;
    Ok(())
}
