//! `− ⊗_R Q` and `− ⊗_S P` on a small corpus: round trips and the
//! evaluation isomorphism `Hom_R(P, M) ≅ M ⊗_R Q`.

use std::sync::Arc;

use supermorita::morita::{build_context, equivalence_report, round_trip_r};
use supermorita::supermodule::free_module;
use supermorita::superring::ground_field;
use supermorita::{Field, Side};

fn main() -> supermorita::Result<()> {
    let k = Arc::new(ground_field(Field::Rationals));
    let ctx = build_context(&free_module(&k, 1, 1, Side::Right))?;
    let corpus: Vec<_> = [(1, 0), (0, 2), (2, 1)]
        .into_iter()
        .map(|(m, n)| free_module(&k, m, n, Side::Right))
        .collect();
    for m in &corpus {
        let rt = round_trip_r(&ctx, m)?;
        println!("(M⊗Q)⊗P → M for M = {}: isomorphism {}", m.name(), rt.is_isomorphism()?);
    }
    print!("{}", equivalence_report(&ctx, &corpus)?);
    Ok(())
}
