use std::sync::Arc;

use supermorita::morita::{build_context, check_context_isos};
use supermorita::supermodule::free_module;
use supermorita::superring::super_skew_field;
use supermorita::{Field, Side};

fn main() -> supermorita::Result<()> {
    let d = Arc::new(super_skew_field(Field::Rationals));
    let ctx = build_context(&free_module(&d, 1, 1, Side::Right))?;
    println!("R = {}, S = End_R(P) has graded dim {}", ctx.r.name(), ctx.s.graded_dim());
    println!("flags: {}", serde_json::to_string(&ctx.flags).expect("flags serialise"));
    let rep = check_context_isos(&ctx)?;
    print!("{rep}");
    Ok(())
}
