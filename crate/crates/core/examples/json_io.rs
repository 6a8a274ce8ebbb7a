use std::sync::Arc;

use supermorita::io::{algebra_to_string, load_algebra, module_to_string, parse_algebra};
use supermorita::supermodule::free_module;
use supermorita::{Field, Side};

fn main() -> supermorita::Result<()> {
    let d = load_algebra("builtin:D", Some(Field::Prime(5)))?;
    let text = algebra_to_string(&d);
    println!("{text}");
    assert_eq!(parse_algebra(&text, None)?, d);

    let p = free_module(&Arc::new(d), 0, 1, Side::Right);
    println!("{}", module_to_string(&p));

    let mut bad: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    bad["basis"].as_array_mut().expect("basis array").reverse();
    if let Err(e) = parse_algebra(&bad.to_string(), None) {
        println!("odd-first basis rejected: {e}");
    }
    Ok(())
}
