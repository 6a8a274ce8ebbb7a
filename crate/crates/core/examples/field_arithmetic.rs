//! Exact scalars over ℚ and 𝔽_p, and the Koszul sign.

use supermorita::{Field, Parity};

fn main() -> supermorita::Result<()> {
    let q = Field::Rationals;
    let x = q.frac(3, 4)?;
    let y = q.parse_scalar("-5/6")?;
    println!("over Q: {x} + {y} = {}, {x} * {y} = {}", &x + &y, &x * &y);

    let f7 = Field::parse("Fp:7")?;
    let a = f7.from_i64(3);
    println!("over {f7}: 3^-1 = {}", a.inverse()?);

    for (p, r) in [(Parity::Even, Parity::Odd), (Parity::Odd, Parity::Odd)] {
        println!("koszul({p}, {r}) = {}", q.koszul(p, r));
    }
    match Field::parse("Fp:2") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
