use supermorita::supervec::Subspace;
use supermorita::{Field, Matrix, SuperSpace};

fn main() -> supermorita::Result<()> {
    let f = Field::Prime(5);
    let v = SuperSpace::with_dims(f, 2, 1);
    println!("V = {v}, graded dim {}", v.graded_dim());

    let a = Matrix::from_i64(f, &[&[1, 2, 0], &[2, 4, 0], &[0, 0, 3]]);
    println!("rank {}, kernel columns {}", a.rank(), a.kernel().cols());

    let b = Matrix::from_i64(f, &[&[3], &[1], &[1]]);
    match a.solve(&b)? {
        Some(sol) => {
            let x: Vec<String> = sol.particular.column(0).iter().map(|c| c.to_string()).collect();
            println!("A x = b solved, x = ({})", x.join(", "));
        }
        None => println!("A x = b has no solution"),
    }

    let w = Subspace::span(&v, vec![v.basis_vector(0), v.basis_vector(2)]);
    println!("span(e0, e2) has graded dim {} and is homogeneous: {}", w.graded_dim(), w.is_homogeneous());
    println!("ΠV = {}", v.parity_reversed());
    Ok(())
}
