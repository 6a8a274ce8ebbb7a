//! Module builders shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use supermorita::supermodule::{direct_sum, free_module, parity_reverse, regular_module, Action};
use supermorita::supervec::Subspace;
use supermorita::{Field, Matrix, Scalar, Side, SuperAlgebra, SuperModule, SuperSpace};

/// The submodule spanned by homogeneous `vectors`, with every action restricted.
pub fn submodule(m: &SuperModule, vectors: Vec<Vec<Scalar>>, name: &str) -> SuperModule {
    let span = Subspace::span(m.space(), vectors);
    let gd = span.graded_dim();
    let field = m.field();
    let space = SuperSpace::with_dims(field, gd.even, gd.odd);
    let restrict = |act: Option<&Action>| {
        act.map(|a| Action {
            algebra: a.algebra.clone(),
            mats: a
                .mats
                .iter()
                .map(|op| {
                    let cols: Vec<Vec<Scalar>> = span
                        .basis()
                        .iter()
                        .map(|b| span.coords(&op.apply(b)).expect("span is invariant"))
                        .collect();
                    Matrix::from_columns(field, span.dim(), &cols)
                })
                .collect(),
        })
    };
    SuperModule::new(name, space, restrict(m.left()), restrict(m.right())).unwrap()
}

/// The right ideal `e₀₀·M(1|1)`, a direct summand of the regular module that is not free.
pub fn row_ideal(m11: &Arc<SuperAlgebra>) -> SuperModule {
    let reg = regular_module(m11, Side::Right);
    let e00 = m11.basis_vector(0);
    let vectors = (0..m11.dim()).map(|j| m11.mul(&e00, &m11.basis_vector(j))).collect();
    submodule(&reg, vectors, "e00·M")
}

/// The left ideal `M(1|1)·e₀₀`.
pub fn column_ideal(m11: &Arc<SuperAlgebra>) -> SuperModule {
    let reg = regular_module(m11, Side::Left);
    let e00 = m11.basis_vector(0);
    let vectors = (0..m11.dim()).map(|j| m11.mul(&m11.basis_vector(j), &e00)).collect();
    submodule(&reg, vectors, "M·e00")
}

/// `R^{m|n}` with a name that records the parities.
pub fn free(r: &Arc<SuperAlgebra>, m: usize, n: usize, side: Side) -> SuperModule {
    free_module(r, m, n, side)
}

pub fn pi(m: &SuperModule) -> SuperModule {
    let name = format!("Π{}", m.name());
    parity_reverse(m).with_name(name)
}

pub fn sum(parts: &[SuperModule], name: &str) -> SuperModule {
    direct_sum(parts).unwrap().module.with_name(name)
}

pub fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    field.from_i64(rng.gen_range(-4..=4))
}

/// A random invertible even matrix on `space`.
pub fn random_even_automorphism(space: &SuperSpace, rng: &mut ChaCha8Rng) -> Matrix {
    let field = space.field();
    let d = space.dim();
    loop {
        let mut g = Matrix::zeros(field, d, d);
        for i in 0..d {
            for j in 0..d {
                if space.parity(i) == space.parity(j) {
                    g.set(i, j, random_scalar(field, rng));
                }
            }
        }
        if g.rank() == d {
            return g;
        }
    }
}

/// `M` transported along a random even change of basis.
pub fn scramble(m: &SuperModule, rng: &mut ChaCha8Rng) -> SuperModule {
    let g = random_even_automorphism(m.space(), rng);
    let gi = g.inverse().unwrap();
    let conj = |act: Option<&Action>| {
        act.map(|a| Action {
            algebra: a.algebra.clone(),
            mats: a.mats.iter().map(|op| gi.mul(op).mul(&g)).collect(),
        })
    };
    SuperModule::new(m.name(), m.space().clone(), conj(m.left()), conj(m.right())).unwrap()
}

/// A random homogeneous element of `basis` span with the given parity.
pub fn random_homogeneous(basis: &[Matrix], parities: &[supermorita::Parity], want: supermorita::Parity, rng: &mut ChaCha8Rng) -> Option<Matrix> {
    let picks: Vec<&Matrix> = basis.iter().zip(parities).filter(|(_, p)| **p == want).map(|(m, _)| m).collect();
    let first = picks.first()?;
    let field = first.field();
    let mut acc = Matrix::zeros(field, first.rows(), first.cols());
    for m in picks {
        acc.add_scaled(&random_scalar(field, rng), m);
    }
    Some(acc)
}
