//! Projectivity and generator tests, Morita contexts and finite-instance
//! checks of the Morita equivalence theorems.

mod context;
mod projective;
mod roundtrip;

pub use context::{
    build_context, check_context_isos, compose_progenerators, faithfully_balanced, leftright_transfer,
    ContextFlags, MoritaContext,
};
pub use projective::{
    dual_basis_search, is_generator, is_projective, trace_ideal, DualBasis, Generation, GeneratorWitness,
    Projectivity, SplitEpi, TraceIdeal,
};
pub use roundtrip::{
    assoc_iso, equivalence_images, equivalence_report, linear_dimension_law, morita_ii, morita_roundtrip,
    naturality, right_unitor, round_trip_r, round_trip_s, Assoc, RoundTrip,
};

use crate::field::{Field, Scalar};
use crate::supervec::{rref_solve, Matrix};

/// Coefficients `x` with `Σ xᵢ columns[i] = target`, if any.
pub(crate) fn solve_combination(field: Field, columns: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    if columns.is_empty() {
        return target.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let a = Matrix::from_columns(field, target.len(), columns);
    let b = Matrix::from_columns(field, target.len(), &[target.to_vec()]);
    let sol = rref_solve(&a, &b).ok()??;
    Some(sol.particular.column(0))
}
