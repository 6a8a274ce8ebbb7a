//! End-to-end checks of the Morita and Azumaya APIs beyond the acceptance criteria.

use std::sync::Arc;

use supermorita::azumaya::{is_super_azumaya_seeded, supercommutant, tensor_with_base};
use supermorita::io::{algebra_to_string, builtin_algebra, parse_algebra};
use supermorita::morita::{
    build_context, compose_progenerators, equivalence_report, faithfully_balanced, leftright_transfer,
};
use supermorita::supermodule::{free_module, regular_bimodule, regular_module};
use supermorita::superring::{dual_numbers, ground_field, matrix_superalgebra, super_skew_field};
use supermorita::{Field, GradedDim, Side, SuperSpace};

const Q: Field = Field::Rationals;

#[test]
fn progenerator_is_faithfully_balanced() {
    let d = Arc::new(super_skew_field(Q));
    let ctx = build_context(&free_module(&d, 1, 1, Side::Right)).unwrap();
    assert!(faithfully_balanced(&ctx.p).unwrap());
    assert!(faithfully_balanced(&ctx.q).unwrap());
}

#[test]
fn non_generator_is_not_faithfully_balanced() {
    let dn = Arc::new(dual_numbers(Q));
    let ctx = build_context(&supermorita::io::residue_module(&dn).unwrap()).unwrap();
    assert!(!ctx.flags.progenerator);
    assert!(!faithfully_balanced(&ctx.p).unwrap());
}

#[test]
fn left_and_right_progenerators_agree() {
    for r in [Arc::new(ground_field(Q)), Arc::new(super_skew_field(Q))] {
        let ctx = build_context(&free_module(&r, 1, 1, Side::Right)).unwrap();
        let rep = leftright_transfer(&ctx).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn composition_of_progenerators() {
    let k = Arc::new(ground_field(Q));
    let ctx = build_context(&free_module(&k, 1, 1, Side::Right)).unwrap();
    let corpus = vec![ctx.q.restrict(Side::Right)];
    let (composite, rep) = compose_progenerators(&ctx.p, &regular_bimodule(&k), &corpus).unwrap();
    assert!(rep.passed(), "{rep}");
    assert_eq!(composite.graded_dim(), GradedDim::new(1, 1));
}

#[test]
fn equivalence_preserves_progenerators_over_matrix_superalgebra() {
    let m11 = Arc::new(matrix_superalgebra(1, 1, Q));
    let ctx = build_context(&regular_module(&m11, Side::Right)).unwrap();
    let corpus = vec![regular_module(&m11, Side::Right), free_module(&m11, 0, 1, Side::Right)];
    let rep = equivalence_report(&ctx, &corpus).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn azumaya_verdicts_over_prime_fields() {
    for p in [3, 5, 7] {
        let f = Field::Prime(p);
        assert!(is_super_azumaya_seeded(&super_skew_field(f), 1).unwrap().0);
        assert!(is_super_azumaya_seeded(&matrix_superalgebra(1, 1, f), 1).unwrap().0);
        assert!(!is_super_azumaya_seeded(&dual_numbers(f), 1).unwrap().0);
    }
}

#[test]
fn commutant_of_free_extension() {
    let d = Arc::new(super_skew_field(Q));
    let m = tensor_with_base(&d, &SuperSpace::with_dims(Q, 2, 1));
    assert_eq!(supercommutant(&m).unwrap().graded_dim(), GradedDim::new(2, 1));
}

#[test]
fn builtins_survive_json() {
    for spec in ["builtin:D", "builtin:M11", "builtin:Mmn?m=2&n=1", "builtin:dual-numbers", "builtin:k"] {
        let a = builtin_algebra(spec, Field::Prime(5)).unwrap();
        assert_eq!(parse_algebra(&algebra_to_string(&a), None).unwrap(), a, "{spec}");
    }
}
