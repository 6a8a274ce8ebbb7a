use std::sync::Arc;

use proptest::prelude::*;
use supermorita::supermodule::{free_module, parity_reverse, tensor_over, underline_hom};
use supermorita::superring::{ground_field, super_skew_field};
use supermorita::{Field, GradedDim, Matrix, Parity, Side};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::Prime(3)),
        Just(Field::Prime(5)),
        Just(Field::Prime(7)),
        Just(Field::Prime(101)),
    ]
}

fn parity_strategy() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

proptest! {
    #[test]
    fn field_axioms(field in field_strategy(), a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..20) {
        prop_assume!(field.characteristic() == 0 || d as u64 % field.characteristic() != 0);
        let x = field.frac(a, d).unwrap();
        let y = field.from_i64(b);
        let z = field.from_i64(c);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &(-&x), field.zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_strings_round_trip(field in field_strategy(), a in -1000i64..1000, d in 1i64..50) {
        prop_assume!(field.characteristic() == 0 || d as u64 % field.characteristic() != 0);
        let x = field.frac(a, d).unwrap();
        prop_assert_eq!(field.parse_scalar(&x.to_canonical_string()).unwrap(), x);
    }

    #[test]
    fn koszul_is_symmetric(p in parity_strategy(), q in parity_strategy(), field in field_strategy()) {
        prop_assert_eq!(field.koszul(p, q), field.koszul(q, p));
        prop_assert!(field.koszul(p, Parity::Even).is_one());
        prop_assert!((&field.koszul(p, Parity::Odd) * &field.koszul(p, Parity::Odd)).is_one());
    }

    #[test]
    fn kernel_and_solve(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-3i64..4, 25), xs in prop::collection::vec(-3i64..4, 5)) {
        let f = Field::Prime(7);
        let data: Vec<Vec<i64>> = (0..rows).map(|r| entries[r * 5..r * 5 + cols].to_vec()).collect();
        let refs: Vec<&[i64]> = data.iter().map(|r| r.as_slice()).collect();
        let a = Matrix::from_i64(f, &refs);
        let k = a.kernel();
        prop_assert_eq!(a.rank() + k.cols(), cols);
        prop_assert!(a.mul(&k).is_zero());
        let x = Matrix::from_columns(f, cols, &[xs[..cols].iter().map(|&v| f.from_i64(v)).collect()]);
        let b = a.mul(&x);
        let sol = a.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(a.mul(&sol.particular), b);
    }

    #[test]
    fn parity_reversal_is_an_involution(m in 0usize..3, n in 0usize..3) {
        let d = Arc::new(super_skew_field(Field::Prime(5)));
        let p = free_module(&d, m, n, Side::Right);
        let pp = parity_reverse(&p);
        prop_assert_eq!(pp.graded_dim(), p.graded_dim().swapped());
        prop_assert_eq!(parity_reverse(&pp), p);
    }

    #[test]
    fn tensor_over_k_multiplies_graded_dims(m in 0usize..3, n in 0usize..3, m2 in 0usize..3, n2 in 0usize..3) {
        let k = Arc::new(ground_field(Field::Rationals));
        let a = free_module(&k, m, n, Side::Right);
        let b = free_module(&k, m2, n2, Side::Left);
        let t = tensor_over(&a, &b).unwrap();
        prop_assert_eq!(t.module.graded_dim(), GradedDim::new(m, n).tensor(GradedDim::new(m2, n2)));
    }

    #[test]
    fn hom_from_free_module(m in 0usize..3, n in 0usize..3) {
        let d = Arc::new(super_skew_field(Field::Rationals));
        let p = free_module(&d, m, n, Side::Right);
        let reg = free_module(&d, 1, 0, Side::Right);
        let h = underline_hom(&p, &reg, Side::Right).unwrap();
        // Hom_D(D^{m|n}, D) ≅ D^m ⊕ (ΠD)^n and D ≅ ΠD has graded dim 1|1.
        prop_assert_eq!(h.space().graded_dim(), GradedDim::new(m + n, m + n));
    }
}
