//! Exhaustive search over 𝔽₃ for even module sections of the free cover.

use std::sync::Arc;

use supermorita::io::residue_module;
use supermorita::morita::is_projective;
use supermorita::supermodule::regular_module;
use supermorita::superring::{dual_numbers, super_skew_field};
use supermorita::{Field, Matrix, Side, SuperModule};

const F3: Field = Field::Prime(3);

/// Every linear `i: P → F` over 𝔽₃, tested for being even, right-linear and
/// a section of the cover map. Returns how many sections exist.
fn count_sections(p: &SuperModule) -> usize {
    let proj = is_projective(p, Side::Right).unwrap();
    let cover = &proj.cover;
    let h = &proj.cover_map.matrix;
    let (rows, cols) = (cover.dim(), p.dim());
    let act_p = p.require(Side::Right).unwrap();
    let act_f = cover.require(Side::Right).unwrap();
    let mut found = 0;
    for code in 0..3u64.pow((rows * cols) as u32) {
        let mut c = code;
        let mut i = Matrix::zeros(F3, rows, cols);
        for r in 0..rows {
            for s in 0..cols {
                i.set(r, s, F3.from_i64((c % 3) as i64));
                c /= 3;
            }
        }
        let even = (0..rows).all(|r| (0..cols).all(|s| cover.parity(r) == p.parity(s) || i.get(r, s).is_zero()));
        if !even || !h.mul(&i).is_identity() {
            continue;
        }
        if act_p.mats.iter().zip(&act_f.mats).all(|(ap, af)| i.mul(ap) == af.mul(&i)) {
            found += 1;
        }
    }
    found
}

#[test]
fn residue_field_of_dual_numbers_has_no_section() {
    let dn = Arc::new(dual_numbers(F3));
    let k = residue_module(&dn).unwrap();
    assert_eq!(count_sections(&k), 0);
    assert!(!is_projective(&k, Side::Right).unwrap().projective);
}

#[test]
fn free_module_has_sections() {
    let d = Arc::new(super_skew_field(F3));
    let p = regular_module(&d, Side::Right);
    assert!(count_sections(&p) > 0);
    assert!(is_projective(&p, Side::Right).unwrap().projective);
}
