use super::{dual_module, tensor_over, underline_hom, HomSpace, ModuleMap, Side, SuperModule, TensorProduct};
use crate::error::Result;
use crate::field::{koszul_negative, Scalar};
use crate::supervec::Matrix;

/// An evaluation map from a tensor product into a hom space.
#[derive(Debug, Clone)]
pub struct SigmaEval {
    pub dual: HomSpace,
    pub tensor: TensorProduct,
    pub hom: HomSpace,
    pub map: ModuleMap,
}

impl SigmaEval {
    pub fn is_bijective(&self) -> bool {
        self.map.is_bijective()
    }

    /// Compatibility with whatever residual actions both sides carry.
    pub fn is_natural(&self) -> Result<bool> {
        self.map.is_homomorphism()
    }
}

fn value_in_hom(hom: &HomSpace, mat: &Matrix) -> Vec<Scalar> {
    hom.coords(mat)
        .expect("evaluation lands in the hom space")
}

/// `P* ⊗_R B → Hom_R(P, B)` for left `R`-modules `P` and `B`,
/// `f⊗b ↦ (x ↦ (−1)^{|x||b|} f(x)·b)`.
pub fn sigma_eval(p: &SuperModule, b: &SuperModule) -> Result<SigmaEval> {
    let dual = dual_module(p, Side::Left)?;
    let tensor = tensor_over(dual.as_module(), b)?;
    let hom = underline_hom(p, b, Side::Left)?;
    let lb = b.require(Side::Left)?;
    let field = p.field();
    let mat = tensor.induced_map(hom.dim(), |k, j| {
        let f = dual.basis_map(k);
        let mut h = Matrix::zeros(field, b.dim(), p.dim());
        for x in 0..p.dim() {
            let fx = f.column(x);
            let mut col = lb.by(&fx).column(j);
            if koszul_negative(p.parity(x), b.parity(j)) {
                col = col.iter().map(|c| -c).collect();
            }
            for (r, c) in col.into_iter().enumerate() {
                h.set(r, x, c);
            }
        }
        value_in_hom(&hom, &h)
    })?;
    let map = ModuleMap::new(tensor.module.clone(), hom.as_module().clone(), mat)?;
    Ok(SigmaEval {
        dual,
        tensor,
        hom,
        map,
    })
}

/// `B ⊗_R P* → Hom_R(P, B)` for right `R`-modules `P` and `B`,
/// `b⊗f ↦ (x ↦ b·f(x))`.
pub fn sigma_eval_right(b: &SuperModule, p: &SuperModule) -> Result<SigmaEval> {
    let dual = dual_module(p, Side::Right)?;
    let tensor = tensor_over(b, dual.as_module())?;
    let hom = underline_hom(p, b, Side::Right)?;
    let rb = b.require(Side::Right)?;
    let field = p.field();
    let mat = tensor.induced_map(hom.dim(), |j, k| {
        let f = dual.basis_map(k);
        let mut h = Matrix::zeros(field, b.dim(), p.dim());
        for x in 0..p.dim() {
            let col = rb.by(&f.column(x)).column(j);
            for (r, c) in col.into_iter().enumerate() {
                h.set(r, x, c);
            }
        }
        value_in_hom(&hom, &h)
    })?;
    let map = ModuleMap::new(tensor.module.clone(), hom.as_module().clone(), mat)?;
    Ok(SigmaEval {
        dual,
        tensor,
        hom,
        map,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::{free_module, regular_bimodule};
    use super::*;
    use crate::field::Field;
    use crate::superring::{dual_numbers, super_skew_field};

    const Q: Field = Field::Rationals;

    #[test]
    fn evaluation_is_bijective_for_free_modules() {
        let d = Arc::new(super_skew_field(Q));
        let p = free_module(&d, 1, 1, Side::Left);
        let b = regular_bimodule(&d);
        let s = sigma_eval(&p, &b).unwrap();
        assert!(s.is_bijective());
        assert!(s.is_natural().unwrap());
        let p = free_module(&d, 1, 1, Side::Right);
        let s = sigma_eval_right(&b, &p).unwrap();
        assert!(s.is_bijective());
        assert!(s.is_natural().unwrap());
    }

    #[test]
    fn evaluation_fails_for_non_projective() {
        let dn = Arc::new(dual_numbers(Q));
        let space = crate::supervec::SuperSpace::with_dims(Q, 1, 0);
        let act = super::super::Action {
            algebra: dn.clone(),
            mats: vec![Matrix::identity(Q, 1), Matrix::zeros(Q, 1, 1)],
        };
        let residue = SuperModule::new("k", space, Some(act), None).unwrap();
        let s = sigma_eval(&residue, &residue).unwrap();
        assert!(!s.is_bijective());
    }
}
