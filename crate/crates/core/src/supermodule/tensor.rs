use super::{o_functor, same_algebra, Action, ModuleMap, SuperModule};
use crate::error::{Error, Result};
use crate::field::{koszul_negative, Scalar};
use crate::superring::{pair_order, pure_tensor, tensor_space};
use crate::supervec::{quotient, Matrix, RowReducer, SuperSpace, Subspace};

/// `M ⊗_R N` as a quotient of the ambient tensor product of vector spaces.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub module: SuperModule,
    pub left: SuperModule,
    pub right: SuperModule,
    pub ambient: SuperSpace,
    pub pair_index: Vec<Vec<usize>>,
    pub pairs: Vec<(usize, usize)>,
    pub relations: Subspace,
    /// Ambient coordinates to quotient coordinates.
    pub projection: Matrix,
    /// Quotient coordinates to a chosen ambient representative.
    pub section: Matrix,
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Ambient coordinates of `m ⊗ n`.
    pub fn ambient_pure(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        pure_tensor(&self.pair_index, self.ambient.dim(), m, n)
    }

    /// Quotient coordinates of `m ⊗ n`.
    pub fn pure(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        if self.ambient.dim() == 0 {
            return Vec::new();
        }
        self.projection.apply(&self.ambient_pure(m, n))
    }

    /// Quotient coordinates of `e_a ⊗ e_b`.
    pub fn pure_basis(&self, a: usize, b: usize) -> Vec<Scalar> {
        self.projection.column(self.pair_index[a][b])
    }

    /// The map on the quotient induced by `e_a ⊗ e_b ↦ value(a, b)`.
    ///
    /// Fails with [`Error::IllDefined`] when the assignment does not vanish on
    /// the balancing relations.
    pub fn induced_map(
        &self,
        target_dim: usize,
        mut value: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Matrix> {
        let field = self.ambient.field();
        let cols: Vec<Vec<Scalar>> = self.pairs.iter().map(|&(a, b)| value(a, b)).collect();
        let amb = Matrix::from_columns(field, target_dim, &cols);
        for rel in self.relations.basis() {
            if !amb.apply(rel).iter().all(Scalar::is_zero) {
                return Err(Error::IllDefined(format!("assignment on {} does not kill the balancing relations", self.module.name())));
            }
        }
        Ok(amb.mul(&self.section))
    }
}

/// `M ⊗_R N` for a right `R`-module `M` and a left `R`-module `N`.
///
/// Outer actions carry no sign: `s·(m⊗n) = (s·m)⊗n` and `(m⊗n)·t = m⊗(n·t)`.
pub fn tensor_over(m: &SuperModule, n: &SuperModule) -> Result<TensorProduct> {
    let rm = m.require(super::Side::Right)?;
    let ln = n.require(super::Side::Left)?;
    if !same_algebra(&rm.algebra, &ln.algebra) {
        return Err(Error::SignatureMismatch(format!(
            "cannot tensor {} (right {}) with {} (left {})",
            m.name(),
            rm.algebra.name(),
            n.name(),
            ln.algebra.name()
        )));
    }
    let field = m.field();
    let (pair_index, pairs) = pair_order(m.space(), n.space());
    let ambient = tensor_space(m.space(), n.space(), &pairs);
    let dim = pairs.len();
    let mut rr = RowReducer::new(field, dim);
    for i in 0..rm.algebra.dim() {
        for a in 0..m.dim() {
            for b in 0..n.dim() {
                // (m_a r_i) ⊗ n_b − m_a ⊗ (r_i n_b)
                let mut v = vec![field.zero(); dim];
                for t in 0..m.dim() {
                    let x = rm.mats[i].get(t, a);
                    if !x.is_zero() {
                        v[pair_index[t][b]] += x;
                    }
                }
                for u in 0..n.dim() {
                    let y = ln.mats[i].get(u, b);
                    if !y.is_zero() {
                        let k = pair_index[a][u];
                        v[k] = &v[k] - y;
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    rr.push(v);
                }
            }
        }
    }
    let relations = Subspace::from_reducer(&ambient, rr);
    let q = quotient(&ambient, &relations)?;
    let outer = |act: &Action, on_left: bool| -> Action {
        let mats = act
            .mats
            .iter()
            .map(|x| {
                let mut amb = Matrix::zeros(field, dim, dim);
                for (col, &(a, b)) in pairs.iter().enumerate() {
                    if on_left {
                        for t in 0..m.dim() {
                            let c = x.get(t, a);
                            if !c.is_zero() {
                                amb.set(pair_index[t][b], col, c.clone());
                            }
                        }
                    } else {
                        for u in 0..n.dim() {
                            let c = x.get(u, b);
                            if !c.is_zero() {
                                amb.set(pair_index[a][u], col, c.clone());
                            }
                        }
                    }
                }
                q.projection.matrix.mul(&amb).mul(&q.section.matrix)
            })
            .collect();
        Action {
            algebra: act.algebra.clone(),
            mats,
        }
    };
    let left = m.left().map(|a| outer(a, true));
    let right = n.right().map(|a| outer(a, false));
    let name = format!("{}⊗_{}{}", m.name(), rm.algebra.name(), n.name());
    let module = SuperModule::new(name, q.space.clone(), left, right)?;
    Ok(TensorProduct {
        module,
        left: m.clone(),
        right: n.clone(),
        ambient,
        pair_index,
        pairs,
        relations,
        projection: q.projection.matrix,
        section: q.section.matrix,
    })
}

/// `f ⊗ g` between given tensor products, `(f⊗g)(m⊗n) = (−1)^{|g||m|} f(m)⊗g(n)`.
pub fn tensor_of_maps_between(
    f: &ModuleMap,
    g: &ModuleMap,
    source: &TensorProduct,
    target: &TensorProduct,
) -> Result<ModuleMap> {
    let pg = g.parity()?;
    f.parity()?;
    let mat = source.induced_map(target.dim(), |a, b| {
        let fm = f.matrix.column(a);
        let gn = g.matrix.column(b);
        let v = target.pure(&fm, &gn);
        if koszul_negative(pg, source.left.parity(a)) {
            v.iter().map(|x| -x).collect()
        } else {
            v
        }
    })?;
    ModuleMap::new(source.module.clone(), target.module.clone(), mat)
}

/// `f ⊗ g` between the tensor products of the sources and of the targets.
pub fn tensor_of_maps(f: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    let source = tensor_over(&f.source, &g.source)?;
    let target = tensor_over(&f.target, &g.target)?;
    tensor_of_maps_between(f, g, &source, &target)
}

/// `(M ⊗_R N)° ≅ N° ⊗_{R°} M°` via `m⊗n ↦ (−1)^{|m||n|} n⊗m`.
pub fn opposite_swap(tp: &TensorProduct) -> Result<(TensorProduct, ModuleMap)> {
    let swapped = tensor_over(&o_functor(&tp.right), &o_functor(&tp.left))?;
    let mat = tp.induced_map(swapped.dim(), |a, b| {
        let v = swapped.pure_basis(b, a);
        if koszul_negative(tp.left.parity(a), tp.right.parity(b)) {
            v.iter().map(|x| -x).collect()
        } else {
            v
        }
    })?;
    let map = ModuleMap::new(o_functor(&tp.module), swapped.module.clone(), mat)?;
    Ok((swapped, map))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::{free_module, is_valid_module, parity_reverse, regular_bimodule, regular_module, Side};
    use super::*;
    use crate::field::Field;
    use crate::superring::{dual_numbers, ground_field, super_skew_field};
    use crate::supervec::GradedDim;

    const Q: Field = Field::Rationals;

    #[test]
    fn tensor_with_regular_is_identity_size() {
        let d = Arc::new(super_skew_field(Q));
        let m = free_module(&d, 1, 1, Side::Right);
        let t = tensor_over(&m, &regular_bimodule(&d)).unwrap();
        assert_eq!(t.module.graded_dim(), m.graded_dim());
        assert!(is_valid_module(&t.module));
    }

    #[test]
    fn tensor_over_ground_field_multiplies_dims() {
        let k = Arc::new(ground_field(Q));
        let m = free_module(&k, 1, 1, Side::Right);
        let n = free_module(&k, 2, 1, Side::Left);
        let t = tensor_over(&m, &n).unwrap();
        assert_eq!(t.module.graded_dim(), GradedDim::new(3, 3));
    }

    #[test]
    fn induced_map_detects_ill_defined_assignments() {
        let d = Arc::new(super_skew_field(Q));
        let r = regular_bimodule(&d);
        let t = tensor_over(&r, &r).unwrap();
        // e_a ⊗ e_b ↦ e_a ignores the balancing
        let err = t.induced_map(2, |a, _| d.basis_vector(a));
        assert!(matches!(err, Err(Error::IllDefined(_))));
        // multiplication is balanced
        let mult = t.induced_map(2, |a, b| d.product_of_basis(a, b).to_vec()).unwrap();
        assert_eq!(mult.rank(), 2);
    }

    #[test]
    fn opposite_swap_is_an_isomorphism() {
        let dn = Arc::new(dual_numbers(Q));
        let m = parity_reverse(&regular_bimodule(&dn));
        let t = tensor_over(&m, &regular_bimodule(&dn)).unwrap();
        let (_, iso) = opposite_swap(&t).unwrap();
        assert!(iso.is_bijective());
        assert!(iso.is_morphism().unwrap());
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let d = Arc::new(super_skew_field(Q));
        let m = regular_module(&d, Side::Right);
        let n = regular_bimodule(&d);
        let f = ModuleMap::identity(&m);
        let g = ModuleMap::identity(&n);
        let fg = tensor_of_maps(&f, &g).unwrap();
        assert!(fg.matrix.is_identity());
    }
}
