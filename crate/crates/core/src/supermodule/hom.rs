use std::sync::Arc;

use super::{regular_bimodule, same_algebra, sign, Action, Side, SuperModule};
use crate::error::{Error, Result};
use crate::field::{koszul_negative, Parity, Scalar};
use crate::superring::SuperAlgebra;
use crate::supervec::{Matrix, RowReducer, SuperSpace};

/// Homogeneous basis of one parity block of a hom space, in reduced echelon
/// form over the matrix entries.
#[derive(Debug, Clone)]
struct Block {
    basis: Vec<Matrix>,
    /// Entry position read off as the coordinate of each basis map.
    pivots: Vec<(usize, usize)>,
}

/// `Hom_R(M, N)` for one chosen side, with the residual actions it inherits.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub source: SuperModule,
    pub target: SuperModule,
    pub side: Side,
    even: Block,
    odd: Block,
    space: SuperSpace,
    module: SuperModule,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.even.basis.len() + self.odd.basis.len()
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    /// Basis maps, even block first.
    pub fn basis(&self) -> impl Iterator<Item = &Matrix> {
        self.even.basis.iter().chain(self.odd.basis.iter())
    }

    pub fn basis_map(&self, k: usize) -> &Matrix {
        let e = self.even.basis.len();
        if k < e {
            &self.even.basis[k]
        } else {
            &self.odd.basis[k - e]
        }
    }

    pub fn basis_vec(&self) -> Vec<Matrix> {
        self.basis().cloned().collect()
    }

    /// The hom space as a module under its residual actions.
    pub fn as_module(&self) -> &SuperModule {
        &self.module
    }

    /// Matrix of a hom-space vector.
    pub fn to_matrix(&self, coords: &[Scalar]) -> Matrix {
        let field = self.source.field();
        let mut m = Matrix::zeros(field, self.target.dim(), self.source.dim());
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, self.basis_map(k));
            }
        }
        m
    }

    /// Coordinates of a linear map, or `None` when it is not a homomorphism.
    pub fn coords(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        if f.rows() != self.target.dim() || f.cols() != self.source.dim() {
            return None;
        }
        let field = f.field();
        let mut out = Vec::with_capacity(self.dim());
        let mut rebuilt = Matrix::zeros(field, f.rows(), f.cols());
        for block in [&self.even, &self.odd] {
            for (b, &(r, c)) in block.basis.iter().zip(&block.pivots) {
                let x = f.get(r, c).clone();
                if !x.is_zero() {
                    rebuilt.add_scaled(&x, b);
                }
                out.push(x);
            }
        }
        (rebuilt == *f).then_some(out)
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        self.coords(f).is_some()
    }

    fn coords_or_err(&self, f: &Matrix, what: &str) -> Result<Vec<Scalar>> {
        self.coords(f)
            .ok_or_else(|| Error::IllDefined(format!("{what} leaves Hom({}, {})", self.source.name(), self.target.name())))
    }
}

fn solve_block(
    source: &SuperModule,
    target: &SuperModule,
    side: Side,
    src: &Action,
    tgt: &Action,
    parity: Parity,
) -> Block {
    let field = source.field();
    let (n, m) = (target.dim(), source.dim());
    let mut slot = vec![vec![None; m]; n];
    let mut entries = Vec::new();
    for a in 0..n {
        for b in 0..m {
            if target.parity(a) + source.parity(b) == parity {
                slot[a][b] = Some(entries.len());
                entries.push((a, b));
            }
        }
    }
    let mut eqs = RowReducer::new(field, entries.len());
    if !entries.is_empty() {
        // f·ρ_M(i) − s·ρ_N(i)·f = 0 entrywise
        for (i, (mi, ni)) in src.mats.iter().zip(&tgt.mats).enumerate() {
            let neg = side == Side::Left && koszul_negative(src.algebra.parity(i), parity);
            let s = sign(field, neg);
            for a in 0..n {
                for c in 0..m {
                    let mut row = vec![field.zero(); entries.len()];
                    let mut any = false;
                    for b in 0..m {
                        let x = mi.get(b, c);
                        if let (false, Some(k)) = (x.is_zero(), slot[a][b]) {
                            row[k] += x;
                            any = true;
                        }
                    }
                    for d in 0..n {
                        let y = ni.get(a, d);
                        if let (false, Some(k)) = (y.is_zero(), slot[d][c]) {
                            row[k] = &row[k] - &(&s * y);
                            any = true;
                        }
                    }
                    if any {
                        eqs.push(row);
                    }
                }
            }
        }
    }
    let mut basis_rr = RowReducer::new(field, entries.len());
    for v in eqs.kernel_basis() {
        basis_rr.push(v);
    }
    let basis = basis_rr
        .rows()
        .iter()
        .map(|v| {
            let mut mat = Matrix::zeros(field, n, m);
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let (a, b) = entries[k];
                    mat.set(a, b, x.clone());
                }
            }
            mat
        })
        .collect();
    let pivots = basis_rr.pivots().iter().map(|&k| entries[k]).collect();
    Block { basis, pivots }
}

fn hom_core(source: &SuperModule, target: &SuperModule, side: Side) -> Result<(Block, Block)> {
    let src = source.require(side)?;
    let tgt = target.require(side)?;
    if !same_algebra(&src.algebra, &tgt.algebra) {
        return Err(Error::SignatureMismatch(format!(
            "{side} algebras {} and {} differ",
            src.algebra.name(),
            tgt.algebra.name()
        )));
    }
    if source.field() != target.field() {
        return Err(Error::FieldMismatch(source.field().to_string(), target.field().to_string()));
    }
    Ok((
        solve_block(source, target, side, src, tgt, Parity::Even),
        solve_block(source, target, side, src, tgt, Parity::Odd),
    ))
}

fn diag_sign(space: &SuperSpace, neg_odd: bool) -> Matrix {
    let field = space.field();
    let mut d = Matrix::identity(field, space.dim());
    if neg_odd {
        for c in space.dim_even()..space.dim() {
            d.set(c, c, field.from_i64(-1));
        }
    }
    d
}

/// `Hom_R(M, N)` for the action on `side`, with signed linearity on the left.
///
/// Residual actions: for right-linear maps, a left `S`-action on `M` gives
/// `(f·s)(m) = f(s·m)` and a left `T`-action on `N` gives `(t·f)(m) = t·f(m)`.
/// For left-linear maps, a right action on `M` gives
/// `(r·f)(m) = (−1)^{|r|(|f|+|m|)} f(m·r)` and a right action on `N` gives
/// `(f·t)(m) = (−1)^{|t||m|} f(m)·t`.
pub fn underline_hom(source: &SuperModule, target: &SuperModule, side: Side) -> Result<HomSpace> {
    let (even, odd) = hom_core(source, target, side)?;
    let field = source.field();
    let space = SuperSpace::with_dims(field, even.basis.len(), odd.basis.len());
    let name = format!("Hom({}, {})", source.name(), target.name());
    let mut hom = HomSpace {
        source: source.clone(),
        target: target.clone(),
        side,
        even,
        odd,
        space: space.clone(),
        module: SuperModule::vector_space(name.clone(), space.clone()),
    };
    let residual = |alg: &Arc<SuperAlgebra>, op: &dyn Fn(usize, &Matrix, Parity) -> Matrix| -> Result<Action> {
        let mut mats = Vec::with_capacity(alg.dim());
        for i in 0..alg.dim() {
            let cols = (0..hom.dim())
                .map(|k| {
                    let fk = hom.basis_map(k);
                    hom.coords_or_err(&op(i, fk, hom.space.parity(k)), "residual action")
                })
                .collect::<Result<Vec<_>>>()?;
            mats.push(Matrix::from_columns(field, hom.dim(), &cols));
        }
        Ok(Action {
            algebra: alg.clone(),
            mats,
        })
    };
    let (mut left, mut right) = (None, None);
    match side {
        Side::Right => {
            if let Some(ms) = source.left() {
                right = Some(residual(&ms.algebra, &|i, f, _| f.mul(&ms.mats[i]))?);
            }
            if let Some(nt) = target.left() {
                left = Some(residual(&nt.algebra, &|i, f, _| nt.mats[i].mul(f))?);
            }
        }
        Side::Left => {
            if let Some(mr) = source.right() {
                left = Some(residual(&mr.algebra, &|i, f, pf| {
                    let odd = mr.algebra.parity(i).is_odd();
                    let g = f.mul(&mr.mats[i]).mul(&diag_sign(source.space(), odd));
                    if koszul_negative(mr.algebra.parity(i), pf) {
                        g.neg()
                    } else {
                        g
                    }
                })?);
            }
            if let Some(nt) = target.right() {
                right = Some(residual(&nt.algebra, &|i, f, _| {
                    let odd = nt.algebra.parity(i).is_odd();
                    nt.mats[i].mul(f).mul(&diag_sign(source.space(), odd))
                })?);
            }
        }
    }
    hom.module = SuperModule::new(name, space, left, right)?;
    Ok(hom)
}

/// The dual `Hom_R(P, R)` for the action on `side`, as a module over its residual actions.
pub fn dual_module(p: &SuperModule, side: Side) -> Result<HomSpace> {
    let act = p.require(side)?;
    let r = regular_bimodule(&act.algebra);
    let mut hom = underline_hom(p, &r, side)?;
    let name = format!("{}*", p.name());
    hom.module = hom.module.clone().with_name(name);
    Ok(hom)
}

/// `End_R(M)` for the action on `side`, under composition, with its basis maps.
pub fn endomorphism_algebra(m: &SuperModule, side: Side) -> Result<(SuperAlgebra, HomSpace)> {
    let plain = m.restrict(side);
    let hom = underline_hom(&plain, &plain, side)?;
    let basis = hom.basis_vec();
    let id = Matrix::identity(m.field(), m.dim());
    let labels: Vec<String> = (0..hom.dim()).map(|k| format!("h{k}")).collect();
    let e = hom.space.dim_even();
    let space = SuperSpace::new(m.field(), labels[..e].to_vec(), labels[e..].to_vec());
    let alg = SuperAlgebra::from_operators(format!("End({})", m.name()), space, &basis, &id, |x| hom.coords(x))?;
    Ok((alg, hom))
}

#[cfg(test)]
mod tests {
    use super::super::{free_module, is_valid_module, parity_reverse, regular_module, ModuleMap};
    use super::*;
    use crate::field::Field;
    use crate::superring::{dual_numbers, ground_field, matrix_superalgebra, super_skew_field, validate_algebra};
    use crate::supervec::GradedDim;

    const Q: Field = Field::Rationals;

    #[test]
    fn end_of_free_module_is_matrix_algebra() {
        let k = Arc::new(ground_field(Q));
        let p = free_module(&k, 1, 1, Side::Right);
        let (s, _) = endomorphism_algebra(&p, Side::Right).unwrap();
        assert_eq!(s.graded_dim(), GradedDim::new(2, 2));
        assert!(validate_algebra(&s).passed());
    }

    #[test]
    fn end_of_regular_d_is_d() {
        let d = Arc::new(super_skew_field(Q));
        let (s, _) = endomorphism_algebra(&regular_module(&d, Side::Right), Side::Right).unwrap();
        assert_eq!(s.graded_dim(), GradedDim::new(1, 1));
        let (s, _) = endomorphism_algebra(&regular_module(&d, Side::Left), Side::Left).unwrap();
        assert_eq!(s.graded_dim(), GradedDim::new(1, 1));
    }

    #[test]
    fn left_homs_obey_signed_linearity() {
        let d = Arc::new(super_skew_field(Q));
        let m = regular_module(&d, Side::Left);
        let hom = underline_hom(&m, &m, Side::Left).unwrap();
        assert_eq!(hom.space().graded_dim(), GradedDim::new(1, 1));
        for f in hom.basis() {
            let map = ModuleMap::new(m.clone(), m.clone(), f.clone()).unwrap();
            assert!(map.check_linear(Side::Left).unwrap());
        }
    }

    #[test]
    fn duals_are_valid_modules() {
        let d = Arc::new(super_skew_field(Q));
        for side in [Side::Left, Side::Right] {
            let q = dual_module(&regular_bimodule(&d), side).unwrap();
            assert!(is_valid_module(q.as_module()));
            assert_eq!(q.as_module().graded_dim(), GradedDim::new(1, 1));
        }
        let dn = Arc::new(dual_numbers(Q));
        let q = dual_module(&parity_reverse(&regular_bimodule(&dn)), Side::Left).unwrap();
        assert!(is_valid_module(q.as_module()));
    }

    #[test]
    fn residual_bimodule_on_matrix_hom() {
        let m11 = Arc::new(matrix_superalgebra(1, 1, Q));
        let reg = regular_bimodule(&m11);
        for side in [Side::Left, Side::Right] {
            let h = underline_hom(&reg, &reg, side).unwrap();
            assert!(is_valid_module(h.as_module()));
            assert_eq!(h.dim(), 4);
        }
    }

    #[test]
    fn coords_reject_non_homomorphisms() {
        let d = Arc::new(super_skew_field(Q));
        let m = regular_module(&d, Side::Right);
        let hom = underline_hom(&m, &m, Side::Right).unwrap();
        let bad = Matrix::from_i64(Q, &[&[1, 0], &[0, 2]]);
        assert!(hom.coords(&bad).is_none());
        assert!(hom.coords(&Matrix::identity(Q, 2)).is_some());
    }
}
