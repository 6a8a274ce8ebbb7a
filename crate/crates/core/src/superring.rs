//! Unital associative superalgebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{koszul_negative, Field, Parity, Scalar};
use crate::report::Check;
use crate::supervec::{axpy, GradedDim, Matrix, RowReducer, SuperSpace, Subspace};

/// A finite-dimensional superalgebra over an exact field.
///
/// `table[i][j]` holds the coordinates of `eᵢ·eⱼ`. The cached matrices
/// `lmul[i]` (column `j` = `eᵢeⱼ`) and `rmul[i]` (column `j` = `eⱼeᵢ`) are the
/// left and right regular representations.
#[derive(Debug, Clone)]
pub struct SuperAlgebra {
    name: String,
    space: SuperSpace,
    unit: Vec<Scalar>,
    table: Vec<Vec<Vec<Scalar>>>,
    lmul: Vec<Matrix>,
    rmul: Vec<Matrix>,
}

impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &SuperAlgebra) -> bool {
        self.space == other.space && self.unit == other.unit && self.table == other.table
    }
}

impl Eq for SuperAlgebra {}

impl SuperAlgebra {
    /// Wraps structure constants after a shape check. Use
    /// [`validate_algebra`] to check the axioms.
    pub fn new(
        name: impl Into<String>,
        space: SuperSpace,
        unit: Vec<Scalar>,
        table: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<SuperAlgebra> {
        let name = name.into();
        let d = space.dim();
        let bad = |reason: String| Error::InvalidAlgebra {
            name: name.clone(),
            reason,
        };
        if unit.len() != d {
            return Err(bad(format!("unit has {} coordinates, expected {d}", unit.len())));
        }
        if table.len() != d || table.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(bad(format!("structure tensor must be {d}x{d}x{d}")));
        }
        let field = space.field();
        let wrong_field = unit
            .iter()
            .chain(table.iter().flatten().flatten())
            .any(|x| x.field() != field);
        if wrong_field {
            return Err(Error::FieldMismatch(field.to_string(), "mixed".into()));
        }
        let lmul = (0..d)
            .map(|i| Matrix::from_columns(field, d, &table[i]))
            .collect();
        let rmul = (0..d)
            .map(|i| {
                let cols: Vec<Vec<Scalar>> = (0..d).map(|j| table[j][i].clone()).collect();
                Matrix::from_columns(field, d, &cols)
            })
            .collect();
        Ok(SuperAlgebra {
            name,
            space,
            unit,
            table,
            lmul,
            rmul,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> SuperAlgebra {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn graded_dim(&self) -> GradedDim {
        self.space.graded_dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn table(&self) -> &[Vec<Vec<Scalar>>] {
        &self.table
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    /// Matrix of `x ↦ eᵢ x`.
    pub fn left_mul(&self, i: usize) -> &Matrix {
        &self.lmul[i]
    }

    /// Matrix of `x ↦ x eᵢ`.
    pub fn right_mul(&self, i: usize) -> &Matrix {
        &self.rmul[i]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.space.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                axpy(&mut out, xi, &self.lmul[i].apply(y));
            }
        }
        out
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mul_by(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (i, xi) in x.iter().enumerate() {
            m.add_scaled(xi, &self.lmul[i]);
        }
        m
    }

    /// Matrix of right multiplication by an arbitrary element.
    pub fn right_mul_by(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (i, xi) in x.iter().enumerate() {
            m.add_scaled(xi, &self.rmul[i]);
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.space.basis_vector(i)
    }

    pub fn is_purely_even(&self) -> bool {
        self.space.dim_odd() == 0
    }

    /// Builds the algebra spanned by a basis of homogeneous operators, closed
    /// under composition. `coords` expresses an operator in that basis.
    pub fn from_operators(
        name: impl Into<String>,
        space: SuperSpace,
        basis: &[Matrix],
        identity: &Matrix,
        coords: impl Fn(&Matrix) -> Option<Vec<Scalar>>,
    ) -> Result<SuperAlgebra> {
        let name = name.into();
        let not_closed = || Error::InvalidAlgebra {
            name: name.clone(),
            reason: "operator span is not closed under composition".into(),
        };
        let unit = if basis.is_empty() {
            Vec::new()
        } else {
            coords(identity).ok_or_else(not_closed)?
        };
        let mut table = Vec::with_capacity(basis.len());
        for a in basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in basis {
                row.push(coords(&a.mul(b)).ok_or_else(not_closed)?);
            }
            table.push(row);
        }
        SuperAlgebra::new(name, space, unit, table)
    }
}

impl fmt::Display for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.name, self.graded_dim(), self.field())
    }
}

/// Outcome of checking the superalgebra axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks grading compatibility, associativity and the two-sided even unit.
pub fn validate_algebra(a: &SuperAlgebra) -> ValidationReport {
    let d = a.dim();
    let sp = a.space();
    let label = |i: usize| sp.label(i).to_string();

    let mut grading = Check::pass("grading", "eᵢ·eⱼ has parity |eᵢ|+|eⱼ|");
    'g: for i in 0..d {
        for j in 0..d {
            let expected = a.parity(i) + a.parity(j);
            let v = &a.table[i][j];
            let bad = v
                .iter()
                .enumerate()
                .find(|(l, x)| !x.is_zero() && sp.parity(*l) != expected);
            if let Some((l, x)) = bad {
                grading = grading.fail(format!(
                    "witness ({}, {}, {}): {}·{} has coefficient {x} on {} of parity {}, expected {expected}",
                    label(i),
                    label(j),
                    label(l),
                    label(i),
                    label(j),
                    label(l),
                    sp.parity(l)
                ));
                break 'g;
            }
        }
    }

    let mut assoc = Check::pass("associativity", "(eᵢeⱼ)eₗ = eᵢ(eⱼeₗ)");
    'a: for i in 0..d {
        for j in 0..d {
            let ij = &a.table[i][j];
            for l in 0..d {
                let lhs = a.right_mul(l).apply(ij);
                let rhs = a.left_mul(i).apply(&a.table[j][l]);
                if lhs != rhs {
                    assoc = assoc.fail(format!("witness ({}, {}, {})", label(i), label(j), label(l)));
                    break 'a;
                }
            }
        }
    }

    let mut unit = Check::pass("unit", "1 is even and two-sided");
    if sp.vector_parity(&a.unit).ok().flatten() == Some(Parity::Odd) || sp.vector_parity(&a.unit).is_err() {
        unit = unit.fail("unit is not even".to_string());
    } else {
        for i in 0..d {
            let e = a.basis_vector(i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                unit = unit.fail(format!("witness {}", label(i)));
                break;
            }
        }
        if d > 0 && a.unit.iter().all(Scalar::is_zero) {
            unit = unit.fail("unit is zero".to_string());
        }
    }
    ValidationReport {
        checks: vec![grading, assoc, unit],
    }
}

fn ensure_valid(a: &SuperAlgebra) -> Result<()> {
    let rep = validate_algebra(a);
    if rep.passed() {
        Ok(())
    } else {
        let first = rep.checks.iter().find(|c| !c.passed).expect("a failed check");
        Err(Error::InvalidAlgebra {
            name: a.name().to_string(),
            reason: format!("{} fails: {}", first.name, first.detail),
        })
    }
}

/// The opposite superalgebra, `x ·° y = (−1)^{|x||y|} y·x`.
pub fn opposite(a: &SuperAlgebra) -> Result<SuperAlgebra> {
    ensure_valid(a)?;
    Ok(opposite_unchecked(a))
}

pub(crate) fn opposite_unchecked(a: &SuperAlgebra) -> SuperAlgebra {
    let d = a.dim();
    let table = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let v = a.table[j][i].clone();
                    if koszul_negative(a.parity(i), a.parity(j)) {
                        v.iter().map(|x| -x).collect()
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    let name = match a.name().strip_suffix('°') {
        Some(base) => base.to_string(),
        None => format!("{}°", a.name()),
    };
    SuperAlgebra::new(name, a.space().clone(), a.unit().to_vec(), table).expect("same shape")
}

/// `A ⊗ B` with its basis of pure tensors reordered into canonical parity blocks.
#[derive(Debug, Clone)]
pub struct TensorAlgebra {
    pub algebra: SuperAlgebra,
    /// `pair_index[i][j]` is the position of `aᵢ⊗bⱼ`.
    pub pair_index: Vec<Vec<usize>>,
    /// Inverse of `pair_index`.
    pub pairs: Vec<(usize, usize)>,
}

impl TensorAlgebra {
    /// Coordinates of `x ⊗ y`.
    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        pure_tensor(&self.pair_index, self.algebra.dim(), x, y)
    }
}

pub(crate) fn pure_tensor(pair_index: &[Vec<usize>], dim: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let field = x.first().or(y.first()).map(Scalar::field).unwrap_or(Field::Rationals);
    let mut out = vec![field.zero(); dim];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out[pair_index[i][j]] += &(xi * yj);
            }
        }
    }
    out
}

/// Orders index pairs into canonical parity blocks.
pub(crate) fn pair_order(
    left: &SuperSpace,
    right: &SuperSpace,
) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let mut pairs = Vec::with_capacity(left.dim() * right.dim());
    for want in [Parity::Even, Parity::Odd] {
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                if left.parity(i) + right.parity(j) == want {
                    pairs.push((i, j));
                }
            }
        }
    }
    let mut index = vec![vec![0; right.dim()]; left.dim()];
    for (pos, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = pos;
    }
    (index, pairs)
}

/// Space spanned by pure tensors of two graded bases.
pub(crate) fn tensor_space(left: &SuperSpace, right: &SuperSpace, pairs: &[(usize, usize)]) -> SuperSpace {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for &(i, j) in pairs {
        let label = format!("{}⊗{}", left.label(i), right.label(j));
        if left.parity(i) + right.parity(j) == Parity::Even {
            even.push(label);
        } else {
            odd.push(label);
        }
    }
    SuperSpace::new(left.field(), even, odd)
}

/// Graded tensor product with `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac ⊗ bd`.
pub fn tensor_algebra(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<TensorAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    ensure_valid(a)?;
    ensure_valid(b)?;
    let (pair_index, pairs) = pair_order(a.space(), b.space());
    let space = tensor_space(a.space(), b.space(), &pairs);
    let n = pairs.len();
    let mut table = vec![vec![space.zero_vector(); n]; n];
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(k, l)) in pairs.iter().enumerate() {
            let ac = &a.table[i][k];
            let bd = &b.table[j][l];
            let neg = koszul_negative(b.parity(j), a.parity(k));
            let out = &mut table[x][y];
            for (p, cp) in ac.iter().enumerate() {
                if cp.is_zero() {
                    continue;
                }
                for (q, dq) in bd.iter().enumerate() {
                    if dq.is_zero() {
                        continue;
                    }
                    let t = cp * dq;
                    let t = if neg { -t } else { t };
                    out[pair_index[p][q]] += &t;
                }
            }
        }
    }
    let unit = pure_tensor(&pair_index, space.dim(), a.unit(), b.unit());
    let algebra = SuperAlgebra::new(format!("{}⊗{}", a.name(), b.name()), space, unit, table)?;
    Ok(TensorAlgebra {
        algebra,
        pair_index,
        pairs,
    })
}

/// Homogeneous elements supercommuting with every basis element.
pub fn supercenter(a: &SuperAlgebra) -> Subspace {
    let d = a.dim();
    let field = a.field();
    let mut vectors = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let slots: Vec<usize> = (0..d).filter(|&c| a.parity(c) == parity).collect();
        let mut rr = RowReducer::new(field, slots.len());
        for i in 0..d {
            // eᵢx − (−1)^{|i||x|} x eᵢ = 0
            let neg = koszul_negative(a.parity(i), parity);
            for r in 0..d {
                let row: Vec<Scalar> = slots
                    .iter()
                    .map(|&c| {
                        let l = a.left_mul(i).get(r, c);
                        let rr_ = a.right_mul(i).get(r, c);
                        if neg {
                            l + rr_
                        } else {
                            l - rr_
                        }
                    })
                    .collect();
                rr.push(row);
            }
        }
        for k in rr.kernel_basis() {
            let mut v = a.space().zero_vector();
            for (s, &c) in slots.iter().enumerate() {
                v[c] = k[s].clone();
            }
            vectors.push(v);
        }
    }
    Subspace::span(a.space(), vectors)
}

/// Matrix units `E[i,j]` of a `(m|n)`-graded matrix algebra in canonical order.
pub fn matrix_unit_order(m: usize, n: usize) -> Vec<(usize, usize)> {
    let sp = SuperSpace::with_dims(Field::Rationals, m, n);
    let (_, pairs) = pair_order(&sp, &sp);
    pairs
}

/// `End_k(k^{m|n})` with `E_{ij}E_{kl} = δ_{jk}E_{il}`, `|E_{ij}| = |i|+|j|`.
pub fn matrix_superalgebra(m: usize, n: usize, field: Field) -> SuperAlgebra {
    assert!(m + n >= 1, "matrix superalgebra needs m+n >= 1");
    let sp = SuperSpace::with_dims(field, m, n);
    let (index, pairs) = pair_order(&sp, &sp);
    let space = {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for &(i, j) in &pairs {
            let label = format!("E[{i},{j}]");
            if sp.parity(i) == sp.parity(j) {
                even.push(label);
            } else {
                odd.push(label);
            }
        }
        SuperSpace::new(field, even, odd)
    };
    let dim = pairs.len();
    let mut table = vec![vec![space.zero_vector(); dim]; dim];
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                table[x][y][index[i][l]] = field.one();
            }
        }
    }
    let mut unit = space.zero_vector();
    for i in 0..m + n {
        unit[index[i][i]] = field.one();
    }
    let name = if (m, n) == (1, 0) {
        "k".to_string()
    } else {
        format!("M({m}|{n})")
    };
    SuperAlgebra::new(name, space, unit, table).expect("matrix units are well-formed")
}

/// Coordinates of an operator matrix on `k^{m|n}` in the matrix-unit basis.
pub fn matrix_unit_coords(op: &Matrix, m: usize, n: usize) -> Vec<Scalar> {
    matrix_unit_order(m, n)
        .into_iter()
        .map(|(i, j)| op.get(i, j).clone())
        .collect()
}

/// `k[θ]` with `θ` odd and `θ² = c`.
pub fn odd_quadratic(field: Field, c: i64, name: &str) -> SuperAlgebra {
    let space = SuperSpace::new(field, vec!["1".into()], vec!["θ".into()]);
    let z = field.zero();
    let o = field.one();
    let table = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![field.from_i64(c), z.clone()]],
    ];
    SuperAlgebra::new(name, space, vec![o, z], table).expect("well-formed")
}

/// The super skew field `𝔻 = k[θ]`, `θ` odd, `θ² = −1`.
pub fn super_skew_field(field: Field) -> SuperAlgebra {
    odd_quadratic(field, -1, "D")
}

/// Purely even dual numbers `k[x]/(x²)`.
pub fn dual_numbers(field: Field) -> SuperAlgebra {
    let space = SuperSpace::new(field, vec!["1".into(), "x".into()], vec![]);
    let z = field.zero();
    let o = field.one();
    let table = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
    ];
    SuperAlgebra::new("dual-numbers", space, vec![o, z], table).expect("well-formed")
}

/// The ground field as a superalgebra of dimension `1|0`.
pub fn ground_field(field: Field) -> SuperAlgebra {
    matrix_superalgebra(1, 0, field)
}

/// A parity-preserving linear map between superalgebras.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    pub source: SuperAlgebra,
    pub target: SuperAlgebra,
    pub map: Matrix,
}

impl AlgebraMorphism {
    /// Evenness, unitality and multiplicativity on basis pairs.
    pub fn check(&self) -> Vec<Check> {
        let src = self.source.space();
        let tgt = self.target.space();
        let mut even = Check::pass("even", "parity preserving");
        match crate::supervec::matrix_parity(&self.map, src, tgt) {
            Ok(Some(Parity::Odd)) | Err(_) => even = even.fail("map is not even".into()),
            _ => {}
        }
        let mut unital = Check::pass("unital", "1 ↦ 1");
        if self.map.apply(self.source.unit()) != self.target.unit() {
            unital = unital.fail("unit not preserved".into());
        }
        let mut mult = Check::pass("multiplicative", "f(xy) = f(x)f(y)");
        'm: for i in 0..self.source.dim() {
            let fi = self.map.column(i);
            for j in 0..self.source.dim() {
                let lhs = self.map.apply(self.source.product_of_basis(i, j));
                let rhs = self.target.mul(&fi, &self.map.column(j));
                if lhs != rhs {
                    mult = mult.fail(format!("witness ({}, {})", src.label(i), src.label(j)));
                    break 'm;
                }
            }
        }
        let mut bij = Check::pass("bijective", "rank equals both dimensions");
        let rank = self.map.rank();
        if !(rank == self.source.dim() && rank == self.target.dim()) {
            bij = bij.fail(format!(
                "rank {rank}, dims {} -> {}",
                self.source.graded_dim(),
                self.target.graded_dim()
            ));
        }
        vec![even, unital, mult, bij]
    }

    pub fn is_isomorphism(&self) -> bool {
        self.check().iter().all(|c| c.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn super_skew_field_is_valid() {
        for f in [Q, Field::Prime(5)] {
            let d = super_skew_field(f);
            assert!(validate_algebra(&d).passed());
            assert_eq!(d.graded_dim(), GradedDim::new(1, 1));
            assert_eq!(d.product_of_basis(1, 1), &[f.from_i64(-1), f.zero()][..]);
            assert_eq!(d.unit(), &[f.one(), f.zero()][..]);
        }
    }

    #[test]
    fn grading_violation_is_reported_with_witness() {
        // θ² redeclared as an odd output
        let d = super_skew_field(Q);
        let mut table = d.table().to_vec();
        table[1][1] = vec![Q.zero(), Q.one()];
        let bad = SuperAlgebra::new("bad", d.space().clone(), d.unit().to_vec(), table).unwrap();
        let rep = validate_algebra(&bad);
        let g = rep.check("grading").unwrap();
        assert!(!g.passed);
        assert!(g.detail.contains("(θ, θ, θ)"), "{}", g.detail);
    }

    #[test]
    fn opposite_of_d() {
        let d = super_skew_field(Q);
        let dop = opposite(&d).unwrap();
        assert_eq!(dop.product_of_basis(1, 1), &[Q.one(), Q.zero()][..]);
        assert!(validate_algebra(&dop).passed());
        assert_eq!(opposite(&dop).unwrap(), d);
    }

    #[test]
    fn opposite_of_commutative_even_algebra_is_itself() {
        let a = dual_numbers(Q);
        assert_eq!(opposite(&a).unwrap(), a);
    }

    #[test]
    fn tensor_with_ground_field() {
        let d = super_skew_field(Q);
        let t = tensor_algebra(&d, &ground_field(Q)).unwrap();
        assert_eq!(t.algebra.graded_dim(), d.graded_dim());
        assert_eq!(t.algebra.table(), d.table());
    }

    #[test]
    fn tensor_d_dop_signs() {
        let d = super_skew_field(Q);
        let dop = opposite(&d).unwrap();
        let t = tensor_algebra(&d, &dop).unwrap();
        assert_eq!(t.algebra.graded_dim(), GradedDim::new(2, 2));
        assert!(validate_algebra(&t.algebra).passed());
        let one = d.basis_vector(0);
        let th = d.basis_vector(1);
        let th1 = t.pure(&th, &one);
        let one_th = t.pure(&one, &th);
        let thth = t.pure(&th, &th);
        assert_eq!(t.algebra.mul(&th1, &one_th), thth);
        let neg: Vec<Scalar> = thth.iter().map(|x| -x).collect();
        assert_eq!(t.algebra.mul(&one_th, &th1), neg);
    }

    #[test]
    fn supercenters() {
        let d = super_skew_field(Q);
        let z = supercenter(&d);
        assert_eq!(z.graded_dim(), GradedDim::new(1, 0));
        assert!(z.contains(d.unit()));

        let dn = dual_numbers(Q);
        assert_eq!(supercenter(&dn).graded_dim(), GradedDim::new(2, 0));

        let m11 = matrix_superalgebra(1, 1, Q);
        let zm = supercenter(&m11);
        assert_eq!(zm.graded_dim(), GradedDim::new(1, 0));
        assert!(zm.contains(m11.unit()));
    }

    #[test]
    fn matrix_superalgebra_dims() {
        assert_eq!(matrix_superalgebra(1, 0, Q), ground_field(Q));
        assert_eq!(matrix_superalgebra(1, 1, Q).graded_dim(), GradedDim::new(2, 2));
        let m21 = matrix_superalgebra(2, 1, Q);
        assert_eq!(m21.graded_dim(), GradedDim::new(5, 4));
        assert!(validate_algebra(&m21).passed());
    }

    #[test]
    fn tensor_is_associative_up_to_reindexing() {
        let d = super_skew_field(Q);
        let m = matrix_superalgebra(1, 1, Q);
        let g = odd_quadratic(Q, 0, "Λ");
        let ab = tensor_algebra(&d, &m).unwrap();
        let ab_c = tensor_algebra(&ab.algebra, &g).unwrap();
        let bc = tensor_algebra(&m, &g).unwrap();
        let a_bc = tensor_algebra(&d, &bc.algebra).unwrap();
        // (i,j,l) -> positions in each presentation
        let pos1 = |i: usize, j: usize, l: usize| ab_c.pair_index[ab.pair_index[i][j]][l];
        let pos2 = |i: usize, j: usize, l: usize| a_bc.pair_index[i][bc.pair_index[j][l]];
        let n = ab_c.pairs.len();
        let mut perm = vec![0; n];
        for i in 0..d.dim() {
            for j in 0..m.dim() {
                for l in 0..g.dim() {
                    perm[pos1(i, j, l)] = pos2(i, j, l);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let lhs = ab_c.algebra.product_of_basis(x, y);
                let rhs = a_bc.algebra.product_of_basis(perm[x], perm[y]);
                let mut mapped = vec![Q.zero(); n];
                for (p, c) in lhs.iter().enumerate() {
                    mapped[perm[p]] = c.clone();
                }
                assert_eq!(mapped, rhs);
            }
        }
    }
}
