//! Finite-dimensional super (bi)modules and Koszul-signed constructions on them.
//!
//! All stored matrices act on coordinate columns from the left. The signed
//! linearity law for homomorphisms of left modules,
//! `f(r·x) = (−1)^{|r||f|} r·f(x)`, lives in [`ModuleMap::check_linear`].

mod hom;
mod sigma;
mod tensor;

use std::fmt;
use std::sync::Arc;

pub use hom::{dual_module, endomorphism_algebra, underline_hom, HomSpace};
pub use sigma::{sigma_eval, sigma_eval_right, SigmaEval};
pub use tensor::{opposite_swap, tensor_of_maps, tensor_of_maps_between, tensor_over, TensorProduct};

use crate::error::{Error, Result};
use crate::field::{koszul_negative, Field, Parity, Scalar};
use crate::report::Check;
use crate::superring::{opposite_unchecked, pair_order, SuperAlgebra};
use crate::supervec::{matrix_parity, GradedDim, Matrix, SuperSpace};

/// Which action of a module a construction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// An algebra acting on a module through one matrix per algebra basis vector.
#[derive(Debug, Clone)]
pub struct Action {
    pub algebra: Arc<SuperAlgebra>,
    pub mats: Vec<Matrix>,
}

impl PartialEq for Action {
    fn eq(&self, other: &Action) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
            && self.mats == other.mats
    }
}

impl Eq for Action {}

impl Action {
    /// Matrix of the action of an arbitrary algebra element.
    pub fn by(&self, x: &[Scalar]) -> Matrix {
        let field = self.algebra.field();
        let n = self.mats.first().map_or(0, Matrix::rows);
        let mut m = Matrix::zeros(field, n, n);
        for (i, xi) in x.iter().enumerate() {
            m.add_scaled(xi, &self.mats[i]);
        }
        m
    }
}

pub(crate) fn same_algebra(a: &Arc<SuperAlgebra>, b: &Arc<SuperAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A super (bi)module over at most one algebra on each side.
#[derive(Debug, Clone)]
pub struct SuperModule {
    name: String,
    space: SuperSpace,
    left: Option<Action>,
    right: Option<Action>,
}

impl PartialEq for SuperModule {
    fn eq(&self, other: &SuperModule) -> bool {
        self.space == other.space && self.left == other.left && self.right == other.right
    }
}

impl Eq for SuperModule {}

impl SuperModule {
    pub fn new(
        name: impl Into<String>,
        space: SuperSpace,
        left: Option<Action>,
        right: Option<Action>,
    ) -> Result<SuperModule> {
        let name = name.into();
        for (side, act) in [("left", &left), ("right", &right)] {
            if let Some(act) = act {
                let bad = |reason: String| Error::InvalidModule {
                    name: name.clone(),
                    reason,
                };
                if act.algebra.field() != space.field() {
                    return Err(Error::FieldMismatch(
                        space.field().to_string(),
                        act.algebra.field().to_string(),
                    ));
                }
                if act.mats.len() != act.algebra.dim() {
                    return Err(bad(format!(
                        "{side} action has {} matrices for an algebra of dimension {}",
                        act.mats.len(),
                        act.algebra.dim()
                    )));
                }
                if act
                    .mats
                    .iter()
                    .any(|m| m.rows() != space.dim() || m.cols() != space.dim())
                {
                    return Err(bad(format!("{side} action matrices must be square of size {}", space.dim())));
                }
            }
        }
        Ok(SuperModule {
            name,
            space,
            left,
            right,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> SuperModule {
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

    pub fn left(&self) -> Option<&Action> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&Action> {
        self.right.as_ref()
    }

    pub fn action(&self, side: Side) -> Option<&Action> {
        match side {
            Side::Left => self.left.as_ref(),
            Side::Right => self.right.as_ref(),
        }
    }

    pub fn require(&self, side: Side) -> Result<&Action> {
        self.action(side).ok_or_else(|| {
            Error::SignatureMismatch(format!("{} has no {side} action", self.name))
        })
    }

    /// Keeps only the action on `side`.
    pub fn restrict(&self, side: Side) -> SuperModule {
        let mut m = self.clone();
        match side {
            Side::Left => m.right = None,
            Side::Right => m.left = None,
        }
        m
    }

    /// Replaces (or adds) the action on one side.
    pub fn with_action(&self, side: Side, action: Action) -> Result<SuperModule> {
        let (left, right) = match side {
            Side::Left => (Some(action), self.right.clone()),
            Side::Right => (self.left.clone(), Some(action)),
        };
        SuperModule::new(self.name.clone(), self.space.clone(), left, right)
    }

    /// A plain graded vector space, no actions.
    pub fn vector_space(name: impl Into<String>, space: SuperSpace) -> SuperModule {
        SuperModule {
            name: name.into(),
            space,
            left: None,
            right: None,
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.space.basis_vector(i)
    }
}

impl fmt::Display for SuperModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.left.as_ref().map(|a| a.algebra.name().to_string());
        let r = self.right.as_ref().map(|a| a.algebra.name().to_string());
        write!(f, "{} (dim {}", self.name, self.graded_dim())?;
        if let Some(l) = l {
            write!(f, ", left {l}")?;
        }
        if let Some(r) = r {
            write!(f, ", right {r}")?;
        }
        write!(f, ")")
    }
}

fn sign(field: Field, negative: bool) -> Scalar {
    if negative {
        field.from_i64(-1)
    } else {
        field.one()
    }
}

/// Checks grading, associativity, unitality and (for bimodules) commutation.
pub fn validate_module(m: &SuperModule) -> Vec<Check> {
    let mut checks = Vec::new();
    let sp = m.space();
    for side in [Side::Left, Side::Right] {
        let Some(act) = m.action(side) else { continue };
        let a = &act.algebra;
        let mut grading = Check::pass(format!("{side} grading"), "eᵢ·m has parity |eᵢ|+|m|");
        for (i, mat) in act.mats.iter().enumerate() {
            let p = matrix_parity(mat, sp, sp);
            let ok = matches!(p, Ok(None)) || p == Ok(Some(a.parity(i)));
            if !ok {
                grading = grading.fail(format!("action of {} is not homogeneous of parity {}", a.space().label(i), a.parity(i)));
                break;
            }
        }
        checks.push(grading);

        let mut assoc = Check::pass(format!("{side} associativity"), "action is multiplicative");
        'a: for i in 0..a.dim() {
            for j in 0..a.dim() {
                let prod = act.by(a.product_of_basis(i, j));
                let composed = match side {
                    Side::Left => act.mats[i].mul(&act.mats[j]),
                    Side::Right => act.mats[j].mul(&act.mats[i]),
                };
                if prod != composed {
                    assoc = assoc.fail(format!(
                        "witness ({}, {})",
                        a.space().label(i),
                        a.space().label(j)
                    ));
                    break 'a;
                }
            }
        }
        checks.push(assoc);

        let unit_ok = a.dim() == 0 && m.dim() == 0 || act.by(a.unit()).is_identity();
        checks.push(Check::new(format!("{side} unit"), unit_ok, "1 acts as the identity"));
    }
    if let (Some(l), Some(r)) = (m.left(), m.right()) {
        let mut comm = Check::pass("bimodule", "(a·m)·b = a·(m·b)");
        'c: for (i, li) in l.mats.iter().enumerate() {
            for (j, rj) in r.mats.iter().enumerate() {
                if li.mul(rj) != rj.mul(li) {
                    comm = comm.fail(format!(
                        "witness ({}, {})",
                        l.algebra.space().label(i),
                        r.algebra.space().label(j)
                    ));
                    break 'c;
                }
            }
        }
        checks.push(comm);
    }
    checks
}

pub fn is_valid_module(m: &SuperModule) -> bool {
    validate_module(m).iter().all(|c| c.passed)
}

// ---------------------------------------------------------------------------
// standard modules

/// `A` as an `(A, A)`-bimodule.
pub fn regular_bimodule(a: &Arc<SuperAlgebra>) -> SuperModule {
    let d = a.dim();
    SuperModule {
        name: a.name().to_string(),
        space: a.space().clone(),
        left: Some(Action {
            algebra: a.clone(),
            mats: (0..d).map(|i| a.left_mul(i).clone()).collect(),
        }),
        right: Some(Action {
            algebra: a.clone(),
            mats: (0..d).map(|i| a.right_mul(i).clone()).collect(),
        }),
    }
}

/// `A` acting on itself from one side.
pub fn regular_module(a: &Arc<SuperAlgebra>, side: Side) -> SuperModule {
    regular_bimodule(a).restrict(side)
}

/// The free module with `m` even and `n` odd generators.
///
/// Right modules are spanned by `e_b·r`, left modules by `r·e_b`; in both
/// cases the algebra acts by plain multiplication on the coefficient.
pub fn free_module(r: &Arc<SuperAlgebra>, m: usize, n: usize, side: Side) -> SuperModule {
    let field = r.field();
    let gens = SuperSpace::new(
        field,
        (0..m).map(|i| format!("e{i}")).collect(),
        (0..n).map(|j| format!("f{j}")).collect(),
    );
    let (index, pairs) = pair_order(&gens, r.space());
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for &(b, t) in &pairs {
        let label = match side {
            Side::Right => format!("{}·{}", gens.label(b), r.space().label(t)),
            Side::Left => format!("{}·{}", r.space().label(t), gens.label(b)),
        };
        if gens.parity(b) + r.parity(t) == Parity::Even {
            even.push(label);
        } else {
            odd.push(label);
        }
    }
    let space = SuperSpace::new(field, even, odd);
    let dim = pairs.len();
    let mats = (0..r.dim())
        .map(|i| {
            let mut mat = Matrix::zeros(field, dim, dim);
            for (col, &(b, t)) in pairs.iter().enumerate() {
                let prod = match side {
                    Side::Right => r.product_of_basis(t, i),
                    Side::Left => r.product_of_basis(i, t),
                };
                for (u, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        mat.set(index[b][u], col, c.clone());
                    }
                }
            }
            mat
        })
        .collect();
    let action = Some(Action {
        algebra: r.clone(),
        mats,
    });
    let name = format!("{}^{{{m}|{n}}}", r.name());
    match side {
        Side::Right => SuperModule::new(name, space, None, action),
        Side::Left => SuperModule::new(name, space, action, None),
    }
    .expect("free module is well-formed")
}

/// The zero module with the given action side.
pub fn zero_module(r: &Arc<SuperAlgebra>, side: Side) -> SuperModule {
    free_module(r, 0, 0, side).with_name("0")
}

/// Direct sum with injections and projections (as matrices).
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: SuperModule,
    pub injections: Vec<Matrix>,
    pub projections: Vec<Matrix>,
}

/// Direct sum of modules sharing their algebras, in canonical basis order.
pub fn direct_sum(parts: &[SuperModule]) -> Result<DirectSum> {
    let first = parts
        .first()
        .ok_or_else(|| Error::PreconditionFailed("empty direct sum".into()))?;
    let field = first.field();
    for p in parts {
        for side in [Side::Left, Side::Right] {
            match (first.action(side), p.action(side)) {
                (None, None) => {}
                (Some(a), Some(b)) if same_algebra(&a.algebra, &b.algebra) => {}
                _ => {
                    return Err(Error::SignatureMismatch(format!(
                        "{} and {} differ on the {side} side",
                        first.name(),
                        p.name()
                    )))
                }
            }
        }
    }
    // (summand, index) in canonical order
    let mut slots = Vec::new();
    for want in [Parity::Even, Parity::Odd] {
        for (s, p) in parts.iter().enumerate() {
            for i in 0..p.dim() {
                if p.parity(i) == want {
                    slots.push((s, i));
                }
            }
        }
    }
    let mut pos = parts.iter().map(|p| vec![0; p.dim()]).collect::<Vec<_>>();
    for (k, &(s, i)) in slots.iter().enumerate() {
        pos[s][i] = k;
    }
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for &(s, i) in &slots {
        let label = format!("{}:{}", s, parts[s].space().label(i));
        if parts[s].parity(i) == Parity::Even {
            even.push(label);
        } else {
            odd.push(label);
        }
    }
    let space = SuperSpace::new(field, even, odd);
    let n = slots.len();
    let injections: Vec<Matrix> = parts
        .iter()
        .enumerate()
        .map(|(s, p)| {
            let mut m = Matrix::zeros(field, n, p.dim());
            for i in 0..p.dim() {
                m.set(pos[s][i], i, field.one());
            }
            m
        })
        .collect();
    let projections: Vec<Matrix> = injections.iter().map(Matrix::transpose).collect();
    let sum_action = |side: Side| -> Option<Action> {
        let a = first.action(side)?;
        let mats = (0..a.algebra.dim())
            .map(|i| {
                let mut m = Matrix::zeros(field, n, n);
                for (s, p) in parts.iter().enumerate() {
                    let block = injections[s]
                        .mul(&p.action(side).expect("checked").mats[i])
                        .mul(&projections[s]);
                    m = m.add(&block);
                }
                m
            })
            .collect();
        Some(Action {
            algebra: a.algebra.clone(),
            mats,
        })
    };
    let name = parts.iter().map(|p| p.name().to_string()).collect::<Vec<_>>().join("⊕");
    let module = SuperModule::new(name, space, sum_action(Side::Left), sum_action(Side::Right))?;
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

// ---------------------------------------------------------------------------
// parity reversal

/// Permutation matrix from `M` to `ΠM` coordinates.
pub fn parity_reversal_matrix(space: &SuperSpace) -> Matrix {
    Matrix::permutation(space.field(), &space.parity_reversal_permutation())
}

/// `ΠM`: grading swapped, right action unchanged, left action twisted by `(−1)^{|r|}`.
pub fn parity_reverse(m: &SuperModule) -> SuperModule {
    let p = parity_reversal_matrix(m.space());
    let pt = p.transpose();
    let field = m.field();
    let conj = |a: &Action, twist: bool| Action {
        algebra: a.algebra.clone(),
        mats: a
            .mats
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let y = p.mul(x).mul(&pt);
                if twist && a.algebra.parity(i).is_odd() {
                    y.scale(&field.from_i64(-1))
                } else {
                    y
                }
            })
            .collect(),
    };
    let name = match m.name().strip_prefix('Π') {
        Some(rest) => rest.to_string(),
        None => format!("Π{}", m.name()),
    };
    SuperModule {
        name,
        space: m.space().parity_reversed(),
        left: m.left().map(|a| conj(a, true)),
        right: m.right().map(|a| conj(a, false)),
    }
}

/// Where to insert the parity-reversal in [`pi_twist_map`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistSide {
    /// `Πf: M → ΠN`, `m ↦ Π(f(m))`.
    Post,
    /// `fΠ: ΠM → N`, `Π(m) ↦ f(m)`.
    Pre,
}

/// `Πf` or `fΠ` for a homogeneous map; parity flips.
pub fn pi_twist_map(f: &ModuleMap, side: TwistSide) -> Result<ModuleMap> {
    f.parity()?;
    Ok(match side {
        TwistSide::Post => ModuleMap {
            source: f.source.clone(),
            target: parity_reverse(&f.target),
            matrix: parity_reversal_matrix(f.target.space()).mul(&f.matrix),
        },
        TwistSide::Pre => ModuleMap {
            source: parity_reverse(&f.source),
            target: f.target.clone(),
            matrix: f.matrix.mul(&parity_reversal_matrix(f.source.space()).transpose()),
        },
    })
}

// ---------------------------------------------------------------------------
// the o-functor

fn signed_columns(mat: &Matrix, algebra_parity: Parity, space: &SuperSpace) -> Matrix {
    if !algebra_parity.is_odd() {
        return mat.clone();
    }
    let field = space.field();
    let mut d = Matrix::identity(field, space.dim());
    for c in space.dim_even()..space.dim() {
        d.set(c, c, field.from_i64(-1));
    }
    mat.mul(&d)
}

/// Converts left `R`-actions into right `R°`-actions and vice versa via
/// `m ·_o r = (−1)^{|r||m|} r·m`.
pub fn o_functor(m: &SuperModule) -> SuperModule {
    let convert = |a: &Action| -> Action {
        let op = Arc::new(opposite_unchecked(&a.algebra));
        Action {
            mats: a
                .mats
                .iter()
                .enumerate()
                .map(|(i, x)| signed_columns(x, a.algebra.parity(i), m.space()))
                .collect(),
            algebra: op,
        }
    };
    let name = match m.name().strip_suffix('°') {
        Some(rest) => rest.to_string(),
        None => format!("{}°", m.name()),
    };
    SuperModule {
        name,
        space: m.space().clone(),
        left: m.right().map(convert),
        right: m.left().map(convert),
    }
}

/// The o-functor on maps: same underlying linear map between converted modules.
pub fn o_functor_map(f: &ModuleMap) -> ModuleMap {
    ModuleMap {
        source: o_functor(&f.source),
        target: o_functor(&f.target),
        matrix: f.matrix.clone(),
    }
}

// ---------------------------------------------------------------------------
// module maps

/// A linear map between modules, checked against the signed linearity law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: SuperModule,
    pub target: SuperModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: SuperModule, target: SuperModule, matrix: Matrix) -> Result<ModuleMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.name(),
                target.name()
            )));
        }
        Ok(ModuleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(m: &SuperModule) -> ModuleMap {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(m.field(), m.dim()),
        }
    }

    /// Parity of a homogeneous map; the zero map counts as even.
    pub fn parity(&self) -> Result<Parity> {
        Ok(matrix_parity(&self.matrix, self.source.space(), self.target.space())?.unwrap_or(Parity::Even))
    }

    pub fn compose(&self, inner: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.rank() == self.source.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// Signed linearity for the action on `side`; the map is split into
    /// homogeneous parts first.
    pub fn check_linear(&self, side: Side) -> Result<bool> {
        let src = self.source.require(side)?;
        let tgt = self.target.require(side)?;
        if !same_algebra(&src.algebra, &tgt.algebra) {
            return Err(Error::SignatureMismatch(format!(
                "{side} algebras of {} and {} differ",
                self.source.name(),
                self.target.name()
            )));
        }
        let (even, odd) = split_map(&self.matrix, self.source.space(), self.target.space());
        let field = self.source.field();
        for (part, part_parity) in [(even, Parity::Even), (odd, Parity::Odd)] {
            if part.is_zero() {
                continue;
            }
            for i in 0..src.algebra.dim() {
                let lhs = part.mul(&src.mats[i]);
                let rhs = tgt.mats[i].mul(&part);
                let rhs = match side {
                    Side::Left if koszul_negative(src.algebra.parity(i), part_parity) => {
                        rhs.scale(&sign(field, true))
                    }
                    _ => rhs,
                };
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Linear for every action present on both modules.
    pub fn is_homomorphism(&self) -> Result<bool> {
        for side in [Side::Left, Side::Right] {
            match (self.source.action(side), self.target.action(side)) {
                (Some(_), Some(_)) => {
                    if !self.check_linear(side)? {
                        return Ok(false);
                    }
                }
                (None, None) => {}
                _ => {
                    return Err(Error::SignatureMismatch(format!(
                        "{} and {} differ on the {side} side",
                        self.source.name(),
                        self.target.name()
                    )))
                }
            }
        }
        Ok(true)
    }

    /// An even homomorphism.
    pub fn is_morphism(&self) -> Result<bool> {
        Ok(self.parity()? == Parity::Even && self.is_homomorphism()?)
    }
}

/// Splits a matrix into the parts preserving and reversing parity.
pub(crate) fn split_map(m: &Matrix, source: &SuperSpace, target: &SuperSpace) -> (Matrix, Matrix) {
    let field = m.field();
    let mut even = m.clone();
    let mut odd = m.clone();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if target.parity(r) == source.parity(c) {
                odd.set(r, c, field.zero());
            } else {
                even.set(r, c, field.zero());
            }
        }
    }
    (even, odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superring::{dual_numbers, ground_field, super_skew_field};

    const Q: Field = Field::Rationals;

    fn d() -> Arc<SuperAlgebra> {
        Arc::new(super_skew_field(Q))
    }

    #[test]
    fn free_module_dimensions() {
        let k = Arc::new(ground_field(Q));
        let k10 = free_module(&k, 1, 0, Side::Right);
        assert_eq!(k10.graded_dim(), GradedDim::new(1, 0));
        assert_eq!(k10.right().unwrap().mats, vec![Matrix::identity(Q, 1)]);
        assert_eq!(free_module(&d(), 1, 0, Side::Right).graded_dim(), GradedDim::new(1, 1));
        assert_eq!(free_module(&d(), 1, 1, Side::Right).graded_dim(), GradedDim::new(2, 2));
        let dn = Arc::new(dual_numbers(Q));
        assert_eq!(free_module(&dn, 2, 1, Side::Left).graded_dim(), GradedDim::new(4, 2));
        for side in [Side::Left, Side::Right] {
            assert!(is_valid_module(&free_module(&d(), 2, 1, side)));
        }
    }

    #[test]
    fn parity_reverse_is_involutive() {
        let m = regular_bimodule(&d());
        let pm = parity_reverse(&m);
        assert!(is_valid_module(&pm));
        assert_eq!(parity_reverse(&pm), m);
    }

    #[test]
    fn parity_reverse_over_ground_field_swaps_dims() {
        let k = Arc::new(ground_field(Q));
        let m = free_module(&k, 2, 1, Side::Right);
        assert_eq!(parity_reverse(&m).graded_dim(), GradedDim::new(1, 2));
    }

    #[test]
    fn twisted_left_action_on_pi_d() {
        // θ ·_Π Π(1) = −Π(θ)
        let pm = parity_reverse(&regular_module(&d(), Side::Left));
        // in ΠD the odd basis vector is Π(1) (index 1), the even one Π(θ) (index 0)
        assert_eq!(pm.space().label(1), "Π1");
        let theta = &pm.left().unwrap().mats[1];
        let image = theta.apply(&pm.basis_vector(1));
        assert_eq!(image, vec![Q.from_i64(-1), Q.zero()]);
    }

    #[test]
    fn pi_identity_is_odd_isomorphism() {
        let m = regular_module(&d(), Side::Right);
        let pid = pi_twist_map(&ModuleMap::identity(&m), TwistSide::Post).unwrap();
        assert_eq!(pid.parity().unwrap(), Parity::Odd);
        assert!(pid.is_bijective());
        assert!(pid.is_homomorphism().unwrap());
        let back = pi_twist_map(&pid, TwistSide::Pre).unwrap();
        assert_eq!(back.source, parity_reverse(&m));
    }

    #[test]
    fn o_functor_is_involutive() {
        let m = regular_bimodule(&d());
        let om = o_functor(&m);
        assert!(is_valid_module(&om));
        assert_eq!(o_functor(&om), m);
        let dn = Arc::new(dual_numbers(Q));
        let plain = regular_module(&dn, Side::Left);
        let o = o_functor(&plain);
        assert_eq!(o.right().unwrap().mats, plain.left().unwrap().mats);
    }

    #[test]
    fn direct_sum_is_valid() {
        let a = regular_module(&d(), Side::Right);
        let b = parity_reverse(&a);
        let s = direct_sum(&[a.clone(), b]).unwrap();
        assert_eq!(s.module.graded_dim(), GradedDim::new(2, 2));
        assert!(is_valid_module(&s.module));
        let inj = ModuleMap::new(a.clone(), s.module.clone(), s.injections[0].clone()).unwrap();
        assert!(inj.is_morphism().unwrap());
    }
}
