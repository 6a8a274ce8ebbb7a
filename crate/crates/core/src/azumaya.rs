//! Super Azumaya algebras over a field: the map `φ: A^e → End_k(A)`,
//! supercommutants and the equivalence between `A^e`-modules and k-modules.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{koszul_negative, Parity, Scalar};
use crate::report::{Check, Report};
use crate::supermodule::{
    regular_bimodule, regular_module, sigma_eval, underline_hom, Action, HomSpace, ModuleMap, Side, SuperModule,
};
use crate::superring::{
    matrix_superalgebra, matrix_unit_coords, opposite, pair_order, supercenter, tensor_algebra, tensor_space,
    AlgebraMorphism, SuperAlgebra,
};
use crate::supervec::{GradedDim, Matrix, RowReducer, SuperSpace, Subspace};

/// `A`, `A^e = A ⊗ A°` and `φ(a⊗b)(x) = (−1)^{|b||x|} a·x·b`.
#[derive(Debug, Clone)]
pub struct EnvelopingAlgebra {
    pub a: Arc<SuperAlgebra>,
    pub ae: Arc<SuperAlgebra>,
    /// `pair_index[i][j]` is the position of `aᵢ⊗aⱼ` in `A^e`.
    pub pair_index: Vec<Vec<usize>>,
    pub pairs: Vec<(usize, usize)>,
    pub phi: AlgebraMorphism,
}

impl EnvelopingAlgebra {
    /// Coordinates of `x ⊗ y` in `A^e`.
    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let field = self.a.field();
        let mut out = vec![field.zero(); self.ae.dim()];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if !xi.is_zero() && !yj.is_zero() {
                    out[self.pair_index[i][j]] += &(xi * yj);
                }
            }
        }
        out
    }

    /// The operator `φ(aᵢ⊗aⱼ)` on `A`.
    pub fn phi_operator(&self, i: usize, j: usize) -> Matrix {
        phi_operator(&self.a, i, j)
    }
}

fn phi_operator(a: &SuperAlgebra, i: usize, j: usize) -> Matrix {
    let op = a.left_mul(i).mul(a.right_mul(j));
    sign_odd_columns(&op, a.space(), a.parity(j).is_odd())
}

fn sign_odd_columns(m: &Matrix, space: &SuperSpace, negate: bool) -> Matrix {
    let mut out = m.clone();
    if negate {
        for c in space.dim_even()..space.dim() {
            for r in 0..m.rows() {
                out.set(r, c, -m.get(r, c));
            }
        }
    }
    out
}

pub fn enveloping(a: &SuperAlgebra) -> Result<EnvelopingAlgebra> {
    let op = opposite(a)?;
    let t = tensor_algebra(a, &op)?;
    let (m, n) = (a.space().dim_even(), a.space().dim_odd());
    let end = matrix_superalgebra(m, n, a.field());
    let cols: Vec<Vec<Scalar>> = t
        .pairs
        .iter()
        .map(|&(i, j)| matrix_unit_coords(&phi_operator(a, i, j), m, n))
        .collect();
    let ae = t.algebra.with_name(format!("{}^e", a.name()));
    let phi = AlgebraMorphism {
        source: ae.clone(),
        map: Matrix::from_columns(a.field(), end.dim(), &cols),
        target: end,
    };
    Ok(EnvelopingAlgebra {
        a: Arc::new(a.clone()),
        ae: Arc::new(ae),
        pair_index: t.pair_index,
        pairs: t.pairs,
        phi,
    })
}

// ---------------------------------------------------------------------------
// the bimodule dictionary

/// An `(A, A)`-bimodule together with the left `A^e`-module on the same space.
#[derive(Debug, Clone)]
pub struct BimoduleAsEnvModule {
    pub bimodule: SuperModule,
    pub env_module: SuperModule,
}

/// `(a⊗b)·n = (−1)^{|b||n|} a·n·b`.
pub fn bimodule_to_env(env: &EnvelopingAlgebra, m: &SuperModule) -> Result<BimoduleAsEnvModule> {
    let l = m.require(Side::Left)?;
    let r = m.require(Side::Right)?;
    let mats = env
        .pairs
        .iter()
        .map(|&(i, j)| {
            let op = l.mats[i].mul(&r.mats[j]);
            sign_odd_columns(&op, m.space(), env.a.parity(j).is_odd())
        })
        .collect();
    let env_module = SuperModule::new(
        m.name(),
        m.space().clone(),
        Some(Action {
            algebra: env.ae.clone(),
            mats,
        }),
        None,
    )?;
    Ok(BimoduleAsEnvModule {
        bimodule: m.clone(),
        env_module,
    })
}

/// `a·m = (a⊗1)·m` and `m·a = (−1)^{|a||m|} (1⊗a)·m`.
pub fn env_to_bimodule(env: &EnvelopingAlgebra, m: &SuperModule) -> Result<BimoduleAsEnvModule> {
    let act = m.require(Side::Left)?;
    let a = &env.a;
    let unit = a.unit().to_vec();
    let left = (0..a.dim()).map(|i| act.by(&env.pure(&a.basis_vector(i), &unit))).collect();
    let right = (0..a.dim())
        .map(|j| {
            let op = act.by(&env.pure(&unit, &a.basis_vector(j)));
            sign_odd_columns(&op, m.space(), a.parity(j).is_odd())
        })
        .collect();
    let bimodule = SuperModule::new(
        m.name(),
        m.space().clone(),
        Some(Action {
            algebra: a.clone(),
            mats: left,
        }),
        Some(Action {
            algebra: a.clone(),
            mats: right,
        }),
    )?;
    Ok(BimoduleAsEnvModule {
        bimodule,
        env_module: m.clone(),
    })
}

/// `A ⊗_k N` as an `(A, A)`-bimodule, `(a⊗n)·b = (−1)^{|b||n|} ab⊗n`.
pub fn tensor_with_base(a: &Arc<SuperAlgebra>, n: &SuperSpace) -> SuperModule {
    let field = a.field();
    let (index, pairs) = pair_order(a.space(), n);
    let space = tensor_space(a.space(), n, &pairs);
    let dim = pairs.len();
    let build = |on_left: bool| -> Vec<Matrix> {
        (0..a.dim())
            .map(|i| {
                let mut mat = Matrix::zeros(field, dim, dim);
                for (col, &(x, v)) in pairs.iter().enumerate() {
                    let prod = if on_left {
                        a.product_of_basis(i, x)
                    } else {
                        a.product_of_basis(x, i)
                    };
                    let neg = !on_left && koszul_negative(a.parity(i), n.parity(v));
                    for (u, c) in prod.iter().enumerate() {
                        if !c.is_zero() {
                            mat.set(index[u][v], col, if neg { -c } else { c.clone() });
                        }
                    }
                }
                mat
            })
            .collect()
    };
    SuperModule::new(
        format!("{}⊗{}", a.name(), n.graded_dim()),
        space,
        Some(Action {
            algebra: a.clone(),
            mats: build(true),
        }),
        Some(Action {
            algebra: a.clone(),
            mats: build(false),
        }),
    )
    .expect("well-formed")
}

// ---------------------------------------------------------------------------
// simplicity

/// Outcome of the homogeneous two-sided ideal search.
#[derive(Debug, Clone)]
pub struct Simplicity {
    pub simple: bool,
    /// A proper nonzero homogeneous ideal, when one was found.
    pub witness: Option<Subspace>,
    pub generators_tried: usize,
}

fn ideal_generated(a: &SuperAlgebra, x: Vec<Scalar>) -> Subspace {
    let mut rr = RowReducer::new(a.field(), a.dim());
    let mut queue = vec![x];
    while let Some(v) = queue.pop() {
        if !rr.push(v.clone()) {
            continue;
        }
        for i in 0..a.dim() {
            queue.push(a.left_mul(i).apply(&v));
            queue.push(a.right_mul(i).apply(&v));
        }
    }
    Subspace::from_reducer(a.space(), rr)
}

fn random_homogeneous(a: &SuperAlgebra, parity: Parity, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let field = a.field();
    (0..a.dim())
        .map(|i| {
            if a.parity(i) == parity {
                field.from_i64(rng.gen_range(-3..=3))
            } else {
                field.zero()
            }
        })
        .collect()
}

/// Semi-decision for graded simplicity: closes every basis vector and
/// `samples` seeded random homogeneous elements under two-sided
/// multiplication and reports the first proper nonzero ideal found.
pub fn simplicity_check(a: &SuperAlgebra, seed: u64, samples: usize) -> Simplicity {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    for s in 0..samples {
        let parity = if s % 2 == 0 { Parity::Even } else { Parity::Odd };
        candidates.push(random_homogeneous(a, parity, &mut rng));
    }
    let tried = candidates.len();
    for x in candidates {
        if x.iter().all(Scalar::is_zero) {
            continue;
        }
        let ideal = ideal_generated(a, x);
        if !ideal.is_full() {
            return Simplicity {
                simple: false,
                witness: Some(ideal),
                generators_tried: tried,
            };
        }
    }
    Simplicity {
        simple: a.dim() > 0,
        witness: None,
        generators_tried: tried,
    }
}

/// `φ` bijective, with the supercenter and simplicity cross-checks reported.
pub fn is_super_azumaya(a: &SuperAlgebra) -> Result<(bool, Report)> {
    is_super_azumaya_seeded(a, 0)
}

pub fn is_super_azumaya_seeded(a: &SuperAlgebra, seed: u64) -> Result<(bool, Report)> {
    let env = enveloping(a)?;
    let mut rep = Report::new(format!("super Azumaya test for {}", a.name()));
    let rank = env.phi.map.rank();
    let src = env.ae.graded_dim();
    let tgt = env.phi.target.graded_dim();
    rep.fact("A^e", src);
    rep.fact("End_k(A)", tgt);
    rep.fact("φ rank", format!("{rank}/{}", src.total()));
    rep.fact("faithful", "automatic over a field");
    rep.fact("finitely generated projective", "automatic over a field");
    let bijective = rank == src.total() && rank == tgt.total();
    for c in env.phi.check() {
        if c.name != "bijective" {
            rep.push(Check::new(format!("φ {}", c.name), c.passed, c.detail));
        }
    }
    if rank < src.total() {
        let kernel = env.phi.map.kernel();
        let v = kernel.column(0);
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}·{}", env.ae.space().label(k)))
            .collect();
        rep.fact("kernel witness", terms.join(" + "));
    }
    let z = supercenter(a);
    rep.fact("supercenter", z.graded_dim());
    let central = z.graded_dim() == GradedDim::new(1, 0);
    let simple = simplicity_check(a, seed, 8);
    rep.fact("simple", simple.simple);
    if let Some(w) = &simple.witness {
        rep.fact("ideal witness", w.graded_dim());
    }
    rep.push(Check::new(
        "φ bijective agrees with central simplicity",
        bijective == (central && simple.simple),
        format!("φ bijective {bijective}, central {central}, simple {}", simple.simple),
    ));
    rep.fact("azumaya", bijective);
    Ok((bijective, rep))
}

// ---------------------------------------------------------------------------
// supercommutant

/// `M^A = {m : a·m = (−1)^{|a||m|} m·a}` as a graded subspace of `M`.
#[derive(Debug, Clone)]
pub struct Commutant {
    pub ambient: SuperModule,
    pub space: SuperSpace,
    /// Columns are the basis of `M^A` in coordinates of `M`, even block first.
    pub inclusion: Matrix,
    span: Subspace,
}

impl Commutant {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn graded_dim(&self) -> GradedDim {
        self.space.graded_dim()
    }

    /// Coordinates of `m ∈ M^A` in the commutant basis.
    pub fn coords(&self, m: &[Scalar]) -> Option<Vec<Scalar>> {
        self.span.coords(m)
    }
}

/// Supercommutant of an `(A, A)`-bimodule, solved one parity block at a time.
pub fn supercommutant(m: &SuperModule) -> Result<Commutant> {
    let l = m.require(Side::Left)?;
    let r = m.require(Side::Right)?;
    let field = m.field();
    let sp = m.space();
    let mut blocks: Vec<Vec<Vec<Scalar>>> = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let cols: Vec<usize> = (0..m.dim()).filter(|&c| sp.parity(c) == parity).collect();
        let mut eqs = RowReducer::new(field, cols.len());
        for (i, (li, ri)) in l.mats.iter().zip(&r.mats).enumerate() {
            let neg = koszul_negative(l.algebra.parity(i), parity);
            for row in 0..m.dim() {
                let v: Vec<Scalar> = cols
                    .iter()
                    .map(|&c| {
                        let x = li.get(row, c);
                        let y = ri.get(row, c);
                        if neg {
                            x + y
                        } else {
                            x - y
                        }
                    })
                    .collect();
                if v.iter().any(|x| !x.is_zero()) {
                    eqs.push(v);
                }
            }
        }
        let mut basis = RowReducer::new(field, m.dim());
        for k in eqs.kernel_basis() {
            let mut full = sp.zero_vector();
            for (pos, &c) in cols.iter().enumerate() {
                full[c] = k[pos].clone();
            }
            basis.push(full);
        }
        blocks.push(basis.rows().to_vec());
    }
    // the echelon basis of a homogeneous subspace is homogeneous and even-first
    let span = Subspace::span(sp, blocks.into_iter().flatten());
    let gd = span.graded_dim();
    Ok(Commutant {
        ambient: m.clone(),
        space: SuperSpace::with_dims(field, gd.even, gd.odd),
        inclusion: Matrix::from_columns(field, m.dim(), span.basis()),
        span,
    })
}

// ---------------------------------------------------------------------------
// Hom_{A^e}(A, M) ≅ M^A

/// `F: Hom_{A^e}(A, M) → M^A`, `f ↦ f(1)`, and `G: m ↦ (x ↦ (−1)^{|x||m|} (x⊗1)·m)`.
#[derive(Debug, Clone)]
pub struct CommutantIso {
    /// `A` as a left `A^e`-module.
    pub a_env: SuperModule,
    pub module: BimoduleAsEnvModule,
    pub hom: HomSpace,
    pub commutant: Commutant,
    pub f: ModuleMap,
    pub g: ModuleMap,
}

impl CommutantIso {
    pub fn mutually_inverse(&self) -> bool {
        self.f.compose(&self.g).matrix.is_identity() && self.g.compose(&self.f).matrix.is_identity()
    }
}

/// `A` as a left module over `A^e`.
pub fn algebra_as_env_module(env: &EnvelopingAlgebra) -> Result<SuperModule> {
    Ok(bimodule_to_env(env, &regular_bimodule(&env.a))?.env_module)
}

pub fn commutant_iso(env: &EnvelopingAlgebra, m_env: &SuperModule) -> Result<CommutantIso> {
    let act = m_env.require(Side::Left)?.clone();
    if *act.algebra != *env.ae {
        return Err(Error::SignatureMismatch(format!("{} is not a left {}-module", m_env.name(), env.ae.name())));
    }
    let field = m_env.field();
    let module = env_to_bimodule(env, m_env)?;
    let commutant = supercommutant(&module.bimodule)?;
    let a_env = algebra_as_env_module(env)?;
    let hom = underline_hom(&a_env, m_env, Side::Left)?;
    let unit = env.a.unit().to_vec();
    let f_cols = (0..hom.dim())
        .map(|k| {
            commutant
                .coords(&hom.basis_map(k).apply(&unit))
                .ok_or_else(|| Error::IllDefined("f(1) is not supercommuting".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let g_cols = (0..commutant.dim())
        .map(|c| {
            let m = commutant.inclusion.column(c);
            let odd_m = commutant.space.parity(c).is_odd();
            let cols: Vec<Vec<Scalar>> = (0..env.a.dim())
                .map(|x| {
                    let v = act.by(&env.pure(&env.a.basis_vector(x), &unit)).apply(&m);
                    if odd_m && env.a.parity(x).is_odd() {
                        v.iter().map(|y| -y).collect()
                    } else {
                        v
                    }
                })
                .collect();
            hom.coords(&Matrix::from_columns(field, m_env.dim(), &cols))
                .ok_or_else(|| Error::IllDefined("x ↦ ±(x⊗1)·m is not A^e-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom_space = SuperModule::vector_space(format!("Hom({}, {})", a_env.name(), m_env.name()), hom.space().clone());
    let comm_space = SuperModule::vector_space(format!("{}^A", m_env.name()), commutant.space.clone());
    let f = ModuleMap::new(
        hom_space.clone(),
        comm_space.clone(),
        Matrix::from_columns(field, commutant.dim(), &f_cols),
    )?;
    let g = ModuleMap::new(comm_space, hom_space, Matrix::from_columns(field, hom.dim(), &g_cols))?;
    Ok(CommutantIso {
        a_env,
        module,
        hom,
        commutant,
        f,
        g,
    })
}

/// `F′∘h_* = h∘F` and `G′∘h = h_*∘G` for an `A^e`-module map `h: M → M′`.
pub fn commutant_naturality(src: &CommutantIso, tgt: &CommutantIso, h: &Matrix) -> Result<bool> {
    let field = h.field();
    let h_star = (0..src.hom.dim())
        .map(|k| {
            tgt.hom
                .coords(&h.mul(src.hom.basis_map(k)))
                .ok_or_else(|| Error::IllDefined("h∘f is not A^e-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let h_star = Matrix::from_columns(field, tgt.hom.dim(), &h_star);
    let h_res = (0..src.commutant.dim())
        .map(|c| {
            tgt.commutant
                .coords(&h.apply(&src.commutant.inclusion.column(c)))
                .ok_or_else(|| Error::IllDefined("h does not preserve supercommutants".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let h_res = Matrix::from_columns(field, tgt.commutant.dim(), &h_res);
    Ok(tgt.f.matrix.mul(&h_star) == h_res.mul(&src.f.matrix) && tgt.g.matrix.mul(&h_res) == h_star.mul(&src.g.matrix))
}

// ---------------------------------------------------------------------------
// unit and counit

/// Counit `A ⊗_k M^A → M`, `a⊗m ↦ a·m`, as a bimodule map.
pub fn counit(commutant: &Commutant) -> Result<ModuleMap> {
    let m = &commutant.ambient;
    let l = m.require(Side::Left)?;
    let a = l.algebra.clone();
    let source = tensor_with_base(&a, &commutant.space);
    let (_, pairs) = pair_order(a.space(), &commutant.space);
    let cols: Vec<Vec<Scalar>> = pairs
        .iter()
        .map(|&(x, c)| l.mats[x].apply(&commutant.inclusion.column(c)))
        .collect();
    ModuleMap::new(source, m.clone(), Matrix::from_columns(m.field(), m.dim(), &cols))
}

/// Unit `N → (A ⊗_k N)^A`, `n ↦ 1⊗n`, with the commutant it lands in.
pub fn unit_map(a: &Arc<SuperAlgebra>, n: &SuperSpace) -> Result<(Commutant, ModuleMap)> {
    let x = tensor_with_base(a, n);
    let comm = supercommutant(&x)?;
    let (index, _) = pair_order(a.space(), n);
    let cols = (0..n.dim())
        .map(|v| {
            let mut t = x.space().zero_vector();
            for (u, c) in a.unit().iter().enumerate() {
                t[index[u][v]] = c.clone();
            }
            comm.coords(&t)
                .ok_or_else(|| Error::IllDefined("1⊗n is not supercommuting".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = ModuleMap::new(
        SuperModule::vector_space("N", n.clone()),
        SuperModule::vector_space(format!("({})^A", x.name()), comm.space.clone()),
        Matrix::from_columns(a.field(), comm.dim(), &cols),
    )?;
    Ok((comm, map))
}

/// `A^∨ ⊗_{A^e} M ≅ Hom_{A^e}(A, M) ≅ M^A`, with `A* ≅ A^∨` at the level of
/// graded dimensions.
pub fn dual_chain(env: &EnvelopingAlgebra, iso: &CommutantIso) -> Result<Vec<Check>> {
    let se = sigma_eval(&iso.a_env, &iso.module.env_module)?;
    let a_dual = se.dual.as_module().graded_dim();
    let composite = iso.f.matrix.mul(&se.map.matrix);
    let bij = composite.rows() == composite.cols() && composite.rank() == composite.cols();
    Ok(vec![
        Check::new(
            "A* and A^∨ have equal graded dimension",
            a_dual == env.a.graded_dim(),
            format!("{} and {a_dual}", env.a.graded_dim()),
        ),
        Check::new("A^∨⊗M → Hom(A, M) bijective", se.is_bijective(), format!("{}", se.tensor.module.graded_dim())),
        Check::new("A^∨⊗M → M^A bijective", bij, format!("rank {}", composite.rank())),
    ])
}

/// Unit and counit of the equivalence on corpora of left `A^e`-modules and
/// k-superspaces.
pub fn azumaya_roundtrip(a: &SuperAlgebra, env_modules: &[SuperModule], base_modules: &[SuperSpace]) -> Result<Report> {
    let (azumaya, _) = is_super_azumaya(a)?;
    if !azumaya {
        return Err(Error::NotAzumaya);
    }
    let env = enveloping(a)?;
    let mut rep = Report::new(format!("A ⊗ − and −^A for {}", a.name()));
    for m in env_modules {
        let m = rebase(&env, m)?;
        let iso = commutant_iso(&env, &m)?;
        let c = &iso.commutant;
        let eps = counit(c)?;
        rep.push(Check::new(
            format!("counit for {}", m.name()),
            eps.is_bijective() && eps.is_morphism()?,
            format!("{} -> {}", eps.source.graded_dim(), eps.target.graded_dim()),
        ));
        rep.push(Check::new(
            format!("dimension law for {}", m.name()),
            m.graded_dim() == a.graded_dim().tensor(c.graded_dim()),
            format!("{} = {} ⊗ {}", m.graded_dim(), a.graded_dim(), c.graded_dim()),
        ));
        rep.push(Check::new(
            format!("F and G inverse for {}", m.name()),
            iso.mutually_inverse(),
            format!("M^A has dim {}", c.graded_dim()),
        ));
        rep.extend(&format!("chain for {}", m.name()), dual_chain(&env, &iso)?);
    }
    let shared = env.a.clone();
    for n in base_modules {
        let (_, eta) = unit_map(&shared, n)?;
        rep.push(Check::new(
            format!("unit for k^{}", n.graded_dim()),
            eta.is_bijective(),
            format!("{} -> {}", eta.source.graded_dim(), eta.target.graded_dim()),
        ));
    }
    Ok(rep)
}

/// Re-attaches a module to this enveloping algebra's `Arc` after checking the
/// algebras agree.
pub fn rebase(env: &EnvelopingAlgebra, m: &SuperModule) -> Result<SuperModule> {
    let act = m.require(Side::Left)?;
    if *act.algebra != *env.ae {
        return Err(Error::SignatureMismatch(format!("{} is not a left {}-module", m.name(), env.ae.name())));
    }
    m.with_action(
        Side::Left,
        Action {
            algebra: env.ae.clone(),
            mats: act.mats.clone(),
        },
    )
}

/// `A^e` as a left module over itself.
pub fn enveloping_regular(env: &EnvelopingAlgebra) -> SuperModule {
    regular_module(&env.ae, Side::Left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::supermodule::is_valid_module;
    use crate::superring::{dual_numbers, ground_field, super_skew_field, validate_algebra};

    const Q: Field = Field::Rationals;

    #[test]
    fn phi_for_d() {
        let d = super_skew_field(Q);
        let env = enveloping(&d).unwrap();
        assert_eq!(env.ae.graded_dim(), GradedDim::new(2, 2));
        assert!(env.phi.is_isomorphism());
        // φ(θ⊗θ): 1 ↦ −1, θ ↦ θ
        let op = env.phi_operator(1, 1);
        assert_eq!(op, Matrix::from_i64(Q, &[&[-1, 0], &[0, 1]]));
    }

    #[test]
    fn azumaya_verdicts() {
        for f in [Q, Field::Prime(5)] {
            assert!(is_super_azumaya(&super_skew_field(f)).unwrap().0);
            assert!(is_super_azumaya(&matrix_superalgebra(1, 1, f)).unwrap().0);
            let (ok, rep) = is_super_azumaya(&dual_numbers(f)).unwrap();
            assert!(!ok);
            assert!(rep.get_fact("kernel witness").is_some());
            assert!(rep.passed(), "{rep}");
        }
        assert!(is_super_azumaya(&ground_field(Q)).unwrap().0);
    }

    #[test]
    fn dictionary_round_trips() {
        let d = super_skew_field(Q);
        let env = enveloping(&d).unwrap();
        let reg = regular_bimodule(&env.a);
        let e = bimodule_to_env(&env, &reg).unwrap();
        assert!(is_valid_module(&e.env_module));
        let back = env_to_bimodule(&env, &e.env_module).unwrap();
        assert_eq!(back.bimodule, reg);
        let ae = env_to_bimodule(&env, &enveloping_regular(&env)).unwrap();
        assert!(is_valid_module(&ae.bimodule));
    }

    #[test]
    fn commutants() {
        let d = super_skew_field(Q);
        let env = enveloping(&d).unwrap();
        let c = supercommutant(&regular_bimodule(&env.a)).unwrap();
        assert_eq!(c.graded_dim(), GradedDim::new(1, 0));
        let iso = commutant_iso(&env, &enveloping_regular(&env)).unwrap();
        assert_eq!(iso.commutant.graded_dim(), GradedDim::new(1, 1));
        assert!(iso.mutually_inverse());
        assert!(counit(&iso.commutant).unwrap().is_bijective());
    }

    #[test]
    fn main_round_trip() {
        for a in [super_skew_field(Q), matrix_superalgebra(1, 1, Q)] {
            assert!(validate_algebra(&a).passed());
            let env = enveloping(&a).unwrap();
            let reg = bimodule_to_env(&env, &regular_bimodule(&env.a)).unwrap().env_module;
            let twisted = bimodule_to_env(&env, &tensor_with_base(&env.a, &SuperSpace::with_dims(Q, 1, 1)))
                .unwrap()
                .env_module;
            let rep = azumaya_roundtrip(
                &a,
                &[reg, enveloping_regular(&env), twisted],
                &[SuperSpace::with_dims(Q, 1, 0), SuperSpace::with_dims(Q, 1, 2)],
            )
            .unwrap();
            assert!(rep.passed(), "{rep}");
        }
        assert!(matches!(azumaya_roundtrip(&dual_numbers(Q), &[], &[]), Err(Error::NotAzumaya)));
    }
}
