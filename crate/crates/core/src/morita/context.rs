use std::sync::Arc;

use serde::Serialize;

use super::projective::{is_generator, is_projective, Generation, Projectivity};
use super::roundtrip::{assoc_iso, right_unitor};
use crate::error::{Error, Result};
use crate::field::{koszul_negative, Scalar};
use crate::report::{Check, Report};
use crate::supermodule::{
    dual_module, endomorphism_algebra, o_functor, regular_bimodule, tensor_over, underline_hom, Action, HomSpace,
    ModuleMap, Side, SuperModule, TensorProduct,
};
use crate::superring::{opposite_unchecked, AlgebraMorphism, SuperAlgebra};
use crate::supervec::{Matrix, SuperSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContextFlags {
    pub projective: bool,
    pub finitely_generated: bool,
    pub generator: bool,
    pub progenerator: bool,
    pub alpha_onto: bool,
    pub beta_onto: bool,
}

/// `(R, P, Q, S; α, β)` with `S = End_R(P)` and `Q = P*`.
#[derive(Debug, Clone)]
pub struct MoritaContext {
    pub r: Arc<SuperAlgebra>,
    pub s: Arc<SuperAlgebra>,
    /// `P` as an `(S, R)`-bimodule.
    pub p: SuperModule,
    /// `Q` as an `(R, S)`-bimodule.
    pub q: SuperModule,
    /// Basis of `End_R(P)`; the `k`-th basis map is the `k`-th basis vector of `S`.
    pub end_hom: HomSpace,
    /// Basis of `Q` as functionals `P → R`.
    pub dual: HomSpace,
    pub qp: TensorProduct,
    pub pq: TensorProduct,
    pub alpha: ModuleMap,
    pub beta: ModuleMap,
    pub flags: ContextFlags,
    pub projectivity: Projectivity,
    pub generation: Generation,
}

/// Builds the Morita context of a right module `P`.
pub fn build_context(p: &SuperModule) -> Result<MoritaContext> {
    let r = p.require(Side::Right)?.algebra.clone();
    let p_r = p.restrict(Side::Right);
    let field = p.field();
    let (s_alg, end_hom) = endomorphism_algebra(&p_r, Side::Right)?;
    let s = Arc::new(s_alg.with_name(format!("End({})", p.name())));
    let p = p_r.with_action(
        Side::Left,
        Action {
            algebra: s.clone(),
            mats: end_hom.basis_vec(),
        },
    )?;
    let dual = dual_module(&p, Side::Right)?;
    let q = dual.as_module().clone();
    let reg_r = regular_bimodule(&r);
    let reg_s = regular_bimodule(&s);

    let qp = tensor_over(&q, &p)?;
    let alpha_mat = qp.induced_map(r.dim(), |k, b| dual.basis_map(k).column(b))?;
    let alpha = ModuleMap::new(qp.module.clone(), reg_r, alpha_mat)?;

    let pq = tensor_over(&p, &q)?;
    let act = p.require(Side::Right)?.clone();
    let beta_mat = pq.induced_map(s.dim(), |b, k| {
        let qk = dual.basis_map(k);
        let cols: Vec<Vec<Scalar>> = (0..p.dim()).map(|x| act.by(&qk.column(x)).column(b)).collect();
        let op = Matrix::from_columns(field, p.dim(), &cols);
        end_hom.coords(&op).expect("p·q(−) is right linear")
    })?;
    let beta = ModuleMap::new(pq.module.clone(), reg_s, beta_mat)?;

    let projectivity = is_projective(&p, Side::Right)?;
    let generation = is_generator(&p, Side::Right)?;
    let flags = ContextFlags {
        projective: projectivity.projective,
        finitely_generated: true,
        generator: generation.generator,
        progenerator: projectivity.projective && generation.generator,
        alpha_onto: alpha.is_surjective(),
        beta_onto: beta.is_surjective(),
    };
    Ok(MoritaContext {
        r,
        s,
        p,
        q,
        end_hom,
        dual,
        qp,
        pq,
        alpha,
        beta,
        flags,
        projectivity,
        generation,
    })
}

fn sign_columns(m: &Matrix, space: &SuperSpace, negate_odd: bool) -> Matrix {
    let mut out = m.clone();
    if negate_odd {
        for c in space.dim_even()..space.dim() {
            for r in 0..m.rows() {
                out.set(r, c, -m.get(r, c));
            }
        }
    }
    out
}

fn map_checks(map: &ModuleMap) -> Result<Vec<Check>> {
    let bij = map.is_bijective();
    let morph = map.is_morphism()?;
    Ok(vec![
        Check::new(
            "bijective",
            bij,
            format!("rank {} for {} -> {}", map.rank(), map.source.graded_dim(), map.target.graded_dim()),
        ),
        Check::new("bimodule morphism", morph, "even and linear on both sides"),
    ])
}

fn algebra_checks(m: &AlgebraMorphism) -> Vec<Check> {
    m.check()
}

/// Algebra map into `End(M)` (or its opposite) from the operators each basis
/// element induces.
fn into_endomorphisms(
    source: &Arc<SuperAlgebra>,
    module: &SuperModule,
    side: Side,
    opposite: bool,
    operator: impl Fn(usize) -> Matrix,
) -> Result<AlgebraMorphism> {
    let (end, hom) = endomorphism_algebra(module, side)?;
    let target = if opposite { opposite_unchecked(&end) } else { end };
    let cols = (0..source.dim())
        .map(|i| {
            hom.coords(&operator(i))
                .ok_or_else(|| Error::IllDefined(format!("operator of basis {i} is not an endomorphism")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraMorphism {
        source: (**source).clone(),
        target,
        map: Matrix::from_columns(source.field(), hom.dim(), &cols),
    })
}

/// The eight structure maps of a progenerator context: `α`, `β`, `λ`, `λ′`,
/// `σ`, `τ`, `σ′`, `τ′`.
pub fn check_context_isos(ctx: &MoritaContext) -> Result<Report> {
    if !ctx.flags.generator {
        return Err(Error::FlagNotSet("generator".into()));
    }
    if !ctx.flags.projective {
        return Err(Error::FlagNotSet("projective".into()));
    }
    let field = ctx.p.field();
    let mut rep = Report::new(format!("context isomorphisms for {}", ctx.p.name()));
    rep.fact("R", ctx.r.graded_dim());
    rep.fact("S", ctx.s.graded_dim());
    rep.fact("P", ctx.p.graded_dim());
    rep.fact("Q", ctx.q.graded_dim());

    rep.extend("α: Q⊗_S P → R", map_checks(&ctx.alpha)?);
    rep.extend("β: P⊗_R Q → S", map_checks(&ctx.beta)?);

    // λ(q)(p) = (−1)^{|p||q|} β(p⊗q)
    let hom_ps = underline_hom(&ctx.p, &regular_bimodule(&ctx.s), Side::Left)?;
    let cols = (0..ctx.q.dim())
        .map(|k| {
            let cols: Vec<Vec<Scalar>> = (0..ctx.p.dim())
                .map(|x| {
                    let v = ctx.beta.apply(&ctx.pq.pure_basis(x, k));
                    if koszul_negative(ctx.p.parity(x), ctx.q.parity(k)) {
                        v.iter().map(|c| -c).collect()
                    } else {
                        v
                    }
                })
                .collect();
            hom_ps
                .coords(&Matrix::from_columns(field, ctx.s.dim(), &cols))
                .ok_or_else(|| Error::IllDefined("λ(q) is not S-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let lambda = ModuleMap::new(
        ctx.q.clone(),
        hom_ps.as_module().clone(),
        Matrix::from_columns(field, hom_ps.dim(), &cols),
    )?;
    rep.extend("λ: Q → Hom_S(P, S)", map_checks(&lambda)?);

    // λ′(p)(q) = (−1)^{|q||p|} q(p)
    let hom_qr = underline_hom(&ctx.q, &regular_bimodule(&ctx.r), Side::Left)?;
    let cols = (0..ctx.p.dim())
        .map(|b| {
            let cols: Vec<Vec<Scalar>> = (0..ctx.q.dim())
                .map(|k| {
                    let v = ctx.dual.basis_map(k).column(b);
                    if koszul_negative(ctx.q.parity(k), ctx.p.parity(b)) {
                        v.iter().map(|c| -c).collect()
                    } else {
                        v
                    }
                })
                .collect();
            hom_qr
                .coords(&Matrix::from_columns(field, ctx.r.dim(), &cols))
                .ok_or_else(|| Error::IllDefined("λ′(p) is not R-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let lambda2 = ModuleMap::new(
        ctx.p.clone(),
        hom_qr.as_module().clone(),
        Matrix::from_columns(field, hom_qr.dim(), &cols),
    )?;
    rep.extend("λ′: P → Hom_R(Q, R)", map_checks(&lambda2)?);

    let p_right = ctx.p.require(Side::Right)?.clone();
    let q_left = ctx.q.require(Side::Left)?.clone();
    let q_right = ctx.q.require(Side::Right)?.clone();
    let p_left = ctx.p.require(Side::Left)?.clone();

    let sigma = into_endomorphisms(&ctx.r, &ctx.p.restrict(Side::Left), Side::Left, true, |i| {
        sign_columns(&p_right.mats[i], ctx.p.space(), ctx.r.parity(i).is_odd())
    })?;
    rep.extend("σ: R → End_S(P)°", algebra_checks(&sigma));

    let tau = into_endomorphisms(&ctx.r, &ctx.q.restrict(Side::Right), Side::Right, false, |i| {
        q_left.mats[i].clone()
    })?;
    rep.extend("τ: R → End_S(Q)", algebra_checks(&tau));

    let sigma2 = into_endomorphisms(&ctx.s, &ctx.p.restrict(Side::Right), Side::Right, false, |k| {
        p_left.mats[k].clone()
    })?;
    rep.extend("σ′: S → End_R(P)", algebra_checks(&sigma2));

    let tau2 = into_endomorphisms(&ctx.s, &ctx.q.restrict(Side::Left), Side::Left, true, |k| {
        sign_columns(&q_right.mats[k], ctx.q.space(), ctx.s.parity(k).is_odd())
    })?;
    rep.extend("τ′: S → End_R(Q)°", algebra_checks(&tau2));
    Ok(rep)
}

/// `C` is faithfully balanced when `A → End(C_B)` and `B → End(_A C)°` are
/// isomorphisms of superalgebras.
pub fn faithfully_balanced(c: &SuperModule) -> Result<bool> {
    let l = c.require(Side::Left)?.clone();
    let r = c.require(Side::Right)?.clone();
    let left = into_endomorphisms(&l.algebra, &c.restrict(Side::Right), Side::Right, false, |i| l.mats[i].clone())?;
    let right = into_endomorphisms(&r.algebra, &c.restrict(Side::Left), Side::Left, true, |i| {
        sign_columns(&r.mats[i], c.space(), r.algebra.parity(i).is_odd())
    })?;
    Ok(left.is_isomorphism() && right.is_isomorphism())
}

fn progenerator_checks(name: &str, m: &SuperModule, side: Side) -> Result<(bool, bool, Vec<Check>)> {
    let proj = is_projective(m, side)?.projective;
    let generator = is_generator(m, side)?.generator;
    Ok((
        proj,
        generator,
        vec![
            Check::new(format!("{name} projective"), proj, "even splitting of the free cover"),
            Check::new(format!("{name} generator"), generator, "trace ideal is everything"),
        ],
    ))
}

/// `Q_S`, `_S P` and `_R Q` are progenerators, the left-module tests agreeing
/// with the right-module tests on the opposite algebras.
pub fn leftright_transfer(ctx: &MoritaContext) -> Result<Report> {
    if !ctx.flags.progenerator {
        return Err(Error::NotProgenerator);
    }
    let mut rep = Report::new(format!("left and right progenerators from {}", ctx.p.name()));
    let (_, _, checks) = progenerator_checks("Q_S", &ctx.q, Side::Right)?;
    rep.extend("", checks);
    for (name, m) in [("_S P", &ctx.p), ("_R Q", &ctx.q)] {
        let plain = m.restrict(Side::Left);
        let (p1, g1, checks) = progenerator_checks(name, &plain, Side::Left)?;
        rep.extend("", checks);
        let converted = o_functor(&plain);
        let (p2, g2, _) = progenerator_checks(name, &converted, Side::Right)?;
        rep.push(Check::new(
            format!("{name} agrees with its o-converted right module"),
            p1 == p2 && g1 == g2,
            format!("left ({p1}, {g1}), converted ({p2}, {g2})"),
        ));
        let (end_l, hom_l) = endomorphism_algebra(&plain, Side::Left)?;
        let (end_r, hom_r) = endomorphism_algebra(&converted, Side::Right)?;
        let same = end_l.graded_dim() == end_r.graded_dim() && hom_l.basis().all(|f| hom_r.contains(f));
        rep.push(Check::new(
            format!("{name} endomorphisms unchanged by o-conversion"),
            same,
            format!("{} and {}", end_l.graded_dim(), end_r.graded_dim()),
        ));
    }
    Ok(rep)
}

/// `P ⊗_R P′` for an `(S, R)`-progenerator `P` and an `(R, T)`-progenerator
/// `P′`, compared on `corpus` (right `S`-modules) with the composite functor.
pub fn compose_progenerators(
    p: &SuperModule,
    p2: &SuperModule,
    corpus: &[SuperModule],
) -> Result<(SuperModule, Report)> {
    for (name, m) in [("P", p), ("P′", p2)] {
        let pre = |what: &str| Error::PreconditionFailed(format!("{name} is not {what}"));
        if m.left().is_none() || m.right().is_none() {
            return Err(pre("a bimodule"));
        }
        let (proj, generator, _) = progenerator_checks(name, m, Side::Right)?;
        if !(proj && generator) {
            return Err(pre("a progenerator"));
        }
        if !faithfully_balanced(m)? {
            return Err(pre("faithfully balanced"));
        }
    }
    let x = tensor_over(p, p2)?;
    let xm = x.module.clone();
    let mut rep = Report::new(format!("composite progenerator {}", xm.name()));
    rep.fact("dim", xm.graded_dim());
    let (_, _, checks) = progenerator_checks("P⊗P′", &xm, Side::Right)?;
    rep.extend("", checks);
    rep.push(Check::new(
        "P⊗P′ faithfully balanced",
        faithfully_balanced(&xm)?,
        "both action maps are isomorphisms",
    ));
    let t = p2.require(Side::Right)?.algebra.clone();
    if regular_bimodule(&t) == *p2 {
        let u = right_unitor(&x)?;
        rep.push(Check::new("P⊗R ≅ P", u.is_bijective() && u.is_morphism()?, "p⊗r ↦ p·r"));
    }
    for m in corpus {
        let a = assoc_iso(m, p, p2)?;
        let ok = a.map.is_bijective() && a.map.check_linear(Side::Right)? && !a.map.parity()?.is_odd();
        rep.push(Check::new(
            format!("(M⊗P)⊗P′ ≅ M⊗(P⊗P′) for {}", m.name()),
            ok,
            format!("{} -> {}", a.map.source.graded_dim(), a.map.target.graded_dim()),
        ));
    }
    Ok((xm, rep))
}

#[cfg(test)]
mod tests {
    use super::super::{equivalence_report, morita_roundtrip};
    use super::*;
    use crate::field::Field;
    use crate::supermodule::{free_module, regular_module, zero_module};
    use crate::superring::{ground_field, super_skew_field};
    use crate::supervec::GradedDim;

    const Q: Field = Field::Rationals;

    #[test]
    fn context_of_k11() {
        let k = Arc::new(ground_field(Q));
        let ctx = build_context(&free_module(&k, 1, 1, Side::Right)).unwrap();
        assert_eq!(ctx.s.graded_dim(), GradedDim::new(2, 2));
        assert!(ctx.flags.progenerator && ctx.flags.alpha_onto && ctx.flags.beta_onto);
        assert!(ctx.alpha.is_bijective() && ctx.beta.is_bijective());
        let rep = check_context_isos(&ctx).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(leftright_transfer(&ctx).unwrap().passed());
        assert!(faithfully_balanced(&ctx.p).unwrap());
        let m = free_module(&k, 2, 1, Side::Right);
        let rep = morita_roundtrip(&ctx, &[m.clone()], &[ctx.q.restrict(Side::Right)], &[], &[]).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(equivalence_report(&ctx, &[m]).unwrap().passed());
    }

    #[test]
    fn context_of_d() {
        let d = Arc::new(super_skew_field(Q));
        let ctx = build_context(&regular_module(&d, Side::Right)).unwrap();
        assert_eq!(ctx.s.graded_dim(), GradedDim::new(1, 1));
        let rep = check_context_isos(&ctx).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn context_of_zero_module() {
        let k = Arc::new(ground_field(Q));
        let ctx = build_context(&zero_module(&k, Side::Right)).unwrap();
        assert!(!ctx.flags.generator);
        assert!(ctx.alpha.matrix.is_zero() && ctx.beta.matrix.is_zero());
        assert!(matches!(check_context_isos(&ctx), Err(Error::FlagNotSet(_))));
        assert!(!faithfully_balanced(&ctx.p).unwrap());
    }

    #[test]
    fn composition_with_identity_and_dual() {
        let k = Arc::new(ground_field(Q));
        let ctx = build_context(&free_module(&k, 1, 1, Side::Right)).unwrap();
        let (x, rep) = compose_progenerators(&ctx.p, &regular_bimodule(&k), &[]).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(x.graded_dim(), ctx.p.graded_dim());
        let (x, rep) = compose_progenerators(&ctx.p, &ctx.q, &[free_module(&ctx.s, 1, 0, Side::Right)]).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(x.graded_dim(), GradedDim::new(2, 2));
    }
}
