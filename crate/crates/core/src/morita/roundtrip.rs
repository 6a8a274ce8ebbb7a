use super::context::MoritaContext;
use super::projective::{is_generator, is_projective};
use super::solve_combination;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::{Check, Report};
use crate::supermodule::{
    sigma_eval_right, tensor_of_maps_between, tensor_over, ModuleMap, Side, SigmaEval,
    SuperModule, TensorProduct,
};
use crate::supervec::GradedDim;

/// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)` with the four tensor products involved.
#[derive(Debug, Clone)]
pub struct Assoc {
    pub inner_left: TensorProduct,
    pub outer: TensorProduct,
    pub inner_right: TensorProduct,
    pub target: TensorProduct,
    pub map: ModuleMap,
}

pub fn assoc_iso(x: &SuperModule, y: &SuperModule, z: &SuperModule) -> Result<Assoc> {
    let inner_left = tensor_over(x, y)?;
    let outer = tensor_over(&inner_left.module, z)?;
    let inner_right = tensor_over(y, z)?;
    let target = tensor_over(x, &inner_right.module)?;
    let field = x.field();
    let mat = outer.induced_map(target.dim(), |u, c| {
        let rep = inner_left.section.column(u);
        let mut out = vec![field.zero(); target.dim()];
        for (pos, coeff) in rep.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (a, b) = inner_left.pairs[pos];
            let yz = inner_right.pure_basis(b, c);
            let v = target.pure(&x.basis_vector(a), &yz);
            for (o, t) in out.iter_mut().zip(&v) {
                *o += &(coeff * t);
            }
        }
        out
    })?;
    let map = ModuleMap::new(outer.module.clone(), target.module.clone(), mat)?;
    Ok(Assoc {
        inner_left,
        outer,
        inner_right,
        target,
        map,
    })
}

/// `M ⊗_R R → M`, `m⊗r ↦ m·r`.
pub fn right_unitor(tp: &TensorProduct) -> Result<ModuleMap> {
    let act = tp.left.require(Side::Right)?;
    let mat = tp.induced_map(tp.left.dim(), |a, t| act.mats[t].column(a))?;
    ModuleMap::new(tp.module.clone(), tp.left.clone(), mat)
}

/// The composite `(M⊗Q)⊗P ≅ M⊗(Q⊗P) ≅ M⊗R ≅ M` (or its mirror for
/// `S`-modules).
#[derive(Debug, Clone)]
pub struct RoundTrip {
    pub assoc: Assoc,
    pub composite: ModuleMap,
}

impl RoundTrip {
    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.composite.is_bijective() && self.composite.is_morphism()?)
    }
}

fn round_trip(m: &SuperModule, first: &SuperModule, second: &SuperModule, pairing: &ModuleMap) -> Result<RoundTrip> {
    let m = m.restrict(Side::Right);
    let assoc = assoc_iso(&m, first, second)?;
    let base = pairing.target.clone();
    let mb = tensor_over(&m, &base)?;
    let id_pair = tensor_of_maps_between(&ModuleMap::identity(&m), pairing, &assoc.target, &mb)?;
    let unit = right_unitor(&mb)?;
    let composite = unit.compose(&id_pair).compose(&assoc.map);
    Ok(RoundTrip { assoc, composite })
}

/// Round trip of a right `R`-module through `− ⊗_R Q` and `− ⊗_S P`.
pub fn round_trip_r(ctx: &MoritaContext, m: &SuperModule) -> Result<RoundTrip> {
    round_trip(m, &ctx.q, &ctx.p, &ctx.alpha)
}

/// Round trip of a right `S`-module through `− ⊗_S P` and `− ⊗_R Q`.
pub fn round_trip_s(ctx: &MoritaContext, n: &SuperModule) -> Result<RoundTrip> {
    round_trip(n, &ctx.p, &ctx.q, &ctx.beta)
}

/// `Φ_{M′} ∘ ((f⊗1)⊗1) = f ∘ Φ_M` for a homogeneous module map `f`.
pub fn naturality(
    f: &ModuleMap,
    source: &RoundTrip,
    target: &RoundTrip,
    first: &SuperModule,
    second: &SuperModule,
) -> Result<bool> {
    let f = ModuleMap::new(
        source.assoc.inner_left.left.clone(),
        target.assoc.inner_left.left.clone(),
        f.matrix.clone(),
    )?;
    let f1 = tensor_of_maps_between(
        &f,
        &ModuleMap::identity(first),
        &source.assoc.inner_left,
        &target.assoc.inner_left,
    )?;
    let f11 = tensor_of_maps_between(
        &f1,
        &ModuleMap::identity(second),
        &source.assoc.outer,
        &target.assoc.outer,
    )?;
    let lhs = target.composite.matrix.mul(&f11.matrix);
    let rhs = f.matrix.mul(&source.composite.matrix);
    Ok(lhs == rhs)
}

fn dims(m: &ModuleMap) -> String {
    format!("{} -> {}", m.source.graded_dim(), m.target.graded_dim())
}

/// Round trips and naturality squares for corpora of right `R`- and
/// `S`-modules and morphisms between corpus modules.
pub fn morita_roundtrip(
    ctx: &MoritaContext,
    r_corpus: &[SuperModule],
    s_corpus: &[SuperModule],
    r_morphisms: &[ModuleMap],
    s_morphisms: &[ModuleMap],
) -> Result<Report> {
    if !ctx.flags.progenerator {
        return Err(Error::NotProgenerator);
    }
    let mut rep = Report::new(format!("round trips for {}", ctx.p.name()));
    for (side_name, corpus, first, second, pairing) in [
        ("R", r_corpus, &ctx.q, &ctx.p, &ctx.alpha),
        ("S", s_corpus, &ctx.p, &ctx.q, &ctx.beta),
    ] {
        for m in corpus {
            let rt = round_trip(m, first, second, pairing)?;
            rep.push(Check::new(
                format!("{side_name}-module {} round trip", m.name()),
                rt.is_isomorphism()?,
                dims(&rt.composite),
            ));
        }
    }
    for (side_name, morphisms, first, second, pairing) in [
        ("R", r_morphisms, &ctx.q, &ctx.p, &ctx.alpha),
        ("S", s_morphisms, &ctx.p, &ctx.q, &ctx.beta),
    ] {
        for f in morphisms {
            let src = round_trip(&f.source, first, second, pairing)?;
            let tgt = round_trip(&f.target, first, second, pairing)?;
            rep.push(Check::new(
                format!("{side_name}-naturality {} -> {}", f.source.name(), f.target.name()),
                naturality(f, &src, &tgt, first, second)?,
                format!("parity {}", f.parity()?),
            ));
        }
    }
    Ok(rep)
}

/// `Hom_R(P, M) ≅ M ⊗_R Q` through evaluation, as right `S`-modules.
pub fn morita_ii(ctx: &MoritaContext, m: &SuperModule) -> Result<SigmaEval> {
    sigma_eval_right(&m.restrict(Side::Right), &ctx.p)
}

/// The right `S`-modules `M ⊗_R Q`.
pub fn equivalence_images(ctx: &MoritaContext, corpus: &[SuperModule]) -> Result<Vec<SuperModule>> {
    corpus
        .iter()
        .map(|m| {
            let t = tensor_over(&m.restrict(Side::Right), &ctx.q)?;
            Ok(t.module.restrict(Side::Right))
        })
        .collect()
}

/// Whether `out = L·in` for a single integer-or-rational 2×2 matrix `L` on
/// all pairs of graded dimensions.
pub fn linear_dimension_law(pairs: &[(GradedDim, GradedDim)]) -> bool {
    let f = Field::Rationals;
    let n = |x: usize| f.from_i64(x as i64);
    let mut columns = vec![Vec::new(); 4];
    let mut target = Vec::new();
    for (input, output) in pairs {
        // even row
        columns[0].push(n(input.even));
        columns[1].push(n(input.odd));
        columns[2].push(f.zero());
        columns[3].push(f.zero());
        target.push(n(output.even));
        // odd row
        columns[0].push(f.zero());
        columns[1].push(f.zero());
        columns[2].push(n(input.even));
        columns[3].push(n(input.odd));
        target.push(n(output.odd));
    }
    solve_combination(f, &columns, &target).is_some()
}

/// Dimension law, Morita II and preservation of progenerators on a corpus.
pub fn equivalence_report(ctx: &MoritaContext, corpus: &[SuperModule]) -> Result<Report> {
    let mut rep = Report::new(format!("equivalence − ⊗ {}", ctx.q.name()));
    let images = equivalence_images(ctx, corpus)?;
    let pairs: Vec<_> = corpus.iter().zip(&images).map(|(m, i)| (m.graded_dim(), i.graded_dim())).collect();
    rep.push(Check::new(
        "dimension law",
        linear_dimension_law(&pairs),
        pairs.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(", "),
    ));
    for m in corpus {
        let ev = morita_ii(ctx, m)?;
        rep.push(Check::new(
            format!("Hom(P, {}) ≅ {}⊗Q", m.name(), m.name()),
            ev.is_bijective() && ev.is_natural()?,
            dims(&ev.map),
        ));
    }
    for (m, img) in corpus.iter().zip(&images) {
        let before = is_projective(m, Side::Right)?.projective && is_generator(m, Side::Right)?.generator;
        let after = is_projective(img, Side::Right)?.projective && is_generator(img, Side::Right)?.generator;
        rep.push(Check::new(
            format!("progenerator status of {} preserved", m.name()),
            before == after,
            format!("{before} -> {after}"),
        ));
    }
    Ok(rep)
}
