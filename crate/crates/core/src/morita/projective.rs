use std::sync::Arc;

use super::solve_combination;
use crate::error::Result;
use crate::field::{koszul_negative, Parity, Scalar};
use crate::supermodule::{
    direct_sum, dual_module, free_module, parity_reversal_matrix, parity_reverse, regular_module, underline_hom,
    ModuleMap, Side, SuperModule,
};
use crate::superring::{pair_order, SuperAlgebra};
use crate::supervec::{Matrix, SuperSpace, Subspace};

/// Elements `aᵢ`, `bⱼ` of `P` with functionals `fᵢ`, `gⱼ` of matching parity.
///
/// For right modules `c = Σ aᵢ·fᵢ(c) + Σ bⱼ·gⱼ(c)`. For left modules the
/// functionals are super-linear and `c = Σ (−1)^{|x||c|} x(c)·a` over all pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBasis {
    pub side: Side,
    pub even_elems: Vec<Vec<Scalar>>,
    pub odd_elems: Vec<Vec<Scalar>>,
    pub even_functionals: Vec<Matrix>,
    pub odd_functionals: Vec<Matrix>,
}

impl DualBasis {
    fn pairs(&self) -> impl Iterator<Item = (&Vec<Scalar>, &Matrix, Parity)> {
        self.even_elems
            .iter()
            .zip(&self.even_functionals)
            .map(|(a, f)| (a, f, Parity::Even))
            .chain(self.odd_elems.iter().zip(&self.odd_functionals).map(|(b, g)| (b, g, Parity::Odd)))
    }

    /// The right-hand side of the reconstruction identity at `c`.
    pub fn reconstruct(&self, p: &SuperModule, c: usize) -> Vec<Scalar> {
        let act = p.action(self.side).expect("dual basis side");
        let mut out = p.space().zero_vector();
        for (a, f, par) in self.pairs() {
            let term = act.by(&f.column(c)).apply(a);
            let neg = self.side == Side::Left && koszul_negative(par, p.parity(c));
            for (o, t) in out.iter_mut().zip(&term) {
                *o = if neg { &*o - t } else { &*o + t };
            }
        }
        out
    }

    /// Reconstruction identity on every basis vector.
    pub fn verify(&self, p: &SuperModule) -> bool {
        (0..p.dim()).all(|c| self.reconstruct(p, c) == p.basis_vector(c))
    }

    pub fn len(&self) -> usize {
        self.even_elems.len() + self.odd_elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Outcome of the splitting test against the free cover on the k-basis.
#[derive(Debug, Clone)]
pub struct Projectivity {
    pub projective: bool,
    pub cover: SuperModule,
    /// `h: F → P`, `d_b ↦ p_b`.
    pub cover_map: ModuleMap,
    /// An even `i: P → F` with `h∘i = id`.
    pub splitting: Option<ModuleMap>,
    pub dual_basis: Option<DualBasis>,
    pub certificate: Option<String>,
}

fn algebra_of(p: &SuperModule, side: Side) -> Result<Arc<SuperAlgebra>> {
    Ok(p.require(side)?.algebra.clone())
}

/// Splitting test: `P` is projective iff the free cover `h: F → P` admits an
/// even module section.
pub fn is_projective(p: &SuperModule, side: Side) -> Result<Projectivity> {
    let r = algebra_of(p, side)?;
    let p = p.restrict(side);
    let act = p.require(side)?.clone();
    let field = p.field();
    let (m, n) = (p.space().dim_even(), p.space().dim_odd());
    let cover = free_module(&r, m, n, side);
    let gens = SuperSpace::with_dims(field, m, n);
    let (index, pairs) = pair_order(&gens, r.space());
    let mut h = Matrix::zeros(field, p.dim(), cover.dim());
    for (col, &(b, t)) in pairs.iter().enumerate() {
        for (row, x) in act.mats[t].column(b).into_iter().enumerate() {
            h.set(row, col, x);
        }
    }
    let cover_map = ModuleMap::new(cover.clone(), p.clone(), h.clone())?;
    let hom = underline_hom(&p, &cover, side)?;
    let even: Vec<&Matrix> = hom.basis().take(hom.space().dim_even()).collect();
    let columns: Vec<Vec<Scalar>> = even.iter().map(|e| h.mul(e).as_vector().to_vec()).collect();
    let target = Matrix::identity(field, p.dim()).as_vector().to_vec();
    let Some(coeffs) = solve_combination(field, &columns, &target) else {
        return Ok(Projectivity {
            projective: false,
            cover,
            cover_map,
            splitting: None,
            dual_basis: None,
            certificate: Some(format!(
                "no even section: h∘i = id has no solution over the {}-dimensional space of even maps P → F",
                even.len()
            )),
        });
    };
    let mut i = Matrix::zeros(field, cover.dim(), p.dim());
    for (c, e) in coeffs.iter().zip(&even) {
        i.add_scaled(c, e);
    }
    let mut db = DualBasis {
        side,
        even_elems: Vec::new(),
        odd_elems: Vec::new(),
        even_functionals: Vec::new(),
        odd_functionals: Vec::new(),
    };
    for b in 0..p.dim() {
        let mut f = Matrix::zeros(field, r.dim(), p.dim());
        for t in 0..r.dim() {
            for c in 0..p.dim() {
                let mut x = i.get(index[b][t], c).clone();
                if side == Side::Left && koszul_negative(p.parity(b), p.parity(c)) {
                    x = -&x;
                }
                f.set(t, c, x);
            }
        }
        if p.parity(b) == Parity::Even {
            db.even_elems.push(p.basis_vector(b));
            db.even_functionals.push(f);
        } else {
            db.odd_elems.push(p.basis_vector(b));
            db.odd_functionals.push(f);
        }
    }
    Ok(Projectivity {
        projective: true,
        cover: cover.clone(),
        cover_map,
        splitting: Some(ModuleMap::new(p.clone(), cover, i)?),
        dual_basis: Some(db),
        certificate: None,
    })
}

/// Independent dual-basis search with `aᵢ`, `bⱼ` the k-basis of `P` and the
/// functionals unknown.
pub fn dual_basis_search(p: &SuperModule, side: Side) -> Result<Option<DualBasis>> {
    let p = p.restrict(side);
    let act = p.require(side)?.clone();
    let field = p.field();
    let dual = dual_module(&p, side)?;
    let mut columns = Vec::new();
    let mut unknowns = Vec::new();
    for b in 0..p.dim() {
        for k in 0..dual.dim() {
            if dual.space().parity(k) != p.parity(b) {
                continue;
            }
            let q = dual.basis_map(k);
            let mut col = Vec::with_capacity(p.dim() * p.dim());
            for c in 0..p.dim() {
                let mut v = act.by(&q.column(c)).column(b);
                if side == Side::Left && koszul_negative(p.parity(b), p.parity(c)) {
                    v = v.iter().map(|x| -x).collect();
                }
                col.extend(v);
            }
            // row-major vec of the matrix whose column c is the contribution
            let mat = Matrix::from_columns(field, p.dim(), &col.chunks(p.dim().max(1)).map(<[Scalar]>::to_vec).collect::<Vec<_>>());
            columns.push(mat.as_vector().to_vec());
            unknowns.push((b, k));
        }
    }
    let target = Matrix::identity(field, p.dim()).as_vector().to_vec();
    let Some(x) = solve_combination(field, &columns, &target) else {
        return Ok(None);
    };
    let mut db = DualBasis {
        side,
        even_elems: Vec::new(),
        odd_elems: Vec::new(),
        even_functionals: Vec::new(),
        odd_functionals: Vec::new(),
    };
    for b in 0..p.dim() {
        let r_dim = dual.target.dim();
        let mut f = Matrix::zeros(field, r_dim, p.dim());
        for (c, &(bb, k)) in x.iter().zip(&unknowns) {
            if bb == b && !c.is_zero() {
                f.add_scaled(c, dual.basis_map(k));
            }
        }
        if p.parity(b) == Parity::Even {
            db.even_elems.push(p.basis_vector(b));
            db.even_functionals.push(f);
        } else {
            db.odd_elems.push(p.basis_vector(b));
            db.odd_functionals.push(f);
        }
    }
    Ok(Some(db))
}

/// `tr(P)`: the span of all `q(p)`, with a flag recording that closing it
/// under two-sided multiplication added nothing.
#[derive(Debug, Clone)]
pub struct TraceIdeal {
    pub span: Subspace,
    pub closure_was_noop: bool,
}

pub fn trace_ideal(p: &SuperModule, side: Side) -> Result<TraceIdeal> {
    let r = algebra_of(p, side)?;
    let p = p.restrict(side);
    let dual = dual_module(&p, side)?;
    let mut vectors = Vec::new();
    for q in dual.basis() {
        for c in 0..p.dim() {
            vectors.push(q.column(c));
        }
    }
    let span = Subspace::span(r.space(), vectors);
    let mut closed = Vec::new();
    for v in span.basis() {
        for i in 0..r.dim() {
            closed.push(r.left_mul(i).apply(v));
            closed.push(r.right_mul(i).apply(v));
        }
    }
    let closure_was_noop = closed.iter().all(|v| span.contains(v));
    Ok(TraceIdeal {
        span,
        closure_was_noop,
    })
}

/// `Σ qᵢ(pᵢ) + Σ q̃ⱼ(p̃ⱼ) = 1` with even pairs `(qᵢ, pᵢ)` and odd pairs `(q̃ⱼ, p̃ⱼ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWitness {
    pub even_terms: Vec<(Matrix, Vec<Scalar>)>,
    pub odd_terms: Vec<(Matrix, Vec<Scalar>)>,
}

/// `E: P^m ⊕ (ΠP)^n → R` with an even module section.
#[derive(Debug, Clone)]
pub struct SplitEpi {
    pub sum: SuperModule,
    pub epi: ModuleMap,
    pub section: ModuleMap,
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct Generation {
    pub generator: bool,
    pub trace: TraceIdeal,
    pub witness: Option<GeneratorWitness>,
    pub split: Option<SplitEpi>,
}

/// Generator test via the trace ideal, with an explicit witness and the split
/// epimorphism built from it.
pub fn is_generator(p: &SuperModule, side: Side) -> Result<Generation> {
    let r = algebra_of(p, side)?;
    let p = p.restrict(side);
    let field = p.field();
    let trace = trace_ideal(&p, side)?;
    if !trace.span.is_full() || r.dim() == 0 {
        return Ok(Generation {
            generator: r.dim() == 0,
            trace,
            witness: None,
            split: None,
        });
    }
    let dual = dual_module(&p, side)?;
    let mut columns = Vec::new();
    let mut unknowns = Vec::new();
    for k in 0..dual.dim() {
        for b in 0..p.dim() {
            if dual.space().parity(k) == p.parity(b) {
                columns.push(dual.basis_map(k).column(b));
                unknowns.push((k, b));
            }
        }
    }
    let x = solve_combination(field, &columns, r.unit()).expect("trace ideal is everything");
    let mut witness = GeneratorWitness {
        even_terms: Vec::new(),
        odd_terms: Vec::new(),
    };
    for b in 0..p.dim() {
        let mut q = Matrix::zeros(field, r.dim(), p.dim());
        for (c, &(k, bb)) in x.iter().zip(&unknowns) {
            if bb == b && !c.is_zero() {
                q.add_scaled(c, dual.basis_map(k));
            }
        }
        if q.is_zero() {
            continue;
        }
        let term = (q, p.basis_vector(b));
        if p.parity(b) == Parity::Even {
            witness.even_terms.push(term);
        } else {
            witness.odd_terms.push(term);
        }
    }
    let split = split_epimorphism(&r, &p, side, &witness)?;
    Ok(Generation {
        generator: true,
        trace,
        witness: Some(witness),
        split: Some(split),
    })
}

fn split_epimorphism(r: &Arc<SuperAlgebra>, p: &SuperModule, side: Side, w: &GeneratorWitness) -> Result<SplitEpi> {
    let field = p.field();
    let act = p.require(side)?;
    let pi_p = parity_reverse(p);
    let perm = parity_reversal_matrix(p.space());
    let mut parts = Vec::new();
    parts.extend(std::iter::repeat_n(p.clone(), w.even_terms.len()));
    parts.extend(std::iter::repeat_n(pi_p, w.odd_terms.len()));
    let reg = regular_module(r, side);
    if parts.is_empty() {
        parts.push(p.clone());
    }
    let ds = direct_sum(&parts)?;
    let mut e = Matrix::zeros(field, r.dim(), ds.module.dim());
    let mut s = Matrix::zeros(field, ds.module.dim(), r.dim());
    let terms = w.even_terms.iter().map(|t| (t, false)).chain(w.odd_terms.iter().map(|t| (t, true)));
    for (j, ((q, elem), twisted)) in terms.enumerate() {
        let qj = if twisted { q.mul(&perm.transpose()) } else { q.clone() };
        e = e.add(&qj.mul(&ds.projections[j]));
        let mut cols = Vec::with_capacity(r.dim());
        for l in 0..r.dim() {
            let mut v = act.mats[l].apply(elem);
            if twisted {
                v = perm.apply(&v);
                if side == Side::Left && r.parity(l).is_odd() {
                    v = v.iter().map(|x| -x).collect();
                }
            }
            cols.push(v);
        }
        let sj = Matrix::from_columns(field, parts[j].dim(), &cols);
        s = s.add(&ds.injections[j].mul(&sj));
    }
    let epi = ModuleMap::new(ds.module.clone(), reg.clone(), e)?;
    let section = ModuleMap::new(reg, ds.module.clone(), s)?;
    let verified = epi.compose(&section).matrix.is_identity() && epi.is_morphism()? && section.is_morphism()?;
    Ok(SplitEpi {
        sum: ds.module,
        epi,
        section,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::supermodule::regular_bimodule;
    use crate::superring::{dual_numbers, ground_field, super_skew_field};
    use crate::supervec::GradedDim;

    const Q: Field = Field::Rationals;

    fn residue() -> SuperModule {
        let dn = Arc::new(dual_numbers(Q));
        let act = crate::supermodule::Action {
            algebra: dn,
            mats: vec![Matrix::identity(Q, 1), Matrix::zeros(Q, 1, 1)],
        };
        SuperModule::new("k", SuperSpace::with_dims(Q, 1, 0), None, Some(act)).unwrap()
    }

    #[test]
    fn free_modules_are_projective_both_ways() {
        let d = Arc::new(super_skew_field(Q));
        for side in [Side::Left, Side::Right] {
            for (m, n) in [(1, 0), (0, 1), (1, 1)] {
                let p = free_module(&d, m, n, side);
                let pr = is_projective(&p, side).unwrap();
                assert!(pr.projective);
                assert!(pr.dual_basis.unwrap().verify(&p));
                assert!(dual_basis_search(&p, side).unwrap().unwrap().verify(&p));
            }
        }
    }

    #[test]
    fn residue_field_is_not_projective() {
        let k = residue();
        assert!(!is_projective(&k, Side::Right).unwrap().projective);
        assert!(dual_basis_search(&k, Side::Right).unwrap().is_none());
        assert!(!is_generator(&k, Side::Right).unwrap().generator);
    }

    #[test]
    fn trace_ideals() {
        let d = Arc::new(super_skew_field(Q));
        let r = regular_module(&d, Side::Right);
        assert!(trace_ideal(&r, Side::Right).unwrap().span.is_full());
        let pr = parity_reverse(&r);
        let t = trace_ideal(&pr, Side::Right).unwrap();
        assert!(t.span.is_full() && t.closure_was_noop);
        let zero = crate::supermodule::zero_module(&d, Side::Right);
        assert_eq!(trace_ideal(&zero, Side::Right).unwrap().span.dim(), 0);
        let t = trace_ideal(&residue(), Side::Right).unwrap();
        assert_eq!(t.span.graded_dim(), GradedDim::new(1, 0));
        assert!(t.closure_was_noop);
    }

    #[test]
    fn generators_have_split_epimorphisms() {
        let d = Arc::new(super_skew_field(Q));
        for side in [Side::Left, Side::Right] {
            let r = regular_bimodule(&d).restrict(side);
            for p in [r.clone(), parity_reverse(&r)] {
                let g = is_generator(&p, side).unwrap();
                assert!(g.generator);
                assert!(g.split.unwrap().verified);
            }
        }
        let k = Arc::new(ground_field(Q));
        let pi_k = parity_reverse(&regular_module(&k, Side::Right));
        let g = is_generator(&pi_k, Side::Right).unwrap();
        let w = g.witness.unwrap();
        assert!(w.even_terms.is_empty());
        assert_eq!(w.odd_terms.len(), 1);
    }
}
