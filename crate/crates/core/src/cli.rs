//! Command-line front end. [`run`] returns an exit code and the full output
//! so the binary stays thin and the commands are testable in-process.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::azumaya::{
    azumaya_roundtrip, bimodule_to_env, commutant_iso, counit, enveloping, is_super_azumaya_seeded, supercommutant,
    tensor_with_base,
};
use crate::error::Error;
use crate::field::Field;
use crate::io::{algebra_to_string, load_algebra, load_module, report_to_json};
use crate::morita::{build_context, check_context_isos, equivalence_images, equivalence_report, morita_roundtrip};
use crate::report::{Check, Report};
use crate::supermodule::{direct_sum, regular_bimodule, regular_module, validate_module, ModuleMap, Side, SuperModule};
use crate::superring::{opposite, supercenter, tensor_algebra, validate_algebra, SuperAlgebra};
use crate::supervec::SuperSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "supermorita", version)]
#[command(about = "Exact checks for superalgebras, Morita contexts and super Azumaya algebras")]
pub struct Cli {
    /// Ground field: Q or Fp:<p>. Overrides the field stored in files.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,

    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Extra corpus modules (file path or builtin:name).
    #[arg(long, global = true)]
    pub corpus: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the superalgebra axioms and report the supercenter.
    CheckAlgebra { algebra: String },
    /// Basis of the supercenter.
    Supercenter { algebra: String },
    /// Build the opposite superalgebra.
    Opposite {
        algebra: String,
        /// Write the result as algebra JSON.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Build the graded tensor product of two superalgebras.
    Tensor {
        left: String,
        right: String,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Morita context of a right module: flags, the eight isomorphisms, round trips.
    Morita { algebra: String, module: String },
    /// Supercommutant of a bimodule and the commutant isomorphism.
    Commutant { algebra: String, module: String },
    /// Super Azumaya test and the unit/counit checks on a corpus of bimodules.
    Azumaya { algebra: String },
    /// Round trips, naturality and the equivalence report for a progenerator.
    Roundtrip { algebra: String, module: String },
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

/// Why a command stopped.
enum Failure {
    Input(String),
    Math(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_)
            | Error::InvalidField(_)
            | Error::InvalidAlgebra { .. }
            | Error::InvalidModule { .. }
            | Error::ShapeMismatch(_)
            | Error::SignatureMismatch(_)
            | Error::FieldMismatch(..) => Failure::Input(e.to_string()),
            other => {
                let mut r = Report::new("error");
                r.push(Check::new("computation", false, other.to_string()));
                Failure::Math(r)
            }
        }
    }
}

type Outcome = std::result::Result<Report, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> (i32, String) {
    match dispatch(cli) {
        Ok(rep) => (if rep.passed() { 0 } else { 1 }, render(cli, &rep)),
        Err(Failure::Math(rep)) => (1, render(cli, &rep)),
        Err(Failure::Input(msg)) => (2, format!("input error: {msg}\n")),
    }
}

fn render(cli: &Cli, rep: &Report) -> String {
    match cli.output {
        Output::Text => rep.to_string(),
        Output::Json => format!("{}\n", report_to_json(rep)),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::CheckAlgebra { algebra } => cmd_check_algebra(cli, algebra),
        Command::Supercenter { algebra } => cmd_supercenter(cli, algebra),
        Command::Opposite { algebra, save } => cmd_opposite(cli, algebra, save.as_ref()),
        Command::Tensor { left, right, save } => cmd_tensor(cli, left, right, save.as_ref()),
        Command::Morita { algebra, module } => cmd_morita(cli, algebra, module),
        Command::Commutant { algebra, module } => cmd_commutant(cli, algebra, module),
        Command::Azumaya { algebra } => cmd_azumaya(cli, algebra),
        Command::Roundtrip { algebra, module } => cmd_roundtrip(cli, algebra, module),
    }
}

/// Loads an algebra and stops with exit 1 if an axiom fails.
fn valid_algebra(cli: &Cli, spec: &str) -> std::result::Result<Arc<SuperAlgebra>, Failure> {
    let a = load_algebra(spec, cli.field)?;
    let v = validate_algebra(&a);
    if !v.passed() {
        let mut r = Report::new(format!("axioms of {}", a.name()));
        r.extend("", v.checks);
        return Err(Failure::Math(r));
    }
    Ok(Arc::new(a))
}

fn valid_module(spec: &str, r: &Arc<SuperAlgebra>) -> std::result::Result<SuperModule, Failure> {
    let m = load_module(spec, r)?;
    let checks = validate_module(&m);
    if checks.iter().any(|c| !c.passed) {
        let mut rep = Report::new(format!("module axioms of {}", m.name()));
        rep.extend("", checks);
        return Err(Failure::Math(rep));
    }
    Ok(m)
}

fn save_algebra(a: &SuperAlgebra, path: Option<&PathBuf>, rep: &mut Report) -> std::result::Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, algebra_to_string(a)).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
        rep.fact("saved", p.display());
    }
    Ok(())
}

fn cmd_check_algebra(cli: &Cli, spec: &str) -> Outcome {
    let a = load_algebra(spec, cli.field)?;
    let mut rep = Report::new(format!("axioms of {}", a.name()));
    rep.fact("field", a.field());
    rep.fact("dimension", a.graded_dim());
    let v = validate_algebra(&a);
    let ok = v.passed();
    rep.extend("", v.checks);
    if ok {
        rep.fact("supercenter", supercenter(&a).graded_dim());
    }
    Ok(rep)
}

fn cmd_supercenter(cli: &Cli, spec: &str) -> Outcome {
    let a = valid_algebra(cli, spec)?;
    let z = supercenter(&a);
    let mut rep = Report::new(format!("supercenter of {}", a.name()));
    rep.fact("supercenter", z.graded_dim());
    for (k, v) in z.basis().iter().enumerate() {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}·{}", a.space().label(i)))
            .collect();
        rep.fact(format!("z{k}"), terms.join(" + "));
    }
    rep.push(Check::new("unit is central", z.contains(a.unit()), "1 ∈ Z(A)"));
    Ok(rep)
}

fn cmd_opposite(cli: &Cli, spec: &str, save: Option<&PathBuf>) -> Outcome {
    let a = valid_algebra(cli, spec)?;
    let op = opposite(&a)?;
    let mut rep = Report::new(format!("opposite of {}", a.name()));
    rep.fact("dimension", op.graded_dim());
    rep.extend("opposite", validate_algebra(&op).checks);
    rep.push(Check::new("(A°)° = A", opposite(&op)? == *a, "structure constants agree"));
    save_algebra(&op, save, &mut rep)?;
    Ok(rep)
}

fn cmd_tensor(cli: &Cli, left: &str, right: &str, save: Option<&PathBuf>) -> Outcome {
    let a = valid_algebra(cli, left)?;
    let b = valid_algebra(cli, right)?;
    let t = tensor_algebra(&a, &b)?;
    let mut rep = Report::new(format!("{} ⊗ {}", a.name(), b.name()));
    rep.fact("dimension", t.algebra.graded_dim());
    rep.push(Check::new(
        "graded dimension is the product",
        t.algebra.graded_dim() == a.graded_dim().tensor(b.graded_dim()),
        format!("{} ⊗ {}", a.graded_dim(), b.graded_dim()),
    ));
    rep.extend("tensor", validate_algebra(&t.algebra).checks);
    save_algebra(&t.algebra, save, &mut rep)?;
    Ok(rep)
}

fn corpus(cli: &Cli, r: &Arc<SuperAlgebra>) -> std::result::Result<Vec<SuperModule>, Failure> {
    cli.corpus.iter().map(|s| valid_module(s, r)).collect()
}

fn cmd_morita(cli: &Cli, algebra: &str, module: &str) -> Outcome {
    let r = valid_algebra(cli, algebra)?;
    let p = valid_module(module, &r)?;
    let ctx = build_context(&p)?;
    let f = ctx.flags;
    let mut rep = Report::new(format!("Morita context of {} over {}", p.name(), r.name()));
    rep.fact("R", r.graded_dim());
    rep.fact("P", p.graded_dim());
    rep.fact("S = End_R(P)", ctx.s.graded_dim());
    rep.fact("Q = P*", ctx.q.graded_dim());
    rep.fact("projective", f.projective);
    rep.fact("generator", f.generator);
    rep.fact("progenerator", f.progenerator);
    rep.fact("α onto", f.alpha_onto);
    rep.fact("β onto", f.beta_onto);
    rep.push(Check::new("α onto iff generator", f.alpha_onto == f.generator, format!("{} / {}", f.alpha_onto, f.generator)));
    rep.push(Check::new("β onto iff projective", f.beta_onto == f.projective, format!("{} / {}", f.beta_onto, f.projective)));
    if f.progenerator {
        rep.absorb("isomorphisms", check_context_isos(&ctx)?);
        let mut r_corpus = vec![regular_module(&r, Side::Right), p.restrict(Side::Right)];
        r_corpus.extend(corpus(cli, &r)?);
        let mut s_corpus = vec![ctx.q.restrict(Side::Right)];
        s_corpus.extend(equivalence_images(&ctx, &r_corpus)?);
        rep.absorb("round trips", morita_roundtrip(&ctx, &r_corpus, &s_corpus, &[], &[])?);
    }
    Ok(rep)
}

/// `M ⊕ N` with its two injections and two projections as module maps.
fn sum_morphisms(m: &SuperModule, n: &SuperModule) -> std::result::Result<(SuperModule, Vec<ModuleMap>), Failure> {
    let ds = direct_sum(&[m.clone(), n.clone()])?;
    let sum = ds.module.clone().with_name(format!("{}⊕{}", m.name(), n.name()));
    let mut maps = Vec::new();
    for (part, (inj, proj)) in [m, n].into_iter().zip(ds.injections.iter().zip(&ds.projections)) {
        maps.push(ModuleMap::new(part.clone(), sum.clone(), inj.clone())?);
        maps.push(ModuleMap::new(sum.clone(), part.clone(), proj.clone())?);
    }
    Ok((sum, maps))
}

fn cmd_roundtrip(cli: &Cli, algebra: &str, module: &str) -> Outcome {
    let r = valid_algebra(cli, algebra)?;
    let p = valid_module(module, &r)?;
    let ctx = build_context(&p)?;
    if !ctx.flags.progenerator {
        return Err(Error::NotProgenerator.into());
    }
    let reg = regular_module(&r, Side::Right);
    let pr = p.restrict(Side::Right);
    let (r_sum, r_maps) = sum_morphisms(&reg, &pr)?;
    let mut r_corpus = vec![reg, pr, r_sum];
    r_corpus.extend(corpus(cli, &r)?);
    let q = ctx.q.restrict(Side::Right);
    let images = equivalence_images(&ctx, &r_corpus)?;
    let (s_sum, s_maps) = sum_morphisms(&q, &images[0])?;
    let mut s_corpus = vec![q, s_sum];
    s_corpus.extend(images);
    let mut rep = Report::new(format!("Morita round trips for {} over {}", p.name(), r.name()));
    rep.fact("S = End_R(P)", ctx.s.graded_dim());
    rep.absorb("", morita_roundtrip(&ctx, &r_corpus, &s_corpus, &r_maps, &s_maps)?);
    rep.absorb("", equivalence_report(&ctx, &r_corpus)?);
    Ok(rep)
}

fn cmd_commutant(cli: &Cli, algebra: &str, module: &str) -> Outcome {
    let a = valid_algebra(cli, algebra)?;
    let m = valid_module(module, &a)?;
    if m.left().is_none() || m.right().is_none() {
        return Err(Failure::Input(format!("{} must be a bimodule over {}", m.name(), a.name())));
    }
    let c = supercommutant(&m)?;
    let mut rep = Report::new(format!("supercommutant of {}", m.name()));
    rep.fact("M", m.graded_dim());
    rep.fact("M^A", c.graded_dim());
    let (azumaya, _) = is_super_azumaya_seeded(&a, cli.seed)?;
    rep.fact("azumaya", azumaya);
    if azumaya {
        let env = enveloping(&a)?;
        let em = bimodule_to_env(&env, &m)?;
        let iso = commutant_iso(&env, &em.env_module)?;
        rep.push(Check::new("F and G mutually inverse", iso.mutually_inverse(), format!("Hom(A, M) ≅ {}", c.graded_dim())));
        let eps = counit(&iso.commutant)?;
        rep.push(Check::new("A ⊗ M^A → M bijective", eps.is_bijective(), format!("rank {}", eps.rank())));
        rep.push(Check::new(
            "dimension law",
            m.graded_dim() == a.graded_dim().tensor(c.graded_dim()),
            format!("{} = {} ⊗ {}", m.graded_dim(), a.graded_dim(), c.graded_dim()),
        ));
    }
    Ok(rep)
}

fn cmd_azumaya(cli: &Cli, algebra: &str) -> Outcome {
    let a = valid_algebra(cli, algebra)?;
    let (azumaya, mut rep) = is_super_azumaya_seeded(&a, cli.seed)?;
    if azumaya {
        let env = enveloping(&a)?;
        let field = a.field();
        let mut bimodules = vec![regular_bimodule(&a), tensor_with_base(&a, &SuperSpace::with_dims(field, 1, 1))];
        for m in corpus(cli, &a)? {
            if m.left().is_none() || m.right().is_none() {
                return Err(Failure::Input(format!("corpus module {} must be a bimodule", m.name())));
            }
            bimodules.push(m);
        }
        let env_modules = bimodules
            .iter()
            .map(|m| bimodule_to_env(&env, m).map(|b| b.env_module))
            .collect::<crate::Result<Vec<_>>>()?;
        let base: Vec<SuperSpace> = [(1, 0), (0, 1), (1, 1)]
            .into_iter()
            .map(|(m, n)| SuperSpace::with_dims(field, m, n))
            .collect();
        rep.absorb("equivalence", azumaya_roundtrip(&a, &env_modules, &base)?);
    }
    Ok(rep)
}
