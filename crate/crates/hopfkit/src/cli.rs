//! The `hopfkit` command line. Exit codes: 0 success, 1 mathematical
//! negative, 2 malformed input.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algcore::{radical, separability_idempotent, IdealData};
use crate::cocore::{coradical, coradical_filtration};
use crate::error::{Error, Result};
use crate::examples::{builtin, ExampleSpec};
use crate::exactlin::{format_vec, Field, Matrix};
use crate::hochschild::{cohomology, CtxAlgebra, CtxBimodule};
use crate::hopfcore::{check_ad_coinvariance, check_ad_invariance, find_integral, HopfObject, IntegralLocation, Side};
use crate::io::{self, BimoduleFile, FieldSpec, QuadrupleFile, SplitReportFile, StructureFile, SubspaceFile};
use crate::monocat::{CategoryContext, CtxKind};
use crate::report::Report;
use crate::smashboso::{bosonization_candidate, dual_bosonization_candidate};
use crate::splitpipe::{run_split, SplitLevel, SplitSide};
use crate::with_field;

#[derive(Parser, Debug)]
#[command(name = "hopfkit", about = "Exact computations with finite-dimensional Hopf algebras")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CtxArg {
    Vect,
    Comod,
    Bicomod,
    Mod,
    Bimod,
}

impl CtxArg {
    fn kind(self) -> CtxKind {
        match self {
            CtxArg::Vect => CtxKind::Vect,
            CtxArg::Comod => CtxKind::ComodR,
            CtxArg::Bicomod => CtxKind::BicomodHH,
            CtxArg::Mod => CtxKind::ModR,
            CtxArg::Bimod => CtxKind::BimodHH,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Radical,
    Coradical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LevelArg {
    Comodule,
    Bicomodule,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExampleName {
    GroupAlgebra,
    DualGroupAlgebra,
    SweedlerH4,
    Taft,
    Ha,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every axiom the file's structures are supposed to satisfy.
    Validate { file: String },
    /// Jacobson radical of the algebra.
    Radical {
        file: String,
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Coradical of the coalgebra.
    Coradical {
        file: String,
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Dimensions of the coradical filtration.
    Filtration { file: String },
    /// Hochschild cohomology in a category context.
    Hochschild {
        file: String,
        #[arg(long)]
        coeff: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        degree: u8,
        #[arg(long, value_enum)]
        ctx: CtxArg,
    },
    /// Separability idempotent in a category context.
    Separable {
        file: String,
        #[arg(long, value_enum)]
        ctx: CtxArg,
    },
    /// Integrals of H, or of H* with --dual.
    Integral {
        file: String,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        check_ad: bool,
    },
    /// Split a bialgebra along its radical or coradical.
    Split {
        file: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        candidate: String,
        #[arg(long, value_enum)]
        level: LevelArg,
        #[arg(long)]
        out: Option<String>,
    },
    /// Bosonize a quadruple file.
    Bosonize {
        quad: String,
        #[arg(long)]
        dual: bool,
    },
    /// Write a built-in example.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        a: Option<String>,
        /// `q` or `fN` for 𝔽_N.
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        out: Option<String>,
    },
}

/// What a command printed and how it ended.
struct Outcome {
    text: Vec<String>,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn new(text: Vec<String>, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }

    fn from_report(mut text: Vec<String>, mut json: Value, rep: &Report) -> Self {
        text.extend(rep.lines());
        json["checks"] = serde_json::to_value(io::report_records(rep)).expect("serializable");
        json["passed"] = Value::Bool(rep.all_passed());
        Outcome { text, json, ok: rep.all_passed() }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run_command<S: AsRef<str>>(args: &[S], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(|s| s.as_ref())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(o) => {
            if json {
                let _ = write!(out, "{}", io::to_json(&o.json));
            } else {
                for l in &o.text {
                    let _ = writeln!(out, "{l}");
                }
            }
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if json {
                let _ = write!(out, "{}", io::to_json(&json!({ "error": e.to_string() })));
            } else {
                let _ = writeln!(out, "error: {e}");
            }
            if e.is_mathematical() {
                1
            } else {
                2
            }
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn write_file(path: &str, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn load<T: for<'de> serde::Deserialize<'de>>(path: &str) -> Result<(String, T)> {
    let text = read(path)?;
    let v = io::from_json(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    Ok((text, v))
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => {
            let (_, s) = load::<StructureFile>(&file)?;
            with_field!(s.field, |f| validate(&f, &s))
        }
        Command::Radical { file, candidate } => {
            let (_, s) = load::<StructureFile>(&file)?;
            let cand = candidate.map(|c| load::<SubspaceFile>(&c)).transpose()?.map(|(_, c)| c);
            with_field!(s.field, |f| radical_cmd(&f, &s, cand.as_ref()))
        }
        Command::Coradical { file, candidate } => {
            let (_, s) = load::<StructureFile>(&file)?;
            let cand = candidate.map(|c| load::<SubspaceFile>(&c)).transpose()?.map(|(_, c)| c);
            with_field!(s.field, |f| coradical_cmd(&f, &s, cand.as_ref()))
        }
        Command::Filtration { file } => {
            let (_, s) = load::<StructureFile>(&file)?;
            with_field!(s.field, |f| filtration_cmd(&f, &s))
        }
        Command::Hochschild { file, coeff, degree, ctx } => {
            let (_, s) = load::<StructureFile>(&file)?;
            let (_, m) = load::<BimoduleFile>(&coeff)?;
            with_field!(s.field, |f| hochschild_cmd(&f, &s, &m, degree as usize, ctx.kind()))
        }
        Command::Separable { file, ctx } => {
            let (_, s) = load::<StructureFile>(&file)?;
            with_field!(s.field, |f| separable_cmd(&f, &s, ctx.kind()))
        }
        Command::Integral { file, dual, check_ad } => {
            let (_, s) = load::<StructureFile>(&file)?;
            with_field!(s.field, |f| integral_cmd(&f, &s, dual, check_ad))
        }
        Command::Split { file, side, candidate, level, out } => {
            let (_, s) = load::<StructureFile>(&file)?;
            let (_, c) = load::<SubspaceFile>(&candidate)?;
            let side = match side {
                SideArg::Radical => SplitSide::Radical,
                SideArg::Coradical => SplitSide::Coradical,
            };
            let level = match level {
                LevelArg::Comodule => SplitLevel::Comodule,
                LevelArg::Bicomodule => SplitLevel::Bicomodule,
            };
            with_field!(s.field, |f| split_cmd(&f, &s, &c, side, level, out.as_deref()))
        }
        Command::Bosonize { quad, dual } => {
            let (_, q) = load::<QuadrupleFile>(&quad)?;
            if q.is_dual()? != dual {
                return Err(Error::Input(format!("{quad}: quadruple kind is {:?}{}", q.quadruple.kind, if dual { ", --dual given" } else { ", pass --dual" })));
            }
            with_field!(q.quadruple.h.field, |f| bosonize_cmd(&f, &q))
        }
        Command::Example { name, n, lambda, p, a, field, out } => {
            let spec = example_spec(name, n, lambda, p, a)?;
            let fs = parse_field(&field)?;
            let file = with_field!(fs, |f| builtin(&spec, &f).map(|h| StructureFile::from_hopf(&h)))?;
            let text = io::to_json(&file);
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(Outcome::new(vec![format!("wrote {path} (dim {})", file.dim)], json!({ "out": path, "dim": file.dim })))
                }
                None => Ok(Outcome::new(text.lines().map(String::from).collect(), serde_json::to_value(&file).expect("serializable"))),
            }
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec> {
    match s {
        "q" | "Q" => Ok(FieldSpec::Q),
        _ => {
            let p = s
                .strip_prefix('f')
                .or_else(|| s.strip_prefix('F'))
                .and_then(|d| d.parse::<u64>().ok())
                .ok_or_else(|| Error::Input(format!("--field: expected q or fN, got {s:?}")))?;
            Ok(FieldSpec::Fp { p })
        }
    }
}

fn example_spec(name: ExampleName, n: Option<usize>, lambda: Option<String>, p: Option<u64>, a: Option<String>) -> Result<ExampleSpec> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::Input(format!("--{flag} is required")));
    Ok(match name {
        ExampleName::GroupAlgebra => ExampleSpec::GroupAlgebra { n: need(n, "n")? },
        ExampleName::DualGroupAlgebra => ExampleSpec::DualGroupAlgebra { n: need(n, "n")? },
        ExampleName::SweedlerH4 => ExampleSpec::SweedlerH4,
        ExampleName::Taft => ExampleSpec::Taft { n: need(n, "n")?, lambda: lambda.ok_or_else(|| Error::Input("--lambda is required".into()))? },
        ExampleName::Ha => ExampleSpec::Ha {
            p: p.ok_or_else(|| Error::Input("--p is required".into()))?,
            lambda: lambda.ok_or_else(|| Error::Input("--lambda is required".into()))?,
            a: a.unwrap_or_else(|| "1".into()),
        },
    })
}

fn validate<F: Field>(f: &F, s: &StructureFile) -> Result<Outcome> {
    let mut rep = Report::new();
    let alg = s.mul.is_some().then(|| s.algebra(f)).transpose()?;
    let coalg = s.comul.is_some().then(|| s.coalgebra(f)).transpose()?;
    let mut kinds = Vec::new();
    if let Some(a) = &alg {
        kinds.push("algebra");
        rep.absorb("algebra: ", a.validate());
    }
    if let Some(c) = &coalg {
        kinds.push("coalgebra");
        rep.absorb("coalgebra: ", c.validate());
    }
    if let (Some(a), Some(c)) = (&alg, &coalg) {
        kinds.push("bialgebra");
        let b = crate::hopfcore::BialgebraObject::new(a.clone(), c.clone())?;
        rep.absorb("bialgebra: ", b.compatibility());
        if let Some(sm) = s.antipode_matrix(f)? {
            kinds.push("hopf");
            let h = HopfObject { bialg: b, antipode: sm };
            rep.record("antipode", h.antipode_failure());
        }
    }
    if let Some(st) = &s.structures {
        if let Some(hf) = &st.hopf {
            let h = hf.hopf(f)?;
            let ctx = CategoryContext::new(CtxKind::BimodHH, Some(h.clone()))?;
            let obj = s.cat_object(f, &ctx)?;
            rep.absorb("structures: ", obj.validate(&h));
        }
    }
    if kinds.is_empty() {
        return Err(Error::Input("file has neither \"mul\" nor \"comul\"".into()));
    }
    Ok(Outcome::from_report(vec![format!("{}: dim {}", kinds.join(", "), s.dim)], json!({ "kinds": kinds, "dim": s.dim }), &rep))
}

fn subspace_outcome<F: Field>(what: &str, labels: &[String], sub: &crate::exactlin::Subspace<F>) -> Outcome {
    let f = sub.field();
    let mut text = vec![format!("{what}: dim {}", sub.dim())];
    text.extend(sub.basis().iter().map(|v| format!("  {}", io::format_combination(f, labels, v))));
    Outcome::new(text, json!({ "dim": sub.dim(), "subspace": SubspaceFile::from_subspace(sub) }))
}

fn radical_cmd<F: Field>(f: &F, s: &StructureFile, cand: Option<&SubspaceFile>) -> Result<Outcome> {
    let a = s.algebra(f)?;
    let cand = cand.map(|c| c.subspace(f, a.dim).and_then(|sub| IdealData::from_subspace(&a, sub))).transpose()?;
    let j = radical(&a, cand.as_ref())?;
    Ok(subspace_outcome("radical", &a.labels, &j.subspace))
}

fn coradical_cmd<F: Field>(f: &F, s: &StructureFile, cand: Option<&SubspaceFile>) -> Result<Outcome> {
    let c = s.coalgebra(f)?;
    let cand = cand.map(|x| x.subspace(f, c.dim)).transpose()?;
    let c0 = coradical(&c, cand.as_ref())?;
    Ok(subspace_outcome("coradical", &c.labels, &c0))
}

fn filtration_cmd<F: Field>(f: &F, s: &StructureFile) -> Result<Outcome> {
    let c = s.coalgebra(f)?;
    let c0 = coradical(&c, None)?;
    let filt = coradical_filtration(&c, &c0)?;
    let dims = filt.dims();
    let text = vec![format!("dims: {dims:?}"), format!("exhausts: {}", filt.exhausts)];
    let mut o = Outcome::new(text, json!({ "dims": dims, "exhausts": filt.exhausts }));
    o.ok = filt.exhausts;
    Ok(o)
}

fn ctx_algebra<F: Field>(f: &F, s: &StructureFile, kind: CtxKind) -> Result<(CategoryContext<F>, CtxAlgebra<F>)> {
    let ctx = io::context_for(f, kind, s.structures.as_ref())?;
    let alg = s.algebra(f)?;
    let obj = s.cat_object(f, &ctx)?;
    Ok((ctx, CtxAlgebra { alg, obj }))
}

fn hochschild_cmd<F: Field>(f: &F, s: &StructureFile, m: &BimoduleFile, degree: usize, kind: CtxKind) -> Result<Outcome> {
    let (ctx, a) = ctx_algebra(f, s, kind)?;
    let bimod = m.bimodule(f, &a.alg)?;
    let obj = m.cat_object(f, &ctx)?;
    let cm = CtxBimodule { bimod, obj };
    let mut rep = a.validate(&ctx);
    rep.absorb("coefficients: ", cm.validate(&ctx, &a));
    rep.ensure("input")?;
    let h = cohomology(&ctx, &a, &cm, degree)?;
    let sum = h.summary();
    let mut text = vec![
        format!("H^{degree} dimension: {}", sum.dimension),
        format!("cocycles: {}", sum.cocycles_dim),
        format!("coboundaries: {}", sum.coboundaries_dim),
    ];
    for (i, r) in sum.representatives.iter().enumerate() {
        text.push(format!("representative {i}: {}", rows_text(r)));
    }
    Ok(Outcome::new(text, serde_json::to_value(&sum).expect("serializable")))
}

fn rows_text(rows: &[Vec<String>]) -> String {
    let body: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", body.join(", "))
}

fn separable_cmd<F: Field>(f: &F, s: &StructureFile, kind: CtxKind) -> Result<Outcome> {
    let (ctx, a) = ctx_algebra(f, s, kind)?;
    a.validate(&ctx).ensure("input")?;
    let e = separability_idempotent(&a.alg, &ctx, &a.obj)?;
    let tl: Vec<String> = a.alg.labels.iter().flat_map(|x| a.alg.labels.iter().map(move |y| format!("{x}⊗{y}"))).collect();
    let shown = io::format_combination(f, &tl, &e);
    Ok(Outcome::new(vec![format!("e = {shown}")], json!({ "idempotent": format_vec(f, &e), "display": shown })))
}

fn integral_cmd<F: Field>(f: &F, s: &StructureFile, dual: bool, check_ad: bool) -> Result<Outcome> {
    let h = s.hopf(f)?;
    let location = if dual { IntegralLocation::InDual } else { IntegralLocation::InH };
    let labels: Vec<String> = if dual { h.labels().iter().map(|l| format!("{l}*")).collect() } else { h.labels().to_vec() };
    let mut text = Vec::new();
    let mut out = json!({ "location": location });
    let mut ok = true;
    for (name, side) in [("left", Side::Left), ("right", Side::Right)] {
        match find_integral(&h, location, side) {
            Some(w) => {
                text.push(format!("{name} integral: {} (normalized: {}, space dim {})", io::format_combination(f, &labels, &w.coeffs), w.normalized, w.space_dim));
                out[name] = json!({ "coeffs": format_vec(f, &w.coeffs), "normalized": w.normalized, "space_dim": w.space_dim });
            }
            None => {
                text.push(format!("{name} integral: none"));
                out[name] = Value::Null;
                ok = false;
            }
        }
    }
    if check_ad {
        let w = find_integral(&h, location, Side::Left).ok_or_else(|| Error::Verification("no integral".into()))?;
        let verdict = if dual { check_ad_invariance(&h, &w)? } else { check_ad_coinvariance(&h, &w)? };
        let what = if dual { "ad-invariant" } else { "ad-coinvariant" };
        text.push(format!("{what}: {verdict}"));
        out[what] = Value::Bool(verdict);
        ok &= verdict;
    }
    let mut o = Outcome::new(text, out);
    o.ok = ok;
    Ok(o)
}

fn matrix_json<F: Field>(m: &Matrix<F>) -> Value {
    json!(m.format_rows())
}

fn split_cmd<F: Field>(f: &F, s: &StructureFile, c: &SubspaceFile, side: SplitSide, level: SplitLevel, out: Option<&str>) -> Result<Outcome> {
    let a = s.bialgebra(f)?;
    let cand = c.subspace(f, a.dim())?;
    let (cert, maps, rep) = run_split(&a, side, &cand, level)?;
    let mut text = vec![format!("side: {side:?}, level: {level:?}, ctx: {:?}", maps.ctx), format!("H: dim {}", cert.h.dim())];
    for st in &maps.steps {
        text.push(format!("tower step {}: source dim {}, kernel dim {}", st.step, st.source_dim, st.kernel_dim));
    }
    let mut ledger = cert.report.clone();
    ledger.absorb("", maps.report.clone());
    let Some(rep) = rep else {
        let doc = json!({
            "side": side,
            "level": level,
            "ctx": maps.ctx,
            "h": StructureFile::from_hopf(&cert.h),
            "pi": matrix_json(&maps.pi),
            "sigma": matrix_json(&maps.sigma),
            "ledger": io::report_records(&ledger),
        });
        if let Some(path) = out {
            write_file(path, &io::to_json(&doc))?;
            text.push(format!("wrote {path}"));
        }
        return Ok(Outcome::from_report(text, doc, &ledger));
    };
    let file = SplitReportFile::new(&a.alg.labels, &rep);
    text.push(format!("R: dim {}", rep.r_space.dim()));
    for e in &file.r_basis {
        text.push(format!("  {} = {}", e.input, e.value));
    }
    if file.cocycle_trivial {
        text.push("cocycle: trivial".into());
    }
    for e in &file.cocycle_table {
        text.push(format!("{} = {}", e.input, e.value));
    }
    if let Some(path) = out {
        write_file(path, &io::to_json(&file))?;
        text.push(format!("wrote {path}"));
    }
    let doc = serde_json::to_value(&file).expect("serializable");
    Ok(Outcome::from_report(text, doc, &rep.ledger))
}

fn bosonize_cmd<F: Field>(f: &F, q: &QuadrupleFile) -> Result<Outcome> {
    let (b, mut rep) = if q.is_dual()? {
        let d = q.dual(f)?;
        (dual_bosonization_candidate(&d)?, d.validate())
    } else {
        let p = q.primal(f)?;
        (bosonization_candidate(&p)?, p.validate())
    };
    rep.absorb("", b.report.clone());
    let file = io::bosonization_file(&b);
    let mut text = vec![format!("R#H: dim {}", file.dim)];
    if rep.all_passed() {
        text.extend(io::to_json(&file).lines().map(String::from));
    }
    Ok(Outcome::from_report(text, json!({ "bialgebra": file }), &rep))
}
