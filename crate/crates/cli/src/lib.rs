//! `lpideal`: batch front end over the letterplace library. Every command
//! prints one JSON report (or a plain-text rendering with `--format text`)
//! carrying a `version` field. Exit codes: 0 success, 1 a verification came
//! out false, 2 bad usage or input, 3 a budget or enumeration cap was hit.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use letterplace::determinantal::{verify_main, LSequence};
use letterplace::groebner::Budget;
use letterplace::homset::{enumerate_isotone, HomIdealJson, DEFAULT_ENUMERATION_CAP};
use letterplace::letterplace::{coletterplace_ideal, letterplace_ideal, support, support_vars};
use letterplace::monomial::{IdealFile, VarKind};
use letterplace::poset::PosetJson;
use letterplace::pstable::{is_p_stable, StabilityMode};
use letterplace::quotient::{FiberKind, FiberMap, FiberMapJson};
use letterplace::stronglystable::{dualize_bounded, dualize_ss, undualize_ss};
use letterplace::{HomIdeal, MonomialIdeal, Poset, VarIndex};

/// Version of the report layout.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "lpideal", version, about = "Letterplace and co-letterplace ideals of poset ideals in Hom(P, N)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operations on Hom(P, N).
    #[command(subcommand)]
    Hom(HomCommand),
    /// Inclusion-minimal markers of a poset ideal.
    Markers(IdealArgs),
    /// The letterplace ideal L(J, P).
    Letterplace(IdealArgs),
    /// The co-letterplace ideal L(P, J).
    Coletterplace(IdealArgs),
    /// Check that L(J, P) and L(P, J) are Alexander dual over the support.
    DualCheck(IdealArgs),
    /// Project a (co-)letterplace ideal along a fiber map.
    Project(ProjectArgs),
    /// Check that a fiber map cuts the quotient ring by a regular sequence.
    RegularCheck(ProjectArgs),
    /// Decide P-stability of a monomial ideal in k[x_P].
    Pstable(PstableArgs),
    /// Strongly stable ideals.
    #[command(subcommand)]
    Ss(SsCommand),
    /// Same as `ss dualize`.
    DualizeSs(DualizeArgs),
    /// Staircase determinantal ideals.
    #[command(subcommand)]
    Det(DetCommand),
    /// Hilbert series numerator of a monomial ideal.
    Hilbert(HilbertArgs),
}

#[derive(Subcommand, Debug)]
pub enum HomCommand {
    /// All isotone maps P -> {0..bound}.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand, Debug)]
pub enum SsCommand {
    /// Move between strongly stable ideals in k[x_1..x_m] and m-regular ones in k[x_0, x_1, ...].
    Dualize(DualizeArgs),
}

#[derive(Subcommand, Debug)]
pub enum DetCommand {
    /// Gröbner basis of I(l) under the diagonal order against L^Y(i).
    Verify(DetArgs),
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Poset JSON, as a path or inline.
    #[arg(long)]
    pub poset: String,
    #[arg(long)]
    pub bound: u32,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    /// Poset-ideal JSON, as a path or inline.
    #[arg(long)]
    pub ideal: String,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Letterplace,
    Coletterplace,
}

#[derive(Args, Debug)]
pub struct ProjectArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// `p1`, `p2`, `identity`, or fiber-map JSON (path or inline).
    #[arg(long)]
    pub map: String,
    /// Defaults to co-letterplace for `p2` and letterplace otherwise.
    #[arg(long, value_enum)]
    pub side: Option<Side>,
}

#[derive(Args, Debug)]
pub struct PstableArgs {
    /// Poset JSON, as a path or inline.
    #[arg(long)]
    pub poset: String,
    /// Monomial file with `# vars=elem`; elements by label or index.
    #[arg(long)]
    pub monomials: String,
    /// Use the definitional test up to this degree instead of the exact test.
    #[arg(long)]
    pub bounded: Option<u32>,
}

#[derive(Args, Debug)]
pub struct DualizeArgs {
    /// Monomial file. `vars=elem` uses x[1]..x[m]; `vars=nat` uses x[0], x[1], ...
    #[arg(long)]
    pub input: String,
    /// Overrides the `m=` header.
    #[arg(long)]
    pub m: Option<usize>,
    /// With `vars=nat`: the finite duality inside Hom([m], [n]_0).
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct DetArgs {
    /// Comma separated l_a, ..., l_b.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub l: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    pub a: u32,
    #[arg(long, default_value_t = Budget::default().max_pairs)]
    pub max_pairs: usize,
    /// Degree cap for new basis elements; default 3 above the top minor degree.
    #[arg(long)]
    pub max_degree: Option<u32>,
}

#[derive(Args, Debug)]
pub struct HilbertArgs {
    /// Monomial file with a `# vars=...` header.
    #[arg(long)]
    pub monomials: String,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Core(letterplace::Error),
}

impl Failure {
    fn reason(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Input(_) => "input",
            Failure::Core(e) => e.reason(),
        }
    }

    fn code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_budget() => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<letterplace::Error> for Failure {
    fn from(e: letterplace::Error) -> Self {
        Failure::Core(e)
    }
}

/// A finished report: JSON body, text rendering, and whether its check held.
struct Report {
    body: Value,
    text: String,
    holds: bool,
}

impl Report {
    fn new(body: Value, text: String) -> Report {
        Report { body, text, holds: true }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: 0,
                },
                _ => Outcome {
                    stdout: error_json("", &Failure::Usage(first_line(&rendered))),
                    stderr: rendered,
                    code: 2,
                },
            };
        }
    };
    let name = command_name(&cli.command);
    let result = dispatch(&cli.command);
    let (stdout, stderr, code) = match result {
        Ok(report) => {
            let code = if report.holds { 0 } else { 1 };
            let out = match cli.format {
                Format::Json => {
                    let mut body = json!({ "version": FORMAT_VERSION, "command": name });
                    if let (Value::Object(dst), Value::Object(src)) = (&mut body, report.body) {
                        dst.extend(src);
                    }
                    pretty(&body)
                }
                Format::Text => report.text,
            };
            (out, String::new(), code)
        }
        Err(f) => {
            let msg = format!("error: {f}\n");
            match cli.format {
                Format::Json => (error_json(name, &f), msg, f.code()),
                Format::Text => (String::new(), msg, f.code()),
            }
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, &stdout) {
            let f = Failure::Input(format!("cannot write {path}: {e}"));
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {f}\n"),
                code: 2,
            };
        }
        return Outcome {
            stdout: String::new(),
            stderr,
            code,
        };
    }
    Outcome { stdout, stderr, code }
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or("").trim_start_matches("error: ").to_string()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn error_json(command: &str, f: &Failure) -> String {
    pretty(&json!({
        "version": FORMAT_VERSION,
        "command": command,
        "error": f.to_string(),
        "reason": f.reason(),
    }))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hom(HomCommand::Enumerate(_)) => "hom enumerate",
        Command::Markers(_) => "markers",
        Command::Letterplace(_) => "letterplace",
        Command::Coletterplace(_) => "coletterplace",
        Command::DualCheck(_) => "dual-check",
        Command::Project(_) => "project",
        Command::RegularCheck(_) => "regular-check",
        Command::Pstable(_) => "pstable",
        Command::Ss(SsCommand::Dualize(_)) | Command::DualizeSs(_) => "ss dualize",
        Command::Det(DetCommand::Verify(_)) => "det verify",
        Command::Hilbert(_) => "hilbert",
    }
}

fn dispatch(c: &Command) -> Run<Report> {
    match c {
        Command::Hom(HomCommand::Enumerate(a)) => hom_enumerate(a),
        Command::Markers(a) => markers(a),
        Command::Letterplace(a) => letterplace_cmd(a, Side::Letterplace),
        Command::Coletterplace(a) => letterplace_cmd(a, Side::Coletterplace),
        Command::DualCheck(a) => dual_check(a),
        Command::Project(a) => project(a, false),
        Command::RegularCheck(a) => project(a, true),
        Command::Pstable(a) => pstable(a),
        Command::Ss(SsCommand::Dualize(a)) | Command::DualizeSs(a) => dualize(a),
        Command::Det(DetCommand::Verify(a)) => det_verify(a),
        Command::Hilbert(a) => hilbert(a),
    }
}

// --- input -----------------------------------------------------------------

/// Inline JSON if the argument starts with `{`, a file path otherwise.
fn json_source(arg: &str) -> Run<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        read_file(arg)
    }
}

fn read_file(path: &str) -> Run<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Run<T> {
    let text = json_source(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("malformed {what} JSON: {e}")))
}

fn load_poset(arg: &str) -> Run<Poset> {
    Ok(Poset::try_from(parse_json::<PosetJson>(arg, "poset")?)?)
}

fn load_ideal(arg: &str) -> Run<HomIdeal> {
    Ok(HomIdeal::try_from(parse_json::<HomIdealJson>(arg, "poset ideal")?)?)
}

fn resolver(p: Option<&Poset>) -> impl Fn(&str) -> Option<usize> + '_ {
    move |t: &str| match p {
        Some(p) => p.element_by_label(t).or_else(|| t.parse().ok().filter(|&k| k < p.n())),
        None => t.parse().ok(),
    }
}

// --- rendering ---------------------------------------------------------------

fn render_gens(ideal: &MonomialIdeal, labels: Option<&[String]>) -> Vec<String> {
    ideal.render("x", labels)
}

fn ideal_text(kind: VarKind, extra: &[(&str, String)], ideal: &MonomialIdeal, labels: Option<&[String]>) -> String {
    IdealFile::render(kind, extra, ideal, labels)
}

fn kind_name(k: FiberKind) -> &'static str {
    match k {
        FiberKind::RightStrict => "right_strict",
        FiberKind::LeftStrict => "left_strict",
        FiberKind::Both => "both",
        FiberKind::Neither => "neither",
    }
}

// --- commands ----------------------------------------------------------------

fn hom_enumerate(a: &EnumerateArgs) -> Run<Report> {
    let p = load_poset(&a.poset)?;
    let maps = enumerate_isotone(&p, a.bound, a.cap)?;
    let values: Vec<Vec<u32>> = maps.iter().map(|m| m.values().to_vec()).collect();
    let text: String = values
        .iter()
        .map(|v| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    Ok(Report::new(
        json!({ "bound": a.bound, "cap": a.cap, "count": values.len(), "maps": values }),
        text,
    ))
}

fn markers(a: &IdealArgs) -> Run<Report> {
    let j = load_ideal(&a.ideal)?;
    let p = j.poset();
    let ms = j.minimal_markers(a.cap)?;
    let labels = p.labels();
    let rows: Vec<Value> = ms
        .iter()
        .map(|m| {
            json!({
                "domain": m.domain.iter().collect::<Vec<_>>(),
                "graph": m.graph().iter().map(|&(q, v)| [q as u32, v]).collect::<Vec<_>>(),
                "monomial": letterplace::letterplace::pair_monomial(&m.graph()).render("x", labels),
            })
        })
        .collect();
    let text: String = ms
        .iter()
        .map(|m| letterplace::letterplace::pair_monomial(&m.graph()).render("x", labels) + "\n")
        .collect();
    Ok(Report::new(json!({ "count": rows.len(), "markers": rows }), text))
}

fn side_ideal(j: &HomIdeal, side: Side, cap: usize) -> Run<(MonomialIdeal, u32)> {
    let r = match side {
        Side::Letterplace => letterplace_ideal(j, cap)?,
        Side::Coletterplace => coletterplace_ideal(j, cap)?,
    };
    Ok((r.ideal, r.bound_used))
}

fn letterplace_cmd(a: &IdealArgs, side: Side) -> Run<Report> {
    let j = load_ideal(&a.ideal)?;
    let labels = j.poset().labels();
    let (ideal, bound) = side_ideal(&j, side, a.cap)?;
    let supp: Vec<[u32; 2]> = support(&j, a.cap)?.into_iter().map(|(p, i)| [p as u32, i]).collect();
    let body = json!({
        "generators": render_gens(&ideal, labels),
        "support": supp,
        "bound_used": bound,
        "unit": ideal.is_unit(),
    });
    Ok(Report::new(body, ideal_text(VarKind::Pair, &[], &ideal, labels)))
}

fn dual_check(a: &IdealArgs) -> Run<Report> {
    let j = load_ideal(&a.ideal)?;
    let labels = j.poset().labels();
    let l = letterplace_ideal(&j, a.cap)?.ideal;
    let co = coletterplace_ideal(&j, a.cap)?.ideal;
    let vars = support_vars(&support(&j, a.cap)?);
    let dual = co.with_universe(vars.iter().copied()).alexander_dual()?;
    let holds = dual.gens() == l.gens();
    let body = json!({
        "holds": holds,
        "support_size": vars.len(),
        "letterplace": render_gens(&l, labels),
        "dual_of_coletterplace": render_gens(&dual, labels),
    });
    let text = format!(
        "{}: L(J,P) {} the Alexander dual of L(P,J) over {} variables\n",
        if holds { "ok" } else { "FAILED" },
        if holds { "is" } else { "is not" },
        vars.len()
    );
    Ok(Report { body, text, holds })
}

fn fiber_map(spec: &str, source: Vec<(usize, u32)>) -> Run<FiberMap> {
    Ok(match spec {
        "p1" => FiberMap::p1(source),
        "p2" => FiberMap::p2(source),
        "identity" => FiberMap::identity(source),
        other => FiberMap::try_from(parse_json::<FiberMapJson>(other, "fiber map")?)?,
    })
}

fn project(a: &ProjectArgs, check: bool) -> Run<Report> {
    let j = load_ideal(&a.ideal.ideal)?;
    let p = j.poset();
    let side = a.side.unwrap_or(if a.map == "p2" { Side::Coletterplace } else { Side::Letterplace });
    let (ideal, _) = side_ideal(&j, side, a.ideal.cap)?;
    let source: Vec<(usize, u32)> = support(&j, a.ideal.cap)?.into_iter().collect();
    let f = fiber_map(&a.map, source)?;
    let kind = f.fiber_kind(p);
    let projected = f.project_ideal(&ideal)?;
    let target = match f.assignment().first() {
        Some(VarIndex::Elem(_)) => VarKind::Elem,
        Some(VarIndex::Pair(..)) => VarKind::Pair,
        _ => VarKind::Nat,
    };
    let labels = if target == VarKind::Nat { None } else { p.labels() };
    let side_name = match side {
        Side::Letterplace => "letterplace",
        Side::Coletterplace => "coletterplace",
    };
    if !check {
        let body = json!({
            "side": side_name,
            "fiber_kind": kind_name(kind),
            "vars": target.name(),
            "generators": render_gens(&projected, labels),
        });
        return Ok(Report::new(body, ideal_text(target, &[], &projected, labels)));
    }
    let before = ideal.hilbert_numerator();
    let after = projected.hilbert_numerator();
    let holds = before == after;
    let body = json!({
        "side": side_name,
        "fiber_kind": kind_name(kind),
        "regular": holds,
        "variables_before": ideal.universe().len(),
        "variables_after": projected.universe().len(),
        "numerator_before": before.0,
        "numerator_after": after.0,
    });
    let text = format!(
        "{}: fibers {}, numerators {} and {}\n",
        if holds { "regular" } else { "NOT regular" },
        kind_name(kind),
        before,
        after
    );
    Ok(Report { body, text, holds })
}

fn pstable(a: &PstableArgs) -> Run<Report> {
    let p = load_poset(&a.poset)?;
    let file = IdealFile::parse(&read_file(&a.monomials)?, &resolver(Some(&p)))?;
    if file.kind != VarKind::Elem {
        return Err(Failure::Input("pstable expects `# vars=elem`".into()));
    }
    let ideal = MonomialIdeal::new(file.gens, (0..p.n() as u32).map(VarIndex::Elem));
    let mode = match a.bounded {
        Some(d) => StabilityMode::Bounded(d),
        None => StabilityMode::Exact,
    };
    let stable = is_p_stable(&p, &ideal, mode)?;
    let (mode_name, degree) = match mode {
        StabilityMode::Exact => ("exact", Value::Null),
        StabilityMode::Bounded(d) => ("bounded", json!(d)),
    };
    let body = json!({
        "stable": stable,
        "mode": mode_name,
        "degree": degree,
        "generators": render_gens(&ideal, p.labels()),
    });
    let text = format!("{}\n", if stable { "P-stable" } else { "not P-stable" });
    Ok(Report::new(body, text))
}

fn header_num<T: std::str::FromStr>(file: &IdealFile, key: &str) -> Run<Option<T>> {
    match file.header.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Failure::Input(format!("bad `{key}={v}` in header"))),
    }
}

fn one_based(m: usize) -> Vec<String> {
    (1..=m).map(|k| k.to_string()).collect()
}

fn dualize(a: &DualizeArgs) -> Run<Report> {
    let text = read_file(&a.input)?;
    // elem variables are written x[1]..x[m]
    let one_based_resolve = |t: &str| t.parse::<usize>().ok().filter(|&k| k >= 1).map(|k| k - 1);
    let file = IdealFile::parse(&text, &one_based_resolve)?;
    let m: Option<usize> = match a.m {
        Some(m) => Some(m),
        None => header_num(&file, "m")?,
    };
    let n: Option<u32> = match a.n {
        Some(n) => Some(n),
        None => header_num(&file, "n")?,
    };
    match file.kind {
        VarKind::Elem => {
            let top = file
                .gens
                .iter()
                .flat_map(|g| g.support().collect::<Vec<_>>())
                .map(|v| match v {
                    VarIndex::Elem(k) => k as usize + 1,
                    _ => 0,
                })
                .max()
                .unwrap_or(1);
            let m = m.unwrap_or(top);
            if m < top {
                return Err(Failure::Input(format!("x[{top}] occurs but m = {m}")));
            }
            let ideal = MonomialIdeal::new(file.gens, (0..m as u32).map(VarIndex::Elem));
            let out = dualize_ss(&ideal, m, a.cap)?;
            let extra = [("m", m.to_string())];
            let body = json!({ "vars": "nat", "m": m, "generators": render_gens(&out, None) });
            Ok(Report::new(body, ideal_text(VarKind::Nat, &extra, &out, None)))
        }
        VarKind::Nat => {
            let m = m.ok_or_else(|| Failure::Usage("`vars=nat` input needs m (header `m=` or --m)".into()))?;
            let top = file
                .gens
                .iter()
                .flat_map(|g| g.support().collect::<Vec<_>>())
                .map(|v| match v {
                    VarIndex::Nat(k) => k,
                    _ => 0,
                })
                .max()
                .unwrap_or(0);
            match n {
                Some(n) => {
                    if top > n {
                        return Err(Failure::Input(format!("x[{top}] occurs but n = {n}")));
                    }
                    let ideal = MonomialIdeal::new(file.gens, (0..=n).map(VarIndex::Nat));
                    let out = dualize_bounded(&ideal, m, n, a.cap)?;
                    let extra = [("m", n.to_string()), ("n", m.to_string())];
                    let body = json!({ "vars": "nat", "m": n, "n": m, "generators": render_gens(&out, None) });
                    Ok(Report::new(body, ideal_text(VarKind::Nat, &extra, &out, None)))
                }
                None => {
                    let ideal = MonomialIdeal::new(file.gens, (0..=top).map(VarIndex::Nat));
                    let out = undualize_ss(&ideal, m, a.cap)?;
                    let labels = one_based(m);
                    let extra = [("m", m.to_string())];
                    let body = json!({ "vars": "elem", "m": m, "generators": render_gens(&out, Some(&labels)) });
                    Ok(Report::new(body, ideal_text(VarKind::Elem, &extra, &out, Some(&labels))))
                }
            }
        }
        VarKind::Pair => Err(Failure::Input("dualize expects `vars=elem` or `vars=nat`".into())),
    }
}

fn det_verify(a: &DetArgs) -> Run<Report> {
    let l = LSequence::new(a.a, a.l.clone())?;
    let budget = Budget {
        max_pairs: a.max_pairs,
        max_degree: a.max_degree,
    };
    let r = verify_main(&l, budget)?;
    let holds = r.ok;
    let mut body = serde_json::to_value(&r).expect("serializable");
    if let Value::Object(map) = &mut body {
        map.insert(
            "budget".into(),
            json!({ "max_pairs": budget.max_pairs, "max_degree": budget.max_degree }),
        );
    }
    let c = &r.raw.codim;
    let text = format!(
        "{}: l = {:?} (a = {}), terrace {:?}, i = {:?}\n\
         Groebner basis of {} elements, {} S-pairs reduced\n\
         in(I) = L^Y(i): {}; codimension {} (L^Y {}, i_b - i_a {}, formula {})\n",
        if holds { "ok" } else { "FAILED" },
        r.raw.l,
        r.raw.a,
        r.terrace,
        r.i_sequence,
        r.raw.gb_size,
        r.raw.pairs_reduced,
        r.raw.initial_equals_ly,
        c.initial_height,
        c.ly_height,
        c.i_span,
        c.max_formula
    );
    Ok(Report { body, text, holds })
}

fn hilbert(a: &HilbertArgs) -> Run<Report> {
    let text = read_file(&a.monomials)?;
    let file = IdealFile::parse(&text, &resolver(None))?;
    let universe: Vec<VarIndex> = match header_num::<u32>(&file, "variables")? {
        Some(v) => match file.kind {
            VarKind::Nat => (0..v).map(VarIndex::Nat).collect(),
            VarKind::Elem => (0..v).map(VarIndex::Elem).collect(),
            VarKind::Pair => return Err(Failure::Input("`variables=` applies to elem and nat files".into())),
        },
        None => vec![],
    };
    let ideal = MonomialIdeal::new(file.gens, universe);
    let num = ideal.hilbert_numerator();
    let v = ideal.universe().len();
    let body = json!({
        "variables": v,
        "numerator": num.0,
        "series": format!("({num}) / (1-t)^{v}"),
    });
    Ok(Report::new(body, format!("({num}) / (1-t)^{v}\n")))
}
