//! `skein`: evaluate link invariants, run verification suites, print
//! F-matrices and Temperley-Lieb images.
//!
//! Exit codes: 0 ok, 1 a verification check failed, 2 parse or usage error,
//! 3 semantic error (evaluator or parameter constraint).

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use quantum_skein::diagram::{parse_diagram_json, BraidWord, MorseDiagram};
use quantum_skein::fusion::{f_matrix, FVariant, QqqFMatrix};
use quantum_skein::laurent::{LaurentPoly, Var};
use quantum_skein::report::Report;
use quantum_skein::skein::{Invariant, DEFAULT_CAP};
use quantum_skein::suites::Suite;
use quantum_skein::tlhecke::{hecke_delta, zeta};

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "Exact skein invariants and fusion-category checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an invariant on a braid closure or Morse diagram.
    Eval(EvalArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Build the closed-form F-matrix and verify it.
    Fmatrix(FmatrixArgs),
    /// Image of a braid in the Temperley-Lieb algebra with symbolic a, b.
    Tl(TlArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Braid word, e.g. `B3: 1 -2 1`; the diagram is its closure.
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Morse word, e.g. `cup@1 cup@2 x+@1 cap@2 cap@1`.
    #[arg(long, allow_hyphen_values = true)]
    morse: Option<String>,
    /// File holding a Morse word or a JSON diagram.
    #[arg(long)]
    morse_file: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    /// bracket, bracket-twin, homfly-framed, dubrovnik, kauffman,
    /// dubrovnik-twin, kauffman-twin, trivial:+1|-1|+i|-i
    #[arg(long)]
    invariant: String,
    #[command(flatten)]
    input: Input,
    /// Substitute `var=poly` into the result; repeat or comma-separate.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    specialize: Vec<String>,
    /// Largest crossing count accepted.
    #[arg(long, env = "SKEIN_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// laurent, tl, skein, fusion, lickorish or all
    #[arg(long)]
    suite: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FmatrixArgs {
    /// `d` (k = 1, or k = 0 when d = 1), `d_q,d_x` or `d_q,d_x,d_y`.
    #[arg(long, allow_hyphen_values = true)]
    dims: String,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    kappa: i8,
    /// dubrovnik or kauffman; used when k = 2.
    #[arg(long, default_value = "dubrovnik")]
    variant: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TlArgs {
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    #[arg(long)]
    json: bool,
}

enum Fail {
    Parse(String),
    Semantic(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Parse(_) => 2,
            Fail::Semantic(_) => 3,
        }
    }
}

fn parse_err(e: impl std::fmt::Display) -> Fail {
    Fail::Parse(e.to_string())
}

fn sem_err(e: impl std::fmt::Display) -> Fail {
    Fail::Semantic(e.to_string())
}

fn read_diagram(input: &Input) -> Result<MorseDiagram, Fail> {
    if let Some(b) = &input.braid {
        return Ok(b.parse::<BraidWord>().map_err(parse_err)?.closure());
    }
    if let Some(m) = &input.morse {
        return m.parse().map_err(parse_err);
    }
    let path = input
        .morse_file
        .as_deref()
        .expect("clap enforces one input");
    let src = fs::read_to_string(path).map_err(|e| parse_err(format!("{path}: {e}")))?;
    let t = src.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        parse_diagram_json(&src).map_err(parse_err)
    } else {
        src.parse().map_err(parse_err)
    }
}

fn parse_specializations(items: &[String]) -> Result<Vec<(String, LaurentPoly)>, Fail> {
    items
        .iter()
        .map(|s| {
            let (v, p) = s
                .split_once('=')
                .ok_or_else(|| parse_err(format!("specialization `{s}` is not var=poly")))?;
            let v = v.trim();
            Var::try_new(v).map_err(parse_err)?;
            Ok((v.to_string(), p.parse().map_err(parse_err)?))
        })
        .collect()
}

fn cmd_eval(a: &EvalArgs) -> Result<u8, Fail> {
    let inv: Invariant = a.invariant.parse().map_err(|e| {
        parse_err(format!(
            "{e}; expected one of {}",
            Invariant::NAMES.join(", ")
        ))
    })?;
    let d = read_diagram(&a.input)?;
    let subs = parse_specializations(&a.specialize)?;
    if inv.is_experimental() {
        eprintln!("warning: {inv} is experimental: its isotopy behaviour is conjectural for k = 2");
    }
    let n = d.crossing_count();
    if n > a.cap {
        return Err(sem_err(format!(
            "{n} crossings exceed the cap of {}",
            a.cap
        )));
    }
    let mut value = inv.evaluate(&d, a.cap).map_err(sem_err)?;
    for (v, p) in &subs {
        value = value.substitute(v, p).map_err(sem_err)?;
    }
    if a.json {
        let out = json!({
            "invariant": inv.to_string(),
            "diagram": d.to_string(),
            "crossings": n,
            "specialize": a.specialize,
            "experimental": inv.is_experimental(),
            "value": value.to_string(),
            "terms": value,
        });
        println!("{out}");
    } else {
        println!("{value}");
    }
    Ok(0)
}

fn print_report(r: &Report, json: bool) -> u8 {
    if json {
        println!("{}", r.to_json());
    } else {
        println!("{r}");
    }
    if r.passed() {
        0
    } else {
        1
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<u8, Fail> {
    let suite: Suite = a.suite.parse().map_err(parse_err)?;
    let r = suite.run().map_err(sem_err)?;
    Ok(print_report(&r, a.json))
}

fn parse_dims(s: &str) -> Result<Vec<f64>, Fail> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| parse_err(format!("--dims `{s}`: {e}")))?;
    Ok(match v[..] {
        [d] if (d - 1.0).abs() < 1e-9 => vec![1.0],
        [d] => vec![d, d * d - 1.0],
        _ => v,
    })
}

fn cmd_fmatrix(a: &FmatrixArgs) -> Result<u8, Fail> {
    let dims = parse_dims(&a.dims)?;
    let variant: FVariant = a.variant.parse().map_err(parse_err)?;
    let f = f_matrix(&dims, a.kappa, variant).map_err(sem_err)?;
    let r = f.verify();
    if a.json {
        let out = json!({
            "d_q": f.dq(),
            "label_dims": f.label_dims(),
            "kappa": f.kappa(),
            "variant": f.variant().map(FVariant::name),
            "matrix": f.rows(),
            "report": r,
        });
        println!("{out}");
        return Ok(if r.passed() { 0 } else { 1 });
    }
    print_matrix(&f);
    Ok(print_report(&r, false))
}

fn print_matrix(f: &QqqFMatrix) {
    let labels: Vec<String> = f.label_dims().iter().map(|d| format!("{d}")).collect();
    print!(
        "F^qqq_q  d_q = {}  label dims = [{}]  kappa = {}",
        f.dq(),
        labels.join(", "),
        f.kappa()
    );
    match f.variant() {
        Some(v) => println!("  variant = {}", v.name()),
        None => println!(),
    }
    for row in f.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>+.12}")).collect();
        println!("  [{}]", cells.join(", "));
    }
}

fn cmd_tl(a: &TlArgs) -> Result<u8, Fail> {
    let b: BraidWord = a.braid.parse().map_err(parse_err)?;
    let (x, y) = (LaurentPoly::var("a"), LaurentPoly::var("b"));
    let delta = hecke_delta(&x, &y).map_err(sem_err)?;
    let z = zeta(&b, &x, &y, &delta).map_err(sem_err)?;
    let closure = z.trace_closure(&delta);
    if a.json {
        let out = json!({
            "braid": b.to_string(),
            "delta": delta.to_string(),
            "terms": z.to_json_terms(),
            "closure": closure.to_string(),
        });
        println!("{out}");
    } else {
        println!("delta = {delta}");
        for (p, c) in z.terms() {
            let pairs: Vec<String> = p
                .to_labels()
                .iter()
                .map(|[i, j]| format!("{i}-{j}"))
                .collect();
            println!("({c}) * [{}]", pairs.join(" "));
        }
        println!("closure = {closure}");
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Fmatrix(a) => cmd_fmatrix(a),
        Cmd::Tl(a) => cmd_tl(a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (Fail::Parse(m) | Fail::Semantic(m)) = &f;
            eprintln!("error: {m}");
            ExitCode::from(f.code())
        }
    }
}
