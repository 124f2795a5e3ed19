use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use mitosis::geometry::{Face, HPolytope};
use mitosis::instances::{
    gz_instance, gz_polytope, sp2n_adapted_cone, sp4_ddo, sp4_instance, sp4_no_body, Instance, SP4_FACETS,
};
use mitosis::okounkov::valuation_points_rho;
use mitosis::pipedreams::{
    gl_face_to_dream, gl_pipe_mitosis, skew_mitosis, sp4_face_to_skew, DreamJson, GlPipeDream, SkewPipeDream,
};
use mitosis::rational::{format_scalar, parse_scalar, to_i64, Scalar};
use mitosis::schubert::{face_character, mitosis_chain};
use mitosis::suites::{self, chain_steps, SuiteReport};
use mitosis::weyl::WeylGroup;
use mitosis::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Parser)]
#[command(name = "mitosis", about = "Geometric mitosis on parapolytopes and Demazure characters")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Gl3,
    Gl4,
    Sp4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolytopeKind {
    Gz,
    Sp4,
    ConeC0,
    NoBody,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DreamKind {
    Skew,
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Paramitosis,
    Balanced,
    Demazure,
    Dimensions,
    Okounkov,
    Catalog,
    Skew,
    GlPipes,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the character of a mitosis chain with the Demazure character.
    Character {
        group: Group,
        /// GL: the vector λ; Sp4: the pairings (λ,α₁),(λ,α₂).
        #[arg(long)]
        lambda: Option<String>,
        /// Weyl group element such as `e`, `w0`, `s2s1`, or `all`.
        #[arg(long, default_value = "w0")]
        w: String,
    },
    /// Apply mitosis operations left to right, starting from the lowest vertex.
    Mitosis {
        group: Group,
        #[arg(long)]
        lambda: Option<String>,
        /// Comma-separated mitosis indices.
        #[arg(long)]
        ops: String,
    },
    /// Emit a polytope in the JSON halfspace format.
    Polytope {
        kind: PolytopeKind,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        l1: Option<String>,
        #[arg(long)]
        l2: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Combinatorial mitosis on a pipe dream read from a JSON file.
    Pipedream {
        kind: DreamKind,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated mitosis indices, applied left to right.
        #[arg(long)]
        word: String,
        #[arg(long)]
        input: PathBuf,
        /// Alias for `--format`.
        #[arg(long, value_enum)]
        render: Option<Format>,
    },
    /// Valuation data of the symplectic Newton–Okounkov body.
    Valuation {
        #[arg(value_parser = ["rho-points"])]
        what: String,
    },
    /// Run a verification suite.
    Verify { suite: Suite },
}

struct Report {
    json: Value,
    ascii: String,
    ok: bool,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_list(s: &str) -> Result<Vec<Scalar>> {
    s.split(',').map(|t| parse_scalar(t.trim())).collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    parse_list(s)?
        .iter()
        .map(|x| to_i64(x).ok_or_else(|| usage(format!("{} is not an integer", format_scalar(x)))))
        .collect()
}

fn parse_ops(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("bad mitosis index {t:?}"))))
        .collect()
}

fn instance(group: Group, lambda: Option<&str>) -> Result<Instance> {
    match group {
        Group::Gl3 | Group::Gl4 => {
            let n = if group == Group::Gl3 { 3 } else { 4 };
            let l = match lambda {
                Some(s) => parse_ints(s)?,
                None => (0..n as i64).collect(),
            };
            if l.len() != n {
                return Err(usage(format!("expected {n} entries in --lambda")));
            }
            gz_instance(&l)
        }
        Group::Sp4 => {
            let l = match lambda {
                Some(s) => parse_ints(s)?,
                None => vec![1, 1],
            };
            if l.len() != 2 {
                return Err(usage("expected l1,l2 in --lambda"));
            }
            sp4_instance(l[0], l[1])
        }
    }
}

fn character(group: Group, lambda: Option<&str>, w: &str) -> Result<Report> {
    let inst = instance(group, lambda)?;
    let g = WeylGroup::new(&inst.rd);
    let elements = if w == "all" { g.elements().to_vec() } else { vec![g.parse(w)?] };
    let mut records = Vec::new();
    let mut ascii = String::new();
    let mut ok = true;
    for w in &elements {
        let chain = mitosis_chain(&inst.para, &g, w)?;
        let faces = face_character(&inst.para, chain.sigma.faces(), &inst.lambda, &inst.rd)?;
        let dem = g.demazure_character(&chain.subword, &inst.lambda)?;
        let lattice = chain.sigma.lattice_points(&inst.para.poly)?.len();
        let matched = faces == dem;
        ok &= matched;
        ascii.push_str(&format!(
            "{} w={w} subword={:?}\n  faces: {}\n  faces character:   {faces}\n  demazure character: {dem}\n  lattice_count={lattice} demazure_dim={} match={matched}\n",
            inst.name,
            chain.subword,
            chain.sigma.faces().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" "),
            dem.coefficient_sum()
        ));
        records.push(json!({
            "w": w.to_string(),
            "word": w.word(),
            "subword": chain.subword,
            "faces": chain.sigma.faces().iter().map(|f| f.tight.clone()).collect::<Vec<_>>(),
            "lattice_count": lattice,
            "demazure_dim": dem.coefficient_sum(),
            "match": matched,
            "faces_character": faces.to_json(),
            "demazure_character": dem.to_json(),
        }));
    }
    let json = if records.len() == 1 { records.remove(0) } else { Value::Array(records) };
    Ok(Report { json, ascii, ok })
}

fn face_label(group: Group, inst: &Instance, f: &Face) -> Result<String> {
    match group {
        Group::Sp4 => {
            let names: Vec<&str> = f.tight.iter().map(|&k| SP4_FACETS[k]).collect();
            let head = if names.is_empty() { "P".to_string() } else { names.join(" ∩ ") };
            Ok(match sp4_face_to_skew(f)? {
                Some(d) => format!("{head}\n{}", d.render()),
                None => head,
            })
        }
        Group::Gl3 | Group::Gl4 => {
            let n = if group == Group::Gl3 { 3 } else { 4 };
            Ok(gl_face_to_dream(&inst.para, n, f)?.render())
        }
    }
}

fn mitosis(group: Group, lambda: Option<&str>, ops: &str) -> Result<Report> {
    let inst = instance(group, lambda)?;
    let ops = parse_ops(ops)?;
    let steps = chain_steps(&inst.para, &ops)?;
    let mut rendered = Vec::new();
    let mut json_steps = Vec::new();
    for (k, s) in steps.iter().enumerate() {
        rendered.push(s.iter().map(|f| face_label(group, &inst, f)).collect::<Result<BTreeSet<String>>>()?);
        json_steps.push(json!({
            "op": if k == 0 { Value::Null } else { json!(ops[k - 1]) },
            "faces": s.iter().map(|f| f.tight.clone()).collect::<Vec<_>>(),
            "dims": s.iter().map(|f| f.dim).collect::<Vec<_>>(),
        }));
    }
    Ok(Report {
        json: json!({ "instance": inst.name, "ops": ops, "steps": json_steps }),
        ascii: suites::render_chain(&ops, &rendered),
        ok: true,
    })
}

fn polytope_ascii(p: &HPolytope) -> String {
    let mut out = format!("dim {}{}\n", p.dim(), if p.is_cone() { " cone" } else { "" });
    for h in p.halfspaces() {
        let terms: Vec<String> = h.normal.iter().map(format_scalar).collect();
        out.push_str(&format!("[{}] · x + {} >= 0\n", terms.join(", "), format_scalar(&h.offset)));
    }
    out
}

fn polytope(
    kind: PolytopeKind,
    lambda: Option<&str>,
    l1: Option<&str>,
    l2: Option<&str>,
    n: Option<usize>,
) -> Result<Report> {
    let sp_weights = || -> Result<(Scalar, Scalar)> {
        Ok((parse_scalar(l1.unwrap_or("1"))?, parse_scalar(l2.unwrap_or("1"))?))
    };
    let p = match kind {
        PolytopeKind::Gz => {
            let l = parse_list(lambda.ok_or_else(|| usage("gz needs --lambda"))?)?;
            gz_polytope(&l)?.poly
        }
        PolytopeKind::Sp4 => {
            let (a, b) = sp_weights()?;
            sp4_ddo(&a, &b)?.poly
        }
        PolytopeKind::ConeC0 => sp2n_adapted_cone(n.ok_or_else(|| usage("cone-c0 needs --n"))?)?.poly,
        PolytopeKind::NoBody => {
            let (a, b) = sp_weights()?;
            sp4_no_body(&a, &b)?
        }
    };
    Ok(Report {
        json: serde_json::to_value(p.to_json()).map_err(|e| Error::Invalid(e.to_string()))?,
        ascii: polytope_ascii(&p),
        ok: true,
    })
}

fn dreams_report<T: Ord>(
    layers: Vec<BTreeSet<T>>,
    ops: &[usize],
    render: impl Fn(&T) -> String,
    to_json: impl Fn(&T) -> DreamJson,
) -> Report {
    let rendered: Vec<BTreeSet<String>> = layers.iter().map(|s| s.iter().map(&render).collect()).collect();
    let last: Vec<DreamJson> = layers.last().map(|s| s.iter().map(to_json).collect()).unwrap_or_default();
    Report {
        json: serde_json::to_value(last).unwrap_or(Value::Null),
        ascii: suites::render_chain(ops, &rendered),
        ok: true,
    }
}

fn pipedream(kind: DreamKind, n: Option<usize>, word: &str, input: &PathBuf) -> Result<Report> {
    let text = fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let dj: DreamJson = serde_json::from_str(&text).map_err(|e| usage(e.to_string()))?;
    if n.is_some_and(|n| n != dj.n) {
        return Err(usage("--n disagrees with the input diagram"));
    }
    let ops = parse_ops(word)?;
    match kind {
        DreamKind::Skew => {
            let d = SkewPipeDream::from_json(&dj)?;
            let mut layers = vec![BTreeSet::from([d])];
            for &i in &ops {
                let mut next = BTreeSet::new();
                for d in layers.last().expect("nonempty") {
                    next.extend(skew_mitosis(d, i)?);
                }
                layers.push(next);
            }
            Ok(dreams_report(layers, &ops, |d| d.render(), |d| d.to_json()))
        }
        DreamKind::Gl => {
            let d = GlPipeDream::new(dj.n, dj.crosses.iter().map(|c| (c[0], c[1])))?;
            let mut layers = vec![BTreeSet::from([d])];
            for &i in &ops {
                let mut next = BTreeSet::new();
                for d in layers.last().expect("nonempty") {
                    next.extend(gl_pipe_mitosis(d, i)?);
                }
                layers.push(next);
            }
            Ok(dreams_report(layers, &ops, |d| d.render(), |d| DreamJson {
                n: dj.n,
                crosses: d.crosses().iter().map(|&(i, j)| [i, j]).collect(),
            }))
        }
    }
}

fn valuation() -> Report {
    let marked: BTreeSet<[u32; 4]> = suites::RHO_VERTICES.iter().copied().collect();
    let pts = valuation_points_rho();
    let rows: Vec<Value> = pts
        .iter()
        .map(|p| json!({ "point": p, "vertex": marked.contains(p) }))
        .collect();
    let ascii = pts
        .iter()
        .map(|p| format!("{:?}{}\n", p, if marked.contains(p) { " vertex" } else { "" }))
        .collect();
    Report {
        json: Value::Array(rows),
        ascii,
        ok: pts.len() == 16,
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    pass: bool,
    suites: &'a [SuiteReport],
}

fn verify(suite: Suite) -> Report {
    let mut reports = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Paramitosis) {
        reports.push(suites::paramitosis_identity(5));
        reports.push(suites::paramitosis_structure(5));
    }
    if want(Suite::Balanced) {
        reports.push(suites::balanced());
    }
    if want(Suite::Demazure) {
        reports.push(suites::demazure());
    }
    if want(Suite::Dimensions) {
        reports.push(suites::dimensions());
    }
    if want(Suite::Okounkov) {
        reports.push(suites::okounkov());
    }
    if want(Suite::Catalog) {
        reports.push(suites::catalog());
    }
    if want(Suite::Skew) {
        reports.push(suites::skew(&[2, 3]));
    }
    if want(Suite::GlPipes) {
        reports.push(suites::gl_pipes());
    }
    let ok = reports.iter().all(|r| r.pass());
    let mut ascii = String::new();
    for r in &reports {
        for c in &r.cases {
            ascii.push_str(&format!(
                "{} {} {}: {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                r.suite,
                c.name,
                c.detail
            ));
        }
    }
    Report {
        json: serde_json::to_value(VerifyJson { pass: ok, suites: &reports }).unwrap_or(Value::Null),
        ascii,
        ok,
    }
}

fn run(cli: &Cli) -> Result<(Report, Format)> {
    let mut format = cli.format;
    let report = match &cli.command {
        Command::Character { group, lambda, w } => character(*group, lambda.as_deref(), w)?,
        Command::Mitosis { group, lambda, ops } => mitosis(*group, lambda.as_deref(), ops)?,
        Command::Polytope { kind, lambda, l1, l2, n } => {
            polytope(*kind, lambda.as_deref(), l1.as_deref(), l2.as_deref(), *n)?
        }
        Command::Pipedream {
            kind,
            n,
            word,
            input,
            render,
        } => {
            format = render.unwrap_or(format);
            pipedream(*kind, *n, word, input)?
        }
        Command::Valuation { .. } => valuation(),
        Command::Verify { suite } => verify(*suite),
    };
    Ok((report, format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, format) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut text = match format {
        Format::Json => serde_json::to_string_pretty(&report.json).unwrap_or_default(),
        Format::Ascii => report.ascii.trim_end().to_string(),
    };
    text.push('\n');
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
