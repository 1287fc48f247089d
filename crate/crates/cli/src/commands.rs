use std::collections::BTreeSet;
use std::fmt::Write;

use qudit_line::oracle::{faults, Check, Harness, Status};
use qudit_line::pauli::{self, PauliOp, PauliRecord};
use qudit_line::projline::{self, Point, ProjectiveLine};
use qudit_line::{neighbour_graph, perp_set, Modulus, Vector2};
use serde::Serialize;

use crate::{Cli, Command, Fault, Format};

/// Rendered output plus the process exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub type CliResult = Result<Output, String>;

pub fn run(cli: &Cli) -> CliResult {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph { .. }) {
        return Err("--format dot is only supported by the graph command".into());
    }
    match cli.command {
        Command::Factor { d } => factor(cli, d),
        Command::Perp { d, b, c } => perp(cli, d, b, c),
        Command::Points { d } => points(cli, d),
        Command::Commute { d, a, b, c, a2, b2, c2 } => commute(cli, d, [a, b, c], [a2, b2, c2]),
        Command::Count { d, b, c } => count(cli, d, b, c),
        Command::Graph { d } => graph(cli, d),
        Command::Verify { d } => verify(cli, d),
    }
}

fn modulus(d: u64) -> Result<Modulus, String> {
    Modulus::new(d).map_err(|e| e.to_string())
}

fn vector(b: u64, c: u64, m: &Modulus) -> Result<Vector2, String> {
    Vector2::reduced(b, c, m).map_err(|e| e.to_string())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn factorization(m: &Modulus) -> String {
    m.factors()
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn join_vectors<'a>(vs: impl IntoIterator<Item = &'a Vector2>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct FactorReport<'a> {
    d: u64,
    factors: &'a [(u64, u32)],
    square_free: bool,
    idempotents: &'a [u64],
    prime: bool,
    unit_count: u64,
}

fn factor(cli: &Cli, d: u64) -> CliResult {
    let m = modulus(d)?;
    let report = FactorReport {
        d,
        factors: m.factors(),
        square_free: m.is_square_free(),
        idempotents: m.idempotents(),
        prime: m.is_prime(),
        unit_count: m.unit_count(),
    };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("prime,multiplicity,idempotent\n");
            for (k, &(p, e)) in m.factors().iter().enumerate() {
                let idem = m.idempotents().get(k).map(u64::to_string).unwrap_or_default();
                writeln!(out, "{p},{e},{idem}").unwrap();
            }
            out
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "d = {d} = {}", factorization(&m)).unwrap();
            writeln!(out, "prime: {}", yes_no(m.is_prime())).unwrap();
            writeln!(out, "square-free: {}", yes_no(m.is_square_free())).unwrap();
            writeln!(out, "units: {}", m.unit_count()).unwrap();
            if m.is_square_free() {
                let idems: Vec<_> = m.idempotents().iter().map(u64::to_string).collect();
                writeln!(out, "idempotents: {}", idems.join(" ")).unwrap();
            } else {
                writeln!(out, "idempotents: none (d is not square-free)").unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct Decomposition {
    index_set: Vec<u64>,
    points: Vec<Point>,
    point_count: usize,
    point_count_formula: u64,
    perp_size_formula: u64,
    union_equals_perp: bool,
}

#[derive(Serialize)]
struct PerpReport {
    d: u64,
    base: Vector2,
    size: usize,
    members: BTreeSet<Vector2>,
    decomposition: Option<Decomposition>,
}

fn perp(cli: &Cli, d: u64, b: u64, c: u64) -> CliResult {
    let m = modulus(d)?;
    let v = vector(b, c, &m)?;
    let perp = perp_set(v, &m);
    let decomposition = if m.is_square_free() {
        let points = projline::points_containing(v, &m).map_err(|e| e.to_string())?;
        let union: BTreeSet<Vector2> =
            points.iter().flat_map(|p| p.members().iter().copied()).collect();
        Some(Decomposition {
            index_set: projline::index_set_primes(v, &m).map_err(|e| e.to_string())?,
            point_count: points.len(),
            point_count_formula: projline::containing_count_formula(v, &m)
                .map_err(|e| e.to_string())?,
            perp_size_formula: projline::perp_size_formula(v, &m).map_err(|e| e.to_string())?,
            union_equals_perp: &union == perp.members(),
            points,
        })
    } else {
        None
    };
    let report = PerpReport {
        d,
        base: v,
        size: perp.len(),
        members: perp.members().clone(),
        decomposition,
    };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("b,c\n");
            for w in &report.members {
                writeln!(out, "{},{}", w.b, w.c).unwrap();
            }
            out
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "perp-set of {v} in Z_{d}^2").unwrap();
            writeln!(out, "size (enumerated): {}", report.size).unwrap();
            if let Some(dec) = &report.decomposition {
                writeln!(out, "size (formula d * prod_K p): {}", dec.perp_size_formula).unwrap();
            }
            writeln!(out, "members: {}", join_vectors(&report.members)).unwrap();
            match &report.decomposition {
                Some(dec) => {
                    let k: Vec<_> = dec.index_set.iter().map(u64::to_string).collect();
                    writeln!(out, "index set K (primes): {{{}}}", k.join(", ")).unwrap();
                    writeln!(out, "points containing {v} (enumerated): {}", dec.point_count).unwrap();
                    writeln!(
                        out,
                        "points containing {v} (formula prod_K (p+1)): {}",
                        dec.point_count_formula
                    )
                    .unwrap();
                    for p in &dec.points {
                        writeln!(out, "  {} = {{{}}}", p.label(&m), join_vectors(p.members())).unwrap();
                    }
                    writeln!(out, "union of points equals perp-set: {}", yes_no(dec.union_equals_perp))
                        .unwrap();
                }
                None => {
                    writeln!(out, "point decomposition: requires square-free d").unwrap();
                }
            }
            out
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct PointsReport<'a> {
    d: u64,
    count: usize,
    formula: Option<u64>,
    points: &'a [Point],
}

fn points(cli: &Cli, d: u64) -> CliResult {
    let m = modulus(d)?;
    let line = ProjectiveLine::new(&m);
    let report = PointsReport {
        d,
        count: line.len(),
        formula: projline::point_count_formula(&m).ok(),
        points: line.points(),
    };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("index,b,c,size\n");
            for (i, p) in line.points().iter().enumerate() {
                let g = p.generator();
                writeln!(out, "{i},{},{},{}", g.b, g.c, p.members().len()).unwrap();
            }
            out
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "points of P1(Z_{d}) (enumerated): {}", report.count).unwrap();
            match report.formula {
                Some(f) => writeln!(out, "points of P1(Z_{d}) (formula prod (p+1)): {f}").unwrap(),
                None => writeln!(out, "formula: requires square-free d").unwrap(),
            }
            for p in line.points() {
                writeln!(out, "  {} = {{{}}}", p.label(&m), join_vectors(p.members())).unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct PrettyOps {
    left: String,
    right: String,
    commutator: String,
}

#[derive(Serialize)]
struct CommuteReport {
    d: u64,
    left: PauliRecord,
    right: PauliRecord,
    exponent: u64,
    commute: bool,
    matrix_commute: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pretty: Option<PrettyOps>,
}

fn operator(e: [u64; 3], m: &Modulus) -> Result<PauliOp, String> {
    PauliOp::reduced(e[0], e[1], e[2], m).map_err(|e| e.to_string())
}

fn render(w: PauliOp, pretty: bool) -> String {
    if pretty {
        w.to_string()
    } else {
        format!("({},{},{})", w.a, w.b, w.c)
    }
}

fn commute(cli: &Cli, d: u64, left: [u64; 3], right: [u64; 3]) -> CliResult {
    let m = modulus(d)?;
    let (w, w2) = (operator(left, &m)?, operator(right, &m)?);
    let k = pauli::commutator(w, w2, &m);
    let commute = pauli::commutes(w, w2, &m);
    let matrix_commute = cli.matrix.then(|| {
        let (mw, mw2) = (pauli::to_matrix(w, &m), pauli::to_matrix(w2, &m));
        mw.mul(&mw2) == mw2.mul(&mw)
    });
    let report = CommuteReport {
        d,
        left: w.record(&m),
        right: w2.record(&m),
        exponent: k.a,
        commute,
        matrix_commute,
        pretty: cli.pretty.then(|| PrettyOps {
            left: w.to_string(),
            right: w2.to_string(),
            commutator: k.to_string(),
        }),
    };
    let code = if matrix_commute.is_some_and(|mc| mc != commute) { 1 } else { 0 };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mc = matrix_commute.map(|b| b.to_string()).unwrap_or_default();
            format!("exponent,commute,matrix_commute\n{},{},{}\n", k.a, commute, mc)
        }
        _ => {
            let mut out = String::new();
            writeln!(
                out,
                "[{}, {}] = {}",
                render(w, cli.pretty),
                render(w2, cli.pretty),
                if cli.pretty { k.to_string() } else { format!("w^{} I", k.a) }
            )
            .unwrap();
            writeln!(out, "exponent: {}", k.a).unwrap();
            writeln!(out, "commute: {}", yes_no(commute)).unwrap();
            if let Some(mc) = matrix_commute {
                let verdict = if mc == commute { "agrees" } else { "DISAGREES" };
                writeln!(out, "matrix oracle: {verdict} (matrices commute: {})", yes_no(mc)).unwrap();
            }
            out
        }
    };
    Ok(Output { text, code })
}

#[derive(Serialize)]
struct CountReport {
    d: u64,
    b: u64,
    c: u64,
    index_set: Vec<u64>,
    perp_size: u64,
    formula: u64,
    brute: Option<u64>,
}

fn count(cli: &Cli, d: u64, b: u64, c: u64) -> CliResult {
    let m = modulus(d)?;
    if !m.is_square_free() {
        return Err(format!(
            "count requires a square-free modulus; d = {d} = {}",
            factorization(&m)
        ));
    }
    let v = vector(b, c, &m)?;
    let w = PauliOp::new(0, b, c);
    let formula = pauli::commuting_count(w, &m).map_err(|e| e.to_string())?;
    let brute_allowed = d <= pauli::MAX_CLOSURE_D;
    let brute = (cli.brute && brute_allowed).then(|| pauli::commuting_count_by_enumeration(w, &m));
    let report = CountReport {
        d,
        b,
        c,
        index_set: projline::index_set_primes(v, &m).map_err(|e| e.to_string())?,
        perp_size: projline::perp_size_formula(v, &m).map_err(|e| e.to_string())?,
        formula,
        brute,
    };
    let code = if brute.is_some_and(|n| n != formula) { 1 } else { 0 };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => format!(
            "formula,brute\n{},{}\n",
            formula,
            brute.map(|n| n.to_string()).unwrap_or_default()
        ),
        _ => {
            let mut out = String::new();
            let k: Vec<_> = report.index_set.iter().map(u64::to_string).collect();
            writeln!(out, "operator: {}", render(w, cli.pretty)).unwrap();
            writeln!(out, "index set K (primes): {{{}}}", k.join(", ")).unwrap();
            writeln!(out, "perp-set size (formula): {}", report.perp_size).unwrap();
            writeln!(out, "commuting operators (formula d * |perp|): {formula}").unwrap();
            match brute {
                Some(n) => writeln!(out, "commuting operators (enumerated over {} operators): {n}", d.pow(3)).unwrap(),
                None if cli.brute => writeln!(
                    out,
                    "commuting operators (enumerated): skipped, d > {}",
                    pauli::MAX_CLOSURE_D
                )
                .unwrap(),
                None => {}
            }
            out
        }
    };
    Ok(Output { text, code })
}

fn graph(cli: &Cli, d: u64) -> CliResult {
    let m = modulus(d)?;
    let g = neighbour_graph(&m);
    let text = match cli.format {
        Format::Dot => g.to_dot(),
        Format::Json => json(&g),
        Format::Csv => return Err("graph supports --format dot, json or text".into()),
        Format::Text => {
            let mut adj = vec![Vec::new(); g.vertices().len()];
            for &(i, j) in g.edges() {
                adj[i].push(j);
                adj[j].push(i);
            }
            let mut out = String::new();
            writeln!(out, "neighbour graph of P1(Z_{d}): {} vertices, {} edges", g.vertices().len(), g.edges().len())
                .unwrap();
            for (i, v) in g.vertices().iter().enumerate() {
                adj[i].sort_unstable();
                let labels: Vec<_> = adj[i].iter().map(|&j| format!("Z{d}{}", g.vertices()[j])).collect();
                writeln!(out, "  Z{d}{v}: {}", labels.join(" ")).unwrap();
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn verify(cli: &Cli, d: u64) -> CliResult {
    let m = modulus(d)?;
    let checks: Vec<Check> = match &cli.checks {
        Some(names) => names
            .iter()
            .map(|n| n.trim().parse::<Check>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?,
        None => Check::ALL.to_vec(),
    };
    let harness = match cli.fault {
        None => Harness::default(),
        Some(Fault::FlipSign) => Harness::with_form(faults::flipped_sign),
        Some(Fault::Symmetric) => Harness::with_form(faults::symmetric),
    };
    let report = harness.verify(&m, &checks);
    let code = if report.all_passed { 0 } else { 1 };
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("name,status,scope\n");
            for c in &report.checks {
                let status = serde_json::to_value(c.status).unwrap();
                writeln!(out, "{},{},\"{}\"", c.name, status.as_str().unwrap(), c.scope).unwrap();
            }
            out
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "verification for d = {d}").unwrap();
            for c in &report.checks {
                match c.status {
                    Status::Passed => writeln!(out, "PASS {:<16} {}", c.name, c.scope),
                    Status::Skipped => writeln!(
                        out,
                        "SKIP {:<16} {}",
                        c.name,
                        c.reason.as_deref().unwrap_or("")
                    ),
                    Status::Failed => writeln!(
                        out,
                        "FAIL {:<16} {}\n     counterexample: {}",
                        c.name,
                        c.scope,
                        c.counterexample.as_ref().map(|v| v.to_string()).unwrap_or_default()
                    ),
                }
                .unwrap();
            }
            writeln!(out, "result: {}", if report.all_passed { "all passed" } else { "FAILED" }).unwrap();
            out
        }
    };
    Ok(Output { text, code })
}
