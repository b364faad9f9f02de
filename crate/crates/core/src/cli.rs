//! Edge-list and partition file formats, and the `eqdecomp` command line.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! graph 4 undirected
//! 1 2
//! 3 4 2        # optional multiplicity, may be negative
//! ```
//!
//! Partition files list one cell per line, optionally ending in
//! `rep <label>`:
//!
//! ```text
//! 1 2 rep 2
//! 3 4
//! ```
//!
//! Every subcommand prints a [`Report`], as text or with `--json` as a
//! single JSON document. Exit codes: 0 when every verdict passes, 1 when an
//! identity fails, 2 on usage or input errors.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bipoly::BiPoly;
use crate::decomposition::{
    check_representative_independence, deletion_graph, factor_char_poly, intertwines,
    laplacian_factors, similarity_transform,
};
use crate::error::Error;
use crate::graph::{Edge, SignedDigraph};
use crate::join::{
    build_join, check_scaling_identity, join_char_poly, join_quotient, join_zeta_reciprocal,
    teranishi_factor, JoinSpec,
};
use crate::matrix::{matrix_to_strings, rat, Matrix, Rational};
use crate::partition::{check_equitable, coarsest_equitable, Partition};
use crate::poly::UniPoly;
use crate::zeta::{bartholdi_reciprocal, ihara_specialize, zeta_factor};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Significant lines with their one-based line numbers and
/// whitespace-separated tokens tagged with one-based columns.
fn tokenized(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (c, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(c),
                (true, Some(s)) => {
                    tokens.push((s + 1, &body[s..c]));
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_label(tok: (usize, &str), line: usize, n: usize) -> crate::Result<usize> {
    let (col, s) = tok;
    let v: usize = s
        .parse()
        .map_err(|_| parse_err(line, col, format!("expected a vertex label, found `{s}`")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, col, format!("vertex {v} is outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph_file(text: &str) -> crate::Result<SignedDigraph> {
    let mut lines = tokenized(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing `graph <n> <directed|undirected>` header"))?;
    if header[0].1 != "graph" {
        return Err(parse_err(hline, header[0].0, format!("expected `graph`, found `{}`", header[0].1)));
    }
    let n_tok = header
        .get(1)
        .ok_or_else(|| parse_err(hline, header[0].0 + 5, "missing vertex count"))?;
    let n: usize = n_tok
        .1
        .parse()
        .map_err(|_| parse_err(hline, n_tok.0, format!("expected a vertex count, found `{}`", n_tok.1)))?;
    let kind = header
        .get(2)
        .ok_or_else(|| parse_err(hline, n_tok.0 + n_tok.1.len() + 1, "missing `directed` or `undirected`"))?;
    let undirected = match kind.1 {
        "directed" => false,
        "undirected" => true,
        other => {
            return Err(parse_err(
                hline,
                kind.0,
                format!("expected `directed` or `undirected`, found `{other}`"),
            ))
        }
    };
    if let Some(extra) = header.get(3) {
        return Err(parse_err(hline, extra.0, format!("unexpected `{}`", extra.1)));
    }

    let mut edges = Vec::new();
    for (line, toks) in lines {
        if toks.len() < 2 || toks.len() > 3 {
            return Err(parse_err(
                line,
                toks[0].0,
                "expected `<u> <v> [multiplicity]`",
            ));
        }
        let u = parse_label(toks[0], line, n)?;
        let v = parse_label(toks[1], line, n)?;
        let mult = match toks.get(2) {
            None => 1,
            Some(&(col, s)) => {
                let m: i64 = s
                    .parse()
                    .map_err(|_| parse_err(line, col, format!("expected an integer multiplicity, found `{s}`")))?;
                if m == 0 {
                    return Err(parse_err(line, col, "multiplicity must be nonzero"));
                }
                m
            }
        };
        edges.push(Edge::with_multiplicity(u, v, mult));
    }
    SignedDigraph::build(n, &edges, undirected)
}

/// Inverse of [`parse_graph_file`]; symmetric adjacency is written as an
/// undirected graph.
pub fn print_graph(g: &SignedDigraph) -> String {
    let n = g.vertex_count();
    let undirected = g.is_undirected();
    let mut out = format!(
        "graph {n} {}\n",
        if undirected { "undirected" } else { "directed" }
    );
    for u in 0..n {
        for v in 0..n {
            if undirected && v < u {
                continue;
            }
            let m = g.entry(u, v);
            if m.is_integer() && *m != rat(0) {
                if *m == rat(1) {
                    out.push_str(&format!("{} {}\n", u + 1, v + 1));
                } else {
                    out.push_str(&format!("{} {} {}\n", u + 1, v + 1, m));
                }
            }
        }
    }
    out
}

pub fn parse_partition_file(text: &str, n: usize) -> crate::Result<Partition> {
    let mut cells = Vec::new();
    let mut reps = Vec::new();
    for (line, toks) in tokenized(text) {
        let mut cell = Vec::new();
        let mut rep = None;
        let mut i = 0;
        while i < toks.len() {
            if toks[i].1 == "rep" {
                let label = toks
                    .get(i + 1)
                    .ok_or_else(|| parse_err(line, toks[i].0, "`rep` needs a vertex label"))?;
                if rep.is_some() {
                    return Err(parse_err(line, toks[i].0, "more than one `rep` on a line"));
                }
                rep = Some((label.0, parse_label(*label, line, n)?));
                i += 2;
            } else {
                cell.push(parse_label(toks[i], line, n)?);
                i += 1;
            }
        }
        if cell.is_empty() {
            return Err(parse_err(line, toks[0].0, "a cell needs at least one vertex"));
        }
        if let Some((col, r)) = rep {
            if !cell.contains(&r) {
                return Err(parse_err(line, col, format!("representative {} is not in this cell", r + 1)));
            }
        }
        reps.push(rep.map(|(_, r)| r));
        cells.push(cell);
    }
    let pi = Partition::new(n, cells)?;
    let reps: Vec<usize> = reps
        .iter()
        .zip(pi.reps())
        .map(|(given, default)| given.unwrap_or(*default))
        .collect();
    pi.with_reps(reps)
}

/// Inverse of [`parse_partition_file`]; `rep` is written only when it is not
/// the least vertex of its cell.
pub fn print_partition(pi: &Partition) -> String {
    let mut out = String::new();
    for (cell, &rep) in pi.cells().iter().zip(pi.reps()) {
        let labels: Vec<String> = cell.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&labels.join(" "));
        if rep != cell[0] {
            out.push_str(&format!(" rep {}", rep + 1));
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub u: u32,
    pub t: u32,
    pub coefficient: String,
}

/// One named value in a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Item {
    Matrix {
        name: String,
        rows: Vec<Vec<String>>,
    },
    Poly {
        name: String,
        /// Ascending.
        coefficients: Vec<String>,
        display: String,
        factored: Option<String>,
    },
    #[serde(rename = "bipoly")]
    BiPoly {
        name: String,
        /// Sorted by `(t, u)` degree.
        terms: Vec<Term>,
        display: String,
    },
    Partition {
        name: String,
        cells: Vec<Vec<usize>>,
        representatives: Vec<usize>,
    },
    Value {
        name: String,
        value: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Vec<Item>,
    pub items: Vec<Item>,
    pub verdicts: Vec<Verdict>,
    pub elapsed_ms: f64,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            input: Vec::new(),
            items: Vec::new(),
            verdicts: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    fn value(&mut self, name: &str, value: impl ToString) {
        self.items.push(Item::Value {
            name: name.into(),
            value: value.to_string(),
        });
    }

    fn matrix(&mut self, name: &str, m: &Matrix) {
        self.items.push(Item::Matrix {
            name: name.into(),
            rows: matrix_to_strings(m),
        });
    }

    fn poly(&mut self, name: &str, p: &UniPoly) {
        self.poly_factored(name, p, None);
    }

    fn poly_in(&mut self, name: &str, p: &UniPoly, var: &str) {
        self.items.push(Item::Poly {
            name: name.into(),
            coefficients: p.coeff_strings(),
            display: p.display_in(var),
            factored: None,
        });
    }

    fn poly_factored(&mut self, name: &str, p: &UniPoly, factors: Option<&[&UniPoly]>) {
        self.items.push(Item::Poly {
            name: name.into(),
            coefficients: p.coeff_strings(),
            display: p.to_string(),
            factored: factors.map(factored),
        });
    }

    fn bipoly(&mut self, name: &str, p: &BiPoly) {
        self.items.push(Item::BiPoly {
            name: name.into(),
            terms: p
                .term_table()
                .into_iter()
                .map(|(u, t, coefficient)| Term { u, t, coefficient })
                .collect(),
            display: p.to_string(),
        });
    }

    fn partition(&mut self, name: &str, pi: &Partition) {
        self.items.push(partition_item(name, pi));
    }

    fn pass(&mut self, name: &str) {
        self.verdicts.push(Verdict {
            name: name.into(),
            passed: true,
            witness: None,
        });
    }

    fn fail(&mut self, name: &str, witness: String) {
        self.verdicts.push(Verdict {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        });
    }

    /// Records a verdict from an identity-checking library call. Input
    /// errors are passed through.
    fn check<T>(&mut self, name: &str, r: crate::Result<T>) -> Result<Option<T>, Failure> {
        match r {
            Ok(v) => {
                self.pass(name);
                Ok(Some(v))
            }
            Err(e) if is_identity_failure(&e) => {
                self.fail(name, e.to_string());
                Ok(None)
            }
            Err(e) => Err(Failure::Input(e.to_string())),
        }
    }

    fn check_bool(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if !self.input.is_empty() {
            out.push_str("input:\n");
            for item in &self.input {
                render_item(&mut out, item, "  ");
            }
        }
        for item in &self.items {
            render_item(&mut out, item, "");
        }
        for v in &self.verdicts {
            match &v.witness {
                None => out.push_str(&format!("PASS {}\n", v.name)),
                Some(w) => out.push_str(&format!("FAIL {}: {w}\n", v.name)),
            }
        }
        out.push_str(&format!("elapsed_ms: {:.3}\n", self.elapsed_ms));
        out
    }
}

fn partition_item(name: &str, pi: &Partition) -> Item {
    Item::Partition {
        name: name.into(),
        cells: pi
            .cells()
            .iter()
            .map(|c| c.iter().map(|v| v + 1).collect())
            .collect(),
        representatives: pi.reps().iter().map(|v| v + 1).collect(),
    }
}

fn factored(factors: &[&UniPoly]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|f| **f != &UniPoly::one())
        .map(|f| format!("({f})"))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" · ")
    }
}

fn join_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn render_item(out: &mut String, item: &Item, indent: &str) {
    match item {
        Item::Value { name, value } => out.push_str(&format!("{indent}{name}: {value}\n")),
        Item::Matrix { name, rows } => {
            out.push_str(&format!("{indent}{name}:\n"));
            for r in rows {
                out.push_str(&format!("{indent}  [{}]\n", r.join(", ")));
            }
        }
        Item::Poly {
            name,
            coefficients,
            display,
            factored,
        } => {
            out.push_str(&format!("{indent}{name}: {display}\n"));
            out.push_str(&format!("{indent}  coefficients: [{}]\n", coefficients.join(", ")));
            if let Some(f) = factored {
                out.push_str(&format!("{indent}  factored: {f}\n"));
            }
        }
        Item::BiPoly { name, terms, display } => {
            out.push_str(&format!("{indent}{name}: {display}\n"));
            out.push_str(&format!("{indent}  u t coefficient\n"));
            for term in terms {
                out.push_str(&format!("{indent}  {} {} {}\n", term.u, term.t, term.coefficient));
            }
        }
        Item::Partition {
            name,
            cells,
            representatives,
        } => {
            out.push_str(&format!("{indent}{name}:\n"));
            for (c, r) in cells.iter().zip(representatives) {
                out.push_str(&format!("{indent}  {{{}}} rep {r}\n", join_list(c)));
            }
        }
    }
}

fn is_identity_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::Consistency(_) | Error::InexactDivision { .. } | Error::BoundViolation { .. }
    )
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "eqdecomp",
    version,
    about = "Exact quotient/deletion factorizations of equitably partitioned graphs"
)]
struct Cli {
    /// Print the report as one JSON document.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct PartitionArgs {
    /// Graph file.
    graph: PathBuf,
    /// Partition file; the coarsest equitable partition when omitted.
    partition: Option<PathBuf>,
    /// Representatives, one label per cell, e.g. `--reps 2,4`.
    #[arg(long, value_delimiter = ',')]
    reps: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coarsest equitable partition refining a seed.
    Refine {
        /// Graph file.
        graph: PathBuf,
        /// `trivial`, `singleton:<v,...>`, or a partition file.
        #[arg(long, default_value = "trivial")]
        seed: String,
    },
    /// Quotient matrix of an equitable partition.
    Quotient(PartitionArgs),
    /// Deletion matrix and deletion graph.
    Delete(PartitionArgs),
    /// Quotient and deletion factors of the characteristic polynomial.
    Factor(PartitionArgs),
    /// Laplacian (or signless Laplacian) factors.
    Laplacian {
        #[command(flatten)]
        args: PartitionArgs,
        #[arg(long)]
        signless: bool,
    },
    /// Bartholdi zeta reciprocal.
    Zeta {
        /// Graph file; undirected, loopless, unsigned and connected.
        graph: PathBuf,
    },
    /// Quotient and deletion factors of the Bartholdi zeta reciprocal.
    ZetaFactor(PartitionArgs),
    /// Closed forms for a generalized join H[X1, ..., Xr].
    Join {
        /// Simple undirected graph H on r vertices.
        h: PathBuf,
        /// One regular graph file per vertex of H.
        #[arg(required = true)]
        components: Vec<PathBuf>,
        /// Coefficient of the adjacency matrix.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
        /// Diagonal value per component, e.g. `--diag 3,2`; zeros by default.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        diag: Option<Vec<String>>,
    },
    /// Join factorization over per-component equitable partitions.
    Teranishi {
        /// Simple undirected graph H on r vertices.
        h: PathBuf,
        /// One graph file per vertex of H.
        #[arg(required = true)]
        components: Vec<PathBuf>,
        /// One partition file or `auto` per component; a lone `auto` covers all.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<String>>,
    },
    /// Run every applicable identity check.
    Verify {
        /// Graph file.
        graph: PathBuf,
        /// Partition file; the coarsest equitable partition when omitted.
        partition: Option<PathBuf>,
    },
}

/// Result of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name), runs the command and renders
/// its report.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.to_text()
            };
            Outcome {
                code: if report.all_passed() { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Input(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: crate::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SignedDigraph, Failure> {
    with_path(path, parse_graph_file(&read(path)?))
}

fn graph_input(report: &mut Report, name: &str, path: &Path, g: &SignedDigraph) {
    report.input.push(Item::Value {
        name: name.into(),
        value: format!(
            "{} ({} vertices, {})",
            path.display(),
            g.vertex_count(),
            if g.is_undirected() { "undirected" } else { "directed" }
        ),
    });
    report.input.push(Item::Matrix {
        name: format!("{name} adjacency"),
        rows: matrix_to_strings(g.adjacency()),
    });
}

fn parse_seed(seed: &str, n: usize) -> Result<Partition, Failure> {
    if seed == "trivial" {
        return Ok(Partition::trivial(n));
    }
    if let Some(list) = seed.strip_prefix("singleton:") {
        let mut singled = Vec::new();
        for s in list.split(',') {
            let v: usize = s
                .trim()
                .parse()
                .map_err(|_| Failure::Input(format!("bad vertex `{s}` in --seed")))?;
            if v == 0 || v > n {
                return Err(Failure::Input(format!("seed vertex {v} is outside 1..={n}")));
            }
            if !singled.contains(&(v - 1)) {
                singled.push(v - 1);
            }
        }
        let mut cells: Vec<Vec<usize>> = singled.iter().map(|&v| vec![v]).collect();
        let rest: Vec<usize> = (0..n).filter(|v| !singled.contains(v)).collect();
        if !rest.is_empty() {
            cells.push(rest);
        }
        return Ok(Partition::new(n, cells)?);
    }
    let path = Path::new(seed);
    with_path(path, parse_partition_file(&read(path)?, n))
}

/// Loads the graph and partition (refining from the trivial seed when no file
/// is given), applying `--reps`.
fn load_pair(report: &mut Report, args: &PartitionArgs) -> Result<(SignedDigraph, Partition), Failure> {
    let x = load_graph(&args.graph)?;
    graph_input(report, "graph", &args.graph, &x);
    let n = x.vertex_count();
    let mut pi = match &args.partition {
        Some(p) => with_path(p, parse_partition_file(&read(p)?, n))?,
        None => coarsest_equitable(&x, &Partition::trivial(n))?,
    };
    if let Some(reps) = &args.reps {
        if reps.iter().any(|&r| r == 0 || r > n) {
            return Err(Failure::Input(format!("--reps labels must lie in 1..={n}")));
        }
        pi = pi.with_reps(reps.iter().map(|r| r - 1).collect())?;
    }
    let name = if args.partition.is_some() {
        "partition"
    } else {
        "partition (coarsest equitable)"
    };
    report.input.push(partition_item(name, &pi));
    Ok((x, pi))
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Refine { graph, seed } => refine(graph, seed),
        Command::Quotient(args) => quotient(args),
        Command::Delete(args) => delete(args),
        Command::Factor(args) => factor(args),
        Command::Laplacian { args, signless } => laplacian(args, *signless),
        Command::Zeta { graph } => zeta(graph),
        Command::ZetaFactor(args) => zeta_factor_cmd(args),
        Command::Join {
            h,
            components,
            alpha,
            diag,
        } => join(h, components, alpha, diag.as_deref()),
        Command::Teranishi { h, components, parts } => teranishi(h, components, parts.as_deref()),
        Command::Verify { graph, partition } => verify(graph, partition.as_deref()),
    }
}

fn refine(path: &Path, seed: &str) -> Result<Report, Failure> {
    let mut report = Report::new("refine");
    let x = load_graph(path)?;
    graph_input(&mut report, "graph", path, &x);
    let seed_pi = parse_seed(seed, x.vertex_count())?;
    report.input.push(partition_item("seed", &seed_pi));
    let pi = coarsest_equitable(&x, &seed_pi)?;
    report.partition("coarsest equitable partition", &pi);
    let q = check_equitable(x.adjacency(), &pi);
    if let Ok(q) = &q {
        report.matrix("quotient matrix", q);
    }
    report.check_bool("result is equitable", q.is_ok(), || q.unwrap_err().to_string());
    report.check_bool("result refines the seed", pi.refines(&seed_pi), String::new);
    Ok(report)
}

fn quotient(args: &PartitionArgs) -> Result<Report, Failure> {
    let mut report = Report::new("quotient");
    let (x, pi) = load_pair(&mut report, args)?;
    let q = check_equitable(x.adjacency(), &pi)?;
    report.matrix("quotient matrix", &q);
    report.check_bool("M P = P (M/pi)", intertwines(x.adjacency(), &pi, &q), || {
        "the characteristic matrix does not intertwine".into()
    });
    Ok(report)
}

fn delete(args: &PartitionArgs) -> Result<Report, Failure> {
    let mut report = Report::new("delete");
    let (x, pi) = load_pair(&mut report, args)?;
    let labels: Vec<usize> = pi.non_representatives().iter().map(|v| v + 1).collect();
    report.value("non-representative vertices", join_list(&labels));
    if let Some(del) = report.check("deletion graph adjacency equals deletion matrix", deletion_graph(&x, &pi))? {
        report.matrix("deletion matrix", &del.matrix);
        let g = del.graph.expect("deletion_graph builds the graph");
        report.value("deletion graph", print_graph(&g).trim_end().replace('\n', "; "));
    }
    Ok(report)
}

fn report_factors(report: &mut Report, q: &UniPoly, d: &UniPoly, full_name: &str) {
    report.poly("quotient factor", q);
    report.poly("deletion factor", d);
    report.poly_factored(full_name, &(q * d), Some(&[q, d]));
}

fn factor(args: &PartitionArgs) -> Result<Report, Failure> {
    let mut report = Report::new("factor");
    let (x, pi) = load_pair(&mut report, args)?;
    let m = x.adjacency();
    let q = check_equitable(m, &pi)?;
    report.matrix("quotient matrix", &q);
    if let Some(f) = report.check("quotient factor times deletion factor equals φ(A)", factor_char_poly(m, &pi))? {
        report_factors(&mut report, &f.quotient, &f.deletion, "characteristic polynomial");
    }
    Ok(report)
}

fn laplacian(args: &PartitionArgs, signless: bool) -> Result<Report, Failure> {
    let mut report = Report::new(if signless { "laplacian --signless" } else { "laplacian" });
    let (x, pi) = load_pair(&mut report, args)?;
    let name = if signless {
        "signless Laplacian factors multiply to φ(D + A)"
    } else {
        "Laplacian factors multiply to φ(D - A)"
    };
    if let Some(f) = report.check(name, laplacian_factors(&x, &pi, signless))? {
        report_factors(&mut report, &f.quotient, &f.deletion, "characteristic polynomial");
    }
    Ok(report)
}

fn zeta(path: &Path) -> Result<Report, Failure> {
    let mut report = Report::new("zeta");
    let x = load_graph(path)?;
    graph_input(&mut report, "graph", path, &x);
    let z = bartholdi_reciprocal(&x)?;
    report.value("edges", z.edges);
    report.value("vertices", z.vertices);
    report.bipoly("Z(u, t)^-1", &z.value);
    report.poly_in("Z(0, t)^-1", &ihara_specialize(&z), "t");
    let at_zero = z.value.specialize_t(0);
    report.check_bool("Z(u, 0)^-1 = 1", at_zero == UniPoly::one(), || format!("got {at_zero}"));
    Ok(report)
}

fn zeta_factor_cmd(args: &PartitionArgs) -> Result<Report, Failure> {
    let mut report = Report::new("zeta-factor");
    let (x, pi) = load_pair(&mut report, args)?;
    if let Some(f) = report.check("s1^(m-n) · quotient · deletion equals Z^-1", zeta_factor(&x, &pi))? {
        report.value("s1 exponent", f.s1_exponent);
        report.bipoly("quotient factor", &f.quotient);
        report.bipoly("deletion factor", &f.deletion);
        report.bipoly("Z(u, t)^-1", &f.product()?);
    }
    Ok(report)
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Failure::Input(format!("`{s}` is not a rational number")))
}

fn load_components(report: &mut Report, h: &Path, components: &[PathBuf]) -> Result<(SignedDigraph, Vec<SignedDigraph>), Failure> {
    let hg = load_graph(h)?;
    graph_input(report, "H", h, &hg);
    let mut xs = Vec::new();
    for (i, p) in components.iter().enumerate() {
        let g = load_graph(p)?;
        graph_input(report, &format!("X{}", i + 1), p, &g);
        xs.push(g);
    }
    Ok((hg, xs))
}

fn join(h: &Path, components: &[PathBuf], alpha: &str, diag: Option<&[String]>) -> Result<Report, Failure> {
    let mut report = Report::new("join");
    let (hg, xs) = load_components(&mut report, h, components)?;
    let spec = JoinSpec::new(hg, xs)?;
    let alpha = parse_rational(alpha)?;
    let d: Vec<Rational> = match diag {
        Some(ds) => ds.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?,
        None => vec![rat(0); spec.components().len()],
    };
    report.input.push(Item::Value { name: "alpha".into(), value: alpha.to_string() });
    report.input.push(Item::Value { name: "diagonal".into(), value: join_list(&d) });

    let (x, pi) = build_join(&spec)?;
    report.value("joined graph", print_graph(&x).trim_end().replace('\n', "; "));
    report.partition("component partition", &pi);
    let q = join_quotient(&spec);
    report.matrix("quotient matrix", &q);
    let assembled = check_equitable(x.adjacency(), &pi);
    report.check_bool(
        "closed-form quotient equals the quotient of the assembled join",
        assembled.as_ref().map(|a| **a == *q).unwrap_or(false),
        || format!("assembled quotient: {assembled:?}"),
    );

    if let Some(f) = report.check("both closed forms equal φ(alpha A + D)", join_char_poly(&spec, &alpha, &d))? {
        report.poly("quotient factor", &f.quotient_factor);
        report.poly("det(-alpha A(H) + Δ(x))", &f.h_form_det);
        for (i, c) in f.component_factors.iter().enumerate() {
            report.poly(&format!("component factor {}", i + 1), c);
        }
        let mut parts: Vec<&UniPoly> = vec![&f.quotient_factor];
        parts.extend(f.component_factors.iter());
        report.poly_factored("characteristic polynomial", &f.via_quotient, Some(&parts));
    }

    if x.is_connected() {
        if let Some(z) = report.check("both zeta closed forms equal Z^-1 and gamma identities hold", join_zeta_reciprocal(&spec))? {
            report.value("s1 exponent", z.s1_exponent);
            for (i, g) in z.gamma.iter().enumerate() {
                report.bipoly(&format!("gamma {}", i + 1), g);
            }
            report.bipoly("Z(u, t)^-1", &z.via_quotient);
        }
        let grid: Vec<(Rational, Rational)> = (0..4)
            .flat_map(|u| (0..4).map(move |t| (crate::matrix::ratio(u, 2), crate::matrix::ratio(t, 3))))
            .collect();
        let bad = check_scaling_identity(&spec, &grid)?;
        report.check_bool("det((ρ'_ij n_j)) = (prod n_i) det(ρ'_ij) on a grid", bad.is_none(), || {
            format!("fails at {bad:?}")
        });
    } else {
        report.value("zeta", "skipped: joined graph is disconnected");
    }
    Ok(report)
}

fn teranishi(h: &Path, components: &[PathBuf], parts: Option<&[String]>) -> Result<Report, Failure> {
    let mut report = Report::new("teranishi");
    let (hg, xs) = load_components(&mut report, h, components)?;
    let parts = parts.filter(|p| !matches!(p, [only] if only == "auto"));
    if let Some(p) = parts {
        if p.len() != xs.len() {
            return Err(Failure::Input(format!("{} partitions for {} components", p.len(), xs.len())));
        }
    }
    let mut pis = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        let spec = parts.map(|p| p[i].as_str()).unwrap_or("auto");
        let pi = if spec == "auto" {
            coarsest_equitable(x, &Partition::trivial(x.vertex_count()))?
        } else {
            let path = Path::new(spec);
            with_path(path, parse_partition_file(&read(path)?, x.vertex_count()))?
        };
        report.input.push(partition_item(&format!("pi{}", i + 1), &pi));
        pis.push(pi);
    }
    if let Some(f) = report.check("φ(A(X/pi)) · prod φ(A(X_i \\ pi_i)) equals φ(A(X))", teranishi_factor(&hg, &xs, &pis))? {
        report.partition("concatenated partition", &f.partition);
        report.poly("quotient factor", &f.quotient_factor);
        for (i, c) in f.component_deletion_factors.iter().enumerate() {
            report.poly(&format!("deletion factor {}", i + 1), c);
        }
        let mut parts: Vec<&UniPoly> = vec![&f.quotient_factor];
        parts.extend(f.component_deletion_factors.iter());
        report.poly_factored("characteristic polynomial", &f.product(), Some(&parts));
    }
    Ok(report)
}

/// Caps the exhaustive representative sweep.
const MAX_REP_CHOICES: usize = 100_000;

fn verify(path: &Path, partition: Option<&Path>) -> Result<Report, Failure> {
    let mut report = Report::new("verify");
    let args = PartitionArgs {
        graph: path.to_path_buf(),
        partition: partition.map(Path::to_path_buf),
        reps: None,
    };
    let (x, pi) = load_pair(&mut report, &args)?;
    let m = x.adjacency();
    let q = match check_equitable(m, &pi) {
        Ok(q) => {
            report.pass("partition is equitable");
            q
        }
        Err(e) => {
            report.fail("partition is equitable", e.to_string());
            return Ok(report);
        }
    };
    report.matrix("quotient matrix", &q);
    report.check_bool("M P = P (M/pi)", intertwines(m, &pi, &q), || "intertwining fails".into());
    report.check("conjugation by (P, Q) is block upper triangular", similarity_transform(m, &pi))?;
    report.check("deletion graph adjacency equals deletion matrix", deletion_graph(&x, &pi))?;
    if let Some(f) = report.check("quotient factor times deletion factor equals φ(A)", factor_char_poly(m, &pi))? {
        report_factors(&mut report, &f.quotient, &f.deletion, "characteristic polynomial");
    }
    let choices = pi.representative_choice_count();
    if choices <= MAX_REP_CHOICES {
        report.value("representative choices", choices);
        report.check(
            "deletion factor is independent of the representatives",
            check_representative_independence(m, &pi),
        )?;
    } else {
        report.value("representative choices", format!("{choices} (sweep skipped)"));
    }
    if x.is_undirected() {
        report.check("Laplacian factors multiply to φ(D - A)", laplacian_factors(&x, &pi, false))?;
        report.check("signless Laplacian factors multiply to φ(D + A)", laplacian_factors(&x, &pi, true))?;
        if x.is_unsigned() && !x.has_loops() && x.is_connected() {
            report.check("s1^(m-n) · quotient · deletion equals Z^-1", zeta_factor(&x, &pi))?;
        }
    }
    Ok(report)
}
