use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kordered::constructive::{
    construct_bracelet_cycle, construct_directed_hamiltonian, construct_g_hamiltonian, construct_p_cycle,
    StarCertificate,
};
use kordered::generators::FamilyId;
use kordered::io::{write_bracelet, write_edge_list};
use kordered::linkage::{greedy_edge_tour, greedy_undirected, greedy_vertex_cycle, GreedyOutput, UndirectedTarget};
use kordered::metrics::{
    bracelet_degree_audit, check_diameter_bound, check_directed_necessary, connectivity, ConnectivityReport,
    DegreeAudit, DiameterBoundReport, DirectedNecessaryReport,
};
use kordered::oracle::{
    neighborhood_obstruction, parity_audit, verdict, ObstructionCertificate, ObstructionScope, OracleOptions,
    OrderMode, ParityReport, Status, Witness, DEFAULT_BUDGET,
};
use kordered::sampling::Sampler;
use kordered::suite::{run_suite, CriterionReport, Outcome, SuiteOptions};
use kordered::{verify_ordered_cycle, Adjacency, AnyBracelet, AnyGraph, EdgeSequence, MarkSequence, OrderedCycle};
use serde::Serialize;

mod source;

use source::{GraphArgs, Loaded};

const SCHEMA_VERSION: u32 = 1;

const EXIT_FALSIFIED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_IO: u8 = 4;
const EXIT_PRECONDITION: u8 = 5;

/// Ordered cycles and tours in bracelet graphs: generate, construct, verify, analyse.
#[derive(Debug, Parser)]
#[command(name = "kordered", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Search-node budget per individual search.
    #[arg(long, global = true, env = "KORDERED_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Seed for sampled marks and instances (ChaCha8).
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,

    /// Worker threads; 1 disables parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph in an interchange format.
    Generate(GenerateArgs),
    /// Build an ordered cycle through the given marks with the family's constructor.
    Construct(ConstructArgs),
    /// Exhaustively decide whether the graph is k-ordered.
    Verify(VerifyArgs),
    /// Connectivity, diameter and the bound checks.
    Analyze(AnalyzeArgs),
    /// Greedy connectivity-gated tour or cycle construction.
    Tour(TourArgs),
    /// Run the acceptance matrix.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Emit {
    EdgeList,
    Bracelet,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = Emit::EdgeList)]
    emit: Emit,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    marks: Vec<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Ordered,
    OrderedHam,
    EdgeOrdered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Expect {
    Holds,
    Fails,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Number of marks.
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Mode::Ordered)]
    mode: Mode,
    /// Shorthand for --mode ordered-ham.
    #[arg(long)]
    ham: bool,
    /// Outcome that counts as success for the exit code.
    #[arg(long, value_enum, default_value_t = Expect::Holds)]
    expect: Expect,
    /// Enumerate every sequence instead of one per rotation/reflection class.
    #[arg(long)]
    no_symmetry: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Largest order checked against the diameter bound (0 skips the oracle).
    #[arg(long, default_value_t = 4)]
    max_order: usize,
    /// k for the degree screen (bracelets) or the directed necessary conditions.
    #[arg(long)]
    audit_k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TourMode {
    Edge,
    Vertex,
}

#[derive(Debug, Args)]
struct TourArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum)]
    mode: TourMode,
    /// Number of marked vertices or edges.
    #[arg(long)]
    order: usize,
    /// Marked vertices (vertex mode); sampled from the seed when absent.
    #[arg(long, value_delimiter = ',')]
    marks: Vec<usize>,
    /// Marked edges as u-v pairs (edge mode); sampled from the seed when absent.
    #[arg(long, value_delimiter = ',', value_parser = parse_edge)]
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Args)]
struct SuiteArgs {
    /// Run only criteria whose id, name or tag matches.
    #[arg(long)]
    only: Option<String>,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once('-').ok_or_else(|| format!("expected u-v, got `{s}`"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((num(u)?, num(v)?))
}

/// An error together with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self { code: EXIT_IO, message: message.into() }
    }
}

impl From<kordered::Error> for Failure {
    fn from(e: kordered::Error) -> Self {
        use kordered::Error as E;
        let code = match &e {
            E::Precondition(_) => EXIT_PRECONDITION,
            E::ResourceExceeded { .. } => EXIT_RESOURCE,
            E::Parse { .. } => EXIT_IO,
            E::Internal(_) => EXIT_FALSIFIED,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

struct Ctx {
    budget: u64,
    seed: u64,
    parallel: bool,
    format: Format,
}

impl Ctx {
    fn emit<T: Serialize>(&self, command: &str, body: &T, human: impl FnOnce(&T) -> String) {
        match self.format {
            Format::Json => {
                let env = Envelope { schema_version: SCHEMA_VERSION, command, body };
                let text = serde_json::to_string_pretty(&env).expect("reports serialise");
                // a closed pipe (e.g. `| head`) is not an error worth reporting
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
            Format::Human => {
                let _ = write!(std::io::stdout().lock(), "{}", human(body));
            }
        }
    }

    fn oracle(&self, symmetry_reduction: bool) -> OracleOptions {
        OracleOptions { budget: self.budget, symmetry_reduction, parallel: self.parallel }
    }
}

#[derive(Serialize)]
struct GraphSummary {
    label: String,
    vertices: usize,
    edges: usize,
    directed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    part_sizes: Option<Vec<usize>>,
}

impl GraphSummary {
    fn of(loaded: &Loaded) -> Self {
        let g = loaded.graph.as_dyn();
        let part_sizes = loaded.bracelet.as_ref().map(|b| b.spec().part_sizes().to_vec());
        Self {
            label: loaded.label.clone(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            directed: g.is_directed(),
            part_sizes,
        }
    }

    fn line(&self) -> String {
        let kind = if self.directed { "arcs" } else { "edges" };
        let mut s = format!("graph: {} ({} vertices, {} {kind})", self.label, self.vertices, self.edges);
        if let Some(p) = &self.part_sizes {
            let _ = write!(s, ", parts {p:?}");
        }
        s.push('\n');
        s
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        // fails only if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let ctx = Ctx { budget: cli.budget, seed: cli.seed, parallel: cli.threads != Some(1), format: cli.format };
    let result = match &cli.command {
        Command::Generate(a) => generate(&ctx, a),
        Command::Construct(a) => construct(&ctx, a),
        Command::Verify(a) => verify(&ctx, a),
        Command::Analyze(a) => analyze(&ctx, a),
        Command::Tour(a) => tour(&ctx, a),
        Command::Suite(a) => suite(&ctx, a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct GenerateReport {
    graph: GraphSummary,
    content: String,
}

fn generate(ctx: &Ctx, a: &GenerateArgs) -> Result<u8, Failure> {
    let loaded = a.graph.load()?;
    let content = match a.emit {
        Emit::EdgeList => write_edge_list(loaded.graph.as_dyn()),
        Emit::Bracelet => {
            let b = loaded.bracelet.as_ref().ok_or_else(|| Failure::usage("--emit bracelet needs a bracelet source"))?;
            write_bracelet(b.spec(), b.is_directed())
        }
    };
    if let Some(path) = &a.out {
        std::fs::write(path, &content).map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))?;
        return Ok(0);
    }
    let report = GenerateReport { graph: GraphSummary::of(&loaded), content };
    ctx.emit("generate", &report, |r| r.content.clone());
    Ok(0)
}

#[derive(Serialize)]
struct ConstructReport {
    graph: GraphSummary,
    builder: &'static str,
    marks: MarkSequence,
    cycle: Vec<usize>,
    length: usize,
    hamiltonian: bool,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    crossings: Option<StarCertificate>,
}

fn construct(ctx: &Ctx, a: &ConstructArgs) -> Result<u8, Failure> {
    let loaded = a.graph.load()?;
    let n = loaded.graph.as_dyn().vertex_count();
    let marks = MarkSequence::new(a.marks.clone(), n)?;
    let bracelet = loaded.bracelet.as_ref().ok_or_else(|| Failure::usage("construct needs a bracelet source"))?;
    let (builder, cycle, crossings): (_, OrderedCycle, _) = match (bracelet, a.graph.family) {
        (AnyBracelet::Directed(b), _) => ("directed grid", construct_directed_hamiltonian(b, &marks)?, None),
        (AnyBracelet::Undirected(b), Some(FamilyId::GUniform)) => {
            let (c, star) = construct_g_hamiltonian(b, &marks)?;
            ("uniform hamiltonian", c, Some(star))
        }
        (AnyBracelet::Undirected(b), Some(FamilyId::PLowDegree)) => {
            ("low-degree", construct_p_cycle(b, &marks, ctx.budget)?, None)
        }
        (AnyBracelet::Undirected(b), _) => ("distance-two", construct_bracelet_cycle(b, &marks)?, None),
    };
    let g = loaded.graph.as_dyn();
    let verified = verify_ordered_cycle(g, &cycle, &marks, false).is_ok();
    let report = ConstructReport {
        graph: GraphSummary::of(&loaded),
        builder,
        length: cycle.len(),
        hamiltonian: cycle.len() == n,
        cycle: cycle.vertices().to_vec(),
        marks,
        verified,
        crossings,
    };
    ctx.emit("construct", &report, |r| {
        let mut s = r.graph.line();
        let _ = writeln!(s, "builder: {}", r.builder);
        let _ = writeln!(s, "marks: {}", r.marks);
        let _ = writeln!(s, "cycle: {:?}", r.cycle);
        let _ = writeln!(s, "length: {} (hamiltonian: {})", r.length, r.hamiltonian);
        if let Some(c) = &r.crossings {
            let _ = writeln!(s, "crossing edges: {:?}", c.crossings);
        }
        let _ = writeln!(s, "verified: {}", r.verified);
        s
    });
    Ok(if verified { 0 } else { EXIT_FALSIFIED })
}

#[derive(Serialize)]
struct WitnessOut {
    kind: &'static str,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct VerifyReport {
    graph: GraphSummary,
    order: usize,
    mode: &'static str,
    symmetry_reduction: bool,
    status: Status,
    expected: Expect,
    as_expected: bool,
    counterexample: Option<String>,
    unresolved: Option<String>,
    witness: Option<WitnessOut>,
    obstruction: Option<ObstructionCertificate>,
    sequences_checked: u64,
    search_nodes: u64,
}

/// Largest graph for which a failing verdict is followed by a certificate search.
const OBSTRUCTION_SEARCH_LIMIT: usize = 24;

fn verify(ctx: &Ctx, a: &VerifyArgs) -> Result<u8, Failure> {
    let loaded = a.graph.load()?;
    let mode = match (a.ham, a.mode) {
        (true, Mode::EdgeOrdered) => return Err(Failure::usage("--ham does not apply to --mode edge-ordered")),
        (true, _) | (_, Mode::OrderedHam) => OrderMode::OrderedHamiltonian,
        (_, Mode::Ordered) => OrderMode::Ordered,
        (_, Mode::EdgeOrdered) => OrderMode::EdgeOrdered,
    };
    let opts = ctx.oracle(!a.no_symmetry);
    let v = match &loaded.graph {
        AnyGraph::Undirected(g) => verdict(g, a.order, mode, opts)?,
        AnyGraph::Directed(d) => verdict(d, a.order, mode, opts)?,
    };
    let obstruction = match &loaded.graph {
        AnyGraph::Undirected(g) if v.status == Status::Fails && mode != OrderMode::EdgeOrdered => {
            (g.vertex_count() <= OBSTRUCTION_SEARCH_LIMIT)
                .then(|| neighborhood_obstruction(g, a.order / 2, ObstructionScope::AllSubsets { max_size: a.order }))
                .flatten()
                .filter(|c| c.refuted_order <= a.order)
        }
        _ => None,
    };
    let status = v.status;
    let as_expected = matches!((status, a.expect), (Status::Holds, Expect::Holds) | (Status::Fails, Expect::Fails));
    let report = VerifyReport {
        graph: GraphSummary::of(&loaded),
        order: a.order,
        mode: mode.name(),
        symmetry_reduction: !a.no_symmetry,
        status,
        expected: a.expect,
        as_expected,
        counterexample: v.counterexample.map(|s| s.to_string()),
        unresolved: v.unresolved.map(|s| s.to_string()),
        witness: v.witness.map(|w| match w {
            Witness::Cycle(c) => WitnessOut { kind: "cycle", vertices: c.vertices().to_vec() },
            Witness::Tour(t) => WitnessOut { kind: "tour", vertices: t.walk().to_vec() },
        }),
        obstruction,
        sequences_checked: v.stats.sequences_checked,
        search_nodes: v.stats.nodes,
    };
    ctx.emit("verify", &report, |r| {
        let mut s = r.graph.line();
        let verdict = match r.status {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::ResourceExceeded => "resource exceeded",
        };
        let _ = writeln!(s, "claim: {}-{}", r.order, r.mode);
        let _ = writeln!(s, "verdict: {verdict} (expected {:?}, {})", r.expected, if r.as_expected { "as expected" } else { "NOT as expected" });
        if let Some(c) = &r.counterexample {
            let _ = writeln!(s, "counterexample: {c}");
        }
        if let Some(u) = &r.unresolved {
            let _ = writeln!(s, "unresolved: {u}");
        }
        if let Some(w) = &r.witness {
            let _ = writeln!(s, "last witness ({}): {:?}", w.kind, w.vertices);
        }
        if let Some(o) = &r.obstruction {
            let _ = writeln!(
                s,
                "certificate: {:?} set {:?} with {} neighbours refutes {}-orderedness",
                o.kind, o.subset, o.neighborhood_size, o.refuted_order
            );
        }
        let _ = writeln!(s, "sequences checked: {}, search nodes: {}", r.sequences_checked, r.search_nodes);
        s
    });
    Ok(match status {
        Status::ResourceExceeded => EXIT_RESOURCE,
        _ if as_expected => 0,
        _ => EXIT_FALSIFIED,
    })
}

#[derive(Serialize)]
struct BoundRow {
    order: usize,
    status: Status,
    /// Whether vertex connectivity is at least `order - 1` (only meaningful when the verdict holds).
    connectivity_ok: bool,
    bound: DiameterBoundReport,
}

#[derive(Serialize)]
struct AnalyzeReport {
    graph: GraphSummary,
    connectivity: ConnectivityReport,
    bounds: Vec<BoundRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree_screen: Option<DegreeAudit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parity: Option<ParityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    directed_necessary: Option<DirectedNecessaryReport>,
}

fn bound_rows<G: Adjacency + Sync>(ctx: &Ctx, g: &G, max_order: usize, kv: usize) -> Result<Vec<BoundRow>, Failure> {
    let mut rows = Vec::new();
    for order in 2..=max_order.min(g.vertex_count()) {
        let v = verdict(g, order, OrderMode::Ordered, ctx.oracle(true))?;
        let bound = check_diameter_bound(g, order / 2, &v);
        let connectivity_ok = !v.holds() || kv + 1 >= order;
        rows.push(BoundRow { order, status: v.status, connectivity_ok, bound });
    }
    Ok(rows)
}

fn analyze(ctx: &Ctx, a: &AnalyzeArgs) -> Result<u8, Failure> {
    let loaded = a.graph.load()?;
    let (report_conn, bounds) = match &loaded.graph {
        AnyGraph::Undirected(g) => {
            let c = connectivity(g);
            let rows = bound_rows(ctx, g, a.max_order, c.vertex_connectivity)?;
            (c, rows)
        }
        AnyGraph::Directed(d) => {
            let c = connectivity(d);
            let rows = bound_rows(ctx, d, a.max_order, c.vertex_connectivity)?;
            (c, rows)
        }
    };
    let (mut degree_screen, mut parity, mut directed_necessary) = (None, None, None);
    match (&loaded.bracelet, &loaded.graph) {
        (Some(AnyBracelet::Undirected(b)), _) => {
            degree_screen = a.audit_k.map(|k| bracelet_degree_audit(b, k));
            parity = Some(parity_audit(b, ctx.budget)?);
        }
        (Some(AnyBracelet::Directed(b)), _) => {
            degree_screen = a.audit_k.map(|k| bracelet_degree_audit(b, k));
            directed_necessary = a.audit_k.map(|k| check_directed_necessary(b.graph(), k));
        }
        (None, AnyGraph::Directed(d)) => directed_necessary = a.audit_k.map(|k| check_directed_necessary(d, k)),
        (None, AnyGraph::Undirected(_)) => {}
    }
    let report = AnalyzeReport {
        graph: GraphSummary::of(&loaded),
        connectivity: report_conn,
        bounds,
        degree_screen,
        parity,
        directed_necessary,
    };
    ctx.emit("analyze", &report, human_analyze);
    let exhausted = report.bounds.iter().any(|r| r.status == Status::ResourceExceeded);
    let violated = report.bounds.iter().any(|r| !r.bound.ok || !r.connectivity_ok)
        || report.parity.as_ref().is_some_and(|p| !p.ok());
    Ok(if violated {
        EXIT_FALSIFIED
    } else if exhausted {
        EXIT_RESOURCE
    } else {
        0
    })
}

fn human_analyze(r: &AnalyzeReport) -> String {
    let c = &r.connectivity;
    let mut s = r.graph.line();
    let _ = writeln!(s, "vertex connectivity: {}", c.vertex_connectivity);
    let _ = writeln!(s, "edge connectivity:   {}", c.edge_connectivity);
    if c.directed {
        let _ = writeln!(s, "min in/out degree:   {}/{}", c.min_in_degree, c.min_out_degree);
    } else {
        let _ = writeln!(s, "min degree:          {}", c.min_degree());
    }
    let _ = writeln!(s, "diameter:            {}", c.diameter);
    if !r.bounds.is_empty() {
        let _ = writeln!(s, "\norder  verdict            k  diameter  bound  check");
        for row in &r.bounds {
            let b = &row.bound;
            let check = match (b.applicable, b.ok && row.connectivity_ok) {
                (false, _) => "n/a",
                (true, true) => "ok",
                (true, false) => "VIOLATED",
            };
            let status = format!("{:?}", row.status);
            let _ = writeln!(s, "{:>5}  {status:<17} {:>2}  {:>8}  {:>5}  {check}", row.order, b.k, b.diameter.to_string(), b.bound);
        }
    }
    if let Some(a) = &r.degree_screen {
        let verdict = if a.passes() { "passes" } else { "fails" };
        let _ = writeln!(s, "\ndegree screen (k = {}): {verdict}, applicable {:?}, failed {:?}", a.k, a.applicable, a.failed);
    }
    if let Some(p) = &r.parity {
        let _ = writeln!(s, "parity: bipartite {}, hamiltonian {:?}, violations {:?}", p.bipartite, p.hamiltonian, p.violations);
    }
    if let Some(d) = &r.directed_necessary {
        let _ = writeln!(s, "directed necessary conditions (k = {}): {}", d.k, if d.passes() { "pass" } else { "fail" });
        for v in &d.violations {
            let _ = writeln!(s, "  {v:?}");
        }
    }
    s
}

#[derive(Serialize)]
struct TourReport {
    graph: GraphSummary,
    order: usize,
    marks: String,
    #[serde(flatten)]
    output: GreedyOutput,
}

fn tour(ctx: &Ctx, a: &TourArgs) -> Result<u8, Failure> {
    let loaded = a.graph.load()?;
    let g = loaded.graph.as_dyn();
    let n = g.vertex_count();
    let mut sampler = Sampler::new(ctx.seed);
    let (vertex_marks, edge_marks) = match a.mode {
        TourMode::Vertex => {
            if a.order > n {
                return Err(Failure::usage(format!("cannot mark {} of {n} vertices", a.order)));
            }
            let v = if a.marks.is_empty() { sampler.distinct(n, a.order) } else { a.marks.clone() };
            (Some(MarkSequence::new(v, n)?), None)
        }
        TourMode::Edge => {
            let edges = g.edges();
            if a.order > edges.len() {
                return Err(Failure::usage(format!("cannot mark {} of {} edges", a.order, edges.len())));
            }
            let e = if a.edges.is_empty() {
                sampler.distinct(edges.len(), a.order).into_iter().map(|i| edges[i]).collect()
            } else {
                a.edges.clone()
            };
            (None, Some(EdgeSequence::new(e, g)?))
        }
    };
    let marks = vertex_marks.as_ref().map(|m| m.to_string()).or(edge_marks.as_ref().map(|e| e.to_string())).unwrap_or_default();
    let output = match (&loaded.graph, vertex_marks, edge_marks) {
        (AnyGraph::Directed(d), Some(m), _) => GreedyOutput::Cycle(greedy_vertex_cycle(d, &m, a.order)?),
        (AnyGraph::Directed(d), None, Some(e)) => GreedyOutput::Tour(greedy_edge_tour(d, &e, a.order)?),
        (AnyGraph::Undirected(g), Some(m), _) => greedy_undirected(g, &UndirectedTarget::Vertices(m), a.order)?,
        (AnyGraph::Undirected(g), None, Some(e)) => greedy_undirected(g, &UndirectedTarget::Edges(e), a.order)?,
        (_, None, None) => unreachable!("one kind of mark is always chosen"),
    };
    let report = TourReport { graph: GraphSummary::of(&loaded), order: a.order, marks, output };
    ctx.emit("tour", &report, |r| {
        let mut s = r.graph.line();
        let _ = writeln!(s, "marks: {}", r.marks);
        let (gate, rounds) = match &r.output {
            GreedyOutput::Cycle(c) => (&c.gate, &c.rounds),
            GreedyOutput::Tour(t) => (&t.gate, &t.rounds),
        };
        let required = gate.required.map_or("-".into(), |x| x.to_string());
        let _ = writeln!(
            s,
            "gate: {} connectivity {} >= {required} (diameter {})",
            gate.kind, gate.connectivity, gate.diameter
        );
        for (i, p) in rounds.iter().enumerate() {
            let _ = writeln!(s, "round {}: {p:?}", i + 1);
        }
        match &r.output {
            GreedyOutput::Cycle(c) => {
                let _ = writeln!(s, "cycle: {}", c.cycle);
            }
            GreedyOutput::Tour(t) => {
                let _ = writeln!(s, "swaps: {}", t.swaps);
                let _ = writeln!(s, "tour: {}", t.tour);
            }
        }
        s
    });
    Ok(0)
}

#[derive(Serialize)]
struct SuiteReport {
    seed: u64,
    budget: u64,
    criteria: Vec<CriterionReport>,
}

fn suite(ctx: &Ctx, a: &SuiteArgs) -> Result<u8, Failure> {
    let opts = SuiteOptions { budget: ctx.budget, seed: ctx.seed, parallel: ctx.parallel };
    let criteria = run_suite(&opts, a.only.as_deref());
    if criteria.is_empty() {
        return Err(Failure::usage(format!("no criterion matches `{}`", a.only.as_deref().unwrap_or(""))));
    }
    let report = SuiteReport { seed: ctx.seed, budget: ctx.budget, criteria };
    ctx.emit("suite", &report, |r| {
        let mut s = String::new();
        for c in &r.criteria {
            let tag = match c.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::ResourceExceeded => "RESOURCE",
            };
            let _ = writeln!(s, "{tag:<8} {:>2} {:<34} {:>8} ms", c.id, c.name, c.elapsed_ms);
            for f in &c.failures {
                let _ = writeln!(s, "           ! {f}");
            }
        }
        s
    });
    let any = |o: Outcome| report.criteria.iter().any(|c| c.outcome == o);
    Ok(if any(Outcome::Fail) {
        EXIT_FALSIFIED
    } else if any(Outcome::ResourceExceeded) {
        EXIT_RESOURCE
    } else {
        0
    })
}
