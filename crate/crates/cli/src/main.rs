use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use cayley_sum::{
    load_corpus, load_group, names, parse_selection, witness_record, CliError,
    Result, WitnessRecord,
};
use cayley_sum_core::classes::center;
use cayley_sum_core::codes::{enumerate_codes, TotalReading};
use cayley_sum_core::corpus::default_corpus;
use cayley_sum_core::graph::connectivity_criterion;
use cayley_sum_core::subgroup::{all_subgroups, generated, is_normal_subgroup};
use cayley_sum_core::suites::{run_suite, Suite, SuiteOutcome};
use cayley_sum_core::v8n::census;
use cayley_sum_core::{CayleySumGraph, CodeKind, CodeScope, Group, GroupSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cayley-sum", version, about = "Cayley sum graphs and their perfect codes")]
struct Cli {
    /// Emit JSON (one object, or JSON lines for multi-record output).
    #[arg(long, global = true)]
    json: bool,
    /// Timing and progress on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArg {
    /// Group spec file (JSON).
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    spec: SpecArg,
    /// Connection set: element names and `class:k` selectors, comma separated.
    #[arg(long)]
    x: String,
    /// Accept a connection set containing the identity.
    #[arg(long)]
    allow_identity: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Perfect,
    Total,
}

impl From<KindArg> for CodeKind {
    fn from(k: KindArg) -> CodeKind {
        match k {
            KindArg::Perfect => CodeKind::Perfect,
            KindArg::Total => CodeKind::TotalPerfect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Subgroups,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    /// `Y ∩ H` is a single element, a nonsquare of `H`.
    Single,
    /// `Y ∩ H` holds exactly one nonsquare of `H`.
    ExactlyOne,
}

#[derive(Subcommand)]
enum Command {
    /// Order, center and class count of a group.
    GroupInfo(SpecArg),
    /// Conjugacy classes, indexed as used by `class:k`.
    Classes(SpecArg),
    /// The subgroup lattice.
    Subgroups(SpecArg),
    /// Build a Cayley sum graph and report connectivity and regularity.
    Graph(GraphArgs),
    /// Enumerate perfect or total perfect codes of a Cayley sum graph.
    Codes {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "subgroups")]
        scope: ScopeArg,
    },
    /// Search a connection set making a subgroup a (total) perfect code.
    Witness {
        #[command(flatten)]
        spec: SpecArg,
        /// Generators of the subgroup.
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "single")]
        reading: ReadingArg,
    },
    /// Run theorem suites over a corpus; exit 1 on any failure.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// `default`, or a JSON file holding an array of group specs.
        #[arg(long, default_value = "default")]
        corpus: String,
        /// Skip corpus groups above this order.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        /// Also write one witness record per (group, subgroup, kind) as JSON lines.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Census of subgroup codes over all connected normal Cayley sum graphs of V_8n.
    V8nCensus {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Per-graph CSV output.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Permit n outside {1, 3}.
        #[arg(long)]
        allow_large: bool,
    },
    /// Write a Cayley sum graph as Graphviz DOT.
    ExportDot {
        #[command(flatten)]
        graph: GraphArgs,
        /// Vertices to fill, e.g. a code.
        #[arg(long)]
        highlight: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Ctx {
    json: bool,
    verbose: bool,
    out: io::StdoutLock<'static>,
}

impl Ctx {
    fn line(&mut self, text: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", text.as_ref()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
    }

    fn record<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = serde_json::to_string(value)?;
        self.line(text)
    }

    fn note(&self, text: impl AsRef<str>) {
        if self.verbose {
            eprintln!("{}", text.as_ref());
        }
    }
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn build_graph<'g>(g: &'g Group, args: &GraphArgs) -> Result<CayleySumGraph<'g>> {
    let x = parse_selection(g, &args.x)?;
    Ok(CayleySumGraph::build(g, x, args.allow_identity)?)
}

fn graph_summary(g: &Group, cs: &CayleySumGraph<'_>) -> serde_json::Value {
    let x = cs.connection_set().set();
    let reg = cs.regularity();
    json!({
        "group": g.family().to_string(),
        "connection_set": names(g, x),
        "vertices": cs.vertex_count(),
        "edges": cs.edge_count(),
        "connected": cs.is_connected(),
        "connectivity_criterion": connectivity_criterion(g, x),
        "regular": reg.regular,
        "degree_histogram": reg.degree_histogram,
        "complete_bipartite": cs.complete_bipartite().map(|(a, b)| [names(g, &a), names(g, &b)]),
    })
}

/// Outcome of a command that checks something: `false` maps to exit 1.
type Verdict = bool;

fn run(cli: Cli) -> Result<Verdict> {
    let mut ctx = Ctx {
        json: cli.json,
        verbose: cli.verbose,
        out: io::stdout().lock(),
    };
    let start = Instant::now();
    let verdict = match cli.command {
        Command::GroupInfo(a) => {
            let g = load_group(&a.spec)?;
            let z = center(&g);
            if ctx.json {
                ctx.record(&json!({
                    "group": g.family().to_string(),
                    "order": g.order(),
                    "abelian": g.is_abelian(),
                    "center": names(&g, z.carrier()),
                    "class_count": g.classes().len(),
                }))?;
            } else {
                ctx.line(format!("group:   {}", g.family()))?;
                ctx.line(format!("order:   {}", g.order()))?;
                ctx.line(format!("abelian: {}", g.is_abelian()))?;
                ctx.line(format!("center:  {}", g.format_set(z.carrier())))?;
                ctx.line(format!("classes: {}", g.classes().len()))?;
            }
            true
        }
        Command::Classes(a) => {
            let g = load_group(&a.spec)?;
            for (k, c) in g.classes().classes().iter().enumerate() {
                if ctx.json {
                    ctx.record(&json!({"index": k, "size": c.len(), "elements": names(&g, c)}))?;
                } else {
                    ctx.line(format!("class:{k}\t{}\t{}", c.len(), g.format_set(c)))?;
                }
            }
            true
        }
        Command::Subgroups(a) => {
            let g = load_group(&a.spec)?;
            for h in all_subgroups(&g)? {
                let normal = is_normal_subgroup(&g, &h);
                if ctx.json {
                    ctx.record(&json!({
                        "order": h.order(),
                        "normal": normal,
                        "elements": names(&g, h.carrier()),
                    }))?;
                } else {
                    ctx.line(format!(
                        "{}\t{}\t{}",
                        h.order(),
                        if normal { "normal" } else { "-" },
                        g.format_set(h.carrier())
                    ))?;
                }
            }
            true
        }
        Command::Graph(a) => {
            let g = load_group(&a.spec.spec)?;
            let cs = build_graph(&g, &a)?;
            let summary = graph_summary(&g, &cs);
            if ctx.json {
                ctx.record(&summary)?;
            } else {
                for (k, v) in summary.as_object().unwrap() {
                    ctx.line(format!("{k}: {v}"))?;
                }
            }
            true
        }
        Command::Codes { graph, kind, scope } => {
            let g = load_group(&graph.spec.spec)?;
            let cs = build_graph(&g, &graph)?;
            let scope = match scope {
                ScopeArg::Subgroups => CodeScope::SubgroupsOnly,
                ScopeArg::All => CodeScope::AllSubsets,
            };
            for c in enumerate_codes(&cs, kind.into(), scope)? {
                if ctx.json {
                    ctx.record(&json!({"kind": CodeKind::from(kind).as_str(), "code": names(&g, &c)}))?;
                } else {
                    ctx.line(g.format_set(&c))?;
                }
            }
            true
        }
        Command::Witness {
            spec,
            subgroup,
            kind,
            reading,
        } => {
            let g = load_group(&spec.spec)?;
            let h = generated(&g, &parse_selection(&g, &subgroup)?);
            let reading = match reading {
                ReadingArg::Single => TotalReading::SingleNonsquare,
                ReadingArg::ExactlyOne => TotalReading::ExactlyOneNonsquare,
            };
            let r = witness_record(&g, &h, kind.into(), reading)?;
            if ctx.json {
                ctx.record(&r)?;
            } else {
                print_record(&mut ctx, &r)?;
            }
            r.verified
        }
        Command::Verify {
            suite,
            corpus,
            max_order,
            threads,
            report,
        } => verify(&mut ctx, &suite, &corpus, max_order, threads, report.as_deref())?,
        Command::V8nCensus {
            n,
            kind,
            csv,
            allow_large,
        } => {
            let g = GroupSpec::V8n { n }.build()?;
            let r = census(&g, kind.into(), allow_large)?;
            if let Some(path) = csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["classes", "connection_set", "connected", "codes"])
                    .and_then(|_| {
                        for pg in &r.per_graph {
                            let classes: Vec<String> = pg.classes.iter().map(|c| c.to_string()).collect();
                            let codes: Vec<String> = pg.codes.iter().map(|c| g.format_set(c)).collect();
                            w.write_record([
                                classes.join(" "),
                                g.format_set(&pg.connection_set),
                                pg.connected.to_string(),
                                codes.join(" "),
                            ])?;
                        }
                        Ok(())
                    })
                    .map_err(|e| CliError::Usage(format!("csv: {e}")))?;
                let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
                write_file(&path, &bytes)?;
            }
            let fmt = |v: &[cayley_sum_core::ElementSet]| -> Vec<Vec<String>> {
                v.iter().map(|s| names(&g, s)).collect()
            };
            let summary = json!({
                "n": r.n,
                "kind": r.kind.as_str(),
                "connected_graphs": r.connected_graph_count,
                "found": fmt(&r.found_subgroups),
                "expected": fmt(&r.expected),
                "matches": r.matches(),
                "excluded_found": fmt(&r.excluded_found),
                "missing_reflection_class": fmt(&r.missing_reflection_class),
            });
            if ctx.json {
                ctx.record(&summary)?;
            } else {
                for (k, v) in summary.as_object().unwrap() {
                    ctx.line(format!("{k}: {v}"))?;
                }
            }
            r.all_checks_pass()
        }
        Command::ExportDot {
            graph,
            highlight,
            output,
        } => {
            let g = load_group(&graph.spec.spec)?;
            let cs = build_graph(&g, &graph)?;
            let hl = highlight.map(|h| parse_selection(&g, &h)).transpose()?;
            let dot = cs.to_dot(hl.as_ref());
            match (&output, ctx.json) {
                (Some(path), _) => {
                    write_file(path, dot.as_bytes())?;
                    if ctx.json {
                        ctx.record(&json!({"output": path.display().to_string(), "bytes": dot.len()}))?;
                    }
                }
                (None, true) => ctx.record(&json!({"dot": dot}))?,
                (None, false) => ctx.line(dot.trim_end())?,
            }
            true
        }
    };
    ctx.note(format!("elapsed: {:.2?}", start.elapsed()));
    Ok(verdict)
}

fn print_record(ctx: &mut Ctx, r: &WitnessRecord) -> Result<()> {
    ctx.line(format!("group:     {}", r.group))?;
    ctx.line(format!("subgroup:  {{{}}}", r.subgroup_elements.join(", ")))?;
    ctx.line(format!("kind:      {}", r.kind))?;
    match &r.witness_or_null {
        Some(x) => ctx.line(format!("witness:   {{{}}}", x.join(", ")))?,
        None => ctx.line("witness:   none")?,
    }
    if let Some(c) = &r.criteria {
        ctx.line(format!("criteria:  xh {}, xH {}", c.xh, c.x_h))?;
    }
    ctx.line(format!("verified:  {}", r.verified))
}

#[derive(Serialize)]
struct SuiteSummary<'a> {
    suite: &'a str,
    groups: usize,
    cases: usize,
    exhaustive: bool,
    passed: bool,
    failures: &'a [String],
}

fn verify(
    ctx: &mut Ctx,
    suite: &str,
    corpus: &str,
    max_order: Option<usize>,
    threads: Option<usize>,
    report: Option<&Path>,
) -> Result<Verdict> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(suite).ok_or_else(|| {
            let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            CliError::Usage(format!("unknown suite `{suite}`; expected all or one of {}", known.join(", ")))
        })?]
    };
    let specs = if corpus == "default" {
        default_corpus()
    } else {
        load_corpus(Path::new(corpus))?
    };
    let groups: Vec<Group> = specs
        .iter()
        .map(|s| s.build())
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|g| max_order.is_none_or(|m| g.order() <= m))
        .collect();
    ctx.note(format!("{} groups", groups.len()));

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;

    let mut ok = true;
    for s in suites {
        let start = Instant::now();
        let outcomes: Vec<SuiteOutcome> = pool.install(|| {
            groups
                .par_iter()
                .map(|g| run_suite(s, g))
                .collect::<Result<Vec<_>, _>>()
        })?;
        let mut total = SuiteOutcome {
            exhaustive: true,
            ..Default::default()
        };
        for o in outcomes {
            total.merge(o);
        }
        ok &= total.passed();
        ctx.note(format!("{}: {:.2?}", s.name(), start.elapsed()));
        if ctx.json {
            ctx.record(&SuiteSummary {
                suite: s.name(),
                groups: groups.len(),
                cases: total.cases,
                exhaustive: total.exhaustive,
                passed: total.passed(),
                failures: &total.failures,
            })?;
        } else {
            ctx.line(format!(
                "{} {}: {} cases, {} failures{}",
                if total.passed() { "PASS" } else { "FAIL" },
                s.name(),
                total.cases,
                total.failures.len(),
                if total.exhaustive { "" } else { " (sampled)" }
            ))?;
            for f in &total.failures {
                ctx.line(format!("  {f}"))?;
            }
        }
    }

    if let Some(path) = report {
        let records: Vec<Vec<WitnessRecord>> = pool.install(|| {
            groups
                .par_iter()
                .map(|g| -> Result<Vec<WitnessRecord>> {
                    let mut out = Vec::new();
                    for h in all_subgroups(g)? {
                        for kind in [CodeKind::Perfect, CodeKind::TotalPerfect] {
                            out.push(witness_record(g, &h, kind, TotalReading::SingleNonsquare)?);
                        }
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let mut buf = Vec::new();
        for r in records.iter().flatten() {
            ok &= r.verified;
            serde_json::to_writer(&mut buf, r)?;
            buf.push(b'\n');
        }
        write_file(path, &buf)?;
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // Downstream closed the pipe (e.g. `| head`).
        Err(CliError::Io { source, .. }) if source.kind() == io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
