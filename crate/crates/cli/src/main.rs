use std::fs::File;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use grkit::constructions::{generator_by_name, generators, GenParams, InternalFill};
use grkit::formulas::{formula_by_id, formulas, FormulaArgs};
use grkit::patterns::{has_any_mono, has_mono_pattern, has_rainbow, longest_mono_path, max_linear_forest};
use grkit::search::{
    gr_desk_verify, lemma_instance, quantity_engine, random_refutation, universal_check, CheckOutcome, CheckReport,
    GrMode, Lemma, QuantityArgs, SearchOptions, MAX_UNIVERSAL_N,
};
use grkit::selftest::run_selftest;
use grkit::structure::{classify_structure, Classification, StructureContext};
use grkit::{read_coloring, write_coloring, Color, EdgeColoring, Embedding, Error, PatternSpec, ValueOrInterval};

#[derive(Parser)]
#[command(name = "grkit", version, about = "Ramsey and Gallai-Ramsey verification toolkit")]
struct Cli {
    /// Print a JSON object instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized components.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for searches (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Look for a monochromatic or rainbow pattern in a coloring file.
    Detect(DetectArgs),
    /// Write a family member or witness coloring.
    Generate(GenerateArgs),
    /// Compute a Ramsey-type quantity by search.
    Compute(ComputeArgs),
    /// Evaluate a closed-form formula.
    Formula(FormulaCmd),
    /// Check a lemma instance exhaustively or by random refutation.
    Check(CheckArgs),
    /// Verify a Gallai-Ramsey value at desk scale.
    Grverify(GrArgs),
    /// Name the structure of a rainbow-free coloring.
    Classify(ClassifyArgs),
    /// Run the built-in acceptance criteria.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    input: PathBuf,
    /// `mono:<pattern>`, `rainbow:<pattern>` or a bare pattern (monochromatic).
    #[arg(long, required_unless_present_any = ["longest_path", "max_forest"])]
    pattern: Option<String>,
    #[arg(long)]
    color: Option<Color>,
    #[arg(long, conflicts_with = "color")]
    any_color: bool,
    /// Report the longest path in `--color`.
    #[arg(long, requires = "color", conflicts_with_all = ["pattern", "max_forest"])]
    longest_path: bool,
    /// Report a maximum linear forest in `--color`.
    #[arg(long, requires = "color", conflicts_with = "pattern")]
    max_forest: bool,
    #[arg(long, default_value_t = 2)]
    min_order: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, required_unless_present = "list")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Special vertices, comma separated.
    #[arg(long, value_delimiter = ',')]
    special: Vec<usize>,
    #[arg(long, value_parser = ["low", "high", "random"], default_value = "high")]
    fill: String,
    /// Check membership and target avoidance before writing.
    #[arg(long)]
    verify: bool,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// List the available families.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct Budget {
    #[arg(long)]
    node_budget: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_budget: Option<f64>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_parser = ["ramsey", "bk", "t"])]
    quantity: String,
    #[arg(long)]
    red: Option<String>,
    #[arg(long)]
    blue: Option<String>,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    max_n: usize,
    /// Write the extremal witness to this file instead of printing it.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct FormulaCmd {
    #[arg(long, required_unless_present = "list")]
    id: Option<String>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    j1: Option<i64>,
    #[arg(long)]
    j2: Option<i64>,
    #[arg(long)]
    min_component: Option<i64>,
    /// Accept a value whose case condition is questionable.
    #[arg(long)]
    trust: bool,
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_parser = ["3.1i", "3.1ii", "3.2"])]
    lemma: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: Option<usize>,
    /// Random samples, used when the host is too large for exhaustive search.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct GrArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    rainbow: String,
    #[arg(long)]
    target: String,
    #[arg(long = "N", short = 'N')]
    big_n: usize,
    #[arg(long, value_parser = ["full", "structure"], default_value = "full")]
    mode: String,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_parser = ["p5", "k13", "p4plus"])]
    context: String,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run only criteria whose key starts with this prefix.
    #[arg(long)]
    only: Option<String>,
}

/// What a command produced: text lines, a JSON mirror and an exit code.
struct Report {
    lines: Vec<String>,
    json: Value,
    code: u8,
}

type Res = Result<Report, Error>;

fn pattern(s: &str) -> Result<PatternSpec, Error> {
    s.parse()
}

fn load(path: &Path) -> Result<EdgeColoring, Error> {
    let f = File::open(path).map_err(|e| Error::Domain(format!("cannot open {}: {e}", path.display())))?;
    read_coloring(f)
}

fn save(path: &Path, c: &EdgeColoring) -> Result<(), Error> {
    std::fs::write(path, write_coloring(c)).map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))
}

fn options(cli: &Cli, budget: Option<&Budget>) -> SearchOptions {
    SearchOptions {
        threads: cli.threads,
        node_budget: budget.and_then(|b| b.node_budget),
        time_budget: budget.and_then(|b| b.time_budget).map(Duration::from_secs_f64),
    }
}

fn vi_json(v: &ValueOrInterval) -> Value {
    let hi = if v.hi == ValueOrInterval::UNBOUNDED { Value::Null } else { json!(v.hi) };
    json!({ "exact": v.is_exact(), "lo": v.lo, "hi": hi, "text": v.to_string() })
}

fn embedding_lines(e: &Embedding) -> (String, Value) {
    let map: Vec<String> = e.vertex_map.iter().map(usize::to_string).collect();
    let color = e.color.map_or("rainbow".to_string(), |c| format!("color {c}"));
    (
        format!("present {color} pattern {} map {}", e.pattern, map.join(",")),
        json!({ "present": true, "color": e.color, "pattern": e.pattern.to_string(), "vertex_map": e.vertex_map }),
    )
}

/// Attaches a coloring either as a file or as inline ecg text.
fn attach(lines: &mut Vec<String>, label: &str, c: &EdgeColoring, out: Option<&Path>) -> Result<Value, Error> {
    match out {
        Some(p) => {
            save(p, c)?;
            lines.push(format!("{label} {} vertices written to {}", c.n_vertices(), p.display()));
            Ok(json!({ "vertices": c.n_vertices(), "file": p.display().to_string() }))
        }
        None => {
            lines.push(format!("{label} {} vertices", c.n_vertices()));
            let text = write_coloring(c);
            lines.extend(text.lines().map(str::to_string));
            Ok(json!({ "vertices": c.n_vertices(), "ecg": text }))
        }
    }
}

fn detect(a: &DetectArgs) -> Res {
    let c = load(&a.input)?;
    if a.longest_path {
        let (order, e) = longest_mono_path(&c, a.color.unwrap())?;
        let (_, mut j) = embedding_lines(&e);
        j["longest_path"] = json!(order);
        let map: Vec<String> = e.vertex_map.iter().map(usize::to_string).collect();
        return Ok(Report { lines: vec![format!("longest {order} path {}", map.join(","))], json: j, code: 0 });
    }
    if a.max_forest {
        let (edges, w) = max_linear_forest(&c, a.color.unwrap(), a.min_order)?;
        let comps: Vec<String> =
            w.components.iter().map(|p| p.iter().map(usize::to_string).collect::<Vec<_>>().join("-")).collect();
        return Ok(Report {
            lines: vec![format!("forest {edges} edges components {}", comps.join(" "))],
            json: json!({ "edges": edges, "components": w.components }),
            code: 0,
        });
    }
    let spec = a.pattern.as_deref().unwrap();
    let found = if let Some(p) = spec.strip_prefix("rainbow:") {
        has_rainbow(&c, &pattern(p)?)?
    } else {
        let p = pattern(spec.strip_prefix("mono:").unwrap_or(spec))?;
        match a.color {
            Some(col) => has_mono_pattern(&c, col, &p)?,
            None => has_any_mono(&c, &p)?,
        }
    };
    Ok(match found {
        Some(e) => {
            let (line, json) = embedding_lines(&e);
            Report { lines: vec![line], json, code: 0 }
        }
        None => Report { lines: vec!["absent".into()], json: json!({ "present": false }), code: 1 },
    })
}

fn generate(cli: &Cli, a: &GenerateArgs) -> Res {
    if a.list {
        let lines: Vec<String> = generators().iter().map(|g| format!("{:<22} {}", g.name(), g.description())).collect();
        let names: Vec<&str> = generators().iter().map(|g| g.name()).collect();
        return Ok(Report { lines, json: json!({ "families": names }), code: 0 });
    }
    let fill = match a.fill.as_str() {
        "low" => InternalFill::Low,
        "random" => InternalFill::Random,
        _ => InternalFill::High,
    };
    let params = GenParams {
        n: a.n,
        k: a.k,
        m: a.m,
        parts: a.parts.clone(),
        special: a.special.clone(),
        fill,
        seed: cli.seed,
        verify: a.verify,
    };
    let g = generator_by_name(a.family.as_deref().unwrap())?.generate(&params)?;
    let text = write_coloring(&g.coloring);
    let mut json =
        json!({ "vertices": g.coloring.n_vertices(), "colors": g.coloring.n_colors(), "verified": a.verify });
    let lines = match &a.output {
        Some(p) => {
            save(p, &g.coloring)?;
            json["file"] = json!(p.display().to_string());
            let mut l = vec![format!("wrote {} vertices to {}", g.coloring.n_vertices(), p.display())];
            if a.verify {
                l.push("verified".into());
            }
            l
        }
        None => {
            json["ecg"] = json!(text);
            text.lines().map(str::to_string).collect()
        }
    };
    Ok(Report { lines, json, code: 0 })
}

fn compute(cli: &Cli, a: &ComputeArgs) -> Res {
    let args = QuantityArgs {
        red: a.red.as_deref().map(pattern).transpose()?,
        blue: a.blue.as_deref().map(pattern).transpose()?,
        target: a.target.as_deref().map(pattern).transpose()?,
        k: a.k,
        max_n: a.max_n,
    };
    let r = quantity_engine(&a.quantity)?.compute(&args, &options(cli, Some(&a.budget)))?;
    let mut lines = vec![
        r.value.to_string(),
        format!("quantity {}", r.quantity),
        format!("nodes {}", r.nodes_explored),
        format!("time_ms {}", r.wall_time.as_millis()),
    ];
    let witness = match &r.extremal_witness {
        Some(w) => attach(&mut lines, "witness", w, a.output.as_deref())?,
        None => Value::Null,
    };
    let json = json!({
        "quantity": r.quantity,
        "value": vi_json(&r.value),
        "nodes": r.nodes_explored,
        "time_ms": r.wall_time.as_millis() as u64,
        "witness": witness,
    });
    Ok(Report { lines, json, code: if r.value.is_exact() { 0 } else { 2 } })
}

fn formula(a: &FormulaCmd) -> Res {
    if a.list {
        let lines: Vec<String> = formulas().map(|f| format!("{:<18} {}", f.id(), f.signature())).collect();
        let ids: Vec<&str> = formulas().map(|f| f.id()).collect();
        return Ok(Report { lines, json: json!({ "formulas": ids }), code: 0 });
    }
    let args =
        FormulaArgs { k: a.k, n: a.n, m: a.m, j1: a.j1, j2: a.j2, min_component: a.min_component, trust: a.trust };
    let e = formula_by_id(a.id.as_deref().unwrap())?.evaluate(&args)?;
    let mut lines = vec![e.value.to_string()];
    if let Some(c) = &e.caveat {
        lines.push(format!("caveat: {c}"));
    }
    Ok(Report { lines, json: json!({ "value": vi_json(&e.value), "caveat": e.caveat }), code: 0 })
}

fn check_report(mut lines: Vec<String>, r: &CheckReport, out: Option<&Path>) -> Res {
    let mut json = json!({ "nodes": r.nodes_explored, "time_ms": r.wall_time.as_millis() as u64, "case": r.case });
    let code = match &r.outcome {
        CheckOutcome::Holds => {
            lines.insert(0, "holds".into());
            json["outcome"] = json!("holds");
            0
        }
        CheckOutcome::NotRefuted { samples } => {
            lines.insert(0, format!("not refuted in {samples} random samples (randomized search, not a proof)"));
            json["outcome"] = json!("not-refuted");
            json["samples"] = json!(samples);
            0
        }
        CheckOutcome::Counterexample(c) => {
            let head = match &r.case {
                Some(case) => format!("counterexample case {case}"),
                None => "counterexample".to_string(),
            };
            lines.insert(0, head);
            json["outcome"] = json!("counterexample");
            json["counterexample"] = attach(&mut lines, "coloring", c, out)?;
            1
        }
    };
    lines.push(format!("nodes {}", r.nodes_explored));
    lines.push(format!("time_ms {}", r.wall_time.as_millis()));
    Ok(Report { lines, json, code })
}

fn check(cli: &Cli, a: &CheckArgs) -> Res {
    let lemma: Lemma = a.lemma.parse()?;
    let (big_n, red, blue) = lemma_instance(lemma, a.n, a.a)?;
    let opts = options(cli, Some(&a.budget));
    let mut lines = vec![format!("host K_{big_n}")];
    if let (Lemma::L32, Some(x)) = (lemma, a.a) {
        if !(3..=a.n / 4).contains(&x) {
            lines.push(format!("note: a = {x} lies outside the lemma's hypothesis 3 <= a <= n/4"));
        }
    }
    let report = if lemma == Lemma::L32 && big_n > MAX_UNIVERSAL_N {
        lines.push("method randomized refutation".into());
        random_refutation(big_n, &red, &blue, a.samples, cli.seed, &opts)?
    } else {
        lines.push("method exhaustive".into());
        universal_check(big_n, 2, &red, &[], &blue, &opts)?
    };
    check_report(lines, &report, a.output.as_deref())
}

fn grverify(cli: &Cli, a: &GrArgs) -> Res {
    let mode: GrMode = a.mode.parse()?;
    let r = gr_desk_verify(
        a.k,
        &pattern(&a.rainbow)?,
        &pattern(&a.target)?,
        a.big_n,
        mode,
        &options(cli, Some(&a.budget)),
    )?;
    check_report(vec![format!("mode {}", a.mode)], &r, a.output.as_deref())
}

fn classify(a: &ClassifyArgs) -> Res {
    let c = load(&a.input)?;
    let ctx: StructureContext = a.context.parse()?;
    let cl = classify_structure(&c, ctx);
    Ok(match &cl {
        Classification::Classified(d) => {
            let mut lines = vec![format!("case {}", cl.label())];
            lines.extend(d.to_string().lines().map(str::to_string));
            Report {
                lines,
                json: json!({
                    "case": cl.label(),
                    "parts": d.parts,
                    "special": d.special,
                    "exceptions": d.exceptions,
                    "renumbering": d.renumbering,
                    "descriptor": d.to_string(),
                }),
                code: 0,
            }
        }
        Classification::Unclassified => {
            Report { lines: vec!["unclassified".into()], json: json!({ "case": "unclassified" }), code: 1 }
        }
    })
}

fn selftest(cli: &Cli, a: &SelftestArgs) -> Res {
    let results = run_selftest(a.only.as_deref(), &options(cli, None))?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        lines.push(format!("{status} {:<10} {} [{:.2}s]", r.key, r.title, r.elapsed.as_secs_f64()));
        lines.extend(r.detail.lines().map(|l| format!("    {l}")));
        rows.push(json!({ "key": r.key, "passed": r.passed, "detail": r.detail, "seconds": r.elapsed.as_secs_f64() }));
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.key).collect();
    lines.push(if failed.is_empty() {
        format!("all {} criteria passed", results.len())
    } else {
        format!("failed: {}", failed.join(", "))
    });
    Ok(Report { lines, json: json!({ "criteria": rows }), code: u8::from(!failed.is_empty()) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Detect(a) => detect(a),
        Command::Generate(a) => generate(&cli, a),
        Command::Compute(a) => compute(&cli, a),
        Command::Formula(a) => formula(a),
        Command::Check(a) => check(&cli, a),
        Command::Grverify(a) => grverify(&cli, a),
        Command::Classify(a) => classify(a),
        Command::Selftest(a) => selftest(&cli, a),
    };
    match result {
        Ok(r) => {
            if cli.json {
                println!("{}", r.json);
            } else {
                for l in &r.lines {
                    println!("{l}");
                }
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
