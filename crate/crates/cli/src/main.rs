mod args;
mod output;

use std::fmt;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Map, Value};

use crossfree::acceptance::run_acceptance;
use crossfree::asymptotics::{bender_growth, optimize_alpha, AlgebraicRelation, ASSUMPTION};
use crossfree::doublechain::{
    ab_family, build_hamiltonian_path, close_to_polygonization, compose_pair, count_polygonizations_exact,
    count_polygonizations_geometric, decompose_polygonization, realize, svg, ChainGraph, DoubleChainConfig,
};
use crossfree::oracle::{count_partitions, enumerate_partitions, estimate_ordered2_growth, EnumerationReport};
use crossfree::recurrences::{gfh_tables, go_tables, gs_tables, CountTable};
use crossfree::reference::{SILVER_RATIO, TABLE_G, TABLE_GO, TABLE_GS};
use crossfree::verify::{run_verification, VerifyOptions};
use crossfree::{Error, Ordered2Variant, PartitionClass, PathPartition, VertexRole};

use args::*;
use output::{sink, to_json_line};

enum Failure {
    Core(Error),
    Usage(String),
    Io(io::Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(m) | Failure::Mismatch(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::GuardExceeded { .. }) => 3,
            Failure::Core(Error::InvalidInput { .. } | Error::UnknownVariant(_)) | Failure::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("crossfree: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("crossfree: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let mut out = sink(cli.out.as_deref())?;
    let result = match &cli.command {
        Command::Count(a) => count(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::Asymptotics(a) => asymptotics(a, &mut out),
        Command::Optimize(a) => optimize(a, &mut out),
        Command::Construct(a) => construct(a, &mut out),
        Command::Render(a) => render(a, &mut out),
        Command::Tables(a) => tables(a, &mut out),
    };
    out.flush()?;
    result
}

fn base_table(class: BaseClass, n_max: usize) -> CountTable {
    match class {
        BaseClass::Ncp => gfh_tables(n_max).0,
        BaseClass::Ncpws => gs_tables(n_max).0,
        BaseClass::Ordered => go_tables(n_max).0,
    }
}

fn count(a: &CountArgs, out: &mut dyn Write) -> Outcome {
    let table = base_table(a.class, a.n_max);
    match a.format {
        TableFormat::Csv => write!(out, "{}", table.to_csv())?,
        TableFormat::Json => writeln!(out, "{}", to_json_line(table.to_json_value()))?,
    }
    Ok(())
}

fn class_of(class: AnyClass, variant: &str) -> Result<PartitionClass, Failure> {
    Ok(match class {
        AnyClass::Ncp => PartitionClass::Ncp,
        AnyClass::Ncpws => PartitionClass::Ncpws,
        AnyClass::Ordered => PartitionClass::Ordered,
        AnyClass::Ordered2 => PartitionClass::Ordered2(variant.parse::<Ordered2Variant>()?),
    })
}

fn report_json(r: &EnumerationReport) -> Value {
    let by_k: Map<String, Value> = r
        .by_path_count
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v.to_string())))
        .collect();
    let role_name = |role: &VertexRole| match role {
        VertexRole::Singleton => "singleton",
        VertexRole::Endpoint => "endpoint",
        VertexRole::Middle => "middle",
    };
    let by_role: Map<String, Value> = r
        .by_role_of_1
        .iter()
        .map(|(role, v)| (role_name(role).to_string(), json!(v.to_string())))
        .collect();
    json!({
        "n": r.n,
        "class": r.class.to_string(),
        "total": r.total.to_string(),
        "by_path_count": by_k,
        "by_role_of_1": by_role,
    })
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let class = class_of(a.class, &a.variant)?;
    if a.growth {
        let rows: Vec<Value> = match class {
            PartitionClass::Ordered2(v) => {
                let g = estimate_ordered2_growth(a.n, v)?;
                let ratios: std::collections::BTreeMap<usize, f64> = g.ratios().into_iter().collect();
                g.counts
                    .iter()
                    .map(|&(n, c)| json!({"n": n, "count": c.to_string(), "ratio": ratios.get(&n)}))
                    .collect()
            }
            _ => {
                let mut prev: Option<u64> = None;
                let mut rows = Vec::new();
                for n in 1..=a.n {
                    let c = count_partitions(n, class)?.total;
                    let ratio = prev.filter(|&p| p > 0).map(|p| c as f64 / p as f64);
                    rows.push(json!({"n": n, "count": c.to_string(), "ratio": ratio}));
                    prev = Some(c);
                }
                rows
            }
        };
        let doc = json!({
            "class": class.to_string(),
            "exploratory": matches!(class, PartitionClass::Ordered2(_)),
            "rows": rows,
        });
        writeln!(out, "{}", to_json_line(doc))?;
        return Ok(());
    }
    if a.jsonl {
        let mut io_err = None;
        let report = enumerate_partitions(a.n, class, |p| {
            if io_err.is_none() {
                if let Err(e) = writeln!(out, "{}", p.to_json()) {
                    io_err = Some(e);
                }
            }
        })?;
        if let Some(e) = io_err {
            return Err(e.into());
        }
        eprintln!("{}", serde_json::to_string(&report_json(&report)).expect("json"));
    } else {
        let report = count_partitions(a.n, class)?;
        writeln!(out, "{}", to_json_line(report_json(&report)))?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let failed = if a.quick {
        let report = run_verification(VerifyOptions::quick());
        match a.format {
            ReportFormat::Text => {
                for c in &report.checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{tag}  {}  [{}]", c.name, c.detail)?;
                }
            }
            ReportFormat::Json => {
                let v = serde_json::to_value(&report).expect("report serializes");
                writeln!(out, "{}", to_json_line(v))?;
            }
        }
        report.checks.iter().filter(|c| !c.passed).count()
    } else {
        let criteria = run_acceptance();
        match a.format {
            ReportFormat::Text => {
                for c in &criteria {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{tag} {:>2} {}: {}", c.id, c.title, c.detail)?;
                    eprintln!("criterion {} took {:.2}s", c.id, c.seconds);
                }
            }
            ReportFormat::Json => {
                let mut v = serde_json::to_value(&criteria).expect("criteria serialize");
                if let Value::Array(items) = &mut v {
                    for item in items {
                        if let Value::Object(m) = item {
                            m.remove("seconds");
                        }
                    }
                }
                writeln!(out, "{}", to_json_line(v))?;
            }
        }
        criteria.iter().filter(|c| !c.passed).count()
    };
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn read_source(spec: &str) -> Result<String, Failure> {
    let trimmed = spec.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(spec.to_string());
    }
    if spec == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let path = spec.strip_prefix('@').unwrap_or(spec);
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn asymptotics(a: &AsymptoticsArgs, out: &mut dyn Write) -> Outcome {
    let rel = if a.relation.starts_with('@') {
        AlgebraicRelation::from_coefficient_list("custom", &read_source(&a.relation)?)?
    } else {
        AlgebraicRelation::parse(&a.relation)?
    };
    let res = bender_growth(&rel)?;
    match a.format {
        ReportFormat::Json => {
            let doc = json!({
                "relation": res.relation,
                "r": res.r,
                "s": res.s,
                "growth": res.growth,
                "f_residual": res.f_residual,
                "fw_residual": res.fw_residual,
                "newton_steps": res.newton_steps,
                "assumption": ASSUMPTION,
            });
            writeln!(out, "{}", to_json_line(doc))?;
        }
        ReportFormat::Text => {
            writeln!(out, "relation     {rel}")?;
            writeln!(out, "r            {:.15}", res.r)?;
            writeln!(out, "s            {:.15}", res.s)?;
            writeln!(out, "growth       {:.15}", res.growth)?;
            writeln!(out, "|F(r,s)|     {:.3e}", res.f_residual)?;
            writeln!(out, "|F_w(r,s)|   {:.3e}", res.fw_residual)?;
            writeln!(out, "note         {ASSUMPTION}")?;
        }
    }
    Ok(())
}

fn real_arg(name: &str, s: &str) -> Result<f64, Failure> {
    let t = s.trim().to_ascii_lowercase().replace(' ', "");
    if matches!(t.as_str(), "1+sqrt2" | "1+sqrt(2)" | "silver") {
        return Ok(SILVER_RATIO);
    }
    t.parse::<f64>()
        .map_err(|_| Failure::Usage(format!("--{name}: `{s}` is not a number")))
}

fn optimize(a: &OptimizeArgs, out: &mut dyn Write) -> Outcome {
    let res = optimize_alpha(real_arg("beta", &a.beta)?, real_arg("gamma", &a.gamma)?, real_arg("c", &a.c)?)?;
    match a.format {
        ReportFormat::Json => {
            let v = serde_json::to_value(res).expect("result serializes");
            writeln!(out, "{}", to_json_line(v))?;
        }
        ReportFormat::Text => {
            writeln!(out, "alpha*   {:.12}", res.alpha_star)?;
            writeln!(out, "growth   {:.12}", res.growth_per_point)?;
        }
    }
    Ok(())
}

fn write_svg(path: Option<&std::path::Path>, graph: &ChainGraph) -> Outcome {
    if let Some(p) = path {
        std::fs::write(p, svg::render_graph(graph))?;
    }
    Ok(())
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> Outcome {
    let svg_path = a.svg.as_deref();
    let doc = match &a.op {
        ConstructOp::Decompose { input } => {
            let g = ChainGraph::from_json(&read_source(input)?)?;
            let d = decompose_polygonization(&g)?;
            write_svg(svg_path, &g)?;
            json!({"upper": d.upper, "lower": d.lower, "k": d.k})
        }
        ConstructOp::Compose { upper, lower } => {
            let pu = PathPartition::from_json(&read_source(upper)?)?;
            let pl = PathPartition::from_json(&read_source(lower)?)?;
            let o = compose_pair(&pu, &pl)?;
            write_svg(svg_path, &o.graph)?;
            serde_json::to_value(&o).expect("outcome serializes")
        }
        ConstructOp::Hamiltonian { upper, lower } => {
            let pu = PathPartition::from_json(&read_source(upper)?)?;
            let pl = PathPartition::from_json(&read_source(lower)?)?;
            let g = build_hamiltonian_path(&pu, &pl)?;
            write_svg(svg_path, &g)?;
            serde_json::to_value(&g).expect("graph serializes")
        }
        ConstructOp::Close { input } => {
            let g = ChainGraph::from_json(&read_source(input)?)?;
            let closed = close_to_polygonization(&g)?;
            write_svg(svg_path, &closed)?;
            serde_json::to_value(&closed).expect("graph serializes")
        }
        ConstructOp::AbFamily { i, n, m, counts_only } => {
            let config = DoubleChainConfig::new(n.unwrap_or(*i), m.unwrap_or(*i))?;
            let fam = ab_family(*i, config)?;
            if *counts_only {
                json!({"i": fam.i, "a": fam.a.len(), "b": fam.b.len()})
            } else {
                json!({"i": fam.i, "a_count": fam.a.len(), "b_count": fam.b.len(), "a": fam.a, "b": fam.b})
            }
        }
        ConstructOp::CountPolygonizations { n, m, method } => {
            let config = DoubleChainConfig::new(*n, *m)?;
            let mut doc = Map::new();
            doc.insert("n".into(), json!(n));
            doc.insert("m".into(), json!(m));
            let exact = matches!(method, CountMethod::Exact | CountMethod::Both)
                .then(|| count_polygonizations_exact(config))
                .transpose()?;
            let geometric = matches!(method, CountMethod::Geometric | CountMethod::Both)
                .then(|| count_polygonizations_geometric(config))
                .transpose()?;
            if let Some(e) = &exact {
                doc.insert("exact".into(), json!(e.to_string()));
            }
            if let Some(g) = &geometric {
                doc.insert("geometric".into(), json!(g.to_string()));
            }
            let value = Value::Object(doc);
            if let (Some(e), Some(g)) = (&exact, &geometric) {
                if e != g {
                    writeln!(out, "{}", to_json_line(value))?;
                    return Err(Failure::Mismatch(format!("pair count {e} differs from geometric count {g}")));
                }
            }
            value
        }
    };
    writeln!(out, "{}", to_json_line(doc))?;
    Ok(())
}

fn render(a: &RenderArgs, out: &mut dyn Write) -> Outcome {
    let svg = if let Some(g) = &a.graph {
        svg::render_graph(&ChainGraph::from_json(&read_source(g)?)?)
    } else if let Some(p) = &a.partition {
        svg::render_partition(&PathPartition::from_json(&read_source(p)?)?)
    } else if let Some(spec) = &a.realization {
        let parse = |s: &str| s.trim().parse::<usize>().ok();
        let (n, m) = spec
            .split_once(',')
            .and_then(|(n, m)| Some((parse(n)?, parse(m)?)))
            .ok_or_else(|| Failure::Usage(format!("--realization expects N,M, got `{spec}`")))?;
        svg::render_realization(&realize(DoubleChainConfig::new(n, m)?))
    } else {
        return Err(Failure::Usage("nothing to render".into()));
    };
    out.write_all(svg.as_bytes())?;
    Ok(())
}

fn tables(a: &TablesArgs, out: &mut dyn Write) -> Outcome {
    let n_max = TABLE_G.len();
    let computed = [base_table(BaseClass::Ncp, n_max), base_table(BaseClass::Ncpws, n_max), base_table(BaseClass::Ordered, n_max)];
    let published = [&TABLE_G, &TABLE_GS, &TABLE_GO];
    let mut rows = Vec::new();
    let mut all_pass = true;
    for n in 1..=n_max {
        let vals: Vec<(String, u64)> = computed
            .iter()
            .zip(published)
            .map(|(t, p)| (t.get(n).expect("computed").to_string(), p[n - 1]))
            .collect();
        let pass = vals.iter().all(|(c, p)| *c == p.to_string());
        all_pass &= pass;
        rows.push((n, vals, pass));
    }
    match a.format {
        ReportFormat::Text => {
            writeln!(
                out,
                "{:>3} {:>9} {:>9} {:>7} {:>7} {:>7} {:>7} status",
                "n", "g", "g*", "gs", "gs*", "go", "go*"
            )?;
            for (n, v, pass) in &rows {
                writeln!(
                    out,
                    "{n:>3} {:>9} {:>9} {:>7} {:>7} {:>7} {:>7} {}",
                    v[0].0,
                    v[0].1,
                    v[1].0,
                    v[1].1,
                    v[2].0,
                    v[2].1,
                    if *pass { "PASS" } else { "FAIL" }
                )?;
            }
            writeln!(out, "(* published values)")?;
        }
        ReportFormat::Json => {
            let doc: Vec<Value> = rows
                .iter()
                .map(|(n, v, pass)| {
                    json!({
                        "n": n,
                        "g": v[0].0, "g_published": v[0].1.to_string(),
                        "gs": v[1].0, "gs_published": v[1].1.to_string(),
                        "go": v[2].0, "go_published": v[2].1.to_string(),
                        "status": if *pass { "PASS" } else { "FAIL" },
                    })
                })
                .collect();
            writeln!(out, "{}", to_json_line(Value::Array(doc)))?;
        }
    }
    if !all_pass {
        return Err(Failure::Mismatch("computed tables differ from the published ones".into()));
    }
    Ok(())
}
