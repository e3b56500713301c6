//! `tq`: enumerate tilting modules, export tilting quivers, compare counts
//! with the closed forms, and run the verification suites.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tiltquiver::quiver::{DynkinKind, Quiver};
use tiltquiver::tilting::{check_guard, closed_form_counts, ext_table, tilting_quiver, ExtTable, TiltingQuiver};
use tiltquiver::verify::{run_suite, Instance, Suite};
use tiltquiver::Error;

#[derive(Parser)]
#[command(name = "tq", version, about = "Tilting modules and tilting quivers of type A and D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the basic tilting modules
    Enumerate(Target),
    /// Export the tilting quiver
    Graph(Target),
    /// Vertex and arrow counts, enumerated and closed form
    Counts(Target),
    /// Run a verification suite and print its report
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
    },
    /// Counts for every orientation of the underlying tree
    ReflectScan(Target),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
    Csv,
}

#[derive(Args)]
struct Target {
    #[arg(long = "type", value_enum, ignore_case = true)]
    kind: Kind,
    /// Dynkin rank (number of vertices)
    #[arg(long)]
    rank: usize,
    /// One 0/1 bit per edge, "reference", or "all"
    #[arg(long, default_value = "reference")]
    orientation: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Usage(String),
    Run(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RankOutOfRange { .. } | Error::OrientationLength { .. } | Error::UnknownSuite(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Run(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

impl Target {
    fn instance(&self) -> Instance {
        match self.kind {
            Kind::A => Instance::a(self.rank),
            Kind::D => Instance::d(self.rank),
        }
    }

    fn dynkin(&self) -> DynkinKind {
        self.instance().kind
    }

    fn base(&self) -> Result<Quiver, Failure> {
        let q = self.instance().quiver()?;
        check_guard(&q)?;
        Ok(q)
    }

    fn quivers(&self) -> Result<Vec<(String, Quiver)>, Failure> {
        let base = self.base()?;
        let bits = |q: &Quiver| q.orientation().iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        match self.orientation.as_str() {
            "reference" => Ok(vec![(bits(&base), base)]),
            "all" => Ok(base.all_orientations().into_iter().map(|q| (bits(&q), q)).collect()),
            s => {
                let parsed: Option<Vec<bool>> = s
                    .chars()
                    .map(|c| match c {
                        '0' => Some(false),
                        '1' => Some(true),
                        _ => None,
                    })
                    .collect();
                let parsed = parsed.ok_or_else(|| Failure::Usage(format!("orientation {s:?} is not a bit string")))?;
                let q = base.with_orientation(&parsed)?;
                Ok(vec![(s.to_string(), q)])
            }
        }
    }

    fn single(&self) -> Result<Quiver, Failure> {
        let mut qs = self.quivers()?;
        if qs.len() != 1 {
            return Err(Failure::Usage("--orientation all is only accepted by counts and reflect-scan".into()));
        }
        Ok(qs.remove(0).1)
    }
}

fn build(q: &Quiver) -> Result<(ExtTable, TiltingQuiver), Failure> {
    let table = ext_table(q)?;
    let tq = tilting_quiver(&table)?;
    Ok((table, tq))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn enumerate(t: &Target, out: &mut impl Write) -> Outcome {
    let (table, tq) = build(&t.single()?)?;
    let delta: Vec<u32> = tq.degrees().iter().map(|(s, e)| s + e).collect();
    match t.format {
        Format::Text => {
            for (node, d) in tq.nodes.iter().zip(&delta) {
                writeln!(out, "{}  delta={d}", table.module_label(node))?;
            }
        }
        Format::Json => {
            let nodes: Vec<serde_json::Value> = tq
                .nodes
                .iter()
                .zip(&delta)
                .map(|(node, d)| {
                    serde_json::json!({
                        "ids": node,
                        "label": table.module_label(node),
                        "dim": table.module_dim(node).0,
                        "delta": d,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&nodes).expect("json"))?;
        }
        Format::Csv => {
            writeln!(out, "index,label,dim,delta")?;
            for (i, (node, d)) in tq.nodes.iter().zip(&delta).enumerate() {
                let dim = table.module_dim(node).render();
                writeln!(out, "{i},{},{},{d}", csv_field(&table.module_label(node)), csv_field(&dim))?;
            }
        }
        Format::Dot => return Err(Failure::Usage("enumerate supports text, json and csv".into())),
    }
    Ok(())
}

fn graph(t: &Target, out: &mut impl Write) -> Outcome {
    let (table, tq) = build(&t.single()?)?;
    match t.format {
        Format::Dot | Format::Text => write!(out, "{}", tq.to_dot(&table))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&tq.to_json(&table)).expect("json"))?,
        Format::Csv => {
            writeln!(out, "source,target")?;
            for (s, e) in &tq.arrows {
                writeln!(out, "{s},{e}")?;
            }
        }
    }
    Ok(())
}

fn counts(t: &Target, out: &mut impl Write) -> Outcome {
    let closed = closed_form_counts(t.dynkin(), t.rank)?;
    let mut seen = BTreeSet::new();
    for (_, q) in t.quivers()? {
        let (_, tq) = build(&q)?;
        seen.insert((tq.node_count(), tq.arrow_count()));
    }
    let name = match t.kind {
        Kind::A => "A",
        Kind::D => "D",
    };
    match t.format {
        Format::Text => {
            for (v, a) in &seen {
                writeln!(out, "vertices={v} arrows={a}")?;
            }
            if closed.d3_alias {
                writeln!(out, "note: D3 is A3")?;
            }
        }
        Format::Csv => {
            writeln!(out, "type,rank,vertices,arrows,source")?;
            for (v, a) in &seen {
                writeln!(out, "{name},{},{v},{a},enumeration", t.rank)?;
            }
            writeln!(out, "{name},{},{},{},closed-form", t.rank, closed.vertices, closed.arrows)?;
        }
        Format::Json => {
            let enumerated: Vec<_> = seen.iter().map(|(v, a)| serde_json::json!({"vertices": v, "arrows": a})).collect();
            let value = serde_json::json!({
                "type": name,
                "rank": t.rank,
                "enumeration": enumerated,
                "closed_form": closed,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
        }
        Format::Dot => return Err(Failure::Usage("counts supports text, json and csv".into())),
    }
    let want = (closed.vertices.clone(), closed.arrows.clone());
    if seen.iter().any(|&(v, a)| (v.into(), a.into()) != want) {
        return Err(Failure::Verify(
            serde_json::json!({"check": "closed-form-counts", "enumeration": seen, "closed_form": closed}).to_string(),
        ));
    }
    Ok(())
}

fn reflect_scan(t: &Target, out: &mut impl Write) -> Outcome {
    let mut rows = Vec::new();
    for (bits, q) in t.quivers()? {
        let (_, tq) = build(&q)?;
        rows.push((bits, q.to_string(), tq.node_count(), tq.arrow_count()));
    }
    let distinct: BTreeSet<(usize, usize)> = rows.iter().map(|r| (r.2, r.3)).collect();
    match t.format {
        Format::Text => {
            for (bits, q, v, a) in &rows {
                writeln!(out, "{bits}  {q}  vertices={v} arrows={a}")?;
            }
            writeln!(out, "distinct={}", distinct.len())?;
        }
        Format::Csv => {
            writeln!(out, "orientation,quiver,vertices,arrows")?;
            for (bits, q, v, a) in &rows {
                writeln!(out, "{bits},{},{v},{a}", csv_field(q))?;
            }
        }
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(bits, q, v, a)| serde_json::json!({"orientation": bits, "quiver": q, "vertices": v, "arrows": a}))
                .collect();
            let value = serde_json::json!({"orientations": list, "distinct": distinct});
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
        }
        Format::Dot => return Err(Failure::Usage("reflect-scan supports text, json and csv".into())),
    }
    if distinct.len() != 1 {
        return Err(Failure::Verify(serde_json::json!({"check": "orientation-invariance", "distinct": distinct}).to_string()));
    }
    Ok(())
}

fn verify(suite: &str, max_rank: usize, out: &mut impl Write) -> Outcome {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, max_rank)?;
    writeln!(out, "{}", report.to_json())?;
    if !report.ok() {
        let failures = serde_json::json!({"failed": report.failed, "records": report.failures()});
        return Err(Failure::Verify(serde_json::to_string_pretty(&failures).expect("json")));
    }
    Ok(())
}

fn threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("TQ_THREADS") else {
        return Ok(());
    };
    let n: usize = value.parse().map_err(|_| Failure::Usage(format!("TQ_THREADS={value:?} is not a number")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Run(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = threads().and_then(|()| match &cli.command {
        Command::Enumerate(t) => enumerate(t, &mut out),
        Command::Graph(t) => graph(t, &mut out),
        Command::Counts(t) => counts(t, &mut out),
        Command::Verify { suite, max_rank } => verify(suite, *max_rank, &mut out),
        Command::ReflectScan(t) => reflect_scan(t, &mut out),
    });
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("{}", serde_json::json!({ "error": msg }));
            ExitCode::from(1)
        }
        Err(Failure::Verify(report)) => {
            eprintln!("{report}");
            ExitCode::from(1)
        }
    }
}
