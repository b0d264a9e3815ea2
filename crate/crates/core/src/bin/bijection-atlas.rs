use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use bijection_atlas::convert::{self, Kind, Object};
use bijection_atlas::counting::enumerate::{a_k_sequence, EnumOptions, Family};
use bijection_atlas::counting::{distribution, numbers, series};
use bijection_atlas::perm::Statistic;
use bijection_atlas::verify::{self, Limits};
use bijection_atlas::{render, AtlasError, Result, SCHEMA};

#[derive(Parser)]
#[command(name = "bijection-atlas", version, about = "Statistics, bijections, and exhaustive checks for bi-increasing permutations")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest size used by `verify`.
    #[arg(long, global = true, default_value_t = 6)]
    nmax: usize,
    /// Allow sizes above the enumeration caps.
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for exhaustive enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Add the generation time to the output.
    #[arg(long, global = true)]
    timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of a permutation, polyomino, diagram, or path.
    Stats(Input),
    /// Convert an object along named bijections.
    Convert {
        #[command(flatten)]
        input: Input,
        /// Target kind.
        #[arg(long)]
        to: String,
        /// Comma-separated edges, e.g. `step,para,dv`; `name-inv` runs an edge backwards.
        #[arg(long)]
        route: Option<String>,
    },
    /// Exact distribution table over S_n or B_n.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// One or two statistics, comma-separated.
        #[arg(long)]
        stat: String,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// ASCII drawing of an object.
    Render(Input),
    /// Closed-form and brute-force counts.
    Count(CountArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    #[arg(long)]
    perm: Option<String>,
    #[arg(long)]
    step: Option<String>,
    #[arg(long)]
    parallelogram: Option<String>,
    #[arg(long)]
    skew: Option<String>,
    #[arg(long)]
    staircase: Option<String>,
    #[arg(long)]
    dyck: Option<String>,
    #[arg(long)]
    motzkin2: Option<String>,
}

impl Input {
    fn object(&self) -> Result<Object> {
        let pairs = [
            (Kind::Perm, &self.perm),
            (Kind::Step, &self.step),
            (Kind::Parallelogram, &self.parallelogram),
            (Kind::Skew, &self.skew),
            (Kind::Staircase, &self.staircase),
            (Kind::Dyck, &self.dyck),
            (Kind::Motzkin2, &self.motzkin2),
        ];
        let (kind, payload) = pairs
            .into_iter()
            .find_map(|(k, p)| p.as_ref().map(|p| (k, p)))
            .expect("clap enforces exactly one input");
        Object::parse(kind, payload)
    }
}

#[derive(Args)]
struct CountArgs {
    /// catalan, narayana, motzkin, fine, m-nk, greatest-excedance, a-k,
    /// partitions-by-rank, skew-by-rank, fixed-set, chu-vandermonde, q-series
    sequence: String,
    #[arg(long)]
    n: Option<u64>,
    /// Second index (w, k, or r depending on the sequence).
    #[arg(long)]
    k: Option<u64>,
    /// Fixed-point set for `fixed-set`, comma-separated.
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    c: Option<u64>,
}

fn need(x: Option<u64>, flag: &str) -> Result<u64> {
    x.ok_or_else(|| AtlasError::OutOfRange(format!("--{flag} is required")))
}

fn number(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn count(args: &CountArgs, opts: EnumOptions) -> Result<Value> {
    let n = || need(args.n, "n");
    let k = || need(args.k, "k");
    let value = match args.sequence.as_str() {
        "catalan" => number(&numbers::catalan(n()?)),
        "narayana" => number(&numbers::narayana(n()?, k()?)?),
        "motzkin" => number(&numbers::motzkin(n()?)),
        "fine" => number(&numbers::fine(n()?)),
        "m-nk" => number(&numbers::m_nk(n()?, k()?)?),
        "greatest-excedance" => number(&numbers::greatest_excedance_count(n()?, k()?)?),
        "a-k" => number(&a_k_sequence(n()? as usize, k()? as usize, opts)?),
        "partitions-by-rank" => number(&numbers::partitions_by_rank(n()?, k()?)?),
        "skew-by-rank" => number(&numbers::skew_by_rank(n()?, k()?)?),
        "fixed-set" => {
            let set = match args.set.as_deref().map(str::trim) {
                None | Some("") => Vec::new(),
                Some(s) => s
                    .split(',')
                    .map(|t| t.trim().parse::<u64>().map_err(|_| AtlasError::parse("set: comma-separated positions", format!("bad entry `{t}`"))))
                    .collect::<Result<Vec<_>>>()?,
            };
            number(&numbers::fixed_point_set_count(n()?, &set)?)
        }
        "chu-vandermonde" => json!(numbers::chu_vandermonde_check(need(args.a, "a")?, need(args.b, "b")?, need(args.c, "c")?)?),
        "q-series" => {
            let big_n = n()? as usize;
            let big_k = args.k.map(|k| k as usize).unwrap_or(big_n * big_n / 4);
            return series::dexc_generating_function(big_n, big_k).map(|s| s.to_json());
        }
        other => return Err(AtlasError::Unknown { what: "sequence", name: other.into() }),
    };
    Ok(json!({ "schema": SCHEMA, "sequence": args.sequence, "value": value }))
}

/// Flattens a JSON record into `key: value` lines (text) or `key,value` rows (csv).
fn flat(v: &Value, csv: bool) -> String {
    let scalar = |x: &Value| match x {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(|e| e.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    };
    let mut out = if csv { String::from("key,value\n") } else { String::new() };
    if let Value::Object(m) = v {
        for (k, x) in m {
            if matches!(x, Value::Object(_)) {
                for (k2, y) in x.as_object().unwrap() {
                    out.push_str(&line(&format!("{k}.{k2}"), &scalar(y), csv));
                }
            } else {
                out.push_str(&line(k, &scalar(x), csv));
            }
        }
    }
    out
}

fn line(k: &str, v: &str, csv: bool) -> String {
    if csv {
        let quoted = if v.contains([',', '"', ' ']) { format!("\"{}\"", v.replace('"', "\"\"")) } else { v.to_string() };
        format!("{k},{quoted}\n")
    } else {
        format!("{k}: {v}\n")
    }
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

fn emit_json(mut v: Value, stamp: bool) -> String {
    if stamp {
        v["generated_at"] = json!(now());
    }
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn emit_record(v: Value, format: Format, stamp: bool) -> String {
    match format {
        Format::Json => emit_json(v, stamp),
        Format::Csv => flat(&v, true) + &stamp_line(stamp),
        Format::Text => flat(&v, false) + &stamp_line(stamp),
    }
}

fn stamp_line(stamp: bool) -> String {
    if stamp { format!("# generated_at {}\n", now()) } else { String::new() }
}

/// Output text and exit status of a successful run.
fn run(cli: &Cli) -> Result<(String, u8)> {
    let opts = EnumOptions { jobs: cli.jobs.max(1), force: cli.force };
    let stamp = cli.timestamp;
    Ok(match &cli.command {
        Command::Stats(input) => {
            let v = convert::describe(&input.object()?)?;
            (emit_record(v, cli.format.unwrap_or(Format::Json), stamp), 0)
        }
        Command::Convert { input, to, route } => {
            let obj = input.object()?;
            let target: Kind = to.parse()?;
            let c = convert::convert(&obj, target, route.as_deref())?;
            let route: Vec<String> = c.route.iter().map(|h| h.label()).collect();
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => (format!("{}\n{}", c.output, stamp_line(stamp)), 0),
                f => {
                    let v = json!({
                        "schema": SCHEMA,
                        "from": { "kind": obj.kind().name(), "payload": obj.to_string() },
                        "to": { "kind": target.name(), "payload": c.output.to_string() },
                        "route": route,
                    });
                    (emit_record(v, f, stamp), 0)
                }
            }
        }
        Command::Enumerate { family, n, stat } => {
            let family: Family = family.parse()?;
            let stats = Statistic::parse_list(stat)?;
            if stats.len() > 2 {
                return Err(AtlasError::invalid("statistic list", "at most two statistics"));
            }
            let t = distribution(family, *n, &stats, opts)?;
            let out = match cli.format.unwrap_or(Format::Text) {
                Format::Json => emit_json(t.to_json(), stamp),
                Format::Csv => t.to_csv()? + &stamp_line(stamp),
                Format::Text => t.to_text() + &stamp_line(stamp),
            };
            (out, 0)
        }
        Command::Verify { suite } => {
            let report = verify::verify(suite, &Limits::uniform(cli.nmax), opts)?;
            let code = if report.passed() { 0 } else { 5 };
            let out = match cli.format.unwrap_or(Format::Text) {
                Format::Json => emit_json(report.to_json(), stamp),
                _ => report.to_text() + &stamp_line(stamp),
            };
            (out, code)
        }
        Command::Render(input) => (render::render(&input.object()?), 0),
        Command::Count(args) => {
            let v = count(args, opts)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text if v.get("value").is_some() => (format!("{}\n{}", v["value"].to_string().trim_matches('"'), stamp_line(stamp)), 0),
                Format::Text => (emit_json(v, stamp), 0),
                f => (emit_record(v, f, stamp), 0),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
