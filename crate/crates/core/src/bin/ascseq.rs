use ascseq::bijections::{phi, phi_inv};
use ascseq::genfun::{joint_distribution, Family};
use ascseq::seq::{AscentSequence, FISHBURN};
use ascseq::verify::{family_count, run_suite, Check, Config, Suite, SCHEMA_VERSION};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::process::ExitCode;

const N_CAP: usize = 12;
const ORDER_CAP: usize = 30;

#[derive(Parser)]
#[command(name = "ascseq", version, about = "Enumerate and verify statistics on ascent sequences and Fishburn structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Count a family for lengths 1..=n and compare with the known values
    Count {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Apply Phi to a comma-separated ascent sequence
    Phi { sequence: String },
    /// Run a verification suite
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long = "suite", value_enum)]
        suite_flag: Option<SuiteArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        points: usize,
        /// allow n >= 10
        #[arg(long)]
        heavy: bool,
    },
    /// Joint distribution of chosen statistics
    Distribution {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// comma-separated statistic names; all of the family's statistics when omitted
        #[arg(long)]
        stats: Option<String>,
        #[arg(long)]
        heavy: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ascent,
    Inversion,
    Permutation,
    Matrix,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Ascent => Family::Ascent,
            FamilyArg::Inversion => Family::Inversion,
            FamilyArg::Permutation => Family::Permutation,
            FamilyArg::Matrix => Family::Matrix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Phi,
    Distributions,
    Genfun,
    Qseries,
    Conjecture,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Phi => Suite::Phi,
            SuiteArg::Distributions => Suite::Distributions,
            SuiteArg::Genfun => Suite::Genfun,
            SuiteArg::Qseries => Suite::Qseries,
            SuiteArg::Conjecture => Suite::Conjecture,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Outcome {
    Pass,
    Fail,
    Usage(String),
}

fn check_n(n: usize, heavy: bool) -> Result<(), String> {
    if n > N_CAP {
        return Err(format!("n = {n} exceeds the cap {N_CAP}"));
    }
    if n >= 10 && !heavy {
        return Err(format!("n = {n} is a long run; pass --heavy"));
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn expected(family: Family, n: usize) -> u64 {
    match family {
        Family::Inversion => (1..=n as u64).product(),
        _ => FISHBURN[n],
    }
}

fn cmd_count(family: Family, n: usize, format: Format) -> Outcome {
    if let Err(e) = check_n(n, true) {
        return Outcome::Usage(e);
    }
    let rows: Vec<(usize, u64, u64)> = (1..=n).map(|k| (k, family_count(family, k), expected(family, k))).collect();
    let ok = rows.iter().all(|r| r.1 == r.2);
    match format {
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|r| json!({ "n": r.0, "count": r.1, "expected": r.2, "match": r.1 == r.2 })).collect();
            println!("{}", json!({ "schema": SCHEMA_VERSION, "family": family.name(), "counts": v, "verdict": ok }));
        }
        Format::Csv => {
            println!("n,count,expected,match");
            for r in &rows {
                println!("{},{},{},{}", r.0, r.1, r.2, r.1 == r.2);
            }
        }
        Format::Text => {
            for r in &rows {
                println!("{} n={}: {} (expected {})", family.name(), r.0, r.1, r.2);
            }
        }
    }
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn cmd_phi(text: &str, format: Format) -> Outcome {
    let s: AscentSequence = match text.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::Usage(format!("invalid sequence {text:?}: {e}")),
    };
    let t = match phi(s.entries()) {
        Ok(t) => t,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let back = phi_inv(&t).ok();
    let t = AscentSequence::new(t).expect("Phi returns an ascent sequence");
    let a = s.stats().septuple();
    let b = t.stats().septuple();
    // (asc,rep,zero,max,ealm,rmin,rpos) of s against (asc,rep,zero,rmin,rpos,max,ealm) of Phi(s)
    let moved = [b[0], b[1], b[2], b[5], b[6], b[3], b[4]];
    let ok = a == moved && back.as_deref() == Some(s.entries());
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "schema": SCHEMA_VERSION,
                "input": s.entries(),
                "output": t.entries(),
                "stats_input": a,
                "stats_output": b,
                "stat_order": ["asc", "rep", "zero", "max", "ealm", "rmin", "rpos"],
                "verdict": ok,
            })
        ),
        Format::Csv => {
            println!("sequence,asc,rep,zero,max,ealm,rmin,rpos");
            println!("\"{}\",{}", join(s.entries()), join(&a));
            println!("\"{}\",{}", join(t.entries()), join(&b));
        }
        Format::Text => {
            println!("s      = ({})", join(s.entries()));
            println!("Phi(s) = ({})", join(t.entries()));
            println!("(asc,rep,zero,max,ealm,rmin,rpos) s      = ({})", join(&a));
            println!("(asc,rep,zero,rmin,rpos,max,ealm) Phi(s) = ({})", join(&moved));
            println!("transport: {}", if ok { "ok" } else { "FAILED" });
        }
    }
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn print_checks(suite: Suite, checks: &[Check], format: Format) {
    let all = checks.iter().all(|c| c.verdict);
    match format {
        Format::Json => {
            let v = json!({ "schema": SCHEMA_VERSION, "suite": suite.name(), "verdict": all, "checks": checks });
            println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
        }
        Format::Csv => {
            println!("check,anchor,scale,verdict");
            for c in checks {
                println!("{},{},{},{}", csv_field(&c.check), csv_field(&c.anchor), csv_field(&c.scale), c.verdict);
            }
        }
        Format::Text => {
            for c in checks {
                println!("{} {} [{}]", if c.verdict { "PASS" } else { "FAIL" }, c.check, c.scale);
            }
            let failed = checks.iter().filter(|c| !c.verdict).count();
            println!("{} checks, {} failed", checks.len(), failed);
        }
    }
}

fn cmd_verify(suite: Suite, cfg: Config, format: Format) -> Outcome {
    if let Some(n) = cfg.n {
        if let Err(e) = check_n(n, cfg.heavy) {
            return Outcome::Usage(e);
        }
    }
    if cfg.order.is_some_and(|o| o == 0 || o > ORDER_CAP) {
        return Outcome::Usage(format!("order must lie in 1..={ORDER_CAP}"));
    }
    if cfg.points == 0 {
        return Outcome::Usage("points must be positive".into());
    }
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in suites {
        if cfg.heavy {
            eprintln!("running {s}");
        }
        checks.extend(run_suite(s, &cfg));
    }
    checks.sort_by(|a, b| a.check.cmp(&b.check));
    print_checks(suite, &checks, format);
    if checks.iter().all(|c| c.verdict) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn cmd_distribution(family: Family, n: usize, stats: Option<String>, heavy: bool, format: Format) -> Outcome {
    if let Err(e) = check_n(n, heavy) {
        return Outcome::Usage(e);
    }
    let names: Vec<String> = match stats {
        Some(s) => s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect(),
        None => family.stat_names().iter().map(|s| s.to_string()).collect(),
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let table = match joint_distribution(family, n, &refs) {
        Ok(t) => t,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    match format {
        Format::Json => {
            let rows: Vec<_> = table.iter().map(|(k, c)| json!({ "stats": k, "count": c })).collect();
            println!("{}", json!({ "schema": SCHEMA_VERSION, "family": family.name(), "n": n, "stat_names": names, "rows": rows }));
        }
        Format::Csv | Format::Text => {
            println!("{},count", names.join(","));
            for (k, c) in &table {
                let cells: Vec<String> = k.iter().map(u32::to_string).collect();
                println!("{},{}", cells.join(","), c);
            }
        }
    }
    Outcome::Pass
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count { family, n } => cmd_count(family.into(), n, cli.format),
        Command::Phi { sequence } => cmd_phi(&sequence, cli.format),
        Command::Verify { suite, suite_flag, n, order, seed, points, heavy } => {
            let cfg = Config { n, order, seed, points, heavy };
            cmd_verify(suite_flag.unwrap_or(suite).into(), cfg, cli.format)
        }
        Command::Distribution { family, n, stats, heavy } => cmd_distribution(family.into(), n, stats, heavy, cli.format),
    };
    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::Fail => ExitCode::from(1),
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
