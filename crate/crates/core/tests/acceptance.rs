//! Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
//! Set ASCSEQ_HEAVY=1 to extend the inversion-sequence conjecture to n = 10.

use ascseq::fishburn::{check_foata, check_matrix_symmetries, check_prop_syminv, check_conjecture_quintuple, enumerate_fishburn_matrices, pattern_avoiders};
use ascseq::genfun::{
    admissible_quadruple, check_bisymmetric_quadruple, eval_fishburn, eval_g_quadruple, eval_g_quintuple, eval_g_tilde,
};
use ascseq::qhyper::{admissible_cor2_32, admissible_cor32, admissible_tf43, verify_cor2_32, verify_cor32, verify_tf43};
use ascseq::seq::for_each_ascent_sequence;
use ascseq::series::{int, ParamPoint};
use ascseq::verify::{
    conjecture_suite, genfun_suite, label_check, lemma_suite, phi_suite, qseries_suite, rules_check, sample_points, Check,
    Config,
};
use std::process::ExitCode;
use std::time::Instant;

// |A_n| for n = 1..10 as listed in the source.
const LISTED: [u64; 10] = [1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608];

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn note(&mut self, what: impl Into<String>, ok: bool) {
        let what = what.into();
        if !ok {
            self.pass = false;
            self.notes.push(format!("failed: {what}"));
        }
    }

    fn checks(&mut self, checks: &[Check]) {
        for c in checks {
            self.note(format!("{} [{}]", c.check, c.scale), c.verdict);
        }
    }
}

fn pick(checks: &[Check], prefixes: &[&str]) -> Vec<Check> {
    let out: Vec<Check> = checks.iter().filter(|c| prefixes.iter().any(|p| c.check.starts_with(p))).cloned().collect();
    assert!(!out.is_empty(), "no checks named {prefixes:?}");
    out
}

fn c1() -> Outcome {
    let mut o = Outcome::new();
    for (i, &want) in LISTED.iter().enumerate() {
        let mut c = 0u64;
        for_each_ascent_sequence(i + 1, |_| c += 1);
        o.note(format!("|A_{}| = {c}, listed {want}", i + 1), c == want);
    }
    for n in 1..=9 {
        o.note(format!("avoiders n={n}"), pattern_avoiders(n).len() as u64 == LISTED[n - 1]);
    }
    for n in 1..=8 {
        o.note(format!("matrices n={n}"), enumerate_fishburn_matrices(n).len() as u64 == LISTED[n - 1]);
    }
    let s = eval_fishburn(10);
    o.note("Fishburn series to order 10", s.coeff(0) == int(0) && (1..=10).all(|n| s.coeff(n) == int(LISTED[n - 1] as i64)));
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    o.checks(&phi_suite(9));
    o
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    let checks = lemma_suite(8);
    for name in ["f2", "phi1", "f3", "f4", "f51", "f52", "f53", "f54", "g", "g53", "h2", "h3", "h4", "h5", "phi2", "worked examples"] {
        o.note(format!("{name} present"), checks.iter().any(|c| c.check == name || c.check.starts_with(&format!("{name} "))));
    }
    o.checks(&checks);
    o
}

fn c4(cfg: &Config, genfun: &[Check]) -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=9 {
        o.note(format!("A_{n} bisymmetric quadruple"), check_bisymmetric_quadruple(n));
    }
    let mut c = cfg.clone();
    c.n = Some(1);
    o.checks(&pick(&conjecture_suite(&c), &["G(x,y,u,z)"]));
    o.checks(&pick(genfun, &["G quadruple symmetry"]));
    o
}

fn c5(genfun: &[Check]) -> Outcome {
    let mut o = Outcome::new();
    o.checks(&pick(genfun, &["G quadruple = brute", "G tilde = brute", "G quintuple = brute", "G quintuple specializations"]));
    o
}

fn c6(genfun: &[Check]) -> Outcome {
    let mut o = Outcome::new();
    o.checks(&pick(genfun, &["functional equation", "case forms"]));
    o
}

fn c7(cfg: &Config) -> Outcome {
    let mut o = Outcome::new();
    let checks = qseries_suite(cfg);
    for name in ["Sears", "tf43 j=3", "tf32 j=3", "tf2_32 j=3", "tff0", "tff "] {
        o.note(format!("{name} present"), checks.iter().any(|c| c.check.starts_with(name)));
    }
    o.checks(&checks);
    o
}

fn c8(genfun: &[Check]) -> Outcome {
    let mut o = Outcome::new();
    o.checks(&pick(genfun, &["H_n, B_n symmetric", "Garsia-Gessel"]));
    for n in 1..=7 {
        o.note(format!("Foata n={n}"), check_foata(n));
    }
    let top = if std::env::var("ASCSEQ_HEAVY").is_ok_and(|v| v == "1") { 10 } else { 8 };
    for n in 1..=top {
        o.note(format!("I_{n} quintuple"), check_conjecture_quintuple(n));
    }
    for n in 1..=8 {
        o.note(format!("I_{n} proposition"), check_prop_syminv(n));
    }
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    let names = ["(rowsum1,ne,tr) ~ (rowsum1,tr,ne)", "(rowsum1,ne) symmetric", "(rowsum1,tr) symmetric"];
    let rows: Vec<[bool; 3]> = (1..=7).map(check_matrix_symmetries).collect();
    for (k, name) in names.iter().enumerate() {
        let bad: Vec<usize> = (1..=7).filter(|&n| !rows[n - 1][k]).collect();
        o.note(format!("{name} at n = {bad:?}"), bad.is_empty());
    }
    o
}

fn prefix_of(short: &[String], long: &[String]) -> bool {
    short.len() <= long.len() && short.iter().zip(long).all(|(a, b)| a == b)
}

fn c10(cfg: &Config, genfun: &[Check]) -> Outcome {
    let mut o = Outcome::new();
    o.checks(&[label_check(9), rules_check(8)]);
    o.checks(&pick(genfun, &["G quadruple ceiling", "G tilde ceiling", "G quintuple ceiling"]));

    let f6 = eval_fishburn(6);
    o.note("Fishburn series order 6 vs 10", f6.coeffs() == eval_fishburn(10).truncate(6).coeffs());
    type Eval = fn(&ParamPoint, usize) -> Result<ascseq::series::RatSeries, ascseq::genfun::GfError>;
    let evals: [(&str, &[&str], Eval); 3] = [
        ("G quadruple", &["x", "y", "u", "z"], eval_g_quadruple),
        ("G tilde", &["x", "y", "u", "v"], eval_g_tilde),
        ("G quintuple", &["x", "y", "u", "z", "v"], eval_g_quintuple),
    ];
    for (k, (name, vars, eval)) in evals.into_iter().enumerate() {
        for pt in sample_points(cfg, 900 + k as u64, vars, admissible_quadruple) {
            let ok = match (eval(&pt, 5), eval(&pt, 8)) {
                (Ok(a), Ok(b)) => a.coeffs() == b.truncate(5).coeffs(),
                _ => false,
            };
            o.note(format!("{name} order 5 vs 8 at {}", serde_json::to_string(&pt).unwrap_or_default()), ok);
        }
    }
    type QEval = fn(i64, &ParamPoint, usize) -> Result<ascseq::genfun::GfReport, ascseq::qhyper::QError>;
    let qevals: [(&str, &[&str], fn(&ParamPoint) -> bool, QEval); 3] = [
        ("tf43", &["alpha", "b", "c", "d", "e"], admissible_tf43, verify_tf43),
        ("tf32", &["beta", "c", "delta", "e"], admissible_cor32, verify_cor32),
        ("tf2_32", &["alpha", "b", "c", "e"], admissible_cor2_32, verify_cor2_32),
    ];
    for (k, (name, vars, adm, eval)) in qevals.into_iter().enumerate() {
        for pt in sample_points(cfg, 950 + k as u64, vars, adm) {
            let ok = match (eval(2, &pt, 8), eval(2, &pt, 12)) {
                (Ok(a), Ok(b)) => prefix_of(&a.left, &b.left) && prefix_of(&a.right, &b.right),
                _ => false,
            };
            o.note(format!("{name} order 8 vs 12 at {}", serde_json::to_string(&pt).unwrap_or_default()), ok);
        }
    }
    o
}

fn main() -> ExitCode {
    let cfg = Config::new();
    let t = Instant::now();
    let genfun = genfun_suite(&cfg);
    let runs: Vec<(usize, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "Fishburn counts", Box::new(c1)),
        (2, "Phi septuple transport, n<=9", Box::new(c2)),
        (3, "lemma bijections n<=8 and worked examples", Box::new(c3)),
        (4, "bisymmetric quadruple, enumeration and series", Box::new(|| c4(&cfg, &genfun))),
        (5, "closed forms against brute force", Box::new(|| c5(&genfun))),
        (6, "functional equation and case forms", Box::new(|| c6(&genfun))),
        (7, "q-series transformations", Box::new(|| c7(&cfg))),
        (8, "H/B symmetry, trivariate identity, Foata, inversion sequences", Box::new(|| c8(&genfun))),
        (9, "Fishburn matrix symmetries with tr", Box::new(c9)),
        (10, "labels, rules, truncation stability", Box::new(|| c10(&cfg, &genfun))),
    ];
    let mut failed = Vec::new();
    for (k, what, run) in &runs {
        let start = Instant::now();
        let o = run();
        println!("criterion {k}: {} {what} ({:.1?})", if o.pass { "PASS" } else { "FAIL" }, start.elapsed());
        for n in &o.notes {
            println!("    {n}");
        }
        if !o.pass {
            failed.push(*k);
        }
    }
    println!("{} of {} criteria pass in {:.1?}", runs.len() - failed.len(), runs.len(), t.elapsed());
    // Criterion 9 is false as stated: tr is not equidistributed with ne on upper-triangular
    // Fishburn matrices (n = 3 already differs). It is reported, not asserted.
    if failed.iter().any(|&k| k != 9) {
        return ExitCode::FAILURE;
    }
    if !failed.contains(&9) {
        println!("criterion 9 unexpectedly passes; the known counterexample no longer reproduces");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
