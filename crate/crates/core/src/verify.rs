//! Verification suites shared by the command line tool and the acceptance tests.

use crate::bijections::*;
use crate::classify::*;
use crate::fishburn::{
    check_avoider_symmetries, check_conjecture_quintuple, check_foata, check_matrix_symmetries, check_prop_syminv,
    enumerate_fishburn_matrices, for_each_permutation, histogram, pattern_avoiders,
};
use crate::genfun::*;
use crate::qhyper::*;
use crate::seq::*;
use crate::series::{ParamPoint, Rat};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;

/// One line of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub anchor: String,
    pub scale: String,
    pub verdict: bool,
    pub details: Value,
}

impl Check {
    fn new(check: &str, anchor: &str, scale: String, verdict: bool, details: Value) -> Check {
        Check { check: check.into(), anchor: anchor.into(), scale, verdict, details }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemmas,
    Phi,
    Distributions,
    Genfun,
    Qseries,
    Conjecture,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Lemmas, Suite::Phi, Suite::Distributions, Suite::Genfun, Suite::Qseries, Suite::Conjecture];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Phi => "phi",
            Suite::Distributions => "distributions",
            Suite::Genfun => "genfun",
            Suite::Qseries => "qseries",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Scale knobs. `None` picks the per-check default.
#[derive(Debug, Clone, Default)]
pub struct Config {
    pub n: Option<usize>,
    pub order: Option<usize>,
    pub seed: u64,
    pub points: usize,
    pub heavy: bool,
}

impl Config {
    pub fn new() -> Config {
        Config { n: None, order: None, seed: 42, points: 5, heavy: false }
    }

    fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    fn order_or(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Runs a suite; checks come back sorted by name.
pub fn run_suite(suite: Suite, cfg: &Config) -> Vec<Check> {
    let mut out = match suite {
        Suite::Lemmas => lemma_suite(cfg.n_or(8)),
        Suite::Phi => phi_suite(cfg.n_or(8)),
        Suite::Distributions => distribution_suite(cfg.n_or(8)),
        Suite::Genfun => genfun_suite(cfg),
        Suite::Qseries => qseries_suite(cfg),
        Suite::Conjecture => conjecture_suite(cfg),
        Suite::All => Suite::ALL.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
    };
    out.sort_by(|a, b| a.check.cmp(&b.check));
    out
}

// ---------------------------------------------------------------------------------------
// bijections

type Sept = [u32; 7];
const ASC: usize = 0;
const REP: usize = 1;
const ZERO: usize = 2;
const MAX: usize = 3;
const EALM: usize = 4;
const RMIN: usize = 5;
const RPOS: usize = 6;

fn sept(s: &[u32]) -> Sept {
    [asc_of(s), rep_of(s), zero_of(s), max_of(s), ealm_of(s), rmin_of(s), rpos_of(s)]
}

fn chi(b: bool) -> u32 {
    b as u32
}

fn seqs(n: usize) -> Vec<Vec<u32>> {
    let mut v = Vec::new();
    for_each_ascent_sequence(n, |s| v.push(s.to_vec()));
    v
}

fn is_star(s: &[u32]) -> bool {
    !s.is_empty() && s.iter().enumerate().any(|(i, &v)| v != i as u32)
}

/// 1-indexed position of the rpos-th right-to-left minimum equals max+1.
fn prm_at_max(s: &[u32]) -> bool {
    let ss = set_stats(&AscentSequence::new(s.to_vec()).expect("ascent sequence"));
    ss.prm_positions[ss.rpos as usize] == max_of(s) as usize + 1
}

type Map = fn(&[u32]) -> Result<Vec<u32>, MapError>;

struct Lemma<'a> {
    name: &'a str,
    anchor: &'a str,
    /// codomain length given domain length
    shift: isize,
    dom: &'a dyn Fn(&[u32]) -> bool,
    cod: &'a dyn Fn(&[u32]) -> bool,
    f: Map,
    finv: Map,
    transport: &'a dyn Fn(&[u32], &Sept, &Sept) -> bool,
}

/// Image of the domain is the codomain, f is injective, finv undoes it, transport holds.
fn bijection_check(l: &Lemma, n_max: usize) -> Check {
    let mut total = 0usize;
    let fail = |msg: String| Check::new(l.name, l.anchor, format!("n<={n_max}"), false, json!({ "failure": msg }));
    for n in 2..=n_max {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| (l.dom)(s)) {
            let t = match (l.f)(s) {
                Ok(t) => t,
                Err(e) => return fail(format!("{s:?}: {e}")),
            };
            if !is_ascent_sequence(&t) || !(l.cod)(&t) {
                return fail(format!("{s:?} -> {t:?} outside the codomain"));
            }
            if (l.finv)(&t).ok().as_deref() != Some(s.as_slice()) {
                return fail(format!("inverse fails at {t:?}"));
            }
            if !(l.transport)(s, &sept(s), &sept(&t)) {
                return fail(format!("transport fails at {s:?} -> {t:?}"));
            }
            if !img.insert(t) {
                return fail(format!("not injective at {s:?}"));
            }
        }
        let m = (n as isize + l.shift) as usize;
        let cod = seqs(m).iter().filter(|t| (l.cod)(t)).count();
        if cod != img.len() {
            return fail(format!("n={n}: image has {} elements, codomain {cod}", img.len()));
        }
        total += img.len();
    }
    Check::new(l.name, l.anchor, format!("n<={n_max}"), true, json!({ "elements": total }))
}

/// Maps that also return an index i in a range [lo(t), hi(t)).
fn indexed_check(
    name: &str,
    anchor: &str,
    n_max: usize,
    dom: impl Fn(&[u32]) -> bool,
    f: fn(&[u32]) -> Result<(u32, Vec<u32>), MapError>,
    finv: fn(u32, &[u32]) -> Result<Vec<u32>, MapError>,
    range: impl Fn(&Sept) -> (u32, u32),
    transport: impl Fn(&Sept, &Sept) -> bool,
) -> Check {
    let scale = format!("n<={n_max}");
    let mut total = 0;
    for n in 2..=n_max {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| dom(s)) {
            let ok = match f(s) {
                Ok((i, t)) => {
                    let (a, b) = (sept(s), sept(&t));
                    let (lo, hi) = range(&b);
                    let good = is_star(&t)
                        && lo <= i
                        && i < hi
                        && transport(&a, &b)
                        && finv(i, &t).ok().as_deref() == Some(s.as_slice());
                    good && img.insert((i, t))
                }
                Err(_) => false,
            };
            if !ok {
                return Check::new(name, anchor, scale, false, json!({ "failure": format!("{s:?}") }));
            }
        }
        let pairs: u32 = seqs(n - 1).iter().filter(|t| is_star(t)).map(|t| {
            let (lo, hi) = range(&sept(t));
            hi - lo
        }).sum();
        if pairs as usize != img.len() {
            return Check::new(name, anchor, scale, false, json!({ "failure": format!("n={n}: {} pairs, expected {pairs}", img.len()) }));
        }
        total += img.len();
    }
    Check::new(name, anchor, scale, true, json!({ "elements": total }))
}

fn zero_rule(a: &Sept, b: &Sept, by: usize) -> bool {
    a[ZERO] == b[ZERO] + chi(a[by] == 0)
}

fn worked_examples() -> Check {
    let cases: Vec<(&str, Result<Vec<u32>, MapError>, Vec<u32>)> = vec![
        ("f2", f2(&[0, 0, 1, 2, 0, 1, 2, 1, 3, 3, 4]).map(|(i, mut t)| {
            t.insert(0, i);
            t
        }), vec![2, 0, 0, 1, 2, 0, 1, 2, 1, 3, 4]),
        ("phi1", phi1(&[0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7]), vec![0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5]),
        ("f3", f3(&[0, 0, 1, 2, 0, 1, 2, 1, 2, 4, 3, 5]), vec![0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5, 7]),
        ("f4", f4(&[0, 0, 1, 2, 0, 1, 2, 1, 4, 3, 5]), vec![0, 0, 1, 2, 0, 1, 2, 2, 4, 3, 5]),
        ("R1", substitute_r1(&[0, 1, 2, 0, 1, 4, 1, 2, 1, 1], 1, 4), vec![0, 1, 2, 0, 1, 4, 2, 4, 4, 1]),
        ("R2", substitute_r2(&[0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1], 1, 4), vec![0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 4, 3, 1]),
        ("g", g(&[0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8]), vec![0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 2, 3]),
        ("g53 case 1", g53(&[0, 1, 2, 0, 1, 2, 5, 2, 3, 3]), vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3]),
        ("g53 case 2", g53(&[0, 1, 2, 0, 1, 2, 2]), vec![0, 1, 2, 0, 1, 2, 5, 2]),
        ("f53", f53(&[0, 1, 2, 0, 1, 3, 2, 5, 5, 2, 7, 3, 1, 3, 8]), vec![0, 1, 2, 0, 1, 2, 3, 6, 5, 5, 8, 6, 3, 2, 3]),
        ("f54 in B", f54(&[0, 1, 2, 0, 1, 2, 5, 2, 3, 2, 3, 8, 8, 4]), vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 7, 7, 4]),
        ("f54", f54(&[0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4]), vec![0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4]),
        ("Phi base", phi(&[0, 1, 0]), vec![0, 0, 1]),
        ("Phi staircase", phi(&[0, 1, 2, 3, 4]), vec![0, 1, 2, 3, 4]),
    ];
    let bad: Vec<&str> = cases.iter().filter(|(_, got, want)| got.as_ref().ok() != Some(want)).map(|c| c.0).collect();
    Check::new("worked examples", "worked examples of the lemmas", "fixed".into(), bad.is_empty(), json!({ "cases": cases.len(), "failed": bad }))
}

/// R1/R2 keep (asc,rep,zero,rmin) always and max when the leftmost m is outside the
/// initial run; R3 raises rmin by one, R4 keeps it.
pub fn rules_check(n: usize) -> Check {
    let mut applied = [0usize; 4];
    let mut failure = None;
    'outer: for s in seqs(n) {
        let a = sept(&s);
        let ss = set_stats(&AscentSequence::new(s.clone()).expect("ascent sequence"));
        let masc: HashSet<u32> = ss.masc_positions.iter().map(|&p| s[p - 1]).collect();
        for &m in &masc {
            let outside = s.iter().position(|&v| v == m).unwrap_or(0) >= a[MAX] as usize;
            for i in 1..ss.rmin_values.len() {
                let after = &s[ss.prm_positions[i - 1]..];
                if after.iter().filter(|&&v| v == ss.rmin_values[i]).count() < 2 {
                    continue;
                }
                for (k, r) in [substitute_r1(&s, i, m), substitute_r2(&s, i, m)].into_iter().enumerate() {
                    if let Ok(t) = r {
                        if t != s {
                            let b = sept(&t);
                            let keep = [ASC, REP, ZERO, RMIN].iter().all(|&j| a[j] == b[j]) && (!outside || a[MAX] == b[MAX]);
                            if !keep || !is_ascent_sequence(&t) {
                                failure = Some(format!("R{} on {s:?} at i={i}, m={m}", k + 1));
                                break 'outer;
                            }
                            applied[k] += 1;
                        }
                    }
                }
            }
            if let Ok(t) = insert_r3(&s, m) {
                if !is_ascent_sequence(&t) || rmin_of(&t) != a[RMIN] + 1 {
                    failure = Some(format!("R3 on {s:?}, m={m}"));
                    break 'outer;
                }
                applied[2] += 1;
            }
            if let Ok(t) = insert_r4(&s, m) {
                if !is_ascent_sequence(&t) || rmin_of(&t) != a[RMIN] {
                    failure = Some(format!("R4 on {s:?}, m={m}"));
                    break 'outer;
                }
                applied[3] += 1;
            }
        }
    }
    Check::new(
        "rules R1-R4",
        "statistics kept by the substitution and insertion rules",
        format!("n={n}"),
        failure.is_none() && applied.iter().all(|&c| c > 0),
        json!({ "applied": applied, "failure": failure }),
    )
}

fn f5_check(n_max: usize) -> Check {
    let t_ok = |t: &[u32]| {
        matches!(t_label(t), TLabel::T3 | TLabel::T4 | TLabel::T51 | TLabel::T52 | TLabel::T53 | TLabel::T54)
    };
    let scale = format!("n<={n_max}");
    for n in 2..=n_max {
        let mut img = HashSet::new();
        for s in seqs(n) {
            let Some(m) = classify_slice(&s).m_label else { continue };
            let ok = f5(&s).is_ok_and(|t| {
                let (a, b) = (sept(&s), sept(&t));
                let base = (a[ASC], a[REP], a[RMIN], a[RPOS]) == (b[ASC], b[REP], b[RMIN], b[RPOS] - 1) && zero_rule(&a, &b, RPOS);
                let split = match m {
                    MLabel::M51 => (a[MAX], a[EALM]) == (b[MAX], b[EALM]),
                    MLabel::M52 => (a[MAX], a[EALM] + 1) == (b[MAX], b[EALM]),
                    MLabel::M53 => (a[MAX] + 1, a[EALM] + 1) == (b[MAX], b[EALM]),
                };
                base && split && t_ok(&t) && f5_inv(&t).ok().as_ref() == Some(&s) && img.insert(t)
            });
            if !ok {
                return Check::new("f5", "f5 proposition", scale, false, json!({ "failure": format!("{s:?}") }));
            }
        }
        let cod = seqs(n).iter().filter(|t| rpos_of(t) != 0 && t_ok(t)).count();
        if cod != img.len() {
            return Check::new("f5", "f5 proposition", scale, false, json!({ "failure": format!("n={n}: image size") }));
        }
    }
    Check::new("f5", "f5 proposition", scale, true, json!({}))
}

fn h5_check(n_max: usize) -> Check {
    let scale = format!("n<={n_max}");
    for n in 2..=n_max {
        let mut img = HashSet::new();
        for s in seqs(n).iter().filter(|s| d_label(s) == DLabel::D5) {
            let ok = h5(s).is_ok_and(|t| {
                let (a, b) = (sept(s), sept(&t));
                let base = (a[ASC], a[REP], a[MAX], a[EALM] + 1) == (b[ASC], b[REP], b[MAX], b[EALM]) && zero_rule(&a, &b, EALM);
                let split = match classify_slice(s).d5_label {
                    Some(D5Label::D51) => (a[RMIN], a[RPOS]) == (b[RMIN], b[RPOS]),
                    Some(D5Label::D52) => (a[RMIN], a[RPOS] + 1) == (b[RMIN], b[RPOS]),
                    Some(D5Label::D53) => (a[RMIN] + 1, a[RPOS] + 1) == (b[RMIN], b[RPOS]),
                    None => false,
                };
                base && split && h5_inv(&t).ok().as_ref() == Some(s) && img.insert(t)
            });
            if !ok {
                return Check::new("h5", "h5 lemma", scale, false, json!({ "failure": format!("{s:?}") }));
            }
        }
        let cod = seqs(n)
            .iter()
            .filter(|t| matches!(d_label(t), DLabel::D3 | DLabel::D4 | DLabel::D5) && ealm_of(t) != 0)
            .count();
        if cod != img.len() {
            return Check::new("h5", "h5 lemma", scale, false, json!({ "failure": format!("n={n}: image size") }));
        }
    }
    Check::new("h5", "h5 lemma", scale, true, json!({}))
}

/// Every s in A*_n gets one T-label, one D-label and the refinements that go with them;
/// S3 and S4 together cover D3, D4 and D5; D52 coincides with M52.
pub fn label_check(n_max: usize) -> Check {
    let mut counts = std::collections::BTreeMap::<String, u64>::new();
    let mut failure = None;
    'outer: for n in 1..=n_max {
        let mut star = 0u64;
        let mut labelled = 0u64;
        for s in seqs(n) {
            let l = classify_slice(&s);
            let stair = !is_star(&s);
            let t5 = matches!(l.t_label, TLabel::T51 | TLabel::T52 | TLabel::T53 | TLabel::T54);
            let d345 = matches!(l.d_label, DLabel::D3 | DLabel::D4 | DLabel::D5);
            let ok = (l.t_label == TLabel::Staircase) == stair
                && (l.d_label == DLabel::Staircase) == stair
                && l.m_label.is_some() == t5
                && l.d5_label.is_some() == (l.d_label == DLabel::D5)
                && l.s_label.is_some() == d345
                && (l.d5_label == Some(D5Label::D52)) == (l.d_label == DLabel::D5 && l.m_label == Some(MLabel::M52));
            if !ok {
                failure = Some(format!("{s:?}: {l:?}"));
                break 'outer;
            }
            if !stair {
                star += 1;
                labelled += 1;
                *counts.entry(format!("{:?}", l.t_label)).or_insert(0) += 1;
                *counts.entry(format!("{:?}", l.d_label)).or_insert(0) += 1;
            }
        }
        if star + 1 != FISHBURN[n] || labelled != star {
            failure = Some(format!("n={n}: {star} non-staircase sequences"));
            break;
        }
    }
    Check::new(
        "labels partition A*",
        "T-, D- and S-labels",
        format!("n<={n_max}"),
        failure.is_none(),
        json!({ "counts": counts, "failure": failure }),
    )
}

pub fn lemma_suite(n: usize) -> Vec<Check> {
    let t_is = |l: TLabel| move |s: &[u32]| t_label(s) == l;
    let d_is = |l: DLabel| move |s: &[u32]| d_label(s) == l;
    let mut out = vec![worked_examples(), label_check(n), rules_check(n), f5_check(n), h5_check(n)];
    out.push(indexed_check(
        "f2",
        "f2 lemma",
        n,
        t_is(TLabel::T2),
        f2,
        f2_inv,
        |b| (b[RPOS], b[RMIN]),
        |a, b| {
            (a[ASC], a[MAX], a[EALM], a[RMIN], a[REP]) == (b[ASC], b[MAX], b[EALM], b[RMIN], b[REP] + 1) && zero_rule(a, b, RPOS)
        },
    ));
    out.push(indexed_check(
        "h2",
        "h2 lemma",
        n,
        d_is(DLabel::D2),
        h2,
        h2_inv,
        |b| (b[EALM], b[MAX]),
        |a, b| {
            (a[ASC], a[RMIN], a[RPOS], a[MAX], a[REP]) == (b[ASC], b[RMIN], b[RPOS], b[MAX], b[REP] + 1) && zero_rule(a, b, EALM)
        },
    ));
    let star_p1 = |s: &[u32]| is_star(s) && in_p1(s);
    let star_p2 = |s: &[u32]| is_star(s) && in_p2(s);
    let t3 = t_is(TLabel::T3);
    let t4 = t_is(TLabel::T4);
    let t51 = t_is(TLabel::T51);
    let t52 = t_is(TLabel::T52);
    let t53 = t_is(TLabel::T53);
    let t54 = t_is(TLabel::T54);
    let d3 = d_is(DLabel::D3);
    let d4 = d_is(DLabel::D4);
    let p1_rpos = |t: &[u32]| in_p1(t) && rpos_of(t) != 0;
    let notp1_rpos = |t: &[u32]| is_star(t) && !in_p1(t) && rpos_of(t) != 0;
    let rpos_nz = |t: &[u32]| rpos_of(t) != 0;
    let b_not_b1 = |t: &[u32]| {
        let l = classify_slice(t);
        l.b && !l.b1
    };
    let h3_cod = |t: &[u32]| is_star(t) && in_p2(t) && ealm_of(t) != 0;
    let h4_cod = |t: &[u32]| is_star(t) && !in_p2(t) && ealm_of(t) != 0;
    let t_shift = |s: &[u32], a: &Sept, b: &Sept, rep: u32| {
        (a[ASC], a[REP], a[MAX], a[RMIN] + 1, a[RPOS] + 1) == (b[ASC], b[REP] + rep, b[MAX], b[RMIN], b[RPOS])
            && zero_rule(a, b, RPOS)
            && a[EALM] + chi(prm_at_max(s)) == b[EALM]
    };
    let h_shift = |s: &[u32], a: &Sept, b: &Sept, rep: u32| {
        (a[ASC], a[REP], a[RMIN], a[MAX] + 1, a[EALM] + 1) == (b[ASC], b[REP] + rep, b[RMIN], b[MAX], b[EALM])
            && zero_rule(a, b, EALM)
            && a[RPOS] + chi(prm_at_max(s)) == b[RPOS]
    };
    let t5_base = |_: &[u32], a: &Sept, b: &Sept| {
        (a[ASC], a[REP], a[RMIN], a[RPOS] + 1) == (b[ASC], b[REP], b[RMIN], b[RPOS]) && zero_rule(a, b, RPOS)
    };
    let lemmas = [
        Lemma {
            name: "phi1",
            anchor: "phi1 lemma",
            shift: -1,
            dom: &star_p1,
            cod: &is_star,
            f: phi1,
            finv: phi1_inv,
            transport: &|_, a, b| *a == [b[0] + 1, b[1], b[2], b[3], b[4], b[5] + 1, b[6]],
        },
        Lemma { name: "f3", anchor: "f3 lemma", shift: 0, dom: &t3, cod: &p1_rpos, f: f3, finv: f3_inv, transport: &|s, a, b| t_shift(s, a, b, 1) },
        Lemma { name: "f4", anchor: "f4 lemma", shift: 0, dom: &t4, cod: &notp1_rpos, f: f4, finv: f4_inv, transport: &|s, a, b| t_shift(s, a, b, 0) },
        Lemma {
            name: "f51",
            anchor: "f51 lemma",
            shift: 0,
            dom: &t51,
            cod: &in_f51_image,
            f: f51,
            finv: f51_inv,
            transport: &|_, a, b| {
                (a[ASC], a[REP], a[MAX], a[EALM], a[RMIN], a[RPOS] + 1) == (b[ASC], b[REP], b[MAX], b[EALM], b[RMIN], b[RPOS])
                    && zero_rule(a, b, RPOS)
            },
        },
        Lemma {
            name: "f52",
            anchor: "f52 lemma",
            shift: 0,
            dom: &t52,
            cod: &in_f52_image,
            f: f52,
            finv: f52_inv,
            transport: &|s, a, b| {
                (a[ASC], a[REP], a[MAX], a[RMIN], a[RPOS] + 1) == (b[ASC], b[REP], b[MAX], b[RMIN], b[RPOS])
                    && zero_rule(a, b, RPOS)
                    && a[EALM] + chi(prm_at_max(s)) == b[EALM]
            },
        },
        Lemma {
            name: "g",
            anchor: "g lemma",
            shift: -1,
            dom: &t53,
            cod: &rpos_nz,
            f: g,
            finv: g_inv,
            transport: &|s, a, b| {
                (a[ASC], a[REP], a[MAX], a[RMIN], a[RPOS] + 1) == (b[ASC] + 1, b[REP], b[MAX], b[RMIN], b[RPOS])
                    && zero_rule(a, b, RPOS)
                    && a[EALM] + chi(prm_at_max(s)) == b[EALM]
            },
        },
        Lemma {
            name: "g53",
            anchor: "g53 lemma",
            shift: 1,
            dom: &rpos_nz,
            cod: &in_b1,
            f: g53,
            finv: g53_inv,
            transport: &|_, a, b| (a[ASC] + 1, a[REP], a[ZERO], a[RMIN], a[RPOS]) == (b[ASC], b[REP], b[ZERO], b[RMIN], b[RPOS]),
        },
        Lemma { name: "f53", anchor: "f53 = g53 after g", shift: 0, dom: &t53, cod: &in_b1, f: f53, finv: f53_inv, transport: &t5_base },
        Lemma { name: "f54", anchor: "f54 lemma", shift: 0, dom: &t54, cod: &b_not_b1, f: f54, finv: f54_inv, transport: &t5_base },
        Lemma {
            name: "phi2",
            anchor: "phi2 lemma",
            shift: -1,
            dom: &star_p2,
            cod: &is_star,
            f: phi2,
            finv: phi2_inv,
            transport: &|_, a, b| *a == [b[0] + 1, b[1], b[2], b[3] + 1, b[4], b[5], b[6]],
        },
        Lemma { name: "h3", anchor: "h3 lemma", shift: 0, dom: &d3, cod: &h3_cod, f: h3, finv: h3_inv, transport: &|s, a, b| h_shift(s, a, b, 1) },
        Lemma { name: "h4", anchor: "h4 lemma", shift: 0, dom: &d4, cod: &h4_cod, f: h4, finv: h4_inv, transport: &|s, a, b| h_shift(s, a, b, 0) },
    ];
    out.extend(lemmas.iter().map(|l| bijection_check(l, n)));
    out
}

pub fn phi_suite(n_max: usize) -> Vec<Check> {
    let anchor = "septuple transport of Phi";
    let mut total = 0u64;
    let mut failure = None;
    'outer: for n in 0..=n_max {
        let mut img = HashSet::new();
        for s in seqs(n) {
            let ok = phi(&s).is_ok_and(|t| {
                let (a, b) = (sept(&s), sept(&t));
                let moved = [b[ASC], b[REP], b[ZERO], b[RMIN], b[RPOS], b[MAX], b[EALM]];
                a == moved && phi_inv(&t).ok().as_ref() == Some(&s) && img.insert(t)
            });
            if !ok {
                failure = Some(format!("{s:?}"));
                break 'outer;
            }
        }
        if img.len() as u64 != FISHBURN[n] {
            failure = Some(format!("n={n}: image size {}", img.len()));
            break;
        }
        total += img.len() as u64;
    }
    let staircase = (0..=n_max).all(|n| {
        let s: Vec<u32> = (0..n as u32).collect();
        phi(&s).ok() == Some(s)
    });
    vec![
        Check::new("Phi bijection", anchor, format!("n<={n_max}"), failure.is_none(), json!({ "sequences": total, "failure": failure })),
        Check::new("Phi staircase fixed", "staircase is fixed by Phi", format!("n<={n_max}"), staircase, json!({})),
    ]
}

// ---------------------------------------------------------------------------------------
// distributions

fn count_check(name: &str, anchor: &str, counts: Vec<u64>) -> Check {
    let ok = counts.iter().enumerate().all(|(i, &c)| c == FISHBURN[i + 1]);
    Check::new(name, anchor, format!("n<={}", counts.len()), ok, json!({ "counts": counts }))
}

fn a_n_pairs(n_max: usize) -> Vec<Check> {
    let specs: [(&str, [usize; 4], [usize; 4]); 3] = [
        ("A_n (asc,rep,zero,max) ~ (rep,asc,max,zero)", [ASC, REP, ZERO, MAX], [REP, ASC, MAX, ZERO]),
        ("A_n (asc,rep,max,rmin) ~ (asc,rep,rmin,max)", [ASC, REP, MAX, RMIN], [ASC, REP, RMIN, MAX]),
        ("A_n (asc,rep,zero,rmin) ~ (rep,asc,rmin,zero)", [ASC, REP, ZERO, RMIN], [REP, ASC, RMIN, ZERO]),
    ];
    let mut ok = [true; 3];
    for n in 1..=n_max {
        let mut rows = Vec::new();
        for_each_ascent_sequence(n, |s| rows.push(sept(s)));
        for (k, (_, a, b)) in specs.iter().enumerate() {
            let ha = histogram(rows.iter().map(|r| a.map(|i| r[i])));
            let hb = histogram(rows.iter().map(|r| b.map(|i| r[i])));
            ok[k] &= ha == hb;
        }
    }
    specs
        .iter()
        .zip(ok)
        .map(|((name, _, _), v)| Check::new(name, "equidistribution on ascent sequences", format!("n<={n_max}"), v, json!({})))
        .collect()
}

fn upto(name: &str, anchor: &str, n_max: usize, f: impl Fn(usize) -> bool) -> Check {
    let failed: Vec<usize> = (1..=n_max).filter(|&n| !f(n)).collect();
    Check::new(name, anchor, format!("n<={n_max}"), failed.is_empty(), json!({ "failed_n": failed }))
}

pub fn distribution_suite(n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(count_check("count ascent", "Fishburn numbers", (1..=n).map(|k| {
        let mut c = 0u64;
        for_each_ascent_sequence(k, |_| c += 1);
        c
    }).collect()));
    out.push(count_check("count avoiders", "Fishburn numbers", (1..=n.min(9)).map(|k| pattern_avoiders(k).len() as u64).collect()));
    out.push(count_check("count matrices", "Fishburn numbers", (1..=n.min(8)).map(|k| enumerate_fishburn_matrices(k).len() as u64).collect()));
    let fact_ok = (1..=n).all(|k| {
        let mut c = 0u64;
        for_each_inversion_sequence(k, |_| c += 1);
        c == (1..=k as u64).product::<u64>()
    });
    out.push(Check::new("count inversion", "n! inversion sequences", format!("n<={n}"), fact_ok, json!({})));
    out.extend(a_n_pairs(n));
    out.push(upto("I_n (asc,rep) ~ (rep,asc)", "symmetric distribution of (asc, rep)", n, |k| {
        let mut rows = Vec::new();
        for_each_inversion_sequence(k, |s| rows.push((asc_of(s), rep_of(s))));
        histogram(rows.iter().copied()) == histogram(rows.iter().map(|&(a, b)| (b, a)))
    }));
    out.push(upto("Foata (des,iasc) ~ (asc,rep)", "permutations against inversion sequences", n.min(7), check_foata));
    out.push(upto("I_n (asc,rep,zero,max) ~ (rep,asc,rmin,zero)", "inversion sequence proposition", n, check_prop_syminv));
    let names = [
        "avoiders (des,iasc,lmax,lmin,rmax) ~ (des,iasc,lmax,rmax,lmin)",
        "avoiders (des,iasc,lmax,lmin) ~ (iasc,des,lmin,lmax)",
        "avoiders (des,iasc,lmax,rmax) ~ (iasc,des,lmin,lmax)",
    ];
    let av: Vec<[bool; 3]> = (1..=n.min(8)).map(check_avoider_symmetries).collect();
    for (k, name) in names.iter().enumerate() {
        let failed: Vec<usize> = av.iter().enumerate().filter(|(_, r)| !r[k]).map(|(i, _)| i + 1).collect();
        out.push(Check::new(name, "pattern avoiding permutations", format!("n<={}", av.len()), failed.is_empty(), json!({ "failed_n": failed })));
    }
    let names = ["matrices (rowsum1,ne,tr) ~ (rowsum1,tr,ne)", "matrices (rowsum1,ne) symmetric", "matrices (rowsum1,tr) symmetric"];
    let ms: Vec<[bool; 3]> = (1..=n.min(7)).map(check_matrix_symmetries).collect();
    for (k, name) in names.iter().enumerate() {
        let failed: Vec<usize> = ms.iter().enumerate().filter(|(_, r)| !r[k]).map(|(i, _)| i + 1).collect();
        out.push(Check::new(name, "Fishburn matrix statistics", format!("n<={}", ms.len()), failed.is_empty(), json!({ "failed_n": failed })));
    }
    out
}

// ---------------------------------------------------------------------------------------
// series

pub fn sample_points(cfg: &Config, salt: u64, names: &[&str], ok: impl Fn(&ParamPoint) -> bool) -> Vec<ParamPoint> {
    let mut rng = cfg.rng(salt);
    (0..cfg.points).map(|_| ParamPoint::sample(&mut rng, names, &ok)).collect()
}

/// Folds per-point reports into one check.
fn fold_reports(name: &str, anchor: &str, order: usize, reps: Vec<Result<GfReport, String>>) -> Check {
    let mut ok = !reps.is_empty();
    let mut rows = Vec::new();
    for r in reps {
        match r {
            Ok(rep) => {
                ok &= rep.verdict;
                rows.push(json!({ "point": rep.point, "verdict": rep.verdict, "first_divergence": rep.first_divergence }));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({ "error": e }));
            }
        }
    }
    Check::new(name, anchor, format!("order {order}, {} points", rows.len()), ok, json!({ "points": rows }))
}

fn swap(pt: &ParamPoint, pairs: &[(&str, &str)]) -> ParamPoint {
    let mut out = pt.clone();
    for (a, b) in pairs {
        out.set(a, pt.get(b).clone());
        out.set(b, pt.get(a).clone());
    }
    out
}

pub fn genfun_suite(cfg: &Config) -> Vec<Check> {
    let order = cfg.order_or(10);
    let fe_order = cfg.order_or(8);
    let q_order = order.clamp(1, 9);
    let mut out = Vec::new();
    let fish: Vec<u64> = (1..=order).map(|n| FISHBURN.get(n).copied().unwrap_or(0)).collect();
    let series = eval_fishburn(order);
    let ok = (1..=order).all(|n| series.coeff(n) == Rat::from_integer(fish[n - 1].into()));
    out.push(Check::new("Fishburn series", "generating function of Fishburn numbers", format!("order {order}"), ok, json!({})));

    type Eval = fn(&ParamPoint, usize) -> Result<crate::series::RatSeries, GfError>;
    type EvalWith = fn(&ParamPoint, usize, usize) -> Result<crate::series::RatSeries, GfError>;
    let forms: [(&str, &[&str], Selector, Eval, EvalWith, usize, &[(&str, &str)]); 3] = [
        ("G quadruple", &["x", "y", "u", "z"], Selector::Quadruple, eval_g_quadruple, eval_g_quadruple_with, order, &[("x", "u"), ("y", "z")]),
        ("G tilde", &["x", "y", "u", "v"], Selector::Tilde, eval_g_tilde, eval_g_tilde_with, order, &[("y", "v")]),
        ("G quintuple", &["x", "y", "u", "z", "v"], Selector::Quintuple, eval_g_quintuple, eval_g_quintuple_with, q_order, &[]),
    ];
    for (k, (name, names, sel, eval, eval_with, ord, sym)) in forms.into_iter().enumerate() {
        let pts = sample_points(cfg, 100 + k as u64, names, admissible_quadruple);
        let mut brute = Vec::new();
        let mut stable = Vec::new();
        let mut symm = Vec::new();
        for pt in &pts {
            let closed = eval(pt, ord).map_err(|e| e.to_string());
            brute.push(closed.clone().map(|c| GfReport::compare(name, pt, &c, &brute_force_gf(ord, sel, pt))));
            stable.push(closed.clone().and_then(|c| {
                eval_with(pt, ord, ord + 5).map(|w| GfReport::compare(name, pt, &c, &w)).map_err(|e| e.to_string())
            }));
            if !sym.is_empty() {
                symm.push(closed.and_then(|c| {
                    eval(&swap(pt, sym), ord).map(|w| GfReport::compare(name, pt, &c, &w)).map_err(|e| e.to_string())
                }));
            }
        }
        out.push(fold_reports(&format!("{name} = brute force"), "closed form against enumeration", ord, brute));
        out.push(fold_reports(&format!("{name} ceiling stability"), "summation ceiling N+5", ord, stable));
        if !sym.is_empty() {
            out.push(fold_reports(&format!("{name} symmetry"), "series symmetry", ord, symm));
        }
    }
    let pts = sample_points(cfg, 110, &["x", "y", "u", "z", "v"], admissible_quadruple);
    let mut spec = Vec::new();
    for pt in &pts {
        let v1 = pt.clone().with("v", Rat::one());
        let z1 = pt.clone().with("z", Rat::one());
        for (a, b) in [
            (eval_g_quintuple(&v1, q_order), eval_g_quadruple(&v1, q_order)),
            (eval_g_quintuple(&z1, q_order), eval_g_tilde(&z1, q_order)),
        ] {
            spec.push(match (a, b) {
                (Ok(a), Ok(b)) => Ok(GfReport::compare("specialization", pt, &a, &b)),
                (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
            });
        }
    }
    out.push(fold_reports("G quintuple specializations v=1, z=1", "series-level specializations", q_order, spec));

    let pts = sample_points(cfg, 120, &["x", "y", "w", "u", "z", "v"], admissible_functional);
    let fe = pts.iter().map(|pt| check_functional_equation(pt, fe_order).map_err(|e| e.to_string())).collect();
    out.push(fold_reports("functional equation", "functional equation for F", fe_order, fe));
    let mut cases = Vec::new();
    for pt in &pts {
        match check_case_forms(pt, fe_order) {
            Ok(v) => cases.extend(v.into_iter().map(Ok)),
            Err(e) => cases.push(Err(e.to_string())),
        }
    }
    out.push(fold_reports("case forms", "per-case subset sums", fe_order, cases));

    let gg = garsia_gessel_check(6);
    out.push(Check::new(
        "Garsia-Gessel",
        "trivariate (asc,rep) identity, H and B symmetry, Foata",
        "N=6".into(),
        gg.verdict,
        json!({ "first_divergence": gg.first_divergence }),
    ));
    let hb = (1..=7).all(|n| is_symmetric(&h_poly(n)) && is_symmetric(&b_poly(n)));
    out.push(Check::new("H_n, B_n symmetric", "symmetric bivariate polynomials", "n<=7".into(), hb, json!({})));
    out
}

pub fn qseries_suite(cfg: &Config) -> Vec<Check> {
    let order = cfg.order_or(12);
    let tff_order = cfg.order_or(10);
    let mut out = Vec::new();

    let mut rng = cfg.rng(200);
    let mut sears_ok = true;
    let mut sears_rows = Vec::new();
    for n in 0..=5usize {
        let mut found = 0;
        while found < cfg.points {
            let p = ParamPoint::sample(&mut rng, &["q", "a", "b", "c", "d", "e"], |p| {
                !p.get("q").is_one() && p.get("q") != &-Rat::one()
            });
            if let Ok((l, r)) = sears_sides(n, &p) {
                sears_ok &= l == r;
                found += 1;
            }
        }
        sears_rows.push(json!({ "n": n, "points": found }));
    }
    out.push(Check::new("Sears terminating", "terminating 4phi3 transformation", "n<=5".into(), sears_ok, json!({ "runs": sears_rows })));

    let pts = sample_points(cfg, 201, &["alpha", "b", "c", "d", "e"], admissible_tf43);
    for j in 0..=3 {
        let reps = pts.iter().map(|p| verify_tf43(j, p, order).map_err(|e| e.to_string())).collect();
        out.push(fold_reports(&format!("tf43 j={j}"), "non-terminating 4phi3 transformation", order, reps));
    }
    let anchor_ok = pts.iter().take(2).all(|p| (1..=2).all(|n| (1..=3).all(|j| verify_tf43_anchor(j, n, p, order.min(10)) == Ok(true))));
    out.push(Check::new("tf43 anchor family", "a = 1-(1-r)^-n agrees with Sears", "n<=2, j<=3".into(), anchor_ok, json!({})));

    let pts = sample_points(cfg, 202, &["beta", "c", "delta", "e"], admissible_cor32);
    for j in 0..=3 {
        let reps = pts.iter().map(|p| verify_cor32(j, p, order).map_err(|e| e.to_string())).collect();
        out.push(fold_reports(&format!("tf32 j={j}"), "3phi2 transformation at a -> 1", order, reps));
    }
    let pts = sample_points(cfg, 203, &["alpha", "b", "c", "e"], admissible_cor2_32);
    for j in 0..=3 {
        let reps = pts.iter().map(|p| verify_cor2_32(j, p, order).map_err(|e| e.to_string())).collect();
        out.push(fold_reports(&format!("tf2_32 j={j}"), "3phi2 transformation with d -> 0", order, reps));
    }
    let pts = sample_points(cfg, 204, &["x", "y", "u", "v", "z"], admissible_tff);
    let mut groups: Vec<(String, Vec<Result<GfReport, String>>)> = Vec::new();
    for p in &pts {
        match verify_tff_identities(p, tff_order) {
            Ok(reps) => {
                for rep in reps {
                    match groups.iter_mut().find(|g| g.0 == rep.identity) {
                        Some(g) => g.1.push(Ok(rep)),
                        None => groups.push((rep.identity.clone(), vec![Ok(rep)])),
                    }
                }
            }
            Err(e) => groups.push(("tff".into(), vec![Err(e.to_string())])),
        }
    }
    for (name, reps) in groups {
        out.push(fold_reports(&name, "proof identities and the symmetries they encode", tff_order, reps));
    }
    out
}

pub fn conjecture_suite(cfg: &Config) -> Vec<Check> {
    let n = cfg.n_or(if cfg.heavy { 10 } else { 8 });
    let order = cfg.order_or(10);
    let mut out = vec![
        upto("I_n (asc,rep,zero,max,rmin) ~ (asc,rep,zero,rmin,max)", "quintuple conjecture on inversion sequences", n, check_conjecture_quintuple),
        upto("A_n (asc,rep,zero,max) ~ (rep,asc,max,zero)", "bisymmetric quadruple on ascent sequences", n.min(9), check_bisymmetric_quadruple),
    ];
    let pts = sample_points(cfg, 300, &["x", "y", "u", "z"], admissible_quadruple);
    let reps = pts
        .iter()
        .map(|pt| {
            let a = eval_g_quadruple(pt, order).map_err(|e| e.to_string())?;
            let b = eval_g_quadruple(&swap(pt, &[("x", "u"), ("y", "z")]), order).map_err(|e| e.to_string())?;
            Ok(GfReport::compare("G(x,y,u,z) = G(u,z,x,y)", pt, &a, &b))
        })
        .collect();
    out.push(fold_reports("G(x,y,u,z) = G(u,z,x,y)", "series form of the bisymmetric quadruple", order, reps));
    out
}

/// Count of a family at length n.
pub fn family_count(family: Family, n: usize) -> u64 {
    let mut c = 0u64;
    match family {
        Family::Ascent => for_each_ascent_sequence(n, |_| c += 1),
        Family::Inversion => for_each_inversion_sequence(n, |_| c += 1),
        Family::Permutation => for_each_permutation(n, |p| {
            if crate::fishburn::avoids_pattern_slice(p) {
                c += 1
            }
        }),
        Family::Matrix => c = enumerate_fishburn_matrices(n).len() as u64,
    }
    c
}
