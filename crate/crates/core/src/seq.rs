//! Ascent sequences, inversion sequences and their scalar statistics.
//!
//! Entries are stored 0-indexed. Anything reported as a position to the
//! outside world (prm/masc positions, CLI output) is 1-indexed.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("not an ascent sequence: {0:?}")]
    NotAscent(Vec<u32>),
    #[error("not an inversion sequence: {0:?}")]
    NotInversion(Vec<u32>),
    #[error("cannot parse sequence {0:?}")]
    Parse(String),
}

/// Number of ascents of a word.
pub fn asc_of(s: &[u32]) -> u32 {
    s.windows(2).filter(|w| w[0] < w[1]).count() as u32
}

pub fn is_ascent_sequence(s: &[u32]) -> bool {
    let mut asc = 0u32;
    for (i, &v) in s.iter().enumerate() {
        if i == 0 {
            if v != 0 {
                return false;
            }
            continue;
        }
        if v > asc + 1 {
            return false;
        }
        if s[i - 1] < v {
            asc += 1;
        }
    }
    true
}

pub fn is_inversion_sequence(s: &[u32]) -> bool {
    s.iter().enumerate().all(|(i, &v)| (v as usize) < i + 1)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AscentSequence(Vec<u32>);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InversionSequence(Vec<u32>);

impl AscentSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, SeqError> {
        if is_ascent_sequence(&entries) {
            Ok(AscentSequence(entries))
        } else {
            Err(SeqError::NotAscent(entries))
        }
    }

    pub fn staircase(n: usize) -> Self {
        AscentSequence((0..n as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_staircase(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn stats(&self) -> StatVector {
        stat_vector(&self.0, true)
    }
}

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, SeqError> {
        if is_inversion_sequence(&entries) {
            Ok(InversionSequence(entries))
        } else {
            Err(SeqError::NotInversion(entries))
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn stats(&self) -> StatVector {
        stat_vector(&self.0, false)
    }
}

fn fmt_entries(v: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Debug for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}
impl fmt::Display for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}
impl fmt::Debug for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}
impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_entries(&self.0, f)
    }
}

/// Parse "0,1,0" or "(0,1,0)" or "0 1 0".
pub fn parse_entries(text: &str) -> Result<Vec<u32>, SeqError> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u32>().map_err(|_| SeqError::Parse(text.to_string())))
        .collect()
}

impl std::str::FromStr for AscentSequence {
    type Err = SeqError;
    fn from_str(s: &str) -> Result<Self, SeqError> {
        AscentSequence::new(parse_entries(s)?)
    }
}

impl std::str::FromStr for InversionSequence {
    type Err = SeqError;
    fn from_str(s: &str) -> Result<Self, SeqError> {
        InversionSequence::new(parse_entries(s)?)
    }
}

/// The septuple. `ealm` and `rpos` are `None` on inversion sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatVector {
    pub asc: u32,
    pub rep: u32,
    pub zero: u32,
    pub max: u32,
    pub ealm: Option<u32>,
    pub rmin: u32,
    pub rpos: Option<u32>,
}

impl StatVector {
    /// (asc, rep, zero, max, ealm, rmin, rpos) with absent values read as 0.
    pub fn septuple(&self) -> [u32; 7] {
        [
            self.asc,
            self.rep,
            self.zero,
            self.max,
            self.ealm.unwrap_or(0),
            self.rmin,
            self.rpos.unwrap_or(0),
        ]
    }
}

pub fn rep_of(s: &[u32]) -> u32 {
    let mut seen: Vec<bool> = vec![false; s.len() + 1];
    let mut distinct = 0;
    for &v in s {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        if !seen[v] {
            seen[v] = true;
            distinct += 1;
        }
    }
    (s.len() - distinct) as u32
}

pub fn zero_of(s: &[u32]) -> u32 {
    s.iter().filter(|&&v| v == 0).count() as u32
}

/// Number of maximal entries; these always form a prefix of an ascent sequence.
pub fn max_of(s: &[u32]) -> u32 {
    s.iter().enumerate().filter(|(i, &v)| v as usize == *i).count() as u32
}

/// 0-indexed positions of the right-to-left minima, left to right.
pub fn rmin_positions(s: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = u32::MAX;
    for i in (0..s.len()).rev() {
        if s[i] < cur {
            out.push(i);
            cur = s[i];
        }
    }
    out.reverse();
    out
}

pub fn rmin_of(s: &[u32]) -> u32 {
    rmin_positions(s).len() as u32
}

/// Entry right after the last maximal; 0 for the staircase and the empty sequence.
pub fn ealm_of(s: &[u32]) -> u32 {
    let m = max_of(s) as usize;
    s.get(m).copied().unwrap_or(0)
}

/// rpos together with a flag telling whether some index actually witnesses it.
pub fn rpos_witnessed(s: &[u32]) -> (u32, bool) {
    let prm = rmin_positions(s);
    if prm.len() == s.len() {
        return (0, false);
    }
    for m in (0..prm.len()).rev() {
        let x = s[prm[m]];
        let from = if m == 0 { 0 } else { prm[m - 1] + 1 };
        let c = s[from..].iter().filter(|&&v| v == x).count();
        if c >= 2 {
            return (m as u32, true);
        }
    }
    (0, false)
}

pub fn rpos_of(s: &[u32]) -> u32 {
    rpos_witnessed(s).0
}

fn stat_vector(s: &[u32], ascent: bool) -> StatVector {
    if s.is_empty() {
        return StatVector {
            asc: 0,
            rep: 0,
            zero: 0,
            max: 0,
            ealm: ascent.then_some(0),
            rmin: 0,
            rpos: ascent.then_some(0),
        };
    }
    StatVector {
        asc: asc_of(s),
        rep: rep_of(s),
        zero: zero_of(s),
        max: max_of(s),
        ealm: ascent.then(|| ealm_of(s)),
        rmin: rmin_of(s),
        rpos: ascent.then(|| rpos_of(s)),
    }
}

/// All ascent sequences of length n in lexicographic order.
pub fn ascent_sequences(n: usize) -> Vec<AscentSequence> {
    let mut out = Vec::new();
    for_each_ascent_sequence(n, |s| out.push(AscentSequence(s.to_vec())));
    out
}

/// Visit all ascent sequences of length n in lexicographic order without allocating each.
pub fn for_each_ascent_sequence<F: FnMut(&[u32])>(n: usize, mut f: F) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut buf = vec![0u32; n];
    fn rec<F: FnMut(&[u32])>(buf: &mut Vec<u32>, pos: usize, asc: u32, f: &mut F) {
        if pos == buf.len() {
            f(buf);
            return;
        }
        let prev = buf[pos - 1];
        for v in 0..=asc + 1 {
            buf[pos] = v;
            rec(buf, pos + 1, asc + u32::from(prev < v), f);
        }
    }
    rec(&mut buf, 1, 0, &mut f);
}

/// Lazy lexicographic stream of ascent sequences.
pub struct AscentIter {
    cur: Option<Vec<u32>>,
}

impl AscentIter {
    pub fn new(n: usize) -> Self {
        AscentIter { cur: Some(vec![0; n]) }
    }
}

impl Iterator for AscentIter {
    type Item = AscentSequence;
    fn next(&mut self) -> Option<AscentSequence> {
        let cur = self.cur.take()?;
        // successor: bump the rightmost position that can still grow, zero the tail
        let mut nxt = cur.clone();
        let mut pref_asc = vec![0u32; nxt.len()];
        for i in 1..nxt.len() {
            pref_asc[i] = pref_asc[i - 1] + u32::from(nxt[i - 1] < nxt[i]);
        }
        let mut i = nxt.len();
        while i > 1 {
            i -= 1;
            if nxt[i] < pref_asc[i - 1] + 1 {
                nxt[i] += 1;
                for v in nxt.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                self.cur = Some(nxt);
                break;
            }
        }
        Some(AscentSequence(cur))
    }
}

pub fn enumerate_ascent_sequences(n: usize) -> AscentIter {
    AscentIter::new(n)
}

/// All inversion sequences of length n in lexicographic order.
pub fn inversion_sequences(n: usize) -> Vec<InversionSequence> {
    let mut out = Vec::new();
    for_each_inversion_sequence(n, |s| out.push(InversionSequence(s.to_vec())));
    out
}

pub fn for_each_inversion_sequence<F: FnMut(&[u32])>(n: usize, mut f: F) {
    let mut buf = vec![0u32; n];
    loop {
        f(&buf);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (buf[i] as usize) < i {
                buf[i] += 1;
                break;
            }
            buf[i] = 0;
        }
    }
}

/// Fishburn numbers |A_n| for n = 0..=12.
pub const FISHBURN: [u64; 13] = [
    1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240, 201608, 1422074, 10886503,
];
