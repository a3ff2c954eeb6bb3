//! Set-valued statistics and the T-/D-/S- partitions of non-staircase ascent sequences.

use crate::seq::{asc_of, max_of, rmin_positions, rpos_witnessed, AscentSequence};
use serde::Serialize;

/// Set-valued statistics of an ascent sequence. Positions are 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetStats {
    pub rmin_values: Vec<u32>,
    pub prm_positions: Vec<usize>,
    pub masc_positions: Vec<usize>,
    pub rpos: u32,
    /// true when some index really repeats after its predecessor minimum
    pub rpos_witnessed: bool,
    /// `None` when the two rightmost copies of the rpos-th minimum are adjacent
    /// (or when there is no witness at all)
    pub sebr: Option<u32>,
    pub min_masc: Option<u32>,
}

/// Internal analysis shared with the bijections (0-indexed).
#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub prm: Vec<usize>,
    pub x: Vec<u32>,
    pub rpos: usize,
    pub witnessed: bool,
    /// 0-indexed positions of the two rightmost x_rpos (second, rightmost)
    pub pair: Option<(usize, usize)>,
    pub sebr: Option<u32>,
    pub min_masc: Option<u32>,
    pub masc: Vec<bool>,
}

pub(crate) fn masc_flags(s: &[u32]) -> Vec<bool> {
    let mut out = vec![false; s.len()];
    let mut asc = 0;
    for i in 0..s.len() {
        if i == 0 {
            out[0] = true;
        } else {
            out[i] = s[i] == asc + 1;
            if s[i - 1] < s[i] {
                asc += 1;
            }
        }
    }
    out
}

impl Shape {
    pub fn of(s: &[u32]) -> Shape {
        let prm = rmin_positions(s);
        let x: Vec<u32> = prm.iter().map(|&p| s[p]).collect();
        let (rpos, witnessed) = rpos_witnessed(s);
        let rpos = rpos as usize;
        let masc = masc_flags(s);
        let mut pair = None;
        let mut sebr = None;
        let mut min_masc = None;
        if witnessed {
            let xr = x[rpos];
            let right = prm[rpos];
            let second = (0..right).rev().find(|&q| s[q] == xr).unwrap();
            pair = Some((second, right));
            sebr = s[second + 1..right].iter().copied().min();
            min_masc = (second + 1..right).filter(|&q| masc[q]).map(|q| s[q]).min();
        }
        Shape { prm, x, rpos, witnessed, pair, sebr, min_masc, masc }
    }

    pub fn rmin(&self) -> usize {
        self.x.len()
    }

    /// x_{i}, with +infinity past the end.
    pub fn x_or_inf(&self, i: usize) -> u64 {
        self.x.get(i).map(|&v| v as u64).unwrap_or(u64::MAX)
    }
}

pub fn set_stats(s: &AscentSequence) -> SetStats {
    let e = s.entries();
    let sh = Shape::of(e);
    SetStats {
        rmin_values: sh.x.clone(),
        prm_positions: sh.prm.iter().map(|p| p + 1).collect(),
        masc_positions: (0..e.len()).filter(|&i| sh.masc[i]).map(|i| i + 1).collect(),
        rpos: sh.rpos as u32,
        rpos_witnessed: sh.witnessed,
        sebr: sh.sebr,
        min_masc: sh.min_masc,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TLabel {
    Staircase,
    T1,
    T2,
    T3,
    T4,
    T51,
    T52,
    T53,
    T54,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DLabel {
    Staircase,
    D1,
    D2,
    D3,
    D4,
    D5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MLabel {
    M51,
    M52,
    M53,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum D5Label {
    D51,
    D52,
    D53,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SLabel {
    S3,
    S4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetLabel {
    pub t_label: TLabel,
    pub d_label: DLabel,
    pub m_label: Option<MLabel>,
    /// `None` inside D5 would mean the refinement is incomplete
    pub d5_label: Option<D5Label>,
    pub s_label: Option<SLabel>,
    pub p1: bool,
    pub p2: bool,
    pub b: bool,
    pub b1: bool,
    pub c1: bool,
    pub c2: bool,
}

/// Last entry is a Masc sitting on an ascent: s_{n-1} < s_n = asc(s).
pub fn in_p1(s: &[u32]) -> bool {
    let n = s.len();
    n >= 2 && s[n - 2] < s[n - 1] && s[n - 1] == asc_of(s)
}

/// The value max-1 appears exactly once.
pub fn in_p2(s: &[u32]) -> bool {
    let m = max_of(s);
    m >= 1 && s.iter().filter(|&&v| v == m - 1).count() == 1
}

pub fn t_label(s: &[u32]) -> TLabel {
    t_label_shape(s, &Shape::of(s))
}

pub(crate) fn t_label_shape(s: &[u32], sh: &Shape) -> TLabel {
    let n = s.len();
    if sh.rmin() == n {
        return TLabel::Staircase;
    }
    if n == sh.rmin() + 1 {
        return TLabel::T1;
    }
    let i = sh.rpos;
    let (_, right) = match sh.pair {
        Some(p) => p,
        None => unreachable!("non-staircase sequence without rpos witness: {s:?}"),
    };
    let sebr = match sh.sebr {
        None => return TLabel::T2,
        Some(v) => v as u64,
    };
    let next = sh.x_or_inf(i + 1);
    let adjacent_prm = i + 1 < sh.rmin() && sh.prm[i + 1] == right + 1;
    if sebr < next {
        // A^2
        if sh.masc[n - 1] && n >= 2 && s[n - 2] < s[n - 1] {
            TLabel::T53
        } else {
            TLabel::T4
        }
    } else if sebr > next {
        if adjacent_prm {
            TLabel::T51
        } else {
            TLabel::T52
        }
    } else if !adjacent_prm {
        TLabel::T52
    } else {
        let masc_after = (right + 1..n).any(|q| sh.masc[q]);
        if masc_after {
            TLabel::T54
        } else {
            TLabel::T3
        }
    }
}

pub fn d_label(s: &[u32]) -> DLabel {
    let n = s.len();
    let p = max_of(s) as usize;
    if p == n {
        return DLabel::Staircase;
    }
    if n == p + 1 {
        return DLabel::D1;
    }
    let ealm = s[p];
    let nxt = s[p + 1];
    if nxt <= ealm {
        DLabel::D2
    } else if nxt == ealm + 1 {
        if s[p + 1..].contains(&(p as u32)) {
            DLabel::D4
        } else {
            DLabel::D3
        }
    } else {
        DLabel::D5
    }
}

pub fn s_label(s: &[u32]) -> Option<SLabel> {
    let p = max_of(s) as usize;
    if s.len() < p + 2 || s[p] >= s[p + 1] {
        return None;
    }
    if s[p + 1..].contains(&(p as u32)) {
        Some(SLabel::S4)
    } else {
        Some(SLabel::S3)
    }
}

fn d5_label(s: &[u32]) -> Option<D5Label> {
    let p = max_of(s) as usize;
    let ealm = s[p];
    let mn = *s[p + 1..].iter().min()?;
    let rpos = rpos_witnessed(s).0;
    if mn <= ealm || (mn == ealm + 1 && rpos > ealm) {
        Some(D5Label::D51)
    } else if mn == ealm + 1 && rpos == ealm {
        Some(D5Label::D52)
    } else if mn >= ealm + 2 {
        Some(D5Label::D53)
    } else {
        None
    }
}

fn m_label(s: &[u32], sh: &Shape, t: TLabel) -> Option<MLabel> {
    let (second, _) = sh.pair?;
    let maxv = max_of(s) as usize;
    match t {
        TLabel::T51 => Some(MLabel::M51),
        TLabel::T52 => {
            // Prm_rpos = max+1 in 1-indexed terms
            if sh.prm[sh.rpos] == maxv {
                Some(MLabel::M52)
            } else {
                Some(MLabel::M51)
            }
        }
        TLabel::T53 | TLabel::T54 => {
            if second < maxv {
                Some(MLabel::M53)
            } else {
                Some(MLabel::M51)
            }
        }
        _ => None,
    }
}

/// Membership in B, B1, C1, C2.
pub(crate) fn b_flags(s: &[u32], sh: &Shape) -> (bool, bool, bool, bool) {
    let i = sh.rpos;
    let (second, right) = match sh.pair {
        Some(p) => p,
        None => return (false, false, false, false),
    };
    if i == 0 {
        return (false, false, false, false);
    }
    let m = match sh.min_masc {
        Some(m) => m,
        None => return (false, false, false, false),
    };
    if sh.prm[i - 1] + 1 != second {
        return (false, false, false, false);
    }
    let after = s[right + 1..].contains(&m);
    if !after {
        return (true, true, false, false);
    }
    let c1 = match sh.x.iter().position(|&v| v == m) {
        None => false,
        Some(k1) => (k1.max(1)..sh.rmin()).all(|t| {
            let a = sh.prm[t - 1];
            let b = sh.prm[t];
            if b == a + 1 {
                return true;
            }
            let mn = s[a + 1..b].iter().copied().min().unwrap() as u64;
            mn >= sh.x_or_inf(t + 1)
        }),
    };
    (true, false, c1, !c1)
}

pub fn classify(s: &AscentSequence) -> SubsetLabel {
    classify_slice(s.entries())
}

pub fn classify_slice(s: &[u32]) -> SubsetLabel {
    let sh = Shape::of(s);
    let t = t_label_shape(s, &sh);
    let d = d_label(s);
    let (b, b1, c1, c2) = b_flags(s, &sh);
    SubsetLabel {
        t_label: t,
        d_label: d,
        m_label: m_label(s, &sh, t),
        d5_label: if d == DLabel::D5 { d5_label(s) } else { None },
        s_label: s_label(s),
        p1: in_p1(s),
        p2: in_p2(s),
        b,
        b1,
        c1,
        c2,
    }
}
