//! The map g53 from {rpos != 0} in A_{n-1} onto B1 in A_n, and f53 = g53 . g.

use super::rules::{substitute_r1, substitute_r2};
use super::reverse::g53_inv;
use super::simple::{g, g_inv};
use super::MapError;
use crate::classify::Shape;
use crate::seq::asc_of;

fn bump_from(s: &mut [u32], from: usize, m: u32) {
    for v in s.iter_mut().skip(from) {
        if *v >= m {
            *v += 1;
        }
    }
}

/// Which of the four constructions applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G53Case {
    One,
    Two,
    Three,
    Four,
}

pub fn g53_case(s: &[u32]) -> Result<G53Case, MapError> {
    let sh = Shape::of(s);
    if sh.rpos == 0 || !sh.witnessed {
        return Err(MapError::domain(format!("g53 needs rpos != 0: {s:?}")));
    }
    let i = sh.rpos;
    let x = sh.x[i];
    let pp = sh.prm[i - 1];
    let occ: Vec<usize> = (pp + 1..s.len()).filter(|&q| s[q] == x).collect();
    if s[pp + 1] == x {
        let has_masc = (occ[0] + 1..occ[1]).any(|q| sh.masc[q]);
        Ok(if has_masc { G53Case::One } else { G53Case::Two })
    } else {
        let (second, right) = sh.pair.unwrap();
        Ok(if second + 1 == right { G53Case::Four } else { G53Case::Three })
    }
}

pub fn g53(s: &[u32]) -> Result<Vec<u32>, MapError> {
    let case = g53_case(s)?;
    let sh = Shape::of(s);
    let i = sh.rpos;
    let x = sh.x[i];
    let pp = sh.prm[i - 1];
    let occ: Vec<usize> = (pp + 1..s.len()).filter(|&q| s[q] == x).collect();
    let mut out = s.to_vec();
    match case {
        G53Case::One => {
            let m = (occ[0] + 1..occ[1]).filter(|&q| sh.masc[q]).map(|q| s[q]).min().unwrap();
            let lm = s.iter().position(|&v| v == m).unwrap();
            out.insert(lm + 1, m + 1);
            bump_from(&mut out, lm + 2, m);
            if occ.len() > 2 {
                out = substitute_r1(&out, i, m)?;
            }
        }
        G53Case::Two => {
            let p2 = occ[1];
            let m = asc_of(&s[..=p2]) + 1;
            out.insert(p2, m);
            bump_from(&mut out, p2 + 1, m);
            if occ.len() > 2 {
                out = substitute_r1(&out, i, m)?;
            }
        }
        G53Case::Three => {
            let p1 = occ[0];
            let m = asc_of(&s[..=p1]) + 2;
            out.insert(pp + 1, x);
            let right = out.iter().rposition(|&v| v == x).unwrap();
            let mut q = p1 + 1;
            while q < right && out[q] == x {
                out[q] = m;
                q += 1;
            }
            bump_from(&mut out, q, m);
            out = substitute_r2(&out, i, m)?;
        }
        G53Case::Four => {
            let m = asc_of(&s[..=pp]) + 2;
            let right = sh.prm[i];
            let mut st = right;
            while s[st - 1] == x {
                st -= 1;
            }
            let k = right - st;
            out.drain(st + 1..=right);
            out.insert(pp + 1, x);
            out.insert(pp + 2, m);
            bump_from(&mut out, pp + 3, m);
            out = substitute_r2(&out, i, m)?;
            let lm = out.iter().position(|&v| v == m).unwrap();
            for _ in 1..k {
                out.insert(lm + 1, m);
            }
        }
    }
    Ok(out)
}

/// B1: rpos != 0, a Masc sits between the two rightmost x_rpos, the rightmost
/// x_{rpos-1} is right before the second rightmost x_rpos, and min Masc does not
/// reappear after the rightmost x_rpos.
pub fn in_b1(s: &[u32]) -> bool {
    let sh = Shape::of(s);
    crate::classify::b_flags(s, &sh).1
}

pub fn f53(s: &[u32]) -> Result<Vec<u32>, MapError> {
    g53(&g(s)?)
}

pub fn f53_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    g_inv(&g53_inv(t)?)
}
