//! The recursive map f54 from T54 onto B - B1 = C1 + C2.

use super::g53::g53;
use super::rules::{insert_r3, insert_r4, substitute_r1};
use super::MapError;
use crate::classify::{t_label_shape, Shape, TLabel};
use crate::seq::asc_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F54Case {
    One,
    Two,
    Three,
}

/// Case of s in T54 and the index j of the minimum the first Masc after Prm_rpos belongs to.
pub fn f54_case(s: &[u32]) -> Result<(F54Case, usize), MapError> {
    let sh = Shape::of(s);
    if t_label_shape(s, &sh) != TLabel::T54 {
        return Err(MapError::domain(format!("{s:?} is not in T54")));
    }
    f54_case_shape(s, &sh)
}

fn f54_case_shape(s: &[u32], sh: &Shape) -> Result<(F54Case, usize), MapError> {
    let right = sh.prm[sh.rpos];
    let q = (right + 1..s.len())
        .find(|&q| sh.masc[q])
        .ok_or_else(|| MapError::internal(format!("no Masc after Prm_rpos in {s:?}")))?;
    if let Some(j) = sh.prm.iter().position(|&p| p == q) {
        return Ok((F54Case::One, j));
    }
    let j = sh.prm.iter().position(|&p| p > q).unwrap();
    if s[sh.prm[j]..].contains(&s[q]) {
        Ok((F54Case::Three, j))
    } else {
        Ok((F54Case::Two, j))
    }
}

/// The minimal Masc strictly between the two rightmost copies of x_idx.
pub(crate) fn min_masc_between(s: &[u32], idx: usize) -> Result<u32, MapError> {
    let sh = Shape::of(s);
    let x = *sh
        .x
        .get(idx)
        .ok_or_else(|| MapError::internal(format!("no minimum of index {idx} in {s:?}")))?;
    let right = sh.prm[idx];
    let second = (0..right)
        .rev()
        .find(|&q| s[q] == x)
        .ok_or_else(|| MapError::internal(format!("x_{idx} occurs once in {s:?}")))?;
    (second + 1..right)
        .filter(|&q| sh.masc[q])
        .map(|q| s[q])
        .min()
        .ok_or_else(|| MapError::internal(format!("no Masc between the rightmost x_{idx} in {s:?}")))
}

fn bump_from(s: &mut [u32], from: usize, m: u32) {
    for v in s.iter_mut().skip(from) {
        if *v >= m {
            *v += 1;
        }
    }
}

fn r1_range(mut t: Vec<u32>, from: usize, to: usize, m: u32) -> Result<Vec<u32>, MapError> {
    for idx in from..=to {
        t = substitute_r1(&t, idx, m)?;
    }
    Ok(t)
}

/// Step 1 on the pair (s, u); s is in Case 1 with index j.
pub fn step1(s: &[u32], u: usize, j: usize) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(s);
    let i = sh.rpos;
    let rm = sh.rmin();
    let mut t = s[..=sh.prm[j - 1]].to_vec();
    t.remove(sh.prm[i]);
    if u == i {
        t = g53(&t)?;
    }
    let m = min_masc_between(&t, u + 1)?;
    t = insert_r3(&t, m)?;
    let tsh = Shape::of(&t);
    let k = tsh.x.iter().rposition(|&v| v < m).unwrap();
    t = r1_range(t, u + 2, k, m)?;
    for _ in 0..rm - j - 1 {
        let a = asc_of(&t);
        t.push(a + 1);
    }
    Ok(t)
}

/// The first three parts shared by Steps 2 and 3.
pub fn step_prefix(s: &[u32], u: usize, j: usize) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(s);
    let i = sh.rpos;
    let mut t = s.to_vec();
    t.remove(sh.prm[i]);
    let cut = sh.prm[j - 1];
    t.insert(cut, sh.x[j]);
    if u == i {
        let mut left = g53(&t[..cut])?;
        let m = min_masc_between(&left, u + 1)?;
        let mut right = t[cut..].to_vec();
        bump_from(&mut right, 0, m);
        left.extend(right);
        t = left;
    }
    Ok(t)
}

/// Step 2 on the pair (s, u); `g53_inv` inverts g53 on B1.
pub fn step2<G>(s: &[u32], u: usize, j: usize, g53_inv: &G) -> Result<Vec<u32>, MapError>
where
    G: Fn(&[u32]) -> Result<Vec<u32>, MapError>,
{
    let t = step_prefix(s, u, j)?;
    let mut t = g53_inv(&t)?;
    let m = min_masc_between(&t, u + 1)?;
    let tsh = Shape::of(&t);
    let k = tsh.x.iter().rposition(|&v| v < m).unwrap();
    if k < j {
        t = insert_r4(&t, m)?;
    }
    r1_range(t, u + 2, k, m)
}

/// f54 given oracles for g53^{-1} and for f54^{-1} (the latter is only consulted in Case 3).
pub fn f54_with<G, F>(s: &[u32], g53_inv: &G, f54_inv: &F) -> Result<Vec<u32>, MapError>
where
    G: Fn(&[u32]) -> Result<Vec<u32>, MapError>,
    F: Fn(&[u32]) -> Result<Vec<u32>, MapError>,
{
    let (mut case, mut j) = f54_case(s)?;
    let u = Shape::of(s).rpos;
    let mut cur = s.to_vec();
    for _ in 0..=2 * s.len() + 4 {
        match case {
            F54Case::One => return step1(&cur, u, j),
            F54Case::Two => return step2(&cur, u, j, g53_inv),
            F54Case::Three => {
                let y = step_prefix(&cur, u, j)?;
                cur = f54_inv(&y)?;
                (case, j) = f54_case(&cur)?;
            }
        }
    }
    Err(MapError::internal(format!("Step 3 did not terminate on {s:?}")))
}
