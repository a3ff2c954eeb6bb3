//! The short maps: f2, phi1, f3, f4, f51, f52, g and their D-side mirrors h2..h5, phi2.

use super::MapError;
use crate::classify::{in_p1, in_p2, t_label_shape, d_label, DLabel, Shape, TLabel};
use crate::seq::{asc_of, ealm_of, max_of};

fn need_t(s: &[u32], want: TLabel) -> Result<Shape, MapError> {
    let sh = Shape::of(s);
    let got = t_label_shape(s, &sh);
    if got != want {
        return Err(MapError::domain(format!("{s:?} is {got:?}, expected {want:?}")));
    }
    Ok(sh)
}

fn need_d(s: &[u32], want: DLabel) -> Result<(), MapError> {
    let got = d_label(s);
    if got != want {
        return Err(MapError::domain(format!("{s:?} is {got:?}, expected {want:?}")));
    }
    Ok(())
}

fn is_a_star(s: &[u32]) -> bool {
    !s.iter().enumerate().all(|(i, &v)| v as usize == i)
}

pub fn f2(s: &[u32]) -> Result<(u32, Vec<u32>), MapError> {
    let sh = need_t(s, TLabel::T2)?;
    let mut out = s.to_vec();
    out.remove(sh.prm[sh.rpos]);
    Ok((sh.rpos as u32, out))
}

pub fn f2_inv(i: u32, t: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(t);
    let i = i as usize;
    if !is_a_star(t) || i < sh.rpos || i >= sh.rmin() {
        return Err(MapError::domain(format!("f2 inverse needs rpos <= {i} < rmin on {t:?}")));
    }
    let mut out = t.to_vec();
    out.insert(sh.prm[i], sh.x[i]);
    Ok(out)
}

pub fn phi1(s: &[u32]) -> Result<Vec<u32>, MapError> {
    if !in_p1(s) {
        return Err(MapError::domain(format!("{s:?} is not in P1")));
    }
    Ok(s[..s.len() - 1].to_vec())
}

pub fn phi1_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if !is_a_star(t) {
        return Err(MapError::domain(format!("{t:?} is the staircase")));
    }
    let mut out = t.to_vec();
    out.push(asc_of(t) + 1);
    Ok(out)
}

pub fn f3(s: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = need_t(s, TLabel::T3)?;
    let a = asc_of(s);
    let mut out = s.to_vec();
    out.remove(sh.prm[sh.rpos]);
    out.push(a);
    Ok(out)
}

pub fn f3_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(t);
    if !in_p1(t) || sh.rpos == 0 {
        return Err(MapError::domain(format!("f3 inverse needs P1 and rpos != 0: {t:?}")));
    }
    let i = sh.rpos;
    let mut out = t[..t.len() - 1].to_vec();
    out.insert(sh.prm[i], sh.x[i - 1]);
    Ok(out)
}

pub fn f4(s: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = need_t(s, TLabel::T4)?;
    let mut out = s.to_vec();
    out[sh.prm[sh.rpos]] = sh.sebr.unwrap();
    Ok(out)
}

pub fn f4_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(t);
    if in_p1(t) || sh.rpos == 0 || !is_a_star(t) {
        return Err(MapError::domain(format!("f4 inverse needs P1 complement and rpos != 0: {t:?}")));
    }
    let mut out = t.to_vec();
    out[sh.prm[sh.rpos]] = sh.x[sh.rpos - 1];
    Ok(out)
}

pub fn f51(s: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = need_t(s, TLabel::T51)?;
    let (second, right) = sh.pair.unwrap();
    let mut out = s.to_vec();
    out.remove(right);
    out.insert(second + 1, sh.x[sh.rpos + 1]);
    Ok(out)
}

/// Codomain of f51: rpos != 0, the rightmost x_{rpos-1} sits right before the second
/// rightmost x_rpos, the two rightmost x_rpos are apart and no Masc lies between them.
pub fn in_f51_image(t: &[u32]) -> bool {
    let sh = Shape::of(t);
    match sh.pair {
        Some((second, right)) if sh.rpos != 0 => {
            sh.prm[sh.rpos - 1] + 1 == second
                && second + 1 != right
                && !(second + 1..right).any(|q| sh.masc[q])
        }
        _ => false,
    }
}

pub fn f51_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if !in_f51_image(t) {
        return Err(MapError::domain(format!("{t:?} is outside the image of f51")));
    }
    let sh = Shape::of(t);
    let (second, right) = sh.pair.unwrap();
    let mut out = t.to_vec();
    out.insert(right, sh.x[sh.rpos - 1]);
    out.remove(second);
    Ok(out)
}

pub fn f52(s: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = need_t(s, TLabel::T52)?;
    let mut out = s.to_vec();
    out[sh.prm[sh.rpos]] = sh.x[sh.rpos + 1];
    Ok(out)
}

/// Codomain of f52: rpos != 0, the rightmost x_{rpos-1} is not next to the second
/// rightmost x_rpos, and the two rightmost x_rpos are apart.
pub fn in_f52_image(t: &[u32]) -> bool {
    let sh = Shape::of(t);
    match sh.pair {
        Some((second, right)) if sh.rpos != 0 => sh.prm[sh.rpos - 1] + 1 != second && second + 1 != right,
        _ => false,
    }
}

pub fn f52_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if !in_f52_image(t) {
        return Err(MapError::domain(format!("{t:?} is outside the image of f52")));
    }
    let sh = Shape::of(t);
    let (second, _) = sh.pair.unwrap();
    let mut out = t.to_vec();
    out[second] = sh.x[sh.rpos - 1];
    Ok(out)
}

pub fn g(s: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = need_t(s, TLabel::T53)?;
    let mut out = s.to_vec();
    out[sh.prm[sh.rpos]] = sh.sebr.unwrap();
    out.pop();
    Ok(out)
}

pub fn g_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(t);
    if sh.rpos == 0 {
        return Err(MapError::domain(format!("g inverse needs rpos != 0: {t:?}")));
    }
    let mut out = t.to_vec();
    out[sh.prm[sh.rpos]] = sh.x[sh.rpos - 1];
    out.push(asc_of(&out) + 1);
    Ok(out)
}

pub fn h2(s: &[u32]) -> Result<(u32, Vec<u32>), MapError> {
    need_d(s, DLabel::D2)?;
    let p = max_of(s) as usize;
    let mut out = s.to_vec();
    let e = out.remove(p);
    Ok((e, out))
}

pub fn h2_inv(i: u32, t: &[u32]) -> Result<Vec<u32>, MapError> {
    let p = max_of(t);
    if !is_a_star(t) || i < ealm_of(t) || i >= p {
        return Err(MapError::domain(format!("h2 inverse needs ealm <= {i} < max on {t:?}")));
    }
    let mut out = t.to_vec();
    out.insert(p as usize, i);
    Ok(out)
}

pub fn phi2(s: &[u32]) -> Result<Vec<u32>, MapError> {
    if !in_p2(s) || !is_a_star(s) {
        return Err(MapError::domain(format!("{s:?} is not in P2")));
    }
    let p = max_of(s);
    let mut out = s.to_vec();
    out.remove(p as usize - 1);
    for v in out.iter_mut().skip(p as usize - 1) {
        if *v >= p {
            *v -= 1;
        }
    }
    Ok(out)
}

pub fn phi2_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if !is_a_star(t) {
        return Err(MapError::domain(format!("{t:?} is the staircase")));
    }
    let p = max_of(t);
    let mut out = t.to_vec();
    for v in out.iter_mut().skip(p as usize) {
        if *v >= p {
            *v += 1;
        }
    }
    out.insert(p as usize, p);
    Ok(out)
}

fn set_after_max(s: &[u32], v: u32) -> Vec<u32> {
    let mut out = s.to_vec();
    out[max_of(s) as usize] = v;
    out
}

pub fn h3(s: &[u32]) -> Result<Vec<u32>, MapError> {
    need_d(s, DLabel::D3)?;
    Ok(set_after_max(s, max_of(s)))
}

/// Shared by the inverses of h3 and h4: the entry max-1 at position max goes back to ealm-1.
fn h34_inv(t: &[u32]) -> Vec<u32> {
    let p = max_of(t) as usize;
    let mut out = t.to_vec();
    out[p - 1] = ealm_of(t) - 1;
    out
}

pub fn h3_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if !in_p2(t) || ealm_of(t) == 0 || !is_a_star(t) {
        return Err(MapError::domain(format!("h3 inverse needs P2 and ealm != 0: {t:?}")));
    }
    Ok(h34_inv(t))
}

pub fn h4(s: &[u32]) -> Result<Vec<u32>, MapError> {
    need_d(s, DLabel::D4)?;
    Ok(set_after_max(s, max_of(s)))
}

pub fn h4_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if in_p2(t) || ealm_of(t) == 0 || !is_a_star(t) {
        return Err(MapError::domain(format!("h4 inverse needs P2 complement and ealm != 0: {t:?}")));
    }
    Ok(h34_inv(t))
}

pub fn h5(s: &[u32]) -> Result<Vec<u32>, MapError> {
    need_d(s, DLabel::D5)?;
    let p = max_of(s) as usize;
    let mut out = s.to_vec();
    out[p] += 1;
    Ok(out)
}

pub fn h5_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    let ok = matches!(d_label(t), DLabel::D3 | DLabel::D4 | DLabel::D5) && ealm_of(t) != 0;
    if !ok {
        return Err(MapError::domain(format!("h5 inverse needs D3/D4/D5 with ealm != 0: {t:?}")));
    }
    let p = max_of(t) as usize;
    let mut out = t.to_vec();
    out[p] -= 1;
    Ok(out)
}
