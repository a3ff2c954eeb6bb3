//! f5 on T5 and the master bijection Phi.

use super::g53::{f53, in_b1};
use super::reverse::{f54, f54_inv, g53_inv};
use super::simple::*;
use super::MapError;
use crate::classify::{b_flags, d_label, in_p1, in_p2, t_label, DLabel, Shape, TLabel};
use crate::seq::{ealm_of, is_ascent_sequence, max_of};

/// f5: dispatch on the T5 refinement.
pub fn f5(s: &[u32]) -> Result<Vec<u32>, MapError> {
    match t_label(s) {
        TLabel::T51 => f51(s),
        TLabel::T52 => f52(s),
        TLabel::T53 => f53(s),
        TLabel::T54 => f54(s),
        other => Err(MapError::domain(format!("{s:?} is {other:?}, not in T5"))),
    }
}

/// Inverse of f5; the four images are told apart by where the rightmost x_{rpos-1}
/// sits and by the Masc's between the two rightmost x_rpos.
pub fn f5_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if in_f51_image(t) {
        return f51_inv(t);
    }
    if in_f52_image(t) {
        return f52_inv(t);
    }
    if in_b1(t) {
        return g_inv(&g53_inv(t)?);
    }
    let (b, ..) = b_flags(t, &Shape::of(t));
    if b {
        return f54_inv(t);
    }
    Err(MapError::domain(format!("{t:?} is outside the image of f5")))
}

fn check(s: &[u32]) -> Result<(), MapError> {
    if is_ascent_sequence(s) {
        Ok(())
    } else {
        Err(MapError::domain(format!("{s:?} is not an ascent sequence")))
    }
}

/// The master bijection on A_n.
pub fn phi(s: &[u32]) -> Result<Vec<u32>, MapError> {
    check(s)?;
    phi_rec(s)
}

fn phi_rec(s: &[u32]) -> Result<Vec<u32>, MapError> {
    match d_label(s) {
        DLabel::Staircase => Ok(s.to_vec()),
        DLabel::D1 => {
            let p = max_of(s);
            let i = ealm_of(s);
            let mut out: Vec<u32> = (0..p).collect();
            out.insert(i as usize, i);
            Ok(out)
        }
        DLabel::D2 => {
            let (e, rest) = h2(s)?;
            f2_inv(e, &phi_rec(&rest)?)
        }
        DLabel::D3 => f3_inv(&phi1_inv(&phi_rec(&phi2(&h3(s)?)?)?)?),
        DLabel::D4 => f4_inv(&complement_phi(&h4(s)?)?),
        DLabel::D5 => f5_inv(&phi_rec(&h5(s)?)?),
    }
}

/// Bijection from P2^c onto P1^c at the same length. Phi does not send P2 onto P1, so the
/// orbit under Phi and psi^{-1} (psi = phi1^{-1} . Phi . phi2 from P2 onto P1) is followed
/// until it leaves P1; both maps carry the septuple the same way.
fn complement_phi(u: &[u32]) -> Result<Vec<u32>, MapError> {
    let mut y = phi_rec(u)?;
    for _ in 0..=ORBIT_GUARD {
        if !in_p1(&y) {
            return Ok(y);
        }
        y = phi_rec(&phi2_inv(&phi_inv_rec(&phi1(&y)?)?)?)?;
    }
    Err(MapError::internal(format!("complement orbit of {u:?} did not leave P1")))
}

fn complement_phi_inv(y: &[u32]) -> Result<Vec<u32>, MapError> {
    let mut u = phi_inv_rec(y)?;
    for _ in 0..=ORBIT_GUARD {
        if !in_p2(&u) {
            return Ok(u);
        }
        u = phi_inv_rec(&phi1_inv(&phi_rec(&phi2(&u)?)?)?)?;
    }
    Err(MapError::internal(format!("complement orbit of {y:?} did not leave P2")))
}

const ORBIT_GUARD: usize = 1 << 20;

pub fn phi_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    check(t)?;
    phi_inv_rec(t)
}

fn phi_inv_rec(t: &[u32]) -> Result<Vec<u32>, MapError> {
    match t_label(t) {
        TLabel::Staircase => Ok(t.to_vec()),
        TLabel::T1 => {
            let i = (0..t.len() - 1)
                .find(|&q| t[q] == t[q + 1])
                .ok_or_else(|| MapError::internal(format!("no repeated entry in {t:?}")))?;
            let mut out: Vec<u32> = (0..t.len() as u32 - 1).collect();
            out.push(i as u32);
            Ok(out)
        }
        TLabel::T2 => {
            let (i, rest) = f2(t)?;
            h2_inv(i, &phi_inv_rec(&rest)?)
        }
        TLabel::T3 => h3_inv(&phi2_inv(&phi_inv_rec(&phi1(&f3(t)?)?)?)?),
        TLabel::T4 => h4_inv(&complement_phi_inv(&f4(t)?)?),
        _ => h5_inv(&phi_inv_rec(&f5(t)?)?),
    }
}
