//! Substitution rules R1, R2 and insertion rules R3, R4.

use super::MapError;
use crate::classify::{masc_flags, Shape};

fn last_pos(s: &[u32], v: u32) -> Option<usize> {
    s.iter().rposition(|&e| e == v)
}

fn first_pos(s: &[u32], v: u32) -> Option<usize> {
    s.iter().position(|&e| e == v)
}

/// Leftmost non-rightmost x_i that lies after the leftmost m and after the rightmost
/// x_{i-1}, with no m between it and the rightmost x_i.
fn next_candidate(s: &[u32], x: u32, xprev: u32, m: u32) -> Option<usize> {
    let right = last_pos(s, x)?;
    let lm = first_pos(s, m)?;
    let pp = last_pos(s, xprev)?;
    (lm.max(pp) + 1..right).find(|&q| s[q] == x && !s[q + 1..right].contains(&m))
}

fn values(s: &[u32], i: usize) -> Result<(u32, u32), MapError> {
    let sh = Shape::of(s);
    if i == 0 || i >= sh.rmin() {
        return Err(MapError::precondition(format!("rmin index {i} out of range for {s:?}")));
    }
    Ok((sh.x[i], sh.x[i - 1]))
}

/// Substitutions (2) and (3) of R1 and (6) of R2 share this shape.
fn move_after(s: &mut Vec<u32>, q: usize, e: usize, m: u32) -> usize {
    s.insert(e + 1, m);
    s.remove(q);
    e
}

fn r1_apply(s: &mut Vec<u32>, q: usize, x: u32, xprev: u32, m: u32) -> Result<usize, MapError> {
    let k1 = s[q - 1];
    let k2 = s[q + 1];
    let inside = |v: u32| x < v && v < m;
    let left_big = k1 >= m || k1 == xprev;
    let right_big = k2 > m || k2 == x;
    if (inside(k1) && inside(k2)) || (left_big && right_big) {
        s[q] = m;
        Ok(q)
    } else if inside(k1) && right_big {
        let mut b = q - 1;
        while b > 0 && inside(s[b - 1]) {
            b -= 1;
        }
        s.remove(q);
        s.insert(b, m);
        Ok(b)
    } else if left_big && inside(k2) {
        let mut e = q + 1;
        while e + 1 < s.len() && inside(s[e + 1]) {
            e += 1;
        }
        Ok(move_after(s, q, e, m))
    } else {
        Err(MapError::precondition(format!("R1 has no substitution for position {} of {s:?}", q + 1)))
    }
}

/// Rule R1: replace the non-rightmost copies of x_i (rmin index `i`) by the Masc `m`.
pub fn substitute_r1(s: &[u32], i: usize, m: u32) -> Result<Vec<u32>, MapError> {
    Ok(substitute_r1_steps(s, i, m)?.pop().unwrap_or_else(|| s.to_vec()))
}

/// R1 with every intermediate state (one per substitution).
pub fn substitute_r1_steps(s: &[u32], i: usize, m: u32) -> Result<Vec<Vec<u32>>, MapError> {
    let (x, xprev) = values(s, i)?;
    if x >= m {
        return Err(MapError::precondition(format!("R1 needs x_i < m, got {x} >= {m}")));
    }
    let mut out = s.to_vec();
    let mut states = Vec::new();
    while let Some(q) = next_candidate(&out, x, xprev, m) {
        r1_apply(&mut out, q, x, xprev, m)?;
        states.push(out.clone());
    }
    Ok(states)
}

/// Rule R2: as R1 but the two rightmost x_i must not be adjacent.
pub fn substitute_r2(s: &[u32], i: usize, m: u32) -> Result<Vec<u32>, MapError> {
    Ok(substitute_r2_steps(s, i, m)?.pop().unwrap_or_else(|| s.to_vec()))
}

pub fn substitute_r2_steps(s: &[u32], i: usize, m: u32) -> Result<Vec<Vec<u32>>, MapError> {
    let (x, xprev) = values(s, i)?;
    if x >= m {
        return Err(MapError::precondition(format!("R2 needs x_i < m, got {x} >= {m}")));
    }
    let right = last_pos(s, x).unwrap();
    if right > 0 && s[right - 1] == x {
        return Err(MapError::precondition("R2 needs the two rightmost x_i apart".into()));
    }
    let mut out = s.to_vec();
    let mut states = Vec::new();
    while let Some(q) = next_candidate(&out, x, xprev, m) {
        let right = last_pos(&out, x).unwrap();
        // (4): a run of non-rightmost copies starting at q
        let mut extra = 0;
        while q + 1 + extra < right && out[q + 1 + extra] == x {
            extra += 1;
        }
        if extra > 0 {
            out.drain(q + 1..q + 1 + extra);
        }
        let at = r2_single(&mut out, q, x, xprev, m)?;
        for _ in 0..extra {
            out.insert(at + 1, m);
        }
        states.push(out.clone());
    }
    Ok(states)
}

fn r2_single(s: &mut Vec<u32>, q: usize, x: u32, xprev: u32, m: u32) -> Result<usize, MapError> {
    let k1 = s[q - 1];
    let k2 = s[q + 1];
    let inside = |v: u32| x < v && v < m;
    if (inside(k1) && inside(k2)) || ((k1 > m || k1 == xprev) && k2 > m) {
        s[q] = m;
        Ok(q)
    } else if x < k1 && k1 <= m && k2 > m {
        let mut e = q + 1;
        while e + 1 < s.len() && s[e + 1] > m {
            e += 1;
        }
        Ok(move_after(s, q, e, m))
    } else if (k1 >= m || k1 == xprev) && inside(k2) {
        let mut e = q + 1;
        while e + 1 < s.len() && inside(s[e + 1]) {
            e += 1;
        }
        Ok(move_after(s, q, e, m))
    } else {
        Err(MapError::precondition(format!("R2 has no substitution for position {} of {s:?}", q + 1)))
    }
}

fn r34_check(s: &[u32], m: u32) -> Result<(Shape, usize), MapError> {
    let sh = Shape::of(s);
    let masc = masc_flags(s);
    let occ: Vec<usize> = (0..s.len()).filter(|&q| s[q] == m).collect();
    // R1 can leave extra copies of m behind, so only the Masc and non-rmin conditions are enforced
    if m == 0 || !occ.iter().any(|&q| masc[q]) || sh.x.contains(&m) {
        return Err(MapError::precondition(format!("{m} must be a Masc and not a right-to-left minimum of {s:?}")));
    }
    let k = sh.x.iter().rposition(|&v| v < m).unwrap();
    Ok((sh, k))
}

/// Rule R3: insert a copy of `m` so that it becomes a new right-to-left minimum.
pub fn insert_r3(s: &[u32], m: u32) -> Result<Vec<u32>, MapError> {
    let (sh, k) = r34_check(s, m)?;
    let mut out = s.to_vec();
    let rm = sh.rmin();
    if k == rm - 1 {
        out.push(m);
    } else {
        out[sh.prm[k + 1]] = m;
        for r in k + 1..=rm - 2 {
            out[sh.prm[r + 1]] = sh.x[r];
        }
        out.push(sh.x[rm - 1]);
    }
    Ok(out)
}

/// Rule R4: insert `m` and drop the rightmost x_rpos; length is unchanged.
pub fn insert_r4(s: &[u32], m: u32) -> Result<Vec<u32>, MapError> {
    let (sh, k) = r34_check(s, m)?;
    if k >= sh.rpos {
        return Err(MapError::precondition(format!("R4 needs k < rpos in {s:?}")));
    }
    let mut out = s.to_vec();
    out[sh.prm[k + 1]] = m;
    for r in k + 1..sh.rpos {
        out[sh.prm[r + 1]] = sh.x[r];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r1_example() {
        let s = [0, 1, 2, 0, 1, 4, 1, 2, 1, 1];
        assert_eq!(substitute_r1(&s, 1, 4).unwrap(), vec![0, 1, 2, 0, 1, 4, 2, 4, 4, 1]);
    }

    #[test]
    fn r2_example() {
        let s = [0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1];
        assert_eq!(substitute_r2(&s, 1, 4).unwrap(), vec![0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 4, 3, 1]);
    }

    #[test]
    fn r1_r2_mid_states() {
        let st = substitute_r1_steps(&[0, 1, 2, 0, 1, 4, 1, 2, 1, 1], 1, 4).unwrap();
        assert_eq!(st[0], vec![0, 1, 2, 0, 1, 4, 2, 4, 1, 1]);
        let st = substitute_r2_steps(&[0, 1, 2, 0, 1, 4, 4, 1, 5, 2, 1, 3, 1], 1, 4).unwrap();
        assert_eq!(st[0], vec![0, 1, 2, 0, 1, 4, 4, 5, 4, 2, 1, 3, 1]);
    }

    #[test]
    fn r3_append() {
        assert_eq!(insert_r3(&[0, 1, 2, 1], 2).unwrap(), vec![0, 1, 2, 1, 2]);
    }
}
