//! Inverses of g53 and f54.
//!
//! Each forward building block is undone by a small local reversal. Every candidate
//! preimage is confirmed by running the forward map again, so an inverse can only
//! ever return a true preimage.

use super::f54::{f54_case, min_masc_between, step1, step2, step_prefix, F54Case};
use super::g53::{g53, g53_case, in_b1, G53Case};
use super::rules::{insert_r3, insert_r4, substitute_r1};
use super::MapError;
use crate::classify::{b_flags, t_label_shape, Shape, TLabel};
use crate::seq::{asc_of, is_ascent_sequence};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    R1,
    R2,
}

fn inside(v: u32, x: u32, m: u32) -> bool {
    x < v && v < m
}

/// Undo the single substitution that produced the m at `p`; returns the new sequence
/// and the position of the restored x.
fn single_undos(w: &[u32], p: usize, x: u32, m: u32, rule: Rule) -> Vec<(Vec<u32>, usize)> {
    let mut out = Vec::new();
    let mut v = w.to_vec();
    v[p] = x;
    out.push((v, p));
    // m moved to the right end of a block that used to follow x
    let left_block = |pred: &dyn Fn(u32) -> bool| {
        let mut b = p;
        while b > 0 && pred(w[b - 1]) {
            b -= 1;
        }
        b
    };
    let b = left_block(&|v| inside(v, x, m));
    if b < p {
        let mut v = w[..b].to_vec();
        v.push(x);
        v.extend_from_slice(&w[b..p]);
        v.extend_from_slice(&w[p + 1..]);
        out.push((v, b));
    }
    match rule {
        Rule::R1 => {
            // m moved to the left end of a block that used to precede x
            let mut e = p + 1;
            while e < w.len() && inside(w[e], x, m) {
                e += 1;
            }
            if e > p + 1 {
                let mut v = w[..p].to_vec();
                v.extend_from_slice(&w[p + 1..e]);
                let at = v.len();
                v.push(x);
                v.extend_from_slice(&w[e..]);
                out.push((v, at));
            }
        }
        Rule::R2 => {
            let b = left_block(&|v| v > m);
            if b < p {
                let mut v = w[..b].to_vec();
                v.push(x);
                v.extend_from_slice(&w[b..p]);
                v.extend_from_slice(&w[p + 1..]);
                out.push((v, b));
            }
        }
    }
    out
}

/// All sequences obtained by turning every m strictly between `lo` and the rightmost x
/// back into x, undoing substitutions from right to left.
fn undo_rule(w: &[u32], x: u32, m: u32, lo: usize, rule: Rule) -> Vec<Vec<u32>> {
    let mut results = BTreeSet::new();
    let mut stack = vec![w.to_vec()];
    let mut budget = 200_000usize;
    while let Some(cur) = stack.pop() {
        budget = budget.saturating_sub(1);
        if budget == 0 {
            break;
        }
        let right = match cur.iter().rposition(|&v| v == x) {
            Some(r) => r,
            None => continue,
        };
        let p = match (lo + 1..right).rev().find(|&q| cur[q] == m) {
            None => {
                results.insert(cur);
                continue;
            }
            Some(p) => p,
        };
        let mut run = 0;
        if rule == Rule::R2 {
            while p - run - 1 > lo && cur[p - run - 1] == m {
                run += 1;
            }
        }
        for e in 0..=run {
            let s0 = p - e;
            let mut base = cur.clone();
            base.drain(s0 + 1..=p);
            for (mut v, at) in single_undos(&base, s0, x, m, rule) {
                for _ in 0..e {
                    v.insert(at + 1, x);
                }
                stack.push(v);
            }
        }
    }
    results.into_iter().collect()
}

fn undo_r1_chain(t: &[u32], from: usize, to: usize, m: u32) -> Vec<Vec<u32>> {
    let mut set = vec![t.to_vec()];
    for idx in (from..=to).rev() {
        let mut next = Vec::new();
        for w in &set {
            let sh = Shape::of(w);
            if idx >= sh.rmin() || idx == 0 {
                continue;
            }
            for c in undo_rule(w, sh.x[idx], m, sh.prm[idx - 1], Rule::R1) {
                if substitute_r1(&c, idx, m).ok().as_deref() == Some(&w[..]) {
                    next.push(c);
                }
            }
        }
        set = next;
    }
    set
}

fn unbump(s: &mut [u32], from: usize, m: u32) -> bool {
    for v in s.iter_mut().skip(from) {
        if *v == m {
            return false;
        }
        if *v > m {
            *v -= 1;
        }
    }
    true
}

fn collect_unique(cands: BTreeSet<Vec<u32>>, what: &str, t: &[u32]) -> Result<Vec<u32>, MapError> {
    match cands.len() {
        1 => Ok(cands.into_iter().next().unwrap()),
        0 => Err(MapError::domain(format!("{t:?} has no preimage under {what}"))),
        _ => Err(MapError::internal(format!("{t:?} has several preimages under {what}: {cands:?}"))),
    }
}

fn cache() -> &'static Mutex<HashMap<(u8, Vec<u32>), Result<Vec<u32>, MapError>>> {
    static C: OnceLock<Mutex<HashMap<(u8, Vec<u32>), Result<Vec<u32>, MapError>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn memo<F: FnOnce() -> Result<Vec<u32>, MapError>>(tag: u8, key: &[u32], f: F) -> Result<Vec<u32>, MapError> {
    if let Some(r) = cache().lock().unwrap().get(&(tag, key.to_vec())) {
        return r.clone();
    }
    let r = f();
    cache().lock().unwrap().insert((tag, key.to_vec()), r.clone());
    r
}

/// Inverse of g53 on B1.
pub fn g53_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    memo(0, t, || g53_inv_raw(t))
}

fn g53_inv_raw(t: &[u32]) -> Result<Vec<u32>, MapError> {
    if !in_b1(t) {
        return Err(MapError::domain(format!("{t:?} is not in B1")));
    }
    let sh = Shape::of(t);
    let i = sh.rpos;
    let x = sh.x[i];
    let pp = sh.prm[i - 1];
    let m = sh.min_masc.unwrap();
    let lm = t.iter().position(|&v| v == m).unwrap();
    let mut raw: Vec<(G53Case, Vec<u32>)> = Vec::new();

    // cases one and two: R1 products are every m after the leftmost one
    for w in undo_rule(t, x, m, lm.max(pp), Rule::R1) {
        if w.get(lm + 1) == Some(&(m + 1)) {
            let mut c = w.clone();
            c.remove(lm + 1);
            if unbump(&mut c, lm + 1, m) {
                raw.push((G53Case::One, c));
            }
        }
        let mut c = w.clone();
        c.remove(lm);
        if unbump(&mut c, lm, m) {
            raw.push((G53Case::Two, c));
        }
    }

    // case three: the leftmost m opens a run replacing the former first copies of x
    let mut run = 0;
    while lm + run < t.len() && t[lm + run] == m {
        run += 1;
    }
    for r in 1..=run {
        for w in undo_rule(t, x, m, (lm + r - 1).max(pp), Rule::R2) {
            let mut c = w.clone();
            for v in c.iter_mut().skip(lm).take(r) {
                *v = x;
            }
            if !unbump(&mut c, lm + r, m) || c.get(pp + 1) != Some(&x) {
                continue;
            }
            c.remove(pp + 1);
            raw.push((G53Case::Three, c));
        }
    }

    // case four: x, m inserted after x_{i-1}, extra m's after the leftmost one
    if lm == pp + 2 && t[pp + 1] == x {
        for extra in 0..run {
            let mut w0 = t.to_vec();
            w0.drain(lm + 1..lm + 1 + extra);
            for w in undo_rule(&w0, x, m, lm.max(pp), Rule::R2) {
                let mut c = w.clone();
                if !unbump(&mut c, lm + 1, m) {
                    continue;
                }
                c.drain(pp + 1..=pp + 2);
                let right = match c.iter().rposition(|&v| v == x) {
                    Some(r) => r,
                    None => continue,
                };
                for _ in 0..=extra {
                    c.insert(right + 1, x);
                }
                raw.push((G53Case::Four, c));
            }
        }
    }

    let mut found = BTreeSet::new();
    for (case, c) in raw {
        if !is_ascent_sequence(&c) {
            continue;
        }
        if g53_case(&c).ok() == Some(case) && g53(&c).ok().as_deref() == Some(t) {
            found.insert(c);
        }
    }
    collect_unique(found, "g53", t)
}

/// Undo R3: the inserted m is a right-to-left minimum of `w3`.
fn undo_r3(w3: &[u32], m: u32) -> Option<Vec<u32>> {
    let sh = Shape::of(w3);
    let a = sh.x.iter().position(|&v| v == m)?;
    let rm = sh.rmin();
    let mut w2 = w3.to_vec();
    for r in a..rm - 1 {
        w2[sh.prm[r]] = sh.x[r + 1];
    }
    w2.pop();
    (insert_r3(&w2, m).ok().as_deref() == Some(w3)).then_some(w2)
}

/// Undo R4 in every way that R4 confirms.
fn undo_r4(z1: &[u32], m: u32) -> Vec<Vec<u32>> {
    let sh = Shape::of(z1);
    let mut out = Vec::new();
    let a = match sh.x.iter().position(|&v| v == m) {
        Some(a) => a,
        None => return out,
    };
    for big_r in a..sh.rmin() {
        let mut z = z1.to_vec();
        for r in a..big_r {
            z[sh.prm[r]] = sh.x[r + 1];
        }
        let lo = sh.x[big_r];
        let hi = sh.x_or_inf(big_r + 1);
        let from = if big_r == 0 { 0 } else { sh.prm[big_r - 1] + 1 };
        let vals: BTreeSet<u32> = z1[from..].iter().copied().filter(|&v| v > lo && (v as u64) < hi).collect();
        for v in vals {
            let mut c = z.clone();
            c[sh.prm[big_r]] = v;
            if insert_r4(&c, m).ok().as_deref() == Some(z1) {
                out.push(c);
            }
        }
    }
    out
}

fn is_t54(s: &[u32]) -> bool {
    is_ascent_sequence(s) && t_label_shape(s, &Shape::of(s)) == TLabel::T54
}

/// Pairs (s, j) with step1(s, u, j) == t.
fn rev_step1(t: &[u32], u: usize) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    let masc = crate::classify::masc_flags(t);
    let mut c = 0;
    while c < t.len() && masc[t.len() - 1 - c] {
        c += 1;
    }
    let w4 = &t[..t.len() - c];
    let m = match min_masc_between(t, u + 1) {
        Ok(m) => m,
        Err(_) => return vec![],
    };
    let sh4 = Shape::of(w4);
    let k = match sh4.x.iter().rposition(|&v| v < m) {
        Some(k) => k,
        None => return vec![],
    };
    let w3s = if k >= u + 2 { undo_r1_chain(w4, u + 2, k, m) } else { vec![w4.to_vec()] };
    for w3 in w3s {
        let w2 = match undo_r3(&w3, m) {
            Some(w) => w,
            None => continue,
        };
        for g_mode in [true, false] {
            let w1 = if g_mode {
                match g53_inv(&w2) {
                    Ok(w) => w,
                    Err(_) => continue,
                }
            } else {
                w2.clone()
            };
            let sh1 = Shape::of(&w1);
            for i in u..sh1.rmin().saturating_sub(1) {
                if g_mode != (i == u) {
                    continue;
                }
                let mut s = w1.clone();
                s.insert(sh1.prm[i + 1], sh1.x[i]);
                let a = asc_of(&s);
                for d in 1..=c as u32 + 1 {
                    s.push(a + d);
                }
                if !is_t54(&s) {
                    continue;
                }
                if let Ok((F54Case::One, j)) = f54_case(&s) {
                    if Shape::of(&s).rpos == i && step1(&s, u, j).ok().as_deref() == Some(t) {
                        out.insert(s);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Sequences s (Case 2 or 3) with step_prefix(s, u, j) == y.
fn rev_step_prefix(y: &[u32], u: usize, want: F54Case) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mut consider = |s: Vec<u32>| {
        if !is_t54(&s) {
            return;
        }
        if let Ok((case, j)) = f54_case(&s) {
            if case == want && step_prefix(&s, u, j).ok().as_deref() == Some(y) {
                out.insert(s);
            }
        }
    };
    // with g53 applied to the left part: rpos(s) = u
    for p in 1..y.len() {
        let lp = &y[..p];
        if !in_b1(lp) {
            continue;
        }
        let left = match g53_inv(lp) {
            Ok(l) => l,
            Err(_) => continue,
        };
        let m = match min_masc_between(lp, u + 1) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let mut right = y[p..].to_vec();
        if !unbump(&mut right, 0, m) {
            continue;
        }
        let cut = left.len();
        let mut w = left;
        w.extend(right);
        w.remove(cut);
        let sh = Shape::of(&w);
        if u + 1 < sh.rmin() {
            let mut s = w.clone();
            s.insert(sh.prm[u + 1], sh.x[u]);
            consider(s);
        }
    }
    // without g53: rpos(s) > u
    for cut in 1..y.len() {
        let mut w = y.to_vec();
        w.remove(cut);
        let sh = Shape::of(&w);
        for i in u + 1..sh.rmin().saturating_sub(1) {
            let mut s = w.clone();
            s.insert(sh.prm[i + 1], sh.x[i]);
            consider(s);
        }
    }
    out.into_iter().collect()
}

fn rev_step2(t: &[u32], u: usize) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    let m = match min_masc_between(t, u + 1) {
        Ok(m) => m,
        Err(_) => return vec![],
    };
    let sh = Shape::of(t);
    let k = match sh.x.iter().rposition(|&v| v < m) {
        Some(k) => k,
        None => return vec![],
    };
    let z1s = if k >= u + 2 { undo_r1_chain(t, u + 2, k, m) } else { vec![t.to_vec()] };
    for z1 in z1s {
        let mut zs = vec![z1.clone()];
        zs.extend(undo_r4(&z1, m));
        for z in zs {
            let y = match g53(&z) {
                Ok(y) => y,
                Err(_) => continue,
            };
            for s in rev_step_prefix(&y, u, F54Case::Two) {
                let (_, j) = f54_case(&s).unwrap();
                if step2(&s, u, j, &g53_inv).ok().as_deref() == Some(t) {
                    out.insert(s);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// f54 on T54.
pub fn f54(s: &[u32]) -> Result<Vec<u32>, MapError> {
    memo(1, s, || super::f54::f54_with(s, &g53_inv, &f54_inv))
}

/// Inverse of f54 on B - B1.
pub fn f54_inv(t: &[u32]) -> Result<Vec<u32>, MapError> {
    memo(2, t, || f54_inv_raw(t))
}

fn f54_inv_raw(t: &[u32]) -> Result<Vec<u32>, MapError> {
    let sh = Shape::of(t);
    let (b, b1, c1, _) = b_flags(t, &sh);
    if !b || b1 {
        return Err(MapError::domain(format!("{t:?} is not in B - B1")));
    }
    let u = sh.rpos - 1;
    let n = t.len();
    let cands = if c1 { rev_step1(t, u) } else { rev_step2(t, u) };
    let direct: BTreeSet<Vec<u32>> =
        cands.iter().filter(|s| s.len() == n && Shape::of(s).rpos == u).cloned().collect();
    if !direct.is_empty() {
        return collect_unique(direct, "f54", t);
    }
    let chained: BTreeSet<Vec<u32>> =
        cands.into_iter().filter(|s| s.len() == n + 1 && Shape::of(s).rpos > u).collect();
    let mut cur = collect_unique(chained, "f54", t)?;
    for _ in 0..4 * n + 4 {
        let y = f54(&cur)?;
        let prev: BTreeSet<Vec<u32>> = rev_step_prefix(&y, u, F54Case::Three).into_iter().collect();
        let done: BTreeSet<Vec<u32>> =
            prev.iter().filter(|s| s.len() == n && Shape::of(s).rpos == u).cloned().collect();
        if !done.is_empty() {
            return collect_unique(done, "f54", t);
        }
        let more: BTreeSet<Vec<u32>> =
            prev.into_iter().filter(|s| s.len() == n + 1 && Shape::of(s).rpos > u).collect();
        cur = collect_unique(more, "f54", t)?;
    }
    Err(MapError::internal(format!("inverse Step 3 chain did not close for {t:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g53_inv_examples() {
        let t = [0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 4, 9, 9, 4];
        assert_eq!(g53_inv(&t).unwrap(), vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 4, 4, 4]);
        let t = [0, 1, 2, 0, 1, 2, 5, 2, 3, 3, 4, 8, 8, 4];
        assert_eq!(g53_inv(&t).unwrap(), vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn f54_examples() {
        let s = [0, 1, 2, 0, 1, 2, 5, 2, 3, 2, 3, 8, 8, 4];
        let t = vec![0, 1, 2, 0, 1, 2, 5, 2, 3, 7, 3, 7, 7, 4];
        assert_eq!(f54(&s).unwrap(), t);
        assert_eq!(f54_inv(&t).unwrap(), s.to_vec());
        let s = [0, 1, 2, 0, 1, 2, 1, 2, 6, 3, 6, 6, 4];
        let t = vec![0, 1, 2, 0, 1, 2, 5, 2, 5, 3, 5, 5, 4];
        assert_eq!(f54(&s).unwrap(), t);
        assert_eq!(f54_inv(&t).unwrap(), s.to_vec());
    }
}
