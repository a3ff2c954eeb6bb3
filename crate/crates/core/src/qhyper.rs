//! Basic hypergeometric series in base q = 1 - r, expanded as power series in r.
//!
//! Factors of a term are normalized to r^v * unit before they are multiplied, so the
//! (q;q)_k denominators, which vanish at r = 0, never need a division by a non-unit.

use crate::genfun::GfReport;
use crate::series::{ParamPoint, Rat, RatSeries, SeriesError};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QError {
    #[error("degenerate point: {0}")]
    Degenerate(String),
    #[error("no valuation guarantee; give an explicit term ceiling")]
    NoValuation,
    #[error("a lower parameter produces a vanishing factor at k = {0}")]
    Pole(usize),
    #[error("parameter given at order {got}, need {need}")]
    Precision { got: usize, need: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A parameter: either (1-r)^j or an r-series given to at least the working order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    QPow(i64),
    Value(RatSeries),
}

impl Param {
    pub fn constant(c: Rat) -> Param {
        Param::Value(RatSeries::constant('r', 0, c))
    }

    fn series(&self, work: usize) -> Result<RatSeries, QError> {
        match self {
            Param::QPow(j) => Ok(RatSeries::one_minus_var_pow('r', work, *j)),
            Param::Value(s) if s.order() == 0 => Ok(RatSeries::constant('r', work, s.coeff(0))),
            Param::Value(s) if s.order() >= work => Ok(s.truncate(work)),
            Param::Value(s) => Err(QError::Precision { got: s.order(), need: work }),
        }
    }
}

/// Working order for parameters of a series wanted to order N.
pub fn work_order(order: usize) -> usize {
    3 * order + 2
}

/// sum_k prod (a_i;q)_k / prod (b_i;q)_k * z^k * ((-1)^k q^C(k,2))^sign_exp, to order N.
#[derive(Debug, Clone)]
pub struct PochSum {
    pub upper: Vec<Param>,
    pub lower: Vec<Param>,
    pub z: Param,
    pub sign_exp: i64,
    pub order: usize,
    pub ceiling: Option<usize>,
}

/// The series an alpha-phi-beta spec denotes: (q;q)_k joins the lower parameters.
#[derive(Debug, Clone)]
pub struct PhiSpec {
    pub upper: Vec<Param>,
    pub lower: Vec<Param>,
    pub z: Param,
    pub order: usize,
    pub ceiling: Option<usize>,
}

pub fn phi_series(spec: &PhiSpec) -> Result<RatSeries, QError> {
    let mut lower = spec.lower.clone();
    lower.push(Param::QPow(1));
    let sign_exp = 1 + spec.lower.len() as i64 - spec.upper.len() as i64;
    poch_sum(&PochSum {
        upper: spec.upper.clone(),
        lower,
        z: spec.z.clone(),
        sign_exp,
        order: spec.order,
        ceiling: spec.ceiling,
    })
}

enum Norm {
    /// r^v * unit, unit known to order N
    Unit(usize, RatSeries),
    /// valuation beyond what the working order can resolve
    Tiny,
}

fn normalize(f: &RatSeries, order: usize) -> Norm {
    match f.valuation() {
        Some(v) if v + order <= f.order() => Norm::Unit(v, f.shift_div(v).unwrap().truncate(order)),
        _ => Norm::Tiny,
    }
}

fn constant_is_one(p: &RatSeries) -> bool {
    p.coeff(0).is_one()
}

/// Term ceiling from the r-adic valuation: each upper parameter congruent to 1 adds one
/// to the valuation of every factor step, each such lower parameter removes one.
fn term_ceiling(spec: &PochSum, ups: &[RatSeries], lows: &[RatSeries]) -> Result<usize, QError> {
    let mut ceiling = spec.ceiling;
    for p in &spec.upper {
        if let Param::QPow(j) = p {
            if *j <= 0 {
                let t = (-*j) as usize;
                ceiling = Some(ceiling.map_or(t, |c| c.min(t)));
            }
        }
    }
    let gain = ups.iter().filter(|p| constant_is_one(p)).count() as i64
        - lows.iter().filter(|p| constant_is_one(p)).count() as i64;
    match (gain >= 1, ceiling) {
        (true, Some(c)) => Ok(c.min(spec.order)),
        (true, None) => Ok(spec.order),
        (false, Some(c)) => Ok(c),
        (false, None) => Err(QError::NoValuation),
    }
}

pub fn poch_sum(spec: &PochSum) -> Result<RatSeries, QError> {
    let n = spec.order;
    let work = work_order(n);
    let ups: Vec<RatSeries> = spec.upper.iter().map(|p| p.series(work)).collect::<Result<_, _>>()?;
    let lows: Vec<RatSeries> = spec.lower.iter().map(|p| p.series(work)).collect::<Result<_, _>>()?;
    let z = spec.z.series(work)?;
    let ceiling = term_ceiling(spec, &ups, &lows)?;
    let one = RatSeries::one('r', work);
    let q = RatSeries::one_minus_var_pow('r', work, 1);
    let q_inv = RatSeries::one_minus_var_pow('r', work, -1);
    let z_norm = normalize(&z, n);

    let mut total = RatSeries::zero('r', n);
    // term_k = r^val * unit
    let mut val: i64 = 0;
    let mut unit = RatSeries::one('r', n);
    let u = &mut unit;
    let mut qk = one.clone();
    total = &total + &RatSeries::one('r', n);
    for k in 1..=ceiling {
        // factor step k-1 -> k uses q^(k-1)
        let mut step_ok = true;
        for a in &ups {
            match normalize(&(&one - &(a * &qk)), n) {
                Norm::Unit(v, s) => {
                    val += v as i64;
                    *u = &*u * &s;
                }
                Norm::Tiny => step_ok = false,
            }
        }
        for b in &lows {
            match normalize(&(&one - &(b * &qk)), n) {
                Norm::Unit(v, s) => {
                    val -= v as i64;
                    *u = &*u * &s.invert()?;
                }
                Norm::Tiny => return Err(QError::Pole(k - 1)),
            }
        }
        match &z_norm {
            Norm::Unit(v, s) => {
                val += *v as i64;
                *u = &*u * s;
            }
            Norm::Tiny => step_ok = false,
        }
        if spec.sign_exp != 0 {
            // ((-1) q^(k-1))^sign_exp
            let base = if spec.sign_exp > 0 { qk.clone() } else { q_inv.pow(k as u32 - 1) };
            let mut f = base.pow(spec.sign_exp.unsigned_abs() as u32).truncate(n);
            if spec.sign_exp % 2 != 0 {
                f = -&f;
            }
            *u = &*u * &f;
        }
        if !step_ok {
            // every later term is beyond the working order as well
            break;
        }
        if val > n as i64 {
            // valuation only grows from here when the ceiling came from the guarantee
            qk = &qk * &q;
            continue;
        }
        if val < 0 {
            return Err(QError::Degenerate(format!("term {k} has negative valuation {val}")));
        }
        total = &total + &u.shift_mul(val as usize);
        qk = &qk * &q;
    }
    Ok(total)
}

/// (a;q)_k over the rationals.
pub fn poch_rat(a: &Rat, q: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut aq = a.clone();
    for _ in 0..k {
        acc *= Rat::one() - &aq;
        aq *= q;
    }
    acc
}

/// The terminating series with upper q^{-n}, ..., as an exact finite sum over k <= n.
pub fn phi_terminating(upper: &[Rat], lower: &[Rat], q: &Rat, z: &Rat, n: usize) -> Result<Rat, QError> {
    let mut total = Rat::zero();
    for k in 0..=n {
        let mut num = num_traits::pow(z.clone(), k);
        for a in upper {
            num *= poch_rat(a, q, k);
        }
        let mut den = poch_rat(q, q, k);
        for b in lower {
            den *= poch_rat(b, q, k);
        }
        if den.is_zero() {
            return Err(QError::Pole(k));
        }
        total += num / den;
    }
    Ok(total)
}

fn qneg(q: &Rat, n: usize) -> Rat {
    num_traits::pow(q.recip(), n)
}

/// Both sides of the Sears transformation at rational q, a, b, c, d, e.
pub fn sears_sides(n: usize, pt: &ParamPoint) -> Result<(Rat, Rat), QError> {
    let (q, a, b, c, d, e) = (pt.get("q"), pt.get("a"), pt.get("b"), pt.get("c"), pt.get("d"), pt.get("e"));
    let qn = qneg(q, n);
    let q1n = q * &qn;
    let nonzero = [q, a, b, c, d, e].iter().all(|v| !v.is_zero());
    if !nonzero {
        return Err(QError::Degenerate("zero parameter".into()));
    }
    let lhs = phi_terminating(&[qn.clone(), a.clone(), b.clone(), c.clone()], &[d.clone(), e.clone(), a * b * c * &q1n / (d * e)], q, q, n)?;
    let pre_num = poch_rat(&(e / a), q, n) * poch_rat(&(d * e / (b * c)), q, n);
    let pre_den = poch_rat(e, q, n) * poch_rat(&(d * e / (a * b * c)), q, n);
    if pre_den.is_zero() {
        return Err(QError::Degenerate("prefactor denominator vanishes".into()));
    }
    let rhs = phi_terminating(&[qn, a.clone(), d / b, d / c], &[d.clone(), a * &q1n / e, d * e / (b * c)], q, q, n)?;
    Ok((lhs, pre_num / pre_den * rhs))
}

pub fn verify_sears(n: usize, pt: &ParamPoint) -> Result<bool, QError> {
    let (l, r) = sears_sides(n, pt)?;
    Ok(l == r)
}

fn c(order: usize, x: &Rat) -> RatSeries {
    RatSeries::constant('r', order, x.clone())
}

/// Ratio of products of (x;q)_j over series parameters; all factors must be units.
fn poch_ratio(num: &[RatSeries], den: &[RatSeries], j: usize, order: usize) -> Result<RatSeries, QError> {
    let mut acc = RatSeries::one('r', order);
    for a in num {
        acc = &acc * &crate::series::poch(&a.truncate(order), j);
    }
    for b in den {
        acc = acc.checked_div(&crate::series::poch(&b.truncate(order), j))?;
    }
    Ok(acc)
}

fn q_series(work: usize) -> RatSeries {
    RatSeries::one_minus_var_pow('r', work, 1)
}

/// The two sides of the non-terminating 4phi3 transformation, with 1 - a supplied as a series.
pub fn tf43_sides(
    j: i64,
    one_minus_a: &RatSeries,
    [b, cc, d, e]: [&RatSeries; 4],
    order: usize,
) -> Result<(RatSeries, RatSeries), QError> {
    let w = work_order(order);
    let (b, cc, d, e) = (b.truncate(w), cc.truncate(w), d.truncate(w), e.truncate(w));
    let oma = one_minus_a.truncate(w);
    let q = q_series(w);
    let qj1 = RatSeries::one_minus_var_pow('r', w, j + 1);
    let de = &d * &e;
    let bc = &b * &cc;
    let low3 = (&(&qj1 * &oma) * &bc).checked_div(&de)?;
    let lhs = phi_series(&PhiSpec {
        upper: vec![Param::QPow(j), Param::Value(oma.clone()), Param::Value(b.clone()), Param::Value(cc.clone())],
        lower: vec![Param::Value(d.clone()), Param::Value(e.clone()), Param::Value(low3)],
        z: Param::QPow(1),
        order,
        ceiling: None,
    })?;
    let ju = j.max(0) as usize;
    let pre = poch_ratio(
        &[q.checked_div(&e)?, (&(&q * &oma) * &bc).checked_div(&de)?],
        &[(&q * &oma).checked_div(&e)?, (&q * &bc).checked_div(&de)?],
        ju,
        order,
    )?;
    let rhs = phi_series(&PhiSpec {
        upper: vec![
            Param::QPow(j),
            Param::Value(oma.clone()),
            Param::Value(d.checked_div(&b)?),
            Param::Value(d.checked_div(&cc)?),
        ],
        lower: vec![
            Param::Value(d.clone()),
            Param::Value(de.checked_div(&bc)?),
            Param::Value((&qj1 * &oma).checked_div(&e)?),
        ],
        z: Param::QPow(1),
        order,
        ceiling: None,
    })?;
    Ok((lhs, &pre * &rhs))
}

fn rational_bcde(pt: &ParamPoint, w: usize) -> [RatSeries; 4] {
    ["b", "c", "d", "e"].map(|k| c(w, pt.get(k)))
}

pub fn admissible_tf43(pt: &ParamPoint) -> bool {
    let (b, cc, d, e) = (pt.get("b"), pt.get("c"), pt.get("d"), pt.get("e"));
    [b, cc, d, e].iter().all(|v| !v.is_zero()) && !d.is_one() && !e.is_one() && b * cc != d * e
}

/// The 4phi3 transformation with a = alpha r, checked to order N.
pub fn verify_tf43(j: i64, pt: &ParamPoint, order: usize) -> Result<GfReport, QError> {
    if !admissible_tf43(pt) {
        return Err(QError::Degenerate("need d, e != 1 and bc != de".into()));
    }
    let w = work_order(order);
    let alpha = pt.get("alpha");
    let oma = RatSeries::from_coeffs('r', w, vec![Rat::one(), -alpha.clone()]);
    let (l, r) = tf43_sides(j, &oma, rational_bcde(pt, w).each_ref(), order)?;
    Ok(GfReport::compare(&format!("tf43 j={j}"), pt, &l, &r))
}

/// At 1 - a = (1-r)^{-n} the transformation is Sears with (q,a) -> (1-r,(1-r)^j);
/// checks that all four series agree.
pub fn verify_tf43_anchor(j: i64, n: usize, pt: &ParamPoint, order: usize) -> Result<bool, QError> {
    let w = work_order(order);
    let oma = RatSeries::one_minus_var_pow('r', w, -(n as i64));
    let [b, cc, d, e] = rational_bcde(pt, w);
    let (l, r) = tf43_sides(j, &oma, [&b, &cc, &d, &e], order)?;
    // Sears in r: upper q^{-n}, a, b, c; lower d, e, abc q^{1-n}/de
    let a = RatSeries::one_minus_var_pow('r', w, j);
    let q1n = RatSeries::one_minus_var_pow('r', w, 1 - n as i64);
    let de = &d * &e;
    let bc = &b * &cc;
    let s_lhs = phi_series(&PhiSpec {
        upper: vec![Param::QPow(-(n as i64)), Param::Value(a.clone()), Param::Value(b.clone()), Param::Value(cc.clone())],
        lower: vec![Param::Value(d.clone()), Param::Value(e.clone()), Param::Value((&(&a * &bc) * &q1n).checked_div(&de)?)],
        z: Param::QPow(1),
        order,
        ceiling: Some(n),
    })?;
    let pre = poch_ratio(&[e.checked_div(&a)?, de.checked_div(&bc)?], &[e.clone(), de.checked_div(&(&a * &bc))?], n, order)?;
    let s_rhs = &pre
        * &phi_series(&PhiSpec {
            upper: vec![
                Param::QPow(-(n as i64)),
                Param::Value(a.clone()),
                Param::Value(d.checked_div(&b)?),
                Param::Value(d.checked_div(&cc)?),
            ],
            lower: vec![Param::Value(d.clone()), Param::Value((&a * &q1n).checked_div(&e)?), Param::Value(de.checked_div(&bc)?)],
            z: Param::QPow(1),
            order,
            ceiling: Some(n),
        })?;
    Ok(l == r && l == s_lhs && s_lhs == s_rhs)
}

/// Sides of the 3phi2 transformation obtained at a -> 1.
pub fn tf32_sides(j: i64, b: &RatSeries, cc: &RatSeries, d: &RatSeries, e: &RatSeries, order: usize) -> Result<(RatSeries, RatSeries), QError> {
    let w = work_order(order);
    let (b, cc, d, e) = (b.truncate(w), cc.truncate(w), d.truncate(w), e.truncate(w));
    let q = q_series(w);
    let de = &d * &e;
    let bc = &b * &cc;
    let lhs = phi_series(&PhiSpec {
        upper: vec![Param::QPow(j), Param::Value(b.clone()), Param::Value(cc.clone())],
        lower: vec![Param::Value(d.clone()), Param::Value(e.clone())],
        z: Param::QPow(1),
        order,
        ceiling: None,
    })?;
    let pre = poch_ratio(&[q.checked_div(&e)?], &[(&q * &bc).checked_div(&de)?], j.max(0) as usize, order)?;
    let rhs = phi_series(&PhiSpec {
        upper: vec![Param::QPow(j), Param::Value(d.checked_div(&b)?), Param::Value(d.checked_div(&cc)?)],
        lower: vec![Param::Value(d.clone()), Param::Value(de.checked_div(&bc)?)],
        z: Param::QPow(1),
        order,
        ceiling: None,
    })?;
    Ok((lhs, &pre * &rhs))
}

pub fn admissible_cor32(pt: &ParamPoint) -> bool {
    let (c0, e0) = (pt.get("c"), pt.get("e"));
    !c0.is_zero() && !c0.is_one() && !e0.is_zero() && !e0.is_one()
}

/// b = 1 + beta r and d = c (1 + delta r), which makes both sides converge.
pub fn verify_cor32(j: i64, pt: &ParamPoint, order: usize) -> Result<GfReport, QError> {
    if !admissible_cor32(pt) {
        return Err(QError::Degenerate("need c, e not in {0, 1}".into()));
    }
    let w = work_order(order);
    let (beta, c0, delta, e0) = (pt.get("beta"), pt.get("c"), pt.get("delta"), pt.get("e"));
    let b = RatSeries::from_coeffs('r', w, vec![Rat::one(), beta.clone()]);
    let cc = c(w, c0);
    let d = RatSeries::from_coeffs('r', w, vec![c0.clone(), c0 * delta]);
    let e = c(w, e0);
    let (l, r) = tf32_sides(j, &b, &cc, &d, &e, order)?;
    Ok(GfReport::compare(&format!("tf32 j={j}"), pt, &l, &r))
}

/// Sides of the 3phi2 transformation obtained from c -> d/c, d -> 0.
pub fn tf2_32_sides(j: i64, oma: &RatSeries, b: &RatSeries, cc: &RatSeries, e: &RatSeries, order: usize) -> Result<(RatSeries, RatSeries), QError> {
    let w = work_order(order);
    let (oma, b, cc, e) = (oma.truncate(w), b.truncate(w), cc.truncate(w), e.truncate(w));
    let q = q_series(w);
    let qj1 = RatSeries::one_minus_var_pow('r', w, j + 1);
    let ce = &cc * &e;
    let lhs = phi_series(&PhiSpec {
        upper: vec![Param::QPow(j), Param::Value(oma.clone()), Param::Value(b.clone())],
        lower: vec![Param::Value(e.clone()), Param::Value((&(&qj1 * &oma) * &b).checked_div(&ce)?)],
        z: Param::QPow(1),
        order,
        ceiling: None,
    })?;
    let pre = poch_ratio(
        &[q.checked_div(&e)?, (&(&q * &oma) * &b).checked_div(&ce)?],
        &[(&q * &oma).checked_div(&e)?, (&q * &b).checked_div(&ce)?],
        j.max(0) as usize,
        order,
    )?;
    let rhs = phi_series(&PhiSpec {
        upper: vec![Param::QPow(j), Param::Value(oma.clone()), Param::Value(cc.clone())],
        lower: vec![Param::Value(ce.checked_div(&b)?), Param::Value((&qj1 * &oma).checked_div(&e)?)],
        z: Param::QPow(1),
        order,
        ceiling: None,
    })?;
    Ok((lhs, &pre * &rhs))
}

pub fn admissible_cor2_32(pt: &ParamPoint) -> bool {
    let (b, cc, e) = (pt.get("b"), pt.get("c"), pt.get("e"));
    !e.is_one() && !b.is_zero() && !cc.is_zero() && !e.is_zero() && b != &(cc * e)
}

/// a = alpha r; b, c, e rational.
pub fn verify_cor2_32(j: i64, pt: &ParamPoint, order: usize) -> Result<GfReport, QError> {
    if !admissible_cor2_32(pt) {
        return Err(QError::Degenerate("need e != 1 and b != ce".into()));
    }
    let w = work_order(order);
    let oma = RatSeries::from_coeffs('r', w, vec![Rat::one(), -pt.get("alpha").clone()]);
    let (l, r) = tf2_32_sides(j, &oma, &c(w, pt.get("b")), &c(w, pt.get("c")), &c(w, pt.get("e")), order)?;
    Ok(GfReport::compare(&format!("tf2_32 j={j}"), pt, &l, &r))
}

pub fn admissible_tff(pt: &ParamPoint) -> bool {
    let (x, u) = (pt.get("x"), pt.get("u"));
    !x.is_zero() && !u.is_zero() && !x.is_one() && !u.is_one() && !(x + u - x * u).is_zero()
}

fn lin(w: usize, c0: &Rat, c1: &Rat) -> RatSeries {
    RatSeries::from_coeffs('r', w, vec![c0.clone(), c1.clone()])
}

/// 1 - s r
fn one_minus(w: usize, s: &Rat) -> RatSeries {
    lin(w, &Rat::one(), &-s.clone())
}

/// The identity equivalent to the symmetry in (y, v), and its derivation from tf32 at j = 1.
/// Returns the displayed identity, then the two substitution checks.
pub fn verify_tff0(pt: &ParamPoint, order: usize) -> Result<Vec<GfReport>, QError> {
    if !admissible_tff(pt) {
        return Err(QError::Degenerate("need x, u not in {0, 1} and x + u - xu != 0".into()));
    }
    let w = work_order(order);
    let (x, y, u, v) = (pt.get("x"), pt.get("y"), pt.get("u"), pt.get("v"));
    let q = q_series(w);
    let yr = one_minus(w, y);
    let vr = one_minus(w, v);
    let k1 = u / (x * (u - Rat::one()));
    let k2 = u * (x - Rat::one()) / x;
    let b = &yr * &q;
    let cc = yr.scale(&k1);
    let d = (&(&vr * &yr) * &q).scale(&k1);
    let e = (&yr * &q).scale(&k2);
    let side = |s1: &RatSeries, s2: &RatSeries, l1: &RatSeries, l2: &RatSeries| {
        poch_sum(&PochSum {
            upper: vec![Param::Value(s1.clone()), Param::Value(s2.clone())],
            lower: vec![Param::Value(l1.clone()), Param::Value(l2.clone())],
            z: Param::QPow(1),
            sign_exp: 0,
            order,
            ceiling: None,
        })
    };
    let lhs = side(&b, &cc, &e, &d)?;
    let e_v = (&vr * &q).scale(&k2);
    let series_r = side(&(&vr * &q), &vr.scale(&k1), &e_v, &d)?;
    // 1 - x / (u (x-1) s)
    let inv = |s: &RatSeries| -> Result<RatSeries, QError> {
        let t = c(w, &(x / (u * (x - Rat::one())))).checked_div(s)?;
        Ok((&RatSeries::one('r', w) - &t).truncate(order))
    };
    let pre = inv(&yr)?.checked_div(&inv(&vr)?)?;
    let rhs = &pre * &series_r;
    let (cl, cr) = tf32_sides(1, &b, &cc, &d, &e, order)?;
    Ok(vec![
        GfReport::compare("tff0", pt, &lhs, &rhs),
        GfReport::compare("tff0 left = tf32 left", pt, &lhs, &cl),
        GfReport::compare("tff0 right = tf32 right", pt, &rhs, &cr),
    ])
}

/// Lower parameter on the right of the (x,y) <-> (u,z) identity: z(u-1)(1-zr)(1-r)/u as
/// printed, or x(u-1)(1-zr)(1-r)/u.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TffReading {
    Printed,
    Corrected,
}

/// The identity equivalent to G(t;x,y,u,z) = G(t;u,z,x,y), and its derivation from the
/// c -> d/c, d -> 0 transformation at j = 1.
pub fn verify_tff(pt: &ParamPoint, order: usize, reading: TffReading) -> Result<Vec<GfReport>, QError> {
    if !admissible_tff(pt) {
        return Err(QError::Degenerate("need x, u not in {0, 1} and x + u - xu != 0".into()));
    }
    let w = work_order(order);
    let (x, y, u, z) = (pt.get("x"), pt.get("y"), pt.get("u"), pt.get("z"));
    let one = Rat::one();
    let q = q_series(w);
    let yr = one_minus(w, y);
    let zr = one_minus(w, z);
    let zy = &zr * &yr;
    let bb = yr.scale(&(u / (x * (u - &one))));
    let cc = zr.scale(&(x / (u * (x - &one))));
    let e_left = (&yr * &q).scale(&(u * (x - &one) / x));
    let low_right = match reading {
        TffReading::Printed => (&zr * &q).scale(&(z * (u - &one) / u)),
        TffReading::Corrected => (&zr * &q).scale(&(x * (u - &one) / u)),
    };
    let side = |s: &RatSeries, l: &RatSeries| -> Result<RatSeries, QError> {
        // sum_k (zy;q)_k (1 - s) / ((l;q)_k (1 - s q^k)) q^k = sum (zy, s;q)_k/(l, sq;q)_k q^k
        poch_sum(&PochSum {
            upper: vec![Param::Value(zy.clone()), Param::Value(s.clone())],
            lower: vec![Param::Value(l.clone()), Param::Value(s * &q)],
            z: Param::QPow(1),
            sign_exp: 0,
            order,
            ceiling: None,
        })
    };
    let lhs = side(&bb, &e_left)?;
    let onew = RatSeries::one('r', w);
    let f1 = &onew - &bb;
    let f2 = &onew - &c(w, &(x / (u * (x - &one)))).checked_div(&yr)?;
    let f3 = &onew - &cc;
    let f4 = &onew - &c(w, &(u / (x * (u - &one)))).checked_div(&zr)?;
    let pre = (&f1 * &f2).truncate(order).checked_div(&(&f3 * &f4).truncate(order))?;
    let rhs = &pre * &side(&cc, &low_right)?;
    // a = r(z + y - zyr), so 1 - a = (1 - zr)(1 - yr); this e swaps the two lower
    // parameters on the left relative to the displayed sum
    let e_sub = (&yr * &q).scale(&(u / (x * (u - &one))));
    let (cl, cr) = tf2_32_sides(1, &zy, &bb, &cc, &e_sub, order)?;
    Ok(vec![
        GfReport::compare("tff", pt, &lhs, &rhs),
        GfReport::compare("tff left = tf2_32 left", pt, &lhs, &cl),
        GfReport::compare("tff right = tf2_32 right", pt, &rhs, &cr),
    ])
}

fn gf(e: crate::genfun::GfError) -> QError {
    QError::Degenerate(e.to_string())
}

/// Both proof identities, followed by the series symmetries they are equivalent to, at the
/// same point: G~(t;x,y,u,v) = G~(t;x,v,u,y) for tff0 and G(t;x,y,u,z) = G(t;u,z,x,y) for tff.
pub fn verify_tff_identities(pt: &ParamPoint, order: usize) -> Result<Vec<GfReport>, QError> {
    use crate::genfun::{eval_g_quadruple, eval_g_tilde};
    let mut out = verify_tff0(pt, order)?;
    out.extend(verify_tff(pt, order, TffReading::Corrected)?);
    let swapped2 = pt.clone().with("y", pt.get("v").clone()).with("v", pt.get("y").clone());
    let (l, r) = (eval_g_tilde(pt, order).map_err(gf)?, eval_g_tilde(&swapped2, order).map_err(gf)?);
    out.push(GfReport::compare("tilde (y,v) symmetry", pt, &l, &r));
    let swapped1 = pt
        .clone()
        .with("x", pt.get("u").clone())
        .with("u", pt.get("x").clone())
        .with("y", pt.get("z").clone())
        .with("z", pt.get("y").clone());
    let (l, r) = (eval_g_quadruple(pt, order).map_err(gf)?, eval_g_quadruple(&swapped1, order).map_err(gf)?);
    out.push(GfReport::compare("quadruple (x,y)<->(u,z) symmetry", pt, &l, &r));
    Ok(out)
}
