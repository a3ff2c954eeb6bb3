//! Truncated power series over exact rationals in a single variable (t or r).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series mismatch: {0}")]
    Mismatch(String),
    #[error("constant term is zero, series is not invertible")]
    NotInvertible,
    #[error("series is not divisible by {var}^{k}")]
    NotDivisible { var: char, k: usize },
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "p/q" or "p".
pub fn parse_rat(text: &str) -> Result<Rat, SeriesError> {
    let bad = || SeriesError::Parse(text.to_string());
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

/// "p/q", or "p" for integers.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// c_0 + c_1 v + ... + c_N v^N, everything past N discarded.
#[derive(Clone, PartialEq, Eq)]
pub struct RatSeries {
    var: char,
    coeffs: Vec<Rat>,
}

impl fmt::Debug for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{}", fmt_rat(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", fmt_rat(&a))?;
                    }
                    if k == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{k}", self.var)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

impl RatSeries {
    pub fn zero(var: char, order: usize) -> Self {
        RatSeries { var, coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn constant(var: char, order: usize, c: Rat) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(var: char, order: usize) -> Self {
        Self::constant(var, order, Rat::one())
    }

    /// c * var^k.
    pub fn monomial(var: char, order: usize, c: Rat, k: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Coefficients past `order` are dropped, missing ones are zero.
    pub fn from_coeffs(var: char, order: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        RatSeries { var, coeffs }
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first non-zero coefficient, None for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot raise the order");
        RatSeries { var: self.var, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.var != other.var {
            return Err(SeriesError::Mismatch(format!("variables {} and {}", self.var, other.var)));
        }
        if self.order() != other.order() {
            return Err(SeriesError::Mismatch(format!("orders {} and {}", self.order(), other.order())));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(RatSeries { var: self.var, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(RatSeries { var: self.var, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(RatSeries { var: self.var, coeffs: out })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatSeries { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add_const(&self, c: &Rat) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += c;
        s
    }

    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(RatSeries { var: self.var, coeffs: out })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_mul(&other.invert()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var, self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by var^k, keeping the order.
    pub fn shift_mul(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        RatSeries { var: self.var, coeffs }
    }

    /// Divides by var^k; the low k coefficients must vanish and the order drops by k.
    pub fn shift_div(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { var: self.var, k });
        }
        Ok(RatSeries { var: self.var, coeffs: self.coeffs[k..].to_vec() })
    }

    /// Substitutes var := c * var.
    pub fn rescale_var(&self, c: &Rat) -> Self {
        let mut p = Rat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &p);
            p *= c;
        }
        RatSeries { var: self.var, coeffs }
    }

    /// (1 - var)^e for any integer e, via the binomial series.
    pub fn one_minus_var_pow(var: char, order: usize, e: i64) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rat::one();
        let e = int(e);
        for k in 0..=order {
            coeffs.push(c.clone());
            // binom(e, k+1) (-1)^{k+1} from binom(e, k) (-1)^k
            c = -c * (&e - int(k as i64)) / int(k as i64 + 1);
        }
        RatSeries { var, coeffs }
    }

    /// Evaluates a polynomial truncation at a rational value of the variable.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }
}

/// (a; q)_k with q = 1 - r, as a truncated series in the variable of `a`.
pub fn poch(a: &RatSeries, k: usize) -> RatSeries {
    let q = RatSeries::one_minus_var_pow(a.var(), a.order(), 1);
    let mut acc = RatSeries::one(a.var(), a.order());
    let mut aq = a.clone();
    for _ in 0..k {
        acc = &acc * &(-&aq).add_const(&Rat::one());
        aq = &aq * &q;
    }
    acc
}

impl Add for &RatSeries {
    type Output = RatSeries;
    /// Panics on mismatched variable or order.
    fn add(self, rhs: &RatSeries) -> RatSeries {
        self.checked_add(rhs).expect("series add")
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        self.checked_sub(rhs).expect("series sub")
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        self.checked_mul(rhs).expect("series mul")
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        RatSeries { var: self.var, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Add for RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: RatSeries) -> RatSeries {
        &self + &rhs
    }
}

impl Sub for RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: RatSeries) -> RatSeries {
        &self - &rhs
    }
}

impl Mul for RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: RatSeries) -> RatSeries {
        &self * &rhs
    }
}

impl Neg for RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        -&self
    }
}

/// Named rational parameter values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamPoint(BTreeMap<String, Rat>);

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<&str, String> = self.0.iter().map(|(k, v)| (k.as_str(), fmt_rat(v))).collect();
        m.serialize(ser)
    }
}

impl ParamPoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: Rat) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: Rat) {
        self.0.insert(name.to_string(), value);
    }

    /// Panics when the parameter is absent.
    pub fn get(&self, name: &str) -> &Rat {
        self.0.get(name).unwrap_or_else(|| panic!("parameter {name} missing from point"))
    }

    pub fn try_get(&self, name: &str) -> Option<&Rat> {
        self.0.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    /// Draws each name as p/q with |p| <= 7, 1 <= q <= 7, skipping 0 and 1, until `ok` accepts.
    pub fn sample<R: Rng, F: Fn(&ParamPoint) -> bool>(rng: &mut R, names: &[&str], ok: F) -> ParamPoint {
        loop {
            let mut pt = ParamPoint::new();
            for &name in names {
                pt.set(name, sample_rat(rng));
            }
            if ok(&pt) {
                return pt;
            }
        }
    }
}

pub fn sample_rat<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let v = rat(rng.gen_range(-7..=7), rng.gen_range(1..=7));
        if !v.is_zero() && !v.is_one() {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let one_plus = RatSeries::from_coeffs('r', 3, vec![int(1), int(1)]);
        let one_minus = RatSeries::one_minus_var_pow('r', 3, 1);
        assert_eq!(&one_plus * &one_minus, RatSeries::from_coeffs('r', 3, vec![int(1), int(0), int(-1)]));
        let geo = one_minus.invert().unwrap();
        assert!(geo.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(fmt_rat(&rat(4, 2)), "2");
    }
}
