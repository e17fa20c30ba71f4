//! Classical orthogonal polynomials with exact coefficients, built from their
//! three-term recurrences.

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::{ExactPoly, ExactRational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hermite,
    Laguerre,
    Jacobi,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Hermite => "hermite",
            Family::Laguerre => "laguerre",
            Family::Jacobi => "jacobi",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hermite" => Ok(Family::Hermite),
            "laguerre" => Ok(Family::Laguerre),
            "jacobi" => Ok(Family::Jacobi),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

fn lin(c0: ExactRational, c1: ExactRational) -> ExactPoly {
    Poly::new(vec![c0, c1])
}

/// Physicists' Hermite polynomial `H_n`, `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite(n: usize) -> ExactPoly {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let two_x = lin(int(0), int(2));
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre `L_n^{(α)}`.
pub fn laguerre(n: usize, alpha: &ExactRational) -> Result<ExactPoly> {
    if *alpha <= -ExactRational::one() {
        return Err(Error::ParameterOutOfRange(format!(
            "Laguerre alpha = {alpha} must exceed -1"
        )));
    }
    let mut prev = Poly::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = lin(ExactRational::one() + alpha, -ExactRational::one());
    for k in 1..n {
        let kq = int(k as i64);
        // (k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}
        let a = lin(int(2 * k as i64 + 1) + alpha, -ExactRational::one());
        let next = &(&a * &cur) - &prev.scale(&(kq.clone() + alpha));
        prev = cur;
        cur = next.scale(&(ExactRational::one() / (kq + ExactRational::one())));
    }
    Ok(cur)
}

/// Jacobi `P_n^{(α,β)}`.
pub fn jacobi(n: usize, alpha: &ExactRational, beta: &ExactRational) -> Result<ExactPoly> {
    let minus_one = -ExactRational::one();
    if *alpha <= minus_one || *beta <= minus_one {
        return Err(Error::ParameterOutOfRange(format!(
            "Jacobi alpha = {alpha}, beta = {beta} must both exceed -1"
        )));
    }
    let mut prev = Poly::one();
    if n == 0 {
        return Ok(prev);
    }
    let half = ExactRational::new(1.into(), 2.into());
    let ab = alpha + beta;
    // P_1 = (α+1) + (α+β+2)(x-1)/2
    let mut cur = lin((alpha - beta) * half.clone(), (ab.clone() + int(2)) * half);
    for k in 2..=n {
        let kq = int(k as i64);
        let s = int(2 * k as i64) + ab.clone();
        let lead = int(2) * kq.clone() * (kq.clone() + ab.clone()) * (s.clone() - int(2));
        let a = lin(
            (s.clone() - int(1)) * (alpha * alpha - beta * beta),
            (s.clone() - int(1)) * s.clone() * (s.clone() - int(2)),
        );
        let c = int(2) * (kq.clone() + alpha - int(1)) * (kq + beta - int(1)) * s;
        let next = &(&a * &cur) - &prev.scale(&c);
        prev = cur;
        cur = next.scale(&(ExactRational::one() / lead));
    }
    Ok(cur)
}

/// Classical polynomial of the given family. `alpha` is ignored for Hermite and
/// `beta` is only used by Jacobi.
pub fn classical_poly(family: Family, n: usize, alpha: &ExactRational, beta: &ExactRational) -> Result<ExactPoly> {
    match family {
        Family::Hermite => Ok(hermite(n)),
        Family::Laguerre => laguerre(n, alpha),
        Family::Jacobi => jacobi(n, alpha, beta),
    }
}

/// Parses `"3"`, `"-1/2"`, `"0.5"` or `"1.25e-1"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(ExactRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let mut v = ExactRational::from_integer(digits.parse().map_err(|_| bad())?);
    let scale = exp - fp.len() as i32;
    let ten = ExactRational::from_integer(BigInt::from(10));
    let p = num_traits::pow(ten, scale.unsigned_abs() as usize);
    v = if scale >= 0 { v * p } else { v / p };
    Ok(if neg && v.is_positive() { -v } else { v })
}
