use super::aberth::{find_roots, RootOptions};
use crate::error::{Error, Result};
use crate::polycore::exact_gcd;
use crate::scalar::{ComplexExt, Real};
use crate::ExactPoly;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Default relative threshold below which a root's imaginary part is dropped.
pub const DEFAULT_TAU_REAL: f64 = 1e-12;

/// One conjugate pair `x ± iμ` with `μ > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugatePair<R> {
    pub x: R,
    pub mu: R,
}

/// Zeros of a real polynomial split into real zeros and conjugate pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSet<R> {
    /// Sorted ascending.
    pub real: Vec<R>,
    /// Sorted by `x`, then `μ`.
    pub pairs: Vec<ConjugatePair<R>>,
    pub degree: usize,
    /// `|p(z)|` per zero in [`expanded`](Self::expanded) order; empty if unknown.
    pub residuals: Vec<R>,
}

impl<R: Real> ZeroSet<R> {
    pub fn n_real(&self) -> usize {
        self.real.len()
    }

    /// Number of non-real zeros counted individually.
    pub fn n_complex(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Flat list: real zeros ascending, then `x + iμ, x − iμ` per pair.
    pub fn expanded(&self) -> Vec<Complex<R>> {
        let mut out: Vec<Complex<R>> = self.real.iter().cloned().map(Complex::from_real).collect();
        for p in &self.pairs {
            out.push(Complex::new(p.x.clone(), p.mu.clone()));
            out.push(Complex::new(p.x.clone(), -p.mu.clone()));
        }
        out
    }

    /// The non-real zeros alone, in expanded order.
    pub fn complex_zeros(&self) -> Vec<Complex<R>> {
        self.expanded().split_off(self.real.len())
    }

    pub fn max_residual(&self) -> Option<R> {
        self.residuals.iter().cloned().reduce(R::max_of)
    }
}

/// Splits `roots` into real zeros and conjugate pairs.
///
/// A root is real when `|Im z| ≤ τ·max(1, |z|)`. Each remaining root in the
/// upper half plane is matched to the nearest unused root in the lower half
/// plane; the match must agree with its conjugate to the same tolerance.
pub fn classify_zeros<R: Real>(roots: &[Complex<R>], tau_real: &R) -> Result<ZeroSet<R>> {
    let tol = |z: &Complex<R>| tau_real.clone() * z.modulus().max_of(R::one());
    let mut real = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (i, z) in roots.iter().enumerate() {
        if z.im.abs() <= tol(z) {
            real.push(z.re.clone());
        } else if z.im > R::zero() {
            upper.push((i, z.clone()));
        } else {
            lower.push((i, z.clone()));
        }
    }
    let mut used = vec![false; lower.len()];
    let mut pairs = Vec::with_capacity(upper.len());
    for (i, u) in &upper {
        let best = lower
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, (_, l))| (k, (u.clone() - l.conj()).modulus()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite distances"));
        match best {
            Some((k, d)) if d <= tol(u) => {
                used[k] = true;
                let l = &lower[k].1;
                let two = R::from_i64(2);
                pairs.push(ConjugatePair {
                    x: (u.re.clone() + l.re.clone()) / two.clone(),
                    mu: (u.im.clone() - l.im.clone()) / two,
                });
            }
            _ => return Err(Error::UnpairedRoot { index: *i }),
        }
    }
    if let Some(k) = used.iter().position(|u| !u) {
        return Err(Error::UnpairedRoot { index: lower[k].0 });
    }
    real.sort_by(|a, b| a.partial_cmp(b).expect("finite zeros"));
    pairs.sort_by(|a, b| (&a.x, &a.mu).partial_cmp(&(&b.x, &b.mu)).expect("finite zeros"));
    Ok(ZeroSet {
        real,
        pairs,
        degree: roots.len(),
        residuals: Vec::new(),
    })
}

/// True iff `gcd(p, p')` is constant.
pub fn check_simplicity(p: &ExactPoly) -> bool {
    if p.is_zero() {
        return false;
    }
    exact_gcd(p, &p.derivative(1)).degree() == Some(0)
}

/// Roots of `p` classified into a [`ZeroSet`], with residuals attached.
/// Polynomials with a repeated zero are rejected.
pub fn zero_set<R: Real>(p: &ExactPoly, opts: &RootOptions<R>, tau_real: &R) -> Result<ZeroSet<R>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !check_simplicity(p) {
        return Err(Error::InvalidArgument("polynomial has a repeated zero".into()));
    }
    let rs = find_roots(p, opts)?;
    let mut zs = classify_zeros(&rs.roots, tau_real)?;
    let full = p.map(R::from_rational);
    zs.residuals = zs.expanded().iter().map(|z| full.eval_complex(z).modulus()).collect();
    Ok(zs)
}

/// `zero_set` with default options and τ.
pub fn zero_set_default<R: Real>(p: &ExactPoly) -> Result<ZeroSet<R>> {
    zero_set(p, &RootOptions::default(), &R::from_f64(DEFAULT_TAU_REAL))
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    x: String,
    mu: String,
}

#[derive(Serialize, Deserialize)]
struct ZeroSetJson {
    real: Vec<String>,
    pairs: Vec<PairJson>,
    degree: usize,
    residuals: Vec<String>,
}

impl<R: Real> Serialize for ZeroSet<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ZeroSetJson {
            real: self.real.iter().map(R::to_decimal_string).collect(),
            pairs: self
                .pairs
                .iter()
                .map(|p| PairJson {
                    x: p.x.to_decimal_string(),
                    mu: p.mu.to_decimal_string(),
                })
                .collect(),
            degree: self.degree,
            residuals: self.residuals.iter().map(R::to_decimal_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de, R: Real> Deserialize<'de> for ZeroSet<R> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let js = ZeroSetJson::deserialize(d)?;
        let num = |s: &str| R::from_str_radix(s, 10).map_err(|_| D::Error::custom(format!("bad number {s:?}")));
        let real = js
            .real
            .iter()
            .map(|s| num(s))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let pairs = js
            .pairs
            .iter()
            .map(|p| {
                Ok(ConjugatePair {
                    x: num(&p.x)?,
                    mu: num(&p.mu)?,
                })
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let residuals = js
            .residuals
            .iter()
            .map(|s| num(s))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if real.len() + 2 * pairs.len() != js.degree {
            return Err(D::Error::custom("zero count does not match degree"));
        }
        Ok(ZeroSet {
            real,
            pairs,
            degree: js.degree,
            residuals,
        })
    }
}
