use crate::energy::WeightEval;
use crate::error::{Error, Result};
use crate::roots::ZeroSet;
use crate::scalar::{ComplexExt, Real};
use num_complex::Complex;
use num_traits::{One, Zero};

fn inv<R: Real>(z: Complex<R>) -> Complex<R> {
    Complex::<R>::one() / z
}

/// For the real zero `x_i` (0-based among real zeros): `|L - R|` with
/// `L = Σ_t 1/((x_i - x_t) + iμ_t)` and `R = Σ_t 1/((x_i - x_t) - iμ_t)`
/// over every non-real zero `x_t + iμ_t`.
pub fn conjugate_identity_real<R: Real>(zs: &ZeroSet<R>, i: usize) -> Result<R> {
    let xi = zs
        .real
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("real-zero index {i} out of range")))?;
    let mut lhs: Complex<R> = Complex::zero();
    let mut rhs: Complex<R> = Complex::zero();
    for z in zs.complex_zeros() {
        let d = xi.clone() - z.re.clone();
        lhs = lhs + inv(Complex::new(d.clone(), z.im.clone()));
        rhs = rhs + inv(Complex::new(d, -z.im.clone()));
    }
    Ok((lhs - rhs).modulus())
}

/// `|Σ_t μ_t/((x_i - x_t)² + μ_t²)|` for the real zero `x_i`; the real-index
/// stationarity consequence.
pub fn real_index_mu_sum<R: Real>(zs: &ZeroSet<R>, i: usize) -> Result<R> {
    let xi = zs
        .real
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("real-zero index {i} out of range")))?;
    let mut acc = R::zero();
    for z in zs.complex_zeros() {
        let d = xi.clone() - z.re.clone();
        acc = acc + z.im.clone() / (d.clone() * d + z.im.clone() * z.im.clone());
    }
    Ok(acc.abs())
}

/// Residuals of the complex-index identity at the zero with expanded index `i`.
#[derive(Clone, Debug)]
pub struct ComplexIdentityResidual<R> {
    /// `|LHS - RHS|`, the two sides evaluated independently at `z_i` and `z̄_i`.
    pub equality: R,
    /// `|LHS|`.
    pub zero: R,
}

/// `LHS = (log ω)'(z_i) + Σ_{k≠i} 2/(z_i - z_k)`, `RHS` the same expression
/// with every imaginary part negated.
pub fn conjugate_identity_complex<R: Real>(
    zs: &ZeroSet<R>,
    w: &WeightEval<R>,
    i: usize,
) -> Result<ComplexIdentityResidual<R>> {
    let all = zs.expanded();
    if i < zs.n_real() || i >= all.len() {
        return Err(Error::InvalidArgument(format!("index {i} is not a complex zero")));
    }
    let two = R::from_i64(2);
    let side = |flip: bool| -> Result<Complex<R>> {
        let c = |z: &Complex<R>| if flip { z.conj() } else { z.clone() };
        let zi = c(&all[i]);
        let mut acc = w.dlog(&zi)?;
        for (k, zk) in all.iter().enumerate() {
            if k != i {
                acc = acc + inv(zi.clone() - c(zk)).scale_by(&two);
            }
        }
        Ok(acc)
    };
    let lhs = side(false)?;
    let rhs = side(true)?;
    Ok(ComplexIdentityResidual {
        equality: (lhs.clone() - rhs).modulus(),
        zero: lhs.modulus(),
    })
}
