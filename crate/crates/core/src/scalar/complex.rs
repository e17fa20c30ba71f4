use super::Real;
use num_complex::Complex;

/// Operations on `Complex<R>` that num-complex only provides for `Float` parts.
pub trait ComplexExt<R: Real> {
    fn modulus(&self) -> R;
    /// Principal branch logarithm.
    fn ln_principal(&self) -> Complex<R>;
    fn from_real(x: R) -> Complex<R>;
    fn scale_by(&self, s: &R) -> Complex<R>;
    fn is_finite_c(&self) -> bool;
}

impl<R: Real> ComplexExt<R> for Complex<R> {
    fn modulus(&self) -> R {
        self.re.hypot(&self.im)
    }

    fn ln_principal(&self) -> Complex<R> {
        Complex::new(self.modulus().ln(), self.im.atan2(&self.re))
    }

    fn from_real(x: R) -> Complex<R> {
        Complex::new(x, R::zero())
    }

    fn scale_by(&self, s: &R) -> Complex<R> {
        Complex::new(self.re.clone() * s.clone(), self.im.clone() * s.clone())
    }

    fn is_finite_c(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}
