//! Exact polynomial algebra: classical families, Wronskians, double partitions
//! and exceptional Hermite polynomials.

mod classical;
mod ode;
mod partition;
mod poly;
mod ratfunc;
mod wronskian;

pub use classical::{classical_poly, hermite, jacobi, laguerre, parse_rational, Family};
pub use ode::{fit_ode_constant, hermite_ode_residual};
pub use partition::Partition;
pub use poly::Poly;
pub use ratfunc::{NumericRational, RationalFunction};
pub use wronskian::{bareiss_determinant, eta_hermite, exceptional_hermite, wronskian};

use crate::error::{Error, Result};
use crate::{ExactPoly, ExactRational};

/// Monic exact gcd. `exact_gcd(0, p)` is `p` made monic.
pub fn exact_gcd(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
    a.gcd(b)
}

/// Renders an exact rational as `"num/den"` (denominator always present).
pub fn rational_to_string(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// JSON form of an exact polynomial: decimal `"num/den"` strings, lowest degree first.
pub fn poly_to_strings(p: &ExactPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

pub fn poly_from_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<ExactPoly> {
    coeffs
        .iter()
        .map(|s| parse_rational(s.as_ref()))
        .collect::<Result<Vec<_>>>()
        .map(Poly::new)
        .map_err(|e| Error::InvalidArgument(format!("bad polynomial coefficient: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        let a = poly_from_strings(&["-1", "0", "1"]).unwrap();
        let b = poly_from_strings(&["-1", "1"]).unwrap();
        assert_eq!(exact_gcd(&a, &b), b);
        let h8 = hermite(8);
        assert_eq!(exact_gcd(&h8, &h8.derivative(1)).degree(), Some(0));
        let p = poly_from_strings(&["4", "0", "8"]).unwrap();
        assert_eq!(
            exact_gcd(&Poly::zero(), &p),
            poly_from_strings(&["1/2", "0", "1"]).unwrap()
        );
    }

    #[test]
    fn json_strings() {
        let p = poly_from_strings(&["1/2", "-3", "0", "7/4"]).unwrap();
        assert_eq!(poly_to_strings(&p), vec!["1/2", "-3/1", "0/1", "7/4"]);
    }

    proptest! {
        #[test]
        fn strings_round_trip(c in prop::collection::vec((-50i64..50, 1i64..9), 0..6)) {
            let p = Poly::new(c.iter().map(|&(n, d)| ExactRational::new(n.into(), d.into())).collect());
            prop_assert_eq!(poly_from_strings(&poly_to_strings(&p)).unwrap(), p);
        }
    }
}
