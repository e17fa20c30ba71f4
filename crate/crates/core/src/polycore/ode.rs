use crate::error::{Error, Result};
use crate::{ExactPoly, ExactRational};
use num_traits::Zero;

use super::poly::Poly;

/// Residual `η y'' - 2(xη + η') y' + (η'' + 2xη' + Cη) y` for a given `C`.
pub fn hermite_ode_residual(y: &ExactPoly, eta: &ExactPoly, c: &ExactRational) -> ExactPoly {
    let x: ExactPoly = Poly::x();
    let two = ExactRational::from_integer(2.into());
    let d1 = eta.derivative(1);
    let d2 = eta.derivative(2);
    let first = &(&x * eta) + &d1;
    let zeroth = &(&d2 + &(&x * &d1).scale(&two)) + &eta.scale(c);
    let t2 = eta * &y.derivative(2);
    let t1 = (&first * &y.derivative(1)).scale(&two);
    &(&t2 - &t1) + &(&zeroth * y)
}

/// Recovers the scalar `C` for which `y` solves
/// `y'' - 2(x + η'/η) y' + (η''/η + 2xη'/η + C) y = 0` (multiplied through by η),
/// and checks that the whole residual vanishes identically.
pub fn fit_ode_constant(y: &ExactPoly, eta: &ExactPoly) -> Result<ExactRational> {
    if y.is_zero() {
        return Err(Error::NoOdeConstant("y is the zero polynomial".into()));
    }
    if eta.is_zero() {
        return Err(Error::NoOdeConstant("η is the zero polynomial".into()));
    }
    // The residual is A + C·ηy; solve from the top coefficient of ηy.
    let base = hermite_ode_residual(y, eta, &ExactRational::zero());
    let eta_y = eta * y;
    let top = eta_y.degree().expect("nonzero product");
    let c = -base.coeff(top) / eta_y.coeff(top);
    let residual = &base + &eta_y.scale(&c);
    if residual.is_zero() {
        Ok(c)
    } else {
        Err(Error::NoOdeConstant(format!(
            "residual of degree {:?} remains after fitting C = {c}",
            residual.degree()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{eta_hermite, exceptional_hermite, hermite, Partition};
    use num_bigint::BigInt;
    use num_traits::One;

    fn int(v: i64) -> ExactRational {
        ExactRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn classical_hermite_eigenvalue() {
        for n in 0..15 {
            assert_eq!(fit_ode_constant(&hermite(n), &Poly::one()).unwrap(), int(2 * n as i64));
        }
    }

    #[test]
    fn constant_solution() {
        assert_eq!(fit_ode_constant(&Poly::constant(int(5)), &Poly::one()).unwrap(), int(0));
    }

    #[test]
    fn exceptional_examples_have_zero_residual() {
        for (lam, n) in [
            (vec![1, 1, 1, 1], 8),
            (vec![1, 1, 3, 3], 8),
            (vec![2, 2, 3, 3], 10),
            (vec![1, 1], 6),
        ] {
            let lam = Partition::new(lam).unwrap();
            let y = exceptional_hermite(&lam, n).unwrap();
            let eta = eta_hermite(&lam).unwrap();
            let c = fit_ode_constant(&y, &eta).unwrap();
            assert!(hermite_ode_residual(&y, &eta, &c).is_zero());
            // any other constant leaves a residual
            assert!(!hermite_ode_residual(&y, &eta, &(c + ExactRational::one())).is_zero());
        }
    }

    #[test]
    fn rejects_non_solutions() {
        let y = &hermite(3) + &hermite(1);
        assert!(matches!(
            fit_ode_constant(&y, &Poly::one()),
            Err(Error::NoOdeConstant(_))
        ));
        assert!(fit_ode_constant(&Poly::zero(), &Poly::one()).is_err());
    }
}
