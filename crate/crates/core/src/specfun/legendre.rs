use super::hyper::hyp2f1_regularized;
use crate::cx::{self, Complex, ONE, ZERO};
use crate::error::{Error, Result};

/// Legendre function of degree nu and order mu,
/// P = ((1+x)/(1-x))^{mu/2} 2F1~(-nu, nu+1; 1-mu; (1-x)/2), principal power.
///
/// On -1 < x < 1 this is the Ferrers function; elsewhere the power takes the
/// principal branch of the ratio. Needs |1 - x| < 2.
pub fn legendre_p(nu: Complex, mu: Complex, x: Complex) -> Result<Complex> {
    const F: &str = "legendre_p";
    if x == ONE {
        if mu == ZERO {
            return Ok(ONE);
        }
        if mu.re < 0.0 {
            return Ok(ZERO);
        }
        return Err(Error::BranchPoint {
            function: F,
            at: "x = 1".into(),
        });
    }
    if x == -ONE {
        return Err(Error::BranchPoint {
            function: F,
            at: "x = -1".into(),
        });
    }
    let w = (ONE - x) * 0.5;
    if w.norm() >= 1.0 {
        return Err(Error::domain(
            F,
            format!("|1 - x|/2 = {} outside the series disc", w.norm()),
        ));
    }
    let ratio = (ONE + x) / (ONE - x);
    Ok(cx::pow(ratio, mu * 0.5) * hyp2f1_regularized(-nu, nu + 1.0, ONE - mu, w)?)
}

/// Legendre polynomial P_n(x) by the three-term recurrence.
pub fn legendre_polynomial(n: usize, x: Complex) -> Complex {
    if n == 0 {
        return ONE;
    }
    let (mut p0, mut p1) = (ONE, x);
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cx::c;
    use crate::specfun::gamma::pochhammer;

    #[test]
    fn degree_one_order_zero() {
        for x in [c(0.3), c(-0.7), Complex::new(0.2, 0.4)] {
            let v = legendre_p(ONE, ZERO, x).unwrap();
            assert!((v - x).norm() < 1e-14);
        }
    }

    #[test]
    fn unit_argument_negative_order() {
        for n in 1..5 {
            let m = c(-(n as f64));
            assert_eq!(legendre_p(m, m, ONE).unwrap(), ZERO);
        }
        assert!(legendre_p(c(0.5), c(0.5), ONE).is_err());
    }

    #[test]
    fn order_n_minus_one_closed_form() {
        let t = c(0.3);
        for n in 1..=4usize {
            let v = legendre_p(c(n as f64), c(n as f64 - 1.0), t).unwrap();
            let want = -cx::powf(c(-2.0), n as f64)
                * pochhammer(c(0.5), n)
                * t
                * cx::powf(ONE - t * t, (n as f64 - 1.0) / 2.0);
            assert!(cx::rel_err(v, want) < 1e-13, "n={n}");
        }
    }

    #[test]
    fn associated_legendre_reference() {
        // Ferrers P_2^1(x) = -3 x sqrt(1 - x^2)
        let x = 0.4f64;
        let v = legendre_p(c(2.0), ONE, c(x)).unwrap();
        assert!((v.re + 3.0 * x * (1.0 - x * x).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn polynomials() {
        assert_eq!(legendre_polynomial(0, c(0.7)), ONE);
        assert_eq!(legendre_polynomial(1, c(0.7)), c(0.7));
        assert!((legendre_polynomial(3, c(0.5)).re + 0.4375).abs() < 1e-15);
    }
}
