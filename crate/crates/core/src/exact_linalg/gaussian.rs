use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{render_rational, ExactScalar, Field};

/// Gaussian rational `re + im·i` with `re, im ∈ ℚ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianScalar {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl GaussianScalar {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        Self { re, im }
    }

    pub fn real(re: ExactScalar) -> Self {
        Self {
            re,
            im: ExactScalar::zero(),
        }
    }

    pub fn imag(im: ExactScalar) -> Self {
        Self {
            re: ExactScalar::zero(),
            im,
        }
    }

    pub fn i() -> Self {
        Self::imag(ExactScalar::one())
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> ExactScalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", render_rational(&self.re)),
            (true, false) => write!(f, "{}i", render_rational(&self.im)),
            (false, false) => {
                let sign = if self.im < ExactScalar::zero() {
                    "-"
                } else {
                    "+"
                };
                let mag = if self.im < ExactScalar::zero() {
                    -self.im.clone()
                } else {
                    self.im.clone()
                };
                write!(
                    f,
                    "{}{}{}i",
                    render_rational(&self.re),
                    sign,
                    render_rational(&mag)
                )
            }
        }
    }
}

impl<'a> Add<&'a GaussianScalar> for GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, o: &'a GaussianScalar) -> GaussianScalar {
        GaussianScalar {
            re: self.re + &o.re,
            im: self.im + &o.im,
        }
    }
}

impl Add for GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, o: GaussianScalar) -> GaussianScalar {
        self + &o
    }
}

impl<'a> Sub<&'a GaussianScalar> for GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, o: &'a GaussianScalar) -> GaussianScalar {
        GaussianScalar {
            re: self.re - &o.re,
            im: self.im - &o.im,
        }
    }
}

impl Sub for GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, o: GaussianScalar) -> GaussianScalar {
        self - &o
    }
}

impl<'a> Mul<&'a GaussianScalar> for GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, o: &'a GaussianScalar) -> GaussianScalar {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianScalar::real(self.re * &o.re);
        }
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        GaussianScalar { re, im }
    }
}

impl Mul for GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, o: GaussianScalar) -> GaussianScalar {
        self * &o
    }
}

impl Div for GaussianScalar {
    type Output = GaussianScalar;
    /// Panics on a zero divisor, like `BigRational`; use `checked_div` to get an error.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: GaussianScalar) -> GaussianScalar {
        let inv = o.inverse().expect("division by zero");
        self * inv
    }
}

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussianScalar {
    fn zero() -> Self {
        Self::real(ExactScalar::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianScalar {
    fn one() -> Self {
        Self::real(ExactScalar::one())
    }
}

impl Field for GaussianScalar {
    fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(GaussianScalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    fn conjugate(&self) -> Self {
        self.conj()
    }

    fn from_rational(q: ExactScalar) -> Self {
        Self::real(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::scalar::{frac, q};
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussianScalar {
        GaussianScalar::new(q(a), q(b))
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(
            GaussianScalar::i() * GaussianScalar::i(),
            -GaussianScalar::one()
        );
    }

    #[test]
    fn display() {
        assert_eq!(g(1, -2).to_string(), "1-2i");
        assert_eq!(GaussianScalar::new(frac(1, 2), q(0)).to_string(), "1/2");
        assert_eq!(g(0, 3).to_string(), "3i");
    }

    proptest! {
        #[test]
        fn field_axioms(a in -20i64..20, b in -20i64..20, c in -20i64..20, d in 1i64..20) {
            let x = g(a, b);
            let y = GaussianScalar::new(q(c), frac(1, d));
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
            let back = (x.clone() * y.clone()) / y.clone();
            prop_assert_eq!(back, x);
        }
    }
}
