//! Rational functions: quotients of polynomials in canonical reduced form.
//!
//! These form the field over which the symbolic linear solver runs, yielding
//! closed-form solution functions for parametric chains.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::scalar::FieldScalar;
use crate::Rat;

use super::poly::Polynomial;
use super::valuation::Valuation;

/// `numerator / denominator`, gcd-reduced, denominator monic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction<C: FieldScalar = Rat> {
    num: Polynomial<C>,
    den: Polynomial<C>,
}

impl<C: FieldScalar> RationalFunction<C> {
    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = RationalFunction { num, den };
        out.reduce();
        out
    }

    pub fn from_poly(p: Polynomial<C>) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<C> {
        &self.den
    }

    /// The polynomial value if the denominator reduced to one.
    pub fn as_polynomial(&self) -> Option<&Polynomial<C>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        let g = Polynomial::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        // Make the denominator monic so representations are unique.
        let lc = self.den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = C::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn eval(&self, v: &Valuation<C>) -> Result<C, AlgebraError> {
        let d = self.den.eval(v)?;
        if d.is_zero() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        Ok(self.num.eval(v)? / d)
    }

    /// Formal partial derivative (quotient rule).
    pub fn partial_derivative(&self, name: &str) -> Self {
        let dn = self.num.partial_derivative(name);
        let dd = self.den.partial_derivative(name);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        RationalFunction::new(num, den)
    }
}

impl<C: FieldScalar> Zero for RationalFunction<C> {
    fn zero() -> Self {
        Self::from_poly(Polynomial::zero_poly())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: FieldScalar> One for RationalFunction<C> {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl<C: FieldScalar> Add for RationalFunction<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den)
    }
}

impl<C: FieldScalar> Sub for RationalFunction<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den)
    }
}

impl<C: FieldScalar> Neg for RationalFunction<C> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl<C: FieldScalar> Mul for RationalFunction<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<C: FieldScalar> Div for RationalFunction<C> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<C: FieldScalar + fmt::Display> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn p(s: &str) -> Polynomial<Rat> {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn reduction_is_canonical() {
        let f = RationalFunction::new(p("p^2 - p*q"), p("p"));
        assert_eq!(f.as_polynomial().unwrap(), &p("p - q"));
        let g = RationalFunction::new(p("2*p"), p("2 - 2*q"));
        assert_eq!(g.numerator(), &p("-p"));
        assert_eq!(g.denominator(), &p("q - 1"));
    }

    #[test]
    fn field_ops_agree_with_eval() {
        let a = RationalFunction::new(p("1"), p("1 - p"));
        let b = RationalFunction::new(p("p"), p("1 + p"));
        let s = a.clone() + b.clone();
        let mut v = Valuation::new();
        v.set("p", crate::rat(1, 3));
        let lhs = s.eval(&v).unwrap();
        let rhs = a.eval(&v).unwrap() + b.eval(&v).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_rule() {
        // d/dp (p / (1-p)) = 1/(1-p)^2
        let f = RationalFunction::new(p("p"), p("1 - p"));
        let d = f.partial_derivative("p");
        assert_eq!(d, RationalFunction::new(p("1"), p("(1-p)^2")));
    }
}
