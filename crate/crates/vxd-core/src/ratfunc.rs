//! Normalized rational functions over the ambient localization.
//!
//! A [`RatFunc`] is a fraction of integer-coefficient polynomials in lowest
//! terms: `gcd(num, den) = 1` (contents included), the denominator has a
//! positive graded-lex leading coefficient, and every denominator is a
//! constant times a product of powers of the ambient's declared generators.
//! With those invariants, equality of values is structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ambient::{check_ambient, Ambient};
use crate::poly::{Poly, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonical representative of `num/den`. Errors on a zero denominator
    /// and on denominators outside the declared localization.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        let f = Self::reduce(num, den)?;
        if !f.den.is_constant() && !f.den.is_supported_denominator() {
            return Err(Error::MembershipViolation { denominator: f.den.to_string() });
        }
        Ok(f)
    }

    /// Reduction without the membership check, for operations that provably
    /// stay inside the localization (sums, products, derivatives).
    fn new_closed(num: Poly, den: Poly) -> Self {
        let f = Self::reduce(num, den).expect("closed operation produced zero denominator");
        debug_assert!(
            f.den.is_constant() || f.den.is_supported_denominator(),
            "closed operation left the localization"
        );
        f
    }

    fn reduce(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ambient = num.ambient().clone();
        if num.is_zero() {
            return Ok(RatFunc { num, den: Poly::one(ambient) });
        }
        // polynomial fast path: a rational-coefficient numerator over 1 is
        // already canonical
        if den.is_one() {
            return Ok(RatFunc { num, den });
        }
        if let Some(c) = den.as_constant() {
            let inv = Rat::one() / c;
            return Ok(RatFunc { num: num.scale(&inv), den: Poly::one(ambient) });
        }
        let (a, n) = num.int_primitive();
        let (b, d) = den.int_primitive();
        let g = n.gcd(&d);
        let n = n.div_exact(&g).expect("gcd divides numerator");
        let d = d.div_exact(&g).expect("gcd divides denominator");
        // the rational scale lives in the numerator; the denominator stays a
        // primitive integer polynomial with positive leading coefficient
        let s = a / b;
        Ok(RatFunc { num: n.scale(&s), den: d })
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.ambient().clone());
        Self::new_closed(p, one)
    }

    pub fn zero(ambient: Ambient) -> Self {
        RatFunc { num: Poly::zero(ambient.clone()), den: Poly::one(ambient) }
    }

    pub fn one(ambient: Ambient) -> Self {
        RatFunc { num: Poly::one(ambient.clone()), den: Poly::one(ambient) }
    }

    pub fn constant(ambient: Ambient, c: Rat) -> Self {
        Self::from_poly(Poly::constant(ambient, c))
    }

    pub fn int_constant(ambient: Ambient, c: i64) -> Self {
        Self::from_poly(Poly::int_constant(ambient, c))
    }

    pub fn var(ambient: Ambient, i: usize) -> Self {
        Self::from_poly(Poly::var(ambient, i))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn ambient(&self) -> &Ambient {
        self.num.ambient()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(p)` when the value is the polynomial `p` (denominator 1).
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn add_rf(&self, other: &RatFunc) -> RatFunc {
        debug_assert!(crate::ambient::same_ambient(self.ambient(), other.ambient()));
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.add(&other.num), den: self.den.clone() };
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new_closed(num, den)
    }

    pub fn sub_rf(&self, other: &RatFunc) -> RatFunc {
        self.add_rf(&other.neg_rf())
    }

    pub fn mul_rf(&self, other: &RatFunc) -> RatFunc {
        debug_assert!(crate::ambient::same_ambient(self.ambient(), other.ambient()));
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient().clone());
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: self.den.clone() };
        }
        // cross-cancel to keep the product reduction cheap
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Self::new_closed(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn neg_rf(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return Self::zero(self.ambient().clone());
        }
        Self::new_closed(self.num.scale(c), self.den.clone())
    }

    /// Division; the divisor's numerator joins the denominator, so this can
    /// leave the declared localization.
    pub fn div_rf(&self, other: &RatFunc) -> Result<RatFunc> {
        check_ambient(self.ambient(), other.ambient())?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Unit of the localization: a constant times a product of powers of the
    /// declared denominator generators.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.num.is_supported_denominator()
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        let mut result = Self::one(self.ambient().clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_rf(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_rf(&base);
            }
        }
        result
    }

    /// Exact partial derivative via the quotient rule.
    pub fn partial(&self, i: usize) -> RatFunc {
        let dn = self.num.partial(i);
        if self.den.is_one() {
            return RatFunc { num: dn, den: self.den.clone() };
        }
        let dd = self.den.partial(i);
        if dd.is_zero() {
            return Self::new_closed(dn, self.den.clone());
        }
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        let den = self.den.mul(&self.den);
        Self::new_closed(num, den)
    }

    /// Exact evaluation at a rational point; `None` on a pole.
    pub fn eval_rat(&self, values: &[Rat]) -> Option<Rat> {
        let d = self.den.eval_rat(values);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rat(values) / d)
    }

    /// Reattach to a compatible ambient (cover restriction); re-checks
    /// denominator membership against the new generator set.
    pub fn with_ambient(&self, ambient: &Ambient) -> Result<RatFunc> {
        let num = self.num.with_ambient(ambient)?;
        let den = self.den.with_ambient(ambient)?;
        RatFunc::new(num, den)
    }
}

/// The spec-level entry point: canonical representative of `num/den`.
pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_rf(rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.sub_rf(rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_rf(rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_rf()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::AlgebraDescriptor;
    use crate::expr::parse_expr;
    use crate::poly::rat_int;

    fn pring(vars: &[&str]) -> Ambient {
        AlgebraDescriptor::polynomial_ring(vars.to_vec()).unwrap()
    }

    fn pf(a: &Ambient, s: &str) -> Poly {
        parse_expr(s, a).unwrap().as_poly().unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let a = pring(&["x"]);
        // (2x, 2) -> x/1
        let f = normalize(pf(&a, "2*x"), pf(&a, "2")).unwrap();
        assert_eq!(f.to_string(), "x");
        assert!(f.den().is_one());
    }

    #[test]
    fn normalize_cancels_polynomial_factor() {
        let a = pring(&["x"]);
        // (x^2 - 1, x - 1) -> (x + 1)/1
        let f = normalize(pf(&a, "x^2 - 1"), pf(&a, "x - 1")).unwrap();
        assert_eq!(f.to_string(), "x + 1");
    }

    #[test]
    fn normalize_declared_localization() {
        let a = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        let f = normalize(Poly::one(a.clone()), Poly::var(a.clone(), 0)).unwrap();
        assert_eq!(f.to_string(), "(1)/(x)");
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        let a = pring(&["x"]);
        assert!(matches!(
            normalize(Poly::one(a.clone()), Poly::zero(a)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn normalize_rejects_undeclared_denominator() {
        let a = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        let r = normalize(Poly::one(a.clone()), pf(&a, "x + 1"));
        assert!(matches!(r, Err(Error::MembershipViolation { .. })));
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let a = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        let f = normalize(Poly::one(a.clone()), pf(&a, "-x")).unwrap();
        assert_eq!(f.to_string(), "(-1)/(x)");
    }

    #[test]
    fn partial_of_inverse() {
        let a = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        let f = parse_expr("1/x", &a).unwrap();
        assert_eq!(f.partial(0).to_string(), "(-1)/(x^2)");
    }

    #[test]
    fn partial_of_constant_in_other_variable() {
        let a = pring(&["x", "y"]);
        let f = RatFunc::var(a.clone(), 0);
        assert!(f.partial(1).is_zero());
    }

    #[test]
    fn unit_detection() {
        let a = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        assert!(parse_expr("3*x^2", &a).unwrap().is_unit());
        assert!(parse_expr("1/x", &a).unwrap().is_unit());
        assert!(!parse_expr("x + 1", &a).unwrap().is_unit());
        assert!(!RatFunc::zero(a).is_unit());
    }

    #[test]
    fn division_enters_localization_only_when_declared() {
        let torus = AlgebraDescriptor::new(vec!["x"], &["x"]).unwrap();
        let one = RatFunc::one(torus.clone());
        let x = RatFunc::var(torus.clone(), 0);
        assert_eq!(one.div_rf(&x).unwrap().to_string(), "(1)/(x)");

        let plain = pring(&["x"]);
        let one = RatFunc::one(plain.clone());
        let x = RatFunc::var(plain, 0);
        assert!(matches!(one.div_rf(&x), Err(Error::MembershipViolation { .. })));
    }

    #[test]
    fn constant_arithmetic_stays_reduced() {
        let a = pring(&["x"]);
        let half = RatFunc::constant(a.clone(), crate::poly::rat(1, 2));
        let sum = &half + &half;
        assert_eq!(sum.as_constant().unwrap(), rat_int(1));
    }
}
