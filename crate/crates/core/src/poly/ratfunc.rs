use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::Error;

/// Dense univariate polynomial over ℚ, coefficients from `t^0` upward,
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        QPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, t0: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t0 + c)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            terms.push((i as i64, c.to_integer()));
        }
        Some(LaurentPoly::from_terms(terms))
    }
}

impl From<&LaurentPoly> for QPoly {
    /// Only meaningful for polynomials; negative exponents panic.
    fn from(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return QPoly::zero();
        }
        assert!(p.is_polynomial(), "Laurent polynomial has negative exponents");
        let deg = p.degree().unwrap() as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (e, c) in p.terms() {
            coeffs[e as usize] = BigRational::from_integer(c.clone());
        }
        QPoly::new(coeffs)
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        QPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        QPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?
                    } else {
                        write!(f, "t^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Reduced quotient of polynomials over ℚ: `gcd(num, den) = 1`, `den` monic
/// and nonzero. Every constructor and operation returns reduced values, so
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(QPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rational(q(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(QPoly::constant(c))
    }

    pub fn from_poly(num: QPoly) -> Self {
        RatFunc { num, den: QPoly::one() }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        RatFunc::from_poly(QPoly::monomial(1, BigRational::one()))
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[0] = BigRational::one();
        c[k] -= BigRational::one();
        RatFunc::from_poly(QPoly::new(c))
    }

    /// `t^k` for `k ≥ 0`.
    pub fn t_pow(k: usize) -> Self {
        RatFunc::from_poly(QPoly::monomial(k, BigRational::one()))
    }

    /// Builds and reduces `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            let inv = den.coeffs[0].recip();
            return RatFunc {
                num: num.scale(&inv),
                den: QPoly::one(),
            };
        }
        let g = QPoly::gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead_inv = den.leading().unwrap().recip();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFunc, Error> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        (0..k).fold(RatFunc::one(), |acc, _| &acc * self)
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    /// Exact value at `t0`; fails with [`Error::Pole`] when the reduced
    /// denominator vanishes there.
    pub fn eval_at(&self, t0: &BigRational) -> Result<BigRational, Error> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::Pole { at: t0.to_string() });
        }
        Ok(self.num.eval(t0) / d)
    }

    pub fn eval_int(&self, t0: i64) -> Result<BigRational, Error> {
        self.eval_at(&q(t0))
    }

    /// `f(-t)`.
    pub fn substitute_neg_t(&self) -> RatFunc {
        fn flip(p: &QPoly) -> QPoly {
            QPoly::new(
                p.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            )
        }
        RatFunc::reduce(flip(&self.num), flip(&self.den))
    }

    /// Converts to an integral polynomial when the reduced denominator is 1
    /// and all coefficients are integers.
    pub fn to_laurent(&self) -> Result<LaurentPoly, Error> {
        if !self.is_polynomial() {
            return Err(Error::InvariantViolation(format!("{self} is not a polynomial")));
        }
        self.num
            .to_laurent()
            .ok_or_else(|| Error::InvariantViolation(format!("{self} has non-integral coefficients")))
    }

    /// The value as an integer when it is an integral constant.
    pub fn to_integer(&self) -> Result<BigInt, Error> {
        let p = self.to_laurent()?;
        p.as_constant()
            .ok_or_else(|| Error::InvariantViolation(format!("{self} is not a constant")))
    }
}

impl From<&LaurentPoly> for RatFunc {
    fn from(p: &LaurentPoly) -> Self {
        match p.valuation() {
            Ok(v) if v < 0 => {
                let shifted = p.shift_exponent(-v);
                RatFunc::reduce(
                    QPoly::from(&shifted),
                    QPoly::monomial((-v) as usize, BigRational::one()),
                )
            }
            _ => RatFunc::from_poly(QPoly::from(p)),
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;

    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.scale(&q(-1)),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn reduce_cancels_common_factor() {
        let r = RatFunc::new(poly(&[1, 0, -1]), poly(&[1, -1])).unwrap();
        assert_eq!(r, RatFunc::from_poly(poly(&[1, 1])));
        assert!(r.is_polynomial());
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFunc::new(poly(&[2]), poly(&[2, -2])).unwrap();
        assert_eq!(r.denominator(), &poly(&[-1, 1]));
        assert_eq!(r.numerator(), &poly(&[-1]));
    }

    #[test]
    fn pole_detection() {
        let z21 = RatFunc::new(poly(&[2]), &poly(&[1, 0, -1]) * &poly(&[1, -1])).unwrap();
        assert!(matches!(z21.eval_int(-1), Err(Error::Pole { .. })));
        let r = RatFunc::new(poly(&[1]), poly(&[1, -1])).unwrap();
        assert_eq!(r.eval_int(0).unwrap(), q(1));
        assert_eq!(RatFunc::new(poly(&[1]), QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(poly(&[1, 2]), poly(&[3, 0, 1])).unwrap();
        let b = RatFunc::new(poly(&[0, 1]), poly(&[1, 1])).unwrap();
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_roundtrip() {
        let p = LaurentPoly::from_terms([(-1, 1), (0, 1)]);
        let r = RatFunc::from(&p);
        assert_eq!(r.denominator(), &poly(&[0, 1]));
        assert!(r.to_laurent().is_err());
        let p = LaurentPoly::from_coeffs(&[3, 0, 2]);
        assert_eq!(RatFunc::from(&p).to_laurent().unwrap(), p);
    }
}
