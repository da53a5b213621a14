use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Sparse Laurent polynomial in `t` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// `c * t^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Dense coefficients starting at `t^0`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        LaurentPoly::from_terms(coeffs.iter().cloned().enumerate().map(|(i, c)| (i as i64, c)))
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Result<i64, Error> {
        self.terms.keys().next_back().copied().ok_or(Error::UndefinedOnZero)
    }

    /// Lowest exponent present.
    pub fn valuation(&self) -> Result<i64, Error> {
        self.terms.keys().next().copied().ok_or(Error::UndefinedOnZero)
    }

    /// True when no negative exponent occurs (the zero polynomial counts).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().next().is_none_or(|&e| e >= 0)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Multiplies by `t^d`.
    pub fn shift_exponent(&self, d: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + d, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval_at(&self, t0: &BigRational) -> Result<BigRational, Error> {
        if t0.is_zero() && !self.is_polynomial() {
            return Err(Error::Pole { at: "0".into() });
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(t0.clone(), e as usize)
            } else {
                num_traits::pow(t0.recip(), (-e) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    pub fn eval_int(&self, t0: i64) -> Result<BigRational, Error> {
        self.eval_at(&BigRational::from_integer(t0.into()))
    }

    /// `a(-t)`.
    pub fn substitute_neg_t(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `t^m a(1/t) = a(t)` for some integer `m`. The zero polynomial is
    /// palindromic.
    pub fn is_palindromic(&self) -> bool {
        let (Ok(lo), Ok(hi)) = (self.valuation(), self.degree()) else {
            return true;
        };
        self.terms
            .iter()
            .all(|(&e, c)| self.terms.get(&(lo + hi - e)) == Some(c))
    }

    /// gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division by an integer; `None` if some coefficient is not
    /// divisible.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<LaurentPoly> {
        use num_integer::Integer;
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(e, q);
        }
        Some(LaurentPoly { terms })
    }

    /// Exact division by a nonzero Laurent polynomial; `None` when the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        use num_integer::Integer;
        let dlo = divisor.valuation().ok()?;
        let dhi = divisor.degree().ok()?;
        let lead = divisor.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Ok(rhi) = rem.degree() {
            let rlo = rem.valuation().unwrap();
            if rhi - rlo < dhi - dlo {
                return None;
            }
            let (q, r) = rem.terms[&rhi].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let step = LaurentPoly::monomial(rhi - dhi, q);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }

    /// The integer value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

/// Canonical rendering: descending exponents, `c*t^e` terms joined by
/// ` + ` / ` - `, unit coefficients elided, zero as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match e {
                0 => None,
                1 => Some("t".to_string()),
                e => Some(format!("t^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => write!(f, "{v}")?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(
            p(&[1, 1]).shift_exponent(-1),
            LaurentPoly::from_terms([(-1, 1), (0, 1)])
        );
        assert_eq!(p(&[1, 1]).pow(0), LaurentPoly::one());
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), LaurentPoly::zero());
    }

    #[test]
    fn queries() {
        let counter = p(&[0, 8, 12, 8, 4]);
        assert!(!counter.is_palindromic());
        assert!(p(&[0, 2, 2]).is_palindromic());
        assert_eq!(p(&[1, 1]).eval_int(-1).unwrap(), BigRational::zero());
        assert_eq!(p(&[2, 2]).eval_int(1).unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(LaurentPoly::zero().degree(), Err(Error::UndefinedOnZero));
        assert_eq!(p(&[1, 1, 1]).substitute_neg_t(), p(&[1, -1, 1]));
        assert!(!p(&[1]).shift_exponent(-1).is_polynomial());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 8, 12, 8, 4]).to_string(), "4*t^4 + 8*t^3 + 12*t^2 + 8*t");
        assert_eq!(p(&[4, 4]).to_string(), "4*t + 4");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(p(&[1, -1]).to_string(), "-t + 1");
        assert_eq!(LaurentPoly::monomial(-2, 3).to_string(), "3*t^-2");
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 1]) * &p(&[1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, 0, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[4, 8]).div_exact_int(&BigInt::from(4)), Some(p(&[1, 2])));
        assert_eq!(p(&[4, 6]).div_exact_int(&BigInt::from(4)), None);
    }
}
