use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::combinatorics::{z_lambda, z_lambda_t, Partition};
use crate::error::Error;
use crate::poly::RatFunc;

/// Which bilinear form to pair with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ(t)`
    T,
    /// `⟨p_λ, p_μ⟩_0 = δ_{λμ} z_λ`
    Zero,
}

/// A symmetric function `Σ c_λ p_λ` over `ℚ(t)`, truncated at `max_degree`.
///
/// Zero coefficients are never stored, and no key exceeds the truncation.
#[derive(Clone, PartialEq, Eq)]
pub struct PExpansion {
    coeffs: BTreeMap<Partition, RatFunc>,
    max_degree: u32,
}

impl PExpansion {
    pub fn zero(max_degree: u32) -> Self {
        PExpansion {
            coeffs: BTreeMap::new(),
            max_degree,
        }
    }

    /// The vacuum vector `1`.
    pub fn vacuum(max_degree: u32) -> Self {
        let mut out = PExpansion::zero(max_degree);
        out.coeffs.insert(Partition::empty(), RatFunc::one());
        out
    }

    pub fn from_terms<I>(max_degree: u32, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Partition, RatFunc)>,
    {
        let mut out = PExpansion::zero(max_degree);
        for (lambda, c) in terms {
            out.add_term(lambda, &c)?;
        }
        Ok(out)
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatFunc> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest weight present; 0 for the zero vector.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) -> Result<(), Error> {
        if c.is_zero() {
            return Ok(());
        }
        if lambda.weight() > self.max_degree {
            return Err(Error::TruncationOverflow {
                degree: lambda.weight() as usize,
                max_degree: self.max_degree as usize,
            });
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &PExpansion) -> PExpansion {
        self.combine(other, &RatFunc::one())
    }

    pub fn sub(&self, other: &PExpansion) -> PExpansion {
        self.combine(other, &RatFunc::from_int(-1))
    }

    /// `self + c · other`.
    pub fn combine(&self, other: &PExpansion, c: &RatFunc) -> PExpansion {
        let mut out = PExpansion {
            coeffs: self.coeffs.clone(),
            max_degree: self.max_degree.max(other.max_degree),
        };
        for (lambda, x) in &other.coeffs {
            out.add_term(lambda.clone(), &(c * x))
                .expect("within combined truncation");
        }
        out
    }

    /// Product, using `p_λ p_μ = p_{λ∪μ}`; the truncation is the sum of both.
    pub fn mul(&self, other: &PExpansion) -> Result<PExpansion, Error> {
        let mut out = PExpansion::zero(self.max_degree + other.max_degree);
        for (lambda, a) in &self.coeffs {
            for (mu, b) in &other.coeffs {
                out.add_term(lambda.union(mu), &(a * b))?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> PExpansion {
        if c.is_zero() {
            return PExpansion::zero(self.max_degree);
        }
        PExpansion {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
            max_degree: self.max_degree,
        }
    }

    pub fn map_coeffs<F>(&self, f: F) -> Result<PExpansion, Error>
    where
        F: Fn(&RatFunc) -> Result<RatFunc, Error>,
    {
        let mut out = PExpansion::zero(self.max_degree);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), &f(v)?)?;
        }
        Ok(out)
    }

    /// Every coefficient evaluated at `t0`; poles are errors.
    pub fn eval_at(&self, t0: &BigRational) -> Result<PExpansion, Error> {
        self.map_coeffs(|c| c.eval_at(t0).map(RatFunc::from_rational))
    }

    pub fn substitute_neg_t(&self) -> PExpansion {
        self.map_coeffs(|c| Ok(c.substitute_neg_t())).expect("same support")
    }

    /// `ω(p_λ) = ε_λ p_λ`.
    pub fn omega(&self) -> PExpansion {
        self.clone()
            .signed_by(|lambda| (lambda.weight() as usize - lambda.length()) % 2 == 1)
    }

    fn signed_by<F: Fn(&Partition) -> bool>(mut self, negate: F) -> PExpansion {
        for (k, v) in self.coeffs.iter_mut() {
            if negate(k) {
                *v = -&*v;
            }
        }
        self
    }
}

/// `Σ_λ F_λ G_λ z_λ(t)` or `Σ_λ F_λ G_λ z_λ`.
pub fn inner(f: &PExpansion, g: &PExpansion, form: Form) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (lambda, a) in &f.coeffs {
        if let Some(b) = g.coeffs.get(lambda) {
            let z = match form {
                Form::T => z_lambda_t(lambda),
                Form::Zero => RatFunc::from_rational(z_lambda(lambda).into()),
            };
            acc = &acc + &(&(a * b) * &z);
        }
    }
    acc
}

impl fmt::Display for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lambda, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*p[{lambda}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PExpansion({self})")
    }
}
