use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::expansion::{Form, PExpansion};
use crate::combinatorics::Partition;
use crate::error::Error;
use crate::poly::RatFunc;

pub type CoeffFn = Arc<dyn Fn(u32) -> RatFunc + Send + Sync>;

/// Whether component `n` is the coefficient of `z^n` (raising, degree `+n`)
/// or of `z^{-n}` (lowering, degree `-n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raising,
    Lowering,
}

/// `X(z) = exp(Σ_{n≥1} c_n p_n z^n) exp(Σ_{n≥1} b_n ∂/∂p_n z^{-n})`.
///
/// Every operator used here, and every adjoint, has this shape.
#[derive(Clone)]
pub struct OperatorSpec {
    pub name: String,
    pub creation: CoeffFn,
    pub annihilation: CoeffFn,
    pub direction: Direction,
}

fn frac(n: i64, d: i64) -> RatFunc {
    RatFunc::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn one_minus_t_pow_over_n(n: u32) -> RatFunc {
    RatFunc::one_minus_t_pow(n as usize).scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
}

fn neg_one_pow(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl OperatorSpec {
    pub fn new<C, A>(name: &str, direction: Direction, creation: C, annihilation: A) -> Self
    where
        C: Fn(u32) -> RatFunc + Send + Sync + 'static,
        A: Fn(u32) -> RatFunc + Send + Sync + 'static,
    {
        OperatorSpec {
            name: name.to_string(),
            creation: Arc::new(creation),
            annihilation: Arc::new(annihilation),
            direction,
        }
    }

    /// `H(z)`: `((1-t^n)/n, -1)`.
    pub fn hall_littlewood() -> Self {
        Self::new("H", Direction::Raising, one_minus_t_pow_over_n, |_| {
            RatFunc::from_int(-1)
        })
    }

    pub fn hall_littlewood_adjoint() -> Self {
        Self::hall_littlewood().adjoint(Form::T, "H*")
    }

    /// `Q(z)`: `(2/n for odd n, -1)`.
    pub fn schur_q() -> Self {
        Self::new(
            "Q",
            Direction::Raising,
            |n| if n % 2 == 1 { frac(2, n as i64) } else { RatFunc::zero() },
            |_| RatFunc::from_int(-1),
        )
    }

    pub fn schur_q_adjoint() -> Self {
        Self::schur_q().adjoint(Form::T, "Q*")
    }

    /// Adjoint of `Q(z)` under `⟨,⟩_0`.
    pub fn schur_q_minus() -> Self {
        Self::schur_q().adjoint(Form::Zero, "Q-")
    }

    /// `S⁺(z)`: `(1/n, -1)`.
    pub fn schur_plus() -> Self {
        Self::new(
            "S+",
            Direction::Raising,
            |n| frac(1, n as i64),
            |_| RatFunc::from_int(-1),
        )
    }

    pub fn schur_minus() -> Self {
        Self::schur_plus().adjoint(Form::Zero, "S-")
    }

    /// Multiplication by `h̃(z) = exp(Σ (t^n - (-1)^n)/n p_n z^n)`.
    pub fn htilde() -> Self {
        Self::new(
            "h~",
            Direction::Raising,
            |n| {
                (&RatFunc::t_pow(n as usize) - &RatFunc::from_int(neg_one_pow(n)))
                    .scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
            },
            |_| RatFunc::zero(),
        )
    }

    pub fn htilde_adjoint() -> Self {
        Self::htilde().adjoint(Form::T, "h~*")
    }

    /// Multiplication by `e(z) = exp(Σ (-1)^{n+1}/n p_n z^n)`.
    pub fn e_plus() -> Self {
        Self::new(
            "e+",
            Direction::Raising,
            |n| frac(-neg_one_pow(n), n as i64),
            |_| RatFunc::zero(),
        )
    }

    pub fn e_minus() -> Self {
        Self::e_plus().adjoint(Form::Zero, "e-")
    }

    /// Adjoint by substitution: `p_n* = n/(1-t^n) ∂_n` under the `t`-form and
    /// `n ∂_n` under the `0`-form, so creation and annihilation coefficients
    /// trade places with the matching rescaling.
    pub fn adjoint(&self, form: Form, name: &str) -> OperatorSpec {
        let c = Arc::clone(&self.creation);
        let b = Arc::clone(&self.annihilation);
        let direction = match self.direction {
            Direction::Raising => Direction::Lowering,
            Direction::Lowering => Direction::Raising,
        };
        match form {
            Form::T => OperatorSpec::new(
                name,
                direction,
                move |n| &b(n) * &one_minus_t_pow_over_n(n),
                move |n| {
                    let factor = one_minus_t_pow_over_n(n).recip().expect("1 - t^n is nonzero");
                    &c(n) * &factor
                },
            ),
            Form::Zero => OperatorSpec::new(
                name,
                direction,
                move |n| b(n).scale(&BigRational::new(BigInt::one(), BigInt::from(n))),
                move |n| c(n).scale(&BigRational::from_integer(BigInt::from(n))),
            ),
        }
    }

    /// Coefficients evaluated at `t = 0`.
    pub fn at_t_zero(&self, name: &str) -> OperatorSpec {
        let c = Arc::clone(&self.creation);
        let b = Arc::clone(&self.annihilation);
        let zero = BigRational::zero();
        let zero2 = zero.clone();
        OperatorSpec::new(
            name,
            self.direction,
            move |n| RatFunc::from_rational(c(n).eval_at(&zero).expect("regular at t = 0")),
            move |n| RatFunc::from_rational(b(n).eval_at(&zero2).expect("regular at t = 0")),
        )
    }

    /// The component with index `n` applied to `f`.
    ///
    /// The annihilation exponential acts on `p_λ` by `p_i ↦ p_i + b_i w^{-i}`,
    /// so removing `k_i` copies of each part `i` contributes
    /// `∏ C(m_i, k_i) b_i^{k_i}`; the creation exponential's degree-`a` part is
    /// `Σ_{ρ⊢a} ∏ c_{ρ_j} / ∏ m_i(ρ)! p_ρ`.
    pub fn apply(&self, n: i64, f: &PExpansion) -> Result<PExpansion, Error> {
        let max = f.max_degree();
        let shift = match self.direction {
            Direction::Raising => n,
            Direction::Lowering => -n,
        };
        let c: Vec<RatFunc> = (0..=max)
            .map(|k| if k == 0 { RatFunc::zero() } else { (self.creation)(k) })
            .collect();
        let b: Vec<RatFunc> = (0..=max)
            .map(|k| {
                if k == 0 {
                    RatFunc::zero()
                } else {
                    (self.annihilation)(k)
                }
            })
            .collect();
        let mut creation_cache: HashMap<u32, Vec<(Partition, RatFunc)>> = HashMap::new();
        let mut out = PExpansion::zero(max);
        for (lambda, coeff) in f.iter() {
            for (rest, removed, factor) in annihilate(lambda, &b) {
                let a = shift + removed as i64;
                if a < 0 {
                    continue;
                }
                let a = a as u32;
                let terms = creation_cache.entry(a).or_insert_with(|| creation_terms(a, &c));
                if terms.is_empty() {
                    continue;
                }
                let degree = rest.weight() + a;
                if degree > max {
                    return Err(Error::TruncationOverflow {
                        degree: degree as usize,
                        max_degree: max as usize,
                    });
                }
                let scaled = coeff * &factor;
                for (sigma, cs) in terms.iter() {
                    out.add_term(rest.union(sigma), &(&scaled * cs))?;
                }
            }
        }
        Ok(out)
    }
}

/// All `(λ minus removed parts, removed weight, ∏ C(m_i,k_i) b_i^{k_i})`.
fn annihilate(lambda: &Partition, b: &[RatFunc]) -> Vec<(Partition, u32, RatFunc)> {
    let mut out = vec![(Vec::new(), 0u32, RatFunc::one())];
    for (part, m) in lambda.multiplicities() {
        let bi = &b[part as usize];
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for (kept, removed, factor) in &out {
            let mut binom = BigInt::one();
            let mut power = RatFunc::one();
            for k in 0..=m {
                if k > 0 {
                    if bi.is_zero() {
                        break;
                    }
                    binom = binom * BigInt::from(m - k + 1) / BigInt::from(k);
                    power = &power * bi;
                }
                let mut parts: Vec<u32> = kept.clone();
                parts.extend(std::iter::repeat_n(part, m - k));
                let f = (factor * &power).scale(&BigRational::from_integer(binom.clone()));
                next.push((parts, removed + part * k as u32, f));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(parts, removed, f)| (Partition::from_sorted_unchecked(parts), removed, f))
        .collect()
}

fn creation_terms(a: u32, c: &[RatFunc]) -> Vec<(Partition, RatFunc)> {
    Partition::all(a)
        .into_iter()
        .filter_map(|rho| {
            let mut coeff = RatFunc::one();
            for &p in rho.parts() {
                coeff = &coeff * &c[p as usize];
                if coeff.is_zero() {
                    return None;
                }
            }
            let denom = rho
                .multiplicities()
                .iter()
                .fold(BigInt::one(), |acc, &(_, m)| acc * (1..=m as u64).product::<BigInt>());
            Some((rho, coeff.scale(&BigRational::new(BigInt::one(), denom))))
        })
        .collect()
}

/// `X_{n_1} Y_{n_2} ⋯ .f`, rightmost factor first.
pub fn apply_word(word: &[(&OperatorSpec, i64)], f: &PExpansion) -> Result<PExpansion, Error> {
    let mut v = f.clone();
    for (op, n) in word.iter().rev() {
        if v.is_zero() {
            break;
        }
        v = op.apply(*n, &v)?;
    }
    Ok(v)
}

impl fmt::Debug for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorSpec({}, {:?})", self.name, self.direction)
    }
}
