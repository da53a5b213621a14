use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::expansion::{inner, Form, PExpansion};
use super::operator::{apply_word, OperatorSpec};
use crate::combinatorics::{IntVector, Partition, StrictPartition};
use crate::error::Error;
use crate::poly::{LaurentPoly, RatFunc};

/// Truncation cap used when `SPIN_KOSTKA_MAX_DEGREE` is unset.
pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// Reads `SPIN_KOSTKA_MAX_DEGREE`, falling back to [`DEFAULT_MAX_DEGREE`].
pub fn max_degree_from_env() -> u32 {
    std::env::var("SPIN_KOSTKA_MAX_DEGREE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `Q_μ(x;t) = H_{μ_1} ⋯ H_{μ_l}.1`
    HallLittlewood(Partition),
    /// `Q_ξ = Q_{ξ_1} ⋯ Q_{ξ_l}.1`
    SchurQ(StrictPartition),
    /// `s_λ = S⁺_{λ_1} ⋯ S⁺_{λ_l}.1`
    Schur(Partition),
    /// `h̃_n`
    HTilde(u32),
}

impl Basis {
    pub fn weight(&self) -> u32 {
        match self {
            Basis::HallLittlewood(p) | Basis::Schur(p) => p.weight(),
            Basis::SchurQ(p) => p.weight(),
            Basis::HTilde(n) => *n,
        }
    }
}

/// Largest partial weight `Σ_{j≥i} ν_j` reached while applying a word
/// right to left.
fn word_truncation(nu: &[i64]) -> u32 {
    let mut acc = 0i64;
    let mut best = 0i64;
    for &x in nu.iter().rev() {
        acc += x;
        best = best.max(acc);
    }
    best as u32
}

fn word_on_vacuum(op: &OperatorSpec, nu: &[i64], max_degree: u32) -> Result<PExpansion, Error> {
    let word: Vec<(&OperatorSpec, i64)> = nu.iter().map(|&n| (op, n)).collect();
    apply_word(&word, &PExpansion::vacuum(max_degree))
}

fn parts_i64(parts: &[u32]) -> Vec<i64> {
    parts.iter().map(|&p| p as i64).collect()
}

/// The element in the power-sum basis, truncated at its own weight.
pub fn basis_vector(kind: &Basis) -> Result<PExpansion, Error> {
    let n = kind.weight();
    match kind {
        Basis::HallLittlewood(mu) => word_on_vacuum(&OperatorSpec::hall_littlewood(), &parts_i64(mu.parts()), n),
        Basis::SchurQ(xi) => word_on_vacuum(&OperatorSpec::schur_q(), &parts_i64(xi.parts()), n),
        Basis::Schur(lambda) => word_on_vacuum(&OperatorSpec::schur_plus(), &parts_i64(lambda.parts()), n),
        Basis::HTilde(k) => word_on_vacuum(&OperatorSpec::htilde(), &[*k as i64], n),
    }
}

/// `H_ν.1` for an arbitrary integer vector.
pub fn hall_littlewood_word(nu: &IntVector) -> Result<PExpansion, Error> {
    let e = nu.entries();
    word_on_vacuum(&OperatorSpec::hall_littlewood(), e, word_truncation(e))
}

/// Product of `1 - t^j` over `j ≤ m_i(μ)` for every part size.
pub fn b_mu(mu: &Partition) -> RatFunc {
    mu.multiplicities().iter().fold(RatFunc::one(), |acc, &(_, m)| {
        (1..=m).fold(acc, |acc, j| &acc * &RatFunc::one_minus_t_pow(j))
    })
}

fn polynomial(value: RatFunc, what: &str) -> Result<LaurentPoly, Error> {
    value
        .to_laurent()
        .map_err(|e| Error::InvariantViolation(format!("{what}: {e}")))
}

fn integer(value: RatFunc, what: &str) -> Result<BigInt, Error> {
    value
        .to_integer()
        .map_err(|e| Error::InvariantViolation(format!("{what}: {e}")))
}

/// Coefficients computed as inner products of basis vectors.
///
/// Basis vectors are memoized; the caps refuse any weight beyond the
/// configured truncation instead of silently truncating.
#[derive(Debug)]
pub struct Oracle {
    cap: u32,
    cache: RwLock<HashMap<Basis, Arc<PExpansion>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::with_cap(max_degree_from_env())
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: u32) -> Self {
        Oracle {
            cap,
            cache: RwLock::default(),
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn check(&self, n: u32) -> Result<(), Error> {
        if n > self.cap {
            return Err(Error::TruncationOverflow {
                degree: n as usize,
                max_degree: self.cap as usize,
            });
        }
        Ok(())
    }

    pub fn basis(&self, kind: &Basis) -> Result<Arc<PExpansion>, Error> {
        self.check(kind.weight())?;
        if let Some(v) = self.cache.read().expect("cache lock").get(kind) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(basis_vector(kind)?);
        self.cache
            .write()
            .expect("cache lock")
            .entry(kind.clone())
            .or_insert_with(|| Arc::clone(&v));
        Ok(v)
    }

    /// `K⁻_{ξμ}(t) = ⟨H_μ.1, Q_ξ.1⟩`.
    pub fn spin_kostka(&self, xi: &StrictPartition, mu: &Partition) -> Result<LaurentPoly, Error> {
        if xi.weight() != mu.weight() {
            return Ok(LaurentPoly::zero());
        }
        let h = self.basis(&Basis::HallLittlewood(mu.clone()))?;
        let q = self.basis(&Basis::SchurQ(xi.clone()))?;
        polynomial(inner(&h, &q, Form::T), &format!("K⁻ at ξ={xi:?}, μ={mu:?}"))
    }

    /// `b_{ξλ} = ⟨s_λ, Q_ξ⟩_0`.
    pub fn b(&self, xi: &StrictPartition, lambda: &Partition) -> Result<BigInt, Error> {
        if xi.weight() != lambda.weight() {
            return Ok(BigInt::from(0));
        }
        let s = self.basis(&Basis::Schur(lambda.clone()))?;
        let q = self.basis(&Basis::SchurQ(xi.clone()))?;
        integer(inner(&s, &q, Form::Zero), &format!("b at ξ={xi:?}, λ={lambda:?}"))
    }

    /// `K_{λμ}(t) = ⟨s_λ, Q_μ(x;t)⟩`.
    pub fn kostka_foulkes(&self, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly, Error> {
        if lambda.weight() != mu.weight() {
            return Ok(LaurentPoly::zero());
        }
        let s = self.basis(&Basis::Schur(lambda.clone()))?;
        let h = self.basis(&Basis::HallLittlewood(mu.clone()))?;
        polynomial(inner(&s, &h, Form::T), &format!("K at λ={lambda:?}, μ={mu:?}"))
    }

    /// `Σ_λ b_{ξλ} K_{λμ}(t)`.
    pub fn spin_via_bk(&self, xi: &StrictPartition, mu: &Partition) -> Result<LaurentPoly, Error> {
        if xi.weight() != mu.weight() {
            return Ok(LaurentPoly::zero());
        }
        let mut total = LaurentPoly::zero();
        for lambda in Partition::all(mu.weight()) {
            let b = self.b(xi, &lambda)?;
            if b != BigInt::from(0) {
                total += &self.kostka_foulkes(&lambda, mu)?.scale(&b);
            }
        }
        Ok(total)
    }

    /// `P_μ(x;-1) = Σ_λ g_{μλ} s_λ` with `P_μ = Q_μ(x;t)/b_μ(t)`; coefficients
    /// are reduced before evaluating at `t = -1`.
    pub fn p_at_minus_one(&self, mu: &Partition) -> Result<PExpansion, Error> {
        let h = self.basis(&Basis::HallLittlewood(mu.clone()))?;
        let inv = b_mu(mu).recip()?;
        h.scale(&inv).eval_at(&BigRational::from_integer(BigInt::from(-1)))
    }

    pub fn g_general(&self, mu: &Partition, lambda: &Partition) -> Result<BigInt, Error> {
        if mu.weight() != lambda.weight() {
            return Ok(BigInt::from(0));
        }
        let p = self.p_at_minus_one(mu)?;
        let s = self.basis(&Basis::Schur(lambda.clone()))?;
        integer(inner(&s, &p, Form::Zero), &format!("g at μ={mu:?}, λ={lambda:?}"))
    }

    /// `H_ν.1` straightened in the power-sum basis.
    pub fn straighten(&self, nu: &IntVector) -> Result<PExpansion, Error> {
        self.check(word_truncation(nu.entries()))?;
        hall_littlewood_word(nu)
    }
}

/// `1/z_λ(t)` as a check value for `q_n`.
pub fn inverse_z_t(lambda: &Partition) -> RatFunc {
    crate::combinatorics::z_lambda_t(lambda)
        .recip()
        .expect("z_λ(t) is nonzero")
}
