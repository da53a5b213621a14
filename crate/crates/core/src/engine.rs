//! The spin Kostka recurrence.
//!
//! With `ξ` strict and `μ` a partition of the same weight,
//!
//! ```text
//! K⁻_{ξμ} = Σ_{i : ξ_i ≥ μ_1} (-1)^{i-1} 2 Σ_{(c, ν) ∈ h̃*_{ξ_i-μ_1} H_{μ^{[1]}}} c Σ_λ B(λ, ν) K⁻_{ξ^î, λ}
//! ```
//!
//! where the inner sum is [`htilde_expand`] and `B(λ, ν)` comes from
//! straightening `H_ν.1`. The base case is `K⁻_{∅∅} = 1`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{dominates, n_stat, t_binomial, weak_compositions, IntVector, Partition, StrictPartition};
use crate::error::Error;
use crate::poly::LaurentPoly;
use crate::straighten::Straightener;

/// Memo key for `K⁻_{ξμ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpinKostkaKey {
    pub xi: StrictPartition,
    pub mu: Partition,
}

/// A formal sum `Σ c · H_ν` of Hall–Littlewood operator words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TermSum(pub Vec<(LaurentPoly, IntVector)>);

impl TermSum {
    pub fn iter(&self) -> impl Iterator<Item = &(LaurentPoly, IntVector)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `h̃*_k H_μ = Σ_τ t^{k-l(τ)} (1+t)^{l(τ)} H_{μ-τ}` over weak compositions
/// `τ` of `k` placed on the positions of `μ`; `l(τ)` counts positive entries.
///
/// Placements beyond `l(μ)` would leave a trailing negative index, which
/// vanishes on the vacuum, so they are not generated.
pub fn htilde_expand(k: u32, mu: &Partition) -> TermSum {
    let base = mu.to_int_vector();
    let one_plus_t = LaurentPoly::from_coeffs(&[1, 1]);
    TermSum(
        weak_compositions(k, mu.length())
            .map(|tau| {
                let l = tau.support as u32;
                let c = one_plus_t.pow(l).shift_exponent(k as i64 - l as i64);
                (c, base.sub(&tau.entries))
            })
            .collect(),
    )
}

/// `K⁻_{(n)μ} = t^{n(μ)} ∏_{i=1}^{l(μ)} (1 + t^{1-i})`.
pub fn spin_kostka_one_row(mu: &Partition) -> LaurentPoly {
    let product = (1..=mu.length() as i64).fold(LaurentPoly::one(), |acc, i| {
        &acc * &LaurentPoly::from_terms([(0, 1), (1 - i, 1)])
    });
    product.shift_exponent(n_stat(mu) as i64)
}

/// Closed form for `l(μ) ≤ 2`: `2^{2-δ_{0,ξ_2}} t^{ξ_1-μ_1}(1+t^{-1})` when
/// `ξ > μ`, `2^{l(ξ)}` when `ξ = μ`, zero otherwise. One-part `μ` uses
/// `K⁻_{ξ(n)} = 2δ_{ξ,(n)}`.
pub fn spin_kostka_two_part(xi: &StrictPartition, mu: &Partition) -> Result<LaurentPoly, Error> {
    if mu.length() > 2 || xi.weight() != mu.weight() {
        return Err(Error::ContractViolation(format!(
            "two-part closed form needs l(μ) ≤ 2 and |ξ| = |μ|, got ξ={xi:?}, μ={mu:?}"
        )));
    }
    let xi_p = xi.as_partition();
    Ok(match mu.length() {
        0 => LaurentPoly::one(),
        1 if xi_p == mu => LaurentPoly::constant(2),
        1 => LaurentPoly::zero(),
        _ if xi_p == mu => LaurentPoly::constant(4),
        _ if dominates(xi_p, mu) => {
            let c: i64 = if xi.part(1) == 0 { 2 } else { 4 };
            let e = xi.part(0) as i64 - mu.part(0) as i64;
            LaurentPoly::from_terms([(e, c), (e - 1, c)])
        }
        _ => LaurentPoly::zero(),
    })
}

/// Hook Kostka–Foulkes polynomial
/// `K_{(n-k,1^k)μ}(t) = t^{n(μ) + k(k+1-2l)/2} [l-1 choose k]`, `l = l(μ)`.
pub fn kostka_hook(n: u32, k: u32, mu: &Partition) -> Result<LaurentPoly, Error> {
    if mu.weight() != n || n == 0 || k >= n {
        return Err(Error::ContractViolation(format!(
            "hook formula needs |μ| = n ≥ 1 and 0 ≤ k ≤ n-1, got n={n}, k={k}, μ={mu:?}"
        )));
    }
    let l = mu.length() as i64;
    let k_ = k as i64;
    if k_ >= l {
        return Ok(LaurentPoly::zero());
    }
    let e = n_stat(mu) as i64 + k_ * (k_ + 1 - 2 * l) / 2;
    Ok(t_binomial((l - 1) as u32, k).shift_exponent(e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Consult closed forms (one row, two-part `μ`, equal leading parts)
    /// before recursing.
    pub fast_paths: bool,
    /// Compute closed form and recurrence both and panic on disagreement.
    pub cross_check: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            fast_paths: true,
            cross_check: cfg!(debug_assertions),
        }
    }
}

impl EngineConfig {
    /// Plain recurrence, no shortcuts.
    pub fn recurrence_only() -> Self {
        EngineConfig {
            fast_paths: false,
            cross_check: false,
        }
    }
}

/// Memoizing evaluator of `K⁻_{ξμ}(t)`.
///
/// The cache supports concurrent get-or-insert, so one engine can be shared
/// by reference across threads; results do not depend on evaluation order.
#[derive(Debug, Default)]
pub struct SpinKostkaEngine {
    config: EngineConfig,
    straightener: Straightener,
    cache: RwLock<HashMap<SpinKostkaKey, LaurentPoly>>,
}

impl SpinKostkaEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_config(config: EngineConfig) -> Self {
        SpinKostkaEngine {
            config,
            ..Self::default()
        }
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn straightener(&self) -> &Straightener {
        &self.straightener
    }

    pub fn spin_kostka(&self, xi: &StrictPartition, mu: &Partition) -> LaurentPoly {
        if xi.weight() != mu.weight() {
            return LaurentPoly::zero();
        }
        if xi.is_empty() {
            return LaurentPoly::one();
        }
        let key = SpinKostkaKey {
            xi: xi.clone(),
            mu: mu.clone(),
        };
        if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let value = match self.closed_form(xi, mu) {
            Some(fast) if self.config.cross_check => {
                let slow = self.recurrence(xi, mu);
                assert_eq!(
                    fast, slow,
                    "closed form disagrees with recurrence at ξ={xi:?}, μ={mu:?}"
                );
                fast
            }
            Some(fast) => fast,
            None => self.recurrence(xi, mu),
        };
        self.cache
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(value)
            .clone()
    }

    fn closed_form(&self, xi: &StrictPartition, mu: &Partition) -> Option<LaurentPoly> {
        if !self.config.fast_paths {
            return None;
        }
        if xi.length() == 1 {
            return Some(spin_kostka_one_row(mu));
        }
        if mu.length() <= 2 {
            return spin_kostka_two_part(xi, mu).ok();
        }
        if xi.part(0) == mu.part(0) {
            return Some(self.spin_kostka(&xi.tail(1), &mu.tail(1)).scale(&BigInt::from(2)));
        }
        None
    }

    /// One unrolling of the recurrence; sub-coefficients go through
    /// [`Self::spin_kostka`] and hit the cache.
    pub fn recurrence(&self, xi: &StrictPartition, mu: &Partition) -> LaurentPoly {
        if xi.weight() != mu.weight() {
            return LaurentPoly::zero();
        }
        if xi.is_empty() {
            return LaurentPoly::one();
        }
        let mu1 = mu.part(0);
        let rest = mu.tail(1);
        let mut total = LaurentPoly::zero();
        for (i, &x) in xi.parts().iter().enumerate() {
            if x < mu1 {
                continue;
            }
            let xi_hat = xi.remove_part(i);
            let sign: i64 = if i % 2 == 0 { 2 } else { -2 };
            let mut inner = LaurentPoly::zero();
            for (c, nu) in htilde_expand(x - mu1, &rest).iter() {
                for (lambda, b) in self.straightener.straighten(nu).iter() {
                    let k = self.spin_kostka(&xi_hat, lambda);
                    if !k.is_zero() {
                        inner += &(&(c * b) * &k);
                    }
                }
            }
            total += &inner.scale(&BigInt::from(sign));
        }
        total
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    /// Snapshot of the memo table, sorted by key.
    pub fn cache_entries(&self) -> Vec<(SpinKostkaKey, LaurentPoly)> {
        let mut out: Vec<_> = self
            .cache
            .read()
            .expect("cache lock")
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Seeds the memo table, e.g. from a persisted cache file.
    pub fn preload<I: IntoIterator<Item = (SpinKostkaKey, LaurentPoly)>>(&self, entries: I) {
        let mut cache = self.cache.write().expect("cache lock");
        for (k, v) in entries {
            cache.entry(k).or_insert(v);
        }
    }
}
