//! Rewriting `H_ν.1` for an arbitrary integer vector `ν` into the basis
//! `{H_λ.1 : λ a partition}` of Hall–Littlewood functions.
//!
//! Adjacent ascents `ν_i < ν_{i+1}` are removed with the quadratic relation
//! `H_m H_n = t H_n H_m + t H_{m+1} H_{n-1} - H_{n-1} H_{m+1}`, either
//! unrolled into the shift moves `S_{i,a}` with closed-form coefficients
//! ([`step_coeff`]) or applied one step at a time ([`RewriteRule::Primitive`]).
//! Vacuum rules: `H_0.1 = 1` and `H_{-m}.1 = 0` for `m > 0`, so a trailing
//! zero is dropped and a trailing negative entry kills the term.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use crate::combinatorics::{IntVector, Partition};
use crate::error::Error;
use crate::poly::LaurentPoly;

/// Expansion of `H_ν.1` in the Hall–Littlewood basis `H_λ.1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StraightenResult {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl StraightenResult {
    pub fn terms(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    fn add_scaled(&mut self, other: &StraightenResult, c: &LaurentPoly) {
        for (lambda, x) in &other.terms {
            let entry = self.terms.entry(lambda.clone()).or_default();
            *entry += &(c * x);
            if entry.is_zero() {
                self.terms.remove(lambda);
            }
        }
    }

    fn single(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, LaurentPoly::one());
        StraightenResult { terms }
    }
}

/// `C(S_{i,a})` for an ascent of size `gap`:
/// `t` for `a = 0`, `t^{a+1} - t^{a-1}` for `1 ≤ a < ⌊gap/2⌋`, and
/// `t^{a+ε} - t^{a-1}` at `a = ⌊gap/2⌋` with `ε = gap mod 2`.
pub fn step_coeff(gap: i64, a: i64) -> Result<LaurentPoly, Error> {
    let half = gap / 2;
    if gap <= 0 || a < 0 || a > half {
        return Err(Error::ContractViolation(format!(
            "step coefficient needs gap > 0 and 0 ≤ a ≤ ⌊gap/2⌋, got gap={gap}, a={a}"
        )));
    }
    Ok(if a == 0 {
        LaurentPoly::t()
    } else if a < half {
        LaurentPoly::from_terms([(a + 1, 1), (a - 1, -1)])
    } else {
        LaurentPoly::from_terms([(a + gap % 2, 1), (a - 1, -1)])
    })
}

/// Which ascent is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AscentChoice {
    #[default]
    Leftmost,
    Rightmost,
}

/// How an ascent is rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RewriteRule {
    /// All shift moves `S_{i,a}`, `0 ≤ a ≤ ⌊gap/2⌋`, in one step.
    #[default]
    Shift,
    /// The two-term quadratic relation only, with the gap-1 case as the
    /// plain swap `H_n H_{n+1} = t H_{n+1} H_n`.
    Primitive,
}

/// Memoizing straightener. The cache is keyed by the normalized vector and
/// guarded by a lock, so one instance can be shared across threads.
#[derive(Debug, Default)]
pub struct Straightener {
    choice: AscentChoice,
    rule: RewriteRule,
    cache: RwLock<HashMap<Vec<i64>, Arc<StraightenResult>>>,
}

/// Drops trailing zeros; `None` when a trailing negative entry annihilates
/// the vacuum.
fn normalize(v: &[i64]) -> Option<&[i64]> {
    let mut v = v;
    while let [rest @ .., last] = v {
        match *last {
            0 => v = rest,
            x if x < 0 => return None,
            _ => break,
        }
    }
    Some(v)
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_strategy(choice: AscentChoice, rule: RewriteRule) -> Self {
        Straightener {
            choice,
            rule,
            cache: RwLock::default(),
        }
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    pub fn straighten(&self, nu: &IntVector) -> Arc<StraightenResult> {
        let Some(v) = normalize(nu.entries()) else {
            return Arc::new(StraightenResult::default());
        };
        if let Some(hit) = self.cache.read().expect("cache lock").get(v) {
            return Arc::clone(hit);
        }
        let result = Arc::new(self.compute(v));
        self.cache
            .write()
            .expect("cache lock")
            .entry(v.to_vec())
            .or_insert_with(|| Arc::clone(&result));
        result
    }

    fn compute(&self, v: &[i64]) -> StraightenResult {
        let ascents = (0..v.len().saturating_sub(1)).filter(|&i| v[i] < v[i + 1]);
        let pos = match self.choice {
            AscentChoice::Leftmost => ascents.min(),
            AscentChoice::Rightmost => ascents.max(),
        };
        let Some(i) = pos else {
            // weakly decreasing, and normalization removed zeros/negatives
            // at the end, so every entry is positive
            let parts = v.iter().map(|&x| x as u32).collect();
            return StraightenResult::single(Partition::from_sorted_unchecked(parts));
        };
        let (m, n) = (v[i], v[i + 1]);
        let mut out = StraightenResult::default();
        for (coeff, (a, b)) in self.rewrite(m, n) {
            let mut w = v.to_vec();
            w[i] = a;
            w[i + 1] = b;
            let sub = self.straighten(&IntVector(w));
            out.add_scaled(&sub, &coeff);
        }
        out
    }

    /// Replacements for the adjacent pair `(m, n)`, `m < n`.
    fn rewrite(&self, m: i64, n: i64) -> Vec<(LaurentPoly, (i64, i64))> {
        let gap = n - m;
        match self.rule {
            RewriteRule::Shift => (0..=gap / 2)
                .map(|a| (step_coeff(gap, a).expect("a in range"), (n - a, m + a)))
                .collect(),
            RewriteRule::Primitive if gap == 1 => vec![(LaurentPoly::t(), (n, m))],
            RewriteRule::Primitive => vec![
                (LaurentPoly::t(), (n, m)),
                (LaurentPoly::t(), (m + 1, n - 1)),
                (-LaurentPoly::one(), (n - 1, m + 1)),
            ],
        }
    }
}

/// Uncached one-shot straightening with the default strategy.
pub fn straighten_to_vacuum(nu: &IntVector) -> StraightenResult {
    Straightener::new().straighten(nu).as_ref().clone()
}
