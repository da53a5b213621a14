//! Coefficients of `Q_ξ = Σ_λ b_{ξλ} s_λ` and `g_{ξλ} = 2^{-l(ξ)} b_{ξλ}`.
//!
//! `b` satisfies
//! `b_{ξλ} = Σ_i 2(-1)^{i-1} Σ_ρ b_{ξ^î, ρ}` with `λ^{[1]}/ρ` a vertical
//! `(ξ_i - λ_1)`-strip, which for two-row and square `ξ` collapses to counts
//! of hook and double-hook shapes.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{classify_shape, vertical_strip_subshapes, Partition, ShapeKind, StrictPartition};
use crate::error::Error;

/// Memoizing evaluator for `b_{ξλ}` with the same sharing contract as the
/// spin Kostka engine.
#[derive(Debug)]
pub struct SchurExpansion {
    fast_paths: bool,
    cache: RwLock<HashMap<(StrictPartition, Partition), BigInt>>,
}

impl Default for SchurExpansion {
    fn default() -> Self {
        SchurExpansion {
            fast_paths: true,
            cache: RwLock::default(),
        }
    }
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Plain recursion down to `b_{∅∅} = 1`.
    pub fn recurrence_only() -> Self {
        SchurExpansion {
            fast_paths: false,
            cache: RwLock::default(),
        }
    }

    pub fn b_coeff(&self, xi: &StrictPartition, lambda: &Partition) -> BigInt {
        if xi.weight() != lambda.weight() {
            return BigInt::zero();
        }
        if xi.is_empty() {
            return BigInt::one();
        }
        if self.fast_paths && xi.length() == 1 {
            return if classify_shape(lambda).is_hook() {
                BigInt::from(2)
            } else {
                BigInt::zero()
            };
        }
        let key = (xi.clone(), lambda.clone());
        if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let lambda1 = lambda.part(0);
        let rest = lambda.tail(1);
        let mut total = BigInt::zero();
        for (i, &x) in xi.parts().iter().enumerate() {
            if x < lambda1 {
                continue;
            }
            let xi_hat = xi.remove_part(i);
            let inner: BigInt = vertical_strip_subshapes(&rest, x - lambda1)
                .iter()
                .map(|rho| self.b_coeff(&xi_hat, rho))
                .sum();
            if i % 2 == 0 {
                total += inner * 2;
            } else {
                total -= inner * 2;
            }
        }
        self.cache
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(total)
            .clone()
    }

    pub fn g_coeff(&self, xi: &StrictPartition, lambda: &Partition) -> Result<BigInt, Error> {
        let b = self.b_coeff(xi, lambda);
        let d = BigInt::one() << xi.length();
        let (q, r) = b.div_rem(&d);
        if !r.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "b_{{{xi:?},{lambda:?}}} = {b} is not divisible by 2^{}",
                xi.length()
            )));
        }
        Ok(q)
    }
}

/// `N^{(s)}(λ)`: number of hooks `ρ` with `λ^{[1]}/ρ` a vertical `s`-strip,
/// by the closed forms for hooks and double hooks.
pub fn count_ns(lambda: &Partition, s: i64) -> u64 {
    let rest_weight = (lambda.weight() - lambda.part(0)) as i64;
    if s < 0 || s > rest_weight {
        return 0;
    }
    let c = classify_shape(lambda);
    match c.kind {
        ShapeKind::Other => 0,
        ShapeKind::Hook => 1,
        ShapeKind::DoubleHookProper => {
            let (m2, m1) = (c.m2 as i64, c.m1 as i64);
            if s < m2 {
                0
            } else if s == m2 || s == m1 + m2 + 1 {
                1
            } else if s <= m1 + m2 {
                2
            } else {
                0
            }
        }
    }
}

/// `N^{(s)}(λ)` by enumerating the vertical strips.
pub fn count_ns_brute(lambda: &Partition, s: i64) -> u64 {
    if s < 0 {
        return 0;
    }
    vertical_strip_subshapes(&lambda.tail(1), s as u32)
        .iter()
        .filter(|rho| classify_shape(rho).is_hook())
        .count() as u64
}

/// `b_{(n-m,m)λ} = 4(N^{(n-m-λ_1)}(λ) - N^{(m-λ_1)}(λ))`.
pub fn b_two_row(n: u32, m: u32, lambda: &Partition) -> Result<BigInt, Error> {
    if m < 1 || 2 * m >= n || lambda.weight() != n {
        return Err(Error::ContractViolation(format!(
            "two-row formula needs 1 ≤ m < n/2 and |λ| = n, got n={n}, m={m}, λ={lambda:?}"
        )));
    }
    let l1 = lambda.part(0) as i64;
    let hi = count_ns(lambda, n as i64 - m as i64 - l1) as i64;
    let lo = count_ns(lambda, m as i64 - l1) as i64;
    Ok(BigInt::from(4 * (hi - lo)))
}

fn check_square(r: u32, lambda: &Partition) -> Result<(), Error> {
    if r == 0 || lambda.weight() != 2 * r {
        return Err(Error::ContractViolation(format!(
            "square coefficient needs r ≥ 1 and |λ| = 2r, got r={r}, λ={lambda:?}"
        )));
    }
    Ok(())
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `g_{(r,r)λ}`: for a hook `(2r-j, 1^j)` it is `0` if `j < r` and
/// `(-1)^{r+j}` otherwise; for a double hook it is `1` exactly when
/// `λ_2 + m_1 - 1 ≤ λ_1 ≤ λ_2 + m_1 + 1`; zero for other shapes.
pub fn g_square(r: u32, lambda: &Partition) -> Result<BigInt, Error> {
    check_square(r, lambda)?;
    let c = classify_shape(lambda);
    let v = match c.kind {
        ShapeKind::Hook if c.m1 < r => 0,
        ShapeKind::Hook => sign(r + c.m1),
        ShapeKind::DoubleHookProper => {
            let (l1, l2, m1) = (c.lambda1 as i64, c.lambda2 as i64, c.m1 as i64);
            i64::from(l2 + m1 - 1 <= l1 && l1 <= l2 + m1 + 1)
        }
        ShapeKind::Other => 0,
    };
    Ok(BigInt::from(v))
}

/// `g_{(r,r)λ}` from the two-row values:
/// `¼ Σ_{i=0}^{r-1} (-1)^{i+r+1} b_{(2r-i,i)λ} + ½ (-1)^{r+j} [λ = (2r-j, 1^j)]`.
pub fn g_square_alternating(schur: &SchurExpansion, r: u32, lambda: &Partition) -> Result<BigInt, Error> {
    check_square(r, lambda)?;
    let mut sum = BigRational::zero();
    for i in 0..r {
        let xi = StrictPartition::new(vec![2 * r - i, i])?;
        let b = schur.b_coeff(&xi, lambda);
        sum += BigRational::new(b * sign(i + r + 1), BigInt::from(4));
    }
    let c = classify_shape(lambda);
    if c.is_hook() {
        sum += BigRational::new(BigInt::from(sign(r + c.m1)), BigInt::from(2));
    }
    if !sum.is_integer() {
        return Err(Error::InvariantViolation(format!(
            "alternating sum for r={r}, λ={lambda:?} is {sum}, not an integer"
        )));
    }
    Ok(sum.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{partition, strict};

    #[test]
    fn b_examples() {
        let s = SchurExpansion::new();
        assert_eq!(s.b_coeff(&strict![4], &partition![2, 1, 1]), BigInt::from(2));
        assert_eq!(s.b_coeff(&strict![4, 3], &partition![2, 2, 2, 1]), BigInt::from(4));
        assert_eq!(s.b_coeff(&strict![3], &partition![2, 2]), BigInt::zero());
        assert_eq!(s.b_coeff(&strict![3, 2, 1], &partition![3, 2, 1]), BigInt::from(8));
        assert_eq!(
            s.g_coeff(&strict![4, 3], &partition![2, 2, 2, 1]).unwrap(),
            BigInt::one()
        );
        assert_eq!(s.b_coeff(&StrictPartition::empty(), &Partition::empty()), BigInt::one());
    }

    #[test]
    fn fast_path_matches_recursion() {
        let fast = SchurExpansion::new();
        let slow = SchurExpansion::recurrence_only();
        for n in 1..=7 {
            for lambda in Partition::all(n) {
                let xi = StrictPartition::new(vec![n]).unwrap();
                assert_eq!(fast.b_coeff(&xi, &lambda), slow.b_coeff(&xi, &lambda), "{lambda:?}");
            }
        }
    }

    #[test]
    fn ns_examples() {
        let l = partition![2, 2, 2, 1];
        assert_eq!(count_ns(&l, 2), 2);
        assert_eq!(count_ns(&l, 1), 1);
        for s in 0..=2 {
            assert_eq!(count_ns(&partition![5, 1, 1], s), 1);
        }
        for s in -1..=7 {
            assert_eq!(count_ns(&partition![3, 3, 3], s), 0);
        }
    }

    #[test]
    fn ns_closed_form_matches_enumeration() {
        for n in 1..=10 {
            for lambda in Partition::all(n) {
                for s in -1..=(n as i64) {
                    assert_eq!(count_ns(&lambda, s), count_ns_brute(&lambda, s), "λ={lambda:?}, s={s}");
                }
            }
        }
    }

    #[test]
    fn two_row_examples() {
        assert_eq!(b_two_row(7, 3, &partition![2, 2, 2, 1]).unwrap(), BigInt::from(4));
        assert_eq!(b_two_row(4, 1, &partition![2, 1, 1]).unwrap(), BigInt::from(4));
        assert_eq!(b_two_row(6, 1, &partition![6]).unwrap(), BigInt::zero());
        assert!(b_two_row(4, 2, &partition![2, 2]).is_err());
    }

    #[test]
    fn square_examples() {
        assert_eq!(g_square(3, &partition![5, 1]).unwrap(), BigInt::zero());
        assert_eq!(g_square(3, &partition![3, 1, 1, 1]).unwrap(), BigInt::one());
        assert_eq!(g_square(2, &partition![2, 2]).unwrap(), BigInt::one());
        assert!(g_square(2, &partition![2, 1]).is_err());
    }
}
