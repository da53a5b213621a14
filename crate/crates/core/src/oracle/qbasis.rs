//! `H_ν.1` in the basis of products `q_λ = q_{λ_1} q_{λ_2} ⋯` of one-row
//! Hall–Littlewood functions, read off the normal-ordered product
//!
//! `H(z_1)⋯H(z_l).1 = ∏_{i<j} (1 - z_j/z_i)/(1 - t z_j/z_i) · Q(z_1)⋯Q(z_l).1`
//!
//! with `Q(z).1 = Σ_n q_n z^n`. Expanding `(1 - x)/(1 - tx) = 1 + Σ_{k≥1} (t^k - t^{k-1}) x^k`
//! turns the coefficient of `z^ν` into a finite raising-operator sum, exact
//! over `ℤ[t]` and cheap at weights the power-sum route cannot reach.

use std::collections::BTreeMap;

use super::basis::{basis_vector, Basis};
use super::expansion::PExpansion;
use crate::combinatorics::{IntVector, Partition};
use crate::error::Error;
use crate::poly::{LaurentPoly, RatFunc};

/// `Σ c_λ q_λ` with `c_λ ∈ ℤ[t]`; zero coefficients are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QExpansion {
    coeffs: BTreeMap<Partition, LaurentPoly>,
}

impl QExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, LaurentPoly> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    /// `self + c · other`.
    pub fn add_scaled(&mut self, other: &QExpansion, c: &LaurentPoly) {
        for (lambda, x) in &other.coeffs {
            self.add_term(lambda.clone(), &(c * x));
        }
    }

    /// The same element in the power-sum basis, truncated at its weight.
    pub fn to_power_sums(&self) -> Result<PExpansion, Error> {
        let weight = self.coeffs.keys().map(Partition::weight).max().unwrap_or(0);
        let mut out = PExpansion::zero(weight);
        for (lambda, c) in &self.coeffs {
            let mut prod = PExpansion::vacuum(weight);
            for &part in lambda.parts() {
                prod = prod.mul(&basis_vector(&Basis::HallLittlewood(Partition::new(vec![part])?))?)?;
            }
            out = out.combine(&prod, &RatFunc::from(c));
        }
        Ok(out)
    }
}

fn raising_coeff(k: i64) -> LaurentPoly {
    if k == 0 {
        LaurentPoly::one()
    } else {
        &LaurentPoly::monomial(k, 1) - &LaurentPoly::monomial(k - 1, 1)
    }
}

/// `H_ν.1` for an arbitrary integer vector, in the `q_λ` basis.
pub fn hall_littlewood_word_q(nu: &IntVector) -> QExpansion {
    let mut out = QExpansion::zero();
    let mut alpha = nu.entries().to_vec();
    if alpha.is_empty() {
        out.add_term(Partition::empty(), &LaurentPoly::one());
        return out;
    }
    let last = alpha.len() - 1;
    column(last, &mut alpha, LaurentPoly::one(), &mut out);
    out
}

/// Chooses the exponents `k_{ij}` for `i < j`, columns right to left, so that
/// entry `j` is final once its column is chosen.
fn column(j: usize, alpha: &mut Vec<i64>, coeff: LaurentPoly, out: &mut QExpansion) {
    if alpha[j] < 0 {
        return;
    }
    if j == 0 {
        let parts: Vec<u32> = alpha.iter().filter(|&&a| a > 0).map(|&a| a as u32).collect();
        out.add_term(Partition::from_unsorted(parts), &coeff);
        return;
    }
    distribute(j, 0, alpha, coeff, out);
}

/// Moves `k_{ij}` units from entry `j` to entry `i`, for `i = row, …, j-1`.
fn distribute(j: usize, row: usize, alpha: &mut Vec<i64>, coeff: LaurentPoly, out: &mut QExpansion) {
    if row == j {
        column(j - 1, alpha, coeff, out);
        return;
    }
    let budget = alpha[j];
    for k in 0..=budget {
        alpha[j] -= k;
        alpha[row] += k;
        distribute(j, row + 1, alpha, &coeff * &raising_coeff(k), out);
        alpha[j] += k;
        alpha[row] -= k;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::hall_littlewood_word;

    fn vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        (0..len).fold(vec![vec![]], |acc, _| {
            acc.into_iter()
                .flat_map(|v| (lo..=hi).map(move |x| [v.clone(), vec![x]].concat()))
                .collect()
        })
    }

    #[test]
    fn one_row_and_vacuum() {
        let q = hall_littlewood_word_q(&IntVector(vec![3]));
        assert_eq!(q.coeffs().len(), 1);
        assert_eq!(q.coeffs()[&Partition::new(vec![3]).unwrap()], LaurentPoly::one());
        assert!(hall_littlewood_word_q(&IntVector(vec![2, -1])).is_zero());
        assert_eq!(
            hall_littlewood_word_q(&IntVector(vec![0, 0])),
            hall_littlewood_word_q(&IntVector(vec![]))
        );
    }

    #[test]
    fn agrees_with_power_sums() {
        for len in 1..=3 {
            for v in vectors(len, -2, 4) {
                let nu = IntVector(v);
                let q = hall_littlewood_word_q(&nu).to_power_sums().unwrap();
                let p = hall_littlewood_word(&nu).unwrap();
                assert_eq!(q.coeffs(), p.coeffs(), "ν = {:?}", nu.entries());
            }
        }
    }
}
