use num_bigint::BigInt;
use num_traits::One;

use super::partition::Partition;
use crate::poly::{QPoly, RatFunc};

/// The standard statistics of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// `z_λ = ∏ i^{m_i} m_i!`
    pub z: BigInt,
    /// `z_λ(t) = z_λ / ∏ (1 - t^{λ_i})`
    pub z_t: RatFunc,
    /// `n(λ) = Σ (i-1) λ_i`
    pub n_stat: u64,
    /// `(-1)^{|λ| - l(λ)}`
    pub eps: i32,
    /// `l(λ)! / ∏ m_i!`
    pub u: BigInt,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda.multiplicities().into_iter().fold(BigInt::one(), |acc, (i, m)| {
        acc * BigInt::from(i).pow(m as u32) * factorial(m)
    })
}

pub fn z_lambda_t(lambda: &Partition) -> RatFunc {
    let den = lambda.parts().iter().fold(QPoly::one(), |acc, &p| {
        &acc * RatFunc::one_minus_t_pow(p as usize).numerator()
    });
    RatFunc::new(QPoly::constant(z_lambda(lambda).into()), den).expect("nonzero denominator")
}

pub fn n_stat(lambda: &Partition) -> u64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p as u64)
        .sum()
}

pub fn parity(lambda: &Partition) -> i32 {
    if (lambda.weight() as usize - lambda.length()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn partition_stats(lambda: &Partition) -> PartitionStats {
    let u = lambda
        .multiplicities()
        .into_iter()
        .fold(factorial(lambda.length()), |acc, (_, m)| acc / factorial(m));
    PartitionStats {
        z: z_lambda(lambda),
        z_t: z_lambda_t(lambda),
        n_stat: n_stat(lambda),
        eps: parity(lambda),
        u,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn inv_one_minus(ks: &[usize], c: i64) -> RatFunc {
        ks.iter()
            .fold(RatFunc::from_int(c), |acc, &k| &acc / &RatFunc::one_minus_t_pow(k))
    }

    #[test]
    fn examples() {
        let s = partition_stats(&partition![1]);
        assert_eq!((s.z, s.n_stat, s.eps, s.u), (1.into(), 0, 1, 1.into()));
        assert_eq!(s.z_t, inv_one_minus(&[1], 1));

        let s = partition_stats(&partition![2, 1]);
        assert_eq!((s.z, s.n_stat, s.eps, s.u), (2.into(), 1, -1, 2.into()));
        assert_eq!(s.z_t, inv_one_minus(&[2, 1], 2));

        let s = partition_stats(&partition![1, 1, 1]);
        assert_eq!((s.z, s.n_stat, s.u), (6.into(), 3, 1.into()));

        let s = partition_stats(&Partition::empty());
        assert_eq!((s.z, s.n_stat, s.eps, s.u), (1.into(), 0, 1, 1.into()));
        assert_eq!(s.z_t, RatFunc::one());
    }

    #[test]
    fn n_stat_via_conjugate() {
        for n in 0..=10 {
            for lambda in Partition::all(n) {
                let via_conj: u64 = lambda
                    .conjugate()
                    .parts()
                    .iter()
                    .map(|&c| c as u64 * (c as u64).saturating_sub(1) / 2)
                    .sum();
                assert_eq!(n_stat(&lambda), via_conj);
            }
        }
    }

    #[test]
    fn inverse_z_t_sums() {
        for n in 1..=8u32 {
            let mut plain = RatFunc::zero();
            let mut signed = RatFunc::zero();
            for lambda in Partition::all(n) {
                let inv = z_lambda_t(&lambda).recip().unwrap();
                plain = &plain + &inv;
                if lambda.length() % 2 == 1 {
                    signed = &signed - &inv;
                } else {
                    signed = &signed + &inv;
                }
            }
            assert_eq!(plain, RatFunc::one_minus_t_pow(1));
            let expected = &RatFunc::t_pow(n as usize) - &RatFunc::t_pow(n as usize - 1);
            assert_eq!(signed, expected);
        }
    }
}
