use crate::error::Error;
use crate::poly::LaurentPoly;

/// The t-analogues used throughout the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TBracket {
    /// `[n] = 1 + t + ... + t^{n-1}`
    Int(u32),
    /// `[n]! = [n][n-1]...[1]`
    Factorial(u32),
    /// `[n]!! = [n][n-2]...`, down to `[1]` or `[2]`
    DoubleFactorial(u32),
    /// Gauss binomial `[n]! / ([k]! [n-k]!)`
    Binomial(u32, u32),
}

pub fn t_int(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, 1)))
}

pub fn t_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &t_int(k))
}

pub fn t_double_factorial(n: u32) -> LaurentPoly {
    (1..=n)
        .rev()
        .step_by(2)
        .fold(LaurentPoly::one(), |acc, k| &acc * &t_int(k))
}

/// Gauss binomial; zero when `k > n`.
pub fn t_binomial(n: u32, k: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let num = t_factorial(n);
    let den = &t_factorial(k) * &t_factorial(n - k);
    num.div_exact(&den).expect("t-binomial division is exact")
}

pub fn t_bracket(kind: TBracket) -> Result<LaurentPoly, Error> {
    Ok(match kind {
        TBracket::Int(n) => t_int(n),
        TBracket::Factorial(n) => t_factorial(n),
        TBracket::DoubleFactorial(n) => t_double_factorial(n),
        TBracket::Binomial(n, k) if k > n => {
            return Err(Error::ContractViolation(format!(
                "t-binomial needs k ≤ n, got n={n}, k={k}"
            )))
        }
        TBracket::Binomial(n, k) => t_binomial(n, k),
    })
}
