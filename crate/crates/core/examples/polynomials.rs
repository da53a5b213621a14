// Laurent polynomials over ℤ, t-integers and rational functions in `t`.

use spin_kostka::combinatorics::{t_binomial, t_double_factorial, t_int};
use spin_kostka::poly::RatFunc;
use spin_kostka::LaurentPoly;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let two = t_int(2);
    let p = &two * &two;
    println!("[2]^2 = {p}");
    assert_eq!(p.to_string(), "t^2 + 2*t + 1");
    println!("[6]!! = {}", t_double_factorial(6));
    println!("[4 choose 2] = {}", t_binomial(4, 2));

    // [4][6]!! / [3] stays a polynomial.
    let q = (&t_int(4) * &t_double_factorial(6))
        .div_exact(&t_int(3))
        .ok_or("not divisible")?;
    println!("[4][6]!!/[3] = {q}");

    let f = RatFunc::from(&LaurentPoly::from_coeffs(&[1, 0, -1]));
    let g = &f / &RatFunc::one_minus_t_pow(1);
    println!("(1 - t^2)/(1 - t) = {g}");
    assert_eq!(g.to_laurent()?, t_int(2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("polynomials example");
}
