// Coefficients `b_{ξλ}` of Schur Q-functions in Schur functions, and the
// two-row formula.

use spin_kostka::schur::{b_two_row, count_ns};
use spin_kostka::{partition, strict, Partition, SchurExpansion};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let schur = SchurExpansion::new();
    let b = schur.b_coeff(&strict![4, 3], &partition![2, 2, 2, 1]);
    println!("b_{{(4,3),(2,2,2,1)}} = {b}");
    assert_eq!(b, 4.into());

    let xi = strict![5, 2];
    for lambda in Partition::all(7) {
        let b = schur.b_coeff(&xi, &lambda);
        if b != 0.into() {
            assert_eq!(b_two_row(7, 2, &lambda)?, b);
            println!("  b_{{(5,2),{lambda:?}}} = {b}");
        }
    }
    println!("N^(1)(4,2,1) = {}", count_ns(&partition![4, 2, 1], 1));
    println!("g_{{(5,2),(3,2,2)}} = {}", schur.g_coeff(&xi, &partition![3, 2, 2])?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("schur_b example");
}
