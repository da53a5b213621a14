// The vertex-operator oracle: power-sum expansions over ℚ(t) and inner
// products.

use spin_kostka::oracle::{Basis, Oracle};
use spin_kostka::{partition, strict, SpinKostkaEngine};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let oracle = Oracle::with_cap(8);
    let q = oracle.basis(&Basis::SchurQ(strict![2, 1]))?;
    println!("Q_(2,1) = {q}");

    let engine = SpinKostkaEngine::new();
    let (xi, mu) = (strict![4, 2], partition![2, 2, 1, 1]);
    let direct = oracle.spin_kostka(&xi, &mu)?;
    assert_eq!(direct, engine.spin_kostka(&xi, &mu));
    assert_eq!(direct, oracle.spin_via_bk(&xi, &mu)?);
    println!("K⁻_{{(4,2),(2,2,1,1)}} = {direct} on all three paths");
    println!(
        "K_{{(3,1),(2,1,1)}} = {}",
        oracle.kostka_foulkes(&partition![3, 1], &partition![2, 1, 1])?
    );

    // Weights above the cap are refused rather than silently truncated.
    assert!(oracle.spin_kostka(&strict![9], &partition![9]).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oracle example");
}
