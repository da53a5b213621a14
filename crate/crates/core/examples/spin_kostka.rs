// Single spin Kostka polynomials from the memoized recurrence.

use spin_kostka::cli::bracket_form;
use spin_kostka::{partition, strict, SpinKostkaEngine};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let engine = SpinKostkaEngine::new();
    let cells = [
        (strict![3, 1], partition![2, 2]),
        (strict![4, 3, 1], partition![3, 3, 2]),
        (strict![3, 2], partition![2, 1, 1, 1]),
        (strict![3, 2, 1], partition![2, 2, 1, 1]),
        (strict![5, 1], partition![2, 1, 1, 1, 1]),
    ];
    for (xi, mu) in &cells {
        let k = engine.spin_kostka(xi, mu);
        println!("K⁻_{{{xi:?},{mu:?}}} = {k}    = {}", bracket_form(&k));
    }
    assert_eq!(
        engine.spin_kostka(&strict![3, 1], &partition![2, 2]).to_string(),
        "4*t + 4"
    );
    // Not palindromic, unlike the Kostka-Foulkes polynomials.
    assert!(!engine
        .spin_kostka(&strict![3, 2], &partition![2, 1, 1, 1])
        .is_palindromic());
    println!("memo holds {} entries", engine.cache_len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("spin_kostka example");
}
