// Partitions, strict partitions, dominance and the statistics used by the
// closed forms.

use spin_kostka::combinatorics::{classify_shape, n_stat, z_lambda, Partition, StrictPartition};
use spin_kostka::{dominates, partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mu: Partition = "3,2,1,1".parse()?;
    println!("μ = {mu:?}, |μ| = {}, l(μ) = {}", mu.weight(), mu.length());
    println!(
        "conjugate {:?}, n(μ) = {}, z_μ = {}",
        mu.conjugate(),
        n_stat(&mu),
        z_lambda(&mu)
    );
    println!("shape: {:?}", classify_shape(&mu));

    assert!(dominates(&partition![4, 3], &mu));
    assert!(!dominates(&partition![2, 2, 2, 1], &partition![3, 1, 1, 1, 1]));
    assert!("3,3".parse::<StrictPartition>().is_err());

    for n in 1..=8 {
        println!(
            "n = {n}: {} partitions, {} strict",
            Partition::all(n).len(),
            StrictPartition::all(n).len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("partitions example");
}
