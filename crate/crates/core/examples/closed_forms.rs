// One-row, two-part and hook closed forms against the recurrence.

use spin_kostka::engine::{kostka_hook, spin_kostka_one_row, spin_kostka_two_part, EngineConfig};
use spin_kostka::{partition, Partition, SpinKostkaEngine, StrictPartition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let engine = SpinKostkaEngine::with_config(EngineConfig::recurrence_only());
    let mut checked = 0;
    for n in 1..=7 {
        for mu in Partition::all(n) {
            assert_eq!(
                spin_kostka_one_row(&mu),
                engine.spin_kostka(&StrictPartition::new(vec![n])?, &mu)
            );
            checked += 1;
            if mu.length() <= 2 {
                for xi in StrictPartition::all(n) {
                    assert_eq!(spin_kostka_two_part(&xi, &mu)?, engine.spin_kostka(&xi, &mu));
                    checked += 1;
                }
            }
        }
    }
    println!("{checked} closed-form cells agree with the recurrence");
    println!(
        "K_{{(5),(3,2)}} via one-row form: {}",
        spin_kostka_one_row(&partition![3, 2])
    );
    println!("K_{{(3,1),(2,1,1)}} = {}", kostka_hook(4, 1, &partition![2, 1, 1])?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("closed_forms example");
}
