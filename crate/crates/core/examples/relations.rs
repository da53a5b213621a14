// Commutation relations checked as operator identities on random vectors.

use spin_kostka::oracle::{verify_relations, RelationConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RelationConfig {
        vector_degree: 3,
        index_range: 2,
        vectors: 2,
        seed: 7,
    };
    let report = verify_relations(&cfg);
    print!("{report}");
    if !report.passed() {
        return Err("a relation failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("relations example");
}
