// Rewriting `H_ν.1` for an integer vector into partition-indexed terms.

use spin_kostka::straighten::{straighten_to_vacuum, AscentChoice, RewriteRule, Straightener};
use spin_kostka::IntVector;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for v in [vec![1, 2], vec![1, 3], vec![0, 2, 2], vec![2, -1], vec![-1, 3]] {
        let nu = IntVector(v);
        let r = straighten_to_vacuum(&nu);
        let terms: Vec<String> = r.iter().map(|(l, c)| format!("({c})·H_{l:?}")).collect();
        println!(
            "H_{:?}.1 = {}",
            nu.entries(),
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        );
    }

    // Both ascent orders and both rewrite rules agree.
    let nu = IntVector(vec![1, 0, 4, 2]);
    let reference = straighten_to_vacuum(&nu);
    for choice in [AscentChoice::Leftmost, AscentChoice::Rightmost] {
        for rule in [RewriteRule::Shift, RewriteRule::Primitive] {
            let s = Straightener::with_strategy(choice, rule);
            assert_eq!(*s.straighten(&nu), reference);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("straighten example");
}
