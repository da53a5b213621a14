// `g_{(r,r),λ}`: the closed form against the alternating sum of `b`.

use spin_kostka::schur::{g_square, g_square_alternating};
use spin_kostka::{Partition, SchurExpansion};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let schur = SchurExpansion::new();
    for r in 1..=5u32 {
        let row: Vec<String> = (0..2 * r)
            .map(|j| {
                let mut parts = vec![2 * r - j];
                parts.extend(std::iter::repeat_n(1, j as usize));
                let hook = Partition::new(parts).expect("hook");
                g_square(r, &hook).expect("closed form").to_string()
            })
            .collect();
        println!("r = {r}: g on hooks (2r-j,1^j), j = 0.. : {}", row.join(" "));
    }
    for lambda in Partition::all(8) {
        assert_eq!(g_square(4, &lambda)?, g_square_alternating(&schur, 4, &lambda)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("square_g example");
}
