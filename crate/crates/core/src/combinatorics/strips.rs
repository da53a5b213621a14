use super::partition::Partition;

/// All partitions `ρ ⊆ λ` such that `λ/ρ` is a vertical `k`-strip: exactly
/// `k` cells removed, at most one per row. `k = 0` gives `{λ}`; `k = |λ|` can
/// give the empty partition.
pub fn vertical_strip_subshapes(lambda: &Partition, k: u32) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    if k as usize > parts.len() {
        return out;
    }
    let mut removed = vec![false; parts.len()];
    fn rec(parts: &[u32], i: usize, left: u32, removed: &mut Vec<bool>, out: &mut Vec<Partition>) {
        let rows_left = parts.len() - i;
        if (left as usize) > rows_left {
            return;
        }
        if i == parts.len() {
            let rho = parts
                .iter()
                .zip(removed.iter())
                .map(|(&p, &r)| p - r as u32)
                .filter(|&p| p > 0)
                .collect();
            out.push(Partition::from_sorted_unchecked(rho));
            return;
        }
        // ρ must stay weakly decreasing.
        let prev_ok = |remove: bool, removed: &Vec<bool>| -> bool {
            if i == 0 {
                return true;
            }
            let prev = parts[i - 1] - removed[i - 1] as u32;
            parts[i] - remove as u32 <= prev
        };
        if prev_ok(false, removed) {
            removed[i] = false;
            rec(parts, i + 1, left, removed, out);
        }
        if left > 0 && prev_ok(true, removed) {
            removed[i] = true;
            rec(parts, i + 1, left - 1, removed, out);
            removed[i] = false;
        }
    }
    rec(parts, 0, k, &mut removed, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    /// Independent check: filter every subdiagram by the strip conditions.
    fn brute(lambda: &Partition, k: u32) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=lambda.weight())
            .flat_map(Partition::all)
            .filter(|rho| lambda.contains(rho))
            .filter(|rho| lambda.weight() - rho.weight() == k)
            .filter(|rho| (0..lambda.length()).all(|i| lambda.part(i) - rho.part(i) <= 1))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn examples() {
        let mut s = vertical_strip_subshapes(&partition![2, 2, 1], 2);
        s.sort();
        assert_eq!(s, vec![partition![1, 1, 1], partition![2, 1]]);
        let mut s = vertical_strip_subshapes(&partition![2, 2, 1], 1);
        s.sort();
        assert_eq!(s, vec![partition![2, 1, 1], partition![2, 2]]);
        assert!(vertical_strip_subshapes(&partition![3], 2).is_empty());
        assert_eq!(vertical_strip_subshapes(&partition![2, 1], 0), vec![partition![2, 1]]);
        assert_eq!(vertical_strip_subshapes(&partition![1, 1], 2), vec![Partition::empty()]);
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 0..=8 {
            for lambda in Partition::all(n) {
                for k in 0..=n + 1 {
                    let mut fast = vertical_strip_subshapes(&lambda, k);
                    fast.sort();
                    assert_eq!(fast, brute(&lambda, k), "λ={lambda:?} k={k}");
                }
            }
        }
    }
}
