use super::partition::IntVector;

/// A weak composition together with its number of positive entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakComposition {
    pub entries: IntVector,
    pub support: usize,
}

/// Iterator over all vectors of `positions` nonnegative integers summing to
/// `k`, in decreasing lexicographic order: `(k,0,..,0)` first, `(0,..,0,k)`
/// last.
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    current: Option<Vec<i64>>,
}

/// Enumerates weak compositions of `k` into `positions` parts.
pub fn weak_compositions(k: u32, positions: usize) -> WeakCompositions {
    let current = match positions {
        0 if k == 0 => Some(Vec::new()),
        0 => None,
        p => {
            let mut v = vec![0i64; p];
            v[0] = k as i64;
            Some(v)
        }
    };
    WeakCompositions { current }
}

impl Iterator for WeakCompositions {
    type Item = WeakComposition;

    fn next(&mut self) -> Option<WeakComposition> {
        let v = self.current.take()?;
        let n = v.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&j| v[j] > 0) {
                let mut next = v.clone();
                let tail: i64 = next[i + 1..].iter().sum();
                next[i] -= 1;
                for x in &mut next[i + 1..] {
                    *x = 0;
                }
                next[i + 1] = tail + 1;
                self.current = Some(next);
            }
        }
        let support = v.iter().filter(|&&x| x > 0).count();
        Some(WeakComposition {
            entries: IntVector(v),
            support,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(k: u32, p: usize) -> Vec<Vec<i64>> {
        weak_compositions(k, p).map(|c| c.entries.0).collect()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_cases() {
        assert_eq!(collect(1, 2), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(collect(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(collect(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(collect(0, 0), vec![Vec::<i64>::new()]);
        assert!(collect(2, 0).is_empty());
    }

    #[test]
    fn counts_and_supports() {
        for k in 0..7u32 {
            for p in 1..6usize {
                let all: Vec<_> = weak_compositions(k, p).collect();
                assert_eq!(all.len() as u64, binom(k as u64 + p as u64 - 1, p as u64 - 1));
                for c in &all {
                    assert_eq!(c.entries.sum(), k as i64);
                    assert_eq!(c.support, c.entries.0.iter().filter(|&&x| x > 0).count());
                }
                let mut dedup = all.iter().map(|c| c.entries.clone()).collect::<Vec<_>>();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }
}
