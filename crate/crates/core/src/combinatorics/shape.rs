use super::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `(λ₁, 1^{m₁})`, including the empty partition.
    Hook,
    /// `(λ₁, λ₂, 2^{m₂}, 1^{m₁})` with `λ₂ ≥ 2`.
    DoubleHookProper,
    Other,
}

/// Hook / double-hook classification with the decomposition
/// `(λ₁, λ₂, m₂, m₁)`; for hooks `λ₂ = m₂ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShapeClass {
    pub kind: ShapeKind,
    pub lambda1: u32,
    pub lambda2: u32,
    pub m2: u32,
    pub m1: u32,
}

impl ShapeClass {
    pub fn is_hook(&self) -> bool {
        self.kind == ShapeKind::Hook
    }

    /// Hooks are double hooks too.
    pub fn is_double_hook(&self) -> bool {
        self.kind != ShapeKind::Other
    }

    /// Rebuilds the partition from its decomposition; `None` for `Other`.
    pub fn reconstruct(&self) -> Option<Partition> {
        let mut parts = Vec::new();
        match self.kind {
            ShapeKind::Other => return None,
            ShapeKind::Hook => {
                if self.lambda1 > 0 {
                    parts.push(self.lambda1);
                }
            }
            ShapeKind::DoubleHookProper => {
                parts.push(self.lambda1);
                parts.push(self.lambda2);
                parts.extend(std::iter::repeat_n(2, self.m2 as usize));
            }
        }
        parts.extend(std::iter::repeat_n(1, self.m1 as usize));
        Some(Partition::from_sorted_unchecked(parts))
    }
}

pub fn classify_shape(lambda: &Partition) -> ShapeClass {
    let p = lambda.parts();
    let other = ShapeClass {
        kind: ShapeKind::Other,
        lambda1: 0,
        lambda2: 0,
        m2: 0,
        m1: 0,
    };
    if p.len() <= 1 || p[1] == 1 {
        return ShapeClass {
            kind: ShapeKind::Hook,
            lambda1: lambda.part(0),
            lambda2: 0,
            m2: 0,
            m1: p.len().saturating_sub(1) as u32,
        };
    }
    let rest = &p[2..];
    if rest.iter().any(|&x| x > 2) {
        return other;
    }
    ShapeClass {
        kind: ShapeKind::DoubleHookProper,
        lambda1: p[0],
        lambda2: p[1],
        m2: rest.iter().filter(|&&x| x == 2).count() as u32,
        m1: rest.iter().filter(|&&x| x == 1).count() as u32,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn examples() {
        let c = classify_shape(&partition![5, 1, 1]);
        assert_eq!((c.kind, c.lambda1, c.m1), (ShapeKind::Hook, 5, 2));
        let c = classify_shape(&partition![2, 2, 2, 1]);
        assert_eq!(
            (c.kind, c.lambda1, c.lambda2, c.m2, c.m1),
            (ShapeKind::DoubleHookProper, 2, 2, 1, 1)
        );
        assert_eq!(classify_shape(&partition![3, 3, 3]).kind, ShapeKind::Other);
        let e = classify_shape(&Partition::empty());
        assert_eq!((e.kind, e.lambda1, e.m1), (ShapeKind::Hook, 0, 0));
    }

    #[test]
    fn reconstruction() {
        for n in 0..=10 {
            for lambda in Partition::all(n) {
                let c = classify_shape(&lambda);
                match c.reconstruct() {
                    Some(r) => assert_eq!(r, lambda),
                    None => assert!(lambda.part(2) >= 3),
                }
            }
        }
    }
}
