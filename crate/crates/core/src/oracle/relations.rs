use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::{basis_vector, Basis};
use super::expansion::{inner, Form, PExpansion};
use super::operator::{apply_word, OperatorSpec};
use crate::combinatorics::{vertical_strip_subshapes, Partition, StrictPartition};
use crate::engine::htilde_expand;
use crate::error::Error;
use crate::poly::{QPoly, RatFunc};

/// Parameters for [`verify_relations`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationConfig {
    /// Degree bound of the pseudo-random test vectors and basis elements.
    pub vector_degree: u32,
    /// Operator indices range over `-index_range..=index_range`.
    pub index_range: i64,
    /// Number of random vectors per relation.
    pub vectors: usize,
    pub seed: u64,
}

impl RelationConfig {
    /// Truncation that holds every intermediate of every relation.
    pub fn truncation(&self) -> u32 {
        self.vector_degree + 2 * self.index_range as u32 + 2
    }

    /// Widest index range whose truncation stays within `cap`.
    pub fn fitted(vector_degree: u32, cap: u32, seed: u64) -> Self {
        let room = cap.saturating_sub(vector_degree + 2) / 2;
        RelationConfig {
            vector_degree,
            index_range: room.min(vector_degree) as i64,
            vectors: 2,
            seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub cases: usize,
    /// Human-readable witnesses, one per failing case.
    pub failures: Vec<String>,
}

impl RelationCheck {
    fn new(name: &'static str) -> Self {
        RelationCheck {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, witness: impl FnOnce() -> String, outcome: Result<PExpansion, Error>) {
        self.cases += 1;
        match outcome {
            Ok(diff) if diff.is_zero() => {}
            Ok(diff) => self.failures.push(format!("{}: residue {diff}", witness())),
            Err(e) => self.failures.push(format!("{}: {e}", witness())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<RelationCheck>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} ({} cases)", c.name, c.cases)?;
            for w in c.failures.iter().take(3) {
                writeln!(f, "    {w}")?;
            }
        }
        Ok(())
    }
}

fn t() -> RatFunc {
    RatFunc::t()
}

fn int(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

/// `Σ c_i v_i`.
fn lin(max_degree: u32, terms: Vec<(RatFunc, Result<PExpansion, Error>)>) -> Result<PExpansion, Error> {
    let mut acc = PExpansion::zero(max_degree);
    for (c, v) in terms {
        acc = acc.combine(&v?, &c);
    }
    Ok(acc)
}

fn random_vector(rng: &mut ChaCha8Rng, degree: u32, max_degree: u32, odd_only: bool) -> PExpansion {
    let pool: Vec<Partition> = (0..=degree)
        .flat_map(Partition::all)
        .filter(|p| !odd_only || p.parts().iter().all(|x| x % 2 == 1))
        .collect();
    let mut out = PExpansion::zero(max_degree);
    for lambda in pool.choose_multiple(rng, 4) {
        let a = rng.gen_range(-3i64..=3);
        let b = rng.gen_range(-2i64..=2);
        let c = RatFunc::from_poly(QPoly::from_ints(&[a, b]));
        out.add_term(lambda.clone(), &c).expect("degree within truncation");
    }
    out
}

struct Ops {
    h: OperatorSpec,
    hs: OperatorSpec,
    q: OperatorSpec,
    qs: OperatorSpec,
    ht: OperatorSpec,
    hts: OperatorSpec,
    sp: OperatorSpec,
    sm: OperatorSpec,
    ep: OperatorSpec,
    em: OperatorSpec,
}

impl Ops {
    fn new() -> Self {
        Ops {
            h: OperatorSpec::hall_littlewood(),
            hs: OperatorSpec::hall_littlewood_adjoint(),
            q: OperatorSpec::schur_q(),
            qs: OperatorSpec::schur_q_adjoint(),
            ht: OperatorSpec::htilde(),
            hts: OperatorSpec::htilde_adjoint(),
            sp: OperatorSpec::schur_plus(),
            sm: OperatorSpec::schur_minus(),
            ep: OperatorSpec::e_plus(),
            em: OperatorSpec::e_minus(),
        }
    }
}

fn word(w: &[(&OperatorSpec, i64)], v: &PExpansion) -> Result<PExpansion, Error> {
    apply_word(w, v)
}

fn delta(a: i64, b: i64) -> i64 {
    i64::from(a == b)
}

fn with_truncation(v: &PExpansion, max_degree: u32) -> PExpansion {
    PExpansion::from_terms(max_degree, v.iter().map(|(k, c)| (k.clone(), c.clone()))).expect("fits")
}

/// Checks the commutation relations, the vacuum rules, the Clifford
/// relations, the mixed relations with `h̃`, and the iterative formulas,
/// each on every index pair in range.
pub fn verify_relations(cfg: &RelationConfig) -> Report {
    let ops = Ops::new();
    let max = cfg.truncation();
    let r = cfg.index_range;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let vectors: Vec<PExpansion> = (0..cfg.vectors)
        .map(|_| random_vector(&mut rng, cfg.vector_degree, max, false))
        .collect();
    // the Clifford relations hold on the subring generated by odd power sums
    let odd_vectors: Vec<PExpansion> = (0..cfg.vectors)
        .map(|_| random_vector(&mut rng, cfg.vector_degree, max, true))
        .collect();
    let vac = PExpansion::vacuum(max);
    let idx = || -r..=r;
    let one_minus_t_sq = RatFunc::one_minus_t_pow(1).pow(2);
    let mut checks = Vec::new();

    let mut c = RelationCheck::new("com1");
    for v in &vectors {
        for m in idx() {
            for n in idx() {
                let h = &ops.h;
                let diff = lin(
                    max,
                    vec![
                        (int(1), word(&[(h, m), (h, n)], v)),
                        (-&t(), word(&[(h, n), (h, m)], v)),
                        (-&t(), word(&[(h, m + 1), (h, n - 1)], v)),
                        (int(1), word(&[(h, n - 1), (h, m + 1)], v)),
                    ],
                );
                c.record(|| format!("m={m}, n={n}"), diff);
            }
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("com2");
    for v in &vectors {
        for m in idx() {
            for n in idx() {
                let h = &ops.hs;
                let diff = lin(
                    max,
                    vec![
                        (int(1), word(&[(h, m), (h, n)], v)),
                        (-&t(), word(&[(h, n), (h, m)], v)),
                        (-&t(), word(&[(h, m - 1), (h, n + 1)], v)),
                        (int(1), word(&[(h, n + 1), (h, m - 1)], v)),
                    ],
                );
                c.record(|| format!("m={m}, n={n}"), diff);
            }
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("com3");
    for v in &vectors {
        for m in idx() {
            for n in idx() {
                let (h, hs) = (&ops.h, &ops.hs);
                let diff = lin(
                    max,
                    vec![
                        (int(1), word(&[(h, m), (hs, n)], v)),
                        (-&t(), word(&[(hs, n), (h, m)], v)),
                        (-&t(), word(&[(h, m - 1), (hs, n - 1)], v)),
                        (int(1), word(&[(hs, n - 1), (h, m - 1)], v)),
                        (
                            one_minus_t_sq.scale(&BigRational::from_integer(BigInt::from(-delta(m, n)))),
                            Ok(v.clone()),
                        ),
                    ],
                );
                c.record(|| format!("m={m}, n={n}"), diff);
            }
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("com4");
    for n in 0..=r {
        let expected = vac.scale(&int(delta(n, 0)));
        for (op, idx_sign) in [(&ops.h, -1), (&ops.q, -1), (&ops.hs, 1), (&ops.qs, 1)] {
            let diff = op.apply(idx_sign * n, &vac).map(|x| x.sub(&expected));
            c.record(|| format!("{}_{} .1", op.name, idx_sign * n), diff);
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("clifford");
    for v in &odd_vectors {
        for m in idx() {
            for n in idx() {
                let q = &ops.q;
                let sign = if n.rem_euclid(2) == 0 { 2 } else { -2 };
                let diff = lin(
                    max,
                    vec![
                        (int(1), word(&[(q, m), (q, n)], v)),
                        (int(1), word(&[(q, n), (q, m)], v)),
                        (int(-sign * delta(m, -n)), Ok(v.clone())),
                    ],
                );
                c.record(|| format!("m={m}, n={n}"), diff);
            }
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("adjacent-swap");
    for v in &vectors {
        for n in idx() {
            let (h, hs) = (&ops.h, &ops.hs);
            let diff = lin(
                max,
                vec![
                    (int(1), word(&[(h, n), (h, n + 1)], v)),
                    (-&t(), word(&[(h, n + 1), (h, n)], v)),
                ],
            );
            c.record(|| format!("H, n={n}"), diff);
            let diff = lin(
                max,
                vec![
                    (int(1), word(&[(hs, n), (hs, n - 1)], v)),
                    (-&t(), word(&[(hs, n - 1), (hs, n)], v)),
                ],
            );
            c.record(|| format!("H*, n={n}"), diff);
        }
    }
    checks.push(c);

    // t H*_n Q_m = H*_{n-1} Q_{m-1} + Q_m H*_n + Q_{m-1} H*_{n-1} + 2(t-1) h̃_{m-n}
    let mut c = RelationCheck::new("rel1");
    for v in &vectors {
        for m in idx() {
            for n in idx() {
                let (hs, q, ht) = (&ops.hs, &ops.q, &ops.ht);
                let diff = lin(
                    max,
                    vec![
                        (t(), word(&[(hs, n), (q, m)], v)),
                        (int(-1), word(&[(hs, n - 1), (q, m - 1)], v)),
                        (int(-1), word(&[(q, m), (hs, n)], v)),
                        (int(-1), word(&[(q, m - 1), (hs, n - 1)], v)),
                        (int(-2) * (&t() - &int(1)), word(&[(ht, m - n)], v)),
                    ],
                );
                c.record(|| format!("m={m}, n={n}"), diff);
            }
        }
    }
    checks.push(c);

    let one_plus_t = &int(1) + &t();
    let mut c = RelationCheck::new("rel2");
    for v in &vectors {
        for m in 0..=r {
            for n in idx() {
                let (h, hts) = (&ops.h, &ops.hts);
                let mut terms = vec![
                    (int(1), word(&[(hts, m), (h, n)], v)),
                    (int(-1), word(&[(h, n), (hts, m)], v)),
                ];
                for k in 0..m {
                    let coeff = -&(&one_plus_t * &RatFunc::t_pow((m - k - 1) as usize));
                    terms.push((coeff, word(&[(h, n - m + k), (hts, k)], v)));
                }
                c.record(|| format!("m={m}, n={n}"), lin(max, terms));
            }
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("rel3");
    for v in &vectors {
        for n in idx() {
            for m in 0..=r {
                let (q, ht) = (&ops.q, &ops.ht);
                let mut terms = vec![
                    (int(1), word(&[(q, n), (ht, m)], v)),
                    (int(-1), word(&[(ht, m), (q, n)], v)),
                ];
                for k in 0..m {
                    let sign = if (m - k) % 2 == 0 { -1 } else { 1 };
                    terms.push((
                        one_plus_t.scale(&BigRational::from_integer(sign.into())),
                        word(&[(ht, k), (q, n - k + m)], v),
                    ));
                }
                c.record(|| format!("n={n}, m={m}"), lin(max, terms));
            }
        }
    }
    checks.push(c);

    let strict: Vec<StrictPartition> = (1..=cfg.vector_degree).flat_map(StrictPartition::all).collect();
    let partitions: Vec<Partition> = (1..=cfg.vector_degree).flat_map(Partition::all).collect();
    let q_word = |xi: &StrictPartition| -> Result<PExpansion, Error> {
        let w: Vec<(&OperatorSpec, i64)> = xi.parts().iter().map(|&p| (&ops.q, p as i64)).collect();
        word(&w, &vac)
    };

    // H*_k Q_ξ.1 = Σ_i (-1)^{i-1} 2 h̃_{ξ_i-k} Q_{ξ^î}.1 and its t = 0 shadow
    // S⁻_k Q_ξ.1 = Σ_i (-1)^{i-1} 2 e_{ξ_i-k} Q_{ξ^î}.1, for k ≥ 1
    // (at k = 0 already H*_0 Q_1.1 = 2t p_1 while the right side is 2h̃_1)
    for (name, lower, mult) in [("iterative", &ops.hs, &ops.ht), ("iterative2", &ops.sm, &ops.ep)] {
        let mut c = RelationCheck::new(name);
        for xi in &strict {
            for k in 1..=r.max(1) {
                let diff = (|| {
                    let mut acc = lower.apply(k, &q_word(xi)?)?;
                    for (i, &x) in xi.parts().iter().enumerate() {
                        let rest = q_word(&xi.remove_part(i))?;
                        let term = mult.apply(x as i64 - k, &rest)?;
                        let sign = if i % 2 == 0 { -2 } else { 2 };
                        acc = acc.combine(&term, &int(sign));
                    }
                    Ok(acc)
                })();
                c.record(|| format!("ξ={xi:?}, k={k}"), diff);
            }
        }
        checks.push(c);
    }

    let mut c = RelationCheck::new("hH");
    for mu in &partitions {
        let hword = |nu: &[i64]| -> Result<PExpansion, Error> {
            let w: Vec<(&OperatorSpec, i64)> = nu.iter().map(|&p| (&ops.h, p)).collect();
            word(&w, &vac)
        };
        let mu_vec: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
        for k in 0..=r as u32 {
            let diff = (|| {
                let mut acc = ops.hts.apply(k as i64, &hword(&mu_vec)?)?;
                for (coeff, nu) in htilde_expand(k, mu).iter() {
                    acc = acc.combine(&hword(nu.entries())?, &-&RatFunc::from(coeff));
                }
                Ok(acc)
            })();
            c.record(|| format!("μ={mu:?}, k={k}"), diff);
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("gS");
    for lambda in &partitions {
        let s = |p: &Partition| basis_vector(&Basis::Schur(p.clone())).map(|v| with_truncation(&v, max));
        for k in 0..=r as u32 {
            let diff = (|| {
                let mut acc = ops.em.apply(k as i64, &s(lambda)?)?;
                for rho in vertical_strip_subshapes(lambda, k) {
                    acc = acc.sub(&s(&rho)?);
                }
                Ok(acc)
            })();
            c.record(|| format!("λ={lambda:?}, k={k}"), diff);
        }
    }
    checks.push(c);

    let mut c = RelationCheck::new("adjoint");
    for (u, w) in vectors.iter().zip(vectors.iter().rev()) {
        for n in idx() {
            for (op, adj, form) in [
                (&ops.h, &ops.hs, Form::T),
                (&ops.q, &ops.qs, Form::T),
                (&ops.ht, &ops.hts, Form::T),
                (&ops.sp, &ops.sm, Form::Zero),
                (&ops.ep, &ops.em, Form::Zero),
            ] {
                let diff = (|| {
                    let lhs = inner(&op.apply(n, u)?, w, form);
                    let rhs = inner(u, &adj.apply(n, w)?, form);
                    let d = &lhs - &rhs;
                    Ok(PExpansion::vacuum(max).scale(&d))
                })();
                c.record(|| format!("{} n={n}", op.name), diff);
            }
        }
    }
    checks.push(c);

    Report { checks }
}
