use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{classify_shape, dominates, n_stat, Partition, StrictPartition};
use crate::engine::{spin_kostka_one_row, spin_kostka_two_part, EngineConfig, SpinKostkaEngine};
use crate::oracle::{verify_relations, Oracle, RelationConfig};
use crate::poly::LaurentPoly;
use crate::schur::{b_two_row, count_ns, count_ns_brute, g_square, g_square_alternating, SchurExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Relations,
    Tables,
    Properties,
    Oracle,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Extra lines printed under the status line.
    pub details: String,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            checks: 0,
            failures: Vec::new(),
            details: String::new(),
        }
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} ({} checks)", self.name, self.checks)?;
        for line in self.details.lines() {
            writeln!(f, "    {line}")?;
        }
        for w in self.failures.iter().take(10) {
            writeln!(f, "    failed: {w}")?;
        }
        Ok(())
    }
}

fn pairs(n: u32) -> impl Iterator<Item = (StrictPartition, Partition)> {
    let mus = Partition::all(n);
    StrictPartition::all(n)
        .into_iter()
        .flat_map(move |xi| mus.clone().into_iter().map(move |mu| (xi.clone(), mu)))
}

pub fn run_suite(suite: Suite, max_n: u32, seed: u64) -> Vec<SuiteOutcome> {
    match suite {
        Suite::Relations => vec![relations(max_n, seed)],
        Suite::Tables => vec![tables(max_n)],
        Suite::Properties => vec![properties(max_n)],
        Suite::Oracle => vec![oracle(max_n)],
        Suite::All => vec![relations(max_n, seed), tables(max_n), properties(max_n), oracle(max_n)],
    }
}

fn relations(max_n: u32, seed: u64) -> SuiteOutcome {
    let cap = crate::oracle::max_degree_from_env();
    let cfg = RelationConfig::fitted(max_n.min(5), cap, seed);
    let report = verify_relations(&cfg);
    let mut out = SuiteOutcome::new("relations");
    out.details = report.to_string();
    for c in &report.checks {
        out.checks += c.cases;
        out.failures
            .extend(c.failures.iter().map(|w| format!("{}: {w}", c.name)));
    }
    out
}

/// Recurrence against the closed forms, the fast paths and the `b` formulas.
fn tables(max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("tables");
    let fast = SpinKostkaEngine::new();
    let slow = SpinKostkaEngine::with_config(EngineConfig::recurrence_only());
    let schur = SchurExpansion::new();
    for n in 1..=max_n {
        for (xi, mu) in pairs(n) {
            let k = slow.spin_kostka(&xi, &mu);
            out.expect(fast.spin_kostka(&xi, &mu) == k, || {
                format!("fast path at ξ={xi:?}, μ={mu:?}")
            });
            if xi.length() == 1 {
                out.expect(spin_kostka_one_row(&mu) == k, || format!("one-row form at μ={mu:?}"));
            }
            if mu.length() <= 2 {
                let c = spin_kostka_two_part(&xi, &mu).ok();
                out.expect(c.as_ref() == Some(&k), || {
                    format!("two-part form at ξ={xi:?}, μ={mu:?}")
                });
            }
            if xi.length() == 2 && n >= 3 {
                let b = b_two_row(n, xi.part(1), &mu).ok();
                out.expect(b == Some(schur.b_coeff(&xi, &mu)), || {
                    format!("two-row b at ξ={xi:?}, λ={mu:?}")
                });
            }
        }
        for lambda in Partition::all(n) {
            for s in -1..=n as i64 {
                out.expect(count_ns(&lambda, s) == count_ns_brute(&lambda, s), || {
                    format!("N^({s}) at λ={lambda:?}")
                });
            }
        }
        if n % 2 == 0 {
            let r = n / 2;
            for lambda in Partition::all(n) {
                let closed = g_square(r, &lambda).ok();
                let alt = g_square_alternating(&schur, r, &lambda).ok();
                out.expect(closed.is_some() && closed == alt, || {
                    format!("square g at r={r}, λ={lambda:?}")
                });
            }
        }
    }
    out
}

/// Vanishing, divisibility, specialization, leading blocks, stability, the
/// degree bound, the `t = 0` bridge and duality.
fn properties(max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("properties");
    let engine = SpinKostkaEngine::new();
    let schur = SchurExpansion::new();
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let zero = BigRational::zero();
    for n in 1..=max_n {
        for (xi, mu) in pairs(n) {
            let k = engine.spin_kostka(&xi, &mu);
            let l = xi.length();
            let two_l = BigInt::from(1) << l;
            let w = || format!("ξ={xi:?}, μ={mu:?}");
            if !dominates(xi.as_partition(), &mu) {
                out.expect(k.is_zero(), || format!("vanishing at {}", w()));
            }
            out.expect(k.div_exact_int(&two_l).is_some(), || {
                format!("2^l divisibility at {}", w())
            });
            let at_minus_one = k.eval_at(&minus_one).expect("polynomial");
            let expected = if xi.as_partition() == &mu {
                two_l.clone()
            } else {
                BigInt::zero()
            };
            out.expect(at_minus_one == BigRational::from_integer(expected), || {
                format!("t=-1 value at {}", w())
            });
            out.expect(k.is_zero() || k.degree().unwrap() <= n_stat(&mu) as i64, || {
                format!("degree bound at {}", w())
            });
            let at_zero = k.eval_at(&zero).expect("polynomial");
            out.expect(at_zero == BigRational::from_integer(schur.b_coeff(&xi, &mu)), || {
                format!("t=0 bridge at {}", w())
            });
            let shared = xi.parts().iter().zip(mu.parts()).take_while(|(a, b)| a == b).count();
            for j in 1..=shared {
                let tail = engine.spin_kostka(&xi.tail(j), &mu.tail(j));
                out.expect(k == tail.scale(&(BigInt::from(1) << j)), || {
                    format!("leading block {j} at {}", w())
                });
            }
            if mu.part(0) > xi.part(1) {
                for r in 1..=3 {
                    let shifted = engine.spin_kostka(&xi.add_to_first(r), &mu.add_to_first(r));
                    out.expect(shifted == k, || format!("stability r={r} at {}", w()));
                }
            }
            let g = schur.g_coeff(&xi, &mu);
            let g_conj = schur.g_coeff(&xi, &mu.conjugate());
            out.expect(g.is_ok() && g == g_conj, || format!("duality at {}", w()));
            if l == 1 {
                let hook = classify_shape(&mu).is_hook();
                out.expect(
                    schur.b_coeff(&xi, &mu) == BigInt::from(if hook { 2 } else { 0 }),
                    || format!("hook rule at {}", w()),
                );
            }
        }
        for xi in StrictPartition::all(n) {
            let k = engine.spin_kostka(&xi, xi.as_partition());
            out.expect(k == LaurentPoly::constant(BigInt::from(1) << xi.length()), || {
                format!("diagonal at ξ={xi:?}")
            });
        }
    }
    out
}

/// Recurrence and formulas against inner products of vertex-operator
/// expansions.
fn oracle(max_n: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("oracle");
    let oracle = Oracle::new();
    let engine = SpinKostkaEngine::new();
    let schur = SchurExpansion::new();
    let max_n = max_n.min(oracle.cap());
    for n in 1..=max_n {
        for (xi, mu) in pairs(n) {
            let o = oracle.spin_kostka(&xi, &mu);
            out.expect(o.as_ref().ok() == Some(&engine.spin_kostka(&xi, &mu)), || {
                format!("K⁻ at ξ={xi:?}, μ={mu:?}: oracle {o:?}")
            });
            let b = oracle.b(&xi, &mu);
            out.expect(b.as_ref().ok() == Some(&schur.b_coeff(&xi, &mu)), || {
                format!("b at ξ={xi:?}, λ={mu:?}: oracle {b:?}")
            });
            if n <= 6 {
                let via = oracle.spin_via_bk(&xi, &mu);
                out.expect(via.ok() == o.ok(), || format!("Σ bK at ξ={xi:?}, μ={mu:?}"));
            }
        }
        if n % 2 == 0 {
            let r = n / 2;
            let square = Partition::new(vec![r, r]).expect("two equal parts");
            for lambda in Partition::all(n) {
                let g = oracle.g_general(&square, &lambda);
                out.expect(g.ok() == g_square(r, &lambda).ok(), || {
                    format!("square g at r={r}, λ={lambda:?}")
                });
            }
        }
    }
    out
}
