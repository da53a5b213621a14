#![allow(dead_code)]

use std::path::PathBuf;

use spin_kostka::{LaurentPoly, Partition, StrictPartition};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// One transcribed table cell with its value expanded.
#[derive(Clone, Debug)]
pub struct TableCell {
    pub n: u32,
    pub xi: StrictPartition,
    pub mu: Partition,
    pub notation: String,
    pub value: LaurentPoly,
}

pub fn published_tables() -> Vec<TableCell> {
    let text = std::fs::read_to_string(data_path("published_tables.txt")).expect("table transcription");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(f.len(), 4, "bad line {l:?}");
            TableCell {
                n: f[0].parse().unwrap(),
                xi: f[1].parse().unwrap(),
                mu: f[2].parse().unwrap(),
                notation: f[3].to_string(),
                value: parse_brackets(f[3]),
            }
        })
        .collect()
}

fn bracket(k: u32) -> LaurentPoly {
    LaurentPoly::from_coeffs(&vec![1; k as usize])
}

fn product(ks: impl Iterator<Item = u32>) -> LaurentPoly {
    ks.fold(LaurentPoly::one(), |acc, k| &acc * &bracket(k))
}

/// Expands notation such as `4t^2[5][6]!!/[3]` or `4[2]([4]+t^2)`.
pub fn parse_brackets(s: &str) -> LaurentPoly {
    let mut p = Parser { s: s.as_bytes(), i: 0 };
    let v = p.sum();
    assert_eq!(p.i, s.len(), "trailing input in {s:?}");
    v
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> u32 {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .expect("integer")
    }

    fn sum(&mut self) -> LaurentPoly {
        let mut v = self.product();
        while self.eat(b'+') {
            v += &self.product();
        }
        v
    }

    fn product(&mut self) -> LaurentPoly {
        let mut v = self.factor();
        loop {
            match self.peek() {
                Some(b'/') => {
                    self.i += 1;
                    let d = self.factor();
                    v = v.div_exact(&d).expect("exact quotient");
                }
                Some(c) if c == b'[' || c == b'(' || c == b't' || c.is_ascii_digit() => v = &v * &self.factor(),
                _ => return v,
            }
        }
    }

    fn factor(&mut self) -> LaurentPoly {
        let base = match self.peek().expect("factor") {
            b'(' => {
                self.i += 1;
                let v = self.sum();
                assert!(self.eat(b')'));
                v
            }
            b't' => {
                self.i += 1;
                LaurentPoly::monomial(1, 1)
            }
            b'[' => {
                self.i += 1;
                let k = self.int();
                assert!(self.eat(b']'));
                if self.eat(b'!') {
                    if self.eat(b'!') {
                        product((1..=k).rev().step_by(2))
                    } else {
                        product(1..=k)
                    }
                } else {
                    bracket(k)
                }
            }
            _ => LaurentPoly::constant(self.int()),
        };
        if self.eat(b'^') {
            base.pow(self.int())
        } else {
            base
        }
    }
}
