use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use crate::combinatorics::{t_int, Partition, StrictPartition};
use crate::error::Error;
use crate::poly::LaurentPoly;

/// One computed cell: `{"xi":[..],"mu":[..],"poly":{"<exp>":<coeff>}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinRecord {
    pub xi: StrictPartition,
    pub mu: Partition,
    pub poly: LaurentPoly,
}

/// One `b_{ξλ}` cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BRecord {
    pub xi: StrictPartition,
    pub lambda: Partition,
    #[serde(with = "bigint_number")]
    pub b: BigInt,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::ContractViolation(msg.into())
}

fn number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

fn parse_bigint(v: &Value) -> Result<BigInt, Error> {
    match v {
        Value::Number(n) => {
            BigInt::from_str(&n.to_string()).map_err(|_| bad(format!("coefficient {n} is not an integer")))
        }
        other => Err(bad(format!("coefficient {other} is not a number"))),
    }
}

mod bigint_number {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Value;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        super::number(n).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let v = Value::deserialize(d)?;
        super::parse_bigint(&v).map_err(serde::de::Error::custom)
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), number(c));
    }
    Value::Object(m)
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, Error> {
    let obj = v.as_object().ok_or_else(|| bad("poly must be an object"))?;
    let mut terms = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let e: i64 = k
            .parse()
            .map_err(|_| bad(format!("exponent key {k:?} is not an integer")))?;
        terms.push((e, parse_bigint(c)?));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl SpinRecord {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("xi".into(), serde_json::to_value(&self.xi).expect("parts serialize"));
        m.insert("mu".into(), serde_json::to_value(&self.mu).expect("parts serialize"));
        m.insert("poly".into(), poly_to_json(&self.poly));
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let field = |name: &str| v.get(name).ok_or_else(|| bad(format!("missing field {name:?}")));
        let xi = StrictPartition::deserialize(field("xi")?).map_err(|e| bad(e.to_string()))?;
        let mu = Partition::deserialize(field("mu")?).map_err(|e| bad(e.to_string()))?;
        let poly = poly_from_json(field("poly")?)?;
        Ok(SpinRecord { xi, mu, poly })
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        let v: Value = serde_json::from_str(s).map_err(|e| bad(e.to_string()))?;
        Self::from_json(&v)
    }
}

/// Product form with t-integers, e.g. `4t[2]^2` or `2[4]`: content, then the
/// power of `t`, then `[k]` factors split off greedily from the largest `k`;
/// any remaining factor is printed in parentheses.
pub fn bracket_form(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let content = p.content();
    let lead_negative = p
        .terms()
        .next_back()
        .map(|(_, c)| c.sign() == num_bigint::Sign::Minus)
        .unwrap_or(false);
    let content = if lead_negative { -content } else { content };
    let mut rest = p.div_exact_int(&content).expect("content divides");
    let shift = rest.valuation().expect("nonzero");
    rest = rest.shift_exponent(-shift);
    let mut factors: BTreeMap<u32, u32> = BTreeMap::new();
    let mut k = rest.degree().expect("nonzero") as u32 + 1;
    while k >= 2 {
        match rest.div_exact(&t_int(k)) {
            Some(q) => {
                *factors.entry(k).or_default() += 1;
                rest = q;
            }
            None => k -= 1,
        }
    }
    let mut out = String::new();
    let one = BigInt::from(1);
    if content == -one.clone() {
        out.push('-');
    } else if content != one {
        out.push_str(&content.to_string());
    }
    match shift {
        0 => {}
        1 => out.push('t'),
        s => out.push_str(&format!("t^{s}")),
    }
    for (k, m) in factors.iter().rev() {
        out.push_str(&format!("[{k}]"));
        if *m > 1 {
            out.push_str(&format!("^{m}"));
        }
    }
    if rest != LaurentPoly::one() {
        out.push_str(&format!("({rest})"));
    }
    if out.is_empty() || out == "-" {
        out.push('1');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{partition, strict};

    #[test]
    fn json_roundtrip() {
        let r = SpinRecord {
            xi: strict![3, 1],
            mu: partition![2, 2],
            poly: LaurentPoly::from_coeffs(&[4, 4]),
        };
        let text = r.to_json().to_string();
        assert_eq!(text, r#"{"xi":[3,1],"mu":[2,2],"poly":{"0":4,"1":4}}"#);
        assert_eq!(SpinRecord::parse(&text).unwrap(), r);
        let big = LaurentPoly::monomial(3, BigInt::from(10).pow(30));
        assert_eq!(poly_from_json(&poly_to_json(&big)).unwrap(), big);
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket_form(&LaurentPoly::from_coeffs(&[2, 2, 2, 2])), "2[4]");
        assert_eq!(bracket_form(&LaurentPoly::from_coeffs(&[0, 8, 16, 8])), "8t[2]^2");
        assert_eq!(bracket_form(&LaurentPoly::from_coeffs(&[4])), "4");
        assert_eq!(bracket_form(&LaurentPoly::from_coeffs(&[0, 1])), "t");
        assert_eq!(
            bracket_form(&LaurentPoly::from_coeffs(&[0, 8, 12, 8, 4])),
            "4t[2](t^2 + t + 2)"
        );
    }
}
