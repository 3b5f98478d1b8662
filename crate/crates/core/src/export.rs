//! Flat exports of the coefficient table: OEIS-style b-files and JSON lines.

use std::io::{BufRead, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::coeffs::{to_binomial_int, Basis, BinomPoly};
use crate::error::{Error, Result};
use crate::pseq::expected_degree;
use crate::{IntPoly, PSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// Constant term first.
    Ascending,
    /// Leading coefficient first.
    Descending,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Binomial => "binomial",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "power" => Ok(Basis::Power),
            "binomial" => Ok(Basis::Binomial),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// Coefficients of `P_n`, highest order first, in the given basis.
pub fn row(seq: &PSequence, n: i64, basis: Basis) -> Result<Vec<BigInt>> {
    let p = seq.get(n);
    match basis {
        Basis::Power => Ok(p.descending()),
        Basis::Binomial => Ok(to_binomial_int(p, expected_degree(n))?.into_coeffs()),
    }
}

/// One `index value` line per coefficient, rows `n = 1, 2, ...` flattened in
/// the given order, indices starting at 1.
pub fn write_bfile<W: Write>(out: &mut W, seq: &PSequence, basis: Basis, order: Order) -> Result<()> {
    let mut index = 0u64;
    for n in 1..=seq.max_n() as i64 {
        let mut r = row(seq, n, basis)?;
        if order == Order::Ascending {
            r.reverse();
        }
        for v in r {
            index += 1;
            writeln!(out, "{index} {v}").map_err(io_error)?;
        }
    }
    Ok(())
}

fn io_error(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn number(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer is a JSON number"))
}

/// The JSON object for `P_n`: `n`, `basis`, `coefficients` (highest order
/// first), `degree` and `content`.
pub fn json_record(seq: &PSequence, n: i64, basis: Basis) -> Result<Value> {
    let coefficients: Vec<Value> = row(seq, n, basis)?.iter().map(number).collect();
    Ok(json!({
        "n": n,
        "basis": basis.name(),
        "coefficients": coefficients,
        "degree": expected_degree(n),
        "content": number(&seq.get(n).content()),
    }))
}

pub fn write_jsonl<W: Write>(out: &mut W, seq: &PSequence, basis: Basis) -> Result<()> {
    for n in 1..=seq.max_n() as i64 {
        writeln!(out, "{}", json_record(seq, n, basis)?).map_err(io_error)?;
    }
    Ok(())
}

/// A parsed JSON-lines record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub n: i64,
    pub basis: Basis,
    /// Highest order first.
    pub coefficients: Vec<BigInt>,
}

impl Record {
    /// The polynomial in the power basis.
    pub fn to_poly(&self) -> Result<IntPoly> {
        match self.basis {
            Basis::Power => Ok(IntPoly::from_descending(self.coefficients.clone())),
            Basis::Binomial => {
                if self.coefficients.is_empty() {
                    return Err(Error::Parse(format!("record n={} has no coefficients", self.n)));
                }
                let p = BinomPoly::from_coeffs(self.coefficients.clone()).to_power();
                p.to_integer()
                    .ok_or_else(|| Error::NotIntegral(format!("record n={} expands to {p}", self.n)))
            }
        }
    }
}

fn big(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(Error::Parse(format!("expected an integer, got {other}"))),
    };
    BigInt::from_str(&text).map_err(|_| Error::Parse(format!("not an integer: {text}")))
}

pub fn parse_record(line: &str) -> Result<Record> {
    let v: Value = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
    let field = |name: &str| {
        v.get(name)
            .ok_or_else(|| Error::Parse(format!("missing field {name:?}")))
    };
    let n = big(field("n")?)?;
    let n = i64::try_from(n).map_err(|_| Error::Parse("n out of range".into()))?;
    let basis = field("basis")?
        .as_str()
        .ok_or_else(|| Error::Parse("basis must be a string".into()))?
        .parse()?;
    let coefficients = field("coefficients")?
        .as_array()
        .ok_or_else(|| Error::Parse("coefficients must be an array".into()))?
        .iter()
        .map(big)
        .collect::<Result<Vec<_>>>()?;
    Ok(Record { n, basis, coefficients })
}

/// Read JSON lines back into a sequence; rows must be `n = 1, 2, ...` in order.
pub fn read_jsonl<R: BufRead>(input: R) -> Result<PSequence> {
    let mut polys = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(io_error)?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = parse_record(&line).map_err(|e| e.at(i as i64 + 1))?;
        if rec.n != polys.len() as i64 + 1 {
            return Err(Error::Parse(format!(
                "expected row n={}, found n={}",
                polys.len() + 1,
                rec.n
            )));
        }
        polys.push(rec.to_poly()?);
    }
    PSequence::from_integer(polys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseq::p_sequence;

    #[test]
    fn bfile_lines() {
        let s = p_sequence(3).unwrap();
        let mut buf = Vec::new();
        write_bfile(&mut buf, &s, Basis::Power, Order::Descending).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "1 1\n2 1\n3 3\n4 4\n");
        let mut buf = Vec::new();
        write_bfile(&mut buf, &s, Basis::Power, Order::Ascending).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "1 1\n2 1\n3 4\n4 3\n");
    }

    #[test]
    fn binomial_row() {
        let s = p_sequence(5).unwrap();
        let r: Vec<i64> = row(&s, 5, Basis::Binomial)
            .unwrap()
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect();
        assert_eq!(r, vec![10, 30, 32]);
    }

    #[test]
    fn json_round_trip() {
        let s = p_sequence(20).unwrap();
        for basis in [Basis::Power, Basis::Binomial] {
            let mut buf = Vec::new();
            write_jsonl(&mut buf, &s, basis).unwrap();
            let back = read_jsonl(buf.as_slice()).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn json_shape() {
        let s = p_sequence(12).unwrap();
        let v = json_record(&s, 12, Basis::Power).unwrap();
        assert_eq!(
            v.to_string(),
            r#"{"basis":"power","coefficients":[6,200,2842,21040,79832,122880],"content":2,"degree":5,"n":12}"#
        );
    }

    #[test]
    fn reader_accepts_strings_and_rejects_gaps() {
        let rec = parse_record(r#"{"n": 3, "basis": "power", "coefficients": ["3", 4]}"#).unwrap();
        assert_eq!(rec.to_poly().unwrap(), IntPoly::from_ints(&[4, 3]));
        let gap = "{\"n\": 2, \"basis\": \"power\", \"coefficients\": [1]}\n";
        assert!(read_jsonl(gap.as_bytes()).is_err());
        assert!(parse_record("{}").is_err());
        assert!(parse_record(r#"{"n": 1, "basis": "hex", "coefficients": [1]}"#).is_err());
    }
}
