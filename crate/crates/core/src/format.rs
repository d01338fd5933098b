//! Text and JSON encodings of jet scalars and matrices.
//!
//! Text format: a header line `a b m p` (`p = 0` selects the rationals)
//! followed by `a*b` entry lines in row-major order, each a literal such as
//! `1 + 2*t - 3/4*t^2`. Blank lines and lines starting with `#` are
//! skipped. [`emit_matrix`] writes the canonical form, which parses back to
//! the same matrix and re-emits byte for byte.
//!
//! JSON format: `{"rows", "cols", "order", "p", "entries"}` with `entries`
//! a row-major nested array of full coefficient lists `[c_0, ..., c_m]`.
//! Integral coefficients are JSON numbers, other rationals strings `"n/d"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::jetlinalg::JetMatrix;
use crate::ring::{Field, JetScalar, Scalar};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col_offset: usize,
}

impl Cursor {
    fn new(src: &str, line: usize, col_offset: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col_offset,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col_offset + self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| {
            self.pos = start;
            self.err("exponent too large")
        })
    }
}

/// Parses a ring literal into `field[t]/(t^{order+1})`.
pub fn parse_jet_scalar(src: &str, field: Field, order: u32) -> Result<JetScalar> {
    parse_literal(&mut Cursor::new(src, 1, 0), field, order)
}

fn parse_literal(cur: &mut Cursor, field: Field, order: u32) -> Result<JetScalar> {
    let mut coeffs = vec![BigRational::zero(); order as usize + 1];
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else if cur.peek().is_none() {
            break;
        } else {
            return Err(cur.err("expected '+' or '-'"));
        };
        first = false;
        if cur.peek().is_none() {
            return Err(cur.err("expected a term"));
        }

        let term_start = cur.pos;
        let mut coeff = BigRational::one();
        let mut has_coeff = false;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = cur.integer()?;
            let den = if cur.eat('/') {
                let d = cur.integer()?;
                if d.is_zero() {
                    return Err(cur.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = BigRational::new(num, den);
            has_coeff = true;
        }
        let mut degree = 0u32;
        let wants_t = if has_coeff { cur.eat('*') } else { true };
        if wants_t {
            if !cur.eat('t') {
                return Err(cur.err("expected 't'"));
            }
            degree = if cur.eat('^') { cur.small_integer()? } else { 1 };
        }
        if degree > order {
            cur.pos = term_start;
            return Err(cur.err(format!("degree {degree} exceeds the order {order}")));
        }
        if negative {
            coeff = -coeff;
        }
        coeffs[degree as usize] += coeff;
    }
    let coeffs = coeffs
        .iter()
        .map(|c| field.from_ratio(c))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| cur.err(e.to_string()))?;
    JetScalar::new(field, coeffs)
}

/// Reads the text matrix format.
pub fn parse_matrix(text: &str) -> Result<JetMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing header 'a b m p'".into(),
    })?;
    // (1-based column, token) for each header field.
    let mut fields: Vec<(usize, &str)> = Vec::new();
    let mut rest = header;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
        let column = header.len() - rest.len() + start + 1;
        fields.push((column, &rest[start..start + len]));
        rest = &rest[start + len..];
    }
    let header_err = |column: usize, message: String| Error::Parse {
        line: hline,
        column,
        message,
    };
    if fields.len() != 4 {
        return Err(header_err(
            1,
            format!("header needs 4 integers 'a b m p', found {}", fields.len()),
        ));
    }
    let nums = fields
        .iter()
        .map(|&(col, f)| {
            f.parse::<u64>()
                .map_err(|_| header_err(col, format!("bad header value {f:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let (rows, cols) = (nums[0] as usize, nums[1] as usize);
    if rows == 0 || cols == 0 {
        let col = if rows == 0 { fields[0].0 } else { fields[1].0 };
        return Err(header_err(col, "matrix dimensions must be positive".into()));
    }
    let order = u32::try_from(nums[2]).map_err(|_| header_err(fields[2].0, "order too large".into()))?;
    let field = Field::from_code(nums[3]).map_err(|e| header_err(fields[3].0, e.to_string()))?;

    let mut entries = Vec::with_capacity(rows * cols);
    for (lineno, line) in lines {
        if entries.len() == rows * cols {
            return Err(Error::Parse {
                line: lineno,
                column: 1,
                message: format!("more than {} entries", rows * cols),
            });
        }
        let mut cur = Cursor::new(line, lineno, 0);
        entries.push(parse_literal(&mut cur, field, order)?);
    }
    if entries.len() != rows * cols {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: format!("expected {} entries, found {}", rows * cols, entries.len()),
        });
    }
    JetMatrix::new(rows, cols, entries)
}

/// Canonical text form.
pub fn emit_matrix(a: &JetMatrix) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        a.rows(),
        a.cols(),
        a.order(),
        a.field().code()
    );
    for e in a.entries() {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

fn coeff_to_json(c: &Scalar) -> Value {
    match c {
        Scalar::Mod { v, .. } => json!(v),
        Scalar::Rat(q) if q.is_integer() => match i64::try_from(q.numer().clone()) {
            Ok(n) => json!(n),
            Err(_) => json!(q.to_string()),
        },
        Scalar::Rat(q) => json!(q.to_string()),
    }
}

fn coeff_from_json(v: &Value, field: Field) -> Result<Scalar> {
    let bad = || Error::Input(format!("bad coefficient {v}"));
    let q = match v {
        Value::Number(n) => {
            let n = n.as_i64().ok_or_else(bad)?;
            BigRational::from_integer(BigInt::from(n))
        }
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
            }
        }
        _ => return Err(bad()),
    };
    field.from_ratio(&q)
}

/// JSON form of a matrix.
pub fn matrix_to_json(a: &JetMatrix) -> Value {
    let entries: Vec<Value> = (0..a.rows())
        .map(|i| {
            Value::Array(
                (0..a.cols())
                    .map(|j| Value::Array(a.get(i, j).coeffs().iter().map(coeff_to_json).collect()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "rows": a.rows(),
        "cols": a.cols(),
        "order": a.order(),
        "p": a.field().code(),
        "entries": entries,
    })
}

pub fn matrix_from_json(v: &Value) -> Result<JetMatrix> {
    let get_u64 = |key: &str| {
        v.get(key)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Input(format!("missing or non-integer {key:?}")))
    };
    let rows = get_u64("rows")? as usize;
    let cols = get_u64("cols")? as usize;
    let order = u32::try_from(get_u64("order")?)
        .map_err(|_| Error::Input("order too large".into()))?;
    let field = Field::from_code(get_u64("p")?)?;
    let grid = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("missing \"entries\"".into()))?;
    if grid.len() != rows {
        return Err(Error::Input(format!("expected {rows} rows, found {}", grid.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in grid {
        let row = row
            .as_array()
            .filter(|r| r.len() == cols)
            .ok_or_else(|| Error::Input(format!("each row needs {cols} entries")))?;
        for e in row {
            let cs = e
                .as_array()
                .filter(|c| c.len() == order as usize + 1)
                .ok_or_else(|| {
                    Error::Input(format!("each entry needs {} coefficients", order + 1))
                })?;
            let coeffs = cs
                .iter()
                .map(|c| coeff_from_json(c, field))
                .collect::<Result<Vec<_>>>()?;
            entries.push(JetScalar::new(field, coeffs)?);
        }
    }
    JetMatrix::new(rows, cols, entries)
}

/// Accepts either encoding, sniffing JSON by a leading `{`.
pub fn parse_matrix_any(text: &str) -> Result<JetMatrix> {
    if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        matrix_from_json(&v)
    } else {
        parse_matrix(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_single_entry() {
        let a = parse_matrix("1 1 1 2\n t").unwrap();
        assert_eq!((a.rows(), a.cols(), a.order()), (1, 1, 1));
        assert_eq!(a.field(), Field::Prime(2));
        assert_eq!(a.get(0, 0), &JetScalar::t_power(Field::Prime(2), 1, 1));
    }

    #[test]
    fn non_prime_header_rejected() {
        assert!(matches!(
            parse_matrix("1 1 1 4\n1"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn literal_forms() {
        let f = Field::Rational;
        let x = parse_jet_scalar("1 + 2*t - 3/4*t^2 + t^2", f, 2).unwrap();
        assert_eq!(x.to_string(), "1 + 2*t + 1/4*t^2");
        let y = parse_jet_scalar("-t + t + 5", f, 3).unwrap();
        assert_eq!(y.to_string(), "5");
        let z = parse_jet_scalar("7*t", Field::Prime(5), 1).unwrap();
        assert_eq!(z.to_string(), "2*t");
        let h = parse_jet_scalar("1/2", Field::Prime(3), 0).unwrap();
        assert_eq!(h.to_string(), "2");
    }

    #[test]
    fn literal_errors_carry_location() {
        match parse_matrix("1 1 1 0\n1 + t^2") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_matrix("1 2 1 0\n1\n1 ++ t") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 4)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_matrix("2 1 0 3\n1").is_err());
        assert!(parse_matrix("1 1 0 3\n1\n1").is_err());
        assert!(parse_jet_scalar("1/0", Field::Rational, 0).is_err());
        assert!(parse_jet_scalar("1/2", Field::Prime(2), 0).is_err());
    }

    #[test]
    fn text_round_trip_is_byte_exact() {
        let text = "2 2 2 0\n0\n-1/2 + t^2\n3*t\n1 - t\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(emit_matrix(&a), text);
    }

    #[test]
    fn json_round_trip() {
        let a = parse_matrix("2 1 2 0\n1/3 - t\n4*t^2").unwrap();
        let v = matrix_to_json(&a);
        assert_eq!(v["entries"][0][0], json!(["1/3", -1, 0]));
        assert_eq!(matrix_from_json(&v).unwrap(), a);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(parse_matrix_any(&s).unwrap(), a);
    }
}
