//! Exact arithmetic in truncated polynomial rings `k[t]/(t^{m+1})`.
//!
//! The base field `k` is either a prime field `F_p` or the rationals. All
//! values are immutable once built and carry their field with them, so
//! mixing fields is caught at the jet level instead of silently producing
//! garbage.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Prime(u64),
    Rational,
}

/// Largest modulus accepted. Keeps products inside `u128` and the primality
/// check to trial division.
pub const MAX_PRIME: u64 = u32::MAX as u64;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Field from the wire convention used by the matrix formats: `0` means
    /// the rationals, anything else must be a prime.
    pub fn from_code(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(p)
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::Range(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    /// Inverse of [`Field::from_code`].
    pub fn code(self) -> u64 {
        match self {
            Field::Prime(p) => p,
            Field::Rational => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { p, v: 0 },
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                p,
                v: n.rem_euclid(p as i64) as u64,
            },
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Embeds an arbitrary fraction. Fails in `F_p` when the denominator is
    /// divisible by `p`.
    pub fn from_ratio(self, value: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rat(value.clone())),
            Field::Prime(p) => {
                let reduce = |n: &BigInt| -> u64 {
                    let r = n % BigInt::from(p);
                    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                    r.try_into().expect("residue fits in u64")
                };
                let num = Scalar::Mod {
                    p,
                    v: reduce(value.numer()),
                };
                let den = Scalar::Mod {
                    p,
                    v: reduce(value.denom()),
                };
                let inv = den.inv().ok_or_else(|| {
                    Error::Range(format!("denominator {} vanishes mod {p}", value.denom()))
                })?;
                Ok(num.mul(&inv))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// An element of the base field.
///
/// Prime-field residues live in `[0, p)`; rationals are kept in lowest terms
/// with a positive denominator (the `num-rational` normal form).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { p: u64, v: u64 },
    Rat(BigRational),
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    /// The value as a fraction; prime-field residues map to their
    /// representative in `[0, p)`.
    pub fn to_ratio(&self) -> BigRational {
        match self {
            Scalar::Mod { v, .. } => BigRational::from_integer(BigInt::from(*v)),
            Scalar::Rat(q) => q.clone(),
        }
    }

    // Mixed-field arithmetic on scalars is a programming error; the jet layer
    // checks fields before reaching here.
    fn mismatch(&self, other: &Scalar) -> ! {
        panic!(
            "scalar field mismatch: {} vs {}",
            self.field(),
            other.field()
        )
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) if p == q => {
                let s = v + w;
                Scalar::Mod {
                    p: *p,
                    v: if s >= *p { s - p } else { s },
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => self.mismatch(other),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) if p == q => Scalar::Mod {
                p: *p,
                v: if v >= w { v - w } else { v + p - w },
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self.mismatch(other),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Mod { p, v }, Scalar::Mod { p: q, v: w }) if p == q => Scalar::Mod {
                p: *p,
                v: ((*v as u128 * *w as u128) % *p as u128) as u64,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => self.mismatch(other),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Mod { p, v } => Scalar::Mod {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
            Scalar::Rat(a) => Scalar::Rat(-a),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { p, v } => Scalar::Mod {
                p: *p,
                v: pow_mod(*v, p - 2, *p),
            },
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { v, .. } => write!(f, "{v}"),
            Scalar::Rat(q) => write!(f, "{q}"),
        }
    }
}

/// Ring operation selector for [`JetScalar::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An element `c_0 + c_1 t + ... + c_m t^m` of `k[t]/(t^{m+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JetScalar {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl JetScalar {
    /// Builds from coefficients `c_0..c_m`; the order is `coeffs.len() - 1`.
    pub fn new(field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Input("a jet scalar needs at least one coefficient".into()));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::IncompatibleOperands(format!(
                "coefficient in {} inside a ring over {field}",
                bad.field()
            )));
        }
        Ok(JetScalar { field, coeffs })
    }

    /// Integer coefficients, reduced into the field.
    pub fn from_ints(field: Field, coeffs: &[i64]) -> Result<Self> {
        JetScalar::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field, order: u32) -> Self {
        JetScalar {
            field,
            coeffs: vec![field.zero(); order as usize + 1],
        }
    }

    pub fn one(field: Field, order: u32) -> Self {
        Self::constant(field, order, field.one())
    }

    pub fn constant(field: Field, order: u32, c: Scalar) -> Self {
        let mut x = Self::zero(field, order);
        x.coeffs[0] = c;
        x
    }

    /// `t^k`; zero once `k` exceeds the order.
    pub fn t_power(field: Field, order: u32, k: u32) -> Self {
        let mut x = Self::zero(field, order);
        if k <= order {
            x.coeffs[k as usize] = field.one();
        }
        x
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The truncation exponent `m`.
    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    fn check_compatible(&self, other: &JetScalar) -> Result<()> {
        if self.field != other.field || self.coeffs.len() != other.coeffs.len() {
            return Err(Error::IncompatibleOperands(format!(
                "{}[t]/(t^{}) vs {}[t]/(t^{})",
                self.field,
                self.order() + 1,
                other.field,
                other.order() + 1
            )));
        }
        Ok(())
    }

    pub fn arith(&self, other: &JetScalar, op: ArithOp) -> Result<JetScalar> {
        self.check_compatible(other)?;
        Ok(match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
        })
    }

    // The unchecked forms below back the linear algebra, where every entry
    // shares one ring by construction. They panic on mismatch.

    pub fn add(&self, other: &JetScalar) -> JetScalar {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        JetScalar {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &JetScalar) -> JetScalar {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        JetScalar {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Truncated convolution.
    pub fn mul(&self, other: &JetScalar) -> JetScalar {
        debug_assert_eq!(self.coeffs.len(), other.coeffs.len());
        let n = self.coeffs.len();
        let mut out = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        JetScalar {
            field: self.field,
            coeffs: out,
        }
    }

    pub fn neg(&self) -> JetScalar {
        JetScalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> JetScalar {
        JetScalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Inverse of a unit by the coefficient recursion
    /// `b_0 = 1/c_0`, `b_k = -b_0 * sum_{i=1..k} c_i b_{k-i}`.
    pub fn invert(&self) -> Result<JetScalar> {
        let c0_inv = self.coeffs[0].inv().ok_or(Error::NonUnit)?;
        let n = self.coeffs.len();
        let mut b: Vec<Scalar> = Vec::with_capacity(n);
        b.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = self.field.zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&b[k - i]));
            }
            b.push(acc.mul(&c0_inv).neg());
        }
        Ok(JetScalar {
            field: self.field,
            coeffs: b,
        })
    }

    /// Index of the first nonzero coefficient, `m + 1` for zero.
    pub fn t_order(&self) -> u32 {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len()) as u32
    }

    /// Image in `k[t]/(t^{j+1})`.
    pub fn truncate(&self, j: u32) -> Result<JetScalar> {
        if j > self.order() {
            return Err(Error::Range(format!(
                "cannot truncate order {} to {j}",
                self.order()
            )));
        }
        Ok(JetScalar {
            field: self.field,
            coeffs: self.coeffs[..=j as usize].to_vec(),
        })
    }

    /// Divides by `t^k` when `t^k` divides `self`, keeping the order. The
    /// freed top coefficients are filled with zero, which is one valid
    /// quotient among the `t^{m+1-k}`-translates.
    pub(crate) fn shift_down(&self, k: u32) -> JetScalar {
        let k = k as usize;
        debug_assert!(self.coeffs[..k.min(self.coeffs.len())]
            .iter()
            .all(Scalar::is_zero));
        let n = self.coeffs.len();
        let mut coeffs = vec![self.field.zero(); n];
        coeffs[..n - k].clone_from_slice(&self.coeffs[k..]);
        JetScalar {
            field: self.field,
            coeffs,
        }
    }
}

impl fmt::Display for JetScalar {
    /// Canonical literal: increasing powers, zero terms dropped, unit
    /// coefficients elided on `t` powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = c.to_ratio();
            let negative = q.is_negative();
            let mag = q.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> JetScalar {
        JetScalar::from_ints(Field::Rational, coeffs).unwrap()
    }

    fn f2(coeffs: &[i64]) -> JetScalar {
        JetScalar::from_ints(Field::Prime(2), coeffs).unwrap()
    }

    #[test]
    fn t_squared_vanishes() {
        let t = f2(&[0, 1]);
        assert!(t.arith(&t, ArithOp::Mul).unwrap().is_zero());
    }

    #[test]
    fn square_of_one_plus_t() {
        let x = q(&[1, 1, 0]);
        assert_eq!(x.arith(&x, ArithOp::Mul).unwrap(), q(&[1, 2, 1]));
    }

    #[test]
    fn additive_identity() {
        let x = q(&[3, -1, 7]);
        assert_eq!(x.arith(&JetScalar::zero(Field::Rational, 2), ArithOp::Add).unwrap(), x);
    }

    #[test]
    fn mismatched_operands_rejected() {
        let a = q(&[1, 1]);
        let b = q(&[1, 1, 1]);
        assert!(matches!(
            a.arith(&b, ArithOp::Add),
            Err(Error::IncompatibleOperands(_))
        ));
        let c = f2(&[1, 1]);
        assert!(matches!(
            a.arith(&c, ArithOp::Mul),
            Err(Error::IncompatibleOperands(_))
        ));
    }

    #[test]
    fn inverses() {
        assert_eq!(q(&[1, 0, 0]).invert().unwrap(), q(&[1, 0, 0]));
        assert_eq!(q(&[1, 1, 0]).invert().unwrap(), q(&[1, -1, 1]));
        assert_eq!(q(&[0, 1, 0]).invert(), Err(Error::NonUnit));
        let x = JetScalar::from_ints(Field::Prime(7), &[3, 5, 2, 6]).unwrap();
        let y = x.invert().unwrap();
        assert_eq!(x.mul(&y), JetScalar::one(Field::Prime(7), 3));
    }

    #[test]
    fn t_orders() {
        assert_eq!(q(&[0, 0, 0]).t_order(), 3);
        assert_eq!(q(&[0, 1, 1]).t_order(), 1);
        assert_eq!(q(&[5, 0, 0]).t_order(), 0);
    }

    #[test]
    fn truncation() {
        assert_eq!(q(&[1, 1, 1]).truncate(1).unwrap(), q(&[1, 1]));
        let x = q(&[2, 0, 3]);
        assert_eq!(x.truncate(2).unwrap(), x);
        assert!(q(&[0, 0, 1]).truncate(1).unwrap().is_zero());
        assert!(matches!(x.truncate(3), Err(Error::Range(_))));
    }

    #[test]
    fn field_codes() {
        assert_eq!(Field::from_code(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_code(5).unwrap(), Field::Prime(5));
        assert!(Field::from_code(4).is_err());
        assert!(Field::from_code(1).is_err());
    }

    #[test]
    fn literal_display() {
        assert_eq!(q(&[0, 0, 0]).to_string(), "0");
        assert_eq!(q(&[1, 2, 1]).to_string(), "1 + 2*t + t^2");
        assert_eq!(q(&[0, -1, 3]).to_string(), "-t + 3*t^2");
        let half = JetScalar::new(
            Field::Rational,
            vec![
                Scalar::Rat(BigRational::new(BigInt::from(-1), BigInt::from(2))),
                Field::Rational.zero(),
            ],
        )
        .unwrap();
        assert_eq!(half.to_string(), "-1/2");
    }

    #[test]
    fn from_ratio_in_prime_field() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            Field::Prime(5).from_ratio(&half).unwrap(),
            Scalar::Mod { p: 5, v: 3 }
        );
        assert!(Field::Prime(2).from_ratio(&half).is_err());
    }
}
