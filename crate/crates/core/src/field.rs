//! Exact scalars over the rationals and over prime fields of odd characteristic.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field: either ℚ or 𝔽_p for an odd prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// ℤ₂-degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Parity {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        self + Parity::Odd
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// True iff the Koszul sign (−1)^{pq} is −1.
#[inline]
pub fn koszul_negative(p: Parity, q: Parity) -> bool {
    p.is_odd() && q.is_odd()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// 𝔽_p, rejecting composite moduli and characteristic 2.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q` or `Fp:<p>`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(Field::Rationals);
        }
        let rest = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("fp:"))
            .or_else(|| t.strip_prefix("F"))
            .ok_or_else(|| Error::InvalidField(format!("unrecognised field '{s}'")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus in '{s}'")))?;
        Field::prime(p)
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// n/d as a field element.
    pub fn frac(self, n: i64, d: i64) -> Result<Scalar> {
        self.from_i64(n).checked_div(&self.from_i64(d))
    }

    /// Parses a scalar from its JSON string form: `a/b` or an integer.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar '{s}'")))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar '{s}'")))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(n, d))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    r.try_into().expect("residue fits in u64")
                };
                let a = Scalar::Mod { v: reduce(&n), p };
                let b = Scalar::Mod { v: reduce(&d), p };
                a.checked_div(&b)
            }
        }
    }

    /// Koszul sign (−1)^{pq} as a scalar.
    pub fn koszul(self, p: Parity, q: Parity) -> Scalar {
        if koszul_negative(p, q) {
            self.from_i64(-1)
        } else {
            self.one()
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms, residues in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a + b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Ok(Scalar::Mod {
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a * b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Ok(Scalar::Mod {
                v: mul_mod(*a, *b, *p),
                p: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { v, p } => Scalar::Mod {
                v: pow_mod(*v, *p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.checked_mul(&other.inverse()?)
    }

    /// Canonical string form used in JSON files.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Small signed representative, handy for sampling and display.
    pub fn signed_residue(&self) -> Option<i64> {
        match self {
            Scalar::Mod { v, p } => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
            Scalar::Rat(r) if r.is_integer() && r.numer().abs() < BigInt::from(i64::MAX) => {
                r.numer().try_into().ok()
            }
            Scalar::Rat(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

// Operator forms panic on field mismatch; every matrix and algebra checks its
// field at construction so mixing can only come from a programming error.
impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod { v, p } => Scalar::Mod {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

/// Binary operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// (−1)^{pq} over `field`.
pub fn koszul(field: Field, p: Parity, q: Parity) -> Scalar {
    field.koszul(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_addition() {
        let q = Field::Rationals;
        let a = q.frac(1, 2).unwrap();
        let b = q.frac(1, 3).unwrap();
        let s = scalar_arith(&a, &b, ArithOp::Add).unwrap();
        assert_eq!(s, q.frac(5, 6).unwrap());
        assert_eq!(s.to_string(), "5/6");
    }

    #[test]
    fn prime_field_product() {
        let f7 = Field::prime(7).unwrap();
        let s = &f7.from_i64(3) * &f7.from_i64(5);
        assert_eq!(s, f7.one());
    }

    #[test]
    fn self_division_is_one() {
        for field in [Field::Rationals, Field::Prime(5), Field::Prime(101)] {
            for n in [1i64, 2, -3, 7, 40] {
                let x = field.from_i64(n);
                if x.is_zero() {
                    continue;
                }
                assert!(x.checked_div(&x).unwrap().is_one());
            }
        }
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let q = Field::Rationals;
        assert_eq!(q.one().checked_div(&q.zero()), Err(Error::DivisionByZero));
        let f5 = Field::Prime(5);
        assert!(matches!(
            q.one().checked_add(&f5.one()),
            Err(Error::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn koszul_table() {
        let q = Field::Rationals;
        assert_eq!(koszul(q, Parity::Odd, Parity::Odd), q.from_i64(-1));
        assert_eq!(koszul(q, Parity::Even, Parity::Odd), q.one());
        assert_eq!(koszul(q, Parity::Even, Parity::Even), q.one());
    }

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::parse("Fp:2").is_err());
        assert_eq!(Field::parse("Fp:5").unwrap(), Field::Prime(5));
        assert_eq!(Field::parse("Q").unwrap(), Field::Rationals);
    }

    #[test]
    fn parse_round_trip() {
        let q = Field::Rationals;
        assert_eq!(q.parse_scalar("6/-4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse_scalar("7").unwrap().to_string(), "7");
        let f5 = Field::Prime(5);
        assert_eq!(f5.parse_scalar("1/2").unwrap().to_string(), "3");
        assert_eq!(f5.parse_scalar("-1").unwrap().to_string(), "4");
    }
}
