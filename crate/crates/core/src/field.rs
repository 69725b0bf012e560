//! Coefficient fields: exact rationals and prime fields `ZZ/p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::CharacteristicOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    /// `0` selects the rationals, anything else must be a prime.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(FieldSpec::Rationals)
        } else {
            FieldSpec::prime(c)
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            FieldSpec::Rationals => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Coeff::Fp {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            FieldSpec::Rationals => Coeff::Q(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coeff::Fp {
                    value: r.to_u32().expect("residue fits in u32"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field, or `None` when `den` vanishes here.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Coeff> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.from_bigint(num) * &d.inv()?)
    }

    /// Ring-declaration spelling: `QQ` or `ZZ/p`.
    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "QQ".to_string(),
            FieldSpec::PrimeField(p) => format!("ZZ/{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Accepts `QQ`, `ZZ/p` or a bare characteristic (`0` for `QQ`).
impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s.strip_prefix("ZZ/").unwrap_or(s);
        let c: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidRing(format!("unknown field `{s}` (expected QQ or ZZ/p)")))?;
        FieldSpec::from_characteristic(c)
    }
}

/// A field element. Prime-field elements carry their modulus so that
/// arithmetic needs no context; mixing fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp { value: u32, modulus: u32 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::Fp { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Coeff::Q(_) => FieldSpec::Rationals,
            Coeff::Fp { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coeff::Q(q) => Coeff::Q(q.recip()),
            Coeff::Fp { value, modulus } => Coeff::Fp {
                value: pow_mod(*value as u64, (*modulus - 2) as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// Representative used for display: the rational itself, or the
    /// symmetric residue in `(-p/2, p/2]`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Coeff::Q(q) => q.clone(),
            Coeff::Fp { value, modulus } => {
                let v = *value as i64;
                let m = *modulus as i64;
                let s = if v > m / 2 { v - m } else { v };
                BigRational::from_integer(BigInt::from(s))
            }
        }
    }

    /// Sign of the display representative.
    pub fn is_negative(&self) -> bool {
        self.to_rational().is_negative()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

fn field_mismatch(a: &Coeff, b: &Coeff) -> ! {
    panic!("coefficient field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp { value: a, modulus: m }, Coeff::Fp { value: b, modulus: n }) if m == n => {
                Coeff::Fp {
                    value: ((*a as u64 + *b as u64) % *m as u64) as u32,
                    modulus: *m,
                }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a - b),
            (Coeff::Fp { value: a, modulus: m }, Coeff::Fp { value: b, modulus: n }) if m == n => {
                Coeff::Fp {
                    value: ((*a as u64 + *m as u64 - *b as u64) % *m as u64) as u32,
                    modulus: *m,
                }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp { value: a, modulus: m }, Coeff::Fp { value: b, modulus: n }) if m == n => {
                Coeff::Fp {
                    value: ((*a as u64 * *b as u64) % *m as u64) as u32,
                    modulus: *m,
                }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp { value, modulus } => Coeff::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        &self - &rhs
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_of_characteristic() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(32003).is_ok());
        assert_eq!(FieldSpec::prime(4), Err(Error::CompositeCharacteristic(4)));
        assert_eq!(FieldSpec::prime(1), Err(Error::CompositeCharacteristic(1)));
        assert!(matches!(
            FieldSpec::prime(1 << 31),
            Err(Error::CharacteristicOutOfRange(_))
        ));
    }

    #[test]
    fn field_names_parse() {
        assert_eq!("QQ".parse::<FieldSpec>(), Ok(FieldSpec::Rationals));
        assert_eq!("ZZ/5".parse::<FieldSpec>(), Ok(FieldSpec::PrimeField(5)));
        assert_eq!("32003".parse::<FieldSpec>(), Ok(FieldSpec::PrimeField(32003)));
        assert_eq!("0".parse::<FieldSpec>(), Ok(FieldSpec::Rationals));
        assert_eq!("ZZ/6".parse::<FieldSpec>(), Err(Error::CompositeCharacteristic(6)));
        assert!(matches!("RR".parse::<FieldSpec>(), Err(Error::InvalidRing(_))));
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        for a in 1..7 {
            let x = f.from_i64(a);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn ratio_rejects_vanishing_denominator() {
        let f = FieldSpec::prime(3).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(6)).is_none());
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
    }

    #[test]
    fn symmetric_display() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.from_i64(-1).to_string(), "-1");
        assert_eq!(f.from_i64(2).to_string(), "2");
        assert_eq!(f.from_i64(3).to_string(), "-2");
        let q = FieldSpec::Rationals;
        assert_eq!(q.from_ratio(&BigInt::from(3), &BigInt::from(-6)).unwrap().to_string(), "-1/2");
    }
}
