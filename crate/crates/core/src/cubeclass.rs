//! Arithmetic in Q^x / Q^x3: cube tests, primitive triples and the choice of
//! the auxiliary cubic field Q(cbrt(lambda)).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_perfect_cube};
use crate::error::{Error, Result};

/// Coefficients `(a, b, c)` of `ax^3 + by^3 + cz^3 = 0`, positive and coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl PrimitiveTriple {
    pub fn a(&self) -> u64 {
        self.a
    }
    pub fn b(&self) -> u64 {
        self.b
    }
    pub fn c(&self) -> u64 {
        self.c
    }
    pub fn coefficients(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn abc(&self) -> BigInt {
        BigInt::from(self.a) * self.b * self.c
    }
}

impl fmt::Display for PrimitiveTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl Serialize for PrimitiveTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string(), self.c.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrimitiveTriple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = <[String; 3]>::deserialize(d)?;
        let mut parsed = [0i64; 3];
        for (slot, s) in parsed.iter_mut().zip(raw.iter()) {
            *slot = s.parse().map_err(serde::de::Error::custom)?;
        }
        normalize_triple(parsed[0], parsed[1], parsed[2]).map_err(serde::de::Error::custom)
    }
}

/// Divide out the gcd and absorb signs (`x -> -x` negates a coefficient).
pub fn normalize_triple(a: i64, b: i64, c: i64) -> Result<PrimitiveTriple> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::ZeroCoefficient);
    }
    let (a, b, c) = (a.unsigned_abs(), b.unsigned_abs(), c.unsigned_abs());
    let g = a.gcd(&b).gcd(&c);
    Ok(PrimitiveTriple { a: a / g, b: b / g, c: c / g })
}

/// Image of a nonzero rational in Q^x / Q^x3, stored as its reduced
/// factorization. The class of a cube is the empty map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CubeClass {
    factors: BTreeMap<u64, u8>,
}

impl CubeClass {
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &BTreeMap<u64, u8> {
        &self.factors
    }

    fn add_prime(&mut self, p: u64, e: u32) {
        let slot = self.factors.entry(p).or_insert(0);
        *slot = ((*slot as u32 + e) % 3) as u8;
        if *slot == 0 {
            self.factors.remove(&p);
        }
    }

    pub fn mul(&self, other: &CubeClass) -> CubeClass {
        let mut out = self.clone();
        for (&p, &e) in &other.factors {
            out.add_prime(p, e as u32);
        }
        out
    }

    pub fn square(&self) -> CubeClass {
        self.mul(self)
    }
}

impl fmt::Display for CubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn to_u64(n: &BigInt) -> Result<u64> {
    n.abs().to_u64().ok_or_else(|| Error::TooLarge(n.to_string()))
}

/// The class of `|n|` in Q^x / Q^x3. Denominators use `1/p ~ p^2`.
pub fn cube_class(n: &BigRational) -> Result<CubeClass> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut class = CubeClass::default();
    for (p, e) in factorize(to_u64(n.numer())?) {
        class.add_prime(p, e);
    }
    for (p, e) in factorize(to_u64(n.denom())?) {
        class.add_prime(p, 2 * e);
    }
    Ok(class)
}

/// Whether `n` is the cube of a rational. Works for integers of any size.
pub fn is_cube(n: &BigRational) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(is_perfect_cube(&n.numer().abs()) && is_perfect_cube(&n.denom().abs()))
}

pub fn is_integer_cube(n: &BigInt) -> Result<bool> {
    is_cube(&BigRational::from_integer(n.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LambdaSource {
    #[serde(rename = "a/b")]
    AOverB,
    #[serde(rename = "b/c")]
    BOverC,
    #[serde(rename = "c/a")]
    COverA,
    /// Supplied directly rather than chosen from a triple.
    #[serde(rename = "given")]
    Given,
}

/// A ratio `lambda` of two coefficients such that Q(cbrt(abc)) != Q(cbrt(lambda)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChoice {
    pub numerator: u64,
    pub denominator: u64,
    pub source: LambdaSource,
}

impl LambdaChoice {
    /// Arbitrary positive ratio, reduced. Used when lambda comes from the CLI.
    pub fn from_ratio(numerator: u64, denominator: u64, source: LambdaSource) -> Result<Self> {
        if numerator == 0 || denominator == 0 {
            return Err(Error::ZeroInput);
        }
        let g = numerator.gcd(&denominator);
        Ok(LambdaChoice { numerator: numerator / g, denominator: denominator / g, source })
    }

    pub fn as_rational(&self) -> BigRational {
        BigRational::new(self.numerator.into(), self.denominator.into())
    }

    /// An integer in the same cube class: `num/den ~ num * den^2`.
    pub fn integral_representative(&self) -> BigInt {
        BigInt::from(self.numerator) * self.denominator * self.denominator
    }
}

impl fmt::Display for LambdaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

fn int_is_cube(n: BigInt) -> bool {
    is_perfect_cube(&n)
}

/// Picks lambda from {a/b, b/c, c/a} following the case split: a/b when
/// neither b^2c nor a^2c is a cube, b/c when b^2c is, c/a otherwise.
pub fn choose_lambda(t: &PrimitiveTriple) -> Result<LambdaChoice> {
    if int_is_cube(t.abc()) {
        return Err(Error::CubeCase);
    }
    let (a, b, c) = (BigInt::from(t.a), BigInt::from(t.b), BigInt::from(t.c));
    let b2c = int_is_cube(&b * &b * &c);
    let a2c = int_is_cube(&a * &a * &c);
    let (num, den, source) = if !b2c && !a2c {
        (t.a, t.b, LambdaSource::AOverB)
    } else if b2c {
        (t.b, t.c, LambdaSource::BOverC)
    } else {
        (t.c, t.a, LambdaSource::COverA)
    };
    LambdaChoice::from_ratio(num, den, source)
}

/// `Q(cbrt(x)) != Q(cbrt(y))` for non-cube `x`, i.e. `x !~ y` and `x !~ y^2`.
pub fn distinct_cube_root_fields(x: &BigRational, y: &BigRational) -> Result<bool> {
    let y2 = y * y;
    Ok(!is_cube(&(x / y))? && !is_cube(&(x / y2))?)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
