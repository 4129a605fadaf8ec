//! Exact arithmetic in Z[w], w^2 + w + 1 = 0: norms, primary associates,
//! splitting of rational primes and cubic/sextic power-residue symbols.
//!
//! Residue symbols at a split prime `pi` of norm `p` are computed in `Z/p`
//! through the ring map sending `w` to the root of `t^2 + t + 1` killed by
//! `pi`. At an inert prime `p` the residue field is `F_{p^2} = Z[w]/p` and
//! elements are kept as coordinate pairs mod `p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{big_mod, inv_mod, is_prime, mul_mod, pow_mod, sqrt_mod};
use crate::error::{Error, Result};

/// The element `x + y*w` of Z[w].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EisensteinInt {
    #[serde(with = "crate::serde_str")]
    pub x: BigInt,
    #[serde(with = "crate::serde_str")]
    pub y: BigInt,
}

impl EisensteinInt {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        EisensteinInt { x: x.into(), y: y.into() }
    }

    pub fn from_int(x: impl Into<BigInt>) -> Self {
        EisensteinInt { x: x.into(), y: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Complex conjugate: `w -> w^2 = -1 - w`.
    pub fn conj(&self) -> Self {
        EisensteinInt { x: &self.x - &self.y, y: -&self.y }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self) -> bool {
        norm(self).is_one()
    }

    /// Whether `self` is divisible by `d` in Z[w].
    pub fn divisible_by(&self, d: &EisensteinInt) -> bool {
        let n = norm(d);
        if n.is_zero() {
            return self.is_zero();
        }
        let t = self * &d.conj();
        (&t.x % &n).is_zero() && (&t.y % &n).is_zero()
    }

    /// Exact quotient `self / d`, if it exists.
    pub fn div_exact(&self, d: &EisensteinInt) -> Option<EisensteinInt> {
        if !self.divisible_by(d) || d.is_zero() {
            return None;
        }
        let n = norm(d);
        let t = self * &d.conj();
        Some(EisensteinInt { x: t.x / &n, y: t.y / n })
    }

    /// `self ≡ 1 (mod 3)`, i.e. `x ≡ 1` and `y ≡ 0` mod 3.
    pub fn is_primary(&self) -> bool {
        let three = BigInt::from(3);
        self.x.mod_floor(&three).is_one() && self.y.mod_floor(&three).is_zero()
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else if self.y.is_negative() {
            write!(f, "{} - {}w", self.x, -&self.y)
        } else {
            write!(f, "{} + {}w", self.x, self.y)
        }
    }
}

impl<'a> Add<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl<'a> Sub<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl<'a> Mul<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: &EisensteinInt) -> EisensteinInt {
        // (x1 + y1 w)(x2 + y2 w) with w^2 = -1 - w
        let yy = &self.y * &o.y;
        EisensteinInt {
            x: &self.x * &o.x - &yy,
            y: &self.x * &o.y + &self.y * &o.x - yy,
        }
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: EisensteinInt) -> EisensteinInt {
        &self * &o
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { x: -self.x, y: -self.y }
    }
}

/// `N(x + yw) = x^2 - xy + y^2`.
pub fn norm(z: &EisensteinInt) -> BigInt {
    &z.x * &z.x - &z.x * &z.y + &z.y * &z.y
}

/// A sixth root of unity `(-w)^k`, `k` in `0..6`.
///
/// `(-w)^2 = w^2`, `(-w)^3 = -1` and `(-w)^4 = w`, so the cube roots of unity
/// are the even exponents: `1 = k0`, `w = k4`, `w^2 = k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SexticUnit(u8);

impl SexticUnit {
    pub const ONE: SexticUnit = SexticUnit(0);
    pub const MINUS_ONE: SexticUnit = SexticUnit(3);
    pub const OMEGA: SexticUnit = SexticUnit(4);
    pub const OMEGA_SQ: SexticUnit = SexticUnit(2);

    pub fn from_exponent(k: u32) -> Self {
        SexticUnit((k % 6) as u8)
    }

    /// `w^j`.
    pub fn omega_pow(j: u32) -> Self {
        SexticUnit::from_exponent(4 * (j % 3))
    }

    pub fn exponent(self) -> u32 {
        self.0 as u32
    }

    pub fn all() -> [SexticUnit; 6] {
        [0, 1, 2, 3, 4, 5].map(SexticUnit)
    }

    pub fn mul(self, o: SexticUnit) -> SexticUnit {
        SexticUnit((self.0 + o.0) % 6)
    }

    pub fn pow(self, e: u32) -> SexticUnit {
        SexticUnit::from_exponent(self.0 as u32 * (e % 6))
    }

    pub fn inverse(self) -> SexticUnit {
        SexticUnit((6 - self.0) % 6)
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// `±1`.
    pub fn is_real(self) -> bool {
        self.0 % 3 == 0
    }

    pub fn is_cube_root_of_unity(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_eisenstein(self) -> EisensteinInt {
        match self.0 {
            0 => EisensteinInt::new(1, 0),
            1 => EisensteinInt::new(0, -1),
            2 => EisensteinInt::new(-1, -1),
            3 => EisensteinInt::new(-1, 0),
            4 => EisensteinInt::new(0, 1),
            _ => EisensteinInt::new(1, 1),
        }
    }

    pub fn from_eisenstein(z: &EisensteinInt) -> Option<SexticUnit> {
        SexticUnit::all().into_iter().find(|u| &u.to_eisenstein() == z)
    }
}

impl fmt::Display for SexticUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = ["1", "-w", "w^2", "-1", "w", "-w^2"][self.0 as usize];
        write!(f, "{name}")
    }
}

/// The unique associate `u*z` with `u*z ≡ 1 (mod 3)`.
pub fn primary_associate(z: &EisensteinInt) -> Result<EisensteinInt> {
    if (norm(z) % 3u32).is_zero() {
        return Err(Error::NotCoprimeToThree);
    }
    SexticUnit::all()
        .into_iter()
        .map(|u| &u.to_eisenstein() * z)
        .find(EisensteinInt::is_primary)
        .ok_or(Error::NotCoprimeToThree)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum ResidueField {
    /// `Z[w]/pi ≅ Z/p` via `w -> root`.
    Split { p: u64, root: u64 },
    /// `Z[w]/p ≅ F_{p^2}`.
    Inert { p: u64 },
}

/// A prime of Z[w] coprime to 3 with its primary generator (`pi ≡ 1 mod 3`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimaryPrime {
    pi: EisensteinInt,
    residue_norm: u128,
    field: ResidueField,
}

impl PrimaryPrime {
    /// Builds the primary prime generated by `z` (any associate).
    pub fn from_generator(z: &EisensteinInt) -> Result<Self> {
        let pi = primary_associate(z)?;
        let n = norm(&pi);
        let n64 = n.to_u64().ok_or_else(|| Error::TooLarge(n.to_string()))?;
        if is_prime(n64) {
            if n64 % 3 != 1 {
                return Err(Error::NotPrime(n64));
            }
            let root = split_root(&pi, n64);
            return Ok(PrimaryPrime { pi, residue_norm: n64 as u128, field: ResidueField::Split { p: n64, root } });
        }
        // Inert case: pi = -p with p ≡ 2 mod 3 prime.
        if pi.y.is_zero() {
            let p = (-&pi.x).to_u64().filter(|&p| p % 3 == 2 && is_prime(p));
            if let Some(p) = p {
                return Ok(PrimaryPrime {
                    pi,
                    residue_norm: (p as u128) * (p as u128),
                    field: ResidueField::Inert { p },
                });
            }
        }
        Err(Error::NotPrime(n64))
    }

    pub fn pi(&self) -> &EisensteinInt {
        &self.pi
    }

    pub fn residue_norm(&self) -> u128 {
        self.residue_norm
    }

    /// The rational prime below.
    pub fn rational_prime(&self) -> u64 {
        match self.field {
            ResidueField::Split { p, .. } | ResidueField::Inert { p } => p,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self.field, ResidueField::Split { .. })
    }

    /// The root of `t^2 + t + 1` mod `p` that `w` maps to (split primes only).
    pub fn omega_image(&self) -> Option<u64> {
        match self.field {
            ResidueField::Split { root, .. } => Some(root),
            ResidueField::Inert { .. } => None,
        }
    }

    /// Whether `pi` divides `alpha`.
    pub fn divides(&self, alpha: &EisensteinInt) -> bool {
        match self.field {
            ResidueField::Split { p, root } => reduce_split(alpha, p, root) == 0,
            ResidueField::Inert { p } => big_mod(&alpha.x, p) == 0 && big_mod(&alpha.y, p) == 0,
        }
    }
}

impl fmt::Display for PrimaryPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (norm {})", self.pi, self.residue_norm)
    }
}

fn split_root(pi: &EisensteinInt, p: u64) -> u64 {
    // x + y*root ≡ 0 (mod p)  =>  root = -x / y
    let x = big_mod(&pi.x, p);
    let y = big_mod(&pi.y, p);
    let yinv = inv_mod(y, p).expect("norm-p element has y coprime to p");
    (p - mul_mod(x, yinv, p)) % p
}

fn reduce_split(alpha: &EisensteinInt, p: u64, root: u64) -> u64 {
    (big_mod(&alpha.x, p) + mul_mod(big_mod(&alpha.y, p), root, p)) % p
}

/// How a rational prime decomposes in Z[w].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Splitting {
    Split(PrimaryPrime),
    Inert(PrimaryPrime),
    Ramified,
}

/// Solves `u^2 + 3v^2 = p` for a prime `p ≡ 1 (mod 3)` by Cornacchia's descent.
pub fn cornacchia_three(p: u64) -> Option<(u64, u64)> {
    let mut r = sqrt_mod(p - 3 % p, p)?;
    if r <= p / 2 {
        r = p - r;
    }
    let (mut a, mut b) = (p, r);
    while (b as u128) * (b as u128) >= p as u128 {
        (a, b) = (b, a % b);
    }
    let rest = p - b * b;
    if rest % 3 != 0 {
        return None;
    }
    let v2 = rest / 3;
    let v = v2.isqrt();
    (v * v == v2).then_some((b, v))
}

pub fn split_prime(p: u64) -> Result<Splitting> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match p % 3 {
        0 => Ok(Splitting::Ramified),
        2 => Ok(Splitting::Inert(PrimaryPrime::from_generator(&EisensteinInt::from_int(p))?)),
        _ => {
            let (u, v) = cornacchia_three(p).expect("p ≡ 1 mod 3 is of the form u^2 + 3v^2");
            // u + v*sqrt(-3) = (u + v) + 2v*w
            let z = EisensteinInt::new(u + v, 2 * v);
            Ok(Splitting::Split(PrimaryPrime::from_generator(&z)?))
        }
    }
}

/// The primary prime above `p`, for `p ≠ 3`.
pub fn primary_prime_above(p: u64) -> Result<PrimaryPrime> {
    match split_prime(p)? {
        Splitting::Split(pp) | Splitting::Inert(pp) => Ok(pp),
        Splitting::Ramified => Err(Error::NotCoprimeToThree),
    }
}

type Fp2 = (u64, u64);

fn fp2_mul(a: Fp2, b: Fp2, p: u64) -> Fp2 {
    let yy = mul_mod(a.1, b.1, p);
    let x = (mul_mod(a.0, b.0, p) + p - yy) % p;
    let y = (mul_mod(a.0, b.1, p) + mul_mod(a.1, b.0, p) + p - yy) % p;
    (x, y)
}

fn fp2_pow(mut base: Fp2, mut e: u128, p: u64) -> Fp2 {
    let mut acc = (1 % p, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp2_mul(acc, base, p);
        }
        base = fp2_mul(base, base, p);
        e >>= 1;
    }
    acc
}

/// `alpha^((N(pi)-1)/degree) mod pi`, identified with a root of unity.
fn power_residue(alpha: &EisensteinInt, pi: &PrimaryPrime, degree: u32) -> Result<SexticUnit> {
    if pi.divides(alpha) {
        return Err(Error::NotCoprime);
    }
    if (pi.residue_norm - 1) % degree as u128 != 0 {
        return Err(Error::BadResidueNorm(pi.residue_norm));
    }
    let e = (pi.residue_norm - 1) / degree as u128;
    // Over F_4 the units ±1, ±w collapse pairwise, so only roots of the
    // right order are candidates.
    let mut candidates = SexticUnit::all().into_iter().filter(|u| u.pow(degree).is_one());
    let found = match pi.field {
        ResidueField::Split { p, root } => {
            let r = pow_mod(reduce_split(alpha, p, root), e as u64, p);
            candidates.find(|u| reduce_split(&u.to_eisenstein(), p, root) == r)
        }
        ResidueField::Inert { p } => {
            let r = fp2_pow((big_mod(&alpha.x, p), big_mod(&alpha.y, p)), e, p);
            candidates.find(|u| {
                let z = u.to_eisenstein();
                (big_mod(&z.x, p), big_mod(&z.y, p)) == r
            })
        }
    };
    Ok(found.expect("power residue is a root of unity"))
}

/// Cubic residue symbol `(alpha/pi)_3` in {1, w, w^2}.
pub fn cubic_symbol(alpha: &EisensteinInt, pi: &PrimaryPrime) -> Result<SexticUnit> {
    power_residue(alpha, pi, 3)
}

/// Sextic residue symbol `(alpha/pi)_6`; requires `N(pi) ≡ 1 (mod 6)`.
pub fn sextic_symbol(alpha: &EisensteinInt, pi: &PrimaryPrime) -> Result<SexticUnit> {
    power_residue(alpha, pi, 6)
}

/// Cubic symbol of a rational integer at a split prime, computed in Z/p.
pub fn cubic_symbol_of_int(n: &BigInt, pi: &PrimaryPrime) -> Result<SexticUnit> {
    cubic_symbol(&EisensteinInt::from_int(n.clone()), pi)
}
