//! Local arithmetic over Q_p: Hilbert symbols, solubility of diagonal cubics,
//! cubes in Z_p, 2-adic points of `y^2 = x^3 - 27` and the evaluation map of
//! the quaternion class `beta = (x - 3, u - 3)` on `E x E`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{big_mod, is_prime, legendre, pow_mod, valuation, valuation_u64};
use crate::cubeclass::PrimitiveTriple;
use crate::error::{Error, Result};

/// A place of Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(Place::Infinity),
            t => {
                let p: u64 = t.parse().map_err(|_| Error::Parse(format!("bad place {t:?}")))?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                Ok(Place::Prime(p))
            }
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Hilbert symbol

/// `(a, b)_v`: +1 iff `z^2 = a x^2 + b y^2` has a nontrivial solution over Q_v.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, place: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    // a = n/d lies in the square class of n*d.
    let a = a.numer() * a.denom();
    let b = b.numer() * b.denom();
    match place {
        Place::Infinity => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Prime(p) => Ok(hilbert_at_prime(&a, &b, p)),
    }
}

fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let v = valuation(n, p);
    (v, n / BigInt::from(p).pow(v))
}

fn hilbert_at_prime(a: &BigInt, b: &BigInt, p: u64) -> i8 {
    let (alpha, u) = split_valuation(a, p);
    let (beta, v) = split_valuation(b, p);
    let neg = |e: u64| if e % 2 == 0 { 1 } else { -1 };
    if p == 2 {
        let u8_ = big_mod(&u, 8);
        let v8 = big_mod(&v, 8);
        let eps = |x: u64| ((x - 1) / 2) % 2;
        let omega = |x: u64| ((x * x - 1) / 8) % 2;
        let e = eps(u8_) * eps(v8) + u64::from(alpha) * omega(v8) + u64::from(beta) * omega(u8_);
        return neg(e);
    }
    let eps_p = (p - 1) / 2;
    let mut sign = neg(u64::from(alpha) * u64::from(beta) * eps_p);
    if beta % 2 == 1 {
        sign *= legendre(big_mod(&u, p), p) as i8;
    }
    if alpha % 2 == 1 {
        sign *= legendre(big_mod(&v, p), p) as i8;
    }
    sign
}

// ---------------------------------------------------------------------------
// Cubes in Z_p

fn rational_mod(t: &BigRational, m: u64) -> Option<u64> {
    let n = big_mod(t.numer(), m);
    let d = big_mod(t.denom(), m);
    crate::arith::inv_mod(d, m).map(|di| ((n as u128 * di as u128) % m as u128) as u64)
}

/// Decides whether the p-adic unit `t` is a cube in Z_p. A unit root of
/// `x^3 - t` is certified once `x^3 ≡ t (mod p^j)` with `j > 2 v(3)`.
pub fn is_cube_in_zp(t: &BigRational, p: u64, depth: u32) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t.is_zero() || valuation(t.numer(), p) > 0 || valuation(t.denom(), p) > 0 {
        return Err(Error::NotUnit);
    }
    let need = 2 * valuation_u64(3, p) + 1;
    if depth < need {
        return Err(Error::DepthExceeded(depth));
    }
    let m = p.pow(need);
    let target = rational_mod(t, m).ok_or(Error::NotUnit)?;
    if p > 3 {
        // need = 1: the unit group of F_p is cyclic.
        let e = (p - 1) / (p - 1).gcd(&3);
        return Ok(pow_mod(target, e, p) == 1);
    }
    Ok((1..m).filter(|x| x % p != 0).any(|x| pow_mod(x, 3, m) == target))
}

// ---------------------------------------------------------------------------
// Local solubility of a x^3 + b y^3 + c z^3 = 0

/// Largest prime handled by the residue-tree search; beyond it the (exactly
/// equivalent) cube-residue criterion is used.
const SEARCH_PRIME_LIMIT: u64 = 13;

/// Rescales variables so every coefficient has p-valuation 0, 1 or 2 and
/// at least one is a unit. Returns the coefficients as (valuation, unit part).
fn normalize_at(t: &PrimitiveTriple, p: u64) -> [(u32, u64); 3] {
    let mut out = t.coefficients().map(|c| {
        let v = valuation_u64(c, p);
        (v, c / p.pow(v))
    });
    for e in out.iter_mut() {
        e.0 %= 3;
    }
    let m = out.iter().map(|e| e.0).min().unwrap_or(0);
    for e in out.iter_mut() {
        e.0 -= m;
    }
    out
}

pub fn diagonal_cubic_soluble(t: &PrimitiveTriple, place: Place) -> bool {
    let p = match place {
        Place::Infinity => return true,
        Place::Prime(p) => p,
    };
    if p != 3 && t.coefficients().iter().all(|c| c % p != 0) {
        return true;
    }
    let norm = normalize_at(t, p);
    if p <= SEARCH_PRIME_LIMIT {
        let coeffs = norm.map(|(v, u)| u128::from(p.pow(v)) * u128::from(u));
        hensel_search(coeffs, p)
    } else {
        residue_criterion(norm, p)
    }
}

/// p ≠ 3, normalized valuations: insoluble when all three differ (descent
/// cycles through the variables), otherwise soluble iff the two coefficients
/// of equal valuation have ratio `-u/w` a cube mod p.
fn residue_criterion(norm: [(u32, u64); 3], p: u64) -> bool {
    for i in 0..3 {
        for j in (i + 1)..3 {
            if norm[i].0 == norm[j].0 {
                let inv = crate::arith::inv_mod(norm[j].1 % p, p).expect("unit");
                let r = (p - (norm[i].1 % p)) as u128 * inv as u128 % p as u128;
                let e = (p - 1) / (p - 1).gcd(&3);
                return pow_mod(r as u64, e, p) == 1;
            }
        }
    }
    false
}

/// Exhaustive search over normalized projective residues mod p^j, lifting
/// one level at a time, accepting a branch once Hensel applies.
fn hensel_search(coeffs: [u128; 3], p: u64) -> bool {
    let p128 = u128::from(p);
    let v3 = valuation_u64(3, p);
    let vals = coeffs.map(|c| valuation_u64(c as u64, p));
    let max_v = *vals.iter().max().unwrap();
    let depth = 1 + 2 * v3 + 2 * max_v;
    let f = |x: &[u128; 3], m: u128| -> u128 {
        (0..3).fold(0u128, |acc, i| {
            let xi = x[i] % m;
            (acc + coeffs[i] % m * (xi * xi % m) % m * xi) % m
        })
    };
    let accepted = |x: &[u128; 3], j: u32| -> bool {
        let m = p128.pow(j);
        (0..3).any(|i| {
            let r = x[i] % m;
            if r == 0 {
                return false;
            }
            let k = v3 + vals[i] + 2 * valuation_u64(r as u64, p);
            j > 2 * k
        })
    };

    let mut level: Vec<([u128; 3], usize)> = Vec::new();
    for first in 0..3 {
        let free: Vec<usize> = ((first + 1)..3).collect();
        let count = p128.pow(free.len() as u32);
        for idx in 0..count {
            let mut x = [0u128; 3];
            x[first] = 1;
            let mut rest = idx;
            for &i in &free {
                x[i] = rest % p128;
                rest /= p128;
            }
            if f(&x, p128) == 0 {
                level.push((x, first));
            }
        }
    }
    for j in 1..=depth {
        if level.iter().any(|(x, _)| accepted(x, j)) {
            return true;
        }
        if j == depth {
            break;
        }
        let step = p128.pow(j);
        let next_m = step * p128;
        let mut next = Vec::new();
        for (x, first) in &level {
            let free: Vec<usize> = (0..3).filter(|i| i != first).collect();
            for s in 0..p128 {
                for t in 0..p128 {
                    let mut y = *x;
                    y[free[0]] += s * step;
                    y[free[1]] += t * step;
                    if f(&y, next_m) == 0 {
                        next.push((y, *first));
                    }
                }
            }
        }
        level = next;
        if level.is_empty() {
            return false;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// 2-adic points on y^2 = x^3 + D

/// An element of Z_p known modulo `p^precision`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PadicApprox {
    pub p: u64,
    pub precision: u32,
    #[serde(with = "crate::serde_str")]
    pub value: u64,
    /// Equals `precision` when the value is 0 at this precision.
    pub valuation: u32,
}

impl PadicApprox {
    pub fn new(p: u64, precision: u32, value: i128) -> Self {
        let m = i128::from(p).pow(precision);
        let value = value.rem_euclid(m) as u64;
        let valuation = if value == 0 { precision } else { valuation_u64(value, p) };
        PadicApprox { p, precision, value, valuation }
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.precision)
    }

    /// The same element at lower precision.
    pub fn truncate(&self, precision: u32) -> Self {
        PadicApprox::new(self.p, precision.min(self.precision), i128::from(self.value))
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.p, self.precision)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurvePointApprox {
    Infinity,
    Affine {
        x: PadicApprox,
        y: PadicApprox,
        #[serde(with = "crate::serde_str")]
        d: i64,
    },
}

impl CurvePointApprox {
    /// The affine class of an exact integral point, e.g. `(3, 0)` on `D = -27`.
    pub fn from_integral(d: i64, x: i64, y: i64, p: u64, precision: u32) -> Result<Self> {
        if i128::from(y).pow(2) != i128::from(x).pow(3) + i128::from(d) {
            return Err(Error::Parse(format!("({x}, {y}) is not on y^2 = x^3 + {d}")));
        }
        Ok(CurvePointApprox::Affine {
            x: PadicApprox::new(p, precision, x.into()),
            y: PadicApprox::new(p, precision, y.into()),
            d,
        })
    }

    pub fn truncate(&self, precision: u32) -> Self {
        match *self {
            CurvePointApprox::Infinity => CurvePointApprox::Infinity,
            CurvePointApprox::Affine { x, y, d } => {
                CurvePointApprox::Affine { x: x.truncate(precision), y: y.truncate(precision), d }
            }
        }
    }
}

impl fmt::Display for CurvePointApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePointApprox::Infinity => f.write_str("O"),
            CurvePointApprox::Affine { x, y, .. } => {
                write!(f, "({}, {}) mod {}^{}", x.value, y.value, x.p, x.precision)
            }
        }
    }
}

fn curve_residue(x: u128, y: u128, d: i128, m: u128) -> u128 {
    let dm = d.rem_euclid(m as i128) as u128;
    let x3 = x % m * (x % m) % m * (x % m) % m;
    (y % m * (y % m) % m + m - (x3 + dm) % m) % m
}

/// Does the class `(x, y) mod p^k` contain a Q_p-point? Searches refinements
/// until the Hensel criterion certifies a root inside the class.
fn class_lifts(d: i64, p: u64, x: u128, y: u128, k: u32, j: u32, max_depth: u32) -> bool {
    let p128 = u128::from(p);
    let m = p128.pow(j);
    let v3 = valuation_u64(3, p);
    let v2 = valuation_u64(2, p);
    let kx = (x % m != 0).then(|| v3 + 2 * valuation_u64((x % m) as u64, p));
    let ky = (y % m != 0).then(|| v2 + valuation_u64((y % m) as u64, p));
    if [kx, ky].into_iter().flatten().any(|g| j > 2 * g && j - g >= k) {
        return true;
    }
    if j >= max_depth {
        return false;
    }
    let next = m * p128;
    (0..p128).any(|s| {
        (0..p128).any(|t| {
            let (x2, y2) = (x + s * m, y + t * m);
            curve_residue(x2, y2, d.into(), next) == 0 && class_lifts(d, p, x2, y2, k, j + 1, max_depth)
        })
    })
}

/// All classes `(x, y) mod p^precision` of integral points of `E(Q_p)` on
/// `y^2 = x^3 + D`, preceded by the point at infinity.
pub fn enumerate_e_points(d: i64, p: u64, precision: u32) -> Result<Vec<CurvePointApprox>> {
    if d == 0 {
        return Err(Error::ZeroD);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if precision < 3 {
        return Err(Error::PrecisionTooLow);
    }
    let m = u128::from(p)
        .checked_pow(precision)
        .filter(|&m| m <= 1 << 24)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{precision}")))?;
    let vd = valuation_u64(d.unsigned_abs(), p);
    let bound = valuation_u64(2, p) + valuation_u64(3, p) + vd;
    let max_depth = (precision + bound).max(2 * bound + 1);

    let mut roots: Vec<Vec<u128>> = vec![Vec::new(); m as usize];
    for y in 0..m {
        roots[(y * y % m) as usize].push(y);
    }
    let dm = i128::from(d).rem_euclid(m as i128) as u128;
    let mut points: Vec<CurvePointApprox> = (0..m)
        .into_par_iter()
        .flat_map_iter(|x| {
            let rhs = (x * x % m * x + dm) % m;
            roots[rhs as usize]
                .iter()
                .filter(|&&y| class_lifts(d, p, x, y, precision, precision, max_depth))
                .map(|&y| CurvePointApprox::Affine {
                    x: PadicApprox::new(p, precision, x as i128),
                    y: PadicApprox::new(p, precision, y as i128),
                    d,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    points.insert(0, CurvePointApprox::Infinity);
    Ok(points)
}

// ---------------------------------------------------------------------------
// Evaluation of beta

/// An element of ½Z/Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvaluationValue {
    Zero,
    Half,
}

impl fmt::Display for EvaluationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvaluationValue::Zero => "0",
            EvaluationValue::Half => "1/2",
        })
    }
}

impl FromStr for EvaluationValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(EvaluationValue::Zero),
            "1/2" => Ok(EvaluationValue::Half),
            t => Err(Error::Parse(format!("bad evaluation value {t:?}"))),
        }
    }
}

impl Serialize for EvaluationValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EvaluationValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Square class of `g(P)` as an integer `p^v * u` with the unit part `u`
/// known modulo 8 (p = 2) or modulo p; `None` at the point at infinity.
fn g_square_class(pt: &CurvePointApprox) -> Result<Option<BigInt>> {
    let CurvePointApprox::Affine { x, d, .. } = *pt else {
        return Ok(None);
    };
    if d != -27 {
        return Err(Error::WrongCurve(d));
    }
    let (p, k) = (x.p, x.precision);
    let m = i128::from(x.modulus());
    let xv = i128::from(x.value);
    let minus3 = PadicApprox::new(p, k, xv - 3);
    let g = if 2 * minus3.valuation < k {
        minus3
    } else {
        PadicApprox::new(p, k, (xv * xv % m + 3 * xv + 9) % m)
    };
    let resolve = if p == 2 { 3 } else { 1 };
    if g.valuation == k || k - g.valuation < resolve {
        return Err(Error::PrecisionTooLow);
    }
    // Any integer in this class mod p^k has the right square class.
    Ok(Some(BigInt::from(g.value)))
}

/// `inv_p (g(P), g(Q))` where the algebra is read at the prime of the points.
pub fn evaluate_beta(pt_p: &CurvePointApprox, pt_q: &CurvePointApprox) -> Result<EvaluationValue> {
    let gp = g_square_class(pt_p)?;
    let gq = g_square_class(pt_q)?;
    let (Some(gp), Some(gq)) = (gp, gq) else {
        return Ok(EvaluationValue::Zero);
    };
    let p = match (pt_p, pt_q) {
        (CurvePointApprox::Affine { x, .. }, CurvePointApprox::Affine { x: x2, .. }) if x.p == x2.p => x.p,
        _ => return Err(Error::Parse("points live over different primes".into())),
    };
    let one = BigInt::one();
    let s = hilbert_symbol(&BigRational::new(gp, one.clone()), &BigRational::new(gq, one), Place::Prime(p))?;
    Ok(if s == 1 { EvaluationValue::Zero } else { EvaluationValue::Half })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationImage {
    pub values: BTreeSet<EvaluationValue>,
    /// One pair of points realising each value.
    pub witnesses: Vec<(EvaluationValue, CurvePointApprox, CurvePointApprox)>,
    pub pairs_evaluated: usize,
}

impl EvaluationImage {
    pub fn is_surjective(&self) -> bool {
        self.values.len() == 2
    }
}

/// Evaluates beta on every pair of enumerated points of
/// `(E x E)(Q_2)`, `E: y^2 = x^3 - 27`, at `2^precision`.
pub fn evaluation_image(precision: u32) -> Result<EvaluationImage> {
    let points = enumerate_e_points(-27, 2, precision)?;
    let classes: Vec<Option<BigInt>> = points.iter().map(g_square_class).collect::<Result<_>>()?;
    let n = points.len();
    let values: Vec<EvaluationValue> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            match (&classes[i], &classes[j]) {
                (Some(a), Some(b)) if hilbert_at_prime(a, b, 2) == -1 => EvaluationValue::Half,
                _ => EvaluationValue::Zero,
            }
        })
        .collect();
    let mut image = EvaluationImage { values: BTreeSet::new(), witnesses: Vec::new(), pairs_evaluated: n * n };
    for (idx, v) in values.iter().enumerate() {
        if image.values.insert(*v) {
            image.witnesses.push((*v, points[idx / n], points[idx % n]));
        }
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeclass::{normalize_triple, rational};

    fn hs(a: i64, b: i64, v: Place) -> i8 {
        hilbert_symbol(&rational(a, 1), &rational(b, 1), v).unwrap()
    }

    #[test]
    fn hilbert_three_three() {
        assert_eq!(hs(3, 3, Place::Prime(2)), -1);
        assert_eq!(hs(3, 3, Place::Prime(3)), -1);
        for p in [5, 7, 11, 13, 97] {
            assert_eq!(hs(3, 3, Place::Prime(p)), 1);
        }
        assert_eq!(hs(3, 3, Place::Infinity), 1);
        assert_eq!(hs(-1, -1, Place::Infinity), -1);
        assert_eq!(hs(-1, -1, Place::Prime(2)), -1);
        assert_eq!(hs(1, -7, Place::Prime(7)), 1);
        assert_eq!(hs(2, 5, Place::Prime(5)), -1);
        assert_eq!(hilbert_symbol(&rational(0, 1), &rational(1, 1), Place::Infinity), Err(Error::ZeroInput));
    }

    #[test]
    fn cubes_in_zp() {
        assert!(is_cube_in_zp(&rational(3, 1), 2, 5).unwrap());
        assert!(is_cube_in_zp(&rational(5, 7), 2, 1).unwrap());
        assert!(!is_cube_in_zp(&rational(2, 1), 7, 3).unwrap());
        assert!(is_cube_in_zp(&rational(6, 1), 7, 3).unwrap());
        for p in [2, 3, 5, 7, 13] {
            assert!(is_cube_in_zp(&rational(1, 1), p, 5).unwrap());
        }
        // cubes of units mod 27 are ±1, ±8, ±10
        assert!(is_cube_in_zp(&rational(10, 1), 3, 3).unwrap());
        assert!(!is_cube_in_zp(&rational(4, 1), 3, 3).unwrap());
        assert_eq!(is_cube_in_zp(&rational(4, 1), 3, 2), Err(Error::DepthExceeded(2)));
        assert_eq!(is_cube_in_zp(&rational(6, 1), 3, 5), Err(Error::NotUnit));
    }

    #[test]
    fn solubility_examples() {
        let t = |a, b, c| normalize_triple(a, b, c).unwrap();
        for p in [2, 3, 5, 7] {
            assert!(diagonal_cubic_soluble(&t(1, 1, 1), Place::Prime(p)));
            assert!(diagonal_cubic_soluble(&t(3, 4, 5), Place::Prime(p)));
        }
        assert!(diagonal_cubic_soluble(&t(1, 1, 4), Place::Prime(2)));
        // x^3 + 2y^3 + 4z^3 has only the trivial 2-adic zero
        assert!(!diagonal_cubic_soluble(&t(1, 2, 4), Place::Prime(2)));
        // 1 + 3y^3 + 9z^3: x ≡ 0 mod 3 forces descent
        assert!(!diagonal_cubic_soluble(&t(1, 3, 9), Place::Prime(3)));
        // 2 is not a cube mod 7
        assert!(!diagonal_cubic_soluble(&t(1, 2, 7), Place::Prime(7)));
        assert!(diagonal_cubic_soluble(&t(1, 6, 7), Place::Prime(7)));
    }

    #[test]
    fn residue_criterion_matches_search() {
        for p in [5u64, 7, 11, 13] {
            for a in 1..=12u64 {
                for b in 1..=12u64 {
                    for c in [p, p * p, 2 * p, p * p * 3] {
                        let Ok(t) = normalize_triple(a as i64, b as i64, c as i64) else { continue };
                        let norm = normalize_at(&t, p);
                        let coeffs = norm.map(|(v, u)| u128::from(p.pow(v)) * u128::from(u));
                        assert_eq!(hensel_search(coeffs, p), residue_criterion(norm, p), "{t} at {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn e_points_contain_torsion() {
        let pts = enumerate_e_points(-27, 2, 8).unwrap();
        assert!(pts.contains(&CurvePointApprox::Infinity));
        let three = CurvePointApprox::from_integral(-27, 3, 0, 2, 8).unwrap();
        assert!(pts.contains(&three));
        for pt in &pts {
            if let CurvePointApprox::Affine { x, y, .. } = pt {
                assert_eq!(curve_residue(x.value.into(), y.value.into(), -27, 256), 0);
            }
        }
        assert_eq!(enumerate_e_points(-27, 2, 2), Err(Error::PrecisionTooLow));
    }

    #[test]
    fn beta_values() {
        let o = CurvePointApprox::Infinity;
        let three = CurvePointApprox::from_integral(-27, 3, 0, 2, 8).unwrap();
        assert_eq!(evaluate_beta(&o, &o).unwrap(), EvaluationValue::Zero);
        assert_eq!(evaluate_beta(&o, &three).unwrap(), EvaluationValue::Zero);
        assert_eq!(evaluate_beta(&three, &three).unwrap(), EvaluationValue::Half);
        let other = CurvePointApprox::from_integral(-1, 1, 0, 2, 8).unwrap();
        assert_eq!(evaluate_beta(&other, &three), Err(Error::WrongCurve(-1)));
        let coarse = CurvePointApprox::from_integral(-27, 7, 0, 2, 3);
        assert!(coarse.is_err());
    }

    #[test]
    fn place_round_trip() {
        for s in ["2", "97", "inf"] {
            assert_eq!(s.parse::<Place>().unwrap().to_string(), s);
        }
        assert!("4".parse::<Place>().is_err());
        assert!(Place::Prime(3) < Place::Infinity);
    }
}
