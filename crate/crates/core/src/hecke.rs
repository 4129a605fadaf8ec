//! Hecke character of the CM curve `y^2 = x^3 + D` over K = Q(sqrt(-3)), its
//! base change to `K(cbrt(lambda))`, and the scan for a prime certifying that
//! no Hecke value lies in the order `Z + 3 Z[w]`.
//!
//! At a prime `p ≡ 1 (mod 3)` of good reduction with primary generator `pi`,
//! `psi(p) = (4D/pi)_6^{-1} * pi`, and a prime of `KL` above it with relative
//! inertia degree `f` gets `psi(p)^f`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{big_mod, pow_mod, primes_up_to};
use crate::cubeclass::{is_integer_cube, LambdaChoice, PrimitiveTriple};
use crate::eisenstein::{
    cubic_symbol_of_int, norm, primary_prime_above, sextic_symbol, EisensteinInt, PrimaryPrime,
    SexticUnit,
};
use crate::error::{Error, Result};

pub const DEFAULT_SCAN_BOUND: u64 = 100_000;

/// The elliptic curve `y^2 = x^3 + D`, with CM by Z[w].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveModel {
    #[serde(with = "crate::serde_str")]
    d: BigInt,
}

impl CurveModel {
    pub fn new(d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroD);
        }
        Ok(CurveModel { d })
    }

    pub fn jacobian_of(t: &PrimitiveTriple) -> Self {
        CurveModel { d: jacobian_d(t) }
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn four_d(&self) -> BigInt {
        &self.d * 4
    }

    /// A prime `p` has good reduction iff `p ∤ 6D`.
    pub fn has_good_reduction_at(&self, p: u64) -> bool {
        p != 2 && p != 3 && !(&self.d % p).is_zero()
    }
}

impl fmt::Display for CurveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d.is_negative() {
            write!(f, "y^2 = x^3 - {}", -&self.d)
        } else {
            write!(f, "y^2 = x^3 + {}", self.d)
        }
    }
}

/// `D = -2^4 3^3 (abc)^2`, the Jacobian of `ax^3 + by^3 + cz^3 = 0`.
pub fn jacobian_d(t: &PrimitiveTriple) -> BigInt {
    let abc = t.abc();
    BigInt::from(-432) * &abc * &abc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeValue {
    pub value: EisensteinInt,
    pub prime: PrimaryPrime,
    pub inertia_degree: u32,
}

impl HeckeValue {
    /// `psi + conj(psi)`, which equals the trace of Frobenius when `f = 1`.
    pub fn trace(&self) -> BigInt {
        &self.value.x * 2 - &self.value.y
    }
}

/// The order `Z + l^k Z[w]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderMembership {
    pub l: u64,
    pub k: u32,
}

pub fn hecke_at_split_prime(curve: &CurveModel, pi: &PrimaryPrime, inertia_degree: u32) -> Result<HeckeValue> {
    if !pi.is_split() {
        return Err(Error::NotSplit);
    }
    let p = pi.rational_prime();
    if !curve.has_good_reduction_at(p) {
        return Err(Error::BadReduction(p));
    }
    let chi = sextic_symbol(&EisensteinInt::from_int(curve.four_d()), pi)?;
    let base = &chi.inverse().to_eisenstein() * pi.pi();
    Ok(HeckeValue { value: base.pow(inertia_degree), prime: pi.clone(), inertia_degree })
}

/// `u + v w ∈ Z + l^k Z[w]` iff `l^k | v`.
pub fn in_order(v: &HeckeValue, m: OrderMembership) -> bool {
    let modulus = BigInt::from(m.l).pow(m.k);
    v.value.y.is_multiple_of(&modulus)
}

/// Everything needed to re-check a witness prime for `m(3) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct M3Certificate {
    #[serde(with = "crate::serde_str")]
    pub prime: u64,
    pub pi: EisensteinInt,
    pub lambda: String,
    /// Cubic symbol of lambda at `pi`; 1 means `pi` splits in `K(cbrt(lambda))`.
    pub lambda_symbol: SexticUnit,
    pub four_d_cubic_symbol: SexticUnit,
    pub four_d_sextic_symbol: SexticUnit,
    #[serde(with = "crate::serde_str")]
    pub inertia_degree: u32,
    pub hecke_value: EisensteinInt,
    pub in_order_3: bool,
}

impl M3Certificate {
    /// Re-derives every link of the chain from scratch.
    pub fn verify(&self, curve: &CurveModel) -> bool {
        let Ok(pp) = PrimaryPrime::from_generator(&self.pi) else {
            return false;
        };
        let Ok(value) = hecke_at_split_prime(curve, &pp, 1) else {
            return false;
        };
        pp.is_split()
            && pp.rational_prime() == self.prime
            && norm(pp.pi()) == BigInt::from(self.prime)
            && self.lambda_symbol.is_one()
            && !self.four_d_cubic_symbol.is_one()
            && self.four_d_sextic_symbol.pow(2) == self.four_d_cubic_symbol
            && !self.four_d_sextic_symbol.is_real()
            && value.value == self.hecke_value
            && !in_order(&value, OrderMembership { l: 3, k: 1 })
            && !self.in_order_3
    }
}

fn is_cube_mod(n: u64, p: u64) -> bool {
    pow_mod(n, (p - 1) / 3, p) == 1
}

/// Smallest prime `p ≤ bound`, `p ≡ 1 (mod 3)`, `p ∤ 6D num(λ) den(λ)`, at
/// which `λ` is a cube (so `f = 1` in `KL/K`) while `4D` is not.
pub fn find_m3_witness(curve: &CurveModel, lambda: &LambdaChoice, bound: u64) -> Result<M3Certificate> {
    let four_d = curve.four_d();
    if is_integer_cube(&four_d)? {
        return Err(Error::CubeCase);
    }
    let lambda_int = lambda.integral_representative();
    let primes = primes_up_to(bound);
    let witness = primes.par_iter().find_first(|&&p| {
        if p % 3 != 1 || !curve.has_good_reduction_at(p) {
            return false;
        }
        let l = big_mod(&lambda_int, p);
        l != 0 && is_cube_mod(l, p) && !is_cube_mod(big_mod(&four_d, p), p)
    });
    let p = *witness.ok_or(Error::NotFound { bound })?;
    certificate_at(curve, lambda, p)
}

/// Builds the certificate at a given prime through the Z[w] symbol routines.
pub fn certificate_at(curve: &CurveModel, lambda: &LambdaChoice, p: u64) -> Result<M3Certificate> {
    let pi = primary_prime_above(p)?;
    let four_d = curve.four_d();
    let lambda_symbol = cubic_symbol_of_int(&lambda.integral_representative(), &pi)?;
    let four_d_cubic_symbol = cubic_symbol_of_int(&four_d, &pi)?;
    let four_d_sextic_symbol = sextic_symbol(&EisensteinInt::from_int(four_d), &pi)?;
    let value = hecke_at_split_prime(curve, &pi, 1)?;
    Ok(M3Certificate {
        prime: p,
        pi: pi.pi().clone(),
        lambda: lambda.to_string(),
        lambda_symbol,
        four_d_cubic_symbol,
        four_d_sextic_symbol,
        inertia_degree: 1,
        in_order_3: in_order(&value, OrderMembership { l: 3, k: 1 }),
        hecke_value: value.value,
    })
}
