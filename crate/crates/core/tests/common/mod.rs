//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own algorithms for the quantity being checked.
#![allow(dead_code)]

use kummer_brauer::eisenstein::{EisensteinInt, SexticUnit};
use kummer_brauer::intmatrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// A finite field given as `Z/p` (split) or `F_p[w]/(w^2+w+1)` (inert),
/// with elements stored as pairs `x + y w`.
#[derive(Clone, Copy)]
pub struct Field {
    pub p: u64,
    /// `Some(r)`: w maps to r in Z/p.
    pub root: Option<u64>,
}

impl Field {
    pub fn order(&self) -> u64 {
        if self.root.is_some() { self.p } else { self.p * self.p }
    }

    pub fn reduce(&self, z: &EisensteinInt) -> (u64, u64) {
        let m = |n: &BigInt| {
            let p = BigInt::from(self.p);
            (((n % &p) + &p) % &p).to_u64().unwrap()
        };
        let (x, y) = (m(&z.x), m(&z.y));
        match self.root {
            Some(r) => ((x + y * r) % self.p, 0),
            None => (x, y),
        }
    }

    pub fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        let p = self.p;
        match self.root {
            Some(_) => (a.0 * b.0 % p, 0),
            None => {
                let yy = a.1 * b.1 % p;
                ((a.0 * b.0 + p - yy) % p, (a.0 * b.1 + a.1 * b.0 + p - yy) % p)
            }
        }
    }

    pub fn elements(&self) -> Vec<(u64, u64)> {
        match self.root {
            Some(_) => (0..self.p).map(|x| (x, 0)).collect(),
            None => (0..self.p).flat_map(|x| (0..self.p).map(move |y| (x, y))).collect(),
        }
    }

    /// Some generator of the multiplicative group, found by computing orders.
    pub fn generator(&self) -> (u64, u64) {
        let n = self.order() - 1;
        self.elements()
            .into_iter()
            .filter(|&e| e != (0, 0))
            .find(|&g| {
                let mut acc = g;
                let mut k = 1;
                while acc != (1, 0) {
                    acc = self.mul(acc, g);
                    k += 1;
                }
                k == n
            })
            .unwrap()
    }
}

/// Residue field of the prime `pi` of norm `p` (split) or `-p` (inert).
pub fn residue_field(pi: &EisensteinInt) -> Field {
    let n = (&pi.x * &pi.x - &pi.x * &pi.y + &pi.y * &pi.y).to_u64().unwrap();
    if is_prime_naive(n) {
        let root = (0..n)
            .find(|&r| {
                (r * r + r + 1) % n == 0 && {
                    let f = Field { p: n, root: Some(r) };
                    f.reduce(pi) == (0, 0)
                }
            })
            .unwrap();
        Field { p: n, root: Some(root) }
    } else {
        let p = (-&pi.x).to_u64().unwrap();
        Field { p, root: None }
    }
}

/// `(alpha/pi)_d` by discrete logarithms: with `alpha = g^k`, the symbol is
/// the root of unity congruent to `g^(k (q-1)/d)`.
pub fn residue_symbol_oracle(alpha: &EisensteinInt, pi: &EisensteinInt, degree: u64) -> Option<SexticUnit> {
    let f = residue_field(pi);
    let q = f.order();
    let a = f.reduce(alpha);
    if a == (0, 0) || !(q - 1).is_multiple_of(degree) {
        return None;
    }
    let g = f.generator();
    let mut acc = (1, 0);
    let mut k = 0;
    while acc != a {
        acc = f.mul(acc, g);
        k += 1;
    }
    let target_exp = (k * ((q - 1) / degree)) % (q - 1);
    let mut target = (1, 0);
    for _ in 0..target_exp {
        target = f.mul(target, g);
    }
    // a d-th root of unity; over F_4 the units only differ up to sign
    SexticUnit::all()
        .into_iter()
        .filter(|u| u.pow(degree as u32).is_one())
        .find(|u| f.reduce(&u.to_eisenstein()) == target)
}

/// Primary generators of all primes of Z[w] coprime to 3 with norm below `bound`.
pub fn primary_primes_below(bound: u64) -> Vec<EisensteinInt> {
    let mut out = Vec::new();
    for p in 2..bound {
        if !is_prime_naive(p) || p == 3 {
            continue;
        }
        if p % 3 == 1 {
            // every x + y w of norm p, keeping the primary ones (x ≡ 1, y ≡ 0 mod 3)
            let s = (2 * p as i64).isqrt() + 2;
            for x in -s..=s {
                for y in -s..=s {
                    if x * x - x * y + y * y == p as i64 && x.rem_euclid(3) == 1 && y.rem_euclid(3) == 0 {
                        out.push(EisensteinInt::new(x, y));
                    }
                }
            }
        } else if p * p < bound {
            out.push(EisensteinInt::new(-(p as i64), 0));
        }
    }
    out
}

/// `a_p = -sum_x (x^3 + D / p)` by direct counting.
pub fn frobenius_trace(d: i64, p: u64) -> i64 {
    let p_i = p as i64;
    let mut squares = vec![0i64; p as usize];
    for y in 0..p_i {
        squares[(y * y % p_i) as usize] += 1;
    }
    let affine: i64 = (0..p_i).map(|x| squares[((x * x % p_i * x + d).rem_euclid(p_i)) as usize]).sum();
    p_i + 1 - (affine + 1)
}

/// Is there a primitive solution of `a x^3 + b y^3 + c z^3 ≡ 0 (mod p^k)`?
pub fn brute_soluble_mod(coeffs: [u64; 3], p: u64, k: u32) -> bool {
    let m = p.pow(k);
    let c = coeffs.map(|a| a % m);
    let cube = |x: u64| x * x % m * x % m;
    for first in 0..3 {
        let range = |i: usize| -> Vec<u64> {
            if i < first {
                (0..m).step_by(p as usize).collect()
            } else if i == first {
                vec![1]
            } else {
                (0..m).collect()
            }
        };
        let (r0, r1, r2) = (range(0), range(1), range(2));
        for &x in &r0 {
            for &y in &r1 {
                let partial = (c[0] * cube(x) + c[1] * cube(y)) % m;
                if r2.iter().any(|&z| (partial + c[2] * cube(z)).is_multiple_of(m)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Block-diagonal order-3 matrix: `t` trivial blocks, `w` copies of the
/// companion matrix of `x^2 + x + 1`, `c` cyclic permutations.
pub fn order_three_blocks(t: usize, w: usize, c: usize) -> IntMatrix {
    let n = t + 2 * w + 3 * c;
    let mut m = IntMatrix::zeros(n, n);
    let mut i = 0;
    for _ in 0..t {
        m[(i, i)] = 1.into();
        i += 1;
    }
    for _ in 0..w {
        m[(i, i + 1)] = (-1).into();
        m[(i + 1, i)] = 1.into();
        m[(i + 1, i + 1)] = (-1).into();
        i += 2;
    }
    for _ in 0..c {
        m[(i + 1, i)] = 1.into();
        m[(i + 2, i + 1)] = 1.into();
        m[(i, i + 2)] = 1.into();
        i += 3;
    }
    m
}

/// A unimodular matrix built from elementary operations, and its inverse.
pub fn random_unimodular(n: usize, rng: &mut impl rand::Rng) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    for _ in 0..(3 * n) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let k: i64 = rng.gen_range(-2..=2);
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = k.into();
        let mut e_inv = IntMatrix::identity(n);
        e_inv[(i, j)] = (-k).into();
        u = &u * &e;
        inv = &e_inv * &inv;
    }
    (u, inv)
}
