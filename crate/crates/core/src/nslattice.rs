//! The Néron-Severi lattice of `E x E` in Kani coordinates `(a, b, f)`, the
//! order-3 automorphism `rho(P, Q) = (Q, -P-Q)` acting on it, and the group
//! `H^1(<rho>, NS) = ker(1 + rho + rho^2) / (rho - 1) NS`.
//!
//! Kani's isomorphism sends `(a, b, f)` to `(a-1) e + (b - deg f) e' + Γ_f`,
//! where `e = E x {0}`, `e' = {0} x E` and `Γ_f` is the graph of `f`. So
//! `e = (1, 0, 0)`, `e' = (0, 1, 0)` and `Γ_f = (1, deg f, f)`. With CM by an
//! order `Z[α]`, `α^2 + cα + d = 0`, a class is the integer vector
//! `(a, b, u, v)` with `f = u + vα`; without CM `f = u` and the vector is
//! `(a, b, u)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::intmatrix::IntMatrix;

/// `u + v α` in `End(E)`; `v = 0` when `E` has no CM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EndElement {
    pub u: i64,
    pub v: i64,
}

impl EndElement {
    pub const fn new(u: i64, v: i64) -> Self {
        EndElement { u, v }
    }

    pub const fn int(u: i64) -> Self {
        EndElement { u, v: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.u == 0 && self.v == 0
    }
}

/// `End(E)`: either `Z[α]` with `α^2 + cα + d = 0`, `c^2 - 4d < 0`, or `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndRing {
    Cm { c: i64, d: i64 },
    NonCm,
}

impl EndRing {
    pub fn cm(c: i64, d: i64) -> Result<Self> {
        if c * c - 4 * d >= 0 {
            return Err(Error::NotImaginary { c, d });
        }
        Ok(EndRing::Cm { c, d })
    }

    pub fn rank(&self) -> usize {
        match self {
            EndRing::Cm { .. } => 4,
            EndRing::NonCm => 3,
        }
    }

    fn params(&self) -> (i64, i64) {
        match *self {
            EndRing::Cm { c, d } => (c, d),
            EndRing::NonCm => (0, 0),
        }
    }

    /// Rosati dual, i.e. complex conjugation: `ᾱ = -c - α`.
    pub fn dual(&self, f: EndElement) -> EndElement {
        let (c, _) = self.params();
        EndElement::new(f.u - c * f.v, -f.v)
    }

    pub fn degree(&self, f: EndElement) -> i64 {
        let (c, d) = self.params();
        f.u * f.u - c * f.u * f.v + d * f.v * f.v
    }

    pub fn mul(&self, f: EndElement, g: EndElement) -> EndElement {
        let (c, d) = self.params();
        // α^2 = -cα - d
        let vv = f.v * g.v;
        EndElement::new(f.u * g.u - d * vv, f.u * g.v + f.v * g.u - c * vv)
    }

    /// Reduced trace `x + x̄` of an element of `Z[α]`.
    pub fn trace(&self, f: EndElement) -> i64 {
        let (c, _) = self.params();
        2 * f.u - c * f.v
    }

    /// `Tr(f^∨ g)`, the symmetric bilinear form with `Tr(f^∨ f) = 2 deg f`.
    pub fn trace_form(&self, f: EndElement, g: EndElement) -> i64 {
        self.trace(self.mul(self.dual(f), g))
    }
}

/// A Néron-Severi class in Kani coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KaniClass {
    pub a: i64,
    pub b: i64,
    pub f: EndElement,
}

impl KaniClass {
    pub const fn new(a: i64, b: i64, f: EndElement) -> Self {
        KaniClass { a, b, f }
    }

    /// `e = E x {0} = Γ_0`.
    pub const fn e() -> Self {
        KaniClass::new(1, 0, EndElement::int(0))
    }

    /// `e' = {0} x E`.
    pub const fn e_prime() -> Self {
        KaniClass::new(0, 1, EndElement::int(0))
    }

    /// The graph `Γ_f = (1, deg f, f)`.
    pub fn graph(ring: &EndRing, f: EndElement) -> Self {
        KaniClass::new(1, ring.degree(f), f)
    }

    pub fn add(&self, o: &KaniClass) -> KaniClass {
        KaniClass::new(self.a + o.a, self.b + o.b, EndElement::new(self.f.u + o.f.u, self.f.v + o.f.v))
    }

    pub fn scale(&self, k: i64) -> KaniClass {
        KaniClass::new(k * self.a, k * self.b, EndElement::new(k * self.f.u, k * self.f.v))
    }

    /// Exchange the factors: `(a, b, f) -> (b, a, f^∨)`.
    pub fn swap_factors(&self, ring: &EndRing) -> KaniClass {
        KaniClass::new(self.b, self.a, ring.dual(self.f))
    }

    pub fn to_vector(&self, ring: &EndRing) -> Vec<BigInt> {
        let mut v = vec![self.a.into(), self.b.into(), self.f.u.into()];
        if matches!(ring, EndRing::Cm { .. }) {
            v.push(self.f.v.into());
        }
        v
    }

    pub fn from_vector(v: &[BigInt]) -> KaniClass {
        let get = |i: usize| v.get(i).map_or(0, |x| x.to_i64().expect("small coordinate"));
        KaniClass::new(get(0), get(1), EndElement::new(get(2), get(3)))
    }
}

/// Intersection pairing `x.y = a b' + a' b - Tr(f^∨ f')`, so `x^2 = 2(ab - deg f)`.
pub fn intersection_pairing(ring: &EndRing, x: &KaniClass, y: &KaniClass) -> i64 {
    x.a * y.b + y.a * x.b - ring.trace_form(x.f, y.f)
}

/// `Γ^{-1}_f = {(f(P), P)}` for an isogeny `f`, i.e. `Γ_{f^∨} + (deg f - 1)(e - e')`.
pub fn inverse_graph(ring: &EndRing, f: EndElement) -> Result<KaniClass> {
    if f.is_zero() {
        return Err(Error::ZeroIsogeny);
    }
    let shift = KaniClass::e().add(&KaniClass::e_prime().scale(-1));
    Ok(KaniClass::graph(ring, ring.dual(f)).add(&shift.scale(ring.degree(f) - 1)))
}

/// The matrix of `rho` on `NS(E x E)` in Kani coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeAction {
    pub ring: EndRing,
    pub matrix: IntMatrix,
}

impl LatticeAction {
    pub fn apply(&self, x: &KaniClass) -> KaniClass {
        KaniClass::from_vector(&self.matrix.apply(&x.to_vector(&self.ring)))
    }

    /// `N = 1 + R + R^2`.
    pub fn norm_map(&self) -> IntMatrix {
        let n = self.matrix.rows();
        let r2 = &self.matrix * &self.matrix;
        &(&IntMatrix::identity(n) + &self.matrix) + &r2
    }

    pub fn minus_identity(&self) -> IntMatrix {
        &self.matrix - &IntMatrix::identity(self.matrix.rows())
    }

    pub fn has_order_three(&self) -> bool {
        let n = self.matrix.rows();
        self.matrix.pow(3) == IntMatrix::identity(n) && self.matrix != IntMatrix::identity(n)
    }
}

/// Columns are the images of the basis `e, e', Γ_1, Γ_α`:
/// `ρ(1,0,0) = (1,1,-1)`, `ρ(0,1,0) = (1,0,0)`, `ρ(0,0,1) = (2,0,-1)` and
/// `ρ(0,0,α) = (-c,0,α+c)`. Without CM the `α` row and column are dropped.
pub fn rho_action(cm: Option<(i64, i64)>) -> Result<LatticeAction> {
    let ring = match cm {
        Some((c, d)) => EndRing::cm(c, d)?,
        None => EndRing::NonCm,
    };
    let matrix = match ring {
        EndRing::Cm { c, .. } => IntMatrix::from_rows(&[
            vec![1, 1, 2, -c],
            vec![1, 0, 0, 0],
            vec![-1, 0, -1, c],
            vec![0, 0, 0, 1],
        ]),
        EndRing::NonCm => IntMatrix::from_rows(&[vec![1, 1, 2], vec![1, 0, 0], vec![-1, 0, -1]]),
    };
    Ok(LatticeAction { ring, matrix })
}

/// `ker(N) / im(R - I)` described by its invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    /// Invariant factors of the quotient; a 0 entry stands for a free summand.
    pub invariant_factors: Vec<u64>,
    pub kernel_rank: usize,
    pub image_rank: usize,
}

impl CohomologyResult {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.iter().all(|&d| d == 1)
    }

    /// Group order, or `None` if infinite.
    pub fn order(&self) -> Option<u64> {
        self.invariant_factors
            .iter()
            .try_fold(1u64, |acc, &d| (d != 0).then(|| acc * d))
    }
}

pub fn cyclic_h1(action: &LatticeAction) -> Result<CohomologyResult> {
    if !action.has_order_three() {
        return Err(Error::NotOrderThree);
    }
    let (kernel, coords) = action.norm_map().kernel_with_coordinates();
    let k = kernel.cols();
    // (R - I) lands in ker N because N (R - I) = R^3 - I = 0.
    let image_in_kernel = &coords * &action.minus_identity();
    let factors = image_in_kernel.smith_invariants();
    let image_rank = factors.len();
    let mut invariant_factors: Vec<u64> =
        factors.iter().map(|d| d.to_u64().expect("small invariant factor")).collect();
    invariant_factors.extend(std::iter::repeat_n(0, k - image_rank));
    Ok(CohomologyResult { invariant_factors, kernel_rank: k, image_rank })
}

/// Whether `(R - I) NS` is saturated in `NS`.
pub fn image_is_primitive(action: &LatticeAction) -> bool {
    action.minus_identity().smith_invariants().iter().all(One::is_one)
}

/// Determinant of `(ρ - 1)(P, Q) = (-2P - Q, P - Q)` on `A^∨`.
pub fn torsion_surjectivity_det() -> i64 {
    let m = torsion_map();
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn torsion_map() -> [[i64; 2]; 2] {
    [[-2, -1], [1, -1]]
}

/// The map induced on `(Z/n)^2` is onto iff every invariant factor is a unit mod `n`.
pub fn torsion_map_surjective_mod(n: u64) -> bool {
    let m = torsion_map();
    let mat = IntMatrix::from_rows(&[m[0].to_vec(), m[1].to_vec()]);
    let factors = mat.smith_invariants();
    factors.len() == 2 && factors.iter().all(|d| num_integer::Integer::gcd(d, &BigInt::from(n)).is_one())
}

/// Dense polynomial in `r, s` with coefficients indexed by `[deg_r][deg_s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    coeffs: Vec<Vec<i64>>,
}

impl Poly2 {
    const SIZE: usize = 10;

    pub fn zero() -> Self {
        Poly2 { coeffs: vec![vec![0; Self::SIZE]; Self::SIZE] }
    }

    pub fn monomial(coeff: i64, i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.coeffs[i][j] = coeff;
        p
    }

    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, i, j)| acc.add(&Self::monomial(c, i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|&c| c == 0)
    }

    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        self.coeffs[i][j]
    }

    pub fn add(&self, o: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for i in 0..Self::SIZE {
            for j in 0..Self::SIZE {
                out.coeffs[i][j] += o.coeffs[i][j];
            }
        }
        out
    }

    pub fn sub(&self, o: &Poly2) -> Poly2 {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Poly2 {
        Poly2 { coeffs: self.coeffs.iter().map(|row| row.iter().map(|c| c * k).collect()).collect() }
    }

    /// Panics if the product would exceed total degree 9.
    pub fn mul(&self, o: &Poly2) -> Poly2 {
        let mut out = Self::zero();
        for (i1, row1) in self.coeffs.iter().enumerate() {
            for (j1, &c1) in row1.iter().enumerate().filter(|(_, c)| **c != 0) {
                for (i2, row2) in o.coeffs.iter().enumerate() {
                    for (j2, &c2) in row2.iter().enumerate().filter(|(_, c)| **c != 0) {
                        assert!(i1 + i2 < Self::SIZE && j1 + j2 < Self::SIZE, "degree overflow");
                        out.coeffs[i1 + i2][j1 + j2] += c1 * c2;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly2 {
        (0..e).fold(Self::monomial(1, 0, 0), |acc, _| acc.mul(self))
    }

    /// `self(r_image, s_image)`.
    pub fn substitute(&self, r_image: &Poly2, s_image: &Poly2) -> Poly2 {
        let mut out = Self::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate().filter(|(_, c)| **c != 0) {
                out = out.add(&r_image.pow(i as u32).mul(&s_image.pow(j as u32)).scale(c));
            }
        }
        out
    }

    pub fn eval(&self, r: i64, s: i64) -> i64 {
        let mut acc = 0;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                acc += c * r.pow(i as u32) * s.pow(j as u32);
            }
        }
        acc
    }
}

/// The generators `a = r^2+rs+s^2`, `b = -3rs(r+s)`, `c = r^3+3r^2 s-s^3` of the
/// invariants of `(r, s) -> (s, -r-s)`.
pub fn a2_generators() -> [Poly2; 3] {
    [
        Poly2::from_terms(&[(1, 2, 0), (1, 1, 1), (1, 0, 2)]),
        Poly2::from_terms(&[(-3, 2, 1), (-3, 1, 2)]),
        Poly2::from_terms(&[(1, 3, 0), (3, 2, 1), (-1, 0, 3)]),
    ]
}

/// Checks invariance of the three generators and the relation `a^3 = b^2 + bc + c^2`.
pub fn verify_a2_invariants() -> bool {
    let [a, b, c] = a2_generators();
    let r_image = Poly2::monomial(1, 0, 1);
    let s_image = Poly2::from_terms(&[(-1, 1, 0), (-1, 0, 1)]);
    let invariant = [&a, &b, &c].iter().all(|g| g.substitute(&r_image, &s_image) == **g);
    let relation = a.pow(3).sub(&b.pow(2)).sub(&b.mul(&c)).sub(&c.pow(2));
    invariant && relation.is_zero()
}
