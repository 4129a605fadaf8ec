//! Dense integer matrices with exact big-integer entries: saturated kernels by
//! unimodular column reduction and invariant factors by Smith normal form.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = x.into();
            }
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Self {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        (0..e).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `col[dst] -= q * col[src]`
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = &self[(i, src)] * q;
            self[(i, dst)] -= t;
        }
    }

    /// `row[dst] -= q * row[src]`
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = &self[(src, j)] * q;
            self[(dst, j)] -= t;
        }
    }

    /// Unimodular column reduction `A U = [H | 0]`. Returns `(H-rank, U, U^{-1})`.
    fn column_reduce(&self) -> (usize, IntMatrix, IntMatrix) {
        let n = self.cols;
        let mut a = self.clone();
        let mut u = Self::identity(n);
        let mut uinv = Self::identity(n);
        let mut pc = 0;
        for i in 0..self.rows {
            if pc == n {
                break;
            }
            loop {
                let pivot = (pc..n)
                    .filter(|&j| !a[(i, j)].is_zero())
                    .min_by_key(|&j| a[(i, j)].abs());
                let Some(j0) = pivot else { break };
                a.swap_cols(pc, j0);
                u.swap_cols(pc, j0);
                uinv.swap_rows(pc, j0);
                let mut done = true;
                for j in pc + 1..n {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    let q = a[(i, j)].div_floor(&a[(i, pc)]);
                    a.col_axpy(j, pc, &q);
                    u.col_axpy(j, pc, &q);
                    // U' = U E with E^{-1} adding q*row_j to row_pc
                    uinv.row_axpy(pc, j, &-&q);
                    if !a[(i, j)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !a[(i, pc)].is_zero() {
                pc += 1;
            }
        }
        (pc, u, uinv)
    }

    /// A basis of `{x : A x = 0}` as columns; the span is saturated in Z^n.
    pub fn kernel(&self) -> IntMatrix {
        let (rank, u, _) = self.column_reduce();
        let cols: Vec<Vec<BigInt>> = (rank..self.cols).map(|j| u.column(j)).collect();
        let mut k = Self::from_columns(&cols);
        if cols.is_empty() {
            k = Self::zeros(self.cols, 0);
        }
        k
    }

    /// Kernel basis `K` together with the coordinate map: for `v` in the kernel,
    /// `coords.apply(v)` gives `c` with `K c = v`.
    pub fn kernel_with_coordinates(&self) -> (IntMatrix, IntMatrix) {
        let (rank, u, uinv) = self.column_reduce();
        let n = self.cols;
        let k = n - rank;
        let mut basis = Self::zeros(n, k);
        let mut coords = Self::zeros(k, n);
        for t in 0..k {
            for i in 0..n {
                basis[(i, t)] = u[(i, rank + t)].clone();
                coords[(t, i)] = uinv[(rank + t, i)].clone();
            }
        }
        (basis, coords)
    }

    pub fn rank(&self) -> usize {
        self.column_reduce().0
    }

    /// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form.
    ///
    /// Always pivots on the smallest nonzero entry of the remaining block,
    /// which keeps intermediate entries from blowing up.
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut out = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[(i, j)].is_zero())
                .min_by_key(|&(i, j)| a[(i, j)].abs())
            else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let p = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                let q = a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    a.row_axpy(i, t, &q);
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    a.col_axpy(j, t, &q);
                }
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // enforce d_t | every remaining entry
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&p)));
            if let Some(i) = bad {
                a.row_axpy(t, i, &-BigInt::one());
                continue;
            }
            out.push(p.abs());
            t += 1;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn mul(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let t = &self[(i, k)] * &o[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn add(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn sub(self, o: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
