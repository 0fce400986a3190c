//! Dense exact linear algebra over F_p: rank, nullspace, solving, inverses.
//!
//! Everything is plain Gaussian elimination; matrices stay small (a few
//! hundred rows at most) so no effort is spent on asymptotics.

use crate::field::Fp;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: Fp,
    data: Vec<u64>,
}

impl DenseMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Fp, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.modulus()));
        DenseMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Entries i.i.d. uniform on F_p, deterministic for a fixed rng state.
    pub fn random<R: Rng>(field: Fp, rows: usize, cols: usize, rng: &mut R) -> Self {
        let p = field.modulus();
        let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
        DenseMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data,
        }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data,
        }
    }

    pub fn scale(&self, c: u64) -> DenseMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data,
        }
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let f = self.field;
        let p = f.modulus() as u128;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc: u128 = 0;
                for k in 0..self.cols {
                    acc += self.get(r, k) as u128 * other.get(k, c) as u128;
                    if acc >= u128::MAX / 2 {
                        acc %= p;
                    }
                }
                out.set(r, c, (acc % p) as u64);
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let p = f.modulus() as u128;
        (0..self.rows)
            .map(|r| {
                let mut acc: u128 = 0;
                for k in 0..self.cols {
                    acc = (acc + self.get(r, k) as u128 * v[k] as u128) % p;
                }
                acc as u64
            })
            .collect()
    }

    pub fn hstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn vstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        DenseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> DenseMatrix {
        let mut out = Self::zeros(self.field, self.rows, idx.len());
        for (j, &c) in idx.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let mut pivot = None;
            for r in row..self.rows {
                if self.get(r, col) != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else { continue };
            if pr != row {
                for c in 0..self.cols {
                    let a = self.get(row, c);
                    let b = self.get(pr, c);
                    self.set(row, c, b);
                    self.set(pr, c, a);
                }
            }
            let inv = f.inv(self.get(row, col));
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for c in col..self.cols {
                        let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Columns form a basis of the right kernel; column count = cols - rank.
    pub fn nullspace_basis(&self) -> DenseMatrix {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = Self::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(m.get(r, fc)));
            }
        }
        basis
    }

    /// Rows form a basis of the left kernel (vectors v with v * self = 0).
    pub fn left_nullspace(&self) -> DenseMatrix {
        self.transpose().nullspace_basis().transpose()
    }

    /// Basis of the column space, as a matrix whose columns are independent
    /// columns of `self` (chosen at the rref pivot positions).
    pub fn column_space_basis(&self) -> DenseMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        self.select_columns(&pivots)
    }

    /// Solve self * X = rhs. Returns None when inconsistent.
    pub fn solve_matrix(&self, rhs: &DenseMatrix) -> Option<DenseMatrix> {
        assert_eq!(self.rows, rhs.rows);
        let f = self.field;
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref();
        // any pivot in the rhs block means inconsistency
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(f, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, aug.get(r, self.cols + c));
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<DenseMatrix> {
        assert_eq!(self.rows, self.cols);
        let id = Self::identity(self.field, self.rows);
        let x = self.solve_matrix(&id)?;
        if self.mul(&x) == id {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Characteristic polynomial, low degree first, monic of degree `rows`.
    /// Hessenberg reduction followed by the standard recurrence.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        // reduce to upper Hessenberg by similarity transformations
        for j in 0..n.saturating_sub(2) {
            let mut pivot = None;
            for r in j + 1..n {
                if h.get(r, j) != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else { continue };
            if pr != j + 1 {
                for c in 0..n {
                    let a = h.get(j + 1, c);
                    let b = h.get(pr, c);
                    h.set(j + 1, c, b);
                    h.set(pr, c, a);
                }
                for r in 0..n {
                    let a = h.get(r, j + 1);
                    let b = h.get(r, pr);
                    h.set(r, j + 1, b);
                    h.set(r, pr, a);
                }
            }
            let inv = f.inv(h.get(j + 1, j));
            for r in j + 2..n {
                let factor = f.mul(h.get(r, j), inv);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.get(r, c), f.mul(factor, h.get(j + 1, c)));
                    h.set(r, c, v);
                }
                for c in 0..n {
                    let v = f.add(h.get(c, j + 1), f.mul(factor, h.get(c, r)));
                    h.set(c, j + 1, v);
                }
            }
        }
        // p_0 = 1, p_k = (x - h[k-1][k-1]) p_{k-1}
        //             - sum_{i=1..k-1} h[i-1][k-1] (prod_{j=i..k-1} h[j][j-1]) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let mut pk = poly_mul_linear(f, &polys[k - 1], h.get(k - 1, k - 1));
            let mut beta = 1u64;
            for i in (1..k).rev() {
                beta = f.mul(beta, h.get(i, i - 1));
                let coef = f.mul(h.get(i - 1, k - 1), beta);
                if coef != 0 {
                    for (d, &c) in polys[i - 1].iter().enumerate() {
                        pk[d] = f.sub(pk[d], f.mul(coef, c));
                    }
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }
}

/// p(x) * (x - a)
fn poly_mul_linear(f: Fp, p: &[u64], a: u64) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (d, &c) in p.iter().enumerate() {
        out[d + 1] = f.add(out[d + 1], c);
        out[d] = f.sub(out[d], f.mul(a, c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn rank_examples() {
        // 0x0 matrix
        assert_eq!(DenseMatrix::zeros(f(), 0, 0).rank(), 0);
        // identity 3x3
        assert_eq!(DenseMatrix::identity(f(), 3).rank(), 3);
        // [[1,2],[2,4]]: second row is twice the first
        let m = DenseMatrix::from_rows(f(), 2, 2, vec![1, 2, 2, 4]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(DenseMatrix::identity(f(), 4).nullspace_basis().cols(), 0);
        let z = DenseMatrix::zeros(f(), 2, 3);
        assert_eq!(z.nullspace_basis().cols(), 3);
        // x + y = 0
        let m = DenseMatrix::from_rows(f(), 1, 2, vec![1, 1]);
        let ns = m.nullspace_basis();
        assert_eq!(ns.cols(), 1);
        let x = ns.get(0, 0);
        let y = ns.get(1, 0);
        assert_eq!(f().add(x, y), 0);
        assert!(x != 0);
    }

    #[test]
    fn random_matrix_contract() {
        let field = f();
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        let a = DenseMatrix::random(field, 3, 4, &mut r1);
        let b = DenseMatrix::random(field, 3, 4, &mut r2);
        assert_eq!(a, b);
        let mut r3 = ChaCha8Rng::seed_from_u64(8);
        let e = DenseMatrix::random(field, 0, 5, &mut r3);
        assert_eq!(e.rows(), 0);
        assert_eq!(e.cols(), 5);
    }

    #[test]
    fn random_2x2_rarely_singular() {
        // over p = 101 exactly (p^2-1)(p^2-p) of p^4 matrices are invertible;
        // singular fraction is ~2/p, so < 5% of 1000 draws at p = 101,
        // and far under 1% at the default prime.
        let field = Fp::new(DEFAULT_PRIME).unwrap();
        let mut singular = 0;
        for seed in 0..1000u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = DenseMatrix::random(field, 2, 2, &mut rng);
            if m.rank() < 2 {
                singular += 1;
            }
        }
        assert!(singular < 10, "singular draws: {singular}");
    }

    #[test]
    fn solve_and_inverse() {
        let field = f();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = DenseMatrix::random(field, 4, 4, &mut rng);
        let inv = a.inverse().expect("random matrix invertible");
        assert_eq!(a.mul(&inv), DenseMatrix::identity(field, 4));
        let b = DenseMatrix::random(field, 4, 2, &mut rng);
        let x = a.solve_matrix(&b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn charpoly_matches_structure() {
        let field = f();
        // companion-style check: diag(2,3) has charpoly (x-2)(x-3) = x^2 - 5x + 6
        let m = DenseMatrix::from_rows(field, 2, 2, vec![2, 0, 0, 3]);
        let cp = m.charpoly();
        assert_eq!(cp, vec![6, field.from_i64(-5), 1]);
        // nilpotent
        let n = DenseMatrix::from_rows(field, 2, 2, vec![0, 1, 0, 0]);
        assert_eq!(n.charpoly(), vec![0, 0, 1]);
    }

    proptest! {
        #[test]
        fn rank_transpose_and_nullity(rows in 0usize..6, cols in 0usize..6, seed in 0u64..500) {
            let field = f();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // mix of random and low-rank matrices
            let m = if seed % 3 == 0 {
                let a = DenseMatrix::random(field, rows, 1.min(cols), &mut rng);
                let b = DenseMatrix::random(field, 1.min(rows), cols, &mut rng);
                if rows == 0 || cols == 0 { DenseMatrix::zeros(field, rows, cols) } else { a.mul(&b) }
            } else {
                DenseMatrix::random(field, rows, cols, &mut rng)
            };
            prop_assert_eq!(m.rank(), m.transpose().rank());
            let ns = m.nullspace_basis();
            prop_assert_eq!(m.rank() + ns.cols(), cols);
            // columns are annihilated exactly and independent
            if ns.cols() > 0 {
                prop_assert!(m.mul(&ns).is_zero());
                prop_assert_eq!(ns.rank(), ns.cols());
            }
        }

        #[test]
        fn charpoly_annihilates(n in 1usize..5, seed in 0u64..200) {
            // Cayley-Hamilton as an independent oracle for the Hessenberg route
            let field = f();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = DenseMatrix::random(field, n, n, &mut rng);
            let cp = m.charpoly();
            let mut acc = DenseMatrix::zeros(field, n, n);
            let mut pow = DenseMatrix::identity(field, n);
            for &c in cp.iter() {
                acc = acc.add(&pow.scale(c));
                pow = pow.mul(&m);
            }
            prop_assert!(acc.is_zero());
        }
    }
}
