//! Exact integer and rational linear algebra: Hermite and Smith normal
//! forms, determinants, ranks, and saturated kernel lattices.
//!
//! All entries are arbitrary-precision; there is no floating point anywhere
//! in this crate.  The Hermite form is row-style (`U * M = H`) with positive
//! pivots and entries above each pivot reduced, and pivot reduction is
//! applied after every elimination step to keep intermediate entries small.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Dense row-major matrix over Z.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
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

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix consisting of the selected columns, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a * &other[(k, j)];
                    m[(i, j)] += p;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// row_a += q * row_b
    fn add_multiple_of_row(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * &self[(b, j)];
            self[(a, j)] += add;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_multiple_of_col(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * &self[(i, b)];
            self[(i, a)] += add;
        }
    }

    /// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular,
    /// `U * self = H`, pivot entries positive, entries above pivots reduced
    /// into `[0, pivot)`.
    pub fn hermite_normal_form(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            // Bring a nonzero entry into the pivot position.
            let Some(r) = (pivot_row..self.rows).find(|&r| !h[(r, col)].is_zero()) else {
                continue;
            };
            h.swap_rows(pivot_row, r);
            u.swap_rows(pivot_row, r);
            // Clear everything below with extended-gcd row combinations.
            for r in pivot_row + 1..self.rows {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let a = h[(pivot_row, col)].clone();
                let b = h[(r, col)].clone();
                let ext = a.extended_gcd(&b);
                let (g, s, t) = (ext.gcd, ext.x, ext.y);
                let a_div = &a / &g;
                let b_div = &b / &g;
                // [ s       t     ] [row_p]   [gcd row]
                // [-b_div   a_div ] [row_r] = [0   row]
                apply_two_row_op(&mut h, pivot_row, r, &s, &t, &(-&b_div), &a_div);
                apply_two_row_op(&mut u, pivot_row, r, &s, &t, &(-&b_div), &a_div);
            }
            if h[(pivot_row, col)].is_negative() {
                h.negate_row(pivot_row);
                u.negate_row(pivot_row);
            }
            // Pivot reduction: entries above reduced into [0, pivot).
            let p = h[(pivot_row, col)].clone();
            for r in 0..pivot_row {
                let q = h[(r, col)].div_floor(&p);
                if !q.is_zero() {
                    let neg_q = -q;
                    h.add_multiple_of_row(r, pivot_row, &neg_q);
                    u.add_multiple_of_row(r, pivot_row, &neg_q);
                }
            }
            pivot_row += 1;
        }
        (h, u)
    }

    /// Smith normal form: returns `(S, U, V)` with `U, V` unimodular,
    /// `U * self * V = S` diagonal with divisibility chain d1 | d2 | ...
    pub fn smith_normal_form(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let k = self.rows.min(self.cols);
        for i in 0..k {
            // Find a nonzero pivot in the remaining block.
            let mut pivot = None;
            'search: for r in i..self.rows {
                for c in i..self.cols {
                    if !s[(r, c)].is_zero() {
                        pivot = Some((r, c));
                        break 'search;
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            s.swap_rows(i, pr);
            u.swap_rows(i, pr);
            s.swap_cols(i, pc);
            v.swap_cols(i, pc);
            // Alternate row and column elimination until isolated.
            loop {
                let mut changed = false;
                for r in i + 1..self.rows {
                    if s[(r, i)].is_zero() {
                        continue;
                    }
                    let a = s[(i, i)].clone();
                    let b = s[(r, i)].clone();
                    let ext = a.extended_gcd(&b);
                    let (g, x, y) = (ext.gcd, ext.x, ext.y);
                    let a_div = &a / &g;
                    let b_div = &b / &g;
                    apply_two_row_op(&mut s, i, r, &x, &y, &(-&b_div), &a_div);
                    apply_two_row_op(&mut u, i, r, &x, &y, &(-&b_div), &a_div);
                    changed = true;
                }
                for c in i + 1..self.cols {
                    if s[(i, c)].is_zero() {
                        continue;
                    }
                    let a = s[(i, i)].clone();
                    let b = s[(i, c)].clone();
                    let ext = a.extended_gcd(&b);
                    let (g, x, y) = (ext.gcd, ext.x, ext.y);
                    let a_div = &a / &g;
                    let b_div = &b / &g;
                    apply_two_col_op(&mut s, i, c, &x, &y, &(-&b_div), &a_div);
                    apply_two_col_op(&mut v, i, c, &x, &y, &(-&b_div), &a_div);
                    changed = true;
                }
                if !changed {
                    break;
                }
            }
            if s[(i, i)].is_negative() {
                s.negate_row(i);
                u.negate_row(i);
            }
        }
        // Enforce the divisibility chain d_i | d_{i+1}.
        loop {
            let mut done = true;
            for i in 0..k.saturating_sub(1) {
                let a = s[(i, i)].clone();
                let b = s[(i + 1, i + 1)].clone();
                if b.is_zero() || (!a.is_zero() && (&b % &a).is_zero()) {
                    continue;
                }
                done = false;
                // Fold b into position (i, i) and redo the 2x2 block.
                s.add_multiple_of_col(i, i + 1, &BigInt::one());
                v.add_multiple_of_col(i, i + 1, &BigInt::one());
                let a = s[(i, i)].clone();
                let b = s[(i + 1, i)].clone();
                let ext = a.extended_gcd(&b);
                let (g, x, y) = (ext.gcd, ext.x, ext.y);
                let a_div = &a / &g;
                let b_div = &b / &g;
                apply_two_row_op(&mut s, i, i + 1, &x, &y, &(-&b_div), &a_div);
                apply_two_row_op(&mut u, i, i + 1, &x, &y, &(-&b_div), &a_div);
                // Clear the fill-in at (i, i+1).
                let q = -(&s[(i, i + 1)] / &s[(i, i)]);
                s.add_multiple_of_col(i + 1, i, &q);
                v.add_multiple_of_col(i + 1, i, &q);
                if s[(i + 1, i + 1)].is_negative() {
                    s.negate_row(i + 1);
                    u.negate_row(i + 1);
                }
            }
            if done {
                break;
            }
        }
        (s, u, v)
    }

    pub fn rank(&self) -> usize {
        let (h, _) = self.hermite_normal_form();
        (0..h.rows).filter(|&i| (0..h.cols).any(|j| !h[(i, j)].is_zero())).count()
    }

    /// Determinant of a square matrix by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

/// Replace rows (a, b) by (x*row_a + y*row_b, z*row_a + w*row_b).
fn apply_two_row_op(m: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
    for j in 0..m.cols {
        let va = m[(a, j)].clone();
        let vb = m[(b, j)].clone();
        m[(a, j)] = x * &va + y * &vb;
        m[(b, j)] = z * &va + w * &vb;
    }
}

/// Replace cols (a, b) by (x*col_a + y*col_b, z*col_a + w*col_b).
fn apply_two_col_op(m: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
    for i in 0..m.rows {
        let va = m[(i, a)].clone();
        let vb = m[(i, b)].clone();
        m[(i, a)] = x * &va + y * &vb;
        m[(i, b)] = z * &va + w * &vb;
    }
}

/// Basis of a sublattice of Z^ambient_dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Exact membership in the lattice spanned by the basis vectors.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        if self.vectors.is_empty() {
            return v.iter().all(|x| x.is_zero());
        }
        // Columns of B are the basis vectors; solve B x = v over Z via Smith form.
        let b = IntMatrix::from_bigint_rows(
            (0..self.ambient_dim)
                .map(|i| self.vectors.iter().map(|w| w[i].clone()).collect())
                .collect(),
        );
        let (s, u, _) = b.smith_normal_form();
        let uv = u.mul_vec(v);
        let k = b.rows().min(b.cols());
        for i in 0..uv.len() {
            if i < k && !s[(i, i)].is_zero() {
                if !(&uv[i] % &s[(i, i)]).is_zero() {
                    return false;
                }
            } else if !uv[i].is_zero() {
                return false;
            }
        }
        true
    }
}

/// Basis of the saturated kernel lattice `{u in Z^n : A*u = 0}`.
pub fn lattice_kernel(a: &IntMatrix) -> LatticeBasis {
    let n = a.cols();
    let (s, _, v) = a.smith_normal_form();
    let k = a.rows().min(n);
    let mut vectors = Vec::new();
    for j in 0..n {
        let zero_diag = j >= k || s[(j, j)].is_zero();
        if zero_diag {
            vectors.push(v.col(j));
        }
    }
    LatticeBasis { ambient_dim: n, vectors }
}

// ---------------------------------------------------------------------------
// Rational linear algebra helpers used by the geometry layer.
// ---------------------------------------------------------------------------

/// Solve M x = rhs over Q by Gaussian elimination.  Returns None when the
/// system is inconsistent; free variables are set to zero.
pub fn solve_rational(m: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs.iter())
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].clone();
        for x in a[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=cols {
                    let sub = &f * &a[rank][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero rhs.
    for r in rank..rows {
        if !a[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = a[r][cols].clone();
    }
    Some(x)
}

/// Rank of a rational matrix.
pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            if !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                for c in col..cols {
                    let sub = &f * &a[rank][c];
                    a[r][c] = &a[r][c] - &sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    /// Cofactor-expansion determinant, the independent oracle for `det`.
    fn det_cofactor(a: &IntMatrix) -> BigInt {
        let n = a.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return a[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if a[(0, j)].is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<BigInt>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| a[(i, c)].clone()).collect())
                .collect();
            let minor = IntMatrix::from_bigint_rows(minor_rows);
            let term = &a[(0, j)] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Elementary-divisor oracle: d_k = gcd of all k x k minors, and the
    /// k-th Smith entry is d_k / d_{k-1}.
    fn smith_diag_oracle(a: &IntMatrix) -> Vec<BigInt> {
        use itertools::Itertools;
        let k = a.rows().min(a.cols());
        let mut prev = BigInt::one();
        let mut out = Vec::new();
        for size in 1..=k {
            let mut g = BigInt::zero();
            for rows in (0..a.rows()).combinations(size) {
                for cols in (0..a.cols()).combinations(size) {
                    let sub = IntMatrix::from_bigint_rows(
                        rows.iter()
                            .map(|&i| cols.iter().map(|&j| a[(i, j)].clone()).collect())
                            .collect(),
                    );
                    g = g.gcd(&det_cofactor(&sub));
                }
            }
            if g.is_zero() {
                out.push(BigInt::zero());
            } else {
                out.push(&g / &prev);
                prev = g;
            }
        }
        out
    }

    fn is_hnf(h: &IntMatrix) -> bool {
        let mut last_pivot_col: Option<usize> = None;
        let mut seen_zero_row = false;
        for i in 0..h.rows() {
            let pivot = (0..h.cols()).find(|&j| !h[(i, j)].is_zero());
            match pivot {
                None => seen_zero_row = true,
                Some(j) => {
                    if seen_zero_row {
                        return false;
                    }
                    if let Some(prev) = last_pivot_col {
                        if j <= prev {
                            return false;
                        }
                    }
                    if !h[(i, j)].is_positive() {
                        return false;
                    }
                    for r in 0..i {
                        if h[(r, j)].is_negative() || h[(r, j)] >= h[(i, j)] {
                            return false;
                        }
                    }
                    last_pivot_col = Some(j);
                }
            }
        }
        true
    }

    #[test]
    fn hnf_identity() {
        let a = m(&[vec![1, 0], vec![0, 1]]);
        let (h, u) = a.hermite_normal_form();
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_zero() {
        let a = IntMatrix::zero(2, 3);
        let (h, u) = a.hermite_normal_form();
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_preserves_determinant_magnitude() {
        let a = m(&[vec![2, 4], vec![1, 3]]);
        let (h, u) = a.hermite_normal_form();
        assert!(is_hnf(&h));
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.det().abs(), BigInt::one());
        // |det H| = |det M| = 2, and the oracle agrees.
        assert_eq!(h.det().abs(), BigInt::from(2));
        assert_eq!(det_cofactor(&a).abs(), BigInt::from(2));
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let (s, u, v) = a.smith_normal_form();
        assert_eq!(s, IntMatrix::identity(3));
        assert_eq!(u.mul(&a).mul(&v), s);
    }

    #[test]
    fn snf_diag_2_3() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let (s, u, v) = a.smith_normal_form();
        assert_eq!(u.mul(&a).mul(&v), s);
        let diag: Vec<BigInt> = (0..2).map(|i| s[(i, i)].clone()).collect();
        assert_eq!(diag, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(smith_diag_oracle(&a), diag);
    }

    #[test]
    fn snf_rank_deficient() {
        let a = m(&[vec![1, 1], vec![1, 1]]);
        let (s, u, v) = a.smith_normal_form();
        assert_eq!(u.mul(&a).mul(&v), s);
        let diag: Vec<BigInt> = (0..2).map(|i| s[(i, i)].clone()).collect();
        assert_eq!(diag, vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(smith_diag_oracle(&a), diag);
    }

    #[test]
    fn kernel_injective() {
        let a = m(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(lattice_kernel(&a).rank(), 0);
    }

    #[test]
    fn kernel_symmetric_pair() {
        let a = m(&[vec![1, 1]]);
        let k = lattice_kernel(&a);
        assert_eq!(k.rank(), 1);
        let v: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(-1)];
        assert!(k.contains(&v));
    }

    #[test]
    fn kernel_0134() {
        let a = m(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]]);
        let k = lattice_kernel(&a);
        assert_eq!(k.rank(), 2);
        for v in &k.vectors {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let w1: Vec<BigInt> = [1, -1, -1, 1].iter().map(|&x| BigInt::from(x)).collect();
        let w2: Vec<BigInt> = [2, -3, 1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(k.contains(&w1));
        assert!(k.contains(&w2));
        // Saturation: the Smith form of the basis matrix has unit divisors.
        let b = IntMatrix::from_bigint_rows(k.vectors.clone());
        let (s, _, _) = b.smith_normal_form();
        for i in 0..k.rank() {
            assert_eq!(s[(i, i)], BigInt::one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn hnf_roundtrip(rows in 1usize..4, cols in 1usize..5, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let a = m(&data);
            let (h, u) = a.hermite_normal_form();
            prop_assert!(is_hnf(&h));
            prop_assert_eq!(u.mul(&a), h);
            prop_assert_eq!(u.det().abs(), BigInt::one());
        }

        #[test]
        fn snf_roundtrip_and_chain(rows in 1usize..4, cols in 1usize..4, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let a = m(&data);
            let (s, u, v) = a.smith_normal_form();
            prop_assert_eq!(u.mul(&a).mul(&v), s.clone());
            prop_assert_eq!(u.det().abs(), BigInt::one());
            prop_assert_eq!(v.det().abs(), BigInt::one());
            let k = rows.min(cols);
            for i in 0..k {
                for j in 0..cols.min(rows) {
                    if i != j && (i < k && j < k) {
                        continue;
                    }
                }
                if i + 1 < k && !s[(i, i)].is_zero() {
                    let next = s[(i + 1, i + 1)].clone();
                    prop_assert!((next % &s[(i, i)]).is_zero() || s[(i + 1, i + 1)].is_zero());
                }
            }
            for i in 0..k {
                for j in 0..k {
                    if i != j {
                        prop_assert!(s[(i, j)].is_zero());
                    }
                }
            }
        }

        #[test]
        fn kernel_rank_complement(rows in 1usize..4, cols in 1usize..5, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let a = m(&data);
            let k = lattice_kernel(&a);
            prop_assert_eq!(a.rank() + k.rank(), cols);
            for v in &k.vectors {
                prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
            }
            if k.rank() > 0 {
                let b = IntMatrix::from_bigint_rows(k.vectors.clone());
                let (s, _, _) = b.smith_normal_form();
                for i in 0..k.rank() {
                    prop_assert_eq!(s[(i, i)].clone(), BigInt::one());
                }
            }
        }
    }
}
