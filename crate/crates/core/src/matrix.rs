//! Exact integer and rational matrix arithmetic.
//!
//! Everything here works over arbitrary-precision integers (`BigInt`) or
//! rationals (`BigRational`); there is no floating point anywhere in the
//! crate. Pivot choices always break ties by the lowest index, so every
//! decomposition is deterministic for a fixed input.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix must be symmetric")]
    NotSymmetric,
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from explicit rows. `cols` is needed so that a matrix
    /// with zero rows still has a well-defined width.
    pub fn try_from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::Ragged {
                    row: i,
                    found: r.len(),
                    expected: cols,
                });
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor for small literal matrices.
    ///
    /// Panics on ragged input; use [`IntMatrix::try_from_rows`] for data that
    /// did not come from source code.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::try_from_rows(rows, cols).expect("ragged literal matrix")
    }

    pub fn from_row_vectors(rows: &[Vec<BigInt>], cols: usize) -> Result<Self, LinalgError> {
        Self::try_from_rows(rows.to_vec(), cols)
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.data.iter()
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

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, n: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * n).collect(),
        }
    }

    /// Block-diagonal sum `[[a, 0], [0, b]]`.
    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Self {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// `v · self` for a row vector `v`.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * &self[(i, j)];
            }
        }
        out
    }

    /// `u · self · vᵀ`, the bilinear form with Gram matrix `self`.
    pub fn bilinear(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        dot(&self.left_mul_vec(u), v)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
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

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    /// `row_dst += q · row_src`
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            self.data[dst * self.cols + j] += q * s;
        }
    }

    /// `col_dst += q · col_src`
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.data[i * self.cols + src].clone();
            self.data[i * self.cols + dst] += q * s;
        }
    }

    /// Replaces rows `(i, j)` by `(a·ri + b·rj, c·ri + d·rj)`.
    fn mix_rows(&mut self, i: usize, j: usize, [a, b, c, d]: [&BigInt; 4]) {
        for k in 0..self.cols {
            let ri = self.data[i * self.cols + k].clone();
            let rj = self.data[j * self.cols + k].clone();
            self.data[i * self.cols + k] = a * &ri + b * &rj;
            self.data[j * self.cols + k] = c * ri + d * rj;
        }
    }

    fn reverse_columns(&self) -> Self {
        let mut m = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, self.cols - 1 - j)] = self[(i, j)].clone();
            }
        }
        m
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}{}", self.rows, self.cols, self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dot product of vectors of unequal length");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Positive gcd of a list of integers; zero for the empty or all-zero list.
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Upper row-echelon form `u · m = h` with `u` unimodular.
///
/// Pivots are positive and the entries above each pivot are reduced into
/// `[0, pivot)`, i.e. the nonzero rows of `h` are the classical (upper)
/// Hermite normal form of the row lattice.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub(crate) fn echelon(m: &IntMatrix) -> Echelon {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        for i in r + 1..m.rows {
            if h[(i, c)].is_zero() {
                continue;
            }
            if h[(r, c)].is_zero() {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            let a = h[(r, c)].clone();
            let b = h[(i, c)].clone();
            let eg = a.extended_gcd(&b);
            let a_red = &a / &eg.gcd;
            let b_red = -(&b / &eg.gcd);
            let coeffs = [&eg.x, &eg.y, &b_red, &a_red];
            h.mix_rows(r, i, coeffs);
            u.mix_rows(r, i, coeffs);
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h[(r, c)].clone();
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&p);
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { h, u, pivots }
}

pub fn rank(m: &IntMatrix) -> usize {
    echelon(m).rank()
}

/// Canonical Hermite normal form of the row lattice of `m`, in lower-left
/// shape.
///
/// The nonzero rows come first and form a basis of the row span. Row `t`
/// ends in a positive pivot whose column index strictly increases with `t`;
/// the entries below each pivot are reduced into `[0, pivot)`. Zero rows are
/// appended so the output has the shape of the input.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let e = echelon(&m.reverse_columns());
    let r = e.rank();
    let mut out = IntMatrix::zeros(m.rows, m.cols);
    for t in 0..r {
        let src = r - 1 - t;
        for j in 0..m.cols {
            out[(t, m.cols - 1 - j)] = e.h[(src, j)].clone();
        }
    }
    out
}

/// A basis (nonzero rows of the HNF) of the row lattice of `m`.
pub fn row_basis(m: &IntMatrix) -> IntMatrix {
    let h = hnf(m);
    let r = (0..h.rows).take_while(|&i| h.row(i).iter().any(|x| !x.is_zero())).count();
    h.select_rows(&(0..r).collect::<Vec<_>>())
}

/// Smith decomposition `u · m · v = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `s`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    /// Nonzero diagonal entries `d₁ | d₂ | … | d_r`.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }
}

/// Smith normal form by classical gcd-pivoting elimination.
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let steps = m.rows.min(m.cols);
    'outer: for t in 0..steps {
        loop {
            // smallest nonzero |entry| in the trailing block, row-major first
            let mut best: Option<(usize, usize)> = None;
            for i in t..m.rows {
                for j in t..m.cols {
                    let x = &s[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'outer;
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m.rows {
                let q = -s[(i, t)].div_floor(&p);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..m.cols {
                let q = -s[(t, j)].div_floor(&p);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !s[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, s, v }
}

/// Basis of the left integer kernel `{x : x · m = 0}`.
///
/// The rows form a basis of a saturated sublattice of `Z^rows`, returned in
/// canonical HNF. The result has `m.rows()` columns and no rows when the
/// kernel is trivial.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let e = echelon(m);
    let r = e.rank();
    let idx: Vec<usize> = (r..m.rows).collect();
    let k = e.u.select_rows(&idx);
    if k.rows == 0 {
        return k;
    }
    row_basis(&k)
}

/// Solves `x · basis = v` over the integers. Returns `None` when `v` is not
/// in the row lattice of `basis`. The rows of `basis` must be linearly
/// independent for the solution to be unique.
pub fn solve_left_integer(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(v.len(), basis.cols, "vector length must equal column count");
    let e = echelon(basis);
    let mut rest = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); e.rank()];
    for (r, &c) in e.pivots.iter().enumerate() {
        let (q, rem) = rest[c].div_rem(&e.h[(r, c)]);
        if !rem.is_zero() {
            return None;
        }
        for j in 0..basis.cols {
            rest[j] -= &q * &e.h[(r, j)];
        }
        coeffs[r] = q;
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    let u_top = e.u.select_rows(&(0..e.rank()).collect::<Vec<_>>());
    Some(u_top.left_mul_vec(&coeffs))
}

/// Inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Self {
            positive,
            negative,
            zero,
        }
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero == 0 {
            write!(f, "({},{})", self.positive, self.negative)
        } else {
            write!(f, "({},{},{})", self.positive, self.negative, self.zero)
        }
    }
}

/// Inertia by exact rational congruence diagonalization.
///
/// Pivots on the first nonzero diagonal entry; when the whole remaining
/// diagonal vanishes but some off-diagonal entry does not, the 2×2 block
/// `[[0, b], [b, 0]]` is split off, contributing one positive and one
/// negative square.
pub fn signature_of_symmetric(m: &IntMatrix) -> Result<Signature, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = m.rows;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(m[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = Signature::new(0, 0, 0);
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = a[p][p].clone();
            if d.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
            for &j in &active {
                if a[j][p].is_zero() {
                    continue;
                }
                let f = &a[j][p] / &d;
                for &k in &active {
                    let delta = &f * &a[p][k];
                    a[j][k] -= delta;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            sig.zero += active.len();
            break;
        };
        let b = a[i][j].clone();
        active.retain(|&x| x != i && x != j);
        sig.positive += 1;
        sig.negative += 1;
        // Schur complement of the block [[0, b], [b, 0]], whose inverse is
        // [[0, 1/b], [1/b, 0]].
        let snapshot: Vec<(usize, BigRational, BigRational)> = active
            .iter()
            .map(|&x| (x, a[x][i].clone(), a[x][j].clone()))
            .collect();
        for (x, xi, xj) in &snapshot {
            for (y, yi, yj) in &snapshot {
                let delta = (xi * yj + xj * yi) / &b;
                a[*x][*y] -= delta;
            }
        }
    }
    Ok(sig)
}

/// Dense row-major matrix of rationals, used for dual and overlattice
/// coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().cloned().map(BigRational::from_integer).collect(),
        }
    }

    pub fn from_row_vectors(rows: &[Vec<BigRational>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rational rows");
            for (j, x) in r.iter().enumerate() {
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

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
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

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            inv[(i, i)] = BigRational::one();
        }
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(LinalgError::Singular)?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let piv = a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] /= &piv;
                inv[(c, j)] /= &piv;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for j in 0..n {
                    let ac = &f * &a[(c, j)];
                    let ic = &f * &inv[(c, j)];
                    a[(r, j)] -= ac;
                    inv[(r, j)] -= ic;
                }
            }
        }
        Ok(inv)
    }

    /// The integer matrix with the same entries, if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.data.iter().all(BigRational::is_integer) {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(BigRational::to_integer).collect(),
        })
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// `v · m` for a rational row vector and an integer matrix.
pub fn rat_left_mul(v: &[BigRational], m: &IntMatrix) -> Vec<BigRational> {
    assert_eq!(v.len(), m.rows(), "vector length must equal row count");
    let mut out = vec![BigRational::zero(); m.cols()];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o += vi * &m[(i, j)];
        }
    }
    out
}

pub fn rat_dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    assert_eq!(a.len(), b.len(), "dot product of vectors of unequal length");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}
