//! Exact integer linear algebra: rank, integer row echelon forms, kernel
//! lattice bases and Cramer-rule kernel vectors.
//!
//! Everything here works over arbitrary-precision integers. Maximal minors
//! of the matrices we care about (Veronese configurations in particular)
//! overflow machine words already at modest sizes, so no fixed-width
//! arithmetic is used anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Integer vector with arbitrary-precision entries.
pub type IntVector = Vec<BigInt>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    /// `nullity_one_kernel_vector` requires rank = cols - 1.
    #[error("matrix must have nullity one, found nullity {nullity}")]
    PreconditionViolated { nullity: usize },
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    /// Builds a matrix from column vectors.
    pub fn from_columns(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = IntMatrix::new(r, c, vec![BigInt::zero(); r * c]);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                *m.get_mut(i, j) = v.clone();
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::new(self.cols, self.rows, vec![BigInt::zero(); self.entries.len()]);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    /// Restriction to a subset of columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let selected: Vec<IntVector> = cols.iter().map(|&j| self.column(j)).collect();
        IntMatrix::from_columns(&selected)
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vector(&self, v: &[BigInt]) -> IntVector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }
}

/// Rank over the rationals via fraction-free (Bareiss) elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a: Vec<IntVector> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let (rank, _) = bareiss(&mut a, m.cols);
    rank
}

/// Determinant of a square matrix, fraction-free.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant needs a square matrix");
    if m.rows == 0 {
        return BigInt::one();
    }
    let mut a: Vec<IntVector> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let (rank, sign_and_last) = bareiss(&mut a, m.cols);
    if rank < m.rows {
        BigInt::zero()
    } else {
        sign_and_last
    }
}

// Bareiss elimination in place. Returns (rank, det-like value): when the
// matrix is square and nonsingular the second component is the determinant.
fn bareiss(a: &mut [IntVector], cols: usize) -> (usize, BigInt) {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            sign = -sign;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = if sign < 0 { -prev } else { prev };
    (rank, det)
}

/// Integer row echelon form computed with unimodular row operations.
///
/// Only the first `lead_cols` columns are eliminated; trailing columns ride
/// along, which is how kernel and transform data is extracted.
struct EchelonZ {
    rows: Vec<IntVector>,
    /// Leading column of each pivot row, in row order.
    pivots: Vec<usize>,
}

fn integer_row_echelon(mut rows: Vec<IntVector>, lead_cols: usize) -> EchelonZ {
    let n = rows.len();
    let mut pr = 0;
    let mut pivots = Vec::new();
    for col in 0..lead_cols {
        if pr == n {
            break;
        }
        let Some(first) = (pr..n).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pr, first);
        for i in pr + 1..n {
            if rows[i][col].is_zero() {
                continue;
            }
            // Unimodular 2x2 transform making rows[i][col] zero.
            let a = rows[pr][col].clone();
            let b = rows[i][col].clone();
            let ext = a.extended_gcd(&b);
            let (g, x, y) = (ext.gcd, ext.x, ext.y);
            let ag = &a / &g;
            let bg = &b / &g;
            let width = rows[pr].len();
            for k in 0..width {
                let top = &rows[pr][k] * &x + &rows[i][k] * &y;
                let bot = &rows[i][k] * &ag - &rows[pr][k] * &bg;
                rows[pr][k] = top;
                rows[i][k] = bot;
            }
        }
        if rows[pr][col].is_negative() {
            for e in rows[pr].iter_mut() {
                *e = -std::mem::take(e);
            }
        }
        pivots.push(col);
        pr += 1;
    }
    EchelonZ { rows, pivots }
}

/// Basis of the full integer kernel `{u : m u = 0}`.
///
/// The kernel of an integer matrix is a saturated lattice and the rows of the
/// unimodular transform span it exactly, so no extra saturation step is
/// needed. Output vectors are sign-canonicalized and sorted.
pub fn kernel_lattice_basis(m: &IntMatrix) -> Vec<IntVector> {
    let d = m.rows;
    let n = m.cols;
    // Rows of [m^T | I], echelonized on the left block.
    let rows: Vec<IntVector> = (0..n)
        .map(|j| {
            let mut row: IntVector = m.column(j);
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let ech = integer_row_echelon(rows, d);
    let rank = ech.pivots.len();
    let mut basis: Vec<IntVector> = ech.rows[rank..]
        .iter()
        .map(|row| {
            let mut v = row[d..].to_vec();
            canonicalize_sign(&mut v);
            v
        })
        .collect();
    basis.sort();
    basis
}

/// The up-to-sign unique primitive kernel vector of a matrix with
/// rank = cols - 1, by Cramer's rule on a maximal independent row set.
pub fn nullity_one_kernel_vector(m: &IntMatrix) -> Result<IntVector, LatticeError> {
    let k = m.cols;
    let r = rank(m);
    if r + 1 != k {
        return Err(LatticeError::PreconditionViolated { nullity: k - r });
    }
    // Pick k-1 linearly independent rows.
    let mut tracker = SpanTracker::<BigInt>::new(k);
    let mut selected = Vec::with_capacity(k - 1);
    for i in 0..m.rows {
        if selected.len() == k - 1 {
            break;
        }
        if matches!(tracker.try_insert(m.row(i)), Ok(InsertOutcome::Independent)) {
            tracker.commit(m.row(i)).expect("BigInt echelon cannot overflow");
            selected.push(i);
        }
    }
    debug_assert_eq!(selected.len(), k - 1);
    // v_j = (-1)^j det(B with column j removed).
    let mut v: IntVector = Vec::with_capacity(k);
    for j in 0..k {
        let keep: Vec<usize> = (0..k).filter(|&c| c != j).collect();
        let minor_rows: Vec<Vec<BigInt>> = selected
            .iter()
            .map(|&i| keep.iter().map(|&c| m.get(i, c).clone()).collect())
            .collect();
        let sub = IntMatrix::from_columns(
            &(0..k - 1)
                .map(|c| minor_rows.iter().map(|row| row[c].clone()).collect())
                .collect::<Vec<_>>(),
        );
        let det = determinant(&sub);
        v.push(if j % 2 == 0 { det } else { -det });
    }
    make_primitive(&mut v);
    canonicalize_sign(&mut v);
    Ok(v)
}

/// Solves `m x = rhs` over the integers, if an integer solution exists.
pub fn solve_integer(m: &IntMatrix, rhs: &[BigInt]) -> Option<IntVector> {
    assert_eq!(rhs.len(), m.rows);
    let c = m.cols;
    let r = m.rows;
    // Echelonize the rows of m^T, tracking the combination in the right block.
    let rows: Vec<IntVector> = (0..c)
        .map(|j| {
            let mut row: IntVector = m.column(j);
            row.extend((0..c).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let ech = integer_row_echelon(rows, r);
    let mut residual = rhs.to_vec();
    let mut coeffs = vec![BigInt::zero(); c];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        if residual[p].is_zero() {
            continue;
        }
        let (q, rem) = residual[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        for i in 0..r {
            residual[i] -= &q * &row[i];
        }
        for k in 0..c {
            coeffs[k] += &q * &row[r + k];
        }
    }
    if residual.iter().all(Zero::is_zero) {
        Some(coeffs)
    } else {
        None
    }
}

/// Solves `m x = rhs` over the rationals, if any solution exists.
pub fn solve_rational(m: &IntMatrix, rhs: &[BigInt]) -> Option<Vec<num_rational::BigRational>> {
    use num_rational::BigRational;
    assert_eq!(rhs.len(), m.rows);
    let cols = m.cols;
    let mut aug: Vec<Vec<BigRational>> = (0..m.rows)
        .map(|i| {
            let mut row: Vec<BigRational> = m
                .row(i)
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect();
            row.push(BigRational::from_integer(rhs[i].clone()));
            row
        })
        .collect();
    let rows = aug.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].clone();
        for e in aug[r].iter_mut() {
            *e = &*e / &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for k in 0..=cols {
                    let sub = &f * &aug[r][k];
                    aug[i][k] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    // Inconsistent if a zero row has nonzero right-hand side.
    for row in aug.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::from_integer(BigInt::zero()); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Membership of `v` in the integer span of `basis`.
pub fn in_integer_span(basis: &[IntVector], v: &[BigInt]) -> bool {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let m = IntMatrix::from_columns(&basis.to_vec());
    solve_integer(&m, v).is_some()
}

/// Divides out the gcd of the entries (no-op on the zero vector).
pub fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for e in v.iter() {
        g = g.gcd(e);
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in v.iter_mut() {
        *e = &*e / &g;
    }
}

/// Flips signs so the first nonzero entry is positive.
pub fn canonicalize_sign(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|e| !e.is_zero()) {
        if first.is_negative() {
            for e in v.iter_mut() {
                *e = -std::mem::take(e);
            }
        }
    }
}

/// Scalar abstraction for the incremental echelon: an i128 fast path that
/// reports overflow, and an exact BigInt fallback.
pub(crate) trait EchelonScalar: Clone + Integer + Signed {
    /// `a * b - c * d`, `None` on overflow.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn into_bigint(self) -> BigInt;
}

impl EchelonScalar for BigInt {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn into_bigint(self) -> BigInt {
        self
    }
}

impl EchelonScalar for i128 {
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        i128::try_from(v).ok()
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

/// Arithmetic left the i128 range; callers retry with BigInt.
#[derive(Debug)]
pub(crate) struct Overflow;

pub(crate) enum InsertOutcome {
    Independent,
    /// Primitive integer combination of the committed vectors plus the probe
    /// that sums to zero; sign-canonicalized, last entry is the probe's.
    Dependent(IntVector),
}

/// Incremental integer span with combination tracking.
///
/// Vectors are committed one at a time; each stored row is reduced against
/// the earlier ones only, so removal is a simple truncation.
pub(crate) struct SpanTracker<T: EchelonScalar> {
    dim: usize,
    // (reduced vector, pivot position, combination over committed vectors)
    rows: Vec<(Vec<T>, usize, Vec<T>)>,
    committed: usize,
}

impl<T: EchelonScalar> SpanTracker<T> {
    pub fn new(dim: usize) -> Self {
        SpanTracker { dim, rows: Vec::new(), committed: 0 }
    }

    /// Reduces `v` against the stored rows without modifying the tracker.
    pub fn try_insert(&mut self, v: &[T]) -> Result<InsertOutcome, Overflow> {
        let (vec, comb) = self.reduce_symbolic(v)?;
        if vec.iter().all(|e| e.is_zero()) {
            let mut big: IntVector = comb.into_iter().map(EchelonScalar::into_bigint).collect();
            make_primitive(&mut big);
            canonicalize_sign(&mut big);
            Ok(InsertOutcome::Dependent(big))
        } else {
            Ok(InsertOutcome::Independent)
        }
    }

    /// Appends `v` to the span; `v` must be independent of the current rows.
    pub fn commit(&mut self, v: &[T]) -> Result<(), Overflow> {
        let (vec, comb) = self.reduce_symbolic(v)?;
        let pivot = vec
            .iter()
            .position(|e| !e.is_zero())
            .expect("commit of dependent vector");
        self.rows.push((vec, pivot, comb));
        self.committed += 1;
        Ok(())
    }

    // Reduces v against the stored rows. Returns (reduced vector, c) where
    // c has length committed+1 and the reduced vector equals
    // sum_i c_i * committed_i + c_last * v, all over the integers.
    fn reduce_symbolic(&self, v: &[T]) -> Result<(Vec<T>, Vec<T>), Overflow> {
        assert_eq!(v.len(), self.dim);
        let mut vec = v.to_vec();
        let mut comb = vec![T::zero(); self.committed + 1];
        comb[self.committed] = T::one();
        for (row, pivot, row_comb) in &self.rows {
            if vec[*pivot].is_zero() {
                continue;
            }
            // vec <- lead * vec - vec[pivot] * row (fraction-free).
            let lead = row[*pivot].clone();
            let coef = vec[*pivot].clone();
            for k in 0..self.dim {
                vec[k] = T::mul_sub(&vec[k], &lead, &coef, &row[k]).ok_or(Overflow)?;
            }
            let zero = T::zero();
            for k in 0..comb.len() {
                let rc = row_comb.get(k).unwrap_or(&zero);
                comb[k] = T::mul_sub(&comb[k], &lead, &coef, rc).ok_or(Overflow)?;
            }
            // Keep entries small.
            let mut g = T::zero();
            for e in vec.iter().chain(comb.iter()) {
                g = g.gcd(e);
            }
            if !g.is_zero() && !g.is_one() {
                for e in vec.iter_mut().chain(comb.iter_mut()) {
                    *e = e.div_floor(&g);
                }
            }
        }
        Ok((vec, comb))
    }

    /// Drops the most recently committed vectors down to `len`.
    pub fn truncate(&mut self, len: usize) {
        self.rows.truncate(len);
        self.committed = len;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn vec_i(v: &[i64]) -> IntVector {
        v.iter().map(|&x| bi(x)).collect()
    }

    fn triangle_incidence() -> IntMatrix {
        // Edges {1,2},{2,3},{1,3} of the triangle.
        IntMatrix::from_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]])
    }

    fn four_cycle_incidence() -> IntMatrix {
        // Edges {1,2},{2,3},{3,4},{4,1}.
        IntMatrix::from_rows(&[
            vec![1, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ])
    }

    fn v23() -> IntMatrix {
        IntMatrix::from_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]])
    }

    fn k4_incidence() -> IntMatrix {
        // Edges {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
        IntMatrix::from_rows(&[
            vec![1, 1, 1, 0, 0, 0],
            vec![1, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1],
        ])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&triangle_incidence()), 3);
        assert_eq!(rank(&v23()), 2);
        assert_eq!(rank(&k4_incidence()), 4);
    }

    #[test]
    fn kernel_of_four_cycle() {
        let basis = kernel_lattice_basis(&four_cycle_incidence());
        assert_eq!(basis, vec![vec_i(&[1, -1, 1, -1])]);
    }

    #[test]
    fn kernel_of_triangle_is_trivial() {
        assert!(kernel_lattice_basis(&triangle_incidence()).is_empty());
    }

    #[test]
    fn kernel_of_v23() {
        let m = v23();
        let basis = kernel_lattice_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vector(v).iter().all(Zero::is_zero));
        }
        assert!(in_integer_span(&basis, &vec_i(&[1, -2, 1, 0])));
    }

    #[test]
    fn kernel_count_matches_nullity() {
        for m in [triangle_incidence(), four_cycle_incidence(), v23(), k4_incidence()] {
            assert_eq!(kernel_lattice_basis(&m).len(), m.cols() - rank(&m));
        }
    }

    #[test]
    fn cramer_vector_for_veronese_columns() {
        // Columns (3,0),(2,1),(1,2).
        let m = IntMatrix::from_rows(&[vec![3, 2, 1], vec![0, 1, 2]]);
        assert_eq!(nullity_one_kernel_vector(&m).unwrap(), vec_i(&[1, -2, 1]));

        // Columns (3,0),(2,1),(0,3).
        let m = IntMatrix::from_rows(&[vec![3, 2, 0], vec![0, 1, 3]]);
        assert_eq!(nullity_one_kernel_vector(&m).unwrap(), vec_i(&[2, -3, 1]));
    }

    #[test]
    fn cramer_rejects_wrong_nullity() {
        let m = four_cycle_incidence().select_columns(&[0, 1, 2]);
        assert_eq!(
            nullity_one_kernel_vector(&m),
            Err(LatticeError::PreconditionViolated { nullity: 0 })
        );
    }

    #[test]
    fn cramer_output_is_primitive_and_sign_canonical() {
        let m = IntMatrix::from_rows(&[vec![3, 2, 0], vec![0, 1, 3]]);
        let v = nullity_one_kernel_vector(&m).unwrap();
        let mut g = BigInt::zero();
        for e in &v {
            g = g.gcd(e);
        }
        assert!(g.is_one());
        assert!(v.iter().find(|e| !e.is_zero()).unwrap().is_positive());
        assert!(m.mul_vector(&v).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_integer_finds_combinations() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(solve_integer(&m, &vec_i(&[4, 9])), Some(vec_i(&[2, 3])));
        assert_eq!(solve_integer(&m, &vec_i(&[1, 0])), None);
    }

    #[test]
    fn saturation_small_exhaustive() {
        // Every kernel vector with entries in [-5, 5] must lie in the integer
        // span of the computed basis.
        let mats = [
            v23(),
            four_cycle_incidence(),
            IntMatrix::from_rows(&[vec![2, -1, 0, 3], vec![1, 1, -2, 0]]),
            IntMatrix::from_rows(&[vec![1, 2, 3, 4], vec![0, 1, 1, 2], vec![1, 0, 2, 1]]),
        ];
        for m in &mats {
            let basis = kernel_lattice_basis(m);
            let n = m.cols();
            let mut u = vec![0i64; n];
            loop {
                let v = vec_i(&u);
                if m.mul_vector(&v).iter().all(Zero::is_zero) {
                    assert!(in_integer_span(&basis, &v), "missed kernel point {u:?}");
                }
                // Odometer over [-5,5]^n, bounded to keep the test quick.
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    if u[pos] < 5 {
                        u[pos] += 1;
                        break;
                    }
                    u[pos] = -5;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn span_tracker_matches_cramer() {
        let m = v23();
        let mut tracker = SpanTracker::<BigInt>::new(2);
        tracker.commit(&m.column(0)).unwrap();
        tracker.commit(&m.column(1)).unwrap();
        match tracker.try_insert(&m.column(2)).unwrap() {
            InsertOutcome::Dependent(comb) => assert_eq!(comb, vec_i(&[1, -2, 1])),
            InsertOutcome::Independent => panic!("column 2 should be dependent"),
        }
        // The i128 fast path agrees.
        let cols: Vec<Vec<i128>> = (0..3)
            .map(|j| m.column(j).iter().map(|e| i128::try_from(e).unwrap()).collect())
            .collect();
        let mut fast = SpanTracker::<i128>::new(2);
        fast.commit(&cols[0]).unwrap();
        fast.commit(&cols[1]).unwrap();
        match fast.try_insert(&cols[2]).unwrap() {
            InsertOutcome::Dependent(comb) => assert_eq!(comb, vec_i(&[1, -2, 1])),
            InsertOutcome::Independent => panic!("column 2 should be dependent"),
        }
    }

    #[test]
    fn determinant_signs() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&m), bi(-1));
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(determinant(&m), bi(3));
    }
}
