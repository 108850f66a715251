//! Exact linear algebra over GF(2).
//!
//! Matrices are dense with rows packed into `u64` words; elimination works
//! word-wise so that rank and solve stay cheap inside the exhaustive oracles,
//! which enumerate up to 2^24 vectors. Elimination always pivots on the
//! leftmost column and topmost row, so reduced forms and solutions are
//! deterministic.

use crate::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Dense binary matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    /// All-zero matrix. Degenerate shapes (zero rows or columns) are valid
    /// and have rank 0.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix entry by entry from a predicate on (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
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

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let w = self.bits[r * self.words_per_row + c / WORD_BITS];
        (w >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let w = &mut self.bits[r * self.words_per_row + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (lo, hi) = self.bits.split_at_mut(b * self.words_per_row);
        lo[a * self.words_per_row..(a + 1) * self.words_per_row]
            .swap_with_slice(&mut hi[..self.words_per_row]);
    }

    /// Adds row `src` into row `dst` (XOR over GF(2)).
    fn xor_row(&mut self, dst: usize, src: usize) {
        let wpr = self.words_per_row;
        let (d, s) = (dst * wpr, src * wpr);
        for i in 0..wpr {
            let v = self.bits[s + i];
            self.bits[d + i] ^= v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        Gf2Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// Column `c` packed into a `u64`, bit `r` holding entry (r, c).
    /// Requires at most 64 rows.
    pub fn column_bits(&self, c: usize) -> u64 {
        assert!(self.rows <= 64, "column_bits requires at most 64 rows");
        let mut out = 0u64;
        for r in 0..self.rows {
            if self.get(r, c) {
                out |= 1 << r;
            }
        }
        out
    }

    /// Matrix-vector product with both vectors packed into `u64`s
    /// (coordinate `i` at bit `i`). Requires at most 64 rows and columns.
    pub fn mul_bits(&self, x: u64) -> u64 {
        assert!(
            self.rows <= 64 && self.cols <= 64,
            "mul_bits requires at most 64 rows and columns"
        );
        let mut out = 0u64;
        for r in 0..self.rows {
            let parity = (self.row(r)[0] & x).count_ones() & 1;
            out |= u64::from(parity) << r;
        }
        out
    }

    pub fn mul_vec(&self, v: &Gf2Vector) -> Gf2Vector {
        assert_eq!(v.len, self.cols, "vector length must match column count");
        let mut out = Gf2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (w, x) in self.row(r).iter().zip(v.words.iter()) {
                acc ^= w & x;
            }
            if acc.count_ones() & 1 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Rank over GF(2) by Gaussian elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut scratch = self.clone();
        row_reduce(&mut scratch, None).len()
    }

    /// Dimension of the null space: `cols - rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

/// Bit vector over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zeros(len: usize) -> Self {
        Gf2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Packs the low `len` bits of `bits` (coordinate `i` at bit `i`).
    /// Requires `len <= 64`.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= 64, "from_bits supports at most 64 coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == 64 { u64::MAX } else { (1 << len) - 1 };
            if !v.words.is_empty() {
                v.words[0] = bits & mask;
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index out of bounds");
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index out of bounds");
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// The vector packed into a `u64`. Requires `len <= 64`.
    pub fn as_bits(&self) -> u64 {
        assert!(self.len <= 64, "as_bits supports at most 64 coordinates");
        self.words.first().copied().unwrap_or(0)
    }

    /// The backing words (coordinate `i` at bit `i % 64` of word `i / 64`).
    pub fn into_words(self) -> Vec<u64> {
        self.words
    }
}

impl std::fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "Gf2Vector[{s}]")
    }
}

/// Full reduction to reduced row echelon form, pivoting on the leftmost
/// column, topmost row. Returns pivot columns in order; `companion` receives
/// the same row operations when present.
fn row_reduce(m: &mut Gf2Matrix, mut companion: Option<&mut Gf2Matrix>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..m.cols {
        if next_row == m.rows {
            break;
        }
        let Some(pivot_row) = (next_row..m.rows).find(|&r| m.get(r, col)) else {
            continue;
        };
        m.swap_rows(next_row, pivot_row);
        if let Some(c) = companion.as_deref_mut() {
            c.swap_rows(next_row, pivot_row);
        }
        for r in 0..m.rows {
            if r != next_row && m.get(r, col) {
                m.xor_row(r, next_row);
                if let Some(c) = companion.as_deref_mut() {
                    c.xor_row(r, next_row);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    pivots
}

/// Power of the down-shift matrix: the q x q matrix with entry (j, i) = 1
/// exactly when j = i + k, so `k = 0` is the identity and `k = q` is zero.
/// Multiplication by it drops the top `k` signal levels.
pub fn downshift_power(q: usize, k: usize) -> Result<Gf2Matrix> {
    if k > q {
        return Err(Error::InvalidShift { shift: k, dim: q });
    }
    let mut m = Gf2Matrix::zeros(q, q);
    for c in 0..q.saturating_sub(k) {
        m.set(c + k, c, true);
    }
    Ok(m)
}

/// Horizontal block concatenation `[a b]`. Row counts must match.
pub fn hstack(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    if a.rows != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "hstack needs equal row counts, got {} and {}",
            a.rows, b.rows
        )));
    }
    let mut m = Gf2Matrix::zeros(a.rows, a.cols + b.cols);
    for r in 0..a.rows {
        for c in 0..a.cols {
            if a.get(r, c) {
                m.set(r, c, true);
            }
        }
        for c in 0..b.cols {
            if b.get(r, c) {
                m.set(r, a.cols + c, true);
            }
        }
    }
    Ok(m)
}

/// Vertical block concatenation `[a; b]`. Column counts must match.
pub fn vstack(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    if a.cols != b.cols {
        return Err(Error::ShapeMismatch(format!(
            "vstack needs equal column counts, got {} and {}",
            a.cols, b.cols
        )));
    }
    let mut m = Gf2Matrix::zeros(a.rows + b.rows, a.cols);
    for r in 0..a.rows {
        for c in 0..a.cols {
            if a.get(r, c) {
                m.set(r, c, true);
            }
        }
    }
    for r in 0..b.rows {
        for c in 0..b.cols {
            if b.get(r, c) {
                m.set(a.rows + r, c, true);
            }
        }
    }
    Ok(m)
}

/// Precomputed reduced echelon form of a coefficient matrix, for solving
/// many systems `M x = t` against the same `M`.
pub struct Gf2Solver {
    rows: usize,
    cols: usize,
    pivots: Vec<usize>,
    transform: Gf2Matrix,
}

impl Gf2Solver {
    pub fn new(m: &Gf2Matrix) -> Self {
        let mut rref = m.clone();
        let mut transform = Gf2Matrix::identity(m.rows);
        let pivots = row_reduce(&mut rref, Some(&mut transform));
        Gf2Solver {
            rows: m.rows,
            cols: m.cols,
            pivots,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot columns of the reduced form, in elimination order. These index
    /// an independent subset of the matrix columns spanning its column
    /// space.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// One solution of `M x = target` with all free variables set to zero,
    /// or `None` when the target is outside the column space. Deterministic
    /// given the inputs.
    pub fn solve(&self, target: &Gf2Vector) -> Option<Gf2Vector> {
        assert_eq!(
            target.len(),
            self.rows,
            "target length must match the row count"
        );
        let reduced = self.transform.mul_vec(target);
        for r in self.pivots.len()..self.rows {
            if reduced.get(r) {
                return None;
            }
        }
        let mut x = Gf2Vector::zeros(self.cols);
        for (r, &col) in self.pivots.iter().enumerate() {
            if reduced.get(r) {
                x.set(col, true);
            }
        }
        Some(x)
    }

    /// `solve` with both vectors packed into `u64`s. Requires at most 64
    /// rows and columns.
    pub fn solve_bits(&self, target: u64) -> Option<u64> {
        assert!(self.rows <= 64 && self.cols <= 64);
        self.solve(&Gf2Vector::from_bits(self.rows, target))
            .map(|v| v.as_bits())
    }
}

/// Finds one `x` with `basis * x = target`, free variables set to zero, or
/// `None` when the target is outside the column space. Absence is a valid
/// outcome, not an error; the only error is a row-count mismatch.
pub fn solve_in_affine(target: &Gf2Vector, basis: &Gf2Matrix) -> Result<Option<Gf2Vector>> {
    if target.len() != basis.rows() {
        return Err(Error::ShapeMismatch(format!(
            "target has {} coordinates but basis has {} rows",
            target.len(),
            basis.rows()
        )));
    }
    Ok(Gf2Solver::new(basis).solve(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Gf2Matrix {
        Gf2Matrix::from_fn(rows, cols, |_, _| rng.next_u64() & 1 == 1)
    }

    #[test]
    fn downshift_entries_match_definition() {
        let d = downshift_power(3, 1).unwrap();
        let expected = [[false, false, false], [true, false, false], [false, true, false]];
        for (r, row) in expected.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                assert_eq!(d.get(r, c), e, "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn downshift_zero_gives_identity() {
        assert_eq!(downshift_power(3, 0).unwrap(), Gf2Matrix::identity(3));
    }

    #[test]
    fn downshift_full_shift_is_zero() {
        assert!(downshift_power(4, 4).unwrap().is_zero());
    }

    #[test]
    fn downshift_rejects_overshift() {
        assert!(matches!(
            downshift_power(3, 4),
            Err(Error::InvalidShift { shift: 4, dim: 3 })
        ));
    }

    #[test]
    fn downshift_rank_is_q_minus_k() {
        assert_eq!(downshift_power(4, 2).unwrap().rank(), 2);
        for q in 0..=6 {
            for k in 0..=q {
                assert_eq!(downshift_power(q, k).unwrap().rank(), q - k);
            }
        }
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(Gf2Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Gf2Matrix::identity(5).rank(), 5);
        assert_eq!(Gf2Matrix::zeros(0, 0).rank(), 0);
        assert_eq!(Gf2Matrix::zeros(0, 4).rank(), 0);
        assert_eq!(Gf2Matrix::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn stacked_downshift_rank_is_max_gain() {
        // B = [D^{q-n2} D^{q-m2}] with q = 4, n2 = 2, m2 = 1.
        let b = hstack(
            &downshift_power(4, 2).unwrap(),
            &downshift_power(4, 3).unwrap(),
        )
        .unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(b.nullity(), 6);
    }

    #[test]
    fn stacked_system_rank_case3() {
        // G = [A; B] for gains (4, 1, 2, 1), q = 4: rank must come out as
        // max{4,1} + max{2,1} - min{3,1} = 5.
        let q = 4;
        let a = hstack(
            &downshift_power(q, 0).unwrap(),
            &downshift_power(q, 3).unwrap(),
        )
        .unwrap();
        let b = hstack(
            &downshift_power(q, 2).unwrap(),
            &downshift_power(q, 3).unwrap(),
        )
        .unwrap();
        let g = vstack(&a, &b).unwrap();
        assert_eq!(g.rank(), 5);
    }

    #[test]
    fn stack_shape_errors() {
        let a = Gf2Matrix::zeros(2, 3);
        let b = Gf2Matrix::zeros(3, 3);
        assert!(hstack(&a, &b).is_err());
        let c = Gf2Matrix::zeros(2, 4);
        assert!(vstack(&a, &c).is_err());
    }

    #[test]
    fn vstack_duplicated_identity_keeps_rank() {
        let i2 = Gf2Matrix::identity(2);
        assert_eq!(vstack(&i2, &i2).unwrap().rank(), 2);
        assert_eq!(hstack(&i2, &Gf2Matrix::zeros(2, 2)).unwrap().rank(), 2);
    }

    #[test]
    fn solve_zero_target_gives_zero_vector() {
        let basis = downshift_power(3, 1).unwrap();
        let x = solve_in_affine(&Gf2Vector::zeros(3), &basis).unwrap().unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn solve_identity_returns_target() {
        let basis = Gf2Matrix::identity(4);
        let t = Gf2Vector::from_bits(4, 0b1011);
        let x = solve_in_affine(&t, &basis).unwrap().unwrap();
        assert_eq!(x, t);
    }

    #[test]
    fn solve_outside_column_space_is_absent() {
        // The image of D^1 (q = 3) has a zero first coordinate.
        let basis = downshift_power(3, 1).unwrap();
        let t = Gf2Vector::from_bits(3, 0b001);
        assert!(solve_in_affine(&t, &basis).unwrap().is_none());
    }

    #[test]
    fn solve_shape_error() {
        let basis = Gf2Matrix::identity(3);
        assert!(solve_in_affine(&Gf2Vector::zeros(2), &basis).is_err());
    }

    #[test]
    fn solver_matches_one_shot_solve() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let rows = (rng.next_u64() % 6 + 1) as usize;
            let cols = (rng.next_u64() % 6 + 1) as usize;
            let m = random_matrix(&mut rng, rows, cols);
            let solver = Gf2Solver::new(&m);
            assert_eq!(solver.rank(), m.rank());
            let x = Gf2Vector::from_bits(cols, rng.next_u64());
            let t = m.mul_vec(&x);
            // Target is in the column space by construction, so a solution
            // must exist and reproduce the target.
            let sol = solver.solve(&t).expect("consistent system");
            assert_eq!(m.mul_vec(&sol), t);
            assert_eq!(solve_in_affine(&t, &m).unwrap(), Some(sol));
        }
    }

    #[test]
    fn rank_invariant_under_transpose_and_row_permutation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let rows = (rng.next_u64() % 7 + 1) as usize;
            let cols = (rng.next_u64() % 7 + 1) as usize;
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn mul_bits_matches_mul_vec() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let rows = (rng.next_u64() % 8 + 1) as usize;
            let cols = (rng.next_u64() % 8 + 1) as usize;
            let m = random_matrix(&mut rng, rows, cols);
            let bits = rng.next_u64() & ((1 << cols) - 1);
            let v = Gf2Vector::from_bits(cols, bits);
            assert_eq!(m.mul_bits(bits), m.mul_vec(&v).as_bits());
        }
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(rows in 0usize..8, cols in 0usize..8, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols);
            prop_assert_eq!(m.rank() + m.nullity(), cols);
        }

        #[test]
        fn vstack_rank_bounds(rows_a in 0usize..6, rows_b in 0usize..6, cols in 1usize..7, seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, rows_a, cols);
            let b = random_matrix(&mut rng, rows_b, cols);
            let g = vstack(&a, &b).unwrap();
            let (ra, rb, rg) = (a.rank(), b.rank(), g.rank());
            prop_assert!(rg >= ra.max(rb));
            prop_assert!(rg <= ra + rb);
        }

        #[test]
        fn hstack_downshift_rank_is_max(q in 0usize..6, n2 in 0usize..6, m2 in 0usize..6) {
            prop_assume!(n2 <= q && m2 <= q);
            let b = hstack(
                &downshift_power(q, q - n2).unwrap(),
                &downshift_power(q, q - m2).unwrap(),
            )
            .unwrap();
            prop_assert_eq!(b.rank(), n2.max(m2));
        }

        #[test]
        fn solve_agrees_with_rank_condition(rows in 1usize..6, cols in 1usize..6, seed in 0u64..500, target_bits in 0u64..64) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols);
            let t = Gf2Vector::from_bits(rows, target_bits & ((1 << rows) - 1));
            let t_col = Gf2Matrix::from_fn(rows, 1, |r, _| t.get(r));
            let augmented = hstack(&m, &t_col).unwrap();
            let solvable = augmented.rank() == m.rank();
            let sol = solve_in_affine(&t, &m).unwrap();
            prop_assert_eq!(sol.is_some(), solvable);
            if let Some(x) = sol {
                prop_assert_eq!(m.mul_vec(&x), t);
            }
        }
    }
}
