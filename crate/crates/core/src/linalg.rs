//! Dense exact linear algebra over a prime field `F_p`.
//!
//! Every graded piece handled by this crate is small enough that dense
//! elimination is the right tool. Pivoting is deterministic (first nonzero
//! entry, scanning columns left to right) so reduced forms, kernel bases and
//! therefore all downstream generator choices are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic: larger than any socle degree we construct.
pub const DEFAULT_PRIME: u32 = 32003;

/// A residue class modulo the field's prime.
pub type FieldElement = u32;

/// The prime field `F_p`. Elements are plain `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Builds `F_p` for an odd prime `p`.
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::BadPrime { p, s: None });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> FieldElement {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: FieldElement, mut n: u64) -> FieldElement {
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// `acc[j] += f * src[j]` for every `j`.
    #[inline]
    pub fn axpy(&self, acc: &mut [FieldElement], f: FieldElement, src: &[FieldElement]) {
        if f == 0 {
            return;
        }
        let p = self.p as u64;
        let f = f as u64;
        for (a, &s) in acc.iter_mut().zip(src) {
            if s != 0 {
                *a = ((*a as u64 + f * s as u64) % p) as u32;
            }
        }
    }

    pub fn scale(&self, v: &mut [FieldElement], f: FieldElement) {
        for x in v.iter_mut() {
            *x = self.mul(*x, f);
        }
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<FieldElement>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [FieldElement] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (&a, &b) in self.row(i).iter().zip(v) {
                    acc = (acc + a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    let src = other.row(k).to_vec();
                    self.field.axpy(out.row_mut(i), a, &src);
                }
            }
        }
        out
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            f.scale(m.row_mut(r), inv);
            let pivot_row = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i != r {
                    let x = m.get(i, c);
                    if x != 0 {
                        let cols = m.cols;
                        let row = &mut m.data[i * cols + c..(i + 1) * cols];
                        f.axpy(row, f.neg(x), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().pivots.len()
    }

    /// A basis of `{v : self * v = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let ech = self.rref();
        kernel_from_echelon(&ech, self.cols)
    }

    /// Solves `self * X = B` for every column of `rhs`; `None` if some column
    /// is not in the image.
    pub fn solve_many(&self, rhs: &[Vec<FieldElement>]) -> Option<Vec<Vec<FieldElement>>> {
        let n = self.cols;
        let mut aug = Matrix::zeros(self.field, self.rows, n + rhs.len());
        for i in 0..self.rows {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            for (k, b) in rhs.iter().enumerate() {
                aug.set(i, n + k, b[i]);
            }
        }
        let ech = aug.rref();
        if ech.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut out = vec![vec![0; n]; rhs.len()];
        for (r, &c) in ech.pivots.iter().enumerate() {
            for (k, x) in out.iter_mut().enumerate() {
                x[c] = ech.matrix.get(r, n + k);
            }
        }
        Some(out)
    }

    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        self.solve_many(&[b.to_vec()]).map(|mut v| v.pop().unwrap())
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, 1);
        }
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            inv.row_mut(i).copy_from_slice(&ech.matrix.row(i)[n..]);
        }
        Some(inv)
    }
}

fn kernel_from_echelon(ech: &Echelon, cols: usize) -> Vec<Vec<FieldElement>> {
    let f = ech.matrix.field;
    let mut is_pivot = vec![false; cols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (r, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = f.neg(ech.matrix.get(r, free));
            }
            v
        })
        .collect()
}

/// Incrementally built echelon basis of a subspace of `F_p^n`.
///
/// Each stored row has a leading one at its pivot and zeros at the pivots
/// of all rows inserted before it, so reducing a vector row by row in
/// insertion order clears every pivot.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: PrimeField,
    dim: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        SpanBuilder {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [FieldElement]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let x = v[pc];
            if x != 0 {
                self.field.axpy(v, self.field.neg(x), row);
            }
        }
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[pc]);
        self.field.scale(&mut w, inv);
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}

/// Rank of the span of a list of vectors of common length `dim`.
pub fn span_rank(field: PrimeField, dim: usize, vectors: &[Vec<FieldElement>]) -> usize {
    let mut sb = SpanBuilder::new(field, dim);
    for v in vectors {
        sb.insert(v);
    }
    sb.rank()
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span(field: PrimeField, dim: usize, a: &[Vec<FieldElement>], b: &[Vec<FieldElement>]) -> bool {
    let ra = span_rank(field, dim, a);
    let rb = span_rank(field, dim, b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    span_rank(field, dim, &all) == ra
}

/// Normal forms for the quotient `F_p^n / S`.
///
/// The retained basis is the lexicographically earliest set of coordinate
/// vectors complementary to `S`; `normal_form[c]` expresses `e_c` in that
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPiece {
    /// Ambient coordinates kept as the quotient basis, increasing.
    pub basis: Vec<usize>,
    /// Sparse image of each ambient coordinate vector: `(basis position, coefficient)`.
    pub normal_form: Vec<Vec<(usize, FieldElement)>>,
}

impl QuotientPiece {
    pub fn identity(n: usize) -> Self {
        QuotientPiece {
            basis: (0..n).collect(),
            normal_form: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        QuotientPiece {
            basis: Vec::new(),
            normal_form: vec![Vec::new(); n],
        }
    }

    /// Quotient of `F_p^n` by the span of `subspace` (rows of length `n`).
    pub fn new(field: PrimeField, n: usize, subspace: &[Vec<FieldElement>]) -> Self {
        if subspace.is_empty() {
            return Self::identity(n);
        }
        // Reverse the column order so pivots land on the latest coordinates.
        let rows: Vec<Vec<i64>> = subspace
            .iter()
            .map(|r| r.iter().rev().map(|&x| x as i64).collect())
            .collect();
        let ech = Matrix::from_rows(field, &rows).rref();
        let rank = ech.pivots.len();
        let mut pivot_row = vec![None; n];
        for (r, &c) in ech.pivots.iter().enumerate() {
            pivot_row[n - 1 - c] = Some(r);
        }
        let basis: Vec<usize> = (0..n).filter(|&c| pivot_row[c].is_none()).collect();
        let mut position = vec![usize::MAX; n];
        for (k, &c) in basis.iter().enumerate() {
            position[c] = k;
        }
        let normal_form = (0..n)
            .map(|c| match pivot_row[c] {
                None => vec![(position[c], 1)],
                Some(r) => {
                    debug_assert!(r < rank);
                    // e_c + sum_{free j} row[j] e_j lies in S.
                    basis
                        .iter()
                        .enumerate()
                        .filter_map(|(k, &j)| {
                            let x = ech.matrix.get(r, n - 1 - j);
                            (x != 0).then(|| (k, field.neg(x)))
                        })
                        .collect()
                }
            })
            .collect();
        QuotientPiece { basis, normal_form }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.normal_form.len()
    }

    /// Normal form of an ambient vector.
    pub fn reduce(&self, field: PrimeField, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![0; self.dim()];
        for (c, &x) in v.iter().enumerate() {
            if x != 0 {
                for &(k, y) in &self.normal_form[c] {
                    out[k] = field.add(out[k], field.mul(x, y));
                }
            }
        }
        out
    }

    /// Ambient representative of a quotient vector.
    pub fn lift(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![0; self.ambient_dim()];
        for (k, &c) in self.basis.iter().enumerate() {
            out[c] = v[k];
        }
        out
    }
}

/// Coordinates relative to a basis of a subspace `L` modulo a subspace `N ⊆ L`.
///
/// Used to realise subquotients `L/N` of a fixed vector space.
#[derive(Clone, Debug)]
pub struct SubquotientCoords {
    field: PrimeField,
    /// Representatives of the subquotient basis, as ambient vectors.
    pub representatives: Vec<Vec<FieldElement>>,
    /// Inverse of the change of basis `[N basis | reps | completion]`.
    inverse: Matrix,
    offset: usize,
}

impl SubquotientCoords {
    /// `outer` spans `L`, `inner` spans `N`; `inner` must lie in `L`.
    pub fn new(field: PrimeField, dim: usize, outer: &[Vec<FieldElement>], inner: &[Vec<FieldElement>]) -> Self {
        let mut sb = SpanBuilder::new(field, dim);
        let mut cols = Vec::new();
        for v in inner {
            if sb.insert(v) {
                cols.push(v.clone());
            }
        }
        let offset = cols.len();
        let mut reps = Vec::new();
        for v in outer {
            if sb.insert(v) {
                cols.push(v.clone());
                reps.push(v.clone());
            }
        }
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            if sb.insert(&e) {
                cols.push(e);
            }
        }
        let change = Matrix::from_columns(field, dim, &cols);
        let inverse = change.inverse().expect("completed basis is invertible");
        SubquotientCoords {
            field,
            representatives: reps,
            inverse,
            offset,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of `v ∈ L` in `L/N`. Components outside `L` are ignored.
    pub fn coords(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let all = self.inverse.mul_vec(v);
        all[self.offset..self.offset + self.dim()].to_vec()
    }

    /// Whether `v` lies in `L` (its coordinates beyond `L` vanish).
    pub fn in_outer(&self, v: &[FieldElement]) -> bool {
        let all = self.inverse.mul_vec(v);
        all[self.offset + self.dim()..].iter().all(|&x| x == 0)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m = Matrix::zeros(f5(), 2, 3);
        assert_eq!(m.kernel_basis().len(), 3);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = Matrix::identity(f5(), 3);
        assert!(m.kernel_basis().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kernel_of_one_one_matches_enumeration() {
        let f = f5();
        let m = Matrix::from_rows(f, &[vec![1, 1]]);
        // Oracle: every v in F_5^2 with v0 + v1 = 0.
        let mut expected = Vec::new();
        for a in 0..5u32 {
            for b in 0..5u32 {
                if (a + b) % 5 == 0 {
                    expected.push(vec![a, b]);
                }
            }
        }
        assert_eq!(expected.len(), 5);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![4, 1]]);
        // Span of (4,1) is the same line as (1,4).
        assert!(same_span(f, 2, &k, &[vec![1, 4]]));
        for v in &expected {
            let mut sb = SpanBuilder::new(f, 2);
            sb.insert(&k[0]);
            assert!(sb.contains(v));
        }
    }

    #[test]
    fn dependent_rows_have_rank_one() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(f, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn quotient_piece_keeps_earliest_coordinates() {
        let f = f5();
        // S = span(e0 - e2): earliest complement is {e0, e1}.
        let q = QuotientPiece::new(f, 3, &[vec![1, 0, 4]]);
        assert_eq!(q.basis, vec![0, 1]);
        assert_eq!(q.reduce(f, &[0, 0, 1]), vec![1, 0]);
        assert_eq!(q.reduce(f, &[1, 0, 4]), vec![0, 0]);
    }

    #[test]
    fn subquotient_coordinates() {
        let f = f5();
        let outer = vec![vec![1, 0, 0], vec![0, 1, 0]];
        let inner = vec![vec![1, 1, 0]];
        let c = SubquotientCoords::new(f, 3, &outer, &inner);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.coords(&[1, 1, 0]), vec![0]);
        assert!(c.in_outer(&[2, 3, 0]));
        assert!(!c.in_outer(&[0, 0, 1]));
    }

    fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<u32>)> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), proptest::collection::vec(0u32..7, r * c))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity((r, c, data) in arb_matrix()) {
            let f = PrimeField::new(7).unwrap();
            let rows: Vec<Vec<i64>> = data.chunks(c).map(|ch| ch.iter().map(|&x| x as i64).collect()).collect();
            let m = Matrix::from_rows(f, &rows);
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), c);
            for v in &k {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
            prop_assert_eq!(span_rank(f, c, &k), k.len());
            let _ = r;
        }

        #[test]
        fn rref_is_deterministic_under_row_permutation((_r, c, data) in arb_matrix()) {
            let f = PrimeField::new(7).unwrap();
            let rows: Vec<Vec<i64>> = data.chunks(c).map(|ch| ch.iter().map(|&x| x as i64).collect()).collect();
            let mut rev = rows.clone();
            rev.reverse();
            let a = Matrix::from_rows(f, &rows).rref();
            let b = Matrix::from_rows(f, &rev).rref();
            prop_assert_eq!(a.pivots, b.pivots);
            prop_assert_eq!(a.matrix, b.matrix);
        }
    }
}
