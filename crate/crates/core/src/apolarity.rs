//! Artinian Gorenstein algebras `R = Q/Ann(F)` built from a dual generator,
//! together with the ideal-theoretic queries the rest of the crate needs.
//!
//! Everything is standard graded: `m^i` is the sum of the pieces of degree at
//! least `i`. Each piece `R_d` is a quotient of `Q_d` with a monomial basis
//! chosen as the earliest complement of `I_d`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{FieldElement, Matrix, PrimeField, QuotientPiece, SpanBuilder};
use crate::polyring::{monomials_of_degree, piece_dim, DualElement, Form, Monomial, MonomialTable};

/// A nonzero degree-`s` element of the dual space over `F_p` with `p > s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGenerator {
    field: PrimeField,
    element: DualElement,
}

impl DualGenerator {
    pub fn new(field: PrimeField, element: DualElement) -> Result<Self> {
        if field.modulus() as usize <= element.degree {
            return Err(Error::BadPrime {
                p: field.modulus(),
                s: Some(element.degree as u32),
            });
        }
        if element.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        Ok(DualGenerator { field, element })
    }

    pub fn parse(field: PrimeField, text: &str) -> Result<Self> {
        Self::new(field, DualElement::parse(field, text)?)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.element.num_vars
    }

    pub fn degree(&self) -> usize {
        self.element.degree
    }

    pub fn element(&self) -> &DualElement {
        &self.element
    }

    pub fn to_text(&self) -> String {
        self.element.to_text()
    }
}

/// Uniformly random dual generator; a deterministic function of `seed`.
pub fn sample_dual_generator(e: usize, s: usize, p: u32, seed: u64) -> Result<DualGenerator> {
    if e == 0 || s == 0 {
        return Err(Error::InvalidConfig("need e >= 1 and s >= 1".into()));
    }
    let field = PrimeField::new(p)?;
    if p as usize <= s {
        return Err(Error::BadPrime { p, s: Some(s as u32) });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..piece_dim(e, s)).map(|_| rng.random_range(0..p)).collect();
    DualGenerator::new(
        field,
        DualElement {
            num_vars: e,
            degree: s,
            coeffs,
        },
    )
}

/// Per-degree bases of `Ann(F)` in degrees `0..=s`, as `Q_d` coefficient rows.
/// In degrees above `s` the ideal is all of `Q_d`.
pub fn apolar_ideal(gen: &DualGenerator) -> Vec<Vec<Vec<FieldElement>>> {
    let e = gen.num_vars();
    let s = gen.degree();
    let coeffs = &gen.element.coeffs;
    (0..=s)
        .map(|d| {
            let qd = monomials_of_degree(e, d);
            let dd = monomials_of_degree(e, s - d);
            // Row w, column u: coefficient of X^{u+w} in F.
            let mut m = Matrix::zeros(gen.field, dd.len(), qd.len());
            for (i, w) in dd.iter().enumerate() {
                for (j, u) in qd.iter().enumerate() {
                    m.set(i, j, coeffs[u.mul(w).rank()]);
                }
            }
            m.kernel_basis()
        })
        .collect()
}

/// `R = Q/I` with `I_d = Q_d` above the top degree.
#[derive(Clone, Debug)]
pub struct GradedArtinianAlgebra {
    field: PrimeField,
    e: usize,
    monomials: MonomialTable,
    pieces: Vec<QuotientPiece>,
    ideal: Vec<Vec<Vec<FieldElement>>>,
}

/// A homogeneous ideal of an algebra, one subspace of `R_d` per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    pub pieces: Vec<Vec<Vec<FieldElement>>>,
}

impl GradedArtinianAlgebra {
    /// `Q/I` from per-degree ideal spans (rows in `Q_d` coordinates) for
    /// `d = 0..ideal.len()`; degrees beyond are zero.
    pub fn from_ideal(field: PrimeField, e: usize, ideal: Vec<Vec<Vec<FieldElement>>>) -> Result<Self> {
        let mut pieces: Vec<QuotientPiece> = ideal
            .iter()
            .enumerate()
            .map(|(d, rows)| QuotientPiece::new(field, piece_dim(e, d), rows))
            .collect();
        let mut ideal = ideal;
        while pieces.last().is_some_and(|p| p.dim() == 0) {
            pieces.pop();
            ideal.pop();
        }
        if pieces.is_empty() {
            return Err(Error::UnitIdeal);
        }
        let ideal = ideal
            .into_iter()
            .enumerate()
            .map(|(d, rows)| reduced_basis(field, piece_dim(e, d), &rows))
            .collect();
        let top = pieces.len() - 1;
        Ok(GradedArtinianAlgebra {
            field,
            e,
            monomials: MonomialTable::new(e, top),
            pieces,
            ideal,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Declared number of variables of the ambient polynomial ring.
    pub fn num_vars(&self) -> usize {
        self.e
    }

    /// Largest degree with a nonzero piece.
    pub fn top_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn dim(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, |p| p.dim())
    }

    pub fn piece(&self, d: usize) -> Option<&QuotientPiece> {
        self.pieces.get(d)
    }

    pub fn monomials(&self) -> &MonomialTable {
        &self.monomials
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }

    pub fn length(&self) -> usize {
        self.hilbert_function().iter().sum()
    }

    /// Rank of `m/m^2`, which may be less than the declared `e`.
    pub fn effective_embedding_dim(&self) -> usize {
        self.dim(1)
    }

    /// Basis of `I_d` as `Q_d` coefficient rows (all of `Q_d` above the top).
    pub fn ideal_basis(&self, d: usize) -> Vec<Vec<FieldElement>> {
        match self.ideal.get(d) {
            Some(rows) => rows.clone(),
            None => {
                let n = piece_dim(self.e, d);
                (0..n)
                    .map(|i| {
                        let mut v = vec![0; n];
                        v[i] = 1;
                        v
                    })
                    .collect()
            }
        }
    }

    pub fn basis_monomial(&self, d: usize, k: usize) -> &Monomial {
        self.monomials.get(d, self.pieces[d].basis[k])
    }

    pub fn basis_monomials(&self, d: usize) -> Vec<Monomial> {
        match self.pieces.get(d) {
            Some(p) => p.basis.iter().map(|&i| self.monomials.get(d, i).clone()).collect(),
            None => Vec::new(),
        }
    }

    /// Normal form of an arbitrary monomial of degree `d`.
    pub fn reduce_monomial(&self, m: &Monomial) -> Vec<FieldElement> {
        let d = m.degree();
        let Some(piece) = self.pieces.get(d) else {
            return Vec::new();
        };
        let mut out = vec![0; piece.dim()];
        for &(k, c) in &piece.normal_form[m.rank()] {
            out[k] = c;
        }
        out
    }

    /// Normal form of a form of `Q`.
    pub fn reduce_form(&self, f: &Form) -> Vec<FieldElement> {
        match self.pieces.get(f.degree) {
            Some(piece) => piece.reduce(self.field, &f.coeffs),
            None => Vec::new(),
        }
    }

    /// Product of `u ∈ R_a` and `v ∈ R_b`; empty vector when `a + b` exceeds the top.
    pub fn multiply(&self, a: usize, u: &[FieldElement], b: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        let Some(target) = self.pieces.get(a + b) else {
            return Vec::new();
        };
        let f = self.field;
        let mut out = vec![0; target.dim()];
        let (pa, pb) = (&self.pieces[a], &self.pieces[b]);
        for (i, &x) in u.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in v.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let idx = self.monomials_product(a, pa.basis[i], b, pb.basis[j]);
                let xy = f.mul(x, y);
                for &(k, c) in &target.normal_form[idx] {
                    out[k] = f.add(out[k], f.mul(xy, c));
                }
            }
        }
        out
    }

    fn monomials_product(&self, a: usize, i: usize, b: usize, j: usize) -> usize {
        self.monomials.product_index(a, i, b, j)
    }

    /// Multiplication by a monomial of `Q`, `R_d → R_{d + deg m}`.
    pub fn mul_monomial(&self, m: &Monomial, d: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        let a = m.degree();
        if a + d > self.top_degree() {
            return Vec::new();
        }
        let um = self.reduce_monomial(m);
        self.multiply(a, &um, d, v)
    }

    /// Matrix of multiplication by `x_j` from `R_d` to `R_{d+1}`.
    pub fn variable_matrix(&self, j: usize, d: usize) -> Matrix {
        let x = Monomial::variable(self.e, j);
        let cols: Vec<Vec<FieldElement>> = (0..self.dim(d))
            .map(|k| {
                let mut v = vec![0; self.dim(d)];
                v[k] = 1;
                let w = self.mul_monomial(&x, d, &v);
                if w.is_empty() {
                    vec![0; self.dim(d + 1)]
                } else {
                    w
                }
            })
            .collect();
        Matrix::from_columns(self.field, self.dim(d + 1), &cols)
    }

    /// Matrix of multiplication by `u ∈ R_a` from `R_d` to `R_{a+d}`.
    pub fn multiplication_matrix(&self, a: usize, u: &[FieldElement], d: usize) -> Matrix {
        let rows = self.dim(a + d);
        let cols: Vec<Vec<FieldElement>> = (0..self.dim(d))
            .map(|k| {
                let mut v = vec![0; self.dim(d)];
                v[k] = 1;
                let w = self.multiply(a, u, d, &v);
                if w.is_empty() {
                    vec![0; rows]
                } else {
                    w
                }
            })
            .collect();
        Matrix::from_columns(self.field, rows, &cols)
    }

    pub fn to_document(&self) -> AlgebraDocument {
        AlgebraDocument {
            schema: 1,
            e: self.e,
            s: self.top_degree(),
            p: self.field.modulus(),
            pieces: (0..=self.top_degree())
                .map(|d| PieceDocument {
                    degree: d,
                    basis: self.basis_monomials(d).into_iter().map(|m| m.exponents).collect(),
                    ideal: self.ideal[d].clone(),
                })
                .collect(),
        }
    }
}

/// JSON form of an algebra.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraDocument {
    pub schema: u32,
    pub e: usize,
    pub s: usize,
    pub p: u32,
    pub pieces: Vec<PieceDocument>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceDocument {
    pub degree: usize,
    pub basis: Vec<Vec<u16>>,
    pub ideal: Vec<Vec<FieldElement>>,
}

fn reduced_basis(field: PrimeField, n: usize, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(
        field,
        &rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect::<Vec<_>>(),
    );
    debug_assert_eq!(m.cols(), n);
    let ech = m.rref();
    (0..ech.pivots.len()).map(|r| ech.matrix.row(r).to_vec()).collect()
}

/// `Q/Ann(F)`.
pub fn build_algebra(gen: &DualGenerator) -> Result<GradedArtinianAlgebra> {
    if gen.element.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    GradedArtinianAlgebra::from_ideal(gen.field, gen.num_vars(), apolar_ideal(gen))
}

pub fn hilbert_function(r: &GradedArtinianAlgebra) -> Vec<usize> {
    r.hilbert_function()
}

impl GradedIdeal {
    pub fn zero(r: &GradedArtinianAlgebra) -> Self {
        GradedIdeal {
            pieces: vec![Vec::new(); r.top_degree() + 1],
        }
    }

    pub fn dim(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, |p| p.len())
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.iter().map(|p| p.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Lowest degree with a nonzero piece.
    pub fn initial_degree(&self) -> Option<usize> {
        self.pieces.iter().position(|p| !p.is_empty())
    }

    pub fn contains(&self, r: &GradedArtinianAlgebra, other: &GradedIdeal) -> bool {
        (0..=r.top_degree()).all(|d| {
            let mut sb = SpanBuilder::new(r.field(), r.dim(d));
            for v in &self.pieces[d] {
                sb.insert(v);
            }
            other.pieces[d].iter().all(|v| sb.contains(v))
        })
    }

    pub fn equals(&self, r: &GradedArtinianAlgebra, other: &GradedIdeal) -> bool {
        (0..=r.top_degree()).all(|d| self.dim(d) == other.dim(d)) && self.contains(r, other)
    }

    /// Closed under multiplication by every `x_j`.
    pub fn is_ideal(&self, r: &GradedArtinianAlgebra) -> bool {
        (0..r.top_degree()).all(|d| {
            let mut sb = SpanBuilder::new(r.field(), r.dim(d + 1));
            for v in &self.pieces[d + 1] {
                sb.insert(v);
            }
            (0..r.num_vars()).all(|j| {
                let x = Monomial::variable(r.num_vars(), j);
                self.pieces[d].iter().all(|v| sb.contains(&r.mul_monomial(&x, d, v)))
            })
        })
    }

    /// Smallest ideal containing the given homogeneous elements.
    pub fn generated_by(r: &GradedArtinianAlgebra, gens: &[(usize, Vec<FieldElement>)]) -> Self {
        let top = r.top_degree();
        let mut builders: Vec<SpanBuilder> = (0..=top).map(|d| SpanBuilder::new(r.field(), r.dim(d))).collect();
        let mut pieces: Vec<Vec<Vec<FieldElement>>> = vec![Vec::new(); top + 1];
        for (d, v) in gens {
            if *d <= top && builders[*d].insert(v) {
                pieces[*d].push(v.clone());
            }
        }
        for d in 0..top {
            let current = pieces[d].clone();
            for v in &current {
                for j in 0..r.num_vars() {
                    let w = r.mul_monomial(&Monomial::variable(r.num_vars(), j), d, v);
                    if builders[d + 1].insert(&w) {
                        pieces[d + 1].push(w);
                    }
                }
            }
        }
        GradedIdeal { pieces }
    }
}

fn full_piece(n: usize) -> Vec<Vec<FieldElement>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

/// `m^i`: the pieces of degree at least `i`.
pub fn power_ideal(r: &GradedArtinianAlgebra, i: usize) -> GradedIdeal {
    GradedIdeal {
        pieces: (0..=r.top_degree())
            .map(|d| if d >= i { full_piece(r.dim(d)) } else { Vec::new() })
            .collect(),
    }
}

/// The ideal generated by the variables `x_j`, `j ∈ vars`.
pub fn variables_ideal(r: &GradedArtinianAlgebra, vars: &[usize]) -> GradedIdeal {
    let gens: Vec<(usize, Vec<FieldElement>)> = vars
        .iter()
        .map(|&j| (1, r.reduce_monomial(&Monomial::variable(r.num_vars(), j))))
        .collect();
    GradedIdeal::generated_by(r, &gens)
}

/// `{v : v·J = 0}`, degree by degree.
pub fn annihilator(r: &GradedArtinianAlgebra, j: &GradedIdeal) -> GradedIdeal {
    let top = r.top_degree();
    let f = r.field();
    GradedIdeal {
        pieces: (0..=top)
            .map(|d| {
                let n = r.dim(d);
                let mut rows: Vec<Vec<i64>> = Vec::new();
                for c in 0..=top - d {
                    for w in &j.pieces[c] {
                        let m = r.multiplication_matrix(c, w, d);
                        for i in 0..m.rows() {
                            rows.push(m.row(i).iter().map(|&x| x as i64).collect());
                        }
                    }
                }
                if rows.is_empty() {
                    full_piece(n)
                } else {
                    Matrix::from_rows(f, &rows).kernel_basis()
                }
            })
            .collect(),
    }
}

pub fn socle(r: &GradedArtinianAlgebra) -> GradedIdeal {
    annihilator(r, &power_ideal(r, 1))
}

/// `R/J` with the induced grading and multiplication.
pub fn quotient_algebra(r: &GradedArtinianAlgebra, j: &GradedIdeal) -> Result<GradedArtinianAlgebra> {
    if j.dim(0) > 0 {
        return Err(Error::UnitIdeal);
    }
    let ideal: Vec<Vec<Vec<FieldElement>>> = (0..=r.top_degree())
        .map(|d| {
            let piece = r.piece(d).unwrap();
            let mut rows = r.ideal_basis(d);
            rows.extend(j.pieces[d].iter().map(|v| piece.lift(v)));
            rows
        })
        .collect();
    GradedArtinianAlgebra::from_ideal(r.field(), r.num_vars(), ideal)
}

/// An invertible linear change of variables `σ(x_j) = Σ_k A[j][k] x_k`.
#[derive(Clone, Debug)]
pub struct CoordinateChange {
    pub matrix: Matrix,
    inverse: Matrix,
}

impl CoordinateChange {
    pub fn identity(field: PrimeField, e: usize) -> Self {
        CoordinateChange {
            matrix: Matrix::identity(field, e),
            inverse: Matrix::identity(field, e),
        }
    }

    /// Uniformly random invertible matrix; resamples until invertible.
    pub fn sample(field: PrimeField, e: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(1);
        loop {
            let mut m = Matrix::zeros(field, e, e);
            for i in 0..e {
                for k in 0..e {
                    m.set(i, k, rng.random_range(0..field.modulus()));
                }
            }
            if let Some(inverse) = m.inverse() {
                return CoordinateChange { matrix: m, inverse };
            }
        }
    }

    fn images(matrix: &Matrix) -> Vec<Form> {
        (0..matrix.rows()).map(|j| Form::linear(matrix.row(j).to_vec())).collect()
    }

    /// `σ(f)`.
    pub fn apply_form(&self, f: &Form) -> Form {
        f.substitute(self.matrix.field(), &Self::images(&self.matrix))
    }

    /// The dual generator `F ∘ σ^{-1}`, whose apolar ideal is `σ(Ann F)`.
    pub fn apply_generator(&self, gen: &DualGenerator) -> DualGenerator {
        let field = gen.field();
        let e = gen.num_vars();
        let s = gen.degree();
        let inv_images = Self::images(&self.inverse);
        let coeffs = monomials_of_degree(e, s)
            .iter()
            .map(|w| {
                let pulled = Form::monomial(field, w, 1).substitute(field, &inv_images);
                pulled
                    .coeffs
                    .iter()
                    .zip(&gen.element.coeffs)
                    .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect();
        DualGenerator {
            field,
            element: DualElement {
                num_vars: e,
                degree: s,
                coeffs,
            },
        }
    }
}

/// Applies a random coordinate change drawn from `seed`.
pub fn generic_coordinate_change(gen: &DualGenerator, seed: u64) -> (DualGenerator, CoordinateChange) {
    let change = CoordinateChange::sample(gen.field(), gen.num_vars(), seed);
    (change.apply_generator(gen), change)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn gen(e: usize, s: usize, terms: &[(i64, Vec<u16>)]) -> DualGenerator {
        DualGenerator::new(fp(), DualElement::from_terms(fp(), e, s, terms)).unwrap()
    }

    fn form_rows(e: usize, d: usize, forms: &[&[(i64, Vec<u16>)]]) -> Vec<Vec<FieldElement>> {
        forms.iter().map(|t| Form::from_terms(fp(), e, d, t).coeffs).collect()
    }

    #[test]
    fn xy_gives_two_squares() {
        let g = gen(2, 2, &[(1, vec![1, 1])]);
        let ideal = apolar_ideal(&g);
        assert!(ideal[0].is_empty() && ideal[1].is_empty());
        let expected = form_rows(2, 2, &[&[(1, vec![2, 0])], &[(1, vec![0, 2])]]);
        assert!(crate::linalg::same_span(fp(), 3, &ideal[2], &expected));
        let r = build_algebra(&g).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 2, 1]);
        assert_eq!(r.length(), 4);
        assert_eq!(r.basis_monomials(2), vec![Monomial::new(vec![1, 1])]);
    }

    #[test]
    fn sum_of_squares() {
        let g = gen(2, 2, &[(1, vec![2, 0]), (1, vec![0, 2])]);
        let ideal = apolar_ideal(&g);
        let expected = form_rows(2, 2, &[&[(1, vec![1, 1])], &[(1, vec![2, 0]), (-1, vec![0, 2])]]);
        assert!(crate::linalg::same_span(fp(), 3, &ideal[2], &expected));
        assert!(ideal[1].is_empty());
        assert_eq!(build_algebra(&g).unwrap().hilbert_function(), vec![1, 2, 1]);
    }

    #[test]
    fn degenerate_generator_drops_embedding_dim() {
        let g = gen(2, 2, &[(1, vec![2, 0])]);
        let ideal = apolar_ideal(&g);
        let y = form_rows(2, 1, &[&[(1, vec![0, 1])]]);
        assert!(crate::linalg::same_span(fp(), 2, &ideal[1], &y));
        let r = build_algebra(&g).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 1, 1]);
        assert_eq!(r.effective_embedding_dim(), 1);
    }

    #[test]
    fn zero_generator_and_small_prime_rejected() {
        let f = fp();
        assert_eq!(DualGenerator::new(f, DualElement::zero(2, 3)), Err(Error::ZeroGenerator));
        let f5 = PrimeField::new(5).unwrap();
        assert!(matches!(
            DualGenerator::new(f5, DualElement::from_terms(f5, 2, 5, &[(1, vec![5, 0])])),
            Err(Error::BadPrime { .. })
        ));
        assert!(matches!(sample_dual_generator(2, 7, 7, 1), Err(Error::BadPrime { .. })));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_dual_generator(3, 4, 32003, 11).unwrap();
        let b = sample_dual_generator(3, 4, 32003, 11).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_dual_generator(3, 4, 32003, 12).unwrap());
    }

    #[test]
    fn generic_samples_have_maximal_hilbert_function() {
        let r = build_algebra(&sample_dual_generator(3, 4, 32003, 1).unwrap()).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 3, 6, 3, 1]);
        let r = build_algebra(&sample_dual_generator(2, 2, 32003, 1).unwrap()).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 2, 1]);
    }

    #[test]
    fn normal_forms_differ_by_ideal_elements() {
        let g = sample_dual_generator(3, 4, 32003, 5).unwrap();
        let r = build_algebra(&g).unwrap();
        let f = fp();
        for d in 0..=4 {
            let piece = r.piece(d).unwrap();
            for (i, m) in monomials_of_degree(3, d).iter().enumerate() {
                let nf = r.reduce_monomial(m);
                let mut diff = piece.lift(&nf);
                diff[i] = f.sub(diff[i], 1);
                // m - NF(m) is annihilated by contraction with F.
                let form = Form {
                    num_vars: 3,
                    degree: d,
                    coeffs: diff,
                };
                assert!(crate::polyring::contract(f, &form, g.element()).is_zero());
            }
        }
    }

    #[test]
    fn multiplication_is_associative_and_commutative() {
        let r = build_algebra(&sample_dual_generator(3, 4, 32003, 2).unwrap()).unwrap();
        let f = r.field();
        let basis = |d: usize| -> Vec<Vec<FieldElement>> {
            (0..r.dim(d))
                .map(|k| {
                    let mut v = vec![0; r.dim(d)];
                    v[k] = 1;
                    v
                })
                .collect()
        };
        for a in basis(1) {
            for b in basis(1) {
                assert_eq!(r.multiply(1, &a, 1, &b), r.multiply(1, &b, 1, &a));
                for c in basis(2) {
                    let left = r.multiply(2, &r.multiply(1, &a, 1, &b), 2, &c);
                    let right = r.multiply(1, &a, 3, &r.multiply(1, &b, 2, &c));
                    assert_eq!(left, right);
                }
            }
        }
        let _ = f;
    }

    #[test]
    fn socle_and_powers() {
        let g = gen(2, 2, &[(1, vec![1, 1])]);
        let r = build_algebra(&g).unwrap();
        let soc = socle(&r);
        assert_eq!(soc.dim(2), 1);
        assert_eq!(soc.total_dim(), 1);
        assert!(power_ideal(&r, 0).equals(&r, &GradedIdeal {
            pieces: (0..=2).map(|d| full_piece(r.dim(d))).collect()
        }));
        assert!(power_ideal(&r, 3).is_zero());
        assert_eq!(power_ideal(&r, 2).total_dim(), 1);
        // ann(0) = R, ann(R) = 0.
        assert_eq!(annihilator(&r, &GradedIdeal::zero(&r)).total_dim(), 4);
        assert!(annihilator(&r, &power_ideal(&r, 0)).is_zero());
    }

    #[test]
    fn socle_of_square_zero_quotient_is_the_linear_piece() {
        // Q/n^2 with e = 3.
        let f = fp();
        let ideal = vec![Vec::new(), Vec::new()];
        let r = GradedArtinianAlgebra::from_ideal(f, 3, ideal).unwrap();
        assert_eq!(r.hilbert_function(), vec![1, 3]);
        let soc = socle(&r);
        assert_eq!(soc.dim(1), 3);
        assert_eq!(soc.total_dim(), 3);
    }

    #[test]
    fn quotients() {
        let r = build_algebra(&sample_dual_generator(3, 4, 32003, 3).unwrap()).unwrap();
        let q2 = quotient_algebra(&r, &power_ideal(&r, 2)).unwrap();
        assert_eq!(q2.hilbert_function(), vec![1, 3]);
        let qs = quotient_algebra(&r, &socle(&r)).unwrap();
        assert_eq!(qs.hilbert_function(), vec![1, 3, 6, 3]);
        let same = quotient_algebra(&r, &power_ideal(&r, 5)).unwrap();
        assert_eq!(same.hilbert_function(), r.hilbert_function());
        assert_eq!(quotient_algebra(&r, &power_ideal(&r, 0)).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn power_and_socle_ideals_are_ideals() {
        let r = build_algebra(&sample_dual_generator(3, 4, 32003, 3).unwrap()).unwrap();
        assert!(power_ideal(&r, 2).is_ideal(&r));
        assert!(socle(&r).is_ideal(&r));
        let q = annihilator(&r, &variables_ideal(&r, &[1, 2]));
        assert!(q.is_ideal(&r));
    }

    #[test]
    fn identity_change_leaves_generator_unchanged() {
        let g = sample_dual_generator(3, 4, 32003, 9).unwrap();
        let id = CoordinateChange::identity(fp(), 3);
        assert_eq!(id.apply_generator(&g), g);
    }

    #[test]
    fn coordinate_change_maps_ideal_to_ideal() {
        let g = sample_dual_generator(3, 4, 32003, 4).unwrap();
        let r = build_algebra(&g).unwrap();
        let (g2, change) = generic_coordinate_change(&g, 17);
        let r2 = build_algebra(&g2).unwrap();
        assert_eq!(r.hilbert_function(), r2.hilbert_function());
        for v in r.ideal_basis(3) {
            let h = Form {
                num_vars: 3,
                degree: 3,
                coeffs: v,
            };
            let image = change.apply_form(&h);
            assert!(crate::polyring::contract(fp(), &image, g2.element()).is_zero());
        }
    }

    #[test]
    fn document_lists_every_degree() {
        let r = build_algebra(&gen(2, 2, &[(1, vec![1, 1])])).unwrap();
        let doc = r.to_document();
        assert_eq!(doc.pieces.len(), 3);
        assert_eq!(doc.pieces[2].basis, vec![vec![1, 1]]);
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["s"], 2);
    }
}
