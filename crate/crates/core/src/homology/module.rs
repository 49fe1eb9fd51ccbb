//! Finite-dimensional graded modules over `Q`, given by their graded pieces
//! and the action of the variables, and degree-preserving maps between them.

use std::sync::Arc;

use crate::apolarity::{power_ideal, GradedArtinianAlgebra, GradedIdeal};
use crate::linalg::{FieldElement, Matrix, PrimeField, SubquotientCoords};
use crate::polyring::Monomial;

/// Realisation of a module as a subquotient `L/N` of an algebra.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub algebra: Arc<GradedArtinianAlgebra>,
    /// Indexed by degree `0..=top` of the algebra.
    pub coords: Vec<SubquotientCoords>,
}

#[derive(Clone, Debug)]
pub struct GradedModule {
    field: PrimeField,
    e: usize,
    low: usize,
    dims: Vec<usize>,
    /// `actions[d - low][j]`: multiplication by `x_j` from `M_d` to `M_{d+1}`.
    actions: Vec<Vec<Matrix>>,
    embedding: Option<Embedding>,
}

impl GradedModule {
    /// A module with pieces `dims[k]` in degree `low + k`.
    pub fn new(field: PrimeField, e: usize, low: usize, dims: Vec<usize>, actions: Vec<Vec<Matrix>>) -> Self {
        assert_eq!(dims.len(), actions.len());
        for (k, acts) in actions.iter().enumerate() {
            assert_eq!(acts.len(), e);
            let next = dims.get(k + 1).copied().unwrap_or(0);
            for a in acts {
                assert_eq!((a.rows(), a.cols()), (next, dims[k]), "action matrix shape");
            }
        }
        let mut m = GradedModule {
            field,
            e,
            low,
            dims,
            actions,
            embedding: None,
        };
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.dims.last() == Some(&0) {
            self.dims.pop();
            self.actions.pop();
        }
        let lead = self.dims.iter().take_while(|&&d| d == 0).count();
        if lead == self.dims.len() {
            self.dims.clear();
            self.actions.clear();
            self.low = 0;
            return;
        }
        self.dims.drain(..lead);
        self.actions.drain(..lead);
        self.low += lead;
    }

    /// The residue field `k = Q/n` in degree 0.
    pub fn residue_field(field: PrimeField, e: usize) -> Self {
        let acts = vec![(0..e).map(|_| Matrix::zeros(field, 0, 1)).collect()];
        GradedModule::new(field, e, 0, vec![1], acts)
    }

    /// `L/N` for homogeneous ideals `N ⊆ L` of `R`.
    pub fn subquotient(r: &Arc<GradedArtinianAlgebra>, outer: &GradedIdeal, inner: &GradedIdeal) -> Self {
        let field = r.field();
        let e = r.num_vars();
        let top = r.top_degree();
        let coords: Vec<SubquotientCoords> = (0..=top)
            .map(|d| SubquotientCoords::new(field, r.dim(d), &outer.pieces[d], &inner.pieces[d]))
            .collect();
        let dims: Vec<usize> = coords.iter().map(|c| c.dim()).collect();
        let actions = (0..=top)
            .map(|d| {
                (0..e)
                    .map(|j| {
                        let x = Monomial::variable(e, j);
                        let rows = if d < top { coords[d + 1].dim() } else { 0 };
                        let cols: Vec<Vec<FieldElement>> = coords[d]
                            .representatives
                            .iter()
                            .map(|v| {
                                if d < top {
                                    coords[d + 1].coords(&r.mul_monomial(&x, d, v))
                                } else {
                                    Vec::new()
                                }
                            })
                            .collect();
                        Matrix::from_columns(field, rows, &cols)
                    })
                    .collect()
            })
            .collect();
        let mut m = GradedModule {
            field,
            e,
            low: 0,
            dims,
            actions,
            embedding: None,
        };
        let low_before = m.low;
        m.trim();
        let skip = m.low - low_before;
        let keep = m.dims.len();
        m.embedding = Some(Embedding {
            algebra: r.clone(),
            coords: coords.into_iter().skip(skip).take(keep).collect(),
        });
        m
    }

    /// `R` as a module over itself or over any ring mapping onto it.
    pub fn from_algebra(r: &Arc<GradedArtinianAlgebra>) -> Self {
        Self::subquotient(r, &power_ideal(r, 0), &GradedIdeal::zero(r))
    }

    pub fn ideal(r: &Arc<GradedArtinianAlgebra>, j: &GradedIdeal) -> Self {
        Self::subquotient(r, j, &GradedIdeal::zero(r))
    }

    /// `R/J`.
    pub fn quotient(r: &Arc<GradedArtinianAlgebra>, j: &GradedIdeal) -> Self {
        Self::subquotient(r, &power_ideal(r, 0), j)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Lowest degree with a nonzero piece (0 for the zero module).
    pub fn low_degree(&self) -> usize {
        self.low
    }

    /// Highest degree with a nonzero piece (0 for the zero module).
    pub fn top_degree(&self) -> usize {
        (self.low + self.dims.len()).saturating_sub(1)
    }

    pub fn dim(&self, d: usize) -> usize {
        if d < self.low {
            return 0;
        }
        self.dims.get(d - self.low).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `dim M_d` for `d = 0..=top`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        (0..=self.top_degree()).map(|d| self.dim(d)).collect()
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    /// `x_j · v` for `v ∈ M_d`.
    pub fn act(&self, j: usize, d: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        if self.dim(d) == 0 || self.dim(d + 1) == 0 {
            return vec![0; self.dim(d + 1)];
        }
        self.actions[d - self.low][j].mul_vec(v)
    }

    /// `m · v` for a monomial `m` and `v ∈ M_d`.
    pub fn act_monomial(&self, m: &Monomial, d: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut cur = v.to_vec();
        let mut deg = d;
        for (j, &a) in m.exponents.iter().enumerate() {
            for _ in 0..a {
                cur = self.act(j, deg, &cur);
                deg += 1;
            }
        }
        cur
    }

    /// Subspace `Σ_j x_j M_{d-1}` of `M_d`, as a spanning list.
    pub fn irrelevant_image(&self, d: usize) -> Vec<Vec<FieldElement>> {
        if d == 0 || self.dim(d - 1) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for j in 0..self.e {
            let a = &self.actions[d - 1 - self.low][j];
            for c in 0..a.cols() {
                out.push(a.column(c));
            }
        }
        out
    }

    /// Socle dimensions `dim {v ∈ M_d : x_j v = 0 for all j}`.
    pub fn socle_dims(&self) -> Vec<usize> {
        (0..=self.top_degree())
            .map(|d| {
                let n = self.dim(d);
                if n == 0 || self.dim(d + 1) == 0 {
                    return n;
                }
                let mut rows: Vec<Vec<i64>> = Vec::new();
                for a in &self.actions[d - self.low] {
                    for i in 0..a.rows() {
                        rows.push(a.row(i).iter().map(|&x| x as i64).collect());
                    }
                }
                n - Matrix::from_rows(self.field, &rows).rank()
            })
            .collect()
    }
}

/// A degree-preserving module homomorphism, one matrix per source degree.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Arc<GradedModule>,
    pub target: Arc<GradedModule>,
    matrices: Vec<Matrix>,
}

impl ModuleMap {
    /// `matrices[k]` acts on degree `source.low_degree() + k`.
    pub fn new(source: Arc<GradedModule>, target: Arc<GradedModule>, matrices: Vec<Matrix>) -> Self {
        ModuleMap {
            source,
            target,
            matrices,
        }
    }

    pub fn identity(m: &Arc<GradedModule>) -> Self {
        let matrices = (m.low..=m.top_degree()).map(|d| Matrix::identity(m.field, m.dim(d))).collect();
        ModuleMap::new(m.clone(), m.clone(), matrices)
    }

    pub fn zero(source: &Arc<GradedModule>, target: &Arc<GradedModule>) -> Self {
        let matrices = (source.low..=source.top_degree())
            .map(|d| Matrix::zeros(source.field, target.dim(d), source.dim(d)))
            .collect();
        ModuleMap::new(source.clone(), target.clone(), matrices)
    }

    /// The map `L/N → L'/N'` induced by the identity of the ambient algebra,
    /// for `L ⊆ L'` and `N ⊆ N'`. `None` if either module lacks an embedding
    /// or `L ⊄ L'`.
    pub fn induced(source: &Arc<GradedModule>, target: &Arc<GradedModule>) -> Option<Self> {
        let se = source.embedding()?;
        let te = target.embedding()?;
        let mut matrices = Vec::new();
        for d in source.low..=source.top_degree() {
            let sc = &se.coords[d - source.low];
            let cols: Vec<Vec<FieldElement>> = if target.dim(d) == 0 {
                vec![Vec::new(); sc.dim()]
            } else {
                let tc = &te.coords[d - target.low];
                let mut cols = Vec::new();
                for v in &sc.representatives {
                    if !tc.in_outer(v) {
                        return None;
                    }
                    cols.push(tc.coords(v));
                }
                cols
            };
            matrices.push(Matrix::from_columns(source.field, target.dim(d), &cols));
        }
        Some(ModuleMap::new(source.clone(), target.clone(), matrices))
    }

    /// Image of `v ∈ source_d` in `target_d`.
    pub fn apply(&self, d: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        if self.source.dim(d) == 0 || self.target.dim(d) == 0 {
            return vec![0; self.target.dim(d)];
        }
        self.matrices[d - self.source.low].mul_vec(v)
    }

    pub fn matrix(&self, d: usize) -> Option<&Matrix> {
        d.checked_sub(self.source.low).and_then(|k| self.matrices.get(k))
    }
}
