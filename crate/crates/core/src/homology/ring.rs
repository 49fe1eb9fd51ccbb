//! Graded rings `Q`, `Q/(h)` and finite-dimensional quotients of `Q`, all
//! presented degree by degree as quotients of `Q_d`.

use std::sync::{Arc, RwLock};

use crate::apolarity::GradedArtinianAlgebra;
use crate::linalg::{FieldElement, PrimeField, QuotientPiece};
use crate::polyring::{monomial_rank, monomials_of_degree, piece_dim, Form, Monomial};

#[derive(Clone, Debug)]
pub enum RingKind {
    Polynomial,
    /// `Q/(h)` for a nonzero form `h`.
    Hypersurface(Form),
    Artinian(Arc<GradedArtinianAlgebra>),
}

/// Degree-`d` piece of a ring: all monomials of `Q_d` and the normal forms
/// onto the retained basis.
#[derive(Debug)]
pub struct RingPiece {
    pub monomials: Vec<Monomial>,
    pub quotient: QuotientPiece,
}

impl RingPiece {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn basis_monomial(&self, k: usize) -> &Monomial {
        &self.monomials[self.quotient.basis[k]]
    }

    /// Normal form of the monomial with the given rank in `Q_d`.
    pub fn normal_form(&self, rank: usize) -> &[(usize, FieldElement)] {
        &self.quotient.normal_form[rank]
    }
}

#[derive(Debug)]
pub struct Ring {
    field: PrimeField,
    e: usize,
    kind: RingKind,
    label: String,
    pieces: RwLock<Vec<Arc<RingPiece>>>,
}

impl Ring {
    pub fn polynomial(field: PrimeField, e: usize) -> Arc<Ring> {
        Self::with_kind(field, e, RingKind::Polynomial, "Q")
    }

    pub fn hypersurface(field: PrimeField, h: Form) -> Arc<Ring> {
        assert!(!h.is_zero(), "hypersurface equation must be nonzero");
        assert!(h.degree >= 1, "hypersurface equation must lie in the irrelevant ideal");
        let e = h.num_vars;
        Self::with_kind(field, e, RingKind::Hypersurface(h), "P")
    }

    pub fn artinian(algebra: Arc<GradedArtinianAlgebra>) -> Arc<Ring> {
        let field = algebra.field();
        let e = algebra.num_vars();
        Self::with_kind(field, e, RingKind::Artinian(algebra), "R")
    }

    pub fn with_kind(field: PrimeField, e: usize, kind: RingKind, label: &str) -> Arc<Ring> {
        Arc::new(Ring {
            field,
            e,
            kind,
            label: label.to_string(),
            pieces: RwLock::new(Vec::new()),
        })
    }

    /// Same ring under another name.
    pub fn relabel(&self, label: &str) -> Arc<Ring> {
        Self::with_kind(self.field, self.e, self.kind.clone(), label)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.e
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Top nonzero degree for Artinian rings.
    pub fn top_degree(&self) -> Option<usize> {
        match &self.kind {
            RingKind::Artinian(a) => Some(a.top_degree()),
            _ => None,
        }
    }

    fn build_piece(&self, d: usize) -> RingPiece {
        let n = piece_dim(self.e, d);
        let monomials = monomials_of_degree(self.e, d);
        let quotient = match &self.kind {
            RingKind::Polynomial => QuotientPiece::identity(n),
            RingKind::Hypersurface(h) => {
                if d < h.degree {
                    QuotientPiece::identity(n)
                } else {
                    let hm = monomials_of_degree(self.e, h.degree);
                    let rows: Vec<Vec<FieldElement>> = monomials_of_degree(self.e, d - h.degree)
                        .iter()
                        .map(|u| {
                            let mut row = vec![0; n];
                            for (w, &c) in hm.iter().zip(&h.coeffs) {
                                if c != 0 {
                                    row[monomial_rank(&u.mul(w).exponents)] = c;
                                }
                            }
                            row
                        })
                        .collect();
                    QuotientPiece::new(self.field, n, &rows)
                }
            }
            RingKind::Artinian(a) => match a.piece(d) {
                Some(p) => p.clone(),
                None => QuotientPiece::zero(n),
            },
        };
        RingPiece { monomials, quotient }
    }

    pub fn piece(&self, d: usize) -> Arc<RingPiece> {
        if let Some(p) = self.pieces.read().unwrap().get(d) {
            return p.clone();
        }
        self.pieces_through(d)[d].clone()
    }

    /// Pieces of degrees `0..=d`, building any that are missing.
    pub fn pieces_through(&self, d: usize) -> Vec<Arc<RingPiece>> {
        {
            let cache = self.pieces.read().unwrap();
            if cache.len() > d {
                return cache[..=d].to_vec();
            }
        }
        let mut cache = self.pieces.write().unwrap();
        while cache.len() <= d {
            let next = cache.len();
            cache.push(Arc::new(self.build_piece(next)));
        }
        cache[..=d].to_vec()
    }

    pub fn dim(&self, d: usize) -> usize {
        match &self.kind {
            RingKind::Polynomial => piece_dim(self.e, d),
            RingKind::Artinian(a) => a.dim(d),
            RingKind::Hypersurface(h) => {
                piece_dim(self.e, d) - if d >= h.degree { piece_dim(self.e, d - h.degree) } else { 0 }
            }
        }
    }

    /// Hilbert function through degree `d`.
    pub fn hilbert_function(&self, d: usize) -> Vec<usize> {
        (0..=d).map(|k| self.dim(k)).collect()
    }

    /// Normal form of the product of a degree-`a` ring basis element and a
    /// monomial, as a sparse vector in degree `a + deg m`.
    pub fn times_monomial<'a>(&self, pieces: &'a [Arc<RingPiece>], a: usize, k: usize, m: &Monomial) -> &'a [(usize, FieldElement)] {
        let b = pieces[a].basis_monomial(k);
        let target = &pieces[a + m.degree()];
        if target.dim() == 0 {
            return &[];
        }
        target.normal_form(b.mul(m).rank())
    }
}
