//! Graded free modules over a [`Ring`], maps between them given by the
//! images of generators, and complexes of free modules augmented to a module.

use std::sync::Arc;

use crate::linalg::{FieldElement, Matrix};
use crate::polyring::Monomial;

use super::module::GradedModule;
use super::ring::{Ring, RingPiece};

/// `⊕_k B(-g_k)` with generator degrees in nondecreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeModule {
    pub degrees: Vec<usize>,
}

/// Coordinates of the degree-`d` piece: generator `k` owns the block
/// `offsets[k]..offsets[k] + dim B_{d - g_k}`.
#[derive(Clone, Debug)]
pub struct Layout {
    pub offsets: Vec<usize>,
    pub total: usize,
}

impl FreeModule {
    pub fn new(degrees: Vec<usize>) -> Self {
        debug_assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn layout(&self, ring: &Ring, d: usize) -> Layout {
        let mut offsets = Vec::new();
        let mut total = 0;
        for &g in self.degrees.iter().take_while(|&&g| g <= d) {
            offsets.push(total);
            total += ring.dim(d - g);
        }
        Layout { offsets, total }
    }

    pub fn dim(&self, ring: &Ring, d: usize) -> usize {
        self.layout(ring, d).total
    }

    /// Generators of exactly degree `d`.
    pub fn generators_of_degree(&self, d: usize) -> std::ops::Range<usize> {
        let start = self.degrees.partition_point(|&g| g < d);
        let end = self.degrees.partition_point(|&g| g <= d);
        start..end
    }
}

/// Sparse form of a generator image: `(target generator, ring basis monomial, coefficient)`.
type SparseImage = Vec<(usize, Monomial, FieldElement)>;

fn sparse_image(ring: &Ring, pieces: &[Arc<RingPiece>], target: &FreeModule, g: usize, image: &[FieldElement]) -> SparseImage {
    let layout = target.layout(ring, g);
    let mut out = Vec::new();
    for (l, &off) in layout.offsets.iter().enumerate() {
        let c = g - target.degrees[l];
        for idx in 0..pieces[c].dim() {
            let a = image[off + idx];
            if a != 0 {
                out.push((l, pieces[c].basis_monomial(idx).clone(), a));
            }
        }
    }
    out
}

/// Matrix in degree `d` of the map `source → target` sending generator `k`
/// to `images[k]` (a vector of `target` in degree `g_k`).
pub fn map_matrix(ring: &Ring, source: &FreeModule, target: &FreeModule, images: &[Vec<FieldElement>], d: usize) -> Matrix {
    let f = ring.field();
    let pieces = ring.pieces_through(d);
    let tl = target.layout(ring, d);
    let sl = source.layout(ring, d);
    let mut m = Matrix::zeros(f, tl.total, sl.total);
    for (k, &soff) in sl.offsets.iter().enumerate() {
        let g = source.degrees[k];
        let c = d - g;
        let sparse = sparse_image(ring, &pieces, target, g, &images[k]);
        for bi in 0..pieces[c].dim() {
            let b = pieces[c].basis_monomial(bi);
            let col = soff + bi;
            for (l, mono, a) in &sparse {
                let prod = mono.mul(b);
                let deg = prod.degree();
                let piece = &pieces[deg];
                if piece.dim() == 0 {
                    continue;
                }
                let toff = tl.offsets[*l];
                for &(pos, y) in piece.normal_form(prod.rank()) {
                    let row = toff + pos;
                    let cur = m.get(row, col);
                    m.set(row, col, f.add(cur, f.mul(*a, y)));
                }
            }
        }
    }
    m
}

/// Multiplication by `x_j` from degree `d` to `d + 1`.
pub fn multiply_by_variable(ring: &Ring, module: &FreeModule, d: usize, v: &[FieldElement], j: usize) -> Vec<FieldElement> {
    let f = ring.field();
    let pieces = ring.pieces_through(d + 1);
    let src = module.layout(ring, d);
    let dst = module.layout(ring, d + 1);
    let x = Monomial::variable(ring.num_vars(), j);
    let mut out = vec![0; dst.total];
    for (l, &off) in src.offsets.iter().enumerate() {
        let c = d - module.degrees[l];
        for idx in 0..pieces[c].dim() {
            let a = v[off + idx];
            if a == 0 {
                continue;
            }
            for &(pos, y) in ring.times_monomial(&pieces, c, idx, &x) {
                let t = dst.offsets[l] + pos;
                out[t] = f.add(out[t], f.mul(a, y));
            }
        }
    }
    out
}

/// Matrix in degree `d` of the augmentation `F_0 → M` sending generator `k`
/// to `images[k] ∈ M_{g_k}`.
pub fn augmentation_matrix(ring: &Ring, free: &FreeModule, module: &GradedModule, images: &[Vec<FieldElement>], d: usize) -> Matrix {
    let pieces = ring.pieces_through(d);
    let layout = free.layout(ring, d);
    let mut cols = vec![Vec::new(); layout.total];
    for (k, &off) in layout.offsets.iter().enumerate() {
        let g = free.degrees[k];
        let c = d - g;
        for bi in 0..pieces[c].dim() {
            cols[off + bi] = module.act_monomial(pieces[c].basis_monomial(bi), g, &images[k]);
        }
    }
    Matrix::from_columns(ring.field(), module.dim(d), &cols)
}

/// `F_n → ... → F_0 → M`; `differentials[i]` holds the images of the
/// generators of `F_i` in `F_{i-1}` (entry 0 is empty).
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub ring: Arc<Ring>,
    pub module: Arc<GradedModule>,
    pub modules: Vec<FreeModule>,
    pub augmentation: Vec<Vec<FieldElement>>,
    pub differentials: Vec<Vec<Vec<FieldElement>>>,
}

impl FreeComplex {
    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    pub fn free_module(&self, i: usize) -> FreeModule {
        self.modules.get(i).cloned().unwrap_or_default()
    }

    /// Matrix of `d_i: F_i → F_{i-1}` in degree `d`; `i = 0` gives the augmentation.
    pub fn differential_matrix(&self, i: usize, d: usize) -> Matrix {
        if i == 0 {
            augmentation_matrix(&self.ring, &self.modules[0], &self.module, &self.augmentation, d)
        } else {
            map_matrix(&self.ring, &self.modules[i], &self.modules[i - 1], &self.differentials[i], d)
        }
    }

    /// The same generators and differentials read in a quotient ring of
    /// `self.ring` (both presented as quotients of `Q`).
    pub fn base_change(&self, ring: Arc<Ring>) -> FreeComplex {
        assert_eq!(ring.num_vars(), self.ring.num_vars(), "base change needs a common polynomial ring");
        let f = ring.field();
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .map(|(i, imgs)| {
                if i == 0 {
                    return Vec::new();
                }
                let target = &self.modules[i - 1];
                imgs.iter()
                    .zip(&self.modules[i].degrees)
                    .map(|(v, &g)| {
                        let old = target.layout(&self.ring, g);
                        let new = target.layout(&ring, g);
                        let mut out = vec![0; new.total];
                        for (l, (&oo, &no)) in old.offsets.iter().zip(&new.offsets).enumerate() {
                            let c = g - target.degrees[l];
                            let op = self.ring.piece(c);
                            let np = ring.piece(c);
                            let ambient = op.quotient.lift(&v[oo..oo + op.dim()]);
                            let reduced = np.quotient.reduce(f, &ambient);
                            out[no..no + np.dim()].copy_from_slice(&reduced);
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        FreeComplex {
            ring,
            module: self.module.clone(),
            modules: self.modules.clone(),
            augmentation: self.augmentation.clone(),
            differentials,
        }
    }

    /// `d_{i-1} ∘ d_i = 0` (with `d_{-1}` the augmentation) in every degree
    /// `≤ max_degree`.
    pub fn is_complex(&self, max_degree: usize) -> bool {
        (1..self.modules.len()).all(|i| {
            (0..=max_degree).all(|d| {
                let a = self.differential_matrix(i - 1, d);
                let b = self.differential_matrix(i, d);
                a.rows() == 0 || b.cols() == 0 || a.mul(&b).is_zero()
            })
        })
    }

    /// No differential entry is a unit: every generator image has zero
    /// component along the degree-0 part of each target block.
    pub fn is_minimal(&self) -> bool {
        (1..self.modules.len()).all(|i| {
            let target = &self.modules[i - 1];
            self.differentials[i].iter().zip(&self.modules[i].degrees).all(|(v, &g)| {
                let layout = target.layout(&self.ring, g);
                target
                    .generators_of_degree(g)
                    .all(|l| self.ring.dim(0) == 0 || v[layout.offsets[l]] == 0)
            })
        })
    }
}
