//! Lifting module maps to chain maps between free complexes and reading off
//! the induced maps on `Tor(-, k)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{FieldElement, Matrix};

use super::free::{map_matrix, FreeComplex};
use super::module::ModuleMap;
use super::resolution::GradedResolution;

/// `steps[i][k]`: image of generator `k` of the source `F_i` in the target
/// `F'_i`, in the degree of that generator.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub steps: Vec<Vec<Vec<FieldElement>>>,
}

/// Lifts `f: M → M'` to `F_• → F'_•` through step `n`, where `source`
/// augments to `M` (it need only be a complex) and `target` resolves `M'`.
/// A `seed` perturbs each solution by a random kernel element.
pub fn lift_chain_map(f: &ModuleMap, source: &FreeComplex, target: &FreeComplex, n: usize, seed: Option<u64>) -> Result<ChainMap> {
    let ring = &target.ring;
    let field = ring.field();
    assert!(Arc::ptr_eq(ring, &source.ring), "lift source and target must live over the same ring");
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut steps: Vec<Vec<Vec<FieldElement>>> = Vec::new();
    for i in 0..=n.min(source.length()) {
        let src = source.free_module(i);
        if i > target.length() && src.rank() > 0 {
            return Err(Error::LiftFailure { step: i, degree: -1 });
        }
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, &g) in src.degrees.iter().enumerate() {
            by_degree.entry(g).or_default().push(k);
        }
        let mut images = vec![Vec::new(); src.rank()];
        for (&g, gens) in &by_degree {
            let rhs: Vec<Vec<FieldElement>> = if i == 0 {
                gens.iter().map(|&k| f.apply(g, &source.augmentation[k])).collect()
            } else {
                let prev = map_matrix(ring, &source.free_module(i - 1), &target.free_module(i - 1), &steps[i - 1], g);
                gens.iter().map(|&k| prev.mul_vec(&source.differentials[i][k])).collect()
            };
            let m = target.differential_matrix(i, g);
            let cols = m.cols();
            let sols = if cols == 0 {
                if rhs.iter().any(|v| v.iter().any(|&x| x != 0)) {
                    None
                } else {
                    Some(vec![Vec::new(); rhs.len()])
                }
            } else if m.rows() == 0 {
                Some(vec![vec![0; cols]; rhs.len()])
            } else {
                m.solve_many(&rhs)
            };
            let Some(mut sols) = sols else {
                return Err(Error::LiftFailure { step: i, degree: g as i32 });
            };
            if let Some(rng) = rng.as_mut() {
                let kernel = if m.rows() == 0 {
                    (0..cols)
                        .map(|c| {
                            let mut v = vec![0; cols];
                            v[c] = 1;
                            v
                        })
                        .collect()
                } else if cols == 0 {
                    Vec::new()
                } else {
                    m.kernel_basis()
                };
                for s in sols.iter_mut() {
                    for kv in &kernel {
                        let c = rng.random_range(0..field.modulus());
                        field.axpy(s, c, kv);
                    }
                }
            }
            for (&k, s) in gens.iter().zip(sols) {
                images[k] = s;
            }
        }
        steps.push(images);
    }
    Ok(ChainMap { steps })
}

/// The constant-coefficient block of a lift at step `i`: the matrix of
/// `F_i ⊗ k → F'_i ⊗ k` (rows: target generators, columns: source generators).
pub fn tor_matrix(chain: &ChainMap, source: &FreeComplex, target: &FreeComplex, i: usize) -> Matrix {
    let ring = &target.ring;
    let src = source.free_module(i);
    let tgt = target.free_module(i);
    let mut m = Matrix::zeros(ring.field(), tgt.rank(), src.rank());
    let Some(images) = chain.steps.get(i) else {
        return m;
    };
    for (k, &g) in src.degrees.iter().enumerate() {
        let layout = tgt.layout(ring, g);
        for l in tgt.generators_of_degree(g) {
            m.set(l, k, images[k][layout.offsets[l]]);
        }
    }
    m
}

/// `Tor_i(f, k)` for `f: M → M'` with minimal resolutions of both.
pub fn tor_induced_map(f: &ModuleMap, source: &GradedResolution, target: &GradedResolution, i: usize, seed: Option<u64>) -> Result<Matrix> {
    let chain = lift_chain_map(f, &source.complex, &target.complex, i, seed)?;
    Ok(tor_matrix(&chain, &source.complex, &target.complex, i))
}

/// `φ_i^M: Tor_i^Q(M, k) → Tor_i^P(M, k)` from a resolution over `Q` and
/// one over a quotient `P` of `Q`.
pub fn tor_base_change_map(res_q: &GradedResolution, res_p: &GradedResolution, i: usize, seed: Option<u64>) -> Result<Matrix> {
    let changed = res_q.complex.base_change(res_p.ring().clone());
    let id = ModuleMap::identity(res_q.module());
    let chain = lift_chain_map(&id, &changed, &res_p.complex, i, seed)?;
    Ok(tor_matrix(&chain, &changed, &res_p.complex, i))
}
