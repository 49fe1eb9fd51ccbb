//! Minimal graded free resolutions, computed degree by degree, and their
//! Betti tables.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{FieldElement, SpanBuilder};
use crate::series::TruncatedIntegerSeries;

use super::free::{multiply_by_variable, FreeComplex, FreeModule};
use super::module::GradedModule;
use super::ring::{Ring, RingKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResolutionOptions {
    /// Caps the internal degree searched for generators at every step.
    pub max_degree: Option<usize>,
}

/// A minimal free resolution computed through homological degree `steps`.
#[derive(Clone, Debug)]
pub struct GradedResolution {
    pub complex: FreeComplex,
    pub steps: usize,
    /// Largest internal degree searched for generators of each `F_i`.
    pub degree_bounds: Vec<usize>,
    /// Whether the search at step `i` covered every degree that can carry a
    /// generator.
    pub complete: Vec<bool>,
}

/// Degree that a generator of `F_i` can reach, as far as it is known a priori.
fn degree_policy(ring: &Ring, module: &GradedModule, i: usize, prev_max: usize) -> usize {
    let top = module.top_degree();
    match ring.kind() {
        // F_{i-1} vanishes above its top generator plus the socle degree.
        RingKind::Artinian(a) => prev_max + a.top_degree(),
        // A module of finite length has regularity equal to its top degree.
        RingKind::Polynomial => top + i,
        // The minimal resolution is a summand of Shamash's construction
        // `⊕_k G_{i-2k}(-k t)` built from the resolution G over Q.
        RingKind::Hypersurface(h) => top + i + (i / 2) * h.degree.saturating_sub(2),
    }
}

pub fn minimal_resolution(ring: &Arc<Ring>, module: &Arc<GradedModule>, steps: usize) -> GradedResolution {
    minimal_resolution_with(ring, module, steps, ResolutionOptions::default())
}

pub fn minimal_resolution_with(
    ring: &Arc<Ring>,
    module: &Arc<GradedModule>,
    steps: usize,
    options: ResolutionOptions,
) -> GradedResolution {
    assert_eq!(ring.num_vars(), module.num_vars(), "module and ring use different variables");
    let f = ring.field();
    let mut complex = FreeComplex {
        ring: ring.clone(),
        module: module.clone(),
        modules: Vec::new(),
        augmentation: Vec::new(),
        differentials: vec![Vec::new()],
    };
    let mut degree_bounds = Vec::new();
    let mut complete = Vec::new();

    // Step 0: a basis of M/mM lifted to M.
    let mut degrees = Vec::new();
    for d in module.low_degree()..=module.top_degree() {
        let n = module.dim(d);
        if n == 0 {
            continue;
        }
        let mut sb = SpanBuilder::new(f, n);
        for v in module.irrelevant_image(d) {
            sb.insert(&v);
        }
        for c in 0..n {
            let mut v = vec![0; n];
            v[c] = 1;
            if sb.insert(&v) {
                degrees.push(d);
                complex.augmentation.push(v);
            }
        }
    }
    complex.modules.push(FreeModule::new(degrees));
    degree_bounds.push(module.top_degree());
    complete.push(true);

    for i in 1..=steps {
        let prev = &complex.modules[i - 1];
        if prev.rank() == 0 {
            complex.modules.push(FreeModule::default());
            complex.differentials.push(Vec::new());
            degree_bounds.push(0);
            complete.push(true);
            continue;
        }
        let lo = prev.degrees[0];
        let policy = degree_policy(ring, module, i, *prev.degrees.last().unwrap());
        let (hi, is_complete) = match options.max_degree {
            Some(cap) => (policy.min(cap), cap >= policy),
            None => (policy, true),
        };
        let _ = ring.pieces_through(hi + 1);
        let kernels: Vec<Vec<Vec<FieldElement>>> = (lo..=hi)
            .into_par_iter()
            .map(|d| {
                let m = complex.differential_matrix(i - 1, d);
                if m.cols() == 0 {
                    Vec::new()
                } else if m.rows() == 0 {
                    (0..m.cols())
                        .map(|c| {
                            let mut v = vec![0; m.cols()];
                            v[c] = 1;
                            v
                        })
                        .collect()
                } else {
                    m.kernel_basis()
                }
            })
            .collect();
        let new_gens: Vec<Vec<Vec<FieldElement>>> = (lo..=hi)
            .into_par_iter()
            .map(|d| {
                let k = d - lo;
                if kernels[k].is_empty() {
                    return Vec::new();
                }
                let mut sb = SpanBuilder::new(f, prev.dim(ring, d));
                if k > 0 {
                    for v in &kernels[k - 1] {
                        for j in 0..ring.num_vars() {
                            sb.insert(&multiply_by_variable(ring, prev, d - 1, v, j));
                        }
                    }
                }
                kernels[k].iter().filter(|v| sb.insert(v)).cloned().collect()
            })
            .collect();
        let mut degrees = Vec::new();
        let mut images = Vec::new();
        for (k, gens) in new_gens.into_iter().enumerate() {
            for v in gens {
                degrees.push(lo + k);
                images.push(v);
            }
        }
        complex.modules.push(FreeModule::new(degrees));
        complex.differentials.push(images);
        degree_bounds.push(hi);
        complete.push(is_complete);
    }
    GradedResolution {
        complex,
        steps,
        degree_bounds,
        complete,
    }
}

impl GradedResolution {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.complex.ring
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.complex.module
    }

    pub fn is_complete(&self) -> bool {
        self.complete.iter().all(|&c| c)
    }

    /// Whether some `F_i` with `i ≤ steps` is zero, so the resolution is finite.
    pub fn terminated(&self) -> bool {
        self.complex.modules.iter().any(|m| m.rank() == 0)
    }

    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_degrees(
            self.ring().label(),
            self.complex.modules.iter().map(|m| m.degrees.clone()).collect(),
            self.complete.clone(),
        )
    }

    pub fn poincare_series(&self) -> TruncatedIntegerSeries {
        TruncatedIntegerSeries::from_coeffs(self.complex.modules.iter().map(|m| m.rank() as i128).collect())
    }

    /// `d ∘ d = 0` and minimality through the searched degrees.
    pub fn check_structure(&self) -> bool {
        let top = self.degree_bounds.iter().copied().max().unwrap_or(0);
        self.complex.is_minimal() && self.complex.is_complex(top)
    }
}

/// Graded Betti numbers `β_{i,j}`; `steps[i]` lists `(j, β_{i,j})` with
/// `β_{i,j} > 0` in increasing `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub ring: String,
    pub steps: Vec<Vec<(usize, usize)>>,
    pub complete: Vec<bool>,
}

impl BettiTable {
    pub fn from_degrees(ring: &str, degrees: Vec<Vec<usize>>, complete: Vec<bool>) -> Self {
        let steps = degrees
            .into_iter()
            .map(|ds| {
                let mut row: Vec<(usize, usize)> = Vec::new();
                for d in ds {
                    match row.last_mut() {
                        Some((j, b)) if *j == d => *b += 1,
                        _ => row.push((d, 1)),
                    }
                }
                row.sort();
                row
            })
            .collect();
        BettiTable {
            ring: ring.to_string(),
            steps,
            complete,
        }
    }

    pub fn length(&self) -> usize {
        self.steps.len()
    }

    pub fn beta(&self, i: usize, j: usize) -> usize {
        self.steps
            .get(i)
            .and_then(|row| row.iter().find(|(d, _)| *d == j))
            .map_or(0, |(_, b)| *b)
    }

    pub fn total(&self, i: usize) -> usize {
        self.steps.get(i).map_or(0, |row| row.iter().map(|(_, b)| b).sum())
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..self.steps.len()).map(|i| self.total(i)).collect()
    }

    /// Equal Betti numbers, treating steps missing from either table as zero.
    pub fn same_betti(&self, other: &BettiTable) -> bool {
        let n = self.steps.len().max(other.steps.len());
        (0..n).all(|i| {
            let a = self.steps.get(i).map_or(&[][..], |r| r.as_slice());
            let b = other.steps.get(i).map_or(&[][..], |r| r.as_slice());
            a == b
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (i, row) in self.steps.iter().enumerate() {
            for (j, b) in row {
                writeln!(out, "{i},{j},{b}").unwrap();
            }
        }
        out
    }
}

/// `Σ_i (-1)^i Σ_j β_{i,j} dim B_{d-j} = dim M_d` for `d ≤ upto`.
pub fn euler_characteristic_holds(table: &BettiTable, ring: &Ring, module: &GradedModule, upto: usize) -> bool {
    (0..=upto).all(|d| {
        let mut acc: i128 = 0;
        for (i, row) in table.steps.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &(j, b) in row {
                if j <= d {
                    acc += sign * (b * ring.dim(d - j)) as i128;
                }
            }
        }
        acc == module.dim(d) as i128
    })
}

/// Degree through which the Euler characteristic of a resolution computed to
/// `steps` must reproduce `HS(M)`.
pub fn audit_degree(res: &GradedResolution) -> usize {
    let module = res.module();
    if res.terminated() {
        let top_gen = res.complex.modules.iter().flat_map(|m| m.degrees.last()).copied().max().unwrap_or(0);
        top_gen.max(module.top_degree()) + 1
    } else {
        module.low_degree() + res.steps
    }
}

/// Completeness guard: generators missing below the audit degree break the
/// alternating Hilbert series sum.
pub fn resolution_audit(res: &GradedResolution) -> bool {
    euler_characteristic_holds(&res.betti_table(), res.ring(), res.module(), audit_degree(res))
}

/// Coefficients `β_0..β_N` and whether every step was searched completely.
pub fn poincare_truncated(ring: &Arc<Ring>, module: &Arc<GradedModule>, steps: usize) -> (TruncatedIntegerSeries, bool) {
    let res = minimal_resolution(ring, module, steps);
    (res.poincare_series(), res.is_complete())
}

/// Everything a `betti` report needs about one resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDocument {
    pub schema: u32,
    pub ring: String,
    pub module: String,
    pub truncation: usize,
    pub degree_bounds: Vec<usize>,
    pub complete: Vec<bool>,
    pub audit: bool,
    pub minimal: bool,
    pub complex: bool,
    pub totals: Vec<usize>,
    pub table: Vec<Vec<(usize, usize)>>,
}

impl BettiDocument {
    pub fn new(res: &GradedResolution, module_name: &str) -> Self {
        let table = res.betti_table();
        let top = res.degree_bounds.iter().copied().max().unwrap_or(0);
        BettiDocument {
            schema: 1,
            ring: res.ring().label().to_string(),
            module: module_name.to_string(),
            truncation: res.steps,
            degree_bounds: res.degree_bounds.clone(),
            complete: res.complete.clone(),
            audit: resolution_audit(res),
            minimal: res.complex.is_minimal(),
            complex: res.complex.is_complex(top),
            totals: table.totals(),
            table: table.steps,
        }
    }
}
