//! `Tor^Q(M, k)` as the homology of the Koszul complex `Λ(k^e) ⊗ M`.

use crate::linalg::{FieldElement, Matrix};

use super::module::GradedModule;
use super::resolution::BettiTable;

/// Subsets of `0..e` of size `i` in lexicographic order.
fn subsets(e: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, e: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in start..=e - left {
            cur.push(a);
            go(a + 1, e, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= e {
        go(0, e, i, &mut Vec::new(), &mut out);
    }
    out
}

/// Rank of `∂: Λ^i ⊗ M_{j-i} → Λ^{i-1} ⊗ M_{j-i+1}`.
fn koszul_rank(m: &GradedModule, i: usize, j: usize) -> usize {
    if i == 0 || j < i {
        return 0;
    }
    let e = m.num_vars();
    let src_deg = j - i;
    let (ns, nt) = (m.dim(src_deg), m.dim(src_deg + 1));
    if ns == 0 || nt == 0 {
        return 0;
    }
    let src = subsets(e, i);
    let tgt = subsets(e, i - 1);
    let f = m.field();
    let mut mat = Matrix::zeros(f, tgt.len() * nt, src.len() * ns);
    for (a, s) in src.iter().enumerate() {
        for c in 0..ns {
            let mut v: Vec<FieldElement> = vec![0; ns];
            v[c] = 1;
            for (pos, &var) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|&x| x != var).collect();
                let b = tgt.binary_search(&rest).expect("face of a subset");
                let w = m.act(var, src_deg, &v);
                let sign_neg = pos % 2 == 1;
                for (r, &x) in w.iter().enumerate() {
                    if x != 0 {
                        let y = if sign_neg { f.neg(x) } else { x };
                        let row = b * nt + r;
                        let col = a * ns + c;
                        mat.set(row, col, f.add(mat.get(row, col), y));
                    }
                }
            }
        }
    }
    mat.rank()
}

/// `β^Q_{i,j}(M) = dim H_i(K ⊗ M)_j` for `0 ≤ i ≤ e`.
pub fn koszul_betti(m: &GradedModule) -> BettiTable {
    let e = m.num_vars();
    let binom = |i: usize| subsets(e, i).len();
    let steps = (0..=e)
        .map(|i| {
            let lo = m.low_degree() + i;
            let hi = m.top_degree() + i;
            (lo..=hi)
                .filter_map(|j| {
                    if m.is_zero() {
                        return None;
                    }
                    let chains = binom(i) * m.dim(j - i);
                    let b = chains - koszul_rank(m, i, j) - koszul_rank(m, i + 1, j);
                    (b > 0).then_some((j, b))
                })
                .collect()
        })
        .collect();
    BettiTable {
        ring: "Q".to_string(),
        steps,
        complete: vec![true; e + 1],
    }
}
