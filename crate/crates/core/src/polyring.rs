//! Monomials and homogeneous pieces of `Q = k[x_1..x_e]`, the dual space of
//! inverse polynomials, and the contraction action of `Q` on it.
//!
//! Monomials of a fixed degree are indexed in graded-lex order with `x_1`
//! largest: for `e = 2, d = 3` the order is `x^3, x^2y, xy^2, y^3`. All
//! coefficient vectors in the crate are indexed this way.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{FieldElement, PrimeField};

/// `binom(n, k)` as `usize`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Number of monomials of degree `d` in `e` variables.
pub fn piece_dim(e: usize, d: usize) -> usize {
    if e == 0 {
        return usize::from(d == 0);
    }
    binomial(e - 1 + d, e - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u16>,
}

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial { exponents }
    }

    pub fn one(e: usize) -> Self {
        Monomial { exponents: vec![0; e] }
    }

    pub fn variable(e: usize, j: usize) -> Self {
        let mut m = Self::one(e);
        m.exponents[j] = 1;
        m
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&a| a as usize).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exponents: other.exponents.iter().zip(&self.exponents).map(|(b, a)| b - a).collect(),
        })
    }

    /// Position of this monomial in the graded-lex list of its degree.
    pub fn rank(&self) -> usize {
        monomial_rank(&self.exponents)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Graded-lex rank of an exponent vector among monomials of the same degree.
pub fn monomial_rank(exps: &[u16]) -> usize {
    let e = exps.len();
    let mut rem: usize = exps.iter().map(|&a| a as usize).sum();
    let mut rank = 0;
    for (k, &a) in exps.iter().enumerate().take(e.saturating_sub(1)) {
        let a = a as usize;
        let m = e - k - 1;
        // Monomials with a larger exponent in position k come first.
        if rem > a {
            rank += binomial(rem - a - 1 + m, m);
        }
        rem -= a;
    }
    rank
}

/// All monomials of degree `d` in `e` variables, in canonical order.
pub fn monomials_of_degree(e: usize, d: usize) -> Vec<Monomial> {
    assert!(e >= 1, "need at least one variable");
    let mut out = Vec::with_capacity(piece_dim(e, d));
    let mut cur = vec![0u16; e];
    fill(&mut out, &mut cur, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u16>, pos: usize, rem: usize) {
    let e = cur.len();
    if pos == e - 1 {
        cur[pos] = rem as u16;
        out.push(Monomial::new(cur.clone()));
        return;
    }
    for a in (0..=rem).rev() {
        cur[pos] = a as u16;
        fill(out, cur, pos + 1, rem - a);
    }
    cur[pos] = 0;
}

/// Cached monomial lists for one variable count.
#[derive(Clone, Debug)]
pub struct MonomialTable {
    e: usize,
    by_degree: Vec<Vec<Monomial>>,
}

impl MonomialTable {
    pub fn new(e: usize, max_degree: usize) -> Self {
        MonomialTable {
            e,
            by_degree: (0..=max_degree).map(|d| monomials_of_degree(e, d)).collect(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.e
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn degree(&self, d: usize) -> &[Monomial] {
        &self.by_degree[d]
    }

    pub fn get(&self, d: usize, i: usize) -> &Monomial {
        &self.by_degree[d][i]
    }

    /// Index in degree `a + b` of the product of two indexed monomials.
    pub fn product_index(&self, a: usize, i: usize, b: usize, j: usize) -> usize {
        let x = &self.by_degree[a][i].exponents;
        let y = &self.by_degree[b][j].exponents;
        let mut buf = [0u16; 16];
        let e = self.e;
        if e <= 16 {
            for k in 0..e {
                buf[k] = x[k] + y[k];
            }
            monomial_rank(&buf[..e])
        } else {
            let v: Vec<u16> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            monomial_rank(&v)
        }
    }
}

/// A homogeneous form of `Q`: coefficients over the degree's monomial list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub num_vars: usize,
    pub degree: usize,
    pub coeffs: Vec<FieldElement>,
}

impl Form {
    pub fn zero(e: usize, d: usize) -> Self {
        Form {
            num_vars: e,
            degree: d,
            coeffs: vec![0; piece_dim(e, d)],
        }
    }

    pub fn monomial(field: PrimeField, m: &Monomial, c: i64) -> Self {
        let mut f = Self::zero(m.num_vars(), m.degree());
        f.coeffs[m.rank()] = field.reduce(c);
        f
    }

    /// Linear form `Σ c_j x_j`.
    pub fn linear(coeffs: Vec<FieldElement>) -> Self {
        Form {
            num_vars: coeffs.len(),
            degree: 1,
            coeffs,
        }
    }

    pub fn from_terms(field: PrimeField, e: usize, d: usize, terms: &[(i64, Vec<u16>)]) -> Self {
        let mut f = Self::zero(e, d);
        for (c, exps) in terms {
            assert_eq!(exps.len(), e);
            let m = Monomial::new(exps.clone());
            assert_eq!(m.degree(), d, "inhomogeneous term");
            let r = m.rank();
            f.coeffs[r] = field.add(f.coeffs[r], field.reduce(*c));
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.coeffs[m.rank()]
    }

    pub fn add(&self, field: PrimeField, other: &Form) -> Form {
        assert_eq!(self.degree, other.degree);
        Form {
            num_vars: self.num_vars,
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| field.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, field: PrimeField, c: FieldElement) -> Form {
        Form {
            num_vars: self.num_vars,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, field: PrimeField, other: &Form) -> Form {
        let e = self.num_vars;
        let ma = monomials_of_degree(e, self.degree);
        let mb = monomials_of_degree(e, other.degree);
        let mut out = Form::zero(e, self.degree + other.degree);
        for (a, &ca) in ma.iter().zip(&self.coeffs) {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in mb.iter().zip(&other.coeffs) {
                if cb == 0 {
                    continue;
                }
                let r = a.mul(b).rank();
                out.coeffs[r] = field.add(out.coeffs[r], field.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, field: PrimeField, n: usize) -> Form {
        let mut acc = Form::monomial(field, &Monomial::one(self.num_vars), 1);
        for _ in 0..n {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// Image under the linear substitution `x_j ↦ images[j]` (linear forms).
    pub fn substitute(&self, field: PrimeField, images: &[Form]) -> Form {
        let e = self.num_vars;
        let mut out = Form::zero(e, self.degree);
        for (m, &c) in monomials_of_degree(e, self.degree).iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let mut term = Form::monomial(field, &Monomial::one(e), c as i64);
            for (j, &a) in m.exponents.iter().enumerate() {
                term = term.mul(field, &images[j].pow(field, a as usize));
            }
            out = out.add(field, &term);
        }
        out
    }
}

/// An element of the dual space `D_b`, written in the dual monomial basis
/// `X^v` (pairing `<x^u, X^v> = δ_{uv}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualElement {
    pub num_vars: usize,
    pub degree: usize,
    pub coeffs: Vec<FieldElement>,
}

impl DualElement {
    pub fn zero(e: usize, b: usize) -> Self {
        DualElement {
            num_vars: e,
            degree: b,
            coeffs: vec![0; piece_dim(e, b)],
        }
    }

    pub fn from_terms(field: PrimeField, e: usize, b: usize, terms: &[(i64, Vec<u16>)]) -> Self {
        let f = Form::from_terms(field, e, b, terms);
        DualElement {
            num_vars: e,
            degree: b,
            coeffs: f.coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.coeffs[m.rank()]
    }

    /// Parses the text format: one term per line,
    /// `<coefficient> <exp_1> ... <exp_e>`; blank lines and `#` comments skipped.
    pub fn parse(field: PrimeField, text: &str) -> Result<Self> {
        let mut terms: Vec<(i64, Vec<u16>)> = Vec::new();
        let mut shape: Option<(usize, usize)> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let mut it = line.split_whitespace();
            let c: i64 = it
                .next()
                .unwrap()
                .parse()
                .map_err(|e| err(format!("bad coefficient: {e}")))?;
            let exps: Vec<u16> = it
                .map(|t| t.parse::<u16>().map_err(|e| err(format!("bad exponent {t:?}: {e}"))))
                .collect::<Result<_>>()?;
            if exps.is_empty() {
                return Err(err("term has no exponents".into()));
            }
            let deg: usize = exps.iter().map(|&a| a as usize).sum();
            match shape {
                None => shape = Some((exps.len(), deg)),
                Some((e, d)) => {
                    if e != exps.len() {
                        return Err(err(format!("expected {e} exponents, found {}", exps.len())));
                    }
                    if d != deg {
                        return Err(err(format!("inhomogeneous term: degree {deg}, expected {d}")));
                    }
                }
            }
            terms.push((c, exps));
        }
        let (e, d) = shape.ok_or(Error::Parse {
            line: 0,
            message: "no terms".into(),
        })?;
        Ok(Self::from_terms(field, e, d, &terms))
    }

    /// Text format, terms in canonical order, zero terms omitted.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (m, &c) in monomials_of_degree(self.num_vars, self.degree).iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            s.push_str(&c.to_string());
            for a in &m.exponents {
                s.push(' ');
                s.push_str(&a.to_string());
            }
            s.push('\n');
        }
        s
    }
}

/// Contraction `f ∘ F`: on monomials `x^u ∘ X^v = X^{v-u}` when `u ≤ v`, else 0.
pub fn contract(field: PrimeField, f: &Form, dual: &DualElement) -> DualElement {
    let e = f.num_vars;
    assert_eq!(e, dual.num_vars);
    if f.degree > dual.degree {
        return DualElement::zero(e, 0);
    }
    let out_deg = dual.degree - f.degree;
    let mut out = DualElement::zero(e, out_deg);
    let mf = monomials_of_degree(e, f.degree);
    let md = monomials_of_degree(e, dual.degree);
    for (u, &cu) in mf.iter().zip(&f.coeffs) {
        if cu == 0 {
            continue;
        }
        for (v, &cv) in md.iter().zip(&dual.coeffs) {
            if cv == 0 {
                continue;
            }
            if let Some(w) = u.quotient_of(v) {
                let r = w.rank();
                out.coeffs[r] = field.add(out.coeffs[r], field.mul(cu, cv));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn monomial_lists() {
        let m = monomials_of_degree(2, 3);
        let exps: Vec<Vec<u16>> = m.iter().map(|m| m.exponents.clone()).collect();
        assert_eq!(exps, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 5), vec![Monomial::new(vec![5])]);
    }

    #[test]
    fn ranks_match_positions() {
        for e in 1..5 {
            for d in 0..7 {
                let ms = monomials_of_degree(e, d);
                assert_eq!(ms.len(), piece_dim(e, d));
                for (i, m) in ms.iter().enumerate() {
                    assert_eq!(m.rank(), i);
                }
            }
        }
    }

    #[test]
    fn basic_contractions() {
        let f = fp();
        let x = Form::from_terms(f, 2, 1, &[(1, vec![1, 0])]);
        let xx = DualElement::from_terms(f, 2, 2, &[(1, vec![2, 0])]);
        let c = contract(f, &x, &xx);
        assert_eq!(c, DualElement::from_terms(f, 2, 1, &[(1, vec![1, 0])]));
        let y = DualElement::from_terms(f, 2, 1, &[(1, vec![0, 1])]);
        assert!(contract(f, &x, &y).is_zero());
        let g = Form::from_terms(f, 2, 2, &[(1, vec![2, 0]), (-1, vec![0, 2])]);
        let big = DualElement::from_terms(f, 2, 2, &[(1, vec![2, 0]), (1, vec![0, 2])]);
        assert!(contract(f, &g, &big).is_zero());
        // Degree too large.
        assert!(contract(f, &g, &y).is_zero());
    }

    #[test]
    fn pairing_matrix_is_identity() {
        let f = fp();
        for (e, d) in [(2, 3), (3, 2), (3, 4)] {
            let ms = monomials_of_degree(e, d);
            for (i, u) in ms.iter().enumerate() {
                let fu = Form::monomial(f, u, 1);
                for (j, v) in ms.iter().enumerate() {
                    let dv = DualElement {
                        num_vars: e,
                        degree: d,
                        coeffs: {
                            let mut c = vec![0; ms.len()];
                            c[j] = 1;
                            c
                        },
                    };
                    let r = contract(f, &fu, &dv);
                    assert_eq!(r.coeffs, vec![u32::from(i == j)]);
                    let _ = v;
                }
            }
        }
    }

    #[test]
    fn text_format_roundtrip() {
        let f = fp();
        let text = "# a generator\n1 1 1\n\n-1 2 0 # trailing comment\n";
        let d = DualElement::parse(f, text).unwrap();
        assert_eq!(d.degree, 2);
        assert_eq!(d.coeffs, vec![32002, 1, 0]);
        assert_eq!(DualElement::parse(f, &d.to_text()).unwrap(), d);
        assert!(matches!(DualElement::parse(f, "1 1 1\n1 3 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(DualElement::parse(f, "# nothing\n").is_err());
    }

    fn arb_form(e: usize, d: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..32003, piece_dim(e, d))
    }

    proptest! {
        #[test]
        fn contraction_is_associative(
            a in arb_form(3, 1), b in arb_form(3, 2), big in arb_form(3, 5)
        ) {
            let f = fp();
            let fa = Form { num_vars: 3, degree: 1, coeffs: a };
            let fb = Form { num_vars: 3, degree: 2, coeffs: b };
            let dual = DualElement { num_vars: 3, degree: 5, coeffs: big };
            let lhs = contract(f, &fa.mul(f, &fb), &dual);
            let rhs = contract(f, &fa, &contract(f, &fb, &dual));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
