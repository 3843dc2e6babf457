//! Alternating multilinear algebra on an oriented n-dimensional space
//! (n <= 8): sparse k-forms, wedge and interior products, and the canonical
//! isomorphism identifying (n-1)-forms with vectors via the reference volume
//! form `nu = e^{1...n}`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::{Scalar, ScalarError, ScalarParseError};

pub const MAX_DIM: u8 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u8, got: u8 },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Strictly increasing tuple of basis indices in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u8>);

impl MultiIndex {
    pub fn new(indices: Vec<u8>) -> Option<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(MultiIndex(indices))
    }

    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn full(n: u8) -> Self {
        MultiIndex((1..=n).collect())
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u8) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Merge two disjoint increasing tuples, counting the sign of the
    /// permutation that sorts their concatenation. `None` if they intersect.
    pub fn merge(&self, other: &MultiIndex) -> Option<(i32, MultiIndex)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut sign = 1i32;
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] == other.0[j] {
                return None;
            }
            if self.0[i] < other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                // other.0[j] jumps over the remaining entries of self.
                if (self.0.len() - i) % 2 == 1 {
                    sign = -sign;
                }
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Some((sign, MultiIndex(out)))
    }

    /// Remove index `i`, returning the sign `(-1)^(position)` of the
    /// contraction in the first slot.
    fn remove(&self, i: u8) -> Option<(i32, MultiIndex)> {
        let pos = self.0.binary_search(&i).ok()?;
        let mut rest = self.0.clone();
        rest.remove(pos);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, MultiIndex(rest)))
    }

    /// Complementary tuple inside `1..=n`.
    pub fn complement(&self, n: u8) -> MultiIndex {
        MultiIndex((1..=n).filter(|i| !self.contains(*i)).collect())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "{}", i)?;
        }
        Ok(())
    }
}

/// Sparse alternating k-form with exact scalar coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KForm {
    dim: u8,
    degree: u8,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl KForm {
    pub fn zero(dim: u8, degree: u8) -> Self {
        assert!(dim <= MAX_DIM);
        KForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The basis monomial `e^{i1...ik}` scaled by `coef`.
    pub fn monomial(dim: u8, indices: &[u8], coef: Scalar) -> Self {
        let mi = MultiIndex::new(indices.to_vec()).expect("strictly increasing indices");
        assert!(indices.iter().all(|&i| i >= 1 && i <= dim));
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(mi, coef);
        }
        KForm {
            dim,
            degree: indices.len() as u8,
            terms,
        }
    }

    pub fn basis(dim: u8, indices: &[u8]) -> Self {
        Self::monomial(dim, indices, Scalar::one())
    }

    /// Reference volume form `e^{1...n}`.
    pub fn volume(dim: u8) -> Self {
        Self::basis(dim, &(1..=dim).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, indices: &[u8]) -> Scalar {
        MultiIndex::new(indices.to_vec())
            .and_then(|mi| self.terms.get(&mi).cloned())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn insert(&mut self, mi: MultiIndex, coef: Scalar) -> Result<(), ExteriorError> {
        debug_assert_eq!(mi.len() as u8, self.degree);
        match self.terms.remove(&mi) {
            None => {
                if !coef.is_zero() {
                    self.terms.insert(mi, coef);
                }
            }
            Some(old) => {
                let s = old.add(&coef)?;
                if !s.is_zero() {
                    self.terms.insert(mi, s);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, rhs: &KForm) -> Result<KForm, ExteriorError> {
        if self.dim != rhs.dim {
            return Err(ExteriorError::DimensionMismatch(self.dim, rhs.dim));
        }
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (mi, c) in &rhs.terms {
            out.insert(mi.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &KForm) -> Result<KForm, ExteriorError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> KForm {
        let terms = self
            .terms
            .iter()
            .map(|(mi, c)| (mi.clone(), c.neg()))
            .collect();
        KForm {
            dim: self.dim,
            degree: self.degree,
            terms,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<KForm, ExteriorError> {
        let mut out = KForm::zero(self.dim, self.degree);
        if s.is_zero() {
            return Ok(out);
        }
        for (mi, c) in &self.terms {
            out.insert(mi.clone(), c.mul(s)?)?;
        }
        Ok(out)
    }

    /// Graded-anticommutative wedge product with exact sign bookkeeping.
    pub fn wedge(&self, rhs: &KForm) -> Result<KForm, ExteriorError> {
        if self.dim != rhs.dim {
            return Err(ExteriorError::DimensionMismatch(self.dim, rhs.dim));
        }
        let degree = self.degree + rhs.degree;
        if degree > self.dim {
            return Ok(KForm::zero(self.dim, degree));
        }
        let mut out = KForm::zero(self.dim, degree);
        for (mi, ci) in &self.terms {
            for (mj, cj) in &rhs.terms {
                if let Some((sign, merged)) = mi.merge(mj) {
                    let mut c = ci.mul(cj)?;
                    if sign < 0 {
                        c = c.neg();
                    }
                    out.insert(merged, c)?;
                }
            }
        }
        Ok(out)
    }

    /// Interior product by the basis vector `e_i`.
    pub fn interior_basis(&self, i: u8) -> KForm {
        if self.degree == 0 {
            return KForm::zero(self.dim, 0);
        }
        let mut out = KForm::zero(self.dim, self.degree - 1);
        for (mi, c) in &self.terms {
            if let Some((sign, rest)) = mi.remove(i) {
                let c = if sign < 0 { c.neg() } else { c.clone() };
                out.insert(rest, c).expect("disjoint contraction terms");
            }
        }
        out
    }

    /// Interior product by the vector with coefficient list `v`.
    pub fn interior(&self, v: &[Scalar]) -> Result<KForm, ExteriorError> {
        if v.len() != self.dim as usize {
            return Err(ExteriorError::DimensionMismatch(v.len() as u8, self.dim));
        }
        if self.degree == 0 {
            return Ok(KForm::zero(self.dim, 0));
        }
        let mut out = KForm::zero(self.dim, self.degree - 1);
        for (idx, coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let contracted = self.interior_basis(idx as u8 + 1).scale(coef)?;
            out = out.add(&contracted)?;
        }
        Ok(out)
    }

    /// Coefficient of the volume monomial of a top-degree form.
    pub fn top_coefficient(&self) -> Scalar {
        debug_assert_eq!(self.degree, self.dim);
        self.coefficient(&(1..=self.dim).collect::<Vec<_>>())
    }
}

/// The canonical isomorphism sending an (n-1)-form `xi` to the unique vector
/// `X` with `X interior nu = xi`, packaged as `X (x) nu`.
pub fn kappa(xi: &KForm) -> Result<Vec<Scalar>, ExteriorError> {
    let n = xi.dim();
    if xi.degree() != n - 1 {
        return Err(ExteriorError::DegreeMismatch {
            expected: n - 1,
            got: xi.degree(),
        });
    }
    // e_i interior nu = (-1)^(i-1) e^{1...^i...n}
    let mut out = vec![Scalar::zero(); n as usize];
    for (mi, c) in xi.terms() {
        let comp = mi.complement(n);
        debug_assert_eq!(comp.len(), 1);
        let i = comp.indices()[0];
        let coef = if i % 2 == 1 { c.clone() } else { c.neg() };
        out[(i - 1) as usize] = coef;
    }
    Ok(out)
}

/// An endomorphism tensored with the reference volume form: a square matrix
/// whose column `i` is the vector part of the image of `e_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoVol {
    pub n: u8,
    /// Row-major entries; `mat[r][c]` is the `e_{r+1}` component of the image
    /// of `e_{c+1}`.
    pub mat: Vec<Vec<Scalar>>,
}

impl EndoVol {
    pub fn zero(n: u8) -> Self {
        EndoVol {
            n,
            mat: vec![vec![Scalar::zero(); n as usize]; n as usize],
        }
    }

    pub fn from_columns(n: u8, cols: Vec<Vec<Scalar>>) -> Self {
        let mut e = EndoVol::zero(n);
        for (c, col) in cols.into_iter().enumerate() {
            for (r, v) in col.into_iter().enumerate() {
                e.mat[r][c] = v;
            }
        }
        e
    }

    pub fn trace(&self) -> Result<Scalar, ScalarError> {
        let mut acc = Scalar::zero();
        for i in 0..self.n as usize {
            acc = acc.add(&self.mat[i][i])?;
        }
        Ok(acc)
    }

    pub fn compose(&self, rhs: &EndoVol) -> Result<EndoVol, ScalarError> {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n as usize;
        let mut out = EndoVol::zero(self.n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Scalar::zero();
                for k in 0..n {
                    if self.mat[r][k].is_zero() || rhs.mat[k][c].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.mat[r][k].mul(&rhs.mat[k][c])?)?;
                }
                out.mat[r][c] = acc;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Result<EndoVol, ScalarError> {
        let mut out = self.clone();
        for row in &mut out.mat {
            for v in row.iter_mut() {
                *v = v.mul(s)?;
            }
        }
        Ok(out)
    }

    /// Apply to a coefficient vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, ScalarError> {
        let n = self.n as usize;
        let mut out = vec![Scalar::zero(); n];
        for r in 0..n {
            for c in 0..n {
                if self.mat[r][c].is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&self.mat[r][c].mul(&v[c])?)?;
            }
        }
        Ok(out)
    }
}

/// Textual form syntax: a signed sum of `coef*indices` terms, e.g.
/// `-1*16 + 1*25 - 1*34`; the coefficient `1*` may be omitted, and `coef`
/// accepts the full scalar-expression grammar (including `rt` and bound
/// parameter names).
pub fn parse_form(
    text: &str,
    dim: u8,
    degree: u8,
    ctx_d: u32,
    params: &std::collections::BTreeMap<String, crate::scalar::Rat>,
) -> Result<KForm, FormParseError> {
    let mut form = KForm::zero(dim, degree);
    let text = text.trim();
    if text == "0" {
        return Ok(form);
    }
    for (neg, chunk) in split_signed_terms(text)? {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(FormParseError::Syntax("empty term".into()));
        }
        // The trailing `*digits` piece is the multi-index; everything before
        // the final `*` is a coefficient expression.
        let (coef_text, idx_text) = match chunk.rfind('*') {
            Some(p) if chunk[p + 1..].trim().chars().all(|c| c.is_ascii_digit()) => {
                (&chunk[..p], chunk[p + 1..].trim())
            }
            _ => ("1", chunk),
        };
        if !idx_text.chars().all(|c| c.is_ascii_digit()) || idx_text.is_empty() {
            return Err(FormParseError::Syntax(format!(
                "bad index tuple `{}`",
                idx_text
            )));
        }
        let indices: Vec<u8> = idx_text
            .chars()
            .map(|c| c.to_digit(10).unwrap() as u8)
            .collect();
        if indices.len() != degree as usize {
            return Err(FormParseError::Syntax(format!(
                "index tuple `{}` has degree {}, expected {}",
                idx_text,
                indices.len(),
                degree
            )));
        }
        if indices.iter().any(|&i| i < 1 || i > dim) {
            return Err(FormParseError::Syntax(format!(
                "index out of range in `{}`",
                idx_text
            )));
        }
        let mi = MultiIndex::new(indices).ok_or_else(|| {
            FormParseError::Syntax(format!("indices `{}` are not strictly increasing", idx_text))
        })?;
        let mut coef = crate::scalar::parse_scalar_expr(coef_text, ctx_d, params)?;
        if neg {
            coef = coef.neg();
        }
        form.insert(mi, coef).map_err(|e| match e {
            ExteriorError::Scalar(s) => FormParseError::Scalar(ScalarParseError::Arith(s)),
            other => FormParseError::Syntax(other.to_string()),
        })?;
    }
    Ok(form)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormParseError {
    #[error("form syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
}

/// Split `a + b - c` into `(sign, chunk)` pairs at top level (outside
/// parentheses).
fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>, FormParseError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut neg = false;
    let mut have_chunk = false;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
                have_chunk = true;
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| FormParseError::Syntax("unbalanced parentheses".into()))?;
                cur.push(ch);
                have_chunk = true;
            }
            '+' | '-' if depth == 0 && !have_chunk => {
                // sign prefix of the upcoming chunk
                if ch == '-' {
                    neg = !neg;
                }
            }
            '+' | '-' if depth == 0 => {
                out.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
                have_chunk = false;
            }
            c if c.is_whitespace() => {
                if have_chunk {
                    cur.push(c);
                }
            }
            c => {
                cur.push(c);
                have_chunk = true;
            }
        }
    }
    if depth != 0 {
        return Err(FormParseError::Syntax("unbalanced parentheses".into()));
    }
    if have_chunk {
        out.push((neg, cur));
    } else {
        return Err(FormParseError::Syntax("dangling sign or empty term".into()));
    }
    Ok(out)
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mi, c) in &self.terms {
            let cs = format!("{}", c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(" - ") && !rest.contains(" + ") => {
                    (true, rest.to_string())
                }
                _ => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let needs_parens = mag.contains(' ');
            if mag == "1" && !mi.is_empty() {
                write!(f, "{}", mi)?;
            } else if needs_parens {
                write!(f, "({})*{}", mag, mi)?;
            } else if mi.is_empty() {
                write!(f, "{}", mag)?;
            } else {
                write!(f, "{}*{}", mag, mi)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn e(indices: &[u8]) -> KForm {
        KForm::basis(6, indices)
    }

    /// Independent sign oracle: the sign of the permutation sorting the
    /// concatenation of two index tuples, by brute-force inversion count.
    fn perm_sign_oracle(a: &[u8], b: &[u8]) -> Option<i32> {
        let mut all: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
        let mut seen = std::collections::BTreeSet::new();
        for &x in &all {
            if !seen.insert(x) {
                return None;
            }
        }
        let mut sign = 1;
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i] > all[j] {
                    sign = -sign;
                    all.swap(i, j);
                }
            }
        }
        Some(sign)
    }

    #[test]
    fn wedge_basics() {
        let e1 = e(&[1]);
        let e2 = e(&[2]);
        assert_eq!(e1.wedge(&e2).unwrap(), e(&[1, 2]));
        assert!(e(&[1, 2]).wedge(&e(&[1, 3])).unwrap().is_zero());
        let e12 = e(&[1, 2]);
        let e34 = e(&[3, 4]);
        assert_eq!(e12.wedge(&e34).unwrap(), e(&[1, 2, 3, 4]));
    }

    #[test]
    fn wedge_sign_oracle() {
        // e^{35} ^ e^{146}: derived via the permutation-sign oracle.
        let a = e(&[3, 5]);
        let b = e(&[1, 4, 6]);
        let s = perm_sign_oracle(&[3, 5], &[1, 4, 6]).unwrap();
        let w = a.wedge(&b).unwrap();
        assert_eq!(w.coefficient(&[1, 3, 4, 5, 6]), Scalar::int(s as i64));
        assert_eq!(s, -1);
    }

    #[test]
    fn interior_examples() {
        let e123 = e(&[1, 2, 3]);
        assert_eq!(e123.interior_basis(1), e(&[2, 3]));
        assert!(e123.interior_basis(4).is_zero());
        assert_eq!(e123.interior_basis(2), e(&[1, 3]).neg());
    }

    #[test]
    fn kappa_examples() {
        // kappa(e^{23456}) = e_1 (x) nu: verified by the contraction identity.
        let xi = e(&[2, 3, 4, 5, 6]);
        let x = kappa(&xi).unwrap();
        assert_eq!(x[0], Scalar::one());
        assert!(x[1..].iter().all(|c| c.is_zero()));
        // kappa(e^{12356}) = -e_4 (x) nu
        let xi = e(&[1, 2, 3, 5, 6]);
        let x = kappa(&xi).unwrap();
        assert_eq!(x[3], Scalar::int(-1));
        // kappa(0) = 0
        let x = kappa(&KForm::zero(6, 5)).unwrap();
        assert!(x.iter().all(|c| c.is_zero()));
        // Round-trip: X interior nu = xi for every basis (n-1)-form.
        let nu = KForm::volume(6);
        for i in 1..=6u8 {
            let idx: Vec<u8> = (1..=6).filter(|&j| j != i).collect();
            let xi = e(&idx);
            let x = kappa(&xi).unwrap();
            assert_eq!(nu.interior(&x).unwrap(), xi);
        }
    }

    #[test]
    fn parse_and_display_forms() {
        let params = BTreeMap::new();
        let f = parse_form("-1*16 + 1*25 - 1*34", 6, 2, 0, &params).unwrap();
        assert_eq!(f.coefficient(&[1, 6]), Scalar::int(-1));
        assert_eq!(f.coefficient(&[2, 5]), Scalar::one());
        assert_eq!(f.coefficient(&[3, 4]), Scalar::int(-1));
        let g = parse_form("16 - 3*24 + 2*25 + 35", 6, 2, 0, &params).unwrap();
        assert_eq!(g.coefficient(&[2, 4]), Scalar::int(-3));
        // rt coefficients
        let h = parse_form("rt*124 + 29/2*rt*456", 6, 3, 3, &params).unwrap();
        assert_eq!(
            h.coefficient(&[4, 5, 6]),
            Scalar::quad(rat(0, 1), rat(29, 2), 3).unwrap()
        );
        // Round-trip through Display.
        let f2 = parse_form(&format!("{}", f), 6, 2, 0, &params).unwrap();
        assert_eq!(f, f2);
        assert!(parse_form("0", 6, 3, 0, &params).unwrap().is_zero());
        assert!(parse_form("1*11", 6, 2, 0, &params).is_err());
    }

    fn arb_form(degree: u8) -> impl Strategy<Value = KForm> {
        let monos: Vec<Vec<u8>> = all_tuples(6, degree);
        proptest::collection::vec((0..monos.len(), -9i64..10), 0..6).prop_map(move |picks| {
            let mut f = KForm::zero(6, degree);
            for (i, c) in picks {
                f.insert(
                    MultiIndex::new(monos[i].clone()).unwrap(),
                    Scalar::int(c),
                )
                .unwrap();
            }
            f
        })
    }

    fn all_tuples(n: u8, k: u8) -> Vec<Vec<u8>> {
        fn rec(start: u8, n: u8, k: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if k == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..=n {
                cur.push(i);
                rec(i + 1, n, k - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, k, &mut Vec::new(), &mut out);
        out
    }

    proptest! {
        #[test]
        fn wedge_graded_anticommutative(f in arb_form(2), g in arb_form(3)) {
            let fg = f.wedge(&g).unwrap();
            let gf = g.wedge(&f).unwrap();
            // (-1)^{2*3} = 1
            prop_assert_eq!(fg, gf);
        }

        #[test]
        fn wedge_odd_degrees_anticommute(f in arb_form(1), g in arb_form(3)) {
            let fg = f.wedge(&g).unwrap();
            let gf = g.wedge(&f).unwrap();
            prop_assert_eq!(fg, gf.neg());
        }

        #[test]
        fn interior_antiderivation(v in 1u8..=6, f in arb_form(2), g in arb_form(3)) {
            let lhs = f.wedge(&g).unwrap().interior_basis(v);
            let rhs = f
                .interior_basis(v)
                .wedge(&g)
                .unwrap()
                .add(&f.wedge(&g.interior_basis(v)).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn interior_squares_to_zero(v in 1u8..=6, f in arb_form(3)) {
            prop_assert!(f.interior_basis(v).interior_basis(v).is_zero());
        }

        #[test]
        fn kappa_section_of_contraction(f in arb_form(5)) {
            let x = kappa(&f).unwrap();
            let nu = KForm::volume(6);
            prop_assert_eq!(nu.interior(&x).unwrap(), f);
        }
    }
}
