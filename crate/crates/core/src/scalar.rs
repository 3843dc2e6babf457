//! Exact commutative-ring arithmetic shared by every other module.
//!
//! Three kinds of scalars are supported: arbitrary-precision rationals,
//! elements `a + b*sqrt(d)` of a single quadratic extension, and sparse
//! multivariate polynomials over either. One radicand `d` per computation
//! context; towers of extensions are deliberately not supported.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("incompatible ring contexts (mixed radicands or variable sets)")]
    IncompatibleRing,
    #[error("division undefined: {0}")]
    DivisionUndefined(String),
    #[error("scalar is not ordered (polynomial input)")]
    NotOrdered,
    #[error("square root of a negative scalar")]
    NegativeInput,
    #[error("scalar is not a square in the ring")]
    NotASquare,
    #[error("radicand {0} is not square-free and > 1")]
    BadRadicand(u32),
}

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn is_squarefree(d: u32) -> bool {
    if d < 2 {
        return false;
    }
    let mut m = d;
    let mut p = 2u32;
    while p.saturating_mul(p) <= m {
        if m % (p * p) == 0 {
            return false;
        }
        while m % p == 0 {
            m /= p;
        }
        p += 1;
    }
    true
}

/// `a + b*sqrt(d)` with `b != 0`; `d` square-free and `> 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    pub a: Rat,
    pub b: Rat,
    pub d: u32,
}

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, rhs: &Mono) -> Mono {
        Mono(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse multivariate polynomial. Coefficients are rational or quadratic
/// scalars, never polynomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub vars: Arc<Vec<String>>,
    pub terms: BTreeMap<Mono, Scalar>,
}

/// An element of the active coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rat),
    Quad(Quad),
    Poly(Poly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rat::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(rat_i64(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(rat(num, den))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::Rational(r)
    }

    /// `a + b*sqrt(d)`, collapsing to a rational when `b = 0`.
    pub fn quad(a: Rat, b: Rat, d: u32) -> Result<Self, ScalarError> {
        if b.is_zero() {
            return Ok(Scalar::Rational(a));
        }
        if !is_squarefree(d) {
            return Err(ScalarError::BadRadicand(d));
        }
        Ok(Scalar::Quad(Quad { a, b, d }))
    }

    /// The element `sqrt(d)` itself.
    pub fn root(d: u32) -> Result<Self, ScalarError> {
        Scalar::quad(Rat::zero(), Rat::one(), d)
    }

    fn poly_from_terms(vars: Arc<Vec<String>>, terms: BTreeMap<Mono, Scalar>) -> Scalar {
        if terms.is_empty() {
            Scalar::zero()
        } else if terms.len() == 1 {
            // A lone constant term collapses back to its base scalar.
            let (m, c) = terms.iter().next().unwrap();
            if m.is_one() {
                return c.clone();
            }
            Scalar::Poly(Poly { vars, terms })
        } else {
            Scalar::Poly(Poly { vars, terms })
        }
    }

    /// The variable with index `idx` from `vars`.
    pub fn var(vars: &Arc<Vec<String>>, idx: usize) -> Scalar {
        let mut exps = vec![0u16; vars.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Mono(exps), Scalar::one());
        Scalar::Poly(Poly {
            vars: vars.clone(),
            terms,
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quad(_) => false,
            Scalar::Poly(p) => p.terms.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_base(&self) -> bool {
        !matches!(self, Scalar::Poly(_))
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    fn promote_to_poly(&self, vars: &Arc<Vec<String>>) -> Poly {
        let mut terms = BTreeMap::new();
        if !self.is_zero() {
            terms.insert(Mono::one(vars.len()), self.clone());
        }
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad(q) => Scalar::Quad(Quad {
                a: -&q.a,
                b: -&q.b,
                d: q.d,
            }),
            Scalar::Poly(p) => {
                let terms = p
                    .terms
                    .iter()
                    .map(|(m, c)| (m.clone(), c.neg()))
                    .collect();
                Scalar::Poly(Poly {
                    vars: p.vars.clone(),
                    terms,
                })
            }
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x + y)),
            (Scalar::Rational(x), Scalar::Quad(q)) => {
                Scalar::quad(x + &q.a, q.b.clone(), q.d)
            }
            (Scalar::Quad(q), Scalar::Rational(y)) => {
                Scalar::quad(&q.a + y, q.b.clone(), q.d)
            }
            (Scalar::Quad(p), Scalar::Quad(q)) => {
                if p.d != q.d {
                    return Err(ScalarError::IncompatibleRing);
                }
                Scalar::quad(&p.a + &q.a, &p.b + &q.b, p.d)
            }
            (Scalar::Poly(p), _) => {
                let q = match rhs {
                    Scalar::Poly(q) => {
                        if *p.vars != *q.vars {
                            return Err(ScalarError::IncompatibleRing);
                        }
                        q.clone()
                    }
                    other => other.promote_to_poly(&p.vars),
                };
                let mut terms = p.terms.clone();
                for (m, c) in q.terms {
                    match terms.remove(&m) {
                        None => {
                            terms.insert(m, c);
                        }
                        Some(old) => {
                            let s = old.add(&c)?;
                            if !s.is_zero() {
                                terms.insert(m, s);
                            }
                        }
                    }
                }
                Ok(Scalar::poly_from_terms(p.vars.clone(), terms))
            }
            (_, Scalar::Poly(q)) => {
                let p = self.promote_to_poly(&q.vars);
                Scalar::Poly(p).add(rhs)
            }
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Ok(Scalar::Rational(x * y)),
            (Scalar::Rational(x), Scalar::Quad(q)) => {
                Scalar::quad(x * &q.a, x * &q.b, q.d)
            }
            (Scalar::Quad(q), Scalar::Rational(y)) => {
                Scalar::quad(&q.a * y, &q.b * y, q.d)
            }
            (Scalar::Quad(p), Scalar::Quad(q)) => {
                if p.d != q.d {
                    return Err(ScalarError::IncompatibleRing);
                }
                let d = rat_i64(p.d as i64);
                let a = &p.a * &q.a + &(&p.b * &q.b) * &d;
                let b = &p.a * &q.b + &p.b * &q.a;
                Scalar::quad(a, b, p.d)
            }
            (Scalar::Poly(p), _) => {
                let q = match rhs {
                    Scalar::Poly(q) => {
                        if *p.vars != *q.vars {
                            return Err(ScalarError::IncompatibleRing);
                        }
                        q.clone()
                    }
                    other => other.promote_to_poly(&p.vars),
                };
                let mut terms: BTreeMap<Mono, Scalar> = BTreeMap::new();
                for (m1, c1) in &p.terms {
                    for (m2, c2) in &q.terms {
                        let m = m1.mul(m2);
                        let c = c1.mul(c2)?;
                        match terms.remove(&m) {
                            None => {
                                if !c.is_zero() {
                                    terms.insert(m, c);
                                }
                            }
                            Some(old) => {
                                let s = old.add(&c)?;
                                if !s.is_zero() {
                                    terms.insert(m, s);
                                }
                            }
                        }
                    }
                }
                Ok(Scalar::poly_from_terms(p.vars.clone(), terms))
            }
            (_, Scalar::Poly(q)) => {
                let p = self.promote_to_poly(&q.vars);
                Scalar::Poly(p).mul(rhs)
            }
        }
    }

    /// Exact division. Defined for non-zero base-scalar divisors and, for a
    /// polynomial dividend, only coefficient-wise.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionUndefined("divisor is zero".into()));
        }
        match rhs {
            Scalar::Rational(y) => match self {
                Scalar::Rational(x) => Ok(Scalar::Rational(x / y)),
                Scalar::Quad(q) => Scalar::quad(&q.a / y, &q.b / y, q.d),
                Scalar::Poly(p) => {
                    let mut terms = BTreeMap::new();
                    for (m, c) in &p.terms {
                        terms.insert(m.clone(), c.div(rhs)?);
                    }
                    Ok(Scalar::poly_from_terms(p.vars.clone(), terms))
                }
            },
            Scalar::Quad(q) => {
                // Multiply by the conjugate; the norm a^2 - d b^2 of a
                // non-zero element is a non-zero rational.
                let d = rat_i64(q.d as i64);
                let norm = &(&q.a * &q.a) - &(&(&q.b * &q.b) * &d);
                debug_assert!(!norm.is_zero());
                let conj = Scalar::quad(q.a.clone(), -&q.b, q.d)?;
                self.mul(&conj)?.div(&Scalar::Rational(norm))
            }
            Scalar::Poly(_) => Err(ScalarError::DivisionUndefined(
                "polynomial divisor is not a unit".into(),
            )),
        }
    }

    /// Exact sign in `{-1, 0, +1}`; polynomials are not ordered.
    pub fn sign(&self) -> Result<i32, ScalarError> {
        match self {
            Scalar::Rational(r) => Ok(if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }),
            Scalar::Quad(q) => {
                // sign(a + b*sqrt(d)) decided by comparing a^2 and d*b^2.
                let sa = rat_sign(&q.a);
                let sb = rat_sign(&q.b);
                debug_assert!(sb != 0);
                if sa == sb {
                    return Ok(sa);
                }
                if sa == 0 {
                    return Ok(sb);
                }
                let d = rat_i64(q.d as i64);
                let lhs = &q.a * &q.a;
                let rhs = &(&q.b * &q.b) * &d;
                // a and b*sqrt(d) have opposite signs; the larger magnitude wins.
                match lhs.cmp(&rhs) {
                    Ordering::Greater => Ok(sa),
                    Ordering::Less => Ok(sb),
                    // a^2 = d b^2 would make sqrt(d) rational.
                    Ordering::Equal => unreachable!("radicand is square-free"),
                }
            }
            Scalar::Poly(_) => Err(ScalarError::NotOrdered),
        }
    }

    /// The non-negative exact square root in the ring extended by
    /// `sqrt(ctx_d)` (pass `0` for plain rationals), or `NotASquare`.
    pub fn sqrt_exact(&self, ctx_d: u32) -> Result<Scalar, ScalarError> {
        match self.sign() {
            Ok(s) if s < 0 => return Err(ScalarError::NegativeInput),
            Ok(_) => {}
            Err(e) => return Err(e),
        }
        match self {
            Scalar::Rational(r) => {
                if let Some(root) = rat_sqrt(r) {
                    return Ok(Scalar::Rational(root));
                }
                if ctx_d > 1 {
                    // Try b*sqrt(d): requires r/d to be a rational square.
                    let d = rat_i64(ctx_d as i64);
                    if let Some(b) = rat_sqrt(&(r / &d)) {
                        return Scalar::quad(Rat::zero(), b, ctx_d);
                    }
                    // General a + b*sqrt(d) with 2ab = 0 handled above; a
                    // rational has no other square roots in the extension.
                }
                Err(ScalarError::NotASquare)
            }
            Scalar::Quad(q) => {
                // Solve (a + b sqrt(d))^2 = p + q sqrt(d):
                // a^2 + d b^2 = p and 2ab = q with q != 0, so
                // a^2 = (p ± sqrt(p^2 - d q^2)) / 2.
                let d = rat_i64(q.d as i64);
                let disc = &(&q.a * &q.a) - &(&(&q.b * &q.b) * &d);
                let t = match rat_sqrt(&disc) {
                    Some(t) => t,
                    None => return Err(ScalarError::NotASquare),
                };
                let two = rat_i64(2);
                for cand in [(&q.a + &t) / &two, (&q.a - &t) / &two] {
                    if cand.is_negative() {
                        continue;
                    }
                    if let Some(a) = rat_sqrt(&cand) {
                        if a.is_zero() {
                            continue;
                        }
                        let b = &q.b / &(&a * &two);
                        let root = Scalar::quad(a, b, q.d)?;
                        if root.sign()? >= 0 {
                            return Ok(root);
                        }
                        return Ok(root.neg());
                    }
                }
                Err(ScalarError::NotASquare)
            }
            Scalar::Poly(_) => Err(ScalarError::NotOrdered),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<Scalar, ScalarError> {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Substitute rational values for all variables of a polynomial.
    pub fn eval(&self, values: &[Rat]) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Poly(p) => {
                debug_assert_eq!(values.len(), p.vars.len());
                let mut acc = Scalar::zero();
                for (m, c) in &p.terms {
                    let mut t = c.clone();
                    for (i, &e) in m.0.iter().enumerate() {
                        if e > 0 {
                            let v = Scalar::Rational(values[i].clone()).pow(e as u32)?;
                            t = t.mul(&v)?;
                        }
                    }
                    acc = acc.add(&t)?;
                }
                Ok(acc)
            }
            other => Ok(other.clone()),
        }
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact square root of a non-negative rational, if it exists.
fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let num = r.numer();
    let den = r.denom();
    let ns = num.sqrt();
    let ds = den.sqrt();
    if &(&ns * &ns) == num && &(&ds * &ds) == den {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Quad(q) => {
                let bpart = if q.b.is_one() {
                    "rt".to_string()
                } else if q.b == -Rat::one() {
                    "-rt".to_string()
                } else {
                    format!("{}*rt", q.b)
                };
                if q.a.is_zero() {
                    write!(f, "{}", bpart)
                } else if q.b.is_negative() {
                    write!(f, "{} - {}", q.a, bpart.trim_start_matches('-'))
                } else {
                    write!(f, "{} + {}", q.a, bpart)
                }
            }
            Scalar::Poly(p) => {
                let mut first = true;
                for (m, c) in p.terms.iter().rev() {
                    let cs = format!("{}", c);
                    let (sign, mag) = match cs.strip_prefix('-') {
                        Some(rest) if c.is_base() => ("-", rest.to_string()),
                        _ => ("+", cs),
                    };
                    if first {
                        if sign == "-" {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else {
                        write!(f, " {} ", sign)?;
                    }
                    let mono = mono_string(m, &p.vars);
                    match (mono.is_empty(), mag == "1") {
                        (true, _) => write!(f, "{}", mag)?,
                        (false, true) => write!(f, "{}", mono)?,
                        (false, false) => write!(f, "{}*{}", mag, mono)?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

fn mono_string(m: &Mono, vars: &[String]) -> String {
    let mut pieces = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => pieces.push(vars[i].clone()),
            _ => pieces.push(format!("{}^{}", vars[i], e)),
        }
    }
    pieces.join("*")
}

/// Recursive-descent parser for scalar and coefficient expressions.
///
/// Grammar: `expr := term (('+'|'-') term)*`, `term := factor (('*'|'/')
/// factor)*`, `factor := '-' factor | '(' expr ')' | 'rt' | integer | name`.
/// Named parameters are substituted from `params`; `rt` denotes the declared
/// radicand root and requires `ctx_d > 1`.
pub fn parse_scalar_expr(
    text: &str,
    ctx_d: u32,
    params: &BTreeMap<String, Rat>,
) -> Result<Scalar, ScalarParseError> {
    let mut p = ExprParser {
        chars: text.chars().collect(),
        pos: 0,
        ctx_d,
        params,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(ScalarParseError::Syntax(format!(
            "unexpected trailing input at `{}`",
            p.rest()
        )));
    }
    Ok(v)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("syntax error in scalar expression: {0}")]
    Syntax(String),
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("no radicand declared but `rt` used")]
    NoRadicand,
    #[error(transparent)]
    Arith(#[from] ScalarError),
}

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    ctx_d: u32,
    params: &'a BTreeMap<String, Rat>,
}

impl<'a> ExprParser<'a> {
    fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ScalarParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?)?;
                }
                Some('/') => {
                    self.pos += 1;
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarParseError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(ScalarParseError::Syntax("expected `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = s
                    .parse()
                    .map_err(|_| ScalarParseError::Syntax(format!("bad integer `{}`", s)))?;
                Ok(Scalar::Rational(Rat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if name == "rt" {
                    if self.ctx_d <= 1 {
                        return Err(ScalarParseError::NoRadicand);
                    }
                    return Ok(Scalar::root(self.ctx_d)?);
                }
                match self.params.get(&name) {
                    Some(v) => Ok(Scalar::Rational(v.clone())),
                    None => Err(ScalarParseError::UnboundParameter(name)),
                }
            }
            other => Err(ScalarParseError::Syntax(format!(
                "unexpected token `{:?}`",
                other
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sc(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn rational_arithmetic() {
        let half = sc(1, 2);
        let third = sc(1, 3);
        assert_eq!(half.add(&third).unwrap(), sc(5, 6));
        assert_eq!(half.mul(&third).unwrap(), sc(1, 6));
        assert!(half.sub(&half).unwrap().is_zero());
    }

    #[test]
    fn quad_difference_of_squares() {
        // (1 + sqrt(3))(1 - sqrt(3)) = -2
        let x = Scalar::quad(rat_i64(1), rat_i64(1), 3).unwrap();
        let y = Scalar::quad(rat_i64(1), rat_i64(-1), 3).unwrap();
        assert_eq!(x.mul(&y).unwrap(), Scalar::int(-2));
    }

    #[test]
    fn quad_mixed_radicands_rejected() {
        let x = Scalar::root(2).unwrap();
        let y = Scalar::root(3).unwrap();
        assert_eq!(x.add(&y), Err(ScalarError::IncompatibleRing));
    }

    #[test]
    fn poly_cancellation_is_zero() {
        let vars = Arc::new(vec!["r1".to_string(), "s2".to_string()]);
        let r1 = Scalar::var(&vars, 0);
        let s2 = Scalar::var(&vars, 1);
        let p = r1.mul(&s2).unwrap();
        assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn sign_cases() {
        assert_eq!(sc(-7, 3).sign().unwrap(), -1);
        // 1 - sqrt(2) < 0
        let x = Scalar::quad(rat_i64(1), rat_i64(-1), 2).unwrap();
        assert_eq!(x.sign().unwrap(), -1);
        // 3 - sqrt(3) > 0
        let y = Scalar::quad(rat_i64(3), rat_i64(-1), 3).unwrap();
        assert_eq!(y.sign().unwrap(), 1);
        let vars = Arc::new(vec!["x".to_string()]);
        assert_eq!(Scalar::var(&vars, 0).sign(), Err(ScalarError::NotOrdered));
    }

    #[test]
    fn sqrt_cases() {
        assert_eq!(sc(9, 4).sqrt_exact(0).unwrap(), sc(3, 2));
        assert_eq!(Scalar::int(4).sqrt_exact(0).unwrap(), Scalar::int(2));
        assert_eq!(
            Scalar::int(3).sqrt_exact(0),
            Err(ScalarError::NotASquare)
        );
        assert_eq!(
            Scalar::int(3).sqrt_exact(3).unwrap(),
            Scalar::root(3).unwrap()
        );
        assert_eq!(Scalar::int(-1).sqrt_exact(0), Err(ScalarError::NegativeInput));
        // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
        let x = Scalar::quad(rat_i64(3), rat_i64(2), 2).unwrap();
        let r = x.sqrt_exact(2).unwrap();
        assert_eq!(r.mul(&r).unwrap(), x);
        assert!(r.sign().unwrap() > 0);
    }

    #[test]
    fn parse_scalar_expressions() {
        let none = BTreeMap::new();
        assert_eq!(parse_scalar_expr("5/6", 0, &none).unwrap(), sc(5, 6));
        assert_eq!(
            parse_scalar_expr("1/2 + 3/4*rt", 2, &none).unwrap(),
            Scalar::quad(rat(1, 2), rat(3, 4), 2).unwrap()
        );
        assert_eq!(
            parse_scalar_expr("rt", 5, &none),
            Ok(Scalar::root(5).unwrap())
        );
        assert!(matches!(
            parse_scalar_expr("rt", 0, &none),
            Err(ScalarParseError::NoRadicand)
        ));
        let mut params = BTreeMap::new();
        params.insert("alpha".to_string(), rat(-1, 2));
        assert_eq!(
            parse_scalar_expr("(alpha + 1)", 0, &params).unwrap(),
            sc(1, 2)
        );
        assert!(matches!(
            parse_scalar_expr("beta", 0, &params),
            Err(ScalarParseError::UnboundParameter(_))
        ));
    }

    fn arb_base_scalar() -> impl Strategy<Value = Scalar> {
        (any::<i16>(), 1i16..200, any::<i16>(), 1i16..200).prop_map(|(a, b, c, d)| {
            // Mix rationals and quadratic elements over a fixed radicand.
            if c % 3 == 0 {
                Scalar::ratio(a as i64, b as i64)
            } else {
                Scalar::quad(rat(a as i64, b as i64), rat(c as i64, d as i64), 2).unwrap()
            }
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_base_scalar(), y in arb_base_scalar(), z in arb_base_scalar()) {
            let ab = x.add(&y).unwrap();
            let ba = y.add(&x).unwrap();
            prop_assert_eq!(&ab, &ba);
            let assoc1 = ab.add(&z).unwrap();
            let assoc2 = x.add(&y.add(&z).unwrap()).unwrap();
            prop_assert_eq!(assoc1, assoc2);
            let m1 = x.mul(&y).unwrap();
            let m2 = y.mul(&x).unwrap();
            prop_assert_eq!(&m1, &m2);
            let distl = x.mul(&y.add(&z).unwrap()).unwrap();
            let distr = x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(distl, distr);
        }

        #[test]
        fn sign_multiplicative(x in arb_base_scalar(), y in arb_base_scalar()) {
            let sx = x.sign().unwrap();
            let sy = y.sign().unwrap();
            let sxy = x.mul(&y).unwrap().sign().unwrap();
            prop_assert_eq!(sxy, sx * sy);
        }

        #[test]
        fn sqrt_squares_back(x in arb_base_scalar()) {
            let sq = x.mul(&x).unwrap();
            if let Ok(r) = sq.sqrt_exact(2) {
                prop_assert_eq!(r.mul(&r).unwrap(), sq);
                prop_assert!(r.sign().unwrap() >= 0);
            }
        }

        #[test]
        fn division_inverts(x in arb_base_scalar(), y in arb_base_scalar()) {
            if !y.is_zero() {
                let q = x.div(&y).unwrap();
                prop_assert_eq!(q.mul(&y).unwrap(), x);
            }
        }
    }
}
