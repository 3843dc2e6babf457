//! Decision machinery for half-flat SU(3)-structures on six-dimensional Lie
//! algebras: exact verification of candidate pairs, non-existence
//! certificates by polynomial identity testing over generic closed forms,
//! the refined metric obstruction over `Q(sqrt(2))`, and sign analysis of
//! the quartic invariant on the space of closed three-forms.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exterior::{ExteriorError, KForm};
use crate::lie::{LieError, Presentation};
use crate::linalg::Mat;
use crate::scalar::{Mono, Rat, Scalar, ScalarError};
use crate::stable::{
    check_compatible, check_normalized, definiteness, j_tilde_star, lambda_invariant,
    metric_gram, Definiteness, StableError,
};

#[derive(Debug, Error)]
pub enum HalfFlatError {
    #[error("the one-form is zero")]
    ZeroOneForm,
    #[error("the stated identities do not hold; no conclusion")]
    IdentityFails,
    #[error("operation requires dimension 6, got {0}")]
    DimensionMismatch(u8),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Stable(#[from] StableError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Outcome of checking one candidate pair against the full definition of a
/// half-flat SU(3)-structure. The verdict is true iff every flag is true.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub algebra: String,
    pub rho_closed: bool,
    pub omega2_closed: bool,
    pub compatible: bool,
    pub normalized: bool,
    pub lambda_negative: bool,
    pub metric_positive_definite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
    pub verdict: bool,
}

/// Evaluate `d rho = 0`, `d(omega^2) = 0`, compatibility, normalization,
/// `lambda < 0` and positive definiteness of the induced metric, all exactly.
/// Degeneracies (unstable forms) are reported as failed flags, not errors.
pub fn verify_half_flat(
    g: &Presentation,
    omega: &KForm,
    rho: &KForm,
) -> Result<VerificationReport, HalfFlatError> {
    if g.dim != 6 {
        return Err(HalfFlatError::DimensionMismatch(g.dim));
    }
    if !g.jacobi_check()? {
        return Err(HalfFlatError::Lie(LieError::JacobiFailure));
    }
    let rho_closed = g.d(rho)?.is_zero();
    let omega2 = omega.wedge(omega)?;
    let omega2_closed = g.d(&omega2)?.is_zero();
    let compatible = check_compatible(omega, rho)?;
    let lambda = lambda_invariant(rho)?;
    let lambda_negative = lambda.sign()? == -1;
    let normalized = match check_normalized(omega, rho) {
        Ok(v) => v,
        Err(StableError::NonStable) => false,
        Err(e) => return Err(e.into()),
    };
    let (gram, metric_positive_definite) = if compatible && normalized && !lambda.is_zero() {
        let gm = metric_gram(omega, rho)?;
        let pd = definiteness(&gm)? == Definiteness::PositiveDefinite;
        (Some(gram_strings(&gm)), pd)
    } else {
        (None, false)
    };
    let verdict = rho_closed
        && omega2_closed
        && compatible
        && normalized
        && lambda_negative
        && metric_positive_definite;
    Ok(VerificationReport {
        algebra: g.name.clone(),
        rho_closed,
        omega2_closed,
        compatible,
        normalized,
        lambda_negative,
        metric_positive_definite,
        gram,
        verdict,
    })
}

pub fn gram_strings(g: &Mat) -> Vec<Vec<String>> {
    g.a.iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect()
}

/// A basis of closed k-forms together with the generic element
/// `sum_i v_i b_i` over polynomial scalars in fresh indeterminates.
pub struct GenericClosedForm {
    pub basis: Vec<KForm>,
    pub generic: KForm,
    pub vars: Arc<Vec<String>>,
    /// Index of this block's first variable inside `vars`.
    pub offset: usize,
}

fn generic_closed_form(
    g: &Presentation,
    k: u8,
    vars: &Arc<Vec<String>>,
    offset: usize,
    basis: Vec<KForm>,
) -> Result<GenericClosedForm, HalfFlatError> {
    let mut generic = KForm::zero(g.dim, k);
    for (i, b) in basis.iter().enumerate() {
        let v = Scalar::var(vars, offset + i);
        generic = generic.add(&b.scale(&v)?)?;
    }
    Ok(GenericClosedForm {
        basis,
        generic,
        vars: vars.clone(),
        offset,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CertificateVerdict {
    /// The expansion polynomial vanishes identically: no half-flat
    /// SU(3)-structure exists on this algebra.
    IdenticallyZero,
    /// A monomial with non-zero coefficient witnesses that the chosen
    /// one-form does not obstruct.
    Witness {
        monomial: String,
        coefficient: String,
    },
}

/// Certificate for the one-form obstruction: vanishing of
/// `alpha ^ Jt*_rho alpha ^ sigma` for all closed three-forms `rho` and all
/// closed four-forms `sigma`, tested as a polynomial identity over generic
/// coefficients.
#[derive(Debug, Clone)]
pub struct ObstructionCertificate {
    pub algebra: String,
    pub alpha: String,
    pub dim_z3: usize,
    pub dim_z4: usize,
    pub verdict: CertificateVerdict,
}

impl Serialize for ObstructionCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let n = match &self.verdict {
            CertificateVerdict::IdenticallyZero => 5,
            CertificateVerdict::Witness { .. } => 6,
        };
        let mut st = s.serialize_struct("ObstructionCertificate", n)?;
        st.serialize_field("algebra", &self.algebra)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("dimZ3", &self.dim_z3)?;
        st.serialize_field("dimZ4", &self.dim_z4)?;
        match &self.verdict {
            CertificateVerdict::IdenticallyZero => {
                st.serialize_field("verdict", "identically-zero")?;
            }
            CertificateVerdict::Witness {
                monomial,
                coefficient,
            } => {
                st.serialize_field("verdict", "non-zero")?;
                st.serialize_field(
                    "witness",
                    &serde_json::json!({
                        "monomial": monomial,
                        "coefficient": coefficient,
                    }),
                )?;
            }
        }
        st.end()
    }
}

impl ObstructionCertificate {
    pub fn is_obstruction(&self) -> bool {
        self.verdict == CertificateVerdict::IdenticallyZero
    }
}

/// Expand `alpha ^ Jt*_rho(alpha) ^ sigma` over a generic closed three-form
/// `rho` and a generic closed four-form `sigma`. The expansion is quadratic
/// in the `r` coordinates and linear in the `s` coordinates; it vanishes
/// identically iff `alpha` obstructs, and then the algebra admits no
/// half-flat SU(3)-structure (soundness, not completeness).
pub fn obstruction_certificate(
    g: &Presentation,
    alpha: &KForm,
) -> Result<ObstructionCertificate, HalfFlatError> {
    if g.dim != 6 {
        return Err(HalfFlatError::DimensionMismatch(g.dim));
    }
    if alpha.is_zero() {
        return Err(HalfFlatError::ZeroOneForm);
    }
    let z3 = g.closed_basis(3)?;
    let z4 = g.closed_basis(4)?;
    let mut names: Vec<String> = (1..=z3.len()).map(|i| format!("r{}", i)).collect();
    names.extend((1..=z4.len()).map(|i| format!("s{}", i)));
    let vars = Arc::new(names);
    let rho = generic_closed_form(g, 3, &vars, 0, z3)?;
    let sigma = generic_closed_form(g, 4, &vars, rho.basis.len(), z4)?;

    let jt = j_tilde_star(&rho.generic, alpha)?;
    let expansion = alpha.wedge(&jt)?.wedge(&sigma.generic)?.top_coefficient();

    // Structural degree check: quadratic in r, linear in s.
    if let Scalar::Poly(p) = &expansion {
        let split = rho.basis.len();
        for mono in p.terms.keys() {
            let (dr, ds) = split_degrees(mono, split);
            assert!(
                dr <= 2 && ds <= 1,
                "expansion polynomial has unexpected degree ({}, {})",
                dr,
                ds
            );
        }
    }

    let verdict = match &expansion {
        s if s.is_zero() => CertificateVerdict::IdenticallyZero,
        Scalar::Poly(p) => {
            let (mono, coef) = p.terms.iter().next().unwrap();
            CertificateVerdict::Witness {
                monomial: mono_name(mono, &vars),
                coefficient: coef.to_string(),
            }
        }
        other => CertificateVerdict::Witness {
            monomial: "1".into(),
            coefficient: other.to_string(),
        },
    };
    Ok(ObstructionCertificate {
        algebra: g.name.clone(),
        alpha: alpha.to_string(),
        dim_z3: rho.basis.len(),
        dim_z4: sigma.basis.len(),
        verdict,
    })
}

fn split_degrees(m: &Mono, split: usize) -> (u32, u32) {
    let mut dr = 0u32;
    let mut ds = 0u32;
    for (i, &e) in m.0.iter().enumerate() {
        if i < split {
            dr += e as u32;
        } else {
            ds += e as u32;
        }
    }
    (dr, ds)
}

fn mono_name(m: &Mono, vars: &[String]) -> String {
    let mut pieces = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => pieces.push(vars[i].clone()),
            _ => pieces.push(format!("{}^{}", vars[i], e)),
        }
    }
    if pieces.is_empty() {
        "1".into()
    } else {
        pieces.join("*")
    }
}

/// Report of the refined metric obstruction: a chain of polynomial
/// identities forcing the target one-form to be a null vector of any induced
/// metric, which is impossible for a Riemannian one.
#[derive(Debug, Clone, Serialize)]
pub struct RefinedObstructionReport {
    pub algebra: String,
    pub pairs: Vec<(String, String)>,
    pub target: String,
    /// `alpha ^ Jt* beta ^ sigma = -(beta ^ Jt* alpha ^ sigma)` identically.
    pub antisymmetry_holds: bool,
    /// `alpha ^ Jt* beta ^ sigma = target ^ Jt* target ^ sigma` identically.
    pub chain_holds: bool,
    pub conclusion: String,
}

/// Verify, over generic closed `rho` and `sigma`, the identity chain
/// `alpha ^ Jt* beta ^ sigma = -(beta ^ Jt* alpha ^ sigma)
///  = target ^ Jt* target ^ sigma`
/// for every listed pair. When it holds, the induced metric of any half-flat
/// structure would satisfy `g(alpha, beta) = -g(beta, alpha) =
/// g(target, target)`, making `target` a null vector: a contradiction.
pub fn refined_metric_obstruction(
    g: &Presentation,
    pairs: &[(KForm, KForm)],
    target: &KForm,
) -> Result<RefinedObstructionReport, HalfFlatError> {
    if g.dim != 6 {
        return Err(HalfFlatError::DimensionMismatch(g.dim));
    }
    if target.is_zero() || pairs.is_empty() {
        return Err(HalfFlatError::ZeroOneForm);
    }
    let z3 = g.closed_basis(3)?;
    let z4 = g.closed_basis(4)?;
    let mut names: Vec<String> = (1..=z3.len()).map(|i| format!("r{}", i)).collect();
    names.extend((1..=z4.len()).map(|i| format!("s{}", i)));
    let vars = Arc::new(names);
    let rho = generic_closed_form(g, 3, &vars, 0, z3)?;
    let sigma = generic_closed_form(g, 4, &vars, rho.basis.len(), z4)?;

    let pairing = |a: &KForm, b: &KForm| -> Result<Scalar, HalfFlatError> {
        let jt = j_tilde_star(&rho.generic, b)?;
        Ok(a.wedge(&jt)?.wedge(&sigma.generic)?.top_coefficient())
    };

    let t_expr = pairing(target, target)?;
    let mut antisymmetry_holds = true;
    let mut chain_holds = true;
    for (a, b) in pairs {
        let ab = pairing(a, b)?;
        let ba = pairing(b, a)?;
        if !ab.add(&ba)?.is_zero() {
            antisymmetry_holds = false;
        }
        if ab != t_expr {
            chain_holds = false;
        }
    }
    if !(antisymmetry_holds && chain_holds) {
        return Err(HalfFlatError::IdentityFails);
    }
    Ok(RefinedObstructionReport {
        algebra: g.name.clone(),
        pairs: pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        target: target.to_string(),
        antisymmetry_holds,
        chain_holds,
        conclusion: format!(
            "g({t},{t}) = g({a},{b}) = -g({b},{a}) forces g({t},{t}) = 0: \
             {t} would be a null vector, impossible for a Riemannian metric",
            t = target,
            a = pairs[0].0,
            b = pairs[0].1,
        ),
    })
}

#[derive(Debug, Clone, Serialize)]
pub enum LambdaSignOutcome {
    /// The quartic invariant vanishes identically on closed three-forms
    /// (decided exactly on coefficients).
    IdenticallyZero,
    /// No negative value found among the seeded samples; a consistency
    /// certificate, explicitly not a proof of nonnegativity.
    NonNegativeSampled { samples: usize },
    /// A concrete closed three-form with negative quartic invariant.
    IndefiniteWitness {
        sample_index: usize,
        rho: String,
        lambda: String,
    },
}

impl LambdaSignOutcome {
    pub fn is_identically_zero(&self) -> bool {
        matches!(self, LambdaSignOutcome::IdenticallyZero)
    }
    pub fn is_witness(&self) -> bool {
        matches!(self, LambdaSignOutcome::IndefiniteWitness { .. })
    }
    pub fn is_nonnegative_sampled(&self) -> bool {
        matches!(self, LambdaSignOutcome::NonNegativeSampled { .. })
    }
}

#[derive(Debug, Clone)]
pub struct LambdaSignReport {
    pub algebra: String,
    pub status: LambdaSignOutcome,
    pub samples: usize,
    pub seed: u64,
    pub dim_z3: usize,
}

impl Serialize for LambdaSignReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let n = match &self.status {
            LambdaSignOutcome::IndefiniteWitness { .. } => 6,
            _ => 5,
        };
        let mut st = s.serialize_struct("LambdaSignReport", n)?;
        st.serialize_field("algebra", &self.algebra)?;
        let status = match &self.status {
            LambdaSignOutcome::IdenticallyZero => "identically-zero",
            LambdaSignOutcome::NonNegativeSampled { .. } => "nonnegative-sampled",
            LambdaSignOutcome::IndefiniteWitness { .. } => "indefinite-witness",
        };
        st.serialize_field("status", status)?;
        st.serialize_field("samples", &self.samples)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("dimZ3", &self.dim_z3)?;
        if let LambdaSignOutcome::IndefiniteWitness {
            sample_index,
            rho,
            lambda,
        } = &self.status
        {
            st.serialize_field(
                "witness",
                &serde_json::json!({
                    "sample": sample_index,
                    "rho": rho,
                    "lambda": lambda,
                }),
            )?;
        }
        st.end()
    }
}

/// The quartic invariant of the generic closed three-form, as a polynomial
/// in the `Z^3` coordinates, together with the underlying basis.
pub fn lambda_polynomial(g: &Presentation) -> Result<(Vec<KForm>, Scalar), HalfFlatError> {
    let z3 = g.closed_basis(3)?;
    let names: Vec<String> = (1..=z3.len()).map(|i| format!("r{}", i)).collect();
    let vars = Arc::new(names);
    let rho = generic_closed_form(g, 3, &vars, 0, z3)?;
    let lambda = lambda_invariant(&rho.generic)?;
    Ok((rho.basis, lambda))
}

/// Exact zero test of `lambda` on closed three-forms, otherwise a seeded
/// rational sampling pass: numerators and denominators uniform in
/// `[-20, 20] \ {0}`, sample `j` drawn from a stream keyed by `(seed, j)`.
/// Any negative value yields a concrete witness; a clean pass is reported as
/// consistency only, never as a proof of nonnegativity.
pub fn lambda_sign_analysis(
    g: &Presentation,
    samples: usize,
    seed: u64,
) -> Result<LambdaSignReport, HalfFlatError> {
    if g.dim != 6 {
        return Err(HalfFlatError::DimensionMismatch(g.dim));
    }
    let (basis, lambda) = lambda_polynomial(g)?;
    let k = basis.len();
    if lambda.is_zero() {
        return Ok(LambdaSignReport {
            algebra: g.name.clone(),
            status: LambdaSignOutcome::IdenticallyZero,
            samples: 0,
            seed,
            dim_z3: k,
        });
    }
    let fast = FastQuartic::try_new(&lambda);
    for j in 0..samples {
        let point = sample_point(seed, j as u64, k);
        let sign = match &fast {
            Some(q) => q.sign_at(&point),
            None => generic_sign_at(&lambda, &point)?,
        };
        if sign < 0 {
            // Reconstruct the witness and re-derive its invariant through
            // the standard pipeline as an independent confirmation.
            let mut rho = KForm::zero(6, 3);
            for (b, v) in basis.iter().zip(&point) {
                rho = rho.add(&b.scale(&Scalar::Rational(v.clone()))?)?;
            }
            let value = lambda_invariant(&rho)?;
            debug_assert_eq!(value.sign()?, -1);
            return Ok(LambdaSignReport {
                algebra: g.name.clone(),
                status: LambdaSignOutcome::IndefiniteWitness {
                    sample_index: j,
                    rho: rho.to_string(),
                    lambda: value.to_string(),
                },
                samples: j + 1,
                seed,
                dim_z3: k,
            });
        }
    }
    Ok(LambdaSignReport {
        algebra: g.name.clone(),
        status: LambdaSignOutcome::NonNegativeSampled { samples },
        samples,
        seed,
        dim_z3: k,
    })
}

/// One deterministic sample point: a fresh stream per `(seed, index)` keeps
/// samples independent of evaluation order.
fn sample_point(seed: u64, index: u64, k: usize) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(
        seed ^ (index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15),
    );
    (0..k)
        .map(|_| {
            let draw = |rng: &mut ChaCha8Rng| -> i64 {
                let v: i64 = rng.gen_range(1..=20);
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            };
            let num = draw(&mut rng);
            let den = draw(&mut rng);
            Rat::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}

fn generic_sign_at(lambda: &Scalar, point: &[Rat]) -> Result<i32, HalfFlatError> {
    Ok(lambda.eval(point)?.sign()?)
}

/// Homogeneous quartic with integer coefficients, specialized for fast exact
/// sign evaluation: scaling the argument by the lcm of the sample
/// denominators leaves the sign unchanged (the degree is even), so only
/// integer arithmetic is needed.
struct FastQuartic {
    nvars: usize,
    terms: Vec<(BigInt, Vec<(usize, u16)>)>,
}

impl FastQuartic {
    fn try_new(lambda: &Scalar) -> Option<FastQuartic> {
        let p = match lambda {
            Scalar::Poly(p) => p,
            _ => return None,
        };
        let mut denom_lcm = BigInt::one();
        for c in p.terms.values() {
            let r = c.as_rational()?;
            denom_lcm = denom_lcm.lcm(r.denom());
        }
        let mut terms = Vec::with_capacity(p.terms.len());
        for (m, c) in &p.terms {
            if m.degree() != 4 {
                return None;
            }
            let r = c.as_rational()?;
            let int_coef = r.numer() * (&denom_lcm / r.denom());
            let exps: Vec<(usize, u16)> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect();
            terms.push((int_coef, exps));
        }
        Some(FastQuartic {
            nvars: p.vars.len(),
            terms,
        })
    }

    fn sign_at(&self, point: &[Rat]) -> i32 {
        debug_assert_eq!(point.len(), self.nvars);
        let mut lcm = BigInt::one();
        for v in point {
            lcm = lcm.lcm(v.denom());
        }
        // Integer argument m_i = n_i * (lcm / d_i); powers up to 4 cached.
        let mut powers: Vec<[BigInt; 5]> = Vec::with_capacity(self.nvars);
        for v in point {
            let m = v.numer() * (&lcm / v.denom());
            let m2 = &m * &m;
            let m3 = &m2 * &m;
            let m4 = &m3 * &m;
            powers.push([BigInt::one(), m, m2, m3, m4]);
        }
        let mut acc = BigInt::zero();
        for (c, exps) in &self.terms {
            let mut t = c.clone();
            for &(i, e) in exps {
                t *= &powers[i][e as usize];
            }
            acc += t;
        }
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::parse_presentation;
    use std::collections::BTreeMap;

    fn parse(text: &str) -> Presentation {
        parse_presentation(text, &BTreeMap::new()).unwrap()
    }

    /// A4.3 + R^2: d = (e^{14}, e^{34}, 0, 0, 0, 0).
    fn a4_3_rr() -> Presentation {
        parse("name A4.3+R2\ndim 6\nd 1 = 14\nd 2 = 34\nd 3 = 0\nd 4 = 0\nd 5 = 0\nd 6 = 0\n")
    }

    /// A4.1 + r2: d = (e^{24}, e^{34}, 0, 0, 0, e^{56}).
    fn a4_1_r2() -> Presentation {
        parse("name A4.1+r2\ndim 6\nd 1 = 24\nd 2 = 34\nd 3 = 0\nd 4 = 0\nd 5 = 0\nd 6 = 56\n")
    }

    /// A4.5(-1/2,-1/2) + r2.
    fn a4_5_half_r2() -> Presentation {
        parse(
            "name A4.5(-1/2,-1/2)+r2\ndim 6\nd 1 = 14\nd 2 = -1/2*24\nd 3 = -1/2*34\nd 4 = 0\nd 5 = 0\nd 6 = 56\n",
        )
    }

    /// A4.7 + R^2.
    fn a4_7_rr() -> Presentation {
        parse(
            "name A4.7+R2\ndim 6\nd 1 = 2*14 + 23\nd 2 = 24 + 34\nd 3 = 34\nd 4 = 0\nd 5 = 0\nd 6 = 0\n",
        )
    }

    fn flat_pair() -> (KForm, KForm) {
        let e = |idx: &[u8]| KForm::basis(6, idx);
        let omega = e(&[1, 2])
            .add(&e(&[3, 4]))
            .unwrap()
            .add(&e(&[5, 6]))
            .unwrap();
        let rho = e(&[1, 3, 5])
            .sub(&e(&[1, 4, 6]))
            .unwrap()
            .sub(&e(&[2, 3, 6]))
            .unwrap()
            .sub(&e(&[2, 4, 5]))
            .unwrap();
        (omega, rho)
    }

    #[test]
    fn flat_torus_pair_verifies() {
        let g = Presentation::abelian("R6", 6);
        let (omega, rho) = flat_pair();
        let report = verify_half_flat(&g, &omega, &rho).unwrap();
        assert!(report.verdict, "{:?}", report);
    }

    #[test]
    fn perturbed_pair_fails_exactly() {
        let g = Presentation::abelian("R6", 6);
        let (omega, rho) = flat_pair();
        let bad = rho.add(&KForm::basis(6, &[1, 2, 3])).unwrap();
        let report = verify_half_flat(&g, &omega, &bad).unwrap();
        assert!(!report.verdict);
        // On the abelian algebra everything stays closed; the exact
        // recomputation pins the failure on the algebraic flags.
        assert!(report.rho_closed);
        assert!(!report.compatible || !report.normalized);
    }

    #[test]
    fn obstruction_identically_zero_on_a4_3_rr() {
        let g = a4_3_rr();
        let alpha = KForm::basis(6, &[4]);
        let cert = obstruction_certificate(&g, &alpha).unwrap();
        assert!(cert.is_obstruction(), "{:?}", cert);
    }

    #[test]
    fn obstruction_witness_on_a4_1_r2() {
        let g = a4_1_r2();
        let alpha = KForm::basis(6, &[4]);
        let cert = obstruction_certificate(&g, &alpha).unwrap();
        assert!(!cert.is_obstruction(), "{:?}", cert);
    }

    #[test]
    fn obstruction_witness_on_abelian() {
        let g = Presentation::abelian("R6", 6);
        for i in 1..=6u8 {
            let cert = obstruction_certificate(&g, &KForm::basis(6, &[i])).unwrap();
            assert!(!cert.is_obstruction());
        }
        assert!(matches!(
            obstruction_certificate(&g, &KForm::zero(6, 1)),
            Err(HalfFlatError::ZeroOneForm)
        ));
    }

    #[test]
    fn refined_obstruction_on_a4_5() {
        let g = a4_5_half_r2();
        let e4 = KForm::basis(6, &[4]);
        let e5 = KForm::basis(6, &[5]);
        let target = e4
            .add(&e5.scale(&Scalar::root(2).unwrap()).unwrap())
            .unwrap();
        let report =
            refined_metric_obstruction(&g, &[(e5.clone(), e4.clone())], &target).unwrap();
        assert!(report.antisymmetry_holds && report.chain_holds);

        // On A4.1 + r2 a half-flat structure exists, so the chain cannot
        // hold identically there.
        let g2 = a4_1_r2();
        assert!(matches!(
            refined_metric_obstruction(&g2, &[(e5, e4)], &target),
            Err(HalfFlatError::IdentityFails)
        ));
    }

    #[test]
    fn lambda_identically_zero_on_a4_7_rr() {
        let report = lambda_sign_analysis(&a4_7_rr(), 100, 7).unwrap();
        assert!(report.status.is_identically_zero());
    }

    #[test]
    fn lambda_witness_on_a4_1_r2() {
        let report = lambda_sign_analysis(&a4_1_r2(), 2000, 7).unwrap();
        assert!(report.status.is_witness(), "{:?}", report);
    }

    #[test]
    fn lambda_sampling_is_deterministic() {
        let a = lambda_sign_analysis(&a4_1_r2(), 500, 42).unwrap();
        let b = lambda_sign_analysis(&a4_1_r2(), 500, 42).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn fast_quartic_matches_generic_evaluation() {
        let g = a4_1_r2();
        let (_, lambda) = lambda_polynomial(&g).unwrap();
        let fast = FastQuartic::try_new(&lambda).expect("rational homogeneous quartic");
        for j in 0..50 {
            let point = sample_point(11, j, fast.nvars);
            let s1 = fast.sign_at(&point);
            let s2 = generic_sign_at(&lambda, &point).unwrap();
            assert_eq!(s1, s2, "sample {}", j);
        }
    }
}
