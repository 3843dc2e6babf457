//! Stable-form invariants in dimension six: the endomorphism `K_rho`, the
//! quartic invariant `lambda`, the (para-)complex structure it induces, the
//! symplectic volume `phi(omega)`, compatibility and normalization of a
//! `(omega, rho)` pair, and the induced metric with its exact signature.
//!
//! Everything is square-root free: `phi(rho) = sqrt(|lambda|)` is only ever
//! used through the normalization identity `sqrt(|lambda|) = 2|phi(omega)|`,
//! with the positively oriented root realized as `2*phi(omega)` itself.

use serde::Serialize;
use thiserror::Error;

use crate::exterior::{kappa, EndoVol, ExteriorError, KForm, MultiIndex};
use crate::linalg::{symmetric_signature, Mat};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum StableError {
    #[error("operation requires dimension 6, got {0}")]
    DimensionMismatch(u8),
    #[error("form is not stable (lambda or phi vanishes)")]
    NonStable,
    #[error("pair is not normalized")]
    NotNormalized,
    #[error("pair is not compatible")]
    NotCompatible,
    #[error("no exact square root available for phi(rho)")]
    SquareRootUnavailable,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn require_dim6(f: &KForm) -> Result<(), StableError> {
    if f.dim() != 6 {
        return Err(StableError::DimensionMismatch(f.dim()));
    }
    Ok(())
}

/// `K_rho(v) = kappa((v interior rho) ^ rho)`, quadratic in `rho`, as a
/// matrix relative to the basis and the reference volume form.
pub fn k_endo(rho: &KForm) -> Result<EndoVol, StableError> {
    require_dim6(rho)?;
    let mut cols = Vec::with_capacity(6);
    for i in 1..=6u8 {
        let xi = rho.interior_basis(i).wedge(rho)?;
        cols.push(kappa(&xi)?);
    }
    Ok(EndoVol::from_columns(6, cols))
}

/// The quartic invariant `lambda(rho) = tr(K_rho^2)/6`, as a scalar relative
/// to `nu (x) nu`. `rho` is stable iff the result is non-zero; negative
/// values induce complex structures, positive ones para-complex structures.
pub fn lambda_invariant(rho: &KForm) -> Result<Scalar, StableError> {
    let k = k_endo(rho)?;
    let k2 = k.compose(&k)?;
    Ok(k2.trace()?.div(&Scalar::int(6))?)
}

/// The unnormalized adjoint action on one-forms:
/// `Jt*alpha(e_i) nu = alpha ^ (e_i interior rho) ^ rho`. For stable `rho`
/// this is a non-trivial multiple of `J*_rho alpha`, and it satisfies
/// `Jt*(Jt* alpha) = lambda(rho) alpha` exactly.
pub fn j_tilde_star(rho: &KForm, alpha: &KForm) -> Result<KForm, StableError> {
    require_dim6(rho)?;
    require_dim6(alpha)?;
    let mut out = KForm::zero(6, 1);
    for i in 1..=6u8 {
        let top = alpha.wedge(&rho.interior_basis(i))?.wedge(rho)?;
        let c = top.top_coefficient();
        if !c.is_zero() {
            out.insert(MultiIndex::new(vec![i]).unwrap(), c)?;
        }
    }
    Ok(out)
}

/// `phi(omega) = omega^3 / 6` as a scalar relative to `nu`; `omega` is
/// stable iff the result is non-zero.
pub fn phi_omega(omega: &KForm) -> Result<Scalar, StableError> {
    require_dim6(omega)?;
    let cube = omega.wedge(omega)?.wedge(omega)?;
    Ok(cube.top_coefficient().div(&Scalar::int(6))?)
}

/// Exact compatibility test `omega ^ rho = 0`.
pub fn check_compatible(omega: &KForm, rho: &KForm) -> Result<bool, StableError> {
    Ok(omega.wedge(rho)?.is_zero())
}

/// Square-root-free normalization test: with both forms stable, the pair is
/// normalized iff `lambda(rho) = -4 phi(omega)^2` (complex case) or
/// `lambda(rho) = +4 phi(omega)^2` (para-complex case), which is equivalent
/// to `phi(rho) = 2 phi(omega)`.
pub fn check_normalized(omega: &KForm, rho: &KForm) -> Result<bool, StableError> {
    let lambda = lambda_invariant(rho)?;
    let phi = phi_omega(omega)?;
    if lambda.is_zero() || phi.is_zero() {
        return Err(StableError::NonStable);
    }
    let four_phi2 = phi.mul(&phi)?.mul(&Scalar::int(4))?;
    let target = match lambda.sign()? {
        -1 => four_phi2.neg(),
        _ => four_phi2,
    };
    Ok(lambda == target)
}

/// `J_rho = K_rho / phi(rho)` for a compatible normalized pair, with
/// `phi(rho) = 2 phi(omega)` (the orientation fixed by `omega^3`).
pub fn j_endo(omega: &KForm, rho: &KForm) -> Result<EndoVol, StableError> {
    let lambda = lambda_invariant(rho)?;
    let phi = phi_omega(omega)?;
    if lambda.is_zero() || phi.is_zero() {
        return Err(StableError::NonStable);
    }
    if !check_compatible(omega, rho)? {
        return Err(StableError::NotCompatible);
    }
    if !check_normalized(omega, rho)? {
        return Err(StableError::NotNormalized);
    }
    let phi_rho = phi.mul(&Scalar::int(2))?;
    let k = k_endo(rho)?;
    k.scale(&Scalar::one().div(&phi_rho)?).map_err(Into::into)
}

/// Gram matrix `g(e_i, e_j)` of the induced metric `g = omega(J_rho ., .)`.
pub fn metric_gram(omega: &KForm, rho: &KForm) -> Result<Mat, StableError> {
    let j = j_endo(omega, rho)?;
    let mut g = Mat::zero(6, 6);
    for i in 0..6usize {
        for jdx in 0..6usize {
            // omega(J e_{i+1}, e_{j+1}) = sum_k J[k][i] * omega(e_{k+1}, e_{j+1})
            let mut acc = Scalar::zero();
            for k in 0..6usize {
                if j.mat[k][i].is_zero() {
                    continue;
                }
                let w = omega_eval(omega, k as u8 + 1, jdx as u8 + 1);
                if w.is_zero() {
                    continue;
                }
                acc = acc.add(&j.mat[k][i].mul(&w)?)?;
            }
            g.a[i][jdx] = acc;
        }
    }
    Ok(g)
}

fn omega_eval(omega: &KForm, i: u8, j: u8) -> Scalar {
    if i == j {
        return Scalar::zero();
    }
    if i < j {
        omega.coefficient(&[i, j])
    } else {
        omega.coefficient(&[j, i]).neg()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Definiteness {
    PositiveDefinite,
    Signature(usize, usize),
    Degenerate,
}

/// Exact signature of a symmetric matrix via congruence diagonalization and
/// exact sign decisions.
pub fn definiteness(g: &Mat) -> Result<Definiteness, StableError> {
    for i in 0..g.rows {
        for j in 0..i {
            if g.a[i][j] != g.a[j][i] {
                return Err(StableError::NotSymmetric);
            }
        }
    }
    let (pos, neg, zero) = symmetric_signature(g)?;
    if zero > 0 {
        return Ok(Definiteness::Degenerate);
    }
    if neg == 0 {
        return Ok(Definiteness::PositiveDefinite);
    }
    Ok(Definiteness::Signature(pos, neg))
}

/// Pullback of a form by an endomorphism on all arguments:
/// `(A* f)(v_1, .., v_k) = f(A v_1, .., A v_k)`, realized by substituting
/// `e^i -> sum_r A[i][r] e^r` and expanding the wedges.
pub fn pullback(f: &KForm, a: &EndoVol) -> Result<KForm, StableError> {
    let n = f.dim();
    // Row i of the matrix, as a one-form.
    let mut rows = Vec::with_capacity(n as usize);
    for i in 0..n as usize {
        let mut row = KForm::zero(n, 1);
        for r in 0..n as usize {
            if !a.mat[i][r].is_zero() {
                row.insert(
                    MultiIndex::new(vec![r as u8 + 1]).unwrap(),
                    a.mat[i][r].clone(),
                )?;
            }
        }
        rows.push(row);
    }
    let mut out = KForm::zero(n, f.degree());
    for (mi, c) in f.terms() {
        let mut acc = KForm::monomial(n, &[], Scalar::one());
        for &i in mi.indices() {
            acc = acc.wedge(&rows[(i - 1) as usize])?;
        }
        out = out.add(&acc.scale(c)?)?;
    }
    Ok(out)
}

/// `Im(Psi) = J*_rho rho`, the pullback of `rho` by `J_rho` in all three
/// arguments. For a normalized pair it satisfies
/// `J*_rho rho ^ rho = (2/3) omega^3`.
pub fn psi_imaginary(omega: &KForm, rho: &KForm) -> Result<KForm, StableError> {
    let j = j_endo(omega, rho)?;
    pullback(rho, &j)
}

/// A `(two-form, three-form)` pair with its invariants computed eagerly.
#[derive(Debug, Clone)]
pub struct StablePair {
    pub omega: KForm,
    pub rho: KForm,
    pub lambda: Scalar,
    pub phi_omega: Scalar,
    pub stable_rho: bool,
    pub stable_omega: bool,
    pub compatible: bool,
    pub normalized: bool,
    /// Present when the metric is defined (stable, compatible, normalized).
    pub gram: Option<Mat>,
}

impl StablePair {
    pub fn analyze(omega: KForm, rho: KForm) -> Result<StablePair, StableError> {
        require_dim6(&omega)?;
        require_dim6(&rho)?;
        let lambda = lambda_invariant(&rho)?;
        let phi = phi_omega(&omega)?;
        let stable_rho = !lambda.is_zero();
        let stable_omega = !phi.is_zero();
        let compatible = check_compatible(&omega, &rho)?;
        let normalized = if stable_rho && stable_omega {
            check_normalized(&omega, &rho)?
        } else {
            false
        };
        let gram = if stable_rho && stable_omega && compatible && normalized {
            Some(metric_gram(&omega, &rho)?)
        } else {
            None
        };
        Ok(StablePair {
            omega,
            rho,
            lambda,
            phi_omega: phi,
            stable_rho,
            stable_omega,
            compatible,
            normalized,
            gram,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(idx: &[u8]) -> KForm {
        KForm::basis(6, idx)
    }

    /// The standard symplectic form e^{12} + e^{34} + e^{56}.
    fn omega_std() -> KForm {
        e(&[1, 2])
            .add(&e(&[3, 4]))
            .unwrap()
            .add(&e(&[5, 6]))
            .unwrap()
    }

    /// The real part of the standard complex volume form:
    /// e^{135} - e^{146} - e^{236} - e^{245}.
    fn rho_std() -> KForm {
        e(&[1, 3, 5])
            .sub(&e(&[1, 4, 6]))
            .unwrap()
            .sub(&e(&[2, 3, 6]))
            .unwrap()
            .sub(&e(&[2, 4, 5]))
            .unwrap()
    }

    #[test]
    fn k_endo_decomposable_vanishes() {
        let k = k_endo(&e(&[1, 2, 3])).unwrap();
        assert!(k.mat.iter().flatten().all(|c| c.is_zero()));
    }

    #[test]
    fn k_endo_split_form() {
        // rho = e^{123} + e^{456}: expanding kappa((e_i . rho) ^ rho) columnwise
        // gives diag(1, 1, 1, -1, -1, -1).
        let rho = e(&[1, 2, 3]).add(&e(&[4, 5, 6])).unwrap();
        let k = k_endo(&rho).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expect = match (i == j, i < 3) {
                    (true, true) => Scalar::one(),
                    (true, false) => Scalar::int(-1),
                    _ => Scalar::zero(),
                };
                assert_eq!(k.mat[i][j], expect, "entry ({},{})", i, j);
            }
        }
        assert_eq!(lambda_invariant(&rho).unwrap(), Scalar::one());
    }

    #[test]
    fn k_endo_quadratic_scaling() {
        let rho = rho_std().add(&e(&[1, 2, 4])).unwrap();
        let t = Scalar::ratio(5, 7);
        let t2 = t.mul(&t).unwrap();
        let k1 = k_endo(&rho.scale(&t).unwrap()).unwrap();
        let k2 = k_endo(&rho).unwrap().scale(&t2).unwrap();
        assert_eq!(k1, k2);
    }

    #[test]
    fn lambda_examples() {
        assert!(lambda_invariant(&e(&[1, 2, 3])).unwrap().is_zero());
        assert_eq!(lambda_invariant(&rho_std()).unwrap(), Scalar::int(-4));
    }

    #[test]
    fn j_tilde_examples() {
        let alpha = e(&[1]).add(&e(&[4])).unwrap();
        assert!(j_tilde_star(&e(&[1, 2, 3]), &alpha).unwrap().is_zero());
        // Quadratic in rho.
        let rho = rho_std();
        let t = Scalar::ratio(-3, 2);
        let lhs = j_tilde_star(&rho.scale(&t).unwrap(), &alpha).unwrap();
        let rhs = j_tilde_star(&rho, &alpha)
            .unwrap()
            .scale(&t.mul(&t).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        // Jt* o Jt* = lambda * id on one-forms.
        let twice = j_tilde_star(&rho, &j_tilde_star(&rho, &alpha).unwrap()).unwrap();
        let lam = lambda_invariant(&rho).unwrap();
        assert_eq!(twice, alpha.scale(&lam).unwrap());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_omega(&omega_std()).unwrap(), Scalar::one());
        assert!(phi_omega(&e(&[1, 2])).unwrap().is_zero());
        // omega = -e^{16} + e^{25} - e^{34}: cube expands to 6 nu.
        let w = e(&[1, 6])
            .neg()
            .add(&e(&[2, 5]))
            .unwrap()
            .sub(&e(&[3, 4]))
            .unwrap();
        // Independent oracle: omega^3/6 = product of the three distinct
        // two-form terms = (-e^{16})^(e^{25})^(-e^{34}) = +e^{162534} -> +nu.
        assert_eq!(phi_omega(&w).unwrap(), Scalar::one());
    }

    #[test]
    fn compatibility_examples() {
        assert!(check_compatible(&omega_std(), &rho_std()).unwrap());
        // e^{123} contains the full pair {1,2}, so e^{56} ^ e^{123} survives.
        assert!(!check_compatible(&omega_std(), &e(&[1, 2, 3])).unwrap());
        assert!(check_compatible(&omega_std(), &KForm::zero(6, 3)).unwrap());
    }

    #[test]
    fn normalization_examples() {
        assert!(check_normalized(&omega_std(), &rho_std()).unwrap());
        let rho2 = rho_std().scale(&Scalar::int(2)).unwrap();
        assert!(!check_normalized(&omega_std(), &rho2).unwrap());
        assert!(matches!(
            check_normalized(&omega_std(), &e(&[1, 2, 3])),
            Err(StableError::NonStable)
        ));
    }

    #[test]
    fn flat_pair_metric_is_identity() {
        let g = metric_gram(&omega_std(), &rho_std()).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(g.a[i][j], expect);
            }
        }
        assert_eq!(
            definiteness(&g).unwrap(),
            Definiteness::PositiveDefinite
        );
    }

    #[test]
    fn definiteness_cases() {
        assert_eq!(
            definiteness(&Mat::identity(6)).unwrap(),
            Definiteness::PositiveDefinite
        );
        let mut d = Mat::identity(6);
        for i in 3..6 {
            d.a[i][i] = Scalar::int(-1);
        }
        assert_eq!(definiteness(&d).unwrap(), Definiteness::Signature(3, 3));
        let mut z = Mat::identity(6);
        z.a[5][5] = Scalar::zero();
        assert_eq!(definiteness(&z).unwrap(), Definiteness::Degenerate);
        let mut ns = Mat::identity(6);
        ns.a[0][1] = Scalar::one();
        assert!(matches!(
            definiteness(&ns),
            Err(StableError::NotSymmetric)
        ));
    }

    #[test]
    fn psi_imaginary_normalization_identity() {
        let omega = omega_std();
        let rho = rho_std();
        let im = psi_imaginary(&omega, &rho).unwrap();
        // J* rho ^ rho = (2/3) omega^3
        let lhs = im.wedge(&rho).unwrap();
        let rhs = omega
            .wedge(&omega)
            .unwrap()
            .wedge(&omega)
            .unwrap()
            .scale(&Scalar::ratio(2, 3))
            .unwrap();
        assert_eq!(lhs, rhs);
        // Degenerate rho is a hard error.
        assert!(matches!(
            psi_imaginary(&omega, &e(&[1, 2, 3])),
            Err(StableError::NonStable)
        ));
        // Pullback by -Id negates odd-degree forms.
        let minus_id = {
            let mut m = EndoVol::zero(6);
            for i in 0..6 {
                m.mat[i][i] = Scalar::int(-1);
            }
            m
        };
        assert_eq!(pullback(&rho, &minus_id).unwrap(), rho.neg());
    }

    #[test]
    fn stable_pair_caches() {
        let pair = StablePair::analyze(omega_std(), rho_std()).unwrap();
        assert!(pair.stable_omega && pair.stable_rho);
        assert!(pair.compatible && pair.normalized);
        assert_eq!(pair.lambda, Scalar::int(-4));
        assert_eq!(pair.phi_omega, Scalar::one());
        assert!(pair.gram.is_some());
    }

    fn arb_three_form() -> impl Strategy<Value = KForm> {
        proptest::collection::vec((0usize..20, -6i64..7), 1..8).prop_map(|picks| {
            let tuples: Vec<Vec<u8>> = {
                let mut out = Vec::new();
                for a in 1..=6u8 {
                    for b in a + 1..=6 {
                        for c in b + 1..=6 {
                            out.push(vec![a, b, c]);
                        }
                    }
                }
                out
            };
            let mut f = KForm::zero(6, 3);
            for (i, c) in picks {
                f.insert(MultiIndex::new(tuples[i].clone()).unwrap(), Scalar::int(c))
                    .unwrap();
            }
            f
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn trace_k_vanishes(rho in arb_three_form()) {
            let k = k_endo(&rho).unwrap();
            prop_assert!(k.trace().unwrap().is_zero());
        }

        #[test]
        fn k_squared_is_lambda_id(rho in arb_three_form()) {
            let k = k_endo(&rho).unwrap();
            let k2 = k.compose(&k).unwrap();
            let lam = lambda_invariant(&rho).unwrap();
            for i in 0..6 {
                for j in 0..6 {
                    let expect = if i == j { lam.clone() } else { Scalar::zero() };
                    prop_assert_eq!(&k2.mat[i][j], &expect);
                }
            }
        }

        #[test]
        fn lambda_quartic_scaling(rho in arb_three_form(), num in -9i64..10, den in 1i64..10) {
            let t = Scalar::ratio(num, den);
            let t4 = t.pow(4).unwrap();
            let lhs = lambda_invariant(&rho.scale(&t).unwrap()).unwrap();
            let rhs = lambda_invariant(&rho).unwrap().mul(&t4).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
