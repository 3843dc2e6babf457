//! Shared fixtures for the benchmark suite.

use std::collections::BTreeMap;

use sf_core::catalog::Catalog;
use sf_core::exterior::KForm;
use sf_core::lie::Presentation;
use sf_core::scalar::Scalar;

/// Locate the workspace catalog regardless of the bench working directory.
pub fn catalog() -> Catalog {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../catalog");
    Catalog::load(dir).expect("workspace catalog")
}

pub fn presentation(name: &str) -> Presentation {
    catalog()
        .presentation(name, &BTreeMap::new())
        .expect("catalog algebra")
}

/// The standard symplectic/complex model pair on the abelian algebra.
pub fn flat_pair() -> (KForm, KForm) {
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

/// A dense-ish rational three-form for arithmetic benchmarks.
pub fn dense_three_form() -> KForm {
    let mut f = KForm::zero(6, 3);
    let mut c = 1i64;
    for a in 1..=6u8 {
        for b in a + 1..=6 {
            for d in b + 1..=6 {
                c = (c * 7) % 23 + 1;
                f = f
                    .add(&KForm::monomial(6, &[a, b, d], Scalar::ratio(c, 3)))
                    .unwrap();
            }
        }
    }
    f
}
