//! Development probe: validates catalog data end to end and prints the
//! computed invariants used to curate the annotations file.

use std::collections::BTreeMap;

use sf_core::catalog::{parse_bindings, verify_pair_against, Catalog};
use sf_core::exterior::KForm;
use sf_core::halfflat::obstruction_certificate;

fn bind(specs: &[&str]) -> BTreeMap<String, sf_core::Rat> {
    let v: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
    parse_bindings(&v).unwrap()
}

fn main() {
    let cat = Catalog::load("catalog").unwrap();
    let mode = std::env::args().nth(1).unwrap_or_else(|| "pairs".into());

    if mode == "pairs" {
        // (pair file, algebra, bindings)
        let checks: Vec<(&str, &str, Vec<&str>)> = vec![
            ("a4_01_r2.pair", "A4.1+r2", vec![]),
            ("b_r2.pair", "B+r2", vec!["beta=1"]),
            ("b_r2.pair", "B+r2", vec!["beta=2"]),
            ("b_r2.pair", "B+r2", vec!["beta=3"]),
            ("a4_08_r2.pair", "A4.8+r2", vec![]),
            ("a4_09_r2.pair", "A4.9+r2", vec!["alpha=-1/2"]),
            ("a4_10_r2.pair", "A4.10+r2", vec![]),
            ("a4_12_r2.pair", "A4.12+r2", vec![]),
            ("r2r2r2.pair", "r2+r2+r2", vec![]),
            ("r6.pair", "R6", vec![]),
            ("a5_07_R.pair", "A5.7+R", vec!["alpha=-1", "beta=1", "gamma=-1"]),
            ("a5_07_R.pair", "A5.7+R", vec!["alpha=-1", "beta=1/2", "gamma=-1/2"]),
            ("a5_07_R.pair", "A5.8+R", vec!["gamma=-1"]),
            ("a5_07_R.pair", "A5.13+R", vec!["alpha=-1", "beta=0", "gamma=1"]),
            ("a5_07_R.pair", "A5.13+R", vec!["alpha=-1", "beta=0", "gamma=2"]),
            ("a5_07_R.pair", "A5.14+R", vec!["alpha=0"]),
            ("a5_07_R.pair", "A5.17+R", vec!["alpha=0", "beta=0", "gamma=1"]),
            ("a5_07_R.pair", "A5.17+R", vec!["alpha=0", "beta=0", "gamma=1/2"]),
            ("a5_17r_R.pair", "A5.17+R", vec!["alpha=1", "beta=-1", "gamma=1"]),
            ("a5_17r_R.pair", "A5.17+R", vec!["alpha=2", "beta=-2", "gamma=1"]),
            ("a5_17r_R.pair", "A5.15+R", vec!["gamma=-1"]),
            ("a5_18_R.pair", "A5.18+R", vec!["alpha=0"]),
            ("a5_19_m1_2_R.pair", "A5.19+R", vec!["alpha=-1", "beta=2"]),
            ("a5_19_m1_3_R.pair", "A5.19+R", vec!["alpha=-1", "beta=3"]),
            ("a5_19_2_m3_R.pair", "A5.19+R", vec!["alpha=2", "beta=-3"]),
            ("a5_30_R.pair", "A5.30+R", vec!["alpha=0"]),
            ("a5_33_R.pair", "A5.33+R", vec!["alpha=-1", "beta=-1"]),
            ("a5_35_R.pair", "A5.35+R", vec!["alpha=0", "beta=-2"]),
            ("a5_36_R.pair", "A5.36+R", vec![]),
            ("a5_37_R.pair", "A5.37+R", vec![]),
            ("a5_40_R.pair", "A5.40+R", vec![]),
        ];
        let mut failures = 0;
        for (file, algebra, binds) in checks {
            let bindings = bind(&binds);
            let g = cat.presentation(algebra, &bindings).unwrap();
            let pair = cat.load_pair(file).unwrap();
            match verify_pair_against(&g, &pair) {
                Ok(v) if v.verdict => println!("OK   {} {} {:?}", file, algebra, binds),
                Ok(v) => {
                    failures += 1;
                    println!(
                        "FAIL {} {} {:?}: closed({},{}) comp {} norm {} lneg {} pd {} gram {}",
                        file,
                        algebra,
                        binds,
                        v.report.rho_closed,
                        v.report.omega2_closed,
                        v.report.compatible,
                        v.report.normalized,
                        v.report.lambda_negative,
                        v.report.metric_positive_definite,
                        v.gram_matches
                    );
                }
                Err(e) => {
                    failures += 1;
                    println!("ERR  {} {} {:?}: {}", file, algebra, binds, e);
                }
            }
        }
        println!("pair failures: {}", failures);
    }

    if mode == "fivedim" {
        // Survey every 5d class at curated sample bindings: cohomology,
        // unimodularity, and the e5-certificate on g + R.
        let cases: Vec<(&str, Vec<&str>)> = vec![
            ("A5.1", vec![]),
            ("A5.2", vec![]),
            ("A5.3", vec![]),
            ("A5.4", vec![]),
            ("A5.5", vec![]),
            ("A5.6", vec![]),
            ("A5.7", vec!["alpha=-1", "beta=1", "gamma=-1"]),
            ("A5.7", vec!["alpha=-1", "beta=1/2", "gamma=-1/2"]),
            ("A5.7", vec!["alpha=1", "beta=1", "gamma=1"]),
            ("A5.7", vec!["alpha=1/2", "beta=1/3", "gamma=1/4"]),
            ("A5.8", vec!["gamma=-1"]),
            ("A5.8", vec!["gamma=1"]),
            ("A5.8", vec!["gamma=1/2"]),
            ("A5.9", vec!["beta=-1", "gamma=-1"]),
            ("A5.9", vec!["beta=1", "gamma=1"]),
            ("A5.9", vec!["beta=-1/2", "gamma=-3/2"]),
            ("A5.10", vec![]),
            ("A5.11", vec!["gamma=1"]),
            ("A5.11", vec!["gamma=-3"]),
            ("A5.12", vec![]),
            ("A5.13", vec!["alpha=-1", "beta=0", "gamma=1"]),
            ("A5.13", vec!["alpha=-1", "beta=0", "gamma=2"]),
            ("A5.13", vec!["alpha=1", "beta=1", "gamma=1"]),
            ("A5.13", vec!["alpha=-3", "beta=1", "gamma=1"]),
            ("A5.14", vec!["alpha=0"]),
            ("A5.14", vec!["alpha=1"]),
            ("A5.15", vec!["gamma=-1"]),
            ("A5.15", vec!["gamma=1"]),
            ("A5.16", vec!["alpha=-1", "beta=1"]),
            ("A5.16", vec!["alpha=1", "beta=1"]),
            ("A5.17", vec!["alpha=0", "beta=0", "gamma=1"]),
            ("A5.17", vec!["alpha=0", "beta=0", "gamma=1/2"]),
            ("A5.17", vec!["alpha=1", "beta=-1", "gamma=1"]),
            ("A5.17", vec!["alpha=2", "beta=-2", "gamma=1"]),
            ("A5.17", vec!["alpha=1", "beta=1", "gamma=1"]),
            ("A5.18", vec!["alpha=0"]),
            ("A5.18", vec!["alpha=1"]),
            ("A5.19", vec!["alpha=-1", "beta=2"]),
            ("A5.19", vec!["alpha=-1", "beta=3"]),
            ("A5.19", vec!["alpha=2", "beta=-3"]),
            ("A5.19", vec!["alpha=1", "beta=1"]),
            ("A5.19", vec!["alpha=1", "beta=-2"]),
            ("A5.19", vec!["alpha=2", "beta=-4"]),
            ("A5.20", vec!["alpha=0"]),
            ("A5.20", vec!["alpha=1"]),
            ("A5.21", vec![]),
            ("A5.22", vec![]),
            ("A5.23", vec!["beta=1"]),
            ("A5.23", vec!["beta=-4"]),
            ("A5.24", vec!["epsilon=1"]),
            ("A5.24", vec!["epsilon=-1"]),
            ("A5.25", vec!["alpha=1", "beta=1"]),
            ("A5.25", vec!["alpha=1", "beta=-4"]),
            ("A5.26", vec!["alpha=0", "epsilon=1"]),
            ("A5.26", vec!["alpha=0", "epsilon=-1"]),
            ("A5.26", vec!["alpha=1", "epsilon=1"]),
            ("A5.27", vec![]),
            ("A5.28", vec!["alpha=1"]),
            ("A5.28", vec!["alpha=-3/2"]),
            ("A5.29", vec![]),
            ("A5.30", vec!["alpha=0"]),
            ("A5.30", vec!["alpha=1"]),
            ("A5.30", vec!["alpha=-1/3"]),
            ("A5.31", vec![]),
            ("A5.32", vec!["alpha=0"]),
            ("A5.32", vec!["alpha=1"]),
            ("A5.33", vec!["alpha=-1", "beta=-1"]),
            ("A5.33", vec!["alpha=1", "beta=1"]),
            ("A5.33", vec!["alpha=1", "beta=2"]),
            ("A5.34", vec!["alpha=1"]),
            ("A5.34", vec!["alpha=-2"]),
            ("A5.35", vec!["alpha=0", "beta=-2"]),
            ("A5.35", vec!["alpha=1", "beta=1"]),
            ("A5.36", vec![]),
            ("A5.37", vec![]),
            ("A5.38", vec![]),
            ("A5.39", vec![]),
            ("A5.40", vec![]),
        ];
        for (base, binds) in cases {
            let bindings = bind(&binds);
            let g5 = match cat.presentation(base, &bindings) {
                Ok(g) => g,
                Err(e) => {
                    println!("{:<6} {:?} LOAD-ERR {}", base, binds, e);
                    continue;
                }
            };
            let jac = g5.jacobi_check().unwrap();
            if !jac {
                println!("{:<6} {:?} JACOBI FAILS", base, binds);
                continue;
            }
            let h = g5.cohomology_dims().unwrap().0;
            let inv = g5.structural_invariants().unwrap();
            let g6 = cat
                .presentation(&format!("{}+R", base), &bindings)
                .unwrap();
            let cert = obstruction_certificate(&g6, &KForm::basis(6, &[5])).unwrap();
            println!(
                "{:<6} {:<40} h={:?} z={} uni={} e5-cert-zero={} (Z3={}, Z4={})",
                base,
                format!("{:?}", binds),
                h,
                inv.center_dim,
                inv.unimodular,
                cert.is_obstruction(),
                cert.dim_z3,
                cert.dim_z4,
            );
        }
    }
}
