use sf_core::catalog::{reproduce, Catalog, ReproduceConfig, ReproduceScope};

fn main() {
    let cat = Catalog::load("catalog").unwrap();
    let scope_arg = std::env::args().nth(1).unwrap_or_else(|| "examples".into());
    let samples: usize = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(500);
    let scope = ReproduceScope::parse(&scope_arg).expect("bad scope");
    let config = ReproduceConfig { samples, seed: 20106 };
    let rep = reproduce(&cat, scope, config).unwrap();
    print!("{}", rep.render_text());
}
