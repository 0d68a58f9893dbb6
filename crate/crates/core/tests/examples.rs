// Every cargo example compiled in and run once.

mod field_tower {
    include!("../examples/field_tower.rs");
}
mod gauss_sums {
    include!("../examples/gauss_sums.rs");
}
mod weight_distribution {
    include!("../examples/weight_distribution.rs");
}
mod dual_moments {
    include!("../examples/dual_moments.rs");
}
mod strongly_regular {
    include!("../examples/strongly_regular.rs");
}
mod table1 {
    include!("../examples/table1.rs");
}
mod sweep {
    include!("../examples/sweep.rs");
}

#[test]
fn field_tower_runs() {
    field_tower::main().unwrap();
}

#[test]
fn gauss_sums_runs() {
    gauss_sums::main().unwrap();
}

#[test]
fn weight_distribution_runs() {
    weight_distribution::main().unwrap();
}

#[test]
fn dual_moments_runs() {
    dual_moments::main().unwrap();
}

#[test]
fn strongly_regular_runs() {
    strongly_regular::main().unwrap();
}

#[test]
fn table1_runs() {
    table1::main().unwrap();
}

#[test]
fn sweep_runs() {
    sweep::main().unwrap();
}
