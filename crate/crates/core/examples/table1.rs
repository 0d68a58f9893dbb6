// Rebuilds the eight reference codes and compares their [n, k, d].

use twoweight::field::build_tower;
use twoweight::report::{Analysis, TABLE1};

fn params_for(q: u64) -> (u32, u32) {
    for p in [2u32, 3, 5, 7] {
        let mut e = 1;
        while (p as u64).pow(e) <= q {
            if (p as u64).pow(e) == q {
                return (p, e);
            }
            e += 1;
        }
    }
    panic!("q = {q} is not a small prime power")
}

pub fn main() -> twoweight::Result<()> {
    for row in &TABLE1 {
        let (p, e) = params_for(row.q);
        let tower = std::sync::Arc::new(build_tower(p, e, row.m / 2)?);
        let report = Analysis::with_tower(tower, row.c)?.report()?;
        let t = report.length.table1.expect("row is in the table");
        println!(
            "q={:<2} m={} c={}: listed [{}, {}, {}], computed [{}, {}, {}] {}",
            row.q,
            row.m,
            row.c,
            row.length,
            row.dimension,
            row.min_distance,
            t.computed_length,
            t.computed_dimension,
            t.computed_min_distance,
            t.flag.unwrap_or_default()
        );
    }
    Ok(())
}
