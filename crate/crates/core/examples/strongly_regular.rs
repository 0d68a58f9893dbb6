// Cayley graphs from projective two-weight codes, counted pair by pair.

use std::sync::Arc;

use twoweight::code::TraceCode;
use twoweight::srg::{code_graph, srg_family_params, SrgOutcome};
use twoweight::build_tower;

pub fn main() -> twoweight::Result<()> {
    for (p, e, s) in [(2, 1, 2), (2, 1, 3), (2, 2, 2)] {
        let tower = Arc::new(build_tower(p, e, s)?);
        let q = tower.q();
        let code = TraceCode::from_c_index(tower, 1)?;
        let (graph, outcome) = code_graph(&code)?;
        let family = srg_family_params(q, s)?;
        match outcome {
            SrgOutcome::Srg(params) => {
                println!(
                    "q={q} s={s}: {} vertices, counted {:?}, family {:?}, feasible {}",
                    graph.vertex_count(),
                    params,
                    family,
                    params.feasible()
                );
                assert_eq!(params, family);
            }
            other => println!("q={q} s={s}: not strongly regular: {other:?}"),
        }
    }
    Ok(())
}
