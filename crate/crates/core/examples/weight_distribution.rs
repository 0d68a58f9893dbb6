// Enumerates a trace code and compares with the closed-form distribution.

use std::sync::Arc;

use twoweight::code::{minimality_check, theorem7_distribution, TraceCode};
use twoweight::build_tower;

pub fn main() -> twoweight::Result<()> {
    // p e s c on the command line, default (3, 1, 2, 1)
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, e, s, c) = match args[..] {
        [p, e, s, c] => (p, e, s, c as usize),
        _ => (3, 1, 2, 1),
    };
    let tower = Arc::new(build_tower(p, e, s)?);
    let code = TraceCode::from_c_index(tower, c)?;
    println!("[{}, {}] code over F_{}, rank {}", code.n(), code.k(), code.q(), code.rank());

    let dist = code.weight_distribution()?;
    let closed = theorem7_distribution(code.q(), s, code.case())?;
    for (w, a) in dist.nonzero_weights() {
        println!("  A_{w} = {a} (closed form {})", closed.count(w));
    }
    println!("matches closed form: {}", dist == closed);
    println!("projective: {}", code.is_projective());
    let m = minimality_check(&dist)?;
    println!("w_min/w_max = {}/{}, minimal by the ratio test: {}", m.ratio.num, m.ratio.den, m.holds);
    Ok(())
}
