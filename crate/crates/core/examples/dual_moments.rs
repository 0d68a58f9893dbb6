// Dual distributions by the MacWilliams transform and the power moments.

use twoweight::code::{theorem7_distribution, CCase};
use twoweight::dual::{analyze_dual, dual_low_weight_closed};

pub fn main() -> twoweight::Result<()> {
    let cases = [
        (2, 3, CCase::Zero),
        (4, 2, CCase::Zero),
        (2, 2, CCase::NonzeroEven),
        (4, 1, CCase::NonzeroEven),
        (3, 2, CCase::NonzeroOdd),
    ];
    for (q, s, case) in cases {
        let dist = theorem7_distribution(q, s, case)?;
        let r = analyze_dual(&dist, s, case)?;
        let closed = dual_low_weight_closed(q, s, case)?;
        println!(
            "q={q} s={s} {case:?}: dual [{}, {}, {}], A2 = {} (closed {}), A3 = {}{}",
            r.n,
            r.k_dual,
            r.d_dual,
            r.a2,
            closed.a2,
            r.a3,
            closed.a3.map(|v| format!(" (closed {v})")).unwrap_or_default()
        );
        for m in r.moment_checks.iter().chain(&r.variant_forms) {
            println!("    {:<20} {}", m.name, if m.holds { "holds" } else { "fails" });
        }
    }
    Ok(())
}
