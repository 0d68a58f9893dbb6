// Quadratic Gauss sums computed exactly in Z[ζ_p], and the two exponential
// sums behind the weight formula compared with their closed forms.

use twoweight::charsums::{gauss_sum_quadratic, lemma1_closed, SumContext};
use twoweight::cyclo::CycVec;
use twoweight::{build_tower, Elem, Level};

pub fn main() -> twoweight::Result<()> {
    for (p, e) in [(3, 1), (5, 1), (7, 1), (3, 2), (3, 3)] {
        let t = build_tower(p, e, 1)?;
        let g = gauss_sum_quadratic(&t, Level::Q)?;
        let square = g.mul(&g)?;
        let (re, im) = g.to_complex();
        let (cre, cim) = lemma1_closed(p as u64, e)?;
        println!(
            "q = {:>3}: G = {g}, G^2 = {}, numeric {re:+.6}{im:+.6}i, closed {cre:+.6}{cim:+.6}i",
            t.q(),
            square.as_integer().expect("integer")
        );
        assert_eq!(square, CycVec::integer(p, square.as_integer().unwrap()));
    }

    let t = build_tower(3, 1, 1)?;
    let ctx = SumContext::new(&t)?;
    for b in 1..t.size() {
        let b = Elem(b);
        let row = ctx.s_c_bruteforce_row(b)?;
        let closed: Vec<i64> = t
            .q_elements()
            .iter()
            .map(|&c| ctx.s_c_closed(b, c))
            .collect::<twoweight::Result<_>>()?;
        println!("b = {}: S_c brute force {row:?}, closed {closed:?}", b.0);
        assert_eq!(row, closed);
    }
    Ok(())
}
