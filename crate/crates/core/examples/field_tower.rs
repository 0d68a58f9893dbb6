// Builds the tower F_2 ⊂ F_4 ⊂ F_16 and walks through traces and norms.

use twoweight::{build_tower, Elem, Level};

pub fn main() -> twoweight::Result<()> {
    let t = build_tower(2, 2, 1)?;
    println!("ambient F_{} with modulus coefficients {}", t.size(), t.modulus_string());
    println!("generator encoding {}", t.generator().encoding());

    for level in Level::ALL {
        let elems: Vec<u32> = t.subfield_elements(level).iter().map(|x| x.0).collect();
        println!("{level:?} (degree {}): {elems:?}", t.degree(level));
    }

    let x = t.exp(7);
    let y = t.exp(11);
    println!("g^7 = {}, g^11 = {}", x.0, y.0);
    println!("sum {}, product {} (= g^18 = g^3 = {})", t.add(x, y).0, t.mul(x, y).0, t.exp(3).0);
    println!("inverse of g^7: {}", t.inv(x)?.0);

    // the norm to F_{q^s} here is x^(q^s+1) = x^5, landing in F_4
    for k in 0..5 {
        let z = t.exp(k);
        let n = t.norm_qm_qs(z);
        let tr = t.trace(z, Level::Qm, Level::Q)?;
        println!("g^{k}: norm {} trace-to-F_4 {}", n.0, tr.0);
    }
    assert_eq!(t.norm_qm_qs(Elem::ONE), Elem::ONE);
    Ok(())
}
