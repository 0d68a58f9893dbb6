//! Search for the primitive modulus of the ambient field.
//!
//! Candidates are monic polynomials of the target degree, scanned in order of
//! the integer whose base-`p` digits are the lower coefficients (constant term
//! least significant). The first polynomial whose root has multiplicative
//! order `p^degree - 1` wins; such a root generates a field, so
//! irreducibility comes for free.

type Poly = Vec<u64>;

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `a * b mod f`, with `f` monic of degree `lower.len()` given by its lower coefficients.
fn mul_mod(a: &[u64], b: &[u64], lower: &[u64], p: u64) -> Poly {
    let deg = lower.len();
    let mut prod = vec![0u64; 2 * deg - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for top in (deg..prod.len()).rev() {
        let t = prod[top];
        if t == 0 {
            continue;
        }
        // X^deg = -lower
        for (j, &fj) in lower.iter().enumerate() {
            let k = top - deg + j;
            prod[k] = (prod[k] + p - (t * fj) % p) % p;
        }
        prod[top] = 0;
    }
    prod.truncate(deg);
    prod
}

fn pow_x(exp: u64, lower: &[u64], p: u64) -> Poly {
    let deg = lower.len();
    let mut base = vec![0u64; deg];
    if deg == 1 {
        base[0] = (p - lower[0]) % p;
    } else {
        base[1] = 1;
    }
    let mut acc = vec![0u64; deg];
    acc[0] = 1;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, lower, p);
        }
        base = mul_mod(&base, &base, lower, p);
        e >>= 1;
    }
    acc
}

fn is_one(poly: &[u64]) -> bool {
    poly[0] == 1 && poly[1..].iter().all(|&c| c == 0)
}

/// Whether the residue class of `X` has order `p^deg - 1` modulo the monic
/// polynomial with the given lower coefficients.
pub(crate) fn root_is_primitive(lower: &[u64], p: u64, order: u64, factors: &[u64]) -> bool {
    if lower[0] == 0 {
        return false;
    }
    if !is_one(&pow_x(order, lower, p)) {
        return false;
    }
    factors.iter().all(|&r| !is_one(&pow_x(order / r, lower, p)))
}

/// Full coefficient list (low degree first, monic) of the smallest primitive polynomial.
pub(crate) fn smallest_primitive(p: u32, degree: u32) -> Vec<u32> {
    let p = p as u64;
    let total = p.pow(degree);
    let order = total - 1;
    let factors = prime_factors(order);
    let mut lower = vec![0u64; degree as usize];
    for code in 1..total {
        let mut c = code;
        for slot in lower.iter_mut() {
            *slot = c % p;
            c /= p;
        }
        if root_is_primitive(&lower, p, order, &factors) {
            let mut out: Vec<u32> = lower.iter().map(|&c| c as u32).collect();
            out.push(1);
            return out;
        }
    }
    unreachable!("every finite field has a primitive element")
}
