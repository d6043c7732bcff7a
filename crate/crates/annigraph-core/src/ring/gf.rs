//! Finite fields `GF(p^k)` as quotients `Z_p[a]/(f)` for a monic irreducible
//! `f` of degree `k`.

use super::quotient::{quotient_presentation, QuotientPoly};
use super::{make_zn, RingError, RingObject, MAX_RING_ORDER};
use std::collections::BTreeMap;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, k)` with `p` prime, or fails.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut k = 0;
            let mut m = q;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return (m == 1).then_some((p, k));
        }
        p += 1;
    }
    Some((q, 1))
}

/// The field of order `p^k`.
///
/// `poly`, when given, lists the coefficients of a monic degree-`k`
/// polynomial from the constant term upward (the leading 1 may be included
/// or omitted). When omitted, the smallest monic irreducible is used, where
/// polynomials are compared by their coefficient sequences from the highest
/// degree below `k` down to the constant; over `GF(2)` with `k = 3` this
/// picks `x^3 + x + 1`.
pub fn make_gf(p: u64, k: u32, poly: Option<&[u64]>) -> Result<RingObject, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if k == 0 {
        return Err(RingError::InvalidOrder);
    }
    let order = (p as u128).pow(k);
    if order > MAX_RING_ORDER as u128 {
        return Err(RingError::OrderLimitExceeded(order as usize));
    }
    if k == 1 {
        return make_zn(p);
    }
    let coeffs: Vec<u64> = match poly {
        Some(c) => {
            let mut c: Vec<u64> = c.iter().map(|&x| x % p).collect();
            if c.len() == k as usize {
                c.push(1);
            }
            if c.len() != k as usize + 1 || c[k as usize] != 1 {
                return Err(RingError::InvalidArgument(
                    "polynomial must be monic of degree k".into(),
                ));
            }
            if !is_irreducible(&c[..k as usize], p, k) {
                return Err(RingError::ReduciblePolynomial);
            }
            c
        }
        None => smallest_irreducible(p, k),
    };
    // Z_p[a]/(f): relation a^k + c_{k-1} a^{k-1} + ... + c_0
    let mut rel = BTreeMap::new();
    rel.insert(vec![k], 1i64);
    for (deg, &c) in coeffs[..k as usize].iter().enumerate() {
        if c != 0 {
            rel.insert(vec![deg as u32], c as i64);
        }
    }
    let pres = quotient_presentation(p, &["a".to_string()], &[QuotientPoly(rel)])?;
    let table = pres.expand()?;
    let ring = RingObject::Table(table);
    debug_assert!({
        let one = ring.one();
        (0..ring.order())
            .filter(|&a| a != ring.zero())
            .all(|a| (0..ring.order()).any(|b| ring.mul(a, b) == one))
    });
    Ok(ring)
}

/// Smallest monic irreducible of degree `k` over `GF(p)`, compared by the
/// coefficient tuple `(c_{k-1}, ..., c_1, c_0)`.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let kk = k as usize;
    let mut c = vec![0u64; kk]; // c[i] is the coefficient of x^i
    loop {
        if is_irreducible(&c, p, k) {
            let mut full = c.clone();
            full.push(1);
            return full;
        }
        // increment the tuple (c_{k-1}, ..., c_0) with c_0 least significant
        let mut i = 0;
        loop {
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
            assert!(i < kk, "no irreducible of degree {k} over GF({p})");
        }
    }
}

/// Deterministic irreducibility test: `f` (monic, degree k, lower
/// coefficients in `low`) is irreducible over `GF(p)` iff `x^(p^k) = x mod f`
/// and `gcd(x^(p^(k/q)) - x, f) = 1` for every prime `q` dividing `k`.
fn is_irreducible(low: &[u64], p: u64, k: u32) -> bool {
    let kk = k as usize;
    let mut f = low.to_vec();
    f.push(1);
    let xq_k = poly_pow_x(p, &f, (p as u128).pow(k));
    let mut x_poly = vec![0u64; kk.max(2)];
    x_poly[1] = 1;
    if !poly_mod_trim(&poly_sub(&xq_k, &x_poly, p), p).is_empty() {
        return false;
    }
    let mut rem = k;
    let mut q = 2;
    while q <= rem {
        if rem.is_multiple_of(q) {
            let e = k / q;
            let xq = poly_pow_x(p, &f, (p as u128).pow(e));
            let diff = poly_mod_trim(&poly_sub(&xq, &x_poly, p), p);
            if !diff.is_empty() && poly_gcd(&diff, &f, p).len() > 1 {
                return false;
            }
            if diff.is_empty() {
                return false; // x^(p^e) = x means f divides it, not coprime
            }
            while rem.is_multiple_of(q) {
                rem /= q;
            }
        }
        q += 1;
    }
    true
}

fn poly_mod_trim(a: &[u64], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|&c| c % p).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y % p) % p
        })
        .collect()
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = poly_mod_trim(a, p);
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        for i in 0..=df {
            let idx = shift + i;
            r[idx] = (r[idx] + p * p - (lead * f[i]) % p) % p;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// `x^e mod f` by binary exponentiation.
fn poly_pow_x(p: u64, f: &[u64], mut e: u128) -> Vec<u64> {
    let mut base = vec![0u64, 1];
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, f, p);
        }
        base = poly_mul_mod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_mod_trim(a, p);
    let mut b = poly_mod_trim(b, p);
    while !b.is_empty() {
        // make b monic for the remainder step
        let inv = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| (c * inv) % p).collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}
