//! Enumeration of a family of small rings with zero-divisors, used as the
//! fuzz surface for the classification sweeps: all `Z_n` up to the bound,
//! products of two or three small fields, the local catalog, and pairs of a
//! catalog local ring with a field.

use std::collections::BTreeMap;

use crate::catalog::{planar_local_catalog, toroidal_local_catalog};
use crate::parse::elaborate_str;
use crate::ring::{is_prime, RingError, RingObject};

pub struct FamilyEntry {
    pub expr: String,
    pub ring: RingObject,
}

/// Field pool: prime fields as `Zp` plus the non-prime fields of order at
/// most 9, as `(order, expr)`.
fn field_pool(max_order: usize) -> Vec<(usize, String)> {
    let mut pool = Vec::new();
    for p in 2..=max_order.min(131) {
        if is_prime(p as u64) {
            pool.push((p, format!("Z{p}")));
        }
    }
    for q in [4usize, 8, 9] {
        if q <= max_order {
            pool.push((q, format!("F{q}")));
        }
    }
    pool.sort();
    pool
}

/// All family members with order at most `max_order` (which must be at most
/// 256), deduplicated by expression and sorted by order then expression.
pub fn enumerate_family(max_order: usize) -> Result<Vec<FamilyEntry>, RingError> {
    if max_order > 256 {
        return Err(RingError::InvalidArgument(
            "the family enumeration is capped at order 256".into(),
        ));
    }
    let mut exprs: BTreeMap<(usize, String), ()> = BTreeMap::new();
    let mut push = |order: usize, expr: String| {
        exprs.entry((order, expr)).or_insert(());
    };

    // modular rings with zero-divisors
    for n in 4..=max_order {
        if !is_prime(n as u64) {
            push(n, format!("Z{n}"));
        }
    }

    // products of 2 or 3 fields
    let pool = field_pool(max_order / 2);
    for (i, (qa, ea)) in pool.iter().enumerate() {
        for (j, (qb, eb)) in pool.iter().enumerate().skip(i) {
            let two = qa * qb;
            if two > max_order {
                break;
            }
            push(two, format!("{ea} x {eb}"));
            for (qc, ec) in pool.iter().skip(j) {
                let three = two * qc;
                if three > max_order {
                    break;
                }
                push(three, format!("{ea} x {eb} x {ec}"));
            }
        }
    }

    // catalog local rings
    for expr in toroidal_local_catalog() {
        let ring = elaborate_str(expr).expect("catalog entry");
        if ring.order() <= max_order {
            push(ring.order(), expr.to_string());
        }
    }

    // pairs of a catalog local ring with a field
    let mut locals: Vec<(usize, String)> = Vec::new();
    for expr in planar_local_catalog()
        .into_iter()
        .chain(toroidal_local_catalog())
    {
        let ring = elaborate_str(expr).expect("catalog entry");
        locals.push((ring.order(), expr.to_string()));
    }
    locals.sort();
    for (lq, lexpr) in &locals {
        for (fq, fexpr) in &pool {
            let order = lq * fq;
            if order > max_order {
                break;
            }
            // ascending by order, field first when smaller
            let expr = if fq <= lq {
                format!("{fexpr} x {lexpr}")
            } else {
                format!("{lexpr} x {fexpr}")
            };
            push(order, expr);
        }
    }

    let mut out = Vec::new();
    for (order, expr) in exprs.into_keys() {
        let ring = elaborate_str(&expr)
            .map_err(|e| RingError::InvalidArgument(format!("family entry {expr} failed: {e}")))?;
        debug_assert_eq!(ring.order(), order);
        out.push(FamilyEntry { expr, ring });
    }
    Ok(out)
}
