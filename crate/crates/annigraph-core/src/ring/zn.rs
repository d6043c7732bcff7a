use super::{RingError, RingObject, RingTable, INLINE_AXIOM_CHECK_LIMIT, MAX_RING_ORDER};

/// The ring of integers modulo `n`, with labels `"0".."n-1"`.
pub fn make_zn(n: u64) -> Result<RingObject, RingError> {
    if n < 2 {
        return Err(RingError::InvalidOrder);
    }
    let n = n as usize;
    if n > MAX_RING_ORDER {
        return Err(RingError::OrderLimitExceeded(n));
    }
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u16;
            mul[a * n + b] = ((a * b) % n) as u16;
        }
    }
    let labels = (0..n).map(|a| a.to_string()).collect();
    let table = RingTable::from_raw(add, mul, 0, 1, labels)?;
    if n <= INLINE_AXIOM_CHECK_LIMIT {
        debug_assert!(table.check_axioms().is_empty());
    }
    Ok(RingObject::Table(table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{axiom_check, element_classes};

    #[test]
    fn z6_zero_divisors() {
        let r = make_zn(6).unwrap();
        let classes = element_classes(&r);
        let nz: Vec<usize> = classes.nonzero_zero_divisors(&r);
        assert_eq!(nz, vec![2, 3, 4]);
        assert!(axiom_check(&r).is_empty());
    }

    #[test]
    fn rejects_trivial_order() {
        assert_eq!(make_zn(1).unwrap_err(), RingError::InvalidOrder);
        assert_eq!(make_zn(0).unwrap_err(), RingError::InvalidOrder);
    }

    #[test]
    fn nilpotents_are_multiples_of_radical() {
        // rad(n) = product of distinct primes dividing n
        fn rad(mut n: usize) -> usize {
            let mut r = 1;
            let mut p = 2;
            while p * p <= n {
                if n.is_multiple_of(p) {
                    r *= p;
                    while n.is_multiple_of(p) {
                        n /= p;
                    }
                }
                p += 1;
            }
            if n > 1 {
                r *= n;
            }
            r
        }
        for n in 2..=64usize {
            let r = make_zn(n as u64).unwrap();
            let classes = element_classes(&r);
            let expected: Vec<usize> = (0..n).filter(|a| a % rad(n) == 0).collect();
            assert_eq!(classes.nilpotents, expected, "n = {n}");
        }
    }
}
