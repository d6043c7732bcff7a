use super::{RingError, RingObject, MAX_RING_ORDER};

/// Componentwise product of at least two rings. Labels are tuples of the
/// factor labels.
pub fn make_product(factors: Vec<RingObject>) -> Result<RingObject, RingError> {
    if factors.len() < 2 {
        return Err(RingError::ArityError);
    }
    let mut order: usize = 1;
    for f in &factors {
        order = order
            .checked_mul(f.order())
            .ok_or(RingError::OrderLimitExceeded(usize::MAX))?;
        if order > MAX_RING_ORDER {
            return Err(RingError::OrderLimitExceeded(order));
        }
    }
    Ok(RingObject::Product(factors))
}
