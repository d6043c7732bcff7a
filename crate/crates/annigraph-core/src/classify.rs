//! The planarity/toroidality classification criteria for finite commutative
//! rings, evaluated as decision procedures so they can be compared against
//! computed genus.
//!
//! Planar:
//! * reduced with three local factors: only `Z2 x Z2 x Z2`;
//! * reduced with two factors: some minimal prime has at most 3 elements
//!   (equivalently, one field factor has order at most 3);
//! * non-reduced pairs: `Z2 x Z4` and `Z2 x Z2[x]/(x^2)` up to isomorphism,
//!   recognized as two local factors of orders {2, 4} with the order-4
//!   factor non-reduced;
//! * non-reduced otherwise: `Ann(Z(R))` prime with `2 <= |Nil| <= 3`, or
//!   `Z(R) = Nil(R)` with `4 <= |Nil| <= 5`.
//!
//! Toroidal:
//! * reduced: factors `{2,2,3}`, or a field pair from
//!   `{7x4, 5x5, 5x4, 4x4}`;
//! * non-reduced local: maximal ideal of order 7 or 8 (the local catalog);
//! * non-reduced pairs: an order-4 non-reduced local factor times `F3`.

use crate::ring::{
    annihilator, element_classes, is_prime_ideal, local_decomposition, RingError, RingObject,
};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub planar: bool,
    pub toroidal: bool,
    /// Which clause fired, or `"outside every classification clause"`.
    pub rule: String,
}

pub fn predict_classification(ring: &RingObject) -> Result<Prediction, RingError> {
    let classes = element_classes(ring);
    let zero = ring.zero();
    if classes.zero_divisors == vec![zero] {
        return Err(RingError::InvalidArgument(
            "classification needs a ring with zero-divisors".into(),
        ));
    }
    let factors = local_decomposition(ring);
    let mut orders: Vec<usize> = factors.iter().map(|f| f.ring.order()).collect();
    orders.sort_unstable();
    let reduced = classes.nilpotents == vec![zero];

    let done = |planar: bool, toroidal: bool, rule: &str| {
        Ok(Prediction {
            planar,
            toroidal,
            rule: rule.to_string(),
        })
    };

    if reduced {
        if orders == [2, 2, 2] {
            return done(true, false, "reduced: Z2 x Z2 x Z2");
        }
        if orders == [2, 2, 3] {
            return done(false, true, "reduced: Z2 x Z2 x Z3");
        }
        if orders.len() == 2 {
            if orders[0] <= 3 {
                return done(
                    true,
                    false,
                    "reduced pair: a minimal prime has at most three elements",
                );
            }
            let pair = (orders[0], orders[1]);
            if matches!(pair, (4, 7) | (5, 5) | (4, 5) | (4, 4)) {
                return done(false, true, "reduced pair in the toroidal field list");
            }
        }
        return done(false, false, "outside every classification clause");
    }

    // non-reduced
    let nil = classes.nilpotents.len();
    if orders.len() == 2 && orders == [2, 4] {
        let big = factors.iter().find(|f| f.ring.order() == 4).unwrap();
        let big_classes = element_classes(&big.ring);
        if big_classes.nilpotents.len() > 1 {
            return done(
                true,
                false,
                "pair of Z2 with an order-4 non-reduced local ring",
            );
        }
    }
    if orders.len() == 2 {
        let f3 = factors
            .iter()
            .find(|f| f.ring.order() == 3 && f.maximal_ideal_order == 1);
        let l4 = factors
            .iter()
            .find(|f| f.ring.order() == 4 && element_classes(&f.ring).nilpotents.len() > 1);
        if f3.is_some() && l4.is_some() {
            return done(
                false,
                true,
                "pair of an order-4 non-reduced local ring with F3",
            );
        }
    }
    if factors.len() == 1 {
        let m = factors[0].maximal_ideal_order;
        if m == 7 || m == 8 {
            return done(false, true, "local with maximal ideal of order 7 or 8");
        }
    }
    let ann_z = annihilator(ring, &classes.zero_divisors).expect("Z(R) is nonempty");
    if is_prime_ideal(ring, &ann_z) && (2..=3).contains(&nil) {
        return done(true, false, "Ann(Z(R)) prime with 2 <= |Nil| <= 3");
    }
    if classes.zero_divisors == classes.nilpotents && (4..=5).contains(&nil) {
        return done(true, false, "Z(R) = Nil(R) with 4 <= |Nil| <= 5");
    }
    done(false, false, "outside every classification clause")
}
