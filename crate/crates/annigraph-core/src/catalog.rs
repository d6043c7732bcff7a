//! The built-in catalog of local rings appearing in the finite planar and
//! toroidal classifications.
//!
//! The toroidal local catalog is the complete list of finite local rings
//! whose maximal ideal has 7 or 8 elements: two of order 49, eighteen of
//! order 16, and two of order 64. Three near-miss presentations of these
//! rings are defective, and the audit here detects them:
//!
//! * `Z4[x]/(x^2 + 3*x)` forces `x^2 = x`, so `x` is a nontrivial idempotent
//!   and the ring splits as `Z4 x Z4`. The local ring completing the
//!   `Z4[x]/(quadratic)` family is `Z4[x]/(x^2 + 2*x + 2)`.
//! * `Z4[x,y]/(x^3, y^2, x*y - 2, 2*x, 2*y)` has order 32 and a maximal
//!   ideal of order 16; with `x^2` in place of `x^3` it is the intended
//!   order-16 ring.
//! * `Z4[x]/(x^3 - x^2 - 2, 2*x^2, 2*x)` forces `x^4 = x^3`, so `x^2 + 2` is
//!   a nontrivial idempotent and the ring is not local. The remaining local
//!   ring of the classification is `Z4[x,y]/(x^2 - 2, y^2, x*y, 2*x, 2*y)`.
//!
//! Every entry is audited computationally: construct, decompose, and check
//! that the ring is local with `|m|` in `{7, 8}`.

use crate::parse::elaborate_str;
use crate::ring::{local_decomposition, RingObject};
use serde::Serialize;

/// Local rings from the finite planar classification (each has at most 5
/// nilpotents and a planar annihilator graph).
pub fn planar_local_catalog() -> Vec<&'static str> {
    vec![
        "Z4",
        "Z2[x]/(x^2)",
        "Z9",
        "Z3[x]/(x^2)",
        "Z8",
        "Z2[x]/(x^3)",
        "Z4[x]/(x^2 - 2, 2*x)",
        "Z2[x,y]/(x^2, x*y, y^2)",
        "Z4[x]/(2*x, x^2)",
        "Z2[a,x]/(a^2 + a + 1, x^2)", // F4 with a square-zero element adjoined
        "Z4[x]/(x^2 + x + 1)",        // the Galois ring of order 16
        "Z25",
        "Z5[x]/(x^2)",
    ]
}

/// The 22 local rings with maximal ideal of order 7 or 8; every one has a
/// toroidal annihilator graph (`K_6` for `|m| = 7`, `K_7` for `|m| = 8`).
pub fn toroidal_local_catalog() -> Vec<&'static str> {
    vec![
        "Z49",
        "Z7[x]/(x^2)",
        "Z16",
        "Z2[x]/(x^4)",
        "Z4[x]/(x^2 + 2)",
        "Z4[x]/(x^2 + 2*x + 2)",
        "Z4[x]/(x^3 - 2, 2*x^2, 2*x)",
        "Z2[x,y]/(x^3, x*y, y^2)",
        "Z8[x]/(2*x, x^2)",
        "Z4[x]/(x^3, 2*x^2, 2*x)",
        "Z4[x]/(x^2 + 2*x)",
        "Z8[x]/(2*x, x^2 + 4)",
        "Z2[x,y]/(x^2, y^2 - x*y)",
        "Z4[x,y]/(x^2, y^2 - x*y, x*y - 2, 2*x, 2*y)",
        "Z4[x,y]/(x^2, y^2, x*y - 2, 2*x, 2*y)",
        "Z2[x,y]/(x^2, y^2)",
        "Z4[x]/(x^2)",
        "Z4[x,y]/(x^2 - 2, y^2, x*y, 2*x, 2*y)",
        "Z2[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^2)",
        "Z2[a,x]/(a^3 + a + 1, x^2)", // F8 with a square-zero element adjoined
        "Z4[x,y]/(x^2, y^2, x*y, 2*x, 2*y)",
        "Z4[x]/(x^3 + x + 1)", // the Galois ring of order 64
    ]
}

/// Defective presentations paired with the corrected catalog entry; the
/// audit flags each defective form.
pub fn defective_presentation_examples() -> Vec<(&'static str, &'static str)> {
    vec![
        ("Z4[x]/(x^2 + 3*x)", "Z4[x]/(x^2 + 2*x + 2)"),
        (
            "Z4[x,y]/(x^3, y^2, x*y - 2, 2*x, 2*y)",
            "Z4[x,y]/(x^2, y^2, x*y - 2, 2*x, 2*y)",
        ),
        (
            "Z4[x]/(x^3 - x^2 - 2, 2*x^2, 2*x)",
            "Z4[x,y]/(x^2 - 2, y^2, x*y, 2*x, 2*y)",
        ),
    ]
}

/// Result of auditing one presentation against the `|m| in {7, 8}`
/// requirement for the toroidal local catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogAudit {
    pub expr: String,
    pub order: usize,
    pub is_local: bool,
    /// `None` when the ring is not local.
    pub maximal_ideal_order: Option<usize>,
    /// Set when the entry fails to be a local ring with `|m|` in `{7, 8}`.
    pub flagged: bool,
}

/// Constructs a presentation and audits it.
pub fn audit_presentation(expr: &str) -> Result<CatalogAudit, String> {
    let ring: RingObject = elaborate_str(expr).map_err(|e| e.to_string())?;
    let order = ring.order();
    let factors = local_decomposition(&ring);
    let is_local = factors.len() == 1;
    let maximal_ideal_order = is_local.then(|| factors[0].maximal_ideal_order);
    let flagged = !matches!(maximal_ideal_order, Some(7) | Some(8));
    Ok(CatalogAudit {
        expr: expr.to_string(),
        order,
        is_local,
        maximal_ideal_order,
        flagged,
    })
}

/// Audits every entry of the toroidal local catalog.
pub fn audit_toroidal_catalog() -> Vec<CatalogAudit> {
    toroidal_local_catalog()
        .iter()
        .map(|e| audit_presentation(e).expect("catalog entries must construct"))
        .collect()
}
