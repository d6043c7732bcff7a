//! Finite commutative rings with identity, materialized as explicit
//! addition/multiplication tables.
//!
//! Every constructor verifies the ring axioms before handing the ring out
//! (exhaustively for small orders, structurally for presentations), so the
//! rest of the crate can treat a [`RingObject`] as a trusted finite
//! commutative ring with `1 != 0`.
//!
//! Only finite rings exist here. For infinite rings the annihilator graph
//! has genus 0 or infinity, so there is no finite genus question to decide,
//! and no constructor in this module can express one.

mod gf;
mod product;
mod quotient;
mod zn;

pub use gf::{is_prime, make_gf, prime_power};
pub use product::make_product;
pub use quotient::{make_quotient, quotient_presentation, BasisPresentation, QuotientPoly};
pub use zn::make_zn;

use thiserror::Error;

/// Hard cap on the number of elements a materialized ring may have.
pub const MAX_RING_ORDER: usize = 4096;

/// Orders up to this bound get the full `O(n^3)` axiom sweep inside
/// constructors; larger rings rely on the structural checks of their
/// constructor plus an explicit [`axiom_check`] call by the caller.
pub const INLINE_AXIOM_CHECK_LIMIT: usize = 128;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RingError {
    #[error("ring order must be at least 2")]
    InvalidOrder,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("polynomial is reducible over the base field")]
    ReduciblePolynomial,
    #[error("presentation is not confluent: {0}")]
    PresentationNotConfluent(String),
    #[error("relations collapse the ring to a single element")]
    TrivialRing,
    #[error("variable {0} has no bounding power relation; the quotient is not finite")]
    NonFiniteQuotient(String),
    #[error("a product needs at least two factors")]
    ArityError,
    #[error("annihilator of the empty set is undefined")]
    EmptySet,
    #[error("ring order {0} exceeds the cap of {MAX_RING_ORDER}")]
    OrderLimitExceeded(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A finite commutative ring with identity given by explicit operation tables.
///
/// Element indices run over `0..order`. The tables are row-major
/// `order x order` and store element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingTable {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
}

impl RingTable {
    /// Builds a table from raw data. The caller is responsible for validity;
    /// [`RingTable::check_axioms`] reports any violations.
    pub fn from_raw(
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self, RingError> {
        let order = labels.len();
        if order < 2 {
            return Err(RingError::InvalidOrder);
        }
        if order > MAX_RING_ORDER {
            return Err(RingError::OrderLimitExceeded(order));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(RingError::InvalidArgument(
                "operation tables must be order x order".into(),
            ));
        }
        if zero >= order || one >= order {
            return Err(RingError::InvalidArgument(
                "zero/one indices out of range".into(),
            ));
        }
        Ok(RingTable {
            order,
            add,
            mul,
            zero,
            one,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Additive inverse.
    pub fn neg(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.add(a, b) == self.zero)
            .expect("verified ring has additive inverses")
    }

    /// Exhaustive axiom sweep: commutativity and associativity of both
    /// operations, distributivity, identities, additive inverses, `1 != 0`,
    /// and label distinctness. Cubic in the order.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();
        let n = self.order;
        if self.zero == self.one {
            violations.push(AxiomViolation::OneEqualsZero);
        }
        {
            let mut sorted = self.labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                violations.push(AxiomViolation::DuplicateLabels);
            }
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                violations.push(AxiomViolation::ZeroIdentity { a });
            }
            if self.mul(a, self.one) != a {
                violations.push(AxiomViolation::OneIdentity { a });
            }
            if (0..n).all(|b| self.add(a, b) != self.zero) {
                violations.push(AxiomViolation::MissingAdditiveInverse { a });
            }
            if violations.len() > 32 {
                return AxiomReport { violations };
            }
        }
        for a in 0..n {
            for b in a..n {
                if self.add(a, b) != self.add(b, a) {
                    violations.push(AxiomViolation::AddNotCommutative { a, b });
                }
                if self.mul(a, b) != self.mul(b, a) {
                    violations.push(AxiomViolation::MulNotCommutative { a, b });
                }
                if violations.len() > 32 {
                    return AxiomReport { violations };
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        violations.push(AxiomViolation::AddNotAssociative { a, b, c });
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        violations.push(AxiomViolation::MulNotAssociative { a, b, c });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_mul, self.mul(a, c)) {
                        violations.push(AxiomViolation::NotDistributive { a, b, c });
                    }
                    if violations.len() > 32 {
                        return AxiomReport { violations };
                    }
                }
            }
        }
        AxiomReport { violations }
    }
}

/// One concrete axiom failure, with the witnessing elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    OneEqualsZero,
    DuplicateLabels,
    ZeroIdentity { a: usize },
    OneIdentity { a: usize },
    MissingAdditiveInverse { a: usize },
    AddNotCommutative { a: usize, b: usize },
    MulNotCommutative { a: usize, b: usize },
    AddNotAssociative { a: usize, b: usize, c: usize },
    MulNotAssociative { a: usize, b: usize, c: usize },
    NotDistributive { a: usize, b: usize, c: usize },
}

/// Report of violated axioms; empty means the table is a commutative ring
/// with identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A ring is either a single verified table or a finite product of rings.
///
/// Product elements are addressed in mixed radix over the factor orders, with
/// the first factor most significant, so flattening is label-stable.
#[derive(Debug, Clone)]
pub enum RingObject {
    Table(RingTable),
    Product(Vec<RingObject>),
}

impl RingObject {
    pub fn order(&self) -> usize {
        match self {
            RingObject::Table(t) => t.order(),
            RingObject::Product(fs) => fs.iter().map(|f| f.order()).product(),
        }
    }

    /// Decodes a product element into factor components.
    pub fn components(&self, mut a: usize) -> Vec<usize> {
        match self {
            RingObject::Table(_) => vec![a],
            RingObject::Product(fs) => {
                let mut out = vec![0; fs.len()];
                for (i, f) in fs.iter().enumerate().rev() {
                    out[i] = a % f.order();
                    a /= f.order();
                }
                out
            }
        }
    }

    /// Encodes factor components into a product element.
    pub fn from_components(&self, comps: &[usize]) -> usize {
        match self {
            RingObject::Table(_) => comps[0],
            RingObject::Product(fs) => {
                let mut a = 0;
                for (f, &c) in fs.iter().zip(comps) {
                    a = a * f.order() + c;
                }
                a
            }
        }
    }

    pub fn zero(&self) -> usize {
        match self {
            RingObject::Table(t) => t.zero(),
            RingObject::Product(fs) => {
                let comps: Vec<usize> = fs.iter().map(|f| f.zero()).collect();
                self.from_components(&comps)
            }
        }
    }

    pub fn one(&self) -> usize {
        match self {
            RingObject::Table(t) => t.one(),
            RingObject::Product(fs) => {
                let comps: Vec<usize> = fs.iter().map(|f| f.one()).collect();
                self.from_components(&comps)
            }
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match self {
            RingObject::Table(t) => t.add(a, b),
            RingObject::Product(fs) => {
                let ca = self.components(a);
                let cb = self.components(b);
                let comps: Vec<usize> = fs
                    .iter()
                    .zip(ca.iter().zip(cb.iter()))
                    .map(|(f, (&x, &y))| f.add(x, y))
                    .collect();
                self.from_components(&comps)
            }
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            RingObject::Table(t) => t.mul(a, b),
            RingObject::Product(fs) => {
                let ca = self.components(a);
                let cb = self.components(b);
                let comps: Vec<usize> = fs
                    .iter()
                    .zip(ca.iter().zip(cb.iter()))
                    .map(|(f, (&x, &y))| f.mul(x, y))
                    .collect();
                self.from_components(&comps)
            }
        }
    }

    pub fn label(&self, a: usize) -> String {
        match self {
            RingObject::Table(t) => t.label(a).to_string(),
            RingObject::Product(fs) => {
                let comps = self.components(a);
                let parts: Vec<String> = fs
                    .iter()
                    .zip(comps.iter())
                    .map(|(f, &c)| f.label(c))
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Flattens to a single table; labels of products become tuples.
    pub fn to_table(&self) -> Result<RingTable, RingError> {
        match self {
            RingObject::Table(t) => Ok(t.clone()),
            RingObject::Product(_) => {
                let n = self.order();
                if n > MAX_RING_ORDER {
                    return Err(RingError::OrderLimitExceeded(n));
                }
                let mut add = vec![0u16; n * n];
                let mut mul = vec![0u16; n * n];
                for a in 0..n {
                    for b in 0..n {
                        add[a * n + b] = self.add(a, b) as u16;
                        mul[a * n + b] = self.mul(a, b) as u16;
                    }
                }
                let labels = (0..n).map(|a| self.label(a)).collect();
                RingTable::from_raw(add, mul, self.zero(), self.one(), labels)
            }
        }
    }

    /// Looks an element up by its display label.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        (0..self.order()).find(|&a| self.label(a) == label)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }
}

/// Exhaustive axiom check of any ring object (products are checked through
/// their componentwise operations).
pub fn axiom_check(ring: &RingObject) -> AxiomReport {
    match ring.to_table() {
        Ok(t) => t.check_axioms(),
        Err(_) => AxiomReport {
            violations: vec![AxiomViolation::DuplicateLabels],
        },
    }
}

/// `{ r : r*s = 0 for all s in subset }`, returned sorted.
///
/// Always contains 0 and is an ideal of the ring.
pub fn annihilator(ring: &RingObject, subset: &[usize]) -> Result<Vec<usize>, RingError> {
    if subset.is_empty() {
        return Err(RingError::EmptySet);
    }
    let zero = ring.zero();
    Ok((0..ring.order())
        .filter(|&r| subset.iter().all(|&s| ring.mul(r, s) == zero))
        .collect())
}

/// Units, zero-divisors (including 0, per the usual convention for
/// non-domains), and nilpotents of a finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClasses {
    pub units: Vec<usize>,
    pub zero_divisors: Vec<usize>,
    pub nilpotents: Vec<usize>,
}

impl ElementClasses {
    /// Nonzero zero-divisors, i.e. the vertex set of the annihilator graph.
    pub fn nonzero_zero_divisors(&self, ring: &RingObject) -> Vec<usize> {
        let zero = ring.zero();
        self.zero_divisors
            .iter()
            .copied()
            .filter(|&a| a != zero)
            .collect()
    }
}

pub fn element_classes(ring: &RingObject) -> ElementClasses {
    let n = ring.order();
    let zero = ring.zero();
    let one = ring.one();
    let mut units = Vec::new();
    let mut zero_divisors = Vec::new();
    let mut nilpotents = Vec::new();
    for a in 0..n {
        if (0..n).any(|b| ring.mul(a, b) == one) {
            units.push(a);
        } else {
            // In a finite commutative ring every non-unit is a zero-divisor.
            zero_divisors.push(a);
        }
        let mut x = a;
        let mut nil = x == zero;
        for _ in 0..n {
            if nil {
                break;
            }
            x = ring.mul(x, a);
            nil = x == zero;
        }
        if nil {
            nilpotents.push(a);
        }
    }
    ElementClasses {
        units,
        zero_divisors,
        nilpotents,
    }
}

/// All minimal nonzero idempotents. They are pairwise orthogonal and sum
/// to 1; the ring is local exactly when this set is `{1}`.
pub fn primitive_idempotents(ring: &RingObject) -> Vec<usize> {
    let n = ring.order();
    let zero = ring.zero();
    let idempotents: Vec<usize> = (0..n)
        .filter(|&e| e != zero && ring.mul(e, e) == e)
        .collect();
    idempotents
        .iter()
        .copied()
        .filter(|&e| {
            // e is primitive iff no smaller nonzero idempotent divides it.
            !idempotents.iter().any(|&f| f != e && ring.mul(f, e) == f)
        })
        .collect()
}

/// One local factor `eR` of the idempotent decomposition, with the embedding
/// of its elements back into the parent ring.
#[derive(Debug, Clone)]
pub struct LocalFactor {
    pub ring: RingObject,
    /// `embedding[i]` is the parent element realizing factor element `i`.
    pub embedding: Vec<usize>,
    pub idempotent: usize,
    /// Number of non-units of the factor (the order of its maximal ideal).
    pub maximal_ideal_order: usize,
}

/// Decomposes a finite commutative ring into local factors `eR`, one per
/// primitive idempotent `e`. The factor orders multiply to the ring order.
pub fn local_decomposition(ring: &RingObject) -> Vec<LocalFactor> {
    let idems = primitive_idempotents(ring);
    let n = ring.order();
    let mut factors = Vec::with_capacity(idems.len());
    for &e in &idems {
        let mut elems: Vec<usize> = (0..n).map(|r| ring.mul(e, r)).collect();
        elems.sort_unstable();
        elems.dedup();
        let m = elems.len();
        let index_of = |x: usize| elems.binary_search(&x).expect("closed under e*");
        let mut add = vec![0u16; m * m];
        let mut mul = vec![0u16; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                add[i * m + j] = index_of(ring.add(a, b)) as u16;
                mul[i * m + j] = index_of(ring.mul(a, b)) as u16;
            }
        }
        let labels = elems.iter().map(|&a| ring.label(a)).collect();
        let table = RingTable::from_raw(add, mul, index_of(ring.zero()), index_of(e), labels)
            .expect("factor of a verified ring");
        let factor = RingObject::Table(table);
        let classes = element_classes(&factor);
        let maximal_ideal_order = classes.zero_divisors.len();
        factors.push(LocalFactor {
            ring: factor,
            embedding: elems,
            idempotent: e,
            maximal_ideal_order,
        });
    }
    factors
}

/// Structural predicates of a finite commutative ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_field: bool,
    pub is_local: bool,
    pub is_reduced: bool,
    /// Orders of the minimal prime ideals, ascending. In a finite ring the
    /// minimal primes are the preimages of the maximal ideals of the local
    /// factors, so each has order `(|R| / |R_i|) * |m_i|`.
    pub minimal_prime_orders: Vec<usize>,
}

pub fn structure_predicates(ring: &RingObject) -> StructureReport {
    let classes = element_classes(ring);
    let zero = ring.zero();
    let is_reduced = classes.nilpotents == vec![zero];
    let is_field = classes.zero_divisors == vec![zero];
    let factors = local_decomposition(ring);
    let is_local = factors.len() == 1;
    let n = ring.order();
    let mut minimal_prime_orders: Vec<usize> = factors
        .iter()
        .map(|f| (n / f.ring.order()) * f.maximal_ideal_order.max(1))
        .collect();
    minimal_prime_orders.sort_unstable();
    StructureReport {
        is_field,
        is_local,
        is_reduced,
        minimal_prime_orders,
    }
}

/// `Ann(Z(R))`: the elements annihilating every zero-divisor.
pub fn annihilator_of_zero_divisors(ring: &RingObject) -> Vec<usize> {
    let classes = element_classes(ring);
    annihilator(ring, &classes.zero_divisors).expect("Z(R) contains 0")
}

/// Tests whether a (proper) ideal given as an element set is prime:
/// `ab ∈ I` implies `a ∈ I` or `b ∈ I`.
pub fn is_prime_ideal(ring: &RingObject, ideal: &[usize]) -> bool {
    let n = ring.order();
    if ideal.len() == n {
        return false;
    }
    let mut member = vec![false; n];
    for &a in ideal {
        member[a] = true;
    }
    for a in 0..n {
        if member[a] {
            continue;
        }
        for b in a..n {
            if member[b] {
                continue;
            }
            if member[ring.mul(a, b)] {
                return false;
            }
        }
    }
    true
}
