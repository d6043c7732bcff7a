//! Quotient rings `Z_m[x_1,...,x_k] / (relations)` via oriented rewrite
//! rules.
//!
//! Each relation is oriented as either a monic rule `monomial -> lower
//! polynomial` or a coefficient rule `c * monomial -> 0`. Basis monomials are
//! those not reducible by any monic rule's leading monomial, per-monomial
//! additive orders come from the coefficient rules, and structure constants
//! are computed by rewriting products to a normal form. The presentation is
//! then proved consistent at the basis level (associativity of the structure
//! constants), expanded to a table, and axiom-checked for small orders.
//! Non-confluent presentations are reported, never silently accepted.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::{RingError, RingObject, RingTable, INLINE_AXIOM_CHECK_LIMIT, MAX_RING_ORDER};

/// Exponent vector over the declared variables.
pub type Monomial = Vec<u32>;

/// A relation polynomial: coefficient map from exponent vectors to signed
/// integers (reduced modulo the characteristic at elaboration).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPoly(pub BTreeMap<Monomial, i64>);

impl QuotientPoly {
    pub fn constant(c: i64) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Vec::new(), c);
        QuotientPoly(m)
    }
}

/// Degree-then-lex order with the first declared variable most significant.
fn mono_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn mono_divides(lead: &[u32], m: &[u32]) -> bool {
    lead.iter().zip(m).all(|(l, e)| l <= e)
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(m: &[u32], lead: &[u32]) -> Monomial {
    m.iter().zip(lead).map(|(e, l)| e - l).collect()
}

fn is_pure_power(m: &[u32]) -> bool {
    m.iter().filter(|&&e| e > 0).count() == 1
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `monomial -> rest` with the implicit coefficient 1 on the left.
#[derive(Debug, Clone)]
struct MonicRule {
    lead: Monomial,
    rest: BTreeMap<Monomial, u64>,
}

/// `c * monomial -> 0`.
#[derive(Debug, Clone)]
struct CoeffRule {
    lead: Monomial,
    c: u64,
}

/// A ring presented by basis monomials, per-monomial additive orders, and
/// structure constants. `basis[0]` is the constant monomial 1.
#[derive(Debug, Clone)]
pub struct BasisPresentation {
    pub char_modulus: u64,
    pub vars: Vec<String>,
    pub basis: Vec<Monomial>,
    pub moduli: Vec<u64>,
    /// `structure[i][j]` expresses `basis[i] * basis[j]` in the basis; each
    /// coefficient is reduced modulo the modulus of its monomial.
    pub structure: Vec<Vec<Vec<u64>>>,
}

struct Rewriter {
    char_modulus: u64,
    monic: Vec<MonicRule>,
    coeff: Vec<CoeffRule>,
    budget: usize,
}

impl Rewriter {
    /// Normal form of a polynomial under the rule set.
    fn reduce(
        &mut self,
        poly: &BTreeMap<Monomial, u64>,
    ) -> Result<BTreeMap<Monomial, u64>, RingError> {
        let mut cur: BTreeMap<Monomial, u64> = poly
            .iter()
            .filter_map(|(m, &c)| {
                let c = c % self.char_modulus;
                (c != 0).then(|| (m.clone(), c))
            })
            .collect();
        loop {
            if self.budget == 0 {
                return Err(RingError::PresentationNotConfluent(
                    "rewrite budget exceeded".into(),
                ));
            }
            self.budget -= 1;
            // pick the greatest reducible term
            let mut target: Option<(Monomial, u64, Step)> = None;
            for (m, &c) in cur.iter().rev() {
                let step = self.step_for(m, c);
                if let Some(step) = step {
                    match &target {
                        Some((tm, _, _)) if mono_cmp(tm, m) != Ordering::Less => {}
                        _ => target = Some((m.clone(), c, step)),
                    }
                }
            }
            let Some((m, c, step)) = target else {
                return Ok(cur);
            };
            match step {
                Step::Monic(idx) => {
                    let rule = self.monic[idx].clone();
                    let q = mono_div(&m, &rule.lead);
                    cur.remove(&m);
                    for (rm, rc) in &rule.rest {
                        let nm = mono_mul(rm, &q);
                        let add = (c * rc) % self.char_modulus;
                        let entry = cur.entry(nm).or_insert(0);
                        *entry = (*entry + add) % self.char_modulus;
                    }
                    cur.retain(|_, v| *v != 0);
                }
                Step::Coeff(g) => {
                    let nc = c % g;
                    if nc == 0 {
                        cur.remove(&m);
                    } else {
                        cur.insert(m, nc);
                    }
                }
            }
        }
    }

    fn step_for(&self, m: &Monomial, c: u64) -> Option<Step> {
        for (i, r) in self.monic.iter().enumerate() {
            if mono_divides(&r.lead, m) {
                return Some(Step::Monic(i));
            }
        }
        let g = self.modulus_of(m);
        (c >= g).then_some(Step::Coeff(g))
    }

    /// Additive order of a monomial: the characteristic, cut down by every
    /// coefficient rule whose monomial divides it.
    fn modulus_of(&self, m: &[u32]) -> u64 {
        let mut g = self.char_modulus;
        for r in &self.coeff {
            if mono_divides(&r.lead, m) {
                g = gcd(g, r.c);
            }
        }
        g
    }
}

enum Step {
    Monic(usize),
    Coeff(u64),
}

/// Builds the basis presentation for `Z_char[vars]/(relations)` without
/// expanding it to a table.
pub fn quotient_presentation(
    char_modulus: u64,
    vars: &[String],
    relations: &[QuotientPoly],
) -> Result<BasisPresentation, RingError> {
    if char_modulus < 2 {
        return Err(RingError::InvalidOrder);
    }
    if vars.is_empty() {
        return Err(RingError::InvalidArgument(
            "a quotient needs at least one variable".into(),
        ));
    }
    {
        let mut names = vars.to_vec();
        names.sort();
        names.dedup();
        if names.len() != vars.len() {
            return Err(RingError::InvalidArgument(
                "duplicate variable names".into(),
            ));
        }
    }
    let nv = vars.len();
    for rel in relations {
        for m in rel.0.keys() {
            if m.len() != nv {
                return Err(RingError::InvalidArgument(
                    "relation monomial arity does not match the variable list".into(),
                ));
            }
        }
    }

    // The characteristic may collapse when relations force a constant to
    // vanish; restart with the reduced characteristic when that happens.
    let mut ch = char_modulus;
    'restart: loop {
        match build_with_char(ch, vars, relations)? {
            BuildOutcome::Done(p) => return Ok(p),
            BuildOutcome::CollapseChar(c) => {
                let g = gcd(ch, c);
                if g <= 1 {
                    return Err(RingError::TrivialRing);
                }
                if g == ch {
                    return Err(RingError::PresentationNotConfluent(
                        "characteristic collapse loop".into(),
                    ));
                }
                ch = g;
                continue 'restart;
            }
        }
    }
}

enum BuildOutcome {
    Done(BasisPresentation),
    CollapseChar(u64),
}

fn build_with_char(
    ch: u64,
    vars: &[String],
    relations: &[QuotientPoly],
) -> Result<BuildOutcome, RingError> {
    let nv = vars.len();
    let mut rw = Rewriter {
        char_modulus: ch,
        monic: Vec::new(),
        coeff: Vec::new(),
        budget: 200_000,
    };

    for rel in relations {
        // signed coefficients reduced into [0, ch)
        let raw: BTreeMap<Monomial, u64> = rel
            .0
            .iter()
            .filter_map(|(m, &c)| {
                let c = c.rem_euclid(ch as i64) as u64;
                (c != 0).then(|| (m.clone(), c))
            })
            .collect();
        // reduce by the rules collected so far, so later relations see the
        // earlier ones (handles e.g. the pair x, x+1)
        let reduced = rw.reduce(&raw)?;
        if reduced.is_empty() {
            continue;
        }
        // orientation: among the monomials of maximal total degree prefer a
        // pure power, then the degree-lex greatest
        let lead = reduced
            .keys()
            .max_by(|a, b| {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db)
                    .then_with(|| is_pure_power(a).cmp(&is_pure_power(b)))
                    .then_with(|| a.cmp(b))
            })
            .expect("nonempty")
            .clone();
        let c = reduced[&lead];
        if lead.iter().all(|&e| e == 0) {
            // constant relation: the characteristic collapses
            return Ok(BuildOutcome::CollapseChar(c));
        }
        if gcd(c, ch) == 1 {
            // invertible leading coefficient: normalize to a monic rule
            let inv = mod_inverse(c, ch).expect("coprime");
            let rest: BTreeMap<Monomial, u64> = reduced
                .iter()
                .filter(|(m, _)| **m != lead)
                .map(|(m, &k)| (m.clone(), (ch - (k * inv) % ch) % ch))
                .filter(|(_, k)| *k != 0)
                .collect();
            rw.monic.push(MonicRule { lead, rest });
        } else {
            let g = gcd(c, ch);
            let rest: BTreeMap<Monomial, u64> = reduced
                .iter()
                .filter(|(m, _)| **m != lead)
                .map(|(m, &k)| (m.clone(), k))
                .collect();
            if !rest.is_empty() {
                return Err(RingError::PresentationNotConfluent(format!(
                    "coefficient relation {}*{} has a nonzero remainder; only c*monomial = 0 \
                     rules are supported",
                    c,
                    mono_display(&lead, vars)
                )));
            }
            rw.coeff.push(CoeffRule { lead, c: g });
        }
    }

    // every variable needs a bounding pure-power monic rule
    let mut bounds = vec![0u32; nv];
    for (i, bound) in bounds.iter_mut().enumerate() {
        let mut best: Option<u32> = None;
        for r in &rw.monic {
            if is_pure_power(&r.lead) && r.lead[i] > 0 {
                best = Some(best.map_or(r.lead[i], |b: u32| b.min(r.lead[i])));
            }
        }
        match best {
            Some(b) => *bound = b,
            None => return Err(RingError::NonFiniteQuotient(vars[i].clone())),
        }
    }

    // enumerate basis monomials, smallest-first
    let mut basis: Vec<Monomial> = Vec::new();
    let mut stack = vec![vec![0u32; 0]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == nv {
            if !rw.monic.iter().any(|r| mono_divides(&r.lead, &prefix)) {
                basis.push(prefix);
                if basis.len() > MAX_RING_ORDER {
                    return Err(RingError::OrderLimitExceeded(basis.len()));
                }
            }
            continue;
        }
        let i = prefix.len();
        for e in (0..bounds[i]).rev() {
            let mut next = prefix.clone();
            next.push(e);
            stack.push(next);
        }
    }
    basis.sort_by(|a, b| mono_cmp(a, b));
    debug_assert!(basis[0].iter().all(|&e| e == 0));

    // per-monomial additive orders; a collapsed constant restarts the build,
    // a collapsed monomial becomes a new monic rule m -> 0
    let mut moduli: Vec<u64> = basis.iter().map(|m| rw.modulus_of(m)).collect();
    loop {
        if moduli[0] < ch {
            return Ok(BuildOutcome::CollapseChar(moduli[0]));
        }
        match moduli.iter().position(|&m| m == 1) {
            None => break,
            Some(pos) => {
                let dead = basis[pos].clone();
                rw.monic.push(MonicRule {
                    lead: dead,
                    rest: BTreeMap::new(),
                });
                basis.retain(|m| !rw.monic.iter().any(|r| mono_divides(&r.lead, m)));
                moduli = basis.iter().map(|m| rw.modulus_of(m)).collect();
            }
        }
    }

    let mut order: u64 = 1;
    for &m in &moduli {
        order = order.saturating_mul(m);
        if order > MAX_RING_ORDER as u64 {
            return Err(RingError::OrderLimitExceeded(order as usize));
        }
    }
    if order == 1 {
        return Err(RingError::TrivialRing);
    }

    // structure constants by rewriting basis products to normal form
    let index_of: BTreeMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let nb = basis.len();
    let mut structure = vec![vec![Vec::new(); nb]; nb];
    for i in 0..nb {
        for j in 0..nb {
            let prod = mono_mul(&basis[i], &basis[j]);
            let mut start = BTreeMap::new();
            start.insert(prod, 1u64);
            let nf = rw.reduce(&start)?;
            let mut vec = vec![0u64; nb];
            for (m, c) in nf {
                match index_of.get(&m) {
                    Some(&k) => vec[k] = c % moduli[k],
                    None => {
                        return Err(RingError::PresentationNotConfluent(format!(
                            "normal form of {} * {} contains the non-basis monomial {}",
                            mono_display(&basis[i], vars),
                            mono_display(&basis[j], vars),
                            mono_display(&m, vars)
                        )))
                    }
                }
            }
            structure[i][j] = vec;
        }
    }

    // verify every original relation now rewrites to zero
    for rel in relations {
        let raw: BTreeMap<Monomial, u64> = rel
            .0
            .iter()
            .filter_map(|(m, &c)| {
                let c = c.rem_euclid(ch as i64) as u64;
                (c != 0).then(|| (m.clone(), c))
            })
            .collect();
        let nf = rw.reduce(&raw)?;
        // coefficient-normalize against the basis moduli before judging
        let nonzero = nf.iter().any(|(m, &c)| match index_of.get(m) {
            Some(&k) => c % moduli[k] != 0,
            None => true,
        });
        if nonzero {
            if nf.keys().all(|m| m.iter().all(|&e| e == 0)) {
                let c = nf.values().next().copied().unwrap_or(0);
                return Ok(BuildOutcome::CollapseChar(c));
            }
            return Err(RingError::PresentationNotConfluent(format!(
                "relation does not reduce to zero under the oriented rules: residue {}",
                poly_display(&nf, vars)
            )));
        }
    }

    let presentation = BasisPresentation {
        char_modulus: ch,
        vars: vars.to_vec(),
        basis,
        moduli,
        structure,
    };
    presentation.verify_basis_level()?;
    Ok(BuildOutcome::Done(presentation))
}

impl BasisPresentation {
    /// Number of elements of the expanded ring.
    pub fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    fn vec_add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect()
    }

    fn vec_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let nb = self.basis.len();
        let mut out = vec![0u64; nb];
        for i in 0..nb {
            if a[i] == 0 {
                continue;
            }
            for j in 0..nb {
                if b[j] == 0 {
                    continue;
                }
                let scale = (a[i] * b[j]) % self.char_modulus;
                for (k, &c) in self.structure[i][j].iter().enumerate() {
                    if c != 0 {
                        out[k] = (out[k] + scale * c) % self.moduli[k];
                    }
                }
            }
        }
        out
    }

    /// Basis-level consistency: symmetry, the unit row, and associativity of
    /// the structure constants. Multiplication is the bilinear extension of
    /// the structure constants, so these checks prove the expanded table is a
    /// commutative ring.
    fn verify_basis_level(&self) -> Result<(), RingError> {
        let nb = self.basis.len();
        for j in 0..nb {
            let mut unit = vec![0u64; nb];
            unit[j] = 1 % self.moduli[j];
            if self.structure[0][j] != unit {
                return Err(RingError::PresentationNotConfluent(format!(
                    "1 * {} is not {}",
                    mono_display(&self.basis[j], &self.vars),
                    mono_display(&self.basis[j], &self.vars)
                )));
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                if self.structure[i][j] != self.structure[j][i] {
                    return Err(RingError::PresentationNotConfluent(
                        "structure constants are not symmetric".into(),
                    ));
                }
            }
        }
        let unit_vec = |k: usize| {
            let mut v = vec![0u64; nb];
            v[k] = 1 % self.moduli[k];
            v
        };
        for i in 0..nb {
            for j in 0..nb {
                let ij = self.structure[i][j].clone();
                for k in 0..nb {
                    let left = self.vec_mul(&ij, &unit_vec(k));
                    let right = self.vec_mul(&unit_vec(i), &self.structure[j][k]);
                    if left != right {
                        return Err(RingError::PresentationNotConfluent(format!(
                            "associativity fails on basis monomials {} {} {}",
                            mono_display(&self.basis[i], &self.vars),
                            mono_display(&self.basis[j], &self.vars),
                            mono_display(&self.basis[k], &self.vars)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Expands to an explicit table. Element index is mixed-radix over the
    /// moduli with the constant coefficient most significant, so the pure
    /// constants `0, 1, 2, ...` come first.
    pub fn expand(&self) -> Result<RingTable, RingError> {
        let n = self.order();
        if n > MAX_RING_ORDER {
            return Err(RingError::OrderLimitExceeded(n));
        }
        if n < 2 {
            return Err(RingError::TrivialRing);
        }
        let nb = self.basis.len();
        let decode = |mut idx: usize| -> Vec<u64> {
            let mut v = vec![0u64; nb];
            for k in (0..nb).rev() {
                let m = self.moduli[k] as usize;
                v[k] = (idx % m) as u64;
                idx /= m;
            }
            v
        };
        let encode = |v: &[u64]| -> usize {
            let mut idx = 0usize;
            for k in 0..nb {
                idx = idx * self.moduli[k] as usize + v[k] as usize;
            }
            idx
        };
        let vectors: Vec<Vec<u64>> = (0..n).map(decode).collect();
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = encode(&self.vec_add(&vectors[a], &vectors[b])) as u16;
                mul[a * n + b] = encode(&self.vec_mul(&vectors[a], &vectors[b])) as u16;
            }
        }
        let labels: Vec<String> = vectors.iter().map(|v| self.label_of(v)).collect();
        let one = {
            let mut v = vec![0u64; nb];
            v[0] = 1;
            encode(&v)
        };
        let table = RingTable::from_raw(add, mul, 0, one, labels)?;
        if n <= INLINE_AXIOM_CHECK_LIMIT {
            let report = table.check_axioms();
            if !report.is_empty() {
                return Err(RingError::PresentationNotConfluent(format!(
                    "expanded table violates ring axioms: {:?}",
                    report.violations[0]
                )));
            }
        }
        Ok(table)
    }

    /// Display label of a coefficient vector, e.g. `"2+2x"` or `"x*y"`.
    pub fn label_of(&self, v: &[u64]) -> String {
        let mut terms = Vec::new();
        for (k, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = mono_display(&self.basis[k], &self.vars);
            if mono == "1" {
                terms.push(c.to_string());
            } else if c == 1 {
                terms.push(mono);
            } else {
                terms.push(format!("{c}{mono}"));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn mono_display(m: &[u32], vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn poly_display(p: &BTreeMap<Monomial, u64>, vars: &[String]) -> String {
    let terms: Vec<String> = p
        .iter()
        .map(|(m, c)| format!("{}*{}", c, mono_display(m, vars)))
        .collect();
    terms.join(" + ")
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    (r == 1).then(|| t.rem_euclid(m as i64) as u64)
}

/// Constructs and verifies `Z_char[vars]/(relations)`.
pub fn make_quotient(
    char_modulus: u64,
    vars: &[String],
    relations: &[QuotientPoly],
) -> Result<RingObject, RingError> {
    let presentation = quotient_presentation(char_modulus, vars, relations)?;
    Ok(RingObject::Table(presentation.expand()?))
}
