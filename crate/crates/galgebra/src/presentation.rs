//! G-algebra presentations and the straightening product.
//!
//! A presentation fixes variables, a coefficient field, a global
//! monomial order and, for every pair i < j, a relation
//! `x_j x_i = c_ij x_i x_j + d_ij` with nonzero scalar `c_ij` and a tail
//! `d_ij` whose leading monomial lies below `x_i x_j`. Products are
//! computed by straightening the leftmost inversion against this table;
//! straightened generator-power pairs are memoized per presentation.

use crate::coeff::{Coefficient, FieldSpec};
use crate::exponent::ExpVec;
use crate::order::MonomialOrder;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub(crate) type TermList = Vec<(Coefficient, ExpVec)>;

/// One straightening relation `x_j x_i = scalar * x_i x_j + tail`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub scalar: Coefficient,
    pub tail: TermList,
}

/// Declared Weyl pairing: for each `(x, d)` pair the relation is
/// `d x = x d + 1` and everything else between the two blocks commutes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylStructure {
    pub pairs: Vec<(usize, usize)>,
}

impl WeylStructure {
    pub fn x_block(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(x, _)| x).collect()
    }

    pub fn d_block(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(_, d)| d).collect()
    }
}

/// Sparse relation entry used when describing a presentation; pairs not
/// mentioned commute.
#[derive(Clone, Debug)]
pub struct RelationInput {
    pub i: usize,
    pub j: usize,
    pub scalar: Coefficient,
    pub tail: Vec<(Coefficient, ExpVec)>,
}

/// Raw description of a presentation, prior to validation.
#[derive(Clone, Debug)]
pub struct PresentationData {
    pub var_names: Vec<String>,
    pub field: FieldSpec,
    pub order: MonomialOrder,
    pub relations: Vec<RelationInput>,
    pub weyl: Option<WeylStructure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroScalar { i: usize, j: usize },
    TailNotSmaller { i: usize, j: usize },
    AssociativityFailure { i: usize, j: usize, k: usize },
    BadWeylStructure { reason: String },
    BadRelationIndex { i: usize, j: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ZeroScalar { i, j } => write!(f, "zero scalar c[{},{}]", i, j),
            Violation::TailNotSmaller { i, j } => write!(
                f,
                "leading monomial of d[{},{}] is not smaller than x_{}*x_{}",
                i, j, i, j
            ),
            Violation::AssociativityFailure { i, j, k } => write!(
                f,
                "associativity probe failed on generators ({}, {}, {})",
                i, j, k
            ),
            Violation::BadWeylStructure { reason } => {
                write!(f, "declared Weyl structure invalid: {}", reason)
            }
            Violation::BadRelationIndex { i, j } => {
                write!(f, "relation index ({}, {}) out of range or not i < j", i, j)
            }
        }
    }
}

/// Outcome of validating a presentation; failures are collected, not
/// thrown.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            write!(f, "valid presentation")
        } else {
            let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", msgs.join("; "))
        }
    }
}

/// A validated G-algebra presentation. Elements hold an `Arc` to their
/// presentation; all operations are pure and the internal straightening
/// cache is synchronized.
pub struct GAlgebra {
    var_names: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
    // dense upper-triangular table, entry for i < j at tri_index(i, j)
    relations: Vec<Relation>,
    weyl: Option<WeylStructure>,
    straighten_cache: Mutex<HashMap<(usize, usize, u32, u32), Arc<TermList>>>,
}

impl std::fmt::Debug for GAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GAlgebra")
            .field("vars", &self.var_names)
            .field("field", &self.field)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for GAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.var_names == other.var_names
            && self.field == other.field
            && self.order == other.order
            && self.relations == other.relations
            && self.weyl == other.weyl
    }
}

fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // offset of row i in the packed strictly-upper-triangular table
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl GAlgebra {
    /// Validate raw presentation data, reporting every violated
    /// condition.
    pub fn validate(data: &PresentationData) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = data.var_names.len();
        for r in &data.relations {
            if !(r.i < r.j && r.j < n) {
                report
                    .violations
                    .push(Violation::BadRelationIndex { i: r.i, j: r.j });
            }
        }
        if !report.is_valid() {
            return report;
        }
        let alg = Self::build_unchecked(data);
        for i in 0..n {
            for j in (i + 1)..n {
                let rel = alg.relation(i, j);
                if rel.scalar.is_zero() {
                    report.violations.push(Violation::ZeroScalar { i, j });
                    continue;
                }
                if let Some((_, lm)) = rel.tail.first() {
                    let xixj = ExpVec::var(i, n).add(&ExpVec::var(j, n));
                    if alg.order.cmp(lm, &xixj) != std::cmp::Ordering::Less {
                        report.violations.push(Violation::TailNotSmaller { i, j });
                    }
                }
            }
        }
        if !report.is_valid() {
            return report;
        }
        // PBW probe: associativity on all generator triples k > j > i.
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let xi = vec![(alg.field.one(), ExpVec::var(i, n))];
                    let xj = vec![(alg.field.one(), ExpVec::var(j, n))];
                    let xk = vec![(alg.field.one(), ExpVec::var(k, n))];
                    let left = alg.mul_terms(&alg.mul_terms(&xk, &xj), &xi);
                    let right = alg.mul_terms(&xk, &alg.mul_terms(&xj, &xi));
                    if left != right {
                        report
                            .violations
                            .push(Violation::AssociativityFailure { i, j, k });
                    }
                }
            }
        }
        if let Some(w) = &data.weyl {
            if let Err(reason) = alg.check_weyl(w) {
                report
                    .violations
                    .push(Violation::BadWeylStructure { reason });
            }
        }
        report
    }

    /// Validate and construct. On failure the report carries every
    /// violated condition.
    pub fn new(data: PresentationData) -> Result<Arc<GAlgebra>, ValidationReport> {
        let report = Self::validate(&data);
        if report.is_valid() {
            Ok(Arc::new(Self::build_unchecked(&data)))
        } else {
            Err(report)
        }
    }

    fn build_unchecked(data: &PresentationData) -> GAlgebra {
        let n = data.var_names.len();
        let one = data.field.one();
        let mut relations = vec![
            Relation {
                scalar: one,
                tail: Vec::new(),
            };
            n * n.saturating_sub(1) / 2
        ];
        let order = data.order.clone();
        for r in &data.relations {
            let mut tail = r.tail.clone();
            tail.retain(|(c, _)| !c.is_zero());
            tail.sort_by(|(_, a), (_, b)| order.cmp(b, a));
            // merge duplicates
            let mut merged: TermList = Vec::with_capacity(tail.len());
            for (c, e) in tail {
                if let Some((lc, le)) = merged.last_mut() {
                    if *le == e {
                        *lc = lc.add(&c);
                        if lc.is_zero() {
                            merged.pop();
                        }
                        continue;
                    }
                }
                merged.push((c, e));
            }
            relations[tri_index(n, r.i, r.j)] = Relation {
                scalar: r.scalar.clone(),
                tail: merged,
            };
        }
        GAlgebra {
            var_names: data.var_names.clone(),
            field: data.field.clone(),
            order,
            relations,
            weyl: data.weyl.clone(),
            straighten_cache: Mutex::new(HashMap::new()),
        }
    }

    fn check_weyl(&self, w: &WeylStructure) -> Result<(), String> {
        let n = self.nvars();
        let mut seen = vec![false; n];
        for &(x, d) in &w.pairs {
            if x >= n || d >= n || x == d {
                return Err("pair indices out of range".into());
            }
            if seen[x] || seen[d] {
                return Err("variable used in two pairs".into());
            }
            seen[x] = true;
            seen[d] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err("pairs do not cover all variables".into());
        }
        let one = self.field.one();
        for (a, &(x1, d1)) in w.pairs.iter().enumerate() {
            for &(x2, d2) in w.pairs.iter().skip(a + 1) {
                for (u, v) in [(x1, x2), (d1, d2), (x1, d2), (x2, d1)] {
                    let (i, j) = if u < v { (u, v) } else { (v, u) };
                    if !self.pair_is_trivial(i, j) {
                        return Err(format!(
                            "variables {} and {} must commute",
                            self.var_names[i], self.var_names[j]
                        ));
                    }
                }
            }
            // the canonical relation d x = x d + 1
            let (i, j, expected_sign) = if x1 < d1 { (x1, d1, 1) } else { (d1, x1, -1) };
            let rel = self.relation(i, j);
            let expected_tail = vec![(
                self.field.from_integer(expected_sign),
                ExpVec::zero(n),
            )];
            if !(rel.scalar == one && rel.tail == expected_tail) {
                return Err(format!(
                    "relation between {} and {} is not the Weyl relation",
                    self.var_names[x1], self.var_names[d1]
                ));
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn weyl_structure(&self) -> Option<&WeylStructure> {
        self.weyl.as_ref()
    }

    pub fn is_weyl_type(&self) -> bool {
        self.weyl.is_some()
    }

    pub fn relation(&self, i: usize, j: usize) -> &Relation {
        &self.relations[tri_index(self.nvars(), i, j)]
    }

    /// True when `x_i` and `x_j` commute with a trivial relation.
    pub fn pair_is_trivial(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let rel = self.relation(i, j);
        rel.scalar.is_one() && rel.tail.is_empty()
    }

    /// A copy of this presentation equipped with a different order.
    /// The caller must re-check the straightening condition; see the
    /// elimination machinery.
    pub fn with_order(&self, order: MonomialOrder) -> PresentationData {
        let n = self.nvars();
        let mut relations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let r = self.relation(i, j);
                if !(r.scalar.is_one() && r.tail.is_empty()) {
                    relations.push(RelationInput {
                        i,
                        j,
                        scalar: r.scalar.clone(),
                        tail: r.tail.clone(),
                    });
                }
            }
        }
        PresentationData {
            var_names: self.var_names.clone(),
            field: self.field.clone(),
            order,
            relations,
            weyl: self.weyl.clone(),
        }
    }

    // ---- straightening product on raw term lists ----

    pub(crate) fn add_terms(&self, a: &TermList, b: &TermList) -> TermList {
        let mut out: TermList = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].1, &b[j].1) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].0.add(&b[j].0);
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        out
    }

    pub(crate) fn scale_terms(&self, t: &TermList, c: &Coefficient) -> TermList {
        if c.is_zero() {
            return Vec::new();
        }
        t.iter().map(|(d, e)| (c.mul(d), e.clone())).collect()
    }

    pub(crate) fn mul_terms(&self, a: &TermList, b: &TermList) -> TermList {
        let mut acc: TermList = Vec::new();
        for (ca, ea) in a {
            for (cb, eb) in b {
                let prod = self.mul_mono(ea, eb);
                let c = ca.mul(cb);
                acc = self.add_terms(&acc, &self.scale_terms(&prod, &c));
            }
        }
        acc
    }

    /// Product of two basis monomials, straightened into the PBW basis.
    fn mul_mono(&self, alpha: &ExpVec, beta: &ExpVec) -> TermList {
        let j = match alpha.max_support() {
            Some(j) => j,
            None => return vec![(self.field.one(), beta.clone())],
        };
        let i = match beta.min_support() {
            Some(i) => i,
            None => return vec![(self.field.one(), alpha.clone())],
        };
        if j <= i {
            return vec![(self.field.one(), alpha.add(beta))];
        }
        // x^alpha x^beta = x^{alpha''} (x_j^a x_i^b) x^{beta''}
        let a = alpha.get(j);
        let b = beta.get(i);
        let mut alpha_rest = alpha.clone();
        alpha_rest.set(j, 0);
        let mut beta_rest = beta.clone();
        beta_rest.set(i, 0);
        let mid = self.pow_pair(j, a, i, b);
        let mut acc: TermList = Vec::new();
        for (c, gamma) in mid.iter() {
            let left = if alpha_rest.is_zero() {
                vec![(self.field.one(), gamma.clone())]
            } else {
                self.mul_mono(&alpha_rest, gamma)
            };
            for (c2, delta) in left {
                let full = if beta_rest.is_zero() {
                    vec![(self.field.one(), delta)]
                } else {
                    self.mul_mono(&delta, &beta_rest)
                };
                let coeff = c.mul(&c2);
                acc = self.add_terms(&acc, &self.scale_terms(&full, &coeff));
            }
        }
        acc
    }

    /// The straightened form of `x_j^a x_i^b` with `j > i`, memoized.
    fn pow_pair(&self, j: usize, a: u32, i: usize, b: u32) -> Arc<TermList> {
        debug_assert!(j > i && a >= 1 && b >= 1);
        let key = (j, i, a, b);
        if let Some(hit) = self.straighten_cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let n = self.nvars();
        let result = if a == 1 && b == 1 {
            let rel = self.relation(i, j);
            let lead = (rel.scalar.clone(), ExpVec::var(i, n).add(&ExpVec::var(j, n)));
            let mut t = rel.tail.clone();
            t = self.add_terms(&t, &vec![lead]);
            t
        } else if b > 1 {
            let prev = self.pow_pair(j, a, i, b - 1);
            let xi = vec![(self.field.one(), ExpVec::var(i, n))];
            self.mul_terms(&prev, &xi)
        } else {
            let base = self.pow_pair(j, 1, i, 1);
            let mut e = ExpVec::zero(n);
            e.set(j, a - 1);
            let xj_pow = vec![(self.field.one(), e)];
            self.mul_terms(&xj_pow, &base)
        };
        let arc = Arc::new(result);
        self.straighten_cache
            .lock()
            .unwrap()
            .insert(key, arc.clone());
        arc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn tri_index_is_a_bijection() {
        let n = 5;
        let mut seen = std::collections::HashSet::new();
        for i in 0..n {
            for j in (i + 1)..n {
                assert!(seen.insert(tri_index(n, i, j)));
            }
        }
        assert_eq!(seen.len(), n * (n - 1) / 2);
        assert_eq!(seen.iter().max(), Some(&(n * (n - 1) / 2 - 1)));
    }

    #[test]
    fn weyl_presentation_is_valid() {
        let a1 = zoo::weyl_algebra(1);
        assert!(a1.is_weyl_type());
        assert_eq!(a1.nvars(), 2);
    }

    #[test]
    fn ordering_condition_is_reported() {
        // x2 x1 = x1 x2 + x1^2 x2^2 violates the tail condition
        let field = FieldSpec::rationals();
        let data = PresentationData {
            var_names: vec!["x1".into(), "x2".into()],
            field: field.clone(),
            order: MonomialOrder::DegRevLex,
            relations: vec![RelationInput {
                i: 0,
                j: 1,
                scalar: field.one(),
                tail: vec![(field.one(), ExpVec::from_slice(&[2, 2]))],
            }],
            weyl: None,
        };
        let report = GAlgebra::validate(&data);
        assert!(!report.is_valid());
        assert!(matches!(
            report.violations[0],
            Violation::TailNotSmaller { i: 0, j: 1 }
        ));
    }

    #[test]
    fn zero_scalar_is_reported() {
        let field = FieldSpec::rationals();
        let data = PresentationData {
            var_names: vec!["a".into(), "b".into()],
            field: field.clone(),
            order: MonomialOrder::DegRevLex,
            relations: vec![RelationInput {
                i: 0,
                j: 1,
                scalar: field.zero(),
                tail: vec![],
            }],
            weyl: None,
        };
        let report = GAlgebra::validate(&data);
        assert!(matches!(report.violations[0], Violation::ZeroScalar { .. }));
    }
}
