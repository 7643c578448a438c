//! Elements of a G-algebra in the PBW basis.

use crate::coeff::Coefficient;
use crate::error::GAlgebraError;
use crate::exponent::ExpVec;
use crate::presentation::{GAlgebra, TermList};
use std::fmt;
use std::sync::Arc;

/// A PBW polynomial: a finite sum of coefficient-monomial terms, kept
/// sorted strictly decreasing in the presentation's order. The zero
/// element has an empty term list.
#[derive(Clone)]
pub struct Element {
    algebra: Arc<GAlgebra>,
    terms: TermList,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.terms == other.terms
    }
}

impl Element {
    pub fn zero(algebra: &Arc<GAlgebra>) -> Element {
        Element {
            algebra: algebra.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(algebra: &Arc<GAlgebra>) -> Element {
        Element::constant(algebra, algebra.field().one())
    }

    pub fn constant(algebra: &Arc<GAlgebra>, c: Coefficient) -> Element {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((c, ExpVec::zero(algebra.nvars())));
        }
        Element {
            algebra: algebra.clone(),
            terms,
        }
    }

    pub fn from_integer(algebra: &Arc<GAlgebra>, n: i64) -> Element {
        Element::constant(algebra, algebra.field().from_integer(n))
    }

    pub fn variable(algebra: &Arc<GAlgebra>, i: usize) -> Element {
        assert!(i < algebra.nvars(), "variable index out of range");
        Element {
            algebra: algebra.clone(),
            terms: vec![(algebra.field().one(), ExpVec::var(i, algebra.nvars()))],
        }
    }

    pub fn monomial(algebra: &Arc<GAlgebra>, c: Coefficient, e: ExpVec) -> Element {
        assert_eq!(e.len(), algebra.nvars());
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((c, e));
        }
        Element {
            algebra: algebra.clone(),
            terms,
        }
    }

    /// Build from arbitrary terms: sorts, merges and drops zeros.
    pub fn from_terms(algebra: &Arc<GAlgebra>, terms: Vec<(Coefficient, ExpVec)>) -> Element {
        let order = algebra.order().clone();
        let mut terms: TermList = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        terms.sort_by(|(_, a), (_, b)| order.cmp(b, a));
        let mut merged: TermList = Vec::with_capacity(terms.len());
        for (c, e) in terms {
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
        Element {
            algebra: algebra.clone(),
            terms: merged,
        }
    }

    pub(crate) fn from_raw(algebra: &Arc<GAlgebra>, terms: TermList) -> Element {
        Element {
            algebra: algebra.clone(),
            terms,
        }
    }

    pub fn algebra(&self) -> &Arc<GAlgebra> {
        &self.algebra
    }

    pub fn terms(&self) -> &[(Coefficient, ExpVec)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, e)| e.is_zero())
    }

    pub fn same_algebra(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    pub fn leading_exp(&self) -> Option<&ExpVec> {
        self.terms.first().map(|(_, e)| e)
    }

    pub fn leading_coeff(&self) -> Option<&Coefficient> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Total degree; zero for the zero element.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, e)| e.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Total degree counting only the listed variables.
    pub fn degree_on(&self, vars: &[usize]) -> u32 {
        self.terms
            .iter()
            .map(|(_, e)| e.degree_on(vars))
            .max()
            .unwrap_or(0)
    }

    /// Indices of all variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut present = vec![false; self.algebra.nvars()];
        for (_, e) in &self.terms {
            for i in e.support() {
                present[i] = true;
            }
        }
        present
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn add(&self, other: &Element) -> Element {
        assert!(self.same_algebra(other), "presentation mismatch");
        Element::from_raw(&self.algebra, self.algebra.add_terms(&self.terms, &other.terms))
    }

    pub fn neg(&self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, e)| (c.neg(), e.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> Element {
        Element::from_raw(&self.algebra, self.algebra.scale_terms(&self.terms, c))
    }

    /// The noncommutative product, straightened into the PBW basis.
    pub fn try_mul(&self, other: &Element) -> Result<Element, GAlgebraError> {
        if !self.same_algebra(other) {
            return Err(GAlgebraError::PresentationMismatch);
        }
        Ok(Element::from_raw(
            &self.algebra,
            self.algebra.mul_terms(&self.terms, &other.terms),
        ))
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.try_mul(other).expect("presentation mismatch")
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = Element::one(&self.algebra);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Element {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Formal partial derivative with respect to variable `i`; only
    /// meaningful on elements of a commutative block.
    pub fn derivative(&self, i: usize) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|(_, e)| e.get(i) > 0)
            .map(|(c, e)| {
                let k = e.get(i);
                let mut e2 = e.clone();
                e2.set(i, k - 1);
                (
                    c.mul(&self.algebra.field().from_integer(k as i64)),
                    e2,
                )
            })
            .collect();
        Element::from_terms(&self.algebra, terms)
    }

    fn format_monomial(&self, e: &ExpVec) -> String {
        let names = self.algebra.var_names();
        let mut parts = Vec::new();
        for (i, k) in e.iter().enumerate() {
            if k == 1 {
                parts.push(names[i].clone());
            } else if k > 1 {
                parts.push(format!("{}^{}", names[i], k));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Element {
    /// Deterministic plain-text form: terms strictly decreasing in the
    /// presentation's order, coefficients as reduced rationals or
    /// rational functions with monic denominators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let params = &self.algebra.field().params;
        let mut out = String::new();
        for (idx, (c, e)) in self.terms.iter().enumerate() {
            let neg = c.is_display_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = self.format_monomial(e);
            if mono.is_empty() {
                out.push_str(&abs.format(params));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&abs.format(params));
                out.push('*');
                out.push_str(&mono);
            }
        }
        write!(f, "{}", out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn weyl_relation() {
        let a1 = zoo::weyl_algebra(1);
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        // d * x = x*d + 1
        let p = d.mul(&x);
        let expected = x.mul(&d).add(&Element::one(&a1));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x*dx+1");
    }

    #[test]
    fn unit_and_annihilator() {
        let a1 = zoo::weyl_algebra(1);
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        let a = x.mul(&d).add(&Element::from_integer(&a1, 5));
        assert_eq!(Element::one(&a1).mul(&a), a);
        assert_eq!(a.mul(&Element::zero(&a1)), Element::zero(&a1));
    }

    #[test]
    fn squared_relation() {
        // d^2 * x^2 = x^2 d^2 + 4 x d + 2, by applying dx = xd + 1 four times
        let a1 = zoo::weyl_algebra(1);
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        let lhs = d.pow(2).mul(&x.pow(2));
        let expected = x
            .pow(2)
            .mul(&d.pow(2))
            .add(&x.mul(&d).scale(&a1.field().from_integer(4)))
            .add(&Element::from_integer(&a1, 2));
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "x^2*dx^2+4*x*dx+2");
    }

    #[test]
    fn euler_operator_shift() {
        // (x d + z) * x = x * (x d + z + 1) for rational z
        let a1 = zoo::weyl_algebra(1);
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        for z in [0i64, 1, -2, 7] {
            let theta_z = x.mul(&d).add(&Element::from_integer(&a1, z));
            let lhs = theta_z.mul(&x);
            let rhs = x.mul(&x.mul(&d).add(&Element::from_integer(&a1, z + 1)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shift_algebra_relation() {
        let s1 = zoo::shift_algebra(1);
        let x = Element::variable(&s1, 0);
        let s = Element::variable(&s1, 1);
        // s x = (x + 1) s
        let p = s.mul(&x);
        let expected = x.add(&Element::one(&s1)).mul(&s);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x*s+s");
    }

    #[test]
    fn q_shift_relation() {
        let a = zoo::q_shift_algebra(1);
        let x = Element::variable(&a, 0);
        let s = Element::variable(&a, 1);
        let q = Element::constant(&a, a.field().parameter(0));
        assert_eq!(s.mul(&x), q.mul(&x).mul(&s));
        assert_eq!(s.mul(&x).to_string(), "q*x*s");
    }

    #[test]
    fn integration_algebra_relation() {
        let a = zoo::integration_algebra(1);
        let x = Element::variable(&a, 0);
        let i = Element::variable(&a, 1);
        assert_eq!(i.mul(&x), x.mul(&i).add(&i.pow(2)));
    }

    #[test]
    fn degree_additivity_in_products() {
        let a1 = zoo::weyl_algebra(1);
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        let f = x.pow(2).mul(&d).add(&x);
        let g = d.pow(3).add(&Element::one(&a1));
        assert_eq!(
            f.mul(&g).total_degree(),
            f.total_degree() + g.total_degree()
        );
    }
}
