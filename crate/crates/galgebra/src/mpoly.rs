//! Dense recursive multivariate polynomial arithmetic over a field,
//! used for gcd and exact-division questions arising from coefficient
//! normalization and from commutative blocks of a presentation.
//!
//! Polynomials in k variables are represented as univariate towers:
//! a level-k polynomial is a coefficient list of level-(k-1)
//! polynomials. Gcds are computed by the primitive polynomial
//! remainder sequence, with contents taken recursively one level down.

use std::fmt::Debug;

/// The scalar operations the tower needs from its base field.
pub trait FieldScalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// A dense recursive polynomial. All values combined by the operations
/// below must have been built with the same nesting depth.
#[derive(Clone, Debug, PartialEq)]
pub enum Tower<C> {
    Base(C),
    Poly(Vec<Tower<C>>),
}

impl<C: FieldScalar> Tower<C> {
    pub fn zero(depth: usize) -> Self {
        if depth == 0 {
            Tower::Base(C::zero())
        } else {
            Tower::Poly(vec![Tower::zero(depth - 1)])
        }
    }

    pub fn constant(depth: usize, c: C) -> Self {
        if depth == 0 {
            Tower::Base(c)
        } else {
            Tower::Poly(vec![Tower::constant(depth - 1, c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Tower::Base(c) => c.is_zero(),
            Tower::Poly(cs) => cs.iter().all(|c| c.is_zero()),
        }
    }

    fn coeffs(&self) -> &[Tower<C>] {
        match self {
            Tower::Base(_) => panic!("tower depth mismatch"),
            Tower::Poly(cs) => cs,
        }
    }

    /// Degree in the top variable; zero polynomials report 0.
    pub fn degree(&self) -> usize {
        match self {
            Tower::Base(_) => 0,
            Tower::Poly(cs) => cs.iter().rposition(|c| !c.is_zero()).unwrap_or(0),
        }
    }

    fn trim(mut cs: Vec<Tower<C>>, depth_below: usize) -> Tower<C> {
        while cs.len() > 1 && cs.last().map_or(false, |c| c.is_zero()) {
            cs.pop();
        }
        if cs.is_empty() {
            cs.push(Tower::zero(depth_below));
        }
        Tower::Poly(cs)
    }

    fn depth_below(&self) -> usize {
        match self {
            Tower::Base(_) => 0,
            Tower::Poly(cs) => cs[0].depth(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Tower::Base(_) => 0,
            Tower::Poly(cs) => 1 + cs[0].depth(),
        }
    }

    pub fn leading_coeff(&self) -> &Tower<C> {
        let cs = self.coeffs();
        &cs[self.degree()]
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Tower::Base(a), Tower::Base(b)) => Tower::Base(a.add(b)),
            (Tower::Poly(a), Tower::Poly(b)) => {
                let below = self.depth_below();
                let n = a.len().max(b.len());
                let zero = Tower::zero(below);
                let cs = (0..n)
                    .map(|i| {
                        let x = a.get(i).unwrap_or(&zero);
                        let y = b.get(i).unwrap_or(&zero);
                        x.add(y)
                    })
                    .collect();
                Self::trim(cs, below)
            }
            _ => panic!("tower depth mismatch"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Tower::Base(a) => Tower::Base(a.neg()),
            Tower::Poly(a) => Tower::Poly(a.iter().map(|c| c.neg()).collect()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Tower::Base(a), Tower::Base(b)) => Tower::Base(a.mul(b)),
            (Tower::Poly(a), Tower::Poly(b)) => {
                let below = self.depth_below();
                let mut cs = vec![Tower::zero(below); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        cs[i + j] = cs[i + j].add(&x.mul(y));
                    }
                }
                Self::trim(cs, below)
            }
            _ => panic!("tower depth mismatch"),
        }
    }

    /// Exact division; `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        match (self, d) {
            (Tower::Base(a), Tower::Base(b)) => {
                if b.is_zero() {
                    None
                } else {
                    Some(Tower::Base(a.div(b)))
                }
            }
            (Tower::Poly(_), Tower::Poly(_)) => {
                if d.is_zero() {
                    return None;
                }
                let below = self.depth_below();
                if self.is_zero() {
                    return Some(Tower::zero(1 + below).reshape(self.depth()));
                }
                let dd = d.degree();
                let dlc = d.leading_coeff().clone();
                let mut rem = self.clone();
                let mut quot = vec![Tower::zero(below); self.degree().saturating_sub(dd) + 1];
                while !rem.is_zero() && rem.degree() >= dd {
                    let k = rem.degree() - dd;
                    let q = rem.leading_coeff().div_exact(&dlc)?;
                    // rem -= q * x^k * d
                    let mut shifted = vec![Tower::zero(below); k];
                    for c in d.coeffs() {
                        shifted.push(q.mul(c));
                    }
                    rem = rem.sub(&Self::trim(shifted, below));
                    if !rem.is_zero() && rem.degree() >= dd + k {
                        // leading term failed to cancel: not exact
                        return None;
                    }
                    quot[k] = q;
                }
                if rem.is_zero() {
                    Some(Self::trim(quot, below))
                } else {
                    None
                }
            }
            _ => panic!("tower depth mismatch"),
        }
    }

    fn reshape(self, depth: usize) -> Self {
        // only used to rebuild a zero of the right depth
        debug_assert!(self.is_zero());
        Tower::zero(depth)
    }

    /// Content: the gcd of the coefficients, one level down.
    fn content(&self) -> Tower<C> {
        let cs = self.coeffs();
        let mut g = Tower::zero(self.depth_below());
        for c in cs {
            g = Tower::gcd(&g, c);
        }
        g
    }

    /// Pseudo-remainder of `a` by `b` in the top variable.
    fn pseudo_rem(a: &Self, b: &Self) -> Self {
        let db = b.degree();
        let lcb = b.leading_coeff().clone();
        let below = a.depth_below();
        let mut r = a.clone();
        while !r.is_zero() && r.degree() >= db {
            let k = r.degree() - db;
            let lr = r.leading_coeff().clone();
            // r = lcb * r - lr * x^k * b
            let mut shifted = vec![Tower::zero(below); k];
            for c in b.coeffs() {
                shifted.push(lr.mul(c));
            }
            let lcb_t = Tower::Poly(vec![lcb.clone()]);
            r = r.mul(&lcb_t).sub(&Self::trim(shifted, below));
        }
        r
    }

    /// Gcd up to a scalar of the base field. Zero inputs behave as
    /// identity elements: gcd(f, 0) = f.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        match (a, b) {
            (Tower::Base(x), Tower::Base(y)) => {
                if x.is_zero() && y.is_zero() {
                    Tower::Base(C::zero())
                } else {
                    Tower::Base(C::one())
                }
            }
            (Tower::Poly(_), Tower::Poly(_)) => {
                if a.is_zero() {
                    return b.clone();
                }
                if b.is_zero() {
                    return a.clone();
                }
                let ca = a.content();
                let cb = b.content();
                let cg = Tower::gcd(&ca, &cb);
                let mut f = a.primitive_part(&ca);
                let mut g = b.primitive_part(&cb);
                if f.degree() < g.degree() {
                    std::mem::swap(&mut f, &mut g);
                }
                loop {
                    let r = Self::pseudo_rem(&f, &g);
                    if r.is_zero() {
                        break;
                    }
                    let rc = r.content();
                    let rp = r.primitive_part(&rc);
                    f = g;
                    g = rp;
                }
                let cg_t = Tower::Poly(vec![cg]);
                g.mul(&cg_t)
            }
            _ => panic!("tower depth mismatch"),
        }
    }

    fn primitive_part(&self, content: &Tower<C>) -> Self {
        if content.is_zero() {
            return self.clone();
        }
        let below = self.depth_below();
        let cs = self
            .coeffs()
            .iter()
            .map(|c| {
                c.div_exact(content)
                    .expect("content must divide every coefficient")
            })
            .collect();
        Self::trim(cs, below)
    }
}

impl FieldScalar for num::BigRational {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    // univariate helpers over QQ (depth 1)
    fn poly(cs: &[i64]) -> Tower<BigRational> {
        Tower::Poly(cs.iter().map(|&c| Tower::Base(q(c))).collect())
    }

    #[test]
    fn univariate_gcd() {
        // gcd(x^2 - 1, x^2 + 2x + 1) ~ x + 1
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, 2, 1]);
        let g = Tower::gcd(&a, &b);
        // normalize monic
        let lc = match g.leading_coeff() {
            Tower::Base(c) => c.clone(),
            _ => unreachable!(),
        };
        let monic = g
            .div_exact(&Tower::Poly(vec![Tower::Base(lc)]))
            .unwrap();
        assert_eq!(monic, poly(&[1, 1]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = poly(&[-1, 0, 1]); // x^2 - 1
        let b = poly(&[1, 1]); // x + 1
        assert_eq!(a.div_exact(&b), Some(poly(&[-1, 1])));
        let c = poly(&[1, 0, 1]); // x^2 + 1
        assert_eq!(c.div_exact(&b), None);
    }

    #[test]
    fn bivariate_gcd() {
        // in QQ[x][y]: gcd(x*y + y, x^2 - 1) ~ x + 1
        let xp1 = Tower::Poly(vec![poly(&[1, 1])]); // depth 2 constant-in-y
        let f = Tower::Poly(vec![Tower::zero(1), poly(&[1, 1])]); // (x+1) y
        let g = Tower::Poly(vec![poly(&[-1, 0, 1])]); // x^2 - 1
        let d = Tower::gcd(&f, &g);
        // d should be a scalar multiple of x + 1
        assert!(d.div_exact(&xp1).is_some());
        assert!(xp1.div_exact(&d).is_some());
    }
}
