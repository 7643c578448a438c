//! Commutative polynomials in the field parameters, the building block
//! of rational-function coefficients.

use crate::mpoly::Tower;
use num::{BigRational, One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;

type ParamExp = SmallVec<[u32; 4]>;

/// A polynomial in the fixed parameter list, with terms sorted strictly
/// decreasing in deglex. The parameter order is global and fixed by the
/// presentation, which makes printing and comparison deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    nvars: usize,
    terms: Vec<(BigRational, ParamExp)>,
}

fn cmp_deglex(a: &ParamExp, b: &ParamExp) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl ParamPoly {
    pub fn zero(nvars: usize) -> Self {
        ParamPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((c, SmallVec::from_elem(0, nvars)));
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn param(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "parameter index out of range");
        let mut e = SmallVec::from_elem(0, nvars);
        e[i] = 1;
        ParamPoly {
            nvars,
            terms: vec![(BigRational::one(), e)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].0.is_one()
            && self.terms[0].1.iter().all(|&e| e == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, e)| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].0.clone())
        } else {
            None
        }
    }

    pub fn terms(&self) -> &[(BigRational, ParamExp)] {
        &self.terms
    }

    /// Leading coefficient under the fixed deglex order.
    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .first()
            .map(|(c, _)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, e)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn from_sorted(nvars: usize, mut terms: Vec<(BigRational, ParamExp)>) -> Self {
        terms.retain(|(c, _)| !c.is_zero());
        ParamPoly { nvars, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out: Vec<(BigRational, ParamExp)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_deglex(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].0 + &other.terms[j].0;
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Self::from_sorted(self.nvars, out)
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(c, e)| (-c, e.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut acc = Self::zero(self.nvars);
        for (c, e) in &self.terms {
            let partial: Vec<(BigRational, ParamExp)> = other
                .terms
                .iter()
                .map(|(d, f)| (c * d, e.iter().zip(f).map(|(a, b)| a + b).collect()))
                .collect();
            acc = acc.add(&ParamPoly {
                nvars: self.nvars,
                terms: partial,
            });
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(d, e)| (c * d, e.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn to_tower(&self) -> Tower<BigRational> {
        fn build(nvars: usize, terms: &[(BigRational, ParamExp)], level: usize) -> Tower<BigRational> {
            if level == nvars {
                let c = terms
                    .iter()
                    .fold(BigRational::zero(), |acc, (c, _)| acc + c);
                return Tower::Base(c);
            }
            // split terms by the exponent of variable `level`
            let var = level;
            let maxdeg = terms.iter().map(|(_, e)| e[var]).max().unwrap_or(0) as usize;
            let mut buckets: Vec<Vec<(BigRational, ParamExp)>> = vec![Vec::new(); maxdeg + 1];
            for (c, e) in terms {
                buckets[e[var] as usize].push((c.clone(), e.clone()));
            }
            let cs = buckets
                .into_iter()
                .map(|b| build(nvars, &b, level + 1))
                .collect();
            Tower::Poly(cs)
        }
        if self.nvars == 0 {
            build(0, &self.terms, 0)
        } else {
            build(self.nvars, &self.terms, 0)
        }
    }

    fn from_tower(nvars: usize, t: &Tower<BigRational>) -> Self {
        fn walk(
            t: &Tower<BigRational>,
            prefix: &mut ParamExp,
            out: &mut Vec<(BigRational, ParamExp)>,
        ) {
            match t {
                Tower::Base(c) => {
                    if !c.is_zero() {
                        out.push((c.clone(), prefix.clone()));
                    }
                }
                Tower::Poly(cs) => {
                    for (i, c) in cs.iter().enumerate() {
                        prefix.push(i as u32);
                        walk(c, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut prefix = SmallVec::new();
        walk(t, &mut prefix, &mut out);
        out.sort_by(|a, b| cmp_deglex(&b.1, &a.1));
        debug_assert!(out.iter().all(|(_, e)| e.len() == nvars));
        Self::from_sorted(nvars, out)
    }

    /// Gcd normalized to leading coefficient 1 (deglex-leading).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.nvars == 0 {
            return Self::one(0);
        }
        let g = Tower::gcd(&self.to_tower(), &other.to_tower());
        Self::from_tower(self.nvars, &g).monic()
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if self.nvars == 0 {
            return Some(Self::constant(
                0,
                self.as_constant().unwrap() / d.as_constant().unwrap(),
            ));
        }
        let q = self.to_tower().div_exact(&d.to_tower())?;
        Some(Self::from_tower(self.nvars, &q))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    /// Deterministic plain-text rendering using the given parameter names.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, e)) in self.terms.iter().enumerate() {
            let mono = format_param_monomial(e, names);
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

pub(crate) fn format_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_param_monomial(e: &ParamExp, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 1 {
            parts.push(names[i].clone());
        } else if k > 1 {
            parts.push(format!("{}^{}", names[i], k));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_and_gcd() {
        // in QQ[q]: gcd(q^2 - 1, q^2 + 2q + 1) = q + 1
        let v = ParamPoly::param(1, 0);
        let a = v.pow(2).sub(&ParamPoly::one(1));
        let b = v.pow(2).add(&v.scale(&q(2))).add(&ParamPoly::one(1));
        let g = a.gcd(&b);
        assert_eq!(g, v.add(&ParamPoly::one(1)));
        assert_eq!(a.div_exact(&g), Some(v.sub(&ParamPoly::one(1))));
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let v = ParamPoly::param(1, 0);
        let f = v.scale(&q(3));
        assert_eq!(f.gcd(&ParamPoly::zero(1)), v);
    }

    #[test]
    fn formatting() {
        let names = vec!["q".to_string()];
        let v = ParamPoly::param(1, 0);
        let p = v.pow(2).scale(&q(-2)).add(&ParamPoly::one(1));
        assert_eq!(p.format(&names), "-2*q^2+1");
        assert_eq!(ParamPoly::zero(1).format(&names), "0");
    }
}
