//! Exponent vectors of PBW basis monomials.

use smallvec::SmallVec;

/// Exponent vector of a basis monomial `x_1^{a_1} ... x_n^{a_n}`.
///
/// The length always equals the variable count of the ambient presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVec(SmallVec<[u32; 8]>);

impl ExpVec {
    pub fn zero(nvars: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, nvars))
    }

    /// The exponent vector of the single variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.0[i] = 1;
        e
    }

    pub fn from_slice(s: &[u32]) -> Self {
        ExpVec(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total degree counting only the listed variable indices.
    pub fn degree_on(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.0[i]).sum()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.len(), other.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExpVec(out))
    }

    /// True when `self` divides `other` as a monomial.
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn reversed(&self) -> ExpVec {
        ExpVec(self.0.iter().rev().copied().collect())
    }

    /// Indices of variables occurring with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn max_support(&self) -> Option<usize> {
        self.support().max()
    }

    pub fn min_support(&self) -> Option<usize> {
        self.support().min()
    }

    /// Project onto the listed indices, in their listed order.
    pub fn project(&self, vars: &[usize]) -> ExpVec {
        ExpVec(vars.iter().map(|&i| self.0[i]).collect())
    }

    pub fn scale(&self, k: u32) -> ExpVec {
        ExpVec(self.0.iter().map(|a| a * k).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_and_degrees() {
        let e = ExpVec::from_slice(&[2, 0, 1]);
        assert_eq!(e.total_degree(), 3);
        assert_eq!(e.degree_on(&[0]), 2);
        assert_eq!(e.degree_on(&[1, 2]), 1);
        assert_eq!(e.support().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(e.max_support(), Some(2));
        assert_eq!(e.min_support(), Some(0));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = ExpVec::from_slice(&[1, 2]);
        let b = ExpVec::from_slice(&[2, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(b.checked_sub(&a), Some(ExpVec::from_slice(&[1, 0])));
        assert_eq!(a.checked_sub(&b), None);
    }

    #[test]
    fn reversal_is_involutive() {
        let a = ExpVec::from_slice(&[3, 1, 0, 2]);
        assert_eq!(a.reversed().reversed(), a);
    }
}
