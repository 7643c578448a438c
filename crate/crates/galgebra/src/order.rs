//! Global monomial orders on exponent vectors.

use crate::exponent::ExpVec;
use std::cmp::Ordering;

/// A monomial total well-ordering. All variants here are global: the
/// constant monomial is minimal and the order is compatible with
/// exponent addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    DegRevLex,
    /// Block elimination order: monomials are compared first on the
    /// `elim` coordinates, then on the `keep` coordinates. Anything
    /// involving an eliminated variable dominates the kept subalgebra.
    Block {
        elim: Vec<usize>,
        keep: Vec<usize>,
        elim_order: Box<MonomialOrder>,
        keep_order: Box<MonomialOrder>,
    },
    /// Compare reversed exponent vectors under the inner order. This is
    /// the order transported along the variable reversal used when
    /// constructing opposite presentations; it keeps the straightening
    /// condition intact for every valid input presentation.
    RevVars(Box<MonomialOrder>),
}

impl MonomialOrder {
    /// Standard elimination order with degrevlex inside both blocks.
    pub fn block_elimination(elim: Vec<usize>, keep: Vec<usize>) -> MonomialOrder {
        MonomialOrder::Block {
            elim,
            keep,
            elim_order: Box::new(MonomialOrder::DegRevLex),
            keep_order: Box::new(MonomialOrder::DegRevLex),
        }
    }

    /// Wrap in a reversed-variables comparison, collapsing double wraps.
    pub fn rev_vars(inner: MonomialOrder) -> MonomialOrder {
        match inner {
            MonomialOrder::RevVars(base) => *base,
            other => MonomialOrder::RevVars(Box::new(other)),
        }
    }

    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::DegLex => cmp_deg(a, b).then_with(|| cmp_lex(a, b)),
            MonomialOrder::DegRevLex => cmp_deg(a, b).then_with(|| cmp_revlex(a, b)),
            MonomialOrder::Block {
                elim,
                keep,
                elim_order,
                keep_order,
            } => {
                let ea = a.project(elim);
                let eb = b.project(elim);
                elim_order.cmp(&ea, &eb).then_with(|| {
                    let ka = a.project(keep);
                    let kb = b.project(keep);
                    keep_order.cmp(&ka, &kb)
                })
            }
            MonomialOrder::RevVars(inner) => inner.cmp(&a.reversed(), &b.reversed()),
        }
    }

    pub fn max<'a>(&self, a: &'a ExpVec, b: &'a ExpVec) -> &'a ExpVec {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn cmp_deg(a: &ExpVec, b: &ExpVec) -> Ordering {
    a.total_degree().cmp(&b.total_degree())
}

fn cmp_lex(a: &ExpVec, b: &ExpVec) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

// Reverse lexicographic tiebreak: the last nonzero entry of a - b
// decides, with a negative entry meaning a is larger.
fn cmp_revlex(a: &ExpVec, b: &ExpVec) -> Ordering {
    for (x, y) in a.as_slice().iter().zip(b.as_slice()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &[u32]) -> ExpVec {
        ExpVec::from_slice(s)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > x*d in degrevlex over (x, d)
        assert_eq!(o.cmp(&e(&[2, 0]), &e(&[1, 1])), Ordering::Greater);
        // x*d > d^2
        assert_eq!(o.cmp(&e(&[1, 1]), &e(&[0, 2])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&e(&[0, 3]), &e(&[2, 0])), Ordering::Greater);
        // 1 is minimal
        assert_eq!(o.cmp(&e(&[0, 0]), &e(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn lex_and_deglex() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&e(&[1, 0]), &e(&[0, 5])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::DegLex.cmp(&e(&[1, 0]), &e(&[0, 5])),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::DegLex.cmp(&e(&[2, 1]), &e(&[1, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_dominates_on_elim_vars() {
        let o = MonomialOrder::block_elimination(vec![1], vec![0]);
        // d > x^9 when d is eliminated first
        assert_eq!(o.cmp(&e(&[0, 1]), &e(&[9, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&e(&[1, 1]), &e(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn rev_vars_transport() {
        let o = MonomialOrder::rev_vars(MonomialOrder::DegRevLex);
        // comparing under reversal: entries are read back-to-front
        assert_eq!(o.cmp(&e(&[1, 1]), &e(&[2, 0])), Ordering::Greater);
        // double wrap collapses
        assert_eq!(
            MonomialOrder::rev_vars(o.clone()),
            MonomialOrder::DegRevLex
        );
        // compatibility with addition
        let c = e(&[1, 3]);
        assert_eq!(
            o.cmp(&e(&[1, 1]).add(&c), &e(&[2, 0]).add(&c)),
            Ordering::Greater
        );
    }
}
