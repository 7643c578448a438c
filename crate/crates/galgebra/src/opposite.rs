//! Opposite presentations and the transport of elements.
//!
//! The opposite algebra lists the variables in reversed order and
//! compares monomials through the reversed exponent map, so the
//! straightening condition carries over verbatim and the element
//! transport is simply coefficient-preserving exponent reversal.

use crate::element::Element;
use crate::error::GAlgebraError;
use crate::order::MonomialOrder;
use crate::presentation::{
    GAlgebra, PresentationData, RelationInput, ValidationReport, WeylStructure,
};
use std::sync::Arc;

/// The opposite presentation, validated. For every valid input the
/// transported order keeps all conditions intact, so failure would
/// signal a bug rather than bad input; the report is still surfaced.
pub fn opposite_presentation(alg: &Arc<GAlgebra>) -> Result<Arc<GAlgebra>, ValidationReport> {
    let n = alg.nvars();
    let var_names: Vec<String> = alg.var_names().iter().rev().cloned().collect();
    let order = MonomialOrder::rev_vars(alg.order().clone());
    let mut relations = Vec::new();
    for k in 0..n {
        for l in (k + 1)..n {
            // op pair (k, l) comes from original pair (i, j) reversed
            let j = n - 1 - k;
            let i = n - 1 - l;
            let rel = alg.relation(i, j);
            if rel.scalar.is_one() && rel.tail.is_empty() {
                continue;
            }
            relations.push(RelationInput {
                i: k,
                j: l,
                scalar: rel.scalar.clone(),
                tail: rel
                    .tail
                    .iter()
                    .map(|(c, e)| (c.clone(), e.reversed()))
                    .collect(),
            });
        }
    }
    // Reversal swaps the roles within each Weyl pair: the image of d
    // acts as the position variable of the opposite algebra.
    let weyl = alg.weyl_structure().map(|w| WeylStructure {
        pairs: w
            .pairs
            .iter()
            .map(|&(x, d)| (n - 1 - d, n - 1 - x))
            .collect(),
    });
    GAlgebra::new(PresentationData {
        var_names,
        field: alg.field().clone(),
        order,
        relations,
        weyl,
    })
}

/// Transport an element along the variable reversal into `target`,
/// which must be the opposite presentation of the element's ambient
/// (or conversely). The map is a linear bijection reversing products.
pub fn transport(x: &Element, target: &Arc<GAlgebra>) -> Result<Element, GAlgebraError> {
    if x.algebra().nvars() != target.nvars() {
        return Err(GAlgebraError::PresentationMismatch);
    }
    let terms = x
        .terms()
        .iter()
        .map(|(c, e)| (c.clone(), e.reversed()))
        .collect();
    Ok(Element::from_terms(target, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn opposite_weyl_anti_homomorphism_on_generators() {
        let a1 = zoo::weyl_algebra(1);
        let op = opposite_presentation(&a1).unwrap();
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        // toOp(d * x) = toOp(x) * toOp(d) in the opposite algebra
        let lhs = transport(&d.mul(&x), &op).unwrap();
        let rhs = transport(&x, &op)
            .unwrap()
            .mul(&transport(&d, &op).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_opposite_is_identity() {
        for (_, alg) in zoo::all_zoo() {
            let op = opposite_presentation(&alg).unwrap();
            let opop = opposite_presentation(&op).unwrap();
            assert_eq!(*alg, *opop);
            let x = Element::variable(&alg, 0);
            let back = transport(&transport(&x, &op).unwrap(), &opop).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn integration_algebra_opposite_validates() {
        // the transported order is required here: plain degrevlex on the
        // reversed variables would violate the tail condition for I^2
        let a = zoo::integration_algebra(1);
        let op = opposite_presentation(&a).unwrap();
        let x = Element::variable(&a, 0);
        let i = Element::variable(&a, 1);
        let lhs = transport(&i.mul(&x), &op).unwrap();
        let rhs = transport(&x, &op)
            .unwrap()
            .mul(&transport(&i, &op).unwrap());
        assert_eq!(lhs, rhs);
    }
}
