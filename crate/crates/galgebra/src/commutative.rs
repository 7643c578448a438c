//! Commutative-block operations: gcd, exact division and square-free
//! parts for elements supported on pairwise-commuting variables.

use crate::coeff::Coefficient;
use crate::element::Element;
use crate::error::GAlgebraError;
use crate::exponent::ExpVec;
use crate::mpoly::Tower;
use crate::presentation::GAlgebra;
use std::sync::Arc;

/// Check that the listed variables commute pairwise with trivial
/// relations.
pub fn check_commuting_block(alg: &GAlgebra, vars: &[usize]) -> Result<(), GAlgebraError> {
    for (a, &i) in vars.iter().enumerate() {
        for &j in vars.iter().skip(a + 1) {
            if !alg.pair_is_trivial(i, j) {
                let names = alg.var_names();
                return Err(GAlgebraError::NonCommutingVariables(format!(
                    "{} and {}",
                    names[i.min(j)],
                    names[i.max(j)]
                )));
            }
        }
    }
    Ok(())
}

/// The union of the supports, verified to be a commuting block.
pub fn common_block(elements: &[&Element]) -> Result<Vec<usize>, GAlgebraError> {
    let mut vars: Vec<usize> = Vec::new();
    for e in elements {
        for v in e.support_vars() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    vars.sort_unstable();
    if let Some(e) = elements.first() {
        check_commuting_block(e.algebra(), &vars)?;
    }
    Ok(vars)
}

fn to_tower(f: &Element, block: &[usize]) -> Tower<Coefficient> {
    fn build(
        terms: &[(Coefficient, ExpVec)],
        block: &[usize],
        level: usize,
        field_zero: &Coefficient,
    ) -> Tower<Coefficient> {
        if level == block.len() {
            let mut c = field_zero.clone();
            for (t, _) in terms {
                c = c.add(t);
            }
            return Tower::Base(c);
        }
        let var = block[level];
        let maxdeg = terms.iter().map(|(_, e)| e.get(var)).max().unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Coefficient, ExpVec)>> = vec![Vec::new(); maxdeg + 1];
        for (c, e) in terms {
            buckets[e.get(var) as usize].push((c.clone(), e.clone()));
        }
        Tower::Poly(
            buckets
                .into_iter()
                .map(|b| build(&b, block, level + 1, field_zero))
                .collect(),
        )
    }
    let zero = f.algebra().field().zero();
    build(f.terms(), block, 0, &zero)
}

fn from_tower(alg: &Arc<GAlgebra>, block: &[usize], t: &Tower<Coefficient>) -> Element {
    fn walk(
        t: &Tower<Coefficient>,
        block: &[usize],
        level: usize,
        nvars: usize,
        exp: &mut ExpVec,
        out: &mut Vec<(Coefficient, ExpVec)>,
    ) {
        match t {
            Tower::Base(c) => {
                if !c.is_zero() {
                    out.push((c.clone(), exp.clone()));
                }
            }
            Tower::Poly(cs) => {
                for (k, c) in cs.iter().enumerate() {
                    exp.set(block[level], k as u32);
                    walk(c, block, level + 1, nvars, exp, out);
                }
                exp.set(block[level], 0);
            }
        }
    }
    let mut out = Vec::new();
    let mut exp = ExpVec::zero(alg.nvars());
    walk(t, block, 0, alg.nvars(), &mut exp, &mut out);
    Element::from_terms(alg, out)
}

/// Gcd in the commutative polynomial subring generated by the operands'
/// variables, normalized to leading coefficient 1.
pub fn comm_gcd(f: &Element, g: &Element) -> Result<Element, GAlgebraError> {
    if !f.same_algebra(g) {
        return Err(GAlgebraError::PresentationMismatch);
    }
    let block = common_block(&[f, g])?;
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    if block.is_empty() {
        return Ok(Element::one(f.algebra()));
    }
    let d = Tower::gcd(&to_tower(f, &block), &to_tower(g, &block));
    Ok(from_tower(f.algebra(), &block, &d).monic())
}

/// Exact division within a commuting block; `None` when `g` does not
/// divide `f` there.
pub fn comm_div_exact(f: &Element, g: &Element) -> Result<Option<Element>, GAlgebraError> {
    if !f.same_algebra(g) {
        return Err(GAlgebraError::PresentationMismatch);
    }
    if g.is_zero() {
        return Err(GAlgebraError::ZeroInput);
    }
    let block = common_block(&[f, g])?;
    if f.is_zero() {
        return Ok(Some(Element::zero(f.algebra())));
    }
    if block.is_empty() {
        let q = f.leading_coeff().unwrap().div(g.leading_coeff().unwrap());
        return Ok(Some(Element::constant(f.algebra(), q)));
    }
    let q = to_tower(f, &block).div_exact(&to_tower(g, &block));
    Ok(q.map(|q| from_tower(f.algebra(), &block, &q)))
}

/// The product of the distinct irreducible factors of `f`, computed as
/// `f / gcd(f, df/dx_i, ...)` over the block variables, monic.
pub fn squarefree_part(f: &Element) -> Result<Element, GAlgebraError> {
    if f.is_zero() {
        return Err(GAlgebraError::ZeroInput);
    }
    let block = common_block(&[f])?;
    let mut g = f.clone();
    for &v in &block {
        g = comm_gcd(&g, &f.derivative(v))?;
    }
    let sf = comm_div_exact(f, &g)?.ok_or(GAlgebraError::NotDivisible)?;
    Ok(sf.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn gcd_examples() {
        let alg = zoo::commutative_algebra(&["x", "y"]);
        let x = Element::variable(&alg, 0);
        let one = Element::one(&alg);
        // gcd(x^2 - 1, x^2 + 2x + 1) = x + 1
        let a = x.pow(2).sub(&one);
        let b = x.pow(2).add(&x.scale(&alg.field().from_integer(2))).add(&one);
        assert_eq!(comm_gcd(&a, &b).unwrap(), x.add(&one));
        // gcd(f, 0) = f normalized
        let f = x.scale(&alg.field().from_integer(-2));
        assert_eq!(comm_gcd(&f, &Element::zero(&alg)).unwrap(), x);
    }

    #[test]
    fn gcd_over_parameter_field() {
        let alg = zoo::q_shift_algebra(1);
        let x = Element::variable(&alg, 0);
        let one = Element::one(&alg);
        let q = alg.field().parameter(0);
        // gcd(q x^2 - q, x - 1) = x - 1
        let a = x.pow(2).sub(&one).scale(&q);
        let b = x.sub(&one);
        assert_eq!(comm_gcd(&a, &b).unwrap(), b);
    }

    #[test]
    fn squarefree_examples() {
        let alg = zoo::commutative_algebra(&["x", "y"]);
        let x = Element::variable(&alg, 0);
        let y = Element::variable(&alg, 1);
        let one = Element::one(&alg);
        let two = alg.field().from_integer(2);
        // x^2 + 2x + 1 -> x + 1
        let p = x.pow(2).add(&x.scale(&two)).add(&one);
        assert_eq!(squarefree_part(&p).unwrap(), x.add(&one));
        // x -> x
        assert_eq!(squarefree_part(&x).unwrap(), x);
        // (x+3)^2 (xy + y) -> x^2 y + 4 x y + 3 y
        let three = Element::from_integer(&alg, 3);
        let f = x.add(&three).pow(2).mul(&x.mul(&y).add(&y));
        let expected = x.add(&three.clone()).mul(&x.add(&one)).mul(&y).monic();
        let sf = squarefree_part(&f).unwrap();
        assert_eq!(sf, expected);
        assert_eq!(sf.to_string(), "x^2*y+4*x*y+3*y");
    }

    #[test]
    fn squarefree_rejects_zero() {
        let alg = zoo::commutative_algebra(&["x", "y"]);
        assert!(squarefree_part(&Element::zero(&alg)).is_err());
    }

    #[test]
    fn noncommuting_inputs_are_rejected() {
        let a1 = zoo::weyl_algebra(1);
        let x = Element::variable(&a1, 0);
        let d = Element::variable(&a1, 1);
        let f = x.mul(&d);
        assert!(matches!(
            comm_gcd(&f, &x),
            Err(GAlgebraError::NonCommutingVariables(_))
        ));
    }

    #[test]
    fn exact_division() {
        let alg = zoo::commutative_algebra(&["x", "y"]);
        let x = Element::variable(&alg, 0);
        let y = Element::variable(&alg, 1);
        let one = Element::one(&alg);
        let f = x.add(&one).mul(&y.pow(2));
        assert_eq!(
            comm_div_exact(&f, &y).unwrap(),
            Some(x.add(&one).mul(&y))
        );
        assert_eq!(comm_div_exact(&f, &x).unwrap(), None);
    }
}
