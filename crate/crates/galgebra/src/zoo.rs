//! Constructors for the usual operator algebras.

use crate::coeff::FieldSpec;
use crate::exponent::ExpVec;
use crate::order::MonomialOrder;
use crate::presentation::{
    GAlgebra, PresentationData, RelationInput, WeylStructure,
};
use std::sync::Arc;

fn letter_names(n: usize, letters: &[&str], prefix: &str) -> Vec<String> {
    if n <= letters.len() {
        letters[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
    }
}

fn weyl_like_names(n: usize, dprefix: &str) -> (Vec<String>, Vec<String>) {
    let xs = letter_names(n, &["x", "y", "z"], "x");
    let ds = xs.iter().map(|x| format!("{}{}", dprefix, x)).collect();
    (xs, ds)
}

/// The commutative polynomial ring on the given variables.
pub fn commutative_algebra(names: &[&str]) -> Arc<GAlgebra> {
    GAlgebra::new(PresentationData {
        var_names: names.iter().map(|s| s.to_string()).collect(),
        field: FieldSpec::rationals(),
        order: MonomialOrder::DegRevLex,
        relations: vec![],
        weyl: None,
    })
    .expect("commutative presentation is always valid")
}

/// The n-th Weyl algebra with variables x.., dx.. and dx x = x dx + 1.
pub fn weyl_algebra(n: usize) -> Arc<GAlgebra> {
    let (xs, ds) = weyl_like_names(n, "d");
    let field = FieldSpec::rationals();
    let nv = 2 * n;
    let relations = (0..n)
        .map(|i| RelationInput {
            i,
            j: n + i,
            scalar: field.one(),
            tail: vec![(field.one(), ExpVec::zero(nv))],
        })
        .collect();
    GAlgebra::new(PresentationData {
        var_names: xs.into_iter().chain(ds).collect(),
        field,
        order: MonomialOrder::DegRevLex,
        relations,
        weyl: Some(WeylStructure {
            pairs: (0..n).map(|i| (i, n + i)).collect(),
        }),
    })
    .expect("Weyl presentation is valid")
}

/// The n-th shift algebra with s x = x s + s = (x + 1) s.
pub fn shift_algebra(n: usize) -> Arc<GAlgebra> {
    let xs = letter_names(n, &["x", "y", "z"], "x");
    let ss: Vec<String> = if n == 1 {
        vec!["s".to_string()]
    } else {
        xs.iter().map(|x| format!("s{}", x)).collect()
    };
    let field = FieldSpec::rationals();
    let nv = 2 * n;
    let relations = (0..n)
        .map(|i| RelationInput {
            i,
            j: n + i,
            scalar: field.one(),
            tail: vec![(field.one(), ExpVec::var(n + i, nv))],
        })
        .collect();
    GAlgebra::new(PresentationData {
        var_names: xs.into_iter().chain(ss).collect(),
        field,
        order: MonomialOrder::DegRevLex,
        relations,
        weyl: None,
    })
    .expect("shift presentation is valid")
}

/// The n-th q-shift algebra over QQ(q) with Qx x = q x Qx.
pub fn q_shift_algebra(n: usize) -> Arc<GAlgebra> {
    let xs = letter_names(n, &["x", "y", "z"], "x");
    let qs: Vec<String> = if n == 1 {
        vec!["s".to_string()]
    } else {
        xs.iter().map(|x| format!("Q{}", x)).collect()
    };
    let field = FieldSpec::rational_functions(vec!["q"]);
    let relations = (0..n)
        .map(|i| RelationInput {
            i,
            j: n + i,
            scalar: field.parameter(0),
            tail: vec![],
        })
        .collect();
    GAlgebra::new(PresentationData {
        var_names: xs.into_iter().chain(qs).collect(),
        field,
        order: MonomialOrder::DegRevLex,
        relations,
        weyl: None,
    })
    .expect("q-shift presentation is valid")
}

/// The n-th q-Weyl algebra over QQ(q) with dx x = q x dx + 1.
pub fn q_weyl_algebra(n: usize) -> Arc<GAlgebra> {
    let (xs, ds) = weyl_like_names(n, "d");
    let field = FieldSpec::rational_functions(vec!["q"]);
    let nv = 2 * n;
    let relations = (0..n)
        .map(|i| RelationInput {
            i,
            j: n + i,
            scalar: field.parameter(0),
            tail: vec![(field.one(), ExpVec::zero(nv))],
        })
        .collect();
    GAlgebra::new(PresentationData {
        var_names: xs.into_iter().chain(ds).collect(),
        field,
        order: MonomialOrder::DegRevLex,
        relations,
        weyl: None,
    })
    .expect("q-Weyl presentation is valid")
}

/// The n-th integration algebra with I x = x I + I^2.
pub fn integration_algebra(n: usize) -> Arc<GAlgebra> {
    let (xs, is) = weyl_like_names(n, "I");
    let field = FieldSpec::rationals();
    let nv = 2 * n;
    let relations = (0..n)
        .map(|i| {
            let mut e = ExpVec::zero(nv);
            e.set(n + i, 2);
            RelationInput {
                i,
                j: n + i,
                scalar: field.one(),
                tail: vec![(field.one(), e)],
            }
        })
        .collect();
    GAlgebra::new(PresentationData {
        var_names: xs.into_iter().chain(is).collect(),
        field,
        order: MonomialOrder::DegRevLex,
        relations,
        weyl: None,
    })
    .expect("integration presentation is valid")
}

/// Every algebra of the zoo, for property tests.
pub fn all_zoo() -> Vec<(&'static str, Arc<GAlgebra>)> {
    vec![
        ("commutative", commutative_algebra(&["x", "y"])),
        ("weyl1", weyl_algebra(1)),
        ("weyl2", weyl_algebra(2)),
        ("shift1", shift_algebra(1)),
        ("qshift2", q_shift_algebra(2)),
        ("qweyl1", q_weyl_algebra(1)),
        ("integration1", integration_algebra(1)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_presentations_validate() {
        for (name, alg) in all_zoo() {
            assert!(alg.nvars() >= 2, "{} has too few variables", name);
        }
    }

    #[test]
    fn q_shift_names_match_paper_session() {
        let a = q_shift_algebra(2);
        assert_eq!(
            a.var_names(),
            &["x", "y", "Qx", "Qy"]
        );
    }
}
