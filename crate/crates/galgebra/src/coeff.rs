//! Coefficient fields: exact rationals and rational functions in a
//! fixed list of commuting parameters over the rationals.

use crate::parampoly::{format_rational, ParamPoly};
use num::{BigRational, One, Signed, Zero};

/// Descriptor of the coefficient field of a presentation: the rationals
/// when `params` is empty, otherwise rational functions in the listed
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub params: Vec<String>,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { params: Vec::new() }
    }

    pub fn rational_functions<S: Into<String>>(params: Vec<S>) -> Self {
        FieldSpec {
            params: params.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.params.is_empty()
    }

    pub fn zero(&self) -> Coefficient {
        self.from_rational(BigRational::zero())
    }

    pub fn one(&self) -> Coefficient {
        self.from_rational(BigRational::one())
    }

    pub fn from_integer(&self, n: i64) -> Coefficient {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> Coefficient {
        if self.is_rationals() {
            Coefficient::Rational(r)
        } else {
            Coefficient::RatFun(RatFun::from_poly(ParamPoly::constant(self.params.len(), r)))
        }
    }

    /// The i-th parameter as a coefficient; panics for the rationals.
    pub fn parameter(&self, i: usize) -> Coefficient {
        assert!(!self.is_rationals(), "field has no parameters");
        Coefficient::RatFun(RatFun::from_poly(ParamPoly::param(self.params.len(), i)))
    }

    pub fn parameter_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }
}

/// A normalized rational function: gcd(num, den) = 1 and den monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFun {
    fn from_poly(p: ParamPoly) -> Self {
        let n = p.nvars();
        RatFun {
            num: p,
            den: ParamPoly::one(n),
        }
    }

    fn new(num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            let n = num.nvars();
            return RatFun {
                num,
                den: ParamPoly::one(n),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }
}

/// An element of the coefficient field. Within one presentation all
/// coefficients stay in the variant fixed by its `FieldSpec`; plain
/// rationals promote to constant rational functions when combined with
/// the parameter arm.
#[derive(Clone, Debug, Eq)]
pub enum Coefficient {
    Rational(BigRational),
    RatFun(RatFun),
}

impl PartialEq for Coefficient {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => a == b,
            (Coefficient::RatFun(a), Coefficient::RatFun(b)) => a == b,
            (Coefficient::Rational(a), Coefficient::RatFun(b))
            | (Coefficient::RatFun(b), Coefficient::Rational(a)) => {
                b.den.is_one() && b.num.as_constant().as_ref() == Some(a)
            }
        }
    }
}

impl Coefficient {
    fn to_ratfun(&self, nvars: usize) -> RatFun {
        match self {
            Coefficient::Rational(r) => {
                RatFun::from_poly(ParamPoly::constant(nvars, r.clone()))
            }
            Coefficient::RatFun(f) => f.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::RatFun(f) => f.num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::RatFun(f) => f.num.is_one() && f.den.is_one(),
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (a, b) => {
                let n = match (a, b) {
                    (Coefficient::RatFun(f), _) | (_, Coefficient::RatFun(f)) => f.num.nvars(),
                    _ => unreachable!(),
                };
                let (a, b) = (a.to_ratfun(n), b.to_ratfun(n));
                let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
                let den = a.den.mul(&b.den);
                Coefficient::RatFun(RatFun::new(num, den))
            }
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (a, b) => {
                let n = match (a, b) {
                    (Coefficient::RatFun(f), _) | (_, Coefficient::RatFun(f)) => f.num.nvars(),
                    _ => unreachable!(),
                };
                let (a, b) = (a.to_ratfun(n), b.to_ratfun(n));
                Coefficient::RatFun(RatFun::new(a.num.mul(&b.num), a.den.mul(&b.den)))
            }
        }
    }

    pub fn div(&self, other: &Coefficient) -> Coefficient {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Coefficient::Rational(r.recip())
            }
            Coefficient::RatFun(f) => {
                assert!(!f.num.is_zero(), "inverse of zero");
                Coefficient::RatFun(RatFun::new(f.den.clone(), f.num.clone()))
            }
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(-r),
            Coefficient::RatFun(f) => Coefficient::RatFun(RatFun {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
        }
    }

    pub fn pow(&self, k: u32) -> Coefficient {
        match self {
            Coefficient::Rational(r) => {
                let mut acc = BigRational::one();
                for _ in 0..k {
                    acc *= r;
                }
                Coefficient::Rational(acc)
            }
            Coefficient::RatFun(f) => {
                Coefficient::RatFun(RatFun::new(f.num.pow(k), f.den.pow(k)))
            }
        }
    }

    /// Sign convention used by the printer: a rational is negative in
    /// the usual sense, a rational function when the deglex-leading
    /// coefficient of its numerator is negative.
    pub fn is_display_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::RatFun(f) => f.num.leading_coeff().is_negative(),
        }
    }

    /// Deterministic rendering; `with_product` reports whether a `*`
    /// separator is needed before a following monomial.
    pub fn format(&self, params: &[String]) -> String {
        match self {
            Coefficient::Rational(r) => format_rational(r),
            Coefficient::RatFun(f) => {
                if f.den.is_one() {
                    if f.num.terms().len() <= 1 {
                        f.num.format(params)
                    } else {
                        format!("({})", f.num.format(params))
                    }
                } else {
                    let den = if f.den.terms().len() <= 1 {
                        f.den.format(params)
                    } else {
                        format!("({})", f.den.format(params))
                    };
                    format!("({}/{})", f.num.format(params), den)
                }
            }
        }
    }
}

// The coefficient field feeds the generic polynomial tower used for
// commutative gcd questions.
impl crate::mpoly::FieldScalar for Coefficient {
    fn zero() -> Self {
        Coefficient::Rational(<BigRational as Zero>::zero())
    }
    fn one() -> Self {
        Coefficient::Rational(<BigRational as One>::one())
    }
    fn is_zero(&self) -> bool {
        Coefficient::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Coefficient::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Coefficient::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Coefficient::mul(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        Coefficient::div(self, other)
    }
    fn neg(&self) -> Self {
        Coefficient::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_function_normalization() {
        let fs = FieldSpec::rational_functions(vec!["q"]);
        let q = fs.parameter(0);
        // (q^2 - 1)/(q + 1) normalizes to q - 1
        let num = q.mul(&q).sub(&fs.one());
        let den = q.add(&fs.one());
        let r = num.div(&den);
        assert_eq!(r, q.sub(&fs.one()));
    }

    #[test]
    fn denominator_made_monic() {
        let fs = FieldSpec::rational_functions(vec!["q"]);
        let q = fs.parameter(0);
        let two = fs.from_integer(2);
        // 1/(2q) has monic denominator q and numerator 1/2
        let r = fs.one().div(&two.mul(&q));
        match &r {
            Coefficient::RatFun(f) => {
                assert!(f.den().leading_coeff().is_one());
            }
            _ => panic!(),
        }
        assert_eq!(r.mul(&two.mul(&q)), fs.one());
    }

    #[test]
    fn formatting() {
        let fs = FieldSpec::rational_functions(vec!["q"]);
        let q = fs.parameter(0);
        assert_eq!(q.pow(2).format(&fs.params), "q^2");
        assert_eq!(
            q.pow(2).add(&fs.one()).format(&fs.params),
            "(q^2+1)"
        );
        let r = fs.one().div(&q);
        assert_eq!(r.format(&fs.params), "(1/q)");
        assert_eq!(FieldSpec::rationals().from_integer(-3).format(&[]), "-3");
    }
}
