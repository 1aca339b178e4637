//! Sparse multivariate polynomials over a `Scalar` field.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector, so equal
//! polynomials are structurally equal and iteration order is canonical.
//! No stored term has a zero coefficient.

use crate::scalar::{Field, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// An ordered, shared list of variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// `prefix0, prefix1, ...` up to `count` variables.
    pub fn numbered(prefix: &str, count: usize) -> Self {
        VarSet::new((0..count).map(|i| format!("{}{}", prefix, i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// An exponent vector; length always equals the variable count of the
/// polynomial that owns it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller ensures divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Global monomial orders used by the reduction engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic, variable 0 most significant.
    Lex,
    /// Degree-reverse-lexicographic, variable 0 most significant.
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => {
                let da = a.total_degree();
                let db = b.total_degree();
                if da != db {
                    return da.cmp(&db);
                }
                // ties: smaller last-variable exponent is larger
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A sparse multivariate polynomial with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet, field: Field) -> Self {
        MultiPoly { vars: vars.clone(), field, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: Scalar) -> Self {
        let field = c.field();
        let mut p = MultiPoly::zero(vars, field);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarSet, field: Field) -> Self {
        MultiPoly::constant(vars, field.one())
    }

    pub fn var(vars: &VarSet, i: usize, field: Field) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = MultiPoly::zero(vars, field);
        p.terms.insert(Monomial::var(vars.len(), i), field.one());
        p
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length mismatch");
        let field = c.field();
        let mut p = MultiPoly::zero(vars, field);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    /// Constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(self.field.zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.0.len(), self.vars.len(), "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &MultiPoly) {
        assert!(
            self.vars.same(&other.vars),
            "mismatched variable sets: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
        assert_eq!(self.field, other.field, "field mismatch");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.check_compatible(other);
        let mut out = MultiPoly::zero(&self.vars, self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars, self.field);
        }
        MultiPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars, self.field);
        }
        MultiPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars, self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading term under `order`, or `None` for the zero polynomial.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Swaps two variables (the reflection that transposes `x_i` and `x_j`).
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars, self.field);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(i, j);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Exact division: returns `self / divisor`, panicking if the division
    /// leaves a remainder. Works because leading terms (in any global
    /// order) are multiplicative.
    pub fn exact_div(&self, divisor: &MultiPoly) -> MultiPoly {
        self.check_compatible(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::Lex;
        let (dm, dc) = {
            let (m, c) = divisor.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars, self.field);
        while let Some((lm, lc)) = rem.leading_term(order) {
            assert!(
                dm.divides(lm),
                "non-exact polynomial division: leading term {:?} not divisible",
                lm
            );
            let qm = lm.div(&dm);
            let qc = lc.div(&dc);
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc));
        }
        quot
    }

    /// Evaluates at a point, one scalar per variable.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.vars.len(), "point dimension mismatch");
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", c)?;
            } else {
                if !c.is_one() {
                    write!(f, "{}*", c)?;
                }
                let mut started = false;
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if started {
                        write!(f, "*")?;
                    }
                    started = true;
                    if e == 1 {
                        write!(f, "{}", self.vars.name(i))?;
                    } else {
                        write!(f, "{}^{}", self.vars.name(i), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: Self) -> MultiPoly {
        MultiPoly::add(self, other)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: Self) -> MultiPoly {
        MultiPoly::sub(self, other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: Self) -> MultiPoly {
        MultiPoly::mul(self, other)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DEFAULT_PRIME;

    fn xy() -> (VarSet, MultiPoly, MultiPoly) {
        let vars = VarSet::new(vec!["x", "y"]);
        let x = MultiPoly::var(&vars, 0, Field::Rational);
        let y = MultiPoly::var(&vars, 1, Field::Rational);
        (vars, x, y)
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, y) = xy();
        let prod = (&x + &y).mul(&(&x - &y));
        let expected = &x.pow(2) - &y.pow(2);
        assert_eq!(prod, expected);
    }

    #[test]
    fn additive_identity() {
        let (vars, x, y) = xy();
        let p = &x.pow(3) - &y;
        let zero = MultiPoly::zero(&vars, Field::Rational);
        assert_eq!(p.add(&zero), p);
    }

    #[test]
    fn fp_coefficient_wraparound() {
        // over F5: (2x) * (3x) = 6 x^2 = x^2
        let vars = VarSet::new(vec!["x"]);
        let f = Field::Prime(5);
        let x = MultiPoly::var(&vars, 0, f);
        let p = x.scale(&f.from_i64(2)).mul(&x.scale(&f.from_i64(3)));
        assert_eq!(p, x.pow(2));
    }

    #[test]
    fn zero_terms_pruned() {
        let (_, x, _) = xy();
        let diff = &x - &x;
        assert!(diff.is_zero());
        assert_eq!(diff.num_terms(), 0);
    }

    #[test]
    #[should_panic(expected = "mismatched variable sets")]
    fn mismatched_vars_panic() {
        let a = MultiPoly::var(&VarSet::new(vec!["x"]), 0, Field::Rational);
        let b = MultiPoly::var(&VarSet::new(vec!["t"]), 0, Field::Rational);
        let _ = a.add(&b);
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy();
        // (x^2 - y^2) / (x - y) = x + y
        let num = &x.pow(2) - &y.pow(2);
        let den = &x - &y;
        assert_eq!(num.exact_div(&den), &x + &y);
    }

    #[test]
    #[should_panic(expected = "non-exact polynomial division")]
    fn inexact_division_panics() {
        let (_, x, y) = xy();
        let num = &x.pow(2) + &y;
        let den = &x - &y;
        let _ = num.exact_div(&den);
    }

    #[test]
    fn degrevlex_order() {
        let order = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > x in degrevlex with x first
        let x2 = Monomial(vec![2, 0]);
        let xy = Monomial(vec![1, 1]);
        let y2 = Monomial(vec![0, 2]);
        let x = Monomial(vec![1, 0]);
        assert_eq!(order.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(order.cmp(&xy, &y2), Ordering::Greater);
        assert_eq!(order.cmp(&y2, &x), Ordering::Greater);
    }

    #[test]
    fn eval_over_fp() {
        let vars = VarSet::new(vec!["x", "y"]);
        let f = Field::Prime(DEFAULT_PRIME);
        let x = MultiPoly::var(&vars, 0, f);
        let y = MultiPoly::var(&vars, 1, f);
        let p = &x.pow(2) - &y;
        let v = p.eval(&[f.from_i64(7), f.from_i64(49)]);
        assert!(v.is_zero());
    }

    #[test]
    fn homogeneous_components() {
        let (_, x, y) = xy();
        let p = (&x + &y).pow(3);
        assert_eq!(p.homogeneous_component(3), p);
        assert!(p.homogeneous_component(2).is_zero());
    }
}
