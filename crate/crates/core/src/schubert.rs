//! The Chow ring of a Grassmannian in the Schubert basis.
//!
//! Two independent routes to intersection degrees live here: repeated
//! Pieri multiplication by the hyperplane class, and the closed
//! factorial determinant. Each serves as the other's oracle.

use crate::partitions::{iterate_box, Partition};
use crate::scalar::{expect_integer, factorial, inv_factorial, Scalar};
use crate::matrix::ExactMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// The Grassmannian `Gr(m, n)` of m-dimensional subspaces of an
/// n-dimensional space. Schubert classes are indexed by partitions in
/// an `m x (n-m)` rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrassmannContext {
    m: usize,
    n: usize,
}

impl GrassmannContext {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(0 < m && m < n, "need 0 < m < n, got Gr({}, {})", m, n);
        GrassmannContext { m, n }
    }

    pub fn subspace_dim(&self) -> usize {
        self.m
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n - self.m
    }

    /// `dim Gr(m, n) = m (n - m)`.
    pub fn dimension(&self) -> usize {
        self.m * (self.n - self.m)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.fits(self.rows(), self.cols())
    }

    pub fn complement(&self, p: &Partition) -> Partition {
        p.complement(self.rows(), self.cols())
    }
}

/// A finitely supported integer combination of Schubert classes of one
/// Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertCycle {
    ctx: GrassmannContext,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchubertCycle {
    pub fn zero(ctx: GrassmannContext) -> Self {
        SchubertCycle { ctx, coeffs: BTreeMap::new() }
    }

    /// The basis class `sigma_lambda`.
    pub fn sigma(ctx: GrassmannContext, lambda: Partition) -> Self {
        assert!(ctx.contains(&lambda), "partition {} outside the rectangle", lambda);
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, BigInt::from(1));
        SchubertCycle { ctx, coeffs }
    }

    pub fn ctx(&self) -> GrassmannContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SchubertCycle) -> SchubertCycle {
        assert_eq!(self.ctx, other.ctx, "cycles on different Grassmannians");
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    /// Serializes as a JSON object: partition key (displayed form) to
    /// decimal coefficient string.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (p, c) in &self.coeffs {
            map.insert(p.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for SchubertCycle {
    fmt_cycle!();
}

macro_rules! fmt_cycle {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.coeffs.is_empty() {
                return write!(f, "0");
            }
            let mut first = true;
            for (p, c) in &self.coeffs {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}*s{}", c, p)?;
            }
            Ok(())
        }
    };
}
use fmt_cycle;

/// Multiplication by the hyperplane class: each basis class maps to the
/// sum of the classes obtained by adding one box inside the rectangle,
/// all with coefficient one, extended linearly.
pub fn pieri_sigma1(c: &SchubertCycle) -> SchubertCycle {
    let ctx = c.ctx;
    let mut out = SchubertCycle::zero(ctx);
    for (p, coeff) in &c.coeffs {
        for row in 0..ctx.rows() {
            let here = p.part(row);
            let above = if row == 0 { ctx.cols() as u32 } else { p.part(row - 1) };
            if here < above && here < ctx.cols() as u32 {
                let mut parts: Vec<u32> = (0..ctx.rows()).map(|i| p.part(i)).collect();
                parts[row] += 1;
                out.add_term(Partition::new(parts), coeff.clone());
            }
        }
    }
    out
}

fn check_grading(mu: &Partition, nu: &Partition, e: usize, ctx: GrassmannContext) {
    assert!(ctx.contains(mu), "{} outside the rectangle", mu);
    assert!(ctx.contains(nu), "{} outside the rectangle", nu);
    assert_eq!(
        mu.size() as usize + nu.size() as usize + e,
        ctx.dimension(),
        "grading mismatch: |{}| + |{}| + {} != dim Gr = {}",
        mu,
        nu,
        e,
        ctx.dimension()
    );
}

/// `deg(sigma_mu . sigma_nu . sigma_1^e)` by the closed factorial
/// determinant: with `lambda` the complement of `nu`, this is
/// `e! . det[ 1/(lambda_i - mu_j - i + j)! ]` over the rectangle's rows,
/// with `1/N! = 0` for negative `N`. The rational determinant times `e!`
/// must come out an integer; anything else signals an indexing bug.
pub fn degree_pair(mu: &Partition, nu: &Partition, e: usize, ctx: GrassmannContext) -> BigInt {
    check_grading(mu, nu, e, ctx);
    let lambda = ctx.complement(nu);
    let s = ctx.rows();
    let mat = ExactMatrix::from_fn(s, s, |i, j| {
        inv_factorial(lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64)
    });
    let det = mat.det();
    let scaled = det.mul(&Scalar::Rat(factorial(e).into()));
    let value = expect_integer(&scaled, "factorial degree determinant");
    assert!(value >= BigInt::zero(), "negative intersection degree");
    value
}

/// The same degree by iterated Pieri multiplication: expand
/// `sigma_mu . sigma_1^e` and read off the coefficient of the complement
/// of `nu` (Schubert duality). Independent oracle for `degree_pair`.
pub fn degree_via_pieri(mu: &Partition, nu: &Partition, e: usize, ctx: GrassmannContext) -> BigInt {
    check_grading(mu, nu, e, ctx);
    let mut cycle = SchubertCycle::sigma(ctx, mu.clone());
    for _ in 0..e {
        cycle = pieri_sigma1(&cycle);
    }
    cycle.coefficient(&ctx.complement(nu))
}

/// Number of standard Young tableaux of an `m x c` rectangle by the
/// hook length formula; this is the classical degree of `Gr(m, m + c)`.
pub fn rectangle_syt_count(m: usize, c: usize) -> BigInt {
    let mut denom = BigInt::from(1);
    for i in 0..m {
        for j in 0..c {
            denom *= BigInt::from((c - 1 - j) + (m - 1 - i) + 1);
        }
    }
    factorial(m * c) / denom
}

/// Every admissible `(mu, nu, e)` triple on `ctx`, for exhaustive sweeps.
pub fn admissible_triples(ctx: GrassmannContext) -> Vec<(Partition, Partition, usize)> {
    let dim = ctx.dimension();
    let mut out = Vec::new();
    for mu in iterate_box(ctx.rows(), ctx.cols()) {
        for nu in iterate_box(ctx.rows(), ctx.cols()) {
            let used = (mu.size() + nu.size()) as usize;
            if used <= dim {
                out.push((mu.clone(), nu, dim - used));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pieri_square_of_sigma1() {
        let ctx = GrassmannContext::new(2, 4);
        let s1 = SchubertCycle::sigma(ctx, p(&[1]));
        let sq = pieri_sigma1(&s1);
        assert_eq!(sq.coefficient(&p(&[2])), BigInt::from(1));
        assert_eq!(sq.coefficient(&p(&[1, 1])), BigInt::from(1));
        assert_eq!(sq.terms().count(), 2);
    }

    #[test]
    fn pieri_hits_rectangle_boundary() {
        let ctx = GrassmannContext::new(2, 4);
        let top = SchubertCycle::sigma(ctx, p(&[2, 2]));
        assert!(pieri_sigma1(&top).is_zero());
    }

    #[test]
    fn sigma1_fourth_power_is_twice_point_class() {
        let ctx = GrassmannContext::new(2, 4);
        let mut c = SchubertCycle::sigma(ctx, Partition::empty());
        for _ in 0..4 {
            c = pieri_sigma1(&c);
        }
        assert_eq!(c.coefficient(&p(&[2, 2])), BigInt::from(2));
        assert_eq!(c.terms().count(), 1);
    }

    #[test]
    fn degree_pair_examples() {
        let ctx = GrassmannContext::new(2, 4);
        // degree of Gr(2,4) = 2 = 4! * (1/12)
        assert_eq!(
            degree_pair(&Partition::empty(), &Partition::empty(), 4, ctx),
            BigInt::from(2)
        );
        assert_eq!(degree_pair(&p(&[1]), &p(&[1]), 2, ctx), BigInt::from(2));
    }

    #[test]
    fn dual_basis_pairing() {
        let ctx = GrassmannContext::new(3, 6);
        for lam in iterate_box(3, 3) {
            let co = ctx.complement(&lam);
            assert_eq!(degree_pair(&lam, &co, 0, ctx), BigInt::from(1));
        }
    }

    #[test]
    fn pieri_route_duality_edge_cases() {
        let ctx = GrassmannContext::new(2, 4);
        // e = 0 with nu not dual to mu: degree 0
        assert_eq!(degree_via_pieri(&p(&[2]), &p(&[1, 1]), 0, ctx), BigInt::zero());
        // point class against the fundamental class
        assert_eq!(
            degree_via_pieri(&p(&[2, 2]), &Partition::empty(), 0, ctx),
            BigInt::from(1)
        );
    }

    #[test]
    fn routes_agree_on_examples() {
        let ctx = GrassmannContext::new(2, 4);
        let cases: Vec<(Partition, Partition, usize)> = vec![
            (Partition::empty(), Partition::empty(), 4),
            (p(&[1]), p(&[1]), 2),
            (p(&[2, 1]), p(&[1]), 0),
        ];
        for (mu, nu, e) in cases {
            assert_eq!(
                degree_pair(&mu, &nu, e, ctx),
                degree_via_pieri(&mu, &nu, e, ctx),
                "disagreement at ({}, {}, {})",
                mu,
                nu,
                e
            );
        }
    }

    #[test]
    fn grassmannian_degree_matches_hook_count() {
        for (m, n) in [(2usize, 4usize), (2, 5), (3, 5), (2, 6), (3, 6)] {
            let ctx = GrassmannContext::new(m, n);
            let deg = degree_pair(
                &Partition::empty(),
                &Partition::empty(),
                ctx.dimension(),
                ctx,
            );
            assert_eq!(deg, rectangle_syt_count(m, n - m), "Gr({}, {})", m, n);
        }
    }

    #[test]
    #[should_panic(expected = "grading mismatch")]
    fn grading_is_enforced() {
        let ctx = GrassmannContext::new(2, 4);
        let _ = degree_pair(&p(&[1]), &p(&[1]), 1, ctx);
    }
}
