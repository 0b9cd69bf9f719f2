use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coefficient;
use super::monomial::Monomial;
use super::order::TermOrder;
use super::ring::{Field, Ring, VarId};
use crate::error::{Error, Result};

pub type Term = (Monomial, Coefficient);

/// Polynomial with exact coefficients. Terms are kept sorted in decreasing
/// `DiagonalLex` order with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Polynomial::constant(ring, Coefficient::one(ring.field()))
    }

    pub fn constant(ring: Ring, c: Coefficient) -> Self {
        Polynomial::term(ring, Monomial::one(), c)
    }

    pub fn from_i64(ring: Ring, n: i64) -> Self {
        Polynomial::constant(ring, Coefficient::from_i64(ring.field(), n))
    }

    pub fn var(ring: Ring, v: VarId) -> Self {
        assert!(ring.contains_var(v), "variable outside ring");
        Polynomial::term(ring, Monomial::var(v), Coefficient::one(ring.field()))
    }

    pub fn term(ring: Ring, m: Monomial, c: Coefficient) -> Self {
        assert_eq!(c.field(), ring.field(), "coefficient field does not match ring");
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![(m, c)],
        }
    }

    /// Sums up arbitrary terms (unsorted, with repeats and zeros allowed).
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((n, d)) if *n == m => *d = &*d + &c,
                _ => {
                    if let Some((_, d)) = out.last() {
                        if d.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, d)) if d.is_zero()) {
            out.pop();
        }
        Polynomial { ring, terms: out }
    }

    /// Terms already sorted in decreasing order without zeros or repeats.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    /// The 2-minor `x_i y_j - x_j y_i` of columns `i`, `j` and rows 1, 2.
    pub fn minor2(ring: Ring, i: usize, j: usize) -> Self {
        Polynomial::minor_rows(ring, 1, 2, i, j)
    }

    /// The 2-minor on rows `r < s` and columns `i`, `j`.
    pub fn minor_rows(ring: Ring, r: usize, s: usize, i: usize, j: usize) -> Self {
        let one = Coefficient::one(ring.field());
        let m1 = Monomial::from_pairs([(ring.var(r, i), 1), (ring.var(s, j), 1)]);
        let m2 = Monomial::from_pairs([(ring.var(r, j), 1), (ring.var(s, i), 1)]);
        Polynomial::from_terms(ring, [(m1, one.clone()), (m2, -&one)])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<&Term> {
        match order {
            TermOrder::DiagonalLex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| order.compare(&a.0, &b.0)),
        }
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.terms.iter().any(|(m, _)| m.involves(v))
    }

    pub fn is_monic(&self, order: &TermOrder) -> bool {
        self.leading_term(order).is_some_and(|(_, c)| c.is_one())
    }

    /// Scales so the leading coefficient (under `order`) is 1.
    pub fn monic(&self, order: &TermOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Context(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sgn = |c: &Coefficient| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.ring);
        // Each row of the schoolbook product is already sorted.
        for (m, c) in &other.terms {
            acc = acc.merge(&self.mul_term(m, c), false);
        }
        acc
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect();
        Polynomial { ring: self.ring, terms }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.ring, divisor.ring);
        let (lm, lc) = divisor.terms.first()?;
        let lc_inv = lc.inv();
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = m.div(lm)?;
            let qc = c * &lc_inv;
            rest = rest.merge(&divisor.mul_term(&q, &qc), true);
            quotient.push((q, qc));
        }
        Some(Polynomial::from_terms(self.ring, quotient))
    }

    /// Moves the polynomial into another ring sharing its variable layout
    /// (only the number of auxiliary variables may differ).
    pub fn in_ring(&self, ring: Ring) -> Result<Polynomial> {
        let same_shape =
            ring.rows() == self.ring.rows() && ring.cols() == self.ring.cols() && ring.field() == self.ring.field();
        if !same_shape || self.terms.iter().any(|(m, _)| m.vars().any(|v| !ring.contains_var(v))) {
            return Err(Error::Context(format!(
                "cannot move polynomial from {} to {}",
                self.ring, ring
            )));
        }
        Ok(Polynomial {
            ring,
            terms: self.terms.clone(),
        })
    }

    /// Maps coefficients into another field (rationals to `F_p`).
    pub fn change_field(&self, field: Field) -> Result<Polynomial> {
        let ring = self.ring.with_field(field);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                c.reduce_mod(field)
                    .map(|c| (m.clone(), c))
                    .ok_or_else(|| Error::Context(format!("coefficient {c} has no image in {field}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Sets the given variables to zero.
    pub fn kill_vars(&self, vars: &[VarId]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| !vars.iter().any(|&v| m.involves(v)))
            .cloned()
            .collect();
        Polynomial { ring: self.ring, terms }
    }

    /// Renders with the ring's variable names, e.g. `x1*y2 - x2*y1`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.renders_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .iter()
                .map(|(v, e)| {
                    let name = self.ring.var_name(v);
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! poly_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_op!(Add, add, checked_add);
poly_op!(Sub, sub, checked_sub);
poly_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
