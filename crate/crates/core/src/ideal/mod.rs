//! Ideals with a cached reduced Gröbner basis.

mod groebner;

use std::fmt;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use groebner::Reducer;
pub use groebner::{groebner, is_groebner, normal_form};

use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, Polynomial, Ring, TermOrder, VarId};

#[derive(Clone, Debug)]
struct Basis {
    polys: Vec<Polynomial>,
    reducer: Reducer,
}

impl Basis {
    fn new(polys: Vec<Polynomial>) -> Self {
        let reducer = Reducer::new(&polys);
        Basis { polys, reducer }
    }
}

/// An ideal of a polynomial ring, given by generators.
///
/// The reduced `DiagonalLex` Gröbner basis is computed on first use and
/// cached; it is the ideal's canonical identity. Two `Ideal` values describe
/// the same ideal exactly when their bases agree.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Basis>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.ring() != ring) {
            return Err(Error::Context(format!(
                "generator in {} for ideal of {}",
                bad.ring(),
                ring
            )));
        }
        Ok(Ideal {
            ring,
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::from_reduced_basis(ring, Vec::new())
    }

    pub fn unit(ring: Ring) -> Self {
        Ideal::from_reduced_basis(ring, vec![Polynomial::one(ring)])
    }

    pub fn principal(p: Polynomial) -> Self {
        let ring = p.ring();
        Ideal {
            ring,
            gens: vec![p],
            gb: OnceLock::new(),
        }
    }

    /// Ideal generated by the given variables.
    pub fn of_vars(ring: Ring, vars: impl IntoIterator<Item = VarId>) -> Self {
        let mut vars: Vec<VarId> = vars.into_iter().collect();
        vars.sort();
        vars.dedup();
        Ideal::from_reduced_basis(ring, vars.into_iter().map(|v| Polynomial::var(ring, v)).collect())
    }

    /// `gb` must already be the reduced `DiagonalLex` basis, sorted by
    /// decreasing leading term.
    pub(crate) fn from_reduced_basis(ring: Ring, gb: Vec<Polynomial>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Basis::new(gb.clone()));
        Ideal {
            ring,
            gens: gb,
            gb: cell,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    fn basis(&self) -> &Basis {
        self.gb.get_or_init(|| {
            Basis::new(groebner(&self.gens, &TermOrder::DiagonalLex).expect("generators share the ideal's ring"))
        })
    }

    /// Reduced Gröbner basis under `DiagonalLex`.
    pub fn gb(&self) -> &[Polynomial] {
        &self.basis().polys
    }

    pub fn is_zero(&self) -> bool {
        self.gb().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().is_some_and(|g| g.is_constant())
    }

    /// Whether the given generators already form a Gröbner basis.
    pub fn generators_form_gb(&self) -> bool {
        is_groebner(&self.gens, &TermOrder::DiagonalLex).expect("generators share the ideal's ring")
    }

    fn check_ring(&self, ring: Ring) -> Result<()> {
        if ring != self.ring {
            return Err(Error::Context(format!("{} vs {}", self.ring, ring)));
        }
        Ok(())
    }

    pub fn contains_poly(&self, p: &Polynomial) -> Result<bool> {
        self.check_ring(p.ring())?;
        Ok(self.basis().reducer.reduces_to_zero(p))
    }

    /// Normal form of `p` modulo the reduced basis.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_ring(p.ring())?;
        Ok(self.basis().reducer.normal_form(p))
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other.ring)?;
        let gens = match other.gb.get() {
            Some(b) => &b.polys,
            None => &other.gens,
        };
        Ok(gens.iter().all(|g| self.basis().reducer.reduces_to_zero(g)))
    }

    /// Ideal equality.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other.ring)?;
        Ok(self.gb() == other.gb())
    }

    /// Text of the reduced basis, one polynomial per line.
    pub fn canonical_text(&self) -> String {
        let mut s = format!("{}\n", self.ring);
        for g in self.gb() {
            s.push_str(&g.render());
            s.push('\n');
        }
        s
    }

    /// SHA-256 of [`Ideal::canonical_text`], hex encoded.
    pub fn gb_hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }

    /// Generators of the initial ideal under `DiagonalLex`.
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.gb()
            .iter()
            .map(|g| g.leading_monomial(&TermOrder::DiagonalLex).unwrap().clone())
            .collect()
    }

    pub fn has_squarefree_initial_ideal(&self) -> bool {
        self.initial_monomials().iter().all(Monomial::is_squarefree)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other.ring)?;
        Ideal::new(self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other.ring)?;
        if self.is_zero() || other.is_unit() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_unit() {
            return Ok(other.clone());
        }
        let big = self.ring.with_aux(self.ring.aux_count() + 1);
        let t = Polynomial::var(big, big.aux_var(self.ring.aux_count()));
        let one_minus_t = &Polynomial::one(big) - &t;
        let mut gens = Vec::new();
        for g in self.gb() {
            gens.push(&t * &g.in_ring(big)?);
        }
        for g in other.gb() {
            gens.push(&one_minus_t * &g.in_ring(big)?);
        }
        let order = TermOrder::eliminating([big.aux_var(self.ring.aux_count())]);
        let gb = groebner(&gens, &order)?;
        self.drop_eliminated(gb, &[big.aux_var(self.ring.aux_count())])
    }

    /// Keeps the basis elements free of `vars` and moves them back into this
    /// ideal's ring.
    fn drop_eliminated(&self, gb: Vec<Polynomial>, vars: &[VarId]) -> Result<Ideal> {
        let mut kept = Vec::new();
        for g in gb {
            if !vars.iter().any(|&v| g.involves(v)) {
                kept.push(g.in_ring(self.ring)?);
            }
        }
        sort_basis(&mut kept);
        Ok(Ideal::from_reduced_basis(self.ring, kept))
    }

    /// `I ∩ k[remaining variables]`.
    pub fn eliminate(&self, vars: &[VarId]) -> Result<Ideal> {
        if let Some(v) = vars.iter().find(|v| !self.ring.contains_var(**v)) {
            return Err(Error::Context(format!(
                "variable index {} not in {}",
                v.index(),
                self.ring
            )));
        }
        let order = TermOrder::eliminating(vars.iter().copied());
        let gb = groebner(&self.gens, &order)?;
        self.drop_eliminated(gb, vars)
    }

    /// `I : (g)`.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        self.check_ring(g.ring())?;
        if g.is_zero() {
            return Err(Error::Domain("colon by the zero ideal".into()));
        }
        let meet = self.intersect(&Ideal::principal(g.clone()))?;
        let quotients = meet
            .gb()
            .iter()
            .map(|h| h.div_exact(g).expect("elements of I ∩ (g) are multiples of g"))
            .collect::<Vec<_>>();
        Ideal::new(self.ring, quotients)
    }

    /// `I : J`, the intersection of `I : (g)` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other.ring)?;
        let gens: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::Domain("colon by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in gens {
            let q = self.colon_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Same generators with coefficients mapped into `field`.
    pub fn change_field(&self, field: Field) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.change_field(field))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.with_field(field), gens)
    }
}

/// Sorts by decreasing `DiagonalLex` leading monomial.
pub(crate) fn sort_basis(polys: &mut [Polynomial]) {
    polys.sort_by(|a, b| {
        let o = TermOrder::DiagonalLex;
        o.compare(b.leading_monomial(&o).unwrap(), a.leading_monomial(&o).unwrap())
    });
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<String> = self.gens.iter().filter(|g| !g.is_zero()).map(|g| g.render()).collect();
        if nonzero.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", nonzero.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: usize) -> Ring {
        Ring::classical(n)
    }

    fn f(ring: Ring, i: usize, j: usize) -> Polynomial {
        Polynomial::minor2(ring, i, j)
    }

    #[test]
    fn coprime_principal_intersection() {
        let ring = r(1);
        let x = Ideal::principal(Polynomial::var(ring, ring.x(1)));
        let y = Ideal::principal(Polynomial::var(ring, ring.y(1)));
        let meet = x.intersect(&y).unwrap();
        let xy = Polynomial::parse(ring, "x1*y1").unwrap();
        assert_eq!(meet.gb(), &[xy]);
    }

    #[test]
    fn principal_colon() {
        let ring = r(2);
        let sq = Ideal::principal(f(ring, 1, 2).pow(2));
        let q = sq.colon(&Ideal::principal(f(ring, 1, 2))).unwrap();
        assert!(q.same_as(&Ideal::principal(f(ring, 1, 2))).unwrap());
    }

    #[test]
    fn colon_by_zero_is_a_domain_error() {
        let ring = r(2);
        let i = Ideal::principal(f(ring, 1, 2));
        assert!(matches!(i.colon(&Ideal::zero(ring)), Err(Error::Domain(_))));
        assert!(matches!(i.colon_poly(&Polynomial::zero(ring)), Err(Error::Domain(_))));
    }

    #[test]
    fn membership() {
        let ring = r(3);
        let k3 = Ideal::new(ring, [f(ring, 1, 2), f(ring, 1, 3), f(ring, 2, 3)]).unwrap();
        let path = Ideal::new(ring, [f(ring, 1, 2), f(ring, 2, 3)]).unwrap();
        assert!(k3.contains_poly(&f(ring, 1, 3)).unwrap());
        assert!(!path.contains_poly(&f(ring, 1, 3)).unwrap());
        assert!(k3.contains(&path).unwrap());
        assert!(!path.contains(&k3).unwrap());
    }

    #[test]
    fn unit_multiples_generate_the_same_ideal() {
        let ring = r(2);
        let a = Ideal::principal(f(ring, 1, 2));
        let b = Ideal::principal(f(ring, 1, 2).scale(&crate::poly::Coefficient::from_i64(ring.field(), -3)));
        assert!(a.same_as(&b).unwrap());
        assert_eq!(a.gb_hash(), b.gb_hash());
    }

    #[test]
    fn elimination() {
        let ring = r(2);
        let i = Ideal::new(
            ring,
            [
                Polynomial::parse(ring, "x1 - x2^2").unwrap(),
                Polynomial::parse(ring, "y1 - x2^3").unwrap(),
            ],
        )
        .unwrap();
        let e = i.eliminate(&[ring.x(2)]).unwrap();
        assert_eq!(e.gb(), &[Polynomial::parse(ring, "x1^3 - y1^2").unwrap()]);
    }

    #[test]
    fn mixing_rings_is_a_context_error() {
        let a = Ideal::principal(f(r(2), 1, 2));
        let b = Ideal::principal(f(r(3), 1, 2));
        assert!(matches!(a.sum(&b), Err(Error::Context(_))));
        assert!(matches!(a.contains(&b), Err(Error::Context(_))));
    }

    #[test]
    fn display() {
        let ring = r(2);
        assert_eq!(Ideal::principal(f(ring, 1, 2)).to_string(), "(x1*y2 - x2*y1)");
        assert_eq!(Ideal::zero(ring).to_string(), "(0)");
    }
}
