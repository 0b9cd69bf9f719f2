use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ideal::{sort_basis, Ideal};
use crate::poly::{Polynomial, Ring, VarId};

/// `vars + Σ I_2(columns of block)`.
///
/// When the blocks are pairwise disjoint and avoid the columns of `vars`,
/// the variables together with the block minors already form the reduced
/// `DiagonalLex` basis; otherwise the basis is computed.
pub fn prime_ideal(ring: Ring, vars: impl IntoIterator<Item = VarId>, blocks: &[VertexSet]) -> Ideal {
    let mut vars: Vec<VarId> = vars.into_iter().collect();
    vars.sort();
    vars.dedup();
    let var_cols: VertexSet = vars.iter().filter_map(|&v| ring.coords(v)).map(|(_, c)| c).collect();
    let blocks: Vec<VertexSet> = blocks.iter().copied().filter(|b| b.len() >= 2).collect();
    let mut seen = VertexSet::EMPTY;
    let mut direct = true;
    for b in &blocks {
        if !b.intersection(seen).is_empty() || !b.intersection(var_cols).is_empty() {
            direct = false;
        }
        seen = seen.union(*b);
    }
    let mut gens: Vec<Polynomial> = vars.iter().map(|&v| Polynomial::var(ring, v)).collect();
    for b in &blocks {
        let cols = b.to_vec();
        for (k, &i) in cols.iter().enumerate() {
            for &j in &cols[k + 1..] {
                for r in 1..=ring.rows() {
                    for s in r + 1..=ring.rows() {
                        gens.push(Polynomial::minor_rows(ring, r, s, i, j));
                    }
                }
            }
        }
    }
    if direct {
        sort_basis(&mut gens);
        Ideal::from_reduced_basis(ring, gens)
    } else {
        Ideal::new(ring, gens).expect("same ring")
    }
}

/// Combinatorial description of `P_S` and of its closure `P̄_S`.
///
/// `P_S` is generated by the variables of the columns in `S` and by all
/// 2-minors on each connected component (clique) of `G` with `S` removed.
/// In closed form each clique `V` is replaced by the full column interval
/// `[min V, max V]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructuredPrime {
    n: usize,
    s: VertexSet,
    cliques: Vec<VertexSet>,
    intervals: Option<Vec<(usize, usize)>>,
}

impl StructuredPrime {
    /// `P_S(G)`.
    pub fn prime_ps(g: &Graph, s: VertexSet) -> Self {
        let s = s.intersection(g.vertices());
        StructuredPrime {
            n: g.n(),
            s,
            cliques: g.components(g.vertices().difference(s)),
            intervals: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> VertexSet {
        self.s
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn intervals(&self) -> Option<&[(usize, usize)]> {
        self.intervals.as_deref()
    }

    pub fn is_closed_form(&self) -> bool {
        self.intervals.is_some()
    }

    /// Every vertex strictly between the ends of a clique lies in the clique
    /// or in `S`.
    pub fn gap_condition(&self) -> bool {
        self.cliques.iter().all(|c| match (c.first(), c.last()) {
            (Some(a), Some(b)) => VertexSet::interval(a, b).is_subset(c.union(self.s)),
            _ => true,
        })
    }

    /// `P̄_S` and whether it differs from `P_S` (the gap condition fails).
    pub fn close(&self) -> (StructuredPrime, bool) {
        let intervals = self
            .cliques
            .iter()
            .map(|c| (c.first().unwrap(), c.last().unwrap()))
            .collect();
        let closed = StructuredPrime {
            intervals: Some(intervals),
            ..self.clone()
        };
        (closed, !self.gap_condition())
    }

    /// Column sets carrying 2-minors: the cliques, or in closed form the
    /// intervals with the columns of `S` removed.
    pub fn blocks(&self) -> Vec<VertexSet> {
        match &self.intervals {
            None => self.cliques.clone(),
            Some(iv) => iv
                .iter()
                .map(|&(a, b)| VertexSet::interval(a, b).difference(self.s))
                .collect(),
        }
    }

    /// Expands to an ideal of `ring`, which must have `n` columns.
    pub fn to_ideal(&self, ring: Ring) -> Result<Ideal> {
        if ring.cols() != self.n {
            return Err(Error::Context(format!("prime on {} columns in {}", self.n, ring)));
        }
        let vars = self.s.iter().flat_map(|c| ring.column_vars(c));
        Ok(prime_ideal(ring, vars, &self.blocks()))
    }

    /// `P_S ⊆ P_T` read off the graph data, for primes in open form:
    /// `S ⊆ T`, and two vertices outside `T` that share a clique of `P_S`
    /// share a clique of `P_T`.
    pub fn is_contained_in(&self, other: &StructuredPrime) -> bool {
        if !self.s.is_subset(other.s) {
            return false;
        }
        self.cliques.iter().all(|c| {
            let alive = c.difference(other.s);
            alive.is_empty() || other.cliques.iter().any(|d| alive.is_subset(*d))
        })
    }
}

/// Two-row notation, e.g. `(x3, y3, I_2(X[4,6]))`; cliques of an open form
/// are written as sets, `I_2(X{1,3})`.
impl fmt::Display for StructuredPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.s.iter().flat_map(|c| [format!("x{c}"), format!("y{c}")]).collect();
        match &self.intervals {
            Some(iv) => parts.extend(
                iv.iter()
                    .filter(|(a, b)| a < b)
                    .map(|(a, b)| format!("I_2(X[{a},{b}])")),
            ),
            None => parts.extend(
                self.cliques
                    .iter()
                    .filter(|c| c.len() >= 2)
                    .map(|c| format!("I_2(X{c})")),
            ),
        }
        if parts.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", parts.join(", "))
    }
}
