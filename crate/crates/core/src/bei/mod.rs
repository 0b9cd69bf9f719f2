//! Binomial edge ideals and their prime decomposition.

mod decompose;
mod prime;

use itertools::Itertools;

pub use decompose::{
    closed_gb_check, decompose, minimal_cut_sets, minimal_primes_bei, minimal_primes_generalized, psps_condition,
    verify_decomposition, DecompositionReport, PrimeEntry, MINIMAL_PRIMES_BOUND,
};
pub use prime::{prime_ideal, StructuredPrime};

use crate::graph::Graph;
use crate::ideal::Ideal;
use crate::poly::{Coefficient, Field, Monomial, Polynomial, Ring};

/// `J_G`: one 2-minor `x_i y_j - x_j y_i` per edge `{i, j}`, `i < j`.
pub fn binomial_edge_ideal(g: &Graph) -> Ideal {
    generalized_bei(g, 2)
}

/// All 2-minors of columns `i, j` of the generic `m × n` matrix, over every
/// edge `{i, j}`. For `m = 2` this is [`binomial_edge_ideal`].
pub fn generalized_bei(g: &Graph, m: usize) -> Ideal {
    assert!(m >= 2, "generalized binomial edge ideals need at least two rows");
    let ring = Ring::new(m, g.n(), Field::Rational);
    let gens = g.edges().into_iter().flat_map(|(i, j)| {
        (1..=m)
            .tuple_combinations()
            .map(move |(r, s)| Polynomial::minor_rows(ring, r, s, i, j))
    });
    Ideal::new(ring, gens.collect::<Vec<_>>()).expect("same ring")
}

/// Determinant of the submatrix on the given rows and columns.
pub fn minor(ring: Ring, rows: &[usize], cols: &[usize]) -> Polynomial {
    assert_eq!(rows.len(), cols.len(), "minors are square");
    let t = rows.len();
    let field = ring.field();
    let terms = (0..t).permutations(t).map(|perm| {
        let inversions = (0..t).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let m = Monomial::from_pairs((0..t).map(|k| (ring.var(rows[k], cols[perm[k]]), 1)));
        (m, Coefficient::from_i64(field, sign))
    });
    Polynomial::from_terms(ring, terms)
}

/// `I_t` of the submatrix on `cols` (all rows). `t = 1` gives the variables
/// of those columns; `t` larger than the submatrix gives the zero ideal.
pub fn minor_ideal(ring: Ring, t: usize, cols: &[usize]) -> Ideal {
    assert!(t >= 1, "minor size must be positive");
    let mut cols = cols.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if t > ring.rows() || t > cols.len() {
        return Ideal::zero(ring);
    }
    let gens: Vec<Polynomial> = (1..=ring.rows())
        .combinations(t)
        .flat_map(|rows| cols.iter().copied().combinations(t).map(move |c| (rows.clone(), c)))
        .map(|(rows, c)| minor(ring, &rows, &c))
        .collect();
    Ideal::new(ring, gens).expect("same ring")
}

/// `I_t(X_[a,b])`: `t`-minors on the adjacent columns `a..=b`.
pub fn adjacent_minor_ideal(ring: Ring, t: usize, a: usize, b: usize) -> Ideal {
    assert!(
        1 <= a && a <= b && b <= ring.cols(),
        "column range {a}..{b} outside 1..{}",
        ring.cols()
    );
    minor_ideal(ring, t, &(a..=b).collect::<Vec<_>>())
}
