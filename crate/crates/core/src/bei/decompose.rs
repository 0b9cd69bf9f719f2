use rayon::prelude::*;
use serde::Serialize;

use super::{binomial_edge_ideal, generalized_bei, StructuredPrime};
use crate::error::{Error, Result};
use crate::graph::{is_closed, Graph, Labeling, VertexSet};
use crate::ideal::{is_groebner, Ideal};
use crate::poly::{Field, Ring, TermOrder};

/// Largest `n` for the algebraic minimal-prime filter.
pub const MINIMAL_PRIMES_BOUND: usize = 7;

/// Largest `n` for the combinatorial minimal-prime filter.
const CUT_SET_BOUND: usize = 14;

fn sort_primes(primes: &mut [StructuredPrime]) {
    primes.sort_by_key(|p| (p.s().len(), p.s().to_vec()));
}

/// Subsets of `s` other than `s` itself.
fn proper_subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let full = s.bits();
    let mut sub = full;
    std::iter::from_fn(move || {
        if sub == 0 {
            return None;
        }
        sub = (sub - 1) & full;
        Some(VertexSet::from_bits(sub))
    })
}

fn all_primes(g: &Graph) -> Vec<StructuredPrime> {
    (0..1u64 << g.n())
        .map(|bits| StructuredPrime::prime_ps(g, VertexSet::from_bits(bits)))
        .collect()
}

fn minimal_by_ideals(g: &Graph, rows: usize) -> Result<Vec<StructuredPrime>> {
    if g.n() > MINIMAL_PRIMES_BOUND {
        return Err(Error::Capacity {
            what: "minimal primes",
            max: MINIMAL_PRIMES_BOUND,
            got: g.n(),
        });
    }
    let ring = Ring::new(rows, g.n(), Field::Rational);
    let primes = all_primes(g);
    let ideals: Vec<Ideal> = primes
        .par_iter()
        .map(|p| p.to_ideal(ring).expect("ring fits"))
        .collect();
    // P_T ⊆ P_S forces the variables of T into P_S, hence T ⊆ S; only
    // those pairs need an ideal comparison.
    let minimal: Vec<bool> = (0..primes.len())
        .into_par_iter()
        .map(|k| {
            let s = primes[k].s();
            !proper_subsets(s).any(|t| ideals[k].contains(&ideals[t.bits() as usize]).expect("same ring"))
        })
        .collect();
    let mut out: Vec<StructuredPrime> = primes
        .into_iter()
        .zip(minimal)
        .filter(|(_, keep)| *keep)
        .map(|(p, _)| p)
        .collect();
    sort_primes(&mut out);
    Ok(out)
}

/// Inclusion-minimal primes among all `P_S`, `S ⊆ [n]`, found by comparing
/// the expanded ideals.
pub fn minimal_primes_bei(g: &Graph) -> Result<Vec<StructuredPrime>> {
    minimal_by_ideals(g, 2)
}

/// Minimal primes of the generalized binomial edge ideal on `m` rows.
pub fn minimal_primes_generalized(g: &Graph, m: usize) -> Result<Vec<StructuredPrime>> {
    minimal_by_ideals(g, m)
}

/// Minimal primes selected from the graph data alone, using
/// [`StructuredPrime::is_contained_in`]. Agrees with
/// [`minimal_primes_bei`] and reaches larger graphs.
pub fn minimal_cut_sets(g: &Graph) -> Result<Vec<StructuredPrime>> {
    if g.n() > CUT_SET_BOUND {
        return Err(Error::Capacity {
            what: "minimal cut sets",
            max: CUT_SET_BOUND,
            got: g.n(),
        });
    }
    let primes = all_primes(g);
    let mut out: Vec<StructuredPrime> = primes
        .iter()
        .filter(|p| !proper_subsets(p.s()).any(|t| primes[t.bits() as usize].is_contained_in(p)))
        .cloned()
        .collect();
    sort_primes(&mut out);
    Ok(out)
}

/// Every minimal prime of `J_G` under `lab` equals its closure.
pub fn psps_condition(g: &Graph, lab: &Labeling) -> Result<bool> {
    let h = g.relabel(lab)?;
    Ok(minimal_cut_sets(&h)?.iter().all(StructuredPrime::gap_condition))
}

/// The natural generators of `J_G` under `lab` form a `DiagonalLex`
/// Gröbner basis.
pub fn closed_gb_check(g: &Graph, lab: &Labeling) -> Result<bool> {
    let h = g.relabel(lab)?;
    is_groebner(binomial_edge_ideal(&h).generators(), &TermOrder::DiagonalLex)
}

/// Intersects the primes and compares with `J_G` (on `rows` rows).
pub fn verify_decomposition(g: &Graph, primes: &[StructuredPrime], rows: usize) -> Result<bool> {
    let target = generalized_bei(g, rows);
    let ring = target.ring();
    let mut ideals: Vec<Ideal> = primes.iter().map(|p| p.to_ideal(ring)).collect::<Result<_>>()?;
    if ideals.is_empty() {
        return Ok(false);
    }
    // Pairwise rounds keep the intermediate intersections small.
    while ideals.len() > 1 {
        ideals = ideals
            .par_chunks(2)
            .map(|pair| match pair {
                [a, b] => a.intersect(b),
                [a] => Ok(a.clone()),
                _ => unreachable!(),
            })
            .collect::<Result<_>>()?;
    }
    ideals[0].same_as(&target)
}

/// One prime of a [`DecompositionReport`].
#[derive(Clone, Debug, Serialize)]
pub struct PrimeEntry {
    #[serde(rename = "S")]
    pub s: VertexSet,
    pub cliques: Vec<VertexSet>,
    pub intervals: Vec<(usize, usize)>,
    /// `P_S` coincides with its closure.
    pub closed_form: bool,
}

/// Minimal primes of `J_G` for a labeled graph, with the check that their
/// intersection is `J_G`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub graph: Graph,
    pub labeling: Labeling,
    pub closed: bool,
    pub minimal_primes: Vec<PrimeEntry>,
    pub decomposition_verified: bool,
    pub tool: String,
    pub term_order: String,
}

/// Decomposes `J_G` for `G` relabeled by `lab`.
pub fn decompose(g: &Graph, lab: &Labeling) -> Result<DecompositionReport> {
    let h = g.relabel(lab)?;
    let primes = minimal_primes_bei(&h)?;
    let decomposition_verified = verify_decomposition(&h, &primes, 2)?;
    let minimal_primes = primes
        .iter()
        .map(|p| {
            let (closed, changed) = p.close();
            PrimeEntry {
                s: p.s(),
                cliques: p.cliques().to_vec(),
                intervals: closed.intervals().unwrap().to_vec(),
                closed_form: !changed,
            }
        })
        .collect();
    Ok(DecompositionReport {
        graph: h.clone(),
        labeling: lab.clone(),
        closed: is_closed(&h),
        minimal_primes,
        decomposition_verified,
        tool: crate::tool_id(),
        term_order: Ring::classical(h.n()).order_convention(),
    })
}
