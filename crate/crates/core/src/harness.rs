//! Exhaustive and sampled verification suites over small graphs and
//! explored families.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bei::{
    binomial_edge_ideal, closed_gb_check, generalized_bei, minimal_cut_sets, minimal_primes_bei, psps_condition,
    verify_decomposition, StructuredPrime,
};
use crate::error::{Error, Result};
use crate::fpurity::{fedder_for_graph, verify_witness};
use crate::graph::{
    enumerate_graphs, find_weakly_closed_labeling, is_closed_under, Graph, Labeling, VertexSet, ENUMERATION_BOUND,
};
use crate::knutson::{
    certify_membership_jg, check_sum_distributes, explore_closure, min_primes_structured, replay, shape_check,
    shape_of, CertifyOutcome, StructuredIdeal,
};
use crate::poly::{Field, Ring};

/// Failure messages kept per summary.
const KEPT_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Closed labelings versus Gröbner bases of the natural generators.
    GbClosed,
    /// Intersection of the minimal primes equals the ideal.
    Decomposition,
    /// Weakly closed labelings versus minimal primes in closed form.
    Psps,
    /// Membership certificates for weakly closed graphs.
    Knutson,
    /// Normal form of the minimal primes met in closure exploration.
    Pridcf,
    /// Fedder test on weakly closed graphs.
    Fpure,
    /// Squarefree initial ideals of weakly closed graphs.
    Squarefree,
    /// Sum over intersection on explored ideals.
    Distributivity,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::GbClosed,
        Suite::Decomposition,
        Suite::Psps,
        Suite::Knutson,
        Suite::Pridcf,
        Suite::Fpure,
        Suite::Squarefree,
        Suite::Distributivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GbClosed => "gb-closed",
            Suite::Decomposition => "decomposition",
            Suite::Psps => "psps",
            Suite::Knutson => "knutson",
            Suite::Pridcf => "pridcf",
            Suite::Fpure => "fpure",
            Suite::Squarefree => "squarefree",
            Suite::Distributivity => "distributivity",
        }
    }

    /// Largest `n_max` the suite accepts.
    pub fn max_n(self) -> usize {
        match self {
            Suite::GbClosed => 5,
            Suite::Decomposition => 6,
            Suite::Psps => 6,
            Suite::Knutson => 5,
            Suite::Pridcf => 4,
            Suite::Fpure => 4,
            Suite::Squarefree => 6,
            Suite::Distributivity => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown suite '{s}'")))
    }
}

/// Counts for one suite run. `elapsed` is left out of the JSON form so
/// that repeated runs serialize identically.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub n_max: usize,
    pub tested: usize,
    pub passed: usize,
    pub failed: usize,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteSummary {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.tested > 0
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (n <= {}): tested {}, passed {}, failed {}, {:.2}s",
            self.suite,
            self.n_max,
            self.tested,
            self.passed,
            self.failed,
            self.elapsed.as_secs_f64()
        )?;
        for msg in &self.failures {
            write!(f, "\n  FAIL {msg}")?;
        }
        Ok(())
    }
}

/// Outcome of one case: `None` on success, a description on failure.
type Case = Option<String>;

fn summarize(suite: Suite, n_max: usize, cases: Vec<Case>, start: Instant) -> SuiteSummary {
    let tested = cases.len();
    let failures: Vec<String> = cases.into_iter().flatten().collect();
    SuiteSummary {
        suite,
        n_max,
        tested,
        passed: tested - failures.len(),
        failed: failures.len(),
        failures: failures.into_iter().take(KEPT_FAILURES).collect(),
        elapsed: start.elapsed(),
    }
}

fn graphs(n_max: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_graphs(n, connected_only)?);
    }
    Ok(out)
}

/// Connected graphs up to `n_max` that admit a weakly closed labeling.
pub fn weakly_closed_graphs(n_max: usize) -> Result<Vec<Graph>> {
    let all = graphs(n_max, true)?;
    let keep: Vec<bool> = all
        .par_iter()
        .map(|g| find_weakly_closed_labeling(g).map(|l| l.is_some()))
        .collect::<Result<_>>()?;
    Ok(all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect())
}

pub fn all_labelings(n: usize) -> impl Iterator<Item = Labeling> {
    (1..=n).permutations(n).map(|p| Labeling::new(p).expect("permutation"))
}

fn check(ok: Result<bool>, what: impl FnOnce() -> String) -> Case {
    match ok {
        Ok(true) => None,
        Ok(false) => Some(what()),
        Err(e) => Some(format!("{}: {e}", what())),
    }
}

/// Runs `suite` up to `n_max`; `seed` drives the sampled parts.
pub fn run_suite(suite: Suite, n_max: usize, seed: u64) -> Result<SuiteSummary> {
    if n_max == 0 || n_max > suite.max_n() || n_max > ENUMERATION_BOUND {
        return Err(Error::Capacity {
            what: suite.name(),
            max: suite.max_n(),
            got: n_max,
        });
    }
    let start = Instant::now();
    let cases = match suite {
        Suite::GbClosed => gb_closed(n_max, false)?,
        Suite::Decomposition => decomposition(n_max)?,
        Suite::Psps => {
            let mut cases = psps(n_max)?;
            cases.extend(psps_spot_checks(n_max, 100, seed)?);
            cases
        }
        Suite::Knutson => certificates(n_max)?,
        Suite::Pridcf => pridcf(n_max)?,
        Suite::Fpure => fpure(n_max)?,
        Suite::Squarefree => squarefree(n_max)?,
        Suite::Distributivity => distributivity(n_max, 2, 200, seed)?,
    };
    Ok(summarize(suite, n_max, cases, start))
}

/// Every labeled graph (or every connected one) and every labeling: closed
/// under the labeling iff the natural generators form a Gröbner basis.
pub fn gb_closed(n_max: usize, connected_only: bool) -> Result<Vec<Case>> {
    let all = graphs(n_max, connected_only)?;
    let per_graph: Vec<Vec<Case>> = all
        .par_iter()
        .map(|g| {
            all_labelings(g.n())
                .map(|lab| {
                    let same = is_closed_under(g, &lab).and_then(|closed| Ok(closed == closed_gb_check(g, &lab)?));
                    check(same, || format!("{g} under {lab}"))
                })
                .collect()
        })
        .collect();
    Ok(per_graph.into_iter().flatten().collect())
}

/// Connected graphs: the minimal cut-set primes intersect to `J_G`, and
/// for `n <= 5` they are the inclusion-minimal primes among all `P_S`.
pub fn decomposition(n_max: usize) -> Result<Vec<Case>> {
    let all = graphs(n_max, true)?;
    Ok(all
        .par_iter()
        .map(|g| {
            let ok = minimal_cut_sets(g).and_then(|primes| {
                let mut ok = verify_decomposition(g, &primes, 2)?;
                if g.n() <= 5 {
                    let sets = |ps: &[StructuredPrime]| ps.iter().map(|p| p.s()).collect::<Vec<_>>();
                    ok &= sets(&primes) == sets(&minimal_primes_bei(g)?);
                }
                Ok(ok)
            });
            check(ok, || g.to_string())
        })
        .collect())
}

/// Connected graphs: a weakly closed labeling exists iff some labeling puts
/// every minimal prime in closed form.
pub fn psps(n_max: usize) -> Result<Vec<Case>> {
    let all = graphs(n_max, true)?;
    Ok(all
        .par_iter()
        .map(|g| {
            let ok = find_weakly_closed_labeling(g).and_then(|wc| {
                let mut found = false;
                for lab in all_labelings(g.n()) {
                    if psps_condition(g, &lab)? {
                        found = true;
                        break;
                    }
                }
                Ok(wc.is_some() == found)
            });
            check(ok, || g.to_string())
        })
        .collect())
}

/// Random connected graph and vertex set: `P_S` equals its closure as an
/// ideal iff the gap condition holds.
pub fn psps_spot_checks(n_max: usize, samples: usize, seed: u64) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = graphs(n_max, true)?;
    let picks: Vec<(Graph, VertexSet)> = (0..samples)
        .map(|_| {
            let g = pool.choose(&mut rng).expect("graphs").clone();
            let s = VertexSet::from_bits(rng.gen_range(0..1u64 << g.n()));
            (g, s)
        })
        .collect();
    Ok(picks
        .par_iter()
        .map(|(g, s)| {
            let p = StructuredPrime::prime_ps(g, *s);
            let ring = Ring::classical(g.n());
            let ok = (|| {
                let (closed, _) = p.close();
                let equal = p.to_ideal(ring)?.same_as(&closed.to_ideal(ring)?)?;
                Ok(equal == p.gap_condition())
            })();
            check(ok, || format!("{g}, S = {s}"))
        })
        .collect())
}

/// Connected graphs: weakly closed ones get a verified certificate that
/// replays after a JSON round trip; the others are refused.
pub fn certificates(n_max: usize) -> Result<Vec<Case>> {
    let all = graphs(n_max, true)?;
    Ok(all
        .par_iter()
        .map(|g| {
            let ok = (|| {
                let wc = find_weakly_closed_labeling(g)?.is_some();
                Ok(match certify_membership_jg(g, 2)? {
                    CertifyOutcome::Certified(c) => {
                        let json = serde_json::to_string(&c).expect("serializable");
                        let back = serde_json::from_str(&json).map_err(|e| Error::parse(0, e.to_string()))?;
                        wc && c.verified && replay(&back)?
                    }
                    CertifyOutcome::Refused(_) => !wc,
                })
            })();
            check(ok, || g.to_string())
        })
        .collect())
}

/// For each `n`: the minimal primes of `(f)` are its `n + 1` factors, and
/// every minimal prime met in `explore_closure(n, 3)` has the normal form,
/// checked on the data and on the rebuilt ideal.
pub fn pridcf(n_max: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        let primes = min_primes_structured(&StructuredIdeal::f(n))?;
        let mut expected = vec![format!("(x{n})"), format!("(y1)")];
        expected.extend((1..n).map(|i| format!("(I_2{{{},{}}})", i, i + 1)));
        expected.sort();
        let mut got: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
        got.sort();
        let n_ok = got == expected && primes.len() == n + 1;
        cases.push((!n_ok).then(|| format!("n = {n}: min primes of (f) are {got:?}")));

        let reg = explore_closure(n, 3, 5000)?;
        let shapes: Vec<Case> = reg
            .all_minimal_primes()
            .par_iter()
            .map(|p| (shape_of(p).is_none() || !shape_check(&p.to_ideal())).then(|| format!("n = {n}: {p}")))
            .collect();
        cases.extend(shapes);
    }
    Ok(cases)
}

/// Weakly closed connected graphs: F-pure at `p = 2` up to `n_max`, at
/// `p = 3` up to `min(n_max, 3)`, and on three rows at `p = 2` up to
/// `min(n_max, 3)`. Witnesses are re-checked by membership.
pub fn fpure(n_max: usize) -> Result<Vec<Case>> {
    let mut jobs = Vec::new();
    for g in weakly_closed_graphs(n_max)? {
        let small = g.n() <= 3;
        jobs.push((g.clone(), 2, 2));
        if small {
            jobs.push((g.clone(), 2, 3));
            jobs.push((g, 3, 2));
        }
    }
    Ok(jobs
        .par_iter()
        .map(|(g, m, p)| {
            let ok = (|| {
                let rep = fedder_for_graph(g, *m, *p)?;
                let Some(w) = rep.witness.as_ref().filter(|_| rep.is_fpure()) else {
                    return Ok(false);
                };
                let ideal = generalized_bei(g, *m).change_field(Field::prime(*p)?)?;
                verify_witness(&ideal, *p, w)
            })();
            check(ok, || format!("{g}, m = {m}, p = {p}"))
        })
        .collect())
}

/// Weakly closed connected graphs: the reduced basis of `J_G` has
/// squarefree leading terms, in the given labeling and in the weakly
/// closed one.
pub fn squarefree(n_max: usize) -> Result<Vec<Case>> {
    let all = weakly_closed_graphs(n_max)?;
    Ok(all
        .par_iter()
        .map(|g| {
            let ok = (|| {
                let lab = find_weakly_closed_labeling(g)?.expect("weakly closed");
                let h = g.relabel(&lab)?;
                Ok(binomial_edge_ideal(g).has_squarefree_initial_ideal()
                    && binomial_edge_ideal(&h).has_squarefree_initial_ideal())
            })();
            check(ok, || g.to_string())
        })
        .collect())
}

/// Random triples from `explore_closure(n, depth)`.
pub fn distributivity(n: usize, depth: usize, samples: usize, seed: u64) -> Result<Vec<Case>> {
    let reg = explore_closure(n, depth, 5000)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = reg.len();
    let triples: Vec<[usize; 3]> = (0..samples)
        .map(|_| [rng.gen_range(0..len), rng.gen_range(0..len), rng.gen_range(0..len)])
        .collect();
    Ok(triples
        .par_iter()
        .map(|&[i, j, k]| {
            let e = |id: usize| &reg.entries()[id].ideal;
            check(check_sum_distributes(e(i), e(j), e(k)), || {
                format!("entries {i}, {j}, {k}")
            })
        })
        .collect())
}
