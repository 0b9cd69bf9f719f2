//! Bounded breadth-first exploration of the family generated by the seeds
//! under sums, intersections and minimal primes.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::prime_form::{min_primes_of_pairwise_sum, minimalize};
use super::{min_primes_structured, PrimeForm, Seed, StructuredIdeal};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::ideal::Ideal;
use crate::poly::Ring;

/// Largest number of columns accepted by [`explore`].
pub const EXPLORE_BOUND: usize = 5;

/// How an entry was obtained from earlier entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Derivation {
    Seed(Seed),
    Sum(usize, usize),
    Intersect(usize, usize),
    /// The `index`-th minimal prime of entry `of`.
    MinPrime {
        of: usize,
        index: usize,
    },
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivation::Seed(s) => write!(f, "seed {s}"),
            Derivation::Sum(a, b) => write!(f, "sum({a},{b})"),
            Derivation::Intersect(a, b) => write!(f, "intersect({a},{b})"),
            Derivation::MinPrime { of, index } => write!(f, "minprime({of},{index})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RegistryEntry {
    pub id: usize,
    pub ideal: Ideal,
    /// Minimal primes, sorted.
    pub min_primes: Vec<PrimeForm>,
    pub derivation: Derivation,
    /// Round in which the entry first appeared; seeds have depth 0.
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct ExploreConfig {
    pub n: usize,
    pub max_depth: usize,
    pub max_ideals: usize,
    /// Admit the adjacent-column determinantal ideals as seeds.
    pub seed_axiom: bool,
}

impl ExploreConfig {
    pub fn new(n: usize) -> Self {
        ExploreConfig {
            n,
            max_depth: 3,
            max_ideals: 5000,
            seed_axiom: true,
        }
    }
}

/// Explored part of the family, one entry per distinct ideal.
#[derive(Clone, Debug)]
pub struct ClosureRegistry {
    n: usize,
    entries: Vec<RegistryEntry>,
    truncated: bool,
    by_primes: HashMap<Vec<PrimeForm>, usize>,
    by_hash: HashMap<String, usize>,
}

/// A candidate waiting for its ideal to be computed.
struct Pending {
    min_primes: Vec<PrimeForm>,
    derivation: Derivation,
}

impl ClosureRegistry {
    fn new(n: usize) -> Self {
        ClosureRegistry {
            n,
            entries: Vec::new(),
            truncated: false,
            by_primes: HashMap::new(),
            by_hash: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[RegistryEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether exploration stopped at `max_ideals` with candidates left.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn get(&self, id: usize) -> Option<&RegistryEntry> {
        self.entries.get(id)
    }

    /// The entry whose ideal has the same reduced basis as `ideal`.
    pub fn lookup(&self, ideal: &Ideal) -> Option<&RegistryEntry> {
        self.by_hash.get(&ideal.gb_hash()).map(|&id| &self.entries[id])
    }

    /// Every distinct minimal prime met during exploration, sorted.
    pub fn all_minimal_primes(&self) -> Vec<PrimeForm> {
        let all: BTreeSet<&PrimeForm> = self.entries.iter().flat_map(|e| &e.min_primes).collect();
        all.into_iter().cloned().collect()
    }

    /// Recomputes entry `id` from the stored ideals of its parents and
    /// compares reduced bases. Minimal primes are rebuilt from generators
    /// and must contain their parent.
    pub fn replay(&self, id: usize) -> Result<bool> {
        let e = self
            .entries
            .get(id)
            .ok_or_else(|| Error::Domain(format!("no registry entry {id}")))?;
        let ring = Ring::classical(self.n);
        let ideal = |k: usize| &self.entries[k].ideal;
        let again = match e.derivation {
            Derivation::Seed(s) => s.ideal(ring)?,
            Derivation::Sum(a, b) => ideal(a).sum(ideal(b))?,
            Derivation::Intersect(a, b) => ideal(a).intersect(ideal(b))?,
            Derivation::MinPrime { of, index } => {
                let p = &self.entries[of].min_primes[index];
                let rebuilt = Ideal::new(ring, p.to_ideal().generators().to_vec())?;
                if !rebuilt.contains(ideal(of))? {
                    return Ok(false);
                }
                rebuilt
            }
        };
        Ok(again.gb() == e.ideal.gb())
    }

    /// Whether entry `id` equals the intersection of its minimal primes.
    pub fn is_radical_consistent(&self, id: usize) -> Result<bool> {
        let e = &self.entries[id];
        let ring = Ring::classical(self.n);
        let mut acc: Option<Ideal> = None;
        for p in &e.min_primes {
            let q = p.to_ideal();
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        let acc = acc.unwrap_or_else(|| Ideal::unit(ring));
        Ok(acc.gb() == e.ideal.gb())
    }

    /// Computes the ideals of `batch` in parallel and registers them in
    /// order, up to `cap` entries in total.
    fn admit(&mut self, batch: Vec<Pending>, depth: usize, cap: usize) -> Result<()> {
        let ring = Ring::classical(self.n);
        let mut fresh = Vec::new();
        let mut keys = BTreeSet::new();
        for p in batch {
            if self.by_primes.contains_key(&p.min_primes) || !keys.insert(p.min_primes.clone()) {
                continue;
            }
            fresh.push(p);
        }
        let room = cap.saturating_sub(self.entries.len());
        if fresh.len() > room {
            fresh.truncate(room);
            self.truncated = true;
        }
        let ideals: Vec<Ideal> = fresh.par_iter().map(|p| self.build(ring, p)).collect::<Result<_>>()?;
        for (p, ideal) in fresh.into_iter().zip(ideals) {
            let hash = ideal.gb_hash();
            if let Some(&id) = self.by_hash.get(&hash) {
                self.by_primes.insert(p.min_primes, id);
                continue;
            }
            let id = self.entries.len();
            self.by_hash.insert(hash, id);
            self.by_primes.insert(p.min_primes.clone(), id);
            self.entries.push(RegistryEntry {
                id,
                ideal,
                min_primes: p.min_primes,
                derivation: p.derivation,
                depth,
            });
        }
        Ok(())
    }

    fn build(&self, ring: Ring, p: &Pending) -> Result<Ideal> {
        let ideal = |k: usize| &self.entries[k].ideal;
        match p.derivation {
            Derivation::Seed(s) => s.ideal(ring),
            Derivation::Sum(a, b) => ideal(a).sum(ideal(b)),
            Derivation::Intersect(a, b) => ideal(a).intersect(ideal(b)),
            Derivation::MinPrime { of, index } => Ok(self.entries[of].min_primes[index].to_ideal()),
        }
    }
}

fn seed_primes(n: usize, seed: Seed) -> Result<Vec<PrimeForm>> {
    Ok(match seed {
        Seed::F => min_primes_structured(&StructuredIdeal::f(n))?,
        Seed::Column(a) => vec![PrimeForm::from_columns(n, VertexSet::singleton(a), [])?],
        Seed::Interval(a, b) => vec![PrimeForm::new(
            n,
            VertexSet::EMPTY,
            VertexSet::EMPTY,
            [VertexSet::interval(a, b)],
        )?],
    })
}

/// Explores with the default bounds except for `max_depth` and
/// `max_ideals`.
pub fn explore_closure(n: usize, max_depth: usize, max_ideals: usize) -> Result<ClosureRegistry> {
    explore(&ExploreConfig {
        max_depth,
        max_ideals,
        ..ExploreConfig::new(n)
    })
}

/// Round `d` adds the minimal primes of the entries found in round `d - 1`,
/// then the sums and intersections of every pair with at least one member
/// from round `d - 1`. Candidates are identified by their minimal primes
/// (ideals of the family are radical) and their reduced bases.
pub fn explore(config: &ExploreConfig) -> Result<ClosureRegistry> {
    let n = config.n;
    if n == 0 || n > EXPLORE_BOUND {
        return Err(Error::Capacity {
            what: "closure exploration",
            max: EXPLORE_BOUND,
            got: n,
        });
    }
    let cap = config.max_ideals;
    let mut reg = ClosureRegistry::new(n);
    let seeds = Seed::all(n, config.seed_axiom)
        .into_iter()
        .map(|s| {
            Ok(Pending {
                min_primes: seed_primes(n, s)?,
                derivation: Derivation::Seed(s),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reg.admit(seeds, 0, cap)?;

    let mut start = 0;
    for depth in 1..=config.max_depth {
        let end = reg.entries.len();
        if start == end || reg.truncated {
            break;
        }
        let mut batch = Vec::new();
        for e in &reg.entries[start..end] {
            if e.min_primes.len() > 1 {
                batch.extend(e.min_primes.iter().enumerate().map(|(index, p)| Pending {
                    min_primes: vec![p.clone()],
                    derivation: Derivation::MinPrime { of: e.id, index },
                }));
            }
        }
        reg.admit(batch, depth, cap)?;

        let entries = &reg.entries;
        let pairs: Vec<(usize, usize)> = (start..end).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let batch: Vec<Pending> = pairs
            .par_iter()
            .flat_map_iter(|&(i, j)| {
                let (a, b) = (&entries[i].min_primes, &entries[j].min_primes);
                let mut union = a.clone();
                union.extend(b.iter().cloned());
                [
                    Pending {
                        min_primes: min_primes_of_pairwise_sum(a, b),
                        derivation: Derivation::Sum(i, j),
                    },
                    Pending {
                        min_primes: minimalize(union),
                        derivation: Derivation::Intersect(i, j),
                    },
                ]
            })
            .collect();
        reg.admit(batch, depth, cap)?;
        start = end;
    }
    Ok(reg)
}

/// `I + (J ∩ K) = (I + J) ∩ (I + K)`, decided by reduced bases.
pub fn check_sum_distributes(i: &Ideal, j: &Ideal, k: &Ideal) -> Result<bool> {
    let lhs = i.sum(&j.intersect(k)?)?;
    let rhs = i.sum(j)?.intersect(&i.sum(k)?)?;
    lhs.same_as(&rhs)
}
