//! Prime ideals of the shape "variables + 2-minors on disjoint column
//! blocks" and the branching procedure computing minimal primes of their
//! sums.

use std::collections::BTreeSet;
use std::fmt;

use crate::bei::{minimal_cut_sets, prime_ideal};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ideal::Ideal;
use crate::poly::Ring;

/// `(x_c : c ∈ xs) + (y_c : c ∈ ys) + Σ I_2(block)` on a `2 × n` matrix,
/// with blocks pairwise disjoint, of size at least 2, and avoiding the
/// columns that carry a killed variable. Such an ideal is prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeForm {
    n: usize,
    xs: VertexSet,
    ys: VertexSet,
    blocks: Vec<VertexSet>,
}

impl PrimeForm {
    pub fn new(n: usize, xs: VertexSet, ys: VertexSet, blocks: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let cols = VertexSet::full(n);
        let mut blocks: Vec<VertexSet> = blocks.into_iter().filter(|b| b.len() >= 2).collect();
        blocks.sort();
        let killed = xs.union(ys);
        let mut seen = VertexSet::EMPTY;
        for b in &blocks {
            if !b.is_subset(cols) || !b.intersection(seen.union(killed)).is_empty() {
                return Err(Error::Unsupported(format!(
                    "block {b} overlaps another block or a killed column"
                )));
            }
            seen = seen.union(*b);
        }
        if !killed.is_subset(cols) {
            return Err(Error::Domain(format!("columns {killed} outside 1..{n}")));
        }
        Ok(PrimeForm { n, xs, ys, blocks })
    }

    /// The variables of columns in `s` plus 2-minors on `blocks`.
    pub fn from_columns(n: usize, s: VertexSet, blocks: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        PrimeForm::new(n, s, s, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Columns whose `x` variable lies in the prime.
    pub fn killed_x(&self) -> VertexSet {
        self.xs
    }

    /// Columns whose `y` variable lies in the prime.
    pub fn killed_y(&self) -> VertexSet {
        self.ys
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn height(&self) -> usize {
        self.xs.len() + self.ys.len() + self.blocks.iter().map(|b| b.len() - 1).sum::<usize>()
    }

    pub fn ring(&self) -> Ring {
        Ring::classical(self.n)
    }

    pub fn to_ideal(&self) -> Ideal {
        let ring = self.ring();
        let vars = self
            .xs
            .iter()
            .map(|c| ring.x(c))
            .chain(self.ys.iter().map(|c| ring.y(c)));
        prime_ideal(ring, vars, &self.blocks)
    }

    /// `f_ab ∈ self`.
    pub fn contains_minor(&self, a: usize, b: usize) -> bool {
        let diag = !self.xs.contains(a) && !self.ys.contains(b);
        let anti = !self.xs.contains(b) && !self.ys.contains(a);
        match (diag, anti) {
            (false, false) => true,
            (true, true) => self.blocks.iter().any(|blk| blk.contains(a) && blk.contains(b)),
            // A lone surviving monomial whose variables are not in the prime.
            _ => false,
        }
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &PrimeForm) -> bool {
        other.xs.is_subset(self.xs)
            && other.ys.is_subset(self.ys)
            && other.blocks.iter().all(|b| {
                let cols = b.to_vec();
                cols.iter()
                    .enumerate()
                    .all(|(k, &a)| cols[k + 1..].iter().all(|&c| self.contains_minor(a, c)))
            })
    }
}

impl fmt::Display for PrimeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for c in 1..=self.n {
            if self.xs.contains(c) {
                parts.push(format!("x{c}"));
            }
        }
        for c in 1..=self.n {
            if self.ys.contains(c) {
                parts.push(format!("y{c}"));
            }
        }
        for b in &self.blocks {
            parts.push(format!("I_2{b}"));
        }
        if parts.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// A prime factor of a principal summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    X(usize),
    Y(usize),
    /// `f_ab`, `a < b`.
    Minor(usize, usize),
}

/// One summand of a [`StructuredIdeal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summand {
    /// Variables, given as `(row, column)` with row 1 for `x`, 2 for `y`.
    Variables(Vec<(usize, usize)>),
    /// `I_2` of the columns.
    Minors(VertexSet),
    Prime(PrimeForm),
    /// The principal ideal of a product of distinct prime factors.
    Principal(Vec<Factor>),
}

/// A sum of summands on a `2 × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredIdeal {
    pub n: usize,
    pub summands: Vec<Summand>,
}

impl StructuredIdeal {
    pub fn new(n: usize, summands: Vec<Summand>) -> Self {
        StructuredIdeal { n, summands }
    }

    /// `y_1 · f_12 ⋯ f_{n-1,n} · x_n` as a principal summand.
    pub fn f(n: usize) -> Self {
        let mut factors = vec![Factor::Y(1)];
        factors.extend((1..n).map(|i| Factor::Minor(i, i + 1)));
        factors.push(Factor::X(n));
        StructuredIdeal::new(n, vec![Summand::Principal(factors)])
    }

    /// The ideal as a generator list.
    pub fn to_ideal(&self) -> Result<Ideal> {
        let ring = Ring::classical(self.n);
        let mut gens = Vec::new();
        for s in &self.summands {
            match s {
                Summand::Variables(vs) => {
                    for &(r, c) in vs {
                        gens.push(crate::poly::Polynomial::var(ring, ring.try_var(r, c)?));
                    }
                }
                Summand::Minors(cols) => gens.extend(crate::bei::minor_ideal(ring, 2, &cols.to_vec()).gb().to_vec()),
                Summand::Prime(p) => gens.extend(p.to_ideal().gb().to_vec()),
                Summand::Principal(fs) => {
                    let mut g = crate::poly::Polynomial::one(ring);
                    for &fac in fs {
                        g = &g * &factor_poly(ring, fac)?;
                    }
                    gens.push(g);
                }
            }
        }
        Ideal::new(ring, gens)
    }

    /// Alternatives per summand: the summand's minimal primes.
    fn alternatives(&self) -> Result<Vec<Vec<PrimeForm>>> {
        let n = self.n;
        let col = |c: usize| {
            if c == 0 || c > n {
                Err(Error::Domain(format!("column {c} outside 1..{n}")))
            } else {
                Ok(VertexSet::singleton(c))
            }
        };
        self.summands
            .iter()
            .map(|s| match s {
                Summand::Variables(vs) => {
                    let (mut xs, mut ys) = (VertexSet::EMPTY, VertexSet::EMPTY);
                    for &(r, c) in vs {
                        match r {
                            1 => xs = xs.union(col(c)?),
                            2 => ys = ys.union(col(c)?),
                            _ => return Err(Error::Unsupported(format!("row {r} on a two-row matrix"))),
                        }
                    }
                    Ok(vec![PrimeForm::new(n, xs, ys, [])?])
                }
                Summand::Minors(cols) => {
                    if !cols.is_subset(VertexSet::full(n)) {
                        return Err(Error::Domain(format!("columns {cols} outside 1..{n}")));
                    }
                    Ok(vec![PrimeForm::new(n, VertexSet::EMPTY, VertexSet::EMPTY, [*cols])?])
                }
                Summand::Prime(p) => {
                    if p.n != n {
                        return Err(Error::Context(format!("prime on {} columns in a sum on {n}", p.n)));
                    }
                    Ok(vec![p.clone()])
                }
                Summand::Principal(fs) => {
                    let mut out: Vec<PrimeForm> = Vec::new();
                    for &fac in fs {
                        let p = match fac {
                            Factor::X(c) => PrimeForm::new(n, col(c)?, VertexSet::EMPTY, [])?,
                            Factor::Y(c) => PrimeForm::new(n, VertexSet::EMPTY, col(c)?, [])?,
                            Factor::Minor(a, b) if a < b => {
                                PrimeForm::new(n, VertexSet::EMPTY, VertexSet::EMPTY, [col(a)?.union(col(b)?)])?
                            }
                            Factor::Minor(a, b) => {
                                return Err(Error::Unsupported(format!("minor factor f_{a}{b} needs a < b")))
                            }
                        };
                        if out.contains(&p) {
                            return Err(Error::Unsupported(format!(
                                "repeated factor {p} in a principal summand"
                            )));
                        }
                        out.push(p);
                    }
                    if out.is_empty() {
                        return Err(Error::Unsupported("principal summand of the unit ideal".into()));
                    }
                    Ok(out)
                }
            })
            .collect()
    }
}

fn factor_poly(ring: Ring, fac: Factor) -> Result<crate::poly::Polynomial> {
    use crate::poly::Polynomial;
    Ok(match fac {
        Factor::X(c) => Polynomial::var(ring, ring.try_var(1, c)?),
        Factor::Y(c) => Polynomial::var(ring, ring.try_var(2, c)?),
        Factor::Minor(a, b) => {
            ring.try_var(1, a)?;
            ring.try_var(1, b)?;
            Polynomial::minor2(ring, a, b)
        }
    })
}

/// Keeps the inclusion-minimal primes, sorted and without repeats.
pub(crate) fn minimalize(primes: impl IntoIterator<Item = PrimeForm>) -> Vec<PrimeForm> {
    let unique: BTreeSet<PrimeForm> = primes.into_iter().collect();
    let all: Vec<PrimeForm> = unique.into_iter().collect();
    all.iter()
        .filter(|p| !all.iter().any(|q| q != *p && p.contains(q)))
        .cloned()
        .collect()
}

/// Minimal primes of `P_1 + ... + P_k`.
pub(crate) fn min_primes_of_sum(parts: &[&PrimeForm]) -> Vec<PrimeForm> {
    let n = parts.first().map_or(0, |p| p.n);
    let mut xs = VertexSet::EMPTY;
    let mut ys = VertexSet::EMPTY;
    let mut blocks = Vec::new();
    for p in parts {
        xs = xs.union(p.xs);
        ys = ys.union(p.ys);
        blocks.extend_from_slice(&p.blocks);
    }
    let mut out = Vec::new();
    branch(n, xs, ys, blocks, &mut out);
    minimalize(out)
}

/// Splits on exposed monomials until the blocks live on untouched columns,
/// then reads the primes off the graph whose cliques are the blocks.
fn branch(n: usize, xs: VertexSet, ys: VertexSet, blocks: Vec<VertexSet>, out: &mut Vec<PrimeForm>) {
    let dead = xs.intersection(ys);
    let blocks: Vec<VertexSet> = blocks
        .into_iter()
        .map(|b| b.difference(dead))
        .filter(|b| b.len() >= 2)
        .collect();

    // A minor x_c y_d - x_d y_c with exactly one surviving term forces
    // x_u or y_v into every prime, where x_u y_v is that term.
    let mut exposed: Option<(usize, usize)> = None;
    for b in &blocks {
        let cols = b.to_vec();
        for (k, &c) in cols.iter().enumerate() {
            for &d in &cols[k + 1..] {
                let diag = !xs.contains(c) && !ys.contains(d);
                let anti = !xs.contains(d) && !ys.contains(c);
                let term = match (diag, anti) {
                    (true, false) => Some((c, d)),
                    (false, true) => Some((d, c)),
                    _ => None,
                };
                if let Some(t) = term {
                    if exposed.map_or(true, |e| t < e) {
                        exposed = Some(t);
                    }
                }
            }
        }
    }
    if let Some((u, v)) = exposed {
        branch(n, xs.with(u), ys, blocks.clone(), out);
        branch(n, xs, ys.with(v), blocks, out);
        return;
    }

    // Without exposed monomials every block either lies on untouched
    // columns or has all its minors vanishing.
    let touched = xs.union(ys);
    let live: Vec<VertexSet> = blocks
        .into_iter()
        .filter(|b| b.intersection(touched).is_empty())
        .collect();
    let disjoint = live
        .iter()
        .enumerate()
        .all(|(i, a)| live[i + 1..].iter().all(|b| a.intersection(*b).is_empty()));
    if disjoint {
        out.push(PrimeForm::new(n, xs, ys, live).expect("disjoint live blocks"));
        return;
    }
    let mut h = Graph::empty(n).expect("column count");
    for b in &live {
        let cols = b.to_vec();
        for (k, &a) in cols.iter().enumerate() {
            for &c in &cols[k + 1..] {
                h.add_edge(a, c).expect("valid columns");
            }
        }
    }
    for p in minimal_cut_sets(&h).expect("small graph") {
        let s = p.s();
        out.push(PrimeForm::new(n, xs.union(s), ys.union(s), p.cliques().iter().copied()).expect("prime shape"));
    }
}

/// Minimal primes of a structured sum. Each summand is replaced by its own
/// minimal primes, every combination is summed and decomposed by
/// branching, and the inclusion-minimal results are kept.
pub fn min_primes_structured(ideal: &StructuredIdeal) -> Result<Vec<PrimeForm>> {
    let alternatives = ideal.alternatives()?;
    if alternatives.is_empty() {
        return Ok(vec![PrimeForm::new(ideal.n, VertexSet::EMPTY, VertexSet::EMPTY, [])?]);
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; alternatives.len()];
    loop {
        let parts: Vec<&PrimeForm> = choice.iter().zip(&alternatives).map(|(&k, alts)| &alts[k]).collect();
        out.extend(min_primes_of_sum(&parts));
        // Next combination, last index fastest.
        let mut pos = alternatives.len();
        loop {
            if pos == 0 {
                return Ok(minimalize(out));
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < alternatives[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Minimal primes of `A + B` from those of `A` and `B`.
pub(crate) fn min_primes_of_pairwise_sum(a: &[PrimeForm], b: &[PrimeForm]) -> Vec<PrimeForm> {
    let mut out = Vec::new();
    for p in a {
        for q in b {
            out.extend(min_primes_of_sum(&[p, q]));
        }
    }
    minimalize(out)
}
