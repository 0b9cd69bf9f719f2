//! Buchberger's algorithm.
//!
//! Every order supported by [`TermOrder`] is lexicographic with respect to
//! some variable sequence, so inputs are renamed until that sequence is the
//! natural index order and all work happens with plain lex comparisons.
//! Working polynomials are stored in increasing order so the leading term
//! is at the end of the vector.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Monomial, Polynomial, Ring, Term, TermOrder, VarId};

pub(crate) type Work = Vec<Term>;

struct Renaming {
    forward: Vec<VarId>,
    back: Vec<VarId>,
}

impl Renaming {
    fn new(order: &TermOrder, var_count: usize) -> Option<Self> {
        if order.is_natural(var_count) {
            return None;
        }
        let seq = order.priority(var_count);
        let mut forward = vec![VarId(0); var_count];
        for (rank, v) in seq.iter().enumerate() {
            forward[v.index()] = VarId(rank as u16);
        }
        Some(Renaming { forward, back: seq })
    }
}

fn to_work(p: &Polynomial, renaming: Option<&Renaming>) -> Work {
    let mut terms: Work = match renaming {
        None => p.terms().to_vec(),
        Some(r) => p
            .terms()
            .iter()
            .map(|(m, c)| (m.relabel(&r.forward), c.clone()))
            .collect(),
    };
    if renaming.is_some() {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
    } else {
        terms.reverse();
    }
    terms
}

fn from_work(w: Work, ring: Ring, renaming: Option<&Renaming>) -> Polynomial {
    match renaming {
        None => {
            let mut w = w;
            w.reverse();
            Polynomial::from_sorted_terms(ring, w)
        }
        Some(r) => Polynomial::from_terms(ring, w.into_iter().map(|(m, c)| (m.relabel(&r.back), c))),
    }
}

fn lead(p: &Work) -> &Term {
    p.last().expect("zero polynomial has no leading term")
}

fn make_monic(p: &mut Work) {
    let Some((_, lc)) = p.last() else { return };
    if lc.is_one() {
        return;
    }
    let inv = lc.inv();
    for (_, c) in p.iter_mut() {
        *c = &*c * &inv;
    }
}

/// `p - c * m * g` for increasing-ordered inputs.
fn sub_mul(p: &Work, c: &Coefficient, m: &Monomial, g: &Work) -> Work {
    use std::cmp::Ordering;
    let mut out: Work = Vec::with_capacity(p.len() + g.len());
    let neg = -c;
    let mut a = p.iter().peekable();
    let mut b = g.iter().map(|(gm, gc)| (gm.mul(m), gc * &neg)).peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(a.next().unwrap().clone()),
            Ordering::Greater => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let (ym, yc) = b.next().unwrap();
                let coef = &x.1 + &yc;
                if !coef.is_zero() {
                    out.push((ym, coef));
                }
            }
        }
    }
    out
}

/// Full normal form of `p` with respect to monic divisors.
pub(crate) fn normal_form_work(mut p: Work, divisors: &[Work]) -> Work {
    let mut rem: Work = Vec::new();
    while let Some((m, c)) = p.last() {
        match divisors.iter().find(|g| lead(g).0.divides(m)) {
            Some(g) => {
                let q = m.div(&lead(g).0).unwrap();
                let c = c.clone();
                p = sub_mul(&p, &c, &q, g);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    rem.reverse();
    rem
}

/// Whether `p` reduces to zero (top reduction only).
fn reduces_to_zero(mut p: Work, divisors: &[Work]) -> bool {
    while let Some((m, c)) = p.last() {
        match divisors.iter().find(|g| lead(g).0.divides(m)) {
            Some(g) => {
                let q = m.div(&lead(g).0).unwrap();
                let c = c.clone();
                p = sub_mul(&p, &c, &q, g);
            }
            None => return false,
        }
    }
    true
}

fn s_polynomial(f: &Work, g: &Work) -> Work {
    let (fm, _) = lead(f);
    let (gm, _) = lead(g);
    let l = fm.lcm(gm);
    let one = Coefficient::one(lead(f).1.field());
    let a: Work = f.iter().map(|(m, c)| (m.mul(&l.div(fm).unwrap()), c.clone())).collect();
    sub_mul(&a, &one, &l.div(gm).unwrap(), g)
}

fn check_rings(gens: &[Polynomial]) -> Result<Option<Ring>> {
    let Some(first) = gens.first() else { return Ok(None) };
    if let Some(bad) = gens.iter().find(|g| g.ring() != first.ring()) {
        return Err(Error::Context(format!("{} vs {}", first.ring(), bad.ring())));
    }
    Ok(Some(first.ring()))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn total_degree(p: &Work) -> u32 {
    p.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
/// Zero generators are ignored. The result is monic, sorted by decreasing
/// leading term, and empty for the zero ideal.
pub fn groebner(gens: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>> {
    let Some(ring) = check_rings(gens)? else {
        return Ok(Vec::new());
    };
    let renaming = Renaming::new(order, ring.var_count());
    let inputs: Vec<Work> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_work(g, renaming.as_ref()))
        .collect();
    let basis = buchberger(inputs);
    let mut out: Vec<Polynomial> = basis
        .into_iter()
        .map(|w| from_work(w, ring, renaming.as_ref()))
        .collect();
    out.sort_by(|a, b| order.compare(b.leading_monomial(order).unwrap(), a.leading_monomial(order).unwrap()));
    Ok(out)
}

pub(crate) fn buchberger(mut inputs: Vec<Work>) -> Vec<Work> {
    // Cheapest generators first.
    inputs.sort_by(|a, b| {
        lead(a)
            .0
            .degree()
            .cmp(&lead(b).0.degree())
            .then(lead(a).0.cmp(&lead(b).0))
    });
    let mut basis: Vec<Work> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Work,
               s: u32,
               basis: &mut Vec<Work>,
               sugar: &mut Vec<u32>,
               pairs: &mut Vec<Pair>,
               pending: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        let hm = &lead(&h).0;
        for (i, g) in basis.iter().enumerate() {
            let gm = &lead(g).0;
            let lcm = gm.lcm(hm);
            let d = lcm.degree();
            pairs.push(Pair {
                i,
                j: k,
                sugar: (sugar[i] + d - gm.degree()).max(s + d - hm.degree()),
                lcm,
            });
            pending.insert((i, k));
        }
        basis.push(h);
        sugar.push(s);
    };

    for p in inputs {
        let s = total_degree(&p);
        let mut h = normal_form_work(p, &basis);
        if !h.is_empty() {
            make_monic(&mut h);
            if lead(&h).0.is_one() {
                return vec![h];
            }
            add(h, s, &mut basis, &mut sugar, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        // Sugar first, then the lcm.
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then(pa.lcm.degree().cmp(&pb.lcm.degree()))
                    .then(pa.lcm.cmp(&pb.lcm))
            })
            .unwrap();
        let Pair { i, j, lcm, sugar: s } = pairs.swap_remove(idx);
        pending.remove(&(i, j));

        if lead(&basis[i]).0.is_coprime(&lead(&basis[j]).0) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let sp = s_polynomial(&basis[i], &basis[j]);
        let mut h = normal_form_work(sp, &basis);
        if !h.is_empty() {
            make_monic(&mut h);
            if lead(&h).0.is_one() {
                return vec![h];
            }
            add(h, s, &mut basis, &mut sugar, &mut pairs, &mut pending);
        }
    }
    reduce_basis(basis)
}

/// Minimalizes and inter-reduces a Gröbner basis.
fn reduce_basis(basis: Vec<Work>) -> Vec<Work> {
    let mut minimal: Vec<Work> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = &lead(g).0;
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = &lead(h).0;
            k != i && hm.divides(lm) && (hm != lm || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    for i in 0..minimal.len() {
        let g = std::mem::take(&mut minimal[i]);
        let others: Vec<Work> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, w)| w.clone())
            .collect();
        minimal[i] = normal_form_work(g, &others);
    }
    minimal
}

/// Buchberger's criterion: every S-polynomial of `gens` reduces to zero
/// modulo `gens`.
pub fn is_groebner(gens: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let Some(ring) = check_rings(gens)? else {
        return Ok(true);
    };
    let renaming = Renaming::new(order, ring.var_count());
    let work: Vec<Work> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut w = to_work(g, renaming.as_ref());
            make_monic(&mut w);
            w
        })
        .collect();
    for i in 0..work.len() {
        for j in i + 1..work.len() {
            if lead(&work[i]).0.is_coprime(&lead(&work[j]).0) {
                continue;
            }
            if !reduces_to_zero(s_polynomial(&work[i], &work[j]), &work) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Remainder of `p` on division by `divisors` (in the given order). For a
/// Gröbner basis this is the unique normal form.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    if let Some(bad) = divisors.iter().find(|g| g.ring() != p.ring()) {
        return Err(Error::Context(format!("{} vs {}", p.ring(), bad.ring())));
    }
    let renaming = Renaming::new(order, p.ring().var_count());
    let divs: Vec<Work> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut w = to_work(g, renaming.as_ref());
            make_monic(&mut w);
            w
        })
        .collect();
    let nf = normal_form_work(to_work(p, renaming.as_ref()), &divs);
    Ok(from_work(nf, p.ring(), renaming.as_ref()))
}

/// Precomputed divisor list for repeated `DiagonalLex` reductions.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    divisors: Vec<Work>,
}

impl Reducer {
    pub(crate) fn new(gb: &[Polynomial]) -> Self {
        Reducer {
            divisors: gb.iter().map(|g| to_work(g, None)).collect(),
        }
    }

    pub(crate) fn reduces_to_zero(&self, p: &Polynomial) -> bool {
        reduces_to_zero(to_work(p, None), &self.divisors)
    }

    pub(crate) fn normal_form(&self, p: &Polynomial) -> Polynomial {
        from_work(normal_form_work(to_work(p, None), &self.divisors), p.ring(), None)
    }
}
