use std::cmp::Ordering;

use smallvec::SmallVec;

use super::ring::VarId;

type Exponents = SmallVec<[(VarId, u32); 6]>;

/// Sparse power product: `(variable, exponent)` pairs sorted by variable
/// index, exponents strictly positive.
///
/// The `Ord` impl is the lexicographic order in which a smaller variable
/// index is the larger variable, i.e. `DiagonalLex` on the ring's natural
/// variable sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        let mut m = Monomial::one();
        if e > 0 {
            m.exps.push((v, e));
            m.degree = e;
        }
        m
    }

    /// Builds a monomial from arbitrary pairs; repeated variables add up and
    /// zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut exps: Exponents = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut out = Exponents::new();
        for (v, e) in exps {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        let degree = out.iter().map(|&(_, e)| e).sum();
        Monomial { exps: out, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Exponents::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            exps: out,
            degree: self.degree + other.degree,
        }
    }

    /// `true` if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Exponents::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let d = if j < other.exps.len() && other.exps[j].0 == v {
                j += 1;
                other.exps[j - 1].1
            } else {
                0
            };
            if e > d {
                out.push((v, e - d));
            }
        }
        Some(Monomial {
            exps: out,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Exponents::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        let degree = out.iter().map(|&(_, e)| e).sum();
        Monomial { exps: out, degree }
    }

    /// No variable in common.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn involves(&self, v: VarId) -> bool {
        self.exponent(v) > 0
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&(v, f)| (v, f * e))
                .filter(|&(_, f)| f > 0)
                .collect(),
            degree: self.degree * e,
        }
    }

    /// Renames variables through `map` (indexed by old variable index).
    pub(crate) fn relabel(&self, map: &[VarId]) -> Monomial {
        let mut exps: Exponents = self.exps.iter().map(|&(v, e)| (map[v.index()], e)).collect();
        exps.sort_by_key(|&(v, _)| v);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Lexicographic comparison: first differing variable (smallest index)
    /// decides, larger exponent wins.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        return if va < vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
