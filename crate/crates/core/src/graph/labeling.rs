use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest `n` accepted by the exhaustive labeling searches.
pub const SEARCH_BOUND: usize = 9;

/// Bijection of `{1, ..., n}`: vertex `v` receives label `map[v - 1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    map: Vec<usize>,
}

impl Labeling {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &l in &map {
            if l == 0 || l > n || std::mem::replace(&mut seen[l - 1], true) {
                return Err(Error::Domain(format!("{map:?} is not a permutation of 1..{n}")));
            }
        }
        Ok(Labeling { map })
    }

    pub fn identity(n: usize) -> Self {
        Labeling { map: (1..=n).collect() }
    }

    /// `i ↦ n + 1 − i`.
    pub fn reversal(n: usize) -> Self {
        Labeling {
            map: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `self` after `first`: `v ↦ self(first(v))`.
    pub fn after(&self, first: &Labeling) -> Labeling {
        Labeling {
            map: first.map.iter().map(|&l| self.apply(l)).collect(),
        }
    }

    pub fn inverse(&self) -> Labeling {
        let mut map = vec![0; self.map.len()];
        for (v, &l) in self.map.iter().enumerate() {
            map[l - 1] = v + 1;
        }
        Labeling { map }
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.map.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Labeling::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    Closed,
    WeaklyClosed,
}

impl Rule {
    /// Whether labels `i < j < k` with `{i, k}` an edge satisfy the rule,
    /// given whether `{i, j}` and `{j, k}` are edges.
    fn holds(self, ij: bool, jk: bool) -> bool {
        match self {
            Rule::Closed => ij && jk,
            Rule::WeaklyClosed => ij || jk,
        }
    }
}

fn satisfies(g: &Graph, rule: Rule) -> bool {
    g.edges().into_iter().all(|(i, k)| {
        let between = VertexSet::interval(i + 1, k - 1);
        match rule {
            Rule::Closed => between.is_subset(g.neighbors(i).intersection(g.neighbors(k))),
            Rule::WeaklyClosed => between.is_subset(g.neighbors(i).union(g.neighbors(k))),
        }
    })
}

/// Closed in its current labeling: for labels `i < j < k` with `{i, k}` an
/// edge, both `{i, j}` and `{j, k}` are edges.
pub fn is_closed(g: &Graph) -> bool {
    satisfies(g, Rule::Closed)
}

/// Weakly closed in its current labeling: for labels `i < j < k` with
/// `{i, k}` an edge, `{i, j}` or `{j, k}` is an edge.
pub fn is_weakly_closed(g: &Graph) -> bool {
    satisfies(g, Rule::WeaklyClosed)
}

pub fn is_closed_under(g: &Graph, lab: &Labeling) -> Result<bool> {
    Ok(is_closed(&g.relabel(lab)?))
}

pub fn is_weakly_closed_under(g: &Graph, lab: &Labeling) -> Result<bool> {
    Ok(is_weakly_closed(&g.relabel(lab)?))
}

/// Depth-first search over labelings in lexicographic order of the label
/// vector. A partial assignment is abandoned as soon as three assigned
/// vertices violate the rule, since no completion can repair it.
fn search(g: &Graph, rule: Rule) -> Result<Option<Labeling>> {
    let n = g.n();
    if n > SEARCH_BOUND {
        return Err(Error::Capacity {
            what: "labeling search",
            max: SEARCH_BOUND,
            got: n,
        });
    }
    let mut map = vec![0usize; n];
    let mut used = vec![false; n + 1];
    if extend(g, rule, &mut map, &mut used, 0) {
        return Ok(Some(Labeling { map }));
    }
    Ok(None)
}

fn extend(g: &Graph, rule: Rule, map: &mut [usize], used: &mut [bool], v: usize) -> bool {
    let n = map.len();
    if v == n {
        return true;
    }
    for label in 1..=n {
        if used[label] {
            continue;
        }
        map[v] = label;
        if consistent(g, rule, map, v) {
            used[label] = true;
            if extend(g, rule, map, used, v + 1) {
                return true;
            }
            used[label] = false;
        }
    }
    map[v] = 0;
    false
}

/// Checks every triple containing vertex `v + 1` and two earlier vertices.
fn consistent(g: &Graph, rule: Rule, map: &[usize], v: usize) -> bool {
    let edge = |a: usize, b: usize| g.has_edge(a + 1, b + 1);
    for a in 0..v {
        for b in a + 1..v {
            let mut t = [(map[a], a), (map[b], b), (map[v], v)];
            t.sort_unstable();
            let [(_, i), (_, j), (_, k)] = t;
            if edge(i, k) && !rule.holds(edge(i, j), edge(j, k)) {
                return false;
            }
        }
    }
    true
}

/// First closed labeling in lexicographic order, if any.
pub fn find_closed_labeling(g: &Graph) -> Result<Option<Labeling>> {
    search(g, Rule::Closed)
}

/// First weakly closed labeling in lexicographic order, if any.
pub fn find_weakly_closed_labeling(g: &Graph) -> Result<Option<Labeling>> {
    search(g, Rule::WeaklyClosed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closedness_examples() {
        let id3 = Labeling::identity(3);
        assert!(is_closed_under(&Graph::path(3), &id3).unwrap());
        assert!(is_closed_under(&Graph::complete(5), &Labeling::new(vec![3, 1, 5, 2, 4]).unwrap()).unwrap());
        let c4 = Graph::cycle(4);
        assert!(!is_closed(&c4));
        assert!(is_weakly_closed(&c4));
        assert!(!is_weakly_closed(&Graph::cycle(5)));
    }

    #[test]
    fn searches() {
        assert_eq!(find_weakly_closed_labeling(&Graph::cycle(5)).unwrap(), None);
        assert!(find_weakly_closed_labeling(&Graph::cycle(4)).unwrap().is_some());
        assert_eq!(find_closed_labeling(&Graph::cycle(4)).unwrap(), None);
        assert!(find_weakly_closed_labeling(&Graph::complete_bipartite(1, 3))
            .unwrap()
            .is_some());
        assert_eq!(
            find_closed_labeling(&Graph::path(4)).unwrap(),
            Some(Labeling::identity(4))
        );
        assert!(matches!(
            find_closed_labeling(&Graph::path(10)),
            Err(Error::Capacity { max: 9, got: 10, .. })
        ));
    }

    #[test]
    fn search_returns_lexicographically_first() {
        // Star with centre 1: labelings must put the centre in the middle.
        let star = Graph::complete_bipartite(1, 2);
        assert_eq!(
            find_closed_labeling(&star).unwrap(),
            Some(Labeling::new(vec![2, 1, 3]).unwrap())
        );
    }

    #[test]
    fn labeling_algebra() {
        assert!(Labeling::new(vec![1, 1]).is_err());
        assert!(Labeling::new(vec![0, 1]).is_err());
        let l = Labeling::new(vec![2, 3, 1]).unwrap();
        assert_eq!(l.after(&l.inverse()), Labeling::identity(3));
        assert_eq!(Labeling::reversal(3).as_slice(), &[3, 2, 1]);
    }
}
