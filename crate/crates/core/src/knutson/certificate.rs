//! Derivation trees expressing a binomial edge ideal through seed ideals,
//! sums and intersections.

use serde::{Deserialize, Serialize};

use super::Seed;
use crate::bei::{generalized_bei, minimal_cut_sets, StructuredPrime};
use crate::error::{Error, Result};
use crate::graph::{find_weakly_closed_labeling, is_weakly_closed_under, Graph, Labeling};
use crate::ideal::Ideal;
use crate::poly::{Field, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Seed,
    Sum,
    Intersect,
}

/// One node of a derivation tree with the hash of the reduced basis of
/// its ideal. A sum without children is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertNode {
    pub node: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<Seed>,
    pub children: Vec<CertNode>,
    pub ideal_gb_hash: String,
}

/// The ideal of `graph` relabeled by `labeling`, on `m` rows, written as
/// the intersection of the closed primes of its minimal cut sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Graph,
    pub labeling: Labeling,
    pub m: usize,
    pub root: CertNode,
    pub verified: bool,
    pub tool: String,
    pub term_order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub graph: Graph,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum CertifyOutcome {
    Certified(Certificate),
    Refused(Refusal),
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CertifyOutcome::Certified(c) => Some(c),
            CertifyOutcome::Refused(_) => None,
        }
    }
}

fn ring_for(g: &Graph, m: usize) -> Result<Ring> {
    if m < 2 {
        return Err(Error::Domain(format!("certificates need at least two rows, got {m}")));
    }
    if g.n() == 0 {
        return Err(Error::Domain("graph without vertices".into()));
    }
    Ok(Ring::new(m, g.n(), Field::Rational))
}

/// Evaluates a tree bottom-up, checking every node hash. `None` when a hash
/// disagrees.
fn evaluate(ring: Ring, node: &CertNode) -> Result<Option<Ideal>> {
    let mut parts = Vec::with_capacity(node.children.len());
    for c in &node.children {
        match evaluate(ring, c)? {
            Some(i) => parts.push(i),
            None => return Ok(None),
        }
    }
    let ideal = match (node.node, node.seed) {
        (NodeKind::Seed, Some(s)) if parts.is_empty() => s.ideal(ring)?,
        (NodeKind::Sum, None) => {
            let mut acc = Ideal::zero(ring);
            for p in &parts {
                acc = acc.sum(p)?;
            }
            acc
        }
        (NodeKind::Intersect, None) if !parts.is_empty() => {
            let mut it = parts.into_iter();
            let first = it.next().unwrap();
            it.try_fold(first, |acc, p| acc.intersect(&p))?
        }
        _ => return Ok(None),
    };
    Ok((ideal.gb_hash() == node.ideal_gb_hash).then_some(ideal))
}

fn seed_node(ring: Ring, seed: Seed) -> Result<(CertNode, Ideal)> {
    let ideal = seed.ideal(ring)?;
    let node = CertNode {
        node: NodeKind::Seed,
        seed: Some(seed),
        children: Vec::new(),
        ideal_gb_hash: ideal.gb_hash(),
    };
    Ok((node, ideal))
}

/// The closed prime as a sum of column seeds and interval seeds, and its
/// ideal. A single summand stands for itself.
fn prime_node(ring: Ring, p: &StructuredPrime) -> Result<(CertNode, Ideal)> {
    let mut seeds: Vec<Seed> = p.s().iter().map(Seed::Column).collect();
    let intervals = p
        .intervals()
        .ok_or_else(|| Error::Unsupported("prime without intervals".into()))?;
    seeds.extend(
        intervals
            .iter()
            .filter(|(a, b)| a < b)
            .map(|&(a, b)| Seed::Interval(a, b)),
    );
    seeds.sort();
    if seeds.len() == 1 {
        return seed_node(ring, seeds[0]);
    }
    let mut children = Vec::with_capacity(seeds.len());
    let mut acc = Ideal::zero(ring);
    for s in seeds {
        let (node, ideal) = seed_node(ring, s)?;
        acc = acc.sum(&ideal)?;
        children.push(node);
    }
    let node = CertNode {
        node: NodeKind::Sum,
        seed: None,
        children,
        ideal_gb_hash: acc.gb_hash(),
    };
    Ok((node, acc))
}

/// Looks for a weakly closed labeling of `g`; with one, builds the tree
/// `⋂_S Σ seeds` for the relabeled graph on `m` rows and verifies that
/// each closed prime equals the cut-set prime and that the root equals the
/// ideal of the graph. Without one, refuses.
pub fn certify_membership_jg(g: &Graph, m: usize) -> Result<CertifyOutcome> {
    let ring = ring_for(g, m)?;
    let Some(labeling) = find_weakly_closed_labeling(g)? else {
        return Ok(CertifyOutcome::Refused(Refusal {
            graph: g.clone(),
            witness: "no weakly closed labeling".into(),
        }));
    };
    let h = g.relabel(&labeling)?;
    let mut verified = true;
    let mut children = Vec::new();
    let mut ideals = Vec::new();
    for p in minimal_cut_sets(&h)? {
        let (closed, changed) = p.close();
        let (node, ideal) = prime_node(ring, &closed)?;
        verified &= !changed && ideal.same_as(&p.to_ideal(ring)?)?;
        children.push(node);
        ideals.push(ideal);
    }
    let (root, ideal) = if children.len() == 1 {
        (children.pop().unwrap(), ideals.pop().unwrap())
    } else {
        let mut it = ideals.into_iter();
        let first = it.next().ok_or_else(|| Error::Domain("no minimal primes".into()))?;
        let ideal = it.try_fold(first, |acc, p| acc.intersect(&p))?;
        let node = CertNode {
            node: NodeKind::Intersect,
            seed: None,
            children,
            ideal_gb_hash: ideal.gb_hash(),
        };
        (node, ideal)
    };
    verified &= ideal.same_as(&generalized_bei(&h, m))?;
    Ok(CertifyOutcome::Certified(Certificate {
        graph: g.clone(),
        labeling,
        m,
        root,
        verified,
        tool: crate::tool_id(),
        term_order: ring.order_convention(),
    }))
}

/// Recomputes every node from its seeds and children, compares hashes, and
/// checks the labeling and the final equality with the graph's ideal.
pub fn replay(cert: &Certificate) -> Result<bool> {
    let ring = ring_for(&cert.graph, cert.m)?;
    if !is_weakly_closed_under(&cert.graph, &cert.labeling)? {
        return Ok(false);
    }
    let h = cert.graph.relabel(&cert.labeling)?;
    match evaluate(ring, &cert.root)? {
        Some(ideal) => ideal.same_as(&generalized_bei(&h, cert.m)),
        None => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn certify(g: &Graph) -> Certificate {
        certify_membership_jg(g, 2)
            .unwrap()
            .certificate()
            .cloned()
            .expect("certified")
    }

    #[test]
    fn edge_is_a_seed() {
        let c = certify(&Graph::path(2));
        assert!(c.verified);
        assert_eq!(c.root.node, NodeKind::Seed);
        assert_eq!(c.root.seed, Some(Seed::Interval(1, 2)));
        assert!(replay(&c).unwrap());
    }

    #[test]
    fn path_is_an_intersection_of_seeds() {
        let c = certify(&Graph::path(3));
        assert!(c.verified);
        assert_eq!(c.root.node, NodeKind::Intersect);
        let seeds: Vec<Option<Seed>> = c.root.children.iter().map(|n| n.seed).collect();
        assert_eq!(seeds, vec![Some(Seed::Interval(1, 3)), Some(Seed::Column(2))]);
        assert!(replay(&c).unwrap());
    }

    #[test]
    fn single_vertex_is_the_empty_sum() {
        let c = certify(&Graph::empty(1).unwrap());
        assert!(c.verified);
        assert_eq!(c.root.node, NodeKind::Sum);
        assert!(c.root.children.is_empty());
        assert!(replay(&c).unwrap());
    }

    #[test]
    fn five_cycle_is_refused() {
        let out = certify_membership_jg(&Graph::cycle(5), 2).unwrap();
        match out {
            CertifyOutcome::Refused(r) => assert_eq!(r.witness, "no weakly closed labeling"),
            CertifyOutcome::Certified(_) => panic!("C_5 certified"),
        }
    }

    #[test]
    fn tampering_is_detected() {
        let mut c = certify(&Graph::cycle(4));
        assert!(c.verified);
        let json = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert!(replay(&back).unwrap());

        c.root.children.pop();
        assert!(!replay(&c).unwrap());
        let mut d = certify(&Graph::path(3));
        d.root.children[1].seed = Some(Seed::Column(1));
        assert!(!replay(&d).unwrap());
    }

    #[test]
    fn three_rows() {
        let c = certify_membership_jg(&Graph::path(3), 3)
            .unwrap()
            .certificate()
            .cloned()
            .unwrap();
        assert!(c.verified);
        assert!(replay(&c).unwrap());
    }
}
