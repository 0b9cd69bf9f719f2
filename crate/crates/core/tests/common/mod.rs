//! Brute-force oracles shared by the integration tests. They avoid the
//! library's bitmask machinery and search routines on purpose.

#![allow(dead_code)]

use binedge::graph::Graph;
use binedge::poly::{Coefficient, Monomial, Polynomial, Ring};
use rand::Rng;

/// All permutations of `1..=n`, as label vectors, in lexicographic order.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..left.len() {
            let v = left.remove(k);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// Every labeled graph on `n` vertices as an edge list, from a bit mask
/// over the pairs `(u, v)`, `u < v`.
pub fn edge_lists(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 1);
    (1..=n).all(|v| find(&mut parent, v) == root)
}

pub fn graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    edge_lists(n)
        .into_iter()
        .filter(|e| !connected_only || connected(n, e))
        .map(|e| Graph::from_edges(n, e).unwrap())
        .collect()
}

/// Triple check on the graph relabeled by `lab` (`lab[v - 1]` is the label
/// of `v`); `both` selects the closed rule, otherwise the weakly closed one.
pub fn satisfies(n: usize, edges: &[(usize, usize)], lab: &[usize], both: bool) -> bool {
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in edges {
        let (a, b) = (lab[u - 1], lab[v - 1]);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    for i in 1..=n {
        for k in i + 2..=n {
            if !adj[i][k] {
                continue;
            }
            let ok = (i + 1..k).all(|j| {
                if both {
                    adj[i][j] && adj[j][k]
                } else {
                    adj[i][j] || adj[j][k]
                }
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

pub fn has_labeling(g: &Graph, both: bool) -> bool {
    let edges = g.edges();
    perms(g.n()).iter().any(|lab| satisfies(g.n(), &edges, lab, both))
}

/// Random polynomial with up to `terms` terms of degree at most `deg` and
/// coefficients in `-3..=3`.
pub fn random_poly(rng: &mut impl Rng, ring: Ring, terms: usize, deg: u32) -> Polynomial {
    let nvars = ring.matrix_var_count();
    let vars: Vec<_> = (1..=ring.rows())
        .flat_map(|r| (1..=ring.cols()).map(move |c| (r, c)))
        .map(|(r, c)| ring.var(r, c))
        .collect();
    let mut out = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(0..=deg);
        let m = Monomial::from_pairs((0..d).map(|_| (vars[rng.gen_range(0..nvars)], 1)));
        let c = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        out.push((m, Coefficient::from_i64(ring.field(), c)));
    }
    Polynomial::from_terms(ring, out)
}

/// Pairwise condition on the relabeled graph: two edges sharing their
/// smaller endpoint, or sharing their larger endpoint, force the edge
/// between the other two endpoints.
pub fn pairwise_closed(n: usize, edges: &[(usize, usize)], lab: &[usize]) -> bool {
    let mut adj = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in edges {
        let (a, b) = (lab[u - 1], lab[v - 1]);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                if i == j || i == k || !adj[i][j] || !adj[i][k] {
                    continue;
                }
                let below = i < j && i < k;
                let above = i > j && i > k;
                if (below || above) && !adj[j][k] {
                    return false;
                }
            }
        }
    }
    true
}
