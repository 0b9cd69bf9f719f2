use super::Graph;
use crate::error::{Error, Result};

/// Largest `n` for full labeled-graph enumeration.
pub const ENUMERATION_BOUND: usize = 7;

/// All labeled graphs on `{1, ..., n}`, each exactly once, optionally only
/// the connected ones. Graph number `k` has edge `p` (in lexicographic pair
/// order) iff bit `p` of `k` is set.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::Capacity {
            what: "graph enumeration",
            max: ENUMERATION_BOUND,
            got: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total)
        .map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(p, _)| mask >> p & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("pairs are valid edges")
        })
        .filter(move |g| !connected_only || g.is_connected()))
}
