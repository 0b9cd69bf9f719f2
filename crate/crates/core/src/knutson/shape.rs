use serde::Serialize;

use super::PrimeForm;
use crate::graph::{Graph, VertexSet};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, TermOrder};

/// Normal form of a minimal prime in the family:
///
/// `(y_1, ..., y_{k-1}) + (x_u : u ∈ U) + L + (x_{l+1}, ..., x_n) + (y_v : v ∈ V)`
///
/// with `U ⊆ [1, k-1]`, `V ⊆ [l+1, n]`, and `L` living on columns `k..=l`:
/// the variables of the columns in `s` plus 2-minors on `blocks`, where
/// every column strictly inside a block's span belongs to the block or to
/// `s` (so `L` equals its closure).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrIdCfShape {
    pub k: usize,
    pub l: usize,
    pub u: VertexSet,
    pub v: VertexSet,
    pub s: VertexSet,
    pub blocks: Vec<VertexSet>,
}

/// The normal-form data of `p`, if it has that shape. Among valid splits
/// the one with the longest `y`-prefix, then the longest `x`-suffix, is
/// returned.
pub fn shape_of(p: &PrimeForm) -> Option<PrIdCfShape> {
    let n = p.n();
    let (xs, ys) = (p.killed_x(), p.killed_y());
    for k in (1..=n + 1).rev() {
        let prefix = VertexSet::interval(1, k - 1);
        if !prefix.is_subset(ys) {
            continue;
        }
        for l in k - 1..=n {
            let suffix = VertexSet::interval(l + 1, n);
            if !suffix.is_subset(xs) {
                continue;
            }
            let middle = VertexSet::interval(k, l);
            let (mx, my) = (xs.intersection(middle), ys.intersection(middle));
            if mx != my {
                continue;
            }
            let closed = p.blocks().iter().all(|b| {
                let span = VertexSet::interval(b.first().unwrap(), b.last().unwrap());
                b.is_subset(middle) && span.is_subset(b.union(mx))
            });
            if closed {
                return Some(PrIdCfShape {
                    k,
                    l,
                    u: xs.intersection(prefix),
                    v: ys.intersection(suffix),
                    s: mx,
                    blocks: p.blocks().to_vec(),
                });
            }
        }
    }
    None
}

/// Reads a [`PrimeForm`] off the reduced basis of `ideal`: linear elements
/// must be variables, quadratic ones 2-minors whose columns group into
/// cliques, and the reconstructed prime must have the same basis.
pub fn recognize_prime_form(ideal: &Ideal) -> Option<PrimeForm> {
    let ring = ideal.ring();
    if ring.rows() != 2 || ring.aux_count() != 0 {
        return None;
    }
    let n = ring.cols();
    let (mut xs, mut ys) = (VertexSet::EMPTY, VertexSet::EMPTY);
    let mut h = Graph::empty(n).ok()?;
    for g in ideal.gb() {
        let lm = g.leading_monomial(&TermOrder::DiagonalLex)?;
        match (g.len(), lm.degree()) {
            (1, 1) => {
                let v = lm.vars().next()?;
                let (row, col) = ring.coords(v)?;
                if row == 1 {
                    xs = xs.with(col);
                } else {
                    ys = ys.with(col);
                }
            }
            (2, 2) => {
                let mut cols = lm.vars().map(|v| ring.coords(v));
                let (Some((1, a)), Some((2, b))) = (cols.next()?, cols.next()?) else {
                    return None;
                };
                if a >= b || *g != Polynomial::minor2(ring, a, b) {
                    return None;
                }
                h.add_edge(a, b).ok()?;
            }
            _ => return None,
        }
    }
    let blocks = h.components(h.vertices());
    if !blocks.iter().all(|b| h.is_clique(*b)) {
        return None;
    }
    let p = PrimeForm::new(n, xs, ys, blocks).ok()?;
    (p.to_ideal().gb() == ideal.gb()).then_some(p)
}

/// Whether `ideal` is a prime in the normal form of [`PrIdCfShape`].
pub fn shape_check(ideal: &Ideal) -> bool {
    recognize_prime_form(ideal).and_then(|p| shape_of(&p)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn ideal(n: usize, text: &[&str]) -> Ideal {
        let r = Ring::classical(n);
        Ideal::new(r, text.iter().map(|t| Polynomial::parse(r, t).unwrap())).unwrap()
    }

    #[test]
    fn examples() {
        let p = ideal(3, &["y1", "x1", "x2*y3 - x3*y2"]);
        assert!(shape_check(&p));
        let form = recognize_prime_form(&p).unwrap();
        let shape = shape_of(&form).unwrap();
        assert_eq!((shape.k, shape.l, shape.u), (2, 3, set(&[1])));
        assert_eq!(shape.blocks, vec![set(&[2, 3])]);

        assert!(shape_check(&ideal(2, &["x2", "y2"])));
        assert!(!shape_check(&ideal(2, &["x1*y2"])));
        assert!(!shape_check(&ideal(3, &["x1 + y1"])));
    }

    #[test]
    fn gaps_must_be_killed() {
        // I_2 on columns {1,3} with column 2 free is not in closed form.
        let open = PrimeForm::new(3, VertexSet::EMPTY, VertexSet::EMPTY, [set(&[1, 3])]).unwrap();
        assert!(shape_of(&open).is_none());
        let closed = PrimeForm::from_columns(3, set(&[2]), [set(&[1, 3])]).unwrap();
        assert!(shape_of(&closed).is_some());
        // Column 1 fully killed in the middle part, x3 in the suffix.
        let split = PrimeForm::new(3, set(&[1, 3]), set(&[1]), []).unwrap();
        assert!(shape_of(&split).is_some());
        // x1 before y3 admits no split.
        let crossed = PrimeForm::new(3, set(&[1]), set(&[3]), []).unwrap();
        assert!(shape_of(&crossed).is_none());
    }

    #[test]
    fn non_clique_minors_are_rejected() {
        // J of a path is not prime.
        assert!(recognize_prime_form(&ideal(3, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"])).is_none());
    }
}
