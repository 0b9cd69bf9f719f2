use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::monomial::Monomial;
use super::ring::VarId;

/// Monomial order.
///
/// `DiagonalLex` is lexicographic on the row-major variable sequence
/// `x_1 > ... > x_n > y_1 > ... > y_n` (then further rows, then auxiliary
/// variables). Every 2-minor `x_i y_j - x_j y_i` with `i < j` has leading
/// term `x_i y_j`, the product of its diagonal.
///
/// `Block` compares the eliminated variables first (lexicographically, in
/// the inner order's variable sequence) and breaks ties with `inner` on the
/// remaining variables. It is an elimination order for `eliminated`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    DiagonalLex,
    Block {
        eliminated: BTreeSet<VarId>,
        inner: Box<TermOrder>,
    },
}

impl TermOrder {
    pub fn eliminating(vars: impl IntoIterator<Item = VarId>) -> Self {
        TermOrder::Block {
            eliminated: vars.into_iter().collect(),
            inner: Box::new(TermOrder::DiagonalLex),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::DiagonalLex => a.cmp_lex(b),
            TermOrder::Block { eliminated, inner } => {
                let split = |m: &Monomial| {
                    let (e, r): (Vec<_>, Vec<_>) = m.iter().partition(|(v, _)| eliminated.contains(v));
                    (Monomial::from_pairs(e), Monomial::from_pairs(r))
                };
                let (ae, ar) = split(a);
                let (be, br) = split(b);
                // The eliminated block uses the inner variable sequence.
                inner.compare(&ae, &be).then_with(|| inner.compare(&ar, &br))
            }
        }
    }

    /// Variable sequence from largest to smallest. Every order here is
    /// lexicographic with respect to this sequence.
    pub fn priority(&self, var_count: usize) -> Vec<VarId> {
        match self {
            TermOrder::DiagonalLex => (0..var_count).map(|i| VarId(i as u16)).collect(),
            TermOrder::Block { eliminated, inner } => {
                let seq = inner.priority(var_count);
                let (mut head, tail): (Vec<_>, Vec<_>) = seq.into_iter().partition(|v| eliminated.contains(v));
                head.extend(tail);
                head
            }
        }
    }

    pub(crate) fn is_natural(&self, var_count: usize) -> bool {
        match self {
            TermOrder::DiagonalLex => true,
            _ => self.priority(var_count).iter().enumerate().all(|(i, v)| v.index() == i),
        }
    }
}
