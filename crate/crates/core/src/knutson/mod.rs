//! The Knutson family generated by `f = y_1 f_12 f_23 ... f_{n-1,n} x_n`.

mod certificate;
mod closure;
mod prime_form;
mod shape;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use certificate::{certify_membership_jg, replay, CertNode, Certificate, CertifyOutcome, NodeKind, Refusal};
pub use closure::{
    check_sum_distributes, explore, explore_closure, ClosureRegistry, Derivation, ExploreConfig, RegistryEntry,
    EXPLORE_BOUND,
};
pub use prime_form::{min_primes_structured, Factor, PrimeForm, StructuredIdeal, Summand};
pub use shape::{recognize_prime_form, shape_check, shape_of, PrIdCfShape};

use crate::bei::{adjacent_minor_ideal, minor};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

/// `y_1 · f_12 · f_23 ⋯ f_{n-1,n} · x_n` in the classical ring with `n`
/// columns. For `n = 1` this is `x_1 y_1`.
pub fn build_f(n: usize) -> Polynomial {
    assert!(n >= 1, "f needs at least one column");
    build_f_in(Ring::classical(n))
}

/// Product, over the diagonals of the generic matrix, of the minor whose
/// main diagonal is that whole diagonal. On two rows this is [`build_f`].
/// The leading term is the product of all variables.
pub fn build_f_in(ring: Ring) -> Polynomial {
    let (m, n) = (ring.rows() as isize, ring.cols() as isize);
    let mut f = Polynomial::one(ring);
    for d in (1 - m)..n {
        let rows: Vec<usize> = (1..=m)
            .filter(|&r| r + d >= 1 && r + d <= n)
            .map(|r| r as usize)
            .collect();
        let cols: Vec<usize> = rows.iter().map(|&r| (r as isize + d) as usize).collect();
        f = &f * &minor(ring, &rows, &cols);
    }
    f
}

/// Seed ideals of the family: `(f)` itself and the adjacent-column
/// determinantal ideals, which are admitted directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Seed {
    F,
    /// `I_1(X_[a,a])`, the variables of column `a`.
    Column(usize),
    /// `I_2(X_[a,b])`, `a < b`.
    Interval(usize, usize),
}

impl Seed {
    /// Seeds for `n` columns; with `with_minor_ideals = false` only `(f)`.
    pub fn all(n: usize, with_minor_ideals: bool) -> Vec<Seed> {
        let mut out = vec![Seed::F];
        if with_minor_ideals {
            out.extend((1..=n).map(Seed::Column));
            for a in 1..=n {
                out.extend((a + 1..=n).map(|b| Seed::Interval(a, b)));
            }
        }
        out
    }

    pub fn ideal(&self, ring: Ring) -> Result<Ideal> {
        let check = |c: usize| {
            if c == 0 || c > ring.cols() {
                Err(Error::Domain(format!("column {c} outside 1..{}", ring.cols())))
            } else {
                Ok(())
            }
        };
        match *self {
            Seed::F => Ok(Ideal::principal(build_f_in(ring))),
            Seed::Column(a) => {
                check(a)?;
                Ok(adjacent_minor_ideal(ring, 1, a, a))
            }
            Seed::Interval(a, b) => {
                check(a)?;
                check(b)?;
                if a >= b {
                    return Err(Error::Domain(format!("interval [{a},{b}] needs a < b")));
                }
                Ok(adjacent_minor_ideal(ring, 2, a, b))
            }
        }
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seed::F => write!(f, "(f)"),
            Seed::Column(a) => write!(f, "I_1(X[{a},{a}])"),
            Seed::Interval(a, b) => write!(f, "I_2(X[{a},{b}])"),
        }
    }
}

impl FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("unknown seed '{s}'"));
        if s == "(f)" {
            return Ok(Seed::F);
        }
        let (t, rest) = s.split_once("(X[").ok_or_else(bad)?;
        let inner = rest.strip_suffix("])").ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        match t {
            "I_1" if a == b => Ok(Seed::Column(a)),
            "I_2" if a < b => Ok(Seed::Interval(a, b)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Seed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Seed {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
