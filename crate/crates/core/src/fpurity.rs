//! Fedder's criterion at the homogeneous maximal ideal.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bei::generalized_bei;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::Ideal;
use crate::poly::{Field, Polynomial};

/// `I^[p]`, generated by the `p`-th powers of the generators of `I`. The
/// ring must be over `F_p`.
pub fn frobenius_power(ideal: &Ideal, p: u32) -> Result<Ideal> {
    let ring = ideal.ring();
    if ring.field() != Field::Prime(p) {
        return Err(Error::Context(format!(
            "bracket power with p = {p} needs F_{p}, ring is {ring}"
        )));
    }
    Ideal::new(ring, ideal.generators().iter().map(|g| g.pow(p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    FPure,
    NotFPureAtOrigin,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::FPure => "F-pure",
            Verdict::NotFPureAtOrigin => "not-F-pure-at-origin",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn render<S: Serializer>(w: &Option<Polynomial>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FedderReport {
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<Graph>,
    pub verdict: Verdict,
    /// Element of `I^[p] : I` with a monomial outside `m^[p]`.
    #[serde(serialize_with = "render")]
    pub witness: Option<Polynomial>,
    pub colon_gb_size: usize,
}

impl FedderReport {
    pub fn is_fpure(&self) -> bool {
        self.verdict == Verdict::FPure
    }
}

/// Whether some monomial of `g` has every exponent below `p`, i.e. `g` lies
/// outside `m^[p]`.
fn escapes_bracket(g: &Polynomial, p: u32) -> bool {
    g.terms().iter().any(|(m, _)| m.max_exponent() < p)
}

/// Computes `I^[p] : I` and looks for a reduced-basis element outside
/// `m^[p] = (v^p : v a variable)`.
pub fn fedder_is_fpure(ideal: &Ideal, p: u32) -> Result<FedderReport> {
    let ring = ideal.ring();
    if ideal.is_unit() {
        return Err(Error::Domain("Fedder test on the unit ideal".into()));
    }
    let bracket = frobenius_power(ideal, p)?;
    if ideal.is_zero() {
        return Ok(FedderReport {
            p,
            graph: None,
            verdict: Verdict::FPure,
            witness: Some(Polynomial::one(ring)),
            colon_gb_size: 1,
        });
    }
    let colon = bracket.colon(ideal)?;
    let witness = colon.gb().iter().find(|g| escapes_bracket(g, p)).cloned();
    Ok(FedderReport {
        p,
        graph: None,
        verdict: if witness.is_some() {
            Verdict::FPure
        } else {
            Verdict::NotFPureAtOrigin
        },
        witness,
        colon_gb_size: colon.gb().len(),
    })
}

/// Fedder test for the ideal of `g` on `m` rows over `F_p`.
pub fn fedder_for_graph(g: &Graph, m: usize, p: u32) -> Result<FedderReport> {
    let ideal = generalized_bei(g, m).change_field(Field::prime(p)?)?;
    let mut report = fedder_is_fpure(&ideal, p)?;
    report.graph = Some(g.clone());
    Ok(report)
}

/// Re-checks a witness by membership: `w · h ∈ I^[p]` for every generator
/// `h` of `I`, and `w` has a monomial with all exponents below `p`.
pub fn verify_witness(ideal: &Ideal, p: u32, witness: &Polynomial) -> Result<bool> {
    let bracket = frobenius_power(ideal, p)?;
    for h in ideal.generators() {
        if !bracket.contains_poly(&witness.checked_mul(h)?)? {
            return Ok(false);
        }
    }
    Ok(escapes_bracket(witness, p))
}
