//! Acceptance gate: one PASS or FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use binedge::bei::{
    binomial_edge_ideal, generalized_bei, minimal_cut_sets, minimal_primes_bei, psps_condition, StructuredPrime,
};
use binedge::fpurity::{fedder_for_graph, verify_witness};
use binedge::graph::{is_closed_under, Graph, Labeling, VertexSet};
use binedge::ideal::{is_groebner, Ideal};
use binedge::knutson::{
    certify_membership_jg, check_sum_distributes, explore_closure, min_primes_structured, replay, shape_check,
    shape_of, Certificate, CertifyOutcome, StructuredIdeal,
};
use binedge::poly::{Field, Monomial, Polynomial, Ring, TermOrder};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// Labeled graphs with at most `n_max` vertices and all their labelings:
/// the interval rule agrees with the Gröbner property of the natural
/// generators.
fn gb_closed_equivalence() -> Verdict {
    let order = TermOrder::DiagonalLex;
    let mut pairs = 0;
    let mut mismatches = Vec::new();
    let mut connected_mismatches = 0;
    let mut pairwise_mismatches = 0;
    for n in 1..=4 {
        for edges in common::edge_lists(n) {
            let g = Graph::from_edges(n, edges.clone()).map_err(e)?;
            let connected = common::connected(n, &edges);
            for perm in common::perms(n) {
                pairs += 1;
                let lab = Labeling::new(perm.clone()).map_err(e)?;
                let rule = is_closed_under(&g, &lab).map_err(e)?;
                let h = g.relabel(&lab).map_err(e)?;
                let gb = is_groebner(binomial_edge_ideal(&h).generators(), &order).map_err(e)?;
                ensure(rule == common::satisfies(n, &edges, &perm, true), || {
                    format!("interval rule disagrees with the brute-force scan on {g} under {lab}")
                })?;
                if common::pairwise_closed(n, &edges, &perm) != gb {
                    pairwise_mismatches += 1;
                }
                if rule != gb {
                    connected_mismatches += usize::from(connected);
                    mismatches.push(format!("{g} under {lab}: rule {rule}, basis {gb}"));
                }
            }
        }
    }
    println!("    pairwise edge condition vs basis: {pairwise_mismatches} disagreements");
    println!("    disagreements on connected graphs: {connected_mismatches}");
    if mismatches.is_empty() {
        Ok(format!("{pairs} (graph, labeling) pairs agree"))
    } else {
        Err(format!(
            "{} of {pairs} pairs disagree, e.g. {}",
            mismatches.len(),
            mismatches[..3.min(mismatches.len())].join("; ")
        ))
    }
}

fn decomposition_identity() -> Verdict {
    let all: Vec<Graph> = (1..=5).flat_map(|n| common::graphs(n, true)).collect();
    let failures: Vec<String> = all
        .par_iter()
        .filter_map(|g| {
            let ok = (|| -> Result<bool, String> {
                let ring = Ring::classical(g.n());
                let primes = minimal_primes_bei(g).map_err(e)?;
                let mut acc = primes[0].to_ideal(ring).map_err(e)?;
                for p in &primes[1..] {
                    acc = acc.intersect(&p.to_ideal(ring).map_err(e)?).map_err(e)?;
                }
                acc.same_as(&binomial_edge_ideal(g)).map_err(e)
            })();
            match ok {
                Ok(true) => None,
                Ok(false) => Some(g.to_string()),
                Err(err) => Some(format!("{g}: {err}")),
            }
        })
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} graphs fail, e.g. {}", failures.len(), failures[0])
    })?;
    Ok(format!("{} connected graphs", all.len()))
}

/// Gap condition of a cut-set prime after relabeling by `perm`.
fn gap_after(p: &StructuredPrime, perm: &[usize]) -> bool {
    let s: Vec<usize> = p.s().iter().map(|v| perm[v - 1]).collect();
    p.cliques().iter().all(|c| {
        let c: Vec<usize> = c.iter().map(|v| perm[v - 1]).collect();
        let (lo, hi) = (*c.iter().min().unwrap(), *c.iter().max().unwrap());
        (lo..=hi).all(|v| c.contains(&v) || s.contains(&v))
    })
}

fn psps_equivalence() -> Verdict {
    let all: Vec<Graph> = (1..=6).flat_map(|n| common::graphs(n, true)).collect();
    let failures: Vec<String> = all
        .par_iter()
        .filter_map(|g| {
            let ok = (|| -> Result<bool, String> {
                let wc = common::has_labeling(g, false);
                let cuts = minimal_cut_sets(g).map_err(e)?;
                let perms = common::perms(g.n());
                let closed_form = perms.iter().any(|perm| cuts.iter().all(|p| gap_after(p, perm)));
                if g.n() <= 4 {
                    for perm in &perms {
                        let lab = Labeling::new(perm.clone()).map_err(e)?;
                        let direct = cuts.iter().all(|p| gap_after(p, perm));
                        if psps_condition(g, &lab).map_err(e)? != direct {
                            return Ok(false);
                        }
                    }
                }
                Ok(wc == closed_form)
            })();
            match ok {
                Ok(true) => None,
                Ok(false) => Some(g.to_string()),
                Err(err) => Some(format!("{g}: {err}")),
            }
        })
        .collect();
    ensure(failures.is_empty(), || {
        format!("{} graphs fail, e.g. {}", failures.len(), failures[0])
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pool: Vec<&Graph> = all.iter().filter(|g| g.n() >= 3).collect();
    let picks: Vec<(Graph, VertexSet)> = (0..100)
        .map(|_| {
            let g = (*pool.choose(&mut rng).unwrap()).clone();
            let s = VertexSet::from_bits(rng.gen_range(0..1u64 << g.n()));
            (g, s)
        })
        .collect();
    let spot: Vec<String> = picks
        .par_iter()
        .filter_map(|(g, s)| {
            let ok = (|| -> Result<bool, String> {
                let ring = Ring::classical(g.n());
                let p = StructuredPrime::prime_ps(g, *s);
                let (closed, _) = p.close();
                let equal = p
                    .to_ideal(ring)
                    .map_err(e)?
                    .same_as(&closed.to_ideal(ring).map_err(e)?)
                    .map_err(e)?;
                Ok(equal == p.gap_condition())
            })();
            (!matches!(ok, Ok(true))).then(|| format!("{g}, S = {s}"))
        })
        .collect();
    ensure(spot.is_empty(), || format!("spot checks fail: {}", spot.join("; ")))?;
    Ok(format!("{} connected graphs, 100 algebraic spot checks", all.len()))
}

fn certificates() -> Verdict {
    let all: Vec<Graph> = (1..=5).flat_map(|n| common::graphs(n, true)).collect();
    let results: Vec<Result<bool, String>> = all
        .par_iter()
        .map(|g| {
            let wc = common::has_labeling(g, false);
            let outcome = certify_membership_jg(g, 2).map_err(e)?;
            match (wc, outcome) {
                (true, CertifyOutcome::Certified(cert)) => {
                    let json = serde_json::to_string(&cert).map_err(e)?;
                    let back: Certificate = serde_json::from_str(&json).map_err(e)?;
                    let ok = cert.verified && replay(&back).map_err(e)?;
                    ensure(ok, || format!("{g}: certificate does not verify"))?;
                    Ok(true)
                }
                (false, CertifyOutcome::Refused(_)) => Ok(false),
                (true, _) => Err(format!("{g}: refused a weakly closed graph")),
                (false, _) => Err(format!("{g}: certified a graph with no weakly closed labeling")),
            }
        })
        .collect();
    let mut certified = 0;
    for r in &results {
        certified += usize::from(*r.as_ref().map_err(Clone::clone)?);
    }
    Ok(format!(
        "{certified} certified and replayed, {} refused",
        all.len() - certified
    ))
}

fn factor_ideals(n: usize) -> Vec<Ideal> {
    let ring = Ring::classical(n);
    let mut out = vec![
        Ideal::principal(Polynomial::var(ring, ring.x(n))),
        Ideal::principal(Polynomial::var(ring, ring.y(1))),
    ];
    out.extend((1..n).map(|i| Ideal::principal(Polynomial::minor2(ring, i, i + 1))));
    out
}

fn prime_shapes() -> Verdict {
    let mut checked = 0;
    for n in 1..=4 {
        let reg = explore_closure(n, 3, 5000).map_err(e)?;
        let primes = reg.all_minimal_primes();
        let bad: Vec<String> = primes
            .par_iter()
            .filter(|p| shape_of(p).is_none() || !shape_check(&p.to_ideal()))
            .map(|p| p.to_string())
            .collect();
        ensure(bad.is_empty(), || {
            format!("n = {n}: shape fails for {}", bad.join(", "))
        })?;
        checked += primes.len();
    }
    for n in 1..=5 {
        let got = min_primes_structured(&StructuredIdeal::f(n)).map_err(e)?;
        let want = factor_ideals(n);
        ensure(got.len() == n + 1, || {
            format!("n = {n}: {} minimal primes of (f)", got.len())
        })?;
        for w in &want {
            let mut hits = 0;
            for p in &got {
                hits += usize::from(p.to_ideal().same_as(w).map_err(e)?);
            }
            ensure(hits == 1, || format!("n = {n}: factor ideal {w} matched {hits} times"))?;
        }
        let ring = Ring::classical(n);
        let f = binedge::knutson::build_f(n);
        let mut acc = Ideal::unit(ring);
        for w in &want {
            acc = acc.intersect(w).map_err(e)?;
        }
        ensure(acc.same_as(&Ideal::principal(f)).map_err(e)?, || {
            format!("n = {n}: factors do not cut out (f)")
        })?;
    }
    Ok(format!(
        "{checked} minimal primes (n <= 4, depth 3), factor primes of (f) for n <= 5"
    ))
}

fn worked_example() -> Verdict {
    let ring = Ring::classical(6);
    let m = |i, j| Polynomial::minor2(ring, i, j);
    let p = Ideal::new(
        ring,
        [
            Polynomial::var(ring, ring.x(3)),
            Polynomial::var(ring, ring.y(3)),
            m(4, 5),
            m(4, 6),
            m(5, 6),
        ],
    )
    .map_err(e)?;
    let block = Ideal::new(
        ring,
        (1..=6)
            .flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
            .map(|(i, j)| m(i, j)),
    )
    .map_err(e)?;
    let listed = [(3, 6), (3, 5), (3, 4), (2, 3), (1, 3), (5, 6), (4, 6), (4, 5)];
    let want = Ideal::new(ring, listed.iter().map(|&(i, j)| m(i, j))).map_err(e)?;
    let got = p.intersect(&block).map_err(e)?;
    let order = TermOrder::DiagonalLex;
    ensure(
        is_groebner(got.gb(), &order).map_err(e)? && is_groebner(want.gb(), &order).map_err(e)?,
        || "reduced bases fail the Gröbner test".into(),
    )?;
    ensure(got.same_as(&want).map_err(e)?, || format!("intersection is {got}"))?;
    Ok(format!(
        "intersection equals the 8 minors, basis of {} elements",
        got.gb().len()
    ))
}

fn fpurity() -> Verdict {
    let mut jobs = Vec::new();
    for n in 1..=4 {
        for g in common::graphs(n, true) {
            if common::has_labeling(&g, false) {
                jobs.push((g.clone(), 2, 2));
                if n <= 3 {
                    jobs.push((g.clone(), 2, 3));
                    jobs.push((g, 3, 2));
                }
            }
        }
    }
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(g, m, p)| {
            let ok = (|| -> Result<bool, String> {
                let rep = fedder_for_graph(g, *m, *p).map_err(e)?;
                let Some(w) = rep.witness.as_ref().filter(|_| rep.is_fpure()) else {
                    return Ok(false);
                };
                let ideal = generalized_bei(g, *m)
                    .change_field(Field::prime(*p).map_err(e)?)
                    .map_err(e)?;
                verify_witness(&ideal, *p, w).map_err(e)
            })();
            (!matches!(ok, Ok(true))).then(|| format!("{g}, rows {m}, p = {p}"))
        })
        .collect();
    ensure(failures.is_empty(), || format!("not F-pure: {}", failures.join("; ")))?;
    Ok(format!(
        "{} (graph, rows, p) cases F-pure with checked witnesses",
        jobs.len()
    ))
}

fn squarefree_initial() -> Verdict {
    let order = TermOrder::DiagonalLex;
    let wc: Vec<Graph> = (1..=5)
        .flat_map(|n| common::graphs(n, true))
        .filter(|g| common::has_labeling(g, false))
        .collect();
    let failures: Vec<String> = wc
        .par_iter()
        .filter(|g| {
            binomial_edge_ideal(g)
                .gb()
                .iter()
                .filter_map(|p| p.leading_monomial(&order))
                .any(|m: &Monomial| m.iter().any(|(_, exp)| exp > 1))
        })
        .map(|g| g.to_string())
        .collect();
    ensure(failures.is_empty(), || {
        format!("non-squarefree leading terms for {}", failures.join("; "))
    })?;
    Ok(format!("{} weakly closed connected graphs", wc.len()))
}

fn distributivity() -> Verdict {
    let reg = explore_closure(3, 2, 5000).map_err(e)?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let len = reg.len();
    let triples: Vec<[usize; 3]> = (0..200).map(|_| [0; 3].map(|_| rng.gen_range(0..len))).collect();
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&[a, b, c]| {
            let ideal = |k: usize| &reg.entries()[k].ideal;
            match check_sum_distributes(ideal(a), ideal(b), ideal(c)) {
                Ok(true) => None,
                Ok(false) => Some(format!("#{a}, #{b}, #{c}")),
                Err(err) => Some(format!("#{a}, #{b}, #{c}: {err}")),
            }
        })
        .collect();
    ensure(failures.is_empty(), || format!("fails for {}", failures.join("; ")))?;
    Ok(format!("200 triples from a registry of {len} ideals"))
}

fn random_monomial(rng: &mut ChaCha8Rng, ring: Ring) -> Monomial {
    let vars: Vec<_> = (1..=ring.cols()).flat_map(|c| [ring.x(c), ring.y(c)]).collect();
    Monomial::from_pairs(
        vars.into_iter()
            .map(|v| (v, rng.gen_range(0..=2)))
            .filter(|&(_, e)| e > 0),
    )
}

fn exponents(ring: Ring, m: &Monomial) -> Vec<u32> {
    (1..=ring.cols())
        .flat_map(|c| [m.exponent(ring.x(c)), m.exponent(ring.y(c))])
        .collect()
}

fn from_exponents(ring: Ring, exps: &[u32]) -> Monomial {
    let vars: Vec<_> = (1..=ring.cols()).flat_map(|c| [ring.x(c), ring.y(c)]).collect();
    Monomial::from_pairs(vars.into_iter().zip(exps.iter().copied()).filter(|&(_, e)| e > 0))
}

fn monomial_ideal(ring: Ring, ms: &[Monomial]) -> Result<Ideal, String> {
    Ideal::new(
        ring,
        ms.iter()
            .map(|m| Polynomial::term(ring, m.clone(), binedge::poly::Coefficient::one(ring.field()))),
    )
    .map_err(e)
}

fn engine_properties() -> Verdict {
    let ring = Ring::classical(2);
    let order = TermOrder::DiagonalLex;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for case in 0..500 {
        let k = rng.gen_range(1..=3);
        let mut gens: Vec<Polynomial> = (0..k).map(|_| common::random_poly(&mut rng, ring, 3, 2)).collect();
        let a = Ideal::new(ring, gens.clone()).map_err(e)?;
        gens.shuffle(&mut rng);
        let b = Ideal::new(ring, gens.clone()).map_err(e)?;
        ensure(a.gb() == b.gb() && a.gb_hash() == b.gb_hash(), || {
            format!("case {case}: basis depends on order")
        })?;
        ensure(is_groebner(a.gb(), &order).map_err(e)?, || {
            format!("case {case}: not a Gröbner basis")
        })?;
        for g in &gens {
            ensure(a.contains_poly(g).map_err(e)?, || {
                format!("case {case}: generator {g} not reduced to zero")
            })?;
        }
    }

    let mul = |p: &Polynomial, q: &Polynomial| p * q;
    for case in 0..100 {
        let i = Ideal::new(
            ring,
            (0..2)
                .map(|_| common::random_poly(&mut rng, ring, 3, 2))
                .collect::<Vec<_>>(),
        )
        .map_err(e)?;
        let j = Ideal::new(
            ring,
            (0..2)
                .map(|_| common::random_poly(&mut rng, ring, 2, 2))
                .collect::<Vec<_>>(),
        )
        .map_err(e)?;
        let meet = i.intersect(&j).map_err(e)?;
        for g in meet.gb() {
            ensure(i.contains_poly(g).map_err(e)? && j.contains_poly(g).map_err(e)?, || {
                format!("case {case}: {g} escapes a factor of the intersection")
            })?;
        }
        for a in i.generators() {
            for b in j.generators() {
                ensure(meet.contains_poly(&mul(a, b)).map_err(e)?, || {
                    format!("case {case}: product not in intersection")
                })?;
            }
        }
        let colon = i.colon(&j).map_err(e)?;
        for c in colon.gb() {
            for b in j.generators() {
                ensure(i.contains_poly(&mul(c, b)).map_err(e)?, || {
                    format!("case {case}: colon element too large")
                })?;
            }
        }
        for a in i.generators() {
            ensure(colon.contains_poly(a).map_err(e)?, || {
                format!("case {case}: colon misses a generator")
            })?;
        }
    }

    for case in 0..100 {
        let ms: Vec<Monomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_monomial(&mut rng, ring))
            .collect();
        let ns: Vec<Monomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_monomial(&mut rng, ring))
            .collect();
        let (i, j) = (monomial_ideal(ring, &ms)?, monomial_ideal(ring, &ns)?);
        let lcms: Vec<Monomial> = ms
            .iter()
            .flat_map(|a| ns.iter().map(move |b| (a, b)))
            .map(|(a, b)| {
                let ea = exponents(ring, a);
                let eb = exponents(ring, b);
                from_exponents(ring, &ea.iter().zip(&eb).map(|(x, y)| *x.max(y)).collect::<Vec<_>>())
            })
            .collect();
        let meet = i.intersect(&j).map_err(e)?;
        ensure(meet.same_as(&monomial_ideal(ring, &lcms)?).map_err(e)?, || {
            format!("monomial case {case}: intersection")
        })?;

        let n0 = &ns[0];
        let quotients: Vec<Monomial> = ms
            .iter()
            .map(|a| {
                let ea = exponents(ring, a);
                let eb = exponents(ring, n0);
                from_exponents(
                    ring,
                    &ea.iter()
                        .zip(&eb)
                        .map(|(x, y)| x.saturating_sub(*y))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let colon = i.colon(&monomial_ideal(ring, std::slice::from_ref(n0))?).map_err(e)?;
        ensure(colon.same_as(&monomial_ideal(ring, &quotients)?).map_err(e)?, || {
            format!("monomial case {case}: colon")
        })?;
    }
    Ok("500 shuffles, 200 intersection and colon instances".into())
}

struct Criterion {
    name: &'static str,
    run: fn() -> Verdict,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        name: "interval rule vs Gröbner basis, all labelings, n <= 4",
        run: gb_closed_equivalence,
    },
    Criterion {
        name: "intersection of minimal primes, connected n <= 5",
        run: decomposition_identity,
    },
    Criterion {
        name: "weakly closed vs closed-form primes, connected n <= 6",
        run: psps_equivalence,
    },
    Criterion {
        name: "membership certificates, connected n <= 5",
        run: certificates,
    },
    Criterion {
        name: "prime shapes in the Knutson family, n <= 4",
        run: prime_shapes,
    },
    Criterion {
        name: "worked intersection on six columns",
        run: worked_example,
    },
    Criterion {
        name: "Fedder test on weakly closed graphs",
        run: fpurity,
    },
    Criterion {
        name: "squarefree initial ideals, connected n <= 5",
        run: squarefree_initial,
    },
    Criterion {
        name: "sum distributes over intersection",
        run: distributivity,
    },
    Criterion {
        name: "engine canonicity and ideal operations",
        run: engine_properties,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (k, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {}: {msg} [{secs:.1}s]", k + 1, c.name),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {msg} [{secs:.1}s]", k + 1, c.name);
            }
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
