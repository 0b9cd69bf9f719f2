use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use binedge::bei::{binomial_edge_ideal, decompose, PrimeEntry};
use binedge::fpurity::fedder_for_graph;
use binedge::graph::{find_closed_labeling, find_weakly_closed_labeling, Graph, Labeling};
use binedge::harness::run_suite;
use binedge::knutson::{
    certify_membership_jg, explore, replay, shape_check, shape_of, CertNode, Certificate, CertifyOutcome,
    ExploreConfig, NodeKind,
};
use binedge::poly::Ring;
use binedge::tool_id;

use crate::{Command, LabelingChoice, Mode};

/// What to print and the exit status: 0 success, 1 negative result.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn new(text: String, success: bool) -> Self {
        Output {
            text,
            code: if success { 0 } else { 1 },
        }
    }
}

type Outcome = Result<Output, String>;

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(command: &Command, json: bool) -> Outcome {
    match command {
        Command::Recognize { graph, mode } => recognize(&read_graph(graph)?, *mode, json),
        Command::Decompose { graph, labeling } => decomposition(&read_graph(graph)?, *labeling, json),
        Command::Verify { suite, nmax, seed } => {
            let summary = run_suite(*suite, *nmax, *seed).map_err(|e| e.to_string())?;
            let text = if json {
                to_json(&json!({ "summary": summary, "tool": tool_id() }))
            } else {
                format!("{summary}\n")
            };
            Ok(Output::new(text, summary.ok()))
        }
        Command::Knutson {
            n,
            depth,
            max_ideals,
            no_seed_axiom,
            check,
        } => {
            let config = ExploreConfig {
                n: *n,
                max_depth: *depth,
                max_ideals: *max_ideals,
                seed_axiom: !no_seed_axiom,
            };
            knutson(&config, *check, json)
        }
        Command::Fpure {
            graph,
            p,
            rows,
            unbounded,
        } => fpure(&read_graph(graph)?, *p, *rows, *unbounded, json),
        Command::Certify { graph, rows } => certify(&read_graph(graph)?, *rows, json),
        Command::Replay { certificate } => {
            let text = fs::read_to_string(certificate).map_err(|e| format!("{}: {e}", certificate.display()))?;
            let cert: Certificate =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", certificate.display()))?;
            let ok = replay(&cert).map_err(|e| e.to_string())?;
            let text = if json {
                to_json(&json!({ "replayed": ok, "tool": tool_id() }))
            } else {
                format!("replay: {}\n", if ok { "ok" } else { "mismatch" })
            };
            Ok(Output::new(text, ok))
        }
    }
}

fn recognize(g: &Graph, mode: Mode, json: bool) -> Outcome {
    let found = match mode {
        Mode::Closed => find_closed_labeling(g),
        Mode::WeaklyClosed => find_weakly_closed_labeling(g),
    }
    .map_err(|e| e.to_string())?;
    let text = if json {
        let mode = match mode {
            Mode::Closed => "closed",
            Mode::WeaklyClosed => "weakly-closed",
        };
        to_json(&json!({ "graph": g, "mode": mode, "labeling": found, "tool": tool_id() }))
    } else {
        match &found {
            Some(lab) => format!("{lab}\n"),
            None => "none\n".to_string(),
        }
    };
    Ok(Output::new(text, found.is_some()))
}

fn render_prime(p: &PrimeEntry) -> String {
    let mut parts: Vec<String> = p.s.iter().flat_map(|c| [format!("x{c}"), format!("y{c}")]).collect();
    if p.closed_form {
        parts.extend(
            p.intervals
                .iter()
                .filter(|(a, b)| a < b)
                .map(|(a, b)| format!("I_2(X[{a},{b}])")),
        );
    } else {
        parts.extend(p.cliques.iter().filter(|c| c.len() >= 2).map(|c| format!("I_2(X{c})")));
    }
    if parts.is_empty() {
        "(0)".into()
    } else {
        format!("({})", parts.join(", "))
    }
}

fn decomposition(g: &Graph, choice: LabelingChoice, json: bool) -> Outcome {
    let lab = match choice {
        LabelingChoice::Identity => Some(Labeling::identity(g.n())),
        LabelingChoice::Closed => find_closed_labeling(g).map_err(|e| e.to_string())?,
        LabelingChoice::WeaklyClosed => find_weakly_closed_labeling(g).map_err(|e| e.to_string())?,
    };
    let Some(lab) = lab else {
        let text = if json {
            to_json(&json!({ "graph": g, "labeling": null, "tool": tool_id() }))
        } else {
            "none\n".to_string()
        };
        return Ok(Output::new(text, false));
    };
    let report = decompose(g, &lab).map_err(|e| e.to_string())?;
    if json {
        return Ok(Output::new(to_json(&report), report.decomposition_verified));
    }
    let mut text = String::new();
    writeln!(text, "graph: {}", report.graph).unwrap();
    writeln!(text, "labeling: {}", report.labeling).unwrap();
    writeln!(text, "closed: {}", yes_no(report.closed)).unwrap();
    writeln!(text, "ideal: {}", binomial_edge_ideal(&report.graph)).unwrap();
    writeln!(text, "minimal primes: {}", report.minimal_primes.len()).unwrap();
    for p in &report.minimal_primes {
        let form = if p.closed_form { "closed form" } else { "open form" };
        writeln!(text, "  S = {}: {}  [{form}]", p.s, render_prime(p)).unwrap();
    }
    writeln!(
        text,
        "intersection equals the ideal: {}",
        yes_no(report.decomposition_verified)
    )
    .unwrap();
    writeln!(text, "term order: {}", report.term_order).unwrap();
    Ok(Output::new(text, report.decomposition_verified))
}

fn knutson(config: &ExploreConfig, check: bool, json: bool) -> Outcome {
    let reg = explore(config).map_err(|e| e.to_string())?;
    let primes = reg.all_minimal_primes();
    let shapes: Vec<bool> = primes
        .iter()
        .map(|p| shape_of(p).is_some() && shape_check(&p.to_ideal()))
        .collect();
    let shapes_ok = shapes.iter().all(|&b| b);
    let mut checks_ok = true;
    let mut checked = Vec::new();
    if check {
        for e in reg.entries() {
            let replayed = reg.replay(e.id).map_err(|e| e.to_string())?;
            let radical = reg.is_radical_consistent(e.id).map_err(|e| e.to_string())?;
            checks_ok &= replayed && radical;
            checked.push((replayed, radical));
        }
    }
    let ok = shapes_ok && checks_ok;
    let text = if json {
        let entries: Vec<_> = reg
            .entries()
            .iter()
            .map(|e| {
                let mut v = json!({
                    "id": e.id,
                    "depth": e.depth,
                    "derivation": e.derivation,
                    "ideal_gb_hash": e.ideal.gb_hash(),
                    "gb": e.ideal.gb().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "min_primes": e.min_primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                });
                if let Some((replayed, radical)) = checked.get(e.id) {
                    v["replayed"] = json!(replayed);
                    v["radical_consistent"] = json!(radical);
                }
                v
            })
            .collect();
        let minimal_primes: Vec<_> = primes
            .iter()
            .zip(&shapes)
            .map(|(p, ok)| json!({ "prime": p.to_string(), "shape_check": ok }))
            .collect();
        to_json(&json!({
            "n": config.n,
            "max_depth": config.max_depth,
            "max_ideals": config.max_ideals,
            "seed_axiom": config.seed_axiom,
            "truncated": reg.truncated(),
            "entries": entries,
            "minimal_primes": minimal_primes,
            "all_shape_checks_pass": shapes_ok,
            "tool": tool_id(),
            "term_order": Ring::classical(config.n).order_convention(),
        }))
    } else {
        let mut text = String::new();
        for e in reg.entries() {
            let gb: Vec<String> = e.ideal.gb().iter().map(|g| g.to_string()).collect();
            let mp: Vec<String> = e.min_primes.iter().map(|p| p.to_string()).collect();
            writeln!(
                text,
                "#{} depth {} {}: ({})",
                e.id,
                e.depth,
                e.derivation,
                gb.join(", ")
            )
            .unwrap();
            writeln!(text, "    min primes: {}", mp.join(" ")).unwrap();
        }
        writeln!(
            text,
            "{} ideals{}, {} distinct minimal primes, shape checks: {}",
            reg.len(),
            if reg.truncated() { " (truncated)" } else { "" },
            primes.len(),
            if shapes_ok { "all pass" } else { "FAILURES" }
        )
        .unwrap();
        if check {
            writeln!(
                text,
                "replay and radical checks: {}",
                if checks_ok { "all pass" } else { "FAILURES" }
            )
            .unwrap();
        }
        text
    };
    Ok(Output::new(text, ok))
}

fn fpure(g: &Graph, p: u32, rows: usize, unbounded: bool, json: bool) -> Outcome {
    let max_n = if rows <= 2 { 4 } else { 3 };
    if !unbounded && (g.n() > max_n || p > 3 || rows > 3) {
        return Err(format!(
            "Fedder test limited to n <= {max_n}, p <= 3 and at most 3 rows by default; pass --unbounded to lift"
        ));
    }
    let report = fedder_for_graph(g, rows, p).map_err(|e| e.to_string())?;
    let text = if json {
        to_json(&report)
    } else {
        let witness = report.witness.as_ref().map_or("none".to_string(), |w| w.to_string());
        format!(
            "p = {}\nverdict: {}\nwitness: {}\ncolon basis size: {}\n",
            report.p, report.verdict, witness, report.colon_gb_size
        )
    };
    Ok(Output::new(text, report.is_fpure()))
}

fn render_tree(node: &CertNode, indent: usize, out: &mut String) {
    let label = match node.node {
        NodeKind::Seed => format!("seed {}", node.seed.map(|s| s.to_string()).unwrap_or_default()),
        NodeKind::Sum if node.children.is_empty() => "sum (0)".to_string(),
        NodeKind::Sum => "sum".to_string(),
        NodeKind::Intersect => "intersect".to_string(),
    };
    writeln!(out, "{:indent$}{label}  {}", "", &node.ideal_gb_hash[..16]).unwrap();
    for c in &node.children {
        render_tree(c, indent + 2, out);
    }
}

fn certify(g: &Graph, rows: usize, json: bool) -> Outcome {
    let outcome = certify_membership_jg(g, rows).map_err(|e| e.to_string())?;
    let ok = matches!(&outcome, CertifyOutcome::Certified(c) if c.verified);
    if json {
        let text = match &outcome {
            CertifyOutcome::Certified(c) => to_json(c),
            CertifyOutcome::Refused(r) => to_json(r),
        };
        return Ok(Output::new(text, ok));
    }
    let mut text = String::new();
    match &outcome {
        CertifyOutcome::Certified(c) => {
            writeln!(text, "graph: {}", c.graph).unwrap();
            writeln!(text, "labeling: {}", c.labeling).unwrap();
            writeln!(text, "rows: {}", c.m).unwrap();
            writeln!(text, "verified: {}", yes_no(c.verified)).unwrap();
            render_tree(&c.root, 0, &mut text);
        }
        CertifyOutcome::Refused(r) => {
            writeln!(text, "refused: {}", r.witness).unwrap();
        }
    }
    Ok(Output::new(text, ok))
}
