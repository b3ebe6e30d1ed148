//! The acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p coherence-cli --test acceptance -- --nocapture`.

mod support;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use coherence_core::arrow::{verify_chain, ProofStep};
use coherence_core::coherence::{arrows_equal, expand_gamma, functor_f, functor_g};
use coherence_core::enumerate::{assoc_arrows, gamma22_arrows};
use coherence_core::insertion::{
    classify_normal, equal_terms, normalize, normalize_traced, normalize_with, Strategy,
};
use coherence_core::polytopes::{hexagon_pentagon_collapse, isomorphic, tamari_graph};
use coherence_core::theories::{builtin, pentagon_endpoints_check, theory};
use coherence_core::{
    ArrowTerm, Calculus, Direction, ITerm, Object, Path, ProofScript, TheoryKind, Tree,
};
use support::golden;

const MAX_ARITY: usize = 6;
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const ROUND_TRIP_BUDGET: Duration = Duration::from_secs(120);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn terms_by_arity() -> Vec<(usize, Vec<ITerm>)> {
    (2..=MAX_ARITY)
        .map(|n| (n, ITerm::all_with_arity(n)))
        .collect()
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    for (_, terms) in terms_by_arity() {
        let values: Vec<Tree> = terms.iter().map(|t| t.eval()).collect();
        for (i, a) in terms.iter().enumerate() {
            for (j, b) in terms.iter().enumerate() {
                pairs += 1;
                if equal_terms(a, b, Calculus::WithoutUnit) != (values[i] == values[j]) {
                    bad.push(format!("{a} vs {b}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if !bad.is_empty() {
        return Err(format!("{} discrepancies, first {}", bad.len(), bad[0]));
    }
    if elapsed > ORACLE_BUDGET {
        return Err(format!("{pairs} pairs took {elapsed:?}"));
    }
    Ok(format!(
        "{pairs} pairs, 0 discrepancies, {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn measure_decreases() -> Verdict {
    let mut steps = 0usize;
    for (_, terms) in terms_by_arity() {
        for t in &terms {
            let (_, trace) =
                normalize_traced(t, Calculus::WithoutUnit, Strategy::LeftmostOutermost);
            let mut d = t.measure_d().map_err(|e| e.to_string())?;
            for rw in trace {
                let next = rw.result.measure_d().map_err(|e| e.to_string())?;
                if next >= d {
                    return Err(format!("{t}: {} gives d {d} -> {next}", rw.rule));
                }
                d = next;
                steps += 1;
            }
        }
    }
    Ok(format!("{steps} rewrite steps, 0 violations"))
}

fn strategies_agree() -> Verdict {
    let mut count = 0;
    for (_, terms) in terms_by_arity() {
        for t in &terms {
            let outer = normalize_with(t, Calculus::WithoutUnit, Strategy::LeftmostOutermost);
            let inner = normalize_with(t, Calculus::WithoutUnit, Strategy::LeftmostInnermost);
            if outer != inner {
                return Err(format!("{t}: {outer} vs {inner}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} terms, 0 disagreements"))
}

// Terms with unit having at most `size` generators.
fn unit_terms(size: usize) -> Vec<ITerm> {
    let mut by_size: Vec<Vec<ITerm>> = vec![Vec::new(), vec![ITerm::One, ITerm::Two]];
    for s in 2..=size {
        let mut level = Vec::new();
        for l in 1..s {
            for a in &by_size[l] {
                for b in &by_size[s - l] {
                    for n in 1..=a.arity() {
                        level.push(ITerm::ins(a.clone(), n, b.clone()).expect("index in range"));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.concat()
}

fn normal_types_total() -> Verdict {
    let mut plain = 0;
    for (_, terms) in terms_by_arity() {
        for t in &terms {
            let nf = normalize(t, Calculus::WithoutUnit);
            match classify_normal(&nf) {
                Ok(ty) if matches!(ty.number(), Some(1..=4)) => plain += 1,
                other => return Err(format!("{nf}: {other:?}")),
            }
        }
    }
    let with_unit = unit_terms(5);
    for t in &with_unit {
        let nf = normalize(t, Calculus::WithUnit);
        let ok = match classify_normal(&nf) {
            Ok(ty) => ty.number().is_some() || nf == ITerm::One,
            Err(_) => false,
        };
        if !ok {
            return Err(format!("{t} normalizes to unclassified {nf}"));
        }
    }
    Ok(format!(
        "{plain} terms without unit, {} with unit",
        with_unit.len()
    ))
}

// Brute-force rotation count: pairs of trees one rotation apart.
fn rotations(t: &Tree) -> BTreeSet<Tree> {
    let mut out = BTreeSet::new();
    if let Some((l, r)) = t.children() {
        if let Some((v, w)) = r.children() {
            out.insert(Tree::wedge(Tree::wedge(l.clone(), v.clone()), w.clone()));
        }
        out.extend(rotations(l).into_iter().map(|s| Tree::wedge(s, r.clone())));
        out.extend(rotations(r).into_iter().map(|s| Tree::wedge(l.clone(), s)));
    }
    out
}

fn catalan_counts() -> Verdict {
    let normal: Vec<usize> = terms_by_arity()
        .iter()
        .map(|(_, ts)| {
            ts.iter()
                .filter(|t| t.is_normal(Calculus::WithoutUnit))
                .count()
        })
        .collect();
    if normal != [1, 2, 5, 14, 42] {
        return Err(format!("normal terms by arity {normal:?}"));
    }
    for n in 2..=8 {
        let g = tamari_graph(n, false).map_err(|e| e.to_string())?;
        if g.vertex_count() != catalan(n - 1) {
            return Err(format!("tamari {n} has {} vertices", g.vertex_count()));
        }
    }
    for (n, want) in [(4, 5), (5, 21)] {
        let oracle: usize = Tree::all_with_leaves(n)
            .iter()
            .map(|t| rotations(t).len())
            .sum();
        let got = tamari_graph(n, false)
            .map_err(|e| e.to_string())?
            .edge_count();
        if oracle != want || got != want {
            return Err(format!(
                "tamari {n}: {got} edges, oracle {oracle}, expected {want}"
            ));
        }
    }
    Ok("normal terms 1 2 5 14 42; tamari vertices Catalan(n-1) for n <= 8; edges 5, 21".into())
}

fn paths(t: &ArrowTerm) -> Vec<Path> {
    let mut out = vec![Path::root()];
    for (i, c) in t.children().into_iter().enumerate() {
        out.extend(paths(c).into_iter().map(|p| {
            let mut v = vec![i + 1];
            v.extend(p.0);
            Path(v)
        }));
    }
    out
}

// Every single-step alteration of the script; returns how many were tried.
fn alterations_rejected(script: &ProofScript) -> Result<usize, String> {
    let th = theory(script.theory);
    let mut tried = 0;
    for (k, step) in script.steps.iter().enumerate() {
        for axiom in th.axiom_names() {
            for direction in [Direction::Forward, Direction::Backward] {
                for path in paths(&script.terms[k]) {
                    let v = ProofStep {
                        axiom: axiom.to_string(),
                        direction,
                        path,
                    };
                    if v == *step {
                        continue;
                    }
                    let mut altered = script.clone();
                    altered.steps[k] = v.clone();
                    if verify_chain(&altered, &th).is_ok() {
                        return Err(format!(
                            "step {} as {} {} at {} accepted",
                            k + 1,
                            v.axiom,
                            v.direction,
                            v.path
                        ));
                    }
                    tried += 1;
                }
            }
        }
    }
    Ok(tried)
}

fn pentagon_decompositions() -> Verdict {
    let instances = pentagon_endpoints_check().map_err(|e| e.to_string())?;
    let b5 = &instances[0].lhs;
    let leaf_source = Object::Tree(Tree::parse("(*^(*^(*^*)))").unwrap());
    let leaf_target = Object::Tree(Tree::parse("(((*^*)^*)^*)").unwrap());
    if b5.source != leaf_source || b5.target != leaf_target {
        return Err(format!("b5 at leaves has endpoints {b5}"));
    }
    let mut tried = 0;
    for name in ["pentagon-1", "pentagon-2"] {
        let b = builtin(name).ok_or("missing built-in")?;
        let report = b.verify().map_err(|e| format!("{name}: {e}"))?;
        if report.endpoints != *b5 {
            return Err(format!("{name} proves {}", report.endpoints));
        }
        tried += alterations_rejected(&b.script()).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "both verify with endpoints {b5}; {tried} altered variants rejected"
    ))
}

fn yang_baxter() -> Verdict {
    let b = builtin("yang-baxter").ok_or("missing built-in")?;
    let script = b.script();
    if script.theory != TheoryKind::SymStrict {
        return Err(format!("theory {}", script.theory));
    }
    let report = b.verify().map_err(|e| e.to_string())?;
    if report.endpoints.source.size() != 3 {
        return Err(format!("endpoints {}", report.endpoints));
    }
    let tried = alterations_rejected(&script)?;
    Ok(format!(
        "verifies, {} in {} steps; {tried} altered variants rejected",
        report.endpoints, report.steps
    ))
}

fn isomorphism_round_trip() -> Verdict {
    let start = Instant::now();
    let assoc = assoc_arrows(4, 4);
    for f in &assoc {
        let back = functor_g(f)
            .and_then(|g| functor_f(&g))
            .map_err(|e| format!("{f}: {e}"))?;
        back.infer_type(TheoryKind::Assoc)
            .map_err(|e| format!("{f}: {e}"))?;
        if !arrows_equal(&back, f, TheoryKind::Assoc).map_err(|e| e.to_string())? {
            return Err(format!("F(G({f})) = {back}"));
        }
    }
    let gamma = gamma22_arrows(4, 4);
    for h in &gamma {
        let back = functor_f(h)
            .and_then(|f| functor_g(&f))
            .map_err(|e| format!("{h}: {e}"))?;
        back.infer_type(TheoryKind::Gamma)
            .map_err(|e| format!("{h}: {e}"))?;
        if !arrows_equal(&back, h, TheoryKind::Gamma).map_err(|e| e.to_string())? {
            return Err(format!("G(F({h})) = {back}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ROUND_TRIP_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{} Â terms, {} Γ terms, 0 failures, {:.1}s",
        assoc.len(),
        gamma.len(),
        elapsed.as_secs_f64()
    ))
}

// Grafting by text: replace the n-th leaf symbol of `a` by `b`.
fn graft(a: &Tree, n: usize, b: &Tree) -> Tree {
    let text = a.to_string();
    let (at, _) = text.match_indices('*').nth(n - 1).expect("leaf exists");
    Tree::parse(&format!("{}{b}{}", &text[..at], &text[at + 1..])).expect("tree text")
}

fn expand_gamma_endpoints() -> Verdict {
    let trees: Vec<Tree> = (1..=6).flat_map(Tree::all_with_leaves).collect();
    let mut pairs = 0;
    for a in &trees {
        for b in trees
            .iter()
            .filter(|b| a.leaf_count() + b.leaf_count() <= 7)
        {
            let e = expand_gamma(a, b, Direction::Forward)
                .infer_type(TheoryKind::Gamma)
                .map_err(|e| format!("{a}, {b}: {e}"))?;
            let want = (graft(a, a.leaf_count(), b), graft(b, 1, a));
            if (e.source.as_tree(), e.target.as_tree()) != (Some(&want.0), Some(&want.1)) {
                return Err(format!("{a}, {b}: {e}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, 0 failures"))
}

fn collapse_example() -> Verdict {
    let report = hexagon_pentagon_collapse();
    let tamari4 = tamari_graph(4, false).map_err(|e| e.to_string())?;
    if !isomorphic(&report.pentagon, &tamari4) {
        return Err("collapsed hexagon is not the pentagon".into());
    }
    let want = vec![("BAC".to_string(), "BCA".to_string())];
    if report.identified != want {
        return Err(format!("identified {:?}", report.identified));
    }
    let object = &report.vertex_map["BAC"];
    if object.to_string() != "((*^*)^(*^*))" {
        return Err(format!("identified vertices become {object}"));
    }
    Ok(format!(
        "6 vertices to 5, BAC = BCA = {object}, isomorphic to tamari 4"
    ))
}

const SUBCOMMANDS: [&str; 12] = [
    "normalize",
    "eq",
    "eval",
    "embed",
    "gamma",
    "translate",
    "arrow-eq",
    "canon",
    "check-proof",
    "check-builtin",
    "export-builtin",
    "graph",
];

fn cli_golden() -> Verdict {
    let cases = golden::cases();
    for c in &cases {
        c.check().map_err(|e| format!("{}: {e}", c.name))?;
    }
    for sub in SUBCOMMANDS {
        if !cases.iter().any(|c| golden::subcommand(c) == sub) {
            return Err(format!("no golden case for {sub}"));
        }
    }
    let corpus = golden::malformed();
    for args in &corpus {
        golden::check_malformed(args)?;
    }
    Ok(format!(
        "{} golden cases byte-identical, {} malformed inputs exit 2",
        cases.len(),
        corpus.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("oracle equivalence", oracle_equivalence),
        ("termination measure", measure_decreases),
        ("unique normal form", strategies_agree),
        ("normal-type totality", normal_types_total),
        ("catalan counts", catalan_counts),
        ("pentagon decompositions", pentagon_decompositions),
        ("yang-baxter", yang_baxter),
        ("isomorphism round trip", isomorphism_round_trip),
        ("expand_gamma endpoints", expand_gamma_endpoints),
        ("collapse example", collapse_example),
        ("cli golden files", cli_golden),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {}. {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
