use coherence_core::arrow::{
    instantiate_other_side, instantiate_side, match_all, Assignment, Direction, Object, Theory,
    Word,
};
use coherence_core::theories::theory;
use coherence_core::{ArrowTerm, TheoryKind, Tree};

fn objects(kind: TheoryKind) -> Vec<Object> {
    match kind {
        TheoryKind::SymStrict => {
            let mut words = vec![String::new()];
            let mut out = Vec::new();
            for _ in 0..4 {
                words = words
                    .iter()
                    .flat_map(|w| ["a", "b"].map(|c| format!("{w}{c}")))
                    .collect();
                out.extend(
                    words
                        .iter()
                        .map(|w| Object::Word(Word::new(w.chars()).unwrap())),
                );
            }
            out
        }
        _ => (1..=4)
            .flat_map(Tree::all_with_leaves)
            .map(Object::Tree)
            .collect(),
    }
}

fn arrows(kind: TheoryKind) -> Vec<ArrowTerm> {
    let texts: &[&str] = match kind {
        TheoryKind::Gamma => &[
            "id{*}",
            "id{(*^*)}",
            "id{(*^(*^*))}",
            "id{((*^*)^*)}",
            "g{(*^*),(*^*)}",
            "g'{(*^*),(*^*)}",
            "g{*,(*^*)}",
        ],
        TheoryKind::Assoc => &[
            "id{*}",
            "id{(*^*)}",
            "id{(*^(*^*))}",
            "id{((*^*)^*)}",
            "b{*,*,*}",
            "b'{*,*,*}",
        ],
        TheoryKind::SymStrict => &["id{a}", "id{b}", "id{ab}", "c{a,b}", "c{b,a}"],
    };
    texts
        .iter()
        .map(|t| ArrowTerm::parse(t, kind).unwrap())
        .collect()
}

// Every assignment of the given metavariables from the pools.
fn assignments(
    objs: &[&'static str],
    arrs: &[&'static str],
    idxs: &[&'static str],
    kind: TheoryKind,
) -> Vec<Assignment> {
    let mut out = vec![Assignment::default()];
    let object_pool = objects(kind);
    let arrow_pool = arrows(kind);
    for v in objs {
        out = out
            .into_iter()
            .flat_map(|a| {
                object_pool.iter().map(move |o| {
                    let mut a = a.clone();
                    a.objects.insert(v, o.clone());
                    a
                })
            })
            .collect();
    }
    for v in arrs {
        out = out
            .into_iter()
            .flat_map(|a| {
                arrow_pool.iter().map(move |f| {
                    let mut a = a.clone();
                    a.arrows.insert(v, f.clone());
                    a
                })
            })
            .collect();
    }
    for v in idxs {
        out = out
            .into_iter()
            .flat_map(|a| {
                (1..=6).map(move |k| {
                    let mut a = a.clone();
                    a.indices.insert(v, k);
                    a
                })
            })
            .collect();
    }
    out
}

// Instantiates the source side of each clause over the pools, matches it
// back, and checks that the other side has the same endpoints.
fn check_theory(th: &Theory) {
    let kind = th.kind;
    for ax in &th.axioms {
        for (ci, clause) in ax.clauses.iter().enumerate() {
            for dir in [Direction::Forward, Direction::Backward] {
                let side = match dir {
                    Direction::Forward => &clause.lhs,
                    Direction::Backward => &clause.rhs,
                };
                let (o, a, i) = side.vars();
                let mut checked = 0;
                for asg in assignments(&o, &a, &i, kind) {
                    let Ok(term) = instantiate_side(clause, dir, &asg, kind) else {
                        continue;
                    };
                    let Ok(ends) = term.infer_type(kind) else {
                        continue;
                    };
                    for m in match_all(ax, dir, &term, kind) {
                        if m.clause != ci {
                            continue;
                        }
                        let other = instantiate_other_side(ax, dir, &m, kind)
                            .unwrap_or_else(|e| panic!("{} {dir}: {term}: {e}", ax.name));
                        let other_ends = other.infer_type(kind).unwrap_or_else(|e| {
                            panic!("{} {dir}: {term} gives {other}: {e}", ax.name)
                        });
                        assert_eq!(ends, other_ends, "{} {dir}: {term} vs {other}", ax.name);
                        checked += 1;
                    }
                }
                assert!(checked > 0, "{} clause {ci} {dir} never applied", ax.name);
            }
        }
    }
}

#[test]
fn gamma_axioms_preserve_endpoints() {
    check_theory(&theory(TheoryKind::Gamma));
}

#[test]
fn assoc_axioms_preserve_endpoints() {
    check_theory(&theory(TheoryKind::Assoc));
}

#[test]
fn symmetric_axioms_preserve_endpoints() {
    check_theory(&theory(TheoryKind::SymStrict));
}

#[test]
fn catalogs_have_the_expected_axioms() {
    let names = |k| theory(k).axiom_names();
    assert_eq!(
        names(TheoryKind::Gamma),
        [
            "cat1",
            "cat2",
            "bif1",
            "bif2",
            "assoc1",
            "assoc2",
            "unit",
            "gamma-nat",
            "gamma-gamma-l",
            "gamma-gamma-r",
            "gamma1",
            "hex1",
            "hex1a",
            "hex2",
            "hex2a"
        ]
    );
    assert_eq!(
        names(TheoryKind::Assoc),
        ["cat1", "cat2", "bif1", "bif2", "b-nat", "bb-l", "bb-r", "b5"]
    );
    assert_eq!(
        names(TheoryKind::SymStrict),
        ["cat1", "cat2", "bif1", "bif2", "c-nat", "c-hex1"]
    );
}

#[test]
fn hex1_is_a_triangle() {
    let th = theory(TheoryKind::Gamma);
    let hex1 = th.axiom("hex1").unwrap();
    let mut asg = Assignment::default();
    for v in ["A", "B", "C"] {
        asg.objects.insert(v, Object::Tree(Tree::two()));
    }
    let rhs = instantiate_side(
        &hex1.clauses[0],
        Direction::Backward,
        &asg,
        TheoryKind::Gamma,
    )
    .unwrap();
    let factors = rhs.factors();
    assert_eq!(factors.len(), 2);
    assert!(factors.iter().all(|f| !f.is_identity()));
    let lhs = instantiate_side(
        &hex1.clauses[0],
        Direction::Forward,
        &asg,
        TheoryKind::Gamma,
    )
    .unwrap();
    assert_eq!(
        lhs.infer_type(TheoryKind::Gamma).unwrap(),
        rhs.infer_type(TheoryKind::Gamma).unwrap()
    );
}
