//! Exhaustive enumeration of small well-typed arrow terms.

use crate::arrow::{ArrowTerm, TheoryKind};
use crate::tree::Tree;

struct Typed {
    term: ArrowTerm,
    source: Tree,
    target: Tree,
    depth: usize,
}

fn typed(term: ArrowTerm, kind: TheoryKind) -> Typed {
    let e = term
        .infer_type(kind)
        .expect("enumerated terms are well typed");
    Typed {
        depth: term.depth(),
        source: e.source.as_tree().expect("trees").clone(),
        target: e.target.as_tree().expect("trees").clone(),
        term,
    }
}

fn trees_up_to(max_leaves: usize) -> Vec<Tree> {
    (1..=max_leaves).flat_map(Tree::all_with_leaves).collect()
}

// Builds the closure layer by layer; a term of depth k has a child of depth
// k - 1, so every binary combination is generated exactly once.
fn close(
    atoms: Vec<Typed>,
    max_depth: usize,
    combine: impl Fn(&Typed, &Typed, &mut Vec<ArrowTerm>),
    kind: TheoryKind,
) -> Vec<ArrowTerm> {
    let mut all = atoms;
    for k in 2..=max_depth {
        let mut fresh = Vec::new();
        for a in &all {
            for b in &all {
                if a.depth == k - 1 || b.depth == k - 1 {
                    combine(a, b, &mut fresh);
                }
            }
        }
        all.extend(fresh.into_iter().map(|t| typed(t, kind)));
    }
    all.into_iter().map(|t| t.term).collect()
}

/// Terms of Â of depth at most `max_depth` whose objects have at most
/// `max_leaves` leaves: identities, `b`, `b⁻¹`, `∘` and `∧`.
pub fn assoc_arrows(max_depth: usize, max_leaves: usize) -> Vec<ArrowTerm> {
    let kind = TheoryKind::Assoc;
    let trees = trees_up_to(max_leaves);
    let mut atoms: Vec<Typed> = trees
        .iter()
        .map(|t| typed(ArrowTerm::id(t.clone()), kind))
        .collect();
    for a in &trees {
        for b in &trees {
            for c in &trees {
                if a.leaf_count() + b.leaf_count() + c.leaf_count() <= max_leaves {
                    let (a, b, c) = (a.clone(), b.clone(), c.clone());
                    atoms.push(typed(
                        ArrowTerm::assoc(a.clone(), b.clone(), c.clone()),
                        kind,
                    ));
                    atoms.push(typed(ArrowTerm::assoc_inv(a, b, c), kind));
                }
            }
        }
    }
    close(
        atoms,
        max_depth,
        |a, b, out| {
            if b.target == a.source {
                out.push(ArrowTerm::compose(a.term.clone(), b.term.clone()));
            }
            if a.source.leaf_count() + b.source.leaf_count() <= max_leaves {
                out.push(ArrowTerm::tensor(a.term.clone(), b.term.clone()));
            }
        },
        kind,
    )
}

/// Terms of Γ of depth at most `max_depth` whose objects have at most
/// `max_leaves` leaves: identities, `γ_{2,2}`, `∘` and `◁n`.
pub fn gamma22_arrows(max_depth: usize, max_leaves: usize) -> Vec<ArrowTerm> {
    let kind = TheoryKind::Gamma;
    let mut atoms: Vec<Typed> = trees_up_to(max_leaves)
        .into_iter()
        .map(|t| typed(ArrowTerm::id(t), kind))
        .collect();
    if max_leaves >= 3 {
        atoms.push(typed(ArrowTerm::gamma(Tree::two(), Tree::two()), kind));
    }
    close(
        atoms,
        max_depth,
        |a, b, out| {
            if b.target == a.source {
                out.push(ArrowTerm::compose(a.term.clone(), b.term.clone()));
            }
            let (m, n) = (a.source.leaf_count(), b.source.leaf_count());
            if m + n - 1 <= max_leaves {
                for i in 1..=m {
                    out.push(ArrowTerm::ins(a.term.clone(), i, b.term.clone()));
                }
            }
        },
        kind,
    )
}
