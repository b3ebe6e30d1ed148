//! The isomorphism between Γ and Â, and equality of arrows by endpoints.
//!
//! Both categories have planar binary trees as objects, so the functors
//! `G: Â → Γ` and `F: Γ → Â` are the identity on objects and only
//! translate arrow terms.

use thiserror::Error;

use crate::arrow::{ArrowError, ArrowTerm, Direction, Generator, Object, TheoryKind};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoherenceError {
    #[error(transparent)]
    Arrow(#[from] ArrowError),
    #[error("arrow equality is not decided for theory {0}")]
    Unsupported(TheoryKind),
    #[error("trees have {left} and {right} leaves")]
    LeafCountMismatch { left: usize, right: usize },
    #[error("insertion index {index} out of range for an arrow of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
}

fn tree_of(o: &Object) -> Result<&Tree, CoherenceError> {
    o.as_tree()
        .ok_or(CoherenceError::Arrow(ArrowError::MixedObjects))
}

fn two() -> Tree {
    Tree::two()
}

fn gamma22(direction: Direction) -> ArrowTerm {
    match direction {
        Direction::Forward => ArrowTerm::gamma(two(), two()),
        Direction::Backward => ArrowTerm::gamma_inv(two(), two()),
    }
}

/// `b_{A,B,C}` in Γ: `((γ_{2,2} ◁3 1_C) ◁2 1_B) ◁1 1_A`, with `γ←` for the
/// backward direction.
pub fn b_in_gamma(a: &Tree, b: &Tree, c: &Tree, direction: Direction) -> ArrowTerm {
    let inner = ArrowTerm::ins(gamma22(direction), 3, ArrowTerm::id(c.clone()));
    let mid = ArrowTerm::ins(inner, 2, ArrowTerm::id(b.clone()));
    ArrowTerm::ins(mid, 1, ArrowTerm::id(a.clone()))
}

/// `f ∧ g` in Γ: `(1_2 ◁2 g) ◁1 f`.
pub fn wedge_in_gamma(f: &ArrowTerm, g: &ArrowTerm) -> Result<ArrowTerm, CoherenceError> {
    f.infer_type(TheoryKind::Gamma)?;
    g.infer_type(TheoryKind::Gamma)?;
    Ok(wedge_unchecked(f.clone(), g.clone()))
}

fn wedge_unchecked(f: ArrowTerm, g: ArrowTerm) -> ArrowTerm {
    ArrowTerm::ins(ArrowTerm::ins(ArrowTerm::id(two()), 2, g), 1, f)
}

/// `γ_{A,B}` in Γ built from `γ_{2,2}`, identities, `∘` and `◁n` only.
///
/// `A` is reduced to `2` first, writing `X ∧ Y` as `(2 ◁2 Y) ◁1 X`; then
/// `B` is reduced the same way.
pub fn expand_gamma(a: &Tree, b: &Tree, direction: Direction) -> ArrowTerm {
    let forward = expand_forward(a, b);
    match direction {
        Direction::Forward => forward,
        Direction::Backward => forward.inverse(),
    }
}

fn expand_forward(a: &Tree, b: &Tree) -> ArrowTerm {
    let (Some((x, y)), Some((u, v))) = (a.children(), b.children()) else {
        // γ_{∗,A} = γ_{A,∗} = 1_A
        let object = if a.is_leaf() { b } else { a };
        return ArrowTerm::id(object.clone());
    };
    let two_y = Tree::wedge(Tree::Leaf, y.clone());
    if !x.is_leaf() {
        // γ_{(2◁2Y)◁1X, B} = γ_{2◁2Y, B} ◁1 1_X
        return ArrowTerm::ins(expand_forward(&two_y, b), 1, ArrowTerm::id(x.clone()));
    }
    if !y.is_leaf() {
        // γ_{2◁2Y, B} = (γ_{2,B} ◁2 1_Y) ∘ (1_2 ◁2 γ_{Y,B})
        return ArrowTerm::compose(
            ArrowTerm::ins(expand_forward(&two(), b), 2, ArrowTerm::id(y.clone())),
            ArrowTerm::ins(ArrowTerm::id(two()), 2, expand_forward(y, b)),
        );
    }
    let two_v = Tree::wedge(Tree::Leaf, v.clone());
    if !u.is_leaf() {
        // γ_{2, (2◁2V)◁1U} = (1_{2◁2V} ◁1 γ_{2,U}) ∘ (γ_{2,2◁2V} ◁2 1_U)
        return ArrowTerm::compose(
            ArrowTerm::ins(ArrowTerm::id(two_v.clone()), 1, expand_forward(&two(), u)),
            ArrowTerm::ins(expand_forward(&two(), &two_v), 2, ArrowTerm::id(u.clone())),
        );
    }
    if !v.is_leaf() {
        // γ_{2, 2◁2V} = γ_{2,2} ◁3 1_V
        return ArrowTerm::ins(ArrowTerm::gamma(two(), two()), 3, ArrowTerm::id(v.clone()));
    }
    ArrowTerm::gamma(two(), two())
}

/// Insertion on Â arrows, defined by induction:
///
/// ```text
/// 1_∗ ◁1 g = g
/// 1_{A∧B} ◁n g = (1_A ◁n g) ∧ 1_B            n ≤ |A|
///              = 1_A ∧ (1_B ◁(n-|A|) g)      otherwise
/// b_{A,B,C} ◁n 1_D = b_{A',B',C'}            A'∧(B'∧C') = (A∧(B∧C)) ◁n D
/// (f2 ∘ f1) ◁n 1_D = (f2 ◁n 1_D) ∘ (f1 ◁n 1_D)
/// (f1 ∧ f2) ◁n 1_D = (f1 ◁n 1_D) ∧ f2 or f1 ∧ (f2 ◁(n-|f1|) 1_D)
/// f ◁n g = (1_B ◁n g) ∘ (f ◁n 1_C)           f: A → B, g: C → D
/// ```
pub fn ins_on_assoc_arrows(
    f: &ArrowTerm,
    n: usize,
    g: &ArrowTerm,
) -> Result<ArrowTerm, CoherenceError> {
    let ef = f.infer_type(TheoryKind::Assoc)?;
    let eg = g.infer_type(TheoryKind::Assoc)?;
    let size = ef.source.size();
    if n < 1 || n > size {
        return Err(CoherenceError::IndexOutOfRange { index: n, size });
    }
    Ok(ins_assoc(f, n, g, &ef.target, &eg.source))
}

// `f_target` is the target of `f`, `g_source` the source of `g`.
fn ins_assoc(
    f: &ArrowTerm,
    n: usize,
    g: &ArrowTerm,
    f_target: &Object,
    g_source: &Object,
) -> ArrowTerm {
    if let ArrowTerm::Id(o) = f {
        return ins_identity(expect_tree(o), n, g);
    }
    if let ArrowTerm::Id(d) = g {
        return ins_into_identity(f, n, expect_tree(d));
    }
    let left = ins_identity(expect_tree(f_target), n, g);
    let right = ins_into_identity(f, n, expect_tree(g_source));
    ArrowTerm::compose(left, right)
}

fn expect_tree(o: &Object) -> &Tree {
    o.as_tree().expect("Â objects are trees")
}

/// `1_X ◁n g`.
fn ins_identity(x: &Tree, n: usize, g: &ArrowTerm) -> ArrowTerm {
    match x.children() {
        None => g.clone(),
        Some((l, r)) => {
            let left = l.leaf_count();
            if n <= left {
                ArrowTerm::tensor(ins_identity(l, n, g), ArrowTerm::id(r.clone()))
            } else {
                ArrowTerm::tensor(ArrowTerm::id(l.clone()), ins_identity(r, n - left, g))
            }
        }
    }
}

/// `f ◁n 1_D` for a non-identity `f`.
fn ins_into_identity(f: &ArrowTerm, n: usize, d: &Tree) -> ArrowTerm {
    match f {
        ArrowTerm::Id(o) => ArrowTerm::id(
            expect_tree(o)
                .insert(n, d)
                .expect("index checked against the source"),
        ),
        ArrowTerm::Gen(g, objs) => {
            let mut objs = objs.clone();
            let mut k = n;
            for o in objs.iter_mut() {
                let t = expect_tree(o).clone();
                if k <= t.leaf_count() {
                    *o = Object::Tree(t.insert(k, d).expect("index within this operand"));
                    break;
                }
                k -= t.leaf_count();
            }
            ArrowTerm::Gen(*g, objs)
        }
        ArrowTerm::Compose(after, before) => ArrowTerm::compose(
            ins_into_identity(after, n, d),
            ins_into_identity(before, n, d),
        ),
        ArrowTerm::Tensor(l, r) => {
            let left = l
                .infer_type(TheoryKind::Assoc)
                .expect("subterm of a typed term")
                .source
                .size();
            if n <= left {
                ArrowTerm::tensor(ins_into_identity(l, n, d), (**r).clone())
            } else {
                ArrowTerm::tensor((**l).clone(), ins_into_identity(r, n - left, d))
            }
        }
        ArrowTerm::Ins(..) => unreachable!("Â terms have no insertion"),
    }
}

/// `G: Â → Γ`.
pub fn functor_g(f: &ArrowTerm) -> Result<ArrowTerm, CoherenceError> {
    f.infer_type(TheoryKind::Assoc)?;
    Ok(g_rec(f))
}

fn g_rec(f: &ArrowTerm) -> ArrowTerm {
    match f {
        ArrowTerm::Id(_) => f.clone(),
        ArrowTerm::Gen(g, objs) => {
            let t = |i: usize| expect_tree(&objs[i]).clone();
            let direction = match g {
                Generator::AssocFwd => Direction::Forward,
                _ => Direction::Backward,
            };
            b_in_gamma(&t(0), &t(1), &t(2), direction)
        }
        ArrowTerm::Compose(a, b) => ArrowTerm::compose(g_rec(a), g_rec(b)),
        ArrowTerm::Tensor(a, b) => wedge_unchecked(g_rec(a), g_rec(b)),
        ArrowTerm::Ins(..) => unreachable!("Â terms have no insertion"),
    }
}

/// `F: Γ → Â`. A general `γ_{A,B}` is expanded into `γ_{2,2}` first, and
/// `γ_{2,2}` becomes `b_{∗,∗,∗}`.
pub fn functor_f(h: &ArrowTerm) -> Result<ArrowTerm, CoherenceError> {
    h.infer_type(TheoryKind::Gamma)?;
    f_rec(h)
}

fn f_rec(h: &ArrowTerm) -> Result<ArrowTerm, CoherenceError> {
    Ok(match h {
        ArrowTerm::Id(_) => h.clone(),
        ArrowTerm::Gen(g, objs) => {
            let a = tree_of(&objs[0])?;
            let b = tree_of(&objs[1])?;
            if *a == two() && *b == two() {
                let leaf = Tree::Leaf;
                match g {
                    Generator::GammaFwd => ArrowTerm::assoc(leaf.clone(), leaf.clone(), leaf),
                    _ => ArrowTerm::assoc_inv(leaf.clone(), leaf.clone(), leaf),
                }
            } else {
                let direction = match g {
                    Generator::GammaFwd => Direction::Forward,
                    _ => Direction::Backward,
                };
                f_rec(&expand_gamma(a, b, direction))?
            }
        }
        ArrowTerm::Compose(a, b) => ArrowTerm::compose(f_rec(a)?, f_rec(b)?),
        ArrowTerm::Ins(a, n, b) => ins_on_assoc_arrows(&f_rec(a)?, *n, &f_rec(b)?)?,
        ArrowTerm::Tensor(..) => {
            return Err(CoherenceError::Arrow(ArrowError::NotInTheory {
                what: "tensor",
                theory: TheoryKind::Gamma,
            }))
        }
    })
}

/// Equality of arrows in Γ or Â. Both categories are preorders, so two
/// well-typed arrows are equal exactly when their endpoints agree.
pub fn arrows_equal(
    f: &ArrowTerm,
    g: &ArrowTerm,
    theory: TheoryKind,
) -> Result<bool, CoherenceError> {
    if theory == TheoryKind::SymStrict {
        return Err(CoherenceError::Unsupported(theory));
    }
    Ok(f.infer_type(theory)? == g.infer_type(theory)?)
}

/// An Â arrow `X → Y`: rotate `X` to the left comb, then rotate back to `Y`.
pub fn canonical_arrow(x: &Tree, y: &Tree) -> Result<ArrowTerm, CoherenceError> {
    let (left, right) = (x.leaf_count(), y.leaf_count());
    if left != right {
        return Err(CoherenceError::LeafCountMismatch { left, right });
    }
    let there = to_left_comb(x);
    let back = to_left_comb(y).inverse();
    Ok(merge_identities(&ArrowTerm::compose(back, there)).cat_normal())
}

// `1_A ∧ 1_B` becomes `1_{A∧B}`, bottom up.
fn merge_identities(f: &ArrowTerm) -> ArrowTerm {
    match f {
        ArrowTerm::Tensor(a, b) => match (merge_identities(a), merge_identities(b)) {
            (ArrowTerm::Id(x), ArrowTerm::Id(y)) => match x.wedge(&y) {
                Ok(z) => ArrowTerm::Id(z),
                Err(_) => ArrowTerm::tensor(ArrowTerm::Id(x), ArrowTerm::Id(y)),
            },
            (a, b) => ArrowTerm::tensor(a, b),
        },
        ArrowTerm::Compose(a, b) => ArrowTerm::compose(merge_identities(a), merge_identities(b)),
        _ => f.clone(),
    }
}

/// An Â arrow from `x` to the left comb with the same number of leaves.
pub fn to_left_comb(x: &Tree) -> ArrowTerm {
    let Some((l, r)) = x.children() else {
        return ArrowTerm::id(Tree::Leaf);
    };
    match r.children() {
        None => ArrowTerm::tensor(to_left_comb(l), ArrowTerm::id(Tree::Leaf)),
        Some((r1, r2)) => {
            let rotate = ArrowTerm::assoc(l.clone(), r1.clone(), r2.clone());
            let rotated = Tree::wedge(Tree::wedge(l.clone(), r1.clone()), r2.clone());
            ArrowTerm::compose(to_left_comb(&rotated), rotate)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn ends(f: &ArrowTerm, theory: TheoryKind) -> (Tree, Tree) {
        let e = f.infer_type(theory).unwrap();
        (
            e.source.as_tree().unwrap().clone(),
            e.target.as_tree().unwrap().clone(),
        )
    }

    #[test]
    fn b_in_gamma_at_leaves() {
        let b = b_in_gamma(&Tree::Leaf, &Tree::Leaf, &Tree::Leaf, Direction::Forward);
        assert_eq!(
            b.to_string(),
            "(((g{(*^*),(*^*)} @3 id{*}) @2 id{*}) @1 id{*})"
        );
        assert_eq!(
            ends(&b, TheoryKind::Gamma),
            (t("(*^(*^*))"), t("((*^*)^*)"))
        );
    }

    #[test]
    fn b_in_gamma_endpoints_are_the_wedges() {
        let (a, b, c) = (t("(*^*)"), t("((*^*)^*)"), Tree::Leaf);
        let f = b_in_gamma(&a, &b, &c, Direction::Forward);
        let src = Tree::wedge(a.clone(), Tree::wedge(b.clone(), c.clone()));
        let tgt = Tree::wedge(Tree::wedge(a, b), c);
        assert_eq!(ends(&f, TheoryKind::Gamma), (src.clone(), tgt.clone()));
        assert_eq!(src.leaf_count(), 6);
    }

    #[test]
    fn wedge_in_gamma_endpoints() {
        let g22 = ArrowTerm::gamma(two(), two());
        let w = wedge_in_gamma(&g22, &ArrowTerm::id(Tree::Leaf)).unwrap();
        assert_eq!(ends(&w, TheoryKind::Gamma).0, t("((*^(*^*))^*)"));
        let ids = wedge_in_gamma(&ArrowTerm::id(Tree::Leaf), &ArrowTerm::id(Tree::Leaf)).unwrap();
        assert!(arrows_equal(&ids, &ArrowTerm::id(two()), TheoryKind::Gamma).unwrap());
    }

    #[test]
    fn expand_gamma_base_cases() {
        assert_eq!(
            expand_gamma(&Tree::Leaf, &t("(*^*)"), Direction::Forward),
            ArrowTerm::id(t("(*^*)"))
        );
        assert_eq!(
            expand_gamma(&two(), &two(), Direction::Forward),
            ArrowTerm::gamma(two(), two())
        );
    }

    #[test]
    fn expand_gamma_endpoints_example() {
        let (a, b) = (t("((*^*)^*)"), two());
        let g = expand_gamma(&a, &b, Direction::Forward);
        assert_eq!(
            ends(&g, TheoryKind::Gamma),
            (a.insert(3, &b).unwrap(), b.insert(1, &a).unwrap())
        );
    }

    #[test]
    fn ins_on_assoc_arrows_clauses() {
        let b = ArrowTerm::assoc(Tree::Leaf, Tree::Leaf, Tree::Leaf);
        let r = ins_on_assoc_arrows(&b, 1, &ArrowTerm::id(Tree::Leaf)).unwrap();
        assert_eq!(r, b);
        let r = ins_on_assoc_arrows(&b, 2, &ArrowTerm::id(two())).unwrap();
        assert_eq!(r, ArrowTerm::assoc(Tree::Leaf, two(), Tree::Leaf));
        let f = ArrowTerm::gamma(two(), two());
        let fa = functor_f(&f).unwrap();
        assert_eq!(
            ins_on_assoc_arrows(&ArrowTerm::id(Tree::Leaf), 1, &fa).unwrap(),
            fa
        );
        assert!(matches!(
            ins_on_assoc_arrows(&b, 4, &fa),
            Err(CoherenceError::IndexOutOfRange { index: 4, size: 3 })
        ));
    }

    #[test]
    fn functor_generators() {
        let g22 = ArrowTerm::gamma(two(), two());
        let leaf = Tree::Leaf;
        let b = ArrowTerm::assoc(leaf.clone(), leaf.clone(), leaf.clone());
        assert_eq!(functor_f(&g22).unwrap(), b);
        assert_eq!(
            functor_g(&b).unwrap(),
            b_in_gamma(&leaf, &leaf, &leaf, Direction::Forward)
        );
    }

    #[test]
    fn equality_by_endpoints() {
        let g22 = ArrowTerm::gamma(two(), two());
        assert!(!arrows_equal(&g22, &ArrowTerm::id(t("(*^(*^*))")), TheoryKind::Gamma).unwrap());
        assert!(arrows_equal(&g22, &g22, TheoryKind::Gamma).unwrap());
        let w = ArrowTerm::parse("c{a,b}", TheoryKind::SymStrict).unwrap();
        assert_eq!(
            arrows_equal(&w, &w, TheoryKind::SymStrict),
            Err(CoherenceError::Unsupported(TheoryKind::SymStrict))
        );
    }

    #[test]
    fn canonical_arrows() {
        let x = t("(*^(*^*))");
        let y = t("((*^*)^*)");
        let c = canonical_arrow(&x, &y).unwrap();
        let b = ArrowTerm::assoc(Tree::Leaf, Tree::Leaf, Tree::Leaf);
        assert!(arrows_equal(&c, &b, TheoryKind::Assoc).unwrap());
        let same = canonical_arrow(&x, &x).unwrap();
        assert!(arrows_equal(&same, &ArrowTerm::id(x.clone()), TheoryKind::Assoc).unwrap());
        assert_eq!(
            canonical_arrow(&x, &Tree::left_comb(4)),
            Err(CoherenceError::LeafCountMismatch { left: 3, right: 4 })
        );
    }
}
