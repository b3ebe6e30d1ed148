//! Typed arrow terms and the machinery to check equational proofs about them.
//!
//! One term language serves three theories, distinguished by
//! [`TheoryKind`]:
//!
//! * `gamma`: objects are trees; generators `γ→`, `γ←`; operations `∘`, `◁n`.
//! * `assoc`: objects are trees; generators `b→`, `b←`; operations `∘`, `∧`.
//! * `symstrict`: objects are nonempty words; generator `c`; operations `∘`, `∧`
//!   with `∧` on objects being concatenation.
//!
//! Text syntax (objects use the tree grammar, or plain letter words):
//!
//! ```text
//! id{T}  g{A,B}  g'{A,B}  b{A,B,C}  b'{A,B,C}  c{A,B}
//! (g o f)   (f @n g)   (f ^ g)
//! ```

mod pattern;
mod script;

pub use pattern::{
    apply_axiom, apply_axiom_all, instantiate_other_side, instantiate_side, match_all, match_axiom,
    ApplyError, ArrowPat, Assignment, Clause, Condition, Direction, IdxExpr, InstantiateError,
    Match, ObjExpr, ObjPat, RewriteAxiom, Theory, Var,
};
pub use script::{verify_chain, ChainError, ChainReport, ProofScript, ProofStep, ScriptParseError};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{Cursor, ParseError};
use crate::tree::{Tree, TreeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoryKind {
    Gamma,
    Assoc,
    SymStrict,
}

impl TheoryKind {
    pub fn name(self) -> &'static str {
        match self {
            TheoryKind::Gamma => "gamma",
            TheoryKind::Assoc => "assoc",
            TheoryKind::SymStrict => "symstrict",
        }
    }

    fn uses_words(self) -> bool {
        self == TheoryKind::SymStrict
    }
}

impl fmt::Display for TheoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoryKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gamma" => Ok(TheoryKind::Gamma),
            "assoc" => Ok(TheoryKind::Assoc),
            "symstrict" => Ok(TheoryKind::SymStrict),
            _ => Err(format!(
                "unknown theory '{s}' (expected gamma, assoc or symstrict)"
            )),
        }
    }
}

/// A nonempty word over lowercase letters; the objects of `symstrict`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Option<Word> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() || !letters.iter().all(|c| c.is_ascii_lowercase()) {
            None
        } else {
            Some(Word(letters))
        }
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Every split into two nonempty words.
    pub fn splits(&self) -> Vec<(Word, Word)> {
        (1..self.0.len())
            .map(|i| (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Object {
    Tree(Tree),
    Word(Word),
}

impl Object {
    pub fn leaf() -> Object {
        Object::Tree(Tree::Leaf)
    }

    pub fn two() -> Object {
        Object::Tree(Tree::two())
    }

    /// Leaf count of a tree, length of a word.
    pub fn size(&self) -> usize {
        match self {
            Object::Tree(t) => t.leaf_count(),
            Object::Word(w) => w.len(),
        }
    }

    pub fn as_tree(&self) -> Option<&Tree> {
        match self {
            Object::Tree(t) => Some(t),
            Object::Word(_) => None,
        }
    }

    pub fn wedge(&self, other: &Object) -> Result<Object, ArrowError> {
        match (self, other) {
            (Object::Tree(a), Object::Tree(b)) => {
                Ok(Object::Tree(Tree::wedge(a.clone(), b.clone())))
            }
            (Object::Word(a), Object::Word(b)) => Ok(Object::Word(a.concat(b))),
            _ => Err(ArrowError::MixedObjects),
        }
    }

    pub fn insert(&self, n: usize, other: &Object) -> Result<Object, ArrowError> {
        match (self, other) {
            (Object::Tree(a), Object::Tree(b)) => Ok(Object::Tree(a.insert(n, b)?)),
            _ => Err(ArrowError::NotInTheory {
                what: "insertion on word objects",
                theory: TheoryKind::SymStrict,
            }),
        }
    }

    fn parse_in(cur: &mut Cursor<'_>, kind: TheoryKind) -> Result<Object, ParseError> {
        if kind.uses_words() {
            cur.skip_ws();
            let start = cur.offset();
            let letters: String = cur
                .rest()
                .chars()
                .take_while(|c| c.is_ascii_lowercase())
                .collect();
            if letters.is_empty() {
                return Err(cur.unexpected("a word of lowercase letters"));
            }
            for _ in 0..letters.len() {
                cur.bump();
            }
            Word::new(letters.chars())
                .map(Object::Word)
                .ok_or_else(|| ParseError::new(start, "invalid word"))
        } else {
            Tree::parse_from(cur).map(Object::Tree)
        }
    }
}

impl From<Tree> for Object {
    fn from(t: Tree) -> Self {
        Object::Tree(t)
    }
}

impl From<Word> for Object {
    fn from(w: Word) -> Self {
        Object::Word(w)
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Tree(t) => t.fmt(f),
            Object::Word(w) => w.fmt(f),
        }
    }
}

impl fmt::Debug for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `γ→_{A,B} : A ◁|A| B → B ◁1 A`
    GammaFwd,
    /// `γ←_{A,B} : B ◁1 A → A ◁|A| B`
    GammaBwd,
    /// `b→_{A,B,C} : A∧(B∧C) → (A∧B)∧C`
    AssocFwd,
    /// `b←_{A,B,C} : (A∧B)∧C → A∧(B∧C)`
    AssocBwd,
    /// `c_{A,B} : A∧B → B∧A`
    Sym,
}

impl Generator {
    pub fn arity(self) -> usize {
        match self {
            Generator::AssocFwd | Generator::AssocBwd => 3,
            _ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::GammaFwd => "g",
            Generator::GammaBwd => "g'",
            Generator::AssocFwd => "b",
            Generator::AssocBwd => "b'",
            Generator::Sym => "c",
        }
    }

    pub fn theory(self) -> TheoryKind {
        match self {
            Generator::GammaFwd | Generator::GammaBwd => TheoryKind::Gamma,
            Generator::AssocFwd | Generator::AssocBwd => TheoryKind::Assoc,
            Generator::Sym => TheoryKind::SymStrict,
        }
    }

    /// The generator with source and target exchanged.
    pub fn inverse(self) -> Generator {
        match self {
            Generator::GammaFwd => Generator::GammaBwd,
            Generator::GammaBwd => Generator::GammaFwd,
            Generator::AssocFwd => Generator::AssocBwd,
            Generator::AssocBwd => Generator::AssocFwd,
            Generator::Sym => Generator::Sym,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrowError {
    #[error("type mismatch in ({after} o {before}): target {found} is not source {expected}")]
    TypeMismatch {
        after: String,
        before: String,
        expected: Object,
        found: Object,
    },
    #[error("index {index} out of range in {term}: operand has size {size}")]
    IndexOutOfRange {
        term: String,
        index: usize,
        size: usize,
    },
    #[error(transparent)]
    Object(#[from] TreeError),
    #[error("{what} is not available in theory {theory}")]
    NotInTheory {
        what: &'static str,
        theory: TheoryKind,
    },
    #[error("tree and word objects cannot be mixed")]
    MixedObjects,
    #[error("generator {symbol} expects {expected} objects, got {found}")]
    GeneratorArity {
        symbol: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("position {0} does not address a subterm")]
    BadPosition(Path),
}

/// Source and target of an arrow term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endpoints {
    pub source: Object,
    pub target: Object,
}

impl fmt::Display for Endpoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowTerm {
    Id(Object),
    Gen(Generator, Vec<Object>),
    /// `Compose(after, before)` is `after ∘ before`.
    Compose(Box<ArrowTerm>, Box<ArrowTerm>),
    Ins(Box<ArrowTerm>, usize, Box<ArrowTerm>),
    Tensor(Box<ArrowTerm>, Box<ArrowTerm>),
}

impl ArrowTerm {
    pub fn id(object: impl Into<Object>) -> ArrowTerm {
        ArrowTerm::Id(object.into())
    }

    pub fn gen(generator: Generator, objects: Vec<Object>) -> ArrowTerm {
        ArrowTerm::Gen(generator, objects)
    }

    /// `γ→_{A,B}`
    pub fn gamma(a: Tree, b: Tree) -> ArrowTerm {
        ArrowTerm::Gen(Generator::GammaFwd, vec![a.into(), b.into()])
    }

    /// `γ←_{A,B}`
    pub fn gamma_inv(a: Tree, b: Tree) -> ArrowTerm {
        ArrowTerm::Gen(Generator::GammaBwd, vec![a.into(), b.into()])
    }

    /// `b→_{A,B,C}`
    pub fn assoc(a: Tree, b: Tree, c: Tree) -> ArrowTerm {
        ArrowTerm::Gen(Generator::AssocFwd, vec![a.into(), b.into(), c.into()])
    }

    /// `b←_{A,B,C}`
    pub fn assoc_inv(a: Tree, b: Tree, c: Tree) -> ArrowTerm {
        ArrowTerm::Gen(Generator::AssocBwd, vec![a.into(), b.into(), c.into()])
    }

    pub fn compose(after: ArrowTerm, before: ArrowTerm) -> ArrowTerm {
        ArrowTerm::Compose(Box::new(after), Box::new(before))
    }

    pub fn ins(left: ArrowTerm, n: usize, right: ArrowTerm) -> ArrowTerm {
        ArrowTerm::Ins(Box::new(left), n, Box::new(right))
    }

    pub fn tensor(left: ArrowTerm, right: ArrowTerm) -> ArrowTerm {
        ArrowTerm::Tensor(Box::new(left), Box::new(right))
    }

    /// Right-nested composition of `factors`, listed from last applied to
    /// first applied. Panics on an empty list.
    pub fn compose_all(factors: Vec<ArrowTerm>) -> ArrowTerm {
        let mut iter = factors.into_iter().rev();
        let mut acc = iter.next().expect("compose_all needs at least one factor");
        for f in iter {
            acc = ArrowTerm::compose(f, acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, ArrowTerm::Id(_))
    }

    pub fn infer_type(&self, theory: TheoryKind) -> Result<Endpoints, ArrowError> {
        match self {
            ArrowTerm::Id(o) => {
                check_object_kind(o, theory)?;
                Ok(Endpoints {
                    source: o.clone(),
                    target: o.clone(),
                })
            }
            ArrowTerm::Gen(g, objs) => generator_type(*g, objs, theory),
            ArrowTerm::Compose(after, before) => {
                let a = after.infer_type(theory)?;
                let b = before.infer_type(theory)?;
                if b.target != a.source {
                    return Err(ArrowError::TypeMismatch {
                        after: after.to_string(),
                        before: before.to_string(),
                        expected: a.source,
                        found: b.target,
                    });
                }
                Ok(Endpoints {
                    source: b.source,
                    target: a.target,
                })
            }
            ArrowTerm::Ins(left, n, right) => {
                if theory != TheoryKind::Gamma {
                    return Err(ArrowError::NotInTheory {
                        what: "insertion on arrows",
                        theory,
                    });
                }
                let l = left.infer_type(theory)?;
                let r = right.infer_type(theory)?;
                let size = l.source.size().min(l.target.size());
                if *n < 1 || *n > size {
                    return Err(ArrowError::IndexOutOfRange {
                        term: self.to_string(),
                        index: *n,
                        size,
                    });
                }
                Ok(Endpoints {
                    source: l.source.insert(*n, &r.source)?,
                    target: l.target.insert(*n, &r.target)?,
                })
            }
            ArrowTerm::Tensor(left, right) => {
                if theory == TheoryKind::Gamma {
                    return Err(ArrowError::NotInTheory {
                        what: "tensor on arrows",
                        theory,
                    });
                }
                let l = left.infer_type(theory)?;
                let r = right.infer_type(theory)?;
                Ok(Endpoints {
                    source: l.source.wedge(&r.source)?,
                    target: l.target.wedge(&r.target)?,
                })
            }
        }
    }

    /// Children in position order: `Compose` is (after, before), `Ins` and
    /// `Tensor` are (left, right).
    pub fn children(&self) -> Vec<&ArrowTerm> {
        match self {
            ArrowTerm::Id(_) | ArrowTerm::Gen(..) => Vec::new(),
            ArrowTerm::Compose(a, b) | ArrowTerm::Ins(a, _, b) | ArrowTerm::Tensor(a, b) => {
                vec![a, b]
            }
        }
    }

    fn child_mut(&mut self, i: usize) -> Option<&mut ArrowTerm> {
        match (self, i) {
            (ArrowTerm::Compose(a, _) | ArrowTerm::Ins(a, _, _) | ArrowTerm::Tensor(a, _), 1) => {
                Some(a)
            }
            (ArrowTerm::Compose(_, b) | ArrowTerm::Ins(_, _, b) | ArrowTerm::Tensor(_, b), 2) => {
                Some(b)
            }
            _ => None,
        }
    }

    pub fn subterm(&self, path: &Path) -> Result<&ArrowTerm, ArrowError> {
        let mut t = self;
        for &i in &path.0 {
            t = t
                .children()
                .get(i.wrapping_sub(1))
                .copied()
                .ok_or_else(|| ArrowError::BadPosition(path.clone()))?;
        }
        Ok(t)
    }

    pub fn replace(&self, path: &Path, replacement: ArrowTerm) -> Result<ArrowTerm, ArrowError> {
        let mut out = self.clone();
        let mut slot = &mut out;
        for &i in &path.0 {
            slot = slot
                .child_mut(i)
                .ok_or_else(|| ArrowError::BadPosition(path.clone()))?;
        }
        *slot = replacement;
        Ok(out)
    }

    /// The factors of a composition chain, last applied first, with nested
    /// compositions flattened.
    pub fn factors(&self) -> Vec<&ArrowTerm> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a ArrowTerm, out: &mut Vec<&'a ArrowTerm>) {
            match t {
                ArrowTerm::Compose(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                _ => out.push(t),
            }
        }
        go(self, &mut out);
        out
    }

    /// Normal form modulo (cat 1) and (cat 2): compositions flattened and
    /// re-nested to the right, identity factors dropped, everywhere.
    pub fn cat_normal(&self) -> ArrowTerm {
        match self {
            ArrowTerm::Id(_) | ArrowTerm::Gen(..) => self.clone(),
            ArrowTerm::Ins(a, n, b) => ArrowTerm::ins(a.cat_normal(), *n, b.cat_normal()),
            ArrowTerm::Tensor(a, b) => ArrowTerm::tensor(a.cat_normal(), b.cat_normal()),
            ArrowTerm::Compose(..) => {
                let factors: Vec<ArrowTerm> =
                    self.factors().iter().map(|f| f.cat_normal()).collect();
                let first_identity = factors.iter().find(|f| f.is_identity()).cloned();
                let kept: Vec<ArrowTerm> =
                    factors.into_iter().filter(|f| !f.is_identity()).collect();
                if kept.is_empty() {
                    first_identity.expect("a chain of identities has an identity")
                } else {
                    ArrowTerm::compose_all(kept)
                }
            }
        }
    }

    /// Formal inverse: generators replaced by their inverses and composition
    /// order reversed.
    pub fn inverse(&self) -> ArrowTerm {
        match self {
            ArrowTerm::Id(_) => self.clone(),
            ArrowTerm::Gen(g, objs) => ArrowTerm::Gen(g.inverse(), objs.clone()),
            ArrowTerm::Compose(a, b) => ArrowTerm::compose(b.inverse(), a.inverse()),
            ArrowTerm::Ins(a, n, b) => ArrowTerm::ins(a.inverse(), *n, b.inverse()),
            ArrowTerm::Tensor(a, b) => ArrowTerm::tensor(a.inverse(), b.inverse()),
        }
    }

    /// Height of the syntax tree; generators and identities have depth 1.
    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    pub fn parse(text: &str, theory: TheoryKind) -> Result<ArrowTerm, ParseError> {
        let mut cur = Cursor::new(text);
        let t = parse_arrow(&mut cur, theory)?;
        cur.finish()?;
        Ok(t)
    }
}

fn check_object_kind(o: &Object, theory: TheoryKind) -> Result<(), ArrowError> {
    match (o, theory.uses_words()) {
        (Object::Tree(_), false) | (Object::Word(_), true) => Ok(()),
        _ => Err(ArrowError::MixedObjects),
    }
}

fn generator_type(
    g: Generator,
    objs: &[Object],
    theory: TheoryKind,
) -> Result<Endpoints, ArrowError> {
    if g.theory() != theory {
        return Err(ArrowError::NotInTheory {
            what: "this generator",
            theory,
        });
    }
    if objs.len() != g.arity() {
        return Err(ArrowError::GeneratorArity {
            symbol: g.symbol(),
            expected: g.arity(),
            found: objs.len(),
        });
    }
    for o in objs {
        check_object_kind(o, theory)?;
    }
    let (source, target) = match g {
        Generator::GammaFwd | Generator::GammaBwd => {
            let (a, b) = (&objs[0], &objs[1]);
            let over = a.insert(a.size(), b)?;
            let under = b.insert(1, a)?;
            if g == Generator::GammaFwd {
                (over, under)
            } else {
                (under, over)
            }
        }
        Generator::AssocFwd | Generator::AssocBwd => {
            let (a, b, c) = (&objs[0], &objs[1], &objs[2]);
            let right = a.wedge(&b.wedge(c)?)?;
            let left = a.wedge(b)?.wedge(c)?;
            if g == Generator::AssocFwd {
                (right, left)
            } else {
                (left, right)
            }
        }
        Generator::Sym => (objs[0].wedge(&objs[1])?, objs[1].wedge(&objs[0])?),
    };
    Ok(Endpoints { source, target })
}

fn parse_arrow(cur: &mut Cursor<'_>, theory: TheoryKind) -> Result<ArrowTerm, ParseError> {
    if cur.eat('(') {
        let left = parse_arrow(cur, theory)?;
        let term = match cur.peek() {
            Some('o') => {
                cur.bump();
                let right = parse_arrow(cur, theory)?;
                ArrowTerm::compose(left, right)
            }
            Some('@') => {
                cur.bump();
                let n = cur.number()?;
                let right = parse_arrow(cur, theory)?;
                ArrowTerm::ins(left, n, right)
            }
            Some('^') => {
                cur.bump();
                let right = parse_arrow(cur, theory)?;
                ArrowTerm::tensor(left, right)
            }
            _ => return Err(cur.unexpected("'o', '@n' or '^'")),
        };
        cur.expect(')')?;
        return Ok(term);
    }
    if cur.eat_str("id") {
        cur.expect('{')?;
        let o = Object::parse_in(cur, theory)?;
        cur.expect('}')?;
        return Ok(ArrowTerm::Id(o));
    }
    let generator = [
        ("g'", Generator::GammaBwd),
        ("g", Generator::GammaFwd),
        ("b'", Generator::AssocBwd),
        ("b", Generator::AssocFwd),
        ("c", Generator::Sym),
    ]
    .into_iter()
    .find(|(sym, _)| cur.eat_str(sym))
    .map(|(_, g)| g);
    let Some(generator) = generator else {
        return Err(cur.unexpected("an arrow term"));
    };
    cur.expect('{')?;
    let mut objs = vec![Object::parse_in(cur, theory)?];
    while cur.eat(',') {
        objs.push(Object::parse_in(cur, theory)?);
    }
    cur.expect('}')?;
    Ok(ArrowTerm::Gen(generator, objs))
}

impl fmt::Display for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowTerm::Id(o) => write!(f, "id{{{o}}}"),
            ArrowTerm::Gen(g, objs) => {
                write!(f, "{}{{", g.symbol())?;
                for (i, o) in objs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{o}")?;
                }
                f.write_str("}")
            }
            ArrowTerm::Compose(a, b) => write!(f, "({a} o {b})"),
            ArrowTerm::Ins(a, n, b) => write!(f, "({a} @{n} {b})"),
            ArrowTerm::Tensor(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

impl fmt::Debug for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A position in an arrow term: 1-based child indices from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "root" {
            return Ok(Path::root());
        }
        s.split('.')
            .map(|part| match part.parse::<usize>() {
                Ok(i @ 1..=2) => Ok(i),
                _ => Err(format!("bad position component '{part}' in '{s}'")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn gamma(s: &str) -> ArrowTerm {
        ArrowTerm::parse(s, TheoryKind::Gamma).unwrap()
    }

    #[test]
    fn gamma_two_two_endpoints() {
        let e = ArrowTerm::gamma(Tree::two(), Tree::two())
            .infer_type(TheoryKind::Gamma)
            .unwrap();
        assert_eq!(e.source, tr("(*^(*^*))").into());
        assert_eq!(e.target, tr("((*^*)^*)").into());
    }

    #[test]
    fn identity_endpoints() {
        let x = tr("((*^*)^*)");
        let e = ArrowTerm::id(x.clone())
            .infer_type(TheoryKind::Gamma)
            .unwrap();
        assert_eq!(e.source, x.clone().into());
        assert_eq!(e.target, x.into());
    }

    #[test]
    fn composition_mismatch() {
        let t = ArrowTerm::compose(
            ArrowTerm::id(Tree::two()),
            ArrowTerm::gamma(Tree::two(), Tree::two()),
        );
        assert!(matches!(
            t.infer_type(TheoryKind::Gamma),
            Err(ArrowError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn insertion_index_checked() {
        let t = gamma("(g{(*^*),(*^*)} @4 id{*})");
        assert!(matches!(
            t.infer_type(TheoryKind::Gamma),
            Err(ArrowError::IndexOutOfRange {
                index: 4,
                size: 3,
                ..
            })
        ));
        let ok = gamma("(g{(*^*),(*^*)} @3 id{(*^*)})")
            .infer_type(TheoryKind::Gamma)
            .unwrap();
        assert_eq!(ok.source, tr("(*^(*^(*^*)))").into());
        assert_eq!(ok.target, tr("((*^*)^(*^*))").into());
    }

    #[test]
    fn operations_restricted_by_theory() {
        let t = ArrowTerm::tensor(ArrowTerm::id(Tree::Leaf), ArrowTerm::id(Tree::Leaf));
        assert!(t.infer_type(TheoryKind::Gamma).is_err());
        assert!(t.infer_type(TheoryKind::Assoc).is_ok());
        let g = ArrowTerm::gamma(Tree::two(), Tree::two());
        assert!(g.infer_type(TheoryKind::Assoc).is_err());
    }

    #[test]
    fn assoc_and_sym_endpoints() {
        let b = ArrowTerm::assoc(Tree::Leaf, Tree::Leaf, Tree::Leaf)
            .infer_type(TheoryKind::Assoc)
            .unwrap();
        assert_eq!(b.to_string(), "(*^(*^*)) -> ((*^*)^*)");
        let c = ArrowTerm::parse("(c{ab,c} ^ id{d})", TheoryKind::SymStrict)
            .unwrap()
            .infer_type(TheoryKind::SymStrict)
            .unwrap();
        assert_eq!(c.to_string(), "abcd -> cabd");
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "((g{(*^*),(*^*)} @1 id{(*^*)}) o (g{(*^*),(*^*)} @3 id{(*^*)}))",
            "(g'{*,((*^*)^*)} @2 id{*})",
        ] {
            assert_eq!(gamma(s).to_string(), s);
        }
        let b = ArrowTerm::parse("( b'{*, *, (*^*)} ^ id{*} )", TheoryKind::Assoc).unwrap();
        assert_eq!(b.to_string(), "(b'{*,*,(*^*)} ^ id{*})");
        assert!(ArrowTerm::parse("(id{*} % id{*})", TheoryKind::Gamma).is_err());
        assert!(ArrowTerm::parse("g{(*^*)", TheoryKind::Gamma).is_err());
        assert!(ArrowTerm::parse("c{A,b}", TheoryKind::SymStrict).is_err());
    }

    #[test]
    fn positions() {
        let t = gamma("((g{(*^*),(*^*)} @1 id{(*^*)}) o (g{(*^*),(*^*)} @3 id{(*^*)}))");
        let p: Path = "2.1".parse().unwrap();
        assert_eq!(t.subterm(&p).unwrap().to_string(), "g{(*^*),(*^*)}");
        assert!(t.subterm(&"1.1.1".parse().unwrap()).is_err());
        assert_eq!("root".parse::<Path>().unwrap(), Path::root());
        assert!("0.1".parse::<Path>().is_err());
        let r = t.replace(&p, ArrowTerm::id(Tree::Leaf)).unwrap();
        assert_eq!(r.subterm(&p).unwrap(), &ArrowTerm::id(Tree::Leaf));
    }

    #[test]
    fn cat_normal_form() {
        let g = ArrowTerm::gamma(Tree::two(), Tree::two());
        let x = ArrowTerm::id(tr("(*^(*^*))"));
        let left = ArrowTerm::compose(ArrowTerm::compose(g.clone(), x.clone()), x.clone());
        assert_eq!(left.cat_normal(), g);
        let only_ids = ArrowTerm::compose(x.clone(), x.clone());
        assert_eq!(only_ids.cat_normal(), x);
        let a = ArrowTerm::compose(ArrowTerm::compose(g.clone(), g.inverse()), g.clone());
        let b = ArrowTerm::compose(g.clone(), ArrowTerm::compose(g.inverse(), g.clone()));
        assert_eq!(a.cat_normal(), b.cat_normal());
    }
}
