//! Terms over the generators `1` and `2` and the partial operations `◁n`,
//! their equational calculi, and the decision procedure by normalization.
//!
//! The two calculi share the associativity axioms
//!
//! ```text
//! (assoc 1)  (A ◁n B) ◁m C = A ◁n (B ◁(m-n+1) C)      if n <= m < n+|B|
//! (assoc 2)  (A ◁n B) ◁m C = (A ◁(m-|B|+1) C) ◁n B    if n+|B| <= m
//! ```
//!
//! and [`Calculus::WithUnit`] adds `1 ◁1 A = A ◁n 1 = A`. All axioms are
//! oriented left to right. Two terms are equal in a calculus iff their normal
//! forms coincide, iff they evaluate to the same tree under [`ITerm::eval`].
//!
//! Text syntax: `ITerm ::= "1" | "2" | "(" ITerm "@" index ITerm ")"`, for
//! example `((2 @2 2) @1 2)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{Cursor, ParseError};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalcError {
    #[error("index {index} out of range: left operand has arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("the generator 1 is not part of the calculus without unit")]
    UnitNotAllowed,
    #[error("term {0} is not normal")]
    NotNormal(ITerm),
    #[error("measure overflow")]
    Overflow,
}

/// Which equational calculus a term is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Calculus {
    /// Generators `1` and `2`, axioms (assoc 1), (assoc 2) and (unit).
    WithUnit,
    /// Generator `2` only, axioms (assoc 1) and (assoc 2).
    WithoutUnit,
}

impl Calculus {
    /// Whether `term` is a term of this calculus.
    pub fn admits(self, term: &ITerm) -> bool {
        self == Calculus::WithUnit || !term.contains_unit()
    }
}

/// An insertion term. `Ins` nodes are only built through [`ITerm::ins`],
/// which checks `1 <= n <= |left|`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ITerm {
    One,
    Two,
    Ins(Ins),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ins {
    left: Box<ITerm>,
    index: usize,
    right: Box<ITerm>,
    arity: usize,
}

impl Ins {
    pub fn left(&self) -> &ITerm {
        &self.left
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn right(&self) -> &ITerm {
        &self.right
    }
}

/// The rewrite rules, oriented left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Assoc1,
    Assoc2,
    Unit,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Assoc1 => "assoc 1",
            Rule::Assoc2 => "assoc 2",
            Rule::Unit => "unit",
        })
    }
}

/// Order in which redexes are searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    LeftmostOutermost,
    LeftmostInnermost,
}

/// One contraction performed during normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: Rule,
    pub result: ITerm,
}

/// The shapes a normal term can take.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalType {
    /// `(2 ◁2 A2) ◁1 A1`
    Type1 { a1: ITerm, a2: ITerm },
    /// `2 ◁2 A2`
    Type2 { a2: ITerm },
    /// `2 ◁1 A1`
    Type3 { a1: ITerm },
    /// `2`
    Type4,
    /// `1`
    Unit,
}

impl NormalType {
    pub fn number(&self) -> Option<u8> {
        match self {
            NormalType::Type1 { .. } => Some(1),
            NormalType::Type2 { .. } => Some(2),
            NormalType::Type3 { .. } => Some(3),
            NormalType::Type4 => Some(4),
            NormalType::Unit => None,
        }
    }
}

impl fmt::Display for NormalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalType::Type1 { a1, a2 } => {
                write!(f, "type 1: ((2 @2 A2) @1 A1) with A1 = {a1}, A2 = {a2}")
            }
            NormalType::Type2 { a2 } => write!(f, "type 2: (2 @2 A2) with A2 = {a2}"),
            NormalType::Type3 { a1 } => write!(f, "type 3: (2 @1 A1) with A1 = {a1}"),
            NormalType::Type4 => f.write_str("type 4: 2"),
            NormalType::Unit => f.write_str("unit: 1"),
        }
    }
}

impl ITerm {
    pub fn ins(left: ITerm, index: usize, right: ITerm) -> Result<ITerm, CalcError> {
        let arity = left.arity();
        if index < 1 || index > arity {
            return Err(CalcError::IndexOutOfRange { index, arity });
        }
        Ok(ITerm::ins_unchecked(left, index, right))
    }

    fn ins_unchecked(left: ITerm, index: usize, right: ITerm) -> ITerm {
        debug_assert!(index >= 1 && index <= left.arity());
        let arity = left.arity() + right.arity() - 1;
        ITerm::Ins(Ins {
            left: Box::new(left),
            index,
            right: Box::new(right),
            arity,
        })
    }

    pub fn arity(&self) -> usize {
        match self {
            ITerm::One => 1,
            ITerm::Two => 2,
            ITerm::Ins(i) => i.arity,
        }
    }

    pub fn contains_unit(&self) -> bool {
        match self {
            ITerm::One => true,
            ITerm::Two => false,
            ITerm::Ins(i) => i.left.contains_unit() || i.right.contains_unit(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            ITerm::One | ITerm::Two => 1,
            ITerm::Ins(i) => 1 + i.left.node_count() + i.right.node_count(),
        }
    }

    /// The tree this term denotes: `v(1) = ∗`, `v(2) = ∗∧∗`,
    /// `v(A ◁n B) = v(A) ⊴n v(B)`.
    pub fn eval(&self) -> Tree {
        match self {
            ITerm::One => Tree::Leaf,
            ITerm::Two => Tree::two(),
            ITerm::Ins(i) => i
                .left
                .eval()
                .insert(i.index, &i.right.eval())
                .expect("arity of a term equals the leaf count of its value"),
        }
    }

    /// `c(2) = 2`, `c(B ◁n C) = c(B)·(c(C)+1)`.
    pub fn measure_c(&self) -> Result<u128, CalcError> {
        match self {
            ITerm::One => Err(CalcError::UnitNotAllowed),
            ITerm::Two => Ok(2),
            ITerm::Ins(i) => {
                let b = i.left.measure_c()?;
                let c = i.right.measure_c()?;
                b.checked_mul(c + 1).ok_or(CalcError::Overflow)
            }
        }
    }

    /// Sum of the indices of all `◁n` in the term.
    pub fn measure_s(&self) -> Result<u128, CalcError> {
        match self {
            ITerm::One => Err(CalcError::UnitNotAllowed),
            ITerm::Two => Ok(0),
            ITerm::Ins(i) => Ok(i.index as u128 + i.left.measure_s()? + i.right.measure_s()?),
        }
    }

    pub fn measure_d(&self) -> Result<u128, CalcError> {
        self.measure_c()?
            .checked_add(self.measure_s()?)
            .ok_or(CalcError::Overflow)
    }

    fn is_unit_redex(&self) -> bool {
        match self {
            ITerm::Ins(i) => *i.left == ITerm::One || *i.right == ITerm::One,
            _ => false,
        }
    }

    fn is_assoc_redex(&self) -> bool {
        match self {
            ITerm::Ins(outer) => match &*outer.left {
                ITerm::Ins(inner) => inner.index <= outer.index,
                _ => false,
            },
            _ => false,
        }
    }

    fn has_redex(&self, unit: bool) -> bool {
        let here = self.is_assoc_redex() || (unit && self.is_unit_redex());
        here || match self {
            ITerm::Ins(i) => i.left.has_redex(unit) || i.right.has_redex(unit),
            _ => false,
        }
    }

    /// Whether the term is normal in `calculus`: no part `(A ◁n B) ◁m C`
    /// with `n <= m`, and with unit no `1` unless the term is `1` itself.
    pub fn is_normal(&self, calculus: Calculus) -> bool {
        !self.has_redex(calculus == Calculus::WithUnit)
    }

    /// The literal embedding of a tree followed by normalization with unit:
    /// `i(∗) = 1`, `i(X∧Y) = (2 ◁2 i(Y)) ◁1 i(X)`.
    pub fn from_tree(tree: &Tree) -> ITerm {
        normalize(&ITerm::embed_literal(tree), Calculus::WithUnit)
    }

    fn embed_literal(tree: &Tree) -> ITerm {
        match tree {
            Tree::Leaf => ITerm::One,
            Tree::Wedge(x, y) => {
                let inner = ITerm::ins_unchecked(ITerm::Two, 2, ITerm::embed_literal(y));
                ITerm::ins_unchecked(inner, 1, ITerm::embed_literal(x))
            }
        }
    }

    /// All terms without `1` of the given arity.
    pub fn all_with_arity(arity: usize) -> Vec<ITerm> {
        let mut table: Vec<Vec<ITerm>> = vec![Vec::new(), Vec::new(), vec![ITerm::Two]];
        for size in 3..=arity {
            let mut level = Vec::new();
            // |A| + |B| - 1 = size with |A|, |B| >= 2
            for left in 2..size {
                let right = size + 1 - left;
                for a in &table[left] {
                    for b in &table[right] {
                        for n in 1..=left {
                            level.push(ITerm::ins_unchecked(a.clone(), n, b.clone()));
                        }
                    }
                }
            }
            table.push(level);
        }
        if arity < 2 {
            Vec::new()
        } else {
            table.swap_remove(arity)
        }
    }

    pub fn parse(text: &str) -> Result<ITerm, ParseError> {
        let mut cur = Cursor::new(text);
        let t = parse_iterm(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

fn parse_iterm(cur: &mut Cursor<'_>) -> Result<ITerm, ParseError> {
    match cur.peek() {
        Some('1') => {
            cur.bump();
            Ok(ITerm::One)
        }
        Some('2') => {
            cur.bump();
            Ok(ITerm::Two)
        }
        Some('(') => {
            cur.bump();
            let left = parse_iterm(cur)?;
            cur.expect('@')?;
            let at = cur.offset();
            let n = cur.number()?;
            let right = parse_iterm(cur)?;
            cur.expect(')')?;
            ITerm::ins(left, n, right).map_err(|e| ParseError::new(at, e.to_string()))
        }
        _ => Err(cur.unexpected("'1', '2' or '('")),
    }
}

impl fmt::Display for ITerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ITerm::One => f.write_str("1"),
            ITerm::Two => f.write_str("2"),
            ITerm::Ins(i) => write!(f, "({} @{} {})", i.left, i.index, i.right),
        }
    }
}

impl fmt::Debug for ITerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ITerm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ITerm::parse(s)
    }
}

fn contract_unit(t: &ITerm) -> ITerm {
    match t {
        ITerm::Ins(i) if *i.left == ITerm::One => (*i.right).clone(),
        ITerm::Ins(i) if *i.right == ITerm::One => (*i.left).clone(),
        _ => unreachable!("not a unit redex"),
    }
}

fn contract_assoc(t: &ITerm) -> (ITerm, Rule) {
    let ITerm::Ins(outer) = t else {
        unreachable!("not an assoc redex")
    };
    let ITerm::Ins(inner) = &*outer.left else {
        unreachable!("not an assoc redex")
    };
    let (a, n, b) = (&*inner.left, inner.index, &*inner.right);
    let (m, c) = (outer.index, &*outer.right);
    if m < n + b.arity() {
        let right = ITerm::ins_unchecked(b.clone(), m - n + 1, c.clone());
        (ITerm::ins_unchecked(a.clone(), n, right), Rule::Assoc1)
    } else {
        let left = ITerm::ins_unchecked(a.clone(), m - b.arity() + 1, c.clone());
        (ITerm::ins_unchecked(left, n, b.clone()), Rule::Assoc2)
    }
}

#[derive(Clone, Copy, PartialEq)]
enum RedexClass {
    Unit,
    Assoc,
}

fn contract_first(t: &ITerm, class: RedexClass, strategy: Strategy) -> Option<(ITerm, Rule)> {
    let is_redex = match class {
        RedexClass::Unit => t.is_unit_redex(),
        RedexClass::Assoc => t.is_assoc_redex(),
    };
    let contract_here = || match class {
        RedexClass::Unit => (contract_unit(t), Rule::Unit),
        RedexClass::Assoc => contract_assoc(t),
    };
    if strategy == Strategy::LeftmostOutermost && is_redex {
        return Some(contract_here());
    }
    if let ITerm::Ins(i) = t {
        if let Some((left, rule)) = contract_first(&i.left, class, strategy) {
            return Some((
                ITerm::ins_unchecked(left, i.index, (*i.right).clone()),
                rule,
            ));
        }
        if let Some((right, rule)) = contract_first(&i.right, class, strategy) {
            return Some((
                ITerm::ins_unchecked((*i.left).clone(), i.index, right),
                rule,
            ));
        }
    }
    if strategy == Strategy::LeftmostInnermost && is_redex {
        return Some(contract_here());
    }
    None
}

/// Contracts one redex chosen by `strategy`. With unit, (unit) redexes are
/// contracted before any associativity redex.
pub fn rewrite_step_with(t: &ITerm, calculus: Calculus, strategy: Strategy) -> Option<Rewrite> {
    let found = if calculus == Calculus::WithUnit {
        contract_first(t, RedexClass::Unit, strategy)
    } else {
        None
    };
    found
        .or_else(|| contract_first(t, RedexClass::Assoc, strategy))
        .map(|(result, rule)| Rewrite { rule, result })
}

/// One leftmost-outermost contraction, or `None` if `t` is normal.
pub fn rewrite_step(t: &ITerm, calculus: Calculus) -> Option<ITerm> {
    rewrite_step_with(t, calculus, Strategy::LeftmostOutermost).map(|r| r.result)
}

/// Normalizes and returns every intermediate contraction.
pub fn normalize_traced(
    t: &ITerm,
    calculus: Calculus,
    strategy: Strategy,
) -> (ITerm, Vec<Rewrite>) {
    let mut current = t.clone();
    let mut trace = Vec::new();
    while let Some(rw) = rewrite_step_with(&current, calculus, strategy) {
        current = rw.result.clone();
        trace.push(rw);
    }
    (current, trace)
}

pub fn normalize_with(t: &ITerm, calculus: Calculus, strategy: Strategy) -> ITerm {
    let mut current = t.clone();
    while let Some(rw) = rewrite_step_with(&current, calculus, strategy) {
        current = rw.result;
    }
    current
}

pub fn normalize(t: &ITerm, calculus: Calculus) -> ITerm {
    normalize_with(t, calculus, Strategy::LeftmostOutermost)
}

/// Classifies a normal term into one of the normal types.
pub fn classify_normal(t: &ITerm) -> Result<NormalType, CalcError> {
    if !t.is_normal(Calculus::WithUnit) {
        return Err(CalcError::NotNormal(t.clone()));
    }
    let not_normal = || CalcError::NotNormal(t.clone());
    match t {
        ITerm::One => Ok(NormalType::Unit),
        ITerm::Two => Ok(NormalType::Type4),
        ITerm::Ins(outer) => match (&*outer.left, outer.index) {
            (ITerm::Two, 2) => Ok(NormalType::Type2 {
                a2: (*outer.right).clone(),
            }),
            (ITerm::Two, 1) => Ok(NormalType::Type3 {
                a1: (*outer.right).clone(),
            }),
            (ITerm::Ins(inner), 1) if *inner.left == ITerm::Two && inner.index == 2 => {
                Ok(NormalType::Type1 {
                    a1: (*outer.right).clone(),
                    a2: (*inner.right).clone(),
                })
            }
            _ => Err(not_normal()),
        },
    }
}

/// Equality in `calculus`, decided by comparing normal forms.
///
/// Without unit, an occurrence of `1` is treated as an opaque constant.
pub fn equal_terms(a: &ITerm, b: &ITerm, calculus: Calculus) -> bool {
    a.arity() == b.arity() && normalize(a, calculus) == normalize(b, calculus)
}
