//! Planar binary trees over a single leaf symbol, and insertion.
//!
//! Text syntax: `Tree ::= "*" | "(" Tree "^" Tree ")"`. Whitespace is
//! ignored and the outermost parentheses may be dropped on input; output is
//! always fully parenthesized.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::syntax::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("insertion index {index} out of range for a tree with {leaves} leaves")]
    IndexOutOfRange { index: usize, leaves: usize },
}

/// A planar binary tree. `Leaf` is the one-node tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Wedge(Arc<Tree>, Arc<Tree>),
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    /// The tree `∗∧∗` with two leaves.
    pub fn two() -> Tree {
        Tree::wedge(Tree::Leaf, Tree::Leaf)
    }

    pub fn wedge(left: Tree, right: Tree) -> Tree {
        Tree::Wedge(Arc::new(left), Arc::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Wedge(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Wedge(l, r) => Some((l, r)),
        }
    }

    /// Replaces the `n`-th leaf (1-based, from the left) by `z`.
    pub fn insert(&self, n: usize, z: &Tree) -> Result<Tree, TreeError> {
        let leaves = self.leaf_count();
        if n < 1 || n > leaves {
            return Err(TreeError::IndexOutOfRange { index: n, leaves });
        }
        Ok(self.insert_unchecked(n, z))
    }

    fn insert_unchecked(&self, n: usize, z: &Tree) -> Tree {
        match self {
            Tree::Leaf => z.clone(),
            Tree::Wedge(l, r) => {
                let left = l.leaf_count();
                if n <= left {
                    Tree::Wedge(Arc::new(l.insert_unchecked(n, z)), r.clone())
                } else {
                    Tree::Wedge(l.clone(), Arc::new(r.insert_unchecked(n - left, z)))
                }
            }
        }
    }

    /// Every way of writing `self` as `insert(a, n, b)`, one per node of
    /// `self` (the node becomes the root of `b`). Ordered by preorder.
    pub fn decompositions(&self) -> Vec<(Tree, usize, Tree)> {
        let mut out = Vec::new();
        self.collect_decompositions(&mut |outer, n, inner| out.push((outer, n, inner)));
        out
    }

    fn collect_decompositions(&self, emit: &mut dyn FnMut(Tree, usize, Tree)) {
        emit(Tree::Leaf, 1, self.clone());
        if let Tree::Wedge(l, r) = self {
            let left_leaves = l.leaf_count();
            l.collect_decompositions(&mut |outer, n, inner| {
                emit(Tree::Wedge(Arc::new(outer), r.clone()), n, inner)
            });
            r.collect_decompositions(&mut |outer, n, inner| {
                emit(
                    Tree::Wedge(l.clone(), Arc::new(outer)),
                    n + left_leaves,
                    inner,
                )
            });
        }
    }

    /// All trees with exactly `n` leaves, in increasing `Ord` order.
    pub fn all_with_leaves(n: usize) -> Vec<Tree> {
        let mut table: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf]];
        for size in 2..=n {
            let mut level = Vec::new();
            for left in 1..size {
                for l in &table[left] {
                    for r in &table[size - left] {
                        level.push(Tree::wedge(l.clone(), r.clone()));
                    }
                }
            }
            table.push(level);
        }
        let mut trees = if n == 0 {
            Vec::new()
        } else {
            table.swap_remove(n)
        };
        trees.sort();
        trees
    }

    /// `((∗∧∗)∧∗)∧…` with `n` leaves.
    pub fn left_comb(n: usize) -> Tree {
        let mut t = Tree::Leaf;
        for _ in 1..n {
            t = Tree::wedge(t, Tree::Leaf);
        }
        t
    }

    /// `∗∧(∗∧(…∧∗))` with `n` leaves.
    pub fn right_comb(n: usize) -> Tree {
        let mut t = Tree::Leaf;
        for _ in 1..n {
            t = Tree::wedge(Tree::Leaf, t);
        }
        t
    }

    pub fn parse(text: &str) -> Result<Tree, ParseError> {
        let mut cur = Cursor::new(text);
        let first = parse_tree(&mut cur)?;
        // Outermost parentheses are optional on input.
        let tree = if cur.eat('^') {
            let second = parse_tree(&mut cur)?;
            Tree::wedge(first, second)
        } else {
            first
        };
        cur.finish()?;
        Ok(tree)
    }

    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Tree, ParseError> {
        parse_tree(cur)
    }
}

fn parse_tree(cur: &mut Cursor<'_>) -> Result<Tree, ParseError> {
    match cur.peek() {
        Some('*') => {
            cur.bump();
            Ok(Tree::Leaf)
        }
        Some('(') => {
            cur.bump();
            let l = parse_tree(cur)?;
            cur.expect('^')?;
            let r = parse_tree(cur)?;
            cur.expect(')')?;
            Ok(Tree::wedge(l, r))
        }
        _ => Err(cur.unexpected("'*' or '('")),
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("*"),
            Tree::Wedge(l, r) => write!(f, "({l}^{r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tree::parse(s)
    }
}
