//! One-skeleta of associahedra and permutohedra, and the collapse of the
//! Yang-Baxter hexagon onto the pentagon.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::arrow::{ArrowTerm, Object};
use crate::theories::builtin;
use crate::tree::Tree;

pub const MAX_TAMARI_LEAVES: usize = 12;
pub const MAX_PERMUTOHEDRON_LETTERS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("{what} must lie between {min} and {max}, got {value}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Option<String>,
}

/// A simple graph on labelled vertices. Vertices are sorted by label and
/// edges by endpoints; undirected edges have `from < to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub directed: bool,
}

impl SkeletonGraph {
    /// Builds a graph from labelled edges, dropping loops and duplicates.
    fn build(
        name: String,
        mut vertices: Vec<String>,
        edges: impl IntoIterator<Item = (String, String, Option<String>)>,
        directed: bool,
    ) -> SkeletonGraph {
        vertices.sort();
        vertices.dedup();
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b, label) in edges {
            let (mut from, mut to) = (index[a.as_str()], index[b.as_str()]);
            if from == to {
                continue;
            }
            if !directed && from > to {
                std::mem::swap(&mut from, &mut to);
            }
            if seen.insert((from, to)) {
                out.push(Edge { from, to, label });
            }
        }
        out.sort();
        SkeletonGraph {
            name,
            vertices,
            edges: out,
            directed,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(label))
            .ok()
    }

    /// Neighbours ignoring edge direction.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| match (e.from == v, e.to == v) {
                (true, _) => Some(e.to),
                (_, true) => Some(e.from),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Undirected edges as pairs of vertex labels, each pair sorted.
    pub fn label_pairs(&self) -> BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = (self.vertices[e.from].clone(), self.vertices[e.to].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }
}

fn check_bound(
    what: &'static str,
    value: usize,
    min: usize,
    max: usize,
) -> Result<(), PolytopeError> {
    if value < min || value > max {
        return Err(PolytopeError::BoundExceeded {
            what,
            value,
            min,
            max,
        });
    }
    Ok(())
}

/// Every tree obtained from `t` by one rotation `U∧(V∧W) → (U∧V)∧W`, with
/// the position of the rotated subtree (`1` = left child, `2` = right).
pub fn rotations(t: &Tree) -> Vec<(String, Tree)> {
    let mut out = Vec::new();
    collect_rotations(t, &mut Vec::new(), &mut out);
    out
}

fn collect_rotations(t: &Tree, path: &mut Vec<usize>, out: &mut Vec<(String, Tree)>) {
    let Some((l, r)) = t.children() else {
        return;
    };
    if let Some((v, w)) = r.children() {
        let rotated = Tree::wedge(Tree::wedge(l.clone(), v.clone()), w.clone());
        out.push((path_label(path), rotated));
    }
    for (i, child) in [(1, l), (2, r)] {
        path.push(i);
        let start = out.len();
        collect_rotations(child, path, out);
        path.pop();
        let other = if i == 1 { r } else { l };
        for (_, sub) in &mut out[start..] {
            *sub = if i == 1 {
                Tree::wedge(sub.clone(), other.clone())
            } else {
                Tree::wedge(other.clone(), sub.clone())
            };
        }
    }
}

fn path_label(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Trees with `n` leaves joined by single rotations. Directed edges point
/// from `U∧(V∧W)` to `(U∧V)∧W`.
pub fn tamari_graph(n: usize, directed: bool) -> Result<SkeletonGraph, PolytopeError> {
    check_bound("number of leaves", n, 2, MAX_TAMARI_LEAVES)?;
    let trees = Tree::all_with_leaves(n);
    let vertices = trees.iter().map(|t| t.to_string()).collect();
    let edges = trees.iter().flat_map(|t| {
        rotations(t)
            .into_iter()
            .map(move |(pos, u)| (t.to_string(), u.to_string(), Some(pos)))
    });
    Ok(SkeletonGraph::build(
        format!("tamari{n}"),
        vertices,
        edges,
        directed,
    ))
}

fn inversions(word: &[char]) -> usize {
    let mut k = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                k += 1;
            }
        }
    }
    k
}

fn permutations(letters: &[char]) -> Vec<Vec<char>> {
    if letters.len() <= 1 {
        return vec![letters.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &c) in letters.iter().enumerate() {
        let mut rest = letters.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, c);
            out.push(p);
        }
    }
    out
}

/// Permutations of the letters `A, B, …` joined by adjacent transpositions,
/// labelled with the position of the left letter. Directed edges increase
/// the number of inversions.
pub fn permutohedron_graph(n: usize, directed: bool) -> Result<SkeletonGraph, PolytopeError> {
    check_bound("number of letters", n, 2, MAX_PERMUTOHEDRON_LETTERS)?;
    let letters: Vec<char> = ('A'..).take(n).collect();
    let perms = permutations(&letters);
    let vertices = perms.iter().map(|p| p.iter().collect()).collect();
    let edges = perms.iter().flat_map(|p| {
        (0..n - 1).filter_map(move |i| {
            let mut q = p.clone();
            q.swap(i, i + 1);
            (inversions(&q) > inversions(p)).then(|| {
                (
                    p.iter().collect::<String>(),
                    q.iter().collect::<String>(),
                    Some((i + 1).to_string()),
                )
            })
        })
    });
    Ok(SkeletonGraph::build(
        format!("permutohedron{n}"),
        vertices,
        edges,
        directed,
    ))
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &SkeletonGraph) -> String {
    let (kind, arrow) = if g.directed {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = format!("{kind} {} {{\n", dot_quote(&g.name));
    for v in &g.vertices {
        let _ = writeln!(out, "  {};", dot_quote(v));
    }
    for e in &g.edges {
        let _ = write!(
            out,
            "  {} {arrow} {}",
            dot_quote(&g.vertices[e.from]),
            dot_quote(&g.vertices[e.to])
        );
        if let Some(label) = &e.label {
            let _ = write!(out, " [label={}]", dot_quote(label));
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}

/// The hexagon, where its vertices go, and the resulting pentagon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseReport {
    pub hexagon: SkeletonGraph,
    /// Hexagon vertex (a word) to pentagon vertex (a tree).
    pub vertex_map: BTreeMap<String, Tree>,
    /// The hexagon vertices sent to the same tree.
    pub identified: Vec<(String, String)>,
    pub pentagon: SkeletonGraph,
}

/// Objects visited by a composition chain, in order of application.
fn path_objects(term: &ArrowTerm, theory: crate::arrow::TheoryKind) -> Vec<Object> {
    let mut factors: Vec<&ArrowTerm> = term.factors();
    factors.reverse();
    let mut out = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let e = f.infer_type(theory).expect("built-in terms type-check");
        if i == 0 {
            out.push(e.source);
        }
        out.push(e.target);
    }
    out
}

/// Reads the two sides of the Yang-Baxter equation and of the first
/// pentagon chain as paths of three steps each (the shorter pentagon side
/// gets an identity step on `(∗∧∗)∧(∗∧∗)` in the middle), and maps each
/// hexagon vertex to the pentagon vertex at the same place.
pub fn hexagon_pentagon_collapse() -> CollapseReport {
    let yb = builtin("yang-baxter").expect("built-in").script();
    let pent = builtin("pentagon-1").expect("built-in").script();
    let word = |o: &Object| o.to_string().to_uppercase();
    let tree = |o: &Object| o.as_tree().expect("gamma objects are trees").clone();

    let mut short = path_objects(pent.first(), pent.theory);
    if short.len() == 3 {
        short.insert(1, short[1].clone());
    }
    let long = path_objects(pent.last(), pent.theory);
    let sides = [
        (path_objects(yb.first(), yb.theory), short),
        (path_objects(yb.last(), yb.theory), long),
    ];

    let hexagon = permutohedron_graph(3, false).expect("within bounds");
    let mut vertex_map = BTreeMap::new();
    for (hex_path, pent_path) in &sides {
        assert_eq!(hex_path.len(), pent_path.len(), "paths of equal length");
        for (h, p) in hex_path.iter().zip(pent_path) {
            let previous = vertex_map.insert(word(h), tree(p));
            assert!(previous.is_none_or(|q| q == tree(p)), "consistent map");
        }
    }

    let mut identified = Vec::new();
    let keys: Vec<&String> = vertex_map.keys().collect();
    for (i, a) in keys.iter().enumerate() {
        for b in &keys[i + 1..] {
            if vertex_map[*a] == vertex_map[*b] {
                identified.push(((*a).clone(), (*b).clone()));
            }
        }
    }

    let vertices = vertex_map.values().map(|t| t.to_string()).collect();
    let edges = hexagon.edges.iter().map(|e| {
        (
            vertex_map[&hexagon.vertices[e.from]].to_string(),
            vertex_map[&hexagon.vertices[e.to]].to_string(),
            None,
        )
    });
    let pentagon = SkeletonGraph::build("collapsed".to_string(), vertices, edges, false);
    CollapseReport {
        hexagon,
        vertex_map,
        identified,
        pentagon,
    }
}

/// Brute-force isomorphism test for small undirected graphs.
pub fn isomorphic(a: &SkeletonGraph, b: &SkeletonGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let adj = |g: &SkeletonGraph| {
        let mut m = vec![vec![false; n]; n];
        for e in &g.edges {
            m[e.from][e.to] = true;
            m[e.to][e.from] = true;
        }
        m
    };
    let (ma, mb) = (adj(a), adj(b));
    let idx: Vec<usize> = (0..n).collect();
    let mut perm = idx.clone();
    fn search(
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ma: &[Vec<bool>],
        mb: &[Vec<bool>],
    ) -> bool {
        let n = ma.len();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            if (0..k).all(|j| ma[k][j] == mb[cand][perm[j]]) {
                used[cand] = true;
                perm[k] = cand;
                if search(k + 1, perm, used, ma, mb) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }
    search(0, &mut perm, &mut vec![false; n], &ma, &mb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tamari_graphs() {
        let g3 = tamari_graph(3, false).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (2, 1));
        let g4 = tamari_graph(4, false).unwrap();
        assert_eq!((g4.vertex_count(), g4.edge_count()), (5, 5));
        assert!((0..5).all(|v| g4.degree(v) == 2));
        assert!(g4.is_connected());
    }

    #[test]
    fn bounds() {
        assert!(tamari_graph(1, false).is_err());
        assert!(tamari_graph(13, false).is_err());
        assert!(permutohedron_graph(9, false).is_err());
    }

    #[test]
    fn hexagon() {
        let g = permutohedron_graph(3, false).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        let d = permutohedron_graph(3, true).unwrap();
        let abc = d.index_of("ABC").unwrap();
        assert!(d.edges.iter().filter(|e| e.to == abc).count() == 0);
    }

    #[test]
    fn dot_is_stable() {
        let g = tamari_graph(3, false).unwrap();
        let dot = to_dot(&g);
        assert_eq!(
            dot,
            "graph \"tamari3\" {\n  \"((*^*)^*)\";\n  \"(*^(*^*))\";\n  \"((*^*)^*)\" -- \"(*^(*^*))\" [label=\"root\"];\n}\n"
        );
        assert_eq!(dot, to_dot(&tamari_graph(3, false).unwrap()));
    }

    #[test]
    fn collapse_identifies_one_pair() {
        let r = hexagon_pentagon_collapse();
        assert_eq!(r.identified, vec![("BAC".to_string(), "BCA".to_string())]);
        assert_eq!(r.vertex_map["BAC"].to_string(), "((*^*)^(*^*))");
        assert_eq!((r.pentagon.vertex_count(), r.pentagon.edge_count()), (5, 5));
        assert!(isomorphic(&r.pentagon, &tamari_graph(4, false).unwrap()));
    }
}
