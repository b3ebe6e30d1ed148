//! Axiom schemata over arrow terms and first-order matching with index
//! arithmetic.
//!
//! A pattern is an arrow term with holes for objects, arrows and indices.
//! Object patterns may contain `A ◁n B` and `A ∧ B`; matching these against
//! a concrete object enumerates its decompositions, so a match may produce
//! several assignments. Side conditions either check a relation between
//! indices or define a metavariable from the others; they are evaluated to a
//! fixpoint after the structural match.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{ArrowError, ArrowTerm, Endpoints, Generator, Object, Path, TheoryKind};

pub type Var = &'static str;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdxExpr {
    Var(Var),
    Const(i64),
    /// Size of a bound object.
    Size(Var),
    /// Size of the source of a bound arrow.
    ArrowSize(Var),
    Add(Box<IdxExpr>, Box<IdxExpr>),
    Sub(Box<IdxExpr>, Box<IdxExpr>),
}

impl IdxExpr {
    pub fn var(v: Var) -> IdxExpr {
        IdxExpr::Var(v)
    }

    pub fn size(v: Var) -> IdxExpr {
        IdxExpr::Size(v)
    }

    pub fn arrow_size(v: Var) -> IdxExpr {
        IdxExpr::ArrowSize(v)
    }

    pub fn plus(self, k: i64) -> IdxExpr {
        self + IdxExpr::Const(k)
    }
}

impl std::ops::Add for IdxExpr {
    type Output = IdxExpr;

    fn add(self, other: IdxExpr) -> IdxExpr {
        IdxExpr::Add(Box::new(self), Box::new(other))
    }
}

impl std::ops::Sub for IdxExpr {
    type Output = IdxExpr;

    fn sub(self, other: IdxExpr) -> IdxExpr {
        IdxExpr::Sub(Box::new(self), Box::new(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjPat {
    Var(Var),
    Leaf,
    Two,
    Ins(Box<ObjPat>, IdxExpr, Box<ObjPat>),
    Wedge(Box<ObjPat>, Box<ObjPat>),
}

impl ObjPat {
    pub fn ins(self, n: IdxExpr, other: ObjPat) -> ObjPat {
        ObjPat::Ins(Box::new(self), n, Box::new(other))
    }

    pub fn wedge(self, other: ObjPat) -> ObjPat {
        ObjPat::Wedge(Box::new(self), Box::new(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowPat {
    Var(Var),
    Id(ObjPat),
    Gen(Generator, Vec<ObjPat>),
    Compose(Box<ArrowPat>, Box<ArrowPat>),
    Ins(Box<ArrowPat>, IdxExpr, Box<ArrowPat>),
    Tensor(Box<ArrowPat>, Box<ArrowPat>),
}

impl ArrowPat {
    pub fn compose(self, before: ArrowPat) -> ArrowPat {
        ArrowPat::Compose(Box::new(self), Box::new(before))
    }

    pub fn ins(self, n: IdxExpr, other: ArrowPat) -> ArrowPat {
        ArrowPat::Ins(Box::new(self), n, Box::new(other))
    }

    pub fn tensor(self, other: ArrowPat) -> ArrowPat {
        ArrowPat::Tensor(Box::new(self), Box::new(other))
    }

    /// Metavariables occurring in the pattern: (objects, arrows, indices).
    pub fn vars(&self) -> (Vec<Var>, Vec<Var>, Vec<Var>) {
        let mut acc = (Vec::new(), Vec::new(), Vec::new());
        self.collect_vars(&mut acc);
        acc
    }

    fn collect_vars(&self, acc: &mut (Vec<Var>, Vec<Var>, Vec<Var>)) {
        fn push(v: &mut Vec<Var>, x: Var) {
            if !v.contains(&x) {
                v.push(x);
            }
        }
        fn idx(e: &IdxExpr, acc: &mut (Vec<Var>, Vec<Var>, Vec<Var>)) {
            match e {
                IdxExpr::Var(v) => push(&mut acc.2, v),
                IdxExpr::Const(_) => {}
                IdxExpr::Size(v) => push(&mut acc.0, v),
                IdxExpr::ArrowSize(v) => push(&mut acc.1, v),
                IdxExpr::Add(a, b) | IdxExpr::Sub(a, b) => {
                    idx(a, acc);
                    idx(b, acc);
                }
            }
        }
        fn obj(p: &ObjPat, acc: &mut (Vec<Var>, Vec<Var>, Vec<Var>)) {
            match p {
                ObjPat::Var(v) => push(&mut acc.0, v),
                ObjPat::Leaf | ObjPat::Two => {}
                ObjPat::Ins(a, n, b) => {
                    obj(a, acc);
                    idx(n, acc);
                    obj(b, acc);
                }
                ObjPat::Wedge(a, b) => {
                    obj(a, acc);
                    obj(b, acc);
                }
            }
        }
        match self {
            ArrowPat::Var(v) => push(&mut acc.1, v),
            ArrowPat::Id(p) => obj(p, acc),
            ArrowPat::Gen(_, ps) => ps.iter().for_each(|p| obj(p, acc)),
            ArrowPat::Compose(a, b) | ArrowPat::Tensor(a, b) => {
                a.collect_vars(acc);
                b.collect_vars(acc);
            }
            ArrowPat::Ins(a, n, b) => {
                a.collect_vars(acc);
                idx(n, acc);
                b.collect_vars(acc);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjExpr {
    Source(Var),
    Target(Var),
    Pat(ObjPat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    /// Binds the index variable if unbound, otherwise checks equality.
    Idx(Var, IdxExpr),
    /// Binds the object variable if unbound, otherwise checks equality.
    Obj(Var, ObjExpr),
    Le(IdxExpr, IdxExpr),
    Lt(IdxExpr, IdxExpr),
    /// Enumerates `lo..=hi` for an index variable left unbound by everything
    /// else.
    Choose(Var, IdxExpr, IdxExpr),
}

/// One equation `lhs = rhs` under side conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub lhs: ArrowPat,
    pub rhs: ArrowPat,
    pub conditions: Vec<Condition>,
}

impl Clause {
    pub fn new(lhs: ArrowPat, rhs: ArrowPat) -> Clause {
        Clause {
            lhs,
            rhs,
            conditions: Vec::new(),
        }
    }

    pub fn when(mut self, c: Condition) -> Clause {
        self.conditions.push(c);
        self
    }
}

/// A named axiom. Axioms written with two equalities in one display, such
/// as `1 ∘ f = f ∘ 1 = f`, carry one clause per equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteAxiom {
    pub name: &'static str,
    pub clauses: Vec<Clause>,
}

/// A theory: the kind of terms it speaks about and its axioms.
#[derive(Debug, Clone)]
pub struct Theory {
    pub kind: TheoryKind,
    pub axioms: Vec<RewriteAxiom>,
}

impl Theory {
    pub fn axiom(&self, name: &str) -> Option<&RewriteAxiom> {
        self.axioms.iter().find(|a| a.name == name)
    }

    pub fn axiom_names(&self) -> Vec<&'static str> {
        self.axioms.iter().map(|a| a.name).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Left side to right side.
    Forward,
    /// Right side to left side.
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        })
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fwd" => Ok(Direction::Forward),
            "bwd" => Ok(Direction::Backward),
            _ => Err(format!("expected 'fwd' or 'bwd', found '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    pub objects: BTreeMap<Var, Object>,
    pub arrows: BTreeMap<Var, ArrowTerm>,
    pub indices: BTreeMap<Var, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub clause: usize,
    pub assignment: Assignment,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    #[error("position {0} does not address a subterm")]
    BadPosition(Path),
    #[error("subterm does not type-check: {0}")]
    IllTyped(ArrowError),
    #[error("{axiom} {direction} does not match at {path}")]
    NoMatch {
        axiom: &'static str,
        direction: Direction,
        path: Path,
    },
}

#[derive(Clone)]
struct State {
    asg: Assignment,
    pending: Vec<(IdxExpr, i64)>,
}

struct Matcher {
    theory: TheoryKind,
}

impl Matcher {
    fn eval_idx(&self, e: &IdxExpr, asg: &Assignment) -> Option<i64> {
        match e {
            IdxExpr::Var(v) => asg.indices.get(v).copied(),
            IdxExpr::Const(k) => Some(*k),
            IdxExpr::Size(v) => asg.objects.get(v).map(|o| o.size() as i64),
            IdxExpr::ArrowSize(v) => {
                let f = asg.arrows.get(v)?;
                f.infer_type(self.theory)
                    .ok()
                    .map(|e| e.source.size() as i64)
            }
            IdxExpr::Add(a, b) => Some(self.eval_idx(a, asg)? + self.eval_idx(b, asg)?),
            IdxExpr::Sub(a, b) => Some(self.eval_idx(a, asg)? - self.eval_idx(b, asg)?),
        }
    }

    fn match_idx(&self, e: &IdxExpr, n: usize, mut st: State) -> Option<State> {
        let n = n as i64;
        if let IdxExpr::Var(v) = e {
            if !st.asg.indices.contains_key(v) {
                st.asg.indices.insert(v, n);
                return Some(st);
            }
        }
        match self.eval_idx(e, &st.asg) {
            Some(k) if k == n => Some(st),
            Some(_) => None,
            None => {
                st.pending.push((e.clone(), n));
                Some(st)
            }
        }
    }

    fn match_obj(&self, p: &ObjPat, o: &Object, mut st: State) -> Vec<State> {
        match p {
            ObjPat::Var(v) => match st.asg.objects.get(v) {
                Some(bound) if bound == o => vec![st],
                Some(_) => Vec::new(),
                None => {
                    st.asg.objects.insert(v, o.clone());
                    vec![st]
                }
            },
            ObjPat::Leaf => keep_if(*o == Object::leaf(), st),
            ObjPat::Two => keep_if(*o == Object::two(), st),
            ObjPat::Wedge(pl, pr) => match o {
                Object::Tree(t) => match t.children() {
                    Some((l, r)) => {
                        let (l, r) = (Object::Tree(l.clone()), Object::Tree(r.clone()));
                        self.match_obj(pl, &l, st)
                            .into_iter()
                            .flat_map(|s| self.match_obj(pr, &r, s))
                            .collect()
                    }
                    None => Vec::new(),
                },
                Object::Word(w) => w
                    .splits()
                    .into_iter()
                    .flat_map(|(l, r)| {
                        self.match_obj(pl, &Object::Word(l), st.clone())
                            .into_iter()
                            .flat_map(move |s| self.match_obj(pr, &Object::Word(r.clone()), s))
                    })
                    .collect(),
            },
            ObjPat::Ins(pl, idx, pr) => {
                let Object::Tree(t) = o else {
                    return Vec::new();
                };
                t.decompositions()
                    .into_iter()
                    .flat_map(|(outer, n, inner)| {
                        let (outer, inner) = (Object::Tree(outer), Object::Tree(inner));
                        self.match_obj(pl, &outer, st.clone())
                            .into_iter()
                            .flat_map(|s| self.match_obj(pr, &inner, s))
                            .filter_map(|s| self.match_idx(idx, n, s))
                            .collect::<Vec<_>>()
                    })
                    .collect()
            }
        }
    }

    fn match_arrow(&self, p: &ArrowPat, t: &ArrowTerm, mut st: State) -> Vec<State> {
        match (p, t) {
            (ArrowPat::Var(v), _) => match st.asg.arrows.get(v) {
                Some(bound) if bound == t => vec![st],
                Some(_) => Vec::new(),
                None => {
                    st.asg.arrows.insert(v, t.clone());
                    vec![st]
                }
            },
            (ArrowPat::Id(po), ArrowTerm::Id(o)) => self.match_obj(po, o, st),
            (ArrowPat::Gen(pg, pos), ArrowTerm::Gen(g, os)) if pg == g && pos.len() == os.len() => {
                let mut states = vec![st];
                for (po, o) in pos.iter().zip(os) {
                    states = states
                        .into_iter()
                        .flat_map(|s| self.match_obj(po, o, s))
                        .collect();
                }
                states
            }
            (ArrowPat::Compose(pa, pb), ArrowTerm::Compose(a, b))
            | (ArrowPat::Tensor(pa, pb), ArrowTerm::Tensor(a, b)) => self
                .match_arrow(pa, a, st)
                .into_iter()
                .flat_map(|s| self.match_arrow(pb, b, s))
                .collect(),
            (ArrowPat::Ins(pa, idx, pb), ArrowTerm::Ins(a, n, b)) => self
                .match_arrow(pa, a, st)
                .into_iter()
                .flat_map(|s| self.match_arrow(pb, b, s))
                .filter_map(|s| self.match_idx(idx, *n, s))
                .collect(),
            _ => Vec::new(),
        }
    }

    fn eval_obj_expr(&self, e: &ObjExpr, asg: &Assignment) -> Option<Object> {
        let endpoints =
            |v: &Var| -> Option<Endpoints> { asg.arrows.get(v)?.infer_type(self.theory).ok() };
        match e {
            ObjExpr::Source(v) => endpoints(v).map(|e| e.source),
            ObjExpr::Target(v) => endpoints(v).map(|e| e.target),
            ObjExpr::Pat(p) => self.instantiate_obj(p, asg).ok(),
        }
    }

    /// Resolves side conditions; `None` inside means "not yet evaluable".
    fn resolve(&self, mut st: State, conditions: &[Condition]) -> Vec<State> {
        let mut remaining: Vec<&Condition> = conditions.iter().collect();
        loop {
            let mut progress = false;
            let mut stuck = Vec::new();
            for c in remaining {
                match self.step_condition(c, &mut st) {
                    Some(true) => progress = true,
                    Some(false) => return Vec::new(),
                    None => stuck.push(c),
                }
            }
            remaining = stuck;
            if remaining.is_empty() {
                break;
            }
            if !progress {
                let choice = remaining.iter().find_map(|c| match c {
                    Condition::Choose(v, lo, hi) if !st.asg.indices.contains_key(v) => {
                        Some((*v, self.eval_idx(lo, &st.asg)?, self.eval_idx(hi, &st.asg)?))
                    }
                    _ => None,
                });
                let Some((v, lo, hi)) = choice else {
                    return Vec::new();
                };
                let rest: Vec<Condition> = remaining.iter().map(|c| (*c).clone()).collect();
                return (lo..=hi)
                    .flat_map(|k| {
                        let mut branch = st.clone();
                        branch.asg.indices.insert(v, k);
                        self.resolve(branch, &rest)
                    })
                    .collect();
            }
        }
        let pending_ok = st
            .pending
            .iter()
            .all(|(e, n)| self.eval_idx(e, &st.asg) == Some(*n));
        if pending_ok {
            st.pending.clear();
            vec![st]
        } else {
            Vec::new()
        }
    }

    // Some(true): satisfied (possibly binding); Some(false): violated;
    // None: not evaluable yet.
    fn step_condition(&self, c: &Condition, st: &mut State) -> Option<bool> {
        match c {
            Condition::Idx(v, e) => {
                let k = self.eval_idx(e, &st.asg)?;
                match st.asg.indices.get(v) {
                    Some(bound) => Some(*bound == k),
                    None => {
                        st.asg.indices.insert(v, k);
                        Some(true)
                    }
                }
            }
            Condition::Obj(v, e) => {
                let o = self.eval_obj_expr(e, &st.asg)?;
                match st.asg.objects.get(v) {
                    Some(bound) => Some(*bound == o),
                    None => {
                        st.asg.objects.insert(v, o);
                        Some(true)
                    }
                }
            }
            Condition::Le(a, b) => Some(self.eval_idx(a, &st.asg)? <= self.eval_idx(b, &st.asg)?),
            Condition::Lt(a, b) => Some(self.eval_idx(a, &st.asg)? < self.eval_idx(b, &st.asg)?),
            Condition::Choose(v, lo, hi) => {
                let k = *st.asg.indices.get(v)?;
                Some(self.eval_idx(lo, &st.asg)? <= k && k <= self.eval_idx(hi, &st.asg)?)
            }
        }
    }

    fn index_value(&self, e: &IdxExpr, asg: &Assignment) -> Result<usize, InstantiateError> {
        match self.eval_idx(e, asg) {
            Some(k) if k >= 1 => Ok(k as usize),
            Some(k) => Err(InstantiateError::BadIndex(k)),
            None => Err(InstantiateError::Unbound),
        }
    }

    fn instantiate_obj(&self, p: &ObjPat, asg: &Assignment) -> Result<Object, InstantiateError> {
        Ok(match p {
            ObjPat::Var(v) => asg
                .objects
                .get(v)
                .cloned()
                .ok_or(InstantiateError::Unbound)?,
            ObjPat::Leaf => Object::leaf(),
            ObjPat::Two => Object::two(),
            ObjPat::Wedge(a, b) => self
                .instantiate_obj(a, asg)?
                .wedge(&self.instantiate_obj(b, asg)?)?,
            ObjPat::Ins(a, n, b) => self
                .instantiate_obj(a, asg)?
                .insert(self.index_value(n, asg)?, &self.instantiate_obj(b, asg)?)?,
        })
    }

    fn instantiate(&self, p: &ArrowPat, asg: &Assignment) -> Result<ArrowTerm, InstantiateError> {
        Ok(match p {
            ArrowPat::Var(v) => asg
                .arrows
                .get(v)
                .cloned()
                .ok_or(InstantiateError::Unbound)?,
            ArrowPat::Id(o) => ArrowTerm::Id(self.instantiate_obj(o, asg)?),
            ArrowPat::Gen(g, os) => ArrowTerm::Gen(
                *g,
                os.iter()
                    .map(|o| self.instantiate_obj(o, asg))
                    .collect::<Result<_, _>>()?,
            ),
            ArrowPat::Compose(a, b) => {
                ArrowTerm::compose(self.instantiate(a, asg)?, self.instantiate(b, asg)?)
            }
            ArrowPat::Tensor(a, b) => {
                ArrowTerm::tensor(self.instantiate(a, asg)?, self.instantiate(b, asg)?)
            }
            ArrowPat::Ins(a, n, b) => ArrowTerm::ins(
                self.instantiate(a, asg)?,
                self.index_value(n, asg)?,
                self.instantiate(b, asg)?,
            ),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstantiateError {
    #[error("metavariable left unbound")]
    Unbound,
    #[error("index {0} is not positive")]
    BadIndex(i64),
    #[error(transparent)]
    Arrow(#[from] ArrowError),
}

impl From<crate::tree::TreeError> for InstantiateError {
    fn from(e: crate::tree::TreeError) -> Self {
        InstantiateError::Arrow(e.into())
    }
}

fn keep_if(ok: bool, st: State) -> Vec<State> {
    if ok {
        vec![st]
    } else {
        Vec::new()
    }
}

fn sides(clause: &Clause, direction: Direction) -> (&ArrowPat, &ArrowPat) {
    match direction {
        Direction::Forward => (&clause.lhs, &clause.rhs),
        Direction::Backward => (&clause.rhs, &clause.lhs),
    }
}

/// Every assignment under which the axiom's source side (the left side when
/// going forward) equals `term` and all side conditions hold.
pub fn match_all(
    axiom: &RewriteAxiom,
    direction: Direction,
    term: &ArrowTerm,
    theory: TheoryKind,
) -> Vec<Match> {
    let matcher = Matcher { theory };
    let mut out: Vec<Match> = Vec::new();
    for (ci, clause) in axiom.clauses.iter().enumerate() {
        let (from, _) = sides(clause, direction);
        let start = State {
            asg: Assignment::default(),
            pending: Vec::new(),
        };
        for st in matcher.match_arrow(from, term, start) {
            for resolved in matcher.resolve(st, &clause.conditions) {
                let m = Match {
                    clause: ci,
                    assignment: resolved.asg,
                };
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
    }
    out
}

pub fn match_axiom(
    axiom: &RewriteAxiom,
    direction: Direction,
    term: &ArrowTerm,
    theory: TheoryKind,
) -> Option<Match> {
    match_all(axiom, direction, term, theory).into_iter().next()
}

/// The instantiated other side of the clause, for a match found by
/// [`match_all`].
pub fn instantiate_other_side(
    axiom: &RewriteAxiom,
    direction: Direction,
    m: &Match,
    theory: TheoryKind,
) -> Result<ArrowTerm, InstantiateError> {
    let (_, to) = sides(&axiom.clauses[m.clause], direction);
    Matcher { theory }.instantiate(to, &m.assignment)
}

/// All distinct results of rewriting the subterm at `path` with the axiom.
/// Only results with the subterm's endpoints are kept.
pub fn apply_axiom_all(
    term: &ArrowTerm,
    axiom: &RewriteAxiom,
    direction: Direction,
    path: &Path,
    theory: TheoryKind,
) -> Result<Vec<ArrowTerm>, ApplyError> {
    let sub = term
        .subterm(path)
        .map_err(|_| ApplyError::BadPosition(path.clone()))?;
    let endpoints = sub.infer_type(theory).map_err(ApplyError::IllTyped)?;
    let mut out = Vec::new();
    for m in match_all(axiom, direction, sub, theory) {
        let Ok(replacement) = instantiate_other_side(axiom, direction, &m, theory) else {
            continue;
        };
        if replacement.infer_type(theory).ok().as_ref() != Some(&endpoints) {
            continue;
        }
        let rewritten = term
            .replace(path, replacement)
            .map_err(|_| ApplyError::BadPosition(path.clone()))?;
        if !out.contains(&rewritten) {
            out.push(rewritten);
        }
    }
    if out.is_empty() {
        return Err(ApplyError::NoMatch {
            axiom: axiom.name,
            direction,
            path: path.clone(),
        });
    }
    Ok(out)
}

/// Rewrites the subterm at `path` using the first available match.
pub fn apply_axiom(
    term: &ArrowTerm,
    axiom: &RewriteAxiom,
    direction: Direction,
    path: &Path,
    theory: TheoryKind,
) -> Result<ArrowTerm, ApplyError> {
    apply_axiom_all(term, axiom, direction, path, theory).map(|mut v| v.swap_remove(0))
}

/// Instantiates one side of a clause directly from an assignment.
pub fn instantiate_side(
    clause: &Clause,
    side: Direction,
    asg: &Assignment,
    theory: TheoryKind,
) -> Result<ArrowTerm, InstantiateError> {
    let p = match side {
        Direction::Forward => &clause.lhs,
        Direction::Backward => &clause.rhs,
    };
    Matcher { theory }.instantiate(p, asg)
}
