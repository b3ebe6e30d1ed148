//! The axiom catalogs.

use std::ops::{Add, Sub};

use crate::arrow::{
    ArrowPat, Clause, Condition, Generator, IdxExpr, ObjExpr, ObjPat, RewriteAxiom, Theory,
    TheoryKind,
};

fn o(v: &'static str) -> ObjPat {
    ObjPat::Var(v)
}

fn a(v: &'static str) -> ArrowPat {
    ArrowPat::Var(v)
}

fn i(v: &'static str) -> IdxExpr {
    IdxExpr::Var(v)
}

fn id(p: ObjPat) -> ArrowPat {
    ArrowPat::Id(p)
}

fn gen(g: Generator, objs: Vec<ObjPat>) -> ArrowPat {
    ArrowPat::Gen(g, objs)
}

fn gamma(x: ObjPat, y: ObjPat) -> ArrowPat {
    gen(Generator::GammaFwd, vec![x, y])
}

fn gamma_inv(x: ObjPat, y: ObjPat) -> ArrowPat {
    gen(Generator::GammaBwd, vec![x, y])
}

fn b(x: ObjPat, y: ObjPat, z: ObjPat) -> ArrowPat {
    gen(Generator::AssocFwd, vec![x, y, z])
}

fn b_inv(x: ObjPat, y: ObjPat, z: ObjPat) -> ArrowPat {
    gen(Generator::AssocBwd, vec![x, y, z])
}

fn c(x: ObjPat, y: ObjPat) -> ArrowPat {
    gen(Generator::Sym, vec![x, y])
}

fn source(obj: &'static str, arrow: &'static str) -> Condition {
    Condition::Obj(obj, ObjExpr::Source(arrow))
}

fn target(obj: &'static str, arrow: &'static str) -> Condition {
    Condition::Obj(obj, ObjExpr::Target(arrow))
}

fn axiom(name: &'static str, clauses: Vec<Clause>) -> RewriteAxiom {
    RewriteAxiom { name, clauses }
}

/// `1_B ∘ f = f` and `f ∘ 1_A = f`.
fn cat1() -> RewriteAxiom {
    axiom(
        "cat1",
        vec![
            Clause::new(id(o("B")).compose(a("f")), a("f")).when(target("B", "f")),
            Clause::new(a("f").compose(id(o("A"))), a("f")).when(source("A", "f")),
        ],
    )
}

fn cat2() -> RewriteAxiom {
    axiom(
        "cat2",
        vec![Clause::new(
            a("h").compose(a("g")).compose(a("f")),
            a("h").compose(a("g").compose(a("f"))),
        )],
    )
}

fn bif1_ins() -> RewriteAxiom {
    axiom(
        "bif1",
        vec![Clause::new(
            id(o("A")).ins(i("n"), id(o("B"))),
            id(o("A").ins(i("n"), o("B"))),
        )],
    )
}

/// Both sides of `(f2 ∘ f1) op (g2 ∘ g1) = (f2 op g2) ∘ (f1 op g1)` must be
/// defined, so `f2` follows `f1` and `g2` follows `g1`.
fn composable(clause: Clause) -> Clause {
    clause
        .when(target("M", "f1"))
        .when(source("M", "f2"))
        .when(target("N", "g1"))
        .when(source("N", "g2"))
}

fn bif2_ins() -> RewriteAxiom {
    axiom(
        "bif2",
        vec![composable(Clause::new(
            a("f2")
                .compose(a("f1"))
                .ins(i("n"), a("g2").compose(a("g1"))),
            a("f2")
                .ins(i("n"), a("g2"))
                .compose(a("f1").ins(i("n"), a("g1"))),
        ))],
    )
}

fn bif1_wedge() -> RewriteAxiom {
    axiom(
        "bif1",
        vec![Clause::new(
            id(o("A")).tensor(id(o("B"))),
            id(o("A").wedge(o("B"))),
        )],
    )
}

fn bif2_wedge() -> RewriteAxiom {
    axiom(
        "bif2",
        vec![composable(Clause::new(
            a("f2").compose(a("f1")).tensor(a("g2").compose(a("g1"))),
            a("f2").tensor(a("g2")).compose(a("f1").tensor(a("g1"))),
        ))],
    )
}

/// `(f ◁n g) ◁m h = f ◁n (g ◁k h)` with `k = m - n + 1`, if `n ≤ m < n + |g|`.
fn assoc1() -> RewriteAxiom {
    axiom(
        "assoc1",
        vec![Clause::new(
            a("f").ins(i("n"), a("g")).ins(i("m"), a("h")),
            a("f").ins(i("n"), a("g").ins(i("k"), a("h"))),
        )
        .when(Condition::Idx("k", i("m").sub(i("n")).plus(1)))
        .when(Condition::Idx("m", i("k").add(i("n")).plus(-1)))
        .when(Condition::Le(i("n"), i("m")))
        .when(Condition::Lt(i("m"), i("n").add(IdxExpr::arrow_size("g"))))],
    )
}

/// `(f ◁n g) ◁m h = (f ◁k h) ◁n g` with `k = m - |g| + 1`, if `n + |g| ≤ m`.
fn assoc2() -> RewriteAxiom {
    let g = || IdxExpr::arrow_size("g");
    axiom(
        "assoc2",
        vec![Clause::new(
            a("f").ins(i("n"), a("g")).ins(i("m"), a("h")),
            a("f").ins(i("k"), a("h")).ins(i("n"), a("g")),
        )
        .when(Condition::Idx("k", i("m").sub(g()).plus(1)))
        .when(Condition::Idx("m", i("k").add(g()).plus(-1)))
        .when(Condition::Le(i("n").add(g()), i("m")))],
    )
}

/// `1_∗ ◁1 f = f` and `f ◁n 1_∗ = f`.
fn unit() -> RewriteAxiom {
    axiom(
        "unit",
        vec![
            Clause::new(id(ObjPat::Leaf).ins(IdxExpr::Const(1), a("f")), a("f")),
            Clause::new(a("f").ins(i("n"), id(ObjPat::Leaf)), a("f")).when(Condition::Choose(
                "n",
                IdxExpr::Const(1),
                IdxExpr::arrow_size("f"),
            )),
        ],
    )
}

/// `γ_{B,D} ∘ (f ◁|A| g) = (g ◁1 f) ∘ γ_{A,C}` for `f: A → B`, `g: C → D`.
fn gamma_nat() -> RewriteAxiom {
    axiom(
        "gamma-nat",
        vec![Clause::new(
            gamma(o("B"), o("D")).compose(a("f").ins(IdxExpr::size("A"), a("g"))),
            a("g")
                .ins(IdxExpr::Const(1), a("f"))
                .compose(gamma(o("A"), o("C"))),
        )
        .when(source("A", "f"))
        .when(target("B", "f"))
        .when(source("C", "g"))
        .when(target("D", "g"))],
    )
}

fn gamma_gamma_l() -> RewriteAxiom {
    axiom(
        "gamma-gamma-l",
        vec![Clause::new(
            gamma_inv(o("A"), o("B")).compose(gamma(o("A"), o("B"))),
            id(o("A").ins(IdxExpr::size("A"), o("B"))),
        )],
    )
}

fn gamma_gamma_r() -> RewriteAxiom {
    axiom(
        "gamma-gamma-r",
        vec![Clause::new(
            gamma(o("A"), o("B")).compose(gamma_inv(o("A"), o("B"))),
            id(o("B").ins(IdxExpr::Const(1), o("A"))),
        )],
    )
}

/// `γ_{∗,A} = 1_A` and `γ_{A,∗} = 1_A`.
fn gamma1() -> RewriteAxiom {
    axiom(
        "gamma1",
        vec![
            Clause::new(gamma(ObjPat::Leaf, o("A")), id(o("A"))),
            Clause::new(gamma(o("A"), ObjPat::Leaf), id(o("A"))),
        ],
    )
}

fn hex1() -> RewriteAxiom {
    let n = || IdxExpr::size("A");
    axiom(
        "hex1",
        vec![Clause::new(
            gamma(o("A").ins(n(), o("B")), o("C")),
            gamma(o("A"), o("C"))
                .ins(n(), id(o("B")))
                .compose(id(o("A")).ins(n(), gamma(o("B"), o("C")))),
        )],
    )
}

fn hex1a() -> RewriteAxiom {
    axiom(
        "hex1a",
        vec![Clause::new(
            gamma(o("A").ins(i("n"), o("B")), o("C")),
            gamma(o("A"), o("C")).ins(i("n"), id(o("B"))),
        )
        .when(Condition::Le(IdxExpr::Const(1), i("n")))
        .when(Condition::Lt(i("n"), IdxExpr::size("A")))],
    )
}

fn hex2() -> RewriteAxiom {
    axiom(
        "hex2",
        vec![Clause::new(
            gamma(o("C"), o("A").ins(IdxExpr::Const(1), o("B"))),
            id(o("A"))
                .ins(IdxExpr::Const(1), gamma(o("C"), o("B")))
                .compose(gamma(o("C"), o("A")).ins(IdxExpr::size("C"), id(o("B")))),
        )],
    )
}

/// `γ_{C,A◁nB} = γ_{C,A} ◁k 1_B` with `k = n + |C| - 1`, if `1 < n ≤ |A|`.
fn hex2a() -> RewriteAxiom {
    axiom(
        "hex2a",
        vec![Clause::new(
            gamma(o("C"), o("A").ins(i("n"), o("B"))),
            gamma(o("C"), o("A")).ins(i("k"), id(o("B"))),
        )
        .when(Condition::Idx("k", i("n").add(IdxExpr::size("C")).plus(-1)))
        .when(Condition::Idx("n", i("k").sub(IdxExpr::size("C")).plus(1)))
        .when(Condition::Lt(IdxExpr::Const(1), i("n")))
        .when(Condition::Le(i("n"), IdxExpr::size("A")))],
    )
}

/// `b_{B,D,F} ∘ (f ∧ (g ∧ h)) = ((f ∧ g) ∧ h) ∘ b_{A,C,E}`.
fn b_nat() -> RewriteAxiom {
    axiom(
        "b-nat",
        vec![Clause::new(
            b(o("B"), o("D"), o("F")).compose(a("f").tensor(a("g").tensor(a("h")))),
            a("f")
                .tensor(a("g"))
                .tensor(a("h"))
                .compose(b(o("A"), o("C"), o("E"))),
        )
        .when(source("A", "f"))
        .when(target("B", "f"))
        .when(source("C", "g"))
        .when(target("D", "g"))
        .when(source("E", "h"))
        .when(target("F", "h"))],
    )
}

fn bb_l() -> RewriteAxiom {
    axiom(
        "bb-l",
        vec![Clause::new(
            b_inv(o("A"), o("B"), o("C")).compose(b(o("A"), o("B"), o("C"))),
            id(o("A").wedge(o("B").wedge(o("C")))),
        )],
    )
}

fn bb_r() -> RewriteAxiom {
    axiom(
        "bb-r",
        vec![Clause::new(
            b(o("A"), o("B"), o("C")).compose(b_inv(o("A"), o("B"), o("C"))),
            id(o("A").wedge(o("B")).wedge(o("C"))),
        )],
    )
}

/// The pentagon.
fn b5() -> RewriteAxiom {
    axiom(
        "b5",
        vec![Clause::new(
            b(o("A").wedge(o("B")), o("C"), o("D")).compose(b(
                o("A"),
                o("B"),
                o("C").wedge(o("D")),
            )),
            b(o("A"), o("B"), o("C")).tensor(id(o("D"))).compose(
                b(o("A"), o("B").wedge(o("C")), o("D")).compose(id(o("A")).tensor(b(
                    o("B"),
                    o("C"),
                    o("D"),
                ))),
            ),
        )],
    )
}

/// `c_{B,D} ∘ (f ∧ g) = (g ∧ f) ∘ c_{A,C}`.
fn c_nat() -> RewriteAxiom {
    axiom(
        "c-nat",
        vec![Clause::new(
            c(o("B"), o("D")).compose(a("f").tensor(a("g"))),
            a("g").tensor(a("f")).compose(c(o("A"), o("C"))),
        )
        .when(source("A", "f"))
        .when(target("B", "f"))
        .when(source("C", "g"))
        .when(target("D", "g"))],
    )
}

/// `c_{A∧B,C} = (c_{A,C} ∧ 1_B) ∘ (1_A ∧ c_{B,C})`.
fn c_hex1() -> RewriteAxiom {
    axiom(
        "c-hex1",
        vec![Clause::new(
            c(o("A").wedge(o("B")), o("C")),
            c(o("A"), o("C"))
                .tensor(id(o("B")))
                .compose(id(o("A")).tensor(c(o("B"), o("C")))),
        )],
    )
}

pub fn gamma_theory() -> Theory {
    Theory {
        kind: TheoryKind::Gamma,
        axioms: vec![
            cat1(),
            cat2(),
            bif1_ins(),
            bif2_ins(),
            assoc1(),
            assoc2(),
            unit(),
            gamma_nat(),
            gamma_gamma_l(),
            gamma_gamma_r(),
            gamma1(),
            hex1(),
            hex1a(),
            hex2(),
            hex2a(),
        ],
    }
}

pub fn assoc_theory() -> Theory {
    Theory {
        kind: TheoryKind::Assoc,
        axioms: vec![
            cat1(),
            cat2(),
            bif1_wedge(),
            bif2_wedge(),
            b_nat(),
            bb_l(),
            bb_r(),
            b5(),
        ],
    }
}

pub fn symstrict_theory() -> Theory {
    Theory {
        kind: TheoryKind::SymStrict,
        axioms: vec![
            cat1(),
            cat2(),
            bif1_wedge(),
            bif2_wedge(),
            c_nat(),
            c_hex1(),
        ],
    }
}

pub fn theory(kind: TheoryKind) -> Theory {
    match kind {
        TheoryKind::Gamma => gamma_theory(),
        TheoryKind::Assoc => assoc_theory(),
        TheoryKind::SymStrict => symstrict_theory(),
    }
}
