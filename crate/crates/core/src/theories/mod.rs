//! Axiom catalogs for the three theories and the built-in proof scripts.

mod catalog;

pub use catalog::{assoc_theory, gamma_theory, symstrict_theory, theory};

use thiserror::Error;

use crate::arrow::{
    instantiate_side, verify_chain, Assignment, ChainError, ChainReport, Direction, Endpoints,
    Object, ProofScript, TheoryKind,
};
use crate::coherence::functor_g;
use crate::tree::Tree;

/// Where the first and last terms of a built-in script come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// A chain between two arrows of Γ or of the symmetric theory.
    Derivation,
    /// The chain proves an axiom of Â for the structure that `∧` and `b`
    /// are given in Γ.
    Translation { axiom: &'static str },
    /// The chain brings `G(arrow)` to `(((f ◁4 1) ◁3 1) ◁2 1) ◁1 1`.
    Edge {
        arrow: &'static str,
        kernel: &'static str,
    },
}

/// Two vertices of the Yang-Baxter hexagon that become one object of Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollapseRecord {
    /// Insertion terms and the letter words they stand for.
    pub vertices: [(&'static str, &'static str); 2],
    /// The common value of both terms.
    pub object: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Builtin {
    pub name: &'static str,
    pub source: &'static str,
    pub origin: Origin,
    pub collapse: Option<CollapseRecord>,
}

impl Builtin {
    pub fn script(&self) -> ProofScript {
        ProofScript::parse(self.source).expect("built-in scripts parse")
    }

    pub fn verify(&self) -> Result<ChainReport, ChainError> {
        let script = self.script();
        verify_chain(&script, &theory(script.theory))
    }
}

const PENTAGON_COLLAPSE: CollapseRecord = CollapseRecord {
    vertices: [("((2 @1 2) @3 2)", "bac"), ("((2 @2 2) @1 2)", "bca")],
    object: "((*^*)^(*^*))",
};

const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "pentagon-1",
        source: include_str!("../../proofs/pentagon-1.proof"),
        origin: Origin::Derivation,
        collapse: Some(PENTAGON_COLLAPSE),
    },
    Builtin {
        name: "pentagon-2",
        source: include_str!("../../proofs/pentagon-2.proof"),
        origin: Origin::Derivation,
        collapse: None,
    },
    Builtin {
        name: "yang-baxter",
        source: include_str!("../../proofs/yang-baxter.proof"),
        origin: Origin::Derivation,
        collapse: None,
    },
    Builtin {
        name: "b-nat-in-gamma",
        source: include_str!("../../proofs/b-nat-in-gamma.proof"),
        origin: Origin::Translation { axiom: "b-nat" },
        collapse: None,
    },
    Builtin {
        name: "bb-in-gamma",
        source: include_str!("../../proofs/bb-in-gamma.proof"),
        origin: Origin::Translation { axiom: "bb-l" },
        collapse: None,
    },
    Builtin {
        name: "b5-edge-1",
        source: include_str!("../../proofs/b5-edge-1.proof"),
        origin: Origin::Edge {
            arrow: "b{*,*,(*^*)}",
            kernel: "(g{(*^*),(*^*)} @3 id{(*^*)})",
        },
        collapse: None,
    },
    Builtin {
        name: "b5-edge-2",
        source: include_str!("../../proofs/b5-edge-2.proof"),
        origin: Origin::Edge {
            arrow: "b{(*^*),*,*}",
            kernel: "(g{(*^*),(*^*)} @1 id{(*^*)})",
        },
        collapse: None,
    },
    Builtin {
        name: "b5-edge-3",
        source: include_str!("../../proofs/b5-edge-3.proof"),
        origin: Origin::Edge {
            arrow: "(id{*} ^ b{*,*,*})",
            kernel: "(id{(*^*)} @2 g{(*^*),(*^*)})",
        },
        collapse: None,
    },
    Builtin {
        name: "b5-edge-4",
        source: include_str!("../../proofs/b5-edge-4.proof"),
        origin: Origin::Edge {
            arrow: "b{*,(*^*),*}",
            kernel: "(g{(*^*),(*^*)} @2 id{(*^*)})",
        },
        collapse: None,
    },
    Builtin {
        name: "b5-edge-5",
        source: include_str!("../../proofs/b5-edge-5.proof"),
        origin: Origin::Edge {
            arrow: "(b{*,*,*} ^ id{*})",
            kernel: "(id{(*^*)} @1 g{(*^*),(*^*)})",
        },
        collapse: None,
    },
];

/// Name of the group holding the five pentagon edge reductions.
pub const B5_EDGES: &str = "b5-edges";

pub fn builtin_scripts() -> &'static [Builtin] {
    BUILTINS
}

pub fn builtin(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}

/// A single script, or the members of the `b5-edges` group.
pub fn builtin_group(name: &str) -> Option<Vec<&'static Builtin>> {
    if name == B5_EDGES {
        return Some(
            BUILTINS
                .iter()
                .filter(|b| matches!(b.origin, Origin::Edge { .. }))
                .collect(),
        );
    }
    builtin(name).map(|b| vec![b])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonInstance {
    /// `A, B, C, D`.
    pub objects: [Tree; 4],
    pub lhs: Endpoints,
    pub rhs: Endpoints,
    pub gamma_lhs: Endpoints,
    pub gamma_rhs: Endpoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PentagonError {
    #[error("pentagon instance {objects}: {what}")]
    Mismatch { objects: String, what: String },
}

/// Instantiates both sides of the pentagon at `A = B = C = D = ∗` and at
/// `A = ∗∧∗, B = C = D = ∗`, in Â and after translation to Γ.
pub fn pentagon_endpoints_check() -> Result<Vec<PentagonInstance>, PentagonError> {
    let leaf = Tree::Leaf;
    let instances = [
        [leaf.clone(), leaf.clone(), leaf.clone(), leaf.clone()],
        [Tree::two(), leaf.clone(), leaf.clone(), leaf],
    ];
    let th = assoc_theory();
    let b5 = th.axiom("b5").expect("catalog has b5");
    let mut out = Vec::new();
    for objects in instances {
        let label = objects
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let fail = |what: String| PentagonError::Mismatch {
            objects: label.clone(),
            what,
        };
        let mut asg = Assignment::default();
        for (name, t) in ["A", "B", "C", "D"].into_iter().zip(&objects) {
            asg.objects.insert(name, Object::Tree(t.clone()));
        }
        let side = |dir: Direction| {
            instantiate_side(&b5.clauses[0], dir, &asg, TheoryKind::Assoc)
                .map_err(|e| fail(e.to_string()))
        };
        let (l, r) = (side(Direction::Forward)?, side(Direction::Backward)?);
        let typed = |f: &crate::arrow::ArrowTerm, kind: TheoryKind| {
            f.infer_type(kind).map_err(|e| fail(e.to_string()))
        };
        let (lhs, rhs) = (typed(&l, TheoryKind::Assoc)?, typed(&r, TheoryKind::Assoc)?);
        if lhs != rhs {
            return Err(fail(format!("sides have endpoints {lhs} and {rhs}")));
        }
        let translate = |f| functor_g(f).map_err(|e| fail(e.to_string()));
        let gamma_lhs = typed(&translate(&l)?, TheoryKind::Gamma)?;
        let gamma_rhs = typed(&translate(&r)?, TheoryKind::Gamma)?;
        if gamma_lhs != gamma_rhs || gamma_lhs != lhs {
            return Err(fail(format!(
                "translations have endpoints {gamma_lhs} and {gamma_rhs}"
            )));
        }
        out.push(PentagonInstance {
            objects,
            lhs,
            rhs,
            gamma_lhs,
            gamma_rhs,
        });
    }
    Ok(out)
}
