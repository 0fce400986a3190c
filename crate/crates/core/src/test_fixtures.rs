//! Small named algebras used across the test suites: linear quivers A1/A2/A3,
//! A3 with the composite relation killed, and the m-Kronecker quivers.

use crate::quiver::{AlgebraSpec, Arrow, Quiver, RelationTerm};

pub fn a1_spec() -> AlgebraSpec {
    AlgebraSpec {
        quiver: Quiver {
            vertex_count: 1,
            arrows: vec![],
        },
        relations: vec![],
        nilpotency: 2,
    }
}

/// 1 --α--> 2
pub fn a2_spec() -> AlgebraSpec {
    AlgebraSpec {
        quiver: Quiver {
            vertex_count: 2,
            arrows: vec![Arrow {
                name: "a".into(),
                source: 0,
                target: 1,
            }],
        },
        relations: vec![],
        nilpotency: 2,
    }
}

/// 1 --α--> 2 --β--> 3, no relations
pub fn a3_spec() -> AlgebraSpec {
    AlgebraSpec {
        quiver: Quiver {
            vertex_count: 3,
            arrows: vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 1,
                    target: 2,
                },
            ],
        },
        relations: vec![],
        nilpotency: 3,
    }
}

/// 1 --α--> 2 --β--> 3 with βα = 0
pub fn a3_rel_spec() -> AlgebraSpec {
    let mut spec = a3_spec();
    spec.relations = vec![vec![RelationTerm {
        coeff: 1,
        word: vec![1, 0],
    }]];
    spec
}

/// Two vertices with m parallel arrows 1 -> 2.
pub fn kronecker_spec(m: usize) -> AlgebraSpec {
    AlgebraSpec {
        quiver: Quiver {
            vertex_count: 2,
            arrows: (0..m)
                .map(|k| Arrow {
                    name: format!("a{}", k + 1),
                    source: 0,
                    target: 1,
                })
                .collect(),
        },
        relations: vec![],
        nilpotency: 2,
    }
}
