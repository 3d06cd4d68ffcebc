//! A single vector species `p` closing into the nine-dimensional unitary
//! algebra: the algebraic core of a three-dimensional oscillator with one
//! orbital degree of freedom.
//!
//! Two inequivalent embedded angular-momentum classes live here: the orbital
//! one (diagram `[2 2]`, built from the rank-1 bilinears) and a non-standard
//! one (diagram `[1 1]`, built from the extreme quadrupole components plus
//! the zero component of the orbital set). With respect to the latter, the
//! algebra contains half-integer-rank (spinor) multiplets.

use super::{coupled, rad_sqrt, Blueprint, ClassSpec, EdgeSpec, ModelName, MultipletSpec, NodeSpec};
use crate::boson::{BosonFactor, OperatorPoly, Species};
use crate::scalar::RadicalScalar;
use crate::HalfInt;

/// Two-creation (or two-annihilation) quadratic with an integer scale.
fn pair(a: BosonFactor, b: BosonFactor, scale: RadicalScalar) -> OperatorPoly {
    OperatorPoly::from_word(&[a, b], scale)
}

pub(super) fn blueprint() -> Blueprint {
    let p = Species::vector("p");
    let g1 = coupled(&p, &p, 0, 0);
    let g2 = coupled(&p, &p, 1, -1);
    let g3 = coupled(&p, &p, 1, 0);
    let g4 = coupled(&p, &p, 1, 1);
    let g5 = coupled(&p, &p, 2, -2);
    let g6 = coupled(&p, &p, 2, -1);
    let g7 = coupled(&p, &p, 2, 0);
    let g8 = coupled(&p, &p, 2, 1);
    let g9 = coupled(&p, &p, 2, 2);

    let sqrt2 = rad_sqrt(2, 1);
    let up = |mu: i32| BosonFactor::creation(&p, HalfInt::from_int(mu));
    let dn = |mu: i32| BosonFactor::annihilation(&p, HalfInt::from_int(mu));

    Blueprint {
        name: ModelName::U3,
        species: vec![p.clone()],
        generators: vec![
            ("g1".into(), g1.clone()),
            ("g2".into(), g2.clone()),
            ("g3".into(), g3.clone()),
            ("g4".into(), g4.clone()),
            ("g5".into(), g5.clone()),
            ("g6".into(), g6.clone()),
            ("g7".into(), g7.clone()),
            ("g8".into(), g8.clone()),
            ("g9".into(), g9.clone()),
        ],
        radical: vec![("g1".into(), g1.clone())],
        levi_dim: 8,
        tensor_host_is_levi: false,
        nodes: vec![
            NodeSpec {
                name: "u(3)",
                label: "N",
                semisimple: false,
                sheet: false,
                elements: vec![
                    ("g1".into(), g1.clone()),
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                    ("g4".into(), g4.clone()),
                    ("g5".into(), g5.clone()),
                    ("g6".into(), g6.clone()),
                    ("g7".into(), g7.clone()),
                    ("g8".into(), g8.clone()),
                    ("g9".into(), g9.clone()),
                ],
            },
            NodeSpec {
                name: "u(2)[1,1]",
                label: "(n,w)",
                semisimple: false,
                sheet: false,
                elements: vec![
                    ("g1".into(), g1.clone()),
                    ("g5".into(), g5.clone()),
                    ("g3".into(), g3.clone()),
                    ("g9".into(), g9.clone()),
                ],
            },
            NodeSpec {
                name: "u(2)[2,2]",
                label: "(n,l)",
                semisimple: false,
                sheet: false,
                elements: vec![
                    ("g1".into(), g1.clone()),
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                    ("g4".into(), g4.clone()),
                ],
            },
            NodeSpec {
                name: "su(3)",
                label: "(p,q)",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                    ("g4".into(), g4.clone()),
                    ("g5".into(), g5.clone()),
                    ("g6".into(), g6.clone()),
                    ("g7".into(), g7.clone()),
                    ("g8".into(), g8.clone()),
                    ("g9".into(), g9.clone()),
                ],
            },
            NodeSpec {
                name: "u(1)",
                label: "n",
                semisimple: false,
                sheet: false,
                elements: vec![("g1".into(), g1.clone())],
            },
            NodeSpec {
                name: "su(2)[1,1]",
                label: "w",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g5".into(), g5.clone()),
                    ("g3".into(), g3.clone()),
                    ("g9".into(), g9.clone()),
                ],
            },
            NodeSpec {
                name: "su(2)[2,2]",
                label: "l",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                    ("g4".into(), g4.clone()),
                ],
            },
            NodeSpec {
                name: "so(2)",
                label: "m",
                semisimple: false,
                sheet: true,
                elements: vec![("g3".into(), g3.clone())],
            },
        ],
        edges: vec![
            EdgeSpec {
                parent: "u(3)",
                child: "u(2)[1,1]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(3)",
                child: "u(2)[2,2]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(3)",
                child: "su(3)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(2)[1,1]",
                child: "su(2)[1,1]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(2)[1,1]",
                child: "u(1)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(2)[2,2]",
                child: "su(2)[2,2]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(2)[2,2]",
                child: "u(1)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(3)",
                child: "su(2)[1,1]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(3)",
                child: "su(2)[2,2]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(2)[1,1]",
                child: "so(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(2)[2,2]",
                child: "so(2)",
                excluded: false,
                witness: None,
            },
        ],
        classes: vec![
            ClassSpec {
                name: "L",
                node: Some("su(2)[2,2]"),
                expected_wdd: vec![2, 2],
                plus: g4.scale(&RadicalScalar::from_int(-2)),
                minus: g2.scale(&RadicalScalar::from_int(2)),
                zero: g3.scale(&sqrt2),
            },
            ClassSpec {
                name: "W",
                node: Some("su(2)[1,1]"),
                expected_wdd: vec![1, 1],
                plus: g9.clone(),
                minus: g5.clone(),
                zero: g3.scale(&rad_sqrt(1, 2)),
            },
        ],
        multiplets: vec![
            MultipletSpec {
                name: "number_scalar",
                class: "L",
                weight: HalfInt::from_int(0),
                components: vec![g1.clone()],
            },
            MultipletSpec {
                name: "orbital_vector",
                class: "L",
                weight: HalfInt::from_int(1),
                components: vec![g2.clone(), g3.clone(), g4.clone()],
            },
            MultipletSpec {
                name: "quadrupole_tensor",
                class: "L",
                weight: HalfInt::from_int(2),
                components: vec![g5.clone(), g6.clone(), g7.clone(), g8.clone(), g9.clone()],
            },
            MultipletSpec {
                name: "w_scalar_number",
                class: "W",
                weight: HalfInt::from_int(0),
                components: vec![g1],
            },
            MultipletSpec {
                name: "w_scalar_quadrupole_zero",
                class: "W",
                weight: HalfInt::from_int(0),
                components: vec![g7],
            },
            MultipletSpec {
                name: "w_adjoint_vector",
                class: "W",
                weight: HalfInt::from_int(1),
                components: vec![
                    g5.scale(&rad_sqrt(1, 2)),
                    g3.scale(&rad_sqrt(1, 2)),
                    g9.scale(&rad_sqrt(1, 2)).neg(),
                ],
            },
            MultipletSpec {
                name: "sp1",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![g6, g4],
            },
            MultipletSpec {
                name: "sp2",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![g2, g8.neg()],
            },
            MultipletSpec {
                name: "pair_creation_vector",
                class: "W",
                weight: HalfInt::from_int(1),
                components: vec![
                    pair(up(-1), up(-1), sqrt2.clone()),
                    pair(up(-1), up(1), RadicalScalar::from_int(2)),
                    pair(up(1), up(1), sqrt2.clone()),
                ],
            },
            MultipletSpec {
                name: "pair_annihilation_vector",
                class: "W",
                weight: HalfInt::from_int(1),
                components: vec![
                    pair(dn(1), dn(1), sqrt2.clone()),
                    pair(dn(1), dn(-1), RadicalScalar::from_int(-2)),
                    pair(dn(-1), dn(-1), sqrt2),
                ],
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build, ModelName};
    use crate::tensor::rank_signature;

    #[test]
    fn builds_and_has_expected_shape() {
        let model = build(ModelName::U3).unwrap();
        assert_eq!(model.algebra.dim(), 9);
        assert_eq!(model.levi.radical.len(), 1);
        assert_eq!(model.levi.levi.len(), 8);
        assert_eq!(model.nodes.len(), 8);
        assert!(model.node("su(3)").unwrap().semisimple);
        assert!(!model.node("so(2)").unwrap().semisimple);
        assert!(model.node("so(2)").unwrap().sheet);
    }

    #[test]
    fn six_chains() {
        let model = build(ModelName::U3).unwrap();
        let chains = model.chains();
        assert_eq!(chains.len(), 6);
        let rendered: Vec<String> = chains.iter().map(|c| c.to_string()).collect();
        assert!(rendered.contains(&"u(3) > su(3) > su(2)[1,1] > so(2)".to_string()));
        assert!(rendered.contains(&"u(3) > u(2)[2,2] > u(1)".to_string()));
    }

    #[test]
    fn class_diagrams() {
        let model = build(ModelName::U3).unwrap();
        assert_eq!(model.class("L").unwrap().wdd.to_string(), "[2 2]");
        assert_eq!(model.class("W").unwrap().wdd.to_string(), "[1 1]");
    }

    #[test]
    fn orbital_signature() {
        let model = build(ModelName::U3).unwrap();
        let signature = rank_signature(&model.decompose("L").unwrap());
        assert_eq!(
            signature,
            vec![HalfInt::from_int(0), HalfInt::from_int(1), HalfInt::from_int(2)]
        );
    }

    #[test]
    fn nonstandard_signature_contains_spinors() {
        let model = build(ModelName::U3).unwrap();
        let signature = rank_signature(&model.decompose("W").unwrap());
        assert_eq!(
            signature,
            vec![
                HalfInt::from_int(0),
                HalfInt::from_int(0),
                HalfInt::from_two(1),
                HalfInt::from_two(1),
                HalfInt::from_int(1),
            ]
        );
    }

    /// Every node off the semisimple sheet (except the one-dimensional
    /// counter) is the central direction plus its on-sheet partner.
    #[test]
    fn two_sheet_structure() {
        let model = build(ModelName::U3).unwrap();
        for (off, on) in [
            ("u(3)", "su(3)"),
            ("u(2)[1,1]", "su(2)[1,1]"),
            ("u(2)[2,2]", "su(2)[2,2]"),
        ] {
            let off_node = model.node(off).unwrap();
            let on_node = model.node(on).unwrap();
            assert_eq!(off_node.dim(), on_node.dim() + 1);
            let central = model.node("u(1)").unwrap().span[0].clone();
            let mut spanned = on_node.span.clone();
            spanned.push(central);
            for v in &off_node.span {
                assert!(model.algebra.span_contains(&spanned, v).unwrap());
            }
        }
    }

    /// The self-coupling of the first spinor doublet gives the scalar
    /// `-(sqrt(3)/2) g7`, and the second gives its negative.
    #[test]
    fn spinor_self_couplings() {
        let model = build(ModelName::U3).unwrap();
        let scale = rad_sqrt(3, 4);
        let g7 = model.generator("g7").unwrap().clone();
        for (name, sign) in [("sp1", -1), ("sp2", 1)] {
            let sp = model
                .multiplets
                .iter()
                .find(|m| m.name == name)
                .unwrap();
            // [sp x sp]^(0)_0 = (sp+ sp- - sp- sp+)/sqrt(2).
            let coupling = sp.components[1]
                .commutator(&sp.components[0])
                .scale(&rad_sqrt(1, 2));
            let expected = g7.scale(&scale).scale(&RadicalScalar::from_int(sign));
            assert!(coupling.sub(&expected).is_zero(), "{name} coupling differs");
        }
    }

    /// The two-boson annihilation vector is, component by component, the
    /// tensor adjoint of the creation vector: `U_(-q) = (-1)^(1-q) V_q^dag`.
    #[test]
    fn pair_vectors_are_mutually_adjoint() {
        let model = build(ModelName::U3).unwrap();
        let v = &model
            .multiplets
            .iter()
            .find(|m| m.name == "pair_creation_vector")
            .unwrap()
            .components;
        let u = &model
            .multiplets
            .iter()
            .find(|m| m.name == "pair_annihilation_vector")
            .unwrap()
            .components;
        for (j, q) in [(0, -1i64), (1, 0), (2, 1)] {
            let phase = RadicalScalar::from_int(if (1 - q) % 2 == 0 { 1 } else { -1 });
            let expected = v[j].adjoint().scale(&phase);
            let got = &u[2 - j];
            assert!(got.sub(&expected).is_zero(), "component {q} differs");
        }
    }
}
