//! Two independent scalar pairs (`s1`,`t1`) and (`s2`,`t2`) closing into a
//! direct sum of two four-dimensional unitary algebras, with the coupled
//! (diagonal) subalgebras in between.

use super::{coupled, rad_sqrt, ratio, Blueprint, ClassSpec, EdgeSpec, ModelName, MultipletSpec, NodeSpec};
use crate::boson::Species;
use crate::HalfInt;

pub(super) fn blueprint() -> Blueprint {
    let s1 = Species::scalar("s1");
    let t1 = Species::scalar("t1");
    let s2 = Species::scalar("s2");
    let t2 = Species::scalar("t2");
    // First copy: g1..g4; second copy: g5..g8.
    let g1 = coupled(&s1, &s1, 0, 0);
    let g2 = coupled(&s1, &t1, 0, 0);
    let g3 = coupled(&t1, &s1, 0, 0);
    let g4 = coupled(&t1, &t1, 0, 0);
    let g5 = coupled(&s2, &s2, 0, 0);
    let g6 = coupled(&s2, &t2, 0, 0);
    let g7 = coupled(&t2, &s2, 0, 0);
    let g8 = coupled(&t2, &t2, 0, 0);

    let n1 = g1.add(&g4);
    let n2 = g5.add(&g8);
    let n12 = n1.add(&n2);
    let twist1 = g1.sub(&g4);
    let twist2 = g5.sub(&g8);
    let twist12 = twist1.add(&twist2);
    let plus12 = g2.add(&g6);
    let minus12 = g3.add(&g7);
    let zero12 = twist12.scale(&ratio(1, 2));

    Blueprint {
        name: ModelName::U2U2,
        species: vec![s1, t1, s2, t2],
        generators: vec![
            ("g1".into(), g1.clone()),
            ("g2".into(), g2.clone()),
            ("g3".into(), g3.clone()),
            ("g4".into(), g4.clone()),
            ("g5".into(), g5.clone()),
            ("g6".into(), g6.clone()),
            ("g7".into(), g7.clone()),
            ("g8".into(), g8.clone()),
        ],
        radical: vec![("g1+g4".into(), n1.clone()), ("g5+g8".into(), n2.clone())],
        levi_dim: 6,
        tensor_host_is_levi: false,
        nodes: vec![
            NodeSpec {
                name: "u1(2)+u2(2)",
                label: "(N1,N2)",
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
                ],
            },
            NodeSpec {
                name: "u1(1)+u2(1)",
                label: "(n1,n2)",
                semisimple: false,
                sheet: false,
                elements: vec![("g1+g4".into(), n1.clone()), ("g5+g8".into(), n2.clone())],
            },
            NodeSpec {
                name: "u12(2)",
                label: "N12",
                semisimple: false,
                sheet: false,
                elements: vec![
                    ("g1+g4+g5+g8".into(), n12.clone()),
                    ("g1-g4+g5-g8".into(), twist12.clone()),
                    ("g2+g6".into(), plus12.clone()),
                    ("g3+g7".into(), minus12.clone()),
                ],
            },
            NodeSpec {
                name: "su1(2)+su2(2)",
                label: "(j1,j2)",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g1-g4".into(), twist1.clone()),
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                    ("g5-g8".into(), twist2.clone()),
                    ("g6".into(), g6.clone()),
                    ("g7".into(), g7.clone()),
                ],
            },
            NodeSpec {
                name: "su12(2)",
                label: "j12",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g1-g4+g5-g8".into(), twist12.clone()),
                    ("g2+g6".into(), plus12.clone()),
                    ("g3+g7".into(), minus12.clone()),
                ],
            },
            NodeSpec {
                name: "so1(2)+so2(2)",
                label: "(m1,m2)",
                semisimple: false,
                sheet: true,
                elements: vec![
                    ("g1-g4".into(), twist1.clone()),
                    ("g5-g8".into(), twist2.clone()),
                ],
            },
            NodeSpec {
                name: "so12(2)",
                label: "m12",
                semisimple: false,
                sheet: true,
                elements: vec![("g1-g4+g5-g8".into(), twist12.clone())],
            },
            NodeSpec {
                name: "u12(1)",
                label: "n12",
                semisimple: false,
                sheet: false,
                elements: vec![("g1+g4+g5+g8".into(), n12.clone())],
            },
        ],
        edges: vec![
            EdgeSpec {
                parent: "u1(2)+u2(2)",
                child: "u1(1)+u2(1)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u1(2)+u2(2)",
                child: "u12(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u1(2)+u2(2)",
                child: "su1(2)+su2(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u1(1)+u2(1)",
                child: "u12(1)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u12(2)",
                child: "su12(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u12(2)",
                child: "u12(1)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su1(2)+su2(2)",
                child: "so1(2)+so2(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su1(2)+su2(2)",
                child: "su12(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "so1(2)+so2(2)",
                child: "so12(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su12(2)",
                child: "so12(2)",
                excluded: false,
                witness: None,
            },
        ],
        classes: vec![ClassSpec {
            name: "J12",
            node: Some("su12(2)"),
            expected_wdd: vec![0, 2, 0],
            plus: plus12.clone(),
            minus: minus12.clone(),
            zero: zero12.clone(),
        }],
        multiplets: vec![
            MultipletSpec {
                name: "number_scalar_1",
                class: "J12",
                weight: HalfInt::from_int(0),
                components: vec![n1],
            },
            MultipletSpec {
                name: "number_scalar_2",
                class: "J12",
                weight: HalfInt::from_int(0),
                components: vec![n2],
            },
            MultipletSpec {
                name: "adjoint_vector",
                class: "J12",
                weight: HalfInt::from_int(1),
                components: vec![
                    minus12.scale(&rad_sqrt(1, 2)),
                    zero12,
                    plus12.scale(&rad_sqrt(1, 2)).neg(),
                ],
            },
            MultipletSpec {
                name: "difference_vector",
                class: "J12",
                weight: HalfInt::from_int(1),
                components: vec![
                    g3.sub(&g7).scale(&rad_sqrt(1, 2)),
                    twist1.sub(&twist2).scale(&ratio(1, 2)),
                    g2.sub(&g6).scale(&rad_sqrt(1, 2)).neg(),
                ],
            },
        ],
    }
}
