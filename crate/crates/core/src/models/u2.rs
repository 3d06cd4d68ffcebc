//! Two scalar species (`s`, `t`) closing into the four-dimensional unitary
//! algebra: the algebraic skeleton of a two-level boson system.

use super::{coupled, rad_sqrt, ratio, Blueprint, ClassSpec, EdgeSpec, ModelName, MultipletSpec, NodeSpec};
use crate::boson::Species;
use crate::HalfInt;

pub(super) fn blueprint() -> Blueprint {
    let s = Species::scalar("s");
    let t = Species::scalar("t");
    // All four bilinears are scalar couplings: g1 = s'(dag)s, g2 = s'(dag)t,
    // g3 = t'(dag)s, g4 = t'(dag)t.
    let g1 = coupled(&s, &s, 0, 0);
    let g2 = coupled(&s, &t, 0, 0);
    let g3 = coupled(&t, &s, 0, 0);
    let g4 = coupled(&t, &t, 0, 0);

    let number = g1.add(&g4);
    let twist = g1.sub(&g4);
    let j_zero = twist.scale(&ratio(1, 2));

    Blueprint {
        name: ModelName::U2,
        species: vec![s, t],
        generators: vec![
            ("g1".into(), g1.clone()),
            ("g2".into(), g2.clone()),
            ("g3".into(), g3.clone()),
            ("g4".into(), g4.clone()),
        ],
        radical: vec![("g1+g4".into(), number.clone())],
        levi_dim: 3,
        tensor_host_is_levi: false,
        nodes: vec![
            NodeSpec {
                name: "u(2)",
                label: "N",
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
                name: "u(1)",
                label: "n_t",
                semisimple: false,
                sheet: false,
                elements: vec![("g1+g4".into(), number.clone())],
            },
            NodeSpec {
                name: "su(2)",
                label: "j",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g1-g4".into(), twist.clone()),
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                ],
            },
            NodeSpec {
                name: "so(2)",
                label: "mu",
                semisimple: false,
                sheet: true,
                elements: vec![("g1-g4".into(), twist.clone())],
            },
        ],
        edges: vec![
            EdgeSpec {
                parent: "u(2)",
                child: "u(1)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "u(2)",
                child: "su(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(2)",
                child: "so(2)",
                excluded: false,
                witness: None,
            },
        ],
        classes: vec![ClassSpec {
            name: "J",
            node: Some("su(2)"),
            expected_wdd: vec![2],
            plus: g2.clone(),
            minus: g3.clone(),
            zero: j_zero.clone(),
        }],
        multiplets: vec![
            MultipletSpec {
                name: "number_scalar",
                class: "J",
                weight: HalfInt::from_int(0),
                components: vec![number],
            },
            MultipletSpec {
                name: "adjoint_vector",
                class: "J",
                weight: HalfInt::from_int(1),
                components: vec![
                    g3.scale(&rad_sqrt(1, 2)),
                    j_zero,
                    g2.scale(&rad_sqrt(1, 2)).neg(),
                ],
            },
        ],
    }
}
