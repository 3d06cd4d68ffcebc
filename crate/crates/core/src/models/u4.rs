//! One scalar species `s` and one vector species `p` closing into the
//! sixteen-dimensional unitary algebra: the algebraic core of a
//! four-dimensional oscillator with mixed scalar/vector structure.
//!
//! Four inequivalent embedded angular-momentum classes live here, one per
//! conjugacy class of embedded triples (diagrams `[2 0 2]`, `[1 0 1]`,
//! `[0 2 0]`, `[2 2 2]`). The orbital class reaches its carrier through two
//! distinct routes (via the eight-dimensional and the six-dimensional
//! nodes); the balanced `[0 2 0]` class reaches its carrier via the
//! ten-dimensional node directly and via the six-dimensional node through
//! an explicit embedded triple, while its inclusion under the
//! two-copy node is cataloged as excluded. With respect to the nonstandard
//! `[1 0 1]` class the algebra decomposes with four half-integer-rank
//! (spinor) doublets.

use super::{
    coupled, rad_sqrt, ratio, Blueprint, ClassSpec, EdgeSpec, ModelName, MultipletSpec, NodeSpec,
};
use crate::boson::{BosonFactor, OperatorPoly, Species};
use crate::scalar::RadicalScalar;
use crate::HalfInt;

/// Single creation/annihilation bilinear with unit coefficient.
fn bil(c: &BosonFactor, a: &BosonFactor) -> OperatorPoly {
    OperatorPoly::from_word(&[c.clone(), a.clone()], RadicalScalar::one())
}

pub(super) fn blueprint() -> Blueprint {
    let s = Species::scalar("s");
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
    let g10 = coupled(&s, &p, 1, -1);
    let g11 = coupled(&s, &p, 1, 0);
    let g12 = coupled(&s, &p, 1, 1);
    let g13 = coupled(&p, &s, 1, -1);
    let g14 = coupled(&p, &s, 1, 0);
    let g15 = coupled(&p, &s, 1, 1);
    let g16 = coupled(&s, &s, 0, 0);

    let sqrt2 = rad_sqrt(2, 1);
    let sqrt3 = rad_sqrt(3, 1);
    let i_unit = RadicalScalar::i();
    let half = ratio(1, 2);
    let two = RadicalScalar::from_int(2);
    let three = RadicalScalar::from_int(3);

    let up = |mu: i32| BosonFactor::creation(&p, HalfInt::from_int(mu));
    let dn = |mu: i32| BosonFactor::annihilation(&p, HalfInt::from_int(mu));
    let su = BosonFactor::creation(&s, HalfInt::from_int(0));
    let sd = BosonFactor::annihilation(&s, HalfInt::from_int(0));

    // Traceless scalar direction complementary to the total number operator.
    let traceless = g16.sub(&g1.scale(&rad_sqrt(1, 3)));
    let ns_minus_n0 = bil(&su, &sd).sub(&bil(&up(0), &dn(0)));

    // Off-diagonal raising/lowering elements completing the ten-dimensional
    // node: each one preserves the difference of the two canonical two-forms
    // on the defining space.
    let m1 = bil(&up(1), &sd).add(&bil(&up(0), &dn(-1)));
    let m2 = bil(&su, &dn(1)).add(&bil(&up(-1), &dn(0)));
    let m3 = bil(&up(1), &dn(0)).sub(&bil(&su, &dn(-1)));
    let m4 = bil(&up(0), &dn(1)).sub(&bil(&up(-1), &sd));

    // Hermitian dipole vector and its anti-hermitian partner.
    let d_m1 = g10.add(&g13).scale(&i_unit);
    let d_0 = g11.add(&g14).scale(&i_unit);
    let d_p1 = g12.add(&g15).scale(&i_unit);
    let dp_m1 = g13.sub(&g10);
    let dp_0 = g14.sub(&g11);
    let dp_p1 = g15.sub(&g12);

    // Balanced class: pairs the scalar mode with the highest vector mode and
    // the zero mode with the lowest.
    let y_plus = g9.sub(&g11);
    let y_minus = g5.add(&g14);
    let y_zero = bil(&su, &sd)
        .add(&bil(&up(1), &dn(1)))
        .sub(&bil(&up(0), &dn(0)))
        .sub(&bil(&up(-1), &dn(-1)))
        .scale(&half);

    // Principal class: neutral element with defining-space weights 3,1,-3,-1.
    let t_plus = g9.scale(&two).add(&m2.scale(&sqrt3));
    let t_minus = g5.scale(&two).add(&m1.scale(&sqrt3));
    let t_zero = bil(&su, &sd)
        .scale(&three)
        .add(&bil(&up(1), &dn(1)))
        .sub(&bil(&up(0), &dn(0)).scale(&three))
        .sub(&bil(&up(-1), &dn(-1)))
        .scale(&half);

    // Embedded triple for the witnessed inclusion: the symmetric half-sum of
    // the orbital and dipole vectors, an adjoint vector of its own triple
    // inside the six-dimensional node.
    let a_m1 = g2.scale(&sqrt2).add(&d_m1).scale(&half);
    let a_0 = g3.scale(&sqrt2).add(&d_0).scale(&half);
    let a_p1 = g4.scale(&sqrt2).add(&d_p1).scale(&half);

    Blueprint {
        name: ModelName::U4,
        species: vec![s.clone(), p.clone()],
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
            ("g10".into(), g10.clone()),
            ("g11".into(), g11.clone()),
            ("g12".into(), g12.clone()),
            ("g13".into(), g13.clone()),
            ("g14".into(), g14.clone()),
            ("g15".into(), g15.clone()),
            ("g16".into(), g16.clone()),
        ],
        radical: vec![(
            "sqrt(3)g1+g16".into(),
            g1.scale(&sqrt3).add(&g16),
        )],
        levi_dim: 15,
        tensor_host_is_levi: true,
        nodes: vec![
            NodeSpec {
                name: "su(4)",
                label: "N",
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
                    ("g10".into(), g10.clone()),
                    ("g11".into(), g11.clone()),
                    ("g12".into(), g12.clone()),
                    ("g13".into(), g13.clone()),
                    ("g14".into(), g14.clone()),
                    ("g15".into(), g15.clone()),
                    ("g16-g1/sqrt(3)".into(), traceless.clone()),
                ],
            },
            NodeSpec {
                name: "so(4)",
                label: "(j1,j2)",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g2".into(), g2.clone()),
                    ("g3".into(), g3.clone()),
                    ("g4".into(), g4.clone()),
                    ("i(g10+g13)".into(), d_m1.clone()),
                    ("i(g11+g14)".into(), d_0.clone()),
                    ("i(g12+g15)".into(), d_p1.clone()),
                ],
            },
            NodeSpec {
                name: "so(5)",
                label: "t",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g5".into(), g5.clone()),
                    ("g3".into(), g3.clone()),
                    ("g9".into(), g9.clone()),
                    ("-g11".into(), g11.neg()),
                    ("g14".into(), g14.clone()),
                    ("n_s-n_0".into(), ns_minus_n0.clone()),
                    ("g15+(g8-g4)/sqrt(2)".into(), m1.clone()),
                    ("g10+(g2-g6)/sqrt(2)".into(), m2.clone()),
                    ("-g12-(g4+g8)/sqrt(2)".into(), m3),
                    ("-g13+(g2+g6)/sqrt(2)".into(), m4),
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
                name: "su(2)+su(2)",
                label: "u",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g5".into(), g5.clone()),
                    ("g3".into(), g3.clone()),
                    ("g9".into(), g9.clone()),
                    ("-g11".into(), g11.neg()),
                    ("g14".into(), g14.clone()),
                    ("n_s-n_0".into(), ns_minus_n0),
                ],
            },
            NodeSpec {
                name: "su(2)[W]",
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
                name: "su(2)[L]",
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
                name: "su(2)[Y]",
                label: "y",
                semisimple: true,
                sheet: true,
                elements: vec![
                    ("g9-g11".into(), y_plus.clone()),
                    ("g5+g14".into(), y_minus.clone()),
                    ("(n_s+n_1-n_0-n_-1)/2".into(), y_zero.clone()),
                ],
            },
            NodeSpec {
                name: "su(2)[T]",
                label: "z",
                semisimple: true,
                sheet: true,
                elements: vec![
                    (
                        "2g9+sqrt(3)(g10+(g2-g6)/sqrt(2))".into(),
                        t_plus.clone(),
                    ),
                    (
                        "2g5+sqrt(3)(g15+(g8-g4)/sqrt(2))".into(),
                        t_minus.clone(),
                    ),
                    ("(3n_s+n_1-3n_0-n_-1)/2".into(), t_zero.clone()),
                ],
            },
        ],
        edges: vec![
            EdgeSpec {
                parent: "su(4)",
                child: "so(4)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(4)",
                child: "so(5)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(4)",
                child: "su(3)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "so(4)",
                child: "su(2)[Y]",
                excluded: false,
                witness: Some([a_m1, a_0, a_p1]),
            },
            EdgeSpec {
                parent: "so(4)",
                child: "su(2)[L]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "so(5)",
                child: "su(2)+su(2)",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "so(5)",
                child: "su(2)[T]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "so(5)",
                child: "su(2)[Y]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(2)+su(2)",
                child: "su(2)[W]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(2)+su(2)",
                child: "su(2)[Y]",
                excluded: true,
                witness: None,
            },
            EdgeSpec {
                parent: "su(3)",
                child: "su(2)[L]",
                excluded: false,
                witness: None,
            },
            EdgeSpec {
                parent: "su(3)",
                child: "su(2)[W]",
                excluded: false,
                witness: None,
            },
        ],
        classes: vec![
            ClassSpec {
                name: "L",
                node: Some("su(2)[L]"),
                expected_wdd: vec![2, 0, 2],
                plus: g4.scale(&RadicalScalar::from_int(-2)),
                minus: g2.scale(&two),
                zero: g3.scale(&sqrt2),
            },
            ClassSpec {
                name: "W",
                node: Some("su(2)[W]"),
                expected_wdd: vec![1, 0, 1],
                plus: g9.clone(),
                minus: g5.clone(),
                zero: g3.scale(&rad_sqrt(1, 2)),
            },
            ClassSpec {
                name: "Y",
                node: Some("su(2)[Y]"),
                expected_wdd: vec![0, 2, 0],
                plus: y_plus,
                minus: y_minus,
                zero: y_zero,
            },
            ClassSpec {
                name: "T",
                node: Some("su(2)[T]"),
                expected_wdd: vec![2, 2, 2],
                plus: t_plus,
                minus: t_minus,
                zero: t_zero,
            },
        ],
        multiplets: vec![
            MultipletSpec {
                name: "traceless_scalar",
                class: "L",
                weight: HalfInt::from_int(0),
                components: vec![traceless],
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
                name: "dipole_vector",
                class: "L",
                weight: HalfInt::from_int(1),
                components: vec![d_m1, d_0, d_p1],
            },
            MultipletSpec {
                name: "dipole_vector_prime",
                class: "L",
                weight: HalfInt::from_int(1),
                components: vec![dp_m1, dp_0, dp_p1],
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
                name: "w_scalar_p_to_s",
                class: "W",
                weight: HalfInt::from_int(0),
                components: vec![g11.clone()],
            },
            MultipletSpec {
                name: "w_scalar_s_to_p",
                class: "W",
                weight: HalfInt::from_int(0),
                components: vec![g14.clone()],
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
                components: vec![g6.clone(), g4.clone()],
            },
            MultipletSpec {
                name: "sp2",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![g2.clone(), g8.neg()],
            },
            MultipletSpec {
                name: "sp3",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![g10.clone(), g12.neg()],
            },
            MultipletSpec {
                name: "sp4",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![g13.neg(), g15.neg()],
            },
            MultipletSpec {
                name: "sp3_prime",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![
                    g2.neg().sub(&g10).sub(&g13),
                    g8.add(&g12).sub(&g15),
                ],
            },
            MultipletSpec {
                name: "sp4_prime",
                class: "W",
                weight: HalfInt::from_two(1),
                components: vec![
                    g6.add(&g10).sub(&g13),
                    g4.sub(&g12).sub(&g15),
                ],
            },
        ],
    }
}
