//! Spherical multiplet decomposition of adjoint actions.
//!
//! A [`JSet`] is an embedded angular-momentum algebra in physics
//! normalization: `[J0, J+-] = +-J+-`, `[J+, J-] = 2 J0`. Its adjoint action
//! splits any invariant subspace into multiplets of definite rank; because the
//! J-set need not commute with all symmetries of the model, ranks can be
//! half-integral, in which case generators pair into spinor multiplets.
//!
//! [`decompose_adjoint`] performs the split exactly: the weight spectrum is
//! read off the characteristic polynomial of twice the restricted `ad J0`
//! (whose eigenvalues must be integers), eigenspaces come from exact kernels,
//! highest-weight vectors from the kernel of the raising action on each
//! eigenspace, and components below the top are generated by lowering with
//! the standard normalization
//! `T_{q-1} = [J-, T_q] / sqrt((k+q)(k-q+1))`.
//! Degenerate highest-weight spaces are canonicalized by row reduction over
//! the generator coordinates, so the decomposition is deterministic and tends
//! to land on named generators. Every multiplet is finally re-verified
//! against direct boson commutators, independent of the structure-constant
//! tables used to compute it.

use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::lie::LieAlgebra;
use crate::linalg::{RadMatrix, Solve, Solver};
use crate::scalar::RadicalScalar;
use crate::wdd::{integer_spectrum, Sl2Triple};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::boson::OperatorPoly;

/// An embedded angular-momentum algebra, as coordinates in an ambient
/// [`LieAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JSet {
    pub plus: Vec<RadicalScalar>,
    pub minus: Vec<RadicalScalar>,
    pub zero: Vec<RadicalScalar>,
}

impl JSet {
    pub fn new(plus: Vec<RadicalScalar>, minus: Vec<RadicalScalar>, zero: Vec<RadicalScalar>) -> Self {
        JSet { plus, minus, zero }
    }

    /// The three members as operators.
    pub fn ops(&self, algebra: &LieAlgebra) -> (OperatorPoly, OperatorPoly, OperatorPoly) {
        (
            algebra.op_from_coords(&self.plus),
            algebra.op_from_coords(&self.minus),
            algebra.op_from_coords(&self.zero),
        )
    }

    /// Checks the bracket relations by direct operator commutators.
    pub fn verify(&self, algebra: &LieAlgebra) -> Result<()> {
        let (jp, jm, jz) = self.ops(algebra);
        let two = RadicalScalar::from_int(2);
        let checks = [
            ("[J0, J+] - J+", jz.commutator(&jp).sub(&jp)),
            ("[J0, J-] + J-", jz.commutator(&jm).add(&jm)),
            ("[J+, J-] - 2 J0", jp.commutator(&jm).sub(&jz.scale(&two))),
        ];
        for (relation, residual) in checks {
            if !residual.is_zero() {
                return Err(Error::NotSl2 {
                    relation: relation.to_string(),
                    residual: residual.to_string(),
                });
            }
        }
        Ok(())
    }

    /// The associated sl2 triple `(x, y, h) = (J+, J-, 2 J0)`.
    pub fn triple(&self, algebra: &LieAlgebra) -> Sl2Triple {
        let (jp, jm, jz) = self.ops(algebra);
        Sl2Triple::new(jp, jm, jz.scale(&RadicalScalar::from_int(2)))
    }
}

/// Recovers the J-set that a rank-1 multiplet `(v_{ -1 }, v_0, v_{ +1 })`
/// represents in spherical form (`v_0 = kappa J0`, `v_{+1} = -kappa J+ /
/// sqrt(2)`, `v_{-1} = kappa J- / sqrt(2)`). The overall scale `kappa` is
/// fixed by `[v_{+1}, v_{-1}] = -kappa v_0`; failure of that proportionality
/// or of the final bracket relations is an error.
pub fn jset_from_multiplet(
    algebra: &LieAlgebra,
    components: &[Vec<RadicalScalar>; 3],
) -> Result<JSet> {
    let [v_minus, v_zero, v_plus] = components;
    let c = algebra.bracket_coords(v_plus, v_minus);
    let Some(i) = v_zero.iter().position(|x| !x.is_zero()) else {
        return Err(Error::NotProportional(
            "zero component of the multiplet vanishes".to_string(),
        ));
    };
    let kappa = c[i].mul(&v_zero[i].inverse()?).neg();
    for (ci, zi) in c.iter().zip(v_zero) {
        if !ci.add(&kappa.mul(zi)).is_zero() {
            return Err(Error::NotProportional(format!(
                "[v+1, v-1] is not proportional to v0 (offset {})",
                algebra
                    .op_from_coords(&c)
                    .add(&algebra.op_from_coords(v_zero).scale(&kappa))
            )));
        }
    }
    if kappa.is_zero() {
        return Err(Error::NotProportional(
            "[v+1, v-1] vanishes; no scale can be extracted".to_string(),
        ));
    }
    let scale = kappa.inverse()?;
    let rt2 = RadicalScalar::sqrt_int(2).unwrap();
    let stretch = rt2.mul(&scale);
    let jset = JSet::new(
        v_plus.iter().map(|x| x.mul(&stretch).neg()).collect(),
        v_minus.iter().map(|x| x.mul(&stretch)).collect(),
        v_zero.iter().map(|x| x.mul(&scale)).collect(),
    );
    jset.verify(algebra)?;
    Ok(jset)
}

/// A rank-`k` multiplet of algebra elements, components stored from
/// `q = -k` to `q = +k` as ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMultiplet {
    weight: HalfInt,
    components: Vec<Vec<RadicalScalar>>,
}

impl TensorMultiplet {
    pub fn new(weight: HalfInt, components: Vec<Vec<RadicalScalar>>) -> Result<Self> {
        if components.len() != weight.multiplicity() {
            return Err(Error::ComponentCount {
                k: weight.to_string(),
                expected: weight.multiplicity(),
                got: components.len(),
            });
        }
        Ok(TensorMultiplet { weight, components })
    }

    pub fn weight(&self) -> HalfInt {
        self.weight
    }

    /// True for half-integral rank (components that close only back into
    /// integral ranks, pairing generators two by two).
    pub fn is_spinor(&self) -> bool {
        !self.weight.is_integer()
    }

    pub fn components(&self) -> &[Vec<RadicalScalar>] {
        &self.components
    }

    /// The component at projection `q`.
    pub fn component(&self, q: HalfInt) -> &Vec<RadicalScalar> {
        assert!(
            (q + self.weight).is_integer() && q.abs() <= self.weight,
            "projection {} invalid for rank {}",
            q,
            self.weight
        );
        &self.components[((q + self.weight).two() / 2) as usize]
    }

    pub fn operators(&self, algebra: &LieAlgebra) -> Vec<OperatorPoly> {
        self.components
            .iter()
            .map(|c| algebra.op_from_coords(c))
            .collect()
    }
}

/// `sqrt((k + q)(k - q + 1))`: the lowering normalization from `q` to `q-1`.
fn lowering_norm(k: HalfInt, q: HalfInt) -> RadicalScalar {
    let a = (k + q).as_integer().expect("k + q integral") as u64;
    let b = ((k - q).as_integer().expect("k - q integral") + 1) as u64;
    RadicalScalar::sqrt_int(a * b).unwrap()
}

/// Splits an invariant subspace into multiplets under the adjoint action of
/// a J-set. `span` is a list of ambient coordinate vectors; the full algebra
/// is [`LieAlgebra::unit_coords`]. Multiplets are returned in descending rank
/// order, canonicalized within degenerate highest-weight spaces.
pub fn decompose_adjoint(
    algebra: &LieAlgebra,
    jset: &JSet,
    span: &[Vec<RadicalScalar>],
) -> Result<Vec<TensorMultiplet>> {
    jset.verify(algebra)?;
    let d = span.len();
    let basis_matrix = RadMatrix::from_columns(span.to_vec());
    let solver = Solver::new(basis_matrix.clone())?;
    let restrict = |ambient_ad: &RadMatrix| -> Result<RadMatrix> {
        let mut m = RadMatrix::zeros(d, d);
        for (a, v) in span.iter().enumerate() {
            let w = ambient_ad.mul_vec(v);
            match solver.solve(&w) {
                Solve::Solution(c) => {
                    for (b, cb) in c.into_iter().enumerate() {
                        m.set(b, a, cb);
                    }
                }
                Solve::Inconsistent { .. } => {
                    return Err(Error::NotInSpan(
                        algebra.op_from_coords(&w).to_string(),
                    ));
                }
            }
        }
        Ok(m)
    };
    let a_zero = restrict(&algebra.ad_matrix(&jset.zero))?;
    let a_plus = restrict(&algebra.ad_matrix(&jset.plus))?;
    let ambient_minus = algebra.ad_matrix(&jset.minus);
    restrict(&ambient_minus)?;

    // Weight spectrum: eigenvalues of 2 ad_J0 restricted must be integers.
    let doubled = integer_spectrum(&a_zero.scale(&RadicalScalar::from_int(2)))?;
    let mut weights: Vec<(i64, usize)> = Vec::new();
    for v in doubled {
        match weights.last_mut() {
            Some((w, mult)) if *w == v => *mult += 1,
            _ => weights.push((v, 1)),
        }
    }

    let eigenspace = |&(two_q, mult): &(i64, usize)| -> Result<(i64, Vec<Vec<RadicalScalar>>)> {
        let q = RadicalScalar::from_ratio(two_q, 2);
        let mut shifted = a_zero.clone();
        for i in 0..d {
            let v = shifted.get(i, i).sub(&q);
            shifted.set(i, i, v);
        }
        let kernel = shifted.nullspace()?;
        if kernel.len() != mult {
            return Err(Error::NotDiagonalizable(format!(
                "weight {} eigenspace has dimension {}, algebraic multiplicity {}",
                HalfInt::from_two(two_q as i32),
                kernel.len(),
                mult
            )));
        }
        Ok((two_q, kernel))
    };
    #[cfg(feature = "parallel")]
    let eigen: Result<Vec<_>> = weights.par_iter().map(eigenspace).collect();
    #[cfg(not(feature = "parallel"))]
    let eigen: Result<Vec<_>> = weights.iter().map(eigenspace).collect();
    let eigen = eigen?;

    let mut multiplets = Vec::new();
    for (two_q, kernel) in &eigen {
        if *two_q < 0 {
            continue;
        }
        let k = HalfInt::from_two(*two_q as i32);
        // Highest-weight vectors: the raising action must vanish.
        let vq = RadMatrix::from_columns(kernel.clone());
        let image = a_plus.mul(&vq);
        let coeffs = image.nullspace()?;
        if coeffs.is_empty() {
            continue;
        }
        let hw_rows: Vec<Vec<RadicalScalar>> = coeffs
            .iter()
            .map(|alpha| basis_matrix.mul_vec(&vq.mul_vec(alpha)))
            .collect();
        let canonical = RadMatrix::from_rows(hw_rows).row_space_basis()?;
        for top in canonical {
            let mut components = vec![top];
            let mut q = k;
            while q > -k {
                let prev = components.last().unwrap();
                let lowered = ambient_minus.mul_vec(prev);
                let norm = lowering_norm(k, q).inverse()?;
                components.push(lowered.iter().map(|x| x.mul(&norm)).collect());
                q = q - HalfInt::from_two(2);
            }
            let under = ambient_minus.mul_vec(components.last().unwrap());
            if under.iter().any(|x| !x.is_zero()) {
                return Err(Error::NotDiagonalizable(format!(
                    "lowering below the bottom of a rank-{k} multiplet is nonzero: {}",
                    algebra.op_from_coords(&under)
                )));
            }
            components.reverse();
            multiplets.push(TensorMultiplet::new(k, components)?);
        }
    }

    let covered: usize = multiplets.iter().map(|m| m.weight.multiplicity()).sum();
    if covered != d {
        return Err(Error::NotDiagonalizable(format!(
            "multiplets cover {covered} of {d} dimensions"
        )));
    }
    multiplets.sort_by(|a, b| b.weight.cmp(&a.weight));
    for m in &multiplets {
        verify_tensor(algebra, jset, m)?;
    }
    Ok(multiplets)
}

/// Verifies a multiplet against direct boson commutators (independent of the
/// structure-constant tables).
pub fn verify_tensor(algebra: &LieAlgebra, jset: &JSet, m: &TensorMultiplet) -> Result<()> {
    let (jp, jm, jz) = jset.ops(algebra);
    verify_components(&jp, &jm, &jz, m.weight, &m.operators(algebra))
}

/// Checks the defining relations of a rank-`k` multiplet of operators:
/// `[J0, T_q] = q T_q`, `[J+-, T_q] = sqrt((k -+ q)(k +- q + 1)) T_{q +- 1}`.
pub fn verify_components(
    j_plus: &OperatorPoly,
    j_minus: &OperatorPoly,
    j_zero: &OperatorPoly,
    weight: HalfInt,
    components: &[OperatorPoly],
) -> Result<()> {
    if components.len() != weight.multiplicity() {
        return Err(Error::ComponentCount {
            k: weight.to_string(),
            expected: weight.multiplicity(),
            got: components.len(),
        });
    }
    let fail = |relation: &str, residual: &OperatorPoly| {
        Err(Error::CatalogVerification {
            what: format!("rank-{weight} multiplet"),
            detail: format!("{relation} has residual {residual}"),
        })
    };
    for (idx, q) in weight.projections().enumerate() {
        let t = &components[idx];
        let qc = RadicalScalar::from_ratio(q.two() as i64, 2);
        let r = j_zero.commutator(t).sub(&t.scale(&qc));
        if !r.is_zero() {
            return fail(&format!("[J0, T_{}]", q.signed_label()), &r);
        }
        let raised = j_plus.commutator(t);
        let expected = if q < weight {
            components[idx + 1].scale(&lowering_norm(weight, q + HalfInt::from_two(2)))
        } else {
            OperatorPoly::zero()
        };
        let r = raised.sub(&expected);
        if !r.is_zero() {
            return fail(&format!("[J+, T_{}]", q.signed_label()), &r);
        }
        let lowered = j_minus.commutator(t);
        let expected = if q > -weight {
            components[idx - 1].scale(&lowering_norm(weight, q))
        } else {
            OperatorPoly::zero()
        };
        let r = lowered.sub(&expected);
        if !r.is_zero() {
            return fail(&format!("[J-, T_{}]", q.signed_label()), &r);
        }
    }
    Ok(())
}

/// The multiset of ranks in a decomposition, ascending.
pub fn rank_signature(multiplets: &[TensorMultiplet]) -> Vec<HalfInt> {
    let mut ks: Vec<HalfInt> = multiplets.iter().map(|m| m.weight).collect();
    ks.sort();
    ks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boson::{BosonFactor, Species};

    fn bilinear(cre: (&Species, i32), ann: (&Species, i32)) -> OperatorPoly {
        OperatorPoly::from_word(
            &[
                BosonFactor::creation(cre.0, HalfInt::from_int(cre.1)),
                BosonFactor::annihilation(ann.0, HalfInt::from_int(ann.1)),
            ],
            RadicalScalar::one(),
        )
    }

    fn su2() -> LieAlgebra {
        let s = Species::scalar("s");
        let t = Species::scalar("t");
        let k_plus = bilinear((&s, 0), (&t, 0));
        let k_minus = bilinear((&t, 0), (&s, 0));
        let k_zero = bilinear((&s, 0), (&s, 0))
            .sub(&bilinear((&t, 0), (&t, 0)))
            .scale(&RadicalScalar::from_ratio(1, 2));
        LieAlgebra::from_generators(&["K+", "K-", "K0"], vec![k_plus, k_minus, k_zero]).unwrap()
    }

    fn unit(algebra: &LieAlgebra, name: &str) -> Vec<RadicalScalar> {
        algebra.combine(&[(RadicalScalar::one(), name)]).unwrap()
    }

    fn su2_jset(a: &LieAlgebra) -> JSet {
        JSet::new(unit(a, "K+"), unit(a, "K-"), unit(a, "K0"))
    }

    /// All nine vector bilinears, components descending in both slots.
    fn u3_raw() -> LieAlgebra {
        let p = Species::vector("p");
        let mut names = Vec::new();
        let mut ops = Vec::new();
        for mu in [1, 0, -1] {
            for nu in [1, 0, -1] {
                names.push(format!("E({mu},{nu})"));
                ops.push(bilinear((&p, mu), (&p, nu)));
            }
        }
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        LieAlgebra::from_generators(&name_refs, ops).unwrap()
    }

    fn u3_outer_jset(a: &LieAlgebra) -> JSet {
        let half = RadicalScalar::from_ratio(1, 2);
        JSet::new(
            unit(a, "E(1,-1)"),
            unit(a, "E(-1,1)"),
            a.combine(&[(half.clone(), "E(1,1)"), (half.neg(), "E(-1,-1)")])
                .unwrap(),
        )
    }

    fn u3_orbital_jset(a: &LieAlgebra) -> JSet {
        let rt2 = RadicalScalar::sqrt_int(2).unwrap();
        JSet::new(
            a.combine(&[(rt2.clone(), "E(1,0)"), (rt2.clone(), "E(0,-1)")])
                .unwrap(),
            a.combine(&[(rt2.clone(), "E(0,1)"), (rt2.clone(), "E(-1,0)")])
                .unwrap(),
            a.combine(&[(RadicalScalar::one(), "E(1,1)"), (RadicalScalar::one().neg(), "E(-1,-1)")])
                .unwrap(),
        )
    }

    #[test]
    fn jset_verification() {
        let a = su2();
        su2_jset(&a).verify(&a).unwrap();
        let bad = JSet::new(unit(&a, "K+"), unit(&a, "K-"), unit(&a, "K+"));
        assert!(matches!(bad.verify(&a), Err(Error::NotSl2 { .. })));
        let u3 = u3_raw();
        u3_outer_jset(&u3).verify(&u3).unwrap();
        u3_orbital_jset(&u3).verify(&u3).unwrap();
    }

    #[test]
    fn adjoint_of_su2_is_one_vector() {
        let a = su2();
        let ms = decompose_adjoint(&a, &su2_jset(&a), &a.unit_coords()).unwrap();
        assert_eq!(ms.len(), 1);
        let m = &ms[0];
        assert_eq!(m.weight(), HalfInt::from_int(1));
        assert!(!m.is_spinor());
        // Canonical top lands on the first generator; lowering fills in.
        let rt2 = RadicalScalar::sqrt_int(2).unwrap();
        assert_eq!(m.component(HalfInt::from_int(1)), &unit(&a, "K+"));
        assert_eq!(
            m.component(HalfInt::ZERO),
            &a.combine(&[(rt2.neg(), "K0")]).unwrap()
        );
        assert_eq!(
            m.component(HalfInt::from_int(-1)),
            &a.combine(&[(RadicalScalar::one().neg(), "K-")]).unwrap()
        );
    }

    #[test]
    fn orbital_decomposition_of_u3() {
        let a = u3_raw();
        let ms = decompose_adjoint(&a, &u3_orbital_jset(&a), &a.unit_coords()).unwrap();
        let signature = rank_signature(&ms);
        let h = HalfInt::from_int;
        assert_eq!(signature, vec![h(0), h(1), h(2)]);
    }

    #[test]
    fn outer_decomposition_of_u3_contains_spinors() {
        let a = u3_raw();
        let ms = decompose_adjoint(&a, &u3_outer_jset(&a), &a.unit_coords()).unwrap();
        let signature = rank_signature(&ms);
        assert_eq!(
            signature,
            vec![
                HalfInt::ZERO,
                HalfInt::ZERO,
                HalfInt::from_two(1),
                HalfInt::from_two(1),
                HalfInt::from_int(1),
            ]
        );
        let spinors: Vec<&TensorMultiplet> = ms.iter().filter(|m| m.is_spinor()).collect();
        assert_eq!(spinors.len(), 2);
        for sp in &spinors {
            assert_eq!(sp.components().len(), 2);
        }
        // Canonical spinor tops are single raw generators.
        assert_eq!(
            spinors[0].component(HalfInt::from_two(1)),
            &unit(&a, "E(1,0)")
        );
        assert_eq!(
            spinors[1].component(HalfInt::from_two(1)),
            &unit(&a, "E(0,-1)")
        );
    }

    #[test]
    fn multiplet_relations_reject_mangling() {
        let a = su2();
        let jset = su2_jset(&a);
        let ms = decompose_adjoint(&a, &jset, &a.unit_coords()).unwrap();
        let good = &ms[0];
        let mut mangled_components = good.components().to_vec();
        mangled_components[0] = mangled_components[0]
            .iter()
            .map(|c| c.mul(&RadicalScalar::from_int(2)))
            .collect();
        let mangled = TensorMultiplet::new(good.weight(), mangled_components).unwrap();
        assert!(matches!(
            verify_tensor(&a, &jset, &mangled),
            Err(Error::CatalogVerification { .. })
        ));
    }

    #[test]
    fn non_invariant_span_is_rejected() {
        let a = su2();
        let span = vec![unit(&a, "K+")];
        assert!(matches!(
            decompose_adjoint(&a, &su2_jset(&a), &span),
            Err(Error::NotInSpan(_))
        ));
    }

    #[test]
    fn jset_recovery_from_spherical_multiplet() {
        let a = u3_raw();
        let target = u3_outer_jset(&a);
        let inv_rt2 = RadicalScalar::sqrt_int(2).unwrap().inverse().unwrap();
        let scale = |v: &[RadicalScalar], s: &RadicalScalar| -> Vec<RadicalScalar> {
            v.iter().map(|x| x.mul(s)).collect()
        };
        let multiplet = [
            scale(&target.minus, &inv_rt2),
            target.zero.clone(),
            scale(&target.plus, &inv_rt2.neg()),
        ];
        let recovered = jset_from_multiplet(&a, &multiplet).unwrap();
        assert_eq!(recovered, target);
        // Any overall scale is divided back out.
        let three = RadicalScalar::from_int(3);
        let scaled = [
            scale(&multiplet[0], &three),
            scale(&multiplet[1], &three),
            scale(&multiplet[2], &three),
        ];
        assert_eq!(jset_from_multiplet(&a, &scaled).unwrap(), target);
    }

    #[test]
    fn jset_recovery_rejects_non_multiplets() {
        let a = u3_raw();
        let junk = [
            unit(&a, "E(-1,1)"),
            unit(&a, "E(0,0)"),
            unit(&a, "E(1,-1)"),
        ];
        assert!(matches!(
            jset_from_multiplet(&a, &junk),
            Err(Error::NotProportional(_))
        ));
    }
}
