//! Exact angular-momentum coupling and spherical tensor operators.
//!
//! Clebsch-Gordan coefficients are evaluated in closed form as an exact
//! [`RadicalScalar`]: a rational multiple of the square root of a rational,
//! in the Condon-Shortley phase convention (the highest-weight overlap
//! `<j1 j1 j2 (j-j1) | j j>` is positive). A process-wide cache keyed on the
//! six arguments makes repeated couplings cheap.
//!
//! [`SphericalTensorOp`] bundles the `2k+1` components of a rank-`k` operator
//! multiplet; [`couple`] forms `[A x B]^k_q` by summing operator products
//! against the coupling coefficients. Creation operators form tensors
//! directly; annihilation operators do so after component reversal
//! ([`tilde_tensor`]).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::boson::{tilde, BosonFactor, OperatorPoly, Species};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::scalar::{RadicalScalar, Rational};

fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative argument");
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

fn valid_pair(j: HalfInt, m: HalfInt) -> Result<()> {
    if j.is_negative() || m.abs() > j || !(j - m).is_integer() {
        return Err(Error::DomainError {
            j: j.to_string(),
            m: m.to_string(),
        });
    }
    Ok(())
}

fn triangle_ok(j1: HalfInt, j2: HalfInt, j: HalfInt) -> bool {
    j >= (j1 - j2).abs() && j <= j1 + j2 && (j1 + j2 - j).is_integer()
}

/// The coupling coefficient `<j1 m1 j2 m2 | j m>`, exactly.
///
/// Invalid `(j, m)` pairs are an error; a valid combination outside the
/// selection rules (`m != m1 + m2` or the triangle rule) is exactly zero.
pub fn clebsch_gordan(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    j: HalfInt,
    m: HalfInt,
) -> Result<RadicalScalar> {
    valid_pair(j1, m1)?;
    valid_pair(j2, m2)?;
    valid_pair(j, m)?;
    if m1 + m2 != m || !triangle_ok(j1, j2, j) {
        return Ok(RadicalScalar::zero());
    }

    static CACHE: OnceLock<Mutex<HashMap<[i32; 6], RadicalScalar>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = [j1.two(), m1.two(), j2.two(), m2.two(), j.two(), m.two()];
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }

    let value = racah_closed_form(j1, m1, j2, m2, j, m);
    cache.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

/// Evaluates the closed-form factorial sum. All arguments have already passed
/// the selection rules, so every factorial argument below is a non-negative
/// integer.
fn racah_closed_form(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    j: HalfInt,
    m: HalfInt,
) -> RadicalScalar {
    let int = |x: HalfInt| -> i64 { x.as_integer().expect("integral combination") as i64 };

    // Radicand: (2j+1) times a ratio of factorials.
    let mut numer = BigInt::from(j.two() as i64 + 1);
    for f in [
        int(j1 + j2 - j),
        int(j + j1 - j2),
        int(j + j2 - j1),
        int(j + m),
        int(j - m),
        int(j1 - m1),
        int(j1 + m1),
        int(j2 - m2),
        int(j2 + m2),
    ] {
        numer *= factorial(f);
    }
    let radicand = Rational::new(numer, factorial(int(j1 + j2 + j) + 1));

    // Alternating sum over the contraction index k.
    let k_lo = [0, int(j2 - j - m1), int(j1 + m2 - j)]
        .into_iter()
        .max()
        .unwrap();
    let k_hi = [int(j1 + j2 - j), int(j1 - m1), int(j2 + m2)]
        .into_iter()
        .min()
        .unwrap();
    let mut sum = Rational::zero();
    for k in k_lo..=k_hi {
        let mut denom = factorial(k);
        for f in [
            int(j1 + j2 - j) - k,
            int(j1 - m1) - k,
            int(j2 + m2) - k,
            int(j - j2 + m1) + k,
            int(j - j1 - m2) + k,
        ] {
            denom *= factorial(f);
        }
        let term = Rational::new(BigInt::one(), denom);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }

    if sum.is_zero() {
        return RadicalScalar::zero();
    }
    let magnitude = RadicalScalar::sqrt_rational(&(radicand * (&sum * &sum)))
        .expect("coupling radicand factors over small primes");
    if sum.is_negative() {
        magnitude.neg()
    } else {
        magnitude
    }
}

/// The `2k+1` components of a rank-`k` operator multiplet, stored from
/// `q = -k` up to `q = +k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalTensorOp {
    rank: HalfInt,
    components: Vec<OperatorPoly>,
}

impl SphericalTensorOp {
    /// Wraps components listed from `q = -k` to `q = +k`.
    pub fn new(rank: HalfInt, components: Vec<OperatorPoly>) -> Result<Self> {
        let expected = rank.multiplicity();
        if components.len() != expected {
            return Err(Error::ComponentCount {
                k: rank.to_string(),
                expected,
                got: components.len(),
            });
        }
        Ok(SphericalTensorOp { rank, components })
    }

    pub fn rank(&self) -> HalfInt {
        self.rank
    }

    /// The component at projection `q`.
    pub fn component(&self, q: HalfInt) -> &OperatorPoly {
        assert!(
            (q + self.rank).is_integer() && q.abs() <= self.rank,
            "projection {} invalid for rank {}",
            q,
            self.rank
        );
        let idx = (q + self.rank).two() / 2;
        &self.components[idx as usize]
    }

    /// Components paired with their projections, ascending in `q`.
    pub fn components(&self) -> impl Iterator<Item = (HalfInt, &OperatorPoly)> {
        self.rank.projections().zip(self.components.iter())
    }

    pub fn scale(&self, s: &RadicalScalar) -> Self {
        SphericalTensorOp {
            rank: self.rank,
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }
}

/// Couples two multiplets to total rank `k`:
/// `[A x B]^k_q = sum_{q1+q2=q} <k1 q1 k2 q2 | k q> A_{q1} B_{q2}`.
pub fn couple(a: &SphericalTensorOp, b: &SphericalTensorOp, k: HalfInt) -> Result<SphericalTensorOp> {
    if !triangle_ok(a.rank, b.rank, k) {
        return Err(Error::TriangleError {
            k1: a.rank.to_string(),
            k2: b.rank.to_string(),
            k: k.to_string(),
        });
    }
    let mut components = Vec::with_capacity(k.multiplicity());
    for q in k.projections() {
        let mut acc = OperatorPoly::zero();
        for (q1, a_comp) in a.components() {
            let q2 = q - q1;
            if q2.abs() > b.rank || !(b.rank - q2).is_integer() {
                continue;
            }
            let c = clebsch_gordan(a.rank, q1, b.rank, q2, k, q)?;
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&a_comp.multiply(b.component(q2)).scale(&c));
        }
        components.push(acc);
    }
    SphericalTensorOp::new(k, components)
}

/// The creation operators of a species as a rank-`l` tensor.
pub fn creation_tensor(species: &Species) -> SphericalTensorOp {
    let components = species
        .components()
        .map(|mu| OperatorPoly::from_factor(BosonFactor::creation(species, mu)))
        .collect();
    SphericalTensorOp::new(species.rank(), components).expect("one component per projection")
}

/// The component-reversed annihilation operators of a species as a rank-`l`
/// tensor.
pub fn tilde_tensor(species: &Species) -> SphericalTensorOp {
    let components = species
        .components()
        .map(|mu| {
            let (sign, factor) = tilde(species, mu);
            OperatorPoly::from_word(&[factor], RadicalScalar::from_int(sign))
        })
        .collect();
    SphericalTensorOp::new(species.rank(), components).expect("one component per projection")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(two: i32) -> HalfInt {
        HalfInt::from_two(two)
    }

    fn cg(vals: [i32; 6]) -> RadicalScalar {
        clebsch_gordan(h(vals[0]), h(vals[1]), h(vals[2]), h(vals[3]), h(vals[4]), h(vals[5]))
            .unwrap()
    }

    fn inv_sqrt(n: u64) -> RadicalScalar {
        RadicalScalar::sqrt_int(n).unwrap().inverse().unwrap()
    }

    #[test]
    fn frozen_values() {
        // Spin-half pair to a singlet.
        assert_eq!(cg([1, 1, 1, -1, 0, 0]), inv_sqrt(2));
        assert_eq!(cg([1, -1, 1, 1, 0, 0]), inv_sqrt(2).neg());
        // Two vectors to a scalar.
        assert_eq!(cg([2, 2, 2, -2, 0, 0]), inv_sqrt(3));
        assert_eq!(cg([2, 0, 2, 0, 0, 0]), inv_sqrt(3).neg());
        assert_eq!(cg([2, -2, 2, 2, 0, 0]), inv_sqrt(3));
        // Two vectors to the stretched rank.
        assert_eq!(cg([2, 2, 2, 2, 4, 4]), RadicalScalar::one());
        assert_eq!(
            cg([2, 0, 2, 0, 4, 0]),
            RadicalScalar::sqrt_rational(&Rational::new(2.into(), 3.into())).unwrap()
        );
        assert_eq!(
            cg([2, 2, 2, -2, 4, 0]),
            inv_sqrt(6)
        );
        // Two vectors to a vector (antisymmetric combination).
        assert_eq!(cg([2, 2, 2, 0, 2, 2]), inv_sqrt(2));
        assert_eq!(cg([2, 0, 2, 2, 2, 2]), inv_sqrt(2).neg());
        assert_eq!(cg([2, 0, 2, 0, 2, 0]), RadicalScalar::zero());
    }

    #[test]
    fn selection_rules_give_zero() {
        // Projection mismatch.
        assert!(cg([2, 2, 2, 2, 2, 2]).is_zero());
        assert!(cg([2, 2, 2, 0, 4, 0]).is_zero());
        // Triangle violation.
        assert!(cg([2, 0, 2, 0, 6, 0]).is_zero());
        assert!(cg([1, 1, 1, -1, 4, 0]).is_zero());
    }

    #[test]
    fn domain_errors() {
        // |m| > j.
        assert!(matches!(
            clebsch_gordan(h(1), h(3), h(1), h(-1), h(0), h(0)),
            Err(Error::DomainError { .. })
        ));
        // j - m not an integer.
        assert!(matches!(
            clebsch_gordan(h(2), h(1), h(2), h(0), h(2), h(0)),
            Err(Error::DomainError { .. })
        ));
    }

    #[test]
    fn highest_weight_overlap_positive() {
        // Condon-Shortley: <j1 j1 j2 (j - j1) | j j> > 0 for every reachable j.
        for two_j1 in 0..=4 {
            for two_j2 in 0..=4 {
                let (j1, j2) = (h(two_j1), h(two_j2));
                for j in HalfInt::range_inclusive((j1 - j2).abs(), j1 + j2) {
                    let c = clebsch_gordan(j1, j1, j2, j - j1, j, j).unwrap();
                    let f = c.to_float();
                    assert!(f.im == 0.0 && f.re > 0.0, "j1={j1} j2={j2} j={j}: {c}");
                }
            }
        }
    }

    /// Independent characterization: the raising recursion
    /// `sqrt((j-m)(j+m+1)) C(m1, m2; j, m+1)
    ///    = sqrt((j1-m1+1)(j1+m1)) C(m1-1, m2; j, m)
    ///    + sqrt((j2-m2+1)(j2+m2)) C(m1, m2-1; j, m)`
    /// together with per-column normalization and the sign convention pins
    /// every coefficient uniquely, so checking all three against the closed
    /// form is a full cross-validation.
    #[test]
    fn raising_recursion() {
        let root =
            |a: i32, b: i32| RadicalScalar::sqrt_int((a as u64) * (b as u64) / 4).unwrap();
        for two_j1 in 0..=4 {
            for two_j2 in 0..=4 {
                let (j1, j2) = (h(two_j1), h(two_j2));
                for j in HalfInt::range_inclusive((j1 - j2).abs(), j1 + j2) {
                    for m in HalfInt::range_inclusive(-j, j - HalfInt::from_int(1)) {
                        for m1 in HalfInt::range_inclusive(-j1, j1) {
                            let m2 = m + HalfInt::from_int(1) - m1;
                            if m2.abs() > j2 || !(j2 - m2).is_integer() {
                                continue;
                            }
                            let lhs = root((j - m).two(), (j + m).two() + 2)
                                .mul(&clebsch_gordan(j1, m1, j2, m2, j, m + HalfInt::from_int(1)).unwrap());
                            let mut rhs = RadicalScalar::zero();
                            if m1 > -j1 {
                                rhs = rhs.add(
                                    &root((j1 - m1).two() + 2, (j1 + m1).two()).mul(
                                        &clebsch_gordan(j1, m1 - HalfInt::from_int(1), j2, m2, j, m)
                                            .unwrap(),
                                    ),
                                );
                            }
                            if m2 > -j2 {
                                rhs = rhs.add(
                                    &root((j2 - m2).two() + 2, (j2 + m2).two()).mul(
                                        &clebsch_gordan(j1, m1, j2, m2 - HalfInt::from_int(1), j, m)
                                            .unwrap(),
                                    ),
                                );
                            }
                            assert_eq!(lhs, rhs, "j1={j1} j2={j2} j={j} m={m} m1={m1}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        // Rows: sum over (m1, m2) of C(j,m) C(j',m) = delta_{jj'}.
        for two_j1 in 0..=6 {
            for two_j2 in 0..=6 {
                let (j1, j2) = (h(two_j1), h(two_j2));
                let lo = (j1 - j2).abs();
                let hi = j1 + j2;
                for j in HalfInt::range_inclusive(lo, hi) {
                    for jp in HalfInt::range_inclusive(lo, hi) {
                        for m in HalfInt::range_inclusive(-j.min(jp), j.min(jp)) {
                            let mut acc = RadicalScalar::zero();
                            for m1 in HalfInt::range_inclusive(-j1, j1) {
                                let m2 = m - m1;
                                if m2.abs() > j2 || !(j2 - m2).is_integer() {
                                    continue;
                                }
                                acc = acc.add(
                                    &clebsch_gordan(j1, m1, j2, m2, j, m)
                                        .unwrap()
                                        .mul(&clebsch_gordan(j1, m1, j2, m2, jp, m).unwrap()),
                                );
                            }
                            let expected = if j == jp {
                                RadicalScalar::one()
                            } else {
                                RadicalScalar::zero()
                            };
                            assert_eq!(acc, expected, "j1={j1} j2={j2} j={j} j'={jp} m={m}");
                        }
                    }
                }
            }
        }
    }

    fn p() -> Species {
        Species::vector("p")
    }

    fn number(sp: &Species, m: i32) -> OperatorPoly {
        let mu = HalfInt::from_int(m);
        OperatorPoly::from_word(
            &[
                BosonFactor::creation(sp, mu),
                BosonFactor::annihilation(sp, mu),
            ],
            RadicalScalar::one(),
        )
    }

    #[test]
    fn scalar_coupling_gives_total_number() {
        // sqrt(3) [p' x p~]^0_0 = n[+1] + n[0] + n[-1].
        let t = couple(&creation_tensor(&p()), &tilde_tensor(&p()), HalfInt::ZERO).unwrap();
        let total = number(&p(), 1).add(&number(&p(), 0)).add(&number(&p(), -1));
        assert_eq!(
            t.component(HalfInt::ZERO)
                .scale(&RadicalScalar::sqrt_int(3).unwrap()),
            total
        );
    }

    #[test]
    fn vector_coupling_gives_weight_operator() {
        // sqrt(2) [p' x p~]^1_0 = n[+1] - n[-1].
        let t = couple(
            &creation_tensor(&p()),
            &tilde_tensor(&p()),
            HalfInt::from_int(1),
        )
        .unwrap();
        assert_eq!(
            t.component(HalfInt::ZERO)
                .scale(&RadicalScalar::sqrt_int(2).unwrap()),
            number(&p(), 1).sub(&number(&p(), -1))
        );
    }

    #[test]
    fn spinor_pair_couples_to_quadrupole_combination() {
        // With the spinor pair (q = -1/2, +1/2) given by
        //   lower = (p'[0] p[+1] - p'[-1] p[0]) / sqrt(2)
        //   upper = -(p'[+1] p[0] + p'[0] p[-1]) / sqrt(2)
        // the scalar self-coupling is -(sqrt(2)/4)(n[+1] + n[-1] - 2 n[0]).
        let sp = p();
        let cre = |m: i32| BosonFactor::creation(&sp, HalfInt::from_int(m));
        let ann = |m: i32| BosonFactor::annihilation(&sp, HalfInt::from_int(m));
        let half_inv_sqrt2 = inv_sqrt(2);
        let lower = OperatorPoly::from_word(&[cre(0), ann(1)], RadicalScalar::one())
            .sub(&OperatorPoly::from_word(&[cre(-1), ann(0)], RadicalScalar::one()))
            .scale(&half_inv_sqrt2);
        let upper = OperatorPoly::from_word(&[cre(1), ann(0)], RadicalScalar::one())
            .add(&OperatorPoly::from_word(&[cre(0), ann(-1)], RadicalScalar::one()))
            .scale(&half_inv_sqrt2)
            .neg();
        let spinor =
            SphericalTensorOp::new(HalfInt::from_two(1), vec![lower, upper]).unwrap();
        let coupled = couple(&spinor, &spinor, HalfInt::ZERO).unwrap();
        let expected = number(&sp, 1)
            .add(&number(&sp, -1))
            .sub(&number(&sp, 0).scale(&RadicalScalar::from_int(2)))
            .scale(&inv_sqrt(2).scale_rational(&Rational::new(1.into(), 2.into())))
            .neg();
        assert_eq!(coupled.component(HalfInt::ZERO), &expected);
    }

    #[test]
    fn component_count_enforced() {
        assert!(matches!(
            SphericalTensorOp::new(HalfInt::from_int(1), vec![OperatorPoly::zero()]),
            Err(Error::ComponentCount { expected: 3, got: 1, .. })
        ));
    }

    #[test]
    fn triangle_error_on_impossible_rank() {
        let a = creation_tensor(&p());
        let b = tilde_tensor(&p());
        assert!(matches!(
            couple(&a, &b, HalfInt::from_int(3)),
            Err(Error::TriangleError { .. })
        ));
    }
}
