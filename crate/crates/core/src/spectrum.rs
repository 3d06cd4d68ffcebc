//! Closed-form chain spectra and exact quadratic Casimir operators.
//!
//! The orthogonal reduction chain `so(6) ⊃ so(5) ⊃ so(4) ⊃ so(3)` carries
//! one integer label per link (`N ≥ t ≥ u ≥ w ≥ 0`), and a Hamiltonian built
//! from the four quadratic Casimirs is diagonal in those labels with the
//! standard eigenvalue polynomials. This module implements the label
//! enumeration and energy formula exactly over rationals, and constructs the
//! Casimir operators themselves as exact boson polynomials: an
//! angular-momentum convention for embedded A1 triples (eigenvalues
//! `w(w+1)`), and an ambient-Killing-form normalization for any spanned
//! subalgebra, with the exact scale relating the two.

use num::{BigInt, BigRational};

use crate::boson::OperatorPoly;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{RadMatrix, Solve, Solver};
use crate::scalar::{RadicalScalar, Rational};
use crate::tensor::JSet;

/// Quadratic-Casimir eigenvalue formula of one chain algebra, as a function
/// of that algebra's integer label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CasimirFormula {
    /// `⟨C₂⟩ = N (N + 4)`.
    So6,
    /// `⟨C₂⟩ = t (t + 3)`.
    So5,
    /// `⟨C₂⟩ = u (u + 2)`.
    So4,
    /// `⟨C₂⟩ = w (w + 1)`.
    So3,
}

impl CasimirFormula {
    pub fn all() -> [CasimirFormula; 4] {
        [
            CasimirFormula::So6,
            CasimirFormula::So5,
            CasimirFormula::So4,
            CasimirFormula::So3,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CasimirFormula::So6 => "so(6)",
            CasimirFormula::So5 => "so(5)",
            CasimirFormula::So4 => "so(4)",
            CasimirFormula::So3 => "so(3)",
        }
    }

    /// The eigenvalue on the representation with the given integer label.
    pub fn eigenvalue(&self, label: i64) -> i64 {
        match self {
            CasimirFormula::So6 => label * (label + 4),
            CasimirFormula::So5 => label * (label + 3),
            CasimirFormula::So4 => label * (label + 2),
            CasimirFormula::So3 => label * (label + 1),
        }
    }
}

/// One set of chain labels `(N, t, u, w)`, constrained by
/// `0 ≤ w ≤ u ≤ t ≤ N`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AmncLabels {
    pub n: i64,
    pub t: i64,
    pub u: i64,
    pub w: i64,
}

impl AmncLabels {
    pub fn new(n: i64, t: i64, u: i64, w: i64) -> Result<Self> {
        if !(0 <= w && w <= u && u <= t && t <= n) {
            return Err(Error::InvalidLabel(format!(
                "chain labels must satisfy 0 <= w <= u <= t <= N; got ({n}, {t}, {u}, {w})"
            )));
        }
        Ok(AmncLabels { n, t, u, w })
    }
}

impl std::fmt::Display for AmncLabels {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n, self.t, self.u, self.w)
    }
}

/// Rational coefficients of the chain Hamiltonian
/// `H = α C₂(so(6)) + β C₂(so(5)) + γ C₂(so(4)) + δ C₂(so(3))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HamiltonianSpec {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl Default for HamiltonianSpec {
    fn default() -> Self {
        HamiltonianSpec::from_integers(0, 0, 0, 0)
    }
}

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

impl HamiltonianSpec {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Self {
        HamiltonianSpec { alpha, beta, gamma, delta }
    }

    pub fn from_integers(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Self {
        HamiltonianSpec::new(rat(alpha), rat(beta), rat(gamma), rat(delta))
    }

    /// Coefficientwise sum; energies add correspondingly.
    pub fn add(&self, other: &Self) -> Self {
        HamiltonianSpec {
            alpha: &self.alpha + &other.alpha,
            beta: &self.beta + &other.beta,
            gamma: &self.gamma + &other.gamma,
            delta: &self.delta + &other.delta,
        }
    }

    /// Exact eigenvalue `α N(N+4) + β t(t+3) + γ u(u+2) + δ w(w+1)`.
    pub fn energy(&self, labels: &AmncLabels) -> Rational {
        &self.alpha * rat(CasimirFormula::So6.eigenvalue(labels.n))
            + &self.beta * rat(CasimirFormula::So5.eigenvalue(labels.t))
            + &self.gamma * rat(CasimirFormula::So4.eigenvalue(labels.u))
            + &self.delta * rat(CasimirFormula::So3.eigenvalue(labels.w))
    }
}

/// All label sets with total label `N`, in lexicographic `(t, u, w)` order.
pub fn enumerate_labels(n: i64) -> Result<Vec<AmncLabels>> {
    if n < 0 {
        return Err(Error::InvalidLabel(format!("label N must be non-negative; got {n}")));
    }
    let mut out = Vec::new();
    for t in 0..=n {
        for u in 0..=t {
            for w in 0..=u {
                out.push(AmncLabels { n, t, u, w });
            }
        }
    }
    Ok(out)
}

/// Closed form of the label count, `(N+1)(N+2)(N+3)/6`.
pub fn label_count(n: i64) -> i64 {
    (n + 1) * (n + 2) * (n + 3) / 6
}

/// Sum of `2w + 1` over all label sets with total label `N`.
///
/// For a one-boson four-mode space this differs from the label count (6
/// versus 4 states at `N = 1`): the printed branching does not spell out a
/// degeneracy convention, so both counts are reported and neither is
/// adjusted to match the other.
pub fn multiplicity_weighted_count(n: i64) -> Result<i64> {
    Ok(enumerate_labels(n)?.iter().map(|l| 2 * l.w + 1).sum())
}

/// The energy of every label set with total label `N`, in enumeration order.
pub fn spectrum(h: &HamiltonianSpec, n: i64) -> Result<Vec<(AmncLabels, Rational)>> {
    Ok(enumerate_labels(n)?
        .into_iter()
        .map(|labels| {
            let e = h.energy(&labels);
            (labels, e)
        })
        .collect())
}

/// The angular-momentum-convention quadratic Casimir of an embedded A1
/// triple: `J₀² + (J₊J₋ + J₋J₊)/2`, whose eigenvalues read `w(w+1)`.
///
/// The triple's bracket relations and the exact commutation of the result
/// with all three members are verified symbolically.
pub fn jset_casimir(algebra: &LieAlgebra, jset: &JSet) -> Result<OperatorPoly> {
    jset.verify(algebra)?;
    let (jp, jm, jz) = jset.ops(algebra);
    let half = RadicalScalar::from_ratio(1, 2);
    let casimir = jz
        .multiply(&jz)
        .add(&jp.multiply(&jm).add(&jm.multiply(&jp)).scale(&half));
    for (name, op) in [("J+", &jp), ("J-", &jm), ("J0", &jz)] {
        let residual = casimir.commutator(op);
        if !residual.is_zero() {
            return Err(Error::CatalogVerification {
                what: format!("A1 Casimir commutation with {name}"),
                detail: residual.to_string(),
            });
        }
    }
    Ok(casimir)
}

/// The quadratic Casimir of a spanned subalgebra in the normalization set by
/// the ambient Killing form: `Σ (K⁻¹)_{ab} X_a X_b` with
/// `K_{ab} = κ(X_a, X_b)` the restriction of the ambient form to the span.
///
/// Exact commutation with every spanning element is verified. The restricted
/// form is singular for abelian directions (and the empty span), in which
/// case no such normalization exists.
pub fn killing_casimir(algebra: &LieAlgebra, span: &[Vec<RadicalScalar>]) -> Result<OperatorPoly> {
    let m = span.len();
    if m == 0 {
        return Err(Error::DegenerateForm);
    }
    algebra.verify_subalgebra(span)?;
    let mut gram = RadMatrix::zeros(m, m);
    for a in 0..m {
        for b in 0..m {
            gram.set(a, b, algebra.killing_pairing(&span[a], &span[b]));
        }
    }
    let solver = Solver::new(gram)?;
    if solver.rank() < m {
        return Err(Error::DegenerateForm);
    }
    let mut inverse = Vec::with_capacity(m);
    for b in 0..m {
        let mut unit = vec![RadicalScalar::zero(); m];
        unit[b] = RadicalScalar::one();
        match solver.solve(&unit) {
            Solve::Solution(col) => inverse.push(col),
            Solve::Inconsistent { .. } => return Err(Error::DegenerateForm),
        }
    }
    let ops: Vec<OperatorPoly> = span.iter().map(|x| algebra.op_from_coords(x)).collect();
    let mut casimir = OperatorPoly::zero();
    for (b, col) in inverse.iter().enumerate() {
        for (a, coeff) in col.iter().enumerate() {
            if !coeff.is_zero() {
                casimir = casimir.add(&ops[a].multiply(&ops[b]).scale(coeff));
            }
        }
    }
    for (a, op) in ops.iter().enumerate() {
        let residual = casimir.commutator(op);
        if !residual.is_zero() {
            return Err(Error::CatalogVerification {
                what: format!("Killing-normalized Casimir commutation with span element {a}"),
                detail: residual.to_string(),
            });
        }
    }
    Ok(casimir)
}

/// The Killing-normalized Casimir of an A1 triple together with the exact
/// scale `λ` relating it to the angular-momentum convention:
/// `C_K = λ · (J₀² + (J₊J₋ + J₋J₊)/2)`.
///
/// The scale depends on the embedding (it shrinks as the triple sits more
/// "principally" in the ambient algebra), which is why the two
/// normalizations are kept distinct.
pub fn killing_normalized(
    algebra: &LieAlgebra,
    jset: &JSet,
) -> Result<(OperatorPoly, RadicalScalar)> {
    let jj = jset_casimir(algebra, jset)?;
    let span = [jset.plus.clone(), jset.minus.clone(), jset.zero.clone()];
    let ck = killing_casimir(algebra, &span)?;
    let Some((monomial, coeff)) = jj.terms().find(|(_, c)| !c.is_zero()) else {
        return Err(Error::NotProportional("A1 Casimir vanishes".to_string()));
    };
    let scale = ck.coefficient(monomial).mul(&coeff.inverse()?);
    if !ck.sub(&jj.scale(&scale)).is_zero() {
        return Err(Error::NotProportional(
            "Killing-normalized Casimir is not a multiple of the A1 Casimir".to_string(),
        ));
    }
    Ok((ck, scale))
}
