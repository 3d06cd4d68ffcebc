//! Weighted-diagram classification of sl2 subalgebras.
//!
//! A candidate triple `(x, y, h)` is first verified to satisfy the exact sl2
//! relations `[h, x] = 2x`, `[h, y] = -2y`, `[x, y] = h`. The neutral element
//! `h` of a bilinear realization acts on the single-mode space through its
//! defining matrix; its spectrum there is forced to consist of integers, and
//! the ordered differences of the descending spectrum — each necessarily 0, 1
//! or 2 — form the weighted diagram that labels the embedding up to
//! conjugacy.
//!
//! The same diagrams arise combinatorially: every embedding decomposes the
//! defining space into strings ("spin ladders") whose lengths form a
//! partition of its dimension. [`enumerate_classes`] walks candidate spectra
//! directly and [`partition_wdd`] maps partitions to diagrams, giving two
//! independent routes that must agree.
//!
//! Spectra are extracted exactly: the characteristic polynomial (computed by
//! trace recursion) must have integer coefficients, and its roots are found
//! by divisor search with synthetic-division deflation, so a non-integral
//! spectrum is detected rather than approximated.

use std::fmt;

use num::bigint::BigInt;
use num::{ToPrimitive, Zero};

use crate::boson::{FactorKind, OperatorPoly, Species};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::linalg::{charpoly, RadMatrix};
use crate::scalar::RadicalScalar;

/// An sl2 triple of boson polynomials in the convention
/// `[h, x] = 2x`, `[h, y] = -2y`, `[x, y] = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub x: OperatorPoly,
    pub y: OperatorPoly,
    pub h: OperatorPoly,
}

impl Sl2Triple {
    pub fn new(x: OperatorPoly, y: OperatorPoly, h: OperatorPoly) -> Self {
        Sl2Triple { x, y, h }
    }

    /// Checks all three bracket relations exactly.
    pub fn verify(&self) -> Result<()> {
        let checks = [
            ("[h, x] - 2x", self.h.commutator(&self.x).sub(&self.x.scale(&RadicalScalar::from_int(2)))),
            ("[h, y] + 2y", self.h.commutator(&self.y).add(&self.y.scale(&RadicalScalar::from_int(2)))),
            ("[x, y] - h", self.x.commutator(&self.y).sub(&self.h)),
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
}

/// The ordered single-mode basis on which bilinears act: species in model
/// order, components within a species from `+l` down to `-l`.
#[derive(Clone, Debug)]
pub struct DefiningBasis {
    modes: Vec<(Species, HalfInt)>,
}

impl DefiningBasis {
    pub fn new(species: &[Species]) -> Self {
        let mut modes = Vec::new();
        for sp in species {
            let mut projections: Vec<HalfInt> = sp.components().collect();
            projections.reverse();
            for mu in projections {
                modes.push((sp.clone(), mu));
            }
        }
        DefiningBasis { modes }
    }

    pub fn dim(&self) -> usize {
        self.modes.len()
    }

    pub fn modes(&self) -> &[(Species, HalfInt)] {
        &self.modes
    }

    fn index_of(&self, species: &Species, mu: HalfInt) -> Result<usize> {
        self.modes
            .iter()
            .position(|(sp, m)| sp == species && *m == mu)
            .ok_or_else(|| Error::UnknownName {
                kind: "mode",
                name: format!("{}[{}]", species.name(), mu.signed_label()),
            })
    }

    /// The matrix `M` with `op = sum_ij M_ij a'_i a_j`. Errors if `op` is not
    /// a pure bilinear over the basis modes.
    pub fn matrix_of(&self, op: &OperatorPoly) -> Result<RadMatrix> {
        if !op.is_bilinear() {
            return Err(Error::NotBilinear(op.to_string()));
        }
        let mut m = RadMatrix::zeros(self.dim(), self.dim());
        for (mono, c) in op.terms() {
            let [cre, ann] = mono.factors() else {
                unreachable!("bilinear monomial has two factors");
            };
            debug_assert_eq!(cre.kind, FactorKind::Creation);
            let i = self.index_of(&cre.species, cre.mu)?;
            let j = self.index_of(&ann.species, ann.mu)?;
            m.set(i, j, c.clone());
        }
        Ok(m)
    }
}

/// The exact eigenvalue multiset of a matrix whose spectrum is required to be
/// integral, in descending order.
pub fn integer_spectrum(m: &RadMatrix) -> Result<Vec<i64>> {
    let n = m.rows();
    let mut poly: Vec<BigInt> = Vec::with_capacity(n + 1);
    for c in charpoly(m) {
        let Some(r) = c.as_rational() else {
            return Err(Error::NonIntegerSpectrum(format!(
                "characteristic coefficient {c} is irrational"
            )));
        };
        if !r.is_integer() {
            return Err(Error::NonIntegerSpectrum(format!(
                "characteristic coefficient {r} is not an integer"
            )));
        }
        poly.push(r.to_integer());
    }

    let mut roots: Vec<i64> = Vec::new();
    while poly.len() > 1 && poly[0].is_zero() {
        roots.push(0);
        poly.remove(0);
    }
    while poly.len() > 1 {
        let constant = poly[0].to_i64().ok_or_else(|| {
            Error::NonIntegerSpectrum("characteristic constant term exceeds i64".to_string())
        })?;
        let root = candidate_divisors(constant)
            .into_iter()
            .find(|&r| synthetic_division(&poly, r).is_some());
        let Some(r) = root else {
            return Err(Error::NonIntegerSpectrum(format!(
                "no integer root divides constant term {constant}"
            )));
        };
        poly = synthetic_division(&poly, r).expect("checked divisibility");
        roots.push(r);
    }
    roots.sort_unstable_by(|a, b| b.cmp(a));
    Ok(roots)
}

/// Signed divisors of `c` (nonzero), smallest magnitude first.
fn candidate_divisors(c: i64) -> Vec<i64> {
    let c = c.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= c {
        if c % d == 0 {
            small.push(d);
            if d * d != c {
                large.push(c / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small.into_iter().flat_map(|d| [d, -d]).collect()
}

/// Divides `poly` (ascending coefficients) by `(t - r)`; `None` on nonzero
/// remainder.
fn synthetic_division(poly: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let n = poly.len() - 1;
    let mut quotient = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for k in (0..n).rev() {
        carry = &poly[k + 1] + r * &carry;
        quotient[k] = carry.clone();
    }
    let remainder = &poly[0] + r * carry;
    remainder.is_zero().then_some(quotient)
}

/// A weighted diagram: the ordered differences of a descending integral
/// spectrum, each in `{0, 1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wdd {
    labels: Vec<i64>,
}

impl Wdd {
    pub fn from_labels(labels: Vec<i64>) -> Result<Self> {
        if labels.iter().any(|&d| !(0..=2).contains(&d)) {
            return Err(Error::WddLabelOutOfRange(format!("{labels:?}")));
        }
        Ok(Wdd { labels })
    }

    /// Builds the diagram from an eigenvalue multiset.
    pub fn from_spectrum(spectrum: &[i64]) -> Result<Self> {
        let mut sorted = spectrum.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let labels: Vec<i64> = sorted.windows(2).map(|w| w[0] - w[1]).collect();
        Wdd::from_labels(labels).map_err(|_| Error::WddLabelOutOfRange(format!("{sorted:?}")))
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// True when every label is zero (the trivial embedding).
    pub fn is_trivial(&self) -> bool {
        self.labels.iter().all(|&d| d == 0)
    }
}

impl fmt::Display for Wdd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The diagram of a verified triple acting on the given mode basis.
pub fn wdd_of_triple(triple: &Sl2Triple, basis: &DefiningBasis) -> Result<Wdd> {
    triple.verify()?;
    let h = basis.matrix_of(&triple.h)?;
    Wdd::from_spectrum(&integer_spectrum(&h)?)
}

/// All partitions of `n`, parts descending, in reverse-lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// The diagram of the embedding whose defining space splits into strings of
/// the given lengths.
pub fn partition_wdd(partition: &[usize]) -> Result<Wdd> {
    let spectrum = partition_spectrum(partition);
    Wdd::from_spectrum(&spectrum)
}

fn partition_spectrum(partition: &[usize]) -> Vec<i64> {
    let mut spectrum = Vec::new();
    for &part in partition {
        let top = part as i64 - 1;
        let mut v = -top;
        while v <= top {
            spectrum.push(v);
            v += 2;
        }
    }
    spectrum.sort_unstable_by(|a, b| b.cmp(a));
    spectrum
}

/// Enumerates the diagrams of all nontrivial embedding classes in dimension
/// `n` by scanning candidate spectra directly: a balanced descending integer
/// tuple qualifies exactly when it strips into complete strings. The trivial
/// all-zero class (the zero triple) is omitted.
pub fn enumerate_classes(n: usize) -> Result<Vec<Wdd>> {
    let mut spectra = Vec::new();
    descending_tuples(n, n as i64 - 1, 0, 0, &mut Vec::new(), &mut spectra);
    let mut classes = Vec::new();
    for spectrum in spectra {
        if strips_into_strings(&spectrum) {
            let wdd = Wdd::from_spectrum(&spectrum)?;
            if !wdd.is_trivial() {
                classes.push(wdd);
            }
        }
    }
    classes.sort();
    classes.dedup();
    Ok(classes)
}

/// Emits descending zero-sum tuples. The leading entry is non-negative, and
/// later entries never drop below its negative (a value `-v` can only belong
/// to a string topped by at least `v`).
fn descending_tuples(
    len: usize,
    max: i64,
    floor: i64,
    sum: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if len == 0 {
        if sum == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for v in (floor..=max).rev() {
        let next_floor = if prefix.is_empty() { -v } else { floor };
        let rem = len as i64 - 1;
        if sum + v + rem * next_floor > 0 || sum + v + rem * v < 0 {
            continue;
        }
        prefix.push(v);
        descending_tuples(len - 1, v, next_floor, sum + v, prefix, out);
        prefix.pop();
    }
}

/// Greedy check that a descending multiset is a union of complete strings
/// `m, m-2, ..., -m`.
fn strips_into_strings(spectrum: &[i64]) -> bool {
    let mut pool = spectrum.to_vec();
    while let Some(&top) = pool.first() {
        let mut v = top;
        loop {
            let Some(pos) = pool.iter().position(|&x| x == v) else {
                return false;
            };
            pool.remove(pos);
            if v == -top {
                break;
            }
            v -= 2;
        }
    }
    true
}
