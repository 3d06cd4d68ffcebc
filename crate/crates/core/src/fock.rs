//! Numerical cross-checks on finite occupation-number (Fock) sectors:
//! basis enumeration, matrix elements of number-conserving operators, and a
//! self-contained complex Hermitian eigensolver.
//!
//! Everything upstream of this module is exact; here operators become
//! floating-point matrices on the `N`-boson sector so that Casimir spectra
//! and degeneracy patterns can be checked against closed forms.

use num::complex::Complex64;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::boson::{BosonFactor, FactorKind, OperatorPoly, Species};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::wdd::DefiningBasis;

/// The `N`-boson occupation basis over a model's defining modes.
///
/// States are occupation vectors in defining-mode order (first mode most
/// significant), enumerated in descending lexicographic order; the dimension
/// is the number of weak compositions of `N` into `modes` parts.
pub struct FockBasis {
    modes: Vec<(Species, HalfInt)>,
    states: Vec<Vec<u32>>,
    total: u32,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl FockBasis {
    pub fn new(defining: &DefiningBasis, total: u32) -> Self {
        let modes: Vec<(Species, HalfInt)> = defining.modes().to_vec();
        let states = compositions(total, modes.len());
        FockBasis { modes, states, total }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn states(&self) -> &[Vec<u32>] {
        &self.states
    }

    /// Position of an occupation vector in the enumeration.
    pub fn index_of_state(&self, occupation: &[u32]) -> Option<usize> {
        self.states.iter().position(|s| s == occupation)
    }

    /// Display form of one state, e.g. `|2,0,1,0>`.
    pub fn state_label(&self, index: usize) -> String {
        let inner: Vec<String> = self.states[index].iter().map(|n| n.to_string()).collect();
        format!("|{}>", inner.join(","))
    }

    fn mode_index(&self, factor: &BosonFactor) -> Result<usize> {
        self.modes
            .iter()
            .position(|(species, mu)| *species == factor.species && *mu == factor.mu)
            .ok_or_else(|| Error::UnknownName {
                kind: "boson mode",
                name: factor.to_string(),
            })
    }

    /// Applies a number-conserving operator to basis state `j`, returning
    /// the amplitudes of the result over the whole sector.
    fn apply_to_state(&self, op: &OperatorPoly, j: usize) -> Result<Vec<Complex64>> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.len()];
        for (monomial, coeff) in op.terms() {
            let mut occupation = self.states[j].clone();
            let mut amplitude = 1.0_f64;
            let mut annihilated = false;
            // Normal-ordered words act right-to-left on kets.
            for factor in monomial.factors().iter().rev() {
                let m = self.mode_index(factor)?;
                match factor.kind {
                    FactorKind::Annihilation => {
                        if occupation[m] == 0 {
                            annihilated = true;
                            break;
                        }
                        amplitude *= f64::from(occupation[m]).sqrt();
                        occupation[m] -= 1;
                    }
                    FactorKind::Creation => {
                        amplitude *= f64::from(occupation[m] + 1).sqrt();
                        occupation[m] += 1;
                    }
                }
            }
            if annihilated {
                continue;
            }
            let i = self
                .index_of_state(&occupation)
                .expect("number-conserving monomial stays in the sector");
            out[i] += coeff.to_float() * amplitude;
        }
        Ok(out)
    }
}

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    fn from_columns(columns: Vec<Vec<Complex64>>) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut out = ComplexMatrix::zeros(rows, cols);
        for (c, column) in columns.iter().enumerate() {
            for (r, v) in column.iter().enumerate() {
                out.set(r, c, *v);
            }
        }
        out
    }

    /// Largest `|a_ij - conj(a_ji)|` over all entries (zero for an exactly
    /// Hermitian matrix). Requires a square matrix.
    pub fn hermiticity_defect(&self) -> f64 {
        assert_eq!(self.rows, self.cols, "hermiticity needs a square matrix");
        let mut defect = 0.0_f64;
        for r in 0..self.rows {
            for c in 0..self.cols {
                defect = defect.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        defect
    }

    /// Row-major text export: a `rows cols` header line, then one line per
    /// row with each entry as a `re im` pair.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let entries: Vec<String> = (0..self.cols)
                .map(|c| {
                    let v = self.get(r, c);
                    format!("{} {}", v.re, v.im)
                })
                .collect();
            out.push_str(&entries.join(" "));
            out.push('\n');
        }
        out
    }
}

fn check_number_conserving(op: &OperatorPoly) -> Result<()> {
    if !op.conserves_number() {
        return Err(Error::NotNumberConserving(op.to_string()));
    }
    Ok(())
}

/// Matrix of a number-conserving operator on a Fock sector, built column by
/// column (in parallel when the `parallel` feature is enabled).
pub fn fock_matrix(basis: &FockBasis, op: &OperatorPoly) -> Result<ComplexMatrix> {
    check_number_conserving(op)?;
    #[cfg(feature = "parallel")]
    let columns: Result<Vec<Vec<Complex64>>> = (0..basis.len())
        .into_par_iter()
        .map(|j| basis.apply_to_state(op, j))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let columns: Result<Vec<Vec<Complex64>>> =
        (0..basis.len()).map(|j| basis.apply_to_state(op, j)).collect();
    Ok(ComplexMatrix::from_columns(columns?))
}

/// Sequential twin of [`fock_matrix`], kept available for comparison
/// regardless of features.
pub fn fock_matrix_seq(basis: &FockBasis, op: &OperatorPoly) -> Result<ComplexMatrix> {
    check_number_conserving(op)?;
    let columns: Result<Vec<Vec<Complex64>>> =
        (0..basis.len()).map(|j| basis.apply_to_state(op, j)).collect();
    Ok(ComplexMatrix::from_columns(columns?))
}

const HERMITICITY_TOL: f64 = 1e-10;
const CONVERGENCE_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let mut sum = 0.0_f64;
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if r != c {
                sum += a.get(r, c).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Real eigenvalues of a Hermitian matrix, ascending, via cyclic two-sided
/// rotations (each step annihilates one off-diagonal pair exactly;
/// convergence is reached when the off-diagonal Frobenius norm drops below
/// tolerance).
pub fn diagonalize(matrix: &ComplexMatrix) -> Result<Vec<f64>> {
    assert_eq!(matrix.rows(), matrix.cols(), "eigensolver needs a square matrix");
    let defect = matrix.hermiticity_defect();
    if defect > HERMITICITY_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let n = matrix.rows();
    let mut a = matrix.clone();
    // Symmetrize away the sub-tolerance defect so rotations act on exactly
    // Hermitian data.
    for r in 0..n {
        for c in 0..n {
            let h = (a.get(r, c) + a.get(c, r).conj()) * 0.5;
            a.set(r, c, h);
            a.set(c, r, h.conj());
        }
    }
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off < CONVERGENCE_TOL {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged { sweeps, off });
        }
        sweeps += 1;
        for i in 0..n {
            for j in (i + 1)..n {
                let beta = a.get(i, j);
                if beta.norm() == 0.0 {
                    continue;
                }
                // Absorb the phase of a_ij, then rotate the remaining real
                // symmetric 2x2 block to zero it.
                let phase = Complex64::from_polar(1.0, beta.arg());
                let alpha = a.get(i, i).re;
                let gamma = a.get(j, j).re;
                let theta = 0.5 * (2.0 * beta.norm()).atan2(alpha - gamma);
                let (s, c) = theta.sin_cos();
                for k in 0..n {
                    let aki = a.get(k, i);
                    let akj = a.get(k, j);
                    a.set(k, i, aki * c + akj * phase.conj() * s);
                    a.set(k, j, -aki * s + akj * phase.conj() * c);
                }
                for k in 0..n {
                    let aik = a.get(i, k);
                    let ajk = a.get(j, k);
                    a.set(i, k, aik * c + ajk * phase * s);
                    a.set(j, k, -aik * s + ajk * phase * c);
                }
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|k| a.get(k, k).re).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{cached, ModelName};
    use crate::spectrum::jset_casimir;

    fn basis(name: ModelName, total: u32) -> FockBasis {
        FockBasis::new(&cached(name).unwrap().defining, total)
    }

    fn casimir_eigenvalues(name: ModelName, class: &str, total: u32) -> Vec<f64> {
        let model = cached(name).unwrap();
        let jset = &model.class(class).unwrap().jset;
        let casimir = jset_casimir(&model.algebra, jset).unwrap();
        let sector = FockBasis::new(&model.defining, total);
        let matrix = fock_matrix(&sector, &casimir).unwrap();
        assert!(matrix.hermiticity_defect() < 1e-12);
        diagonalize(&matrix).unwrap()
    }

    /// `l(l+1)` over `l = N, N-2, ...` with degeneracy `2l+1`, ascending.
    fn triplet_tower(total: i64) -> Vec<f64> {
        let mut out = Vec::new();
        let mut l = total;
        while l >= 0 {
            for _ in 0..(2 * l + 1) {
                out.push((l * (l + 1)) as f64);
            }
            l -= 2;
        }
        out.sort_by(|x, y| x.partial_cmp(y).unwrap());
        out
    }

    /// `(k/2)(k/2+1)` with eigenvalue count `(k+1)(N-k+1)` over `k = 0..=N`,
    /// ascending: the doublet modes carry spin k/2, the singlet modes the
    /// remaining bosons.
    fn doublet_tower(total: i64) -> Vec<f64> {
        let mut out = Vec::new();
        for k in 0..=total {
            let w = k as f64 / 2.0;
            for _ in 0..((k + 1) * (total - k + 1)) {
                out.push(w * (w + 1.0));
            }
        }
        out.sort_by(|x, y| x.partial_cmp(y).unwrap());
        out
    }

    fn assert_close(actual: &[f64], expected: &[f64]) {
        assert_eq!(actual.len(), expected.len(), "eigenvalue count");
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < 1e-8, "eigenvalue {a} vs {e}");
        }
    }

    #[test]
    fn basis_enumeration_is_descending_lexicographic() {
        let b = basis(ModelName::U4, 2);
        assert_eq!(b.len(), 10);
        assert_eq!(b.states()[0], vec![2, 0, 0, 0]);
        assert_eq!(b.states()[9], vec![0, 0, 0, 2]);
        for pair in b.states().windows(2) {
            assert!(pair[0] > pair[1]);
        }
        assert_eq!(b.index_of_state(&[1, 0, 1, 0]), Some(2));
        assert_eq!(b.state_label(0), "|2,0,0,0>");
        assert_eq!(basis(ModelName::U3, 2).len(), 6);
        assert_eq!(basis(ModelName::U4, 0).len(), 1);
    }

    #[test]
    fn number_operator_is_total_number_times_identity() {
        let model = cached(ModelName::U4).unwrap();
        let mut number = OperatorPoly::zero();
        for (species, mu) in model.defining.modes() {
            number = number.add(&OperatorPoly::from_word(
                &[
                    BosonFactor::creation(species, *mu),
                    BosonFactor::annihilation(species, *mu),
                ],
                crate::RadicalScalar::one(),
            ));
        }
        let sector = FockBasis::new(&model.defining, 3);
        let matrix = fock_matrix(&sector, &number).unwrap();
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                let expected = if r == c { 3.0 } else { 0.0 };
                assert!((matrix.get(r, c) - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn single_vector_boson_is_a_pure_triplet() {
        assert_close(&casimir_eigenvalues(ModelName::U3, "L", 1), &[2.0, 2.0, 2.0]);
    }

    #[test]
    fn two_vector_bosons_split_into_scalar_and_quadrupole() {
        assert_close(
            &casimir_eigenvalues(ModelName::U3, "L", 2),
            &[0.0, 6.0, 6.0, 6.0, 6.0, 6.0],
        );
    }

    #[test]
    fn orbital_tower_matches_the_closed_form() {
        for total in 0..=4 {
            assert_close(
                &casimir_eigenvalues(ModelName::U3, "L", total),
                &triplet_tower(i64::from(total)),
            );
        }
    }

    #[test]
    fn spinor_doublet_is_visible_at_one_boson() {
        assert_close(
            &casimir_eigenvalues(ModelName::U4, "W", 1),
            &[0.0, 0.0, 0.75, 0.75],
        );
    }

    #[test]
    fn nonstandard_tower_matches_the_closed_form() {
        for total in 0..=3 {
            assert_close(
                &casimir_eigenvalues(ModelName::U4, "W", total),
                &doublet_tower(i64::from(total)),
            );
        }
    }

    #[test]
    fn rejects_operators_that_change_the_boson_number() {
        let model = cached(ModelName::U4).unwrap();
        let (species, mu) = &model.defining.modes()[0];
        let creation = OperatorPoly::from_word(
            &[BosonFactor::creation(species, *mu)],
            crate::RadicalScalar::one(),
        );
        let sector = FockBasis::new(&model.defining, 1);
        assert!(matches!(
            fock_matrix(&sector, &creation),
            Err(Error::NotNumberConserving(_))
        ));
        assert!(matches!(
            fock_matrix_seq(&sector, &creation),
            Err(Error::NotNumberConserving(_))
        ));
    }

    #[test]
    fn parallel_and_sequential_builders_agree_exactly() {
        let model = cached(ModelName::U4).unwrap();
        let jset = &model.class("W").unwrap().jset;
        let casimir = jset_casimir(&model.algebra, jset).unwrap();
        let sector = FockBasis::new(&model.defining, 3);
        let parallel = fock_matrix(&sector, &casimir).unwrap();
        let sequential = fock_matrix_seq(&sector, &casimir).unwrap();
        assert_eq!(parallel, sequential);
    }

    #[test]
    fn diagonalize_handles_trivial_matrices() {
        let mut identity = ComplexMatrix::zeros(3, 3);
        for k in 0..3 {
            identity.set(k, k, Complex64::new(1.0, 0.0));
        }
        assert_close(&diagonalize(&identity).unwrap(), &[1.0, 1.0, 1.0]);

        let mut two = ComplexMatrix::zeros(2, 2);
        two.set(1, 1, Complex64::new(6.0, 0.0));
        assert_close(&diagonalize(&two).unwrap(), &[0.0, 6.0]);
    }

    #[test]
    fn diagonalize_handles_complex_off_diagonals() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 0, Complex64::new(1.0, 0.0));
        m.set(1, 1, Complex64::new(1.0, 0.0));
        m.set(0, 1, Complex64::new(0.0, 1.0));
        m.set(1, 0, Complex64::new(0.0, -1.0));
        assert_close(&diagonalize(&m).unwrap(), &[0.0, 2.0]);
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 1, Complex64::new(0.0, 1.0));
        m.set(1, 0, Complex64::new(0.0, 1.0));
        assert!(matches!(diagonalize(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn text_export_has_header_and_entry_pairs() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 0, Complex64::new(1.0, 0.0));
        m.set(0, 1, Complex64::new(0.0, -0.5));
        assert_eq!(m.to_text(), "2 2\n1 0 0 -0.5\n0 0 0 0\n");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Random small Hermitian matrices with entries built from a lower
        /// triangle.
        fn hermitian() -> impl Strategy<Value = ComplexMatrix> {
            (2usize..=6).prop_flat_map(|n| {
                prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), n * n).prop_map(
                    move |raw| {
                        let mut m = ComplexMatrix::zeros(n, n);
                        for r in 0..n {
                            for c in 0..=r {
                                let (re, im) = raw[r * n + c];
                                if r == c {
                                    m.set(r, c, Complex64::new(re, 0.0));
                                } else {
                                    m.set(r, c, Complex64::new(re, im));
                                    m.set(c, r, Complex64::new(re, -im));
                                }
                            }
                        }
                        m
                    },
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn eigenvalues_preserve_trace_and_frobenius_norm(m in hermitian()) {
                let eigen = diagonalize(&m).unwrap();
                let trace: f64 = (0..m.rows()).map(|k| m.get(k, k).re).sum();
                prop_assert!((eigen.iter().sum::<f64>() - trace).abs() < 1e-8);
                let frob: f64 = (0..m.rows())
                    .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
                    .map(|(r, c)| m.get(r, c).norm_sqr())
                    .sum();
                let spectral: f64 = eigen.iter().map(|e| e * e).sum();
                prop_assert!((frob - spectral).abs() < 1e-7);
            }

            #[test]
            fn eigenvalues_come_out_ascending(m in hermitian()) {
                let eigen = diagonalize(&m).unwrap();
                prop_assert!(eigen.windows(2).all(|p| p[0] <= p[1]));
            }
        }
    }
}
