//! Finite-dimensional Lie algebras of boson operators.
//!
//! An algebra is built from a list of named generator polynomials. The
//! constructor verifies linear independence, closes every pairwise commutator
//! over the span (recording exact structure constants), and tabulates the
//! Killing form from the adjoint matrices. All subsequent structure theory —
//! center, derived subalgebra, radical, Levi decomposition — happens in exact
//! coordinates over the generator basis, with subspaces reported in the
//! canonical (reduced-row-echelon) form so results are comparable across
//! construction paths.
//!
//! The radical is computed as the orthogonal complement of the derived
//! subalgebra with respect to the Killing form, and its solvability is
//! re-verified by running the derived series; the Levi factor of a reductive
//! algebra is its derived subalgebra, checked against the radical for
//! directness and for nondegeneracy of the restricted Killing form.

use crate::boson::{Monomial, OperatorPoly};
use crate::error::{Error, Result};
use crate::linalg::{RadMatrix, Solve, Solver};
use crate::scalar::RadicalScalar;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sparse expansion of one commutator over the generator basis.
type SparseVec = Vec<(usize, RadicalScalar)>;

/// A Lie algebra with a fixed ordered basis of boson polynomials.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    basis: Vec<OperatorPoly>,
    monomials: Vec<Monomial>,
    solver: Solver,
    brackets: Vec<Vec<SparseVec>>,
    killing: RadMatrix,
}

/// The two summands of a reductive algebra: its center and its derived
/// (semisimple) part, both as canonical coordinate bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub radical: Vec<Vec<RadicalScalar>>,
    pub levi: Vec<Vec<RadicalScalar>>,
}

impl LieAlgebra {
    /// Builds the algebra spanned by `ops`, verifying independence and
    /// closure. Structure constants and the Killing form are computed here.
    pub fn from_generators(names: &[&str], ops: Vec<OperatorPoly>) -> Result<Self> {
        assert_eq!(names.len(), ops.len(), "one name per generator");
        let n = ops.len();

        let mut monomials: Vec<Monomial> = ops
            .iter()
            .flat_map(|op| op.terms().map(|(m, _)| m.clone()))
            .collect();
        monomials.sort();
        monomials.dedup();

        let coord_matrix = RadMatrix::from_columns(
            ops.iter()
                .map(|op| coords_over(&monomials, op).expect("own monomials cover generator"))
                .collect(),
        );
        for j in 1..=n {
            let prefix = RadMatrix::from_columns((0..j).map(|c| coord_matrix.column(c)).collect());
            if prefix.rank()? < j {
                return Err(Error::LinearlyDependent {
                    name: names[j - 1].to_string(),
                });
            }
        }
        let solver = Solver::new(coord_matrix)?;

        let mut algebra = LieAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            basis: ops,
            monomials,
            solver,
            brackets: vec![vec![Vec::new(); n]; n],
            killing: RadMatrix::zeros(n, n),
        };

        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let expand = |&(i, j): &(usize, usize)| -> Result<(usize, usize, SparseVec)> {
            let comm = algebra.basis[i].commutator(&algebra.basis[j]);
            let coords = algebra.coords_of(&comm).map_err(|e| match e {
                Error::NotInSpan(residual) => Error::NotClosed {
                    left: algebra.names[i].clone(),
                    right: algebra.names[j].clone(),
                    residual,
                },
                other => other,
            })?;
            let sparse: SparseVec = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            Ok((i, j, sparse))
        };
        #[cfg(feature = "parallel")]
        let computed: Result<Vec<_>> = pairs.par_iter().map(expand).collect();
        #[cfg(not(feature = "parallel"))]
        let computed: Result<Vec<_>> = pairs.iter().map(expand).collect();
        for (i, j, sparse) in computed? {
            let negated: SparseVec = sparse.iter().map(|(k, c)| (*k, c.neg())).collect();
            algebra.brackets[i][j] = sparse;
            algebra.brackets[j][i] = negated;
        }

        let ads: Vec<RadMatrix> = (0..n).map(|i| algebra.ad_basis(i)).collect();
        for i in 0..n {
            for j in i..n {
                let mut acc = RadicalScalar::zero();
                for k in 0..n {
                    for l in 0..n {
                        let a = ads[i].get(k, l);
                        if a.is_zero() {
                            continue;
                        }
                        let b = ads[j].get(l, k);
                        if !b.is_zero() {
                            acc = acc.add(&a.mul(b));
                        }
                    }
                }
                algebra.killing.set(i, j, acc.clone());
                algebra.killing.set(j, i, acc);
            }
        }
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_op(&self, i: usize) -> &OperatorPoly {
        &self.basis[i]
    }

    /// Coordinate unit vectors, one per generator: the full algebra as a span.
    pub fn unit_coords(&self) -> Vec<Vec<RadicalScalar>> {
        (0..self.dim())
            .map(|i| {
                let mut v = vec![RadicalScalar::zero(); self.dim()];
                v[i] = RadicalScalar::one();
                v
            })
            .collect()
    }

    /// Position of a named generator.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName {
                kind: "generator",
                name: name.to_string(),
            })
    }

    /// Exact coordinates of `op` over the basis, or the nonzero residual.
    pub fn coords_of(&self, op: &OperatorPoly) -> Result<Vec<RadicalScalar>> {
        let not_in_span = |coords: &[RadicalScalar]| {
            let residual = op.sub(&self.op_from_coords(coords));
            Error::NotInSpan(residual.to_string())
        };
        let Some(b) = coords_over(&self.monomials, op) else {
            // Some monomial of `op` never occurs in the basis: project onto
            // the known monomials, solve for the closest expansion, and
            // report the full residual.
            let projected = restrict_to(&self.monomials, op);
            let coords = match self.solver.solve(&coords_over(&self.monomials, &projected)
                .expect("projection covered")) {
                Solve::Solution(x) => x,
                Solve::Inconsistent { .. } => vec![RadicalScalar::zero(); self.dim()],
            };
            return Err(not_in_span(&coords));
        };
        match self.solver.solve(&b) {
            Solve::Solution(x) => Ok(x),
            Solve::Inconsistent { .. } => {
                Err(not_in_span(&vec![RadicalScalar::zero(); self.dim()]))
            }
        }
    }

    /// The operator with the given coordinates.
    pub fn op_from_coords(&self, coords: &[RadicalScalar]) -> OperatorPoly {
        assert_eq!(coords.len(), self.dim());
        let mut acc = OperatorPoly::zero();
        for (c, op) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&op.scale(c));
            }
        }
        acc
    }

    /// Coordinates of a signed combination of named generators.
    pub fn combine(&self, terms: &[(RadicalScalar, &str)]) -> Result<Vec<RadicalScalar>> {
        let mut coords = vec![RadicalScalar::zero(); self.dim()];
        for (c, name) in terms {
            let i = self.index_of(name)?;
            coords[i] = coords[i].add(c);
        }
        Ok(coords)
    }

    /// `[x, y]` in coordinates, via the structure constants.
    pub fn bracket_coords(&self, x: &[RadicalScalar], y: &[RadicalScalar]) -> Vec<RadicalScalar> {
        let mut out = vec![RadicalScalar::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let factor = xi.mul(yj);
                for (k, c) in &self.brackets[i][j] {
                    out[*k] = out[*k].add(&factor.mul(c));
                }
            }
        }
        out
    }

    /// Adjoint matrix of the `i`-th basis element.
    fn ad_basis(&self, i: usize) -> RadMatrix {
        let n = self.dim();
        let mut m = RadMatrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.brackets[i][j] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Adjoint matrix of an arbitrary element given by coordinates.
    pub fn ad_matrix(&self, x: &[RadicalScalar]) -> RadMatrix {
        assert_eq!(x.len(), self.dim());
        let n = self.dim();
        let mut m = RadMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.brackets[i][j] {
                    let v = m.get(*k, j).add(&xi.mul(c));
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// The Killing form over the generator basis.
    pub fn killing(&self) -> &RadMatrix {
        &self.killing
    }

    /// `K(x, y)` for coordinate vectors.
    pub fn killing_pairing(&self, x: &[RadicalScalar], y: &[RadicalScalar]) -> RadicalScalar {
        let ky = self.killing.mul_vec(y);
        let mut acc = RadicalScalar::zero();
        for (xi, kyi) in x.iter().zip(&ky) {
            if !xi.is_zero() && !kyi.is_zero() {
                acc = acc.add(&xi.mul(kyi));
            }
        }
        acc
    }

    /// Canonical basis of the center (elements commuting with everything).
    pub fn center(&self) -> Result<Vec<Vec<RadicalScalar>>> {
        let n = self.dim();
        // Rows indexed by output pairs (j, k); columns by the element sought.
        let mut constraints = RadMatrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.brackets[i][j] {
                    constraints.set(j * n + k, i, c.clone());
                }
            }
        }
        constraints.nullspace()
    }

    /// Canonical basis of the span of all commutators.
    pub fn derived_subalgebra(&self) -> Result<Vec<Vec<RadicalScalar>>> {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !self.brackets[i][j].is_empty() {
                    let mut row = vec![RadicalScalar::zero(); self.dim()];
                    for (k, c) in &self.brackets[i][j] {
                        row[*k] = c.clone();
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Ok(Vec::new());
        }
        RadMatrix::from_rows(rows).row_space_basis()
    }

    /// Canonical basis of the maximal solvable ideal: the Killing-orthogonal
    /// complement of the derived subalgebra, re-verified to be solvable.
    pub fn radical(&self) -> Result<Vec<Vec<RadicalScalar>>> {
        let derived = self.derived_subalgebra()?;
        let candidate = if derived.is_empty() {
            // Abelian: the whole algebra, in canonical form.
            RadMatrix::identity(self.dim())
                .row_space_basis()?
        } else {
            RadMatrix::from_rows(derived)
                .mul(&self.killing)
                .nullspace()?
        };
        self.verify_solvable(&candidate)?;
        Ok(canonicalize(candidate, self.dim())?)
    }

    fn verify_solvable(&self, span: &[Vec<RadicalScalar>]) -> Result<()> {
        let mut current: Vec<Vec<RadicalScalar>> = span.to_vec();
        for _ in 0..=self.dim() {
            if current.is_empty() {
                return Ok(());
            }
            let mut rows = Vec::new();
            for i in 0..current.len() {
                for j in i + 1..current.len() {
                    let b = self.bracket_coords(&current[i], &current[j]);
                    if b.iter().any(|c| !c.is_zero()) {
                        rows.push(b);
                    }
                }
            }
            let next = if rows.is_empty() {
                Vec::new()
            } else {
                RadMatrix::from_rows(rows).row_space_basis()?
            };
            if next.len() >= current.len() && !current.is_empty() && !next.is_empty() {
                break;
            }
            current = next;
        }
        Err(Error::CatalogVerification {
            what: "radical".to_string(),
            detail: "derived series of the candidate radical does not terminate".to_string(),
        })
    }

    /// Splits a reductive algebra into center plus semisimple derived part.
    ///
    /// Fails with [`Error::NotReductive`] when the radical is larger than the
    /// center, and with [`Error::DegenerateForm`] if the Killing form
    /// restricted to the derived part is singular.
    pub fn levi_decomposition(&self) -> Result<LeviDecomposition> {
        let radical = self.radical()?;
        let center = canonicalize(self.center()?, self.dim())?;
        if radical != center {
            return Err(Error::NotReductive);
        }
        let levi = self.derived_subalgebra()?;
        if radical.len() + levi.len() != self.dim() {
            return Err(Error::NotReductive);
        }
        if !levi.is_empty() {
            let basis = RadMatrix::from_rows(levi.clone());
            let restricted = basis.mul(&self.killing).mul(&basis.transpose());
            if restricted.rank()? != levi.len() {
                return Err(Error::DegenerateForm);
            }
        }
        Ok(LeviDecomposition { radical, levi })
    }

    /// Verifies that a coordinate span closes under the bracket; on failure
    /// reports the offending pair (by position in `span`) and the residual.
    pub fn verify_subalgebra(&self, span: &[Vec<RadicalScalar>]) -> Result<()> {
        if span.is_empty() {
            return Ok(());
        }
        let solver = Solver::new(RadMatrix::from_columns(span.to_vec()))?;
        for i in 0..span.len() {
            for j in i + 1..span.len() {
                let b = self.bracket_coords(&span[i], &span[j]);
                if let Solve::Inconsistent { residual } = solver.solve(&b) {
                    let op = self.op_from_coords(&residual);
                    return Err(Error::NotClosed {
                        left: format!("span[{i}]"),
                        right: format!("span[{j}]"),
                        residual: op.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Whether `x` lies in the span of the given coordinate vectors.
    pub fn span_contains(&self, span: &[Vec<RadicalScalar>], x: &[RadicalScalar]) -> Result<bool> {
        if span.is_empty() {
            return Ok(x.iter().all(RadicalScalar::is_zero));
        }
        let solver = Solver::new(RadMatrix::from_columns(span.to_vec()))?;
        Ok(matches!(solver.solve(x), Solve::Solution(_)))
    }
}

/// Coordinates of `op` over a fixed monomial list; `None` if `op` involves a
/// monomial outside the list.
fn coords_over(monomials: &[Monomial], op: &OperatorPoly) -> Option<Vec<RadicalScalar>> {
    let mut coords = vec![RadicalScalar::zero(); monomials.len()];
    for (m, c) in op.terms() {
        let idx = monomials.binary_search(m).ok()?;
        coords[idx] = c.clone();
    }
    Some(coords)
}

/// The part of `op` supported on the given monomials.
fn restrict_to(monomials: &[Monomial], op: &OperatorPoly) -> OperatorPoly {
    let mut out = OperatorPoly::zero();
    for (m, c) in op.terms() {
        if monomials.binary_search(m).is_ok() {
            out = out.add(&OperatorPoly::from_word(m.factors(), c.clone()));
        }
    }
    out
}

/// Reduces a spanning list to the canonical row-space basis.
fn canonicalize(span: Vec<Vec<RadicalScalar>>, dim: usize) -> Result<Vec<Vec<RadicalScalar>>> {
    if span.is_empty() {
        return Ok(Vec::new());
    }
    debug_assert!(span.iter().all(|v| v.len() == dim));
    RadMatrix::from_rows(span).row_space_basis()
}
