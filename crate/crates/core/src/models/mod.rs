//! Built-in boson models and their subalgebra lattices.
//!
//! Each model bundles a species list, a catalog of named bilinear generators
//! (`g1`, `g2`, ...), the [`LieAlgebra`] they close into, a curated lattice of
//! subalgebras with directed inclusion edges, the embedded angular-momentum
//! classes used for spherical-tensor analysis, and a set of named operator
//! multiplets. Everything curated is machine-verified during [`build`]: node
//! spans must close, edges must be genuine inclusions (witnessed by an
//! explicit embedded triple where the cataloged class representative lies
//! outside the parent), class triples must satisfy the bracket relations and
//! reproduce their stated diagrams, and multiplets must satisfy the Racah
//! relations componentwise. A transcription error in the curated data is a
//! build failure, never silent data.

mod u2;
mod u2u2;
mod u3;
mod u4;
pub mod reference;

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::angular::{couple, creation_tensor, tilde_tensor};
use crate::boson::{OperatorPoly, Species};
use crate::error::{Error, Result};
use crate::lie::{LeviDecomposition, LieAlgebra};
use crate::linalg::{RadMatrix, Solve, Solver};
use crate::scalar::RadicalScalar;
use crate::tensor::{decompose_adjoint, jset_from_multiplet, verify_components, JSet, TensorMultiplet};
use crate::wdd::{wdd_of_triple, DefiningBasis, Wdd};
use crate::HalfInt;

/// Identifier of a built-in model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelName {
    /// Two scalar species; four generators.
    U2,
    /// Two independent copies of [`ModelName::U2`]; eight generators.
    U2U2,
    /// One vector species; nine generators.
    U3,
    /// One scalar and one vector species; sixteen generators.
    U4,
}

impl ModelName {
    /// Every built-in model, in catalog order.
    pub fn all() -> [ModelName; 4] {
        [ModelName::U2, ModelName::U2U2, ModelName::U3, ModelName::U4]
    }

    /// The canonical lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            ModelName::U2 => "u2",
            ModelName::U2U2 => "u2u2",
            ModelName::U3 => "u3",
            ModelName::U4 => "u4",
        }
    }

    /// Parses a model name.
    pub fn parse(s: &str) -> Result<ModelName> {
        ModelName::all()
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "model",
                name: s.to_string(),
            })
    }
}

impl std::fmt::Display for ModelName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named subalgebra in a model's lattice.
#[derive(Clone, Debug)]
pub struct LatticeNode {
    /// Display name, e.g. `su(2)[11]`.
    pub name: String,
    /// Symbol used for the quantum number this node contributes to a chain.
    pub label: String,
    /// Display expressions of the spanning elements.
    pub element_names: Vec<String>,
    /// Canonical basis of the span, as ambient coordinates.
    pub span: Vec<Vec<RadicalScalar>>,
    /// Whether the node is semisimple (its own Killing form is nondegenerate).
    /// One-dimensional rotation generators are not, even though they sit in
    /// the semisimple sheet.
    pub semisimple: bool,
    /// Whether the node lies inside the semisimple part of the root algebra
    /// (the "semisimple sheet"); nodes off the sheet contain central elements.
    pub sheet: bool,
    /// Diagram of the embedding class, for three-dimensional simple nodes.
    pub wdd: Option<Wdd>,
}

impl LatticeNode {
    /// Dimension of the node's span.
    pub fn dim(&self) -> usize {
        self.span.len()
    }
}

/// A directed inclusion edge between two lattice nodes.
#[derive(Clone, Debug)]
pub struct LatticeEdge {
    pub parent: String,
    pub child: String,
    /// Drawn but not realizable together with the rest of the diagram; kept
    /// out of chain enumeration.
    pub excluded: bool,
    /// Set when the child's cataloged representative lies outside the parent:
    /// an equivalent representative of the same class inside the parent span.
    pub witness: Option<JSet>,
}

/// A maximal inclusion path from the lattice root to a terminal node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Node names along the path.
    pub nodes: Vec<String>,
    /// Quantum-number symbols contributed by each node.
    pub labels: Vec<String>,
}

impl std::fmt::Display for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.nodes.join(" > "))
    }
}

/// A cataloged class of embedded angular-momentum algebras, with one
/// verified representative.
#[derive(Clone, Debug)]
pub struct A1Class {
    /// Short key, e.g. `L` or `W`.
    pub name: String,
    /// Lattice node holding this class, when one exists.
    pub node: Option<String>,
    /// Diagram computed from the representative's defining-space spectrum.
    pub wdd: Wdd,
    /// The representative, as ambient coordinates.
    pub jset: JSet,
}

/// A curated, named multiplet of operators with a definite rank under one of
/// the model's cataloged classes. Components run from lowest to highest
/// projection. The operators need not lie inside the algebra (pair-creation
/// multiplets do not).
#[derive(Clone, Debug)]
pub struct OpMultiplet {
    pub name: String,
    /// Key of the class the ranks refer to.
    pub class: String,
    pub weight: HalfInt,
    pub components: Vec<OperatorPoly>,
}

/// A fully built and verified model.
pub struct Model {
    pub name: ModelName,
    pub species: Vec<Species>,
    pub algebra: LieAlgebra,
    pub defining: DefiningBasis,
    pub levi: LeviDecomposition,
    /// Display expressions spanning the radical.
    pub radical_names: Vec<String>,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<LatticeEdge>,
    pub classes: Vec<A1Class>,
    pub multiplets: Vec<OpMultiplet>,
    /// Span on which spherical-tensor analysis runs (the full algebra, or its
    /// semisimple part when the lattice starts there).
    pub tensor_host: Vec<Vec<RadicalScalar>>,
}

pub(super) struct NodeSpec {
    pub name: &'static str,
    pub label: &'static str,
    pub semisimple: bool,
    pub sheet: bool,
    pub elements: Vec<(String, OperatorPoly)>,
}

pub(super) struct EdgeSpec {
    pub parent: &'static str,
    pub child: &'static str,
    pub excluded: bool,
    /// Rank-1 multiplet (components `v_{-1}, v_0, v_{+1}`) inducing the
    /// witness triple for a class inclusion without a literal span inclusion.
    pub witness: Option<[OperatorPoly; 3]>,
}

pub(super) struct ClassSpec {
    pub name: &'static str,
    pub node: Option<&'static str>,
    pub expected_wdd: Vec<i64>,
    pub plus: OperatorPoly,
    pub minus: OperatorPoly,
    pub zero: OperatorPoly,
}

pub(super) struct MultipletSpec {
    pub name: &'static str,
    pub class: &'static str,
    pub weight: HalfInt,
    pub components: Vec<OperatorPoly>,
}

pub(super) struct Blueprint {
    pub name: ModelName,
    pub species: Vec<Species>,
    pub generators: Vec<(String, OperatorPoly)>,
    /// Curated radical span: display expression and operator.
    pub radical: Vec<(String, OperatorPoly)>,
    pub levi_dim: usize,
    /// Whether tensor analysis runs over the semisimple part only.
    pub tensor_host_is_levi: bool,
    pub nodes: Vec<NodeSpec>,
    pub edges: Vec<EdgeSpec>,
    pub classes: Vec<ClassSpec>,
    pub multiplets: Vec<MultipletSpec>,
}

/// Builds and verifies a model. Any mismatch between the curated catalog and
/// the arithmetic is reported as an error.
pub fn build(name: ModelName) -> Result<Model> {
    let blueprint = match name {
        ModelName::U2 => u2::blueprint(),
        ModelName::U2U2 => u2u2::blueprint(),
        ModelName::U3 => u3::blueprint(),
        ModelName::U4 => u4::blueprint(),
    };
    realize(blueprint)
}

/// Builds a model once per process and hands out a shared reference on
/// later calls. Useful when several consumers need the same catalog.
pub fn cached(name: ModelName) -> Result<&'static Model> {
    static CACHE: [OnceLock<Model>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match name {
        ModelName::U2 => &CACHE[0],
        ModelName::U2U2 => &CACHE[1],
        ModelName::U3 => &CACHE[2],
        ModelName::U4 => &CACHE[3],
    };
    if let Some(model) = slot.get() {
        return Ok(model);
    }
    let model = build(name)?;
    Ok(slot.get_or_init(|| model))
}

fn catalog_err(what: &str, detail: String) -> Error {
    Error::CatalogVerification {
        what: what.to_string(),
        detail,
    }
}

fn realize(bp: Blueprint) -> Result<Model> {
    let names: Vec<&str> = bp.generators.iter().map(|(n, _)| n.as_str()).collect();
    let ops: Vec<OperatorPoly> = bp.generators.iter().map(|(_, op)| op.clone()).collect();
    let algebra = LieAlgebra::from_generators(&names, ops)?;
    let defining = DefiningBasis::new(&bp.species);
    let levi = algebra.levi_decomposition()?;

    // The curated radical expressions must span exactly the computed radical.
    let curated: Vec<Vec<RadicalScalar>> = bp
        .radical
        .iter()
        .map(|(_, op)| algebra.coords_of(op))
        .collect::<Result<_>>()?;
    if !same_span(&algebra, &curated, &levi.radical)? {
        return Err(catalog_err(
            "radical",
            format!(
                "curated span {{{}}} differs from the computed radical",
                bp.radical
                    .iter()
                    .map(|(n, _)| n.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ));
    }
    if levi.levi.len() != bp.levi_dim {
        return Err(catalog_err(
            "semisimple part",
            format!("expected dimension {}, computed {}", bp.levi_dim, levi.levi.len()),
        ));
    }

    // Classes first: nodes may tag themselves with a class diagram.
    let mut classes = Vec::new();
    for spec in &bp.classes {
        let jset = JSet::new(
            algebra.coords_of(&spec.plus)?,
            algebra.coords_of(&spec.minus)?,
            algebra.coords_of(&spec.zero)?,
        );
        jset.verify(&algebra)?;
        let wdd = wdd_of_triple(&jset.triple(&algebra), &defining)?;
        let expected = Wdd::from_labels(spec.expected_wdd.clone())?;
        if wdd != expected {
            return Err(catalog_err(
                "class",
                format!("{}: computed diagram {wdd}, cataloged {expected}", spec.name),
            ));
        }
        classes.push(A1Class {
            name: spec.name.to_string(),
            node: spec.node.map(str::to_string),
            wdd,
            jset,
        });
    }

    let mut nodes = Vec::new();
    for spec in &bp.nodes {
        let coords: Vec<Vec<RadicalScalar>> = spec
            .elements
            .iter()
            .map(|(_, op)| algebra.coords_of(op))
            .collect::<Result<_>>()?;
        let span = RadMatrix::from_rows(coords).row_space_basis()?;
        if span.len() != spec.elements.len() {
            return Err(catalog_err(
                "lattice node",
                format!(
                    "{}: {} stated elements span only {} dimensions",
                    spec.name,
                    spec.elements.len(),
                    span.len()
                ),
            ));
        }
        algebra.verify_subalgebra(&span)?;
        let semisimple = is_semisimple(&algebra, &span)?;
        if semisimple != spec.semisimple {
            return Err(catalog_err(
                "lattice node",
                format!(
                    "{}: cataloged as {}semisimple but its Killing form says otherwise",
                    spec.name,
                    if spec.semisimple { "" } else { "non-" }
                ),
            ));
        }
        let mut in_levi = true;
        for v in &span {
            if !algebra.span_contains(&levi.levi, v)? {
                in_levi = false;
                break;
            }
        }
        if in_levi != spec.sheet {
            return Err(catalog_err(
                "lattice node",
                format!(
                    "{}: cataloged {} the semisimple sheet but its span says otherwise",
                    spec.name,
                    if spec.sheet { "on" } else { "off" }
                ),
            ));
        }
        let wdd = classes
            .iter()
            .find(|c| c.node.as_deref() == Some(spec.name))
            .map(|c| c.wdd.clone());
        nodes.push(LatticeNode {
            name: spec.name.to_string(),
            label: spec.label.to_string(),
            element_names: spec.elements.iter().map(|(n, _)| n.clone()).collect(),
            span,
            semisimple,
            sheet: in_levi,
            wdd,
        });
    }

    let node_index = |name: &str| -> Result<usize> {
        nodes
            .iter()
            .position(|n| n.name == name)
            .ok_or_else(|| catalog_err("lattice edge", format!("unknown node {name}")))
    };
    let mut edges = Vec::new();
    for spec in &bp.edges {
        let parent = node_index(spec.parent)?;
        let child = node_index(spec.child)?;
        let mut witness = None;
        if spec.excluded {
            // Recorded for the diagram, deliberately unverified and unused.
        } else if let Some(components) = &spec.witness {
            let coords: [Vec<RadicalScalar>; 3] = [
                algebra.coords_of(&components[0])?,
                algebra.coords_of(&components[1])?,
                algebra.coords_of(&components[2])?,
            ];
            let jset = jset_from_multiplet(&algebra, &coords)?;
            for part in [&jset.plus, &jset.minus, &jset.zero] {
                if !algebra.span_contains(&nodes[parent].span, part)? {
                    return Err(catalog_err(
                        "lattice edge",
                        format!(
                            "{} > {}: witness element {} escapes the parent",
                            spec.parent,
                            spec.child,
                            algebra.op_from_coords(part)
                        ),
                    ));
                }
            }
            let wdd = wdd_of_triple(&jset.triple(&algebra), &defining)?;
            match &nodes[child].wdd {
                Some(expected) if *expected == wdd => {}
                other => {
                    return Err(catalog_err(
                        "lattice edge",
                        format!(
                            "{} > {}: witness diagram {wdd} does not match the child ({:?})",
                            spec.parent, spec.child, other
                        ),
                    ));
                }
            }
            witness = Some(jset);
        } else {
            for v in &nodes[child].span {
                if !algebra.span_contains(&nodes[parent].span, v)? {
                    return Err(catalog_err(
                        "lattice edge",
                        format!(
                            "{} > {}: child element {} escapes the parent",
                            spec.parent,
                            spec.child,
                            algebra.op_from_coords(v)
                        ),
                    ));
                }
            }
        }
        edges.push(LatticeEdge {
            parent: spec.parent.to_string(),
            child: spec.child.to_string(),
            excluded: spec.excluded,
            witness,
        });
    }

    let mut multiplets = Vec::new();
    for spec in &bp.multiplets {
        let class = classes
            .iter()
            .find(|c| c.name == spec.class)
            .ok_or_else(|| catalog_err("multiplet", format!("{}: unknown class {}", spec.name, spec.class)))?;
        let (jp, jm, jz) = class.jset.ops(&algebra);
        verify_components(&jp, &jm, &jz, spec.weight, &spec.components)?;
        multiplets.push(OpMultiplet {
            name: spec.name.to_string(),
            class: spec.class.to_string(),
            weight: spec.weight,
            components: spec.components.clone(),
        });
    }

    let tensor_host = if bp.tensor_host_is_levi {
        levi.levi.clone()
    } else {
        algebra.unit_coords()
    };

    Ok(Model {
        name: bp.name,
        species: bp.species,
        algebra,
        defining,
        levi,
        radical_names: bp.radical.into_iter().map(|(n, _)| n).collect(),
        nodes,
        edges,
        classes,
        multiplets,
        tensor_host,
    })
}

/// The bilinear `[a'(dagger) x b-tilde]^(k)_q` built by spherical coupling;
/// the standard construction for all model generators.
pub(super) fn coupled(a: &Species, b: &Species, k: i32, q: i32) -> OperatorPoly {
    let tensor = couple(&creation_tensor(a), &tilde_tensor(b), HalfInt::from_int(k))
        .expect("cataloged ranks satisfy the triangle rule");
    tensor.component(HalfInt::from_int(q)).clone()
}

/// Exact `sqrt(num/den)` for positive cataloged radicands.
pub(super) fn rad_sqrt(num: i64, den: i64) -> RadicalScalar {
    let r = crate::scalar::Rational::new(num.into(), den.into());
    RadicalScalar::sqrt_rational(&r).expect("cataloged radicands are small")
}

/// Rational scalar shorthand.
pub(super) fn ratio(num: i64, den: i64) -> RadicalScalar {
    RadicalScalar::from_ratio(num, den)
}

/// Whether the two spans of ambient coordinate vectors are equal.
fn same_span(
    algebra: &LieAlgebra,
    a: &[Vec<RadicalScalar>],
    b: &[Vec<RadicalScalar>],
) -> Result<bool> {
    for v in a {
        if !algebra.span_contains(b, v)? {
            return Ok(false);
        }
    }
    for v in b {
        if !algebra.span_contains(a, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Semisimplicity of a subalgebra by the Cartan criterion: the Killing form
/// of the restricted bracket (not the restriction of the ambient form) must
/// be nondegenerate.
fn is_semisimple(algebra: &LieAlgebra, span: &[Vec<RadicalScalar>]) -> Result<bool> {
    let d = span.len();
    if d == 0 {
        return Ok(false);
    }
    let basis = RadMatrix::from_columns(span.to_vec());
    let solver = Solver::new(basis)?;
    let mut ads = Vec::with_capacity(d);
    for v in span {
        let mut ad = RadMatrix::zeros(d, d);
        for (col, w) in span.iter().enumerate() {
            let bracket = algebra.bracket_coords(v, w);
            match solver.solve(&bracket) {
                Solve::Solution(c) => {
                    for (row, value) in c.into_iter().enumerate() {
                        ad.set(row, col, value);
                    }
                }
                Solve::Inconsistent { residual } => {
                    return Err(Error::NotClosed {
                        left: algebra.op_from_coords(v).to_string(),
                        right: algebra.op_from_coords(w).to_string(),
                        residual: algebra.op_from_coords(&residual).to_string(),
                    });
                }
            }
        }
        ads.push(ad);
    }
    let mut killing = RadMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let k = ads[i].mul(&ads[j]).trace();
            killing.set(i, j, k.clone());
            killing.set(j, i, k);
        }
    }
    Ok(killing.rank()? == d)
}

impl Model {
    /// Looks up a lattice node by name.
    pub fn node(&self, name: &str) -> Result<&LatticeNode> {
        self.nodes.iter().find(|n| n.name == name).ok_or(Error::UnknownName {
            kind: "lattice node",
            name: name.to_string(),
        })
    }

    /// Looks up a cataloged angular-momentum class by key.
    pub fn class(&self, name: &str) -> Result<&A1Class> {
        self.classes.iter().find(|c| c.name == name).ok_or(Error::UnknownName {
            kind: "class",
            name: name.to_string(),
        })
    }

    /// Looks up a generator by name.
    pub fn generator(&self, name: &str) -> Result<&OperatorPoly> {
        Ok(self.algebra.basis_op(self.algebra.index_of(name)?))
    }

    /// All maximal root-to-leaf paths, in deterministic order. The root is
    /// the first cataloged node; excluded edges do not contribute.
    pub fn chains(&self) -> Vec<Chain> {
        let mut chains = Vec::new();
        let mut path = vec![self.nodes[0].name.clone()];
        self.walk(&mut path, false, &mut chains);
        chains
    }

    /// Maximal paths that stay on the semisimple sheet, rooted at the node
    /// spanning the whole semisimple part. For models whose lattice root is
    /// already semisimple this coincides with [`Model::chains`].
    pub fn semisimple_sheet_chains(&self) -> Result<Vec<Chain>> {
        let mut root = None;
        for node in &self.nodes {
            if node.sheet && node.dim() == self.levi.levi.len() {
                root = Some(node.name.clone());
                break;
            }
        }
        let root = root.ok_or_else(|| {
            catalog_err("semisimple sheet", "no node spans the semisimple part".to_string())
        })?;
        let mut chains = Vec::new();
        let mut path = vec![root];
        self.walk(&mut path, true, &mut chains);
        Ok(chains)
    }

    fn walk(&self, path: &mut Vec<String>, sheet_only: bool, out: &mut Vec<Chain>) {
        let here = path.last().unwrap().clone();
        let children: Vec<&LatticeEdge> = self
            .edges
            .iter()
            .filter(|e| {
                e.parent == here
                    && !e.excluded
                    && (!sheet_only || self.node(&e.child).map(|n| n.sheet).unwrap_or(false))
            })
            .collect();
        if children.is_empty() {
            let labels = path
                .iter()
                .map(|n| self.node(n).expect("path nodes exist").label.clone())
                .collect();
            out.push(Chain {
                nodes: path.clone(),
                labels,
            });
            return;
        }
        for edge in children {
            path.push(edge.child.clone());
            self.walk(path, sheet_only, out);
            path.pop();
        }
    }

    /// Spherical-tensor decomposition of the tensor host under a cataloged
    /// class, canonical multiplets in descending rank order.
    pub fn decompose(&self, class: &str) -> Result<Vec<TensorMultiplet>> {
        let class = self.class(class)?;
        decompose_adjoint(&self.algebra, &class.jset, &self.tensor_host)
    }

    /// JSON view of the lattice: nodes, edges, diagrams, element names.
    pub fn lattice_json(&self) -> Value {
        json!({
            "model": self.name.as_str(),
            "nodes": self.nodes.iter().map(|n| json!({
                "name": n.name,
                "label": n.label,
                "dim": n.dim(),
                "semisimple": n.semisimple,
                "sheet": n.sheet,
                "wdd": n.wdd.as_ref().map(|w| w.labels().to_vec()),
                "elements": n.element_names,
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "parent": e.parent,
                "child": e.child,
                "excluded": e.excluded,
                "witnessed": e.witness.is_some(),
            })).collect::<Vec<_>>(),
        })
    }
}
