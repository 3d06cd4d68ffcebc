//! Normal-ordered polynomials in boson creation/annihilation operators.
//!
//! Species carry a name and a non-negative half-integer rank `l`; a species of
//! rank `l` has components `mu = -l..l`. Operators are stored as linear
//! combinations (over [`RadicalScalar`]) of normal-ordered monomials: all
//! creation factors to the left of all annihilation factors, each block sorted
//! by species name and ascending component. Products are re-normal-ordered via
//! the canonical commutation relations (`a a' = a' a + delta`), so equality of
//! polynomials is equality of operators.
//!
//! The module also provides the component-reversal ("tilde") convention that
//! turns annihilation operators into spherical tensors:
//! `p~[mu] = (-1)^(l - mu) p[-mu]`, and the operator adjoint (reverse factor
//! order, swap creation/annihilation, conjugate coefficients).

use std::collections::BTreeMap;
use std::fmt;

use crate::half::HalfInt;
use crate::scalar::{RadicalScalar, Rational};

/// A boson species: a name and a spherical rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Species {
    name: String,
    rank: HalfInt,
}

impl Species {
    /// A rank-`l` species. The rank must be non-negative.
    pub fn new(name: &str, rank: HalfInt) -> Self {
        assert!(!rank.is_negative(), "species rank must be non-negative");
        Species {
            name: name.to_string(),
            rank,
        }
    }

    /// A rank-0 (single-component) species.
    pub fn scalar(name: &str) -> Self {
        Species::new(name, HalfInt::ZERO)
    }

    /// A rank-1 (three-component) species.
    pub fn vector(name: &str) -> Self {
        Species::new(name, HalfInt::from_int(1))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> HalfInt {
        self.rank
    }

    /// Components in ascending order: -l, ..., +l.
    pub fn components(&self) -> impl Iterator<Item = HalfInt> {
        self.rank.projections()
    }

    fn check_component(&self, mu: HalfInt) {
        assert!(
            mu.abs() <= self.rank && (self.rank - mu).is_integer(),
            "component {} invalid for rank-{} species {}",
            mu,
            self.rank,
            self.name
        );
    }
}

/// Creation or annihilation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    Creation,
    Annihilation,
}

/// A single operator factor: one component of one species.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BosonFactor {
    pub species: Species,
    pub mu: HalfInt,
    pub kind: FactorKind,
}

impl BosonFactor {
    pub fn creation(species: &Species, mu: HalfInt) -> Self {
        species.check_component(mu);
        BosonFactor {
            species: species.clone(),
            mu,
            kind: FactorKind::Creation,
        }
    }

    pub fn annihilation(species: &Species, mu: HalfInt) -> Self {
        species.check_component(mu);
        BosonFactor {
            species: species.clone(),
            mu,
            kind: FactorKind::Annihilation,
        }
    }

    fn same_mode(&self, o: &BosonFactor) -> bool {
        self.species == o.species && self.mu == o.mu
    }

    /// Ordering key within a creation or annihilation block.
    fn block_key(&self) -> (&str, HalfInt) {
        (self.species.name(), self.mu)
    }
}

impl fmt::Display for BosonFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = match self.kind {
            FactorKind::Creation => "'",
            FactorKind::Annihilation => "",
        };
        if self.species.rank() == HalfInt::ZERO {
            write!(f, "{}{}", self.species.name(), prime)
        } else {
            write!(
                f,
                "{}{}[{}]",
                self.species.name(),
                prime,
                self.mu.signed_label()
            )
        }
    }
}

/// The component-reversal convention for annihilation operators:
/// returns `(sign, factor)` with `p~[mu] = sign * p[-mu]`,
/// `sign = (-1)^(l - mu)`.
pub fn tilde(species: &Species, mu: HalfInt) -> (i64, BosonFactor) {
    species.check_component(mu);
    let exponent = (species.rank() - mu).as_integer().expect("integer l - mu");
    let sign = if exponent % 2 == 0 { 1 } else { -1 };
    (sign, BosonFactor::annihilation(species, -mu))
}

/// A normal-ordered monomial: creations (sorted) then annihilations (sorted).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<BosonFactor>,
}

impl Monomial {
    /// The empty product (identity operator).
    pub fn identity() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    /// Builds from an already normal-ordered word, sorting each block.
    fn from_blocks(mut creations: Vec<BosonFactor>, mut annihilations: Vec<BosonFactor>) -> Self {
        creations.sort_by(|a, b| a.block_key().cmp(&b.block_key()));
        annihilations.sort_by(|a, b| a.block_key().cmp(&b.block_key()));
        let mut factors = creations;
        factors.extend(annihilations);
        Monomial { factors }
    }

    pub fn factors(&self) -> &[BosonFactor] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn creation_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| f.kind == FactorKind::Creation)
            .count()
    }

    pub fn annihilation_count(&self) -> usize {
        self.degree() - self.creation_count()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OperatorPoly {
    terms: BTreeMap<Monomial, RadicalScalar>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        OperatorPoly::default()
    }

    /// A constant multiple of the identity.
    pub fn constant(c: RadicalScalar) -> Self {
        let mut p = OperatorPoly::zero();
        p.add_term(Monomial::identity(), c);
        p
    }

    /// A single factor with unit coefficient.
    pub fn from_factor(f: BosonFactor) -> Self {
        OperatorPoly::from_word(&[f], RadicalScalar::one())
    }

    /// A product of factors (any order) with the given coefficient,
    /// normal-ordered on construction.
    pub fn from_word(word: &[BosonFactor], coeff: RadicalScalar) -> Self {
        let mut p = OperatorPoly::zero();
        p.accumulate_word(word.to_vec(), coeff);
        p
    }

    fn add_term(&mut self, m: Monomial, c: RadicalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    /// Normal-orders `word * coeff` into this polynomial using
    /// `a a' = a' a + delta` rewrites.
    fn accumulate_word(&mut self, word: Vec<BosonFactor>, coeff: RadicalScalar) {
        let mut stack = vec![(word, coeff)];
        while let Some((w, c)) = stack.pop() {
            let misordered = (0..w.len().saturating_sub(1)).find(|&i| {
                w[i].kind == FactorKind::Annihilation && w[i + 1].kind == FactorKind::Creation
            });
            match misordered {
                None => {
                    let split = w
                        .iter()
                        .position(|f| f.kind == FactorKind::Annihilation)
                        .unwrap_or(w.len());
                    let (cre, ann) = w.split_at(split);
                    self.add_term(Monomial::from_blocks(cre.to_vec(), ann.to_vec()), c);
                }
                Some(i) => {
                    if w[i].same_mode(&w[i + 1]) {
                        let mut contracted = w.clone();
                        contracted.drain(i..=i + 1);
                        stack.push((contracted, c.clone()));
                    }
                    let mut swapped = w;
                    swapped.swap(i, i + 1);
                    stack.push((swapped, c));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> RadicalScalar {
        self.terms.get(m).cloned().unwrap_or_else(RadicalScalar::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = OperatorPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &RadicalScalar) -> Self {
        let mut out = OperatorPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(s));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&RadicalScalar::from_rational(r.clone()))
    }

    /// Operator product, normal-ordered.
    pub fn multiply(&self, o: &Self) -> Self {
        let mut out = OperatorPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut word = m1.factors.clone();
                word.extend(m2.factors.iter().cloned());
                out.accumulate_word(word, c1.mul(c2));
            }
        }
        out
    }

    /// Commutator `[self, o] = self o - o self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.multiply(o).sub(&o.multiply(self))
    }

    /// Operator adjoint: reverse factor order, swap creation/annihilation,
    /// conjugate coefficients.
    pub fn adjoint(&self) -> Self {
        let mut out = OperatorPoly::zero();
        for (m, c) in &self.terms {
            let word: Vec<BosonFactor> = m
                .factors
                .iter()
                .rev()
                .map(|f| BosonFactor {
                    species: f.species.clone(),
                    mu: f.mu,
                    kind: match f.kind {
                        FactorKind::Creation => FactorKind::Annihilation,
                        FactorKind::Annihilation => FactorKind::Creation,
                    },
                })
                .collect();
            out.accumulate_word(word, c.conjugate());
        }
        out
    }

    /// True when every monomial has exactly one creation and one annihilation
    /// factor.
    pub fn is_bilinear(&self) -> bool {
        !self.is_zero()
            && self
                .terms
                .keys()
                .all(|m| m.degree() == 2 && m.creation_count() == 1)
    }

    /// True when every monomial creates as many quanta as it annihilates.
    pub fn conserves_number(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.creation_count() == m.annihilation_count())
    }

    /// All species appearing in the polynomial, sorted and distinct.
    pub fn species(&self) -> Vec<Species> {
        let mut out: Vec<Species> = self
            .terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|f| f.species.clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// JSON rendering: a list of `{coeff, factors}` entries.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let factors: Vec<serde_json::Value> = m
                    .factors
                    .iter()
                    .map(|f| {
                        serde_json::json!({
                            "species": f.species.name(),
                            "mu": f.mu.to_string(),
                            "kind": match f.kind {
                                FactorKind::Creation => "creation",
                                FactorKind::Annihilation => "annihilation",
                            },
                        })
                    })
                    .collect();
                serde_json::json!({ "coeff": c.to_json(), "factors": factors })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.degree() == 0 {
                    format!("[{c}]")
                } else {
                    format!("[{c}] {m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Species {
        Species::vector("p")
    }

    fn s() -> Species {
        Species::scalar("s")
    }

    fn t() -> Species {
        Species::scalar("t")
    }

    fn mu(v: i32) -> HalfInt {
        HalfInt::from_int(v)
    }

    fn cre(sp: &Species, m: i32) -> BosonFactor {
        BosonFactor::creation(sp, mu(m))
    }

    fn ann(sp: &Species, m: i32) -> BosonFactor {
        BosonFactor::annihilation(sp, mu(m))
    }

    /// Number operator for one mode.
    fn number(sp: &Species, m: i32) -> OperatorPoly {
        OperatorPoly::from_word(&[cre(sp, m), ann(sp, m)], RadicalScalar::one())
    }

    #[test]
    fn ccr_same_mode() {
        // p[0] p'[0] = p'[0] p[0] + 1
        let lhs = OperatorPoly::from_word(&[ann(&p(), 0), cre(&p(), 0)], RadicalScalar::one());
        let rhs = number(&p(), 0).add(&OperatorPoly::constant(RadicalScalar::one()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ccr_cross_mode() {
        // p[+1] p'[-1] = p'[-1] p[+1] (no contraction across modes)
        let lhs = OperatorPoly::from_word(&[ann(&p(), 1), cre(&p(), -1)], RadicalScalar::one());
        let rhs = OperatorPoly::from_word(&[cre(&p(), -1), ann(&p(), 1)], RadicalScalar::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quartic_normal_order() {
        // (s' s)(s' s) = s' s' s s + s' s
        let n = number(&s(), 0);
        let lhs = n.multiply(&n);
        let quartic = OperatorPoly::from_word(
            &[cre(&s(), 0), cre(&s(), 0), ann(&s(), 0), ann(&s(), 0)],
            RadicalScalar::one(),
        );
        assert_eq!(lhs, quartic.add(&n));
    }

    #[test]
    fn scalar_pair_commutator() {
        // [s' t, t' s] = s' s - t' t
        let a = OperatorPoly::from_word(&[cre(&s(), 0), ann(&t(), 0)], RadicalScalar::one());
        let b = OperatorPoly::from_word(&[cre(&t(), 0), ann(&s(), 0)], RadicalScalar::one());
        let expected = number(&s(), 0).sub(&number(&t(), 0));
        assert_eq!(a.commutator(&b), expected);
    }

    #[test]
    fn raising_lowering_pair() {
        // With Wp = p'[+1] p[-1], Wm = p'[-1] p[+1]:
        // [Wp, Wm] = n[+1] - n[-1], twice the weight operator.
        let wp = OperatorPoly::from_word(&[cre(&p(), 1), ann(&p(), -1)], RadicalScalar::one());
        let wm = OperatorPoly::from_word(&[cre(&p(), -1), ann(&p(), 1)], RadicalScalar::one());
        let expected = number(&p(), 1).sub(&number(&p(), -1));
        assert_eq!(wp.commutator(&wm), expected);
    }

    #[test]
    fn commutator_antisymmetry() {
        let x = OperatorPoly::from_word(&[cre(&p(), 1), ann(&p(), 0)], RadicalScalar::one());
        assert!(x.commutator(&x).is_zero());
    }

    #[test]
    fn tilde_convention() {
        // p~[+1] = +p[-1], p~[0] = -p[0], p~[-1] = +p[+1], s~ = s.
        let (sign, f) = tilde(&p(), mu(1));
        assert_eq!((sign, f), (1, ann(&p(), -1)));
        let (sign, f) = tilde(&p(), mu(0));
        assert_eq!((sign, f), (-1, ann(&p(), 0)));
        let (sign, f) = tilde(&p(), mu(-1));
        assert_eq!((sign, f), (1, ann(&p(), 1)));
        let (sign, f) = tilde(&s(), mu(0));
        assert_eq!((sign, f), (1, ann(&s(), 0)));
    }

    #[test]
    fn adjoint_of_bilinear() {
        // (s' p[0])+ = p'[0] s
        let a = OperatorPoly::from_word(&[cre(&s(), 0), ann(&p(), 0)], RadicalScalar::one());
        let expected = OperatorPoly::from_word(&[cre(&p(), 0), ann(&s(), 0)], RadicalScalar::one());
        assert_eq!(a.adjoint(), expected);
        // Coefficients conjugate: (i X)+ = -i X+.
        let ia = a.scale(&RadicalScalar::i());
        assert_eq!(ia.adjoint(), expected.scale(&RadicalScalar::i().neg()));
        // Involution.
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn adjoint_reverses_products() {
        let a = OperatorPoly::from_word(&[cre(&p(), 1), ann(&p(), 0)], RadicalScalar::one());
        let b = OperatorPoly::from_word(&[cre(&p(), 0), ann(&p(), -1)], RadicalScalar::one());
        assert_eq!(
            a.multiply(&b).adjoint(),
            b.adjoint().multiply(&a.adjoint())
        );
    }

    #[test]
    fn bilinear_and_number_conservation_predicates() {
        let bil = OperatorPoly::from_word(&[cre(&s(), 0), ann(&t(), 0)], RadicalScalar::one());
        assert!(bil.is_bilinear());
        assert!(bil.conserves_number());
        let pair = OperatorPoly::from_word(&[cre(&p(), 1), cre(&p(), -1)], RadicalScalar::one());
        assert!(!pair.is_bilinear());
        assert!(!pair.conserves_number());
        // A normal-ordered product of a mode with itself is quartic + bilinear:
        // still number conserving, no longer bilinear.
        let n2 = number(&s(), 0).multiply(&number(&s(), 0));
        assert!(!n2.is_bilinear());
        assert!(n2.conserves_number());
    }

    #[test]
    fn display_format() {
        let x = OperatorPoly::from_word(&[cre(&p(), 1), ann(&p(), 0)], RadicalScalar::one());
        assert_eq!(x.to_string(), "[(1)] p'[+1] p[0]");
        let c = OperatorPoly::constant(RadicalScalar::from_int(3));
        assert_eq!(c.to_string(), "[(3)]");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Random bilinears over the three p modes with small integer coefficients.
        fn bilinear() -> impl Strategy<Value = OperatorPoly> {
            prop::collection::vec(((-1i32..=1), (-1i32..=1), -3i64..=3), 1..4).prop_map(|terms| {
                let sp = Species::vector("p");
                let mut out = OperatorPoly::zero();
                for (m1, m2, c) in terms {
                    let word = [
                        BosonFactor::creation(&sp, HalfInt::from_int(m1)),
                        BosonFactor::annihilation(&sp, HalfInt::from_int(m2)),
                    ];
                    out = out.add(&OperatorPoly::from_word(&word, RadicalScalar::from_int(c)));
                }
                out
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn jacobi_identity(a in bilinear(), b in bilinear(), c in bilinear()) {
                let j = a.commutator(&b.commutator(&c))
                    .add(&b.commutator(&c.commutator(&a)))
                    .add(&c.commutator(&a.commutator(&b)));
                prop_assert!(j.is_zero());
            }

            #[test]
            fn product_reassociation(a in bilinear(), b in bilinear(), c in bilinear()) {
                prop_assert_eq!(
                    a.multiply(&b).multiply(&c),
                    a.multiply(&b.multiply(&c))
                );
            }

            #[test]
            fn commutator_bilinearity(a in bilinear(), b in bilinear(), c in bilinear()) {
                let lhs = a.add(&b).commutator(&c);
                let rhs = a.commutator(&c).add(&b.commutator(&c));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
