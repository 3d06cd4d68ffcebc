//! Exact scalars: Gaussian rationals extended by square roots of squarefree
//! integers.
//!
//! A [`RadicalScalar`] is a finite sum `sum_n q_n * sqrt(n)` where each `n` is
//! a squarefree positive integer (radicand 1 carries the rational part) and
//! each `q_n` is a Gaussian rational `a + b*i` with arbitrary-precision
//! rational `a`, `b`. The representation is kept canonical at all times:
//! radicands are squarefree and zero coefficients are dropped, so structural
//! equality is field equality.
//!
//! Addition and multiplication are closed; `sqrt(m) * sqrt(n)` reduces via the
//! gcd (`sqrt(m)*sqrt(n) = g*sqrt(mn/g^2)` with `g = gcd(m,n)`). Inversion
//! works in the subfield generated by the radicands present: multiplication by
//! the scalar is a linear map on that subfield, and the inverse is read off an
//! exact linear solve.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, re-exported for coefficient work.
pub type Rational = BigRational;

/// Largest prime tried when factoring radicands.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Maximum size of the multiplicatively closed radicand set used by inversion.
const CLOSURE_LIMIT: usize = 64;

/// A Gaussian rational `re + im * i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational::new(re, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRational::new(&self.re * r, &self.im * r)
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRational::new(&self.re / &norm, -&self.im / &norm))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Factors `n = c^2 * d` with `d` squarefree, by trial division.
///
/// Returns `(c, d)`. Fails if an unfactored cofactor is too large to certify
/// prime (no factor below the trial-division limit and at least 10^12).
fn extract_square_u64(n: u64) -> Result<(u64, u64)> {
    assert!(n > 0, "radicand must be positive");
    let mut rem = n;
    let mut outer = 1u64;
    let mut square_free = 1u64;
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_LIMIT && p * p <= rem {
        if rem % p == 0 {
            let mut e = 0u32;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            outer *= p.pow(e / 2);
            if e % 2 == 1 {
                square_free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rem > 1 {
        if rem >= TRIAL_DIVISION_LIMIT * TRIAL_DIVISION_LIMIT {
            return Err(Error::RadicandTooLarge(n.to_string()));
        }
        // No factor up to its square root: rem is prime.
        square_free *= rem;
    }
    Ok((outer, square_free))
}

/// BigInt version of [`extract_square_u64`]; returns `(c, d)` with `d` as `u64`.
fn extract_square_bigint(n: &BigInt) -> Result<(BigInt, u64)> {
    assert!(n.is_positive(), "radicand must be positive");
    let mut rem = n.clone();
    let mut outer = BigInt::one();
    let mut square_free = 1u64;
    let mut p = 2u64;
    loop {
        let pb = BigInt::from(p);
        if p > TRIAL_DIVISION_LIMIT || (&pb * &pb) > rem {
            break;
        }
        if (&rem % &pb).is_zero() {
            let mut e = 0u32;
            while (&rem % &pb).is_zero() {
                rem /= &pb;
                e += 1;
            }
            outer *= pb.pow(e / 2);
            if e % 2 == 1 {
                square_free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rem > BigInt::one() {
        match rem.to_u64() {
            Some(r) if r < TRIAL_DIVISION_LIMIT * TRIAL_DIVISION_LIMIT => square_free *= r,
            _ => return Err(Error::RadicandTooLarge(n.to_string())),
        }
    }
    Ok((outer, square_free))
}

/// Product of two squarefree integers reduced to squarefree form:
/// `sqrt(m) * sqrt(n) = g * sqrt(m n / g^2)` with `g = gcd(m, n)`.
fn squarefree_product(m: u64, n: u64) -> (u64, u64) {
    let g = num::integer::gcd(m, n);
    (g, (m / g) * (n / g))
}

/// An exact element of Q(i) adjoined square roots of squarefree integers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RadicalScalar {
    terms: BTreeMap<u64, GaussRational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        RadicalScalar::default()
    }

    pub fn one() -> Self {
        RadicalScalar::from_rational(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        let mut s = RadicalScalar::zero();
        s.add_term(1, GaussRational::i());
        s
    }

    pub fn from_int(v: i64) -> Self {
        RadicalScalar::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// Builds `num/den`; panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        RadicalScalar::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut s = RadicalScalar::zero();
        s.add_term(1, GaussRational::from_rational(r));
        s
    }

    pub fn from_gauss(g: GaussRational) -> Self {
        let mut s = RadicalScalar::zero();
        s.add_term(1, g);
        s
    }

    /// Exact `sqrt(n)` for a positive integer `n` (square part extracted).
    pub fn sqrt_int(n: u64) -> Result<Self> {
        let (outer, d) = extract_square_u64(n)?;
        let mut s = RadicalScalar::zero();
        s.add_term(
            d,
            GaussRational::from_rational(Rational::from_integer(BigInt::from(outer))),
        );
        Ok(s)
    }

    /// Exact `sqrt(r)` for a non-negative rational `r`: `sqrt(p/q) = sqrt(pq)/q`.
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Ok(RadicalScalar::zero());
        }
        assert!(r.is_positive(), "sqrt of a negative rational");
        let pq = r.numer() * r.denom();
        let (outer, d) = extract_square_bigint(&pq)?;
        let coeff = Rational::new(outer, r.denom().clone());
        let mut s = RadicalScalar::zero();
        s.add_term(d, GaussRational::from_rational(coeff));
        Ok(s)
    }

    /// A single term `g * sqrt(radicand)`; the radicand is reduced to
    /// squarefree form.
    pub fn term(g: GaussRational, radicand: u64) -> Result<Self> {
        let (outer, d) = extract_square_u64(radicand)?;
        let mut s = RadicalScalar::zero();
        s.add_term(d, g.scale(&Rational::from_integer(BigInt::from(outer))));
        Ok(s)
    }

    fn add_term(&mut self, radicand: u64, coeff: GaussRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(radicand) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &RadicalScalar::one()
    }

    /// Number of (radicand, coefficient) terms; used for pivot selection in
    /// exact elimination.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(radicand, coefficient)` pairs in radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (&u64, &GaussRational)> {
        self.terms.iter()
    }

    /// The value as a Gaussian rational if no nontrivial radicand is present.
    pub fn as_gauss(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// The value as a plain rational if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gauss().and_then(|g| {
            if g.im.is_zero() {
                Some(g.re)
            } else {
                None
            }
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &o.terms {
            out.add_term(*r, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &o.terms {
            out.add_term(*r, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = RadicalScalar::zero();
        for (r, c) in &self.terms {
            out.add_term(*r, c.neg());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = RadicalScalar::zero();
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                let (g, d) = squarefree_product(*m, *n);
                let coeff = a
                    .mul(b)
                    .scale(&Rational::from_integer(BigInt::from(g)));
                out.add_term(d, coeff);
            }
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return RadicalScalar::zero();
        }
        let mut out = RadicalScalar::zero();
        for (rad, c) in &self.terms {
            out.add_term(*rad, c.scale(r));
        }
        out
    }

    /// Complex conjugation (radicands are real, so only coefficients flip).
    pub fn conjugate(&self) -> Self {
        let mut out = RadicalScalar::zero();
        for (rad, c) in &self.terms {
            out.add_term(*rad, c.conj());
        }
        out
    }

    /// Exact multiplicative inverse.
    ///
    /// Single-term scalars invert directly; otherwise the radicand set is
    /// closed multiplicatively (bounded at 64 radicands) and the inverse is
    /// found by solving the regular-representation linear system exactly.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        if self.terms.len() == 1 {
            let (rad, c) = self.terms.iter().next().unwrap();
            // 1 / (c sqrt(r)) = (1 / (c r)) sqrt(r)
            let inv = c
                .scale(&Rational::from_integer(BigInt::from(*rad)))
                .inverse()
                .expect("nonzero term");
            let mut out = RadicalScalar::zero();
            out.add_term(*rad, inv);
            return Ok(out);
        }

        // Multiplicative closure of the radicand set, as an elementary abelian
        // 2-group on the primes involved.
        let mut closure: Vec<u64> = vec![1];
        for r in self.terms.keys() {
            let mut extended = closure.clone();
            for g in &closure {
                let (_, d) = squarefree_product(*g, *r);
                if !extended.contains(&d) {
                    extended.push(d);
                }
            }
            closure = extended;
            if closure.len() > CLOSURE_LIMIT {
                return Err(Error::ClosureTooLarge {
                    limit: CLOSURE_LIMIT,
                });
            }
        }
        closure.sort_unstable();
        let index: BTreeMap<u64, usize> =
            closure.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let n = closure.len();

        // M[i][j] = coefficient of sqrt(closure[i]) in self * sqrt(closure[j]).
        let mut m = vec![vec![GaussRational::zero(); n]; n];
        for (j, rj) in closure.iter().enumerate() {
            for (rad, c) in &self.terms {
                let (g, d) = squarefree_product(*rad, *rj);
                let i = index[&d];
                let add = c.scale(&Rational::from_integer(BigInt::from(g)));
                m[i][j] = m[i][j].add(&add);
            }
        }

        // Solve M x = e_{index of radicand 1} by Gaussian elimination over Q(i).
        let mut rhs = vec![GaussRational::zero(); n];
        rhs[index[&1]] = GaussRational::one();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::ZeroDivision)?;
            m.swap(col, pivot);
            rhs.swap(col, pivot);
            let inv = m[col][col].inverse().expect("nonzero pivot");
            for v in m[col].iter_mut() {
                *v = v.mul(&inv);
            }
            rhs[col] = rhs[col].mul(&inv);
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for cidx in 0..n {
                        let sub = m[col][cidx].mul(&f);
                        m[r][cidx] = m[r][cidx].sub(&sub);
                    }
                    let sub = rhs[col].mul(&f);
                    rhs[r] = rhs[r].sub(&sub);
                }
            }
        }
        let mut out = RadicalScalar::zero();
        for (j, rj) in closure.iter().enumerate() {
            out.add_term(*rj, rhs[j].clone());
        }
        Ok(out)
    }

    /// Numerical value.
    pub fn to_float(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (rad, c) in &self.terms {
            acc += c.to_complex64() * (*rad as f64).sqrt();
        }
        acc
    }

    /// JSON rendering: a list of `{radicand, re: [num, den], im: [num, den]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(rad, c)| {
                serde_json::json!({
                    "radicand": rad,
                    "re": rational_json(&c.re),
                    "im": rational_json(&c.im),
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

fn rational_json(r: &Rational) -> serde_json::Value {
    let num = r.numer().to_i64();
    let den = r.denom().to_i64();
    match (num, den) {
        (Some(n), Some(d)) => serde_json::json!([n, d]),
        // Out-of-range coefficients fall back to decimal strings.
        _ => serde_json::json!([r.numer().to_string(), r.denom().to_string()]),
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for (rad, c) in &self.terms {
            let sqrt_suffix = if *rad == 1 {
                String::new()
            } else {
                format!("*sqrt({rad})")
            };
            if !c.re.is_zero() {
                pieces.push(format!("({}){}", fmt_rational(&c.re), sqrt_suffix));
            }
            if !c.im.is_zero() {
                pieces.push(format!("({})i{}", fmt_rational(&c.im), sqrt_suffix));
            }
        }
        write!(f, "{}", pieces.join(" + "))
    }
}

impl Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, o: &RadicalScalar) -> RadicalScalar {
        RadicalScalar::add(self, o)
    }
}

impl Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, o: &RadicalScalar) -> RadicalScalar {
        RadicalScalar::sub(self, o)
    }
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, o: &RadicalScalar) -> RadicalScalar {
        RadicalScalar::mul(self, o)
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar::neg(self)
    }
}
