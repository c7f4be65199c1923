//! Exact elements of the quasisymmetric algebra in the monomial (`M`) and
//! fundamental (`F`) bases, with the basis changes, the sign-twisted
//! involution on `M`, the quasi-shuffle product, the fundamental coproduct,
//! and truncated polynomial evaluation as an independent cross-check.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{Composition, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Monomial,
    Fundamental,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::Monomial => "M",
            Basis::Fundamental => "F",
        }
    }
}

/// A finite integer combination of basis elements indexed by compositions.
/// Zero coefficients are never stored, and iteration follows the canonical
/// composition order, so equal elements have equal printed forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement {
    basis: Basis,
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymElement {
    pub fn zero(basis: Basis) -> Self {
        QSymElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1: the empty composition with coefficient one.
    pub fn one(basis: Basis) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Composition::empty(), BigInt::from(1));
        QSymElement { basis, terms }
    }

    /// A single monomial basis element `M[c]`.
    pub fn monomial(c: Composition) -> Self {
        Self::single(Basis::Monomial, c)
    }

    /// A single fundamental basis element `F[c]`.
    pub fn fundamental(c: Composition) -> Self {
        Self::single(Basis::Fundamental, c)
    }

    fn single(basis: Basis, c: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(c, BigInt::from(1));
        QSymElement { basis, terms }
    }

    pub fn from_map(basis: Basis, terms: BTreeMap<Composition, BigInt>) -> Self {
        let mut e = QSymElement { basis, terms };
        e.terms.retain(|_, v| !v.is_zero());
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &Composition) -> BigInt {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &QSymElement) -> Result<QSymElement> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        let mut terms = self.terms.clone();
        for (c, v) in &other.terms {
            *terms.entry(c.clone()).or_default() += v;
        }
        Ok(QSymElement::from_map(self.basis, terms))
    }

    pub fn scale(&self, k: i64) -> QSymElement {
        let terms = self
            .terms
            .iter()
            .map(|(c, v)| (c.clone(), v * k))
            .collect();
        QSymElement::from_map(self.basis, terms)
    }

    /// Rewrites a fundamental expansion in the monomial basis: each `F`
    /// element is the sum of `M` over refinements of its index.
    pub fn f_to_m(&self) -> Result<QSymElement> {
        if self.basis != Basis::Fundamental {
            return Err(Error::BasisMismatch);
        }
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (c, v) in &self.terms {
            for b in c.refinements() {
                *terms.entry(b).or_default() += v;
            }
        }
        Ok(QSymElement::from_map(Basis::Monomial, terms))
    }

    /// Inverse change of basis, by sign-alternating inclusion-exclusion over
    /// refinements; validated by round trips rather than taken on trust.
    pub fn m_to_f(&self) -> Result<QSymElement> {
        if self.basis != Basis::Monomial {
            return Err(Error::BasisMismatch);
        }
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (c, v) in &self.terms {
            for b in c.refinements() {
                let signed = if (b.len() - c.len()) % 2 == 0 {
                    v.clone()
                } else {
                    -v.clone()
                };
                *terms.entry(b).or_default() += signed;
            }
        }
        Ok(QSymElement::from_map(Basis::Fundamental, terms))
    }

    /// The involution sending `M[a]` to `(-1)^(size - length)` times the sum
    /// of `M` over the coarsenings of `a`.
    pub fn psi(&self) -> Result<QSymElement> {
        if self.basis != Basis::Monomial {
            return Err(Error::BasisMismatch);
        }
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (c, v) in &self.terms {
            let signed = if ((c.size() as usize - c.len()) % 2) == 0 {
                v.clone()
            } else {
                -v.clone()
            };
            for b in c.coarsenings() {
                *terms.entry(b).or_default() += &signed;
            }
        }
        Ok(QSymElement::from_map(Basis::Monomial, terms))
    }

    /// True when all compositions rearranging to the same partition carry the
    /// same coefficient (absent terms counting as zero).
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.basis != Basis::Monomial {
            return Err(Error::BasisMismatch);
        }
        let mut classes: BTreeMap<Partition, (BigInt, u128)> = BTreeMap::new();
        for (c, v) in &self.terms {
            let p = c.to_partition();
            match classes.get_mut(&p) {
                None => {
                    classes.insert(p, (v.clone(), 1));
                }
                Some((coeff, count)) => {
                    if coeff != v {
                        return Ok(false);
                    }
                    *count += 1;
                }
            }
        }
        for (p, (_, count)) in &classes {
            if *count != rearrangement_count(p) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Collects a symmetric monomial expansion by partition.
    pub fn to_monomial_symmetric(&self) -> Result<BTreeMap<Partition, BigInt>> {
        if !self.is_symmetric()? {
            return Err(Error::NotSymmetric);
        }
        let mut out = BTreeMap::new();
        for (c, v) in &self.terms {
            out.entry(c.to_partition()).or_insert_with(|| v.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of the overlapping-shuffle product on the monomial
    /// basis.
    pub fn quasi_shuffle_product(&self, other: &QSymElement) -> Result<QSymElement> {
        if self.basis != Basis::Monomial || other.basis != Basis::Monomial {
            return Err(Error::BasisMismatch);
        }
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (a, va) in &self.terms {
            for (b, vb) in &other.terms {
                let coeff = va * vb;
                let mut word = Vec::with_capacity(a.len() + b.len());
                quasi_shuffles(a.parts(), b.parts(), &mut word, &mut |w| {
                    *terms.entry(Composition::new(w.to_vec()).unwrap()).or_default() += &coeff;
                });
            }
        }
        Ok(QSymElement::from_map(Basis::Monomial, terms))
    }

    /// Exact evaluation in `num_vars` commuting variables: each `M[a]` becomes
    /// the sum of the monomial with exponents `a` over strictly increasing
    /// index choices.
    pub fn evaluate_truncated(&self, num_vars: usize) -> Result<TruncatedPolynomial> {
        if self.basis != Basis::Monomial {
            return Err(Error::BasisMismatch);
        }
        let mut poly = TruncatedPolynomial::zero(num_vars);
        for (c, v) in &self.terms {
            if c.len() > num_vars {
                continue;
            }
            for idx in (0..num_vars).combinations(c.len()) {
                let mut expo = vec![0u32; num_vars];
                for (slot, &part) in idx.iter().zip(c.parts()) {
                    expo[*slot] = part;
                }
                *poly.terms.entry(expo).or_default() += v;
            }
        }
        poly.prune();
        Ok(poly)
    }

    pub fn to_json(&self) -> Result<String> {
        let repr = ElementRepr {
            basis: self.basis.letter().to_string(),
            terms: self
                .terms
                .iter()
                .map(|(c, v)| {
                    Ok(TermRepr {
                        composition: c.parts().to_vec(),
                        coeff: big_to_i64(v)?,
                    })
                })
                .collect::<Result<_>>()?,
        };
        serde_json::to_string(&repr).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<QSymElement> {
        let repr: ElementRepr =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let basis = match repr.basis.as_str() {
            "M" => Basis::Monomial,
            "F" => Basis::Fundamental,
            other => return Err(Error::Json(format!("unknown basis {other:?}"))),
        };
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for t in repr.terms {
            *terms.entry(Composition::new(t.composition)?).or_default() += BigInt::from(t.coeff);
        }
        Ok(QSymElement::from_map(basis, terms))
    }
}

fn big_to_i64(v: &BigInt) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Json("coefficient exceeds i64".into()))
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    composition: Vec<u32>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    basis: String,
    terms: Vec<TermRepr>,
}

/// Number of distinct rearrangements of a partition's parts.
fn rearrangement_count(p: &Partition) -> u128 {
    let mut count = factorial(p.len() as u128);
    let mut run = 1u128;
    let parts = p.parts();
    for i in 1..=parts.len() {
        if i < parts.len() && parts[i] == parts[i - 1] {
            run += 1;
        } else {
            count /= factorial(run);
            run = 1;
        }
    }
    count
}

fn factorial(n: u128) -> u128 {
    (1..=n).product::<u128>().max(1)
}

/// All interleavings of `a` and `b` keeping both orders, where one part of
/// each may fuse into a single summed part.
fn quasi_shuffles(a: &[u32], b: &[u32], word: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if a.is_empty() && b.is_empty() {
        emit(word);
        return;
    }
    if !a.is_empty() {
        word.push(a[0]);
        quasi_shuffles(&a[1..], b, word, emit);
        word.pop();
    }
    if !b.is_empty() {
        word.push(b[0]);
        quasi_shuffles(a, &b[1..], word, emit);
        word.pop();
    }
    if !a.is_empty() && !b.is_empty() {
        word.push(a[0] + b[0]);
        quasi_shuffles(&a[1..], &b[1..], word, emit);
        word.pop();
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.basis.letter(), self.terms.iter().map(|(c, v)| (c.to_string(), v)))
    }
}

/// Renders `c1*X[a1] + c2*X[a2] - ...` with unit coefficients elided.
fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    letter: &str,
    terms: impl Iterator<Item = (String, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (index, coeff) in terms {
        let mag = coeff.abs();
        if first {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag != BigInt::from(1) {
            write!(f, "{mag}*")?;
        }
        write!(f, "{letter}[{index}]")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// The unique splitting of `c` with a left factor of size `left_size`: either
/// a cut at a part boundary (concatenation) or inside a part
/// (near-concatenation).
pub fn split_at(c: &Composition, left_size: u32) -> (Composition, Composition) {
    debug_assert!(left_size <= c.size());
    let mut left = Vec::new();
    let mut acc = 0u32;
    let parts = c.parts();
    for (i, &p) in parts.iter().enumerate() {
        if acc == left_size {
            return (
                Composition::new(left).unwrap(),
                Composition::new(parts[i..].to_vec()).unwrap(),
            );
        }
        if acc + p <= left_size {
            left.push(p);
            acc += p;
        } else {
            let taken = left_size - acc;
            left.push(taken);
            let mut right = vec![p - taken];
            right.extend_from_slice(&parts[i + 1..]);
            return (
                Composition::new(left).unwrap(),
                Composition::new(right).unwrap(),
            );
        }
    }
    (Composition::new(left).unwrap(), Composition::empty())
}

/// An integer combination of `F (x) F` tensors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Composition, Composition), BigInt>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &Composition, right: &Composition) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            *terms.entry(k.clone()).or_default() += v;
        }
        terms.retain(|_, v| !v.is_zero());
        TensorElement { terms }
    }

    /// The product `f (x) g` of two fundamental expansions.
    pub fn tensor(f: &QSymElement, g: &QSymElement) -> Result<TensorElement> {
        if f.basis != Basis::Fundamental || g.basis != Basis::Fundamental {
            return Err(Error::BasisMismatch);
        }
        let mut terms: BTreeMap<(Composition, Composition), BigInt> = BTreeMap::new();
        for (a, va) in &f.terms {
            for (b, vb) in &g.terms {
                let entry = terms.entry((a.clone(), b.clone())).or_default();
                *entry += va * vb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(TensorElement { terms })
    }

    pub fn to_json(&self) -> Result<String> {
        let repr = TensorRepr {
            terms: self
                .terms
                .iter()
                .map(|((l, r), v)| {
                    Ok(TensorTermRepr {
                        left: l.parts().to_vec(),
                        right: r.parts().to_vec(),
                        coeff: big_to_i64(v)?,
                    })
                })
                .collect::<Result<_>>()?,
        };
        serde_json::to_string(&repr).map_err(|e| Error::Json(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    left: Vec<u32>,
    right: Vec<u32>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    terms: Vec<TensorTermRepr>,
}

/// The coproduct of a fundamental expansion: `F[a]` splits into the `size + 1`
/// left/right pairs joined by concatenation or near-concatenation, including
/// the two empty-sided terms.
pub fn coproduct_fundamental(f: &QSymElement) -> Result<TensorElement> {
    if f.basis() != Basis::Fundamental {
        return Err(Error::BasisMismatch);
    }
    let mut out = TensorElement::zero();
    for (c, v) in &f.terms {
        for k in 0..=c.size() {
            let (l, r) = split_at(c, k);
            *out.terms.entry((l, r)).or_default() += v;
        }
    }
    out.terms.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// A polynomial in finitely many variables with exact integer coefficients,
/// keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        TruncatedPolynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; num_vars], BigInt::from(1));
        TruncatedPolynomial { num_vars, terms }
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut out = TruncatedPolynomial::zero(num_vars);
        for (expo, coeff) in terms {
            debug_assert_eq!(expo.len(), num_vars);
            *out.terms.entry(expo).or_default() += coeff;
        }
        out.prune();
        out
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expo: &[u32]) -> BigInt {
        self.terms.get(expo).cloned().unwrap_or_default()
    }

    fn prune(&mut self) {
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut terms = self.terms.clone();
        for (e, v) in &other.terms {
            *terms.entry(e.clone()).or_default() += v;
        }
        let mut out = TruncatedPolynomial {
            num_vars: self.num_vars,
            terms,
        };
        out.prune();
        out
    }

    pub fn mul(&self, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, v1) in &self.terms {
            for (e2, v2) in &other.terms {
                let expo: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(expo).or_default() += v1 * v2;
            }
        }
        let mut out = TruncatedPolynomial {
            num_vars: self.num_vars,
            terms,
        };
        out.prune();
        out
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = self.terms.iter().map(|(expo, v)| {
            let mono: Vec<String> = expo
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let name = if mono.is_empty() {
                "1".to_string()
            } else {
                mono.join("*")
            };
            (name, v)
        });
        // reuse the signed-sum renderer with a bare index
        let mut first = true;
        for (name, coeff) in rendered {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != BigInt::from(1) || name == "1" {
                write!(f, "{mag}")?;
                if name != "1" {
                    write!(f, "*")?;
                }
            }
            if name != "1" {
                write!(f, "{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
