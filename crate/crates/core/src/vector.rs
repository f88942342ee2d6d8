//! Finite-dimensional inner product spaces over ℝ or ℂ.
//!
//! The inner product is linear in the **first** slot and conjugate-linear in
//! the second: `inner(x, y) = Σ xᵢ · conj(yᵢ)`. All formulas in the crate are
//! written against this convention.
//!
//! JSON form of a vector: a real vector is an array of numbers, a complex
//! vector an array of `[re, im]` pairs. The field tag is inferred from the
//! element shape; mixing shapes is a parse error.

use crate::error::Error;
use crate::scalar::{Field, Scalar};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Element of a finite-dimensional inner product space (dimension ≥ 1).
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    /// Build a vector from tagged coordinates. All coordinates must share a
    /// field tag, be finite, and there must be at least one.
    pub fn new(coords: Vec<Scalar>) -> Result<Vector, Error> {
        let first = coords
            .first()
            .ok_or_else(|| Error::mismatch("vector must have dimension >= 1"))?;
        let field = first.field();
        for (i, c) in coords.iter().enumerate() {
            if c.field() != field {
                return Err(Error::mismatch(format!(
                    "coordinate {i} is {} in a {} vector",
                    c.field().name(),
                    field.name()
                )));
            }
            if !c.is_finite() {
                return Err(Error::mismatch(format!("coordinate {i} is not finite")));
            }
        }
        Ok(Vector { field, coords })
    }

    /// Real vector from raw coordinates.
    pub fn real(coords: &[f64]) -> Result<Vector, Error> {
        Vector::new(coords.iter().map(|&v| Scalar::real(v)).collect())
    }

    /// Complex vector from `(re, im)` pairs.
    pub fn complex(coords: &[(f64, f64)]) -> Result<Vector, Error> {
        Vector::new(coords.iter().map(|&(re, im)| Scalar::complex(re, im)).collect())
    }

    /// Zero vector of the given field and dimension (`dim ≥ 1`).
    pub fn zero(field: Field, dim: usize) -> Vector {
        assert!(dim >= 1, "dimension must be >= 1");
        Vector {
            field,
            coords: vec![Scalar::zero(field); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Scalar {
        self.coords[i]
    }

    /// True when every coordinate is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.re() == 0.0 && c.im() == 0.0)
    }

    /// Same dimension and same field.
    pub fn same_space(&self, other: &Vector) -> bool {
        self.dim() == other.dim() && self.field == other.field
    }

    // -- crate-internal arithmetic; callers validate dimensions first. ------
    // Fields join: scaling a real vector by a complex scalar yields a complex
    // vector, and sums promote accordingly. Vector-vs-vector field mismatch
    // is a user-facing error and is caught at the API boundaries instead.

    pub(crate) fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            field: self.field.join(other.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub(crate) fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            field: self.field.join(other.field),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// Coordinatewise multiplication by a scalar (left multiplication).
    pub(crate) fn scaled(&self, k: Scalar) -> Vector {
        Vector {
            field: self.field.join(k.field()),
            coords: self.coords.iter().map(|&c| k * c).collect(),
        }
    }

    pub(crate) fn scaled_re(&self, k: f64) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|&c| c.scale(k)).collect(),
        }
    }
}

/// Inner product, linear in the first slot: `Σ xᵢ · conj(yᵢ)`.
///
/// Errors with `InputMismatch` on dimension or field disagreement.
pub fn inner(x: &Vector, y: &Vector) -> Result<Scalar, Error> {
    if !x.same_space(y) {
        return Err(Error::mismatch(format!(
            "inner product needs one space: ({}, dim {}) vs ({}, dim {})",
            x.field().name(),
            x.dim(),
            y.field().name(),
            y.dim()
        )));
    }
    Ok(inner_unchecked(x, y))
}

pub(crate) fn inner_unchecked(x: &Vector, y: &Vector) -> Scalar {
    let mut acc = Scalar::zero(x.field().join(y.field()));
    for (&a, &b) in x.coords.iter().zip(&y.coords) {
        acc = acc + a * b.conj();
    }
    acc
}

/// Norm `sqrt(Re inner(x, x))`. Infallible: `inner(x, x)` is real
/// nonnegative up to rounding, and the square root of a tiny negative
/// rounding artifact is clamped to zero.
pub fn norm(x: &Vector) -> f64 {
    norm_sq(x).max(0.0).sqrt()
}

/// Squared norm `Re inner(x, x)`.
pub fn norm_sq(x: &Vector) -> f64 {
    x.coords.iter().map(|c| c.abs_sq()).sum()
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dim()))?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

struct VectorVisitor;

impl<'de> Visitor<'de> for VectorVisitor {
    type Value = Vector;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an array of numbers (real) or of [re, im] pairs (complex)")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vector, A::Error> {
        let mut coords: Vec<Scalar> = Vec::new();
        while let Some(c) = seq.next_element::<Scalar>()? {
            coords.push(c);
        }
        if coords.is_empty() {
            return Err(de::Error::custom("vector must have dimension >= 1"));
        }
        let field = coords[0].field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(de::Error::custom(
                "vector mixes bare numbers and [re, im] pairs",
            ));
        }
        Vector::new(coords).map_err(|e| de::Error::custom(e.to_string()))
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_seq(VectorVisitor)
    }
}

/// Default Gram-deviation tolerance for orthonormal families.
pub const DEFAULT_ORTHO_TOL: f64 = 1e-10;

/// A finite family of putatively orthonormal vectors in one space.
///
/// Construction checks the shape (nonempty, one common space) and computes
/// the Gram deviation once; whether the family passes its tolerance is kept
/// alongside, and operations that require orthonormality refuse families
/// that fail ([`Error::InvalidFamily`]).
#[derive(Clone, Debug)]
pub struct OrthonormalFamily {
    members: Vec<Vector>,
    ortho_tol: f64,
    max_deviation: f64,
}

/// Result of validating a family against its tolerance.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FamilyValidation {
    /// `max_{i,j} | inner(eᵢ, eⱼ) − δᵢⱼ |` over all ordered pairs.
    pub max_deviation: f64,
    pub ortho_tol: f64,
    pub pass: bool,
}

impl OrthonormalFamily {
    /// Build a family with the given Gram tolerance.
    pub fn new(members: Vec<Vector>, ortho_tol: f64) -> Result<OrthonormalFamily, Error> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if !(ortho_tol.is_finite() && ortho_tol > 0.0) {
            return Err(Error::BadTolerance(ortho_tol));
        }
        let first = &members[0];
        for (i, m) in members.iter().enumerate() {
            if !m.same_space(first) {
                return Err(Error::mismatch(format!(
                    "family member {i} lives in a different space than member 0"
                )));
            }
        }
        let max_deviation = gram_deviation(&members);
        Ok(OrthonormalFamily {
            members,
            ortho_tol,
            max_deviation,
        })
    }

    /// Build with [`DEFAULT_ORTHO_TOL`].
    pub fn with_default_tol(members: Vec<Vector>) -> Result<OrthonormalFamily, Error> {
        OrthonormalFamily::new(members, DEFAULT_ORTHO_TOL)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty families
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }

    pub fn field(&self) -> Field {
        self.members[0].field()
    }

    pub fn members(&self) -> &[Vector] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Vector {
        &self.members[i]
    }

    pub fn ortho_tol(&self) -> f64 {
        self.ortho_tol
    }

    /// Validation report: the largest entry-wise Gram deviation and whether
    /// it clears the tolerance. A family with more members than ambient
    /// dimensions always fails (its Gram matrix is singular, which forces a
    /// deviation of at least `1/len`).
    pub fn validate(&self) -> FamilyValidation {
        FamilyValidation {
            max_deviation: self.max_deviation,
            ortho_tol: self.ortho_tol,
            pass: self.max_deviation <= self.ortho_tol && self.len() <= self.dim(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().pass
    }

    /// Error unless the family validates; used by every consumer that needs
    /// actual orthonormality.
    pub(crate) fn require_valid(&self) -> Result<(), Error> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidFamily {
                max_deviation: self.max_deviation,
                ortho_tol: self.ortho_tol,
            })
        }
    }

    /// `Σ cᵢ · eᵢ` for a coefficient sequence of matching length.
    pub(crate) fn combination(&self, coeffs: &[Scalar]) -> Vector {
        debug_assert_eq!(coeffs.len(), self.len());
        let field = coeffs
            .iter()
            .fold(self.field(), |f, c| f.join(c.field()));
        let mut out = Vector::zero(field, self.dim());
        for (c, e) in coeffs.iter().zip(&self.members) {
            out = out.add(&e.scaled(*c));
        }
        out
    }
}

fn gram_deviation(members: &[Vector]) -> f64 {
    let mut max_dev: f64 = 0.0;
    for i in 0..members.len() {
        for j in 0..members.len() {
            let g = inner_unchecked(&members[i], &members[j]);
            let target = if i == j { 1.0 } else { 0.0 };
            let dev = ((g.re() - target).powi(2) + g.im().powi(2)).sqrt();
            max_dev = max_dev.max(dev);
        }
    }
    max_dev
}

/// Validate a family: free-function form of
/// [`OrthonormalFamily::validate`].
pub fn validate_family(family: &OrthonormalFamily) -> FamilyValidation {
    family.validate()
}
