//! Scalars over ℝ or ℂ with an explicit field tag.
//!
//! Every scalar carries the field it lives in. Real scalars keep `im == 0`
//! as a hard invariant; arithmetic joins tags (real ∘ real stays real,
//! anything touching a complex operand becomes complex). The tag is what
//! lets vectors reject mixed-field combinations instead of silently
//! promoting.

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// The scalar field a value (or a whole vector) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    /// The smallest field containing both operands.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Real && other == Field::Real {
            Field::Real
        } else {
            Field::Complex
        }
    }

    /// Lower-case name used in configuration and CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }

    pub fn parse(s: &str) -> Option<Field> {
        match s {
            "real" => Some(Field::Real),
            "complex" => Some(Field::Complex),
            _ => None,
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Field::parse(&s).ok_or_else(|| de::Error::custom(format!("unknown field '{s}'")))
    }
}

/// A tagged real or complex number.
///
/// Invariant: `field == Real` implies `im == 0.0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scalar {
    field: Field,
    re: f64,
    im: f64,
}

impl Scalar {
    pub const ZERO_REAL: Scalar = Scalar {
        field: Field::Real,
        re: 0.0,
        im: 0.0,
    };

    pub fn real(v: f64) -> Scalar {
        Scalar {
            field: Field::Real,
            re: v,
            im: 0.0,
        }
    }

    pub fn complex(re: f64, im: f64) -> Scalar {
        Scalar {
            field: Field::Complex,
            re,
            im,
        }
    }

    /// Zero in the given field.
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Real => Scalar::real(0.0),
            Field::Complex => Scalar::complex(0.0, 0.0),
        }
    }

    /// One in the given field.
    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Real => Scalar::real(1.0),
            Field::Complex => Scalar::complex(1.0, 0.0),
        }
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Complex conjugate (identity on real scalars).
    pub fn conj(self) -> Scalar {
        Scalar {
            field: self.field,
            re: self.re,
            im: -self.im,
        }
    }

    /// Squared modulus `re² + im²`.
    pub fn abs_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Modulus.
    pub fn abs(self) -> f64 {
        if self.field == Field::Real {
            self.re.abs()
        } else {
            self.re.hypot(self.im)
        }
    }

    /// Multiplication by a real coefficient, preserving the field tag.
    pub fn scale(self, k: f64) -> Scalar {
        Scalar {
            field: self.field,
            re: self.re * k,
            im: self.im * k,
        }
    }

    /// Re-tag a real scalar as complex (no-op on complex scalars).
    pub fn as_complex(self) -> Scalar {
        Scalar {
            field: Field::Complex,
            ..self
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            field: self.field.join(rhs.field),
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            field: self.field.join(rhs.field),
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar {
            field: self.field.join(rhs.field),
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        let d = rhs.abs_sq();
        Scalar {
            field: self.field.join(rhs.field),
            re: (self.re * rhs.re + self.im * rhs.im) / d,
            im: (self.im * rhs.re - self.re * rhs.im) / d,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field,
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Field::Real => write!(f, "{}", self.re),
            Field::Complex => write!(f, "{}{:+}i", self.re, self.im),
        }
    }
}

/// JSON form: a real scalar is a bare number, a complex scalar is a
/// two-element array `[re, im]`. The field tag is inferred from the shape.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.field {
            Field::Real => serializer.serialize_f64(self.re),
            Field::Complex => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(&self.re)?;
                seq.serialize_element(&self.im)?;
                seq.end()
            }
        }
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a number (real) or a two-element [re, im] array (complex)")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
        Ok(Scalar::real(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::real(v as f64))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        Ok(Scalar::real(v as f64))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Scalar, A::Error> {
        let re: f64 = seq
            .next_element()?
            .ok_or_else(|| de::Error::custom("complex scalar needs [re, im]"))?;
        let im: f64 = seq
            .next_element()?
            .ok_or_else(|| de::Error::custom("complex scalar needs [re, im]"))?;
        if seq.next_element::<f64>()?.is_some() {
            return Err(de::Error::custom("complex scalar has more than two parts"));
        }
        Ok(Scalar::complex(re, im))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}
