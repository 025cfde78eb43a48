//! The torus algebra: two idempotents and the chords `ρ1, ρ2, ρ3` with
//! `ρ2ρ1 = ρ3ρ2 = 0`. Elements are F₂-combinations of the eight basis
//! elements, stored as a bit mask.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Idempotent {
    #[serde(rename = "iota0")]
    Zero,
    #[serde(rename = "iota1")]
    One,
}

impl Idempotent {
    pub fn basis(self) -> Basis {
        match self {
            Idempotent::Zero => Basis::Iota0,
            Idempotent::One => Basis::Iota1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Idempotent::Zero => "iota0",
            Idempotent::One => "iota1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Iota0,
    Iota1,
    Rho1,
    Rho2,
    Rho3,
    Rho12,
    Rho23,
    Rho123,
}

impl Basis {
    pub const ALL: [Basis; 8] =
        [Basis::Iota0, Basis::Iota1, Basis::Rho1, Basis::Rho2, Basis::Rho3, Basis::Rho12, Basis::Rho23, Basis::Rho123];

    fn bit(self) -> u8 {
        1 << self as u8
    }

    /// `(left, right)` idempotents with `left · self · right = self`.
    pub fn idempotents(self) -> (Idempotent, Idempotent) {
        use Idempotent::{One, Zero};
        match self {
            Basis::Iota0 | Basis::Rho12 => (Zero, Zero),
            Basis::Iota1 | Basis::Rho23 => (One, One),
            Basis::Rho1 | Basis::Rho3 | Basis::Rho123 => (Zero, One),
            Basis::Rho2 => (One, Zero),
        }
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self, Basis::Iota0 | Basis::Iota1)
    }

    /// Product of two basis elements; `None` is zero.
    pub fn product(self, other: Basis) -> Option<Basis> {
        if self.idempotents().1 != other.idempotents().0 {
            return None;
        }
        if self.is_idempotent() {
            return Some(other);
        }
        if other.is_idempotent() {
            return Some(self);
        }
        match (self, other) {
            (Basis::Rho1, Basis::Rho2) => Some(Basis::Rho12),
            (Basis::Rho2, Basis::Rho3) => Some(Basis::Rho23),
            (Basis::Rho1, Basis::Rho23) | (Basis::Rho12, Basis::Rho3) => Some(Basis::Rho123),
            _ => None,
        }
    }

    /// Edge label: `1` for idempotents.
    pub fn edge_label(self) -> &'static str {
        match self {
            Basis::Iota0 | Basis::Iota1 => "1",
            Basis::Rho1 => "ρ1",
            Basis::Rho2 => "ρ2",
            Basis::Rho3 => "ρ3",
            Basis::Rho12 => "ρ12",
            Basis::Rho23 => "ρ23",
            Basis::Rho123 => "ρ123",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Iota0 => "iota0",
            Basis::Iota1 => "iota1",
            Basis::Rho1 => "rho1",
            Basis::Rho2 => "rho2",
            Basis::Rho3 => "rho3",
            Basis::Rho12 => "rho12",
            Basis::Rho23 => "rho23",
            Basis::Rho123 => "rho123",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown algebra element {0:?}")]
pub struct UnknownBasis(pub String);

impl FromStr for Basis {
    type Err = UnknownBasis;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Basis::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| UnknownBasis(s.to_string()))
    }
}

/// An element of the algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element(u8);

impl Element {
    pub const ZERO: Element = Element(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, basis: Basis) -> bool {
        self.0 & basis.bit() != 0
    }

    pub fn terms(self) -> impl Iterator<Item = Basis> {
        Basis::ALL.into_iter().filter(move |&b| self.contains(b))
    }
}

impl From<Basis> for Element {
    fn from(basis: Basis) -> Self {
        Element(basis.bit())
    }
}

// Addition and multiplication are over F2.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Element {
    type Output = Element;

    fn add(self, other: Element) -> Element {
        Element(self.0 ^ other.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Element {
    fn add_assign(&mut self, other: Element) {
        self.0 ^= other.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Element {
    type Output = Element;

    fn mul(self, other: Element) -> Element {
        let mut out = Element::ZERO;
        for a in self.terms() {
            for b in other.terms() {
                if let Some(p) = a.product(b) {
                    out += p.into();
                }
            }
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names: Vec<_> = self.terms().map(Basis::name).collect();
        f.write_str(&names.join(" + "))
    }
}

/// The full multiplication table, row `a`, column `b` holding `a · b`.
pub fn multiplication_table() -> [[Option<Basis>; 8]; 8] {
    Basis::ALL.map(|a| Basis::ALL.map(|b| a.product(b)))
}
