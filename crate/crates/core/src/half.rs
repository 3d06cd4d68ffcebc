//! Half-integers stored as doubled values.
//!
//! Angular-momentum labels (ranks, projections, weights) are integers or
//! half-odd-integers; [`HalfInt`] stores twice the value so that all
//! arithmetic and comparisons stay in `i32`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An exact half-integer (..., -1, -1/2, 0, 1/2, 1, ...).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt {
    two: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { two: 0 };

    /// Builds from twice the value: `from_two(3)` is 3/2.
    pub const fn from_two(two: i32) -> Self {
        HalfInt { two }
    }

    /// Builds from an integer value.
    pub const fn from_int(v: i32) -> Self {
        HalfInt { two: 2 * v }
    }

    /// Twice the value.
    pub const fn two(self) -> i32 {
        self.two
    }

    pub const fn is_integer(self) -> bool {
        self.two % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.two < 0
    }

    pub fn abs(self) -> Self {
        HalfInt {
            two: self.two.abs(),
        }
    }

    /// The integer value, if this is an integer.
    pub fn as_integer(self) -> Option<i32> {
        if self.is_integer() {
            Some(self.two / 2)
        } else {
            None
        }
    }

    /// Number of projections of a rank-`self` multiplet: 2k + 1.
    pub fn multiplicity(self) -> usize {
        assert!(self.two >= 0, "multiplicity of a negative rank");
        (self.two + 1) as usize
    }

    /// Iterates `lo, lo+1, ..., hi` in unit steps (both ends must share parity).
    pub fn range_inclusive(lo: HalfInt, hi: HalfInt) -> impl Iterator<Item = HalfInt> {
        assert!(
            (hi.two - lo.two) % 2 == 0,
            "range endpoints must differ by an integer"
        );
        (lo.two..=hi.two)
            .step_by(2)
            .map(HalfInt::from_two)
            .collect::<Vec<_>>()
            .into_iter()
    }

    /// Projections of a rank-`self` multiplet, ascending: -k, ..., +k.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        Self::range_inclusive(-self, self)
    }

    /// Renders with an explicit sign, as used for component labels: "+1", "-1/2", "0".
    pub fn signed_label(self) -> String {
        if self.two > 0 {
            format!("+{self}")
        } else {
            format!("{self}")
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt {
            two: self.two + o.two,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt {
            two: self.two - o.two,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { two: -self.two }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two % 2 == 0 {
            write!(f, "{}", self.two / 2)
        } else {
            write!(f, "{}/2", self.two)
        }
    }
}
