//! Exact half-integer arithmetic.
//!
//! Gleams live in (1/2)Z. To keep every computation exact we store the
//! *doubled* value as an `i64`, so `Half::new(3)` is 3/2 and `Half::new(-4)`
//! is -2. All arithmetic is plain integer arithmetic on the doubled values.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// A half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Half(pub i64);

impl Half {
    pub const ZERO: Half = Half(0);

    /// Builds a half-integer from its doubled value.
    pub fn new(doubled: i64) -> Half {
        Half(doubled)
    }

    /// Builds a whole number.
    pub fn whole(n: i64) -> Half {
        Half(2 * n)
    }

    /// The doubled value, i.e. `2 * self`.
    pub fn doubled(self) -> i64 {
        self.0
    }

    /// True iff the value is an integer.
    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if the half-integer is whole.
    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, rhs: Half) {
        self.0 += rhs.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl SubAssign for Half {
    fn sub_assign(&mut self, rhs: Half) {
        self.0 -= rhs.0;
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Sum for Half {
    fn sum<I: Iterator<Item = Half>>(iter: I) -> Half {
        Half(iter.map(|h| h.0).sum())
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Half::new(3).to_string(), "3/2");
        assert_eq!(Half::new(-5).to_string(), "-5/2");
        assert_eq!(Half::new(-4).to_string(), "-2");
        assert_eq!(Half::whole(7).to_string(), "7");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Half::new(3) + Half::new(-5), Half::new(-2));
        assert_eq!(Half::whole(2) - Half::new(1), Half::new(3));
        assert_eq!(-Half::new(3), Half::new(-3));
        assert!(Half::new(4).is_integer());
        assert!(!Half::new(3).is_integer());
        assert_eq!(Half::new(4).as_integer(), Some(2));
        assert_eq!(Half::new(3).as_integer(), None);
    }
}
