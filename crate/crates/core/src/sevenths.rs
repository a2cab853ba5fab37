use core::fmt;
use core::ops::{Add, AddAssign, Sub};

/// An exact rational with denominator 7, stored as its numerator.
///
/// Every bound in this crate is a multiple of 1/7, so comparisons stay exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sevenths(pub i64);

impl Sevenths {
    pub const ZERO: Sevenths = Sevenths(0);

    pub fn from_integer(k: i64) -> Self {
        Sevenths(7 * k)
    }

    pub fn numerator(self) -> i64 {
        self.0
    }

    /// Largest integer not exceeding the value.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(7)
    }

    /// `(2m - n + 2)/7`, the bound before the error term.
    pub fn base_bound(n: usize, m: usize) -> Self {
        Sevenths(2 * m as i64 - n as i64 + 2)
    }
}

impl Add for Sevenths {
    type Output = Sevenths;
    fn add(self, rhs: Sevenths) -> Sevenths {
        Sevenths(self.0 + rhs.0)
    }
}

impl AddAssign for Sevenths {
    fn add_assign(&mut self, rhs: Sevenths) {
        self.0 += rhs.0;
    }
}

impl Sub for Sevenths {
    type Output = Sevenths;
    fn sub(self, rhs: Sevenths) -> Sevenths {
        Sevenths(self.0 - rhs.0)
    }
}

impl core::iter::Sum for Sevenths {
    fn sum<I: Iterator<Item = Sevenths>>(iter: I) -> Sevenths {
        iter.fold(Sevenths::ZERO, Add::add)
    }
}

impl fmt::Display for Sevenths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 7 == 0 {
            write!(f, "{}", self.0 / 7)
        } else {
            write!(f, "{}/7", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_display() {
        assert_eq!(Sevenths(42).floor(), 6);
        assert_eq!(Sevenths(13).floor(), 1);
        assert_eq!(Sevenths(-1).floor(), -1);
        assert_eq!(alloc::format!("{}", Sevenths(4)), "4/7");
        assert_eq!(alloc::format!("{}", Sevenths(14)), "2");
        // dodecahedron: 2*30 - 20 + 2 = 42
        assert_eq!(Sevenths::base_bound(20, 30), Sevenths(42));
    }
}
