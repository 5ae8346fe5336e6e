use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Exact non-negative rational in lowest terms, used for run exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidRational(format!("{num}/0")));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(value: u64) -> Self {
        Rational { num: value, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn floor(&self) -> u64 {
        self.num / self.den
    }

    /// `<q> = q - floor(q)`.
    pub fn fract(&self) -> Rational {
        Rational {
            num: self.num % self.den,
            den: self.den,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// `q * len` when it is an integer.
    pub fn times(&self, len: usize) -> Option<usize> {
        let total = self.num as u128 * len as u128;
        if total.is_multiple_of(self.den as u128) {
            usize::try_from(total / self.den as u128).ok()
        } else {
            None
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => Rational::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
            None => Ok(Rational::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_orders() {
        let q = Rational::new(18, 4).unwrap();
        assert_eq!((q.numerator(), q.denominator()), (9, 2));
        assert_eq!(q.floor(), 4);
        assert_eq!(q.fract(), Rational::new(1, 2).unwrap());
        assert!(Rational::new(10, 3).unwrap() < Rational::new(11, 3).unwrap());
        assert_eq!(q.times(2), Some(9));
        assert_eq!(q.times(3), None);
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn parses_display_form() {
        assert_eq!("13/2".parse::<Rational>().unwrap().to_string(), "13/2");
        assert_eq!("10".parse::<Rational>().unwrap(), Rational::integer(10));
        assert!("x/2".parse::<Rational>().is_err());
    }
}
