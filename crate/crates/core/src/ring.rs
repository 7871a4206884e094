//! Exact coefficient rings and signs.

use std::fmt::{Debug, Display};
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

/// Commutative ring with exact arithmetic used for weights and Pfaffians.
pub trait Ring: Clone + Debug + Display + PartialEq + Num + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
    fn to_rational(&self) -> BigRational;
    /// Returns `None` when `q` has no exact representative (a non-integral rational for `BigInt`).
    fn from_rational(q: &BigRational) -> Option<Self>;

    fn parse_exact(s: &str) -> Option<Self> {
        let q = parse_rational(s)?;
        Self::from_rational(&q)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        q.is_integer().then(|| q.to_integer())
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(n: usize) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Sign of a nonzero ring element.
    pub fn of<R: Ring>(x: &R) -> Option<Sign> {
        if x.is_zero() {
            None
        } else if x.is_negative() {
            Some(Sign::Minus)
        } else {
            Some(Sign::Plus)
        }
    }

    pub fn apply<R: Ring>(self, x: R) -> R {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn to_ring<R: Ring>(self) -> R {
        self.apply(R::one())
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Product of ring elements, one for the empty product.
pub fn product<'a, R: Ring, I: IntoIterator<Item = &'a R>>(it: I) -> R {
    it.into_iter().fold(R::one(), |acc, x| acc * x.clone())
}
