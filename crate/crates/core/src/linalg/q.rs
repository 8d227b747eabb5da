use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

/// Exact rational that stays on `i64` until an operation would overflow.
#[derive(Clone)]
pub enum Q {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Q {
    pub fn int(v: i64) -> Q {
        Q::Small(Ratio::from_integer(v))
    }

    pub fn zero() -> Q {
        Q::int(0)
    }

    pub fn one() -> Q {
        Q::int(1)
    }

    pub fn from_big(r: BigRational) -> Q {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Q::Small(Ratio::new_raw(n, d)),
            _ => Q::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Q::Small(r) => r.is_zero(),
            Q::Big(r) => r.is_zero(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::Small(r) => r.numer().signum() as i32,
            Q::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    fn op(
        &self,
        other: &Q,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, other) {
            if let Some(r) = small(a, b) {
                return Q::Small(r);
            }
        }
        Q::from_big(big(self.to_big(), other.to_big()))
    }
}

impl PartialEq for Q {
    fn eq(&self, other: &Q) -> bool {
        match (self, other) {
            (Q::Small(a), Q::Small(b)) => a == b,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Q {}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> Ordering {
        match (self, other) {
            (Q::Small(a), Q::Small(b)) => {
                // cross-multiply in i128 to avoid overflow
                let l = *a.numer() as i128 * *b.denom() as i128;
                let r = *b.numer() as i128 * *a.denom() as i128;
                l.cmp(&r)
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_big())
    }
}

impl Add for &Q {
    type Output = Q;
    fn add(self, rhs: &Q) -> Q {
        self.op(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }
}

impl Sub for &Q {
    type Output = Q;
    fn sub(self, rhs: &Q) -> Q {
        self.op(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }
}

impl Mul for &Q {
    type Output = Q;
    fn mul(self, rhs: &Q) -> Q {
        self.op(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }
}

impl Div for &Q {
    type Output = Q;
    fn div(self, rhs: &Q) -> Q {
        assert!(!rhs.is_zero(), "division by zero");
        self.op(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(-*r),
            _ => Q::from_big(-self.to_big()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_falls_back() {
        let big = Q::int(i64::MAX);
        let s = &big + &big;
        assert!(matches!(s, Q::Big(_)));
        let back = &s - &big;
        assert!(matches!(back, Q::Small(_)));
        assert_eq!(back, big);
        let third = &Q::one() / &Q::int(3);
        assert_eq!(&(&third * &Q::int(3)) - &Q::one(), Q::zero());
        assert!(Q::int(-2) < third);
    }
}
