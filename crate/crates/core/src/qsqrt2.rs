//! Exact arithmetic in `ℚ(√2)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// `a + b·√2` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: BigRational,
    pub b: BigRational,
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Always `p/q`, never a bare integer.
pub fn rational_text(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> QSqrt2 {
        QSqrt2 { a, b }
    }

    pub fn zero() -> QSqrt2 {
        QSqrt2::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> QSqrt2 {
        QSqrt2::from_int(1)
    }

    pub fn from_int(k: i64) -> QSqrt2 {
        QSqrt2::new(ratio(k, 1), BigRational::zero())
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64)) -> QSqrt2 {
        QSqrt2::new(ratio(a.0, a.1), ratio(b.0, b.1))
    }

    pub fn sqrt2() -> QSqrt2 {
        QSqrt2::new(BigRational::zero(), BigRational::one())
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> QSqrt2 {
        QSqrt2::new(BigRational::zero(), ratio(1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a - b·√2`.
    pub fn conj(&self) -> QSqrt2 {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }

    /// `a² - 2b²`, zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - ratio(2, 1) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<QSqrt2> {
        if self.is_zero() {
            return None;
        }
        let nm = self.norm();
        let c = self.conj();
        Some(QSqrt2::new(c.a / &nm, c.b / nm))
    }

    pub fn to_json_value(&self) -> QSqrt2Json {
        QSqrt2Json {
            a: rational_text(&self.a),
            b: rational_text(&self.b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSqrt2Json {
    pub a: String,
    pub b: String,
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: &QSqrt2) -> QSqrt2 {
        let two = ratio(2, 1);
        QSqrt2::new(
            &self.a * &o.a + two * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

impl Div for &QSqrt2 {
    type Output = QSqrt2;
    fn div(self, o: &QSqrt2) -> QSqrt2 {
        self * &o.inverse().expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, o: QSqrt2) -> QSqrt2 {
                (&self).$m(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);
by_value!(Div, div);

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -&self
    }
}

impl fmt::Display for QSqrt2 {
    /// `0`, `1`, `-1/√2`, `3/2+1/2√2` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let half = ratio(1, 2);
        let radical = if self.b.abs() == half {
            format!("{}1/√2", if self.b.is_negative() { "-" } else { "" })
        } else {
            format!("{}√2", self.b)
        };
        if self.a.is_zero() {
            f.write_str(&radical)
        } else if radical.starts_with('-') {
            write!(f, "{}{}", self.a, radical)
        } else {
            write!(f, "{}+{}", self.a, radical)
        }
    }
}
