use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Dense univariate polynomial in the indeterminate λ over the rationals.
///
/// `coeffs[i]` is the coefficient of λ^i. The highest stored coefficient is
/// never zero, so the zero polynomial has no stored coefficients and equality
/// is plain vector equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

pub(crate) static ZERO_POLY: LambdaPoly = LambdaPoly { coeffs: Vec::new() };

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::integer(c))
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c·λ^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value when the polynomial does not depend on λ.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Exact evaluation at λ = `v` (Horner).
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// The polynomial p(−λ).
    pub fn negate_lambda(&self) -> Self {
        LambdaPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by λ^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        LambdaPoly { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient strings lowest power first; zero serializes as `["0"]`.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(Rational::to_string).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(items: &[S]) -> crate::Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<crate::Result<Vec<Rational>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        LambdaPoly::constant(c)
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{i}"),
            };
            if i == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{var}")?;
            } else if magnitude.is_integer() {
                write!(f, "{magnitude}{var}")?;
            } else {
                write!(f, "({magnitude}){var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LambdaPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LambdaPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        LambdaPoly::from_coeff_strings(&items).map_err(serde::de::Error::custom)
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> LambdaPoly {
    let n = a.len().max(b.len());
    let coeffs = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    LambdaPoly::from_coeffs(coeffs)
}

fn mul_coeffs(a: &[Rational], b: &[Rational]) -> LambdaPoly {
    if a.is_empty() || b.is_empty() {
        return LambdaPoly::zero();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    LambdaPoly::from_coeffs(out)
}

macro_rules! poly_binop {
    ($Trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a> $Trait<&'a LambdaPoly> for &'a LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: &'a LambdaPoly) -> LambdaPoly {
                let ($a, $b) = (&self.coeffs, &rhs.coeffs);
                $body
            }
        }
        impl $Trait<LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $Trait<&'a LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: &'a LambdaPoly) -> LambdaPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $Trait<LambdaPoly> for &'a LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                self.$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| add_coeffs(a, b, false));
poly_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
poly_binop!(Mul, mul, |a, b| mul_coeffs(a, b));

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign<LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: LambdaPoly) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        *self = &*self - rhs;
    }
}

impl Sum for LambdaPoly {
    fn sum<I: Iterator<Item = LambdaPoly>>(iter: I) -> Self {
        iter.fold(LambdaPoly::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a LambdaPoly> for LambdaPoly {
    fn sum<I: Iterator<Item = &'a LambdaPoly>>(iter: I) -> Self {
        iter.fold(LambdaPoly::zero(), |acc, x| acc + x)
    }
}
