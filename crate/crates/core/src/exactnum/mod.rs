//! Exact scalars and polynomials in λ.
//!
//! Everything downstream is built on two types: [`Rational`] (arbitrary
//! precision, lowest terms) and [`LambdaPoly`] (dense polynomials in λ with
//! rational coefficients). λ stays symbolic throughout, so a polynomial
//! identity verified here holds for every value of λ at once; numeric λ is
//! obtained by [`LambdaPoly::eval`].

mod poly;
mod rational;

pub use poly::LambdaPoly;
pub(crate) use poly::ZERO_POLY;
pub use rational::Rational;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// n! as an exact rational. Negative input is an error.
pub fn factorial(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok(fact(n as usize))
}

pub(crate) fn fact(n: usize) -> Rational {
    let mut acc = BigInt::from(1u8);
    for i in 2..=n {
        acc *= i;
    }
    Rational::from(acc)
}

/// C(n, k) = (n)ₖ / k!, valid for every integer n (so C(−1, 0) = 1 and
/// C(0, 1) = 0).
pub fn binomial(n: i64, k: u32) -> Rational {
    falling_factorial(&Rational::integer(n), k as usize) / fact(k as usize)
}

/// (x)ₙ = x(x−1)…(x−n+1).
pub fn falling_factorial(x: &Rational, n: usize) -> Rational {
    (0..n).map(|i| x - Rational::from(i)).product()
}

/// ⟨x⟩ₙ = x(x+1)…(x+n−1).
pub fn rising_factorial(x: &Rational, n: usize) -> Rational {
    (0..n).map(|i| x + Rational::from(i)).product()
}

/// (x)ₙ,λ = x(x−λ)(x−2λ)…(x−(n−1)λ) in Q[λ].
pub fn lambda_falling_factorial(x: &LambdaPoly, n: usize) -> LambdaPoly {
    lambda_step_product(x, n, -1)
}

/// ⟨x⟩ₙ,λ = x(x+λ)(x+2λ)…(x+(n−1)λ) in Q[λ].
pub fn lambda_rising_factorial(x: &LambdaPoly, n: usize) -> LambdaPoly {
    lambda_step_product(x, n, 1)
}

fn lambda_step_product(x: &LambdaPoly, n: usize, step: i64) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for i in 0..n {
        let term = x + &LambdaPoly::monomial(Rational::integer(step * i as i64), 1);
        acc = &acc * &term;
    }
    acc
}

/// (−1)^e as a rational.
pub fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_and_binomial_examples() {
        assert_eq!(factorial(5).unwrap(), 120);
        assert_eq!(factorial(0).unwrap(), 1);
        assert_eq!(factorial(-1), Err(Error::NegativeFactorial(-1)));
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(-1, 0), 1);
        assert_eq!(binomial(0, 1), 0);
        assert_eq!(binomial(-1, 3), -1);
        assert_eq!(binomial(2, 5), 0);
    }

    #[test]
    fn factorial_exceeds_u64() {
        assert_eq!(fact(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn lambda_factorials() {
        let one = LambdaPoly::one();
        assert_eq!(lambda_falling_factorial(&one, 2), LambdaPoly::from_integers(&[1, -1]));
        assert_eq!(lambda_rising_factorial(&one, 3), LambdaPoly::from_integers(&[1, 3, 2]));
        assert_eq!(lambda_falling_factorial(&LambdaPoly::zero(), 0), LambdaPoly::one());
        assert!(lambda_falling_factorial(&LambdaPoly::zero(), 3).is_zero());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q))
    }

    fn small_poly() -> impl Strategy<Value = LambdaPoly> {
        prop::collection::vec(small_rational(), 0..5).prop_map(LambdaPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn negate_lambda_is_an_involution(a in small_poly()) {
            prop_assert_eq!(a.negate_lambda().negate_lambda(), a);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), v in small_rational()) {
            prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
            prop_assert_eq!((&a + &b).eval(&v), a.eval(&v) + b.eval(&v));
        }

        #[test]
        fn stored_form_is_normalized(a in small_poly(), b in small_poly()) {
            let p = &a * &b - &b * &a;
            prop_assert!(p.is_zero());
            let q = &a + &b;
            prop_assert!(q.coeffs().last().is_none_or(|c| !c.is_zero()));
        }
    }
}
