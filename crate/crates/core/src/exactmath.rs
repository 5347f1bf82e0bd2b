//! Exact rational arithmetic and dense univariate polynomials.
//!
//! Everything downstream (subset sums, weight shifts, interpolation) is
//! computed over arbitrary-precision rationals; no floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in reduced form with a positive
/// denominator (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`; intended for literals in code and tests.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `x^k` for a non-negative exponent, with `0^0 = 1`.
pub fn pow_usize(x: &Rational, k: usize) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    if x.is_zero() {
        return Rational::zero();
    }
    x.pow(k as i32)
}

/// Dense univariate polynomial over `Rational`.
///
/// Coefficients are stored constant-first and kept trimmed: the leading
/// coefficient is nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Build from constant-first coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `v^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant-first coefficient slice (trimmed form).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }
}

/// Unique polynomial of degree < `points.len()` through the given nodes.
///
/// Errors with `DuplicateNode` if two nodes share an x-coordinate.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().take(i) {
            if xi == xj {
                return Err(Error::DuplicateNode(xi.to_string()));
            }
        }
    }
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        // numerator prod_{j != i} (v - x_j), denominator prod_{j != i} (x_i - x_j)
        let mut basis = Poly::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Poly::from_coeffs(vec![-xj.clone(), Rational::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Ok(acc)
}

/// Substitute `v -> v + a`, i.e. return `q` with `q(v) = p(v + a)`.
///
/// This is the exact basis change used to rebase a polynomial from powers of
/// `v` to powers of `v - (-a)`.
pub fn shift_substitute(p: &Poly, a: &Rational) -> Poly {
    // Horner on p with x := (v + a): acc = acc*(v+a) + c_i.
    let shift = Poly::from_coeffs(vec![a.clone(), Rational::one()]);
    let mut acc = Poly::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&shift).add(&Poly::constant(c.clone()));
    }
    acc
}

/// Sum of `c * x^k` terms given as `(k, c)`; convenience for sparse builds.
pub fn poly_from_terms(terms: &[(usize, Rational)]) -> Poly {
    let deg = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (k, c) in terms {
        coeffs[*k] += c;
    }
    Poly::from_coeffs(coeffs)
}

/// Checked conversion to a `BigInt`; errors if the value is not integral.
pub fn to_int(x: &Rational) -> Result<Int> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InvalidInput(format!("expected an integer, got {x}")))
    }
}

/// Absolute value.
pub fn rat_abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_exactness() {
        let a = ratio(1, 3);
        let b = ratio(1, 6);
        assert_eq!(&a + &b, ratio(1, 2));
        let c = ratio(355, 113);
        assert_eq!((&a + &c) - &c, a);
        // reduced form with positive denominator
        let d = Rational::new(Int::from(-4), Int::from(-6));
        assert_eq!(d, ratio(2, 3));
    }

    #[test]
    fn eval_and_arith() {
        // p = 1 + 2v + 3v^2
        let p = Poly::from_coeffs(vec![rat(1), rat(2), rat(3)]);
        assert_eq!(p.eval(&rat(2)), rat(17));
        assert_eq!(p.degree(), Some(2));
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
        assert_eq!(p.mul(&Poly::constant(rat(2))).eval(&rat(2)), rat(34));
    }

    #[test]
    fn interpolate_line() {
        // nodes (0,1), (1,3) -> 1 + 2v
        let p = lagrange_interpolate(&[(rat(0), rat(1)), (rat(1), rat(3))]).unwrap();
        assert_eq!(p.coeffs(), &[rat(1), rat(2)]);
    }

    #[test]
    fn interpolate_quadratic_rational_nodes() {
        let p = Poly::from_coeffs(vec![ratio(1, 2), rat(0), ratio(-3, 7)]);
        let nodes: Vec<_> = [rat(-1), ratio(2, 5), rat(4)]
            .into_iter()
            .map(|x| {
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(lagrange_interpolate(&nodes).unwrap(), p);
    }

    #[test]
    fn interpolate_duplicate_node() {
        let err = lagrange_interpolate(&[(rat(1), rat(1)), (rat(1), rat(2))]).unwrap_err();
        assert!(matches!(err, Error::DuplicateNode(_)));
    }

    #[test]
    fn shift_by_constant() {
        // p(v) = v^2, p(v+1) = v^2 + 2v + 1
        let p = Poly::from_coeffs(vec![rat(0), rat(0), rat(1)]);
        let s = shift_substitute(&p, &rat(1));
        assert_eq!(s.coeffs(), &[rat(1), rat(2), rat(1)]);
        // shifting back is the identity
        assert_eq!(shift_substitute(&s, &rat(-1)), p);
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(pow_usize(&rat(0), 0), rat(1));
        assert_eq!(pow_usize(&rat(0), 3), rat(0));
        assert_eq!(pow_usize(&ratio(-1, 2), 2), ratio(1, 4));
    }
}
