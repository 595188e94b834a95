use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::field::{Field, Rational};

use super::{LinalgError, Matrix, RationalMatrix};

/// Integer polynomial, lowest degree first, primitive with positive leading
/// coefficient. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Serialized as the coefficient array, lowest degree first; coefficients
/// beyond 64 bits become decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<Rational> = self.coeffs.iter().map(|c| Rational::from(c.clone())).collect();
        coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        if coeffs.iter().any(|c| !c.is_integer()) {
            return Err(serde::de::Error::custom("polynomial coefficients must be integers"));
        }
        Ok(IntPolynomial::new(coeffs.iter().map(Rational::numer).collect()))
    }
}

impl IntPolynomial {
    /// Normalizes: strips trailing zeros, divides out the content and makes
    /// the leading coefficient positive.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return IntPolynomial { coeffs };
        }
        let content = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if coeffs.last().unwrap().is_negative() { -1 } else { 1 };
        let divisor = content * sign;
        IntPolynomial { coeffs: coeffs.into_iter().map(|c| c / &divisor).collect() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators of a rational polynomial.
    pub fn from_rational(coeffs: &[Rational]) -> Self {
        let den = Rational::common_denominator(coeffs);
        Self::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn as_rational(&self) -> Vec<Rational> {
        self.coeffs.iter().cloned().map(Rational::from).collect()
    }

    /// `p(A)` by Horner's rule.
    pub fn evaluate(&self, a: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if !a.is_square() {
            return Err(LinalgError::NonSquare { rows: a.rows(), cols: a.cols() });
        }
        let n = a.rows();
        let mut acc = RationalMatrix::zeros(n, n);
        for c in self.as_rational().iter().rev() {
            acc = acc.mul_ok(a).add(&RationalMatrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    /// Exact division test: does `self` divide `other` in Q[x]?
    pub fn divides(&self, other: &IntPolynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let (_, r) = poly_divrem(&other.as_rational(), &self.as_rational());
        r.is_empty()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

type QPoly = Vec<Rational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Field::is_zero) {
        p.pop();
    }
    p
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (QPoly, QPoly) {
    let den = trim(den.to_vec());
    let mut rem = trim(num.to_vec());
    let lead = den.last().expect("division by zero polynomial").inv();
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap().mul(&lead);
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] = rem[shift + i].sub(&c.mul(d));
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    trim(out)
}

fn monic(p: QPoly) -> QPoly {
    let p = trim(p);
    match p.last() {
        Some(l) => {
            let inv = l.inv();
            p.iter().map(|c| c.mul(&inv)).collect()
        }
        None => p,
    }
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn poly_lcm(a: &[Rational], b: &[Rational]) -> QPoly {
    let g = poly_gcd(a, b);
    let (q, r) = poly_divrem(&poly_mul(a, b), &g);
    debug_assert!(r.is_empty());
    monic(q)
}

/// `p(A) v` by Horner's rule.
fn apply_poly(p: &[Rational], a: &RationalMatrix, v: &[Rational]) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); v.len()];
    for c in p.iter().rev() {
        acc = a.mul_vec(&acc);
        for (x, y) in acc.iter_mut().zip(v) {
            x.add_mul(c, y);
        }
    }
    acc
}

/// Monic polynomial of least degree annihilating `v` under `A`, found as the
/// first linear dependency among `v, Av, A^2 v, ...`.
fn local_annihilator(a: &RationalMatrix, v: Vec<Rational>) -> QPoly {
    // Each basis row: (reduced vector, pivot index, combination of iterates).
    let mut basis: Vec<(Vec<Rational>, usize, QPoly)> = Vec::new();
    let mut iterate = v;
    for k in 0..=a.rows() {
        let mut w = iterate.clone();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::one();
        for (b, p, bc) in &basis {
            if w[*p].is_zero() {
                continue;
            }
            let factor = w[*p].div(&b[*p]);
            for (x, y) in w.iter_mut().zip(b) {
                *x = x.sub(&factor.mul(y));
            }
            for (x, y) in combo.iter_mut().zip(bc) {
                *x = x.sub(&factor.mul(y));
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => return monic(combo),
            Some(p) => basis.push((w, p, combo)),
        }
        iterate = a.mul_vec(&iterate);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Minimal polynomial of a square rational matrix: the lcm over the standard
/// basis of the local annihilators, computed exactly.
pub fn minimal_polynomial(a: &RationalMatrix) -> Result<IntPolynomial, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut m: QPoly = vec![Rational::one()];
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if apply_poly(&m, a, &e).iter().all(Field::is_zero) {
            continue;
        }
        m = poly_lcm(&m, &local_annihilator(a, e));
    }
    Ok(IntPolynomial::from_rational(&m))
}

/// `A^2 = id` exactly.
pub fn check_identity_square(a: &RationalMatrix) -> Result<bool, LinalgError> {
    Ok(a.pow(2)?.is_identity())
}

/// `(A + id)^2 = 0` exactly.
pub fn check_nilpotent_shift(a: &RationalMatrix) -> Result<bool, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let shifted = a.add(&Matrix::identity(a.rows()))?;
    Ok(shifted.pow(2)?.is_zero())
}
