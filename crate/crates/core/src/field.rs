//! Prime-field arithmetic and dense univariate polynomials.
//!
//! Only prime moduli are supported; [`PrimeField::new`] validates primality
//! once and every element carries its modulus so mixed-field arithmetic is
//! caught immediately. Polynomials are dense coefficient vectors in ascending
//! degree order with no trailing zeros so that equal polynomials compare
//! equal. Hasse derivatives use binomials reduced via Lucas' theorem, which
//! keeps them meaningful when the characteristic divides the usual factorial
//! factors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Deterministic Miller–Rabin primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Binomial coefficient `C(m, j)` reduced modulo the prime `p` via Lucas'
/// theorem: the product of digit-wise binomials in base `p`.
pub fn binomial_mod(p: u64, mut m: u64, mut j: u64) -> u64 {
    debug_assert!(is_prime(p));
    let mut acc = 1u64;
    while j > 0 || m > 0 {
        let (md, jd) = (m % p, j % p);
        if jd > md {
            return 0;
        }
        // Digit binomial C(md, jd) with md, jd < p: small enough to multiply out.
        let mut digit = 1u64;
        for t in 0..jd {
            digit = mul_mod(digit, md - t, p);
            digit = mul_mod(digit, inverse_mod(t + 1, p), p);
        }
        acc = mul_mod(acc, digit, p);
        m /= p;
        j /= p;
    }
    acc
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2). Caller guarantees a ≢ 0.
    pow_mod(a, p - 2, p)
}

/// A validated prime modulus; the entry point for building elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Validates primality of `p` (once; element operations assume it).
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// The modulus.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// The canonical residue of `value`.
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement { p: self.p, value: value % self.p }
    }

    /// Additive identity.
    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    /// Multiplicative identity.
    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// The smallest generator of the multiplicative group `F_p^×`.
    ///
    /// For `p = 2` this is 1 (the group is trivial). Candidates are tested in
    /// increasing order by checking `g^((p-1)/q) ≠ 1` for every prime factor
    /// `q` of `p − 1`.
    pub fn generator(&self) -> FieldElement {
        if self.p == 2 {
            return self.one();
        }
        let factors = distinct_prime_factors(self.p - 1);
        for g in 2..self.p {
            if factors.iter().all(|&q| pow_mod(g, (self.p - 1) / q, self.p) != 1) {
                return self.element(g);
            }
        }
        unreachable!("every prime field has a generator");
    }
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// A canonical residue together with its prime modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    p: u64,
    value: u64,
}

impl FieldElement {
    /// The canonical residue in `[0, p)`.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The modulus.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// True for the additive identity.
    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; zero has none.
    pub fn inverse(&self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::DivisionByZero { modulus: self.p });
        }
        Ok(FieldElement { p: self.p, value: inverse_mod(self.value, self.p) })
    }

    /// Square-and-multiply exponentiation; `x^0 = 1` including for `x = 0`.
    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement { p: self.p, value: pow_mod(self.value, exp, self.p) }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn assert_same_field(a: &FieldElement, b: &FieldElement) {
    assert_eq!(a.p, b.p, "elements of different fields: F_{} vs F_{}", a.p, b.p);
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(&self, &rhs);
        FieldElement { p: self.p, value: (self.value + rhs.value) % self.p }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(&self, &rhs);
        FieldElement { p: self.p, value: (self.p + self.value - rhs.value) % self.p }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(&self, &rhs);
        FieldElement { p: self.p, value: mul_mod(self.value, rhs.value, self.p) }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { p: self.p, value: (self.p - self.value) % self.p }
    }
}

/// Dense univariate polynomial over `F_p`, coefficients in ascending degree
/// order with no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl DensePoly {
    /// Builds a polynomial from coefficients `c_0, c_1, …` (any residues),
    /// trimming trailing zeros.
    pub fn from_coeffs(p: u64, coeffs: impl IntoIterator<Item = u64>) -> DensePoly {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DensePoly { p, coeffs }
    }

    /// The zero polynomial.
    pub fn zero(p: u64) -> DensePoly {
        DensePoly { p, coeffs: Vec::new() }
    }

    /// The monomial `x^m`.
    pub fn monomial(p: u64, m: usize) -> DensePoly {
        let mut coeffs = vec![0; m + 1];
        coeffs[m] = 1 % p;
        DensePoly::from_coeffs(p, coeffs)
    }

    /// The modulus.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Coefficients in ascending degree order.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Horner evaluation at `x`. Panics if `x` lives in a different field.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        assert_eq!(self.p, x.modulus(), "polynomial over F_{} evaluated at F_{}", self.p, x.modulus());
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x.value(), self.p) + c) % self.p;
        }
        FieldElement { p: self.p, value: acc }
    }

    /// The `j`-th Hasse derivative: `x^m ↦ C(m, j)·x^(m−j)` extended
    /// linearly, with binomials reduced via Lucas' theorem. `j = 0` is the
    /// identity; `j` beyond the degree gives zero.
    pub fn hasse_derivative(&self, j: usize) -> DensePoly {
        if j == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= j {
            return DensePoly::zero(self.p);
        }
        let coeffs = (j..self.coeffs.len())
            .map(|m| mul_mod(binomial_mod(self.p, m as u64, j as u64), self.coeffs[m], self.p))
            .collect::<Vec<_>>();
        DensePoly::from_coeffs(self.p, coeffs)
    }

    /// Sum of two polynomials over the same field.
    pub fn add(&self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.p, rhs.p, "polynomials over different fields");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs(self.p, (0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }

    /// Schoolbook product of two polynomials over the same field.
    pub fn mul(&self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.p, rhs.p, "polynomials over different fields");
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        DensePoly::from_coeffs(self.p, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primality_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(13).is_ok());
        assert!(PrimeField::new(1_000_003).is_ok());
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn inverse_small_cases() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.element(3).inverse().unwrap(), f7.element(5));
        assert_eq!(f7.element(1).inverse().unwrap(), f7.element(1));
        let f13 = PrimeField::new(13).unwrap();
        assert_eq!(f13.element(5).inverse().unwrap(), f13.element(8));
        assert_eq!(
            f13.element(0).inverse(),
            Err(Error::DivisionByZero { modulus: 13 })
        );
    }

    #[test]
    fn inverse_agrees_with_extended_euclid() {
        // Independent route: extended Euclid over signed integers.
        fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
            if b == 0 {
                (a, 1, 0)
            } else {
                let (g, x, y) = egcd(b, a % b);
                (g, y, x - (a / b) * y)
            }
        }
        for p in [2u64, 3, 5, 7, 13, 101] {
            let field = PrimeField::new(p).unwrap();
            for a in 1..p {
                let (g, x, _) = egcd(a as i64, p as i64);
                assert_eq!(g, 1);
                let expected = x.rem_euclid(p as i64) as u64;
                assert_eq!(field.element(a).inverse().unwrap().value(), expected);
            }
        }
    }

    /// Multiplicative order computed by repeated multiplication.
    fn order(field: &PrimeField, g: u64) -> u64 {
        let mut acc = field.element(g);
        let mut ord = 1;
        while acc.value() != 1 {
            acc = acc * field.element(g);
            ord += 1;
        }
        ord
    }

    #[test]
    fn generator_is_smallest_primitive_root() {
        // Independent route: scan residues in order, checking the order by
        // brute-force multiplication.
        for p in [2u64, 3, 5, 7, 11, 13, 101] {
            let field = PrimeField::new(p).unwrap();
            let expected = if p == 2 {
                1
            } else {
                (2..p).find(|&g| order(&field, g) == p - 1).unwrap()
            };
            assert_eq!(field.generator().value(), expected);
        }
        assert_eq!(PrimeField::new(7).unwrap().generator().value(), 3);
        assert_eq!(PrimeField::new(13).unwrap().generator().value(), 2);
    }

    #[test]
    fn poly_eval_matches_term_by_term() {
        let p = 5;
        let f = DensePoly::from_coeffs(p, [1, 2, 1]);
        let field = PrimeField::new(p).unwrap();
        // Term-by-term: 1 + 2·2 + 2² = 9 ≡ 4.
        assert_eq!(f.eval(field.element(2)).value(), 4);
        for x in 0..p {
            let expected: u64 = (0..=2).map(|m| f.coeff(m) * x.pow(m as u32)).sum::<u64>() % p;
            assert_eq!(f.eval(field.element(x)).value(), expected);
        }
    }

    #[test]
    fn poly_eval_edge_cases() {
        let field = PrimeField::new(7).unwrap();
        assert_eq!(DensePoly::zero(7).eval(field.element(3)).value(), 0);
        assert_eq!(DensePoly::from_coeffs(7, [4]).eval(field.element(6)).value(), 4);
    }

    #[test]
    #[should_panic(expected = "polynomial over F_5 evaluated at F_7")]
    fn poly_eval_rejects_foreign_elements() {
        let f = DensePoly::from_coeffs(5, [1, 1]);
        let _ = f.eval(PrimeField::new(7).unwrap().element(1));
    }

    #[test]
    fn hasse_derivative_base_cases() {
        // C(3,2)·x over F_7.
        assert_eq!(
            DensePoly::monomial(7, 3).hasse_derivative(2),
            DensePoly::from_coeffs(7, [0, 3])
        );
        // C(2,1) = 2 ≡ 0 over F_2, so the derivative vanishes.
        assert_eq!(DensePoly::monomial(2, 2).hasse_derivative(1), DensePoly::zero(2));
        // Order 0 is the identity; order past the degree is zero.
        let f = DensePoly::from_coeffs(5, [1, 0, 0, 0, 1]);
        assert_eq!(f.hasse_derivative(0), f);
        assert_eq!(f.hasse_derivative(5), DensePoly::zero(5));
        assert_eq!(f.hasse_derivative(1), DensePoly::from_coeffs(5, [0, 0, 0, 4]));
    }

    #[test]
    fn lucas_binomials() {
        assert_eq!(binomial_mod(7, 3, 2), 3);
        assert_eq!(binomial_mod(2, 2, 1), 0);
        assert_eq!(binomial_mod(3, 10, 5), {
            // C(10,5) = 252 ≡ 0 mod 3 (digits: 10 = 101₃, 5 = 012₃, middle digit fails).
            0
        });
        assert_eq!(binomial_mod(5, 10, 5), 252 % 5);
        assert_eq!(binomial_mod(13, 6, 3), 20 % 13);
    }

    proptest! {
        #[test]
        fn inverse_is_an_involution(a in 1u64..13, ) {
            let field = PrimeField::new(13).unwrap();
            let x = field.element(a);
            let inv = x.inverse().unwrap();
            prop_assert_eq!((x * inv).value(), 1);
            prop_assert_eq!(inv.inverse().unwrap(), x);
        }

        #[test]
        fn hasse_satisfies_the_product_rule(
            fc in proptest::collection::vec(0u64..7, 0..6),
            gc in proptest::collection::vec(0u64..7, 0..6),
            j in 0usize..6,
        ) {
            // H^j(f·g) = Σ_{a+b=j} H^a(f)·H^b(g).
            let f = DensePoly::from_coeffs(7, fc);
            let g = DensePoly::from_coeffs(7, gc);
            let lhs = f.mul(&g).hasse_derivative(j);
            let mut rhs = DensePoly::zero(7);
            for a in 0..=j {
                rhs = rhs.add(&f.hasse_derivative(a).mul(&g.hasse_derivative(j - a)));
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_linear(
            fc in proptest::collection::vec(0u64..11, 0..6),
            gc in proptest::collection::vec(0u64..11, 0..6),
            x in 0u64..11,
        ) {
            let field = PrimeField::new(11).unwrap();
            let f = DensePoly::from_coeffs(11, fc);
            let g = DensePoly::from_coeffs(11, gc);
            let x = field.element(x);
            prop_assert_eq!(f.add(&g).eval(x), f.eval(x) + g.eval(x));
        }
    }
}
