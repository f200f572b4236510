//! Exact counting: a truncated power-series solver for `M = A(xM)` and the
//! closed forms for each colour system.
//!
//! Binomials follow the combinatorial convention: `binom(a, b) = 0` when
//! `a < 0`, `b < 0` or `b > a`. Every `1/(…)` prefactor is applied as an
//! exact integer division, checked at run time.

use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

/// Default truncation order for [`solve_master`].
pub const DEFAULT_ORDER: usize = 32;

/// A power series truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::new(vec![BigInt::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::new(vec![BigInt::zero(), BigInt::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// `A(inner)` for `A` with coefficients `outer`; `inner` must have no
    /// constant term.
    pub fn compose(outer: &[BigInt], inner: &Series) -> Series {
        assert!(inner.coeffs[0].is_zero(), "inner series must vanish at 0");
        let order = inner.order();
        let mut acc = Series::zero(order);
        for a in outer.iter().take(order + 1).rev() {
            acc = &(&acc * inner) + &Series::new(vec![a.clone()], order);
        }
        acc
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(
            (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
            order,
        )
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series::new(out, order)
    }
}

/// Solves `M = A(xM)` modulo `x^(order+1)` where `A = Σ a_k x^k`; missing
/// weights count as zero.
///
/// Coefficients are produced in order: `c_n = Σ_{k=1}^{n} a_k [x^{n-k}] M^k`
/// only involves `c_0 … c_{n-1}`.
pub fn solve_master(weights: &[BigInt], order: usize) -> Series {
    let a = |k: usize| weights.get(k).cloned().unwrap_or_default();
    let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
    // powers[k][j] = [x^j] M^k, filled one column j at a time
    let mut powers: Vec<Vec<BigInt>> = vec![Vec::with_capacity(order + 1); order + 1];
    for n in 0..=order {
        let cn = if n == 0 {
            a(0)
        } else {
            (1..=n).fold(BigInt::zero(), |acc, k| acc + a(k) * &powers[k][n - k])
        };
        c.push(cn);
        powers[0].push(if n == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
        for k in 1..=order {
            let value = (0..=n).fold(BigInt::zero(), |acc, i| acc + &c[i] * &powers[k - 1][n - i]);
            powers[k].push(value);
        }
    }
    Series::new(c, order)
}

/// Unsigned convenience wrapper around [`solve_master`].
pub fn master_coefficients(weights: &[BigUint], order: usize) -> Vec<BigUint> {
    let signed: Vec<BigInt> = weights.iter().map(|w| BigInt::from(w.clone())).collect();
    solve_master(&signed, order)
        .coeffs()
        .iter()
        .map(to_unsigned)
        .collect()
}

/// Binomial coefficient, zero outside `0 ≤ b ≤ a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn exact_div(num: BigInt, den: i64) -> BigInt {
    let den = BigInt::from(den);
    let (q, r) = (&num / &den, &num % &den);
    assert!(r.is_zero(), "inexact division {num} / {den}");
    q
}

fn to_unsigned(value: &BigInt) -> BigUint {
    assert!(!value.is_negative(), "negative count {value}");
    value.to_biguint().expect("nonnegative")
}

fn sign(p: i64) -> BigInt {
    if p % 2 == 0 {
        BigInt::one()
    } else {
        BigInt::from_biguint(Sign::Minus, BigUint::one())
    }
}

/// `binom(3n, n) / (2n+1)`: Catalan-coloured Dyck paths, equivalently
/// non-crossing trees on `n+1` points.
pub fn count_catalan_coloured(n: usize) -> BigUint {
    let n = n as i64;
    to_unsigned(&exact_div(binom(3 * n, n), 2 * n + 1))
}

/// Dyck paths coloured by paths with ascents of length at most `m`.
///
/// `Σ_p (-1)^p / (n-mp) · binom(n-mp, p) · binom(3n-mp-p, n-mp-1)` over
/// every `p ≥ 0` with `n - mp ≥ 1`.
pub fn count_bounded(n: usize, m: usize) -> BigUint {
    assert!(m >= 1, "bound must be at least 1");
    if n == 0 {
        return BigUint::one();
    }
    let (n, m) = (n as i64, m as i64);
    let mut total = BigInt::zero();
    let mut p = 0;
    while n - m * p >= 1 {
        let r = n - m * p;
        let term = binom(r, p) * binom(3 * n - m * p - p, r - 1);
        total += sign(p) * exact_div(term, r);
        p += 1;
    }
    to_unsigned(&total)
}

/// Dyck paths coloured by concatenations of pyramids of size at most `m`.
///
/// `Σ_{l=0}^{n-1} 1/(l+1) · binom(n+l+1, l) · Σ_{i=0}^{l+1} (-1)^i
/// binom(n-1-mi, l) binom(l+1, i)`.
pub fn count_fibonacci(n: usize, m: usize) -> BigUint {
    assert!(m >= 1, "bound must be at least 1");
    if n == 0 {
        return BigUint::one();
    }
    let (n, m) = (n as i64, m as i64);
    let mut total = BigInt::zero();
    for l in 0..n {
        let inner = (0..=l + 1).fold(BigInt::zero(), |acc, i| {
            acc + sign(i) * binom(n - 1 - m * i, l) * binom(l + 1, i)
        });
        total += exact_div(binom(n + l + 1, l) * inner, l + 1);
    }
    to_unsigned(&total)
}

/// Little Schröder numbers: `(1/n) Σ_{i=0}^{n-1} binom(n,i) binom(n,i+1) 2^i`.
pub fn count_little_schroeder(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let n = n as i64;
    let sum = (0..n).fold(BigInt::zero(), |acc, i| {
        acc + binom(n, i) * binom(n, i + 1) * (BigInt::one() << i as usize)
    });
    to_unsigned(&exact_div(sum, n))
}

/// Schröder-coloured Dyck paths, equivalently T-paths to `(3n, 0)`:
/// `(1/n) Σ_{k=0}^{n-1} binom(2n,k) binom(n,k+1) 2^(k+1)`.
pub fn count_schroeder_coloured(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let n = n as i64;
    let sum = (0..n).fold(BigInt::zero(), |acc, k| {
        acc + binom(2 * n, k) * binom(n, k + 1) * (BigInt::one() << (k + 1) as usize)
    });
    to_unsigned(&exact_div(sum, n))
}
