//! Cosine matrices of generator subsets and an exact definiteness test.
//!
//! The characteristic polynomial is computed with Berkowitz's division-free
//! algorithm. A real symmetric matrix has only real eigenvalues, so Descartes'
//! rule of signs counts the positive and negative eigenvalues exactly and the
//! number of vanishing low-order coefficients is the nullity.
//!
//! When every entry is the cosine of a multiple of `pi/12` or `pi/5` the
//! coefficients live in `Z[sqrt2, sqrt3, sqrt5]` (after scaling by 4) and
//! their signs are decided exactly. Other angles go through certified
//! interval arithmetic with increasing precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coxeter::{CoxeterMatrix, Exponent, GenSet};

/// Starting precision (bits) of the interval path.
pub const START_PRECISION: u32 = 64;
/// The interval path gives up beyond this precision.
pub const MAX_PRECISION: u32 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosineError {
    #[error("could not separate an eigenvalue from zero at {0} bits of precision")]
    PrecisionExhausted(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DefinitenessClass {
    PositiveDefinite,
    PsdSingular,
    Indefinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Definiteness {
    pub class: DefinitenessClass,
    /// Dimension of the kernel.
    pub nullity: usize,
    pub negative: usize,
}

impl Definiteness {
    pub fn is_positive_definite(&self) -> bool {
        self.class == DefinitenessClass::PositiveDefinite
    }
}

/// Symmetric matrix with entries `cos(theta_ij * pi)`, the angles stored as
/// exact rationals. The diagonal angle is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosineMatrix {
    names: Vec<String>,
    angles: Vec<Ratio<i64>>,
}

impl CosineMatrix {
    /// `angles` is row-major `n x n`; it must be symmetric with zero diagonal.
    pub fn from_angles(names: Vec<String>, angles: Vec<Ratio<i64>>) -> Self {
        let n = names.len();
        assert_eq!(angles.len(), n * n, "angle matrix has the wrong size");
        for i in 0..n {
            assert!(angles[i * n + i].is_zero(), "diagonal angle must be 0");
            for j in 0..i {
                assert_eq!(angles[i * n + j], angles[j * n + i], "angles must be symmetric");
            }
        }
        CosineMatrix { names, angles }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The entry is `cos(angle(i, j) * pi)`.
    pub fn angle(&self, i: usize, j: usize) -> Ratio<i64> {
        self.angles[i * self.size() + j]
    }

    pub fn entry_f64(&self, i: usize, j: usize) -> f64 {
        let a = self.angle(i, j);
        (*a.numer() as f64 / *a.denom() as f64 * std::f64::consts::PI).cos()
    }
}

/// Angle (as a multiple of pi) whose cosine is `-cos(pi/m)`.
pub fn exponent_angle(m: Exponent) -> Ratio<i64> {
    match m {
        Exponent::Finite(m) => Ratio::one() - Ratio::new(1, m as i64),
        Exponent::Infinite => Ratio::one(),
    }
}

pub fn cosine_matrix(m: &CoxeterMatrix, t: GenSet) -> CosineMatrix {
    let idx = t.to_vec();
    let n = idx.len();
    let mut angles = vec![Ratio::zero(); n * n];
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            if a != b {
                angles[a * n + b] = exponent_angle(m.m(i, j));
            }
        }
    }
    CosineMatrix::from_angles(m.names(t), angles)
}

pub fn definiteness(c: &CosineMatrix) -> Result<Definiteness, CosineError> {
    let n = c.size();
    if n == 0 {
        return Ok(classify_signs(&[1]));
    }
    let exact: Option<Vec<Surd>> = c.angles.iter().map(|&a| exact_four_cos(a)).collect();
    if let Some(entries) = exact {
        if let Some(poly) = berkowitz(&entries, n) {
            let signs: Vec<i8> = poly.iter().map(Surd::sign).collect();
            return Ok(classify_signs(&signs));
        }
    }
    let mut prec = START_PRECISION;
    loop {
        let entries: Vec<Interval> = c.angles.iter().map(|&a| cos_interval(a, prec)).collect();
        let poly = berkowitz(&entries, n).expect("interval arithmetic does not overflow");
        if let Some(signs) = resolve_signs(&poly.iter().map(Interval::sign).collect::<Vec<_>>()) {
            return Ok(classify_signs(&signs));
        }
        if prec >= MAX_PRECISION {
            return Err(CosineError::PrecisionExhausted(prec));
        }
        prec *= 2;
    }
}

/// Fills in undecided coefficient signs where the answer cannot matter.
///
/// A characteristic polynomial of a symmetric matrix is real-rooted, so by
/// Newton's inequalities a vanishing coefficient other than a trailing one
/// sits between nonzero neighbours of opposite signs. Any sign given to an
/// undecided coefficient there leaves the sign-change count unchanged, and
/// it cannot be trailing. Trailing zeros, which carry the nullity, must be
/// decided.
fn resolve_signs(signs: &[Option<i8>]) -> Option<Vec<i8>> {
    let n = signs.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        match signs[k] {
            Some(s) => out.push(s),
            None if k > 0 && k + 1 < n => match (signs[k - 1], signs[k + 1]) {
                (Some(a), Some(b)) if a * b < 0 => out.push(0),
                _ => return None,
            },
            None => return None,
        }
    }
    Some(out)
}

/// `signs[k]` is the sign of the coefficient of `x^(n-k)` in `det(xI - A)`.
fn classify_signs(signs: &[i8]) -> Definiteness {
    let n = signs.len() - 1;
    let nullity = signs.iter().rev().take_while(|&&s| s == 0).count();
    let flipped: Vec<i8> = signs
        .iter()
        .enumerate()
        .map(|(k, &s)| if (n - k) % 2 == 1 { -s } else { s })
        .collect();
    let negative = sign_changes(&flipped);
    let class = match (negative, nullity) {
        (0, 0) => DefinitenessClass::PositiveDefinite,
        (0, _) => DefinitenessClass::PsdSingular,
        _ => DefinitenessClass::Indefinite,
    };
    Definiteness { class, nullity, negative }
}

fn sign_changes(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

trait CheckedRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

/// Coefficients of `det(xI - A)` from the highest degree down.
fn berkowitz<R: CheckedRing>(a: &[R], n: usize) -> Option<Vec<R>> {
    let at = |i: usize, j: usize| &a[i * n + j];
    let mut p = vec![R::one()];
    for r in 0..n {
        let mut t = vec![R::one(), at(r, r).neg()?];
        let mut v: Vec<R> = (0..r).map(|i| at(i, r).clone()).collect();
        for k in 0..r {
            let mut s = R::zero();
            for (j, vj) in v.iter().enumerate() {
                s = s.add(&at(r, j).mul(vj)?)?;
            }
            t.push(s.neg()?);
            if k + 1 < r {
                let mut w = Vec::with_capacity(r);
                for i in 0..r {
                    let mut s = R::zero();
                    for (j, vj) in v.iter().enumerate() {
                        s = s.add(&at(i, j).mul(vj)?)?;
                    }
                    w.push(s);
                }
                v = w;
            }
        }
        let mut q = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = R::zero();
            for j in 0..=i.min(r) {
                s = s.add(&t[i - j].mul(&p[j])?)?;
            }
            q.push(s);
        }
        p = q;
    }
    Some(p)
}

const PRIMES: [i64; 3] = [2, 3, 5];

/// Element of `Z[sqrt2, sqrt3, sqrt5]`. Index bit 0 is sqrt2, bit 1 sqrt3,
/// bit 2 sqrt5; basis products are `e_i e_j = (shared primes) e_(i xor j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Surd([i128; 8]);

fn basis_factor(mask: usize) -> i128 {
    (0..3).filter(|b| mask >> b & 1 == 1).map(|b| PRIMES[b] as i128).product()
}

impl Surd {
    fn int(v: i128) -> Self {
        let mut c = [0; 8];
        c[0] = v;
        Surd(c)
    }

    fn from_coeffs(pairs: &[(usize, i128)]) -> Self {
        let mut c = [0; 8];
        for &(i, v) in pairs {
            c[i] += v;
        }
        Surd(c)
    }

    pub(crate) fn to_f64(self) -> f64 {
        (0..8).map(|i| self.0[i] as f64 * (basis_factor(i) as f64).sqrt()).sum()
    }

    pub(crate) fn sign(&self) -> i8 {
        let approx = self.to_f64();
        let scale: f64 =
            (0..8).map(|i| (self.0[i] as f64).abs() * (basis_factor(i) as f64).sqrt()).sum();
        if approx.abs() > scale * 1e-12 {
            return if approx > 0.0 { 1 } else { -1 };
        }
        let big: Vec<BigInt> = self.0.iter().map(|&v| BigInt::from(v)).collect();
        exact_sign(&big, &PRIMES)
    }
}

impl CheckedRing for Surd {
    fn zero() -> Self {
        Surd([0; 8])
    }
    fn one() -> Self {
        Surd::int(1)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        let mut c = [0; 8];
        for i in 0..8 {
            c[i] = self.0[i].checked_add(o.0[i])?;
        }
        Some(Surd(c))
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        let mut c = [0i128; 8];
        for i in (0..8).filter(|&i| self.0[i] != 0) {
            for j in (0..8).filter(|&j| o.0[j] != 0) {
                let t = self.0[i].checked_mul(o.0[j])?.checked_mul(basis_factor(i & j))?;
                c[i ^ j] = c[i ^ j].checked_add(t)?;
            }
        }
        Some(Surd(c))
    }
    fn neg(&self) -> Option<Self> {
        let mut c = [0; 8];
        for i in 0..8 {
            c[i] = self.0[i].checked_neg()?;
        }
        Some(Surd(c))
    }
}

/// Sign of `sum c_i e_i` over the multiquadratic ring generated by the square
/// roots of `primes`, by descending the tower one square root at a time.
fn exact_sign(c: &[BigInt], primes: &[i64]) -> i8 {
    let Some((&d, lower)) = primes.split_last() else {
        return match c[0].sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        };
    };
    let half = c.len() / 2;
    let (p, q) = c.split_at(half);
    let sp = exact_sign(p, lower);
    let sq = exact_sign(q, lower);
    if sq == 0 || sp == sq {
        return if sp == 0 { sq } else { sp };
    }
    if sp == 0 {
        return sq;
    }
    // p + q*sqrt(d) has the sign of p exactly when p^2 > d q^2.
    let p2 = big_mul(p, p, lower);
    let q2 = big_mul(q, q, lower);
    let norm: Vec<BigInt> = p2.iter().zip(&q2).map(|(a, b)| a - b * d).collect();
    sp * exact_sign(&norm, lower)
}

fn big_mul(a: &[BigInt], b: &[BigInt], primes: &[i64]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len()];
    for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let f: i64 = (0..primes.len())
                .filter(|k| (i & j) >> k & 1 == 1)
                .map(|k| primes[k])
                .product();
            out[i ^ j] += ai * bj * f;
        }
    }
    out
}

/// Reduces an angle (multiple of pi) to `[0, 1]` with the same cosine.
fn reduce_angle(r: Ratio<i64>) -> Ratio<i64> {
    let two = Ratio::from_integer(2);
    let mut r = r % two;
    if r < Ratio::zero() {
        r += two;
    }
    if r > Ratio::one() {
        r = two - r;
    }
    r
}

/// `4 cos(r pi)` when it lies in `Z[sqrt2, sqrt3, sqrt5]`.
pub(crate) fn exact_four_cos(r: Ratio<i64>) -> Option<Surd> {
    let r = reduce_angle(r);
    let (neg, r) = if r > Ratio::new(1, 2) { (true, Ratio::one() - r) } else { (false, r) };
    let (num, den) = (*r.numer(), *r.denom());
    // Basis indices: 1 = sqrt2, 2 = sqrt3, 3 = sqrt6, 4 = sqrt5.
    let v = match (num, den) {
        (0, _) => Surd::int(4),
        (1, 2) => Surd::int(0),
        (1, 3) => Surd::int(2),
        (1, 4) => Surd::from_coeffs(&[(1, 2)]),
        (1, 6) => Surd::from_coeffs(&[(2, 2)]),
        (1, 12) => Surd::from_coeffs(&[(1, 1), (3, 1)]),
        (5, 12) => Surd::from_coeffs(&[(1, -1), (3, 1)]),
        (1, 5) => Surd::from_coeffs(&[(0, 1), (4, 1)]),
        (2, 5) => Surd::from_coeffs(&[(0, -1), (4, 1)]),
        _ => return None,
    };
    Some(if neg { v.neg().expect("small") } else { v })
}

/// A closed interval `[lo, hi] / 2^prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn shr_floor(x: &BigInt, s: u32) -> BigInt {
    x >> s
}

fn shr_ceil(x: &BigInt, s: u32) -> BigInt {
    -((-x) >> s)
}

impl Interval {
    fn exact(v: BigInt, prec: u32) -> Self {
        Interval { lo: v.clone(), hi: v, prec }
    }

    fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

impl CheckedRing for Interval {
    // The ring constants carry precision 0 and adopt the other operand's.
    fn zero() -> Self {
        Interval::exact(BigInt::zero(), 0)
    }
    fn one() -> Self {
        Interval::exact(BigInt::one(), 0)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        let (a, b) = align(self, o);
        Some(Interval { lo: &a.lo + &b.lo, hi: &a.hi + &b.hi, prec: a.prec })
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        let (a, b) = align(self, o);
        let prods = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let min = prods.iter().min().expect("four products");
        let max = prods.iter().max().expect("four products");
        Some(Interval { lo: shr_floor(min, a.prec), hi: shr_ceil(max, a.prec), prec: a.prec })
    }
    fn neg(&self) -> Option<Self> {
        Some(Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec })
    }
}

fn align(a: &Interval, b: &Interval) -> (Interval, Interval) {
    let p = a.prec.max(b.prec);
    let lift = |x: &Interval| Interval { lo: &x.lo << (p - x.prec), hi: &x.hi << (p - x.prec), prec: p };
    (lift(a), lift(b))
}

/// Fixed-point `atan(1/k)` at scale `2^w` with an error bound in ulps.
fn atan_inv(k: u32, w: u32) -> (BigInt, BigInt) {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = (BigInt::one() << w) / &k;
    let mut sum = BigInt::zero();
    let mut j: u32 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = &power / &k2;
        j += 1;
    }
    (sum, BigInt::from(2 * j + 2))
}

/// Bounds on pi at scale `2^w`.
fn pi_bounds(w: u32) -> (BigInt, BigInt) {
    let (a, ea) = atan_inv(5, w);
    let (b, eb) = atan_inv(239, w);
    let approx = a * 16 - b * 4;
    let err = ea * 16 + eb * 4;
    (&approx - &err, approx + err)
}

/// Fixed-point `cos(x)` for `0 <= x < 2` at scale `2^w`, with an error bound.
fn cos_point(x: &BigInt, w: u32) -> (BigInt, BigInt) {
    let x2 = (x * x) >> w;
    let mut term = BigInt::one() << w;
    let mut sum = term.clone();
    let mut k: u64 = 1;
    loop {
        term = (&term * &x2) >> w;
        term /= BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    (sum, BigInt::from(16 * (k + 2)))
}

/// Certified enclosure of `cos(r pi)` at precision `prec`.
fn cos_interval(r: Ratio<i64>, prec: u32) -> Interval {
    let r = reduce_angle(r);
    let (neg, r) = if r > Ratio::new(1, 2) { (true, Ratio::one() - r) } else { (false, r) };
    let guard = 32;
    let w = prec + guard;
    let (num, den) = (BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    let (plo, phi) = pi_bounds(w);
    let x_lo = (plo * &num).div_floor(&den);
    let x_hi = {
        let t = phi * &num;
        -((-t).div_floor(&den))
    };
    // cos is decreasing on [0, pi/2].
    let (c_hi, e_hi) = cos_point(&x_lo.max(BigInt::zero()), w);
    let (c_lo, e_lo) = cos_point(&x_hi, w);
    let lo = shr_floor(&(c_lo - e_lo), guard);
    let hi = shr_ceil(&(c_hi + e_hi), guard);
    let iv = Interval { lo, hi, prec };
    if neg {
        iv.neg().expect("interval negation")
    } else {
        iv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(m: Exponent) -> CosineMatrix {
        let cm = CoxeterMatrix::new(&["s", "t"], &[(0, 1, m)], Exponent::Infinite).unwrap();
        cosine_matrix(&cm, cm.all())
    }

    fn triangle(a: u32, b: u32, c: u32) -> CoxeterMatrix {
        CoxeterMatrix::new(
            &["s", "t", "u"],
            &[
                (0, 1, Exponent::Finite(a)),
                (1, 2, Exponent::Finite(b)),
                (0, 2, Exponent::Finite(c)),
            ],
            Exponent::Infinite,
        )
        .unwrap()
    }

    #[test]
    fn two_by_two_entries() {
        assert!((pair(Exponent::Finite(3)).entry_f64(0, 1) + 0.5).abs() < 1e-15);
        assert!((pair(Exponent::Infinite).entry_f64(0, 1) + 1.0).abs() < 1e-15);
        assert!(pair(Exponent::Finite(2)).entry_f64(0, 1).abs() < 1e-15);
    }

    #[test]
    fn two_by_two_definiteness() {
        let d = definiteness(&pair(Exponent::Finite(3))).unwrap();
        assert_eq!(d.class, DefinitenessClass::PositiveDefinite);
        let d = definiteness(&pair(Exponent::Infinite)).unwrap();
        assert_eq!((d.class, d.nullity), (DefinitenessClass::PsdSingular, 1));
        let d = definiteness(&pair(Exponent::Finite(7))).unwrap();
        assert_eq!(d.class, DefinitenessClass::PositiveDefinite);
    }

    #[test]
    fn affine_triangle_is_singular() {
        // Eigenvalues of the (3,3,3) cosine matrix: 0, 3/2, 3/2.
        let m = triangle(3, 3, 3);
        let d = definiteness(&cosine_matrix(&m, m.all())).unwrap();
        assert_eq!((d.class, d.nullity, d.negative), (DefinitenessClass::PsdSingular, 1, 0));
    }

    #[test]
    fn hyperbolic_triangle_is_indefinite() {
        let m = triangle(3, 3, 4);
        let d = definiteness(&cosine_matrix(&m, m.all())).unwrap();
        assert_eq!((d.class, d.negative), (DefinitenessClass::Indefinite, 1));
    }

    #[test]
    fn exact_cosines_match_floats() {
        for den in [1i64, 2, 3, 4, 5, 6, 12] {
            for num in 0..2 * den {
                let r = Ratio::new(num, den);
                if let Some(s) = exact_four_cos(r) {
                    let f = 4.0 * (num as f64 / den as f64 * std::f64::consts::PI).cos();
                    assert!((s.to_f64() - f).abs() < 1e-12, "{r}");
                }
            }
        }
    }

    #[test]
    fn exact_sign_of_near_cancellations() {
        let x = Surd::from_coeffs(&[(1, 70), (0, -99)]); // 70 sqrt2 - 99 < 0
        assert_eq!(x.sign(), -1);
        let y = Surd::from_coeffs(&[(1, 19601), (0, -27720)]); // 19601 sqrt2 - 27720 > 0
        assert_eq!(y.sign(), 1);
        let z = Surd::from_coeffs(&[(4, 1), (0, -1), (1, 0)]);
        assert_eq!(z.sign(), 1);
        let w = Surd::from_coeffs(&[(3, 1), (1, -1), (2, -1)]); // sqrt6 - sqrt2 - sqrt3 < 0
        assert_eq!(w.sign(), -1);
        let big: Vec<BigInt> = [3i64, -2, 0, 0, 0, 0, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(exact_sign(&big, &PRIMES), 1);
    }

    #[test]
    fn pi_enclosure() {
        let (lo, hi) = pi_bounds(100);
        let scale = 2f64.powi(100);
        let lo = lo.to_string().parse::<f64>().unwrap() / scale;
        let hi = hi.to_string().parse::<f64>().unwrap() / scale;
        assert!(lo <= std::f64::consts::PI && std::f64::consts::PI <= hi);
        assert!(hi - lo < 1e-15);
    }

    #[test]
    fn cos_interval_contains_value() {
        for (n, d) in [(1, 7), (3, 7), (6, 7), (2, 9), (13, 11), (0, 1), (1, 1)] {
            let r = Ratio::new(n, d);
            let iv = cos_interval(r, 80);
            let scale = 2f64.powi(80);
            let lo = iv.lo.to_string().parse::<f64>().unwrap() / scale;
            let hi = iv.hi.to_string().parse::<f64>().unwrap() / scale;
            let v = (n as f64 / d as f64 * std::f64::consts::PI).cos();
            assert!(lo - 1e-15 <= v && v <= hi + 1e-15, "{r}: {lo} {v} {hi}");
            assert!(hi - lo < 1e-18, "{r}: width {}", hi - lo);
        }
    }

    #[test]
    fn interval_path_decides_heptagonal_triangle() {
        let m = triangle(2, 3, 7);
        let d = definiteness(&cosine_matrix(&m, m.all())).unwrap();
        assert_eq!(d.class, DefinitenessClass::Indefinite);
        let m = triangle(2, 2, 7);
        let d = definiteness(&cosine_matrix(&m, m.all())).unwrap();
        assert_eq!(d.class, DefinitenessClass::PositiveDefinite);
    }

    #[test]
    fn interval_path_reports_exact_singularity() {
        let c = CosineMatrix::from_angles(
            vec!["a".into(), "b".into()],
            vec![Ratio::zero(), Ratio::zero(), Ratio::zero(), Ratio::zero()],
        );
        let d = definiteness(&c).unwrap();
        assert_eq!((d.class, d.nullity), (DefinitenessClass::PsdSingular, 1));
        let c = CosineMatrix::from_angles(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                Ratio::zero(),
                Ratio::new(1, 7),
                Ratio::new(8, 7),
                Ratio::new(1, 7),
                Ratio::zero(),
                Ratio::one(),
                Ratio::new(8, 7),
                Ratio::one(),
                Ratio::zero(),
            ],
        );
        // Rows b and c are negatives of each other; intervals never certify 0.
        assert_eq!(definiteness(&c), Err(CosineError::PrecisionExhausted(MAX_PRECISION)));
    }

    #[test]
    fn interval_path_skips_vanishing_interior_coefficients() {
        // Bipartite diagram with a 7: one characteristic coefficient is
        // exactly zero, yet the inertia is decided.
        let inf = Exponent::Infinite;
        let rels = [(0, 3, inf), (1, 3, Exponent::Finite(7)), (1, 4, inf), (2, 3, inf), (2, 4, inf)];
        let m = CoxeterMatrix::new(&["s0", "s1", "s2", "s3", "s4"], &rels, Exponent::Finite(2)).unwrap();
        let d = definiteness(&cosine_matrix(&m, m.all())).unwrap();
        assert_eq!((d.class, d.nullity), (DefinitenessClass::Indefinite, 0));
        assert_eq!(resolve_signs(&[Some(1), None, Some(-1)]), Some(vec![1, 0, -1]));
        assert_eq!(resolve_signs(&[Some(1), None, Some(1)]), None);
        assert_eq!(resolve_signs(&[Some(1), Some(-1), None]), None);
    }
}
