//! Exact elements of `Z[ζ_e]`.
//!
//! A value is stored as a coefficient vector over the powers `ζ_e^0 … ζ_e^{e-1}`.
//! That representation is redundant, so comparisons go through the canonical
//! form: the remainder modulo the cyclotomic polynomial `Φ_e`, which has
//! integer coefficients and is monic, so the remainder is unique.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::numtheory::lcm;

#[derive(Clone, Debug)]
pub struct CyclotomicInt {
    conductor: usize,
    coeffs: Vec<i64>,
}

fn cyclotomic_polynomial(n: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d of n
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let phi_d = cyclotomic_polynomial(d);
        poly = divide_exact(&poly, &phi_d);
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials by a monic divisor (low degree first).
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl CyclotomicInt {
    pub fn zero(conductor: usize) -> Self {
        assert!(conductor >= 1);
        CyclotomicInt {
            conductor,
            coeffs: vec![0; conductor],
        }
    }

    pub fn from_int(conductor: usize, n: i64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = n;
        z
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(conductor: usize, k: usize) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[k % conductor] = 1;
        z
    }

    pub fn from_coeffs(conductor: usize, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), conductor);
        CyclotomicInt { conductor, coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Re-expresses the value over `ζ_m` for a multiple `m` of the conductor.
    pub fn embed(&self, m: usize) -> Self {
        assert_eq!(m % self.conductor, 0, "target conductor must be a multiple");
        let step = m / self.conductor;
        let mut z = Self::zero(m);
        for (k, &c) in self.coeffs.iter().enumerate() {
            z.coeffs[k * step] = c;
        }
        z
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let m = lcm(a.conductor as u64, b.conductor as u64) as usize;
            (a.embed(m), b.embed(m))
        }
    }

    /// Remainder modulo `Φ_e`, of length `φ(e)`.
    pub fn canonical(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.conductor);
        let m = phi.len() - 1;
        let mut a = self.coeffs.clone();
        for i in (m..a.len()).rev() {
            let c = a[i];
            if c != 0 {
                for (j, &pj) in phi.iter().enumerate() {
                    a[i - m + j] -= c * pj;
                }
            }
        }
        a.truncate(m);
        a
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|&c| c == 0)
    }

    /// `Some(n)` when the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.canonical();
        if c[1..].iter().all(|&x| x == 0) {
            Some(c[0])
        } else {
            None
        }
    }

    /// Complex conjugate, `ζ^k ↦ ζ^{-k}`.
    pub fn conj(&self) -> Self {
        let e = self.conductor;
        let mut z = Self::zero(e);
        for (k, &c) in self.coeffs.iter().enumerate() {
            z.coeffs[(e - k) % e] += c;
        }
        z
    }

    /// Galois image `ζ ↦ ζ^t` for `t` coprime to the conductor.
    pub fn galois(&self, t: usize) -> Self {
        let e = self.conductor;
        let mut z = Self::zero(e);
        for (k, &c) in self.coeffs.iter().enumerate() {
            z.coeffs[(k * t) % e] += c;
        }
        z
    }

    pub fn scale(&self, s: i64) -> Self {
        CyclotomicInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / e;
                (re + c as f64 * t.cos(), im + c as f64 * t.sin())
            })
    }

    /// Accumulates `a * b` into `self` (all over the same conductor).
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        let e = self.conductor;
        assert!(a.conductor == e && b.conductor == e);
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    self.coeffs[(i + j) % e] += x * y;
                }
            }
        }
    }

    /// Ordering on canonical forms; used only for deterministic sorting.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = Self::aligned(self, other);
        a.canonical().cmp(&b.canonical())
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for CyclotomicInt {}

impl<'a> Add<&'a CyclotomicInt> for &'a CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let (mut a, b) = CyclotomicInt::aligned(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl<'a> Sub<&'a CyclotomicInt> for &'a CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let (mut a, b) = CyclotomicInt::aligned(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl<'a> Mul<&'a CyclotomicInt> for &'a CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        let (a, b) = CyclotomicInt::aligned(self, rhs);
        let mut out = CyclotomicInt::zero(a.conductor);
        out.add_product(&a, &b);
        out
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        self.scale(-1)
    }
}

impl fmt::Display for CyclotomicInt {
    /// Integers print plainly; otherwise a sum of `c*E(e)^k` terms over the
    /// stored (sparse) representation after collapsing to canonical form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let e = self.conductor;
        let mut first = true;
        for (k, &c) in self.canonical().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let term = match k {
                0 => format!("{mag}"),
                1 if mag == 1 => format!("E({e})"),
                1 => format!("{mag}*E({e})"),
                _ if mag == 1 => format!("E({e})^{k}"),
                _ => format!("{mag}*E({e})^{k}"),
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}
