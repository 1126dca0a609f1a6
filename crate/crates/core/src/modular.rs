//! Dense linear algebra over the prime field `F_l` (`l < 2^31`).

use crate::numtheory::{factorize, is_prime, pow_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Self {
        assert!(is_prime(modulus) && modulus < (1 << 31));
        PrimeField { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.modulus - b) % self.modulus
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.modulus
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.modulus)
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.modulus != 0, "inverse of zero");
        self.pow(a, self.modulus - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let l = self.modulus;
        if l == 2 {
            return 1;
        }
        let factors = factorize(l - 1);
        (2..l)
            .find(|&g| factors.iter().all(|&(q, _)| self.pow(g, (l - 1) / q) != 1))
            .expect("prime field has a primitive root")
    }

    /// Element of exact multiplicative order `n`; requires `n | l-1`.
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert_eq!((self.modulus - 1) % n, 0);
        self.pow(self.primitive_root(), (self.modulus - 1) / n)
    }

    /// Square roots `r` of `a` with `0 <= r < l`, by exhaustive search when
    /// the caller knows a root lies below `limit`.
    pub fn small_sqrt(&self, a: u64, limit: u64) -> Option<u64> {
        (1..=limit).find(|&r| self.mul(r, r) == a % self.modulus)
    }
}

/// Smallest prime `l > lower` with `l ≡ 1 (mod e)`.
pub fn next_prime_congruent_one(e: u64, lower: u64) -> u64 {
    let start = lower + 1;
    let mut l = start + (e + 1 - start % e) % e;
    while !is_prime(l) {
        l += e;
    }
    l
}

pub type Matrix = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn row_reduce(f: &PrimeField, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let t = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space `{v : m v = 0}`.
pub fn nullspace(f: &PrimeField, m: &Matrix, cols: usize) -> Vec<Vec<u64>> {
    let mut a = m.clone();
    let pivots = row_reduce(f, &mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.sub(0, a[row][fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, low degree first, via reduction
/// to upper Hessenberg form.
pub fn charpoly(f: &PrimeField, a: &Matrix) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    // similarity transform to Hessenberg form
    for k in 0..n.saturating_sub(2) {
        let Some(p) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if p != k + 1 {
            h.swap(p, k + 1);
            for row in h.iter_mut() {
                row.swap(p, k + 1);
            }
        }
        let inv = f.inv(h[k + 1][k]);
        for i in k + 2..n {
            let t = f.mul(h[i][k], inv);
            if t == 0 {
                continue;
            }
            for j in 0..n {
                let s = f.mul(t, h[k + 1][j]);
                h[i][j] = f.sub(h[i][j], s);
            }
            for row in h.iter_mut() {
                let s = f.mul(t, row[i]);
                row[k + 1] = f.add(row[k + 1], s);
            }
        }
    }
    // recurrence on leading principal minors
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut p = vec![0u64; m + 1];
        for (i, &c) in prev.iter().enumerate() {
            p[i + 1] = f.add(p[i + 1], c);
            p[i] = f.sub(p[i], f.mul(h[m - 1][m - 1], c));
        }
        let mut t = 1u64;
        for i in 1..m {
            t = f.mul(t, h[m - i][m - i - 1]);
            let coeff = f.mul(t, h[m - i - 1][m - 1]);
            if coeff == 0 {
                continue;
            }
            for (j, &c) in polys[m - i - 1].iter().enumerate() {
                p[j] = f.sub(p[j], f.mul(coeff, c));
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(f: &PrimeField, p: &[u64], x: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// All roots in `F_l`, by exhaustive evaluation.
pub fn roots(f: &PrimeField, p: &[u64]) -> Vec<u64> {
    (0..f.modulus()).filter(|&x| eval_poly(f, p, x) == 0).collect()
}
