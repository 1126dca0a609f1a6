//! Small permutation realizations shared by the integration tests.
#![allow(dead_code)]

use codegree_core::{Group, Permutation};

pub fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| f(i) as u32).collect()).unwrap()
}

pub fn named(gens: Vec<Permutation>, name: &str) -> Group {
    Group::new(gens, Some(name.to_string())).unwrap()
}

pub fn cyclic(n: usize) -> Group {
    named(vec![from_fn(n, |i| (i + 1) % n)], &format!("C{n}"))
}

/// Dihedral group of order `2n` on `n` points.
pub fn dihedral(n: usize) -> Group {
    named(
        vec![from_fn(n, |i| (i + 1) % n), from_fn(n, |i| (n - i) % n)],
        &format!("D{}", 2 * n),
    )
}

pub fn symmetric(n: usize) -> Group {
    named(vec![perm(n, &[&[0, 1]]), from_fn(n, |i| (i + 1) % n)], &format!("S{n}"))
}

pub fn alternating(n: usize) -> Group {
    let gens = (2..n as u32).map(|k| perm(n, &[&[0, 1, k]])).collect();
    named(gens, &format!("A{n}"))
}

/// Generalized quaternion group of order `2^k` in its right regular action.
/// Element `(i, e)` stands for `a^i b^e` and has index `i + 2m·e`, `m = 2^(k-2)`.
pub fn quaternion(k: u32) -> Group {
    let m = 1usize << (k - 2);
    let two_m = 2 * m;
    let n = 2 * two_m;
    let split = |x: usize| (x % two_m, x / two_m);
    let right_a = from_fn(n, |x| {
        let (i, e) = split(x);
        if e == 0 { (i + 1) % two_m } else { (i + two_m - 1) % two_m + two_m }
    });
    let right_b = from_fn(n, |x| {
        let (i, e) = split(x);
        if e == 0 { i + two_m } else { (i + m) % two_m }
    });
    named(vec![right_a, right_b], &format!("Q{}", 1 << k))
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (n, m) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(from_fn(n + m, |i| if i < n { g.image(i) } else { i }));
    }
    for g in b.generators() {
        gens.push(from_fn(n + m, |i| if i < n { i } else { n + g.image(i - n) }));
    }
    let name = format!("{}x{}", a.name().unwrap_or("A"), b.name().unwrap_or("B"));
    named(gens, &name)
}

/// `C_p^2 ⋊ Q_8` acting affinely on the plane over the `p`-element field,
/// with `Q_8 = <[[0,-1],[1,0]], [[a,b],[b,-a]]>` for `a^2 + b^2 = -1`.
pub fn cp2_q8(p: usize) -> Group {
    let (a, b) = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|&(a, b)| (a * a + b * b + 1) % p == 0)
        .unwrap();
    let idx = |x: usize, y: usize| x % p + p * (y % p);
    let n = p * p;
    let affine = |m: [[usize; 2]; 2]| {
        from_fn(n, |v| {
            let (x, y) = (v % p, v / p);
            idx(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
        })
    };
    let gens = vec![
        from_fn(n, |v| idx(v % p + 1, v / p)),
        from_fn(n, |v| idx(v % p, v / p + 1)),
        affine([[0, p - 1], [1, 0]]),
        affine([[a, b], [b, (p - a) % p]]),
    ];
    named(gens, &format!("C{p}^2:Q8"))
}

/// Field with `p^n` elements, elements encoded as base-`p` digit strings.
pub struct Field {
    pub p: usize,
    pub n: usize,
    /// Monic modulus, low degree first, length `n + 1`.
    modulus: Vec<usize>,
}

impl Field {
    pub fn new(p: usize, modulus: Vec<usize>) -> Self {
        Field { p, n: modulus.len() - 1, modulus }
    }

    pub fn size(&self) -> usize {
        self.p.pow(self.n as u32)
    }

    fn digits(&self, x: usize) -> Vec<usize> {
        (0..self.n).map(|i| x / self.p.pow(i as u32) % self.p).collect()
    }

    fn encode(&self, d: &[usize]) -> usize {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        self.encode(&a.iter().zip(&b).map(|(s, t)| (s + t) % self.p).collect::<Vec<_>>())
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.digits(x), self.digits(y));
        let mut prod = vec![0; 2 * self.n];
        for (i, &s) in a.iter().enumerate() {
            for (j, &t) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + s * t) % self.p;
            }
        }
        for top in (self.n..2 * self.n).rev() {
            let c = prod[top];
            if c != 0 {
                for (i, &m) in self.modulus.iter().enumerate() {
                    let slot = top - self.n + i;
                    prod[slot] = (prod[slot] + (self.p - c) * m) % self.p;
                }
            }
        }
        self.encode(&prod[..self.n])
    }

    pub fn pow(&self, x: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, x))
    }

    pub fn primitive(&self) -> usize {
        let q = self.size();
        (2..q)
            .find(|&w| (1..q - 1).all(|e| self.pow(w, e) != 1))
            .unwrap()
    }
}

/// `{x -> a x^(p^(f·j)) + b}` with `a` in the order-`m` subgroup of the
/// multiplicative group.
pub fn semilinear(field: &Field, m: usize, f: usize, name: &str) -> Group {
    let q = field.size();
    let w = field.pow(field.primitive(), (q - 1) / m);
    let mut gens = vec![
        from_fn(q, |x| field.add(x, 1)),
        from_fn(q, |x| field.mul(w, x)),
    ];
    let frob = from_fn(q, |x| field.pow(x, field.p.pow(f as u32)));
    if !frob.is_identity() {
        gens.push(frob);
    }
    named(gens, name)
}
