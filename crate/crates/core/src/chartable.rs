//! Character tables by the modular Dixon–Schneider method.
//!
//! The class-sum algebra of `G` is commutative and, over `F_l` with
//! `l ≡ 1 (mod exp G)` and `l > 2√|G|`, splits into one-dimensional common
//! eigenspaces of the class matrices. Each common eigenvector is the central
//! character `ω_χ` of an irreducible `χ`; from it the degree and the values
//! mod `l` follow, and the values are lifted to `Z[ζ_e]` by counting the
//! multiplicity of each eigenvalue `ζ_e^k` through a discrete Fourier sum.

use std::cmp::Ordering;

use log::debug;

use crate::cyclotomic::CyclotomicInt;
use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::modular::{charpoly, next_prime_congruent_one, nullspace, roots, row_reduce, Matrix, PrimeField};

/// How many primes `l ≡ 1 (mod e)` are tried before giving up.
const MAX_PRIME_ATTEMPTS: usize = 32;

#[derive(Clone, Debug)]
pub struct CharacterTable<'g> {
    group: &'g Group,
    conductor: usize,
    degrees: Vec<u64>,
    values: Vec<Vec<CyclotomicInt>>,
    kernels: Vec<Subgroup>,
    /// `power_maps[k][t]` is the class of `g_k^t`, for `t < o(g_k)`.
    power_maps: Vec<Vec<usize>>,
}

impl<'g> CharacterTable<'g> {
    pub fn group(&self) -> &'g Group {
        self.group
    }

    /// Exponent of the group; all values live in `Z[ζ_e]` for this `e`.
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn num_rows(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.degrees[row]
    }

    pub fn values(&self) -> &[Vec<CyclotomicInt>] {
        &self.values
    }

    pub fn value(&self, row: usize, class: usize) -> &CyclotomicInt {
        &self.values[row][class]
    }

    pub fn kernel(&self, row: usize) -> &Subgroup {
        &self.kernels[row]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.group.classes()[class].size()
    }

    pub fn power_class(&self, class: usize, t: u64) -> usize {
        let pm = &self.power_maps[class];
        pm[(t % pm.len() as u64) as usize]
    }

    /// Class of the inverse of the class representative.
    pub fn inverse_class(&self, class: usize) -> usize {
        let pm = &self.power_maps[class];
        pm[pm.len() - 1]
    }

    pub fn is_linear(&self, row: usize) -> bool {
        self.degrees[row] == 1
    }
}

/// Kernel of a row: the union of classes where the value equals the degree.
pub fn character_kernel<'g>(table: &CharacterTable<'g>, row: usize) -> Subgroup {
    table.kernels[row].clone()
}

fn compute_kernel(group: &Group, row: &[CyclotomicInt], degree: u64) -> Subgroup {
    let d = CyclotomicInt::from_int(row[0].conductor(), degree as i64);
    let members: Vec<usize> = group
        .classes()
        .iter()
        .zip(row)
        .filter(|(_, v)| **v == d)
        .flat_map(|(c, _)| c.members.iter().copied())
        .collect();
    let kernel = group.subgroup_from_members(members);
    assert!(group.is_normal(&kernel), "character kernel must be normal");
    kernel
}

fn power_maps(group: &Group) -> Vec<Vec<usize>> {
    group
        .classes()
        .iter()
        .map(|c| {
            let g = c.representative;
            let mut out = Vec::with_capacity(c.rep_order as usize);
            let mut x = group.identity();
            for _ in 0..c.rep_order {
                out.push(group.class_of(x));
                x = group.mul(x, g);
            }
            out
        })
        .collect()
}

/// `a[j][i][k]` = #{(x, y) ∈ C_j × C_i : xy = g_k}.
fn structure_constants(group: &Group) -> Vec<Vec<Vec<u32>>> {
    let classes = group.classes();
    let r = classes.len();
    let mut a = vec![vec![vec![0u32; r]; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let z = ck.representative;
        for (i, ci) in classes.iter().enumerate() {
            for &y in &ci.members {
                let x = group.mul(z, group.inv(y));
                a[group.class_of(x)][i][k] += 1;
            }
        }
    }
    a
}

/// A subspace in reduced row echelon form: coordinates of a member vector
/// are read off at the pivot positions.
struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(f: &PrimeField, mut basis: Matrix) -> Self {
        let pivots = row_reduce(f, &mut basis);
        basis.truncate(pivots.len());
        Subspace { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn apply(f: &PrimeField, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
        .collect()
}

/// Splits `space` into eigenspaces of `m`. Returns `None` if `m` is not
/// diagonalisable on it (the eigenspaces do not fill the subspace).
fn split(f: &PrimeField, m: &[Vec<u64>], space: &Subspace) -> Option<Vec<Subspace>> {
    let w = space.dim();
    // restricted matrix: column i holds the coordinates of m b_i
    let images: Vec<Vec<u64>> = space.basis.iter().map(|b| apply(f, m, b)).collect();
    let restricted: Matrix = (0..w)
        .map(|row| (0..w).map(|col| images[col][space.pivots[row]]).collect())
        .collect();
    let poly = charpoly(f, &restricted);
    let eigenvalues = roots(f, &poly);
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Matrix = (0..w)
            .map(|i| {
                (0..w)
                    .map(|j| {
                        if i == j {
                            f.sub(restricted[i][j], lambda)
                        } else {
                            restricted[i][j]
                        }
                    })
                    .collect()
            })
            .collect();
        let null = nullspace(f, &shifted, w);
        total += null.len();
        let vectors: Matrix = null
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space.basis[0].len()];
                for (ci, b) in c.iter().zip(&space.basis) {
                    if *ci != 0 {
                        for (x, &y) in v.iter_mut().zip(b) {
                            *x = f.add(*x, f.mul(*ci, y));
                        }
                    }
                }
                v
            })
            .collect();
        parts.push(Subspace::new(f, vectors));
    }
    (total == w).then_some(parts)
}

/// The exact character table of `group`.
pub fn character_table(group: &Group) -> Result<CharacterTable<'_>> {
    let n = group.order() as u64;
    let e = group.exponent();
    let mut lower = 2 * (n as f64).sqrt().floor() as u64 + 1;
    while lower * lower <= 4 * n {
        lower += 1;
    }
    let constants = structure_constants(group);
    let pmaps = power_maps(group);
    let mut l = next_prime_congruent_one(e, lower - 1);
    for attempt in 0..MAX_PRIME_ATTEMPTS {
        match table_mod(group, &constants, &pmaps, l) {
            Some(table) => return Ok(table),
            None => {
                debug!("modular split failed at l = {l} (attempt {attempt}); trying next prime");
                l = next_prime_congruent_one(e, l);
            }
        }
    }
    Err(GroupError::ModularSplitFailure)
}

fn table_mod<'g>(
    group: &'g Group,
    constants: &[Vec<Vec<u32>>],
    pmaps: &[Vec<usize>],
    l: u64,
) -> Option<CharacterTable<'g>> {
    let f = PrimeField::new(l);
    let classes = group.classes();
    let r = classes.len();
    let n = group.order() as u64;
    let e = group.exponent();

    let identity: Matrix = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut done: Vec<Subspace> = Vec::new();
    let mut pending = Vec::new();
    let whole = Subspace::new(&f, identity);
    if r == 1 {
        done.push(whole);
    } else {
        pending.push(whole);
    }

    let mut order: Vec<usize> = (1..r).collect();
    order.sort_by_key(|&j| (classes[j].size(), j));
    for &j in &order {
        if pending.is_empty() {
            break;
        }
        let m: Matrix = constants[j]
            .iter()
            .map(|row| row.iter().map(|&x| x as u64 % l).collect())
            .collect();
        let mut next = Vec::new();
        for space in pending {
            for part in split(&f, &m, &space)? {
                if part.dim() == 1 {
                    done.push(part);
                } else {
                    next.push(part);
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() || done.len() != r {
        return None;
    }

    let z = f.root_of_unity(e);
    let mut rows: Vec<(u64, Vec<CyclotomicInt>)> = Vec::with_capacity(r);
    for space in done {
        let v = &space.basis[0];
        if v[0] == 0 {
            return None;
        }
        let inv0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, inv0)).collect();
        // Σ_k ω_k ω_{k'} / |C_k| = |G| / χ(1)^2
        let mut s = 0;
        for k in 0..r {
            let kbar = *pmaps[k].last().unwrap();
            let size = classes[k].size() as u64;
            s = f.add(s, f.mul(f.mul(omega[k], omega[kbar]), f.inv(size % l)));
        }
        if s == 0 {
            return None;
        }
        let d2 = f.mul(n % l, f.inv(s));
        let d = f.small_sqrt(d2, (n as f64).sqrt() as u64 + 1)?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|k| f.mul(f.mul(omega[k], d), f.inv(classes[k].size() as u64 % l)))
            .collect();

        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = classes[k].rep_order;
            let zo = f.pow(z, e / o);
            let o_inv = f.inv(o % l);
            let mut coeffs = vec![0i64; e as usize];
            let mut total = 0u64;
            for m in 0..o {
                let mut mu = 0;
                for t in 0..o {
                    let twist = f.pow(zo, (o - (m * t) % o) % o);
                    mu = f.add(mu, f.mul(chi_mod[pmaps[k][t as usize]], twist));
                }
                let mu = f.mul(mu, o_inv);
                if mu > d {
                    return None;
                }
                total += mu;
                coeffs[(m * (e / o)) as usize] += mu as i64;
            }
            if total != d {
                return None;
            }
            row.push(CyclotomicInt::from_coeffs(e as usize, coeffs));
        }
        rows.push((d, row));
    }

    if rows.iter().map(|(d, _)| d * d).sum::<u64>() != n {
        return None;
    }

    let is_principal =
        |row: &[CyclotomicInt]| row.iter().all(|v| v.as_integer() == Some(1));
    rows.sort_by(|(da, ra), (db, rb)| {
        da.cmp(db)
            .then_with(|| is_principal(rb).cmp(&is_principal(ra)))
            .then_with(|| {
                ra.iter()
                    .zip(rb)
                    .map(|(x, y)| x.canonical_cmp(y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });

    let kernels = rows
        .iter()
        .map(|(d, row)| compute_kernel(group, row, *d))
        .collect();
    let (degrees, values) = rows.into_iter().unzip();
    Some(CharacterTable {
        group,
        conductor: e as usize,
        degrees,
        values,
        kernels,
        power_maps: pmaps.to_vec(),
    })
}

/// `Σ_k |C_k| a(g_k) conj(b(g_k))` for two class functions on the same group.
pub fn weighted_inner_sum(group: &Group, a: &[CyclotomicInt], b: &[CyclotomicInt]) -> CyclotomicInt {
    let e = crate::numtheory::lcm(a[0].conductor() as u64, b[0].conductor() as u64) as usize;
    let mut acc = CyclotomicInt::zero(e);
    for (k, class) in group.classes().iter().enumerate() {
        let x = a[k].embed(e).scale(class.size() as i64);
        let y = b[k].conj().embed(e);
        acc.add_product(&x, &y);
    }
    acc
}

/// Stabiliser in `G` of the character in row `row` of the table of `N`
/// (`normal_table` must be the table of `group.subgroup_as_group(normal)`).
///
/// `g` fixes `λ` when `λ(g^-1 x g) = λ(x)` for every class representative `x` of `N`.
pub fn inertia_group(
    group: &Group,
    normal: &Subgroup,
    normal_table: &CharacterTable<'_>,
    row: usize,
) -> Result<Subgroup> {
    if !group.is_normal(normal) {
        return Err(GroupError::NotNormal);
    }
    let ngroup = normal_table.group();
    assert_eq!(ngroup.order(), normal.order(), "table must belong to the normal subgroup");
    // element i of the re-enumerated subgroup is normal.members()[i]
    let to_sub = |x: usize| normal.members().binary_search(&x).expect("member of N");
    let lambda = &normal_table.values()[row];
    let reps: Vec<usize> = ngroup
        .classes()
        .iter()
        .map(|c| normal.members()[c.representative])
        .collect();
    let members = (0..group.order())
        .filter(|&g| {
            reps.iter().enumerate().all(|(k, &x)| {
                let y = to_sub(group.conjugate(x, g));
                lambda[ngroup.class_of(y)] == lambda[k]
            })
        })
        .collect();
    Ok(group.subgroup_from_members(members))
}

/// Checks the standard table identities exactly and describes each failure:
/// sum of squared degrees, principal row, first column, row and column
/// orthogonality, the count of linear rows against `|G:G'|`, normal kernels.
pub fn table_violations(table: &CharacterTable<'_>) -> Vec<String> {
    let g = table.group();
    let n = table.num_rows();
    let mut out = Vec::new();
    if n != g.classes().len() {
        out.push(format!("{n} rows for {} classes", g.classes().len()));
        return out;
    }
    let sum_sq: u64 = table.degrees.iter().map(|d| d * d).sum();
    if sum_sq != g.order() as u64 {
        out.push(format!("sum of squared degrees is {sum_sq}, not {}", g.order()));
    }
    if (0..n).any(|k| table.values[0][k].as_integer() != Some(1)) {
        out.push("row 0 is not principal".into());
    }
    for i in 0..n {
        if table.values[i][0].as_integer() != Some(table.degrees[i] as i64) {
            out.push(format!("row {i}: value at identity differs from degree"));
        }
        for j in i..n {
            let s = weighted_inner_sum(g, &table.values[i], &table.values[j]);
            let expected = if i == j { g.order() as i64 } else { 0 };
            if s.as_integer() != Some(expected) {
                out.push(format!("rows {i},{j} fail orthogonality"));
            }
        }
    }
    let e = table.conductor;
    for k in 0..n {
        for l in k..n {
            let mut s = CyclotomicInt::zero(e);
            for i in 0..n {
                s.add_product(&table.values[i][k], &table.values[i][l].conj());
            }
            let expected = if k == l { (g.order() / g.classes()[k].size()) as i64 } else { 0 };
            if s.as_integer() != Some(expected) {
                out.push(format!("columns {k},{l} fail orthogonality"));
            }
        }
    }
    let linear = table.degrees.iter().filter(|&&d| d == 1).count();
    let index = g.order() / g.derived_subgroup().order();
    if linear != index {
        out.push(format!("{linear} linear rows but |G:G'| = {index}"));
    }
    for i in 0..n {
        if !g.is_normal(&table.kernels[i]) {
            out.push(format!("row {i}: kernel not normal"));
        }
    }
    out
}

/// Class fusion of a normal subgroup's classes into the parent's classes.
pub fn class_fusion(group: &Group, sub: &Subgroup, sub_group: &Group) -> Vec<usize> {
    sub_group
        .classes()
        .iter()
        .map(|c| group.class_of(sub.members()[c.representative]))
        .collect()
}
