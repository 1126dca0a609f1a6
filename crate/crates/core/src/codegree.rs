//! Codegrees `|G : ker χ| / χ(1)`, the sets `cod(G|N)`, and the prime graph
//! on the primes dividing a codegree set.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chartable::CharacterTable;
use crate::error::{GroupError, Result};
use crate::group::Subgroup;
use crate::numtheory::prime_set;

pub fn codegree(table: &CharacterTable<'_>, row: usize) -> Result<u64> {
    let index = (table.group().order() / table.kernel(row).order()) as u64;
    let degree = table.degree(row);
    if index % degree != 0 {
        return Err(GroupError::NonIntegral { row });
    }
    Ok(index / degree)
}

/// Rows whose kernel does not contain `n`.
pub fn rows_over(table: &CharacterTable<'_>, n: &Subgroup) -> Vec<usize> {
    (0..table.num_rows())
        .filter(|&i| !n.is_subset_of(table.kernel(i)))
        .collect()
}

/// `cod(G|N)` for a nontrivial normal subgroup `N`.
pub fn cod_relative(table: &CharacterTable<'_>, n: &Subgroup) -> Result<BTreeSet<u64>> {
    if n.is_trivial() {
        return Err(GroupError::TrivialNormalSubgroup);
    }
    if !table.group().is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    rows_over(table, n)
        .into_iter()
        .map(|i| codegree(table, i))
        .collect()
}

/// `cod(G)`, including the codegree 1 of the principal character.
pub fn cod_all(table: &CharacterTable<'_>) -> Result<BTreeSet<u64>> {
    (0..table.num_rows()).map(|i| codegree(table, i)).collect()
}

/// `cod(G|G')`, empty for abelian groups.
pub fn cod_nonlinear(table: &CharacterTable<'_>) -> Result<BTreeSet<u64>> {
    let derived = table.group().derived_subgroup();
    if derived.is_trivial() {
        return Ok(BTreeSet::new());
    }
    cod_relative(table, &derived)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterCodegree {
    pub degree: u64,
    pub kernel_order: usize,
    pub codegree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodegreeReport {
    pub order: usize,
    pub per_character: Vec<CharacterCodegree>,
    pub cod_all: BTreeSet<u64>,
    pub cod_rel: BTreeMap<String, BTreeSet<u64>>,
}

impl CodegreeReport {
    /// Builds the report with `cod(G|G')` under the key `"G'"` (when `G` is
    /// nonabelian) plus any extra named normal subgroups.
    pub fn new(table: &CharacterTable<'_>, extra: &[(String, Subgroup)]) -> Result<Self> {
        let per_character = (0..table.num_rows())
            .map(|i| {
                Ok(CharacterCodegree {
                    degree: table.degree(i),
                    kernel_order: table.kernel(i).order(),
                    codegree: codegree(table, i)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let cod_all = per_character.iter().map(|c| c.codegree).collect();
        let mut cod_rel = BTreeMap::new();
        let derived = table.group().derived_subgroup();
        if !derived.is_trivial() {
            cod_rel.insert("G'".to_string(), cod_relative(table, &derived)?);
        }
        for (name, n) in extra {
            cod_rel.insert(name.clone(), cod_relative(table, n)?);
        }
        Ok(CodegreeReport {
            order: table.group().order(),
            per_character,
            cod_all,
            cod_rel,
        })
    }
}

/// Graph on the primes dividing a set of integers; `p ~ q` when `pq`
/// divides some member of the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    pub vertices: BTreeSet<u64>,
    pub edges: BTreeSet<(u64, u64)>,
    pub components: Vec<BTreeSet<u64>>,
}

impl PrimeGraph {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }
}

pub fn prime_graph(set: &BTreeSet<u64>) -> PrimeGraph {
    let vertices: BTreeSet<u64> = set.iter().flat_map(|&n| prime_set(n)).collect();
    let index: BTreeMap<u64, usize> = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = BTreeSet::new();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &n in set {
        let primes: Vec<u64> = prime_set(n).into_iter().collect();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                edges.insert((p, q));
                let (a, b) = (find(&mut parent, index[&p]), find(&mut parent, index[&q]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for (&p, &i) in &index {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().insert(p);
    }
    PrimeGraph {
        vertices,
        edges,
        components: groups.into_values().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn graph_of_order_480_example() {
        let g = prime_graph(&set(&[5, 15, 32]));
        assert_eq!(g.vertices, set(&[2, 3, 5]));
        assert_eq!(g.edges, [(3, 5)].into_iter().collect());
        assert_eq!(g.components, vec![set(&[2]), set(&[3, 5])]);
        let full = prime_graph(&set(&[1, 2, 3, 5, 6, 15, 32]));
        assert!(full.is_connected());
    }

    #[test]
    fn small_graphs() {
        let g = prime_graph(&set(&[4]));
        assert_eq!(g.vertices, set(&[2]));
        assert!(g.edges.is_empty());
        assert_eq!(g.num_components(), 1);
        let g = prime_graph(&set(&[3, 8]));
        assert_eq!(g.num_components(), 2);
        assert!(prime_graph(&set(&[1])).vertices.is_empty());
    }
}
