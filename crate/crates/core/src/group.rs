//! Fully enumerated permutation groups.
//!
//! Every element of the group is materialised and sorted lexicographically
//! by image array, so an element is addressed by its index in that order.
//! The identity is always element `0`. Everything downstream (classes,
//! subgroups, quotients) works on element indices.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{GroupError, Result};
use crate::numtheory::{is_prime, p_part, prime_power_base};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_BOUND: usize = 20_000;

/// A conjugacy class of a [`Group`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Smallest element index in the class.
    pub representative: usize,
    pub members: Vec<usize>,
    pub rep_order: u64,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A subgroup of some parent [`Group`], as a sorted set of element indices.
///
/// The parent is not stored; every operation takes the parent explicitly.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// Result of [`Group::quotient`]: the quotient as a group in its own right
/// together with the projection from parent elements to quotient elements.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    pub projection: Vec<usize>,
}

impl Quotient {
    pub fn image(&self, sub: &Subgroup) -> Subgroup {
        let mut members: Vec<usize> = sub.members.iter().map(|&x| self.projection[x]).collect();
        members.sort_unstable();
        members.dedup();
        let generators = sub.generators.iter().map(|&x| self.projection[x]).collect();
        Subgroup { members, generators }
    }
}

/// A finite group given by permutation generators, with all elements and
/// conjugacy classes enumerated.
#[derive(Debug)]
pub struct Group {
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    inverses: Vec<usize>,
    element_orders: Vec<u64>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    normal_cache: OnceLock<Vec<Subgroup>>,
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            name: self.name.clone(),
            degree: self.degree,
            generators: self.generators.clone(),
            generator_indices: self.generator_indices.clone(),
            elements: self.elements.clone(),
            inverses: self.inverses.clone(),
            element_orders: self.element_orders.clone(),
            classes: self.classes.clone(),
            class_of: self.class_of.clone(),
            normal_cache: OnceLock::new(),
        }
    }
}

impl Group {
    /// Enumerates the group generated by `generators` with the default bound.
    pub fn new(generators: Vec<Permutation>, name: Option<String>) -> Result<Group> {
        Group::with_bound(generators, name, DEFAULT_ORDER_BOUND)
    }

    /// Enumerates the group generated by `generators`, failing once the
    /// closure grows beyond `bound` elements.
    pub fn with_bound(
        generators: Vec<Permutation>,
        name: Option<String>,
        bound: usize,
    ) -> Result<Group> {
        let degree = generators.first().ok_or(GroupError::NoGenerators)?.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = x.compose(s);
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(GroupError::OrderBoundExceeded(bound));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();

        let mut group = Group {
            name,
            degree,
            generator_indices: Vec::new(),
            generators,
            inverses: Vec::new(),
            element_orders: elements.iter().map(|e| e.order()).collect(),
            elements,
            classes: Vec::new(),
            class_of: Vec::new(),
            normal_cache: OnceLock::new(),
        };
        group.generator_indices = group
            .generators
            .iter()
            .map(|g| group.index_of(g).expect("generator in closure"))
            .collect();
        group.inverses = group
            .elements
            .iter()
            .map(|e| group.index_of(&e.inverse()).expect("closed under inverse"))
            .collect();
        group.compute_classes();
        Ok(group)
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[x] = id;
            let mut members = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &s in &self.generator_indices {
                    let z = self.conjugate(y, s);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjClass {
                representative: x,
                rep_order: self.element_orders[x],
                members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange(i))
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index_of(&p).expect("group is closed")
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let gi = &self.elements[self.inverses[g]];
        let p = gi.compose(&self.elements[x]).compose(&self.elements[g]);
        self.index_of(&p).expect("group is closed")
    }

    pub fn pow(&self, x: usize, e: u64) -> usize {
        let e = e % self.element_orders[x];
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        let (pa, pb) = (&self.elements[a], &self.elements[b]);
        (0..self.degree).all(|i| pb.image(pa.image(i)) == pa.image(pb.image(i)))
    }

    pub fn element_order(&self, x: usize) -> u64 {
        self.element_orders[x]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.element_orders
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1, |acc, c| crate::numtheory::lcm(acc, c.rep_order))
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    // ----- subgroups ------------------------------------------------------

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
            generators: self.generator_indices.clone(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            members: vec![0],
            generators: Vec::new(),
        }
    }

    /// The subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        generators.sort_unstable();
        generators.dedup();
        let mut in_sub = vec![false; self.order()];
        in_sub[0] = true;
        let mut members = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in &generators {
                let y = self.mul(x, s);
                if !in_sub[y] {
                    in_sub[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            members,
            generators,
        }
    }

    /// Like [`Group::generate`] but gives up once the subgroup exceeds `limit`.
    pub fn generate_bounded(&self, gens: &[usize], limit: usize) -> Option<Subgroup> {
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        generators.sort_unstable();
        generators.dedup();
        let mut members = vec![0];
        let mut queue = VecDeque::from([0]);
        let mut seen: HashSet<usize> = HashSet::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in &generators {
                let y = self.mul(x, s);
                if seen.insert(y) {
                    if members.len() == limit {
                        return None;
                    }
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Some(Subgroup {
            members,
            generators,
        })
    }

    /// Wraps a member set already known to be a subgroup, choosing a small
    /// generating set greedily.
    pub fn subgroup_from_members(&self, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut gens: Vec<usize> = Vec::new();
        let mut current = self.trivial();
        for &m in &members {
            if !current.contains(m) {
                gens.push(m);
                current = self.generate(&gens);
            }
        }
        debug_assert_eq!(current.members, members, "member set is not a subgroup");
        current
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.generator_indices.iter().all(|&g| {
            sub.generators
                .iter()
                .all(|&h| sub.contains(self.conjugate(h, g)))
        })
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = seeds.to_vec();
        let mut sub = self.generate(&gens);
        loop {
            let mut grew = false;
            for i in 0..gens.len() {
                for &g in &self.generator_indices {
                    let c = self.conjugate(gens[i], g);
                    if !sub.contains(c) {
                        gens.push(c);
                        sub = self.generate(&gens);
                        grew = true;
                    }
                }
            }
            if !grew {
                return sub;
            }
        }
    }

    pub fn centralizer(&self, x: usize) -> Result<Subgroup> {
        self.check_index(x)?;
        let members = (0..self.order()).filter(|&g| self.commute(g, x)).collect();
        Ok(self.subgroup_from_members(members))
    }

    /// Elements of `within` commuting with `x`.
    pub fn centralizer_in(&self, within: &Subgroup, x: usize) -> Subgroup {
        let members = within
            .members
            .iter()
            .copied()
            .filter(|&g| self.commute(g, x))
            .collect();
        self.subgroup_from_members(members)
    }

    pub fn normalizer(&self, sub: &Subgroup) -> Subgroup {
        let members = (0..self.order())
            .filter(|&g| {
                sub.generators
                    .iter()
                    .all(|&h| sub.contains(self.conjugate(h, g)))
            })
            .collect();
        self.subgroup_from_members(members)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let p = self.elements[self.inverses[a]]
            .compose(&self.elements[self.inverses[b]])
            .compose(&self.elements[a])
            .compose(&self.elements[b]);
        self.index_of(&p).expect("group is closed")
    }

    /// Commutator subgroup: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = &self.generator_indices;
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                seeds.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&seeds)
    }

    /// Derived subgroup of a subgroup, as a subgroup of `self`.
    pub fn derived_subgroup_of(&self, sub: &Subgroup) -> Subgroup {
        let gens = &sub.generators;
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                seeds.push(self.commutator(a, b));
            }
        }
        // normal closure inside `sub`
        let mut closure = seeds.clone();
        let mut current = self.generate(&closure);
        loop {
            let mut grew = false;
            for i in 0..closure.len() {
                for &g in gens {
                    let c = self.conjugate(closure[i], g);
                    if !current.contains(c) {
                        closure.push(c);
                        current = self.generate(&closure);
                        grew = true;
                    }
                }
            }
            if !grew {
                return current;
            }
        }
    }

    /// All normal subgroups, sorted by order and then by member set.
    ///
    /// Every normal subgroup is a join of normal closures of single classes,
    /// so closing that family under pairwise joins is complete.
    pub fn normal_subgroups(&self) -> &[Subgroup] {
        self.normal_cache.get_or_init(|| {
            let mut base: Vec<Subgroup> = Vec::new();
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            for class in self.classes.iter().skip(1) {
                let n = self.normal_closure(&[class.representative]);
                if seen.insert(n.members.clone()) {
                    base.push(n);
                }
            }
            let trivial = self.trivial();
            seen.insert(trivial.members.clone());
            let mut all: Vec<Subgroup> = vec![trivial];
            all.extend(base.iter().cloned());
            let mut frontier: Vec<Subgroup> = base.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for a in &frontier {
                    for b in &base {
                        if b.is_subset_of(a) || a.is_subset_of(b) {
                            continue;
                        }
                        let mut gens = a.generators.clone();
                        gens.extend_from_slice(&b.generators);
                        let join = self.generate(&gens);
                        if seen.insert(join.members.clone()) {
                            all.push(join.clone());
                            next.push(join);
                        }
                    }
                }
                frontier = next;
            }
            all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
            all
        })
    }

    /// Nontrivial normal subgroups containing no other nontrivial normal subgroup.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let normals = self.normal_subgroups();
        normals
            .iter()
            .filter(|n| !n.is_trivial())
            .filter(|n| {
                !normals
                    .iter()
                    .any(|m| !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n))
            })
            .cloned()
            .collect()
    }

    /// Action on right cosets `Ng`, re-enumerated as a permutation group.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in &normal.members {
                coset_of[self.mul(h, g)] = id;
            }
        }
        let index = reps.len();
        let gens: Vec<Permutation> = self
            .generator_indices
            .iter()
            .map(|&s| {
                let images = reps
                    .iter()
                    .map(|&r| coset_of[self.mul(r, s)] as u32)
                    .collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            })
            .collect();
        let group = Group::with_bound(gens, None, usize::MAX)?;
        debug_assert_eq!(group.order(), index);

        let mut projection = vec![usize::MAX; n];
        projection[0] = 0;
        let gen_images = group.generator_indices.clone();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, &s) in self.generator_indices.iter().enumerate() {
                let y = self.mul(x, s);
                if projection[y] == usize::MAX {
                    projection[y] = group.mul(projection[x], gen_images[k]);
                    queue.push_back(y);
                }
            }
        }
        Ok(Quotient { group, projection })
    }

    /// A subgroup re-enumerated as a group in its own right. Because both
    /// orderings are lexicographic on the same permutations, the `i`-th
    /// element of the result is `sub.members()[i]`.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> Group {
        let gens: Vec<Permutation> = if sub.generators.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            sub.generators.iter().map(|&g| self.elements[g].clone()).collect()
        };
        Group::with_bound(gens, None, usize::MAX).expect("subgroup is finite")
    }

    /// Elements of `within` whose order is a power of `p` (including 1).
    pub fn p_elements(&self, within: &Subgroup, p: u64) -> Vec<usize> {
        within
            .members
            .iter()
            .copied()
            .filter(|&x| {
                let o = self.element_orders[x];
                o == 1 || prime_power_base(o) == Some(p)
            })
            .collect()
    }

    /// A Sylow `p`-subgroup, grown one normalising `p`-element at a time.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let target = p_part(self.order() as u64, p) as usize;
        let mut current = self.trivial();
        while current.order() < target {
            let norm = self.normalizer(&current);
            let x = self
                .p_elements(&norm, p)
                .into_iter()
                .find(|&x| !current.contains(x))
                .expect("a p-subgroup below Sylow size has a p-element in its normaliser");
            let mut gens = current.generators.clone();
            gens.push(x);
            current = self.generate(&gens);
        }
        Ok(current)
    }

    /// Number of Sylow `p`-subgroups, `|G : N_G(P)|`.
    pub fn count_sylow(&self, p: u64) -> Result<usize> {
        let sylow = self.sylow_subgroup(p)?;
        Ok(self.order() / self.normalizer(&sylow).order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s4() -> Group {
        Group::new(vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], Some("S4".into())).unwrap()
    }

    /// Q8 through its right-regular action; elements ±1, ±i, ±j, ±k coded 0..8.
    fn q8() -> Group {
        // unit index: 0=1,1=i,2=j,3=k ; sign bit in position 4
        fn mul(a: usize, b: usize) -> usize {
            let table = [
                [(0, 0), (1, 0), (2, 0), (3, 0)],
                [(1, 0), (0, 1), (3, 0), (2, 1)],
                [(2, 0), (3, 1), (0, 1), (1, 0)],
                [(3, 0), (2, 0), (1, 1), (0, 1)],
            ];
            let (u, s) = table[a % 4][b % 4];
            u + 4 * ((s + a / 4 + b / 4) % 2)
        }
        let gen = |g: usize| {
            Permutation::from_images((0..8).map(|x| mul(x, g) as u32).collect()).unwrap()
        };
        Group::new(vec![gen(1), gen(2)], Some("Q8".into())).unwrap()
    }

    fn cyclic(n: usize) -> Group {
        let cyc: Vec<u32> = (0..n as u32).collect();
        Group::new(vec![perm(n, &[&cyc])], None).unwrap()
    }

    #[test]
    fn orders_and_classes() {
        let g = s4();
        assert_eq!(g.order(), 24);
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);

        let id = Group::new(vec![Permutation::identity(3)], None).unwrap();
        assert_eq!(id.order(), 1);
        assert_eq!(id.classes().len(), 1);

        let q = q8();
        assert_eq!(q.order(), 8);
        let mut sizes: Vec<usize> = q.classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Group::new(vec![], None).unwrap_err(), GroupError::NoGenerators);
        assert_eq!(
            Group::new(vec![Permutation::identity(3), Permutation::identity(4)], None).unwrap_err(),
            GroupError::DegreeMismatch(3, 4)
        );
        let r = Group::with_bound(vec![perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])], None, 100);
        assert_eq!(r.unwrap_err(), GroupError::OrderBoundExceeded(100));
    }

    #[test]
    fn centralizers() {
        let g = s4();
        let x = g.index_of(&perm(4, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(g.centralizer(x).unwrap().order(), 8);
        assert_eq!(g.centralizer(0).unwrap().order(), 24);
        assert!(g.centralizer(999).is_err());

        let q = q8();
        let x = (0..8).find(|&x| q.element_order(x) == 4).unwrap();
        let c = q.centralizer(x).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.members().iter().any(|&y| q.element_order(y) == 4));
    }

    #[test]
    fn derived_subgroups() {
        let g = s4();
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 12);
        // brute force commutators
        let mut brute: Vec<usize> = Vec::new();
        for a in 0..24 {
            for b in 0..24 {
                brute.push(g.commutator(a, b));
            }
        }
        assert_eq!(g.generate(&brute), d);
        assert!(cyclic(6).derived_subgroup().is_trivial());
        let q = q8();
        let dq = q.derived_subgroup();
        assert_eq!(dq.order(), 2);
        assert_eq!(q.classes().iter().filter(|c| c.size() == 1).count(), 2);
    }

    #[test]
    fn normal_subgroup_lists() {
        let g = s4();
        let orders: Vec<usize> = g.normal_subgroups().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let minimal = g.minimal_normal_subgroups();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].order(), 4);

        let a5 = Group::new(vec![perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1, 2, 3, 4]])], None).unwrap();
        let orders: Vec<usize> = a5.normal_subgroups().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 60]);

        let orders: Vec<usize> = cyclic(6).normal_subgroups().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn quotients() {
        let g = s4();
        let v4 = g.normal_subgroups()[1].clone();
        let q = g.quotient(&v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        // projection is a homomorphism
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(q.projection[g.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
            }
        }
        let t = g.quotient(&g.trivial()).unwrap();
        assert_eq!(t.group.order(), 24);
        let mut s1: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
        let mut s2: Vec<usize> = t.group.classes().iter().map(|c| c.size()).collect();
        s1.sort();
        s2.sort();
        assert_eq!(s1, s2);
        let a4 = g.derived_subgroup();
        assert_eq!(g.quotient(&a4).unwrap().group.order(), 2);

        let not_normal = g.generate(&[g.index_of(&perm(4, &[&[0, 1]])).unwrap()]);
        assert_eq!(g.quotient(&not_normal).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn sylow() {
        let g = s4();
        assert_eq!(g.sylow_subgroup(2).unwrap().order(), 8);
        assert_eq!(g.sylow_subgroup(3).unwrap().order(), 3);
        assert!(cyclic(6).sylow_subgroup(5).unwrap().is_trivial());
        assert_eq!(g.sylow_subgroup(4).unwrap_err(), GroupError::NotPrime(4));
        assert_eq!(g.count_sylow(3).unwrap(), 4);
        assert_eq!(g.count_sylow(2).unwrap(), 3);
        assert_eq!(cyclic(12).count_sylow(2).unwrap(), 1);
        assert_eq!(cyclic(12).count_sylow(7).unwrap(), 1);
    }

    #[test]
    fn count_sylow_matches_conjugates() {
        let g = s4();
        for p in [2u64, 3] {
            let s = g.sylow_subgroup(p).unwrap();
            let mut conjugates: HashSet<Vec<usize>> = HashSet::new();
            for x in 0..g.order() {
                let mut m: Vec<usize> = s.members().iter().map(|&h| g.conjugate(h, x)).collect();
                m.sort();
                conjugates.insert(m);
            }
            assert_eq!(conjugates.len(), g.count_sylow(p).unwrap());
        }
    }
}
