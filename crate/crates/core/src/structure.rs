//! Structural predicates: cyclic, elementary abelian, quaternion, nilpotent
//! and solvable tests, plus Frobenius and 2-Frobenius recognition.

use crate::group::{Group, Subgroup};
use crate::numtheory::{factorize, gcd, is_prime, prime_power_base};

pub fn is_abelian(g: &Group, s: &Subgroup) -> bool {
    let gens = s.generators();
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commute(a, b)))
}

pub fn is_cyclic(g: &Group, s: &Subgroup) -> bool {
    let n = s.order() as u64;
    s.members().iter().any(|&x| g.element_order(x) == n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementaryAbelian {
    pub holds: bool,
    pub prime: Option<u64>,
    pub rank: Option<u32>,
}

/// Abelian with every non-identity element of one prime order `p`.
/// The trivial group reports `(true, None, Some(0))`.
pub fn is_elementary_abelian(g: &Group, s: &Subgroup) -> ElementaryAbelian {
    let no = ElementaryAbelian {
        holds: false,
        prime: None,
        rank: None,
    };
    if s.is_trivial() {
        return ElementaryAbelian {
            holds: true,
            prime: None,
            rank: Some(0),
        };
    }
    let Some(p) = prime_power_base(s.order() as u64) else {
        return no;
    };
    if !is_abelian(g, s) || s.members().iter().any(|&x| x != 0 && g.element_order(x) != p) {
        return no;
    }
    let rank = factorize(s.order() as u64)[0].1;
    ElementaryAbelian {
        holds: true,
        prime: Some(p),
        rank: Some(rank),
    }
}

fn involutions(g: &Group, s: &Subgroup) -> usize {
    s.members().iter().filter(|&&x| g.element_order(x) == 2).count()
}

pub fn is_quaternion8(g: &Group, s: &Subgroup) -> bool {
    s.order() == 8 && !is_abelian(g, s) && involutions(g, s) == 1
}

/// `Q_{2^k}` for some `k >= 3`: a nonabelian 2-group with a unique involution.
pub fn is_generalized_quaternion(g: &Group, s: &Subgroup) -> bool {
    let n = s.order();
    n >= 8 && n.is_power_of_two() && !is_abelian(g, s) && involutions(g, s) == 1
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &Group) -> bool {
    factorize(g.order() as u64).iter().all(|&(p, _)| {
        let sylow = g.sylow_subgroup(p).expect("p is prime");
        g.is_normal(&sylow)
    })
}

/// The derived series reaches the trivial subgroup.
pub fn is_solvable(g: &Group) -> bool {
    let mut current = g.whole();
    loop {
        if current.is_trivial() {
            return true;
        }
        let next = g.derived_subgroup_of(&current);
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

pub fn derived_length(g: &Group) -> Option<usize> {
    let mut current = g.whole();
    let mut steps = 0;
    while !current.is_trivial() {
        let next = g.derived_subgroup_of(&current);
        if next.order() == current.order() {
            return None;
        }
        current = next;
        steps += 1;
    }
    Some(steps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusWitness {
    pub kernel: Subgroup,
    pub complement_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFrobeniusWitness {
    pub k: Subgroup,
    pub h: Subgroup,
    /// `|H/K|` when it is prime.
    pub p: Option<u64>,
    /// `|G : H|`.
    pub r_order: usize,
}

/// For `kernel ⊆ ambient`, both normal in `g`: every non-identity `x` in the
/// kernel has `C_ambient(x) ⊆ kernel`. Checked on class representatives of
/// `g`, which suffices because both subgroups are normal.
pub fn centralizers_in_kernel(g: &Group, ambient: &Subgroup, kernel: &Subgroup) -> bool {
    g.classes().iter().skip(1).all(|class| {
        let x = class.representative;
        !kernel.contains(x)
            || ambient
                .members()
                .iter()
                .all(|&y| kernel.contains(y) || !g.commute(x, y))
    })
}

/// The Frobenius kernel of `g`, if `g` is a Frobenius group.
pub fn frobenius_kernel(g: &Group) -> Option<FrobeniusWitness> {
    let whole = g.whole();
    let mut found: Option<FrobeniusWitness> = None;
    for n in g.normal_subgroups() {
        if n.is_trivial() || n.order() == g.order() {
            continue;
        }
        if centralizers_in_kernel(g, &whole, n) {
            assert!(found.is_none(), "a Frobenius kernel is unique");
            let complement_order = g.order() / n.order();
            assert_eq!(
                gcd(n.order() as u64, complement_order as u64),
                1,
                "Frobenius kernel and complement have coprime orders"
            );
            found = Some(FrobeniusWitness {
                kernel: n.clone(),
                complement_order,
            });
        }
    }
    found
}

/// First normal pair `K < H` (ascending order, then lexicographic) such that
/// `H` is Frobenius with kernel `K` and `G/K` is Frobenius with kernel `H/K`.
pub fn two_frobenius(g: &Group) -> Option<TwoFrobeniusWitness> {
    let normals = g.normal_subgroups();
    let order = g.order();
    for (i, k) in normals.iter().enumerate() {
        if k.is_trivial() || k.order() == order {
            continue;
        }
        for h in &normals[i + 1..] {
            if h.order() == order || h.order() == k.order() || !k.is_subset_of(h) {
                continue;
            }
            if !centralizers_in_kernel(g, h, k) {
                continue;
            }
            let quotient = g.quotient(k).expect("normal");
            let q = &quotient.group;
            let hk = quotient.image(h);
            if centralizers_in_kernel(q, &q.whole(), &hk) {
                let index = (h.order() / k.order()) as u64;
                return Some(TwoFrobeniusWitness {
                    k: k.clone(),
                    h: h.clone(),
                    p: is_prime(index).then_some(index),
                    r_order: order / h.order(),
                });
            }
        }
    }
    None
}
