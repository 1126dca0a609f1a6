//! The coprime-codegree predicate and the structural certificate for groups
//! satisfying it.
//!
//! A group is a *-group when `cod(G|G')` has at least two elements and they
//! are pairwise coprime. Every such group must be either a Frobenius group
//! `C_p^k ⋊ Q_8` or a 2-Frobenius group `1 < K < H < G` with `G/H` cyclic,
//! `|H/K| = p` prime, `K` the unique minimal normal subgroup, and all
//! `C_G(x)/K` (`1 ≠ x ∈ K`) cyclic of one order `|R_0|` with `π(R_0) = π(G/H)`;
//! in that case `cod(G|G') = {p, |K|·|R_0|}`. The classifier checks both
//! directions and reports any disagreement as data.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chartable::{character_table, CharacterTable};
use crate::codegree::cod_nonlinear;
use crate::error::Result;
use crate::group::{Group, Subgroup};
use crate::numtheory::{gcd, is_prime, prime_set};
use crate::structure::{
    frobenius_kernel, is_cyclic, is_elementary_abelian, is_nilpotent, is_quaternion8,
    is_solvable, two_frobenius, FrobeniusWitness, TwoFrobeniusWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    FrobeniusCpkQ8,
    TwoFrobenius,
    NotStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NotStarReason {
    /// `G' = 1`, so `cod(G|G')` is empty.
    Abelian,
    /// `|cod(G|G')| = 1`.
    SingleCodegree,
    /// Two codegrees share a prime factor.
    SharedPrime,
}

/// Named reasons a structural check failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckCode {
    NeitherFrobeniusNor2Frobenius,
    KernelNotElementaryAbelian,
    KernelRankOne,
    ComplementNotFound,
    ComplementNotQ8,
    RNotCyclic,
    JNotPrimeOrder,
    JMissing,
    KNotUniqueMinimal,
    KNotCentralized,
    R0NotCyclic,
    R0OrderVaries,
    R0NotDividingR,
    R0PrimesMismatch,
    CodSetMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailureReason {
    /// A *-group whose structure matches neither branch.
    ClassificationViolation,
    /// A group with a verified branch structure that is not a *-group.
    ConverseViolation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusData {
    pub p: u64,
    pub k: u32,
    pub kernel_order: usize,
    pub complement_order: usize,
    pub complement_is_q8: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFrobeniusData {
    pub k_order: usize,
    pub h_order: usize,
    pub p: u64,
    pub r_order: usize,
    pub r0_order: usize,
    /// `(p, |K|·|R_0|)`.
    pub cod_pair: (u64, u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub nilpotent: bool,
    pub solvable: bool,
    pub frobenius_kernel_order: Option<usize>,
    /// Frobenius with a kernel whose order has at least two prime divisors.
    pub mixed_frobenius_kernel: bool,
    pub two_frobenius: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub order: usize,
    pub cod_nonlinear: BTreeSet<u64>,
    pub is_star: bool,
    pub branch: Branch,
    pub not_star_reason: Option<NotStarReason>,
    pub frobenius: Option<FrobeniusData>,
    pub two_frobenius: Option<TwoFrobeniusData>,
    pub structure: StructureSummary,
    pub failure_reason: Option<FailureReason>,
    pub failed_checks: Vec<CheckCode>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.failure_reason.is_none()
    }
}

fn pairwise_coprime(set: &BTreeSet<u64>) -> bool {
    let v: Vec<u64> = set.iter().copied().collect();
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| gcd(a, b) == 1))
}

/// `|cod(G|G')| > 1` with pairwise coprime members.
pub fn is_star_group(table: &CharacterTable<'_>) -> Result<bool> {
    let cod = cod_nonlinear(table)?;
    Ok(cod.len() > 1 && pairwise_coprime(&cod))
}

fn not_star_reason(table: &CharacterTable<'_>, cod: &BTreeSet<u64>) -> Option<NotStarReason> {
    if table.group().is_abelian() {
        Some(NotStarReason::Abelian)
    } else if cod.len() == 1 {
        Some(NotStarReason::SingleCodegree)
    } else if !pairwise_coprime(cod) {
        Some(NotStarReason::SharedPrime)
    } else {
        None
    }
}

/// A subgroup of order `target` meeting `normal` trivially, generated by at
/// most two elements (a class representative and one further element).
pub fn find_complement(g: &Group, normal: &Subgroup, target: usize) -> Option<Subgroup> {
    let fits = |x: usize| target as u64 % g.element_order(x) == 0 && !normal.contains(x);
    let first: Vec<usize> = g
        .classes()
        .iter()
        .map(|c| c.representative)
        .filter(|&x| fits(x))
        .collect();
    let second: Vec<usize> = (1..g.order()).filter(|&x| fits(x)).collect();
    for &x in &first {
        let candidates = std::iter::once(None).chain(second.iter().map(|&y| Some(y)));
        for y in candidates {
            let gens: Vec<usize> = std::iter::once(x).chain(y).collect();
            if let Some(s) = g.generate_bounded(&gens, target) {
                if s.order() == target && s.members().iter().all(|&m| m == 0 || !normal.contains(m)) {
                    return Some(s);
                }
            }
        }
    }
    None
}

fn check_frobenius_branch(
    g: &Group,
    witness: &FrobeniusWitness,
    cod: &BTreeSet<u64>,
) -> std::result::Result<FrobeniusData, Vec<CheckCode>> {
    let mut failed = Vec::new();
    let ea = is_elementary_abelian(g, &witness.kernel);
    let (p, k) = match (ea.holds, ea.prime, ea.rank) {
        (true, Some(p), Some(k)) => (p, k),
        _ => {
            failed.push(CheckCode::KernelNotElementaryAbelian);
            (0, 0)
        }
    };
    if ea.holds && k < 2 {
        failed.push(CheckCode::KernelRankOne);
    }
    let complement = find_complement(g, &witness.kernel, witness.complement_order);
    let complement_is_q8 = match &complement {
        Some(c) => is_quaternion8(g, c),
        None => false,
    };
    if complement.is_none() {
        failed.push(CheckCode::ComplementNotFound);
    } else if !complement_is_q8 {
        failed.push(CheckCode::ComplementNotQ8);
    }
    if failed.is_empty() {
        let expected: BTreeSet<u64> = [4, witness.kernel.order() as u64].into_iter().collect();
        if *cod != expected {
            failed.push(CheckCode::CodSetMismatch);
        }
    }
    if failed.is_empty() {
        Ok(FrobeniusData {
            p,
            k,
            kernel_order: witness.kernel.order(),
            complement_order: witness.complement_order,
            complement_is_q8,
        })
    } else {
        Err(failed)
    }
}

/// Checks the four structural conditions; the codegree formula is checked
/// separately so the converse direction can use the structure alone.
fn check_two_frobenius_structure(
    g: &Group,
    w: &TwoFrobeniusWitness,
) -> std::result::Result<TwoFrobeniusData, Vec<CheckCode>> {
    let mut failed = Vec::new();

    let gh = g.quotient(&w.h).expect("H is normal");
    if !is_cyclic(&gh.group, &gh.group.whole()) {
        failed.push(CheckCode::RNotCyclic);
    }

    let index = (w.h.order() / w.k.order()) as u64;
    let p = if is_prime(index) {
        let has_j = w
            .h
            .members()
            .iter()
            .any(|&x| g.element_order(x) == index && !w.k.contains(x));
        if !has_j {
            failed.push(CheckCode::JMissing);
        }
        index
    } else {
        failed.push(CheckCode::JNotPrimeOrder);
        0
    };

    let minimal = g.minimal_normal_subgroups();
    if minimal.len() != 1 || minimal[0] != w.k {
        failed.push(CheckCode::KNotUniqueMinimal);
    }

    let gk = g.quotient(&w.k).expect("K is normal");
    let mut r0_orders = BTreeSet::new();
    for class in g.classes().iter().skip(1) {
        let x = class.representative;
        if !w.k.contains(x) {
            continue;
        }
        let c = g.centralizer(x).expect("valid index");
        if !w.k.is_subset_of(&c) {
            failed.push(CheckCode::KNotCentralized);
            continue;
        }
        let image = gk.image(&c);
        if !is_cyclic(&gk.group, &image) {
            failed.push(CheckCode::R0NotCyclic);
        }
        r0_orders.insert(image.order());
    }
    let r0 = match r0_orders.len() {
        1 => *r0_orders.iter().next().unwrap(),
        _ => {
            failed.push(CheckCode::R0OrderVaries);
            0
        }
    };
    if r0 != 0 {
        if w.r_order % r0 != 0 {
            failed.push(CheckCode::R0NotDividingR);
        }
        if prime_set(r0 as u64) != prime_set(w.r_order as u64) {
            failed.push(CheckCode::R0PrimesMismatch);
        }
    }

    failed.sort();
    failed.dedup();
    if failed.is_empty() {
        Ok(TwoFrobeniusData {
            k_order: w.k.order(),
            h_order: w.h.order(),
            p,
            r_order: w.r_order,
            r0_order: r0,
            cod_pair: (p, (w.k.order() * r0) as u64),
        })
    } else {
        Err(failed)
    }
}

/// Classifies `g`, computing its character table.
pub fn classify(g: &Group) -> Result<Certificate> {
    let table = character_table(g)?;
    classify_with_table(&table)
}

pub fn classify_with_table(table: &CharacterTable<'_>) -> Result<Certificate> {
    let g = table.group();
    let cod = cod_nonlinear(table)?;
    let is_star = cod.len() > 1 && pairwise_coprime(&cod);

    let frob = frobenius_kernel(g);
    let two_frob = if frob.is_none() { two_frobenius(g) } else { None };
    let structure = StructureSummary {
        nilpotent: is_nilpotent(g),
        solvable: is_solvable(g),
        frobenius_kernel_order: frob.as_ref().map(|w| w.kernel.order()),
        mixed_frobenius_kernel: frob
            .as_ref()
            .is_some_and(|w| prime_set(w.kernel.order() as u64).len() > 1),
        two_frobenius: two_frob.as_ref().map(|w| (w.k.order(), w.h.order())),
    };

    let mut cert = Certificate {
        name: g.name().unwrap_or("G").to_string(),
        order: g.order(),
        cod_nonlinear: cod.clone(),
        is_star,
        branch: Branch::NotStar,
        not_star_reason: not_star_reason(table, &cod),
        frobenius: None,
        two_frobenius: None,
        structure,
        failure_reason: None,
        failed_checks: Vec::new(),
    };

    let frob_check = frob.as_ref().map(|w| check_frobenius_branch(g, w, &cod));
    let two_check = two_frob.as_ref().map(|w| check_two_frobenius_structure(g, w));

    if is_star {
        match (frob_check, two_check) {
            (Some(Ok(data)), _) => {
                cert.branch = Branch::FrobeniusCpkQ8;
                cert.frobenius = Some(data);
            }
            (_, Some(Ok(data))) => {
                let expected: BTreeSet<u64> = [data.cod_pair.0, data.cod_pair.1].into_iter().collect();
                if expected == cod {
                    cert.branch = Branch::TwoFrobenius;
                    cert.two_frobenius = Some(data);
                } else {
                    cert.failure_reason = Some(FailureReason::ClassificationViolation);
                    cert.failed_checks = vec![CheckCode::CodSetMismatch];
                }
            }
            (Some(Err(codes)), _) | (_, Some(Err(codes))) => {
                cert.failure_reason = Some(FailureReason::ClassificationViolation);
                cert.failed_checks = codes;
            }
            (None, None) => {
                cert.failure_reason = Some(FailureReason::ClassificationViolation);
                cert.failed_checks = vec![CheckCode::NeitherFrobeniusNor2Frobenius];
            }
        }
    } else {
        // the structure side of each branch forces the *-property
        let frob_structure_holds = matches!(frob_check, Some(Ok(_)));
        let two_structure_holds = matches!(two_check, Some(Ok(_)));
        if frob_structure_holds || two_structure_holds {
            cert.failure_reason = Some(FailureReason::ConverseViolation);
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn s4_is_two_frobenius_star() {
        let g = Group::new(vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], Some("S4".into())).unwrap();
        let c = classify(&g).unwrap();
        assert!(c.is_star);
        assert_eq!(c.branch, Branch::TwoFrobenius);
        let d = c.two_frobenius.unwrap();
        assert_eq!((d.k_order, d.p, d.r0_order, d.cod_pair), (4, 3, 2, (3, 8)));
        assert!(c.failure_reason.is_none());
    }

    #[test]
    fn a4_has_a_single_codegree() {
        let g = Group::new(vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])], None).unwrap();
        let c = classify(&g).unwrap();
        assert!(!c.is_star);
        assert_eq!(c.not_star_reason, Some(NotStarReason::SingleCodegree));
        assert_eq!(c.cod_nonlinear, [4].into_iter().collect());
        assert!(c.failure_reason.is_none());
    }

    #[test]
    fn abelian_is_not_star() {
        let g = Group::new(vec![perm(5, &[&[0, 1, 2, 3, 4]])], None).unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(c.not_star_reason, Some(NotStarReason::Abelian));
        assert!(c.cod_nonlinear.is_empty());
    }
}
