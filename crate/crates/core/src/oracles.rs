//! Falsification checks: known facts about codegrees evaluated on concrete
//! groups. Each oracle returns data rather than panicking so a corpus run can
//! tally results.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chartable::{character_table, class_fusion, weighted_inner_sum, CharacterTable};
use crate::codegree::{cod_nonlinear, codegree, prime_graph};
use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::numtheory::{gcd, p_part, prime_power_base, prime_set};
use crate::structure::{
    frobenius_kernel, is_abelian, is_cyclic, is_elementary_abelian, is_solvable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub oracle: String,
    pub status: Status,
    /// Number of individual instances checked.
    pub checks: usize,
    pub detail: Option<String>,
}

impl OracleResult {
    fn from_counts(oracle: &str, checks: usize, failures: Vec<String>) -> Self {
        let status = if !failures.is_empty() {
            Status::Fail
        } else if checks == 0 {
            Status::NotApplicable
        } else {
            Status::Pass
        };
        OracleResult {
            oracle: oracle.to_string(),
            status,
            checks,
            detail: (!failures.is_empty()).then(|| failures.join("; ")),
        }
    }
}

/// For each prime `p | |G|` dividing no element of `cod(G|G')`: does a Sylow
/// `p`-subgroup act fixed-point-freely on `G'` (`C_{G'}(y) = 1` for `1 ≠ y ∈ P`)?
pub fn oracle_sylow_action(table: &CharacterTable<'_>) -> Result<Vec<(u64, bool)>> {
    let g = table.group();
    let derived = g.derived_subgroup();
    if derived.is_trivial() {
        return Err(GroupError::Precondition("group is abelian".into()));
    }
    let cod = cod_nonlinear(table)?;
    let mut out = Vec::new();
    for p in prime_set(g.order() as u64) {
        if cod.iter().any(|c| c % p == 0) {
            continue;
        }
        let sylow = g.sylow_subgroup(p)?;
        let frobenius_action = sylow.members().iter().filter(|&&y| y != 0).all(|&y| {
            derived
                .members()
                .iter()
                .all(|&x| x == 0 || !g.commute(x, y))
        });
        out.push((p, frobenius_action));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NqOutcome {
    Pass,
    Fail,
    NotApplicable,
}

/// Elements of `m` fixed by every generator of `q` under conjugation.
fn fixed_points(g: &Group, m: &Subgroup, q: &Subgroup) -> usize {
    m.members()
        .iter()
        .filter(|&&v| q.generators().iter().all(|&y| g.commute(v, y)))
        .count()
}

/// The `N_q` counting identity for an elementary abelian normal `m` viewed as
/// a module under conjugation.
///
/// When every `1 ≠ v ∈ M` has a Sylow `q`-subgroup of `G` that lies in
/// `C_G(v)` and is normal there, checks `(|M| - 1) = n_q(G) · (|C_M(Q)| - 1)`.
pub fn oracle_nq_count(g: &Group, m: &Subgroup, q: u64) -> Result<NqOutcome> {
    if !g.is_normal(m) {
        return Err(GroupError::NotNormal);
    }
    let ea = is_elementary_abelian(g, m);
    if !ea.holds || m.is_trivial() {
        return Err(GroupError::Precondition("module must be a nontrivial elementary abelian subgroup".into()));
    }
    let centralizer_order = (0..g.order())
        .filter(|&x| m.generators().iter().all(|&v| g.commute(x, v)))
        .count();
    let acting = (g.order() / centralizer_order) as u64;
    if acting % q != 0 {
        return Err(GroupError::Precondition(format!("{q} does not divide |G/C_G(M)| = {acting}")));
    }
    let sylow_order = p_part(g.order() as u64, q) as usize;
    for &v in m.members().iter().filter(|&&v| v != 0) {
        let c = g.centralizer(v)?;
        let q_elements = g.p_elements(&c, q).len();
        let has_normal_sylow =
            p_part(c.order() as u64, q) as usize == sylow_order && q_elements == sylow_order;
        if !has_normal_sylow {
            return Ok(NqOutcome::NotApplicable);
        }
    }
    let sylow = g.sylow_subgroup(q)?;
    let n_q = g.count_sylow(q)?;
    let fixed = fixed_points(g, m, &sylow);
    let holds = fixed > 1 && m.order() - 1 == n_q * (fixed - 1);
    Ok(if holds { NqOutcome::Pass } else { NqOutcome::Fail })
}

/// If `|cod(G|G')| <= 2` the group must be solvable.
pub fn oracle_solvability(table: &CharacterTable<'_>) -> Result<bool> {
    let cod = cod_nonlinear(table)?;
    Ok(cod.len() > 2 || is_solvable(table.group()))
}

/// For each normal `M` and `χ ∈ Irr(G)`, every irreducible constituent `ψ` of
/// `χ_M` has `cod(ψ) | cod(χ)`. Returns `(checks, failures)`.
pub fn oracle_subnormal_divisibility(
    table: &CharacterTable<'_>,
    m: &Subgroup,
) -> Result<(usize, Vec<String>)> {
    let g = table.group();
    if !g.is_normal(m) {
        return Err(GroupError::NotNormal);
    }
    let mg = g.subgroup_as_group(m);
    let mt = character_table(&mg)?;
    let fusion = class_fusion(g, m, &mg);
    let mut checks = 0;
    let mut failures = Vec::new();
    for i in 0..table.num_rows() {
        let restricted: Vec<_> = fusion.iter().map(|&k| table.value(i, k).clone()).collect();
        let cod_chi = codegree(table, i)?;
        for j in 0..mt.num_rows() {
            let sum = weighted_inner_sum(&mg, &restricted, &mt.values()[j]);
            let Some(total) = sum.as_integer() else {
                failures.push(format!("inner product of row {i} with M-row {j} is irrational"));
                continue;
            };
            if total % m.order() as i64 != 0 || total < 0 {
                failures.push(format!("inner product of row {i} with M-row {j} is not a multiplicity"));
                continue;
            }
            if total == 0 {
                continue;
            }
            checks += 1;
            let cod_psi = codegree(&mt, j)?;
            if cod_chi % cod_psi != 0 {
                failures.push(format!(
                    "|M|={}: cod(psi)={cod_psi} does not divide cod(chi)={cod_chi}",
                    m.order()
                ));
            }
        }
    }
    Ok((checks, failures))
}

/// For abelian normal `K` and `χ` with `ker χ ∩ K = 1`: `|K|` divides `cod(χ)`.
pub fn oracle_abelian_kernel(table: &CharacterTable<'_>, k: &Subgroup) -> Result<(usize, Vec<String>)> {
    let g = table.group();
    if !g.is_normal(k) || !is_abelian(g, k) {
        return Err(GroupError::Precondition("K must be abelian and normal".into()));
    }
    let mut checks = 0;
    let mut failures = Vec::new();
    for i in 0..table.num_rows() {
        let meets_trivially = k
            .members()
            .iter()
            .all(|&x| x == 0 || !table.kernel(i).contains(x));
        if !meets_trivially {
            continue;
        }
        checks += 1;
        let c = codegree(table, i)?;
        if c % k.order() as u64 != 0 {
            failures.push(format!("|K|={} does not divide cod={c}", k.order()));
        }
    }
    Ok((checks, failures))
}

/// For `G = C_p × L` with `L` a nonabelian `p'`-group: some pair in
/// `cod(G|G')` has ratio exactly `p`.
pub fn oracle_direct_product(table: &CharacterTable<'_>, p: u64) -> Result<bool> {
    let cod = cod_nonlinear(table)?;
    Ok(cod.iter().any(|&c| cod.contains(&(c * p))))
}

/// If `cod(G|G')` has `m > 1` pairwise coprime members, `Γ(G|G')` has exactly
/// `m` components, and `m = 2`. `None` when the hypothesis does not apply.
pub fn oracle_component_count(cod: &BTreeSet<u64>) -> Option<bool> {
    let v: Vec<u64> = cod.iter().copied().collect();
    let coprime = v
        .iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| gcd(a, b) == 1));
    if v.len() <= 1 || !coprime || v.contains(&1) {
        return None;
    }
    let components = prime_graph(cod).num_components();
    Some(components == v.len() && components == 2)
}

/// A group with `|cod(G|G')| = 1` is a `p`-group, or a Frobenius group with
/// kernel `G' ≅ C_q^k`, cyclic complement, and `cod(G|G') = {q^k}` equal to
/// the order of every minimal normal subgroup. `None` when not applicable.
pub fn oracle_single_codegree(table: &CharacterTable<'_>) -> Result<Option<bool>> {
    let g = table.group();
    let cod = cod_nonlinear(table)?;
    if cod.len() != 1 {
        return Ok(None);
    }
    if prime_power_base(g.order() as u64).is_some() {
        return Ok(Some(true));
    }
    let Some(w) = frobenius_kernel(g) else {
        return Ok(Some(false));
    };
    let derived = g.derived_subgroup();
    let n = w.kernel.order() as u64;
    let quotient = g.quotient(&w.kernel)?;
    let ok = w.kernel == derived
        && is_elementary_abelian(g, &w.kernel).holds
        && is_cyclic(&quotient.group, &quotient.group.whole())
        && cod.iter().next() == Some(&n)
        && g.minimal_normal_subgroups().iter().all(|m| m.order() as u64 == n);
    Ok(Some(ok))
}

/// Knobs for [`run_oracles`].
#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Oracles that need subgroup tables run only up to this order.
    pub subgroup_oracle_limit: usize,
    /// Set when the group was built as `C_p × L`.
    pub direct_product_prime: Option<u64>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            subgroup_oracle_limit: 200,
            direct_product_prime: None,
        }
    }
}

/// Runs every applicable oracle and reports one result per oracle.
pub fn run_oracles(table: &CharacterTable<'_>, options: &OracleOptions) -> Result<Vec<OracleResult>> {
    let g = table.group();
    let mut out = Vec::new();
    let small = g.order() <= options.subgroup_oracle_limit;
    let nonabelian = !g.is_abelian();

    // Sylow action on G'
    if nonabelian {
        let res = oracle_sylow_action(table)?;
        let failures = res
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(p, _)| format!("Sylow {p}-subgroup does not act fixed-point-freely on G'"))
            .collect();
        out.push(OracleResult::from_counts("sylow_frobenius_action", res.len(), failures));
    } else {
        out.push(OracleResult::from_counts("sylow_frobenius_action", 0, vec![]));
    }

    let ok = oracle_solvability(table)?;
    out.push(OracleResult::from_counts(
        "solvability",
        1,
        if ok { vec![] } else { vec!["|cod(G|G')| <= 2 but G is not solvable".into()] },
    ));

    let cod = cod_nonlinear(table)?;
    let (checks, failures) = match oracle_component_count(&cod) {
        None => (0, vec![]),
        Some(true) => (1, vec![]),
        Some(false) => (1, vec![format!("component count wrong for {cod:?}")]),
    };
    out.push(OracleResult::from_counts("component_count", checks, failures));

    let (checks, failures) = match oracle_single_codegree(table)? {
        None => (0, vec![]),
        Some(true) => (1, vec![]),
        Some(false) => (1, vec!["single-codegree group has unexpected structure".into()]),
    };
    out.push(OracleResult::from_counts("single_codegree_structure", checks, failures));

    let normals: Vec<Subgroup> = g
        .normal_subgroups()
        .iter()
        .filter(|n| !n.is_trivial())
        .cloned()
        .collect();

    if small {
        let mut checks = 0;
        let mut failures = Vec::new();
        for m in normals.iter().filter(|m| m.order() < g.order()) {
            let (c, f) = oracle_subnormal_divisibility(table, m)?;
            checks += c;
            failures.extend(f);
        }
        out.push(OracleResult::from_counts("subnormal_divisibility", checks, failures));

        let mut checks = 0;
        let mut failures = Vec::new();
        for k in normals.iter().filter(|k| is_abelian(g, k)) {
            let (c, f) = oracle_abelian_kernel(table, k)?;
            checks += c;
            failures.extend(f);
        }
        out.push(OracleResult::from_counts("abelian_kernel_divisibility", checks, failures));

        let mut checks = 0;
        let mut failures = Vec::new();
        for m in g.minimal_normal_subgroups() {
            if !is_elementary_abelian(g, &m).holds {
                continue;
            }
            let centralizer_order = (0..g.order())
                .filter(|&x| m.generators().iter().all(|&v| g.commute(x, v)))
                .count();
            for q in prime_set((g.order() / centralizer_order) as u64) {
                match oracle_nq_count(g, &m, q)? {
                    NqOutcome::Pass => checks += 1,
                    NqOutcome::Fail => {
                        checks += 1;
                        failures.push(format!("N_q count fails for |M|={}, q={q}", m.order()));
                    }
                    NqOutcome::NotApplicable => {}
                }
            }
        }
        out.push(OracleResult::from_counts("nq_count", checks, failures));
    }

    if let Some(p) = options.direct_product_prime {
        let ok = oracle_direct_product(table, p)?;
        out.push(OracleResult::from_counts(
            "direct_product_ratio",
            1,
            if ok { vec![] } else { vec![format!("no codegree pair with ratio {p}")] },
        ));
    }
    Ok(out)
}
