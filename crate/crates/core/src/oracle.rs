//! Brute-force ground truth on small ground sets.
//!
//! Nothing here evaluates a closed form. Families are scanned as bitmask
//! combinations over the bipartition pool; each pool member carries a mask of
//! the element pairs it cuts, so a family separates iff the OR of its masks
//! covers every pair.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::bipartition::{all_bipartitions, Bipartition, FamilyOfBipartitions};
use crate::counting::{self, ceil_log2, CountValue, Counter};
use crate::error::{Error, Result};
use crate::tree;

/// Largest ground set the subset scans accept.
pub const MAX_ORACLE_N: usize = 5;

/// Largest `k` for the permutation / set-partition Stirling enumerations.
pub const MAX_STIRLING_BRUTE_K: usize = 8;

fn check_cap(n: usize, what: &'static str) -> Result<()> {
    if !(2..=MAX_ORACLE_N).contains(&n) {
        return Err(Error::Capacity {
            what,
            n,
            bound: MAX_ORACLE_N,
        });
    }
    Ok(())
}

/// Pool of bipartitions with the pair mask of each.
struct Pool {
    n: usize,
    members: Vec<Bipartition>,
    pair_masks: Vec<u64>,
    all_pairs: u64,
}

impl Pool {
    fn new(n: usize, proper_only: bool) -> Result<Self> {
        let members = all_bipartitions(n, proper_only)?;
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push((i, j));
            }
        }
        let pair_masks = members
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u64, |acc, (idx, &(i, j))| {
                    let side = |e: usize| (p.coblock() >> (e - 1)) & 1;
                    acc | (u64::from(side(i) != side(j)) << idx)
                })
            })
            .collect();
        let all_pairs = if pairs.is_empty() { 0 } else { (1u64 << pairs.len()) - 1 };
        Ok(Self {
            n,
            members,
            pair_masks,
            all_pairs,
        })
    }

    fn covered(&self, subset: u32) -> u64 {
        let mut acc = 0;
        let mut rest = subset;
        while rest != 0 {
            acc |= self.pair_masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        acc
    }

    fn separates(&self, subset: u32) -> bool {
        self.covered(subset) == self.all_pairs
    }

    fn is_minimal(&self, subset: u32) -> bool {
        if !self.separates(subset) {
            return false;
        }
        let mut rest = subset;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if self.separates(subset & !bit) {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }

    fn family(&self, subset: u32) -> FamilyOfBipartitions {
        let members = (0..self.members.len())
            .filter(|b| (subset >> b) & 1 == 1)
            .map(|b| self.members[b]);
        FamilyOfBipartitions::new(self.n, members).expect("pool members share n")
    }

    fn size(&self) -> usize {
        self.members.len()
    }
}

/// All `k`-element subsets of `0..size` as bitmasks, in lexicographic order.
fn combinations(size: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << size;
    let first = if k > size { None } else { Some((1u64 << k) - 1) };
    std::iter::successors(first, move |&c| {
        if c == 0 {
            return None;
        }
        // Gosper's hack
        let low = c & c.wrapping_neg();
        let ripple = c + low;
        let next = (((ripple ^ c) >> 2) / low) | ripple;
        (next < limit).then_some(next)
    })
    .map(|c| c as u32)
}

/// Number of separating `k`-subsets of the pool of all (or all proper)
/// bipartitions of `{1..n}`.
pub fn brute_count_separating(n: usize, k: usize, proper_only: bool) -> Result<CountValue> {
    check_cap(n, "brute_count_separating (2 <= n)")?;
    let pool = Pool::new(n, proper_only)?;
    let count = combinations(pool.size(), k)
        .filter(|&s| pool.separates(s))
        .count();
    Ok(CountValue::exact(BigUint::from(count)))
}

/// Visit every separating family on `{1..n}`, optionally restricted to one
/// size, to proper members, or to minimal families. Families arrive grouped
/// by size, each group in lexicographic subset order.
pub fn for_each_separating<F>(
    n: usize,
    size: Option<usize>,
    proper_only: bool,
    minimal_only: bool,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(FamilyOfBipartitions),
{
    check_cap(n, "family enumeration (2 <= n)")?;
    let pool = Pool::new(n, proper_only)?;
    let sizes: Vec<usize> = match size {
        Some(k) => vec![k],
        None => (0..=pool.size()).collect(),
    };
    for k in sizes {
        for s in combinations(pool.size(), k) {
            let keep = if minimal_only {
                pool.is_minimal(s)
            } else {
                pool.separates(s)
            };
            if keep {
                visit(pool.family(s));
            }
        }
    }
    Ok(())
}

/// Every minimal separating family of size `n - 1`.
pub fn brute_minimal_max_families(n: usize) -> Result<Vec<FamilyOfBipartitions>> {
    check_cap(n, "brute_minimal_max_families (2 <= n)")?;
    let pool = Pool::new(n, false)?;
    Ok(combinations(pool.size(), n - 1)
        .filter(|&s| pool.is_minimal(s))
        .map(|s| pool.family(s))
        .collect())
}

/// Histogram: family size to number of minimal separating families of that size.
pub fn brute_minimal_size_profile(n: usize) -> Result<BTreeMap<usize, u64>> {
    check_cap(n, "brute_minimal_size_profile (2 <= n)")?;
    let pool = Pool::new(n, false)?;
    let mut profile = BTreeMap::new();
    for subset in 0u32..(1u32 << pool.size()) {
        if pool.is_minimal(subset) {
            *profile.entry(subset.count_ones() as usize).or_insert(0) += 1;
        }
    }
    Ok(profile)
}

/// `n x k` 0/1 matrices with a zero first row and pairwise distinct rows,
/// counted by enumerating every matrix.
pub fn brute_distinct_row_matrices(n: usize, k: usize) -> Result<u64> {
    if n == 0 || (n - 1) * k > 24 {
        return Err(Error::Capacity {
            what: "matrix enumeration ((n-1)k <= 24)",
            n,
            bound: 24,
        });
    }
    let mut count = 0;
    for cells in 0u64..(1u64 << ((n - 1) * k)) {
        let mut rows = vec![0u64];
        rows.extend((0..n - 1).map(|r| (cells >> (r * k)) & ((1u64 << k) - 1)));
        let distinct: BTreeSet<u64> = rows.iter().copied().collect();
        if distinct.len() == n {
            count += 1;
        }
    }
    Ok(count)
}

fn check_stirling_cap(k: usize) -> Result<()> {
    if k > MAX_STIRLING_BRUTE_K {
        return Err(Error::Capacity {
            what: "Stirling enumeration",
            n: k,
            bound: MAX_STIRLING_BRUTE_K,
        });
    }
    Ok(())
}

/// Set partitions of a `k`-set into `i` blocks, by restricted growth strings.
pub fn brute_stirling2(k: usize, i: usize) -> Result<u64> {
    check_stirling_cap(k)?;
    fn extend(pos: usize, k: usize, blocks: usize, i: usize) -> u64 {
        if pos == k {
            return u64::from(blocks == i);
        }
        (0..=blocks)
            .filter(|&b| b < i)
            .map(|b| extend(pos + 1, k, blocks.max(b + 1), i))
            .sum()
    }
    Ok(extend(0, k, 0, i))
}

/// Permutations of `k` points with exactly `i` cycles.
pub fn brute_stirling1(k: usize, i: usize) -> Result<u64> {
    check_stirling_cap(k)?;
    fn cycles(perm: &[usize]) -> usize {
        let mut seen = vec![false; perm.len()];
        let mut count = 0;
        for start in 0..perm.len() {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        count
    }
    fn walk(perm: &mut Vec<usize>, used: u32, k: usize, i: usize) -> u64 {
        if perm.len() == k {
            return u64::from(cycles(perm) == i);
        }
        let mut total = 0;
        for v in 0..k {
            if used & (1 << v) == 0 {
                perm.push(v);
                total += walk(perm, used | (1 << v), k, i);
                perm.pop();
            }
        }
        total
    }
    Ok(walk(&mut Vec::with_capacity(k), 0, k, i))
}

/// Length-`k` sequences over `i` symbols hitting every symbol.
pub fn brute_surjections(k: usize, i: usize) -> Result<u64> {
    check_stirling_cap(k)?;
    if i == 0 {
        return Ok(u64::from(k == 0));
    }
    let total = (i as u64).pow(k as u32);
    let mut count = 0;
    for mut code in 0..total {
        let mut hit = 0u64;
        for _ in 0..k {
            hit |= 1 << (code % i as u64);
            code /= i as u64;
        }
        if hit.count_ones() as usize == i {
            count += 1;
        }
    }
    Ok(count)
}

/// One check in a [`ValidationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub params: String,
    pub pass: bool,
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub n_max: usize,
    pub k_max: usize,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub summary: String,
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One line: the overall verdict and the distinct names of failing checks.
    fn render_summary(&self) -> String {
        if self.passed {
            return format!("verify: PASS ({} checks)", self.total);
        }
        let names: BTreeSet<&str> = self.failures().map(|c| c.name.as_str()).collect();
        format!(
            "verify: FAIL ({} of {} checks failed: {})",
            self.failed,
            self.total,
            names.into_iter().collect::<Vec<_>>().join(", ")
        )
    }
}

struct Recorder {
    checks: Vec<CheckOutcome>,
}

impl Recorder {
    fn equal<T: ToString + PartialEq>(
        &mut self,
        name: &str,
        params: String,
        left: Result<T>,
        right: Result<T>,
    ) {
        let outcome = match (left, right) {
            (Ok(l), Ok(r)) => CheckOutcome {
                name: name.into(),
                params,
                pass: l == r,
                left: l.to_string(),
                right: r.to_string(),
                detail: None,
            },
            (l, r) => {
                let show = |v: &Result<T>| match v {
                    Ok(x) => x.to_string(),
                    Err(_) => "error".into(),
                };
                let detail = [l.as_ref().err(), r.as_ref().err()]
                    .into_iter()
                    .flatten()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join("; ");
                CheckOutcome {
                    name: name.into(),
                    params,
                    pass: false,
                    left: show(&l),
                    right: show(&r),
                    detail: Some(detail),
                }
            }
        };
        self.checks.push(outcome);
    }

    fn identity(&mut self, name: &str, params: String, check: Result<counting::IdentityCheck>) {
        let (left, right) = match check {
            Ok(c) => (Ok(c.lhs), Ok(c.rhs)),
            Err(e) => (Err(e.clone()), Err(e)),
        };
        self.equal(name, params, left, right);
    }

    fn flag(&mut self, name: &str, params: String, pass: bool, detail: String) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            params,
            pass,
            left: pass.to_string(),
            right: "true".into(),
            detail: (!pass).then_some(detail),
        });
    }
}

fn pool_size(n: usize) -> usize {
    1usize << (n - 1).min(usize::BITS as usize - 2)
}

fn value(r: Result<CountValue>) -> Result<BigUint> {
    r.map(|c| c.value)
}

/// Run every formula, identity and bijection check on the grid
/// `2 <= n <= n_max`, `k <= k_max` with the default Stirling tables.
pub fn cross_validate(n_max: usize, k_max: usize) -> ValidationReport {
    cross_validate_with(&Counter::for_grid(n_max, k_max), n_max, k_max)
}

/// As [`cross_validate`], evaluating formulas through `counter`. Oracle
/// comparisons are limited to `n <= 5`; formula-against-formula checks use
/// the full grid.
pub fn cross_validate_with(counter: &Counter, n_max: usize, k_max: usize) -> ValidationReport {
    let mut rec = Recorder { checks: Vec::new() };
    let oracle_n = n_max.min(MAX_ORACLE_N);

    // closed forms against the subset scan
    for n in 2..=oracle_n {
        for k in 1..=k_max.min(pool_size(n)) {
            let p = format!("n={n}, k={k}");
            let brute_tau = brute_count_separating(n, k, false);
            let brute_sigma = brute_count_separating(n, k, true);
            rec.equal("tau_v1_vs_brute", p.clone(), value(counter.tau_v1(n, k)), value(brute_tau.clone()));
            if k >= 2 {
                rec.equal("tau_v2_vs_brute", p.clone(), value(counter.tau_v2(n, k)), value(brute_tau));
            }
            rec.equal("sigma_v1_vs_brute", p.clone(), value(counter.sigma_v1(n, k)), value(brute_sigma.clone()));
            rec.equal("sigma_v2_vs_brute", p, value(counter.sigma_v2(n, k)), value(brute_sigma));
        }
    }

    // closed forms against each other, and the connecting identities
    for n in 2..=n_max {
        for k in 1..=k_max.min(pool_size(n)) {
            let p = format!("n={n}, k={k}");
            if k >= 2 {
                rec.equal("tau_v1_vs_tau_v2", p.clone(), value(counter.tau_v1(n, k)), value(counter.tau_v2(n, k)));
                rec.identity("sigma_tau_recurrence", p.clone(), counter.sigma_tau(n, k));
                rec.identity("transpose_identity", p.clone(), counter.transpose_identity(n, k));
            }
            rec.equal("sigma_v1_vs_sigma_v2", p.clone(), value(counter.sigma_v1(n, k)), value(counter.sigma_v2(n, k)));
            rec.identity("sum_identity", p, counter.sum_identity(n, k));
        }
    }

    for k in 0..=k_max {
        for i in 0..=k {
            rec.identity(
                "stirling1_identity",
                format!("k={k}, i={i}"),
                counter.stirling1_identity(k, i),
            );
        }
    }

    for k in 0..=k_max.min(MAX_STIRLING_BRUTE_K) {
        for i in 0..=k {
            let p = format!("k={k}, i={i}");
            rec.equal(
                "stirling1_vs_brute",
                p.clone(),
                counter.stirling1_unsigned(k, i),
                brute_stirling1(k, i).map(BigUint::from),
            );
            rec.equal(
                "stirling2_vs_brute",
                p.clone(),
                counter.stirling2(k, i),
                brute_stirling2(k, i).map(BigUint::from),
            );
            rec.equal(
                "surjections_vs_brute",
                p,
                counter.surjective_sequences(k, i),
                brute_surjections(k, i).map(BigUint::from),
            );
        }
    }

    for n in 2..=oracle_n {
        let m = ceil_log2(n);
        let p = format!("n={n}");
        rec.equal(
            "min_size_count_vs_brute",
            p.clone(),
            value(counting::count_min_size_families(n)),
            value(brute_count_separating(n, m, false)),
        );
        rec.equal(
            "min_size_count_vs_tau_v1",
            p.clone(),
            value(counting::count_min_size_families(n)),
            value(counter.tau_v1(n, m)),
        );
        if m > 0 {
            rec.equal(
                "min_size_is_least",
                p.clone(),
                value(brute_count_separating(n, m - 1, false)),
                Ok(BigUint::from(0u32)),
            );
        }
        match brute_minimal_size_profile(n) {
            Ok(profile) => {
                let support_ok = profile.keys().all(|&s| s >= m && s < n);
                rec.flag(
                    "minimal_size_profile_support",
                    p.clone(),
                    support_ok,
                    format!("profile {profile:?} outside [{m}, {}]", n - 1),
                );
                rec.equal(
                    "minimal_min_size_count",
                    p.clone(),
                    Ok(profile.get(&m).copied().unwrap_or(0)),
                    counting::count_min_size_families(n)
                        .map(|c| c.to_u64().unwrap_or(u64::MAX)),
                );
            }
            Err(e) => rec.flag("minimal_size_profile_support", p.clone(), false, e.to_string()),
        }
        cayley_checks(&mut rec, n);
    }

    for n in 2..=n_max.min(6) {
        phi_roundtrip_check(&mut rec, n);
    }

    // the smallest ground sets carrying k-families
    for k in 1..=k_max {
        min_ground_checks(&mut rec, k);
    }

    let total = rec.checks.len();
    let failed = rec.checks.iter().filter(|c| !c.pass).count();
    let mut report = ValidationReport {
        n_max,
        k_max,
        passed: failed == 0,
        total,
        failed,
        summary: String::new(),
        checks: rec.checks,
    };
    report.summary = report.render_summary();
    report
}

fn cayley_checks(rec: &mut Recorder, n: usize) {
    let p = format!("n={n}");
    let brute: BTreeSet<FamilyOfBipartitions> = match brute_minimal_max_families(n) {
        Ok(v) => v.into_iter().collect(),
        Err(e) => return rec.flag("cayley_brute_count", p, false, e.to_string()),
    };
    let expected = (n as u64).pow(n as u32 - 2);
    rec.equal("cayley_brute_count", p.clone(), Ok(brute.len() as u64), Ok(expected));
    match tree::enumerate_minimal_max_families(n) {
        Ok(iter) => {
            let via_trees: BTreeSet<_> = iter.collect();
            rec.flag(
                "cayley_set_equality",
                p.clone(),
                via_trees == brute,
                format!("{} via trees vs {} by brute force", via_trees.len(), brute.len()),
            );
        }
        Err(e) => rec.flag("cayley_set_equality", p.clone(), false, e.to_string()),
    }
    let images: BTreeSet<_> = brute.iter().map(tree::phi_forward).collect();
    let all_trees = images.iter().all(|g| g.is_spanning_tree());
    rec.flag(
        "phi_forward_injective_onto_trees",
        p,
        all_trees && images.len() == brute.len(),
        format!("{} distinct images, all trees: {all_trees}", images.len()),
    );
}

fn phi_roundtrip_check(rec: &mut Recorder, n: usize) {
    let p = format!("n={n}");
    let trees = match tree::spanning_trees(n) {
        Ok(t) => t,
        Err(e) => return rec.flag("phi_roundtrip", p, false, e.to_string()),
    };
    let mut count = 0u64;
    let mut bad = None;
    for t in trees {
        count += 1;
        let f = tree::phi_inverse(&t);
        let ok = f.len() == n - 1
            && f.is_minimal_separating()
            && &tree::phi_forward(&f) == t.graph()
            && tree::prufer_decode(&tree::prufer_encode(&t)) == t;
        if !ok && bad.is_none() {
            bad = Some(t.to_string());
        }
    }
    rec.flag(
        "phi_roundtrip",
        p,
        bad.is_none() && count == (n as u64).pow(n as u32 - 2),
        format!("first failing tree: {bad:?}, trees seen: {count}"),
    );
}

fn min_ground_checks(rec: &mut Recorder, k: usize) {
    for proper in [false, true] {
        let name = if proper { "min_ground_proper" } else { "min_ground_arbitrary" };
        let p = format!("k={k}");
        let size = if proper {
            counting::min_ground_size_proper(k)
        } else {
            counting::min_ground_size_arbitrary(k)
        };
        let Ok(size) = size else { continue };
        if size > MAX_ORACLE_N {
            continue;
        }
        // no separating k-family one element below the claimed minimum
        let below = if size == 1 {
            Ok(0)
        } else if size == 2 {
            // a 1-set has a single, trivial bipartition
            Ok(u64::from(!proper && k == 1))
        } else {
            brute_count_separating(size - 1, k, proper).map(|c| c.to_u64().unwrap_or(u64::MAX))
        };
        let exists_below = below.as_ref().map(|&c| c > 0).unwrap_or(true);
        rec.flag(
            name,
            format!("{p}, size={size}"),
            !exists_below,
            format!("{below:?} families on {} elements", size.saturating_sub(1)),
        );
        let count = if proper {
            counting::count_min_ground_proper(k)
        } else if k >= 2 {
            counting::count_min_ground_arbitrary(k)
        } else {
            continue;
        };
        let brute = if size >= 2 {
            brute_count_separating(size, k, proper)
        } else {
            Ok(CountValue::exact(BigUint::from(1u32)))
        };
        rec.equal(&format!("{name}_count"), p, value(count), value(brute));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_enumerate_all_k_subsets() {
        for size in 0..=10usize {
            for k in 0..=size + 1 {
                let subsets: Vec<u32> = combinations(size, k).collect();
                let want = (0u32..(1 << size)).filter(|s| s.count_ones() as usize == k).count();
                assert_eq!(subsets.len(), want, "size={size} k={k}");
                assert!(subsets.windows(2).all(|w| w[0] < w[1]));
                assert!(subsets.iter().all(|s| s.count_ones() as usize == k));
            }
        }
    }

    #[test]
    fn brute_counts_anchor_values() {
        assert_eq!(brute_count_separating(4, 2, false).unwrap(), 3);
        assert_eq!(brute_count_separating(4, 3, true).unwrap(), 29);
        for n in 2..=5 {
            assert_eq!(brute_count_separating(n, 0, false).unwrap(), 0);
            assert_eq!(brute_count_separating(n, 0, true).unwrap(), 0);
        }
        assert_eq!(brute_count_separating(3, 9, false).unwrap(), 0);
        assert!(matches!(
            brute_count_separating(6, 2, false),
            Err(Error::Capacity { bound: 5, .. })
        ));
        assert!(brute_count_separating(1, 0, false).is_err());
    }

    #[test]
    fn minimal_max_families_follow_cayley() {
        assert_eq!(brute_minimal_max_families(3).unwrap().len(), 3);
        assert_eq!(brute_minimal_max_families(4).unwrap().len(), 16);
        assert_eq!(brute_minimal_max_families(5).unwrap().len(), 125);
    }

    #[test]
    fn size_profiles() {
        assert_eq!(brute_minimal_size_profile(2).unwrap(), BTreeMap::from([(1, 1)]));
        assert_eq!(brute_minimal_size_profile(3).unwrap(), BTreeMap::from([(2, 3)]));
        assert_eq!(brute_minimal_size_profile(4).unwrap(), BTreeMap::from([(2, 3), (3, 16)]));
    }

    #[test]
    fn stirling_enumerations() {
        assert_eq!(brute_stirling2(3, 2).unwrap(), 3);
        assert_eq!(brute_stirling2(4, 2).unwrap(), 7);
        assert_eq!(brute_stirling2(0, 0).unwrap(), 1);
        assert_eq!(brute_stirling1(4, 2).unwrap(), 11);
        assert_eq!(brute_stirling1(0, 0).unwrap(), 1);
        assert_eq!(brute_stirling1(5, 3).unwrap(), 35);
        assert_eq!(brute_surjections(3, 2).unwrap(), 6);
        assert_eq!(brute_surjections(2, 2).unwrap(), 2);
        assert!(brute_stirling1(9, 2).is_err());
    }

    /// Uses only brute-force family counts:
    /// sum_i i! S(k,i) tau(n,i) equals the number of first-row-zero matrices
    /// with distinct rows.
    #[test]
    fn brute_counts_reproduce_falling_factorial() {
        for n in 2..=4usize {
            for k in 1..=6usize {
                let lhs: u64 = (1..=k)
                    .map(|i| {
                        let fams = brute_count_separating(n, i, false).unwrap().to_u64().unwrap();
                        brute_surjections(k, i).unwrap() * fams
                    })
                    .sum();
                let top = 1u64 << k;
                let falling: u64 = (1..n as u64).map(|t| top.saturating_sub(t)).product();
                assert_eq!(lhs, falling, "n={n} k={k}");
                if (n - 1) * k <= 18 {
                    assert_eq!(brute_distinct_row_matrices(n, k).unwrap(), falling);
                }
            }
        }
    }

    #[test]
    fn enumeration_visitor_matches_counts() {
        let mut seen = Vec::new();
        for_each_separating(4, Some(3), true, false, |f| seen.push(f)).unwrap();
        assert_eq!(seen.len(), 29);
        assert!(seen.iter().all(|f| f.is_separating() && f.members().iter().all(|p| p.is_proper())));
        let mut minimal = 0;
        for_each_separating(4, None, false, true, |f| {
            assert!(f.is_minimal_separating());
            minimal += 1;
        })
        .unwrap();
        assert_eq!(minimal, 19);
    }

    #[test]
    fn small_report_passes() {
        let report = cross_validate(2, 2);
        assert!(report.passed, "{:#?}", report.failures().collect::<Vec<_>>());
        assert!(report.total > 0);
        let report = cross_validate(4, 8);
        assert!(report.passed, "{:#?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn fault_injection_is_reported() {
        let mut first = counting::StirlingTable::new(counting::StirlingKind::FirstUnsigned, 10);
        first.set_entry(4, 2, BigUint::from(12u32)).unwrap();
        let counter = Counter::with_tables(
            first,
            counting::StirlingTable::new(counting::StirlingKind::Second, 10),
        )
        .unwrap();
        let report = cross_validate_with(&counter, 4, 8);
        assert!(!report.passed);
        let names: BTreeSet<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains("tau_v1_vs_brute"));
        assert!(names.contains("stirling1_identity"));
        assert!(names.contains("stirling1_vs_brute"));
        assert!(report.summary.starts_with("verify: FAIL"));
    }
}
