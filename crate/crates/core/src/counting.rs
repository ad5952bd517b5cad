//! Exact evaluation of the separating-family counts.
//!
//! `tau(n, k)` counts separating families of `k` arbitrary bipartitions of an
//! `n`-set and `sigma(n, k)` those of `k` proper bipartitions. Each has two
//! closed forms: the `v1` forms are alternating sums over `k` with a final
//! division by `k!`; the `v2` forms are alternating sums over `n` with no
//! division. Alternating sums run in signed big integers and the division is
//! checked to be exact.
//!
//! Domain policy: `n < 2` is an error. Arguments where no family can exist
//! (`k = 0`, or more members than there are bipartitions) yield zero with
//! [`CountValue::forced`] set. Arguments inside `1..=2^(n-1)` but outside the
//! range where a closed form is valid are errors.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// An exact nonnegative count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CountValue {
    #[serde(serialize_with = "as_decimal")]
    pub value: BigUint,
    /// Zero because the arguments admit no family at all, not because a
    /// formula was evaluated.
    pub forced: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

impl CountValue {
    pub fn exact(value: BigUint) -> Self {
        Self {
            value,
            forced: false,
        }
    }

    pub fn forced_zero() -> Self {
        Self {
            value: BigUint::zero(),
            forced: true,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq<u64> for CountValue {
    fn eq(&self, other: &u64) -> bool {
        self.value == BigUint::from(*other)
    }
}

/// Result of evaluating both sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigUint,
}

impl IdentityCheck {
    fn new(lhs: BigUint, rhs: BigUint) -> Self {
        Self {
            holds: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StirlingKind {
    /// Set partitions of a `k`-set into `i` nonempty blocks.
    Second,
    /// Permutations of `k` elements with exactly `i` cycles.
    FirstUnsigned,
}

/// Triangular table of Stirling numbers for rows `0..=max_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, max_k: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_k + 1);
        rows.push(vec![BigUint::one()]);
        for k in 1..=max_k {
            let prev = &rows[k - 1];
            let mut row = vec![BigUint::zero(); k + 1];
            for i in 1..=k {
                let stay = prev.get(i).cloned().unwrap_or_default();
                let weight = match kind {
                    StirlingKind::Second => i,
                    StirlingKind::FirstUnsigned => k - 1,
                };
                row[i] = stay * BigUint::from(weight) + &prev[i - 1];
            }
            rows.push(row);
        }
        Self { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn max_k(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(k, i)`; zero outside the triangle.
    pub fn get(&self, k: usize, i: usize) -> Result<BigUint> {
        if i > k {
            return Ok(BigUint::zero());
        }
        let row = self.rows.get(k).ok_or(Error::TableBound {
            needed: k,
            bound: self.max_k(),
        })?;
        Ok(row[i].clone())
    }

    /// Overwrite one entry. Only meant for fault-injection in verification
    /// runs; later rows are not recomputed.
    pub fn set_entry(&mut self, k: usize, i: usize, value: BigUint) -> Result<()> {
        let bound = self.max_k();
        let row = self
            .rows
            .get_mut(k)
            .ok_or(Error::TableBound { needed: k, bound })?;
        if i > k {
            return Err(Error::Precondition(format!(
                "({k}, {i}) lies outside the triangle"
            )));
        }
        row[i] = value;
        Ok(())
    }
}

/// Evaluator holding one table of each Stirling kind.
#[derive(Clone, Debug)]
pub struct Counter {
    first: StirlingTable,
    second: StirlingTable,
}

impl Counter {
    /// Tables covering rows `0..=bound`.
    pub fn new(bound: usize) -> Self {
        Self {
            first: StirlingTable::new(StirlingKind::FirstUnsigned, bound),
            second: StirlingTable::new(StirlingKind::Second, bound),
        }
    }

    /// Tables large enough for every evaluation on the grid `n <= n_max`,
    /// `k <= k_max`, including the transposed arguments.
    pub fn for_grid(n_max: usize, k_max: usize) -> Self {
        Self::new(n_max.max(k_max) + 2)
    }

    pub fn with_tables(first: StirlingTable, second: StirlingTable) -> Result<Self> {
        if first.kind != StirlingKind::FirstUnsigned || second.kind != StirlingKind::Second {
            return Err(Error::Precondition("tables passed in the wrong order".into()));
        }
        Ok(Self { first, second })
    }

    pub fn bound(&self) -> usize {
        self.first.max_k().min(self.second.max_k())
    }

    pub fn first_table(&self) -> &StirlingTable {
        &self.first
    }

    pub fn second_table(&self) -> &StirlingTable {
        &self.second
    }

    pub fn stirling1_unsigned(&self, k: usize, i: usize) -> Result<BigUint> {
        self.first.get(k, i)
    }

    pub fn stirling2(&self, k: usize, i: usize) -> Result<BigUint> {
        self.second.get(k, i)
    }

    /// Length-`k` sequences over `i` symbols using every symbol: `i! S(k, i)`.
    pub fn surjective_sequences(&self, k: usize, i: usize) -> Result<BigUint> {
        Ok(factorial(i) * self.stirling2(k, i)?)
    }

    pub fn tau_v1(&self, n: usize, k: usize) -> Result<CountValue> {
        match self.tau_v1_fraction(n, k)? {
            None => Ok(CountValue::forced_zero()),
            Some((num, den)) => divide_exact("tau_v1", format!("n={n}, k={k}"), num, den),
        }
    }

    /// Numerator `(n-1)! * sum_i (-1)^(k-i) c(k,i) C(2^i - 1, n - 1)` and
    /// divisor `k!` of the first form, or `None` for a forced zero.
    pub fn tau_v1_fraction(&self, n: usize, k: usize) -> Result<Option<(BigInt, BigUint)>> {
        require_n(n, "tau_v1", || format!("n={n}, k={k}"))?;
        if k == 0 || exceeds_pool(n, k, false) {
            return Ok(None);
        }
        let mut sum = BigInt::zero();
        for i in 1..=k {
            let binom = binomial(&(pow2(i) - 1u32), n - 1);
            if binom.is_zero() {
                continue;
            }
            let term = BigInt::from(self.stirling1_unsigned(k, i)? * binom);
            add_signed(&mut sum, term, k - i);
        }
        Ok(Some((sum * signed(factorial(n - 1)), factorial(k))))
    }

    /// Valid for `2 <= k <= 2^(n-1)`.
    pub fn tau_v2(&self, n: usize, k: usize) -> Result<CountValue> {
        let args = || format!("n={n}, k={k}");
        require_n(n, "tau_v2", args)?;
        if k == 0 || exceeds_pool(n, k, false) {
            return Ok(CountValue::forced_zero());
        }
        if k == 1 {
            return Err(Error::Domain {
                quantity: "tau_v2",
                args: args(),
                range: "2 <= n, 2 <= k <= 2^(n-1)",
            });
        }
        let mut sum = BigInt::zero();
        for i in 1..n {
            let term = BigInt::from(self.stirling1_unsigned(n, i + 1)? * binomial(&pow2(i), k));
            add_signed(&mut sum, term, n - 1 - i);
        }
        nonnegative("tau_v2", args(), sum)
    }

    pub fn sigma_v1(&self, n: usize, k: usize) -> Result<CountValue> {
        match self.sigma_v1_fraction(n, k)? {
            None => Ok(CountValue::forced_zero()),
            Some((num, den)) => divide_exact("sigma_v1", format!("n={n}, k={k}"), num, den),
        }
    }

    /// Numerator `(n-1)! * sum_i (-1)^(k-i) c(k+1,i+1) C(2^i - 1, n - 1)` and
    /// divisor `k!`, or `None` for a forced zero.
    pub fn sigma_v1_fraction(&self, n: usize, k: usize) -> Result<Option<(BigInt, BigUint)>> {
        require_n(n, "sigma_v1", || format!("n={n}, k={k}"))?;
        if k == 0 || exceeds_pool(n, k, true) {
            return Ok(None);
        }
        let mut sum = BigInt::zero();
        for i in 1..=k {
            let binom = binomial(&(pow2(i) - 1u32), n - 1);
            if binom.is_zero() {
                continue;
            }
            let term = BigInt::from(self.stirling1_unsigned(k + 1, i + 1)? * binom);
            add_signed(&mut sum, term, k - i);
        }
        Ok(Some((sum * signed(factorial(n - 1)), factorial(k))))
    }

    pub fn sigma_v2(&self, n: usize, k: usize) -> Result<CountValue> {
        let args = || format!("n={n}, k={k}");
        require_n(n, "sigma_v2", args)?;
        if k == 0 || exceeds_pool(n, k, true) {
            return Ok(CountValue::forced_zero());
        }
        let mut sum = BigInt::zero();
        for i in 1..n {
            let term = BigInt::from(
                self.stirling1_unsigned(n, i + 1)? * binomial(&(pow2(i) - 1u32), k),
            );
            add_signed(&mut sum, term, n - 1 - i);
        }
        nonnegative("sigma_v2", args(), sum)
    }

    /// `sum_i i! S(k,i) tau(n,i)` against `(2^k - 1)(2^k - 2)...(2^k - n + 1)`.
    pub fn sum_identity(&self, n: usize, k: usize) -> Result<IdentityCheck> {
        require_grid(n, k, 1, "sum_identity", "2 <= n, 1 <= k <= 2^(n-1)")?;
        let mut lhs = BigUint::zero();
        for i in 1..=k {
            let tau = self.tau_v1(n, i)?;
            if !tau.is_zero() {
                lhs += self.surjective_sequences(k, i)? * tau.value;
            }
        }
        let top = pow2(k);
        let mut rhs = BigUint::one();
        for t in 1..n {
            let t = BigUint::from(t);
            if t >= top {
                // the factor 2^k - 2^k vanishes first
                rhs = BigUint::zero();
                break;
            }
            rhs *= &top - t;
        }
        Ok(IdentityCheck::new(lhs, rhs))
    }

    /// `sigma(n,k) + sigma(n,k-1)` against `tau(n,k)`.
    pub fn sigma_tau(&self, n: usize, k: usize) -> Result<IdentityCheck> {
        require_grid(n, k, 2, "sigma_tau", "2 <= n, 2 <= k <= 2^(n-1)")?;
        let lhs = self.sigma_v1(n, k)?.value + self.sigma_v1(n, k - 1)?.value;
        Ok(IdentityCheck::new(lhs, self.tau_v1(n, k)?.value))
    }

    /// `sigma(n,k-1) (k-1)!` against `sigma(k,n-1) (n-1)!`.
    pub fn transpose_identity(&self, n: usize, k: usize) -> Result<IdentityCheck> {
        require_grid(n, k, 2, "transpose_identity", "2 <= n, 2 <= k <= 2^(n-1)")?;
        let lhs = self.sigma_v1(n, k - 1)?.value * factorial(k - 1);
        let rhs = self.sigma_v1(k, n - 1)?.value * factorial(n - 1);
        Ok(IdentityCheck::new(lhs, rhs))
    }

    /// `c(k+1, i+1)` against `sum_{j=i..k} (k!/j!) c(j, i)`.
    pub fn stirling1_identity(&self, k: usize, i: usize) -> Result<IdentityCheck> {
        let lhs = self.stirling1_unsigned(k + 1, i + 1)?;
        let mut rhs = BigUint::zero();
        // k!/j! as a running product from j = k downwards
        let mut ratio = BigUint::one();
        for j in (i..=k).rev() {
            rhs += &ratio * self.stirling1_unsigned(j, i)?;
            ratio *= BigUint::from(j);
        }
        Ok(IdentityCheck::new(lhs, rhs))
    }
}

fn require_n(n: usize, quantity: &'static str, args: impl Fn() -> String) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain {
            quantity,
            args: args(),
            range: "n >= 2",
        });
    }
    Ok(())
}

fn require_grid(
    n: usize,
    k: usize,
    k_min: usize,
    quantity: &'static str,
    range: &'static str,
) -> Result<()> {
    if n < 2 || k < k_min || exceeds_pool(n, k, false) {
        return Err(Error::Domain {
            quantity,
            args: format!("n={n}, k={k}"),
            range,
        });
    }
    Ok(())
}

/// More members requested than the `2^(n-1)` (or `2^(n-1) - 1` proper)
/// bipartitions available.
fn exceeds_pool(n: usize, k: usize, proper: bool) -> bool {
    if n > usize::BITS as usize {
        return false;
    }
    let pool = 1usize << (n - 1);
    if proper {
        k >= pool
    } else {
        k > pool
    }
}

fn add_signed(sum: &mut BigInt, term: BigInt, exponent: usize) {
    if exponent.is_multiple_of(2) {
        *sum += term;
    } else {
        *sum -= term;
    }
}

fn signed(v: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v)
}

fn nonnegative(quantity: &'static str, args: String, value: BigInt) -> Result<CountValue> {
    if value.is_negative() {
        return Err(Error::NegativeCount {
            quantity,
            args,
            value: value.to_string(),
        });
    }
    Ok(CountValue::exact(value.magnitude().clone()))
}

fn divide_exact(
    quantity: &'static str,
    args: String,
    numerator: BigInt,
    divisor: BigUint,
) -> Result<CountValue> {
    let (q, r) = numerator.div_rem(&signed(divisor.clone()));
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            quantity,
            args,
            divisor: divisor.to_string(),
            remainder: r.to_string(),
        });
    }
    nonnegative(quantity, args, q)
}

pub fn pow2(i: usize) -> BigUint {
    BigUint::one() << i
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, t| acc * BigUint::from(t))
}

/// `C(a, b)` by the multiplicative formula, dividing exactly at each step.
pub fn binomial(a: &BigUint, b: usize) -> BigUint {
    let b_big = BigUint::from(b);
    if &b_big > a {
        return BigUint::zero();
    }
    // use the shorter side when a is small
    let b = match (a - &b_big).to_usize() {
        Some(rest) if rest < b => rest,
        _ => b,
    };
    let mut acc = BigUint::one();
    for t in 0..b {
        acc *= a - BigUint::from(t);
        acc /= BigUint::from(t + 1);
    }
    acc
}

/// `ceil(log2 n)` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1, "ceil_log2 needs n >= 1");
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

fn small_counter(n: usize, k: usize) -> Counter {
    // forced zeros never touch the tables
    let in_range = n >= 2 && !exceeds_pool(n, k, false);
    Counter::new(if in_range { n.max(k) + 1 } else { 0 })
}

pub fn stirling2(k: usize, i: usize) -> BigUint {
    if i > k {
        return BigUint::zero();
    }
    Counter::new(k).stirling2(k, i).expect("table covers k")
}

pub fn stirling1_unsigned(k: usize, i: usize) -> BigUint {
    if i > k {
        return BigUint::zero();
    }
    Counter::new(k).stirling1_unsigned(k, i).expect("table covers k")
}

pub fn surjective_sequences(k: usize, i: usize) -> BigUint {
    factorial(i) * stirling2(k, i)
}

pub fn tau_v1(n: usize, k: usize) -> Result<CountValue> {
    small_counter(n, k).tau_v1(n, k)
}

pub fn tau_v2(n: usize, k: usize) -> Result<CountValue> {
    small_counter(n, k).tau_v2(n, k)
}

pub fn sigma_v1(n: usize, k: usize) -> Result<CountValue> {
    small_counter(n, k).sigma_v1(n, k)
}

pub fn sigma_v2(n: usize, k: usize) -> Result<CountValue> {
    small_counter(n, k).sigma_v2(n, k)
}

pub fn check_sum_identity(n: usize, k: usize) -> Result<IdentityCheck> {
    small_counter(n, k).sum_identity(n, k)
}

pub fn check_sigma_tau(n: usize, k: usize) -> Result<IdentityCheck> {
    small_counter(n, k).sigma_tau(n, k)
}

pub fn check_transpose_identity(n: usize, k: usize) -> Result<IdentityCheck> {
    small_counter(n, k).transpose_identity(n, k)
}

pub fn check_stirling1_identity(k: usize, i: usize) -> Result<IdentityCheck> {
    Counter::new(k + 1).stirling1_identity(k, i)
}

/// Smallest size of a separating family on an `n`-set.
pub fn min_separating_size(n: usize) -> usize {
    ceil_log2(n.max(1))
}

/// Number of separating families of minimum size on an `n`-set:
/// `(n-1)!/m! * C(2^m - 1, n - 1)` with `m = ceil(log2 n)`.
pub fn count_min_size_families(n: usize) -> Result<CountValue> {
    require_n(n, "count_min_size_families", || format!("n={n}"))?;
    let m = ceil_log2(n);
    let numerator = signed(factorial(n - 1) * binomial(&(pow2(m) - 1u32), n - 1));
    divide_exact("count_min_size_families", format!("n={n}"), numerator, factorial(m))
}

/// Smallest ground set carrying a separating family of `k` arbitrary bipartitions.
pub fn min_ground_size_arbitrary(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Domain {
            quantity: "min_ground_size_arbitrary",
            args: "k=0".into(),
            range: "k >= 1",
        });
    }
    Ok(ceil_log2(k) + 1)
}

/// `C(2^ceil(log2 k), k)` separating `k`-families on the smallest ground set.
pub fn count_min_ground_arbitrary(k: usize) -> Result<CountValue> {
    if k < 2 {
        return Err(Error::Domain {
            quantity: "count_min_ground_arbitrary",
            args: format!("k={k}"),
            range: "k >= 2",
        });
    }
    Ok(CountValue::exact(binomial(&pow2(ceil_log2(k)), k)))
}

pub fn min_ground_size_proper(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Domain {
            quantity: "min_ground_size_proper",
            args: "k=0".into(),
            range: "k >= 1",
        });
    }
    Ok(ceil_log2(k + 1) + 1)
}

/// `C(2^ceil(log2(k+1)) - 1, k)`.
pub fn count_min_ground_proper(k: usize) -> Result<CountValue> {
    if k == 0 {
        return Err(Error::Domain {
            quantity: "count_min_ground_proper",
            args: "k=0".into(),
            range: "k >= 1",
        });
    }
    Ok(CountValue::exact(binomial(
        &(pow2(ceil_log2(k + 1)) - 1u32),
        k,
    )))
}
