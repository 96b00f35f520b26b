//! The product identity for hook-indexed character sums.
//!
//! `Lambda_n^{k,l}` is the symmetric-group character whose value on a
//! class of cycle type `nu` with r parts is the product
//! `prod_i (k + (-1)^(nu_i - 1) * l)`. This module computes it three
//! independent ways — the closed product, a sum of line-diagram skew
//! characters over bicompositions, and a tableau-weighted sum of
//! irreducibles — together with the hook-sum character `Gamma_n`
//! (closed form and direct Murnaghan-Nakayama sum) and the Pieri-rule
//! decomposition of the two-component skew characters that links them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::characters::{Evaluator, LineSkewKey};
use crate::combinatorics::{binomial, multinomial, partitions_of, Partition};
use crate::tableaux::{s_kl, Alphabet};
use crate::{checked_add, checked_mul, Error, Int};

/// The three parameters of `Lambda_n^{k,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaParams {
    pub n: u32,
    pub k: u32,
    pub l: u32,
}

impl LambdaParams {
    pub fn new(n: u32, k: u32, l: u32) -> Self {
        LambdaParams { n, k, l }
    }
}

/// The hook partition `(a, 1^(n-a))`; requires `1 <= a <= n`.
pub fn hook_partition(n: u32, a: u32) -> Partition {
    debug_assert!(1 <= a && a <= n);
    let mut parts = Vec::with_capacity((n - a + 1) as usize);
    parts.push(a);
    parts.extend(core::iter::repeat_n(1, (n - a) as usize));
    Partition::new(parts).expect("hook parts are weakly decreasing")
}

/// Closed form of the hook-sum character `Gamma_n`: `2^(r-1)` on classes
/// with all parts odd (r the number of parts), 0 elsewhere. Undefined at
/// `n = 0`, where the exponent has no meaning.
pub fn gamma_closed(n: u32, nu: &Partition) -> Result<Int, Error> {
    if n == 0 {
        return Err(Error::GammaUndefinedForEmpty);
    }
    if nu.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: nu.n(),
        });
    }
    if nu.parts().iter().any(|&part| part % 2 == 0) {
        return Ok(0);
    }
    let mut value: Int = 1;
    for _ in 1..nu.len() {
        value = checked_mul(value, 2)?;
    }
    Ok(value)
}

/// `Gamma_n` summed directly: the characters of all hook shapes
/// `(a, 1^(n-a))`, `a = 1..n`, evaluated at `nu` and added up.
pub fn gamma_direct(ev: &mut Evaluator, n: u32, nu: &Partition) -> Result<Int, Error> {
    if n == 0 {
        return Err(Error::GammaUndefinedForEmpty);
    }
    if nu.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: nu.n(),
        });
    }
    let mut total: Int = 0;
    for a in 1..=n {
        total = checked_add(total, ev.chi(&hook_partition(n, a), nu)?)?;
    }
    Ok(total)
}

/// The closed product: over the parts of `nu`, `k + l` for an odd part
/// and `k - l` for an even one. Empty product 1 at `n = 0`.
pub fn lambda_product(p: LambdaParams, nu: &Partition) -> Result<Int, Error> {
    if nu.n() != p.n {
        return Err(Error::SizeMismatch {
            left: p.n,
            right: nu.n(),
        });
    }
    let k = p.k as Int;
    let l = p.l as Int;
    let mut value: Int = 1;
    for &part in nu.parts() {
        let factor = if part % 2 == 1 { k + l } else { k - l };
        value = checked_mul(value, factor)?;
    }
    Ok(value)
}

/// Number of compositions of fixed length `slots` whose nonzero parts are
/// exactly the multiset `parts`: choose which slots are nonzero, then
/// order the multiset.
fn placements(slots: u32, parts: &Partition) -> Result<Int, Error> {
    let len = parts.len() as u32;
    if len > slots {
        return Ok(0);
    }
    let mults: Vec<u32> = parts.multiplicities().iter().map(|&(_, m)| m).collect();
    checked_mul(binomial(slots, len)?, multinomial(&mults)?)
}

/// `Lambda_n^{k,l}(nu)` as the sum of the skew characters of all
/// bicompositions of `n` with `k` horizontal and `l` vertical slots.
///
/// The skew character depends only on the multisets of nonzero component
/// sizes, so the sum runs over those multisets, each weighted by the
/// number of bicompositions realizing it.
pub fn lambda_via_skew(ev: &mut Evaluator, p: LambdaParams, nu: &Partition) -> Result<Int, Error> {
    if nu.n() != p.n {
        return Err(Error::SizeMismatch {
            left: p.n,
            right: nu.n(),
        });
    }
    let mut total: Int = 0;
    for m in (0..=p.n).rev() {
        for h in partitions_of(m) {
            if h.len() as u32 > p.k {
                continue;
            }
            let h_ways = placements(p.k, &h)?;
            for v in partitions_of(p.n - m) {
                if v.len() as u32 > p.l {
                    continue;
                }
                let ways = checked_mul(h_ways, placements(p.l, &v)?)?;
                let key = LineSkewKey::new(
                    h.parts().iter().copied(),
                    v.parts().iter().copied(),
                );
                let value = ev.psi_line(&key, nu)?;
                total = checked_add(total, checked_mul(ways, value)?)?;
            }
        }
    }
    Ok(total)
}

/// `Lambda_n^{k,l}(nu)` as `sum over alpha of s_kl(alpha) * chi(alpha, nu)`,
/// with the tableau counts taken from brute-force enumeration.
pub fn lambda_via_tableaux(
    ev: &mut Evaluator,
    p: LambdaParams,
    nu: &Partition,
) -> Result<Int, Error> {
    if nu.n() != p.n {
        return Err(Error::SizeMismatch {
            left: p.n,
            right: nu.n(),
        });
    }
    let ab = Alphabet::new(p.k, p.l);
    let mut total: Int = 0;
    for alpha in partitions_of(p.n) {
        let count = s_kl(&alpha, &ab);
        if count == 0 {
            continue;
        }
        let chi = ev.chi(&alpha, nu)?;
        total = checked_add(total, checked_mul(count as Int, chi)?)?;
    }
    Ok(total)
}

/// Outcome of checking one two-component skew character against its
/// expected Pieri decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieriCase {
    /// Size of the horizontal component; the vertical one has `n - a` cells.
    pub a: u32,
    pub expected: BTreeMap<Partition, Int>,
    pub actual: BTreeMap<Partition, Int>,
    pub pass: bool,
}

/// Report of [`pieri_check`]: the per-`a` decompositions plus the derived
/// identity `Lambda_n^{1,1} = 2 * Gamma_n` checked on every class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieriReport {
    pub n: u32,
    pub cases: Vec<PieriCase>,
    /// Classes where `lambda_via_skew` at `k = l = 1` differed from twice
    /// the direct hook sum; empty on success.
    pub hook_sum_mismatches: Vec<Partition>,
    pub pass: bool,
}

/// Decomposes `psi_(a | n-a)` for every `a = 0..n` and compares with the
/// Pieri-rule prediction: the column `(1^n)` at `a = 0`, the row `(n)` at
/// `a = n`, and the two hooks `(a, 1^(n-a))`, `(a+1, 1^(n-a-1))` in
/// between. Also checks `Lambda_n^{1,1} = 2 * Gamma_n` valuewise.
/// Failures are recorded in the report, not raised as errors.
pub fn pieri_check(ev: &mut Evaluator, n: u32) -> Result<PieriReport, Error> {
    let mut cases = Vec::with_capacity((n + 1) as usize);
    for a in 0..=n {
        let key = LineSkewKey::new([a], [n - a]);
        let table = ev.psi_table(&key, n)?;
        let actual = ev.decompose(&table)?;
        let mut expected = BTreeMap::new();
        if a == 0 {
            expected.insert(hook_partition(n, 1), 1);
        } else if a == n {
            expected.insert(hook_partition(n, n), 1);
        } else {
            expected.insert(hook_partition(n, a), 1);
            expected.insert(hook_partition(n, a + 1), 1);
        }
        let pass = actual == expected;
        cases.push(PieriCase {
            a,
            expected,
            actual,
            pass,
        });
    }

    let params = LambdaParams::new(n, 1, 1);
    let mut hook_sum_mismatches = Vec::new();
    for nu in partitions_of(n) {
        let lambda = lambda_via_skew(ev, params, &nu)?;
        let twice_gamma = checked_mul(2, gamma_direct(ev, n, &nu)?)?;
        if lambda != twice_gamma {
            hook_sum_mismatches.push(nu);
        }
    }

    let pass = cases.iter().all(|c| c.pass) && hook_sum_mismatches.is_empty();
    Ok(PieriReport {
        n,
        cases,
        hook_sum_mismatches,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bicompositions_of;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_partitions() {
        assert_eq!(hook_partition(5, 3), p(&[3, 1, 1]));
        assert_eq!(hook_partition(4, 1), p(&[1, 1, 1, 1]));
        assert_eq!(hook_partition(4, 4), p(&[4]));
    }

    #[test]
    fn gamma_closed_examples() {
        assert_eq!(gamma_closed(5, &p(&[3, 1, 1])).unwrap(), 4);
        assert_eq!(gamma_closed(4, &p(&[2, 2])).unwrap(), 0);
        assert_eq!(gamma_closed(3, &p(&[1, 1, 1])).unwrap(), 4);
        assert_eq!(gamma_closed(1, &p(&[1])).unwrap(), 1);
    }

    #[test]
    fn gamma_errors() {
        assert_eq!(
            gamma_closed(0, &Partition::empty()),
            Err(Error::GammaUndefinedForEmpty)
        );
        assert_eq!(
            gamma_closed(3, &p(&[2])),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
        let mut ev = Evaluator::new();
        assert_eq!(
            gamma_direct(&mut ev, 0, &Partition::empty()),
            Err(Error::GammaUndefinedForEmpty)
        );
    }

    #[test]
    fn gamma_direct_examples() {
        let mut ev = Evaluator::new();
        assert_eq!(gamma_direct(&mut ev, 2, &p(&[1, 1])).unwrap(), 2);
        assert_eq!(gamma_direct(&mut ev, 2, &p(&[2])).unwrap(), 0);
        assert_eq!(gamma_direct(&mut ev, 5, &p(&[3, 1, 1])).unwrap(), 4);
    }

    #[test]
    fn lambda_product_examples() {
        assert_eq!(
            lambda_product(LambdaParams::new(5, 1, 1), &p(&[3, 1, 1])).unwrap(),
            8
        );
        assert_eq!(
            lambda_product(LambdaParams::new(4, 2, 1), &p(&[2, 2])).unwrap(),
            1
        );
        assert_eq!(
            lambda_product(LambdaParams::new(3, 0, 0), &p(&[2, 1])).unwrap(),
            0
        );
        assert_eq!(
            lambda_product(LambdaParams::new(0, 2, 2), &Partition::empty()).unwrap(),
            1
        );
    }

    #[test]
    fn lambda_via_skew_examples() {
        let mut ev = Evaluator::new();
        for n in 0..=6 {
            for nu in partitions_of(n) {
                assert_eq!(
                    lambda_via_skew(&mut ev, LambdaParams::new(n, 1, 0), &nu).unwrap(),
                    1
                );
            }
        }
        assert_eq!(
            lambda_via_skew(&mut ev, LambdaParams::new(2, 1, 1), &p(&[2])).unwrap(),
            0
        );
        assert_eq!(
            lambda_via_skew(&mut ev, LambdaParams::new(2, 1, 1), &p(&[1, 1])).unwrap(),
            4
        );
    }

    #[test]
    fn lambda_via_tableaux_examples() {
        let mut ev = Evaluator::new();
        for n in 0..=6 {
            for nu in partitions_of(n) {
                assert_eq!(
                    lambda_via_tableaux(&mut ev, LambdaParams::new(n, 1, 0), &nu).unwrap(),
                    1
                );
                let sign: Int = if (n - nu.len() as u32).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(
                    lambda_via_tableaux(&mut ev, LambdaParams::new(n, 0, 1), &nu).unwrap(),
                    sign
                );
            }
        }
        assert_eq!(
            lambda_via_tableaux(&mut ev, LambdaParams::new(2, 1, 1), &p(&[1, 1])).unwrap(),
            4
        );
    }

    #[test]
    fn placements_cover_all_bicompositions() {
        // summing the key multiplicities recovers the bicomposition count
        for n in 0..=6u32 {
            for k in 0..=3usize {
                for l in 0..=3usize {
                    let mut total: Int = 0;
                    for m in 0..=n {
                        for h in partitions_of(m) {
                            for v in partitions_of(n - m) {
                                let ways = checked_mul(
                                    placements(k as u32, &h).unwrap(),
                                    placements(l as u32, &v).unwrap(),
                                )
                                .unwrap();
                                total += ways;
                            }
                        }
                    }
                    assert_eq!(total, bicompositions_of(n, k, l).len() as Int);
                }
            }
        }
    }

    #[test]
    fn pieri_cases_at_small_n() {
        let mut ev = Evaluator::new();
        let report = pieri_check(&mut ev, 3).unwrap();
        assert!(report.pass);
        let middle = &report.cases[1];
        assert_eq!(middle.a, 1);
        assert_eq!(
            middle.actual,
            [(p(&[1, 1, 1]), 1), (p(&[2, 1]), 1)].into_iter().collect()
        );
        let top = &report.cases[3];
        assert_eq!(top.actual, [(p(&[3]), 1)].into_iter().collect());

        let report = pieri_check(&mut ev, 2).unwrap();
        assert!(report.pass);
        assert_eq!(report.cases[0].actual, [(p(&[1, 1]), 1)].into_iter().collect());
    }

    #[test]
    fn three_routes_agree_spot_check() {
        let mut ev = Evaluator::new();
        for n in 0..=5 {
            for k in 0..=2 {
                for l in 0..=2 {
                    let params = LambdaParams::new(n, k, l);
                    for nu in partitions_of(n) {
                        let product = lambda_product(params, &nu).unwrap();
                        assert_eq!(lambda_via_skew(&mut ev, params, &nu).unwrap(), product);
                        assert_eq!(lambda_via_tableaux(&mut ev, params, &nu).unwrap(), product);
                    }
                }
            }
        }
    }
}
