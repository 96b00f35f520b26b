//! Batch verification suites over the exact character engine, with JSON
//! reports.
//!
//! Each suite sweeps an identity across a range of group sizes and
//! records every violated instance; the report carries an overall
//! pass/fail status and the list of counterexamples (empty on pass).

use std::collections::BTreeMap;

use serde::Serialize;

use snchar_core::characters::{Evaluator, LineSkewKey};
use snchar_core::combinatorics::{
    bicompositions_of, centralizer_order, factorial, partitions_of, Partition,
};
use snchar_core::regev::{
    gamma_closed, gamma_direct, lambda_product, lambda_via_skew, lambda_via_tableaux, pieri_check,
    LambdaParams,
};
use snchar_core::tableaux::{count_by_weight, Alphabet};
use snchar_core::{Error, Int};

/// Outcome of one verification suite.
///
/// `k` and `l` are `null` when the suite spans several alphabet
/// parameters (the per-instance values then appear in the counterexample
/// strings); `n` is the largest group size swept.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub n: u32,
    pub k: Option<u32>,
    pub l: Option<u32>,
    pub status: String,
    pub counterexamples: Vec<String>,
}

impl VerifyReport {
    fn new(
        identity: &str,
        n: u32,
        k: Option<u32>,
        l: Option<u32>,
        counterexamples: Vec<String>,
    ) -> Self {
        let status = if counterexamples.is_empty() {
            "pass"
        } else {
            "fail"
        };
        VerifyReport {
            identity: identity.to_string(),
            n,
            k,
            l,
            status: status.to_string(),
            counterexamples,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// The alphabet parameters the lambda suite sweeps.
pub fn lambda_parameter_pairs() -> Vec<(u32, u32)> {
    let mut pairs: Vec<(u32, u32)> = (0..=2)
        .flat_map(|k| (0..=2).map(move |l| (k, l)))
        .collect();
    pairs.push((3, 1));
    pairs
}

/// Checks `gamma_direct = gamma_closed` on every class of every `n` in
/// `1..=max_n`.
pub fn verify_gamma(max_n: u32) -> Result<VerifyReport, Error> {
    let mut ev = Evaluator::new();
    let mut counterexamples = Vec::new();
    for n in 1..=max_n {
        for nu in partitions_of(n) {
            let closed = gamma_closed(n, &nu)?;
            let direct = gamma_direct(&mut ev, n, &nu)?;
            if closed != direct {
                counterexamples.push(format!(
                    "n={} class={}: closed={} direct={}",
                    n, nu, closed, direct
                ));
            }
        }
    }
    Ok(VerifyReport::new(
        "gamma-closed-form",
        max_n,
        None,
        None,
        counterexamples,
    ))
}

/// Checks that the product, skew-sum, and tableau routes to
/// `Lambda_n^{k,l}` agree on every class, for `n <= max_n` and the
/// parameter pairs of [`lambda_parameter_pairs`].
pub fn verify_lambda(max_n: u32) -> Result<VerifyReport, Error> {
    let mut ev = Evaluator::new();
    let mut counterexamples = Vec::new();
    for n in 0..=max_n {
        let classes = partitions_of(n);
        for &(k, l) in &lambda_parameter_pairs() {
            let params = LambdaParams::new(n, k, l);
            for nu in &classes {
                let product = lambda_product(params, nu)?;
                let skew = lambda_via_skew(&mut ev, params, nu)?;
                let tableaux = lambda_via_tableaux(&mut ev, params, nu)?;
                if product != skew || product != tableaux {
                    counterexamples.push(format!(
                        "n={} k={} l={} class={}: product={} skew={} tableaux={}",
                        n, k, l, nu, product, skew, tableaux
                    ));
                }
            }
        }
    }
    Ok(VerifyReport::new(
        "lambda-three-routes",
        max_n,
        None,
        None,
        counterexamples,
    ))
}

fn format_decomposition(decomp: &BTreeMap<Partition, Int>) -> String {
    if decomp.is_empty() {
        return "0".to_string();
    }
    decomp
        .iter()
        .rev()
        .map(|(alpha, mult)| format!("{}:{}", alpha, mult))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks the Pieri decomposition of every two-component skew character
/// `psi_(a | n-a)` and the bridge `Lambda_n^{1,1} = 2 Gamma_n`, for `n`
/// in `1..=max_n`.
pub fn verify_pieri(max_n: u32) -> Result<VerifyReport, Error> {
    let mut ev = Evaluator::new();
    let mut counterexamples = Vec::new();
    for n in 1..=max_n {
        let report = pieri_check(&mut ev, n)?;
        for case in &report.cases {
            if !case.pass {
                counterexamples.push(format!(
                    "n={} a={}: expected {} got {}",
                    n,
                    case.a,
                    format_decomposition(&case.expected),
                    format_decomposition(&case.actual)
                ));
            }
        }
        for nu in &report.hook_sum_mismatches {
            counterexamples.push(format!("n={} class={}: lambda(1,1) != 2*gamma", n, nu));
        }
    }
    Ok(VerifyReport::new(
        "pieri-decomposition",
        max_n,
        Some(1),
        Some(1),
        counterexamples,
    ))
}

/// Checks the row and column orthogonality relations of the full
/// character table for every `n` in `1..=max_n`.
pub fn verify_orthogonality(max_n: u32) -> Result<VerifyReport, Error> {
    let mut ev = Evaluator::new();
    let mut counterexamples = Vec::new();
    for n in 1..=max_n {
        let shapes = partitions_of(n);
        let classes = partitions_of(n);
        let nfact = factorial(n)?;
        let class_sizes: Vec<Int> = classes
            .iter()
            .map(|nu| Ok(nfact / centralizer_order(nu)?))
            .collect::<Result<_, Error>>()?;
        // chi[s][c] with both axes in descending lexicographic order
        let table: Vec<Vec<Int>> = shapes
            .iter()
            .map(|alpha| {
                classes
                    .iter()
                    .map(|nu| ev.chi(alpha, nu))
                    .collect::<Result<_, Error>>()
            })
            .collect::<Result<_, Error>>()?;

        for (i, alpha) in shapes.iter().enumerate() {
            for (j, beta) in shapes.iter().enumerate().skip(i) {
                let mut sum: Int = 0;
                for c in 0..classes.len() {
                    sum += table[i][c] * table[j][c] * class_sizes[c];
                }
                let want = if i == j { nfact } else { 0 };
                if sum != want {
                    counterexamples.push(format!(
                        "n={} rows {} and {}: sum={} want={}",
                        n, alpha, beta, sum, want
                    ));
                }
            }
        }
        for (c, nu) in classes.iter().enumerate() {
            for (d, rho) in classes.iter().enumerate().skip(c) {
                let mut sum: Int = 0;
                for row in &table {
                    sum += row[c] * row[d];
                }
                let want = if c == d { centralizer_order(nu)? } else { 0 };
                if sum != want {
                    counterexamples.push(format!(
                        "n={} columns {} and {}: sum={} want={}",
                        n, nu, rho, sum, want
                    ));
                }
            }
        }
    }
    Ok(VerifyReport::new(
        "character-orthogonality",
        max_n,
        None,
        None,
        counterexamples,
    ))
}

/// Checks that the multiplicity of each irreducible `chi_alpha` in the
/// skew character of a bicomposition equals the number of semistandard
/// (k,l)-tableaux of shape `alpha` with that weight, for every
/// bicomposition with `n <= max_n` and `k, l <= 2`.
pub fn verify_berele_regev(max_n: u32) -> Result<VerifyReport, Error> {
    let mut ev = Evaluator::new();
    let mut counterexamples = Vec::new();
    for n in 0..=max_n {
        let shapes = partitions_of(n);
        for k in 0..=2usize {
            for l in 0..=2usize {
                let ab = Alphabet::new(k as u32, l as u32);
                let weight_counts: Vec<_> = shapes
                    .iter()
                    .map(|alpha| count_by_weight(alpha, &ab))
                    .collect();
                for b in bicompositions_of(n, k, l) {
                    let key = LineSkewKey::from_bicomposition(&b);
                    let table = ev.psi_table(&key, n)?;
                    let decomp = ev.decompose(&table)?;
                    for (alpha, counts) in shapes.iter().zip(&weight_counts) {
                        let want = counts.get(&b).copied().unwrap_or(0) as Int;
                        let got = decomp.get(alpha).copied().unwrap_or(0);
                        if got != want {
                            counterexamples.push(format!(
                                "n={} k={} l={} bicomp={} shape={}: multiplicity={} tableaux={}",
                                n, k, l, b, alpha, got, want
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(VerifyReport::new(
        "berele-regev-multiplicities",
        max_n,
        Some(2),
        Some(2),
        counterexamples,
    ))
}
