//! Cross-module invariants: each fast route is checked against an
//! independent slow formulation on an exhaustive small range, plus
//! randomized structural properties.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use proptest::prelude::*;

use snchar_core::characters::{induced_value, Evaluator, LineSkewKey};
use snchar_core::combinatorics::{
    bicompositions_of, centralizer_order, factorial, partitions_of, Bicomposition, Composition,
    Partition,
};
use snchar_core::diagrams::{
    border_strips, build_skew_for_bicomposition, classify_line, connected_components,
    young_diagram, CellSet, LineKind,
};
use snchar_core::tableaux::{count_by_weight, for_each_tableau, in_kl_hook, s_kl, Alphabet};
use snchar_core::Int;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

// ---- canonical skew layout -------------------------------------------------

/// The built diagram must realize exactly the nonzero components of the
/// bicomposition: one horizontal line per nonzero lambda part, one
/// vertical line per nonzero mu part, sizes matching as multisets.
#[test]
fn skew_layout_components_match_bicomposition() {
    for n in 0..=7u32 {
        for b in bicompositions_of(n, 2, 2) {
            check_layout(&b);
        }
        // a couple of wider slot counts to exercise interleaved zeros
        for b in bicompositions_of(n, 3, 3) {
            check_layout(&b);
        }
    }
}

fn check_layout(b: &Bicomposition) {
    let shape = build_skew_for_bicomposition(b);
    assert_eq!(shape.size(), b.n(), "bicomp {}", b);
    let comps = connected_components(&shape.cells());
    let mut horizontal: Vec<u32> = Vec::new();
    let mut vertical: Vec<u32> = Vec::new();
    for comp in &comps {
        let size = comp.len() as u32;
        match classify_line(comp) {
            LineKind::Horizontal => horizontal.push(size),
            LineKind::Vertical => vertical.push(size),
            LineKind::Both => {
                // single cells count toward whichever side needs them;
                // resolve below by multiset arithmetic
                horizontal.push(size);
            }
            LineKind::Neither => panic!("component of {} is not a line", b),
        }
    }
    // move single-cell components from horizontal to vertical as needed
    let mut want_h: Vec<u32> = b
        .lambda()
        .parts()
        .iter()
        .copied()
        .filter(|&x| x > 0)
        .collect();
    let mut want_v: Vec<u32> = b.mu().parts().iter().copied().filter(|&x| x > 0).collect();
    want_h.sort_unstable();
    want_v.sort_unstable();
    let ones_needed_by_v = want_v.iter().filter(|&&x| x == 1).count();
    let mut i = 0;
    let mut moved = 0;
    while moved < ones_needed_by_v && i < horizontal.len() {
        if horizontal[i] == 1 {
            vertical.push(1);
            horizontal.remove(i);
            moved += 1;
        } else {
            i += 1;
        }
    }
    horizontal.sort_unstable();
    vertical.sort_unstable();
    assert_eq!(horizontal, want_h, "bicomp {}", b);
    assert_eq!(vertical, want_v, "bicomp {}", b);
}

/// Distinct components of the built diagram may touch at corners only:
/// no two cells of different components are edge-adjacent (that is
/// exactly what `connected_components` computes), and the component
/// count equals the number of nonzero parts.
#[test]
fn skew_layout_component_count() {
    for n in 0..=7u32 {
        for b in bicompositions_of(n, 2, 2) {
            let shape = build_skew_for_bicomposition(&b);
            let comps = connected_components(&shape.cells());
            let nonzero = b
                .lambda()
                .parts()
                .iter()
                .chain(b.mu().parts())
                .filter(|&&x| x > 0)
                .count();
            assert_eq!(comps.len(), nonzero, "bicomp {}", b);
        }
    }
}

// ---- border strips ----------------------------------------------------------

fn no_two_by_two(cells: &CellSet) -> bool {
    cells.iter().all(|&(i, j)| {
        !(cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1)))
    })
}

/// Brute-force reference for border strips: every contained partition one
/// strip smaller whose set difference is edge-connected and avoids 2x2
/// blocks, with its leg length read off the difference.
fn border_strips_reference(alpha: &Partition, size: u32) -> BTreeSet<(Partition, u32)> {
    let mut out = BTreeSet::new();
    if size == 0 || size > alpha.n() {
        return out;
    }
    let cells = young_diagram(alpha);
    for beta in partitions_of(alpha.n() - size) {
        if !alpha.contains(&beta) {
            continue;
        }
        let beta_cells = young_diagram(&beta);
        let diff: CellSet = cells.difference(&beta_cells).copied().collect();
        if connected_components(&diff).len() != 1 || !no_two_by_two(&diff) {
            continue;
        }
        let rows: BTreeSet<u32> = diff.iter().map(|&(i, _)| i).collect();
        out.insert((beta, rows.len() as u32 - 1));
    }
    out
}

#[test]
fn border_strips_match_reference() {
    for n in 1..=8u32 {
        for alpha in partitions_of(n) {
            for size in 1..=n {
                let fast: BTreeSet<(Partition, u32)> = border_strips(&alpha, size)
                    .into_iter()
                    .map(|r| (r.result, r.leg_length))
                    .collect();
                let slow = border_strips_reference(&alpha, size);
                assert_eq!(fast, slow, "alpha {} size {}", alpha, size);
                assert_eq!(fast.len(), border_strips(&alpha, size).len(), "duplicates");
            }
        }
    }
}

/// Border strips of size `a` removable from `alpha` are in bijection with
/// the cells of `alpha` whose hook length is `a`.
#[test]
fn border_strip_count_equals_hook_length_count() {
    for n in 1..=9u32 {
        for alpha in partitions_of(n) {
            let conj = alpha.conjugate();
            let mut hook_counts: BTreeMap<u32, usize> = BTreeMap::new();
            for (i, &row) in alpha.parts().iter().enumerate() {
                for j in 0..row {
                    let hook = (row - j) + (conj.part(j as usize) - i as u32) - 1;
                    *hook_counts.entry(hook).or_insert(0) += 1;
                }
            }
            for a in 1..=n {
                assert_eq!(
                    border_strips(&alpha, a).len(),
                    hook_counts.get(&a).copied().unwrap_or(0),
                    "alpha {} size {}",
                    alpha,
                    a
                );
            }
        }
    }
}

// ---- character evaluation ----------------------------------------------------

/// Unmemoized reference evaluation consuming the cycle lengths in a given
/// order; the recursion's value must not depend on that order.
fn chi_consuming(alpha: &Partition, order: &[u32]) -> Int {
    if order.is_empty() {
        return 1;
    }
    let mut total = 0;
    for removal in border_strips(alpha, order[0]) {
        let sign: Int = if removal.leg_length % 2 == 0 { 1 } else { -1 };
        total += sign * chi_consuming(&removal.result, &order[1..]);
    }
    total
}

#[test]
fn chi_independent_of_consumption_order() {
    let mut ev = Evaluator::new();
    for n in 1..=6u32 {
        for alpha in partitions_of(n) {
            for nu in partitions_of(n) {
                let fast = ev.chi(&alpha, &nu).unwrap();
                // smallest part first: the reverse of the evaluator's order
                let ascending: Vec<u32> = nu.parts().iter().rev().copied().collect();
                assert_eq!(
                    chi_consuming(&alpha, &ascending),
                    fast,
                    "alpha {} nu {}",
                    alpha,
                    nu
                );
            }
        }
    }
}

/// Unmemoized reference for the line-diagram recursion that keeps the
/// components as positional lists and never canonicalizes; checked
/// against the keyed evaluator on every bicomposition and ordering.
fn psi_positional(h: &[u32], v: &[u32], nu: &[u32]) -> Int {
    match nu.split_first() {
        None => 1,
        Some((&a, rest)) => {
            let mut total = 0;
            for i in 0..h.len() {
                if h[i] >= a {
                    let mut h2 = h.to_vec();
                    h2[i] -= a;
                    total += psi_positional(&h2, v, rest);
                }
            }
            let sign: Int = if (a - 1) % 2 == 0 { 1 } else { -1 };
            for j in 0..v.len() {
                if v[j] >= a {
                    let mut v2 = v.to_vec();
                    v2[j] -= a;
                    total += sign * psi_positional(h, &v2, rest);
                }
            }
            total
        }
    }
}

#[test]
fn psi_matches_positional_reference() {
    let mut ev = Evaluator::new();
    for n in 0..=6u32 {
        for b in bicompositions_of(n, 2, 2) {
            let key = LineSkewKey::from_bicomposition(&b);
            for nu in partitions_of(n) {
                let fast = ev.psi_line(&key, &nu).unwrap();
                let slow = psi_positional(b.lambda().parts(), b.mu().parts(), nu.parts());
                assert_eq!(fast, slow, "bicomp {} nu {}", b, nu);
                // and with the cycles consumed smallest first
                let ascending: Vec<u32> = nu.parts().iter().rev().copied().collect();
                assert_eq!(
                    psi_positional(b.lambda().parts(), b.mu().parts(), &ascending),
                    fast,
                    "bicomp {} nu {} ascending",
                    b,
                    nu
                );
            }
        }
    }
}

#[test]
fn psi_matches_induced_character() {
    let mut ev = Evaluator::new();
    for n in 0..=6u32 {
        for b in bicompositions_of(n, 2, 2) {
            let key = LineSkewKey::from_bicomposition(&b);
            for nu in partitions_of(n) {
                assert_eq!(
                    ev.psi_line(&key, &nu).unwrap(),
                    induced_value(&b, &nu).unwrap(),
                    "bicomp {} nu {}",
                    b,
                    nu
                );
            }
        }
    }
}

#[test]
fn chi_degree_equals_hook_length_formula() {
    let mut ev = Evaluator::new();
    for n in 1..=8u32 {
        let identity = p(&vec![1; n as usize]);
        let nfact = factorial(n).unwrap();
        for alpha in partitions_of(n) {
            let conj = alpha.conjugate();
            let mut hooks: Int = 1;
            for (i, &row) in alpha.parts().iter().enumerate() {
                for j in 0..row {
                    hooks *= ((row - j) + (conj.part(j as usize) - i as u32) - 1) as Int;
                }
            }
            assert_eq!(nfact % hooks, 0, "alpha {}", alpha);
            assert_eq!(
                ev.chi(&alpha, &identity).unwrap(),
                nfact / hooks,
                "alpha {}",
                alpha
            );
        }
    }
}

#[test]
fn character_rows_are_orthogonal() {
    let mut ev = Evaluator::new();
    for n in 1..=6u32 {
        let shapes = partitions_of(n);
        let classes = partitions_of(n);
        let nfact = factorial(n).unwrap();
        for (i, alpha) in shapes.iter().enumerate() {
            for beta in &shapes[i..] {
                let mut sum: Int = 0;
                for nu in &classes {
                    let size = nfact / centralizer_order(nu).unwrap();
                    sum += ev.chi(alpha, nu).unwrap() * ev.chi(beta, nu).unwrap() * size;
                }
                let want = if alpha == beta { nfact } else { 0 };
                assert_eq!(sum, want, "alpha {} beta {}", alpha, beta);
            }
        }
    }
}

/// Skew characters are genuine characters: every multiplicity in their
/// irreducible decomposition is non-negative.
#[test]
fn psi_decompositions_are_nonnegative() {
    let mut ev = Evaluator::new();
    for n in 0..=5u32 {
        for b in bicompositions_of(n, 2, 2) {
            let key = LineSkewKey::from_bicomposition(&b);
            let table = ev.psi_table(&key, n).unwrap();
            let decomp = ev.decompose(&table).unwrap();
            assert!(decomp.values().all(|&m| m > 0), "bicomp {}", b);
        }
    }
}

// ---- tableaux ----------------------------------------------------------------

/// With no primed letters the weight multiplicities are Kostka numbers,
/// so they must match the inner-product decomposition of the character
/// induced from the corresponding Young subgroup (Young's rule).
#[test]
fn horizontal_weights_are_kostka_numbers() {
    let mut ev = Evaluator::new();
    for n in 0..=6u32 {
        let shapes = partitions_of(n);
        let k = 3usize;
        let ab = Alphabet::new(k as u32, 0);
        let counts: Vec<_> = shapes.iter().map(|a| count_by_weight(a, &ab)).collect();
        for b in bicompositions_of(n, k, 0) {
            let key = LineSkewKey::from_bicomposition(&b);
            let table = ev.psi_table(&key, n).unwrap();
            let decomp = ev.decompose(&table).unwrap();
            for (alpha, cmap) in shapes.iter().zip(&counts) {
                let kostka = cmap.get(&b).copied().unwrap_or(0) as Int;
                let mult = decomp.get(alpha).copied().unwrap_or(0);
                assert_eq!(mult, kostka, "bicomp {} alpha {}", b, alpha);
            }
        }
    }
}

#[test]
fn support_criterion_small_range() {
    for n in 0..=6u32 {
        for alpha in partitions_of(n) {
            for k in 0..=2 {
                for l in 0..=2 {
                    let ab = Alphabet::new(k, l);
                    assert_eq!(
                        s_kl(&alpha, &ab) != 0,
                        in_kl_hook(&alpha, &ab),
                        "alpha {} k {} l {}",
                        alpha,
                        k,
                        l
                    );
                }
            }
        }
    }
}

#[test]
fn tableau_weights_conserve_cell_count() {
    let ab = Alphabet::new(2, 2);
    for n in 0..=6u32 {
        for alpha in partitions_of(n) {
            for_each_tableau(&alpha, &ab, |t| {
                assert!(t.is_semistandard(&ab));
                assert_eq!(t.weight(&ab).n(), n);
            });
        }
    }
}

/// Total tableau count is the sum of the per-weight counts.
#[test]
fn s_kl_sums_count_by_weight() {
    for n in 0..=6u32 {
        for alpha in partitions_of(n) {
            for k in 0..=2 {
                for l in 0..=2 {
                    let ab = Alphabet::new(k, l);
                    let total: u64 = count_by_weight(&alpha, &ab).values().sum();
                    assert_eq!(total, s_kl(&alpha, &ab));
                }
            }
        }
    }
}

// ---- randomized structural properties -----------------------------------------

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0u32..=6, 0..=6).prop_map(Partition::sorted_from)
}

fn arb_composition() -> impl Strategy<Value = Composition> {
    proptest::collection::vec(0u32..=5, 0..=5).prop_map(Composition::new)
}

proptest! {
    #[test]
    fn partition_text_round_trips(alpha in arb_partition()) {
        let rendered = alpha.to_string();
        let parsed: Partition = rendered.parse().unwrap();
        prop_assert_eq!(parsed, alpha);
    }

    #[test]
    fn conjugate_is_an_involution(alpha in arb_partition()) {
        prop_assert_eq!(alpha.conjugate().conjugate(), alpha.clone());
        prop_assert_eq!(alpha.conjugate().n(), alpha.n());
    }

    #[test]
    fn strip_zeros_is_idempotent_and_sum_preserving(c in arb_composition()) {
        let stripped = c.strip_zeros();
        prop_assert_eq!(stripped.sum(), c.sum());
        prop_assert_eq!(stripped.strip_zeros(), stripped.clone());
        prop_assert!(stripped.parts().iter().all(|&x| x > 0));
    }

    #[test]
    fn border_strip_removal_conserves_cells(alpha in arb_partition(), size in 1u32..=6) {
        for removal in border_strips(&alpha, size) {
            prop_assert_eq!(removal.result.n() + size, alpha.n());
            prop_assert!(alpha.contains(&removal.result));
            prop_assert!(removal.leg_length < size);
        }
    }

    #[test]
    fn skew_key_ignores_order_and_zeros(
        h in proptest::collection::vec(0u32..=5, 0..=4),
        v in proptest::collection::vec(0u32..=5, 0..=4),
    ) {
        let mut h_rev = h.clone();
        h_rev.reverse();
        let mut v_rev = v.clone();
        v_rev.reverse();
        let a = LineSkewKey::new(h.iter().copied(), v.iter().copied());
        let b = LineSkewKey::new(h_rev, v_rev);
        prop_assert_eq!(&a, &b);
        let with_zeros = LineSkewKey::new(
            h.iter().copied().chain([0, 0]),
            v.iter().copied().chain([0]),
        );
        prop_assert_eq!(&a, &with_zeros);
    }

    #[test]
    fn bicomposition_text_round_trips(
        h in proptest::collection::vec(0u32..=5, 0..=4),
        v in proptest::collection::vec(0u32..=5, 0..=4),
    ) {
        let b = Bicomposition::new(Composition::new(h), Composition::new(v));
        let parsed: Bicomposition = b.to_string().parse().unwrap();
        prop_assert_eq!(parsed, b);
    }
}
