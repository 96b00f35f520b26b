//! Exact character evaluation on the symmetric group.
//!
//! Irreducible characters are evaluated with the Murnaghan-Nakayama
//! recursion over border-strip removals. Skew characters of line diagrams
//! are evaluated with the specialised recursion that decrements one
//! component at a time: a horizontal line of length `h >= a` loses an
//! `a`-strip of leg length 0, a vertical line of length `v >= a` one of leg
//! length `a - 1`. The Young-subgroup induction formula is implemented
//! independently as an oracle, and inner products against the irreducibles
//! decompose any value table.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::combinatorics::{
    centralizer_order, factorial, multinomial, partitions_of, Bicomposition, Partition,
};
use crate::{checked_add, checked_mul, Error, Int};

/// Canonical memo key for a line-diagram skew character: the multisets of
/// horizontal and vertical component sizes, sorted decreasing. The
/// character depends on nothing else, so any two bicompositions with equal
/// sorted nonzero parts share one key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LineSkewKey {
    h: Vec<u32>,
    v: Vec<u32>,
}

impl LineSkewKey {
    /// Builds a key from component sizes; zeros are dropped and the rest
    /// sorted decreasing.
    pub fn new(
        horizontal: impl IntoIterator<Item = u32>,
        vertical: impl IntoIterator<Item = u32>,
    ) -> Self {
        let mut h: Vec<u32> = horizontal.into_iter().filter(|&s| s > 0).collect();
        let mut v: Vec<u32> = vertical.into_iter().filter(|&s| s > 0).collect();
        h.sort_unstable_by(|a, b| b.cmp(a));
        v.sort_unstable_by(|a, b| b.cmp(a));
        LineSkewKey { h, v }
    }

    pub fn from_bicomposition(b: &Bicomposition) -> Self {
        LineSkewKey::new(
            b.lambda().parts().iter().copied(),
            b.mu().parts().iter().copied(),
        )
    }

    /// Horizontal component sizes, decreasing.
    pub fn horizontal(&self) -> &[u32] {
        &self.h
    }

    /// Vertical component sizes, decreasing.
    pub fn vertical(&self) -> &[u32] {
        &self.v
    }

    /// Total number of cells.
    pub fn total(&self) -> u32 {
        self.h.iter().sum::<u32>() + self.v.iter().sum::<u32>()
    }

    fn decrement_horizontal(&self, index: usize, amount: u32) -> LineSkewKey {
        let mut h = self.h.clone();
        h[index] -= amount;
        LineSkewKey::new(h, self.v.iter().copied())
    }

    fn decrement_vertical(&self, index: usize, amount: u32) -> LineSkewKey {
        let mut v = self.v.clone();
        v[index] -= amount;
        LineSkewKey::new(self.h.iter().copied(), v)
    }
}

/// A character tabulated on every conjugacy class of one symmetric group:
/// partition of `n` -> exact integer value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterValueTable {
    n: u32,
    values: BTreeMap<Partition, Int>,
}

impl CharacterValueTable {
    /// Requires one value for every partition of `n`.
    pub fn new(n: u32, values: BTreeMap<Partition, Int>) -> Result<Self, Error> {
        let classes = partitions_of(n);
        if values.len() != classes.len() || classes.iter().any(|nu| !values.contains_key(nu)) {
            return Err(Error::SizeMismatch {
                left: values.len() as u32,
                right: classes.len() as u32,
            });
        }
        Ok(CharacterValueTable { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, nu: &Partition) -> Option<Int> {
        self.values.get(nu).copied()
    }

    /// Rows in descending lexicographic class order, the canonical
    /// serialization order.
    pub fn rows_desc_lex(&self) -> impl Iterator<Item = (&Partition, Int)> {
        self.values.iter().rev().map(|(nu, &v)| (nu, v))
    }

    /// `sum_nu value(nu)^2 * |class nu|`; equals `n!` times the norm of
    /// the character, so a genuine character yields a positive multiple of
    /// `n!`.
    pub fn norm_times_group_order(&self) -> Result<Int, Error> {
        let nfact = factorial(self.n)?;
        let mut total: Int = 0;
        for (nu, &v) in &self.values {
            let class_size = nfact / centralizer_order(nu)?;
            total = checked_add(total, checked_mul(checked_mul(v, v)?, class_size)?)?;
        }
        Ok(total)
    }
}

/// Memoizing evaluator for irreducible and line-diagram skew characters.
///
/// Evaluation is pure given the inputs; the caches only avoid
/// recomputation. Keep one evaluator per execution context, or hand out
/// clones: results are identical either way.
#[derive(Debug, Default, Clone)]
pub struct Evaluator {
    chi_memo: BTreeMap<(Partition, Partition), Int>,
    psi_memo: BTreeMap<(LineSkewKey, Partition), Int>,
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator::default()
    }

    /// Value of the irreducible character `chi_alpha` on the class `nu`.
    ///
    /// Consumes the largest remaining part of `nu` first and sums
    /// `(-1)^leg` over all border strips of that size; the value does not
    /// depend on the order parts are consumed in.
    pub fn chi(&mut self, alpha: &Partition, nu: &Partition) -> Result<Int, Error> {
        if alpha.n() != nu.n() {
            return Err(Error::SizeMismatch {
                left: alpha.n(),
                right: nu.n(),
            });
        }
        self.chi_inner(alpha, nu)
    }

    fn chi_inner(&mut self, alpha: &Partition, nu: &Partition) -> Result<Int, Error> {
        if nu.is_empty() {
            return Ok(1);
        }
        let memo_key = (alpha.clone(), nu.clone());
        if let Some(&v) = self.chi_memo.get(&memo_key) {
            return Ok(v);
        }
        let a = nu.parts()[0];
        let rest = nu.remove_part(0)?;
        let mut total: Int = 0;
        for removal in crate::diagrams::border_strips(alpha, a) {
            let sub = self.chi_inner(&removal.result, &rest)?;
            let signed = if removal.leg_length % 2 == 0 { sub } else { -sub };
            total = checked_add(total, signed)?;
        }
        self.chi_memo.insert(memo_key, total);
        Ok(total)
    }

    /// Value of the skew character of a line diagram on the class `nu`.
    pub fn psi_line(&mut self, key: &LineSkewKey, nu: &Partition) -> Result<Int, Error> {
        if key.total() != nu.n() {
            return Err(Error::SizeMismatch {
                left: key.total(),
                right: nu.n(),
            });
        }
        self.psi_inner(key, nu)
    }

    fn psi_inner(&mut self, key: &LineSkewKey, nu: &Partition) -> Result<Int, Error> {
        if nu.is_empty() {
            return Ok(1);
        }
        let memo_key = (key.clone(), nu.clone());
        if let Some(&v) = self.psi_memo.get(&memo_key) {
            return Ok(v);
        }
        let a = nu.parts()[0];
        let rest = nu.remove_part(0)?;
        let mut total: Int = 0;
        for (i, &h) in key.horizontal().iter().enumerate() {
            if h >= a {
                let sub = self.psi_inner(&key.decrement_horizontal(i, a), &rest)?;
                total = checked_add(total, sub)?;
            }
        }
        let vertical_sign: Int = if (a - 1).is_multiple_of(2) { 1 } else { -1 };
        for (j, &v) in key.vertical().iter().enumerate() {
            if v >= a {
                let sub = self.psi_inner(&key.decrement_vertical(j, a), &rest)?;
                total = checked_add(total, checked_mul(vertical_sign, sub)?)?;
            }
        }
        self.psi_memo.insert(memo_key, total);
        Ok(total)
    }

    /// Tabulates `chi_alpha` on every class of `|alpha|`.
    pub fn chi_table(&mut self, alpha: &Partition) -> Result<CharacterValueTable, Error> {
        let n = alpha.n();
        let mut values = BTreeMap::new();
        for nu in partitions_of(n) {
            let v = self.chi(alpha, &nu)?;
            values.insert(nu, v);
        }
        CharacterValueTable::new(n, values)
    }

    /// Tabulates the line skew character on every class of `n`.
    pub fn psi_table(&mut self, key: &LineSkewKey, n: u32) -> Result<CharacterValueTable, Error> {
        if key.total() != n {
            return Err(Error::SizeMismatch {
                left: key.total(),
                right: n,
            });
        }
        let mut values = BTreeMap::new();
        for nu in partitions_of(n) {
            let v = self.psi_line(key, &nu)?;
            values.insert(nu, v);
        }
        CharacterValueTable::new(n, values)
    }

    /// Multiplicity of each irreducible in `table`, by inner products:
    /// `m_alpha = sum_nu table(nu) chi_alpha(nu) / z_nu`. Only nonzero
    /// multiplicities are returned. Errors with
    /// [`Error::NonIntegerMultiplicity`] if any inner product is not an
    /// integer, which means the table was not a virtual character.
    pub fn decompose(
        &mut self,
        table: &CharacterValueTable,
    ) -> Result<BTreeMap<Partition, Int>, Error> {
        let n = table.n();
        let nfact = factorial(n)?;
        let mut out = BTreeMap::new();
        for alpha in partitions_of(n) {
            let mut scaled: Int = 0; // n! times the inner product
            for (nu, value) in table.rows_desc_lex() {
                let class_size = nfact / centralizer_order(nu)?;
                let chi = self.chi(&alpha, nu)?;
                scaled = checked_add(scaled, checked_mul(checked_mul(value, chi)?, class_size)?)?;
            }
            if scaled % nfact != 0 {
                return Err(Error::NonIntegerMultiplicity);
            }
            let mult = scaled / nfact;
            if mult != 0 {
                out.insert(alpha, mult);
            }
        }
        Ok(out)
    }
}

/// Value on class `nu` of the character induced from the Young subgroup of
/// a bicomposition, with trivial characters on the `lambda` factors and
/// sign characters on the `mu` factors.
///
/// This is the standard induced-class-function sum: distribute the cycles
/// of `nu` over the factors so that every factor receives exactly its part
/// size; each distribution contributes the product over cycle lengths of
/// the multinomial of how its copies were dealt out, times the sign the
/// vertical factors pick up. Evaluated directly from that formula, with no
/// border strips anywhere, so it is an independent oracle for
/// [`Evaluator::psi_line`].
pub fn induced_value(b: &Bicomposition, nu: &Partition) -> Result<Int, Error> {
    if b.n() != nu.n() {
        return Err(Error::SizeMismatch {
            left: b.n(),
            right: nu.n(),
        });
    }
    let vertical_from = b.lambda().len();
    let targets: Vec<u32> = b
        .lambda()
        .parts()
        .iter()
        .chain(b.mu().parts().iter())
        .copied()
        .collect();
    let groups = nu.multiplicities();
    let mut loads = alloc::vec![0u32; targets.len()];
    let mut splits: Vec<Vec<u32>> = Vec::with_capacity(groups.len());
    distribute_cycles(&groups, &targets, vertical_from, 0, &mut loads, &mut splits)
}

/// Recursively deals each group of equal-length cycles onto the factors,
/// pruning any branch where a factor exceeds its target size, and sums the
/// completed assignments.
fn distribute_cycles(
    groups: &[(u32, u32)],
    targets: &[u32],
    vertical_from: usize,
    depth: usize,
    loads: &mut Vec<u32>,
    splits: &mut Vec<Vec<u32>>,
) -> Result<Int, Error> {
    if depth == groups.len() {
        if loads.iter().zip(targets).any(|(l, t)| l != t) {
            return Ok(0);
        }
        let mut term: Int = 1;
        for split in splits.iter() {
            term = checked_mul(term, multinomial(split)?)?;
        }
        // each cycle of length a on a sign factor contributes (-1)^(a-1)
        let mut sign_exponent: u32 = 0;
        for (split, &(part, _)) in splits.iter().zip(groups) {
            for &count in &split[vertical_from..] {
                sign_exponent += count * (part - 1);
            }
        }
        if sign_exponent % 2 == 1 {
            term = -term;
        }
        return Ok(term);
    }

    let (part, mult) = groups[depth];
    let mut counts = alloc::vec![0u32; targets.len()];
    let mut total: Int = 0;
    // walk all ways to deal `mult` cycles of length `part` onto the factors
    loop {
        let assigned: u32 = counts.iter().sum();
        if assigned == mult {
            splits.push(counts.clone());
            total = checked_add(
                total,
                distribute_cycles(groups, targets, vertical_from, depth + 1, loads, splits)?,
            )?;
            splits.pop();
        }
        // advance the counts vector, skipping states that overload a factor
        let mut pos = 0;
        loop {
            if pos == targets.len() {
                for (f, c) in counts.iter().enumerate() {
                    loads[f] -= c * part;
                }
                return Ok(total);
            }
            let remaining: u32 = mult - counts.iter().sum::<u32>() + counts[pos];
            if counts[pos] < remaining && loads[pos] + part <= targets[pos] {
                counts[pos] += 1;
                loads[pos] += part;
                break;
            }
            loads[pos] -= counts[pos] * part;
            counts[pos] = 0;
            pos += 1;
        }
    }
}
