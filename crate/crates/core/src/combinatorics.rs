//! Partitions, compositions, and bicompositions, plus the class-size
//! arithmetic built on them.
//!
//! Enumeration orders are fixed so downstream output is byte-reproducible:
//! partitions are listed in descending lexicographic order and compositions
//! with the first part largest first.
//!
//! Text syntax: parts are comma-separated decimals (`3,1,1`), the empty
//! sequence is written `-`, and a bicomposition joins its two sides with a
//! bar (`4,0,5|2,3`).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{checked_mul, Error, Int};

/// A partition: weakly decreasing sequence of positive integers.
///
/// Doubles as a cycle type and as a diagram shape. The empty sequence is
/// the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.last().is_none_or(|&p| p > 0);
        if decreasing && positive {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition)
        }
    }

    /// The empty partition of 0.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from arbitrary entries by sorting them in
    /// decreasing order and discarding zeros.
    pub fn sorted_from(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length at `index`, with rows past the end reading as 0.
    pub fn part(&self, index: usize) -> u32 {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// True if the Young diagram of `inner` fits inside the diagram of
    /// `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Removes the part at `index`; the result is re-sorted so it is again
    /// a valid partition. Character values depend only on the multiset of
    /// parts, so canonical sorted form is kept everywhere.
    pub fn remove_part(&self, index: usize) -> Result<Partition, Error> {
        if index >= self.parts.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.parts.len(),
            });
        }
        let mut parts = self.parts.clone();
        parts.remove(index);
        // removing one entry from a sorted list keeps it sorted
        Ok(Partition { parts })
    }

    /// Part value -> multiplicity, in increasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0) as usize;
        let mut parts = Vec::with_capacity(rows);
        for j in 1..=rows as u32 {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_parts(&self.parts, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Partition::new(parse_parts(s)?)
    }
}

/// A composition: fixed-length sequence of non-negative parts, zeros
/// retained.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub const fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Declared length, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Deletes all zero parts, preserving the order of the rest.
    pub fn strip_zeros(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&p| p > 0).collect(),
        }
    }

    /// Replaces part `index` with `part - amount`, length unchanged.
    pub fn decrement_part(&self, index: usize, amount: u32) -> Result<Composition, Error> {
        let part = *self
            .parts
            .get(index)
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.parts.len(),
            })?;
        if part < amount {
            return Err(Error::PartTooSmall {
                part,
                decrement: amount,
            });
        }
        let mut parts = self.parts.clone();
        parts[index] = part - amount;
        Ok(Composition { parts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_parts(&self.parts, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(Composition::new(parse_parts(s)?))
    }
}

/// A pair of compositions `(lambda | mu)` indexing a skew character.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bicomposition {
    lambda: Composition,
    mu: Composition,
}

impl Bicomposition {
    pub fn new(lambda: Composition, mu: Composition) -> Self {
        Bicomposition { lambda, mu }
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    /// The integer this bicomposition splits: `|lambda| + |mu|`.
    pub fn n(&self) -> u32 {
        self.lambda.sum() + self.mu.sum()
    }
}

impl fmt::Display for Bicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

impl FromStr for Bicomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (left, right) = s.split_once('|').ok_or(Error::InvalidPartition)?;
        Ok(Bicomposition::new(left.parse()?, right.parse()?))
    }
}

fn format_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<u32>, Error> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<u32>().map_err(|_| Error::InvalidPartition))
        .collect()
}

/// All partitions of `n` in descending lexicographic order; `n = 0` yields
/// the single empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_partitions(n, n, &mut stack, &mut out);
    out
}

fn extend_partitions(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        extend_partitions(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// All weak compositions of `n` into exactly `k` parts, first part largest
/// first. For `k = 0` this is `[()]` when `n = 0` and empty otherwise.
pub fn compositions_of(n: u32, k: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    extend_compositions(n, k, &mut prefix, &mut out);
    out
}

fn extend_compositions(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
        }
        return;
    }
    if slots == 1 {
        prefix.push(remaining);
        out.push(Composition {
            parts: prefix.clone(),
        });
        prefix.pop();
        return;
    }
    for part in (0..=remaining).rev() {
        prefix.push(part);
        extend_compositions(remaining - part, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// All bicompositions `(lambda | mu)` with `lambda` of length `k`, `mu` of
/// length `l`, and `|lambda| + |mu| = n`. Ordered with `|lambda|` largest
/// first, then by the composition orders of the two sides.
pub fn bicompositions_of(n: u32, k: usize, l: usize) -> Vec<Bicomposition> {
    let mut out = Vec::new();
    for m in (0..=n).rev() {
        let lambdas = compositions_of(m, k);
        let mus = compositions_of(n - m, l);
        for lambda in &lambdas {
            for mu in &mus {
                out.push(Bicomposition::new(lambda.clone(), mu.clone()));
            }
        }
    }
    out
}

/// Centralizer order `z_nu = prod_i i^{m_i} m_i!` where `m_i` is the
/// multiplicity of part `i`. The conjugacy class of cycle type `nu` in the
/// symmetric group on `|nu|` letters has size `n! / z_nu`.
pub fn centralizer_order(nu: &Partition) -> Result<Int, Error> {
    let mut z: Int = 1;
    for (part, mult) in nu.multiplicities() {
        for _ in 0..mult {
            z = checked_mul(z, Int::from(part))?;
        }
        z = checked_mul(z, factorial(mult)?)?;
    }
    Ok(z)
}

/// `n!` with overflow checking.
pub fn factorial(n: u32) -> Result<Int, Error> {
    let mut f: Int = 1;
    for i in 2..=Int::from(n) {
        f = checked_mul(f, i)?;
    }
    Ok(f)
}

/// Binomial coefficient `C(n, k)` computed multiplicatively; every
/// intermediate division is exact.
pub fn binomial(n: u32, k: u32) -> Result<Int, Error> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut c: Int = 1;
    for i in 1..=Int::from(k) {
        c = checked_mul(c, Int::from(n) - k as Int + i)? / i;
    }
    Ok(c)
}

/// `m! / (c_1! ... c_f!)` for a split `c` of `m`; the number of ways to
/// deal `m` identical-length cycles into labelled factors.
pub fn multinomial(counts: &[u32]) -> Result<Int, Error> {
    let mut remaining: u32 = counts.iter().sum();
    let mut value: Int = 1;
    for &c in counts {
        value = checked_mul(value, binomial(remaining, c)?)?;
        remaining -= c;
    }
    Ok(value)
}

/// Renders `parts` using the shared text syntax (`-` when empty).
pub fn parts_to_string(parts: &[u32]) -> String {
    use alloc::string::ToString;
    if parts.is_empty() {
        return "-".to_string();
    }
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&p.to_string());
    }
    s
}
