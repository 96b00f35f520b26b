//! Brute-force enumeration of semistandard (k,l)-tableaux.
//!
//! Cell entries come from the alphabet `1 < ... < k < 1' < ... < l'`. A
//! filling is semistandard when the unprimed cells form a Young subdiagram
//! on which rows weakly increase and columns strictly increase, while on
//! the primed remainder rows strictly increase and columns weakly
//! increase. Counting fillings by weight gives the multiplicities
//! `s_(lambda|mu)(alpha)`, and the grand total gives `s_kl(alpha)` — the
//! slow-but-sure oracles the fast character routes are checked against.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{Bicomposition, Composition, Partition};
use crate::Error;

/// The ordered letter set: `k` unprimed letters followed by `l` primed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    pub k: u32,
    pub l: u32,
}

impl Alphabet {
    pub fn new(k: u32, l: u32) -> Self {
        Alphabet { k, l }
    }

    /// All letters in increasing alphabet order.
    pub fn letters(&self) -> Vec<Letter> {
        let unprimed = (1..=self.k).map(Letter::Unprimed);
        let primed = (1..=self.l).map(Letter::Primed);
        unprimed.chain(primed).collect()
    }

    pub fn size(&self) -> u32 {
        self.k + self.l
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::Unprimed(v) => 1 <= v && v <= self.k,
            Letter::Primed(v) => 1 <= v && v <= self.l,
        }
    }
}

/// One entry of a tableau. The derived order is the alphabet order:
/// every unprimed letter precedes every primed letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Unprimed(u32),
    Primed(u32),
}

impl Letter {
    pub fn is_primed(&self) -> bool {
        matches!(self, Letter::Primed(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unprimed(v) => write!(f, "{}", v),
            Letter::Primed(v) => write!(f, "{}'", v),
        }
    }
}

/// A filling of the Young diagram of a straight shape.
///
/// Displays in one-line form: entries comma-separated within a row,
/// rows separated by `/`, primed letters with a trailing apostrophe —
/// `1,1,1'/2'` for a filling of (3,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLTableau {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl KLTableau {
    /// Requires one row of entries per row of the shape, of matching length.
    pub fn new(shape: Partition, rows: Vec<Vec<Letter>>) -> Result<Self, Error> {
        if rows.len() != shape.len()
            || rows
                .iter()
                .enumerate()
                .any(|(i, row)| row.len() != shape.part(i) as usize)
        {
            return Err(Error::SizeMismatch {
                left: rows.iter().map(|r| r.len() as u32).sum(),
                right: shape.n(),
            });
        }
        Ok(KLTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Letter counts as a bicomposition of full length: position `i` of
    /// the first component counts the letter `i+1`, position `j` of the
    /// second counts `(j+1)'`. Zero counts are retained.
    pub fn weight(&self, ab: &Alphabet) -> Bicomposition {
        let mut unprimed = alloc::vec![0u32; ab.k as usize];
        let mut primed = alloc::vec![0u32; ab.l as usize];
        for row in &self.rows {
            for &e in row {
                match e {
                    Letter::Unprimed(v) => unprimed[(v - 1) as usize] += 1,
                    Letter::Primed(v) => primed[(v - 1) as usize] += 1,
                }
            }
        }
        Bicomposition::new(Composition::new(unprimed), Composition::new(primed))
    }

    /// The semistandardness test, stated cell-locally: against the left
    /// neighbour an entry must strictly increase unless both are unprimed,
    /// and against the upper neighbour unless both are primed. This is
    /// equivalent to: the unprimed cells form a Young subdiagram that is
    /// row-weak and column-strict, and the primed remainder is row-strict
    /// and column-weak.
    pub fn is_semistandard(&self, ab: &Alphabet) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if !ab.contains(e) {
                    return false;
                }
                if j > 0 {
                    let left = row[j - 1];
                    if !(left < e || (left == e && !e.is_primed())) {
                        return false;
                    }
                }
                if i > 0 {
                    let above = self.rows[i - 1][j];
                    if !(above < e || (above == e && e.is_primed())) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for KLTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", e)?;
            }
        }
        Ok(())
    }
}

/// Calls `visit` once per semistandard tableau of the shape, built by
/// row-major backtracking with the cell-local checks as pruning. Tableaux
/// arrive in lexicographic order of their row-major entry sequence.
pub fn for_each_tableau<F: FnMut(&KLTableau)>(alpha: &Partition, ab: &Alphabet, mut visit: F) {
    let letters = ab.letters();
    let mut rows: Vec<Vec<Letter>> = alpha
        .parts()
        .iter()
        .map(|&len| Vec::with_capacity(len as usize))
        .collect();
    fill_cell(alpha, &letters, &mut rows, 0, 0, &mut visit);
}

fn fill_cell<F: FnMut(&KLTableau)>(
    alpha: &Partition,
    letters: &[Letter],
    rows: &mut Vec<Vec<Letter>>,
    i: usize,
    j: usize,
    visit: &mut F,
) {
    if i == alpha.len() {
        let t = KLTableau {
            shape: alpha.clone(),
            rows: rows.clone(),
        };
        visit(&t);
        return;
    }
    if j == alpha.part(i) as usize {
        fill_cell(alpha, letters, rows, i + 1, 0, visit);
        return;
    }
    for &e in letters {
        if j > 0 {
            let left = rows[i][j - 1];
            if !(left < e || (left == e && !e.is_primed())) {
                continue;
            }
        }
        if i > 0 && j < alpha.part(i - 1) as usize {
            let above = rows[i - 1][j];
            if !(above < e || (above == e && e.is_primed())) {
                continue;
            }
        }
        rows[i].push(e);
        fill_cell(alpha, letters, rows, i, j + 1, visit);
        rows[i].pop();
    }
}

/// Number of semistandard tableaux per weight; weights with count zero are
/// absent. Keys are full-length bicompositions (zeros retained).
pub fn count_by_weight(alpha: &Partition, ab: &Alphabet) -> BTreeMap<Bicomposition, u64> {
    let mut counts = BTreeMap::new();
    for_each_tableau(alpha, ab, |t| {
        *counts.entry(t.weight(ab)).or_insert(0u64) += 1;
    });
    counts
}

/// Total number of semistandard tableaux of the shape over the alphabet.
pub fn s_kl(alpha: &Partition, ab: &Alphabet) -> u64 {
    let mut total = 0u64;
    for_each_tableau(alpha, ab, |_| total += 1);
    total
}

/// Collects every semistandard tableau; intended for dumps at small sizes.
pub fn tableaux(alpha: &Partition, ab: &Alphabet) -> Vec<KLTableau> {
    let mut out = Vec::new();
    for_each_tableau(alpha, ab, |t| out.push(t.clone()));
    out
}

/// Slow oracle for [`count_by_weight`]: materializes all `(k+l)^n` fills
/// of the shape and filters by [`KLTableau::is_semistandard`]. Exponential;
/// only call it for small `n`.
pub fn count_by_weight_exhaustive(
    alpha: &Partition,
    ab: &Alphabet,
) -> BTreeMap<Bicomposition, u64> {
    let letters = ab.letters();
    let n = alpha.n() as usize;
    let mut counts = BTreeMap::new();
    if n > 0 && letters.is_empty() {
        return counts;
    }
    let mut indices = alloc::vec![0usize; n];
    loop {
        let mut rows = Vec::with_capacity(alpha.len());
        let mut cursor = 0usize;
        for &len in alpha.parts() {
            let row: Vec<Letter> = indices[cursor..cursor + len as usize]
                .iter()
                .map(|&ix| letters[ix])
                .collect();
            cursor += len as usize;
            rows.push(row);
        }
        let t = KLTableau {
            shape: alpha.clone(),
            rows,
        };
        if t.is_semistandard(ab) {
            *counts.entry(t.weight(ab)).or_insert(0u64) += 1;
        }
        // advance the odometer over letter indices
        let mut pos = 0;
        loop {
            if pos == n {
                return counts;
            }
            indices[pos] += 1;
            if indices[pos] < letters.len() {
                break;
            }
            indices[pos] = 0;
            pos += 1;
        }
    }
}

/// Whether the shape lies in the (k,l)-hook: at most `l` cells in every
/// row below the first `k`.
pub fn in_kl_hook(alpha: &Partition, ab: &Alphabet) -> bool {
    alpha
        .parts()
        .iter()
        .skip(ab.k as usize)
        .all(|&part| part <= ab.l)
}
