//! Integer partitions and the geometry of their Young diagrams.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell of a Young diagram in English convention, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Content of a cell: `col - row`.
pub fn content(cell: Cell) -> i64 {
    cell.col as i64 - cell.row as i64
}

/// An integer partition of `n >= 1` with cached hook lengths and contents.
///
/// Per-cell tables are stored in row-major order, matching [`Partition::cells`].
#[derive(Debug, Clone)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
    hooks: Vec<usize>,
    contents: Vec<i64>,
    offsets: Vec<usize>,
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::parse("", "partition must have at least one part"));
        }
        if let Some(&z) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::parse(z.to_string(), "parts must be positive"));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::parse(
                w[1].to_string(),
                format!("parts must be weakly decreasing ({} < {})", w[0], w[1]),
            ));
        }
        Ok(Self::from_valid(parts))
    }

    /// The `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::domain("rectangle dimensions must be positive"));
        }
        Ok(Self::from_valid(vec![cols; rows]))
    }

    fn from_valid(parts: Vec<usize>) -> Self {
        let n = parts.iter().sum();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for &p in &parts {
            offsets.push(acc);
            acc += p;
        }
        let conj = conjugate_parts(&parts);
        let mut hooks = Vec::with_capacity(n);
        let mut contents = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            for (j, &height) in conj[..p].iter().enumerate() {
                let arm = p - j - 1;
                let leg = height - i - 1;
                hooks.push(1 + arm + leg);
                contents.push(j as i64 - i as i64);
            }
        }
        Partition {
            parts,
            n,
            hooks,
            contents,
            offsets,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Row-major index of a cell, if it lies in the diagram.
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.contains(cell)
            .then(|| self.offsets[cell.row - 1] + cell.col - 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        self.index_of(cell)
            .map(|i| self.hooks[i])
            .ok_or_else(|| Error::domain(format!("cell {:?} is outside shape {}", cell, self)))
    }

    /// Hook lengths in row-major order.
    pub fn hooks(&self) -> &[usize] {
        &self.hooks
    }

    /// Contents in row-major order.
    pub fn contents(&self) -> &[i64] {
        &self.contents
    }

    /// `Σ (i-1) λ_i`, equivalently the sum of `row - 1` over all cells.
    pub fn kappa(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `Some((rows, cols))` when every part is equal.
    pub fn is_rectangular(&self) -> Option<(usize, usize)> {
        let b = self.parts[0];
        self.parts
            .iter()
            .all(|&p| p == b)
            .then_some((self.parts.len(), b))
    }

    pub fn conjugate(&self) -> Partition {
        Self::from_valid(conjugate_parts(&self.parts))
    }

    /// All partitions of `n`, in ascending lexicographic order of their part lists.
    pub fn all_of(n: usize) -> Vec<Partition> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out.reverse();
        out.into_iter().map(Self::from_valid).collect()
    }
}

// Emits partitions of `rest` with parts at most `max`, in descending lex order.
fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().take_while(|&&p| p >= j).count())
        .collect()
}

/// `γ(n, k) = (n - 1) * k(k-1)/2`, defined for `0 <= k <= n`.
pub fn gamma(n: usize, k: usize) -> Result<usize> {
    if k > n {
        return Err(Error::domain(format!("gamma({n}, {k}): k must be at most n")));
    }
    Ok(n.saturating_sub(1) * (k * k.saturating_sub(1) / 2))
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"6,5,4,2,2,2"` or the rectangle shorthand `"AxB"` (A rows of length B).
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::parse("", "empty shape"));
        }
        if let Some((a, b)) = text.split_once(['x', 'X']) {
            let rows = parse_positive(a)?;
            let cols = parse_positive(b)?;
            return Partition::rectangle(rows, cols);
        }
        let parts = text
            .split(',')
            .map(parse_positive)
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

fn parse_positive(token: &str) -> Result<usize> {
    let token = token.trim();
    match token.parse::<i64>() {
        Ok(v) if v > 0 => Ok(v as usize),
        Ok(_) => Err(Error::parse(token, "parts must be positive")),
        Err(_) => Err(Error::parse(token, "not an integer")),
    }
}

/// Renders as the comma-separated shape string accepted by [`FromStr`].
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}
