//! Standard Young tableaux, descents, and Schützenberger promotion.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::shapes::Partition;

/// A standard Young tableau; entries are stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: Arc<Partition>,
    entries: Vec<u32>,
}

impl StandardTableau {
    pub fn new(shape: Arc<Partition>, entries: Vec<u32>) -> Result<Self> {
        let n = shape.size();
        if entries.len() != n {
            return Err(Error::domain(format!(
                "{} entries for a shape of size {n}",
                entries.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::domain(format!("entries are not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        let t = StandardTableau { shape, entries };
        let rows = t.rows();
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::domain(format!("row {} is not increasing", i + 1)));
            }
            if let Some(below) = rows.get(i + 1) {
                if below.iter().zip(row).any(|(b, a)| b <= a) {
                    return Err(Error::domain(format!(
                        "column increase fails between rows {} and {}",
                        i + 1,
                        i + 2
                    )));
                }
            }
        }
        Ok(t)
    }

    /// Builds a tableau from its rows; the shape is read off the row lengths.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Self::new(Arc::new(shape), rows.concat())
    }

    /// The tableau filled with `1..=n` row by row.
    pub fn superstandard(shape: Arc<Partition>) -> Self {
        let entries = (1..=shape.size() as u32).collect();
        StandardTableau { shape, entries }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn shape_arc(&self) -> &Arc<Partition> {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rest = self.entries.as_slice();
        self.shape
            .parts()
            .iter()
            .map(|&p| {
                let (row, tail) = rest.split_at(p);
                rest = tail;
                row.to_vec()
            })
            .collect()
    }

    /// `row_of[v]` is the 1-based row containing `v`; index 0 is unused.
    pub fn row_of_values(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.size() + 1];
        let mut idx = 0;
        for (i, &p) in self.shape.parts().iter().enumerate() {
            for _ in 0..p {
                row_of[self.entries[idx] as usize] = i + 1;
                idx += 1;
            }
        }
        row_of
    }

    /// `i` such that `i + 1` lies in a strictly lower row than `i`.
    pub fn descent_set(&self) -> Vec<usize> {
        let row_of = self.row_of_values();
        (1..self.size()).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Schützenberger promotion: remove 1, slide the hole out by jeu de
    /// taquin, fill the vacated corner with `n + 1`, subtract 1 everywhere.
    pub fn promotion(&self) -> StandardTableau {
        let parts = self.shape.parts();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for &p in parts {
            offsets.push(acc);
            acc += p;
        }
        let mut grid = self.entries.clone();
        let (mut i, mut j) = (0usize, 0usize);
        loop {
            let right = (j + 1 < parts[i]).then(|| grid[offsets[i] + j + 1]);
            let below = (i + 1 < parts.len() && j < parts[i + 1]).then(|| grid[offsets[i + 1] + j]);
            let (ni, nj) = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (i, j + 1),
                (None, Some(_)) => (i + 1, j),
                (Some(r), Some(b)) if r < b => (i, j + 1),
                (Some(_), Some(_)) => (i + 1, j),
            };
            grid[offsets[i] + j] = grid[offsets[ni] + nj];
            i = ni;
            j = nj;
        }
        grid[offsets[i] + j] = self.size() as u32 + 1;
        for v in &mut grid {
            *v -= 1;
        }
        StandardTableau {
            shape: Arc::clone(&self.shape),
            entries: grid,
        }
    }

    /// Promotion applied `times` times.
    pub fn promotion_pow(&self, times: usize) -> StandardTableau {
        (0..times).fold(self.clone(), |t, _| t.promotion())
    }
}

/// All standard Young tableaux of `shape`, sorted lexicographically by their
/// row-major entry lists.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let shape = Arc::new(shape.clone());
    let parts = shape.parts().to_vec();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in &parts {
        offsets.push(acc);
        acc += p;
    }
    let mut filled = vec![0usize; parts.len()];
    let mut entries = vec![0u32; shape.size()];
    let mut out = Vec::new();
    place(1, &parts, &offsets, &mut filled, &mut entries, &mut out);
    out.sort_unstable();
    out.into_iter()
        .map(|entries| StandardTableau {
            shape: Arc::clone(&shape),
            entries,
        })
        .collect()
}

// Places `v` in every row whose next cell is an outer corner of the filled part.
fn place(
    v: u32,
    parts: &[usize],
    offsets: &[usize],
    filled: &mut [usize],
    entries: &mut [u32],
    out: &mut Vec<Vec<u32>>,
) {
    if v as usize > entries.len() {
        out.push(entries.to_vec());
        return;
    }
    for i in 0..parts.len() {
        let open = filled[i] < parts[i] && (i == 0 || filled[i - 1] > filled[i]);
        if !open {
            continue;
        }
        entries[offsets[i] + filled[i]] = v;
        filled[i] += 1;
        place(v + 1, parts, offsets, filled, entries, out);
        filled[i] -= 1;
    }
}

/// Least `ℓ >= 1` with promotion^ℓ the identity on all of `SYT(shape)`.
pub fn promotion_order(shape: &Partition) -> usize {
    enumerate_syt(shape)
        .iter()
        .map(|t| {
            let mut cur = t.promotion();
            let mut len = 1;
            while &cur != t {
                cur = cur.promotion();
                len += 1;
            }
            len
        })
        .fold(1, lcm)
}

impl fmt::Display for StandardTableau {
    /// One row per line, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Rows separated by `/`, entries by `,` — e.g. `"1,2,4/3,5/6,7"`.
    fn from_str(text: &str) -> Result<Self> {
        let rows = text
            .trim()
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|tok| {
                        let tok = tok.trim();
                        tok.parse::<u32>()
                            .map_err(|_| Error::parse(tok, "tableau entries must be positive integers"))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::qalgebra::{maj_gf_hook, syt_count_hook, LaurentPolynomial};

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!("1,3/2,4".parse::<StandardTableau>().is_ok());
        assert!("1,2/4,3".parse::<StandardTableau>().is_err());
        assert!("1,4/2,3".parse::<StandardTableau>().is_err());
        assert!("2,1".parse::<StandardTableau>().is_err());
        assert!("1,2/2,3".parse::<StandardTableau>().is_err());
        assert!("1,5".parse::<StandardTableau>().is_err());
        assert!("1/2,3".parse::<StandardTableau>().is_err());
    }

    #[test]
    fn descents_of_worked_example() {
        let t = tab("1,2,4/3,5/6,7");
        assert_eq!(t.descent_set(), vec![2, 4, 5]);
        assert_eq!(t.maj(), 11);
    }

    #[test]
    fn descents_of_row_and_column() {
        let row = tab("1,2,3,4,5");
        assert!(row.descent_set().is_empty());
        assert_eq!(row.maj(), 0);
        let col = tab("1/2/3/4/5");
        assert_eq!(col.descent_set(), vec![1, 2, 3, 4]);
        assert_eq!(col.maj(), 10);
    }

    #[test]
    fn enumeration_small_shapes() {
        let two_two = enumerate_syt(&"2,2".parse().unwrap());
        let rows: Vec<_> = two_two.iter().map(|t| t.rows()).collect();
        assert_eq!(rows, vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]]);
        assert_eq!(enumerate_syt(&"3,3".parse().unwrap()).len(), 5);
        assert_eq!(enumerate_syt(&"6".parse().unwrap()).len(), 1);
    }

    #[test]
    fn promotion_examples() {
        let row = tab("1,2,3,4");
        assert_eq!(row.promotion(), row);
        assert_eq!(tab("1,2/3,4").promotion(), tab("1,3/2,4"));
        assert_eq!(tab("1,3/2,4").promotion(), tab("1,2/3,4"));
    }

    // Independent trace: delete 1, slide with an explicit 2-D grid of Options.
    fn promotion_by_trace(t: &StandardTableau) -> StandardTableau {
        let mut rows: Vec<Vec<Option<u32>>> =
            t.rows().into_iter().map(|r| r.into_iter().map(Some).collect()).collect();
        let n = t.size() as u32;
        let mut hole = (0, 0);
        rows[0][0] = None;
        loop {
            let (i, j) = hole;
            let right = rows[i].get(j + 1).copied().flatten();
            let below = rows.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
            let next = match (right, below) {
                (Some(r), Some(b)) => if r < b { (i, j + 1) } else { (i + 1, j) },
                (Some(_), None) => (i, j + 1),
                (None, Some(_)) => (i + 1, j),
                (None, None) => break,
            };
            rows[i][j] = rows[next.0][next.1].take();
            hole = next;
        }
        rows[hole.0][hole.1] = Some(n + 1);
        let rows: Vec<Vec<u32>> =
            rows.into_iter().map(|r| r.into_iter().map(|v| v.unwrap() - 1).collect()).collect();
        StandardTableau::from_rows(&rows).unwrap()
    }

    #[test]
    fn promotion_matches_independent_trace() {
        for n in 1..=8 {
            for shape in Partition::all_of(n) {
                for t in enumerate_syt(&shape) {
                    let p = t.promotion();
                    assert_eq!(p, promotion_by_trace(&t));
                    // result is a valid SYT of the same shape
                    let checked = StandardTableau::new(t.shape_arc().clone(), p.entries().to_vec());
                    assert!(checked.is_ok());
                }
            }
        }
    }

    // Brute force: all permutations of 1..n filtered by the SYT conditions.
    fn brute_force_count(shape: &Partition) -> usize {
        use itertools::Itertools;
        let n = shape.size() as u32;
        let arc = Arc::new(shape.clone());
        (1..=n)
            .permutations(n as usize)
            .filter(|p| StandardTableau::new(arc.clone(), p.clone()).is_ok())
            .count()
    }

    #[test]
    fn enumeration_agrees_with_hook_formula_and_brute_force() {
        for n in 1..=8 {
            for shape in Partition::all_of(n) {
                let syt = enumerate_syt(&shape);
                let count = syt.len();
                assert_eq!(num_bigint::BigInt::from(count), syt_count_hook(&shape));
                if n <= 7 {
                    assert_eq!(count, brute_force_count(&shape), "{shape}");
                }
                let distinct: HashSet<_> = syt.iter().collect();
                assert_eq!(distinct.len(), count);
                assert!(syt.windows(2).all(|w| w[0].entries() < w[1].entries()));
                let gf = LaurentPolynomial::from_pairs(syt.iter().map(|t| (t.maj() as i64, 1)));
                assert_eq!(gf, maj_gf_hook(&shape), "{shape}");
            }
        }
    }

    #[test]
    fn promotion_is_a_bijection() {
        for n in 1..=10 {
            for shape in Partition::all_of(n) {
                let syt = enumerate_syt(&shape);
                let image: HashSet<_> = syt.iter().map(|t| t.promotion()).collect();
                let domain: HashSet<_> = syt.iter().cloned().collect();
                assert_eq!(image, domain, "{shape}");
            }
        }
    }

    #[test]
    fn promotion_order_on_rectangles() {
        let order = |s: &str| promotion_order(&s.parse().unwrap());
        assert_eq!(order("1,1,1"), 1);
        assert_eq!(order("2,2"), 2);
        assert_eq!(order("3,3"), 6);
        for a in 1..=12 {
            for b in 1..=12 / a {
                let shape = Partition::rectangle(a, b).unwrap();
                assert_eq!(a * b % promotion_order(&shape), 0, "{a}x{b}");
                if a * b <= 9 {
                    for t in enumerate_syt(&shape) {
                        assert_eq!(t.promotion_pow(a * b), t);
                    }
                }
            }
        }
        assert_eq!(promotion_order(&"5".parse().unwrap()), 1);
    }

    #[test]
    fn promotion_order_of_small_non_rectangle() {
        // (2,1) has two tableaux swapped by promotion
        assert_eq!(promotion_order(&"2,1".parse().unwrap()), 2);
    }

    #[test]
    fn rendering() {
        let t = tab("1,2,4/3,5/6,7");
        assert_eq!(t.to_string(), "1 2 4\n3 5\n6 7");
        assert_eq!(serde_json_rows(&t), "[[1,2,4],[3,5],[6,7]]");
    }

    fn serde_json_rows(t: &StandardTableau) -> String {
        serde_json::to_string(t).unwrap()
    }
}
