//! Young diagrams confined to a rectangle: iteration, conjugation,
//! complementation and containment. These index every Schubert class
//! and every summand of the counting formulas.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: weakly decreasing non-negative parts, trailing zeros
/// trimmed. The empty partition displays as `()`.
///
/// Serializes as a JSON array of integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("parts must be weakly decreasing: {0:?}")]
pub struct NotAPartition(pub Vec<u32>);

impl Partition {
    /// Panics if `parts` is not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        Partition::try_new(parts).expect("invalid partition")
    }

    pub fn try_new(mut parts: Vec<u32>) -> Result<Self, NotAPartition> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes `|p|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// True iff the diagram fits into a `rows x cols` rectangle.
    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.parts.len() <= rows && self.part(0) <= cols as u32
    }

    /// True iff `mu`'s diagram sits inside `self`'s.
    pub fn contains(&self, mu: &Partition) -> bool {
        (0..mu.parts.len()).all(|i| mu.parts[i] <= self.part(i))
    }

    /// Transposed diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0) as usize;
        let parts = (0..rows)
            .map(|c| self.parts.iter().filter(|&&p| p > c as u32).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The complement `(cols - p_rows, ..., cols - p_1)` inside a
    /// `rows x cols` rectangle; an involution in the box.
    pub fn complement(&self, rows: usize, cols: usize) -> Partition {
        assert!(
            self.fits(rows, cols),
            "partition {} does not fit in a {}x{} box",
            self,
            rows,
            cols
        );
        let parts = (0..rows)
            .rev()
            .map(|i| cols as u32 - self.part(i))
            .collect();
        Partition::try_new(parts).expect("complement is weakly decreasing")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = NotAPartition;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::try_new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Yields every partition in the `rows x cols` rectangle exactly once,
/// in lexicographic order on part vectors (the empty partition first).
/// The total count is `C(rows + cols, rows)`.
pub fn iterate_box(rows: usize, cols: usize) -> BoxIter {
    BoxIter { rows, cols, next: Some(Vec::new()) }
}

/// Iterator state: the next partition to emit, as a trimmed parts vector.
pub struct BoxIter {
    rows: usize,
    cols: usize,
    next: Option<Vec<u32>>,
}

impl Iterator for BoxIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        // lexicographic successor: extend with a new row of size 1 if
        // allowed, otherwise bump the last part and trim
        let mut succ = current.clone();
        if succ.len() < self.rows && self.cols >= 1 {
            succ.push(1);
        } else {
            loop {
                match succ.pop() {
                    None => break,
                    Some(last) => {
                        let cap = if succ.is_empty() {
                            self.cols as u32
                        } else {
                            *succ.last().unwrap()
                        };
                        if last < cap {
                            succ.push(last + 1);
                            break;
                        }
                    }
                }
            }
            if succ.is_empty() {
                self.next = None;
                return Some(Partition { parts: current });
            }
        }
        self.next = Some(succ);
        Some(Partition { parts: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::binomial;
    use num_bigint::BigInt;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn box_1x1() {
        let all: Vec<_> = iterate_box(1, 1).collect();
        assert_eq!(all, vec![Partition::empty(), p(&[1])]);
    }

    #[test]
    fn box_2x2() {
        let all: Vec<_> = iterate_box(2, 2).collect();
        assert_eq!(all.len(), 6);
        let expected: Vec<Partition> = vec![
            Partition::empty(),
            p(&[1]),
            p(&[1, 1]),
            p(&[2]),
            p(&[2, 1]),
            p(&[2, 2]),
        ];
        assert_eq!(all, expected);
    }

    #[test]
    fn box_empty_rectangle() {
        let all: Vec<_> = iterate_box(3, 0).collect();
        assert_eq!(all, vec![Partition::empty()]);
        let all: Vec<_> = iterate_box(0, 5).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn box_counts_match_binomial() {
        for rows in 0..=8usize {
            for cols in 0..=8usize {
                let count = iterate_box(rows, cols).count();
                assert_eq!(
                    BigInt::from(count),
                    binomial((rows + cols) as i64, rows as i64),
                    "box {}x{}",
                    rows,
                    cols
                );
            }
        }
    }

    #[test]
    fn box_iteration_is_lex_sorted_and_distinct() {
        let all: Vec<_> = iterate_box(3, 4).collect();
        for w in all.windows(2) {
            assert!(w[0].parts() < w[1].parts(), "not strictly lex increasing");
        }
        assert!(all.iter().all(|q| q.fits(3, 4)));
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        for q in iterate_box(4, 4) {
            assert_eq!(q.conjugate().conjugate(), q);
        }
    }

    #[test]
    fn complementation() {
        assert_eq!(Partition::empty().complement(2, 2), p(&[2, 2]));
        assert_eq!(p(&[2, 1]).complement(2, 2), p(&[1]));
        assert_eq!(p(&[2, 2]).complement(2, 2), Partition::empty());
        for q in iterate_box(3, 5) {
            assert_eq!(q.complement(3, 5).complement(3, 5), q);
            assert_eq!(q.size() + q.complement(3, 5).size(), 15);
        }
    }

    #[test]
    #[should_panic(expected = "does not fit")]
    fn complement_requires_fit() {
        let _ = p(&[3]).complement(2, 2);
    }

    #[test]
    fn containment() {
        assert!(p(&[2, 1]).contains(&p(&[1, 1])));
        assert!(!p(&[1]).contains(&p(&[2])));
        assert!(p(&[2, 1]).contains(&Partition::empty()));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
    }

    #[test]
    fn invalid_parts_rejected() {
        assert!(Partition::try_new(vec![1, 2]).is_err());
        assert_eq!(Partition::try_new(vec![2, 1]).unwrap(), p(&[2, 1]));
        // trailing zeros trimmed
        assert_eq!(Partition::try_new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn serde_as_integer_array() {
        let q = p(&[3, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[3,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }
}
