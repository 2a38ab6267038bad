//! Integer partitions and the transposition-graph eigenvalue attached to each.
//!
//! Every partition `p = (n_1, ..., n_k)` of `n` yields the eigenvalue
//!
//! ```text
//! lambda(p) = sum_j n_j (n_j - 2j + 1) / 2
//! ```
//!
//! of `T_n`, and conjugation negates it. Everything here is exact `i64`
//! arithmetic with checked operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by the eigenvalue formulas. `C(n, 2)` for this bound
/// is about `5 * 10^9`, far inside `i64`.
pub const MAX_FORMULA_N: u64 = 100_000;

/// `m choose 2`, written `C_m^2` in the literature on `T_n`.
pub fn binom2(m: u64) -> i64 {
    let m = m as i64;
    m * (m - 1) / 2
}

/// A nonincreasing sequence of positive parts. The empty partition of 0 is
/// representable through [`Partition::empty`]; [`Partition::new`] rejects it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    n: u64,
}

impl Partition {
    /// Validates `parts` without reordering them.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Self::with_empty(parts)
    }

    /// Like [`Partition::new`] but accepts the empty sequence as the partition of 0.
    pub fn with_empty(parts: Vec<u32>) -> Result<Self> {
        for (index, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if index > 0 && parts[index - 1] < part {
                return Err(Error::NotNonincreasing {
                    index,
                    prev: parts[index - 1],
                    next: part,
                });
            }
        }
        let n = parts.iter().map(|&p| u64::from(p)).sum();
        Ok(Self { parts, n })
    }

    pub fn empty() -> Self {
        Self {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The single-part partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self {
                parts: vec![n],
                n: u64::from(n),
            }
        }
    }

    /// The all-ones partition `(1 x n)`.
    pub fn column(n: u32) -> Self {
        Self {
            parts: vec![1; n as usize],
            n: u64::from(n),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First (largest) part, or 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Everything after the first part.
    pub fn tail(&self) -> Partition {
        match self.parts.split_first() {
            Some((&first, rest)) => Partition {
                parts: rest.to_vec(),
                n: self.n - u64::from(first),
            },
            None => Partition::empty(),
        }
    }

    /// `(head) ++ self`, validated.
    pub fn prepend(&self, head: u32) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(head);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    pub fn eigenvalue(&self) -> Result<Eigenvalue> {
        eigenvalue(self)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::with_empty(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str(")")
    }
}

/// An exact eigenvalue of `T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Eigenvalue(pub i64);

impl Eigenvalue {
    pub fn get(self) -> i64 {
        self.0
    }
}

impl From<Eigenvalue> for i64 {
    fn from(v: Eigenvalue) -> Self {
        v.0
    }
}

impl PartialEq<i64> for Eigenvalue {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_bound(n: u64) -> Result<()> {
    if n > MAX_FORMULA_N {
        Err(Error::Overflow {
            n,
            max: MAX_FORMULA_N,
        })
    } else {
        Ok(())
    }
}

/// Twice the eigenvalue of the sequence `parts`, with positions starting at
/// `offset + 1`. Works on any slice, sorted or not.
pub(crate) fn doubled_eigenvalue_of(parts: &[u32], offset: usize) -> i64 {
    parts
        .iter()
        .enumerate()
        .map(|(i, &part)| {
            let part = i64::from(part);
            let j = (offset + i + 1) as i64;
            part * (part - 2 * j + 1)
        })
        .sum()
}

pub(crate) fn eigenvalue_of(parts: &[u32]) -> i64 {
    doubled_eigenvalue_of(parts, 0) / 2
}

pub fn eigenvalue(p: &Partition) -> Result<Eigenvalue> {
    check_bound(p.n)?;
    let doubled = doubled_eigenvalue_of(&p.parts, 0);
    if doubled % 2 != 0 {
        return Err(Error::ParityViolation {
            context: "partition eigenvalue",
        });
    }
    Ok(Eigenvalue(doubled / 2))
}

/// Column lengths of the Young diagram: `n'_j = #{i : n_i >= j}`.
pub fn conjugate(p: &Partition) -> Partition {
    let first = p.first_part() as usize;
    let mut parts = vec![0u32; first];
    for &part in &p.parts {
        for column in parts.iter_mut().take(part as usize) {
            *column += 1;
        }
    }
    Partition { parts, n: p.n }
}

/// Eigenvalue of `(n1) ++ tail` computed from the tail's own eigenvalue:
/// `C(n1, 2) + lambda(tail) - (n - n1)`.
pub fn eigenvalue_via_head(n1: u32, tail: &Partition, n: u64) -> Result<Eigenvalue> {
    check_bound(n)?;
    let rest = n.checked_sub(u64::from(n1)).ok_or(Error::SumMismatch {
        expected: 0,
        actual: tail.n,
    })?;
    if tail.n != rest {
        return Err(Error::SumMismatch {
            expected: rest,
            actual: tail.n,
        });
    }
    if tail.first_part() > n1 {
        return Err(Error::HeadTooSmall {
            head: n1,
            first_part: tail.first_part(),
        });
    }
    let tail_value = eigenvalue(tail)?.0;
    Ok(Eigenvalue(binom2(u64::from(n1)) + tail_value - rest as i64))
}

/// A partition written as `(head, 2 x t2, 1 x t1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompactPartition {
    head: Vec<u32>,
    t2: u32,
    t1: u32,
}

impl CompactPartition {
    /// The head must be nonincreasing with every part at least 2, so the
    /// expansion is always a valid partition.
    pub fn new(head: Vec<u32>, t2: u32, t1: u32) -> Result<Self> {
        for (index, &part) in head.iter().enumerate() {
            if index > 0 && head[index - 1] < part {
                return Err(Error::NotNonincreasing {
                    index,
                    prev: head[index - 1],
                    next: part,
                });
            }
            if part == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if part == 1 {
                if t2 > 0 {
                    return Err(Error::NotNonincreasing {
                        index: head.len(),
                        prev: 1,
                        next: 2,
                    });
                }
                return Err(Error::HeadPartBelowTwo { index, part });
            }
        }
        Ok(Self { head, t2, t1 })
    }

    pub fn head(&self) -> &[u32] {
        &self.head
    }

    /// Length `l` of the head.
    pub fn head_len(&self) -> usize {
        self.head.len()
    }

    pub fn twos(&self) -> u32 {
        self.t2
    }

    pub fn ones(&self) -> u32 {
        self.t1
    }

    pub fn n(&self) -> u64 {
        self.head.iter().map(|&p| u64::from(p)).sum::<u64>()
            + 2 * u64::from(self.t2)
            + u64::from(self.t1)
    }

    pub fn expand(&self) -> Partition {
        expand(self)
    }

    /// The deduction `f(t1, t2, l)` in `lambda(p) = lambda(head) - f`, as an exact integer.
    pub fn deduction(&self) -> Result<i64> {
        let l = self.head.len() as i64;
        let t2 = i64::from(self.t2);
        let t1 = i64::from(self.t1);
        let ones_numerator = (2 * l + 2 * t2 + t1 + 1) * t1;
        if ones_numerator % 2 != 0 {
            return Err(Error::ParityViolation {
                context: "compact deduction",
            });
        }
        Ok((2 * l + t2 + 1) * t2 + ones_numerator / 2 - 3 * t2 - t1)
    }
}

pub fn expand(c: &CompactPartition) -> Partition {
    let mut parts = Vec::with_capacity(c.head.len() + (c.t2 + c.t1) as usize);
    parts.extend_from_slice(&c.head);
    parts.extend(std::iter::repeat_n(2, c.t2 as usize));
    parts.extend(std::iter::repeat_n(1, c.t1 as usize));
    Partition { n: c.n(), parts }
}

/// `lambda(head) - f(t1, t2, l)` without expanding the tail.
pub fn compact_eigenvalue(c: &CompactPartition) -> Result<Eigenvalue> {
    check_bound(c.n())?;
    let head = eigenvalue_of_checked(&c.head)?;
    Ok(Eigenvalue(head - c.deduction()?))
}

/// `lambda(head) - t1 ((t1 - 1) / 2 + l)` for a tail made only of ones.
pub fn compact_eigenvalue_ones(head: &Partition, t1: u32) -> Result<Eigenvalue> {
    check_bound(head.n + u64::from(t1))?;
    if t1 > 0 {
        if let Some(index) = head.parts.iter().position(|&p| p < 2) {
            return Err(Error::HeadPartBelowTwo {
                index,
                part: head.parts[index],
            });
        }
    }
    let t1 = i64::from(t1);
    let pairs = t1 * (t1 - 1);
    if pairs % 2 != 0 {
        return Err(Error::ParityViolation {
            context: "ones deduction",
        });
    }
    let deduction = pairs / 2 + t1 * head.len() as i64;
    Ok(Eigenvalue(eigenvalue(head)?.0 - deduction))
}

fn eigenvalue_of_checked(parts: &[u32]) -> Result<i64> {
    let doubled = doubled_eigenvalue_of(parts, 0);
    if doubled % 2 != 0 {
        return Err(Error::ParityViolation {
            context: "partition eigenvalue",
        });
    }
    Ok(doubled / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ones(n: usize) -> Vec<u32> {
        vec![1; n]
    }

    #[test]
    fn make_partition_examples() {
        assert_eq!(p(&[4, 1, 1]).n(), 6);
        assert_eq!(p(&[1]).n(), 1);
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotNonincreasing { index: 1, .. })
        ));
        assert!(matches!(
            Partition::new(vec![3, 0]),
            Err(Error::NonPositivePart { index: 1 })
        ));
        assert_eq!(Partition::new(vec![]), Err(Error::EmptyPartition));
        assert_eq!(Partition::with_empty(vec![]).unwrap(), Partition::empty());
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(p(&[4, 1, 1]).eigenvalue().unwrap(), 3);
        assert_eq!(p(&[3, 3]).eigenvalue().unwrap(), 3);
        assert_eq!(p(&[4]).eigenvalue().unwrap(), 6);
        assert_eq!(p(&[1, 1, 1, 1]).eigenvalue().unwrap(), -6);
        assert_eq!(Partition::empty().eigenvalue().unwrap(), 0);
    }

    #[test]
    fn eigenvalue_rejects_huge_n() {
        let big = Partition::row(200_000);
        assert!(matches!(big.eigenvalue(), Err(Error::Overflow { .. })));
        let edge = Partition::row(100_000);
        assert_eq!(edge.eigenvalue().unwrap(), binom2(100_000));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 1, 1]).conjugate(), p(&[3, 1, 1, 1]));
        assert_eq!(p(&[3, 3]).conjugate(), p(&[2, 2, 2]));
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5, 2]).conjugate().first_part(), 2);
    }

    #[test]
    fn head_decomposition_examples() {
        let v = eigenvalue_via_head(4, &p(&[1, 1]), 6).unwrap();
        assert_eq!(v, 3);
        assert_eq!(v, p(&[4, 1, 1]).eigenvalue().unwrap());

        assert_eq!(
            eigenvalue_via_head(7, &Partition::empty(), 7).unwrap(),
            binom2(7)
        );

        let mut tail = vec![15, 2];
        tail.extend(ones(14));
        let tail = p(&tail);
        assert_eq!(eigenvalue_via_head(17, &tail, 48).unwrap(), 90);
        assert_eq!(tail.prepend(17).unwrap().eigenvalue().unwrap(), 90);
    }

    #[test]
    fn head_decomposition_errors() {
        assert_eq!(
            eigenvalue_via_head(2, &p(&[3]), 5),
            Err(Error::HeadTooSmall {
                head: 2,
                first_part: 3
            })
        );
        assert_eq!(
            eigenvalue_via_head(4, &p(&[1, 1]), 7),
            Err(Error::SumMismatch {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn compact_examples() {
        let c = CompactPartition::new(vec![5, 4, 4], 3, 2).unwrap();
        assert_eq!(c.expand(), p(&[5, 4, 4, 2, 2, 2, 1, 1]));
        assert_eq!(compact_eigenvalue(&c).unwrap(), -24);
        assert_eq!(c.expand().eigenvalue().unwrap(), -24);
        // the same partition with a longer head
        let c4 = CompactPartition::new(vec![5, 4, 4, 2], 2, 2).unwrap();
        assert_eq!(compact_eigenvalue(&c4).unwrap(), -24);

        let row = CompactPartition::new(vec![9], 0, 0).unwrap();
        assert_eq!(row.deduction().unwrap(), 0);
        assert_eq!(compact_eigenvalue(&row).unwrap(), binom2(9));

        let zero = CompactPartition::new(vec![5], 0, 4).unwrap();
        assert_eq!(compact_eigenvalue(&zero).unwrap(), 0);
        assert!(zero.expand().is_self_conjugate());
    }

    #[test]
    fn compact_ones_examples() {
        assert_eq!(compact_eigenvalue_ones(&p(&[17]), 14).unwrap(), 31);
        assert_eq!(compact_eigenvalue_ones(&p(&[10, 3]), 6).unwrap(), 18);
        let head = p(&[6, 3, 3, 2]);
        assert_eq!(
            compact_eigenvalue_ones(&head, 0).unwrap(),
            head.eigenvalue().unwrap()
        );
        assert!(matches!(
            compact_eigenvalue_ones(&p(&[3, 1]), 2),
            Err(Error::HeadPartBelowTwo { index: 1, part: 1 })
        ));
    }

    #[test]
    fn expand_examples() {
        let c = CompactPartition::new(vec![3], 0, 0).unwrap();
        assert_eq!(c.expand(), p(&[3]));
        let c = CompactPartition::new(vec![2], 1, 1).unwrap();
        assert_eq!(c.expand(), p(&[2, 2, 1]));
        let c = CompactPartition::new(vec![], 2, 1).unwrap();
        assert_eq!(c.expand(), p(&[2, 2, 1]));
        assert!(matches!(
            CompactPartition::new(vec![3, 1], 1, 0),
            Err(Error::NotNonincreasing { .. })
        ));
        assert!(matches!(
            CompactPartition::new(vec![3, 4], 0, 0),
            Err(Error::NotNonincreasing { index: 1, .. })
        ));
        assert!(matches!(
            CompactPartition::new(vec![3, 1], 0, 2),
            Err(Error::HeadPartBelowTwo { .. })
        ));
    }

    #[test]
    fn json_is_a_plain_array() {
        let part = p(&[5, 4, 4, 2, 2, 2, 1, 1]);
        let json = serde_json::to_string(&part).unwrap();
        assert_eq!(json, "[5,4,4,2,2,2,1,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, part);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
