//! Explicit partition families realizing every integer of `[0, n]`.
//!
//! The segment `[0, n]` is split into a low segment `S1`, a set `A1` of three
//! values just above it, a segment `S2`, and the top seven values `A2`. Each
//! family below is a partition-valued formula of `(n, lambda)` with its own
//! range of validity. All fractions in the formulas are evaluated exactly;
//! a remainder means the parity bookkeeping is wrong and is reported as
//! [`Error::ParityViolation`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{CompactPartition, Partition};
use crate::witness::{ChainStep, WitnessRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(v: i64) -> Parity {
        if v.rem_euclid(2) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    fn name(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// Which `n` a family applies to, before its lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NClass {
    Any,
    Parity(Parity),
    /// `n mod 4` equal to the given residue.
    Mod4(u8),
}

impl NClass {
    pub fn admits(self, n: u32) -> bool {
        match self {
            NClass::Any => true,
            NClass::Parity(p) => Parity::of(i64::from(n)) == p,
            NClass::Mod4(r) => n % 4 == u32::from(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Zero,
    S1LowOdd,
    S1OneEven,
    S1LowEven,
    S1MidOdd,
    S1MidEven,
    /// The single value `floor((n - 3) / 4) + 1`, one partition per residue of `n mod 4`.
    S1Special { residue: u8 },
    /// Cases 1..=4: (odd n, odd lambda), (odd, even), (even, odd), (even, even).
    S2 { case: u8 },
    /// Rows 1..=3 target `(n+1)/2, (n+3)/2, (n+5)/2` for odd n and `(n-2)/2, n/2, (n+2)/2` for even n.
    A1 { row: u8, parity: Parity },
    /// Row `r` in 1..=7 targets `n - (r - 1)`.
    A2 { row: u8, parity: Parity },
}

/// The admissible eigenvalues of a family at one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyRange {
    pub lo: i64,
    pub hi: i64,
    pub lambda_parity: Option<Parity>,
}

impl FamilyRange {
    fn span(lo: i64, hi: i64) -> Self {
        Self {
            lo,
            hi,
            lambda_parity: None,
        }
    }

    fn single(v: i64) -> Self {
        Self::span(v, v)
    }

    pub fn contains(&self, lam: i64) -> bool {
        lam >= self.lo
            && lam <= self.hi
            && self.lambda_parity.is_none_or(|p| Parity::of(lam) == p)
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        (self.lo..=self.hi).filter(move |&v| self.contains(v))
    }
}

/// Polynomial `(c[0] n^2 + c[1] n lam + c[2] n + c[3] lam^2 + c[4] lam + c[5]) / 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Poly8(pub [i64; 6]);

impl Poly8 {
    /// Eight times the polynomial's value.
    pub fn numerator(&self, n: i64, lam: i64) -> i64 {
        let c = self.0;
        c[0] * n * n + c[1] * n * lam + c[2] * n + c[3] * lam * lam + c[4] * lam + c[5]
    }

    /// Polynomial in `n` only, `(a n^2 + b n + c) / 8`.
    const fn in_n(a: i64, b: i64, c: i64) -> Self {
        Poly8([a, 0, b, 0, 0, c])
    }
}

/// Published closed forms for `lambda(head)` and the deduction `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForms {
    pub head: Poly8,
    pub deduction: Poly8,
}

/// A family's output before it is wrapped into a [`WitnessRecord`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub family: FamilyId,
    pub n: u32,
    pub lam: i64,
    pub compact: CompactPartition,
    pub partition: Partition,
}

impl FamilyWitness {
    pub fn into_record(self) -> WitnessRecord {
        WitnessRecord::new(
            self.n,
            self.lam,
            self.partition,
            vec![ChainStep::Family(self.family)],
        )
    }
}

fn div(num: i64, den: i64) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::ParityViolation {
            context: "family part formula",
        });
    }
    Ok(num / den)
}

fn ceil_div(num: i64, den: i64) -> i64 {
    num.div_euclid(den) + i64::from(num.rem_euclid(den) != 0)
}

impl FamilyId {
    pub fn all() -> Vec<FamilyId> {
        let mut ids = vec![
            FamilyId::Zero,
            FamilyId::S1LowOdd,
            FamilyId::S1OneEven,
            FamilyId::S1LowEven,
            FamilyId::S1MidOdd,
            FamilyId::S1MidEven,
        ];
        ids.extend((0..4).map(|residue| FamilyId::S1Special { residue }));
        ids.extend((1..=4).map(|case| FamilyId::S2 { case }));
        for parity in [Parity::Odd, Parity::Even] {
            ids.extend((1..=3).map(|row| FamilyId::A1 { row, parity }));
        }
        for parity in [Parity::Odd, Parity::Even] {
            ids.extend((1..=7).map(|row| FamilyId::A2 { row, parity }));
        }
        ids
    }

    /// Which group the family belongs to, for first-part bounds.
    pub fn group(self) -> FamilyGroup {
        match self {
            FamilyId::S2 { .. } => FamilyGroup::S2,
            FamilyId::A1 { .. } => FamilyGroup::A1,
            FamilyId::A2 { .. } => FamilyGroup::A2,
            _ => FamilyGroup::S1,
        }
    }

    pub fn n_class(self) -> NClass {
        use Parity::*;
        match self {
            FamilyId::Zero => NClass::Any,
            FamilyId::S1LowOdd | FamilyId::S1MidOdd => NClass::Parity(Odd),
            FamilyId::S1OneEven | FamilyId::S1LowEven | FamilyId::S1MidEven => {
                NClass::Parity(Even)
            }
            FamilyId::S1Special { residue } => NClass::Mod4(residue),
            FamilyId::S2 { case } => NClass::Parity(if case <= 2 { Odd } else { Even }),
            FamilyId::A1 { parity, .. } | FamilyId::A2 { parity, .. } => NClass::Parity(parity),
        }
    }

    /// Smallest `n` of the right class for which the family is valid.
    pub fn n_min(self) -> u32 {
        use Parity::*;
        match self {
            FamilyId::Zero => 1,
            FamilyId::S1LowOdd => 7,
            FamilyId::S1OneEven => 14,
            FamilyId::S1LowEven => 12,
            FamilyId::S1MidOdd => 5,
            FamilyId::S1MidEven => 10,
            FamilyId::S1Special { residue } => [20, 13, 22, 19][residue as usize],
            FamilyId::S2 { case } => [11, 21, 6, 16][case as usize - 1],
            FamilyId::A1 { row, parity } => match parity {
                Odd => [25, 9, 13][row as usize - 1],
                Even => [32, 2, 28][row as usize - 1],
            },
            FamilyId::A2 { row, parity } => match parity {
                Odd => [3, 7, 11, 9, 11, 19, 13][row as usize - 1],
                Even => [8, 6, 20, 10, 16, 14, 12][row as usize - 1],
            },
        }
    }

    /// Admissible targets at `n`, or `None` when the family does not apply.
    pub fn range_at(self, n: u32) -> Option<FamilyRange> {
        if !self.n_class().admits(n) || n < self.n_min() {
            return None;
        }
        let m = i64::from(n);
        let range = match self {
            FamilyId::Zero => {
                if m % 2 == 0 && m < 4 {
                    return None;
                }
                FamilyRange::single(0)
            }
            FamilyId::S1LowOdd => FamilyRange::span(1, (m - 3).div_euclid(4)),
            FamilyId::S1OneEven => FamilyRange::single(1),
            FamilyId::S1LowEven => FamilyRange::span(2, (m - 4).div_euclid(4)),
            FamilyId::S1MidOdd => FamilyRange::span(ceil_div(m + 3, 4), (m - 1) / 2),
            FamilyId::S1MidEven => FamilyRange::span(ceil_div(m + 2, 4), (m - 4) / 2),
            FamilyId::S1Special { .. } => FamilyRange::single((m - 3).div_euclid(4) + 1),
            FamilyId::S2 { case } => {
                let (lo, hi, parity) = match case {
                    1 => ((m + 3) / 2, m - 4, Parity::Odd),
                    2 => ((m + 7) / 2, m - 7, Parity::Even),
                    3 => ((m + 4) / 2, m - 1, Parity::Odd),
                    _ => ((m + 4) / 2, m - 6, Parity::Even),
                };
                FamilyRange {
                    lo,
                    hi,
                    lambda_parity: Some(parity),
                }
            }
            FamilyId::A1 { row, parity } => {
                let r = i64::from(row);
                match parity {
                    Parity::Odd => FamilyRange::single((m + 2 * r - 1) / 2),
                    Parity::Even => FamilyRange::single((m + 2 * r - 4) / 2),
                }
            }
            FamilyId::A2 { row, .. } => FamilyRange::single(m - i64::from(row) + 1),
        };
        range.values().next()?;
        Some(range)
    }

    /// Closed-form polynomials for `lambda(head)` and `f`, where they are known.
    pub fn closed_forms(self) -> Option<ClosedForms> {
        use Parity::*;
        let (head, deduction) = match self {
            FamilyId::S2 { case } => match case {
                1 => ([1, -2, -2, 2, 6, -29], [1, -2, -2, 2, -2, -29]),
                2 => ([1, -2, 0, 2, -2, -9], [1, -2, 0, 2, -10, -9]),
                3 => ([1, -2, 0, 2, 4, -6], [1, -2, 0, 2, -4, -6]),
                _ => ([1, -2, -2, 2, 4, -24], [1, -2, -2, 2, -4, -24]),
            },
            FamilyId::A1 { row, parity } => {
                let (h, f) = match (parity, row) {
                    (Odd, 1) => ((1, -24, 119), (1, -28, 115)),
                    (Odd, 2) => ((1, -4, 19), (1, -8, 7)),
                    (Odd, _) => ((1, -8, 31), (1, -12, 11)),
                    (Even, 1) => ((1, -34, 232), (1, -38, 240)),
                    (Even, 2) => ((1, 2, 0), (1, -2, 0)),
                    (Even, _) => ((1, -26, 112), (1, -30, 104)),
                };
                return Some(ClosedForms {
                    head: Poly8::in_n(h.0, h.1, h.2),
                    deduction: Poly8::in_n(f.0, f.1, f.2),
                });
            }
            FamilyId::A2 { row, parity } => {
                let (h, f) = match (parity, row) {
                    (Odd, 1) => ((1, 4, 3), (1, -4, 3)),
                    (Odd, 2) => ((1, 0, -1), (1, -8, 7)),
                    (Odd, 3) => ((1, -4, -5), (1, -12, 11)),
                    (Odd, 4) => ((1, 0, -33), (1, -8, -9)),
                    (Odd, 5) => ((1, -4, -21), (1, -12, 11)),
                    (Odd, 6) => ((1, -16, 55), (1, -24, 95)),
                    (Odd, _) => ((1, -4, -61), (1, -12, -13)),
                    (Even, 1) => ((1, -2, 16), (1, -10, 16)),
                    (Even, 2) => ((1, 2, -8), (1, -6, 0)),
                    (Even, 3) => ((1, -18, 104), (1, -26, 120)),
                    (Even, 4) => ((1, -2, -24), (1, -10, 0)),
                    (Even, 5) => ((1, -10, 0), (1, -18, 32)),
                    (Even, 6) => ((1, -6, -40), (1, -14, 0)),
                    (Even, _) => ((1, -2, -72), (1, -10, -24)),
                };
                return Some(ClosedForms {
                    head: Poly8::in_n(h.0, h.1, h.2),
                    deduction: Poly8::in_n(f.0, f.1, f.2),
                });
            }
            _ => return None,
        };
        Some(ClosedForms {
            head: Poly8(head),
            deduction: Poly8(deduction),
        })
    }

    /// Builds the family's partition for `(n, lam)`.
    pub fn construct(self, n: u32, lam: i64) -> Result<FamilyWitness> {
        let out_of_range = || Error::OutOfFamilyRange {
            family: self.to_string(),
            n,
            lam,
        };
        let range = self.range_at(n).ok_or_else(out_of_range)?;
        if !range.contains(lam) {
            return Err(out_of_range());
        }
        let (head, t2, t1) = self.compact_parts(i64::from(n), lam)?;
        let to_part = |v: i64| u32::try_from(v).map_err(|_| out_of_range());
        let head = head
            .into_iter()
            .map(|v| if v < 1 { Err(out_of_range()) } else { to_part(v) })
            .collect::<Result<Vec<u32>>>()?;
        let compact = CompactPartition::new(head, to_part(t2)?, to_part(t1)?)?;
        let partition = compact.expand();
        Ok(FamilyWitness {
            family: self,
            n,
            lam,
            compact,
            partition,
        })
    }

    /// `(head, t2, t1)` as raw integers; the caller validates signs and order.
    fn compact_parts(self, n: i64, lam: i64) -> Result<(Vec<i64>, i64, i64)> {
        use Parity::*;
        let l = lam;
        Ok(match self {
            FamilyId::Zero => {
                if n == 1 {
                    (vec![], 0, 1)
                } else if n % 2 == 1 {
                    (vec![div(n + 1, 2)?], 0, div(n - 1, 2)?)
                } else {
                    (vec![div(n, 2)?, 2], 0, div(n - 4, 2)?)
                }
            }
            FamilyId::S1LowOdd => (
                vec![div(n - 2 * l + 1, 2)?, l + 2],
                l - 1,
                div(n - 4 * l - 1, 2)?,
            ),
            FamilyId::S1OneEven => (vec![div(n - 6, 2)?, 4, 4, 2], 0, div(n - 14, 2)?),
            FamilyId::S1LowEven => (
                vec![div(n - 2 * l, 2)?, l + 2, 3],
                l - 2,
                div(n - 4 * l - 2, 2)?,
            ),
            FamilyId::S1MidOdd => (
                vec![l + 1, div(n + 3 - 2 * l, 2)?],
                div(n - 1, 2)? - l,
                div(4 * l - n - 3, 2)?,
            ),
            FamilyId::S1MidEven => (
                vec![l + 1, div(n + 2 - 2 * l, 2)?, 3],
                div(n - 4, 2)? - l,
                div(4 * l - n - 2, 2)?,
            ),
            FamilyId::S1Special { residue } => match residue {
                0 => (vec![div(n, 4)?, div(n, 4)?, 5, 4], div(n - 20, 4)?, 1),
                1 => (vec![div(n + 3, 4)?, div(n + 3, 4)?, 4], div(n - 13, 4)?, 1),
                2 => (vec![div(n + 2, 4)?, div(n - 2, 4)?, 5, 4], div(n - 22, 4)?, 2),
                _ => (vec![div(n + 1, 4)?, div(n + 1, 4)?, 5, 3], div(n - 19, 4)?, 1),
            },
            FamilyId::S2 { case } => match case {
                1 => (
                    vec![div(l + 3, 2)?, div(n + 2 - l, 2)?, 3],
                    div(n - 4 - l, 2)?,
                    l - div(n + 3, 2)?,
                ),
                2 => (
                    vec![div(l, 2)?, div(n + 3 - l, 2)?, 5],
                    div(n - 3 - l, 2)?,
                    l - div(n + 7, 2)?,
                ),
                3 => (
                    vec![div(l + 3, 2)?, div(n + 3 - l, 2)?],
                    div(n - 1 - l, 2)?,
                    l - div(n + 4, 2)?,
                ),
                _ => (
                    vec![div(l + 2, 2)?, div(n + 2 - l, 2)?, 4],
                    div(n - 4 - l, 2)?,
                    l - div(n + 4, 2)?,
                ),
            },
            FamilyId::A1 { row, parity } => match (parity, row) {
                (Odd, 1) => (vec![div(n - 11, 2)?, 7, 4, 3, 3], 0, div(n - 23, 2)?),
                (Odd, 2) => (vec![div(n - 1, 2)?, 4], 0, div(n - 7, 2)?),
                (Odd, _) => (vec![div(n - 3, 2)?, 5, 2], 0, div(n - 11, 2)?),
                (Even, 1) => (vec![div(n - 16, 2)?, 8, 5, 4, 3, 3], 0, div(n - 30, 2)?),
                (Even, 2) => (vec![div(n + 2, 2)?], 0, div(n - 2, 2)?),
                (Even, _) => (vec![div(n - 12, 2)?, 8, 3, 3, 3, 2], 0, div(n - 26, 2)?),
            },
            FamilyId::A2 { row, parity } => match (parity, row) {
                (Odd, 1) => (vec![div(n + 3, 2)?], 0, div(n - 3, 2)?),
                (Odd, 2) => (vec![div(n + 1, 2)?, 3], 0, div(n - 7, 2)?),
                (Odd, 3) => (vec![div(n - 1, 2)?, 4, 2], 0, div(n - 11, 2)?),
                (Odd, 4) => (vec![div(n + 1, 2)?, 2, 2], 0, div(n - 9, 2)?),
                (Odd, 5) => (vec![div(n - 1, 2)?, 3, 3], 0, div(n - 11, 2)?),
                (Odd, 6) => (vec![div(n - 7, 2)?, 5, 5, 3], 0, div(n - 19, 2)?),
                (Odd, _) => (vec![div(n - 1, 2)?, 3, 2, 2], 0, div(n - 13, 2)?),
                (Even, 1) => (vec![div(n, 2)?, 4], 0, div(n, 2)? - 4),
                (Even, 2) => (vec![div(n + 2, 2)?, 2], 0, div(n, 2)? - 3),
                (Even, 3) => (vec![div(n - 8, 2)?, 6, 5, 3], 0, div(n, 2)? - 10),
                (Even, 4) => (vec![div(n, 2)?, 3, 2], 0, div(n - 10, 2)?),
                (Even, 5) => (vec![div(n - 4, 2)?, 5, 3, 2], 0, div(n - 16, 2)?),
                (Even, 6) => (vec![div(n - 2, 2)?, 4, 2, 2], 0, div(n - 14, 2)?),
                (Even, _) => (vec![div(n, 2)?, 2, 2, 2], 0, div(n - 12, 2)?),
            },
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Zero => f.write_str("Zero"),
            FamilyId::S1LowOdd => f.write_str("S1_LowOdd"),
            FamilyId::S1OneEven => f.write_str("S1_One_Even"),
            FamilyId::S1LowEven => f.write_str("S1_LowEven"),
            FamilyId::S1MidOdd => f.write_str("S1_MidOdd"),
            FamilyId::S1MidEven => f.write_str("S1_MidEven"),
            FamilyId::S1Special { residue } => write!(f, "S1_Special_mod{residue}"),
            FamilyId::S2 { case } => write!(f, "S2_Case{case}"),
            FamilyId::A1 { row, parity } => write!(f, "A1_row{row}_{}", parity.name()),
            FamilyId::A2 { row, parity } => write!(f, "A2_row{row}_{}", parity.name()),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Accepts the display names, plus `A2_row_n_odd` / `A2_row_n-3_even`
    /// style aliases that name an A2 row by its target.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Config(format!("unknown family {s:?}"));
        if let Some(id) = FamilyId::all().into_iter().find(|id| id.to_string() == s) {
            return Ok(id);
        }
        let rest = s.strip_prefix("A2_row_n").ok_or_else(unknown)?;
        let (offset, parity) = rest.rsplit_once('_').ok_or_else(unknown)?;
        let offset: u8 = match offset {
            "" => 0,
            _ => offset
                .strip_prefix('-')
                .and_then(|d| d.parse().ok())
                .ok_or_else(unknown)?,
        };
        let parity = match parity {
            "odd" => Parity::Odd,
            "even" => Parity::Even,
            _ => return Err(unknown()),
        };
        if offset > 6 {
            return Err(unknown());
        }
        Ok(FamilyId::A2 {
            row: offset + 1,
            parity,
        })
    }
}

/// Family groups sharing a first-part bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyGroup {
    /// S1 families and the zero witness: first part at most `(n+1)/2`.
    S1,
    /// At most `(n+2)/2`.
    S2,
    /// At most `(n+2)/2`.
    A1,
    /// At most `(n+3)/2`.
    A2,
}

impl FamilyGroup {
    /// The bound `(n + c) / 2` as the additive constant `c`.
    pub fn bound_offset(self) -> u32 {
        match self {
            FamilyGroup::S1 => 1,
            FamilyGroup::S2 | FamilyGroup::A1 => 2,
            FamilyGroup::A2 => 3,
        }
    }

    /// Whether `first_part <= (n + c) / 2` over the rationals.
    pub fn admits_first_part(self, n: u32, first_part: u32) -> bool {
        2 * u64::from(first_part) <= u64::from(n) + u64::from(self.bound_offset())
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyGroup::S1 => "S1",
            FamilyGroup::S2 => "S2",
            FamilyGroup::A1 => "A1",
            FamilyGroup::A2 => "A2",
        }
    }
}

/// Upper end of `S1`: `(n-1)/2` for odd n, `(n-4)/2` for even n.
pub fn s1_upper(n: u32) -> i64 {
    let m = i64::from(n);
    if m % 2 == 1 {
        (m - 1) / 2
    } else {
        (m - 4) / 2
    }
}

/// The three values of `A1` at `n`.
pub fn a1_values(n: u32) -> [i64; 3] {
    let m = i64::from(n);
    if m % 2 == 1 {
        [(m + 1) / 2, (m + 3) / 2, (m + 5) / 2]
    } else {
        [(m - 2) / 2, m / 2, (m + 2) / 2]
    }
}

pub const S1_MIN_N: u32 = 19;
pub const S2_MIN_N: u32 = 20;
pub const A1_MIN_N: u32 = 31;
pub const A2_MIN_N: u32 = 19;

/// A partition of `n` with eigenvalue 0.
pub fn zero_witness(n: u32) -> Result<Partition> {
    Ok(FamilyId::Zero.construct(n, 0)?.partition)
}

/// Covers `S1` for `n >= 19`: zero, then the low-range family, the special
/// value, and finally the mid-range family.
pub fn s1_witness(n: u32, lam: i64) -> Result<WitnessRecord> {
    if n < S1_MIN_N || lam < 0 || lam > s1_upper(n) {
        return Err(Error::OutOfFamilyRange {
            family: "S1".to_owned(),
            n,
            lam,
        });
    }
    let order = [
        FamilyId::Zero,
        FamilyId::S1LowOdd,
        FamilyId::S1OneEven,
        FamilyId::S1LowEven,
        FamilyId::S1Special {
            residue: (n % 4) as u8,
        },
        FamilyId::S1MidOdd,
        FamilyId::S1MidEven,
    ];
    let family = order
        .into_iter()
        .find(|id| id.range_at(n).is_some_and(|r| r.contains(lam)))
        .ok_or(Error::DispatchGap { n, lam })?;
    Ok(family.construct(n, lam)?.into_record())
}

/// The S2 case for the parities of `n` and `lam`.
pub fn s2_case(n: u32, lam: i64) -> u8 {
    match (Parity::of(i64::from(n)), Parity::of(lam)) {
        (Parity::Odd, Parity::Odd) => 1,
        (Parity::Odd, Parity::Even) => 2,
        (Parity::Even, Parity::Odd) => 3,
        (Parity::Even, Parity::Even) => 4,
    }
}

/// Covers the full proven range of each S2 case for `n >= 20`.
pub fn s2_witness(n: u32, lam: i64) -> Result<WitnessRecord> {
    let family = FamilyId::S2 {
        case: s2_case(n, lam),
    };
    if n < S2_MIN_N {
        return Err(Error::OutOfFamilyRange {
            family: family.to_string(),
            n,
            lam,
        });
    }
    Ok(family.construct(n, lam)?.into_record())
}

pub fn a1_witness(n: u32, a: i64) -> Result<WitnessRecord> {
    let row = a1_values(n)
        .iter()
        .position(|&v| v == a)
        .ok_or(Error::NotInSet { set: "A1", n, target: a })?;
    let family = FamilyId::A1 {
        row: row as u8 + 1,
        parity: Parity::of(i64::from(n)),
    };
    Ok(family.construct(n, a)?.into_record())
}

pub fn a2_witness(n: u32, a: i64) -> Result<WitnessRecord> {
    let m = i64::from(n);
    if a > m || a < m - 6 {
        return Err(Error::NotInSet { set: "A2", n, target: a });
    }
    let family = FamilyId::A2 {
        row: (m - a + 1) as u8,
        parity: Parity::of(m),
    };
    Ok(family.construct(n, a)?.into_record())
}
