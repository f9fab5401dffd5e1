//! Tropical permanents: exhaustive enumeration with parity bookkeeping,
//! a polynomial-time optimal-assignment evaluation, and the resulting
//! sign-classification of tropical minors.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::trop::{TropMatrix, TropScalar};

/// Default cap on brute-force permutation enumeration (9! ~ 3.6e5 per minor).
pub const DEFAULT_ENUM_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// The value of a tropical permanent together with the complete list of
/// optimal permutations and their parities.  The list is empty iff the
/// permanent is `-inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermanentExpansion {
    pub weight: TropScalar,
    pub maximizers: Vec<(Vec<usize>, Parity)>,
}

impl PermanentExpansion {
    pub fn has_even_maximizer(&self) -> bool {
        self.maximizers.iter().any(|(_, p)| *p == Parity::Even)
    }

    pub fn has_odd_maximizer(&self) -> bool {
        self.maximizers.iter().any(|(_, p)| *p == Parity::Odd)
    }

    /// True iff the identity permutation is among the maximizers.
    pub fn identity_is_optimal(&self) -> bool {
        self.maximizers
            .iter()
            .any(|(perm, _)| perm.iter().enumerate().all(|(i, &s)| i == s))
    }
}

/// Enumerates every permutation of a square matrix and returns the maximal
/// weight together with all permutations attaining it.
///
/// Enumeration is by Heap's algorithm, whose successive permutations differ
/// by one transposition, so the parity just alternates.
pub fn permanent_bruteforce(a: &TropMatrix, cap: usize) -> Result<PermanentExpansion> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "permanent of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }

    let mut best = TropScalar::zero();
    let mut maximizers: Vec<(Vec<usize>, Parity)> = Vec::new();
    let mut visit = |perm: &[usize], parity: Parity| {
        let mut weight = TropScalar::one();
        for (i, &j) in perm.iter().enumerate() {
            weight = weight.mul(a.get(i, j));
            if weight.is_neg_inf() {
                return;
            }
        }
        match weight.cmp(&best) {
            Ordering::Greater => {
                best = weight;
                maximizers.clear();
                maximizers.push((perm.to_vec(), parity));
            }
            Ordering::Equal => maximizers.push((perm.to_vec(), parity)),
            Ordering::Less => {}
        }
    };

    // Heap's algorithm, iterative form.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut parity = Parity::Even;
    visit(&perm, parity);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            parity = parity.flip();
            visit(&perm, parity);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    Ok(PermanentExpansion {
        weight: best,
        maximizers,
    })
}

/// Optimal-assignment value of the tropical permanent: the same number as
/// `permanent_bruteforce` but computed in polynomial time by shortest
/// augmenting paths with potentials (exact rational arithmetic); `-inf`
/// entries are forbidden edges and the result is `-inf` when no perfect
/// matching on finite entries exists.
pub fn permanent_assignment(a: &TropMatrix) -> Result<TropScalar> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "permanent of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    // Minimize the negated weights; `None` plays the role of +infinity.
    let cost: Vec<Vec<Option<Rat>>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).as_rat().map(|r| -r)).collect())
        .collect();

    // a < b where None = +infinity
    fn lt_opt(a: &Option<Rat>, b: &Option<Rat>) -> bool {
        match (a, b) {
            (Some(x), Some(y)) => x < y,
            (Some(_), None) => true,
            _ => false,
        }
    }

    let mut u = vec![Rat::from_integer(0.into()); n + 1];
    let mut v = vec![Rat::from_integer(0.into()); n + 1];
    let mut matched = vec![0usize; n + 1]; // matched[j] = row (1-based) on column j
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        matched[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<Rat>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched[j0];
            let mut delta: Option<Rat> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1].as_ref().map(|c| c - &u[i0] - &v[j]);
                if lt_opt(&cur, &minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if lt_opt(&minv[j], &delta) {
                    delta = minv[j].clone();
                    j1 = j;
                }
            }
            let Some(d) = delta else {
                // No augmenting path: some row cannot be matched on finite entries.
                return Ok(TropScalar::zero());
            };
            for j in 0..=n {
                if used[j] {
                    let row = matched[j];
                    u[row] += &d;
                    v[j] -= &d;
                } else if let Some(mv) = &mut minv[j] {
                    *mv -= &d;
                }
            }
            j0 = j1;
            if matched[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut total = TropScalar::one();
    for j in 1..=n {
        total = total.mul(a.get(matched[j] - 1, j - 1));
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorTag {
    /// All maximum-weight permutations are even.
    TropPositive,
    /// All maximum-weight permutations are odd.
    TropNegative,
    /// Maximum-weight permutations of both parities exist.
    SignSingular,
    /// The permanent is `-inf`.
    Bottom,
}

/// Sign classification of one tropical minor together with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorClass {
    pub tag: MinorTag,
    pub weight: TropScalar,
}

impl MinorClass {
    /// Tropically nonnegative: positive, sign-singular, or `-inf`.
    pub fn is_nonnegative(&self) -> bool {
        !matches!(self.tag, MinorTag::TropNegative)
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.tag, MinorTag::TropPositive)
    }
}

/// Classifies the `rows x cols` minor by enumerating its optimal
/// permutations.  Empty index sets yield the empty minor, tropically
/// positive of weight `0`.
pub fn classify_minor(
    a: &TropMatrix,
    rows: &[usize],
    cols: &[usize],
    cap: usize,
) -> Result<MinorClass> {
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!(
            "minor index sets of sizes {} and {}",
            rows.len(),
            cols.len()
        )));
    }
    if rows.is_empty() {
        return Ok(MinorClass {
            tag: MinorTag::TropPositive,
            weight: TropScalar::one(),
        });
    }
    let sub = a.submatrix(rows, cols)?;
    let exp = permanent_bruteforce(&sub, cap)?;
    let tag = if exp.weight.is_neg_inf() {
        MinorTag::Bottom
    } else {
        match (exp.has_even_maximizer(), exp.has_odd_maximizer()) {
            (true, false) => MinorTag::TropPositive,
            (false, true) => MinorTag::TropNegative,
            (true, true) => MinorTag::SignSingular,
            (false, false) => unreachable!("finite permanent without maximizers"),
        }
    };
    Ok(MinorClass {
        tag,
        weight: exp.weight,
    })
}
