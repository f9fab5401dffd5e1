//! Membership tests for the tropical totally positive / totally nonnegative
//! classes, the initial-minor criterion, and reconstruction from solid
//! minors.
//!
//! With finite entries both classes reduce to consecutive solid 2x2 checks
//! (the strict / weak Monge property).  Once `-inf` entries appear the
//! consecutive reduction fails, so the nonnegative test falls back to all
//! 2x2 minors, which still decides the full class.

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::subsets::ksubsets;
use crate::trop::{
    classify_minor, is_diag_dominant, permanent_bruteforce, MinorClass, MinorTag, TropMatrix,
    TropScalar, DEFAULT_ENUM_CAP,
};

/// One failing minor, 0-based index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub class: MinorClass,
}

/// Class flags for one matrix.  `dd`/`ndd` (diagonal dominance of every
/// principal-pattern submatrix) are only defined for square matrices and
/// are `None` otherwise.  `witness` is the lexicographically first minor
/// failing the strongest class the producing test asked about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub tp_trop: bool,
    pub tn_trop: bool,
    pub tp2: bool,
    pub tn2: bool,
    pub dd: Option<bool>,
    pub ndd: Option<bool>,
    pub witness: Option<MinorWitness>,
}

fn classify_2x2(a: &TropMatrix, i: usize, ip: usize, j: usize, jp: usize) -> MinorClass {
    classify_minor(a, &[i, ip], &[j, jp], DEFAULT_ENUM_CAP).expect("2x2 minor within cap")
}

/// First entry equal to `-inf`, as a 1x1 Bottom witness.
fn first_bottom_entry(a: &TropMatrix) -> Option<MinorWitness> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j).is_neg_inf() {
                return Some(MinorWitness {
                    rows: vec![i],
                    cols: vec![j],
                    class: MinorClass {
                        tag: MinorTag::Bottom,
                        weight: TropScalar::NegInf,
                    },
                });
            }
        }
    }
    None
}

/// First consecutive solid 2x2 minor failing the requested (strict or
/// weak) Monge inequality.
fn first_consecutive_failure(a: &TropMatrix, strict: bool) -> Option<MinorWitness> {
    for i in 0..a.rows().saturating_sub(1) {
        for j in 0..a.cols().saturating_sub(1) {
            let class = classify_2x2(a, i, i + 1, j, j + 1);
            let ok = if strict {
                class.is_positive()
            } else {
                class.is_nonnegative()
            };
            if !ok {
                return Some(MinorWitness {
                    rows: vec![i, i + 1],
                    cols: vec![j, j + 1],
                    class,
                });
            }
        }
    }
    None
}

/// First 2x2 minor over all row/column pairs (lex order) failing tropical
/// positivity resp. nonnegativity.
fn first_2x2_failure(a: &TropMatrix, strict: bool) -> Option<MinorWitness> {
    for i in 0..a.rows() {
        for ip in i + 1..a.rows() {
            for j in 0..a.cols() {
                for jp in j + 1..a.cols() {
                    let class = classify_2x2(a, i, ip, j, jp);
                    let ok = if strict {
                        class.is_positive()
                    } else {
                        class.is_nonnegative()
                    };
                    if !ok {
                        return Some(MinorWitness {
                            rows: vec![i, ip],
                            cols: vec![j, jp],
                            class,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Flags for all four 2x2-determined classes plus diagonal dominance.
/// The full classes use the consecutive reduction on finite matrices and
/// the all-pairs scan otherwise; the 2x2-bounded classes always scan all
/// pairs, straight from their definitions.
fn base_report(a: &TropMatrix) -> PositivityReport {
    let finite = a.is_finite();
    let tn2 = first_2x2_failure(a, false).is_none();
    let tp2 = finite && first_2x2_failure(a, true).is_none();
    let (tp_trop, tn_trop) = if finite {
        (
            first_consecutive_failure(a, true).is_none(),
            first_consecutive_failure(a, false).is_none(),
        )
    } else {
        (false, tn2)
    };
    let (dd, ndd) = if a.is_square() {
        (
            Some(is_diag_dominant(a, false).expect("square")),
            Some(is_diag_dominant(a, true).expect("square")),
        )
    } else {
        (None, None)
    };
    PositivityReport {
        tp_trop,
        tn_trop,
        tp2,
        tn2,
        dd,
        ndd,
        witness: None,
    }
}

/// Tropical total positivity: all entries finite and every consecutive
/// solid 2x2 minor strictly Monge.  The witness is the first failing minor
/// (a 1x1 Bottom if an entry is `-inf`).
pub fn is_tp_trop(a: &TropMatrix) -> PositivityReport {
    let mut report = base_report(a);
    if !report.tp_trop {
        report.witness = if a.is_finite() {
            first_consecutive_failure(a, true)
        } else {
            first_bottom_entry(a)
        };
    }
    report
}

/// Tropical total nonnegativity.  Finite matrices use the consecutive
/// solid 2x2 reduction; matrices with `-inf` entries check all 2x2 minors
/// (the consecutive reduction fails there).
pub fn is_tn_trop(a: &TropMatrix) -> PositivityReport {
    let mut report = base_report(a);
    if !report.tn_trop {
        report.witness = if a.is_finite() {
            first_consecutive_failure(a, false)
        } else {
            first_2x2_failure(a, false)
        };
    }
    report
}

/// The initial-minor criterion for finite matrices: classifies only the
/// `n*m` solid minors hugging the top or left edge and requires them all
/// tropically positive; equivalent to `is_tp_trop`.
pub fn is_tp_trop_via_initial(a: &TropMatrix, cap: usize) -> Result<bool> {
    if !a.is_finite() {
        return Err(Error::InfiniteEntry);
    }
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let size = i.min(j) + 1;
            let rows: Vec<usize> = (i + 1 - size..=i).collect();
            let cols: Vec<usize> = (j + 1 - size..=j).collect();
            if !classify_minor(a, &rows, &cols, cap)?.is_positive() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Classification of all initial minors, used to exhibit matrices whose
/// initial minors are nonnegative but which are not totally nonnegative.
pub fn initial_minors(a: &TropMatrix, cap: usize) -> Result<Vec<MinorWitness>> {
    let mut out = Vec::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let size = i.min(j) + 1;
            let rows: Vec<usize> = (i + 1 - size..=i).collect();
            let cols: Vec<usize> = (j + 1 - size..=j).collect();
            let class = classify_minor(a, &rows, &cols, cap)?;
            out.push(MinorWitness { rows, cols, class });
        }
    }
    Ok(out)
}

/// Rebuilds the unique finite tropical totally nonnegative matrix with the
/// given first row, first column, and grid of consecutive solid 2x2
/// permanents, using `A[i][j] = M[i-1][j-1] - A[i-1][j-1]`; the result is
/// verified against the inputs and the class.
pub fn reconstruct_from_solid_minors(
    first_row: &[Rat],
    first_col: &[Rat],
    minors: &[Vec<Rat>],
) -> Result<TropMatrix> {
    let n = first_col.len();
    let m = first_row.len();
    if n == 0 || m == 0 {
        return Err(Error::Dimension("empty first row or column".into()));
    }
    if first_row[0] != first_col[0] {
        return Err(Error::InconsistentData(
            "first row and first column disagree at the corner".into(),
        ));
    }
    if minors.len() != n - 1 || minors.iter().any(|r| r.len() != m - 1) {
        return Err(Error::Dimension(format!(
            "expected a {}x{} grid of solid minors",
            n - 1,
            m - 1
        )));
    }

    let mut grid: Vec<Vec<Rat>> = vec![vec![Rat::from_integer(0.into()); m]; n];
    grid[0] = first_row.to_vec();
    for i in 1..n {
        grid[i][0] = first_col[i].clone();
        for j in 1..m {
            grid[i][j] = &minors[i - 1][j - 1] - &grid[i - 1][j - 1];
        }
    }
    let a = TropMatrix::from_fn(n, m, |i, j| TropScalar::Finite(grid[i][j].clone()));

    // the recurrence assumed the identity attains each solid permanent;
    // verify that and the class itself
    for i in 0..n - 1 {
        for j in 0..m - 1 {
            let per = a.get(i, j).mul(a.get(i + 1, j + 1)).add(
                &a.get(i, j + 1).mul(a.get(i + 1, j)),
            );
            if per != TropScalar::Finite(minors[i][j].clone()) {
                return Err(Error::InconsistentData(format!(
                    "solid minor ({}, {}) is {} but {} was supplied",
                    i + 1,
                    j + 1,
                    per,
                    minors[i][j]
                )));
            }
        }
    }
    if !is_tn_trop(&a).tn_trop {
        return Err(Error::InconsistentData(
            "reconstructed matrix is not tropical totally nonnegative".into(),
        ));
    }
    Ok(a)
}

/// Classifies every minor of every size straight from the definitions,
/// bypassing the 2x2 reductions; the test oracle for the class membership
/// functions.
pub fn bruteforce_class_oracle(a: &TropMatrix, cap: usize) -> Result<PositivityReport> {
    let limit = a.rows().min(a.cols());
    let mut tp = true;
    let mut tn = true;
    let mut tp2 = true;
    let mut tn2 = true;
    let mut witness: Option<MinorWitness> = None;
    for size in 1..=limit {
        for rows in ksubsets(a.rows(), size) {
            for cols in ksubsets(a.cols(), size) {
                let class = classify_minor(a, &rows, &cols, cap)?;
                if !class.is_positive() {
                    tp = false;
                    if size <= 2 {
                        tp2 = false;
                    }
                }
                if !class.is_nonnegative() {
                    tn = false;
                    if size <= 2 {
                        tn2 = false;
                    }
                    if witness.is_none() {
                        witness = Some(MinorWitness { rows: rows.clone(), cols: cols.clone(), class });
                    }
                }
            }
        }
    }
    let (dd, ndd) = if a.is_square() {
        let n = a.rows();
        let mut dd_ok = true;
        let mut ndd_ok = true;
        for idx in (1..=n).flat_map(|k| ksubsets(n, k)) {
            let sub = a.submatrix(&idx, &idx)?;
            let id_weight = TropScalar::product(sub.diagonal().iter());
            let exp = permanent_bruteforce(&sub, cap)?;
            if exp.weight != id_weight {
                dd_ok = false;
            }
            if idx.len() >= 2 {
                let unique_identity = id_weight.is_finite()
                    && exp.weight == id_weight
                    && exp.maximizers.len() == 1
                    && exp.identity_is_optimal();
                if !unique_identity {
                    ndd_ok = false;
                }
            }
        }
        (Some(dd_ok), Some(ndd_ok))
    } else {
        (None, None)
    };
    Ok(PositivityReport {
        tp_trop: tp,
        tn_trop: tn,
        tp2,
        tn2,
        dd,
        ndd,
        witness,
    })
}
