//! Total nonnegativity over the series field: exhaustive minor tests and
//! the 2x2 ratio classes controlled by a constant.

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::series::matrix::{det_series, SeriesMatrix};
use crate::series::seriesrat::SeriesRat;
use crate::subsets::ksubsets;

/// True iff every minor of every size is positive (strict) or nonnegative,
/// by exhaustive enumeration with exact determinants.
pub fn is_tn_series(m: &SeriesMatrix, strict: bool, cap: usize) -> Result<bool> {
    let limit = m.rows().min(m.cols());
    if limit > cap {
        return Err(Error::CapExceeded { size: limit, cap });
    }
    for size in 1..=limit {
        for rows in ksubsets(m.rows(), size) {
            for cols in ksubsets(m.cols(), size) {
                let d = det_series(&m.submatrix(&rows, &cols)?)?;
                let ok = if strict {
                    d.is_positive()
                } else {
                    d.is_nonnegative()
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Membership in the 2x2 ratio class: `M_ij * M_i'j' >= C * M_ij' * M_i'j`
/// for all `i < i'`, `j < j'` (strictly, when `strict`).
pub fn is_tn2c(m: &SeriesMatrix, c: &Rat, strict: bool) -> bool {
    let factor = SeriesRat::constant(c.clone());
    for i in 0..m.rows() {
        for ip in i + 1..m.rows() {
            for j in 0..m.cols() {
                for jp in j + 1..m.cols() {
                    let lhs = m.get(i, j) * m.get(ip, jp);
                    let rhs = &factor * &(m.get(i, jp) * m.get(ip, j));
                    let ok = if strict { lhs > rhs } else { lhs >= rhs };
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::series::lift::{canonical_lift, hadamard_vandermonde_lift, vandermonde_tp2c};
    use crate::trop::{TropMatrix, TropScalar, DEFAULT_ENUM_CAP};

    fn fin(v: i64) -> TropScalar {
        TropScalar::from_int(v)
    }

    fn s(text: &str) -> SeriesRat {
        text.parse().unwrap()
    }

    #[test]
    fn strictly_totally_positive_example() {
        let m = SeriesMatrix::from_rows(vec![
            vec![s("2*t"), s("t")],
            vec![s("1"), s("1")],
        ])
        .unwrap();
        assert!(is_tn_series(&m, true, DEFAULT_ENUM_CAP).unwrap());
    }

    #[test]
    fn all_ones_band_lift_fails_tn() {
        let a = TropMatrix::from_rows(vec![
            vec![fin(0), fin(0), TropScalar::NegInf],
            vec![fin(0), fin(0), fin(0)],
            vec![TropScalar::NegInf, fin(0), fin(0)],
        ])
        .unwrap();
        let ones = SeriesMatrix::from_fn(3, 3, |_, _| SeriesRat::one());
        let lifted = crate::series::lift::hadamard_lift(&a, &ones).unwrap();
        assert!(!is_tn_series(&lifted, false, DEFAULT_ENUM_CAP).unwrap());
        // the controlled Vandermonde coefficients repair it
        assert!(is_tn_series(&hadamard_vandermonde_lift(&a), false, DEFAULT_ENUM_CAP).unwrap());
    }

    #[test]
    fn tn2c_examples() {
        let c = rat_int(3);
        let v = vandermonde_tp2c(3, 3, &c);
        assert!(is_tn2c(&v, &c, true));

        let ones = SeriesMatrix::from_fn(2, 2, |_, _| SeriesRat::one());
        assert!(is_tn2c(&ones, &rat_int(1), false));
        assert!(!is_tn2c(&ones, &rat_int(2), false));
        assert!(!is_tn2c(&ones, &rat_int(1), true));
    }

    #[test]
    fn canonical_lift_of_monge_matrix_is_tn21() {
        // Monge example with mixed signs
        let a = TropMatrix::from_rows(vec![
            vec![fin(1), fin(0), fin(-1)],
            vec![fin(0), fin(1), fin(0)],
            vec![fin(-1), fin(0), fin(1)],
        ])
        .unwrap();
        assert!(is_tn2c(&canonical_lift(&a), &rat_int(1), false));
    }

    #[test]
    fn minor_ratio_control_implies_total_nonnegativity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let n = rng.gen_range(1..=4);
            let m = rng.gen_range(1..=4);
            let c = rat_int(((n.min(m) as i64 - 1).pow(2)).max(1));
            let base = vandermonde_tp2c(n, m, &c);
            // nudge entries multiplicatively without breaking the ratios
            let delta = rat(1, 64);
            let perturbed = SeriesMatrix::from_fn(n, m, |i, j| {
                let eps = rat(rng.gen_range(-1..=1), 1) * &delta;
                base.get(i, j) * &SeriesRat::constant(rat_int(1) + eps)
            });
            if is_tn2c(&perturbed, &c, false) {
                assert!(is_tn_series(&perturbed, false, DEFAULT_ENUM_CAP).unwrap());
            }
            if is_tn2c(&perturbed, &c, true) {
                assert!(is_tn_series(&perturbed, true, DEFAULT_ENUM_CAP).unwrap());
            }
        }
    }

    #[test]
    fn cap_guard() {
        let m = SeriesMatrix::identity(10);
        assert!(matches!(
            is_tn_series(&m, false, 9),
            Err(Error::CapExceeded { size: 10, cap: 9 })
        ));
    }
}
