//! Seeded random generators for the matrix classes, used by the randomized
//! verification suites.

use rand::Rng;

use crate::factorization::{jacobi_to_matrix, JacobiFactor, JacobiKind};
use crate::monge::{staircase_reconstruct, StaircaseDecomposition};
use crate::rational::{rat_int, Rat};
use crate::series::{vandermonde_tp2c, SeriesMatrix, SeriesRat};
use crate::trop::{TropMatrix, TropScalar};

/// A small random rational with numerator in `[-bound, bound]` and
/// denominator in `[1, dmax]`.
pub fn rand_rat(rng: &mut impl Rng, bound: i64, dmax: i64) -> Rat {
    Rat::new(
        rng.gen_range(-bound..=bound).into(),
        rng.gen_range(1..=dmax).into(),
    )
}

/// Random tropical scalar, `-inf` with the given probability.
pub fn rand_trop(rng: &mut impl Rng, p_bottom: f64, bound: i64, dmax: i64) -> TropScalar {
    if rng.gen_bool(p_bottom) {
        TropScalar::NegInf
    } else {
        TropScalar::Finite(rand_rat(rng, bound, dmax))
    }
}

/// Unstructured random matrix.
pub fn rand_trop_matrix(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    p_bottom: f64,
) -> TropMatrix {
    TropMatrix::from_fn(rows, cols, |_, _| rand_trop(rng, p_bottom, 5, 3))
}

/// Random finite Monge matrix, built from random offsets and nonnegative
/// staircase coefficients.
pub fn rand_monge(rng: &mut impl Rng, rows: usize, cols: usize) -> TropMatrix {
    let d = StaircaseDecomposition {
        u: (0..rows).map(|_| rand_rat(rng, 4, 2)).collect(),
        v: (0..cols).map(|_| rand_rat(rng, 4, 2)).collect(),
        lambda: (0..rows.saturating_sub(1))
            .map(|_| {
                (0..cols.saturating_sub(1))
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            rat_int(0)
                        } else {
                            Rat::new(rng.gen_range(0..=6).into(), rng.gen_range(1..=2).into())
                        }
                    })
                    .collect()
            })
            .collect(),
    };
    staircase_reconstruct(&d).expect("nonnegative staircase coefficients")
}

/// Random finite strict Monge matrix (all staircase coefficients positive).
pub fn rand_strict_monge(rng: &mut impl Rng, rows: usize, cols: usize) -> TropMatrix {
    let d = StaircaseDecomposition {
        u: (0..rows).map(|_| rand_rat(rng, 4, 2)).collect(),
        v: (0..cols).map(|_| rand_rat(rng, 4, 2)).collect(),
        lambda: (0..rows.saturating_sub(1))
            .map(|_| {
                (0..cols.saturating_sub(1))
                    .map(|_| Rat::new(rng.gen_range(1..=6).into(), rng.gen_range(1..=2).into()))
                    .collect()
            })
            .collect(),
    };
    staircase_reconstruct(&d).expect("positive staircase coefficients")
}

/// A random sequence of tropical Jacobi factors.
pub fn rand_jacobi_factors(rng: &mut impl Rng, n: usize, count: usize) -> Vec<JacobiFactor> {
    (0..count)
        .map(|_| {
            let kind = match rng.gen_range(0..3) {
                0 => JacobiKind::Lower,
                1 => JacobiKind::Upper,
                _ => JacobiKind::Diag,
            };
            let index = match kind {
                JacobiKind::Diag => rng.gen_range(0..n),
                _ => rng.gen_range(0..n.saturating_sub(1).max(1)),
            };
            JacobiFactor {
                kind,
                index,
                value: rand_rat(rng, 4, 2),
            }
        })
        .collect()
}

/// Random tropical totally nonnegative matrix with a finite permanent:
/// a product of random Jacobi factors (possibly with `-inf` patterns),
/// mixed with fully finite Monge samples.
pub fn rand_tn_finite_per(rng: &mut impl Rng, n: usize) -> TropMatrix {
    if rng.gen_bool(0.4) {
        return rand_monge(rng, n, n);
    }
    let count = rng.gen_range(0..=2 * n);
    let factors = rand_jacobi_factors(rng, n, count);
    let mut acc = TropMatrix::identity(n);
    for f in &factors {
        acc = acc
            .matmul(&jacobi_to_matrix(f, n).expect("index in range"))
            .expect("square");
    }
    acc
}

/// Multiplicative perturbation of a Vandermonde matrix that stays inside
/// the 2x2 ratio class for the given constant; strictness is preserved.
pub fn rand_tn2c_perturbed(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    c: &Rat,
) -> SeriesMatrix {
    let base = vandermonde_tp2c(rows, cols, c);
    // ratios of the base are >= C + 1; perturbing within 1 +/- 1/(9(C+1))
    // keeps every quadruple ratio strictly above C
    let den = num_bigint::BigInt::from(9) * (c + rat_int(1)).ceil().to_integer();
    SeriesMatrix::from_fn(rows, cols, |i, j| {
        let eps = Rat::new(rng.gen_range(-1..=1).into(), den.clone());
        base.get(i, j) * &SeriesRat::constant(rat_int(1) + eps)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::{is_tn_trop, is_tp_trop};
    use crate::series::is_tn2c;
    use crate::trop::permanent_assignment;
    use rand::SeedableRng;

    #[test]
    fn generators_hit_their_classes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for _ in 0..60 {
            let a = rand_monge(&mut rng, 3, 4);
            assert!(is_tn_trop(&a).tn_trop);
            let s = rand_strict_monge(&mut rng, 3, 3);
            assert!(is_tp_trop(&s).tp_trop);
            let t = rand_tn_finite_per(&mut rng, 3);
            assert!(is_tn_trop(&t).tn_trop);
            assert!(permanent_assignment(&t).unwrap().is_finite());
            let c = rat_int(4);
            let v = rand_tn2c_perturbed(&mut rng, 3, 4, &c);
            assert!(is_tn2c(&v, &c, true));
        }
    }
}
