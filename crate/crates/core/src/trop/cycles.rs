//! Maximal cycle means (Karp) and tropical diagonal dominance.

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rat};
use crate::trop::{TropMatrix, TropScalar};

/// Strongly connected components of the digraph on `0..n` with edges
/// `adj[u]`, by iterative Tarjan.
fn strongly_connected_components(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    #[derive(Clone)]
    struct NodeState {
        index: usize,
        lowlink: usize,
        on_stack: bool,
        visited: bool,
    }
    let mut state = vec![
        NodeState {
            index: 0,
            lowlink: 0,
            on_stack: false,
            visited: false,
        };
        n
    ];
    let mut counter = 0usize;
    let mut stack: Vec<usize> = Vec::new();
    let mut components = Vec::new();

    for start in 0..n {
        if state[start].visited {
            continue;
        }
        // call stack of (node, next child index)
        let mut calls: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some(&mut (v, ref mut child)) = calls.last_mut() {
            if *child == 0 {
                state[v].visited = true;
                state[v].index = counter;
                state[v].lowlink = counter;
                counter += 1;
                stack.push(v);
                state[v].on_stack = true;
            }
            if *child < adj[v].len() {
                let w = adj[v][*child];
                *child += 1;
                if !state[w].visited {
                    calls.push((w, 0));
                } else if state[w].on_stack {
                    state[v].lowlink = state[v].lowlink.min(state[w].index);
                }
            } else {
                calls.pop();
                if let Some(&(parent, _)) = calls.last() {
                    let low = state[v].lowlink;
                    state[parent].lowlink = state[parent].lowlink.min(low);
                }
                if state[v].lowlink == state[v].index {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        state[w].on_stack = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    components.push(component);
                }
            }
        }
    }
    components
}

/// Maximum over all elementary cycles `i1 -> ... -> ik -> i1` of the mean
/// weight `(A[i1][i2] + ... + A[ik][i1]) / k`, `-inf` if the digraph of
/// finite entries has no cycle.  Karp's algorithm, run per strongly
/// connected component.
pub fn max_cycle_mean(a: &TropMatrix) -> Result<TropScalar> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "cycle mean of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| a.get(i, j).is_finite()).collect())
        .collect();
    let mut best: Option<Rat> = None;
    for component in strongly_connected_components(n, &adj) {
        if let Some(mean) = karp_component(a, &component) {
            best = Some(match best {
                Some(b) if b >= mean => b,
                _ => mean,
            });
        }
    }
    Ok(best.map_or(TropScalar::NegInf, TropScalar::Finite))
}

/// Karp's formula on one strongly connected component: with `D_k(v)` the
/// maximal weight of a k-edge walk from a fixed source, the maximum cycle
/// mean is `max_v min_k (D_m(v) - D_k(v)) / (m - k)`.
fn karp_component(a: &TropMatrix, component: &[usize]) -> Option<Rat> {
    let m = component.len();
    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();
    for (iu, &u) in component.iter().enumerate() {
        for (iv, &v) in component.iter().enumerate() {
            if let Some(w) = a.get(u, v).as_rat() {
                edges.push((iu, iv, w.clone()));
            }
        }
    }
    if edges.is_empty() {
        return None;
    }

    let mut dist: Vec<Vec<Option<Rat>>> = vec![vec![None; m]; m + 1];
    dist[0][0] = Some(rat_int(0));
    for k in 1..=m {
        for &(u, v, ref w) in &edges {
            if let Some(du) = &dist[k - 1][u] {
                let cand = du + w;
                if dist[k][v].as_ref().is_none_or(|cur| cand > *cur) {
                    dist[k][v] = Some(cand);
                }
            }
        }
    }

    let mut best: Option<Rat> = None;
    for v in 0..m {
        let Some(dm) = &dist[m][v] else { continue };
        let mut inner: Option<Rat> = None;
        for k in 0..m {
            if let Some(dk) = &dist[k][v] {
                let mean = (dm - dk) / rat_int((m - k) as i64);
                if inner.as_ref().is_none_or(|cur| mean < *cur) {
                    inner = Some(mean);
                }
            }
        }
        if let Some(val) = inner {
            if best.as_ref().is_none_or(|cur| val > *cur) {
                best = Some(val);
            }
        }
    }
    best
}

/// Tropical (strict) diagonal dominance of every principal-pattern
/// submatrix: for each index set `I`, the identity attains (uniquely, when
/// strict) the permanent of `A_{I,I}`.
///
/// Decomposing permutations into cycles, this holds iff every elementary
/// cycle of length >= 2 has weight at most (strictly below) the product of
/// the diagonal entries on its support, which is checked via the maximal
/// cycle mean of the diagonally normalized matrix.  `-inf` diagonal entries
/// are handled by excluding their vertices from any finite cycle.
pub fn is_diag_dominant(a: &TropMatrix, strict: bool) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "diagonal dominance of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n <= 1 {
        return Ok(true);
    }
    let bottom_diag: Vec<usize> = (0..n).filter(|&i| a.get(i, i).is_neg_inf()).collect();
    if strict && !bottom_diag.is_empty() {
        // A 2x2 principal submatrix on a -inf diagonal entry can never be
        // strictly dominated.
        return Ok(false);
    }
    if !bottom_diag.is_empty() {
        // No vertex with a -inf diagonal may lie on a cycle of finite
        // off-diagonal entries.
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && a.get(i, j).is_finite())
                    .collect()
            })
            .collect();
        for component in strongly_connected_components(n, &adj) {
            if component.len() >= 2 && component.iter().any(|v| bottom_diag.contains(v)) {
                return Ok(false);
            }
        }
    }
    // Cycles on the finite-diagonal vertices: normalize by the column's
    // diagonal entry so a cycle of the normalized matrix weighs
    // (cycle weight) - (diagonal weight on its support).
    let finite: Vec<usize> = (0..n).filter(|i| !bottom_diag.contains(i)).collect();
    if finite.len() < 2 {
        return Ok(true);
    }
    let k = finite.len();
    let normalized = TropMatrix::from_fn(k, k, |i, j| {
        if i == j {
            return TropScalar::NegInf;
        }
        let (gi, gj) = (finite[i], finite[j]);
        match (a.get(gi, gj), a.get(gj, gj)) {
            (TropScalar::Finite(w), TropScalar::Finite(d)) => TropScalar::Finite(w - d),
            _ => TropScalar::NegInf,
        }
    });
    let mean = max_cycle_mean(&normalized)?;
    Ok(match mean {
        TropScalar::NegInf => true,
        TropScalar::Finite(r) => {
            if strict {
                r < rat_int(0)
            } else {
                r <= rat_int(0)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::trop::{permanent_bruteforce, DEFAULT_ENUM_CAP};
    use rand::{Rng, SeedableRng};

    fn fin(n: i64) -> TropScalar {
        TropScalar::from_int(n)
    }

    fn ninf() -> TropScalar {
        TropScalar::NegInf
    }

    /// All elementary cycles, by direct enumeration.
    fn brute_max_cycle_mean(a: &TropMatrix) -> TropScalar {
        let n = a.rows();
        let mut best = TropScalar::NegInf;
        // cycles rooted at their minimal vertex
        fn extend(
            a: &TropMatrix,
            root: usize,
            path: &mut Vec<usize>,
            weight: &Rat,
            best: &mut TropScalar,
        ) {
            let last = *path.last().unwrap();
            if let Some(w) = a.get(last, root).as_rat() {
                let mean =
                    TropScalar::Finite((weight + w) / crate::rational::rat_int(path.len() as i64));
                if mean > *best {
                    *best = mean;
                }
            }
            for next in (root + 1)..a.rows() {
                if path.contains(&next) {
                    continue;
                }
                if let Some(w) = a.get(last, next).as_rat() {
                    path.push(next);
                    extend(a, root, path, &(weight + w), best);
                    path.pop();
                }
            }
        }
        for root in 0..n {
            let mut path = vec![root];
            extend(a, root, &mut path, &crate::rational::rat_int(0), &mut best);
        }
        best
    }

    #[test]
    fn self_loops_and_two_cycles() {
        let id = TropMatrix::identity(2);
        assert_eq!(max_cycle_mean(&id).unwrap(), TropScalar::one());

        // single 2-cycle of mean (1 - 1) / 2
        let two = TropMatrix::from_rows(vec![vec![ninf(), fin(1)], vec![fin(-1), ninf()]]).unwrap();
        assert_eq!(max_cycle_mean(&two).unwrap(), fin(0));

        let none = TropMatrix::from_rows(vec![vec![ninf(), fin(5)], vec![ninf(), ninf()]]).unwrap();
        assert!(max_cycle_mean(&none).unwrap().is_neg_inf());
    }

    #[test]
    fn karp_matches_cycle_enumeration_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for trial in 0..300 {
            let n = rng.gen_range(1..=6);
            let a = TropMatrix::from_fn(n, n, |_, _| {
                if rng.gen_bool(0.35) {
                    ninf()
                } else {
                    TropScalar::finite(rat(rng.gen_range(-12..=12), rng.gen_range(1..=3)))
                }
            });
            assert_eq!(
                max_cycle_mean(&a).unwrap(),
                brute_max_cycle_mean(&a),
                "trial {trial}:\n{a}"
            );
        }
    }

    /// Subset-enumeration oracle straight from the definitions.
    fn brute_diag_dominant(a: &TropMatrix, strict: bool) -> bool {
        let n = a.rows();
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let sub = a.submatrix(&idx, &idx).unwrap();
            let id_weight = TropScalar::product(sub.diagonal().iter());
            let exp = permanent_bruteforce(&sub, DEFAULT_ENUM_CAP).unwrap();
            if strict {
                if idx.len() == 1 {
                    continue;
                }
                let unique_identity = exp.weight == id_weight
                    && exp.maximizers.len() == 1
                    && exp.identity_is_optimal();
                if !(id_weight.is_finite() && unique_identity) {
                    return false;
                }
            } else if exp.weight != id_weight {
                return false;
            }
        }
        true
    }

    #[test]
    fn diag_dominance_examples() {
        let id = TropMatrix::identity(3);
        assert!(is_diag_dominant(&id, true).unwrap());
        assert!(is_diag_dominant(&id, false).unwrap());

        let bad = TropMatrix::from_rows(vec![vec![fin(0), fin(1)], vec![fin(1), fin(0)]]).unwrap();
        assert!(!is_diag_dominant(&bad, false).unwrap());

        // ties are dominant but not strictly
        let tie = TropMatrix::from_rows(vec![vec![fin(0), fin(0)], vec![fin(0), fin(0)]]).unwrap();
        assert!(is_diag_dominant(&tie, false).unwrap());
        assert!(!is_diag_dominant(&tie, true).unwrap());
    }

    #[test]
    fn diag_dominance_matches_subset_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for trial in 0..400 {
            let n = rng.gen_range(1..=5);
            let a = TropMatrix::from_fn(n, n, |_, _| {
                if rng.gen_bool(0.3) {
                    ninf()
                } else {
                    fin(rng.gen_range(-4..=4))
                }
            });
            for strict in [false, true] {
                assert_eq!(
                    is_diag_dominant(&a, strict).unwrap(),
                    brute_diag_dominant(&a, strict),
                    "trial {trial}, strict {strict}:\n{a}"
                );
            }
        }
    }
}
