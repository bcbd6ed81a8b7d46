//! Minimum-distance search: exact enumeration and a randomized
//! information-set upper bound.
//!
//! The exact search walks the kernel of the side's check matrix as
//! (non-degenerate coset) x (degenerate space): an outer loop over nonzero
//! combinations of coset representatives and an inner Gray-code walk over
//! the row space of the opposing matrix. Every visited vector is a
//! non-degenerate codeword, so no membership test is needed in the hot
//! loop; each step is one word-parallel XOR plus a popcount.

use crate::css::{CssCode, Distance};
use crate::error::{Error, Result};
use crate::f2::{BinMatrix, BinVec, Echelon};
use crate::rng::Rng;

pub const DEFAULT_BUDGET: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Z,
    X,
}

impl Side {
    /// Check matrix whose kernel carries this side's codewords, and the
    /// opposing matrix whose rows are the degenerate directions.
    fn matrices<'a>(&self, code: &'a CssCode) -> (&'a BinMatrix, &'a BinMatrix) {
        match self {
            Side::Z => (code.hx(), code.hz()),
            Side::X => (code.hz(), code.hx()),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Z => write!(f, "z"),
            Side::X => write!(f, "x"),
        }
    }
}

/// Exact minimum weight over codewords of the given side that are not
/// degenerate, i.e. not in the row space of the opposing check matrix.
/// `Infinity` when no such codeword exists (k = 0).
///
/// Refuses when the kernel dimension exceeds `budget` (the enumeration
/// visits `2^dim` vectors).
pub fn exact_distance(code: &CssCode, side: Side, budget: usize) -> Result<Distance> {
    exact_distance_jobs(code, side, budget, 1)
}

/// As [`exact_distance`], splitting the enumeration over `jobs` worker
/// threads. The result does not depend on the worker count.
pub fn exact_distance_jobs(
    code: &CssCode,
    side: Side,
    budget: usize,
    jobs: usize,
) -> Result<Distance> {
    let (check, opposing) = side.matrices(code);
    let kernel = check.kernel_basis();
    if kernel.rows() > budget {
        return Err(Error::BudgetExceeded {
            required: kernel.rows(),
            budget,
        });
    }
    let stabilizers = Echelon::new(opposing).basis_rows();
    let logicals = coset_representatives(&kernel, opposing);
    if logicals.is_empty() {
        return Ok(Distance::Infinity);
    }
    Ok(Distance::Finite(min_weight_in_cosets(
        &logicals,
        &stabilizers,
        jobs.max(1),
    )))
}

/// Exact minimum distance of the classical code `ker H`; `Infinity` when
/// the kernel is trivial.
pub fn classical_distance(h: &BinMatrix, budget: usize) -> Result<Distance> {
    classical_distance_jobs(h, budget, 1)
}

pub fn classical_distance_jobs(h: &BinMatrix, budget: usize, jobs: usize) -> Result<Distance> {
    let kernel = h.kernel_basis();
    if kernel.rows() > budget {
        return Err(Error::BudgetExceeded {
            required: kernel.rows(),
            budget,
        });
    }
    if kernel.rows() == 0 {
        return Ok(Distance::Infinity);
    }
    let logicals: Vec<BinVec> = (0..kernel.rows()).map(|i| kernel.row_vec(i)).collect();
    Ok(Distance::Finite(min_weight_in_cosets(
        &logicals,
        &[],
        jobs.max(1),
    )))
}

/// Kernel vectors reduced to a basis of the quotient modulo the opposing
/// row space; one representative per logical direction.
fn coset_representatives(kernel: &BinMatrix, opposing: &BinMatrix) -> Vec<BinVec> {
    let stab = Echelon::new(opposing);
    let mut logical_echelon: Vec<(usize, BinVec)> = Vec::new(); // (pivot, reduced row)
    let mut reps = Vec::new();
    for i in 0..kernel.rows() {
        let mut v = kernel.row_vec(i);
        stab.reduce(&mut v);
        for (p, row) in &logical_echelon {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        let pivot = v.ones().next();
        if let Some(pivot) = pivot {
            logical_echelon.push((pivot, v.clone()));
            reps.push(v);
        }
    }
    reps
}

/// Minimum weight over (nonzero combination of `logicals`) + (any
/// combination of `stabilizers`), by Gray-code enumeration.
fn min_weight_in_cosets(logicals: &[BinVec], stabilizers: &[BinVec], jobs: usize) -> u64 {
    let k = logicals.len();
    let s = stabilizers.len();
    assert!(k > 0);
    let outer: u64 = (1u64 << k) - 1; // nonzero logical combinations

    // split the degenerate space so that every job gets work even when the
    // logical count is small
    let mut prefix_bits = 0usize;
    while (outer as u128) * (1u128 << prefix_bits) < 8 * jobs as u128 && prefix_bits < s {
        prefix_bits += 1;
    }
    let tasks: u64 = outer << prefix_bits;
    let inner_bits = s - prefix_bits;

    let task_minimum = |task: u64| -> u64 {
        let combo = (task >> prefix_bits) + 1;
        let prefix = task & ((1u64 << prefix_bits) - 1);
        let mut v = BinVec::zeros(logicals[0].len());
        for (b, vec) in logicals.iter().enumerate() {
            if combo >> b & 1 == 1 {
                v.xor_assign(vec);
            }
        }
        for (b, vec) in stabilizers[..prefix_bits].iter().enumerate() {
            if prefix >> b & 1 == 1 {
                v.xor_assign(vec);
            }
        }
        let inner = &stabilizers[prefix_bits..];
        let mut best = v.weight();
        for step in 1u64..(1u64 << inner_bits) {
            let flip = step.trailing_zeros() as usize;
            v.xor_assign(&inner[flip]);
            best = best.min(v.weight());
        }
        best
    };

    if jobs == 1 || tasks == 1 {
        return (0..tasks).map(task_minimum).min().unwrap();
    }

    let counter = std::sync::atomic::AtomicU64::new(0);
    let global = std::sync::Mutex::new(u64::MAX);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tasks as usize) {
            scope.spawn(|| {
                let mut local = u64::MAX;
                loop {
                    let task = counter.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if task >= tasks {
                        break;
                    }
                    local = local.min(task_minimum(task));
                }
                let mut g = global.lock().unwrap();
                *g = (*g).min(local);
            });
        }
    });
    let result = *global.lock().unwrap();
    result
}

/// Weight of the lightest non-degenerate codeword found by randomized
/// information-set resampling: repeatedly row-reduce the kernel basis
/// along a random column order and inspect the resulting rows.
///
/// `trials` counts candidate rows inspected. The result is a sound upper
/// bound on the exact distance and is deterministic for a fixed seed.
pub fn distance_upper(code: &CssCode, side: Side, seed: u64, trials: u64) -> Result<u64> {
    let (check, opposing) = side.matrices(code);
    information_set_upper(check, Some(opposing), seed, trials)
}

/// Classical variant: upper bound on the minimum distance of `ker H`.
pub fn classical_distance_upper(h: &BinMatrix, seed: u64, trials: u64) -> Result<u64> {
    information_set_upper(h, None, seed, trials)
}

fn information_set_upper(
    check: &BinMatrix,
    opposing: Option<&BinMatrix>,
    seed: u64,
    trials: u64,
) -> Result<u64> {
    let gens = check.kernel_basis();
    let n = gens.cols();
    let degen = opposing.map(Echelon::new);
    let logical_dim = match &degen {
        Some(e) => gens.rows().saturating_sub(e.rank()),
        None => gens.rows(),
    };
    if logical_dim == 0 {
        return Err(Error::NoCodewords);
    }
    let mut rng = Rng::new(seed);
    let mut best = u64::MAX;
    let mut examined = 0u64;
    while examined < trials {
        let order = rng.permutation(n);
        let mut work = gens.clone();
        reduce_along(&mut work, &order);
        for i in 0..work.rows() {
            if examined >= trials {
                break;
            }
            examined += 1;
            let row = work.row_vec(i);
            if row.is_zero() {
                continue;
            }
            if let Some(e) = &degen {
                if e.contains(&row) {
                    continue;
                }
            }
            best = best.min(row.weight());
        }
    }
    if best == u64::MAX {
        // spanned space is entirely degenerate; cannot happen when k >= 1
        return Err(Error::NoCodewords);
    }
    Ok(best)
}

/// Row-reduce `m` choosing pivots by scanning columns in the given order.
/// Rows stay expressed in the original coordinates.
fn reduce_along(m: &mut BinMatrix, column_order: &[usize]) {
    let mut r = 0;
    for &col in column_order {
        if r == m.rows() {
            break;
        }
        let Some(pivot) = (r..m.rows()).find(|&i| m.get(i, col)) else {
            continue;
        };
        m.swap_rows(r, pivot);
        for i in 0..m.rows() {
            if i != r && m.get(i, col) {
                m.xor_row_into(r, i);
            }
        }
        r += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::css::CssCode;

    /// [[4,1]] toy: HX = [1 1 1 1], HZ = rows (1 1 0 0), (0 0 1 1).
    fn small_code() -> CssCode {
        let hx = BinMatrix::from_dense(&[&[1, 1, 1, 1]]);
        let hz = BinMatrix::from_dense(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        CssCode::new(hx, hz).unwrap()
    }

    #[test]
    fn exact_distance_small_code() {
        let code = small_code();
        assert_eq!(code.dimension(), 1);
        // Z side: ker HX has dim 3; non-degenerate minimum is weight 2
        assert_eq!(
            exact_distance(&code, Side::Z, 10).unwrap(),
            Distance::Finite(2)
        );
        // X side: ker HZ = {0000, 1100, 0011, 1111}, degenerate {0000, 1111};
        // the lightest non-degenerate codeword is 1100
        assert_eq!(
            exact_distance(&code, Side::X, 10).unwrap(),
            Distance::Finite(2)
        );
    }

    #[test]
    fn swap_exchanges_sides() {
        let code = small_code();
        let swapped = code.swap();
        assert_eq!(
            exact_distance(&code, Side::Z, 10).unwrap(),
            exact_distance(&swapped, Side::X, 10).unwrap()
        );
        assert_eq!(
            exact_distance(&code, Side::X, 10).unwrap(),
            exact_distance(&swapped, Side::Z, 10).unwrap()
        );
    }

    #[test]
    fn zero_dimension_gives_infinity() {
        let hx = BinMatrix::from_dense(&[&[1, 1]]);
        let hz = BinMatrix::from_dense(&[&[1, 1]]);
        let code = CssCode::new(hx, hz).unwrap();
        assert_eq!(code.dimension(), 0);
        assert_eq!(exact_distance(&code, Side::Z, 10).unwrap(), Distance::Infinity);
    }

    #[test]
    fn budget_refusal_names_required_budget() {
        let code = small_code();
        match exact_distance(&code, Side::Z, 2) {
            Err(Error::BudgetExceeded { required: 3, budget: 2 }) => {}
            other => panic!("expected budget refusal, got {:?}", other),
        }
    }

    #[test]
    fn job_count_does_not_change_result() {
        let code = small_code();
        let d1 = exact_distance_jobs(&code, Side::Z, 10, 1).unwrap();
        let d4 = exact_distance_jobs(&code, Side::Z, 10, 4).unwrap();
        assert_eq!(d1, d4);
    }

    #[test]
    fn classical_distance_examples() {
        // repetition code [3,1,3]
        let h = BinMatrix::from_dense(&[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(classical_distance(&h, 10).unwrap(), Distance::Finite(3));
        // full-rank square matrix: no codewords
        let inv = BinMatrix::identity(3);
        assert_eq!(classical_distance(&inv, 10).unwrap(), Distance::Infinity);
    }

    #[test]
    fn upper_bound_is_sound_and_deterministic() {
        let code = small_code();
        let d = exact_distance(&code, Side::Z, 10).unwrap().finite().unwrap();
        let u1 = distance_upper(&code, Side::Z, 7, 200).unwrap();
        let u2 = distance_upper(&code, Side::Z, 7, 200).unwrap();
        assert_eq!(u1, u2);
        assert!(u1 >= d);
        // tiny search space: the estimator hits the optimum here
        assert_eq!(u1, d);
    }

    #[test]
    fn upper_bound_refuses_k_zero() {
        let hx = BinMatrix::from_dense(&[&[1, 1]]);
        let hz = BinMatrix::from_dense(&[&[1, 1]]);
        let code = CssCode::new(hx, hz).unwrap();
        assert!(matches!(
            distance_upper(&code, Side::Z, 1, 100),
            Err(Error::NoCodewords)
        ));
    }
}
