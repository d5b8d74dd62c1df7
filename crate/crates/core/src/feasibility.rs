//! Exact feasibility of the convex-domination system behind vertex tests.
//!
//! `target` is dominated by the hull of `points` when there are
//! `lambda_q >= 0` with `sum lambda_q = 1` and `sum lambda_q * q <= target`
//! componentwise. The system is solved by a phase-one simplex over exact
//! rationals with Bland's rule. The slack variables start in the basis, so only
//! the convexity row needs an artificial variable.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exponent::Exponent;
use crate::Rational;

pub fn convex_dominated(points: &[&Exponent], target: &Exponent) -> bool {
    let m = target.dim();
    let k = points.len();
    if k == 0 {
        return false;
    }
    // Columns: lambda_0..lambda_{k-1}, slack_0..slack_{m-1}, artificial.
    let cols = k + m + 1;
    let art = k + m;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m + 1);
    for c in 0..m {
        let mut row = alloc::vec![Rational::zero(); cols];
        for (j, q) in points.iter().enumerate() {
            row[j] = Rational::from_integer(q.coords()[c].into());
        }
        row[k + c] = Rational::one();
        tab.push(row);
        rhs.push(Rational::from_integer(target.coords()[c].into()));
    }
    let mut conv = alloc::vec![Rational::zero(); cols];
    for v in conv.iter_mut().take(k) {
        *v = Rational::one();
    }
    conv[art] = Rational::one();
    tab.push(conv);
    rhs.push(Rational::one());

    let mut basis: Vec<usize> = (0..m).map(|c| k + c).chain(core::iter::once(art)).collect();
    // Reduced costs of "minimise the artificial" expressed in the nonbasic variables.
    let mut cost = alloc::vec![Rational::zero(); cols];
    for v in cost.iter_mut().take(k) {
        *v = -Rational::one();
    }

    loop {
        if !basis.contains(&art) {
            return true;
        }
        let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) else {
            let r = basis
                .iter()
                .position(|&b| b == art)
                .expect("artificial is basic");
            return rhs[r].is_zero();
        };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..tab.len() {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[r] / &tab[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // The objective is bounded below by zero, so a pivot row always exists.
        let (pr, _) = leave.expect("bounded phase-one problem");
        pivot(&mut tab, &mut rhs, &mut cost, pr, enter);
        basis[pr] = enter;
    }
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    pr: usize,
    pc: usize,
) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    rhs[pr] *= &inv;
    let prow = tab[pr].clone();
    let prhs = rhs[pr].clone();
    for r in 0..tab.len() {
        if r == pr || tab[r][pc].is_zero() {
            continue;
        }
        let f = tab[r][pc].clone();
        for (v, p) in tab[r].iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        rhs[r] -= &f * &prhs;
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
}
