use super::Q;

/// Finds `y` with `a·y ≥ 1` for every row `a`, or `None` if none exists.
///
/// Scaling makes this equivalent to strict feasibility of the homogeneous
/// system `a·y > 0`. Solved by a phase-one simplex with Bland's rule on the
/// split `y = p - q`, surplus and artificial variables.
pub fn strictly_feasible(rows: &[Vec<Q>]) -> Option<Vec<Q>> {
    let m = rows.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let d = rows[0].len();
    // columns: p (d), q (d), surplus (m), artificial (m), then rhs
    let ncols = 2 * d + 2 * m;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m + 1);
    for (i, a) in rows.iter().enumerate() {
        assert_eq!(a.len(), d, "ragged constraint matrix");
        let mut r = vec![Q::zero(); ncols + 1];
        for j in 0..d {
            r[j] = a[j].clone();
            r[d + j] = -&a[j];
        }
        r[2 * d + i] = Q::int(-1);
        r[2 * d + m + i] = Q::one();
        r[ncols] = Q::one();
        t.push(r);
    }
    // objective row: minimize sum of artificials, stored as reduced costs
    let mut obj = vec![Q::zero(); ncols + 1];
    for r in &t {
        for (c, v) in r.iter().enumerate() {
            if c < 2 * d + m || c == ncols {
                obj[c] = &obj[c] - v;
            }
        }
    }
    t.push(obj);
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * d + m + i).collect();

    while let Some(enter) = (0..ncols).find(|&c| t[m][c].signum() < 0) {
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].signum() > 0 {
                let ratio = &t[i][ncols] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pr, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }

    if !t[m][ncols].is_zero() {
        return None;
    }
    let mut y = vec![Q::zero(); d];
    for (i, &b) in basis.iter().enumerate() {
        if b < d {
            y[b] = &y[b] + &t[i][ncols];
        } else if b < 2 * d {
            y[b - d] = &y[b - d] - &t[i][ncols];
        }
    }
    debug_assert!(rows.iter().all(|a| dot(a, &y) >= Q::one()));
    Some(y)
}

pub(crate) fn dot(a: &[Q], y: &[Q]) -> Q {
    a.iter().zip(y).fold(Q::zero(), |acc, (x, z)| &acc + &(x * z))
}

fn pivot(t: &mut [Vec<Q>], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for v in t[pr].iter_mut() {
        if !v.is_zero() {
            *v = &*v / &p;
        }
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (c, pv) in prow.iter().enumerate() {
            if !pv.is_zero() {
                row[c] = &row[c] - &(&f * pv);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter().map(|r| r.iter().map(|x| Q::int(*x)).collect()).collect()
    }

    #[test]
    fn feasible_and_infeasible() {
        let y = strictly_feasible(&rows(&[&[1, 0], &[0, 1], &[1, -1]])).unwrap();
        assert!(y[0] > y[1] && y[1] > Q::zero());
        assert!(strictly_feasible(&rows(&[&[1, 0], &[-1, 0]])).is_none());
        assert!(strictly_feasible(&rows(&[&[1, 1], &[-1, 0], &[0, -1]])).is_none());
        assert!(strictly_feasible(&rows(&[&[1, 1], &[-1, 0]])).is_some());
    }
}
