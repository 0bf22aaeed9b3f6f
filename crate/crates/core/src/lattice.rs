//! Integer row reduction to Hermite normal form, with the unimodular transform.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) struct Hermite {
    /// Nonzero rows in echelon form: positive pivots, entries above each pivot
    /// reduced into `[0, pivot)`.
    pub rows: Vec<Vec<i128>>,
    /// Pivot column of each row in `rows`.
    pub pivots: Vec<usize>,
    /// `transform[i]` expresses `rows[i]` in terms of the input rows.
    pub transform: Vec<Vec<i128>>,
    /// Integer relations among the input rows (a basis of the left kernel).
    pub kernel: Vec<Vec<i128>>,
}

pub(crate) fn hermite(input: &[Vec<i128>], ncols: usize) -> Hermite {
    let r = input.len();
    let mut m: Vec<Vec<i128>> = input.to_vec();
    let mut u: Vec<Vec<i128>> = (0..r)
        .map(|i| {
            let mut row = vec![0i128; r];
            row[i] = 1;
            row
        })
        .collect();
    let mut p = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if p == r {
            break;
        }
        loop {
            // smallest nonzero entry among the remaining rows becomes the pivot
            let best = (p..r).filter(|&i| m[i][col] != 0).min_by_key(|&i| m[i][col].abs());
            let Some(best) = best else { break };
            m.swap(p, best);
            u.swap(p, best);
            let mut done = true;
            for i in p + 1..r {
                if m[i][col] != 0 {
                    let q = m[i][col].div_euclid(m[p][col]);
                    sub_row(&mut m, &mut u, i, p, q);
                    if m[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[p][col] == 0 {
            continue;
        }
        if m[p][col] < 0 {
            for x in m[p].iter_mut() {
                *x = -*x;
            }
            for x in u[p].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..p {
            let q = m[i][col].div_euclid(m[p][col]);
            if q != 0 {
                sub_row(&mut m, &mut u, i, p, q);
            }
        }
        pivots.push(col);
        p += 1;
    }
    let kernel = u.split_off(p);
    m.truncate(p);
    Hermite { rows: m, pivots, transform: u, kernel }
}

fn sub_row(m: &mut [Vec<i128>], u: &mut [Vec<i128>], target: usize, src: usize, q: i128) {
    let (a, b) = pick(m, target, src);
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * y;
    }
    let (a, b) = pick(u, target, src);
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * y;
    }
}

fn pick<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

impl Hermite {
    /// Writes `x` as an integer combination of `rows`, if it lies in their span.
    pub fn solve(&self, x: &[i128]) -> Option<Vec<i128>> {
        let mut rem = x.to_vec();
        let mut coeffs = vec![0i128; self.rows.len()];
        for (k, (row, &col)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if rem[col] % row[col] != 0 {
                return None;
            }
            let q = rem[col] / row[col];
            if q != 0 {
                for (a, b) in rem.iter_mut().zip(row) {
                    *a -= q * b;
                }
            }
            coeffs[k] = q;
        }
        rem.iter().all(|&v| v == 0).then_some(coeffs)
    }

    /// Like [`Hermite::solve`], but expressed over the original input rows.
    pub fn solve_input(&self, x: &[i128]) -> Option<Vec<i128>> {
        let c = self.solve(x)?;
        let n = self.transform.first().map_or(self.kernel.first().map_or(0, Vec::len), Vec::len);
        let mut out = vec![0i128; n];
        for (ck, t) in c.iter().zip(&self.transform) {
            for (o, v) in out.iter_mut().zip(t) {
                *o += ck * v;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_of_small_lattice() {
        // lattice generated by (2,4), (3,3) and 6Z^2
        let rows = vec![vec![2, 4], vec![3, 3], vec![6, 0], vec![0, 6]];
        let h = hermite(&rows, 2);
        assert_eq!(h.rows, vec![vec![1, 5], vec![0, 6]]);
        assert_eq!(h.kernel.len(), 2);
        for k in &h.kernel {
            let s0: i128 = k.iter().zip(&rows).map(|(c, r)| c * r[0]).sum();
            let s1: i128 = k.iter().zip(&rows).map(|(c, r)| c * r[1]).sum();
            assert_eq!((s0, s1), (0, 0));
        }
        for (t, row) in h.transform.iter().zip(&h.rows) {
            for col in 0..2 {
                let s: i128 = t.iter().zip(&rows).map(|(c, r)| c * r[col]).sum();
                assert_eq!(s, row[col]);
            }
        }
        assert_eq!(h.solve(&[1, 5]), Some(vec![1, 0]));
        assert_eq!(h.solve(&[0, 1]), None);
        let c = h.solve_input(&[2, 4]).unwrap();
        let s: Vec<i128> = (0..2).map(|col| c.iter().zip(&rows).map(|(a, r)| a * r[col]).sum()).collect();
        assert_eq!(s, vec![2, 4]);
    }

    #[test]
    fn zero_columns() {
        let h = hermite(&[vec![], vec![]], 0);
        assert!(h.rows.is_empty());
        assert_eq!(h.kernel.len(), 2);
    }
}
