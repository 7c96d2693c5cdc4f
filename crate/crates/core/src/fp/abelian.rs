//! Abelian invariants via integer diagonalization.

use super::presentation::{FpGroup, Presentation};

/// Diagonal of the Smith normal form of an integer matrix, nonzero entries
/// only, each dividing the next.
pub fn smith_diagonal(rows: &[Vec<i64>], ncols: usize) -> Vec<u64> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols);
            r.iter().map(|&x| x as i128).collect()
        })
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let p = m[t][t];
        let mut clean = true;
        for i in t + 1..nrows {
            let q = m[i][t] / p;
            if q != 0 {
                for j in t..ncols {
                    m[i][j] -= q * m[t][j];
                }
            }
            if m[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..ncols {
            let q = m[t][j] / p;
            if q != 0 {
                for i in t..nrows {
                    m[i][j] -= q * m[i][t];
                }
            }
            if m[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold an offending row into the pivot row
        let offender = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| m[i][j] % p != 0));
        if let Some(i) = offender {
            for j in t..ncols {
                let v = m[i][j];
                m[t][j] += v;
            }
            continue;
        }
        diag.push(p.unsigned_abs() as u64);
        t += 1;
    }
    diag
}

/// Invariant factors of the abelian group `Z^ncols / rowspace`, with the
/// trivial factors dropped and a `0` for each free cyclic factor.
pub fn invariants_from_relations(rows: &[Vec<i64>], ncols: usize) -> Vec<u64> {
    let d = smith_diagonal(rows, ncols);
    let mut out: Vec<u64> = d.iter().copied().filter(|&x| x != 1).collect();
    out.extend(std::iter::repeat_n(0, ncols - d.len()));
    out
}

pub fn fp_abelian_invariants(fp: &FpGroup) -> Vec<u64> {
    let rows: Vec<Vec<i64>> = fp
        .relators
        .iter()
        .map(|r| r.exponent_sums(fp.ngens))
        .collect();
    invariants_from_relations(&rows, fp.ngens)
}

/// Abelianization of the group presented by `p`, string relations included.
pub fn abelian_invariants(p: &Presentation) -> Vec<u64> {
    fp_abelian_invariants(&p.to_fp())
}
