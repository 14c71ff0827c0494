//! Brute-force `Ext^1` by counting extensions.
//!
//! Every extension `0 -> N -> E -> M -> 0` is isomorphic to one whose arrow
//! matrices are block upper triangular `[[N_a, X_a], [0, M_a]]`. The tuples
//! `X` satisfying the relations form `Z`, the split ones
//! `N_a h_u - h_v M_a` form `B`, and `|Ext^1| = |Z| / |B|`. Both sets are
//! found by exhaustive enumeration with plain integer arithmetic.

use std::collections::HashSet;

use omega_core::Module;

type Mat = Vec<Vec<u64>>;

fn mul(a: &Mat, b: &Mat, inner: usize, rows: usize, cols: usize, p: u64) -> Mat {
    let mut out = vec![vec![0; cols]; rows];
    for r in 0..rows {
        for c in 0..cols {
            let mut s = 0;
            for k in 0..inner {
                s += a[r][k] * b[k][c];
            }
            out[r][c] = s % p;
        }
    }
    out
}

fn block(n: &Mat, x: &Mat, m: &Mat, nr: usize, nc: usize, mr: usize, mc: usize) -> Mat {
    let mut out = vec![vec![0; nc + mc]; nr + mr];
    for r in 0..nr {
        for c in 0..nc {
            out[r][c] = n[r][c];
        }
        for c in 0..mc {
            out[r][nc + c] = x[r][c];
        }
    }
    for r in 0..mr {
        for c in 0..mc {
            out[nr + r][nc + c] = m[r][c];
        }
    }
    out
}

fn tuples(len: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    })
}

fn to_mat(m: &omega_core::Matrix) -> Mat {
    m.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect()
}

fn reshape(flat: &[u64], rows: usize, cols: usize) -> Mat {
    (0..rows).map(|r| flat[r * cols..(r + 1) * cols].to_vec()).collect()
}

/// `dim Ext^1(m, n)` over the prime field of the modules.
pub fn ext1_by_counting(m: &Module, n: &Module) -> usize {
    let alg = m.algebra();
    let p = u64::from(alg.field().characteristic());
    let arrows = alg.quiver().arrows();
    let (dm, dn) = (m.dims(), n.dims());
    let shapes: Vec<(usize, usize)> = arrows.iter().map(|a| (dn[a.target], dm[a.source])).collect();
    let x_len: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let mm: Vec<Mat> = m.maps().iter().map(to_mat).collect();
    let nm: Vec<Mat> = n.maps().iter().map(to_mat).collect();

    let split = |flat: &[u64]| -> Vec<Mat> {
        let mut off = 0;
        shapes
            .iter()
            .map(|&(r, c)| {
                let x = reshape(&flat[off..off + r * c], r, c);
                off += r * c;
                x
            })
            .collect()
    };

    let mut cocycles = 0usize;
    for flat in tuples(x_len, p) {
        let xs = split(&flat);
        let ok = alg.relations().relations().iter().all(|rel| {
            let first = &arrows[rel[0]];
            let mut acc = block(
                &nm[rel[0]],
                &xs[rel[0]],
                &mm[rel[0]],
                dn[first.target],
                dn[first.source],
                dm[first.target],
                dm[first.source],
            );
            let cols = dn[first.source] + dm[first.source];
            let mut rows = dn[first.target] + dm[first.target];
            for &ai in &rel[1..] {
                let a = &arrows[ai];
                let e = block(&nm[ai], &xs[ai], &mm[ai], dn[a.target], dn[a.source], dm[a.target], dm[a.source]);
                let r2 = dn[a.target] + dm[a.target];
                acc = mul(&e, &acc, rows, r2, cols, p);
                rows = r2;
            }
            acc.iter().all(|r| r.iter().all(|&v| v == 0))
        });
        if ok {
            cocycles += 1;
        }
    }

    let h_shapes: Vec<(usize, usize)> = (0..dm.len()).map(|v| (dn[v], dm[v])).collect();
    let h_len: usize = h_shapes.iter().map(|(r, c)| r * c).sum();
    let mut boundaries = HashSet::new();
    for flat in tuples(h_len, p) {
        let mut off = 0;
        let hs: Vec<Mat> = h_shapes
            .iter()
            .map(|&(r, c)| {
                let h = reshape(&flat[off..off + r * c], r, c);
                off += r * c;
                h
            })
            .collect();
        let mut b = Vec::with_capacity(x_len);
        for (ai, a) in arrows.iter().enumerate() {
            let (u, v) = (a.source, a.target);
            let left = mul(&nm[ai], &hs[u], dn[u], dn[v], dm[u], p);
            let right = mul(&hs[v], &mm[ai], dm[v], dn[v], dm[u], p);
            for r in 0..dn[v] {
                for c in 0..dm[u] {
                    b.push((left[r][c] + p - right[r][c]) % p);
                }
            }
        }
        boundaries.insert(b);
    }

    let mut ratio = cocycles / boundaries.len();
    assert_eq!(ratio * boundaries.len(), cocycles, "cocycle count must be a multiple of the coboundary count");
    let mut dim = 0;
    while ratio > 1 {
        assert_eq!(ratio % p as usize, 0);
        ratio /= p as usize;
        dim += 1;
    }
    dim
}
