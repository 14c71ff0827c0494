//! Hom spaces by exhaustive enumeration over small prime fields.

use std::collections::HashSet;

use omega_core::Module;

pub type Mat = Vec<Vec<u64>>;
pub type Hom = Vec<Mat>;

fn to_mat(m: &omega_core::Matrix) -> Mat {
    m.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect()
}

fn mul(a: &Mat, b: &Mat, rows: usize, inner: usize, cols: usize, p: u64) -> Mat {
    let mut out = vec![vec![0; cols]; rows];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = (0..inner).map(|k| a[r][k] * b[k][c]).sum::<u64>() % p;
        }
    }
    out
}

/// Every module map `m -> n`, as per-vertex matrices.
pub fn homs(m: &Module, n: &Module) -> Vec<Hom> {
    let alg = m.algebra();
    let p = u64::from(alg.field().characteristic());
    let (dm, dn) = (m.dims(), n.dims());
    let len: usize = (0..dm.len()).map(|v| dm[v] * dn[v]).sum();
    let (mm, nm): (Vec<Mat>, Vec<Mat>) = (m.maps().iter().map(to_mat).collect(), n.maps().iter().map(to_mat).collect());
    let mut out = Vec::new();
    for code in 0..p.pow(len as u32) {
        let mut c = code;
        let h: Hom = (0..dm.len())
            .map(|v| {
                (0..dn[v])
                    .map(|_| {
                        (0..dm[v])
                            .map(|_| {
                                let d = c % p;
                                c /= p;
                                d
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let commutes = alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            let (u, v) = (a.source, a.target);
            mul(&nm[ai], &h[u], dn[v], dn[u], dm[u], p) == mul(&h[v], &mm[ai], dn[v], dm[v], dm[u], p)
        });
        if commutes {
            out.push(h);
        }
    }
    out
}

fn compose(g: &Hom, f: &Hom, dims: (&[usize], &[usize], &[usize]), p: u64) -> Hom {
    let (a, b, c) = dims;
    (0..a.len()).map(|v| mul(&g[v], &f[v], c[v], b[v], a[v], p)).collect()
}

fn log_p(n: usize, p: u64) -> usize {
    let (mut n, mut d) = (n, 0);
    while n > 1 {
        n /= p as usize;
        d += 1;
    }
    d
}

/// `(dim Hom(m, n), dim of the quotient by maps factoring through some member of `through`)`.
pub fn stable_dims(m: &Module, n: &Module, through: &[Module]) -> (usize, usize) {
    let p = u64::from(m.algebra().field().characteristic());
    let all = homs(m, n);
    let mut span: HashSet<Hom> = HashSet::new();
    span.insert(homs(m, n).into_iter().find(|h| h.iter().flatten().flatten().all(|&x| x == 0)).unwrap());
    for w in through {
        for u in homs(m, w) {
            for v in homs(w, n) {
                let c = compose(&v, &u, (m.dims(), w.dims(), n.dims()), p);
                let c = &c;
                let fresh: Vec<Hom> = span
                    .iter()
                    .flat_map(|s| {
                        (1..p).map(move |k| {
                            s.iter()
                                .zip(c)
                                .map(|(a, b)| {
                                    a.iter()
                                        .zip(b)
                                        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| (x + k * y) % p).collect())
                                        .collect()
                                })
                                .collect::<Hom>()
                        })
                    })
                    .collect();
                span.extend(fresh);
            }
        }
    }
    let total = log_p(all.len(), p);
    (total, total - log_p(span.len(), p))
}
