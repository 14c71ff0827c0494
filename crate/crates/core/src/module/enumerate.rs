//! Brute-force enumeration of indecomposable representations with bounded
//! dimension vector.

use std::sync::Arc;

use super::{find_isomorphism, is_indecomposable, Module};
use crate::budget::Budget;
use crate::error::ModuleError;
use crate::linalg::Matrix;
use crate::quiver::Algebra;

fn dim_vectors(cap: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &c in cap {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=c).map(move |d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&d| d > 0));
    out.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then_with(|| b.cmp(a)));
    out
}

/// One representative per isomorphism class of indecomposable modules with
/// dimension vector at most `dim_cap`, ordered by total dimension.
pub fn enumerate_indecomposables(
    algebra: &Arc<Algebra>,
    dim_cap: &[usize],
    budget: &Budget,
) -> Result<Vec<Module>, ModuleError> {
    if dim_cap.len() != algebra.vertex_count() {
        return Err(ModuleError::WrongVertexCount { expected: algebra.vertex_count(), found: dim_cap.len() });
    }
    let field = algebra.field();
    let p = field.characteristic();
    let arrows = algebra.quiver().arrows();
    let mut reps: Vec<Module> = Vec::new();
    for dims in dim_vectors(dim_cap) {
        let shapes: Vec<(usize, usize)> = arrows.iter().map(|a| (dims[a.target], dims[a.source])).collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        if budget.enumerable(p, entries).is_none() {
            return Err(ModuleError::BudgetExceeded {
                dims,
                needed: (p as f64).powi(entries as i32),
                cap: budget.enum_cap,
            });
        }
        let start = reps.len();
        let mut digits = vec![0u32; entries];
        loop {
            let mut offset = 0;
            let maps: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let m = Matrix::from_vec(field, r, c, digits[offset..offset + r * c].to_vec());
                    offset += r * c;
                    m
                })
                .collect();
            if let Ok(m) = Module::new(algebra.clone(), dims.clone(), maps) {
                let mut seen = false;
                for r in &reps[start..] {
                    if find_isomorphism(&m, r, budget).map_err(|_| budget_error(&dims, budget))?.is_some() {
                        seen = true;
                        break;
                    }
                }
                if !seen && is_indecomposable(&m, budget).map_err(|_| budget_error(&dims, budget))? {
                    reps.push(m);
                }
            }
            // odometer step
            let mut i = 0;
            while i < entries {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == entries {
                break;
            }
        }
    }
    Ok(reps)
}

fn budget_error(dims: &[usize], budget: &Budget) -> ModuleError {
    ModuleError::BudgetExceeded { dims: dims.to_vec(), needed: f64::INFINITY, cap: budget.enum_cap }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ex310_has_five_indecomposables() {
        let a = catalog::ex310_algebra();
        let reps = enumerate_indecomposables(&a, &[1, 1, 1], &Budget::default()).unwrap();
        let dims: Vec<Vec<usize>> = reps.iter().map(|m| m.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn dual_numbers_have_two() {
        let a = catalog::dual_numbers_algebra();
        let reps = enumerate_indecomposables(&a, &[2], &Budget::default()).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[1].dims(), [2]);
    }

    #[test]
    fn a2_has_three() {
        let a = catalog::a2_algebra();
        assert_eq!(enumerate_indecomposables(&a, &[1, 1], &Budget::default()).unwrap().len(), 3);
    }

    #[test]
    fn budget_exceeded_names_dimension_vector() {
        let a = catalog::a2_algebra();
        let b = Budget { enum_cap: 8, ..Budget::default() };
        match enumerate_indecomposables(&a, &[2, 2], &b) {
            Err(ModuleError::BudgetExceeded { dims, .. }) => assert_eq!(dims, vec![2, 2]),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
