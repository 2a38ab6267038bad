//! Numeric spectrum of `T_n` from its adjacency matrix, for `n <= 6`.

use std::collections::{BTreeSet, HashMap};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::oracle::SpectrumSet;

pub const MAX_CAYLEY_N: u32 = 6;

/// Allowed distance between a numeric eigenvalue and its rounded integer.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let pivot = i - 1;
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[pivot])
            .expect("successor exists");
        current.swap(pivot, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Adjacency matrix of the transposition graph: `sigma ~ sigma * (i j)`.
pub fn adjacency_matrix(n: u32) -> Result<DMatrix<f64>> {
    if n > MAX_CAYLEY_N {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: MAX_CAYLEY_N,
        });
    }
    let n = n as usize;
    let perms = permutations(n);
    let index: HashMap<&[u8], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let size = perms.len();
    let mut adjacency = DMatrix::<f64>::zeros(size, size);
    let mut neighbour = vec![0u8; n];
    for (row, perm) in perms.iter().enumerate() {
        for i in 0..n {
            for j in i + 1..n {
                neighbour.copy_from_slice(perm);
                // right multiplication swaps positions
                neighbour.swap(i, j);
                adjacency[(row, index[neighbour.as_slice()])] = 1.0;
            }
        }
    }
    Ok(adjacency)
}

/// Distinct integer eigenvalues of the `n! x n!` adjacency matrix.
pub fn cayley_spectrum(n: u32) -> Result<SpectrumSet> {
    let adjacency = adjacency_matrix(n)?;
    let eigen = SymmetricEigen::new(adjacency);
    let mut values = BTreeSet::new();
    for &value in eigen.eigenvalues.iter() {
        let rounded = value.round();
        let residual = (value - rounded).abs();
        if residual >= ROUNDING_TOLERANCE {
            return Err(Error::RoundingFailure { value, residual });
        }
        values.insert(rounded as i64);
    }
    Ok(SpectrumSet {
        n,
        values: values.into_iter().collect(),
        witnesses: None,
    })
}
