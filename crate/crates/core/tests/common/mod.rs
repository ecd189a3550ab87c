//! Independent oracles shared by the integration tests. Nothing here calls
//! into the enumeration or weight code it is used to check.
#![allow(dead_code)]

/// Number of partitions inside `parts`, counted as lattice paths from the
/// bottom-left corner `(len, 0)` to the top-right corner `(0, parts[0])` of
/// the diagram, taking unit steps up or right and never crossing the boundary.
///
/// A right step along the horizontal line below row `i` (`i = 0` is the top
/// edge) from column `j` to `j + 1` is allowed iff `i == 0` or
/// `j + 1 <= parts[i - 1]`.
pub fn boundary_path_count(parts: &[usize]) -> u128 {
    let len = parts.len();
    let width = parts.first().copied().unwrap_or(0);
    // ways[i][j]: paths from (len, 0) to the point on line i, column j
    let mut ways = vec![vec![0u128; width + 1]; len + 1];
    for i in (0..=len).rev() {
        for j in 0..=width {
            if i == len && j == 0 {
                ways[i][j] = 1;
                continue;
            }
            let mut w = 0;
            if i < len {
                w += ways[i + 1][j];
            }
            if j > 0 && (i == 0 || j <= parts[i - 1]) {
                w += ways[i][j - 1];
            }
            ways[i][j] = w;
        }
    }
    ways[0][width]
}

/// Catalan numbers from `C_0 = 1`, `C_{n+1} = sum C_k C_{n-k}`.
pub fn catalan_convolution(n_max: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for n in 0..n_max {
        c.push((0..=n).map(|k| c[k] * c[n - k]).sum());
    }
    c
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn oracle_sanity() {
    assert_eq!(boundary_path_count(&[]), 1);
    assert_eq!(boundary_path_count(&[3, 2]), 9);
    assert_eq!(boundary_path_count(&[2, 2]), 6);
    assert_eq!(boundary_path_count(&[5, 4, 1]), 34);
    assert_eq!(catalan_convolution(6), vec![1, 1, 2, 5, 14, 42, 132]);
    assert_eq!(binomial(4, 2), 6);
}
