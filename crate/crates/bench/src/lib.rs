//! Deterministic workloads shared by the benchmarks.

use amalgam_core::exactlin::IntMatrix;
use amalgam_core::knot::{seifert_to_presentation, SeifertMatrix};
use amalgam_core::laurent::{LaurentMatrix, LaurentPoly};
use amalgam_core::present::LambdaPresentation;

/// Seifert matrix of the `(2, 2g + 1)` torus knot, genus `g`.
pub fn torus_knot(genus: usize) -> LambdaPresentation {
    let n = 2 * genus;
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = -1;
        if i + 1 < n {
            row[i + 1] = 1;
        }
    }
    let v = SeifertMatrix::new(IntMatrix::from_rows(&rows)).expect("even and square");
    seifert_to_presentation(&v)
}

/// A tall `r x s` presentation with small pseudo-random entries; many
/// maximal minors, no unit entries.
pub fn tall(r: usize, s: usize) -> LambdaPresentation {
    let mut state = 0x9e37_79b9_u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let entries = (0..r * s)
        .map(|_| {
            let a = (next() % 5) as i64 + 2;
            let b = (next() % 5) as i64 - 2;
            LaurentPoly::from_coeffs(0, &[a, b, a])
        })
        .collect();
    LambdaPresentation::new(LaurentMatrix::from_vec(r, s, entries).expect("shape"))
}

/// Dense integer matrix with entries in `[-9, 9]`.
pub fn dense(n: usize) -> IntMatrix {
    let data = (0..n * n)
        .map(|k| ((k * 7919 + 13) % 19) as i64 - 9)
        .map(Into::into)
        .collect();
    IntMatrix::from_vec(n, n, data).expect("shape")
}
