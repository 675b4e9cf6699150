//! Seifert matrices, Alexander polynomials and the monic (fiberedness)
//! screen.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::decomp::{decompose_with, is_monic, is_palindromic, DecomposeOptions, DecompositionReport};
use crate::error::{Error, Result};
use crate::exactlin::{det, IntMatrix};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::present::{order_with, LambdaPresentation, OrderOptions};

/// A `2g x 2g` Seifert matrix `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    v: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(v: IntMatrix) -> Result<Self> {
        if !v.is_square() || !v.rows().is_multiple_of(2) {
            return Err(Error::OddDimension {
                rows: v.rows(),
                cols: v.cols(),
            });
        }
        Ok(SeifertMatrix { v })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn genus(&self) -> usize {
        self.v.rows() / 2
    }

    /// `det(V - Vᵀ)`, which is `±1` for a genuine Seifert pairing.
    pub fn pairing_det(&self) -> BigInt {
        let n = self.v.rows();
        let mut d = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                d[(i, j)] = &self.v[(i, j)] - &self.v[(j, i)];
            }
        }
        det(&d).expect("square")
    }

    pub fn warnings(&self) -> Vec<String> {
        let pd = self.pairing_det();
        if pd.abs().is_one() {
            Vec::new()
        } else {
            vec![format!(
                "det(V - V^T) = {pd}; a Seifert matrix of a knot has det(V - V^T) = ±1"
            )]
        }
    }
}

/// The square presentation `t·V - Vᵀ` of the knot module.
pub fn seifert_to_presentation(s: &SeifertMatrix) -> LambdaPresentation {
    let v = &s.v;
    let n = v.rows();
    let mut m = LaurentMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = LaurentPoly::from_terms([(1, v[(i, j)].clone()), (0, -v[(j, i)].clone())]);
        }
    }
    LambdaPresentation::new(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotReport {
    /// Normalized Alexander polynomial.
    pub alexander: LaurentPoly,
    pub monic: bool,
    pub palindromic: bool,
    pub content: BigInt,
    pub genus: usize,
    pub pairing_det: BigInt,
    pub decomposition: Option<DecompositionReport>,
    pub warnings: Vec<String>,
}

pub fn analyze_knot(
    s: &SeifertMatrix,
    with_decomposition: bool,
    opts: DecomposeOptions,
) -> Result<KnotReport> {
    let pres = seifert_to_presentation(s);
    let alexander = order_with(
        &pres,
        OrderOptions {
            max_minors: opts.max_minors,
        },
    )?;
    let decomposition = if with_decomposition {
        Some(decompose_with(&pres, opts)?)
    } else {
        None
    };
    Ok(KnotReport {
        monic: is_monic(&alexander),
        palindromic: is_palindromic(&alexander),
        content: alexander.content(),
        genus: s.genus(),
        pairing_det: s.pairing_det(),
        alexander,
        decomposition,
        warnings: s.warnings(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::LatticeOutcome;
    use crate::laurent::det_laurent;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    fn seifert(rows: &[Vec<i64>]) -> SeifertMatrix {
        SeifertMatrix::new(IntMatrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn presentation_examples() {
        let tref = seifert_to_presentation(&seifert(&[vec![-1, 1], vec![0, -1]]));
        let m = tref.matrix();
        assert_eq!(m[(0, 0)], p(0, &[1, -1]));
        assert_eq!(m[(0, 1)], p(1, &[1]));
        assert_eq!(m[(1, 0)], p(0, &[-1]));
        assert_eq!(m[(1, 1)], p(0, &[1, -1]));

        let fig8 = seifert_to_presentation(&seifert(&[vec![1, 1], vec![0, -1]]));
        let m = fig8.matrix();
        assert_eq!(m[(0, 0)], p(0, &[-1, 1]));
        assert_eq!(m[(0, 1)], p(1, &[1]));
        assert_eq!(m[(1, 0)], p(0, &[-1]));
        assert_eq!(m[(1, 1)], p(0, &[1, -1]));

        let empty = seifert_to_presentation(&SeifertMatrix::new(IntMatrix::zeros(0, 0)).unwrap());
        assert_eq!(empty, LambdaPresentation::empty());
    }

    #[test]
    fn rejects_odd_or_rectangular() {
        assert!(matches!(
            SeifertMatrix::new(IntMatrix::identity(3)),
            Err(Error::OddDimension { rows: 3, cols: 3 })
        ));
        assert!(SeifertMatrix::new(IntMatrix::zeros(2, 4)).is_err());
    }

    #[test]
    fn analyze_trefoil() {
        let r = analyze_knot(&seifert(&[vec![-1, 1], vec![0, -1]]), true, Default::default())
            .unwrap();
        assert_eq!(r.alexander, p(0, &[1, -1, 1]));
        assert!(r.monic && r.palindromic);
        assert!(r.content.is_one());
        assert!(r.warnings.is_empty());
        let d = r.decomposition.unwrap();
        assert!(matches!(d.lattice, LatticeOutcome::Present(_)));
    }

    #[test]
    fn analyze_figure_eight() {
        let r = analyze_knot(&seifert(&[vec![1, 1], vec![0, -1]]), false, Default::default())
            .unwrap();
        assert_eq!(r.alexander, p(0, &[1, -3, 1]));
        assert!(r.monic && r.palindromic);
        assert!(r.decomposition.is_none());
    }

    #[test]
    fn analyze_five_two() {
        let s = seifert(&[vec![1, 1], vec![0, 2]]);
        let r = analyze_knot(&s, true, Default::default()).unwrap();
        assert_eq!(r.alexander, p(0, &[2, -3, 2]));
        assert!(!r.monic);
        assert!(r.palindromic);
        let d = r.decomposition.unwrap();
        assert_eq!(d.index_f, Some(BigInt::from(2)));
        assert_eq!(d.index_g, Some(BigInt::from(2)));
        assert_eq!(d.checks.monic, Some(false));
        // square presentation: order is the determinant
        let det = det_laurent(seifert_to_presentation(&s).matrix()).unwrap();
        assert!(det.associate(&r.alexander));
    }

    #[test]
    fn warns_on_degenerate_pairing() {
        let s = seifert(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(s.pairing_det(), BigInt::from(0));
        assert_eq!(s.warnings().len(), 1);
    }
}
