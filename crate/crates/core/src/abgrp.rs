//! Finitely presented abelian groups and homomorphisms between them.
//!
//! Groups keep the generators they were built with; homomorphisms are
//! integer matrices on those generators. Canonical forms are computed on
//! request and never replace the named generators.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{
    kernel_basis, lattice_membership, row_lattice_basis, snf, unimodular_inverse, IntMatrix,
};

/// `Z^gens` modulo the row lattice of `relations`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    gens: usize,
    relations: IntMatrix,
}

/// Free rank and torsion coefficients (invariant factors above 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl CanonicalForm {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Smallest number of generators of the group.
    pub fn min_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl FgAbGroup {
    pub fn new(gens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.cols() != gens {
            return Err(Error::DimensionMismatch(format!(
                "relations have {} columns for {gens} generators",
                relations.cols()
            )));
        }
        Ok(FgAbGroup { gens, relations })
    }

    pub fn free(gens: usize) -> Self {
        FgAbGroup {
            gens,
            relations: IntMatrix::zeros(0, gens),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `Z/n`
    pub fn cyclic(n: i64) -> Self {
        FgAbGroup {
            gens: 1,
            relations: IntMatrix::from_rows(&[vec![n]]),
        }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Whether the element with generator coefficients `v` is zero.
    pub fn is_zero_element(&self, v: &[BigInt]) -> Result<bool> {
        Ok(lattice_membership(&self.relations, v)?.is_some())
    }
}

pub fn canonical_form(g: &FgAbGroup) -> CanonicalForm {
    let s = snf(&g.relations);
    CanonicalForm {
        free_rank: s.free_rank,
        torsion: s
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect(),
    }
}

/// A homomorphism; column `j` of `matrix` is the image of source generator
/// `j` in target generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn identity(g: &FgAbGroup) -> AbHom {
        AbHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.gens),
        }
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &AbHom) -> Result<AbHom> {
        if inner.target != self.source {
            return Err(Error::DimensionMismatch(
                "composition of homs with mismatched middle group".into(),
            ));
        }
        Ok(AbHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.checked_mul(&inner.matrix)?,
        })
    }

    /// Equality as maps: matrices agree modulo the target relations.
    pub fn same_map(&self, other: &AbHom) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        for j in 0..self.source.gens {
            let diff: Vec<BigInt> = self
                .matrix
                .column(j)
                .into_iter()
                .zip(other.matrix.column(j))
                .map(|(a, b)| a - b)
                .collect();
            if !self.target.is_zero_element(&diff)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Builds a homomorphism after checking that every source relation lands
/// in the target's relation lattice.
pub fn hom(source: &FgAbGroup, target: &FgAbGroup, matrix: IntMatrix) -> Result<AbHom> {
    if matrix.rows() != target.gens || matrix.cols() != source.gens {
        return Err(Error::DimensionMismatch(format!(
            "hom matrix is {}x{}, expected {}x{}",
            matrix.rows(),
            matrix.cols(),
            target.gens,
            source.gens
        )));
    }
    for i in 0..source.relations.rows() {
        let pushed = matrix.mul_vec(source.relations.row(i))?;
        if !target.is_zero_element(&pushed)? {
            return Err(Error::IllDefined(format!(
                "source relation {i} maps to {pushed:?}, which is nonzero in the target"
            )));
        }
    }
    Ok(AbHom {
        source: source.clone(),
        target: target.clone(),
        matrix,
    })
}

/// Kernel of a homomorphism with its inclusion into the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub group: FgAbGroup,
    pub incl: AbHom,
}

impl Kernel {
    pub fn is_trivial(&self) -> bool {
        canonical_form(&self.group).is_trivial()
    }
}

pub fn kernel(h: &AbHom) -> Result<Kernel> {
    let q = h.source.gens;
    let rel_t = &h.target.relations;
    // (x, y) with M x = R_tᵀ y
    let neg_rel_t_transposed = {
        let mut m = rel_t.transpose();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let e = &mut m[(i, j)];
                *e = -std::mem::take(e);
            }
        }
        m
    };
    let stacked = h.matrix.hstack(&neg_rel_t_transposed)?;
    let solutions = kernel_basis(&stacked);
    let preimage = row_lattice_basis(&solutions.col_slice(0..q));

    let k = preimage.rows();
    let mut rel_rows = Vec::with_capacity(h.source.relations.rows());
    for i in 0..h.source.relations.rows() {
        let coeffs = lattice_membership(&preimage, h.source.relations.row(i))?
            .expect("source relations lie in the preimage of a well-defined hom");
        rel_rows.push(coeffs);
    }
    let group = FgAbGroup::new(k, IntMatrix::from_rows_with_cols(&rel_rows, k))?;
    let incl = hom(&group, &h.source, preimage.transpose())?;
    Ok(Kernel { group, incl })
}

pub fn is_injective(h: &AbHom) -> Result<bool> {
    Ok(kernel(h)?.is_trivial())
}

/// `G` modulo the extra rows, with the projection `G -> G/extra`.
pub fn quotient_by(g: &FgAbGroup, extra: &IntMatrix) -> Result<(FgAbGroup, AbHom)> {
    let relations = g.relations.vstack(extra)?;
    let q = FgAbGroup {
        gens: g.gens,
        relations,
    };
    let proj = AbHom {
        source: g.clone(),
        target: q.clone(),
        matrix: IntMatrix::identity(g.gens),
    };
    Ok((q, proj))
}

/// The map on quotients making `induced ∘ src_proj = tgt_proj ∘ h`.
pub fn induced_hom(h: &AbHom, src_proj: &AbHom, tgt_proj: &AbHom) -> Result<AbHom> {
    if src_proj.source != h.source || tgt_proj.source != h.target {
        return Err(Error::DimensionMismatch(
            "projections do not start at the source and target of h".into(),
        ));
    }
    if !src_proj.matrix.is_identity() {
        return Err(Error::NotInduced(
            "source projection is not a quotient map on the same generators".into(),
        ));
    }
    let matrix = tgt_proj.matrix.checked_mul(&h.matrix)?;
    hom(&src_proj.target, &tgt_proj.target, matrix).map_err(|e| match e {
        Error::IllDefined(msg) => Error::NotInduced(msg),
        other => other,
    })
}

/// An isomorphism between a torsion-free group and `Z^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBasis {
    pub rank: usize,
    /// `rank x gens`: generator coordinates to free coordinates.
    pub to_free: IntMatrix,
    /// `gens x rank`: free basis vectors written in the generators.
    pub from_free: IntMatrix,
}

pub fn free_basis(g: &FgAbGroup) -> Result<FreeBasis> {
    let s = snf(&g.relations);
    if s.invariant_factors.iter().any(|d| !d.is_one()) {
        return Err(Error::NotFree {
            torsion: s
                .invariant_factors
                .iter()
                .filter(|d| !d.is_one())
                .map(ToString::to_string)
                .collect(),
        });
    }
    let k = s.rank();
    let right_inv = unimodular_inverse(&s.right).expect("Smith witnesses are unimodular");
    let to_free = s.right.col_slice(k..g.gens).transpose();
    let from_free = right_inv.row_slice(k..g.gens).transpose();
    Ok(FreeBasis {
        rank: s.free_rank,
        to_free,
        from_free,
    })
}

/// Rewrites each hom into or out of `g` in a free basis of `g`.
pub fn free_basis_transport(g: &FgAbGroup, homs: &[AbHom]) -> Result<(usize, Vec<IntMatrix>)> {
    let basis = free_basis(g)?;
    let mut out = Vec::with_capacity(homs.len());
    for h in homs {
        let m = match (h.source == *g, h.target == *g) {
            (true, true) => &(&basis.to_free * &h.matrix) * &basis.from_free,
            (false, true) => &basis.to_free * &h.matrix,
            (true, false) => &h.matrix * &basis.from_free,
            (false, false) => {
                return Err(Error::DimensionMismatch(
                    "hom neither starts nor ends at the group being transported".into(),
                ))
            }
        };
        out.push(m);
    }
    Ok((basis.rank, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn zero_vec(n: usize) -> Vec<BigInt> {
        vec![BigInt::from(0); n]
    }

    /// `Z^2 / <(-2, 2)>`, the group built from `(2t - 2) a = 0`.
    fn ex2_b() -> FgAbGroup {
        FgAbGroup::new(2, m(&[vec![-2, 2]])).unwrap()
    }

    #[test]
    fn canonical_form_examples() {
        let c = canonical_form(&ex2_b());
        assert_eq!(c.free_rank, 1);
        assert_eq!(c.torsion, ints(&[2]));
        let c = canonical_form(&FgAbGroup::free(3));
        assert_eq!((c.free_rank, c.torsion.len()), (3, 0));
        let c = canonical_form(&FgAbGroup::cyclic(2));
        assert_eq!((c.free_rank, c.torsion.clone()), (0, ints(&[2])));
    }

    #[test]
    fn hom_examples() {
        let g = ex2_b();
        assert_eq!(hom(&g, &g, IntMatrix::identity(2)).unwrap(), AbHom::identity(&g));
        let z = FgAbGroup::free(1);
        let z2 = FgAbGroup::cyclic(2);
        assert!(hom(&z, &z2, m(&[vec![1]])).is_ok());
        assert!(matches!(
            hom(&z2, &z, m(&[vec![1]])),
            Err(Error::IllDefined(_))
        ));
        assert!(matches!(
            hom(&z, &z2, m(&[vec![1, 0]])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        let z = FgAbGroup::free(1);
        let times2 = hom(&z, &z, m(&[vec![2]])).unwrap();
        assert!(kernel(&times2).unwrap().is_trivial());

        let to_z2 = hom(&z, &FgAbGroup::cyclic(2), m(&[vec![1]])).unwrap();
        let k = kernel(&to_z2).unwrap();
        assert_eq!(canonical_form(&k.group).free_rank, 1);
        assert_eq!(k.incl.matrix(), &m(&[vec![2]]));

        let f = hom(&z, &ex2_b(), m(&[vec![1], vec![0]])).unwrap();
        assert!(kernel(&f).unwrap().is_trivial());
    }

    #[test]
    fn kernel_carries_source_relations() {
        // Z/4 -> Z/2, 1 -> 1 has kernel 2Z/4Z = Z/2
        let h = hom(&FgAbGroup::cyclic(4), &FgAbGroup::cyclic(2), m(&[vec![1]])).unwrap();
        let k = kernel(&h).unwrap();
        assert_eq!(canonical_form(&k.group).torsion, ints(&[2]));
        assert!(!is_injective(&h).unwrap());
        let killed = h.compose(&k.incl).unwrap();
        for j in 0..k.group.gens() {
            assert!(h.target().is_zero_element(&killed.matrix().column(j)).unwrap());
        }
    }

    #[test]
    fn injectivity_examples() {
        let z = FgAbGroup::free(1);
        assert!(is_injective(&hom(&z, &z, m(&[vec![2]])).unwrap()).unwrap());
        let z2 = FgAbGroup::cyclic(2);
        assert!(!is_injective(&hom(&z2, &z2, m(&[vec![0]])).unwrap()).unwrap());
        let g = hom(&z, &ex2_b(), m(&[vec![0], vec![1]])).unwrap();
        assert!(is_injective(&g).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let (q, proj) = quotient_by(&FgAbGroup::free(1), &m(&[vec![2]])).unwrap();
        assert_eq!(canonical_form(&q), canonical_form(&FgAbGroup::cyclic(2)));
        assert!(proj.matrix().is_identity());

        let g = ex2_b();
        let (q, _) = quotient_by(&g, &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(canonical_form(&q), canonical_form(&g));

        let (q, _) = quotient_by(&FgAbGroup::free(2), &m(&[vec![1, 0]])).unwrap();
        let c = canonical_form(&q);
        assert_eq!((c.free_rank, c.torsion.len()), (1, 0));
        assert!(!q.is_zero_element(&ints(&[0, 1])).unwrap());

        assert!(quotient_by(&g, &m(&[vec![1]])).is_err());
    }

    #[test]
    fn induced_examples() {
        let z = FgAbGroup::free(1);
        let id = AbHom::identity(&z);
        let (_, p2) = quotient_by(&z, &m(&[vec![2]])).unwrap();
        let ind = induced_hom(&id, &p2, &p2).unwrap();
        assert_eq!(canonical_form(ind.source()).torsion, ints(&[2]));
        assert!(ind.matrix().is_identity());

        let (_, trivial) = quotient_by(&z, &IntMatrix::zeros(0, 1)).unwrap();
        assert!(matches!(
            induced_hom(&id, &p2, &trivial),
            Err(Error::NotInduced(_))
        ));
    }

    #[test]
    fn free_basis_examples() {
        let g = FgAbGroup::free(2);
        let (rank, ms) = free_basis_transport(&g, &[AbHom::identity(&g)]).unwrap();
        assert_eq!(rank, 2);
        assert!(ms[0].is_identity());

        let g = FgAbGroup::new(2, m(&[vec![-1, 1]])).unwrap();
        let into = hom(&FgAbGroup::free(1), &g, m(&[vec![1], vec![0]])).unwrap();
        let (rank, ms) = free_basis_transport(&g, &[into]).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(ms[0], m(&[vec![1]]));

        assert!(matches!(free_basis(&ex2_b()), Err(Error::NotFree { .. })));
    }

    #[test]
    fn free_basis_is_an_isomorphism() {
        let g = FgAbGroup::new(4, m(&[vec![1, -1, 0, 1], vec![-1, 0, 1, -1]])).unwrap();
        let b = free_basis(&g).unwrap();
        assert_eq!(b.rank, 2);
        assert!((&b.to_free * &b.from_free).is_identity());
        // relations die under to_free
        for i in 0..g.relations().rows() {
            let image = b.to_free.mul_vec(g.relations().row(i)).unwrap();
            assert_eq!(image, zero_vec(2));
        }
        // from_free ∘ to_free is the identity on the group
        let round = &b.from_free * &b.to_free;
        for j in 0..4 {
            let mut e = zero_vec(4);
            e[j] = BigInt::one();
            let back = round.mul_vec(&e).unwrap();
            let diff: Vec<BigInt> = back.iter().zip(&e).map(|(a, b)| a - b).collect();
            assert!(g.is_zero_element(&diff).unwrap());
        }
    }
}
