//! Amalgamated decompositions `··· ⊕_U B ⊕_U B ⊕_U ···` of a module and
//! the lattice pair they yield when `B` and `U` are free.
//!
//! Generator `a_{i,ν}` stands for `t^ν a_i`. From a shift-normalized
//! presentation, `B` is generated by the `a_{i,ν}` with `0 ≤ ν ≤ ν_i` and
//! related by the relator rows read at `t^0`; `U` is free on the
//! `a_{i,ν}` with `ν < ν_i`. The two amalgamating maps are
//!
//! * `f: a_{i,ν} ↦ a_{i,ν+1}` (the shifted copy),
//! * `g: a_{i,ν} ↦ a_{i,ν}` (the inclusion),
//!
//! so that each relation `t·g(u) = f(u)` says `t·a_{i,ν} = a_{i,ν+1}` and
//! the order of the module is `det(t·G - F)` once both maps are injective
//! and the groups are free. With this labelling `|c_0|` is the index of
//! `f` and `|c_d|` the index of `g`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::abgrp::{
    canonical_form, free_basis, hom, induced_hom, kernel, quotient_by, AbHom, CanonicalForm,
    FgAbGroup,
};
use crate::error::{Error, Result};
use crate::exactlin::{det, lattice_index, row_lattice_basis, IntMatrix, LatticeIndex};
use crate::laurent::{det_laurent, LaurentMatrix, LaurentPoly};
use crate::present::{
    order_with, shift_normalize, LambdaPresentation, OrderOptions, ShiftNormalization,
    DEFAULT_MAX_MINORS,
};

pub const DEFAULT_MAX_STEPS: usize = 1000;

/// The data `(B, U, f, g)` of an amalgamated decomposition with identical
/// amalgamations `B <-g- U -f-> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamData {
    pub b: FgAbGroup,
    pub u: FgAbGroup,
    pub f: AbHom,
    pub g: AbHom,
    pub reduction_steps: usize,
    /// `(generator i, power ν)` for each generator of `B`.
    pub b_provenance: Vec<(usize, usize)>,
    /// `(generator i, power ν)` for each generator of `U`.
    pub u_provenance: Vec<(usize, usize)>,
    /// Input generators that occur in no relator.
    pub free_generators: Vec<usize>,
}

pub fn build_initial(n: &ShiftNormalization) -> AmalgamData {
    let m = n.presentation.matrix();
    let mut b_provenance = Vec::new();
    let mut u_provenance = Vec::new();
    let mut b_index = Vec::with_capacity(n.nu.len());
    for (i, &nu) in n.nu.iter().enumerate() {
        b_index.push(b_provenance.len());
        b_provenance.extend((0..=nu).map(|v| (i, v)));
        u_provenance.extend((0..nu).map(|v| (i, v)));
    }
    let qb = b_provenance.len();
    let qu = u_provenance.len();

    let mut rel = IntMatrix::zeros(m.rows(), qb);
    for r in 0..m.rows() {
        for (i, &nu) in n.nu.iter().enumerate() {
            for (e, c) in m[(r, i)].terms() {
                debug_assert!(e >= 0 && e as usize <= nu);
                rel[(r, b_index[i] + e as usize)] = c.clone();
            }
        }
    }
    let b = FgAbGroup::new(qb, rel).expect("relation width matches");
    let u = FgAbGroup::free(qu);

    let mut f = IntMatrix::zeros(qb, qu);
    let mut g = IntMatrix::zeros(qb, qu);
    for (col, &(i, v)) in u_provenance.iter().enumerate() {
        f[(b_index[i] + v + 1, col)] = BigInt::one();
        g[(b_index[i] + v, col)] = BigInt::one();
    }
    // U is free, so any matrix is well defined
    let f = hom(&u, &b, f).expect("free source");
    let g = hom(&u, &b, g).expect("free source");

    AmalgamData {
        b,
        u,
        f,
        g,
        reduction_steps: 0,
        b_provenance,
        u_provenance,
        free_generators: n.free_generators.clone(),
    }
}

/// Quotient with the relation lattice rewritten in Hermite form.
fn compact_quotient(g: &FgAbGroup, extra: &IntMatrix) -> Result<(FgAbGroup, AbHom)> {
    let (q, _) = quotient_by(g, extra)?;
    let q = FgAbGroup::new(q.gens(), row_lattice_basis(q.relations()))?;
    let proj = hom(g, &q, IntMatrix::identity(g.gens()))?;
    Ok((q, proj))
}

/// Applies the reduction `U -> U/(ker f + ker g)`,
/// `B -> B/(f(ker g) + g(ker f))` until both maps are injective.
pub fn reduce(a: &AmalgamData, max_steps: usize) -> Result<AmalgamData> {
    let mut cur = a.clone();
    loop {
        let kf = kernel(&cur.f)?;
        let kg = kernel(&cur.g)?;
        if kf.is_trivial() && kg.is_trivial() {
            return Ok(cur);
        }
        if cur.reduction_steps - a.reduction_steps >= max_steps {
            return Err(Error::StepLimit { max_steps });
        }
        let ker_f = kf.incl.matrix();
        let ker_g = kg.incl.matrix();
        let extra_u = ker_f.hstack(ker_g)?.transpose();
        let extra_b = cur
            .f
            .matrix()
            .checked_mul(ker_g)?
            .hstack(&cur.g.matrix().checked_mul(ker_f)?)?
            .transpose();
        let (u, pu) = compact_quotient(&cur.u, &extra_u)?;
        let (b, pb) = compact_quotient(&cur.b, &extra_b)?;
        let f = induced_hom(&cur.f, &pu, &pb)?;
        let g = induced_hom(&cur.g, &pu, &pb)?;
        cur = AmalgamData {
            b,
            u,
            f,
            g,
            reduction_steps: cur.reduction_steps + 1,
            ..cur
        };
    }
}

/// The Λ-presentation of the amalgam: the relations of `B` as constant
/// rows, then `t·g(u) - f(u)` for each generator `u` of `U`.
pub fn presentation_from_amalgam(a: &AmalgamData) -> LambdaPresentation {
    let rel = a.b.relations();
    let qb = a.b.gens();
    let qu = a.u.gens();
    let mut m = LaurentMatrix::zeros(rel.rows() + qu, qb);
    for r in 0..rel.rows() {
        for j in 0..qb {
            m[(r, j)] = LaurentPoly::constant(rel[(r, j)].clone());
        }
    }
    for k in 0..qu {
        for j in 0..qb {
            m[(rel.rows() + k, j)] = amalgam_entry(&a.f.matrix()[(j, k)], &a.g.matrix()[(j, k)]);
        }
    }
    LambdaPresentation::new(m)
}

/// `t·g - f` for integer coefficients.
fn amalgam_entry(f: &BigInt, g: &BigInt) -> LaurentPoly {
    LaurentPoly::from_terms([(0, -f.clone()), (1, g.clone())])
}

/// Integer matrices of monomorphisms `f, g: Z^d -> Z^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePair {
    pub d: usize,
    pub f: IntMatrix,
    pub g: IntMatrix,
}

impl LatticePair {
    /// Checks shapes and that both determinants are nonzero.
    pub fn new(f: IntMatrix, g: IntMatrix) -> Result<Self> {
        let d = f.rows();
        if !f.is_square() || g.rows() != d || g.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "lattice pair needs two square matrices of one size, got {}x{} and {}x{}",
                f.rows(),
                f.cols(),
                g.rows(),
                g.cols()
            )));
        }
        if det(&f)?.is_zero() {
            return Err(Error::Singular("det F = 0".into()));
        }
        if det(&g)?.is_zero() {
            return Err(Error::Singular("det G = 0".into()));
        }
        Ok(LatticePair { d, f, g })
    }

    pub fn index_f(&self) -> BigInt {
        finite_index(&self.f)
    }

    pub fn index_g(&self) -> BigInt {
        finite_index(&self.g)
    }
}

fn finite_index(m: &IntMatrix) -> BigInt {
    match lattice_index(m).expect("square") {
        LatticeIndex::Finite(n) => n,
        LatticeIndex::Infinite => unreachable!("lattice pairs are nonsingular"),
    }
}

/// Rewrites `f, g` in free bases of `U` and `B`. Requires a reduced
/// amalgam; the bases come from the Smith forms of the relation matrices,
/// so the matrices are deterministic but basis-dependent.
pub fn extract_lattice(a: &AmalgamData) -> Result<LatticePair> {
    if !a.free_generators.is_empty() {
        return Err(Error::RankMismatch(format!(
            "generators {:?} occur in no relator, so the module is not torsion",
            a.free_generators
        )));
    }
    let bb = free_basis(&a.b)?;
    let ub = free_basis(&a.u)?;
    if bb.rank != ub.rank {
        return Err(Error::RankMismatch(format!(
            "rank B = {} but rank U = {}",
            bb.rank, ub.rank
        )));
    }
    let f = &(&bb.to_free * a.f.matrix()) * &ub.from_free;
    let g = &(&bb.to_free * a.g.matrix()) * &ub.from_free;
    LatticePair::new(f, g)
}

/// `t·G - F` as a square presentation; row `j` is the relation
/// `t·g(e_j) = f(e_j)`.
pub fn presentation_from_pair(l: &LatticePair) -> LambdaPresentation {
    let mut m = LaurentMatrix::zeros(l.d, l.d);
    for j in 0..l.d {
        for i in 0..l.d {
            m[(j, i)] = amalgam_entry(&l.f[(i, j)], &l.g[(i, j)]);
        }
    }
    LambdaPresentation::new(m)
}

/// `det(t·G - F)`, unit-normalized.
pub fn char_poly(l: &LatticePair) -> LaurentPoly {
    det_laurent(presentation_from_pair(l).matrix())
        .expect("square")
        .normalize_unit()
}

/// `p(t) ≐ t^d p(t^-1)`; the zero polynomial counts as palindromic.
pub fn is_palindromic(p: &LaurentPoly) -> bool {
    p.associate(&p.conjugate())
}

/// `|c_0| = |c_d| = 1`; false for zero.
pub fn is_monic(p: &LaurentPoly) -> bool {
    match (p.trailing_coeff(), p.leading_coeff()) {
        (Some(lo), Some(hi)) => lo.abs().is_one() && hi.abs().is_one(),
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub max_minors: u64,
    pub max_steps: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            max_minors: DEFAULT_MAX_MINORS,
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

impl DecomposeOptions {
    fn order_options(&self) -> OrderOptions {
        OrderOptions {
            max_minors: self.max_minors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeOutcome {
    Present(LatticePair),
    /// `NotFree`, `RankMismatch` or `Singular`.
    Absent(Error),
}

impl LatticeOutcome {
    pub fn pair(&self) -> Option<&LatticePair> {
        match self {
            LatticeOutcome::Present(p) => Some(p),
            LatticeOutcome::Absent(_) => None,
        }
    }
}

/// Named checks; `None` means the check does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks {
    pub order_match: bool,
    pub degree_bound: Option<bool>,
    pub c0_index: Option<bool>,
    pub cd_index: Option<bool>,
    pub palindromic: Option<bool>,
    pub monic: Option<bool>,
}

impl Checks {
    pub fn named(&self) -> [(&'static str, Option<bool>); 6] {
        [
            ("order_match", Some(self.order_match)),
            ("degree_bound", self.degree_bound),
            ("c0_index", self.c0_index),
            ("cd_index", self.cd_index),
            ("palindromic", self.palindromic),
            ("monic", self.monic),
        ]
    }

    /// No applicable check failed.
    pub fn all_pass(&self) -> bool {
        self.named().iter().all(|(_, v)| *v != Some(false))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Normalized order of the input.
    pub order: LaurentPoly,
    pub degree: Option<usize>,
    pub c0: Option<BigInt>,
    pub cd: Option<BigInt>,
    pub content: BigInt,
    pub normalization: ShiftNormalization,
    pub amalgam: AmalgamData,
    /// Order of [`presentation_from_amalgam`] for the reduced amalgam.
    pub amalgam_order: LaurentPoly,
    pub lattice: LatticeOutcome,
    pub char_poly: Option<LaurentPoly>,
    pub index_f: Option<BigInt>,
    pub index_g: Option<BigInt>,
    /// Minimal number of generators of the final `U`.
    pub q: usize,
    pub u_form: CanonicalForm,
    pub b_form: CanonicalForm,
    pub checks: Checks,
}

pub fn decompose(p: &LambdaPresentation) -> Result<DecompositionReport> {
    decompose_with(p, DecomposeOptions::default())
}

pub fn decompose_with(p: &LambdaPresentation, opts: DecomposeOptions) -> Result<DecompositionReport> {
    let order = order_with(p, opts.order_options())?;
    let normalization = shift_normalize(p);
    let initial = build_initial(&normalization);
    let amalgam = reduce(&initial, opts.max_steps)?;
    let amalgam_order = order_with(&presentation_from_amalgam(&amalgam), opts.order_options())?;

    let lattice = match extract_lattice(&amalgam) {
        Ok(pair) => LatticeOutcome::Present(pair),
        Err(e @ (Error::NotFree { .. } | Error::RankMismatch(_) | Error::Singular(_))) => {
            LatticeOutcome::Absent(e)
        }
        Err(e) => return Err(e),
    };
    let char_poly = lattice.pair().map(char_poly);
    let index_f = lattice.pair().map(LatticePair::index_f);
    let index_g = lattice.pair().map(LatticePair::index_g);

    let u_form = canonical_form(&amalgam.u);
    let b_form = canonical_form(&amalgam.b);
    let q = u_form.min_generators();

    let degree = order.span().map(|d| d as usize);
    let c0 = order.trailing_coeff().cloned();
    let cd = order.leading_coeff().cloned();
    let content = order.content();

    let order_match = order == amalgam_order
        && char_poly.as_ref().is_none_or(|c| c.associate(&order));
    let abs_eq = |c: &Option<BigInt>, idx: &Option<BigInt>| match (c, idx) {
        (Some(c), Some(i)) => Some(&c.abs() == i),
        _ => None,
    };
    let nonzero = !order.is_zero();
    let checks = Checks {
        order_match,
        degree_bound: degree.map(|d| d <= q),
        c0_index: abs_eq(&c0, &index_f),
        cd_index: abs_eq(&cd, &index_g),
        palindromic: nonzero.then(|| is_palindromic(&order)),
        monic: nonzero.then(|| is_monic(&order)),
    };

    Ok(DecompositionReport {
        order,
        degree,
        c0,
        cd,
        content,
        normalization,
        amalgam,
        amalgam_order,
        lattice,
        char_poly,
        index_f,
        index_g,
        q,
        u_form,
        b_form,
        checks,
    })
}
