//! The companion construction: split an algebra as `A + H` with `A` a
//! minimal ideal and `H` a complementing subalgebra, build the Lie algebra
//! with bracket `[a+h, b+k] = h b - k a + h k` on the adapted basis, and the
//! inverse construction that recovers a Leibniz algebra from a Lie algebra.

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::classify::{self, ClassifyError};
use crate::field::Scalar;
use crate::lattice::{self, Budget, LatticeError};
use crate::matrix::{LinalgError, Matrix, Vector};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompanionError {
    #[error("no unique minimal ideal: found {0}")]
    MinimalIdealNotUnique(usize),
    #[error("the minimal ideal has no subalgebra complement")]
    NoComplement,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(&'static str),
    #[error("the complement is not a Lie subalgebra")]
    ComplementNotLie,
    #[error("the ideal part is not contained in the squares ideal and the algebra is not Lie")]
    IdealOutsideSquares,
    #[error("constructed companion fails the Lie identities")]
    OutputNotLie,
    #[error("constructed algebra fails the Leibniz identity")]
    OutputNotLeibniz,
    #[error("squares of the output escape the ideal part")]
    SquaresEscapeIdeal,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Classify(#[from] Box<ClassifyError>),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A direct-sum split `A + H`: `A` an ideal, `H` a subalgebra, meeting
/// trivially and spanning everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    a: Subspace,
    h: Subspace,
}

impl Decomposition {
    /// Validate the four split invariants against the algebra.
    pub fn from_parts(alg: &Algebra, a: Subspace, h: Subspace) -> Result<Self, CompanionError> {
        if !a.intersect(&h)?.is_zero() {
            return Err(CompanionError::InvalidDecomposition("parts intersect"));
        }
        if !a.sum(&h)?.is_full() {
            return Err(CompanionError::InvalidDecomposition("parts do not span"));
        }
        if !alg.is_ideal(&a)? {
            return Err(CompanionError::InvalidDecomposition("ideal part is not an ideal"));
        }
        if !alg.is_subalgebra(&h)? {
            return Err(CompanionError::InvalidDecomposition("complement is not closed"));
        }
        Ok(Decomposition { a, h })
    }

    pub fn ideal(&self) -> &Subspace {
        &self.a
    }

    pub fn complement(&self) -> &Subspace {
        &self.h
    }

    /// Adapted basis rows: the echelon basis of `A` followed by that of `H`.
    pub fn adapted_basis(&self, alg: &Algebra) -> Matrix {
        let mut rows = self.a.basis_rows();
        rows.extend(self.h.basis_rows());
        Matrix::from_rows(alg.field(), rows).expect("split spans the space")
    }
}

/// Canonical decomposition: the unique minimal ideal plus the first
/// complement in enumeration order. Errors report which requirement failed.
pub fn decompose(alg: &Algebra, budget: &Budget) -> Result<Decomposition, CompanionError> {
    let minimal = lattice::minimal_ideals(alg, budget)?;
    if minimal.len() != 1 {
        return Err(CompanionError::MinimalIdealNotUnique(minimal.len()));
    }
    let a = minimal.into_iter().next().unwrap();
    let Some(h) = lattice::complement(alg, &a, budget)? else {
        return Err(CompanionError::NoComplement);
    };
    Decomposition::from_parts(alg, a, h)
}

/// Fallback split for algebras too large for lattice enumeration: take the
/// squares ideal as `A` and the coordinate subspace at its non-pivot columns
/// as `H`. Minimality of `A` is verified by scanning the subspaces of `A`
/// alone; uniqueness is not established on this path.
pub fn decompose_via_squares(alg: &Algebra, budget: &Budget) -> Result<Decomposition, CompanionError> {
    let a = classify::leib_ideal(alg).map_err(Box::new)?;
    if a.is_zero() {
        return Err(CompanionError::InvalidDecomposition("squares ideal is zero"));
    }
    let field = alg.field();
    let rows: Vec<Vector> = a
        .non_pivot_columns()
        .into_iter()
        .map(|c| {
            let mut v = vec![field.zero(); alg.dim()];
            v[c] = field.one();
            v
        })
        .collect();
    let h = Subspace::span(field, alg.dim(), rows)?;
    let dec = Decomposition::from_parts(alg, a, h)?;
    // minimality of A: no proper nonzero ideal of the algebra inside it
    for w in lattice::subspaces_within(&dec.a, budget)? {
        if w.is_zero() || w == dec.a {
            continue;
        }
        if alg.is_ideal(&w)? {
            return Err(CompanionError::InvalidDecomposition("squares ideal is not minimal"));
        }
    }
    Ok(dec)
}

/// Companion algebra on the adapted basis `(A, then H)` with bracket
/// `[a+h, b+k] = h b - k a + h k`, all right-hand products taken in the
/// input. The output is verified to be Lie; a failure means the input was
/// outside the construction's hypotheses and is reported, not returned.
pub fn companion_lie(alg: &Algebra, dec: &Decomposition) -> Result<Algebra, CompanionError> {
    // revalidate against this algebra
    let dec = Decomposition::from_parts(alg, dec.a.clone(), dec.h.clone())?;
    let (h_alg, _) = alg.subalgebra_algebra(&dec.h)?;
    if !h_alg.is_lie() {
        return Err(CompanionError::ComplementNotLie);
    }
    if !alg.is_lie() {
        let squares = classify::leib_ideal(alg).map_err(Box::new)?;
        if !squares.contains(&dec.a)? {
            return Err(CompanionError::IdealOutsideSquares);
        }
    }
    let r = dec.a.dim();
    let d = alg.dim();
    let basis = dec.adapted_basis(alg);
    let mut bt = Matrix::zeros(alg.field(), d, d);
    for i in 0..d {
        for j in 0..d {
            bt.set(j, i, basis.get(i, j).clone());
        }
    }
    let inv = bt.inverse()?.ok_or(CompanionError::InvalidDecomposition("adapted basis singular"))?;
    let coords_of = |v: &[Scalar]| -> Result<Vector, CompanionError> { Ok(inv.mul_vec(v)?) };

    let zero = vec![alg.field().zero(); d];
    let mut tensor: Vec<Scalar> = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            // bracket of adapted basis vectors i and j
            let left_h = i >= r;
            let right_h = j >= r;
            let product: Vector = match (left_h, right_h) {
                (false, false) => zero.clone(),
                (true, _) => alg.multiply(basis.row(i), basis.row(j))?,
                (false, true) => {
                    let kv = alg.multiply(basis.row(j), basis.row(i))?;
                    kv.iter().map(|s| -s).collect()
                }
            };
            tensor.extend(coords_of(&product)?);
        }
    }
    let companion = Algebra::new(alg.field(), d, tensor, None)?;
    if !companion.is_lie() {
        return Err(CompanionError::OutputNotLie);
    }
    Ok(companion)
}

/// Inverse construction: keep the `H` products and the `H`-on-`A` action of
/// a Lie algebra, kill every left action of `A`. Output is on the adapted
/// basis and verified to be Leibniz with its squares inside `A`.
pub fn leibnizize(lie: &Algebra, dec: &Decomposition) -> Result<Algebra, CompanionError> {
    let dec = Decomposition::from_parts(lie, dec.a.clone(), dec.h.clone())?;
    if !lie.is_lie() {
        return Err(CompanionError::InvalidDecomposition("input is not a Lie algebra"));
    }
    if !lie.subspace_product(&dec.a, &dec.a)?.is_zero() {
        return Err(CompanionError::InvalidDecomposition("ideal part is not abelian"));
    }
    let r = dec.a.dim();
    let d = lie.dim();
    let basis = dec.adapted_basis(lie);
    let mut bt = Matrix::zeros(lie.field(), d, d);
    for i in 0..d {
        for j in 0..d {
            bt.set(j, i, basis.get(i, j).clone());
        }
    }
    let inv = bt.inverse()?.ok_or(CompanionError::InvalidDecomposition("adapted basis singular"))?;
    let zero = vec![lie.field().zero(); d];
    let mut tensor: Vec<Scalar> = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let product: Vector = if i < r {
                zero.clone()
            } else {
                lie.multiply(basis.row(i), basis.row(j))?
            };
            tensor.extend(inv.mul_vec(&product)?);
        }
    }
    let out = Algebra::new(lie.field(), d, tensor, None)?;
    if !out.is_leibniz() {
        return Err(CompanionError::OutputNotLeibniz);
    }
    let squares = classify::leib_ideal(&out).map_err(Box::new)?;
    let a_in_adapted = Subspace::span(
        lie.field(),
        d,
        (0..r).map(|i| out.basis_vector(i)).collect(),
    )?;
    if !a_in_adapted.contains(&squares)? {
        return Err(CompanionError::SquaresEscapeIdeal);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Variant};
    use crate::field::Field;

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    fn cor_a_split(alg: &Algebra) -> Decomposition {
        let f = alg.field();
        let a = Subspace::span(
            f,
            5,
            vec![alg.basis_vector(0), alg.basis_vector(1), alg.basis_vector(2)],
        )
        .unwrap();
        let h = Subspace::span(f, 5, vec![alg.basis_vector(3), alg.basis_vector(4)]).unwrap();
        Decomposition::from_parts(alg, a, h).unwrap()
    }

    #[test]
    fn decompose_cor_a() {
        let alg = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let dec = decompose(&alg, &b()).unwrap();
        assert_eq!(dec, cor_a_split(&alg));
    }

    #[test]
    fn decompose_errors() {
        let ab = catalog::abelian(2, gf(2)).unwrap();
        assert_eq!(decompose(&ab, &b()).unwrap_err(), CompanionError::MinimalIdealNotUnique(3));

        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        assert_eq!(decompose(&c, &b()).unwrap_err(), CompanionError::NoComplement);
    }

    #[test]
    fn companion_of_cor_a_is_lie_and_round_trips() {
        let alg = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let dec = decompose(&alg, &b()).unwrap();
        let c = companion_lie(&alg, &dec).unwrap();
        assert!(c.is_lie());
        // adapted basis is the standard basis here, so the parts transfer
        let dec_c = Decomposition::from_parts(&c, dec.ideal().clone(), dec.complement().clone()).unwrap();
        let back = leibnizize(&c, &dec_c).unwrap();
        assert!(back.tensor_eq(&alg));
        // the companion agrees with the input on H x H and H x A, negates
        // the transpose action on A x H, and kills A x A
        for i in 3..5 {
            for j in 0..5 {
                assert_eq!(c.basis_product(i, j), alg.basis_product(i, j));
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                assert!(c.basis_product(i, j).iter().all(|s| s.is_zero()));
            }
        }
        for a_idx in 0..3 {
            for h_idx in 3..5 {
                let neg: Vec<Scalar> =
                    alg.basis_product(h_idx, a_idx).iter().map(|s| -s).collect();
                assert_eq!(c.basis_product(a_idx, h_idx), neg.as_slice());
            }
        }
    }

    #[test]
    fn companion_of_lie_variant_is_identity() {
        let alg = catalog::cor_a(3, gf(3), Variant::Lie).unwrap();
        let dec = cor_a_split(&alg);
        let c = companion_lie(&alg, &dec).unwrap();
        assert!(c.tensor_eq(&alg));
    }

    #[test]
    fn leibnizize_matches_catalog_variants() {
        let lie = catalog::cor_a(3, gf(3), Variant::Lie).unwrap();
        let dec = cor_a_split(&lie);
        let out = leibnizize(&lie, &dec).unwrap();
        let expected = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        assert!(out.tensor_eq(&expected));

        let ab = catalog::abelian(3, Field::rational()).unwrap();
        let a = Subspace::span(Field::rational(), 3, vec![ab.basis_vector(0)]).unwrap();
        let h = Subspace::span(
            Field::rational(),
            3,
            vec![ab.basis_vector(1), ab.basis_vector(2)],
        )
        .unwrap();
        let dec = Decomposition::from_parts(&ab, a, h).unwrap();
        assert!(leibnizize(&ab, &dec).unwrap().tensor_eq(&ab));
    }

    #[test]
    fn squares_fallback_split_matches() {
        let alg = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let dec = decompose_via_squares(&alg, &b()).unwrap();
        assert_eq!(dec, cor_a_split(&alg));
    }

    #[test]
    fn companion_rejects_bad_inputs() {
        let alg = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let f = gf(3);
        // wrong split: swap roles so the "ideal" part is the complement
        let a = Subspace::span(f, 5, vec![alg.basis_vector(3), alg.basis_vector(4)]).unwrap();
        let h = Subspace::span(
            f,
            5,
            vec![alg.basis_vector(0), alg.basis_vector(1), alg.basis_vector(2)],
        )
        .unwrap();
        assert!(Decomposition::from_parts(&alg, a, h).is_err());
    }
}
