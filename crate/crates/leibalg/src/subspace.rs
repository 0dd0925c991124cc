//! Canonical subspaces of F^d.
//!
//! A subspace is stored as the unique reduced row-echelon basis without zero
//! rows, so equality of subspaces is plain structural equality. Everything
//! downstream (subalgebras, ideals, flags, socles) is a `Subspace`.

use crate::field::{Field, Scalar};
use crate::matrix::{LinalgError, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient) }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient) }
    }

    /// Canonical span of a list of vectors.
    pub fn span(field: Field, ambient: usize, rows: Vec<Vector>) -> Result<Self, LinalgError> {
        for r in &rows {
            if r.len() != ambient {
                return Err(LinalgError::AmbientMismatch);
            }
        }
        if rows.is_empty() {
            return Ok(Self::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, rows)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Canonical span of the rows of a matrix.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let red = m.rref();
        let rows: Vec<Vector> = (0..red.rank).map(|i| red.matrix.row_vec(i)).collect();
        let basis = Matrix::from_rows(m.field(), rows)
            .unwrap_or_else(|_| Matrix::zeros(m.field(), 0, m.cols()));
        let basis = if red.rank == 0 { Matrix::zeros(m.field(), 0, m.cols()) } else { basis };
        Subspace { ambient: m.cols(), basis }
    }

    pub fn line(field: Field, v: Vector) -> Result<Self, LinalgError> {
        let ambient = v.len();
        Self::span(field, ambient, vec![v])
    }

    /// Wrap a matrix already known to be in reduced row-echelon form with no
    /// zero rows (the enumeration produces these directly).
    pub(crate) fn from_rref_unchecked(basis: Matrix) -> Self {
        debug_assert!({
            let red = basis.rref();
            red.matrix == basis && red.rank == basis.rows()
        });
        Subspace { ambient: basis.cols(), basis }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    /// Pivot columns of the echelon basis.
    pub fn pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let c = (0..self.ambient)
                .find(|&j| !self.basis.get(i, j).is_zero())
                .expect("echelon basis has no zero rows");
            out.push(c);
        }
        out
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient).filter(|c| !pivots.contains(c)).collect()
    }

    fn check_compat(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient || self.field() != other.field() {
            return Err(LinalgError::AmbientMismatch);
        }
        Ok(())
    }

    /// Membership test: reduce `v` against the echelon basis.
    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.coords_of(v)?.is_some())
    }

    /// Coordinates of `v` in the echelon basis, or `None` when outside.
    ///
    /// With a reduced echelon basis the coefficient of row `j` is just the
    /// entry of `v` at the j-th pivot column.
    pub fn coords_of(&self, v: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::AmbientMismatch);
        }
        let pivots = self.pivots();
        let coeffs: Vector = pivots.iter().map(|&c| v[c].clone()).collect();
        let mut residual = v.to_vec();
        for (j, coeff) in coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for c in 0..self.ambient {
                let t = &residual[c] - &(coeff * self.basis.get(j, c));
                residual[c] = t;
            }
        }
        if residual.iter().all(Scalar::is_zero) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compat(other)?;
        for i in 0..other.dim() {
            if !self.contains_vector(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compat(other)?;
        let stacked = Matrix::stack(&self.basis, &other.basis)?;
        Ok(Self::from_matrix_rows(&stacked))
    }

    /// Intersection via the kernel of the stacked coordinate system: a kernel
    /// element of `[U; V]^T` encodes one combination of U-rows equal to a
    /// combination of V-rows.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compat(other)?;
        let k1 = self.dim();
        let k2 = other.dim();
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        // columns are the basis vectors of both subspaces
        let mut m = Matrix::zeros(self.field(), self.ambient, k1 + k2);
        for j in 0..k1 {
            for i in 0..self.ambient {
                m.set(i, j, self.basis.get(j, i).clone());
            }
        }
        for j in 0..k2 {
            for i in 0..self.ambient {
                m.set(i, k1 + j, other.basis.get(j, i).clone());
            }
        }
        let ker = kernel(&m);
        let mut rows = Vec::new();
        for coeffs in ker.basis_rows() {
            let mut v = vec![self.field().zero(); self.ambient];
            for (j, c) in coeffs[..k1].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for t in 0..self.ambient {
                    v[t] = &v[t] + &(c * self.basis.get(j, t));
                }
            }
            rows.push(v);
        }
        Subspace::span(self.field(), self.ambient, rows)
    }

    /// Restriction of a square operator to an invariant subspace, in the
    /// subspace's echelon coordinates. Non-invariance is an error.
    pub fn restrict_operator(&self, m: &Matrix) -> Result<Matrix, LinalgError> {
        if m.rows() != m.cols() {
            return Err(LinalgError::NonSquare);
        }
        if m.cols() != self.ambient || m.field() != self.field() {
            return Err(LinalgError::AmbientMismatch);
        }
        let k = self.dim();
        let mut out = Matrix::zeros(self.field(), k, k);
        for j in 0..k {
            let image = m.mul_vec(self.basis.row(j))?;
            let Some(coords) = self.coords_of(&image)? else {
                return Err(LinalgError::NotInvariant);
            };
            for i in 0..k {
                out.set(i, j, coords[i].clone());
            }
        }
        Ok(out)
    }
}

/// Kernel of a matrix as a canonical subspace of F^cols.
pub fn kernel(m: &Matrix) -> Subspace {
    let red = m.rref();
    let field = m.field();
    let n = m.cols();
    let mut rows = Vec::new();
    for c in 0..n {
        if red.pivots.contains(&c) {
            continue;
        }
        let mut v = vec![field.zero(); n];
        v[c] = field.one();
        for (j, &p) in red.pivots.iter().enumerate() {
            v[p] = -red.matrix.get(j, c);
        }
        rows.push(v);
    }
    Subspace::span(field, n, rows).expect("kernel rows share the ambient dimension")
}

/// Fitting null component of a square operator: the kernel of its d-th power.
pub fn fitting_null(m: &Matrix) -> Result<Subspace, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::NonSquare);
    }
    Ok(kernel(&m.pow(m.rows())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    fn e(field: Field, d: usize, i: usize) -> Vector {
        let mut v = vec![field.zero(); d];
        v[i] = field.one();
        v
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = gf(3);
        assert!(kernel(&Matrix::identity(f, 3)).is_zero());
        assert!(kernel(&Matrix::zeros(f, 3, 3)).is_full());
    }

    #[test]
    fn kernel_gf2_line() {
        let f = gf(2);
        let m = Matrix::from_i64(f, &[&[1, 1]]);
        let k = kernel(&m);
        assert_eq!(k, Subspace::span(f, 2, vec![vec![f.one(), f.one()]]).unwrap());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let f = gf(3);
        let u = Subspace::span(f, 2, vec![e(f, 2, 0)]).unwrap();
        let v = Subspace::span(f, 2, vec![e(f, 2, 1)]).unwrap();
        assert!(u.sum(&v).unwrap().is_full());
        let diag = Subspace::span(f, 2, vec![vec![f.one(), f.one()]]).unwrap();
        assert!(diag.intersect(&u).unwrap().is_zero());
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn membership() {
        let f = gf(5);
        let s = Subspace::span(f, 3, vec![vec![f.one(), f.one(), f.zero()], e(f, 3, 2)]).unwrap();
        assert!(s.contains_vector(&[f.one(), f.one(), f.zero()]).unwrap());
        assert!(s.contains_vector(&[f.element(2), f.element(2), f.element(4)]).unwrap());
        assert!(!s.contains_vector(&e(f, 3, 0)).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = gf(2);
        let u = Subspace::full(f, 2);
        let v = Subspace::full(f, 3);
        assert!(u.sum(&v).is_err());
        let w = Subspace::full(gf(3), 2);
        assert!(u.intersect(&w).is_err());
    }

    #[test]
    fn fitting_null_examples() {
        let q = Field::rational();
        let nilp = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
        assert!(fitting_null(&nilp).unwrap().is_full());
        assert!(fitting_null(&Matrix::identity(q, 3)).unwrap().is_zero());
    }

    #[test]
    fn kernel_chain_stabilizes_within_dim_steps() {
        let f = gf(3);
        let m = Matrix::from_i64(f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 2]]);
        let mut prev = kernel(&m.pow(1).unwrap());
        for k in 2..=4 {
            let next = kernel(&m.pow(k).unwrap());
            assert!(next.contains(&prev).unwrap());
            prev = next;
        }
        assert_eq!(prev, kernel(&m.pow(5).unwrap()));
        assert_eq!(prev, fitting_null(&m).unwrap());
    }

    #[test]
    fn fitting_null_is_invariant_and_nilpotent_on_restriction() {
        let f = gf(3);
        let m = Matrix::from_i64(f, &[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let null = fitting_null(&m).unwrap();
        let restricted = null.restrict_operator(&m).unwrap();
        assert!(restricted.is_nilpotent().unwrap());
    }

    fn random_subspace(p: u64, d: usize) -> impl Strategy<Value = Subspace> {
        let f = gf(p);
        prop::collection::vec(prop::collection::vec(0..p as i64, d), 0..=d).prop_map(
            move |rows| {
                let rows = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|n| f.element(n)).collect())
                    .collect();
                Subspace::span(f, d, rows).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn dimension_formula(u in random_subspace(3, 4), v in random_subspace(3, 4)) {
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
            prop_assert!(s.contains(&u).unwrap());
            prop_assert!(u.contains(&i).unwrap());
        }

        #[test]
        fn span_is_idempotent(u in random_subspace(2, 5)) {
            let again = Subspace::span(u.field(), u.ambient(), u.basis_rows()).unwrap();
            prop_assert_eq!(again, u);
        }
    }
}
