//! The algebra value: a structure-constant tensor with its products,
//! left-multiplication operators, identity checks, generated subalgebras,
//! ideals, quotients, and induced algebras on subalgebras.

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::matrix::{LinalgError, Matrix, Vector};
use crate::subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("tensor has {got} entries, expected {expected}")]
    TensorSize { expected: usize, got: usize },
    #[error("vector length {got} does not match algebra dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("labels must be {0} distinct tokens")]
    BadLabels(usize),
    #[error("entry does not belong to the algebra's field")]
    ForeignScalar,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("basis rows are not invertible")]
    SingularBasis,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which identity failed, on which basis indices, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWitness {
    pub kind: WitnessKind,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Leibniz,
    Antisymmetry,
    Jacobi,
}

/// A finite-dimensional algebra given by structure constants:
/// `e_i e_j = sum_k c[i][j][k] e_k`, stored row-major as `tensor[(i*d + j)*d + k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    tensor: Vec<Scalar>,
    labels: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(
        field: Field,
        dim: usize,
        tensor: Vec<Scalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        let expected = dim * dim * dim;
        if tensor.len() != expected {
            return Err(AlgebraError::TensorSize { expected, got: tensor.len() });
        }
        if tensor.iter().any(|s| s.field() != field) {
            return Err(AlgebraError::ForeignScalar);
        }
        if let Some(l) = &labels {
            let mut seen = l.clone();
            seen.sort();
            seen.dedup();
            if l.len() != dim || seen.len() != dim {
                return Err(AlgebraError::BadLabels(dim));
            }
        }
        Ok(Algebra { field, dim, tensor, labels })
    }

    pub fn zero_algebra(field: Field, dim: usize) -> Self {
        Algebra { field, dim, tensor: vec![field.zero(); dim * dim * dim], labels: None }
    }

    /// Build from a sparse product list: `e_i e_j = sum of (coeff, k)` terms.
    pub fn from_products(
        field: Field,
        dim: usize,
        products: &[(usize, usize, Vec<(Scalar, usize)>)],
    ) -> Result<Self, AlgebraError> {
        let mut alg = Self::zero_algebra(field, dim);
        for (i, j, terms) in products {
            for (coeff, k) in terms {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(AlgebraError::DimensionMismatch { expected: dim, got: *k.max(i).max(j) + 1 });
                }
                if coeff.field() != field {
                    return Err(AlgebraError::ForeignScalar);
                }
                let idx = (i * dim + j) * dim + k;
                alg.tensor[idx] = &alg.tensor[idx] + coeff;
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if labels.len() != self.dim || seen.len() != self.dim {
            return Err(AlgebraError::BadLabels(self.dim));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The structure-constant row `e_i e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim;
        &self.tensor[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    /// Tensor equality, ignoring labels.
    pub fn tensor_eq(&self, other: &Algebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.tensor == other.tensor
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// Bilinear extension of the tensor.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.check_vec(u)?;
        self.check_vec(v)?;
        let mut out = self.zero_vector();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let row = self.basis_product(i, j);
                for k in 0..self.dim {
                    if row[k].is_zero() {
                        continue;
                    }
                    out[k] = &out[k] + &(&ab * &row[k]);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of left multiplication `v -> x v` in the standard basis.
    pub fn left_op(&self, x: &[Scalar]) -> Result<Matrix, AlgebraError> {
        self.check_vec(x)?;
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let row = self.basis_product(i, j);
                for k in 0..self.dim {
                    if row[k].is_zero() {
                        continue;
                    }
                    let v = m.get(k, j) + &(a * &row[k]);
                    m.set(k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Matrix of right multiplication `v -> v x`.
    pub fn right_op(&self, x: &[Scalar]) -> Result<Matrix, AlgebraError> {
        self.check_vec(x)?;
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                let row = self.basis_product(i, j);
                for k in 0..self.dim {
                    if row[k].is_zero() {
                        continue;
                    }
                    let v = m.get(k, i) + &(a * &row[k]);
                    m.set(k, i, v);
                }
            }
        }
        Ok(m)
    }

    /// Left Leibniz identity `a(bc) = (ab)c + b(ac)` on all basis triples.
    /// Returns a witness for the first failing triple, `None` when it holds.
    pub fn leibniz_witness(&self) -> Option<IdentityWitness> {
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let bc = self.basis_product(b, c).to_vec();
                    let lhs = self
                        .multiply(&self.basis_vector(a), &bc)
                        .expect("basis vectors have the right length");
                    let ab = self.basis_product(a, b).to_vec();
                    let t1 = self.multiply(&ab, &self.basis_vector(c)).unwrap();
                    let ac = self.basis_product(a, c).to_vec();
                    let t2 = self.multiply(&self.basis_vector(b), &ac).unwrap();
                    let rhs: Vector = t1.iter().zip(&t2).map(|(x, y)| x + y).collect();
                    if lhs != rhs {
                        return Some(IdentityWitness {
                            kind: WitnessKind::Leibniz,
                            indices: vec![a, b, c],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_witness().is_none()
    }

    /// Lie check: squares vanish, the product is antisymmetric, and the
    /// Jacobi identity holds on basis triples.
    pub fn lie_witness(&self) -> Option<IdentityWitness> {
        for i in 0..self.dim {
            let sq = self.basis_product(i, i);
            if sq.iter().any(|s| !s.is_zero()) {
                return Some(IdentityWitness {
                    kind: WitnessKind::Antisymmetry,
                    indices: vec![i, i],
                    lhs: sq.to_vec(),
                    rhs: self.zero_vector(),
                });
            }
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.basis_product(i, j);
                let ji_neg: Vector = self.basis_product(j, i).iter().map(|s| -s).collect();
                if ij != ji_neg.as_slice() {
                    return Some(IdentityWitness {
                        kind: WitnessKind::Antisymmetry,
                        indices: vec![i, j],
                        lhs: ij.to_vec(),
                        rhs: ji_neg,
                    });
                }
            }
        }
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let t1 = self.multiply(&self.basis_vector(a), self.basis_product(b, c)).unwrap();
                    let t2 = self.multiply(&self.basis_vector(b), self.basis_product(c, a)).unwrap();
                    let t3 = self.multiply(&self.basis_vector(c), self.basis_product(a, b)).unwrap();
                    let sum: Vector = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .map(|((x, y), z)| &(x + y) + z)
                        .collect();
                    if sum.iter().any(|s| !s.is_zero()) {
                        return Some(IdentityWitness {
                            kind: WitnessKind::Jacobi,
                            indices: vec![a, b, c],
                            lhs: sum,
                            rhs: self.zero_vector(),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_lie(&self) -> bool {
        self.lie_witness().is_none()
    }

    /// Canonical span of `{a b : a in basis(u), b in basis(v)}`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, AlgebraError> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let mut rows = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                rows.push(self.multiply(&a, &b)?);
            }
        }
        Ok(Subspace::span(self.field, self.dim, rows)?)
    }

    fn check_subspace(&self, s: &Subspace) -> Result<(), AlgebraError> {
        if s.ambient() != self.dim || s.field() != self.field {
            return Err(AlgebraError::Linalg(LinalgError::AmbientMismatch));
        }
        Ok(())
    }

    /// Least subspace containing the generators and closed under the product,
    /// by iterating span-and-multiply to a fixed point.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Result<Subspace, AlgebraError> {
        for g in gens {
            self.check_vec(g)?;
        }
        let mut current = Subspace::span(self.field, self.dim, gens.to_vec())?;
        loop {
            let product = self.subspace_product(&current, &current)?;
            let next = current.sum(&product)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Closure under products: `U U <= U`, tested on basis pairs.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(s)?;
        let rows = s.basis_rows();
        for a in &rows {
            for b in &rows {
                if !s.contains_vector(&self.multiply(a, b)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Two-sided ideal test: `L U <= U` and `U L <= U` on basis pairs.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(s)?;
        let rows = s.basis_rows();
        for u in &rows {
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                if !s.contains_vector(&self.multiply(&e, u)?)? {
                    return Ok(false);
                }
                if !s.contains_vector(&self.multiply(u, &e)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Quotient by a two-sided ideal. The quotient basis is formed by the
    /// standard coordinates at the non-pivot positions of the ideal's echelon
    /// basis, which makes the output tensor deterministic.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Matrix), AlgebraError> {
        let (alg, proj, _) = self.quotient_with_section(ideal)?;
        Ok((alg, proj))
    }

    /// Quotient together with the canonical section (coset representatives).
    pub fn quotient_with_section(
        &self,
        ideal: &Subspace,
    ) -> Result<(Algebra, Matrix, Matrix), AlgebraError> {
        self.check_subspace(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(AlgebraError::NotAnIdeal);
        }
        let pivots = ideal.pivots();
        let coords = ideal.non_pivot_columns();
        let qdim = coords.len();
        // projection: eliminate pivot coordinates, then read the rest
        let mut proj = Matrix::zeros(self.field, qdim, self.dim);
        for (t, &c) in coords.iter().enumerate() {
            proj.set(t, c, self.field.one());
            for (j, &p) in pivots.iter().enumerate() {
                proj.set(t, p, -ideal.basis().get(j, c));
            }
        }
        // section: coset representative of the t-th quotient coordinate
        let mut section = Matrix::zeros(self.field, self.dim, qdim);
        for (t, &c) in coords.iter().enumerate() {
            section.set(c, t, self.field.one());
        }
        let mut tensor = Vec::with_capacity(qdim * qdim * qdim);
        for &ci in &coords {
            for &cj in &coords {
                let prod = self.basis_product(ci, cj).to_vec();
                let image = proj.mul_vec(&prod)?;
                tensor.extend(image);
            }
        }
        let alg = Algebra::new(self.field, qdim, tensor, None)?;
        Ok((alg, proj, section))
    }

    /// A subalgebra as a standalone algebra in its echelon coordinates,
    /// together with the inclusion matrix (columns are the basis vectors).
    pub fn subalgebra_algebra(&self, s: &Subspace) -> Result<(Algebra, Matrix), AlgebraError> {
        self.check_subspace(s)?;
        let k = s.dim();
        let rows = s.basis_rows();
        let mut tensor = Vec::with_capacity(k * k * k);
        for a in &rows {
            for b in &rows {
                let prod = self.multiply(a, b)?;
                let Some(coords) = s.coords_of(&prod)? else {
                    return Err(AlgebraError::NotClosed);
                };
                tensor.extend(coords);
            }
        }
        let mut inclusion = Matrix::zeros(self.field, self.dim, k);
        for (j, row) in rows.iter().enumerate() {
            for i in 0..self.dim {
                inclusion.set(i, j, row[i].clone());
            }
        }
        let alg = Algebra::new(self.field, k, tensor, None)?;
        Ok((alg, inclusion))
    }

    /// The same algebra expressed in a new basis (rows of `basis`).
    pub fn in_basis(&self, basis: &Matrix) -> Result<Algebra, AlgebraError> {
        if basis.rows() != self.dim || basis.cols() != self.dim || basis.field() != self.field {
            return Err(AlgebraError::Linalg(LinalgError::AmbientMismatch));
        }
        // coordinates w.r.t. the new basis: solve B^T x = v
        let mut bt = Matrix::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                bt.set(j, i, basis.get(i, j).clone());
            }
        }
        let Some(inv) = bt.inverse()? else {
            return Err(AlgebraError::SingularBasis);
        };
        let mut tensor = Vec::with_capacity(self.dim * self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.multiply(basis.row(i), basis.row(j))?;
                tensor.extend(inv.mul_vec(&prod)?);
            }
        }
        Algebra::new(self.field, self.dim, tensor, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::catalog::Variant;

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    #[test]
    fn multiply_cyclic_example() {
        let alg = catalog::cyclic_leibniz(2, Field::rational()).unwrap();
        let e1 = alg.basis_vector(0);
        assert_eq!(alg.multiply(&e1, &e1).unwrap(), alg.basis_vector(1));
        let zero = alg.zero_vector();
        assert_eq!(alg.multiply(&zero, &e1).unwrap(), zero);
    }

    #[test]
    fn multiply_heisenberg_example() {
        let h = catalog::heisenberg(Field::rational()).unwrap();
        let (x, y, z) = (h.basis_vector(0), h.basis_vector(1), h.basis_vector(2));
        assert_eq!(h.multiply(&x, &y).unwrap(), z);
        let minus_z: Vector = z.iter().map(|s| -s).collect();
        assert_eq!(h.multiply(&y, &x).unwrap(), minus_z);
    }

    #[test]
    fn left_op_examples() {
        let abelian = catalog::abelian(3, Field::rational()).unwrap();
        let x = abelian.basis_vector(1);
        assert!(abelian.left_op(&x).unwrap().is_zero());

        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        let m = c.left_op(&c.basis_vector(0)).unwrap();
        assert_eq!(m.mul_vec(&c.basis_vector(0)).unwrap(), c.basis_vector(1));
        assert!(m.mul_vec(&c.basis_vector(1)).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn left_op_diagonal_on_cor_a() {
        // y acts diagonally; the value on x is fixed by the Leibniz identity
        let alg = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let y = alg.basis_vector(4);
        let m = alg.left_op(&y).unwrap();
        let f = gf(3);
        let expected = Matrix::from_i64(f, &[
            &[2, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 0],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn fitting_null_of_cor_a_left_op() {
        let alg = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let m = alg.left_op(&alg.basis_vector(4)).unwrap();
        // independent route: raise to the 5th power and take the kernel
        let null = crate::subspace::kernel(&m.pow(5).unwrap());
        assert_eq!(null, crate::subspace::fitting_null(&m).unwrap());
        let f = gf(3);
        let expected = Subspace::span(
            f,
            5,
            vec![alg.basis_vector(2), alg.basis_vector(4)],
        )
        .unwrap();
        assert_eq!(null, expected);
    }

    #[test]
    fn leibniz_check_on_small_algebras() {
        assert!(catalog::abelian(4, gf(2)).unwrap().is_leibniz());
        assert!(catalog::cyclic_leibniz(2, Field::rational()).unwrap().is_leibniz());
        // one-dimensional idempotent fails over Q with witness (0,0,0)
        let q = Field::rational();
        let idem = Algebra::from_products(q, 1, &[(0, 0, vec![(q.one(), 0)])]).unwrap();
        let w = idem.leibniz_witness().expect("idempotent is not Leibniz");
        assert_eq!(w.kind, WitnessKind::Leibniz);
        assert_eq!(w.indices, vec![0, 0, 0]);
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn lie_check_examples() {
        assert!(catalog::heisenberg(Field::rational()).unwrap().is_lie());
        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        let w = c.lie_witness().expect("cyclic algebra is not Lie");
        assert_eq!(w.kind, WitnessKind::Antisymmetry);
        assert_eq!(w.indices, vec![0, 0]);
        assert_eq!(w.lhs, c.basis_vector(1));
    }

    #[test]
    fn subspace_product_examples() {
        let abelian = catalog::abelian(3, gf(2)).unwrap();
        let full = abelian.full_space();
        assert!(abelian.subspace_product(&full, &full).unwrap().is_zero());

        let h = catalog::heisenberg(gf(3)).unwrap();
        let sq = h.subspace_product(&h.full_space(), &h.full_space()).unwrap();
        assert_eq!(sq, Subspace::span(gf(3), 3, vec![h.basis_vector(2)]).unwrap());

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let sq = a.subspace_product(&a.full_space(), &a.full_space()).unwrap();
        let expected = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2), a.basis_vector(3)],
        )
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn generated_subalgebra_examples() {
        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        assert!(a.generated_subalgebra(&[a.zero_vector()]).unwrap().is_zero());

        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        assert!(c.generated_subalgebra(&[c.basis_vector(0)]).unwrap().is_full());

        // y together with x + e1 generates everything
        let f = gf(3);
        let mut xe = a.basis_vector(3);
        xe[0] = f.one();
        let gen = a.generated_subalgebra(&[a.basis_vector(4), xe]).unwrap();
        assert!(gen.is_full());
    }

    #[test]
    fn ideal_and_subalgebra_tests() {
        let h = catalog::heisenberg(gf(2)).unwrap();
        let z = Subspace::span(gf(2), 3, vec![h.basis_vector(2)]).unwrap();
        assert!(h.is_ideal(&z).unwrap());
        let xy = Subspace::span(gf(2), 3, vec![h.basis_vector(0), h.basis_vector(1)]).unwrap();
        assert!(!h.is_subalgebra(&xy).unwrap());

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let ax = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2), a.basis_vector(3)],
        )
        .unwrap();
        assert!(a.is_ideal(&ax).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        let e2 = Subspace::span(gf(3), 2, vec![c.basis_vector(1)]).unwrap();
        let (q, proj) = c.quotient(&e2).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.tensor().iter().all(Scalar::is_zero));
        assert_eq!(proj.rows(), 1);

        let h = catalog::heisenberg(gf(2)).unwrap();
        let z = Subspace::span(gf(2), 3, vec![h.basis_vector(2)]).unwrap();
        let (q, _) = h.quotient(&z).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.tensor().iter().all(Scalar::is_zero));

        let (same, _) = c.quotient(&c.zero_subspace()).unwrap();
        assert!(same.tensor_eq(&c));

        // quotient by a non-ideal is refused
        let e1 = Subspace::span(gf(3), 2, vec![c.basis_vector(0)]).unwrap();
        assert_eq!(c.quotient(&e1).unwrap_err(), AlgebraError::NotAnIdeal);
    }

    #[test]
    fn subalgebra_algebra_examples() {
        let h = catalog::heisenberg(gf(3)).unwrap();
        let (full, _) = h.subalgebra_algebra(&h.full_space()).unwrap();
        assert!(full.tensor_eq(&h));

        let yz = Subspace::span(gf(3), 3, vec![h.basis_vector(1), h.basis_vector(2)]).unwrap();
        let (sub, incl) = h.subalgebra_algebra(&yz).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.tensor().iter().all(Scalar::is_zero));
        // inclusion commutes with multiplication on basis pairs
        for i in 0..2 {
            for j in 0..2 {
                let inside = incl.mul_vec(sub.basis_product(i, j)).unwrap();
                let outside = h
                    .multiply(&incl.mul_vec(&sub.basis_vector(i)).unwrap(), &incl.mul_vec(&sub.basis_vector(j)).unwrap())
                    .unwrap();
                assert_eq!(inside, outside);
            }
        }

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let hsub = Subspace::span(gf(3), 5, vec![a.basis_vector(3), a.basis_vector(4)]).unwrap();
        let (halg, _) = a.subalgebra_algebra(&hsub).unwrap();
        // in echelon coordinates (x, y): y x = -x and x y = x
        let f = gf(3);
        assert_eq!(halg.basis_product(1, 0), &[f.element(-1), f.zero()]);
        assert_eq!(halg.basis_product(0, 1), &[f.one(), f.zero()]);

        let xy = Subspace::span(gf(3), 3, vec![h.basis_vector(0), h.basis_vector(1)]).unwrap();
        assert_eq!(h.subalgebra_algebra(&xy).unwrap_err(), AlgebraError::NotClosed);
    }

    #[test]
    fn change_of_basis_round_trip() {
        let h = catalog::heisenberg(gf(5)).unwrap();
        let basis = Matrix::from_i64(gf(5), &[&[1, 1, 0], &[0, 1, 0], &[0, 2, 1]]);
        let moved = h.in_basis(&basis).unwrap();
        assert!(moved.is_lie());
        let id = Matrix::identity(gf(5), 3);
        assert!(h.in_basis(&id).unwrap().tensor_eq(&h));
    }
}
