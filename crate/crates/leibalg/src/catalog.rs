//! Deterministic builders for the explicit algebra families used throughout
//! the test batteries, plus a general semidirect-sum constructor.
//!
//! The p-parameterized families live on a basis `(e_1, ..., e_p, x, y[, z])`
//! with an abelian module part `A = <e_1..e_p>` and a small Lie part `H`
//! acting on the left; indices on the `e_i` wrap mod p. Each family comes in
//! a `leibniz` variant (`A L = 0`) and a `lie` variant (antisymmetric
//! completion). All builders verify the Leibniz identity on the result and
//! fail loudly instead of returning a bad tensor.

use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("field {field} does not have characteristic {p}")]
    CharacteristicMismatch { field: Field, p: u16 },
    #[error("action is not compatible with the product of h at basis pair ({0}, {1})")]
    ActionIncompatible(usize, usize),
    #[error("constructed tensor violates the Leibniz identity")]
    NotLeibniz,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Lie,
    Leibniz,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Lie => write!(f, "lie"),
            Variant::Leibniz => write!(f, "leibniz"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    CorA,
    CorB,
    Thm5_2a,
    Thm5_2b,
    Heisenberg,
    Abelian,
    CyclicLeibniz,
    Sl2,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "cor_a" => Family::CorA,
            "cor_b" => Family::CorB,
            "thm5_2a" => Family::Thm5_2a,
            "thm5_2b" => Family::Thm5_2b,
            "heisenberg" => Family::Heisenberg,
            "abelian" => Family::Abelian,
            "cyclic_leibniz" => Family::CyclicLeibniz,
            "sl2" => Family::Sl2,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::CorA => "cor_a",
            Family::CorB => "cor_b",
            Family::Thm5_2a => "thm5_2a",
            Family::Thm5_2b => "thm5_2b",
            Family::Heisenberg => "heisenberg",
            Family::Abelian => "abelian",
            Family::CyclicLeibniz => "cyclic_leibniz",
            Family::Sl2 => "sl2",
        }
    }
}

/// Parameters for [`build`]. `p` is required for the p-families, `n` for
/// `abelian`/`cyclic_leibniz`, `alpha` only for `thm5_2a`.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: Family,
    pub p: Option<u16>,
    pub field: Field,
    pub variant: Variant,
    pub alpha: Option<Scalar>,
    pub n: Option<usize>,
}

pub fn build(spec: &FamilySpec) -> Result<Algebra, CatalogError> {
    match spec.family {
        Family::CorA => cor_a(require_p(spec)?, spec.field, spec.variant),
        Family::CorB => cor_b(require_p(spec)?, spec.field, spec.variant),
        Family::Thm5_2a => {
            let alpha = spec
                .alpha
                .clone()
                .unwrap_or_else(|| spec.field.zero());
            thm5_2a(require_p(spec)?, spec.field, &alpha, spec.variant)
        }
        Family::Thm5_2b => thm5_2b(require_p(spec)?, spec.field, spec.variant),
        Family::Heisenberg => heisenberg(spec.field),
        Family::Abelian => abelian(require_n(spec)?, spec.field),
        Family::CyclicLeibniz => cyclic_leibniz(require_n(spec)?, spec.field),
        Family::Sl2 => sl2(spec.field),
    }
}

fn require_p(spec: &FamilySpec) -> Result<u16, CatalogError> {
    let p = spec
        .p
        .ok_or_else(|| CatalogError::InvalidSpec(format!("family {} needs p", spec.family.name())))?;
    if spec.alpha.is_some() && spec.family != Family::Thm5_2a {
        return Err(CatalogError::InvalidSpec("alpha is only valid for thm5_2a".into()));
    }
    if spec.field.modulus() != Some(p) {
        return Err(CatalogError::CharacteristicMismatch { field: spec.field, p });
    }
    Ok(p)
}

fn require_n(spec: &FamilySpec) -> Result<usize, CatalogError> {
    spec.n
        .ok_or_else(|| CatalogError::InvalidSpec(format!("family {} needs n", spec.family.name())))
}

fn module_labels(p: u16, h_labels: &[&str]) -> Vec<String> {
    let mut l: Vec<String> = (1..=p).map(|i| format!("e{i}")).collect();
    l.extend(h_labels.iter().map(|s| s.to_string()));
    l
}

/// The two-dimensional nonabelian Lie algebra on `(x, y)` with `y x = s x`.
fn two_dim_h(field: Field, yx_sign: i64) -> Result<Algebra, CatalogError> {
    let alg = Algebra::from_products(
        field,
        2,
        &[
            (1, 0, vec![(field.element(yx_sign), 0)]),
            (0, 1, vec![(field.element(-yx_sign), 0)]),
        ],
    )?;
    Ok(alg)
}

/// Heisenberg Lie algebra on `(x, y, z)` with `x y = z`.
pub fn heisenberg(field: Field) -> Result<Algebra, CatalogError> {
    let alg = Algebra::from_products(
        field,
        3,
        &[
            (0, 1, vec![(field.one(), 2)]),
            (1, 0, vec![(field.element(-1), 2)]),
        ],
    )?
    .with_labels(vec!["x".into(), "y".into(), "z".into()])?;
    Ok(alg)
}

/// Heisenberg with the opposite pairing, `y x = z`; the complement part of
/// the `thm5_2b` family.
fn heisenberg_yx(field: Field) -> Result<Algebra, CatalogError> {
    let alg = Algebra::from_products(
        field,
        3,
        &[
            (1, 0, vec![(field.one(), 2)]),
            (0, 1, vec![(field.element(-1), 2)]),
        ],
    )?;
    Ok(alg)
}

pub fn abelian(n: usize, field: Field) -> Result<Algebra, CatalogError> {
    Ok(Algebra::zero_algebra(field, n))
}

/// One-generated nilpotent Leibniz algebra: `e_1 e_i = e_{i+1}` for `i < n`.
pub fn cyclic_leibniz(n: usize, field: Field) -> Result<Algebra, CatalogError> {
    let mut products = Vec::new();
    for i in 0..n.saturating_sub(1) {
        products.push((0usize, i, vec![(field.one(), i + 1)]));
    }
    let alg = Algebra::from_products(field, n, &products)?;
    debug_assert!(alg.is_leibniz());
    Ok(alg)
}

/// Three-dimensional simple Lie algebra on `(e, f, h)`: `e f = h`,
/// `h e = 2e`, `h f = -2f`, antisymmetrized.
pub fn sl2(field: Field) -> Result<Algebra, CatalogError> {
    let two = field.element(2);
    let m2 = field.element(-2);
    let alg = Algebra::from_products(
        field,
        3,
        &[
            (0, 1, vec![(field.one(), 2)]),
            (1, 0, vec![(field.element(-1), 2)]),
            (2, 0, vec![(two.clone(), 0)]),
            (0, 2, vec![(m2.clone(), 0)]),
            (2, 1, vec![(m2, 1)]),
            (1, 2, vec![(two, 1)]),
        ],
    )?
    .with_labels(vec!["e".into(), "f".into(), "h".into()])?;
    Ok(alg)
}

/// Cyclic-shift action matrix `e_i -> sign * e_{i+1}` (1-based, wrap mod p).
fn shift_action(field: Field, p: u16, sign: i64) -> Matrix {
    let p = p as usize;
    let mut m = Matrix::zeros(field, p, p);
    for i in 0..p {
        m.set((i + 1) % p, i, field.element(sign));
    }
    m
}

/// Diagonal action `e_i -> (alpha + i) e_i`, 1-based index.
fn diag_action(field: Field, p: u16, alpha: &Scalar, sign: i64) -> Matrix {
    let p = p as usize;
    let mut m = Matrix::zeros(field, p, p);
    let s = field.element(sign);
    for i in 0..p {
        let coeff = &(alpha + &field.element(i as i64 + 1)) * &s;
        m.set(i, i, coeff);
    }
    m
}

/// Lowering action `e_i -> (i+1) e_{i-1}`, 1-based index, wrap mod p.
fn lowering_action(field: Field, p: u16) -> Matrix {
    let p = p as usize;
    let mut m = Matrix::zeros(field, p, p);
    for i in 0..p {
        // e_{i+1 (1-based)} maps to (i+2) e_{i (1-based)}
        m.set((i + p - 1) % p, i, field.element(i as i64 + 2));
    }
    m
}

/// Family on `(e_1..e_p, x, y)`: `x e_i = -e_{i+1}`, `y e_i = -i e_i`.
/// The product on `<x, y>` is forced by the Leibniz identity: `y x = -x`.
pub fn cor_a(p: u16, field: Field, variant: Variant) -> Result<Algebra, CatalogError> {
    check_char(field, p)?;
    let h = two_dim_h(field, -1)?;
    let action = vec![shift_action(field, p, -1), diag_action(field, p, &field.zero(), -1)];
    let alg = semidirect(&h, p as usize, &action, variant)?;
    Ok(alg.with_labels(module_labels(p, &["x", "y"]))?)
}

/// Family on `(e_1..e_p, x, y)`: `x e_i = e_{i+1}`, `y e_i = (alpha + i) e_i`,
/// `y x = x`.
pub fn thm5_2a(p: u16, field: Field, alpha: &Scalar, variant: Variant) -> Result<Algebra, CatalogError> {
    check_char(field, p)?;
    if alpha.field() != field {
        return Err(CatalogError::InvalidSpec("alpha must live in the base field".into()));
    }
    let h = two_dim_h(field, 1)?;
    let action = vec![shift_action(field, p, 1), diag_action(field, p, alpha, 1)];
    let alg = semidirect(&h, p as usize, &action, variant)?;
    Ok(alg.with_labels(module_labels(p, &["x", "y"]))?)
}

/// Family on `(e_1..e_p, x, y, z)`: `x e_i = -e_{i+1}`, `y e_i = (i+1) e_{i-1}`,
/// `z e_i = e_i`, with Heisenberg complement; `x y = z` is forced.
pub fn cor_b(p: u16, field: Field, variant: Variant) -> Result<Algebra, CatalogError> {
    check_char(field, p)?;
    let h = heisenberg(field)?;
    let action = vec![
        shift_action(field, p, -1),
        lowering_action(field, p),
        Matrix::identity(field, p as usize),
    ];
    let alg = semidirect(&h, p as usize, &action, variant)?;
    Ok(alg.with_labels(module_labels(p, &["x", "y", "z"]))?)
}

/// Family on `(e_1..e_p, x, y, z)`: `x e_i = e_{i+1}`, `y e_i = (i+1) e_{i-1}`,
/// `z e_i = e_i`, `y x = z`.
pub fn thm5_2b(p: u16, field: Field, variant: Variant) -> Result<Algebra, CatalogError> {
    check_char(field, p)?;
    let h = heisenberg_yx(field)?;
    let action = vec![
        shift_action(field, p, 1),
        lowering_action(field, p),
        Matrix::identity(field, p as usize),
    ];
    let alg = semidirect(&h, p as usize, &action, variant)?;
    Ok(alg.with_labels(module_labels(p, &["x", "y", "z"]))?)
}

fn check_char(field: Field, p: u16) -> Result<(), CatalogError> {
    if field.modulus() != Some(p) {
        return Err(CatalogError::CharacteristicMismatch { field, p });
    }
    Ok(())
}

/// Semidirect sum of an abelian module and an algebra `h` acting on the left.
///
/// The result lives on `A + H` with basis `(e_1..e_m, h-basis)`:
/// `h a = rho(h) a`, `a b = 0`, and `a h` is `-rho(h) a` for the lie variant
/// or `0` for the leibniz variant. The action must be compatible with the
/// product of `h`, `rho(h k) = [rho(h), rho(k)]`; this is verified and a
/// failing basis pair is reported.
pub fn semidirect(
    h: &Algebra,
    module_dim: usize,
    action: &[Matrix],
    variant: Variant,
) -> Result<Algebra, CatalogError> {
    let field = h.field();
    let k = h.dim();
    if action.len() != k {
        return Err(CatalogError::InvalidSpec(format!(
            "need one action matrix per h basis vector ({k}), got {}",
            action.len()
        )));
    }
    for m in action {
        if m.rows() != module_dim || m.cols() != module_dim || m.field() != field {
            return Err(CatalogError::InvalidSpec("action matrices must be square of module size".into()));
        }
    }
    // rho(h_i h_j) must equal the operator commutator of the actions
    for i in 0..k {
        for j in 0..k {
            let mut lhs = Matrix::zeros(field, module_dim, module_dim);
            let prod = h.basis_product(i, j);
            for (t, coeff) in prod.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for r in 0..module_dim {
                    for c in 0..module_dim {
                        let v = lhs.get(r, c) + &(coeff * action[t].get(r, c));
                        lhs.set(r, c, v);
                    }
                }
            }
            let rhs_a = action[i].mul(&action[j]).expect("square action matrices");
            let rhs_b = action[j].mul(&action[i]).expect("square action matrices");
            let mut ok = true;
            'outer: for r in 0..module_dim {
                for c in 0..module_dim {
                    if lhs.get(r, c) != &(rhs_a.get(r, c) - rhs_b.get(r, c)) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if !ok {
                return Err(CatalogError::ActionIncompatible(i, j));
            }
        }
    }

    let d = module_dim + k;
    let mut products: Vec<(usize, usize, Vec<(Scalar, usize)>)> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let terms: Vec<(Scalar, usize)> = h
                .basis_product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(t, s)| (s.clone(), module_dim + t))
                .collect();
            if !terms.is_empty() {
                products.push((module_dim + i, module_dim + j, terms));
            }
        }
    }
    for (i, rho) in action.iter().enumerate() {
        for a in 0..module_dim {
            let terms: Vec<(Scalar, usize)> = (0..module_dim)
                .filter(|&r| !rho.get(r, a).is_zero())
                .map(|r| (rho.get(r, a).clone(), r))
                .collect();
            if terms.is_empty() {
                continue;
            }
            products.push((module_dim + i, a, terms.clone()));
            if variant == Variant::Lie {
                let neg: Vec<(Scalar, usize)> = terms.iter().map(|(s, r)| (-s, *r)).collect();
                products.push((a, module_dim + i, neg));
            }
        }
    }
    let alg = Algebra::from_products(field, d, &products)?;
    if !alg.is_leibniz() {
        return Err(CatalogError::NotLeibniz);
    }
    Ok(alg)
}

/// Whether `a` lies in the image of `t -> t^p - t` on GF(p). On a prime
/// field that image is `{0}`; the scan keeps the check honest. Diagnostic
/// only, never an error condition for the builders.
pub fn artin_schreier_value_reachable(p: u16, a: &Scalar) -> bool {
    let Ok(field) = Field::gf(p as u64) else {
        return false;
    };
    (0..p as i64).any(|t| {
        let tp = (0..p).fold(field.one(), |acc, _| &acc * &field.element(t));
        &tp - &field.element(t) == *a
    })
}
