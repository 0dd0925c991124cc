//! Series, class predicates, distinguished subspaces, nil actions, and
//! triangulability.
//!
//! Conventions: the derived series squares each term, the lower central
//! series is left-normed (`L^(k+1) = L * L^(k)`), matching the left identity
//! under which left multiplications are derivations. A flag witnessing
//! supersolvability is a chain of ideals of the full algebra with one ideal
//! in every dimension.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::field::{Field, Scalar};
use crate::lattice::{self, Budget, LatticeError};
use crate::matrix::{LinalgError, Matrix};
use crate::subspace::{kernel, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("the subspace does not map the module into itself")]
    ModuleNotInvariant,
    #[error("operation is unsupported over the rational field")]
    UnsupportedField,
    #[error("rational eigenvalue search exceeded machine bounds")]
    EigenSearchOverflow,
    #[error("internal invariant violated: {0}")]
    TheoryViolation(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    Nilpotent,
    Solvable,
    StronglySolvable,
    Supersolvable,
}

impl AlgebraClass {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "nilpotent" => AlgebraClass::Nilpotent,
            "solvable" => AlgebraClass::Solvable,
            "strongly_solvable" => AlgebraClass::StronglySolvable,
            "supersolvable" => AlgebraClass::Supersolvable,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraClass::Nilpotent => "nilpotent",
            AlgebraClass::Solvable => "solvable",
            AlgebraClass::StronglySolvable => "strongly_solvable",
            AlgebraClass::Supersolvable => "supersolvable",
        }
    }
}

/// Derived and lower central series, listed to stabilization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub derived: Vec<Subspace>,
    pub lower_central: Vec<Subspace>,
    pub derived_reaches_zero: bool,
    pub lower_central_reaches_zero: bool,
}

pub fn series(alg: &Algebra) -> Result<SeriesReport, ClassifyError> {
    let full = alg.full_space();
    let mut derived = vec![full.clone()];
    loop {
        let last = derived.last().unwrap();
        let next = alg.subspace_product(last, last)?;
        if &next == last {
            break;
        }
        derived.push(next);
    }
    let mut lower_central = vec![full.clone()];
    loop {
        let last = lower_central.last().unwrap();
        let next = alg.subspace_product(&full, last)?;
        if &next == last {
            break;
        }
        lower_central.push(next);
    }
    let derived_reaches_zero = derived.last().unwrap().is_zero();
    let lower_central_reaches_zero = lower_central.last().unwrap().is_zero();
    Ok(SeriesReport { derived, lower_central, derived_reaches_zero, lower_central_reaches_zero })
}

/// Chain of ideals of the full algebra, one per dimension from 0 to n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub chain: Vec<Subspace>,
}

#[derive(Debug, Clone)]
pub enum ClassWitness {
    None,
    /// Stable nonzero tail of the failing series, in ambient coordinates.
    SeriesTail(Subspace),
    Flag(Flag),
}

#[derive(Debug, Clone)]
pub struct ClassVerdict {
    pub member: bool,
    pub witness: ClassWitness,
}

pub fn is_in_class(
    alg: &Algebra,
    class: AlgebraClass,
    budget: &Budget,
) -> Result<ClassVerdict, ClassifyError> {
    match class {
        AlgebraClass::Nilpotent => {
            let s = series(alg)?;
            Ok(verdict_from_chain(s.lower_central_reaches_zero, &s.lower_central))
        }
        AlgebraClass::Solvable => {
            let s = series(alg)?;
            Ok(verdict_from_chain(s.derived_reaches_zero, &s.derived))
        }
        AlgebraClass::StronglySolvable => {
            // the square as a standalone algebra must be nilpotent
            let square = alg.subspace_product(&alg.full_space(), &alg.full_space())?;
            let (sub, inclusion) = alg.subalgebra_algebra(&square)?;
            let s = series(&sub)?;
            if s.lower_central_reaches_zero {
                return Ok(ClassVerdict { member: true, witness: ClassWitness::None });
            }
            // map the stable tail back to ambient coordinates
            let tail = s.lower_central.last().unwrap();
            let rows = tail
                .basis_rows()
                .into_iter()
                .map(|r| inclusion.mul_vec(&r))
                .collect::<Result<Vec<_>, _>>()?;
            let ambient_tail = Subspace::span(alg.field(), alg.dim(), rows)?;
            Ok(ClassVerdict { member: false, witness: ClassWitness::SeriesTail(ambient_tail) })
        }
        AlgebraClass::Supersolvable => match supersolvable_flag(alg, budget)? {
            Some(flag) => Ok(ClassVerdict { member: true, witness: ClassWitness::Flag(flag) }),
            None => Ok(ClassVerdict { member: false, witness: ClassWitness::None }),
        },
    }
}

fn verdict_from_chain(reaches_zero: bool, chain: &[Subspace]) -> ClassVerdict {
    if reaches_zero {
        ClassVerdict { member: true, witness: ClassWitness::None }
    } else {
        ClassVerdict {
            member: false,
            witness: ClassWitness::SeriesTail(chain.last().unwrap().clone()),
        }
    }
}

/// Span of all squares, closed under polarization: the squares of the basis
/// vectors together with the squares of pairwise sums span every `x x`.
/// The algebra is Lie exactly when this ideal vanishes.
pub fn leib_ideal(alg: &Algebra) -> Result<Subspace, ClassifyError> {
    let d = alg.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        rows.push(alg.basis_product(i, i).to_vec());
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let ei = alg.basis_vector(i);
            let ej = alg.basis_vector(j);
            let sum: Vec<Scalar> = ei.iter().zip(&ej).map(|(a, b)| a + b).collect();
            rows.push(alg.multiply(&sum, &sum)?);
        }
    }
    Ok(Subspace::span(alg.field(), d, rows)?)
}

/// Two-sided centralizer `{x : x a = 0 and a x = 0 for all a in the subspace}`,
/// computed as the kernel of the stacked multiplication maps.
pub fn centralizer(alg: &Algebra, a: &Subspace) -> Result<Subspace, ClassifyError> {
    let d = alg.dim();
    if a.ambient() != d || a.field() != alg.field() {
        return Err(ClassifyError::Linalg(LinalgError::AmbientMismatch));
    }
    if a.dim() == 0 {
        return Ok(alg.full_space());
    }
    let mut stacked: Option<Matrix> = None;
    for row in a.basis_rows() {
        // x -> x * row  has matrix columns e_i * row
        let mut right = Matrix::zeros(alg.field(), d, d);
        let mut left = Matrix::zeros(alg.field(), d, d);
        for i in 0..d {
            let e = alg.basis_vector(i);
            let xr = alg.multiply(&e, &row)?;
            let rx = alg.multiply(&row, &e)?;
            for k in 0..d {
                right.set(k, i, xr[k].clone());
                left.set(k, i, rx[k].clone());
            }
        }
        for m in [right, left] {
            stacked = Some(match stacked {
                None => m,
                Some(s) => Matrix::stack(&s, &m)?,
            });
        }
    }
    Ok(kernel(&stacked.expect("at least one basis row")))
}

/// Chain criterion for a nilpotent action: the chain
/// `m >= s m >= s (s m) >= ...` must reach zero. Requires `s m <= m`.
pub fn acts_nilpotently(alg: &Algebra, s: &Subspace, m: &Subspace) -> Result<bool, ClassifyError> {
    let sm = alg.subspace_product(s, m)?;
    if !m.contains(&sm)? {
        return Err(ClassifyError::ModuleNotInvariant);
    }
    let mut current = m.clone();
    loop {
        let next = alg.subspace_product(s, &current)?;
        if next == current {
            return Ok(current.is_zero());
        }
        current = next;
    }
}

/// Largest ideal of the subalgebra `s` acting nilpotently on `m`: the sum of
/// all such ideals, enumerated inside `s`. The sum is re-verified to act
/// nilpotently; a failure is an internal error, not a result.
pub fn nil_ideal(
    alg: &Algebra,
    s: &Subspace,
    m: &Subspace,
    budget: &Budget,
) -> Result<Subspace, ClassifyError> {
    if !alg.field().is_prime_field() {
        return Err(ClassifyError::UnsupportedField);
    }
    let sm = alg.subspace_product(s, m)?;
    if !m.contains(&sm)? {
        return Err(ClassifyError::ModuleNotInvariant);
    }
    // closure check: s must be a subalgebra to have ideals at all
    if !alg.is_subalgebra(s)? {
        return Err(ClassifyError::Algebra(AlgebraError::NotClosed));
    }
    let candidates = lattice::subspaces_within(s, budget)?;
    let mut total = alg.zero_subspace();
    for w in &candidates {
        let sw = alg.subspace_product(s, w)?;
        let ws = alg.subspace_product(w, s)?;
        if !w.contains(&sw)? || !w.contains(&ws)? {
            continue;
        }
        if acts_nilpotently(alg, w, m)? {
            total = total.sum(w)?;
        }
    }
    if !acts_nilpotently(alg, &total, m)? {
        return Err(ClassifyError::TheoryViolation(
            "sum of nilpotently acting ideals does not act nilpotently".into(),
        ));
    }
    Ok(total)
}

/// Triangulability criterion: the square of `s` must lie inside the largest
/// ideal of `s` acting nilpotently on `m`.
pub fn is_triangulable(
    alg: &Algebra,
    s: &Subspace,
    m: &Subspace,
    budget: &Budget,
) -> Result<bool, ClassifyError> {
    let nil = nil_ideal(alg, s, m, budget)?;
    let square = alg.subspace_product(s, s)?;
    Ok(nil.contains(&square)?)
}

#[derive(PartialEq, Eq, Hash)]
struct AlgKey {
    field: Field,
    dim: usize,
    tensor: Vec<Scalar>,
}

fn key_of(alg: &Algebra) -> AlgKey {
    AlgKey { field: alg.field(), dim: alg.dim(), tensor: alg.tensor().to_vec() }
}

/// Depth-first search for a full flag of ideals: pick a one-dimensional
/// ideal, quotient, recurse, and lift the quotient's flag back through the
/// canonical section. Search and output are deterministic; results for
/// quotient tensors are memoized.
pub fn supersolvable_flag(alg: &Algebra, budget: &Budget) -> Result<Option<Flag>, ClassifyError> {
    let mut memo = HashMap::new();
    let chain = flag_search(alg, budget, &mut memo)?;
    Ok(chain.map(|chain| Flag { chain }))
}

fn flag_search(
    alg: &Algebra,
    budget: &Budget,
    memo: &mut HashMap<AlgKey, Option<Vec<Subspace>>>,
) -> Result<Option<Vec<Subspace>>, ClassifyError> {
    if alg.dim() == 0 {
        return Ok(Some(vec![alg.zero_subspace()]));
    }
    let key = key_of(alg);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let candidates = ideal_lines(alg, budget)?;
    let mut result = None;
    for line in candidates {
        let (quot, _proj, section) = alg.quotient_with_section(&line)?;
        if let Some(qchain) = flag_search(&quot, budget, memo)? {
            let mut chain = vec![alg.zero_subspace()];
            for term in &qchain {
                let lifted_rows: Vec<Vec<Scalar>> = term
                    .basis_rows()
                    .into_iter()
                    .map(|w| section.mul_vec(&w))
                    .collect::<Result<Vec<_>, _>>()?;
                let lifted = Subspace::span(alg.field(), alg.dim(), lifted_rows)?;
                chain.push(lifted.sum(&line)?);
            }
            result = Some(chain);
            break;
        }
    }
    memo.insert(key, result.clone());
    Ok(result)
}

/// One-dimensional ideals to branch on. Over GF(p) this scans every line;
/// over Q it takes one representative line per joint eigenspace of the basis
/// multiplication operators, which suffices: lines in one joint eigenspace
/// have interchangeable quotient behavior for flags.
fn ideal_lines(alg: &Algebra, budget: &Budget) -> Result<Vec<Subspace>, ClassifyError> {
    match alg.field() {
        Field::Gf(_) => {
            let lines = lattice::all_lines(alg.field(), alg.dim(), budget)?;
            Ok(lines.into_iter().filter(|l| alg.is_ideal(l).unwrap_or(false)).collect())
        }
        Field::Rational => rational_ideal_line_candidates(alg),
    }
}

fn rational_ideal_line_candidates(alg: &Algebra) -> Result<Vec<Subspace>, ClassifyError> {
    let d = alg.dim();
    let mut ops = Vec::new();
    for i in 0..d {
        let l = alg.left_op(&alg.basis_vector(i))?;
        if !l.is_zero() {
            ops.push(l);
        }
        let r = alg.right_op(&alg.basis_vector(i))?;
        if !r.is_zero() {
            ops.push(r);
        }
    }
    let mut spaces = vec![alg.full_space()];
    for op in &ops {
        let eigenvalues = rational_eigenvalues(op)?;
        let mut next = Vec::new();
        for w in &spaces {
            for ev in &eigenvalues {
                let mut shifted = op.clone();
                for i in 0..d {
                    let v = shifted.get(i, i) - ev;
                    shifted.set(i, i, v);
                }
                let eigenspace = kernel(&shifted);
                let meet = w.intersect(&eigenspace)?;
                if !meet.is_zero() {
                    next.push(meet);
                }
            }
        }
        spaces = next;
        if spaces.is_empty() {
            break;
        }
    }
    let mut out = Vec::new();
    for w in spaces {
        let line = Subspace::line(alg.field(), w.basis_rows().swap_remove(0))?;
        debug_assert!(alg.is_ideal(&line).unwrap_or(false));
        out.push(line);
    }
    Ok(out)
}

fn scalar_rational(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rat(r) => r.as_ref().clone(),
        Scalar::Mod { .. } => unreachable!("rational path only"),
    }
}

/// All rational eigenvalues: rational roots of the characteristic polynomial
/// (computed exactly with the trace recursion).
fn rational_eigenvalues(m: &Matrix) -> Result<Vec<Scalar>, ClassifyError> {
    let n = m.rows();
    let field = m.field();
    // characteristic polynomial t^n + c[1] t^(n-1) + ... + c[n]
    let mut coeffs: Vec<BigRational> = vec![BigRational::one()];
    let mut mk = m.clone();
    for k in 1..=n {
        let trace: BigRational =
            (0..n).map(|i| scalar_rational(mk.get(i, i))).fold(BigRational::zero(), |a, b| a + b);
        let ck = -trace / BigRational::from_integer(BigInt::from(k as i64));
        coeffs.push(ck.clone());
        if k < n {
            // M_{k+1} = A (M_k + c_k I)
            let mut shifted = mk.clone();
            for i in 0..n {
                let v = shifted.get(i, i).clone();
                let ck_scalar = ratio_to_scalar(&ck);
                shifted.set(i, i, &v + &ck_scalar);
            }
            mk = m.mul(&shifted)?;
        }
    }
    // clear denominators to an integer polynomial, descending degree
    let mut denom_lcm = BigInt::one();
    for c in &coeffs {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut int_coeffs: Vec<BigInt> =
        coeffs.iter().map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer()).collect();
    // strip zero roots
    let mut roots: Vec<BigRational> = Vec::new();
    while int_coeffs.len() > 1 && int_coeffs.last().unwrap().is_zero() {
        if roots.iter().all(|r| !r.is_zero()) {
            roots.push(BigRational::zero());
        }
        int_coeffs.pop();
    }
    if int_coeffs.len() > 1 {
        let lead = int_coeffs.first().unwrap().magnitude().clone();
        let constant = int_coeffs.last().unwrap().magnitude().clone();
        let num_divs = divisors(&constant)?;
        let den_divs = divisors(&lead)?;
        for u in &num_divs {
            for w in &den_divs {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(
                        BigInt::from(sign) * BigInt::from(u.clone()),
                        BigInt::from(w.clone()),
                    );
                    if roots.contains(&cand) {
                        continue;
                    }
                    // Horner evaluation
                    let mut acc = BigRational::zero();
                    for c in &int_coeffs {
                        acc = acc * &cand + BigRational::from_integer(c.clone());
                    }
                    if acc.is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    let _ = field;
    Ok(roots.iter().map(ratio_to_scalar).collect())
}

fn ratio_to_scalar(r: &BigRational) -> Scalar {
    Scalar::Rat(Box::new(r.clone()))
}

/// All positive divisors via factorization; bounded to machine words.
fn divisors(n: &BigUint) -> Result<Vec<BigUint>, ClassifyError> {
    let Some(mut n) = n.to_u128() else {
        return Err(ClassifyError::EigenSearchOverflow);
    };
    if n == 0 {
        return Ok(vec![BigUint::one()]);
    }
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut d = 2u128;
    while d * d <= n && d < 1_000_000 {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        if n >= 1_000_000_000_000 {
            // a huge rough part would make the divisor set unreliable
            return Err(ClassifyError::EigenSearchOverflow);
        }
        factors.push((n, 1));
    }
    let mut divs = vec![1u128];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pw = 1u128;
            for _ in 0..=e {
                next.push(d * pw);
                pw = pw.saturating_mul(p);
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    divs.dedup();
    Ok(divs.into_iter().map(BigUint::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Variant};

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn series_of_abelian() {
        let a = catalog::abelian(3, gf(2)).unwrap();
        let s = series(&a).unwrap();
        assert_eq!(s.derived.len(), 2);
        assert!(s.derived[1].is_zero());
        assert_eq!(s.lower_central.len(), 2);
        assert!(s.derived_reaches_zero && s.lower_central_reaches_zero);
    }

    #[test]
    fn series_of_heisenberg() {
        let h = catalog::heisenberg(gf(3)).unwrap();
        let s = series(&h).unwrap();
        let z = Subspace::span(gf(3), 3, vec![h.basis_vector(2)]).unwrap();
        assert_eq!(s.lower_central, vec![h.full_space(), z, h.zero_subspace()]);
    }

    #[test]
    fn series_of_cyclic() {
        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        let s = series(&c).unwrap();
        let e2 = Subspace::span(gf(3), 2, vec![c.basis_vector(1)]).unwrap();
        assert_eq!(s.derived, vec![c.full_space(), e2, c.zero_subspace()]);
    }

    #[test]
    fn class_verdicts_for_heisenberg() {
        let h = catalog::heisenberg(gf(2)).unwrap();
        assert!(is_in_class(&h, AlgebraClass::Nilpotent, &b()).unwrap().member);
        let v = is_in_class(&h, AlgebraClass::Supersolvable, &b()).unwrap();
        assert!(v.member);
        let ClassWitness::Flag(flag) = v.witness else {
            panic!("expected flag witness");
        };
        assert_eq!(flag.chain.len(), 4);
        for (i, term) in flag.chain.iter().enumerate() {
            assert_eq!(term.dim(), i);
            assert!(h.is_ideal(term).unwrap());
        }
        // the one-dimensional term is the center
        assert!(flag.chain[1].contains_vector(&h.basis_vector(2)).unwrap());
    }

    #[test]
    fn cor_a_class_profile() {
        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        assert!(is_in_class(&a, AlgebraClass::Solvable, &b()).unwrap().member);
        assert!(!is_in_class(&a, AlgebraClass::StronglySolvable, &b()).unwrap().member);
        assert!(!is_in_class(&a, AlgebraClass::Supersolvable, &b()).unwrap().member);
        assert!(supersolvable_flag(&a, &b()).unwrap().is_none());

        // restricted to the complement <x, y> it becomes supersolvable
        let xy = Subspace::span(gf(3), 5, vec![a.basis_vector(3), a.basis_vector(4)]).unwrap();
        let (hsub, _) = a.subalgebra_algebra(&xy).unwrap();
        assert!(is_in_class(&hsub, AlgebraClass::Supersolvable, &b()).unwrap().member);
    }

    #[test]
    fn flag_inside_a_plus_x_starts_at_shift_eigenline() {
        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let ax = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2), a.basis_vector(3)],
        )
        .unwrap();
        let (sub, _) = a.subalgebra_algebra(&ax).unwrap();
        let flag = supersolvable_flag(&sub, &b()).unwrap().expect("flag exists");
        // in echelon coordinates of A + <x> the eigenline of the shift is
        // spanned by e1 + e2 + e3
        let f = gf(3);
        let eigen = vec![f.one(), f.one(), f.one(), f.zero()];
        assert!(flag.chain[1].contains_vector(&eigen).unwrap());
    }

    #[test]
    fn abelian_over_q_has_coordinate_flag() {
        let a = catalog::abelian(3, Field::rational()).unwrap();
        let flag = supersolvable_flag(&a, &b()).unwrap().expect("abelian flag");
        assert_eq!(flag.chain.len(), 4);
        for (i, term) in flag.chain.iter().enumerate() {
            assert_eq!(term.dim(), i);
        }
    }

    #[test]
    fn heisenberg_over_q_is_supersolvable() {
        let h = catalog::heisenberg(Field::rational()).unwrap();
        let flag = supersolvable_flag(&h, &b()).unwrap().expect("flag exists");
        assert!(flag.chain[1].contains_vector(&h.basis_vector(2)).unwrap());
    }

    #[test]
    fn sl2_over_q_not_supersolvable() {
        let s = catalog::sl2(Field::rational()).unwrap();
        assert!(supersolvable_flag(&s, &b()).unwrap().is_none());
    }

    #[test]
    fn leib_ideal_examples() {
        let h = catalog::heisenberg(gf(2)).unwrap();
        assert!(leib_ideal(&h).unwrap().is_zero());

        let c = catalog::cyclic_leibniz(2, gf(3)).unwrap();
        let e2 = Subspace::span(gf(3), 2, vec![c.basis_vector(1)]).unwrap();
        assert_eq!(leib_ideal(&c).unwrap(), e2);

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let amod = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2)],
        )
        .unwrap();
        assert_eq!(leib_ideal(&a).unwrap(), amod);
    }

    #[test]
    fn centralizer_examples() {
        let ab = catalog::abelian(3, gf(2)).unwrap();
        assert!(centralizer(&ab, &ab.full_space()).unwrap().is_full());

        let h = catalog::heisenberg(gf(3)).unwrap();
        let center = centralizer(&h, &h.full_space()).unwrap();
        assert_eq!(center, Subspace::span(gf(3), 3, vec![h.basis_vector(2)]).unwrap());

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let amod = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2)],
        )
        .unwrap();
        assert_eq!(centralizer(&a, &amod).unwrap(), amod);
    }

    #[test]
    fn acts_nilpotently_examples() {
        let h = catalog::heisenberg(gf(2)).unwrap();
        assert!(acts_nilpotently(&h, &h.zero_subspace(), &h.full_space()).unwrap());
        assert!(acts_nilpotently(&h, &h.full_space(), &h.full_space()).unwrap());

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let x_line = Subspace::span(gf(3), 5, vec![a.basis_vector(3)]).unwrap();
        let amod = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2)],
        )
        .unwrap();
        assert!(!acts_nilpotently(&a, &x_line, &amod).unwrap());
        // module invariance violations are reported: the shift moves e1 out
        let e1_line = Subspace::span(gf(3), 5, vec![a.basis_vector(0)]).unwrap();
        let bad = acts_nilpotently(&a, &a.full_space(), &e1_line);
        assert_eq!(bad.unwrap_err(), ClassifyError::ModuleNotInvariant);
    }

    #[test]
    fn nil_ideal_examples() {
        let h = catalog::heisenberg(gf(2)).unwrap();
        assert!(nil_ideal(&h, &h.full_space(), &h.full_space(), &b()).unwrap().is_full());

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        let amod = Subspace::span(
            gf(3),
            5,
            vec![a.basis_vector(0), a.basis_vector(1), a.basis_vector(2)],
        )
        .unwrap();
        assert_eq!(nil_ideal(&a, &a.full_space(), &a.full_space(), &b()).unwrap(), amod);

        // the subalgebra <y, z> of the heisenberg algebra acts nilpotently
        let yz = Subspace::span(gf(2), 3, vec![h.basis_vector(1), h.basis_vector(2)]).unwrap();
        assert_eq!(nil_ideal(&h, &yz, &h.full_space(), &b()).unwrap(), yz);

        let q = catalog::heisenberg(Field::rational()).unwrap();
        assert_eq!(
            nil_ideal(&q, &q.full_space(), &q.full_space(), &b()).unwrap_err(),
            ClassifyError::UnsupportedField
        );
    }

    #[test]
    fn triangulability_examples() {
        // strongly solvable algebras are triangulable on themselves
        let h = catalog::heisenberg(gf(2)).unwrap();
        assert!(is_triangulable(&h, &h.full_space(), &h.full_space(), &b()).unwrap());

        let a = catalog::cor_a(3, gf(3), Variant::Leibniz).unwrap();
        assert!(!is_triangulable(&a, &a.full_space(), &a.full_space(), &b()).unwrap());

        // the complement <x, y> is strongly solvable as an algebra, yet not
        // triangulable on the whole algebra: its square does not act
        // nilpotently on the minimal ideal
        let xy = Subspace::span(gf(3), 5, vec![a.basis_vector(3), a.basis_vector(4)]).unwrap();
        assert!(!is_triangulable(&a, &xy, &a.full_space(), &b()).unwrap());
        let (hsub, _) = a.subalgebra_algebra(&xy).unwrap();
        assert!(is_in_class(&hsub, AlgebraClass::StronglySolvable, &b()).unwrap().member);
    }

    #[test]
    fn rational_eigenvalues_of_small_operators() {
        let q = Field::rational();
        let m = Matrix::from_i64(q, &[&[2, 0], &[0, 3]]);
        let mut evs: Vec<String> =
            rational_eigenvalues(&m).unwrap().iter().map(|s| s.to_string()).collect();
        evs.sort();
        assert_eq!(evs, vec!["2", "3"]);

        // companion matrix of t^2 - t/2: roots 0 and 1/2
        let half = Matrix::from_rows(
            q,
            vec![
                vec![q.zero(), q.zero()],
                vec![q.one(), q.element_ratio(1, 2).unwrap()],
            ],
        )
        .unwrap();
        let mut evs: Vec<String> =
            rational_eigenvalues(&half).unwrap().iter().map(|s| s.to_string()).collect();
        evs.sort();
        assert_eq!(evs, vec!["0", "1/2"]);

        // rotation-like operator with no rational eigenvalues
        let rot = Matrix::from_i64(q, &[&[0, -1], &[1, 0]]);
        assert!(rational_eigenvalues(&rot).unwrap().is_empty());
    }
}
