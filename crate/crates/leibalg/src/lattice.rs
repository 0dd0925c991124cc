//! Exhaustive subspace, subalgebra, and ideal enumeration over prime fields,
//! with the Frattini, socle, nilradical, complement, simplicity, minimality,
//! and two-generation machinery built on top of it.
//!
//! Enumeration is canonical and deterministic: subspaces stream by dimension,
//! then by pivot columns, then by the free echelon entries read as a base-p
//! number. Every job is sized exactly (Gaussian binomials) before it starts
//! and refused with the exact count when it exceeds the budget.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::classify::{self, AlgebraClass, ClassifyError};
use crate::field::Field;
use crate::matrix::{LinalgError, Matrix, Vector};
use crate::par;
use crate::subspace::Subspace;

pub const DEFAULT_MAX_SUBSPACES: u64 = 10_000_000;

/// Cap on the number of objects an exhaustive scan may touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_subspaces: u64,
}

impl Budget {
    pub fn new(max_subspaces: u64) -> Self {
        Budget { max_subspaces }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_subspaces: DEFAULT_MAX_SUBSPACES }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("exhaustive enumeration requires a prime field")]
    RationalField,
    #[error("enumeration of {count} objects exceeds the budget of {budget}")]
    BudgetExceeded { count: BigUint, budget: u64 },
    #[error("internal invariant violated: {0}")]
    TheoryViolation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Classify(#[from] Box<ClassifyError>),
}

/// Number of k-dimensional subspaces of GF(p)^d.
pub fn gaussian_binomial(d: usize, k: usize, p: u64) -> BigUint {
    if k > d {
        return BigUint::zero();
    }
    // Pascal-style recurrence: [n, k] = [n-1, k-1] + p^k [n-1, k]
    let mut row: Vec<BigUint> = vec![BigUint::from(1u32)];
    for n in 1..=d {
        let mut next = vec![BigUint::from(1u32); n + 1];
        for j in 1..n {
            next[j] = &row[j - 1] + BigUint::from(p).pow(j as u32) * &row[j];
        }
        row = next;
    }
    row[k].clone()
}

/// Total number of subspaces of GF(p)^d.
pub fn subspace_total(d: usize, p: u64) -> BigUint {
    (0..=d).map(|k| gaussian_binomial(d, k, p)).sum()
}

struct PivotBlock {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    start: u64,
    count: u64,
}

/// Indexable enumeration of echelon bases for the requested dimensions.
pub(crate) struct EchelonEnum {
    field: Field,
    ambient: usize,
    blocks: Vec<PivotBlock>,
    total: u64,
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..d {
            cur.push(c);
            rec(c + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    rec(0, d, k, &mut cur, &mut out);
    out
}

impl EchelonEnum {
    /// Sizes the job exactly and refuses when it exceeds the budget.
    pub(crate) fn new(
        field: Field,
        ambient: usize,
        dims: &[usize],
        budget: &Budget,
    ) -> Result<Self, LatticeError> {
        let Some(p) = field.modulus() else {
            return Err(LatticeError::RationalField);
        };
        let p = p as u64;
        let mut exact = BigUint::zero();
        for &k in dims {
            exact += gaussian_binomial(ambient, k, p);
        }
        if exact.to_u64().filter(|&n| n <= budget.max_subspaces).is_none() {
            return Err(LatticeError::BudgetExceeded { count: exact, budget: budget.max_subspaces });
        }
        let mut blocks = Vec::new();
        let mut start = 0u64;
        for &k in dims {
            for pivots in combinations(ambient, k) {
                let mut free = Vec::new();
                for (r, &pc) in pivots.iter().enumerate() {
                    for c in (pc + 1)..ambient {
                        if !pivots.contains(&c) {
                            free.push((r, c));
                        }
                    }
                }
                let count = (p as u128).pow(free.len() as u32) as u64;
                blocks.push(PivotBlock { pivots, free, start, count });
                start += count;
            }
        }
        Ok(EchelonEnum { field, ambient, blocks, total: start })
    }

    pub(crate) fn total(&self) -> u64 {
        self.total
    }

    pub(crate) fn unrank(&self, rank: u64) -> Subspace {
        let idx = self
            .blocks
            .partition_point(|b| b.start + b.count <= rank)
            .min(self.blocks.len().saturating_sub(1));
        let block = &self.blocks[idx];
        debug_assert!(rank >= block.start && rank < block.start + block.count);
        let mut local = rank - block.start;
        let p = self.field.modulus().expect("prime field") as u64;
        let k = block.pivots.len();
        let mut m = Matrix::zeros(self.field, k, self.ambient);
        for (r, &pc) in block.pivots.iter().enumerate() {
            m.set(r, pc, self.field.one());
        }
        // big-endian digits over the free cells
        for t in 0..block.free.len() {
            let weight = (p as u128).pow((block.free.len() - 1 - t) as u32) as u64;
            let digit = (local / weight) as u16;
            local %= weight;
            let (r, c) = block.free[t];
            m.set(r, c, self.field.residue(digit));
        }
        Subspace::from_rref_unchecked(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumKind {
    Subspaces,
    Subalgebras,
    Ideals,
    MaximalSubalgebras,
}

/// All subspaces of GF(p)^d in canonical order.
pub fn all_subspaces(
    field: Field,
    ambient: usize,
    budget: &Budget,
) -> Result<Vec<Subspace>, LatticeError> {
    let dims: Vec<usize> = (0..=ambient).collect();
    let en = EchelonEnum::new(field, ambient, &dims, budget)?;
    Ok(par::filter_map_ranks(en.total(), |r| Some(en.unrank(r))))
}

/// One-dimensional subspaces in canonical order.
pub(crate) fn all_lines(
    field: Field,
    ambient: usize,
    budget: &Budget,
) -> Result<Vec<Subspace>, LatticeError> {
    if ambient == 0 {
        return Ok(Vec::new());
    }
    let en = EchelonEnum::new(field, ambient, &[1], budget)?;
    Ok(par::filter_map_ranks(en.total(), |r| Some(en.unrank(r))))
}

/// Subspaces of the given subspace, mapped into ambient coordinates.
pub(crate) fn subspaces_within(s: &Subspace, budget: &Budget) -> Result<Vec<Subspace>, LatticeError> {
    let k = s.dim();
    let field = s.field();
    let dims: Vec<usize> = (0..=k).collect();
    let en = EchelonEnum::new(field, k, &dims, budget)?;
    let rows = s.basis_rows();
    Ok(par::filter_map_ranks(en.total(), |r| {
        let inner = en.unrank(r);
        let mapped: Vec<Vector> = inner
            .basis_rows()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![field.zero(); s.ambient()];
                for (j, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for t in 0..s.ambient() {
                        v[t] = &v[t] + &(c * &rows[j][t]);
                    }
                }
                v
            })
            .collect();
        Some(Subspace::span(field, s.ambient(), mapped).expect("mapped rows share the ambient"))
    }))
}

/// Canonical enumeration filtered by kind.
pub fn enumerate(
    alg: &Algebra,
    kind: EnumKind,
    budget: &Budget,
) -> Result<Vec<Subspace>, LatticeError> {
    let dims: Vec<usize> = (0..=alg.dim()).collect();
    let en = EchelonEnum::new(alg.field(), alg.dim(), &dims, budget)?;
    let filtered = |pred: &(dyn Fn(&Subspace) -> bool + Sync)| -> Vec<Subspace> {
        par::filter_map_ranks(en.total(), |r| {
            let s = en.unrank(r);
            if pred(&s) {
                Some(s)
            } else {
                None
            }
        })
    };
    Ok(match kind {
        EnumKind::Subspaces => filtered(&|_| true),
        EnumKind::Subalgebras => filtered(&|s| alg.is_subalgebra(s).unwrap_or(false)),
        EnumKind::Ideals => filtered(&|s| alg.is_ideal(s).unwrap_or(false)),
        EnumKind::MaximalSubalgebras => {
            let subs = filtered(&|s| alg.is_subalgebra(s).unwrap_or(false));
            maximal_among(&subs, alg.dim())
        }
    })
}

/// Proper subalgebras not contained in any strictly larger proper subalgebra.
fn maximal_among(subalgebras: &[Subspace], ambient_dim: usize) -> Vec<Subspace> {
    let proper: Vec<&Subspace> = subalgebras.iter().filter(|s| s.dim() < ambient_dim).collect();
    proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.dim() > s.dim() && t.contains(s).unwrap_or(false)))
        .map(|s| (*s).clone())
        .collect()
}

/// Frattini subalgebra (intersection of all maximal subalgebras) together
/// with the Frattini ideal (the largest ideal inside it, obtained as the sum
/// of all ideals it contains).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrattiniReport {
    pub subalgebra: Subspace,
    pub ideal: Subspace,
    pub phi_free: bool,
}

pub fn frattini(alg: &Algebra, budget: &Budget) -> Result<FrattiniReport, LatticeError> {
    let maximal = enumerate(alg, EnumKind::MaximalSubalgebras, budget)?;
    let mut f = alg.full_space();
    for m in &maximal {
        f = f.intersect(m)?;
    }
    let ideals = enumerate(alg, EnumKind::Ideals, budget)?;
    let mut phi = alg.zero_subspace();
    for i in &ideals {
        if f.contains(i)? {
            phi = phi.sum(i)?;
        }
    }
    let phi_free = phi.is_zero();
    Ok(FrattiniReport { subalgebra: f, ideal: phi, phi_free })
}

/// All nonzero ideals containing no smaller nonzero ideal.
pub fn minimal_ideals(alg: &Algebra, budget: &Budget) -> Result<Vec<Subspace>, LatticeError> {
    let ideals = enumerate(alg, EnumKind::Ideals, budget)?;
    let nonzero: Vec<&Subspace> = ideals.iter().filter(|i| !i.is_zero()).collect();
    Ok(nonzero
        .iter()
        .filter(|i| !nonzero.iter().any(|j| j.dim() < i.dim() && i.contains(j).unwrap_or(false)))
        .map(|i| (*i).clone())
        .collect())
}

/// Sum of the minimal ideals.
pub fn socle(alg: &Algebra, budget: &Budget) -> Result<Subspace, LatticeError> {
    let mut s = alg.zero_subspace();
    for m in minimal_ideals(alg, budget)? {
        s = s.sum(&m)?;
    }
    Ok(s)
}

/// First subalgebra complement of an ideal in canonical order, if any.
pub fn complement(
    alg: &Algebra,
    a: &Subspace,
    budget: &Budget,
) -> Result<Option<Subspace>, LatticeError> {
    if !alg.is_ideal(a)? {
        return Err(LatticeError::Algebra(AlgebraError::NotAnIdeal));
    }
    let subs = enumerate(alg, EnumKind::Subalgebras, budget)?;
    for h in subs {
        if h.dim() + a.dim() != alg.dim() {
            continue;
        }
        if h.intersect(a)?.is_zero() && h.sum(a)?.is_full() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Sum of all ideals that are nilpotent as algebras; re-verified nilpotent.
pub fn nilradical(alg: &Algebra, budget: &Budget) -> Result<Subspace, LatticeError> {
    let ideals = enumerate(alg, EnumKind::Ideals, budget)?;
    let mut n = alg.zero_subspace();
    for i in &ideals {
        if subspace_is_nilpotent_algebra(alg, i)? {
            n = n.sum(i)?;
        }
    }
    if !subspace_is_nilpotent_algebra(alg, &n)? {
        return Err(LatticeError::TheoryViolation(
            "sum of nilpotent ideals is not nilpotent".into(),
        ));
    }
    Ok(n)
}

fn subspace_is_nilpotent_algebra(alg: &Algebra, s: &Subspace) -> Result<bool, LatticeError> {
    let (sub, _) = alg.subalgebra_algebra(s)?;
    Ok(classify::series(&sub).map_err(Box::new)?.lower_central_reaches_zero)
}

/// Simple: nonzero product, and no ideals besides 0 and the whole algebra.
pub fn is_simple(alg: &Algebra, budget: &Budget) -> Result<bool, LatticeError> {
    if alg.dim() == 0 {
        return Ok(false);
    }
    let square = alg.subspace_product(&alg.full_space(), &alg.full_space())?;
    if square.is_zero() {
        return Ok(false);
    }
    let ideals = enumerate(alg, EnumKind::Ideals, budget)?;
    Ok(ideals.iter().all(|i| i.is_zero() || i.is_full()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    MinimallyNonClass,
    InClass,
    NotMinimal,
}

#[derive(Debug, Clone)]
pub struct MinimalityVerdict {
    pub verdict: Verdict,
    pub in_class: bool,
    pub failing_subalgebra: Option<Subspace>,
}

/// Minimality harness. The supported classes are closed under subalgebras,
/// so covering the maximal subalgebras covers every proper subalgebra.
pub fn minimal_non_class(
    alg: &Algebra,
    class: AlgebraClass,
    budget: &Budget,
) -> Result<MinimalityVerdict, LatticeError> {
    let own = classify::is_in_class(alg, class, budget).map_err(Box::new)?;
    if own.member {
        return Ok(MinimalityVerdict {
            verdict: Verdict::InClass,
            in_class: true,
            failing_subalgebra: None,
        });
    }
    let maximal = enumerate(alg, EnumKind::MaximalSubalgebras, budget)?;
    for m in &maximal {
        let (sub, _) = alg.subalgebra_algebra(m)?;
        let verdict = classify::is_in_class(&sub, class, budget).map_err(Box::new)?;
        if !verdict.member {
            return Ok(MinimalityVerdict {
                verdict: Verdict::NotMinimal,
                in_class: false,
                failing_subalgebra: Some(m.clone()),
            });
        }
    }
    Ok(MinimalityVerdict {
        verdict: Verdict::MinimallyNonClass,
        in_class: false,
        failing_subalgebra: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoGenerated {
    Yes(Vector, Vector),
    No,
    /// The deterministic rational grid scan found nothing; over an infinite
    /// field that is inconclusive rather than a refutation.
    Unknown,
}

/// Exhaustive generator-pair scan over GF(p); bounded-height grid over Q
/// (coefficients from -2 to 2). The witness is the first pair in rank order.
pub fn is_two_generated(alg: &Algebra, budget: &Budget) -> Result<TwoGenerated, LatticeError> {
    let d = alg.dim() as u32;
    let (base, inconclusive): (u64, bool) = match alg.field() {
        Field::Gf(p) => (p as u64, false),
        Field::Rational => (5, true),
    };
    let vectors = (base as u128).pow(d);
    let pairs = vectors * vectors;
    if pairs > budget.max_subspaces as u128 {
        return Err(LatticeError::BudgetExceeded {
            count: BigUint::from(pairs),
            budget: budget.max_subspaces,
        });
    }
    let field = alg.field();
    let unrank_vec = move |mut r: u64| -> Vector {
        let mut v = Vec::with_capacity(d as usize);
        for _ in 0..d {
            let digit = (r % base) as i64;
            r /= base;
            v.push(match field {
                Field::Gf(_) => field.residue(digit as u16),
                Field::Rational => field.element(digit - 2),
            });
        }
        v
    };
    let hit = par::find_map_first(pairs as u64, |rank| {
        let u = unrank_vec(rank / vectors as u64);
        let v = unrank_vec(rank % vectors as u64);
        match alg.generated_subalgebra(&[u.clone(), v.clone()]) {
            Ok(s) if s.is_full() => Some((u, v)),
            _ => None,
        }
    });
    Ok(match hit {
        Some((u, v)) => TwoGenerated::Yes(u, v),
        None if inconclusive => TwoGenerated::Unknown,
        None => TwoGenerated::No,
    })
}
