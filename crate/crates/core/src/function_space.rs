//! The function space `L(X)` of an action and its invariant subspace.
//!
//! Functions are vectors of [`GaussianRational`] values indexed by points.
//! The inner product is the normalized one,
//!
//! ```text
//! ⟨f, g⟩ = (1/|X|) Σ_x f(x) · conj(g(x)),
//! ```
//!
//! under which the orbit indicators `δ_C` are orthogonal with
//! `⟨δ_C, δ_C⟩ = |C|/|X|`. The orthonormal basis would need the factors
//! `√(|X|/|C|)`; these are never materialized. Fourier coefficients are
//! reported through their raw orbit sums and exact squared moduli instead,
//! which keeps every quantity in this module rational.

use serde::Serialize;

use crate::action::{GroupAction, Partition, Point};
use crate::exact_arith::{rank, GaussianRational, Rational};
use crate::group::Element;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum FunctionError {
    #[error("function has {found} values, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("inner product on an empty domain")]
    EmptyDomain,
    #[error("the action is trivial, so every function is invariant")]
    ActionIsTrivial,
    #[error("element {element} is out of range for a group of order {order}")]
    NoSuchElement { element: usize, order: usize },
}

/// An element of `L(X)`: one value per point.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, serde::Deserialize)]
pub struct FunctionOnX {
    pub values: Vec<GaussianRational>,
}

impl FunctionOnX {
    pub fn new(values: Vec<GaussianRational>) -> Self {
        FunctionOnX { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        FunctionOnX {
            values: values
                .iter()
                .map(|&v| GaussianRational::from_integer(v))
                .collect(),
        }
    }

    pub fn zero(degree: usize) -> Self {
        FunctionOnX {
            values: vec![GaussianRational::zero(); degree],
        }
    }

    pub fn constant(degree: usize, c: GaussianRational) -> Self {
        FunctionOnX {
            values: vec![c; degree],
        }
    }

    /// The all-ones function `f₁`.
    pub fn ones(degree: usize) -> Self {
        Self::constant(degree, GaussianRational::one())
    }

    /// `δ_x`.
    pub fn delta(degree: usize, x: Point) -> Self {
        Self::indicator(degree, &[x])
    }

    /// `δ_C`, the indicator of a set of points.
    pub fn indicator(degree: usize, cell: &[Point]) -> Self {
        let mut f = Self::zero(degree);
        for &x in cell {
            f.values[x] = GaussianRational::one();
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, x: Point) -> &GaussianRational {
        &self.values[x]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        FunctionOnX {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Pointwise sum. Panics if the degrees differ.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        FunctionOnX {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Pointwise difference. Panics if the degrees differ.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        FunctionOnX {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `f ∘ Φ⁻¹` for a bijection `phi` of the points: the value at `x`
    /// moves to `phi[x]`.
    pub fn transport(&self, phi: &[Point]) -> Self {
        let mut values = vec![GaussianRational::zero(); self.degree()];
        for (x, v) in self.values.iter().enumerate() {
            values[phi[x]] = v.clone();
        }
        FunctionOnX { values }
    }
}

pub(crate) fn check_degree(act: &GroupAction, f: &FunctionOnX) -> Result<(), FunctionError> {
    if f.degree() != act.degree() {
        return Err(FunctionError::DegreeMismatch {
            expected: act.degree(),
            found: f.degree(),
        });
    }
    Ok(())
}

fn check_element(act: &GroupAction, a: Element) -> Result<(), FunctionError> {
    if a >= act.group().order() {
        return Err(FunctionError::NoSuchElement {
            element: a,
            order: act.group().order(),
        });
    }
    Ok(())
}

/// The induced action on functions, `(a ⋆ f)(x) = f(a⁻¹·x)`.
pub fn act_on_function(
    act: &GroupAction,
    a: Element,
    f: &FunctionOnX,
) -> Result<FunctionOnX, FunctionError> {
    check_degree(act, f)?;
    check_element(act, a)?;
    let a_inv = act.group().inv(a);
    Ok(FunctionOnX {
        values: (0..act.degree())
            .map(|x| f.values[act.act(a_inv, x)].clone())
            .collect(),
    })
}

/// Proof that a function is invariant: its value on every orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCertificate {
    pub function: FunctionOnX,
    pub partition: Partition,
    pub orbit_values: Vec<GaussianRational>,
}

/// Returns a certificate exactly when `f` is constant on every orbit.
pub fn is_invariant(
    act: &GroupAction,
    f: &FunctionOnX,
) -> Result<Option<InvariantCertificate>, FunctionError> {
    check_degree(act, f)?;
    let partition = act.orbits();
    Ok(certify_on(&partition, f))
}

pub(crate) fn certify_on(partition: &Partition, f: &FunctionOnX) -> Option<InvariantCertificate> {
    let mut orbit_values = Vec::with_capacity(partition.len());
    for cell in partition.cells() {
        let v = &f.values[cell[0]];
        if cell.iter().any(|&x| &f.values[x] != v) {
            return None;
        }
        orbit_values.push(v.clone());
    }
    Some(InvariantCertificate {
        function: f.clone(),
        partition: partition.clone(),
        orbit_values,
    })
}

/// The orbit indicators `δ_C`, in orbit order. They form a basis of `L^G(X)`.
pub fn indicator_basis(act: &GroupAction) -> Vec<FunctionOnX> {
    act.orbits()
        .cells()
        .iter()
        .map(|c| FunctionOnX::indicator(act.degree(), c))
        .collect()
}

/// `⟨f, g⟩ = (1/n) Σ f(x) conj(g(x))`.
pub fn inner_product(f: &FunctionOnX, g: &FunctionOnX) -> Result<GaussianRational, FunctionError> {
    if f.degree() != g.degree() {
        return Err(FunctionError::DegreeMismatch {
            expected: f.degree(),
            found: g.degree(),
        });
    }
    if f.degree() == 0 {
        return Err(FunctionError::EmptyDomain);
    }
    let sum: GaussianRational = f
        .values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| a * &b.conjugate())
        .sum();
    Ok(sum.scale(&Rational::new(1, f.degree() as i64)))
}

/// `⟨f, f⟩`, which is real and nonnegative.
pub fn norm_sq(f: &FunctionOnX) -> Result<Rational, FunctionError> {
    Ok(inner_product(f, f)?.re)
}

/// `(⟨a⋆f, a⋆g⟩, ⟨f, g⟩)`; the two are always equal.
pub fn unitarity_check(
    act: &GroupAction,
    a: Element,
    f: &FunctionOnX,
    g: &FunctionOnX,
) -> Result<(GaussianRational, GaussianRational), FunctionError> {
    let lhs = inner_product(&act_on_function(act, a, f)?, &act_on_function(act, a, g)?)?;
    let rhs = inner_product(f, g)?;
    Ok((lhs, rhs))
}

fn orbit_sum(f: &FunctionOnX, cell: &[Point]) -> GaussianRational {
    cell.iter().map(|&x| &f.values[x]).sum()
}

/// `f̂`: each value replaced by the average of `f` over its orbit. This is
/// the orthogonal projection of `f` onto `L^G(X)`.
pub fn fourier_projection(
    act: &GroupAction,
    f: &FunctionOnX,
) -> Result<FunctionOnX, FunctionError> {
    check_degree(act, f)?;
    Ok(project_onto(&act.orbits(), f))
}

fn project_onto(orbits: &Partition, f: &FunctionOnX) -> FunctionOnX {
    let mut out = FunctionOnX::zero(f.degree());
    for cell in orbits.cells() {
        let avg = orbit_sum(f, cell).scale(&Rational::new(1, cell.len() as i64));
        for &x in cell {
            out.values[x] = avg.clone();
        }
    }
    out
}

/// One Fourier coefficient of `f` against the normalized indicator of an orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierCoefficient {
    pub cell: Vec<Point>,
    /// `Σ_{x ∈ C} f(x)`.
    pub raw_sum: GaussianRational,
    /// `|Σ_{x ∈ C} f(x)|² / (|X| |C|)`, the squared modulus of the coefficient.
    pub norm_sq: Rational,
}

pub fn fourier_coefficients(
    act: &GroupAction,
    f: &FunctionOnX,
) -> Result<Vec<FourierCoefficient>, FunctionError> {
    check_degree(act, f)?;
    let n = act.degree() as i64;
    Ok(act
        .orbits()
        .cells()
        .iter()
        .map(|cell| {
            let raw_sum = orbit_sum(f, cell);
            let norm_sq = raw_sum.norm_sq() * Rational::new(1, n * cell.len() as i64);
            FourierCoefficient {
                cell: cell.clone(),
                raw_sum,
                norm_sq,
            }
        })
        .collect())
}

/// Both sides of Bessel's inequality,
/// `Σ_C (1/|C|) |Σ_{x∈C} f(x)|² ≤ Σ_x |f(x)|²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BesselCheck {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl BesselCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn bessel_check(act: &GroupAction, f: &FunctionOnX) -> Result<BesselCheck, FunctionError> {
    check_degree(act, f)?;
    let lhs = act
        .orbits()
        .cells()
        .iter()
        .map(|cell| orbit_sum(f, cell).norm_sq() * Rational::new(1, cell.len() as i64))
        .sum();
    let rhs = f.values.iter().map(GaussianRational::norm_sq).sum();
    Ok(BesselCheck { lhs, rhs })
}

/// `δ_x` for the smallest point `x` on a non-singleton orbit. Its projection
/// has strictly smaller norm than itself.
pub fn strict_bessel_witness(act: &GroupAction) -> Result<FunctionOnX, FunctionError> {
    let orbits = act.orbits();
    let x = (0..act.degree())
        .find(|&x| orbits.cell_containing(x).len() > 1)
        .ok_or(FunctionError::ActionIsTrivial)?;
    let witness = FunctionOnX::delta(act.degree(), x);
    debug_assert!(norm_sq(&project_onto(&orbits, &witness)).unwrap() < norm_sq(&witness).unwrap());
    Ok(witness)
}

/// `σ(f) = Σ_x f(x)`.
pub fn sigma(f: &FunctionOnX) -> GaussianRational {
    f.values.iter().sum()
}

/// The three orthogonal splittings of `f`:
/// `f = invariant + perp` with `invariant ∈ L^G(X)`, `perp ⊥ L^G(X)`;
/// `f = mean + kernel` with `mean ∈ span f₁`, `σ(kernel) = 0`;
/// and `invariant = mean + (invariant − mean)` inside `L^G(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub invariant: FunctionOnX,
    pub perp: FunctionOnX,
    pub mean: FunctionOnX,
    pub kernel: FunctionOnX,
}

impl Decomposition {
    /// `invariant − mean`, the component of the invariant part in `ker σ`.
    pub fn invariant_kernel(&self) -> FunctionOnX {
        self.invariant.sub(&self.mean)
    }
}

pub fn decompose(act: &GroupAction, f: &FunctionOnX) -> Result<Decomposition, FunctionError> {
    let invariant = fourier_projection(act, f)?;
    let perp = f.sub(&invariant);
    let avg = sigma(f).scale(&Rational::new(1, f.degree() as i64));
    let mean = FunctionOnX::constant(f.degree(), avg);
    let kernel = f.sub(&mean);
    Ok(Decomposition {
        invariant,
        perp,
        mean,
        kernel,
    })
}

/// The spanning set `{δ_x − (1/|C(x)|) δ_{C(x)}}` of `L^G(X)^⊥`.
pub fn perp_spanning_set(act: &GroupAction) -> Vec<FunctionOnX> {
    let orbits = act.orbits();
    let n = act.degree();
    (0..n)
        .map(|x| {
            let delta = FunctionOnX::delta(n, x);
            delta.sub(&project_onto(&orbits, &delta))
        })
        .collect()
}

/// The spanning set `{δ_x − δ_0 : x ≠ 0}` of `ker σ`.
pub fn kernel_spanning_set(degree: usize) -> Vec<FunctionOnX> {
    let d0 = FunctionOnX::delta(degree, 0);
    (1..degree)
        .map(|x| FunctionOnX::delta(degree, x).sub(&d0))
        .collect()
}

/// The spanning set `{δ_{C_i} − (|C_i|/|C_1|) δ_{C_1} : i ≥ 2}` of
/// `ker σ ∩ L^G(X)`.
pub fn invariant_kernel_spanning_set(act: &GroupAction) -> Vec<FunctionOnX> {
    let orbits = act.orbits();
    let n = act.degree();
    let first = &orbits.cells()[0];
    let d1 = FunctionOnX::indicator(n, first);
    orbits.cells()[1..]
        .iter()
        .map(|c| {
            let k = GaussianRational::real(Rational::new(c.len() as i64, first.len() as i64));
            FunctionOnX::indicator(n, c).sub(&d1.scale(&k))
        })
        .collect()
}

/// Exact dimension of the span of a list of functions.
pub fn span_dimension(functions: &[FunctionOnX]) -> usize {
    let rows: Vec<Vec<GaussianRational>> = functions.iter().map(|f| f.values.clone()).collect();
    rank(&rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerpSubsetReport {
    /// `σ` vanishes on a spanning set of `L^G(X)^⊥`.
    pub is_subset: bool,
    /// `L^G(X)^⊥ = ker σ`.
    pub equality: bool,
    pub perp_dim: usize,
    pub kernel_dim: usize,
}

/// Checks `L^G(X)^⊥ ⊆ ker σ` and decides equality by comparing dimensions.
pub fn perp_subset_check(act: &GroupAction) -> PerpSubsetReport {
    let perp = perp_spanning_set(act);
    let is_subset = perp.iter().all(|f| sigma(f).is_zero());
    let perp_dim = span_dimension(&perp);
    let kernel_dim = span_dimension(&kernel_spanning_set(act.degree()));
    PerpSubsetReport {
        is_subset,
        equality: is_subset && perp_dim == kernel_dim,
        perp_dim,
        kernel_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, Permutation, PermutationGroup};
    use std::sync::Arc;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::real(Rational::new(n, d))
    }

    fn fq(values: &[(i64, i64)]) -> FunctionOnX {
        FunctionOnX::new(values.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn z2_swap_on(n: usize) -> GroupAction {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        GroupAction::new(
            Arc::new(FiniteGroup::cyclic(2)),
            vec![(0..n).collect(), swap],
        )
        .unwrap()
    }

    fn s3_conj() -> (PermutationGroup, GroupAction) {
        let pg = PermutationGroup::symmetric(3);
        let act = GroupAction::conjugation(Arc::new(pg.group.clone()));
        (pg, act)
    }

    #[test]
    fn act_on_function_examples() {
        let act = z2_swap_on(2);
        let f = FunctionOnX::from_integers(&[1, 0]);
        assert_eq!(act_on_function(&act, 0, &f).unwrap(), f);
        assert_eq!(
            act_on_function(&act, 1, &f).unwrap(),
            FunctionOnX::from_integers(&[0, 1])
        );
        assert!(matches!(
            act_on_function(&act, 0, &FunctionOnX::zero(3)),
            Err(FunctionError::DegreeMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn invariance_examples() {
        let (pg, act) = s3_conj();
        let cert = is_invariant(&act, &FunctionOnX::ones(6)).unwrap().unwrap();
        assert!(cert
            .orbit_values
            .iter()
            .all(|v| *v == GaussianRational::one()));

        let t = pg
            .index_of(&Permutation::new(vec![1, 0, 2]).unwrap())
            .unwrap();
        assert!(is_invariant(&act, &FunctionOnX::delta(6, t))
            .unwrap()
            .is_none());

        let class = act.orbit(t);
        let cert = is_invariant(&act, &FunctionOnX::indicator(6, &class))
            .unwrap()
            .unwrap();
        assert_eq!(cert.partition.len(), 3);
    }

    #[test]
    fn indicator_basis_examples() {
        let triv = GroupAction::trivial(Arc::new(FiniteGroup::cyclic(2)), 3);
        let basis = indicator_basis(&triv);
        assert_eq!(
            basis,
            (0..3).map(|x| FunctionOnX::delta(3, x)).collect::<Vec<_>>()
        );

        let (_, conj) = s3_conj();
        assert_eq!(indicator_basis(&conj).len(), 3);

        let transitive = GroupAction::translation(Arc::new(FiniteGroup::cyclic(5)));
        assert_eq!(indicator_basis(&transitive), vec![FunctionOnX::ones(5)]);
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(
            inner_product(&FunctionOnX::ones(7), &FunctionOnX::ones(7)).unwrap(),
            GaussianRational::one()
        );
        let act = z2_swap_on(4);
        let basis = indicator_basis(&act);
        assert_eq!(
            inner_product(&basis[0], &basis[1]).unwrap(),
            GaussianRational::zero()
        );
        assert_eq!(inner_product(&basis[0], &basis[0]).unwrap(), q(2, 4));
        assert_eq!(
            inner_product(&FunctionOnX::zero(0), &FunctionOnX::zero(0)),
            Err(FunctionError::EmptyDomain)
        );
        assert!(inner_product(&FunctionOnX::zero(1), &FunctionOnX::zero(2)).is_err());
        // conjugate-linear in the second slot
        let i = FunctionOnX::constant(1, GaussianRational::i());
        assert_eq!(
            inner_product(&FunctionOnX::ones(1), &i).unwrap(),
            -GaussianRational::i()
        );
    }

    #[test]
    fn unitarity_examples() {
        let act = z2_swap_on(2);
        let f = FunctionOnX::from_integers(&[1, 0]);
        let g = FunctionOnX::from_integers(&[0, 1]);
        let (lhs, rhs) = unitarity_check(&act, 1, &f, &g).unwrap();
        assert_eq!(lhs, GaussianRational::zero());
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = unitarity_check(&act, 0, &f, &f).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_examples() {
        let act = z2_swap_on(2);
        assert_eq!(
            fourier_projection(&act, &FunctionOnX::from_integers(&[1, 0])).unwrap(),
            fq(&[(1, 2), (1, 2)])
        );
        let inv = FunctionOnX::from_integers(&[3, 3]);
        assert_eq!(fourier_projection(&act, &inv).unwrap(), inv);

        let (pg, conj) = s3_conj();
        let e = pg.group.identity();
        let delta_e = FunctionOnX::delta(6, e);
        assert_eq!(fourier_projection(&conj, &delta_e).unwrap(), delta_e);
    }

    #[test]
    fn coefficient_examples() {
        let transitive = GroupAction::translation(Arc::new(FiniteGroup::cyclic(3)));
        let c = fourier_coefficients(&transitive, &FunctionOnX::ones(3)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].raw_sum, GaussianRational::from_integer(3));
        assert_eq!(c[0].norm_sq, Rational::one());

        let act = z2_swap_on(2);
        let c = fourier_coefficients(&act, &FunctionOnX::from_integers(&[1, 0])).unwrap();
        assert_eq!(c[0].raw_sum, GaussianRational::one());
        assert_eq!(c[0].norm_sq, Rational::new(1, 4));

        let act = z2_swap_on(4);
        let c = fourier_coefficients(&act, &FunctionOnX::from_integers(&[0, 0, 5, 0])).unwrap();
        assert_eq!(c[0].raw_sum, GaussianRational::zero());
        assert_eq!(c[0].norm_sq, Rational::zero());
    }

    #[test]
    fn bessel_examples() {
        let act = z2_swap_on(2);
        let b = bessel_check(&act, &FunctionOnX::from_integers(&[1, 0])).unwrap();
        assert_eq!(
            (b.lhs.clone(), b.rhs.clone()),
            (Rational::new(1, 2), Rational::one())
        );
        assert!(b.holds() && !b.is_equality());

        let b = bessel_check(&act, &FunctionOnX::from_integers(&[2, 2])).unwrap();
        assert!(b.is_equality());
        let b = bessel_check(&act, &FunctionOnX::zero(2)).unwrap();
        assert_eq!((b.lhs, b.rhs), (Rational::zero(), Rational::zero()));
    }

    #[test]
    fn strict_witness_examples() {
        let act = z2_swap_on(2);
        let w = strict_bessel_witness(&act).unwrap();
        assert_eq!(w, FunctionOnX::delta(2, 0));
        let hat = fourier_projection(&act, &w).unwrap();
        assert_eq!(norm_sq(&hat).unwrap(), Rational::new(1, 4));
        assert_eq!(norm_sq(&w).unwrap(), Rational::new(1, 2));

        let (_, conj) = s3_conj();
        let w = strict_bessel_witness(&conj).unwrap();
        let x = w.values.iter().position(|v| !v.is_zero()).unwrap();
        assert_eq!(conj.orbit(x).len(), 3);
        let hat = fourier_projection(&conj, &w).unwrap();
        assert_eq!(norm_sq(&hat).unwrap(), Rational::new(1, 18));
        assert_eq!(norm_sq(&w).unwrap(), Rational::new(1, 6));

        let triv = GroupAction::trivial(Arc::new(FiniteGroup::cyclic(3)), 2);
        assert_eq!(
            strict_bessel_witness(&triv),
            Err(FunctionError::ActionIsTrivial)
        );
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(
            sigma(&FunctionOnX::ones(5)),
            GaussianRational::from_integer(5)
        );
        assert_eq!(
            sigma(&FunctionOnX::indicator(6, &[1, 4, 5])),
            GaussianRational::from_integer(3)
        );
        assert_eq!(
            sigma(&FunctionOnX::from_integers(&[1, -1])),
            GaussianRational::zero()
        );
    }

    #[test]
    fn decompose_examples() {
        let act = z2_swap_on(2);
        let d = decompose(&act, &FunctionOnX::ones(2)).unwrap();
        assert_eq!(d.invariant, FunctionOnX::ones(2));
        assert!(d.perp.is_zero());
        assert_eq!(d.mean, FunctionOnX::ones(2));
        assert!(d.kernel.is_zero());

        let d = decompose(&act, &FunctionOnX::from_integers(&[1, 0])).unwrap();
        assert_eq!(d.invariant, fq(&[(1, 2), (1, 2)]));
        assert_eq!(d.perp, fq(&[(1, 2), (-1, 2)]));
        assert_eq!(d.mean, fq(&[(1, 2), (1, 2)]));
        assert_eq!(d.kernel, fq(&[(1, 2), (-1, 2)]));

        let act = z2_swap_on(4);
        let d = decompose(&act, &FunctionOnX::delta(4, 2)).unwrap();
        assert_eq!(d.invariant, FunctionOnX::delta(4, 2));
        assert!(d.perp.is_zero());
        assert_eq!(d.mean, fq(&[(1, 4); 4]));
        assert_eq!(d.kernel, fq(&[(-1, 4), (-1, 4), (3, 4), (-1, 4)]));
        assert_eq!(d.invariant_kernel(), d.kernel);
    }

    #[test]
    fn perp_subset_examples() {
        let transitive = GroupAction::translation(Arc::new(FiniteGroup::cyclic(4)));
        let r = perp_subset_check(&transitive);
        assert!(r.is_subset && r.equality);

        let triv = GroupAction::trivial(Arc::new(FiniteGroup::cyclic(2)), 3);
        let r = perp_subset_check(&triv);
        assert!(r.is_subset && !r.equality);
        assert_eq!((r.perp_dim, r.kernel_dim), (0, 2));

        let r = perp_subset_check(&z2_swap_on(4));
        assert!(r.is_subset && !r.equality);
        assert_eq!((r.perp_dim, r.kernel_dim), (1, 3));
    }

    #[test]
    fn invariant_kernel_count() {
        let act = z2_swap_on(4);
        let basis = invariant_kernel_spanning_set(&act);
        assert_eq!(basis.len(), 2);
        assert_eq!(span_dimension(&basis), 2);
        for f in &basis {
            assert!(sigma(f).is_zero());
            assert!(is_invariant(&act, f).unwrap().is_some());
        }
    }
}
