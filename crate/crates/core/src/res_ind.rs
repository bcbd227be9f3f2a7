//! Restriction and induction between `L(X)` and `L(Y)` for an invariant
//! subset `Y ⊆ X`.
//!
//! `Res` copies values onto `Y`, `extend_by_zero` pads a function on `Y` with
//! zeros, and `Ind` averages the padded function over the group:
//!
//! ```text
//! Ind f(x) = |X| / (|G| |Y|) · Σ_{b ∈ G} f̃(b⁻¹·x)
//! ```
//!
//! With the normalized inner products on `X` and on `Y`, `Ind` and `Res` are
//! adjoint on invariant functions; [`reciprocity_check`] evaluates both
//! sides of that identity exactly.

use serde::Serialize;

use crate::action::{GroupAction, Point};
use crate::exact_arith::{GaussianRational, Rational};
use crate::function_space::{self, FunctionOnX};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum ResIndError {
    #[error("the subset is empty")]
    EmptySubset,
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("subset is not invariant: element {element} sends {point} to {image}")]
    NotInvariant {
        element: usize,
        point: usize,
        image: usize,
    },
    #[error("function has {found} values, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("function is defined on a different subset")]
    SubsetMismatch,
    #[error("the {side} argument is not invariant (lhs {lhs}, rhs {rhs})")]
    NotInvariantFunction {
        side: Side,
        lhs: GaussianRational,
        rhs: GaussianRational,
    },
}

/// Which argument of the reciprocity check failed its precondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    F,
    G,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::F => "f",
            Side::G => "g",
        })
    }
}

/// A nonempty union of orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSubset {
    degree: usize,
    points: Vec<Point>,
    position: Vec<Option<usize>>,
}

impl InvariantSubset {
    pub fn new(act: &GroupAction, points: &[Point]) -> Result<Self, ResIndError> {
        let degree = act.degree();
        let mut points = points.to_vec();
        points.sort_unstable();
        points.dedup();
        if points.is_empty() {
            return Err(ResIndError::EmptySubset);
        }
        if let Some(&point) = points.iter().find(|&&p| p >= degree) {
            return Err(ResIndError::PointOutOfRange { point, degree });
        }
        let mut position = vec![None; degree];
        for (i, &p) in points.iter().enumerate() {
            position[p] = Some(i);
        }
        for a in act.group().elements() {
            for &point in &points {
                let image = act.act(a, point);
                if position[image].is_none() {
                    return Err(ResIndError::NotInvariant {
                        element: a,
                        point,
                        image,
                    });
                }
            }
        }
        Ok(InvariantSubset {
            degree,
            points,
            position,
        })
    }

    /// All of `X`.
    pub fn full(act: &GroupAction) -> Self {
        let degree = act.degree();
        InvariantSubset {
            degree,
            points: (0..degree).collect(),
            position: (0..degree).map(Some).collect(),
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Degree of the ambient set `X`.
    pub fn ambient_degree(&self) -> usize {
        self.degree
    }

    /// Position of `x` in the sorted point list, if `x ∈ Y`.
    pub fn position(&self, x: Point) -> Option<usize> {
        self.position.get(x).copied().flatten()
    }

    pub fn contains(&self, x: Point) -> bool {
        self.position(x).is_some()
    }
}

/// An element of `L(Y)`, indexed by position in the sorted points of `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionOnY {
    subset: InvariantSubset,
    values: Vec<GaussianRational>,
}

impl FunctionOnY {
    pub fn new(
        subset: InvariantSubset,
        values: Vec<GaussianRational>,
    ) -> Result<Self, ResIndError> {
        if values.len() != subset.len() {
            return Err(ResIndError::DegreeMismatch {
                expected: subset.len(),
                found: values.len(),
            });
        }
        Ok(FunctionOnY { subset, values })
    }

    pub fn subset(&self) -> &InvariantSubset {
        &self.subset
    }

    pub fn values(&self) -> &[GaussianRational] {
        &self.values
    }

    /// Value at the ambient point `x`, which must lie in `Y`.
    pub fn at(&self, x: Point) -> Option<&GaussianRational> {
        self.subset.position(x).map(|i| &self.values[i])
    }
}

/// `Res f`: the values of `f` at the points of `Y`.
pub fn restrict(f: &FunctionOnX, y: &InvariantSubset) -> Result<FunctionOnY, ResIndError> {
    if f.degree() != y.degree {
        return Err(ResIndError::DegreeMismatch {
            expected: y.degree,
            found: f.degree(),
        });
    }
    let values = y.points.iter().map(|&p| f.values[p].clone()).collect();
    Ok(FunctionOnY {
        subset: y.clone(),
        values,
    })
}

/// `f̃`: `g` on `Y`, zero elsewhere.
pub fn extend_by_zero(g: &FunctionOnY) -> FunctionOnX {
    let mut out = FunctionOnX::zero(g.subset.degree);
    for (&p, v) in g.subset.points.iter().zip(&g.values) {
        out.values[p] = v.clone();
    }
    out
}

/// `Ind g`. Accepts any `g ∈ L(Y)`; the result is always invariant.
pub fn induce(
    act: &GroupAction,
    y: &InvariantSubset,
    g: &FunctionOnY,
) -> Result<FunctionOnX, ResIndError> {
    if y.degree != act.degree() {
        return Err(ResIndError::DegreeMismatch {
            expected: act.degree(),
            found: y.degree,
        });
    }
    if g.subset != *y {
        return Err(ResIndError::SubsetMismatch);
    }
    let padded = extend_by_zero(g);
    let group = act.group();
    let coefficient = Rational::new(act.degree() as i64, (group.order() * y.len()) as i64);
    let values = (0..act.degree())
        .map(|x| {
            let s: GaussianRational = group
                .elements()
                .map(|b| &padded.values[act.act(group.inv(b), x)])
                .sum();
            s.scale(&coefficient)
        })
        .collect();
    Ok(FunctionOnX::new(values))
}

/// `(1/|Y|) Σ_{y ∈ Y} f(y) conj(g(y))`.
pub fn inner_product_on_y(
    f: &FunctionOnY,
    g: &FunctionOnY,
) -> Result<GaussianRational, ResIndError> {
    if f.subset != g.subset {
        return Err(ResIndError::SubsetMismatch);
    }
    let s: GaussianRational = f
        .values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| a * &b.conjugate())
        .sum();
    Ok(s.scale(&Rational::new(1, f.values.len() as i64)))
}

/// Whether `f` is constant on every orbit inside `Y`.
pub fn is_invariant_on_y(act: &GroupAction, f: &FunctionOnY) -> bool {
    // Y is a union of orbits, so padding by zero preserves (non)invariance.
    function_space::is_invariant(act, &extend_by_zero(f))
        .map(|c| c.is_some())
        .unwrap_or(false)
}

/// Both sides of `⟨Ind f, g⟩_X = ⟨f, Res g⟩_Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reciprocity {
    pub lhs: GaussianRational,
    pub rhs: GaussianRational,
    pub equal: bool,
}

/// Evaluates both sides of Frobenius reciprocity for invariant `f` on `Y`
/// and invariant `g` on `X`.
///
/// If either argument is not invariant the identity is outside its stated
/// range; the sides are still computed and returned inside
/// [`ResIndError::NotInvariantFunction`].
pub fn reciprocity_check(
    act: &GroupAction,
    y: &InvariantSubset,
    f: &FunctionOnY,
    g: &FunctionOnX,
) -> Result<Reciprocity, ResIndError> {
    if g.degree() != act.degree() {
        return Err(ResIndError::DegreeMismatch {
            expected: act.degree(),
            found: g.degree(),
        });
    }
    let induced = induce(act, y, f)?;
    let lhs = function_space::inner_product(&induced, g).expect("degrees already checked");
    let rhs = inner_product_on_y(f, &restrict(g, y)?)?;
    let side = if !is_invariant_on_y(act, f) {
        Some(Side::F)
    } else if function_space::is_invariant(act, g)
        .ok()
        .flatten()
        .is_none()
    {
        Some(Side::G)
    } else {
        None
    };
    match side {
        Some(side) => Err(ResIndError::NotInvariantFunction { side, lhs, rhs }),
        None => Ok(Reciprocity {
            equal: lhs == rhs,
            lhs,
            rhs,
        }),
    }
}
