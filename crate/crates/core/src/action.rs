//! Group actions on finite point sets.
//!
//! A [`GroupAction`] is a fully tabulated action of a [`FiniteGroup`] on the
//! points `0..n`. Everything here is computed by direct enumeration over the
//! table: orbits, fixed points, stabilizers, the fixed-point count of a
//! subgroup (whose average is the dimension of the space of invariant
//! functions), and equivalence of two actions of the same group.

use std::sync::Arc;

use serde::Serialize;

use crate::exact_arith::Rational;
use crate::group::{Element, FiniteGroup, PermutationGroup, Subgroup};

/// A point of the set being acted on.
pub type Point = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum ActionError {
    #[error("the point set is empty")]
    EmptyDomain,
    #[error("action table has {found} rows, expected one per group element ({expected})")]
    RowCountMismatch { expected: usize, found: usize },
    #[error("action row {element} has length {len}, expected {expected}")]
    RowLengthMismatch {
        element: usize,
        len: usize,
        expected: usize,
    },
    #[error("act[{element}][{point}] = {value} is out of range")]
    PointOutOfRange {
        element: usize,
        point: usize,
        value: usize,
    },
    #[error("identity moves point {x}")]
    IdentityAxiomViolated { x: usize },
    #[error("(ab)·x != a·(b·x) for a={a}, b={b}, x={x}")]
    CompatibilityViolated { a: usize, b: usize, x: usize },
    #[error("row {element} of the action table is not a bijection")]
    RowNotBijective { element: usize },
    #[error("fixed-point total {sum} is not divisible by the subgroup order {order}")]
    NotAnInteger { sum: usize, order: usize },
    #[error("the action is not free: element {element} fixes point {point}")]
    NotFree { element: usize, point: usize },
    #[error("dimension identity failed: {lhs} != {rhs}")]
    IdentityMismatch { lhs: Rational, rhs: Rational },
    #[error("subgroup belongs to a group of order {found}, expected {expected}")]
    SubgroupMismatch { expected: usize, found: usize },
    #[error("the two actions are of different groups")]
    GroupMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum PartitionError {
    #[error("the partition has an empty cell at index {cell}")]
    EmptyCell { cell: usize },
    #[error("point {point} lies in more than one cell")]
    Overlap { point: usize },
    #[error("point {point} is not covered by any cell")]
    Uncovered { point: usize },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// Disjoint nonempty cells covering `0..n`.
///
/// Cells are stored sorted, and ordered by their smallest member, so two
/// partitions are equal exactly when they have the same cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cells: Vec<Vec<Point>>,
    cell_of: Vec<usize>,
}

impl Partition {
    pub fn new(degree: usize, cells: Vec<Vec<Point>>) -> Result<Self, PartitionError> {
        let mut cells = cells;
        let mut seen = vec![false; degree];
        for (i, cell) in cells.iter_mut().enumerate() {
            if cell.is_empty() {
                return Err(PartitionError::EmptyCell { cell: i });
            }
            cell.sort_unstable();
            for &x in cell.iter() {
                if x >= degree {
                    return Err(PartitionError::PointOutOfRange { point: x, degree });
                }
                if seen[x] {
                    return Err(PartitionError::Overlap { point: x });
                }
                seen[x] = true;
            }
        }
        if let Some(point) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered { point });
        }
        cells.sort_unstable_by_key(|c| c[0]);
        Ok(Self::from_sorted_cells(degree, cells))
    }

    fn from_sorted_cells(degree: usize, cells: Vec<Vec<Point>>) -> Self {
        let mut cell_of = vec![0; degree];
        for (i, cell) in cells.iter().enumerate() {
            for &x in cell {
                cell_of[x] = i;
            }
        }
        Partition { cells, cell_of }
    }

    /// Every point in its own cell.
    pub fn singletons(degree: usize) -> Self {
        Self::from_sorted_cells(degree, (0..degree).map(|x| vec![x]).collect())
    }

    pub fn degree(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cells(&self) -> &[Vec<Point>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_of(&self, x: Point) -> usize {
        self.cell_of[x]
    }

    pub fn cell_containing(&self, x: Point) -> &[Point] {
        &self.cells[self.cell_of[x]]
    }
}

/// An action of a finite group on the points `0..degree`, stored as a table
/// with `act(a, x) = a·x`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: Arc<FiniteGroup>,
    degree: usize,
    act: Vec<u32>,
}

impl GroupAction {
    /// Checks the identity and compatibility axioms for every point and
    /// every pair of elements.
    pub fn new(group: Arc<FiniteGroup>, table: Vec<Vec<Point>>) -> Result<Self, ActionError> {
        let m = group.order();
        if table.len() != m {
            return Err(ActionError::RowCountMismatch {
                expected: m,
                found: table.len(),
            });
        }
        let n = table[0].len();
        if n == 0 {
            return Err(ActionError::EmptyDomain);
        }
        for (element, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(ActionError::RowLengthMismatch {
                    element,
                    len: row.len(),
                    expected: n,
                });
            }
            if let Some((point, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(ActionError::PointOutOfRange {
                    element,
                    point,
                    value,
                });
            }
        }
        let e = group.identity();
        if let Some(x) = (0..n).find(|&x| table[e][x] != x) {
            return Err(ActionError::IdentityAxiomViolated { x });
        }
        for a in 0..m {
            for b in 0..m {
                let ab = group.mul(a, b);
                for x in 0..n {
                    if table[ab][x] != table[a][table[b][x]] {
                        return Err(ActionError::CompatibilityViolated { a, b, x });
                    }
                }
            }
        }
        for (element, row) in table.iter().enumerate() {
            let mut hit = vec![false; n];
            for &y in row {
                if std::mem::replace(&mut hit[y], true) {
                    return Err(ActionError::RowNotBijective { element });
                }
            }
        }
        let act = table.into_iter().flatten().map(|v| v as u32).collect();
        Ok(GroupAction {
            group,
            degree: n,
            act,
        })
    }

    /// Builds an action from a closure that is known to satisfy the axioms.
    pub(crate) fn from_fn_unchecked(
        group: Arc<FiniteGroup>,
        degree: usize,
        f: impl Fn(Element, Point) -> Point,
    ) -> Self {
        assert!(degree > 0, "empty point set");
        let act = group
            .elements()
            .flat_map(|a| (0..degree).map(move |x| (a, x)))
            .map(|(a, x)| f(a, x) as u32)
            .collect();
        let action = GroupAction { group, degree, act };
        debug_assert!(action.check_axioms().is_ok());
        action
    }

    fn check_axioms(&self) -> Result<(), ActionError> {
        GroupAction::new(self.group.clone(), self.table()).map(|_| ())
    }

    /// The action of a permutation group on its points: `σ·x = σ(x)`.
    pub fn evaluation(pg: &PermutationGroup) -> Self {
        let group = Arc::new(pg.group.clone());
        Self::from_fn_unchecked(group, pg.degree, |a, x| pg.perms[a].apply(x))
    }

    /// Every element fixes every point.
    pub fn trivial(group: Arc<FiniteGroup>, degree: usize) -> Self {
        Self::from_fn_unchecked(group, degree, |_, x| x)
    }

    /// Left multiplication of the group on itself.
    pub fn translation(group: Arc<FiniteGroup>) -> Self {
        let g = group.clone();
        Self::from_fn_unchecked(group, g.order(), |a, x| g.mul(a, x))
    }

    /// Conjugation of the group on itself, `a·x = a x a⁻¹`.
    pub fn conjugation(group: Arc<FiniteGroup>) -> Self {
        let g = group.clone();
        Self::from_fn_unchecked(group, g.order(), |a, x| g.conjugate(a, x))
    }

    /// Left multiplication on the left cosets of `h`. Point `i` is the
    /// `i`-th coset in order of smallest member; the cosets are returned
    /// alongside the action.
    pub fn cosets(group: Arc<FiniteGroup>, h: &Subgroup) -> (Self, Vec<Vec<Element>>) {
        let m = group.order();
        let mut coset_of = vec![usize::MAX; m];
        let mut cosets: Vec<Vec<Element>> = Vec::new();
        for x in 0..m {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut c: Vec<Element> = h.members().iter().map(|&k| group.mul(x, k)).collect();
            c.sort_unstable();
            for &y in &c {
                coset_of[y] = cosets.len();
            }
            cosets.push(c);
        }
        let g = group.clone();
        let reps: Vec<Element> = cosets.iter().map(|c| c[0]).collect();
        let action =
            Self::from_fn_unchecked(group, cosets.len(), |a, i| coset_of[g.mul(a, reps[i])]);
        (action, cosets)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `a·x`.
    #[inline]
    pub fn act(&self, a: Element, x: Point) -> Point {
        self.act[a * self.degree + x] as usize
    }

    pub fn table(&self) -> Vec<Vec<Point>> {
        self.act
            .chunks(self.degree)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// The same action with the points renamed by `phi` (point `x` becomes
    /// `phi[x]`).
    pub fn relabel(&self, phi: &[Point]) -> Self {
        let mut inv = vec![0; self.degree];
        for (x, &y) in phi.iter().enumerate() {
            inv[y] = x;
        }
        Self::from_fn_unchecked(self.group.clone(), self.degree, |a, y| {
            phi[self.act(a, inv[y])]
        })
    }

    /// `{a·x : a ∈ G}`, sorted.
    pub fn orbit(&self, x: Point) -> Vec<Point> {
        self.orbit_under(self.group.elements(), x)
    }

    fn orbit_under(&self, elements: impl IntoIterator<Item = Element>, x: Point) -> Vec<Point> {
        let mut hit = vec![false; self.degree];
        for a in elements {
            hit[self.act(a, x)] = true;
        }
        (0..self.degree).filter(|&y| hit[y]).collect()
    }

    /// The orbit partition, cells in order of smallest member.
    pub fn orbits(&self) -> Partition {
        self.orbits_of(self.group.elements())
    }

    /// The orbits of the subgroup `h` acting by restriction.
    pub fn orbits_under(&self, h: &Subgroup) -> Partition {
        self.orbits_of(h.members().iter().copied())
    }

    fn orbits_of(&self, elements: impl Iterator<Item = Element> + Clone) -> Partition {
        let mut assigned = vec![false; self.degree];
        let mut cells = Vec::new();
        for x in 0..self.degree {
            if assigned[x] {
                continue;
            }
            let cell = self.orbit_under(elements.clone(), x);
            for &y in &cell {
                assigned[y] = true;
            }
            cells.push(cell);
        }
        Partition::from_sorted_cells(self.degree, cells)
    }

    /// The action of `h` alone, with `h`'s members renumbered `0..|H|` in
    /// sorted order.
    pub fn restrict_to(&self, h: &Subgroup) -> Result<GroupAction, ActionError> {
        self.check_subgroup(h)?;
        let members = h.members();
        let pos = |a: Element| members.binary_search(&a).expect("subgroup is closed");
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos(self.group.mul(a, b))).collect())
            .collect();
        let sub = Arc::new(FiniteGroup::from_table_unchecked(table));
        Ok(GroupAction::from_fn_unchecked(sub, self.degree, |i, x| {
            self.act(members[i], x)
        }))
    }

    /// `Fix a = {x : a·x = x}`, sorted.
    pub fn fix(&self, a: Element) -> Vec<Point> {
        (0..self.degree).filter(|&x| self.act(a, x) == x).collect()
    }

    pub fn fix_count(&self, a: Element) -> usize {
        (0..self.degree).filter(|&x| self.act(a, x) == x).count()
    }

    pub fn stabilizer(&self, x: Point) -> Subgroup {
        let members: Vec<Element> = self
            .group
            .elements()
            .filter(|&a| self.act(a, x) == x)
            .collect();
        self.group
            .subgroup(&members)
            .expect("stabilizers are subgroups")
    }

    /// A non-identity element with a fixed point, if any.
    pub fn freeness_witness(&self) -> Option<(Element, Point)> {
        let e = self.group.identity();
        self.group.elements().filter(|&a| a != e).find_map(|a| {
            (0..self.degree)
                .find(|&x| self.act(a, x) == x)
                .map(|x| (a, x))
        })
    }

    pub fn is_free(&self) -> bool {
        self.freeness_witness().is_none()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    pub fn is_trivial(&self) -> bool {
        self.group
            .elements()
            .all(|a| self.fix_count(a) == self.degree)
    }

    fn check_subgroup(&self, h: &Subgroup) -> Result<(), ActionError> {
        if h.parent_order() != self.group.order() {
            return Err(ActionError::SubgroupMismatch {
                expected: self.group.order(),
                found: h.parent_order(),
            });
        }
        Ok(())
    }

    /// `Σ_{a ∈ H} |Fix a|`.
    pub fn fixed_point_total(&self, h: &Subgroup) -> usize {
        h.members().iter().map(|&a| self.fix_count(a)).sum()
    }

    /// `dim L^H(X) = (1/|H|) Σ_{a ∈ H} |Fix a|`, as an exact rational.
    ///
    /// The value is always an integer for a valid action; a fractional
    /// result is reported as [`ActionError::NotAnInteger`].
    pub fn burnside_dimension(&self, h: &Subgroup) -> Result<Rational, ActionError> {
        self.check_subgroup(h)?;
        let sum = self.fixed_point_total(h);
        let dim = Rational::from(sum) / Rational::from(h.order());
        if !dim.is_integer() {
            return Err(ActionError::NotAnInteger {
                sum,
                order: h.order(),
            });
        }
        Ok(dim)
    }

    /// Evaluates `|G| dim L^G − |H| dim L^H` (dimensions taken as orbit
    /// counts) and `Σ_{a ∈ G∖H} |Fix a|` separately and returns their
    /// common value.
    pub fn dimension_difference(&self, h: &Subgroup) -> Result<Rational, ActionError> {
        self.check_subgroup(h)?;
        let g_order = Rational::from(self.group.order());
        let h_order = Rational::from(h.order());
        let lhs = &g_order * &Rational::from(self.orbits().len())
            - &h_order * &Rational::from(self.orbits_under(h).len());
        let rhs: usize = self
            .group
            .elements()
            .filter(|&a| !h.contains(a))
            .map(|a| self.fix_count(a))
            .sum();
        let rhs = Rational::from(rhs);
        if lhs != rhs {
            return Err(ActionError::IdentityMismatch { lhs, rhs });
        }
        Ok(lhs)
    }

    /// For a free action, `dim L^H / dim L^G` together with `[G : H]`; the
    /// two agree.
    pub fn free_ratio_check(&self, h: &Subgroup) -> Result<(Rational, usize), ActionError> {
        self.check_subgroup(h)?;
        if let Some((element, point)) = self.freeness_witness() {
            return Err(ActionError::NotFree { element, point });
        }
        let ratio = self.burnside_dimension(h)? / self.burnside_dimension(&self.group.whole())?;
        let index = self.group.index(h);
        if ratio != Rational::from(index) {
            return Err(ActionError::IdentityMismatch {
                lhs: ratio,
                rhs: Rational::from(index),
            });
        }
        Ok((ratio, index))
    }

    /// Whether `phi` is an equivariant bijection from `self` to `other`.
    pub fn is_equivariant_map(&self, other: &GroupAction, phi: &[Point]) -> bool {
        if phi.len() != self.degree || other.degree != self.degree {
            return false;
        }
        let mut hit = vec![false; other.degree];
        for &y in phi {
            if y >= other.degree || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        self.group
            .elements()
            .all(|a| (0..self.degree).all(|x| phi[self.act(a, x)] == other.act(a, phi[x])))
    }

    /// Searches for an equivariant bijection `Φ` with `Φ(a·x) = a·Φ(x)`.
    ///
    /// Returns `Ok(None)` when the actions are not equivalent, including
    /// when the degrees differ. Both actions must be of the same group.
    pub fn are_equivalent(&self, other: &GroupAction) -> Result<Option<Vec<Point>>, ActionError> {
        if !Arc::ptr_eq(&self.group, &other.group) && *self.group != *other.group {
            return Err(ActionError::GroupMismatch);
        }
        if self.degree != other.degree {
            return Ok(None);
        }
        let (ox, oy) = (self.orbits(), other.orbits());
        let sizes = |p: &Partition| {
            let mut s: Vec<usize> = p.cells().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        if sizes(&ox) != sizes(&oy) {
            return Ok(None);
        }
        // Transitive G-sets are isomorphic exactly when they share a point
        // stabilizer, and isomorphism is an equivalence relation, so
        // matching orbits greedily never has to backtrack across orbits.
        let mut used = vec![false; oy.len()];
        let mut phi = vec![usize::MAX; self.degree];
        for cx in ox.cells() {
            let x0 = cx[0];
            let stab = self.stabilizer(x0);
            let found = oy.cells().iter().enumerate().find_map(|(j, cy)| {
                if used[j] || cy.len() != cx.len() {
                    return None;
                }
                cy.iter()
                    .copied()
                    .find(|&y0| stab.members().iter().all(|&a| other.act(a, y0) == y0))
                    .map(|y0| (j, y0))
            });
            let Some((j, y0)) = found else {
                return Ok(None);
            };
            used[j] = true;
            for a in self.group.elements() {
                phi[self.act(a, x0)] = other.act(a, y0);
            }
        }
        debug_assert!(self.is_equivariant_map(other, &phi));
        Ok(Some(phi))
    }
}
