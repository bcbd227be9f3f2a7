//! Finite groups as materialized multiplication tables.
//!
//! Elements of a [`FiniteGroup`] of order `m` are the indices `0..m`. Groups
//! come either from a user-supplied Cayley table (checked by
//! [`FiniteGroup::from_table`]) or from permutation generators
//! ([`PermutationGroup::from_generators`]), in which case each element keeps
//! the permutation it came from.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

/// Index of a group element.
pub type Element = usize;

/// Default bound on the order of a group built by closure.
pub const DEFAULT_CLOSURE_CAP: usize = 20160;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum GroupError {
    #[error("not a permutation: image {image} at position {position} is repeated or out of range")]
    NotAPermutation { position: usize, image: usize },
    #[error("permutation has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("closure exceeded the size cap of {cap} elements")]
    SizeLimitExceeded { cap: usize },
    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("multiplication table row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry mul({a},{b}) = {value} is out of range")]
    EntryOutOfRange { a: usize, b: usize, value: usize },
    #[error("not a Latin square: {line} {index} repeats the value {repeated}")]
    NotLatinSquare {
        line: String,
        index: usize,
        repeated: usize,
    },
    #[error("no identity element (witness {element:?})")]
    NoIdentity { element: Option<usize> },
    #[error("not associative: ({a}{b}){c} != {a}({b}{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("not a subgroup: {a}*{b} leaves the member set")]
    NotASubgroup { a: usize, b: usize },
}

/// A permutation of `0..n` in one-line (image array) notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (position, &image) in images.iter().enumerate() {
            if image >= n || seen[image] {
                return Err(GroupError::NotAPermutation { position, image });
            }
            seen[image] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The transposition swapping `a` and `b` in `Sym(n)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Permutation(p)
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` in `Sym(n)`.
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        for (i, &x) in c.iter().enumerate() {
            p[x] = c[(i + 1) % c.len()];
        }
        Permutation(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite group given by its full multiplication table.
///
/// Equality compares the tables only, not the display labels.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    identity: Element,
    inv: Vec<Element>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table. `identity` and `inv` are derived when absent
    /// and verified when supplied.
    ///
    /// Checks run in the order: shape, Latin square, identity,
    /// associativity, inverses. The error names the first violation found.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        identity: Option<Element>,
        inv: Option<Vec<Element>>,
    ) -> Result<Self, GroupError> {
        let m = table.len();
        if m == 0 {
            return Err(GroupError::EmptyTable);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != m {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: m,
                });
            }
            for (b, &value) in r.iter().enumerate() {
                if value >= m {
                    return Err(GroupError::EntryOutOfRange { a: row, b, value });
                }
            }
        }
        for (index, r) in table.iter().enumerate() {
            if let Some(repeated) = first_repeat(r.iter().copied(), m) {
                return Err(GroupError::NotLatinSquare {
                    line: "row".into(),
                    index,
                    repeated,
                });
            }
        }
        for index in 0..m {
            if let Some(repeated) = first_repeat(table.iter().map(|r| r[index]), m) {
                return Err(GroupError::NotLatinSquare {
                    line: "column".into(),
                    index,
                    repeated,
                });
            }
        }

        let is_identity = |e: usize| (0..m).find(|&a| table[e][a] != a || table[a][e] != a);
        let identity = match identity {
            Some(e) if e >= m => {
                return Err(GroupError::ElementOutOfRange {
                    element: e,
                    order: m,
                })
            }
            Some(e) => match is_identity(e) {
                None => e,
                Some(a) => return Err(GroupError::NoIdentity { element: Some(a) }),
            },
            None => (0..m)
                .find(|&e| is_identity(e).is_none())
                .ok_or(GroupError::NoIdentity { element: None })?,
        };

        for a in 0..m {
            for b in 0..m {
                let ab = table[a][b];
                for c in 0..m {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let inv = match inv {
            Some(inv) => {
                if inv.len() != m {
                    return Err(GroupError::NoInverse {
                        element: inv.len().min(m - 1),
                    });
                }
                for (a, &b) in inv.iter().enumerate() {
                    if b >= m || table[a][b] != identity || table[b][a] != identity {
                        return Err(GroupError::NoInverse { element: a });
                    }
                }
                inv
            }
            None => (0..m)
                .map(|a| {
                    (0..m)
                        .find(|&b| table[a][b] == identity && table[b][a] == identity)
                        .ok_or(GroupError::NoInverse { element: a })
                })
                .collect::<Result<_, _>>()?,
        };

        let mul = table.into_iter().flatten().map(|v| v as u32).collect();
        Ok(FiniteGroup {
            order: m,
            mul,
            identity,
            inv,
            labels: None,
        })
    }

    /// Builds a group from a table already known to satisfy the axioms,
    /// deriving the identity and inverses.
    pub(crate) fn from_table_unchecked(table: Vec<Vec<usize>>) -> Self {
        let m = table.len();
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a))
            .expect("identity");
        let inv = (0..m)
            .map(|a| (0..m).find(|&b| table[a][b] == identity).expect("inverse"))
            .collect();
        let mul = table.into_iter().flatten().map(|v| v as u32).collect();
        let g = FiniteGroup {
            order: m,
            mul,
            identity,
            inv,
            labels: None,
        };
        debug_assert!(m > 64 || FiniteGroup::from_table(g.table(), None, None).is_ok());
        g
    }

    /// The cyclic group `Z_n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        let labels = Some((0..n).map(|a| a.to_string()).collect());
        FiniteGroup {
            order: n,
            mul,
            identity: 0,
            inv,
            labels,
        }
    }

    /// `G × H`, with `(a, b)` stored at index `a * |H| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order, h.order);
        let order = m * k;
        let split = |x: usize| (x / k, x % k);
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a1, b1) = split(x);
            for y in 0..order {
                let (a2, b2) = split(y);
                mul.push((g.mul(a1, a2) * k + h.mul(b1, b2)) as u32);
            }
        }
        let inv = (0..order).map(|x| {
            let (a, b) = split(x);
            g.inv(a) * k + h.inv(b)
        });
        FiniteGroup {
            order,
            mul,
            identity: g.identity * k + h.identity,
            inv: inv.collect(),
            labels: Some(
                (0..order)
                    .map(|x| {
                        let (a, b) = split(x);
                        format!("({},{})", g.label(a), h.label(b))
                    })
                    .collect(),
            ),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inv[a]
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// The table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a x a⁻¹`.
    pub fn conjugate(&self, a: Element, x: Element) -> Element {
        self.mul(self.mul(a, x), self.inv(a))
    }

    /// The smallest subgroup containing `seeds`. Panics on out-of-range seeds.
    pub fn subgroup_generated(&self, seeds: &[Element]) -> Subgroup {
        for &s in seeds {
            assert!(
                s < self.order,
                "seed {s} out of range for order {}",
                self.order
            );
        }
        let mut in_set = vec![false; self.order];
        in_set[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        // Right multiplication by the seeds from e reaches every product of
        // seeds; finiteness makes that closed under inverses too.
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !in_set[y] {
                    in_set[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup {
            members: (0..self.order).filter(|&a| in_set[a]).collect(),
            parent_order: self.order,
        }
    }

    /// Checks that `members` is closed under the group operation.
    pub fn subgroup(&self, members: &[Element]) -> Result<Subgroup, GroupError> {
        let mut in_set = vec![false; self.order];
        for &a in members {
            if a >= self.order {
                return Err(GroupError::ElementOutOfRange {
                    element: a,
                    order: self.order,
                });
            }
            in_set[a] = true;
        }
        if !in_set[self.identity] {
            return Err(GroupError::NotASubgroup {
                a: self.identity,
                b: self.identity,
            });
        }
        let members: Vec<Element> = (0..self.order).filter(|&a| in_set[a]).collect();
        for &a in &members {
            for &b in &members {
                if !in_set[self.mul(a, b)] {
                    return Err(GroupError::NotASubgroup { a, b });
                }
            }
        }
        Ok(Subgroup {
            members,
            parent_order: self.order,
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: self.elements().collect(),
            parent_order: self.order,
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity],
            parent_order: self.order,
        }
    }

    /// `[G : H]`.
    pub fn index(&self, h: &Subgroup) -> usize {
        debug_assert_eq!(h.parent_order, self.order);
        self.order / h.order()
    }

    /// Whether `sigma`, a permutation of the elements, is a homomorphism.
    pub fn automorphism_check(&self, sigma: &Permutation) -> bool {
        sigma.degree() == self.order
            && self.elements().all(|a| {
                self.elements().all(|b| {
                    sigma.apply(self.mul(a, b)) == self.mul(sigma.apply(a), sigma.apply(b))
                })
            })
    }

    /// A generating set, chosen greedily in element order.
    pub fn generating_set(&self) -> Vec<Element> {
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for a in self.elements() {
            if !span.contains(a) {
                gens.push(a);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    /// Every automorphism of the group, found by trying all order-preserving
    /// images of a generating set and keeping the maps that extend to a
    /// bijective homomorphism.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let gens = self.generating_set();
        let candidates: Vec<Vec<Element>> = gens
            .iter()
            .map(|&g| {
                let ord = self.element_order(g);
                self.elements()
                    .filter(|&x| self.element_order(x) == ord)
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let images: Vec<Element> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if let Some(p) = self.extend_homomorphism(&gens, &images) {
                if self.automorphism_check(&p) {
                    out.push(p);
                }
            }
            // odometer increment
            let mut k = 0;
            loop {
                if k == choice.len() {
                    out.sort();
                    return out;
                }
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    /// Extends `gens[i] -> images[i]` along words in the generators. Returns
    /// `None` if the extension is ill-defined or not a bijection.
    fn extend_homomorphism(&self, gens: &[Element], images: &[Element]) -> Option<Permutation> {
        let mut map = vec![usize::MAX; self.order];
        map[self.identity] = self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = self.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Permutation::new(map).ok()
    }
}

fn first_repeat(values: impl Iterator<Item = usize>, m: usize) -> Option<usize> {
    let mut seen = vec![false; m];
    for v in values {
        if seen[v] {
            return Some(v);
        }
        seen[v] = true;
    }
    None
}

/// A subgroup, stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Element>,
    parent_order: usize,
}

impl Subgroup {
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, a: Element) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

/// A group realized by permutations of `0..degree`. Element `a` of
/// [`group`](Self::group) is the permutation `perms[a]`, and
/// `mul(a, b)` corresponds to `perms[a] ∘ perms[b]`.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Permutation>,
    pub degree: usize,
}

impl PermutationGroup {
    /// Breadth-first closure of `generators` under composition.
    ///
    /// Element 0 is the identity; the others appear in the order they are
    /// first reached by right multiplication with the generators.
    pub fn from_generators(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let k = generators.len();
        let mut perms = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(perms[0].clone(), 0)]);
        // parent[b] = (c, j) with perms[b] = perms[c] ∘ generators[j]
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right: Vec<usize> = Vec::new();
        let mut next = 0;
        while next < perms.len() {
            for (j, g) in generators.iter().enumerate() {
                let y = perms[next].compose(g);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = perms.len();
                        if i >= cap {
                            return Err(GroupError::SizeLimitExceeded { cap });
                        }
                        index.insert(y.clone(), i);
                        perms.push(y);
                        parent.push((next, j));
                        i
                    }
                };
                right.push(idx);
            }
            next += 1;
        }
        let m = perms.len();
        // mul[a][b] = (a ∘ parent_b) ∘ g_j, filled in BFS order of b.
        let mut mul = vec![0u32; m * m];
        for a in 0..m {
            let row = a * m;
            mul[row] = a as u32;
            for b in 1..m {
                let (c, j) = parent[b];
                let ac = mul[row + c] as usize;
                mul[row + b] = right[ac * k + j] as u32;
            }
        }
        let mut inv = vec![0; m];
        for a in 0..m {
            let b = (0..m)
                .find(|&b| mul[a * m + b] == 0)
                .expect("group inverse");
            inv[a] = b;
        }
        let labels = perms.iter().map(|p| format!("{:?}", p)).collect();
        Ok(PermutationGroup {
            group: FiniteGroup {
                order: m,
                mul,
                identity: 0,
                inv,
                labels: Some(labels),
            },
            perms,
            degree,
        })
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::transposition(n, 0, 1));
        }
        if n >= 3 {
            gens.push(Permutation::cycle(n, &(0..n).collect::<Vec<_>>()));
        }
        Self::from_generators(n, &gens, usize::MAX).expect("symmetric group")
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Element> {
        self.perms.iter().position(|q| q == p)
    }
}
