//! Ready-made actions.
//!
//! [`build`] constructs a named action from string parameters. The names
//! cover the standard examples: the natural action of `Sym(n)`, cosets,
//! conjugation on conjugates of a subset, on Sylow subgroups and on the
//! elements of prime order, `GL(n, F_q)` on column vectors, the induced
//! action on subsets, the two-sided action of `G × G` on `G`, conjugation
//! of a group on itself (class functions), cyclic translation (periodic
//! functions) and the trivial action.
//!
//! Group parameters use short names: `Z<n>`, `S<n>`, `A<n>`, `D<n>`
//! (dihedral of order `2n`), `Q8`, `Dic3`, `V4`, and direct products such
//! as `Z2xZ4`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::action::GroupAction;
use crate::group::{Element, FiniteGroup, Permutation, PermutationGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "error")]
pub enum CorpusError {
    #[error("unknown corpus entry {name:?}")]
    UnknownCorpusName { name: String },
    #[error("unknown group {name:?}")]
    UnknownGroup { name: String },
    #[error("parameter {param}={value} is out of range: {reason}")]
    ParamOutOfRange {
        param: String,
        value: String,
        reason: String,
    },
}

/// Every name accepted by [`build`].
pub const NAMES: &[&str] = &[
    "symmetric",
    "coset",
    "conjugate_subsets",
    "sylow",
    "order_p",
    "gl_on_vectors",
    "subsets",
    "two_sided",
    "class_functions",
    "cyclic_translation",
    "trivial",
];

/// One representative of each isomorphism class of groups of order at most 12.
pub const SMALL_GROUPS: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8",
    "Z9", "Z3xZ3", "Z10", "D5", "Z11", "Z12", "Z2xZ6", "D6", "A4", "Dic3",
];

/// Flags fixed in advance for an entry. `None` means no claim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub orbit_count: Option<usize>,
    pub is_free: Option<bool>,
    pub is_transitive: Option<bool>,
    pub is_trivial: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub action: GroupAction,
    pub expected: Expected,
}

/// A flag whose recomputed value disagrees with [`Expected`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub flag: &'static str,
    pub expected: String,
    pub actual: String,
}

impl CorpusEntry {
    /// Recomputes every expected flag and lists disagreements.
    pub fn mismatches(&self) -> Vec<Mismatch> {
        let a = &self.action;
        let mut out = Vec::new();
        let mut cmp = |flag: &'static str, expected: Option<String>, actual: String| {
            if let Some(expected) = expected {
                if expected != actual {
                    out.push(Mismatch {
                        flag,
                        expected,
                        actual,
                    });
                }
            }
        };
        let e = &self.expected;
        cmp(
            "orbit_count",
            e.orbit_count.map(|v| v.to_string()),
            a.orbits().len().to_string(),
        );
        cmp(
            "is_free",
            e.is_free.map(|v| v.to_string()),
            a.is_free().to_string(),
        );
        cmp(
            "is_transitive",
            e.is_transitive.map(|v| v.to_string()),
            a.is_transitive().to_string(),
        );
        cmp(
            "is_trivial",
            e.is_trivial.map(|v| v.to_string()),
            a.is_trivial().to_string(),
        );
        out
    }

    /// `|G|` does not divide `|X|`, which rules out a free action.
    pub fn order_fails_to_divide_degree(&self) -> bool {
        !self
            .action
            .degree()
            .is_multiple_of(self.action.group().order())
    }
}

/// Parameters for [`build`]; missing keys take their defaults.
pub type Params = BTreeMap<String, String>;

/// Builds the entry with every parameter at its default.
pub fn build_default(name: &str) -> Result<CorpusEntry, CorpusError> {
    build(name, &Params::new())
}

/// The eight families whose actions are never free, at default parameters,
/// followed by the remaining entries.
pub fn default_entries() -> Vec<CorpusEntry> {
    NAMES
        .iter()
        .map(|n| build_default(n).expect("defaults are valid"))
        .collect()
}

/// A wider sample with several parameter choices per family.
pub fn sample_entries() -> Vec<CorpusEntry> {
    let specs: &[(&str, &[(&str, &str)])] = &[
        ("symmetric", &[("n", "3")]),
        ("symmetric", &[("n", "4")]),
        ("coset", &[("group", "S4"), ("subgroup", "1")]),
        ("coset", &[("group", "D4")]),
        ("conjugate_subsets", &[("group", "S4")]),
        ("conjugate_subsets", &[("group", "A4")]),
        ("sylow", &[("group", "S4"), ("p", "3")]),
        ("sylow", &[("group", "A4"), ("p", "2")]),
        ("order_p", &[("group", "S4"), ("p", "2")]),
        ("order_p", &[("group", "D5"), ("p", "5")]),
        ("gl_on_vectors", &[("q", "2")]),
        ("gl_on_vectors", &[("q", "3")]),
        ("subsets", &[("group", "S3")]),
        ("subsets", &[("group", "A4")]),
        ("two_sided", &[("group", "Z2")]),
        ("two_sided", &[("group", "S3")]),
        ("class_functions", &[("group", "S3")]),
        ("class_functions", &[("group", "Q8")]),
        ("class_functions", &[("group", "D4")]),
        ("cyclic_translation", &[("n", "6")]),
        ("trivial", &[("group", "Z3"), ("n", "4")]),
    ];
    specs
        .iter()
        .map(|(name, kv)| {
            let params = kv
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            build(name, &params).expect("sample parameters are valid")
        })
        .collect()
}

fn out_of_range(param: &str, value: impl ToString, reason: &str) -> CorpusError {
    CorpusError::ParamOutOfRange {
        param: param.into(),
        value: value.to_string(),
        reason: reason.into(),
    }
}

fn param_usize(params: &Params, key: &str, default: usize) -> Result<usize, CorpusError> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| out_of_range(key, v, "not a nonnegative integer")),
    }
}

fn param_elements(params: &Params, key: &str) -> Result<Option<Vec<Element>>, CorpusError> {
    let Some(v) = params.get(key) else {
        return Ok(None);
    };
    v.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| out_of_range(key, v, "expected comma-separated indices"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn allow_large(params: &Params) -> bool {
    params
        .get("allow_large")
        .is_some_and(|v| v == "true" || v == "1")
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Builds a named action.
pub fn build(name: &str, params: &Params) -> Result<CorpusEntry, CorpusError> {
    let large = allow_large(params);
    let group_param = |default: &str| -> Result<FiniteGroup, CorpusError> {
        let name = params.get("group").map(String::as_str).unwrap_or(default);
        let g = named_group(name)?;
        if g.order() > 720 && !large {
            return Err(out_of_range(
                "group",
                name,
                "order above 720 needs allow_large=true",
            ));
        }
        Ok(g)
    };
    let non_free = Expected {
        is_free: Some(false),
        ..Expected::default()
    };
    let (action, expected) = match name {
        "symmetric" => {
            let n = param_usize(params, "n", 3)?;
            if n == 0 || n > 7 || (n == 7 && !large) {
                return Err(out_of_range(
                    "n",
                    n,
                    "expected 1..=6 (7 with allow_large=true)",
                ));
            }
            let action = GroupAction::evaluation(&PermutationGroup::symmetric(n));
            let expected = Expected {
                is_free: (n > 2).then_some(false),
                is_transitive: Some(true),
                orbit_count: Some(1),
                ..Expected::default()
            };
            (action, expected)
        }
        "coset" => {
            let g = Arc::new(group_param("S3")?);
            let h = match param_elements(params, "subgroup")? {
                Some(seeds) => {
                    check_elements(&g, &seeds, "subgroup")?;
                    g.subgroup_generated(&seeds)
                }
                None => g.subgroup_generated(&[first_non_identity(&g, "group")?]),
            };
            if h.order() == 1 {
                return Err(out_of_range(
                    "subgroup",
                    format!("{:?}", h.members()),
                    "must be nontrivial",
                ));
            }
            let (action, _) = GroupAction::cosets(g, &h);
            (
                action,
                Expected {
                    is_transitive: Some(true),
                    orbit_count: Some(1),
                    ..non_free
                },
            )
        }
        "conjugate_subsets" => {
            let g = Arc::new(group_param("S3")?);
            let subset: Vec<Element> = match param_elements(params, "subset")? {
                Some(s) => {
                    check_elements(&g, &s, "subset")?;
                    s
                }
                None => g
                    .subgroup_generated(&[first_non_identity(&g, "group")?])
                    .members()
                    .to_vec(),
            };
            let normalizer_nontrivial = g
                .elements()
                .any(|a| a != g.identity() && conjugate_set(&g, a, &subset) == sorted_set(&subset));
            if !normalizer_nontrivial {
                return Err(out_of_range(
                    "subset",
                    format!("{subset:?}"),
                    "normalizer must be nontrivial",
                ));
            }
            let action = conjugation_on_sets(g.clone(), &[sorted_set(&subset)]);
            (
                action,
                Expected {
                    is_transitive: Some(true),
                    ..non_free
                },
            )
        }
        "sylow" => {
            let g = Arc::new(group_param("S3")?);
            let p = param_usize(params, "p", 2)?;
            if !is_prime(p) || g.order() % p != 0 {
                return Err(out_of_range(
                    "p",
                    p,
                    "must be a prime dividing the group order",
                ));
            }
            let sylow = sylow_subgroup(&g, p);
            let action = conjugation_on_sets(g.clone(), &[sylow]);
            (
                action,
                Expected {
                    is_transitive: Some(true),
                    ..non_free
                },
            )
        }
        "order_p" => {
            let g = Arc::new(group_param("S3")?);
            let p = param_usize(params, "p", 2)?;
            if !is_prime(p) || g.order() % p != 0 {
                return Err(out_of_range(
                    "p",
                    p,
                    "must be a prime dividing the group order",
                ));
            }
            let points: Vec<Element> = g.elements().filter(|&x| g.element_order(x) == p).collect();
            let index: HashMap<Element, usize> =
                points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let gg = g.clone();
            let action = GroupAction::from_fn_unchecked(g, points.len(), |a, i| {
                index[&gg.conjugate(a, points[i])]
            });
            (action, non_free)
        }
        "gl_on_vectors" => {
            let n = param_usize(params, "n", 2)?;
            let q = param_usize(params, "q", 2)?;
            if !is_prime(q) {
                return Err(out_of_range("q", q, "only prime fields are supported"));
            }
            if !(2..=3).contains(&n)
                || (!large && (n != 2 || q > 3))
                || (large && q.pow((n * n) as u32) > 1 << 20)
            {
                return Err(out_of_range(
                    "n,q",
                    format!("{n},{q}"),
                    "defaults allow n=2, q in {2,3}; larger needs allow_large=true",
                ));
            }
            (gl_on_vectors(n, q), non_free)
        }
        "subsets" => {
            let name = params.get("group").map(String::as_str).unwrap_or("S3");
            let pg = permutation_group(name)?.ok_or_else(|| {
                out_of_range("group", name, "needs a permutation group (Zn, Sn, An, Dn)")
            })?;
            if pg.degree > 4 {
                return Err(out_of_range(
                    "group",
                    name,
                    "base set must have at most 4 points",
                ));
            }
            if pg.group.order() == 1 {
                return Err(out_of_range("group", name, "must be nontrivial"));
            }
            (subsets_action(&pg), non_free)
        }
        "two_sided" => {
            let g = group_param("Z2")?;
            if g.order() > 60 && !large {
                return Err(out_of_range(
                    "group",
                    g.order(),
                    "order above 60 needs allow_large=true",
                ));
            }
            let m = g.order();
            let gg = Arc::new(FiniteGroup::direct_product(&g, &g));
            let action = GroupAction::from_fn_unchecked(gg, m, |ab, x| {
                g.mul(g.mul(ab / m, x), g.inv(ab % m))
            });
            (
                action,
                Expected {
                    is_transitive: Some(true),
                    ..non_free
                },
            )
        }
        "class_functions" => {
            let g = Arc::new(group_param("S3")?);
            let abelian = g.is_abelian();
            let action = GroupAction::conjugation(g);
            (
                action,
                Expected {
                    is_trivial: Some(abelian),
                    ..Expected::default()
                },
            )
        }
        "cyclic_translation" => {
            let n = param_usize(params, "n", 6)?;
            if n == 0 || n > 720 {
                return Err(out_of_range("n", n, "expected 1..=720"));
            }
            let action = GroupAction::translation(Arc::new(FiniteGroup::cyclic(n)));
            let expected = Expected {
                orbit_count: Some(1),
                is_free: Some(true),
                is_transitive: Some(true),
                is_trivial: Some(n == 1),
            };
            (action, expected)
        }
        "trivial" => {
            let g = Arc::new(group_param("Z2")?);
            let n = param_usize(params, "n", 3)?;
            if n == 0 || n > 4096 {
                return Err(out_of_range("n", n, "expected 1..=4096"));
            }
            let order = g.order();
            let action = GroupAction::trivial(g, n);
            let expected = Expected {
                orbit_count: Some(n),
                is_free: Some(order == 1),
                is_transitive: Some(n == 1),
                is_trivial: Some(true),
            };
            (action, expected)
        }
        _ => {
            return Err(CorpusError::UnknownCorpusName {
                name: name.to_string(),
            })
        }
    };
    Ok(CorpusEntry {
        name: name.to_string(),
        action,
        expected,
    })
}

fn check_elements(g: &FiniteGroup, els: &[Element], param: &str) -> Result<(), CorpusError> {
    match els.iter().find(|&&a| a >= g.order()) {
        Some(a) => Err(out_of_range(param, a, "element index out of range")),
        None => Ok(()),
    }
}

fn first_non_identity(g: &FiniteGroup, param: &str) -> Result<Element, CorpusError> {
    g.elements()
        .find(|&a| a != g.identity())
        .ok_or_else(|| out_of_range(param, "trivial", "group must be nontrivial"))
}

fn sorted_set(s: &[Element]) -> Vec<Element> {
    s.iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn conjugate_set(g: &FiniteGroup, a: Element, s: &[Element]) -> Vec<Element> {
    sorted_set(&s.iter().map(|&x| g.conjugate(a, x)).collect::<Vec<_>>())
}

/// Conjugation on every conjugate of the given sets. Points are the distinct
/// conjugates, in lexicographic order.
fn conjugation_on_sets(g: Arc<FiniteGroup>, seeds: &[Vec<Element>]) -> GroupAction {
    let mut all = BTreeSet::new();
    for s in seeds {
        for a in g.elements() {
            all.insert(conjugate_set(&g, a, s));
        }
    }
    let points: Vec<Vec<Element>> = all.into_iter().collect();
    let index: HashMap<&Vec<Element>, usize> =
        points.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let table: Vec<Vec<usize>> = g
        .elements()
        .map(|a| {
            points
                .iter()
                .map(|s| index[&conjugate_set(&g, a, s)])
                .collect()
        })
        .collect();
    GroupAction::from_fn_unchecked(g, points.len(), |a, i| table[a][i])
}

/// A Sylow `p`-subgroup, found by growing a `p`-subgroup one `p`-element at
/// a time. A `p`-subgroup that is not Sylow always has a `p`-element in its
/// normalizer outside it, so the search cannot stall.
fn sylow_subgroup(g: &FiniteGroup, p: usize) -> Vec<Element> {
    let mut target = 1;
    while g.order().is_multiple_of(target * p) {
        target *= p;
    }
    let is_p_power = |mut k: usize| {
        while k.is_multiple_of(p) {
            k /= p;
        }
        k == 1
    };
    let p_elements: Vec<Element> = g
        .elements()
        .filter(|&x| is_p_power(g.element_order(x)))
        .collect();
    let mut current = g.trivial_subgroup();
    while current.order() < target {
        let mut grew = false;
        for &y in &p_elements {
            if current.contains(y) {
                continue;
            }
            let mut seeds = current.members().to_vec();
            seeds.push(y);
            let next = g.subgroup_generated(&seeds);
            if is_p_power(next.order()) {
                current = next;
                grew = true;
                break;
            }
        }
        assert!(grew, "Sylow search stalled");
    }
    current.members().to_vec()
}

/// `GL(n, F_q)` acting on `F_q^n` by matrix multiplication. Vectors are
/// indexed by their base-`q` digits (first coordinate most significant);
/// matrices are enumerated in lexicographic order of their entries.
fn gl_on_vectors(n: usize, q: usize) -> GroupAction {
    let nn = n * n;
    let decode = |mut code: usize, len: usize| {
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = code % q;
            code /= q;
        }
        digits
    };
    let encode = |digits: &[usize]| digits.iter().fold(0, |acc, &d| acc * q + d);
    let mat_vec = |m: &[usize], v: &[usize]| -> Vec<usize> {
        (0..n)
            .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum::<usize>() % q)
            .collect()
    };
    let vectors = q.pow(n as u32);
    // A matrix is invertible iff it permutes the vectors.
    let matrices: Vec<Vec<usize>> = (0..q.pow(nn as u32))
        .map(|c| decode(c, nn))
        .filter(|m| {
            let mut hit = vec![false; vectors];
            (0..vectors)
                .all(|v| !std::mem::replace(&mut hit[encode(&mat_vec(m, &decode(v, n)))], true))
        })
        .collect();
    let index: HashMap<&Vec<usize>, usize> =
        matrices.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mat_mul = |a: &[usize], b: &[usize]| -> Vec<usize> {
        (0..nn)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                (0..n).map(|t| a[i * n + t] * b[t * n + j]).sum::<usize>() % q
            })
            .collect()
    };
    let table: Vec<Vec<usize>> = matrices
        .iter()
        .map(|a| matrices.iter().map(|b| index[&mat_mul(a, b)]).collect())
        .collect();
    let labels = matrices.iter().map(|m| format!("{m:?}")).collect();
    let g = Arc::new(FiniteGroup::from_table_unchecked(table).with_labels(labels));
    GroupAction::from_fn_unchecked(g, vectors, |a, v| {
        encode(&mat_vec(&matrices[a], &decode(v, n)))
    })
}

/// The induced action on all subsets of the base points; subset `s` is the
/// point whose binary digits mark its members.
fn subsets_action(pg: &PermutationGroup) -> GroupAction {
    let k = pg.degree;
    let g = Arc::new(pg.group.clone());
    GroupAction::from_fn_unchecked(g, 1 << k, |a, s| {
        (0..k)
            .filter(|&i| s >> i & 1 == 1)
            .fold(0, |acc, i| acc | 1 << pg.perms[a].apply(i))
    })
}

/// The natural permutation representation for `Zn`, `Sn`, `An` and `Dn`.
pub fn permutation_group(name: &str) -> Result<Option<PermutationGroup>, CorpusError> {
    let unknown = || CorpusError::UnknownGroup {
        name: name.to_string(),
    };
    let (kind, digits) = name.split_at(
        name.find(|c: char| c.is_ascii_digit())
            .unwrap_or(name.len()),
    );
    if !matches!(kind, "Z" | "S" | "A" | "D") {
        return Ok(None);
    }
    let n: usize = digits.parse().map_err(|_| unknown())?;
    let all: Vec<usize> = (0..n).collect();
    let gens = match kind {
        "Z" if n >= 1 => vec![Permutation::cycle(n, &all)],
        "S" if (1..=7).contains(&n) => return Ok(Some(PermutationGroup::symmetric(n))),
        "A" if (1..=7).contains(&n) => (2..n).map(|k| Permutation::cycle(n, &[0, 1, k])).collect(),
        "D" if n >= 3 => vec![
            Permutation::cycle(n, &all),
            Permutation::new((0..n).map(|x| (n - x) % n).collect()).expect("reflection"),
        ],
        _ => return Err(unknown()),
    };
    PermutationGroup::from_generators(n, &gens, 5040)
        .map(Some)
        .map_err(|_| unknown())
}

/// The dicyclic group of order `4n`: `a^{2n} = 1`, `x² = aⁿ`,
/// `x a x⁻¹ = a⁻¹`. Element `a^k x^e` has index `2k + e`.
fn dicyclic(n: usize) -> FiniteGroup {
    let r = 2 * n;
    let m = 2 * r;
    let table = (0..m)
        .map(|u| {
            (0..m)
                .map(|v| {
                    let (k, e, l, f) = (u / 2, u % 2, v / 2, v % 2);
                    match (e, f) {
                        (0, _) => ((k + l) % r) * 2 + f,
                        (1, 0) => ((k + r - l) % r) * 2 + 1,
                        _ => ((k + r - l + n) % r) * 2,
                    }
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table_unchecked(table)
}

/// Parses a group name (see the module docs).
pub fn named_group(name: &str) -> Result<FiniteGroup, CorpusError> {
    let name = name.trim();
    if name.contains('x') {
        let mut parts = name.split('x');
        let first = named_group(parts.next().unwrap_or_default())?;
        return parts.try_fold(first, |acc, p| {
            Ok(FiniteGroup::direct_product(&acc, &named_group(p)?))
        });
    }
    match name {
        "Q8" => return Ok(dicyclic(2)),
        "Dic3" => return Ok(dicyclic(3)),
        "V4" => return named_group("Z2xZ2"),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('Z').and_then(|d| d.parse::<usize>().ok()) {
        if (1..=5040).contains(&n) {
            return Ok(FiniteGroup::cyclic(n));
        }
    }
    match permutation_group(name)? {
        Some(pg) => Ok(pg.group),
        None => Err(CorpusError::UnknownGroup {
            name: name.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(kv: &[(&str, &str)]) -> Params {
        kv.iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }

    #[test]
    fn named_group_orders() {
        let orders: Vec<usize> = SMALL_GROUPS
            .iter()
            .map(|n| named_group(n).unwrap().order())
            .collect();
        assert_eq!(
            orders,
            vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 10, 11, 12, 12, 12, 12, 12]
        );
        assert_eq!(named_group("A5").unwrap().order(), 60);
        assert!(matches!(
            named_group("Foo"),
            Err(CorpusError::UnknownGroup { .. })
        ));
        assert!(matches!(
            named_group("D2"),
            Err(CorpusError::UnknownGroup { .. })
        ));
    }

    #[test]
    fn dicyclic_tables_are_groups() {
        for n in [2, 3] {
            let g = dicyclic(n);
            assert!(FiniteGroup::from_table(g.table(), None, None).is_ok());
            assert!(!g.is_abelian());
            // unique involution
            assert_eq!(g.elements().filter(|&x| g.element_order(x) == 2).count(), 1);
        }
    }

    #[test]
    fn small_groups_are_pairwise_non_isomorphic() {
        // Invariant: (order, abelian?, sorted element orders).
        let sigs: BTreeSet<(usize, bool, Vec<usize>)> = SMALL_GROUPS
            .iter()
            .map(|n| {
                let g = named_group(n).unwrap();
                let mut ords: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
                ords.sort_unstable();
                (g.order(), g.is_abelian(), ords)
            })
            .collect();
        // D4 and Q8 differ in involution count, so the signatures suffice.
        assert_eq!(sigs.len(), SMALL_GROUPS.len());
    }

    #[test]
    fn symmetric_entry() {
        let e = build("symmetric", &p(&[("n", "3")])).unwrap();
        assert_eq!(e.action.group().order(), 6);
        assert!(e.action.is_transitive() && !e.action.is_free());
        assert!(e.order_fails_to_divide_degree());
        assert!(e.mismatches().is_empty());
    }

    #[test]
    fn two_sided_entry() {
        let e = build("two_sided", &p(&[("group", "Z2")])).unwrap();
        assert_eq!(e.action.group().order(), 4);
        assert_eq!(e.action.degree(), 2);
        assert!(!e.action.is_free());
    }

    #[test]
    fn gl_entry_matches_matrix_enumeration() {
        let e = build("gl_on_vectors", &p(&[("n", "2"), ("q", "2")])).unwrap();
        // det ≠ 0 over F2: oracle count by direct formula ad - bc
        let mut count = 0;
        for m in 0..16usize {
            let (a, b, c, d) = (m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1);
            if (a * d + b * c) % 2 == 1 {
                count += 1;
            }
        }
        assert_eq!(e.action.group().order(), count);
        assert_eq!(count, 6);
        assert_eq!(e.action.degree(), 4);
        assert!(!e.action.is_free());
        assert_eq!(e.action.orbit(0), vec![0]);

        let e = build("gl_on_vectors", &p(&[("q", "3")])).unwrap();
        assert_eq!(e.action.group().order(), 48);
        assert_eq!(e.action.orbits().len(), 2);
        assert!(build("gl_on_vectors", &p(&[("q", "5")])).is_err());
        assert_eq!(
            build("gl_on_vectors", &p(&[("q", "5"), ("allow_large", "true")]))
                .unwrap()
                .action
                .group()
                .order(),
            480
        );
    }

    #[test]
    fn sylow_entries() {
        let e = build("sylow", &p(&[("group", "S4"), ("p", "3")])).unwrap();
        assert_eq!(e.action.degree(), 4);
        let e = build("sylow", &p(&[("group", "S4"), ("p", "2")])).unwrap();
        assert_eq!(e.action.degree(), 3);
        let e = build("sylow", &p(&[("group", "A4"), ("p", "2")])).unwrap();
        assert_eq!(e.action.degree(), 1);
        assert!(build("sylow", &p(&[("group", "S3"), ("p", "5")])).is_err());
    }

    #[test]
    fn other_entries() {
        let e = build_default("order_p").unwrap();
        assert_eq!(e.action.degree(), 3);
        let e = build("order_p", &p(&[("p", "3")])).unwrap();
        assert_eq!(e.action.degree(), 2);

        let e = build_default("subsets").unwrap();
        assert_eq!(e.action.degree(), 8);
        assert_eq!(e.action.orbits().len(), 4);
        let e = build("subsets", &p(&[("group", "D4")])).unwrap();
        // D4 on the 16 subsets of a square's corners: 6 orbits by size and shape.
        assert_eq!(e.action.orbits().len(), 6);
        assert!(!e.action.is_free());
        assert!(build("subsets", &p(&[("group", "Z1")])).is_err());
        assert!(build("subsets", &p(&[("group", "S5")])).is_err());

        let e = build_default("conjugate_subsets").unwrap();
        assert_eq!(e.action.degree(), 3);
        let e = build_default("coset").unwrap();
        assert!(e.action.is_transitive());
        assert!(build("coset", &p(&[("subgroup", "0")])).is_err());

        let e = build_default("class_functions").unwrap();
        assert_eq!(e.action.orbits().len(), 3);
        let e = build_default("cyclic_translation").unwrap();
        assert!(e.action.is_free());
        assert!(matches!(
            build_default("nope"),
            Err(CorpusError::UnknownCorpusName { .. })
        ));
    }

    #[test]
    fn every_entry_meets_its_expectations() {
        for e in default_entries().into_iter().chain(sample_entries()) {
            assert!(
                e.mismatches().is_empty(),
                "{}: {:?}",
                e.name,
                e.mismatches()
            );
            assert!(GroupAction::new(e.action.group_arc().clone(), e.action.table()).is_ok());
        }
    }
}
