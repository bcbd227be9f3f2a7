//! Groups with prescribed orbits.
//!
//! For a partition `P` of `0..n`, the group generated by the transpositions
//! `(x y)` of points in a common cell has exactly the cells of `P` as its
//! orbits. It lies inside `S_P`, the group of permutations mapping every
//! cell onto itself, and for finite sets the two coincide: both have order
//! `Π |cell|!`.

use crate::action::{GroupAction, Partition};
use crate::group::{GroupError, Permutation, PermutationGroup};

/// A partition used as input. Same invariants as an orbit partition.
pub type PartitionSpec = Partition;

/// Which transpositions generate the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GeneratorMode {
    /// `(x y)` for every pair of distinct points in a common cell.
    #[default]
    AllTranspositions,
    /// `(c_i c_{i+1})` for consecutive members of each cell; same group.
    Adjacent,
}

#[derive(Clone, Debug)]
pub struct PartitionGroup {
    pub generators: Vec<Permutation>,
    pub group: PermutationGroup,
    pub action: GroupAction,
}

/// The generators used for `p` under `mode`.
pub fn partition_generators(p: &PartitionSpec, mode: GeneratorMode) -> Vec<Permutation> {
    let n = p.degree();
    let mut gens = Vec::new();
    for cell in p.cells() {
        match mode {
            GeneratorMode::AllTranspositions => {
                for (i, &x) in cell.iter().enumerate() {
                    for &y in &cell[i + 1..] {
                        gens.push(Permutation::transposition(n, x, y));
                    }
                }
            }
            GeneratorMode::Adjacent => {
                for w in cell.windows(2) {
                    gens.push(Permutation::transposition(n, w[0], w[1]));
                }
            }
        }
    }
    gens
}

/// Builds the transposition-generated group for `p` and its evaluation
/// action. Fails with [`GroupError::SizeLimitExceeded`] when `Π |cell|!`
/// exceeds `cap`.
pub fn group_from_partition(
    p: &PartitionSpec,
    mode: GeneratorMode,
    cap: usize,
) -> Result<PartitionGroup, GroupError> {
    let generators = partition_generators(p, mode);
    let group = PermutationGroup::from_generators(p.degree(), &generators, cap)?;
    let action = GroupAction::evaluation(&group);
    debug_assert_eq!(action.orbits(), *p);
    Ok(PartitionGroup {
        generators,
        group,
        action,
    })
}

/// Whether `sigma` maps every cell of `p` onto itself.
pub fn sp_membership(p: &PartitionSpec, sigma: &[usize]) -> Result<bool, GroupError> {
    let sigma = Permutation::new(sigma.to_vec())?;
    if sigma.degree() != p.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: p.degree(),
            found: sigma.degree(),
        });
    }
    Ok((0..p.degree()).all(|x| p.cell_of(sigma.apply(x)) == p.cell_of(x)))
}

/// `|S_P| = Π |cell|!`.
pub fn sp_order(p: &PartitionSpec) -> u128 {
    p.cells()
        .iter()
        .map(|c| (1..=c.len() as u128).product::<u128>())
        .product()
}
