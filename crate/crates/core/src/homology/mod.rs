//! Integer simplicial homology.
//!
//! Chains are oriented by the complex's vertex order: a simplex with sorted
//! vertices `v_0 < ... < v_k` has boundary `Σ (-1)^i [v_0 .. v̂_i .. v_k]`.

mod snf;
mod sparse;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{Simplex, SimplicialComplex};

pub use snf::{smith_normal_form, IntMatrix, SmithForm};
use sparse::SparseMatrix;

/// A boundary map stored column by column: `columns[j]` lists the
/// `(row, coefficient)` pairs of the boundary of the j-th k-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |&(i, x)| (i, j, x)))
    }

    /// Nonzero invariant factors, units included.
    fn invariant_factors(&self) -> Vec<BigInt> {
        SparseMatrix::new(self.rows, self.cols(), self.entries()).invariant_factors()
    }

    /// `self ∘ inner` is the zero map.
    fn annihilates(&self, inner: &BoundaryMatrix) -> bool {
        inner.columns.iter().all(|col| {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, x) in col {
                for &(row, y) in &self.columns[mid] {
                    *acc.entry(row).or_default() += x * y;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }
}

/// The simplicial chain complex of a complex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// Number of k-simplices.
    pub ranks: Vec<usize>,
    /// `boundaries[k - 1]` is `∂_k`, from k-chains to (k-1)-chains.
    pub boundaries: Vec<BoundaryMatrix>,
}

impl ChainComplex {
    /// `∂_k` for `k >= 1`; `None` outside the range.
    pub fn boundary(&self, k: usize) -> Option<&BoundaryMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// Whether `∂_{k-1} ∂_k = 0` for every k.
    pub fn is_chain_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].annihilates(&w[1]))
    }
}

pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let ranks = k.f_vector().0;
    let mut boundaries = Vec::new();
    for dim in 1..ranks.len() {
        let position: HashMap<&Simplex, usize> =
            k.simplices(dim - 1).iter().enumerate().map(|(i, s)| (s, i)).collect();
        let columns = k
            .simplices(dim)
            .iter()
            .map(|s| {
                s.boundary_faces()
                    .enumerate()
                    .map(|(i, face)| (position[&face], if i % 2 == 0 { 1 } else { -1 }))
                    .collect()
            })
            .collect();
        boundaries.push(BoundaryMatrix { rows: ranks[dim - 1], columns });
    }
    ChainComplex { ranks, boundaries }
}

/// Betti numbers and torsion coefficients by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    /// Invariant factors greater than one, sorted, per dimension.
    pub torsion: Vec<Vec<BigInt>>,
    /// Euler characteristic of the complex (unreduced).
    pub euler: i64,
    pub reduced: bool,
}

impl HomologyProfile {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// `Σ (-1)^k betti_k`, which equals `euler` (minus one when reduced).
    pub fn alternating_betti_sum(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Homology with integer coefficients; with `reduced`, `betti[0]` counts
/// components minus one for a nonempty complex.
pub fn homology_profile(k: &SimplicialComplex, reduced: bool) -> HomologyProfile {
    let chains = chain_complex(k);
    let n = chains.ranks.len();
    // factors[k] holds the nonzero invariant factors of ∂_k.
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); n + 1];
    for dim in 1..n {
        factors[dim] = chains.boundary(dim).expect("in range").invariant_factors();
    }
    let mut betti = Vec::with_capacity(n);
    let mut torsion = Vec::with_capacity(n);
    for dim in 0..n {
        let cycles = chains.ranks[dim] - factors[dim].len();
        betti.push(cycles - factors[dim + 1].len());
        let mut t: Vec<BigInt> = factors[dim + 1].iter().filter(|x| !x.is_one()).cloned().collect();
        t.sort();
        torsion.push(t);
    }
    if reduced && n > 0 {
        betti[0] -= 1;
    }
    HomologyProfile { betti, torsion, euler: k.euler_characteristic(), reduced }
}

/// Betti numbers over the two-element field. Used to cross-check the
/// integer computation; not part of the profile.
pub fn betti_numbers_mod2(k: &SimplicialComplex) -> Vec<usize> {
    let chains = chain_complex(k);
    let n = chains.ranks.len();
    let mut ranks = vec![0usize; n + 1];
    for dim in 1..n {
        let b = chains.boundary(dim).expect("in range");
        ranks[dim] = rank_mod2(b);
    }
    (0..n).map(|d| chains.ranks[d] - ranks[d] - ranks[d + 1]).collect()
}

fn rank_mod2(m: &BoundaryMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut cols: Vec<Vec<u64>> = m
        .columns
        .iter()
        .map(|col| {
            let mut bits = vec![0u64; words];
            for &(i, x) in col {
                if x % 2 != 0 {
                    bits[i / 64] ^= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    let mut pivot_of_row: HashMap<usize, usize> = HashMap::new();
    for j in 0..cols.len() {
        loop {
            let lead = cols[j]
                .iter()
                .enumerate()
                .find(|(_, w)| **w != 0)
                .map(|(i, w)| i * 64 + w.trailing_zeros() as usize);
            let Some(lead) = lead else { break };
            match pivot_of_row.get(&lead) {
                Some(&p) => {
                    let (done, rest) = cols.split_at_mut(j);
                    for (bw, aw) in rest[0].iter_mut().zip(&done[p]) {
                        *bw ^= aw;
                    }
                }
                None => {
                    pivot_of_row.insert(lead, j);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{barycentric_subdivision, ordered_power};
    use crate::standard;
    use num_traits::Zero;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn edge_boundary() {
        let c = chain_complex(&standard::simplex(1));
        assert_eq!(c.boundary(1).unwrap().to_dense(), IntMatrix::from_rows(&[vec![-1i64], vec![1]]));
    }

    #[test]
    fn circle_boundary_has_rank_two() {
        let c = chain_complex(&standard::boundary(2));
        let d = c.boundary(1).unwrap().to_dense();
        assert_eq!((d.rows(), d.cols()), (3, 3));
        assert_eq!(smith_normal_form(&d).rank(), 2);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for k in [standard::simplex(4), standard::projective_plane(), ordered_power(&standard::boundary(2), 2).unwrap()] {
            assert!(chain_complex(&k).is_chain_complex());
        }
    }

    #[test]
    fn snf_small_example() {
        let m = IntMatrix::from_rows(&[vec![2i64, 4], vec![6, 8]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.invariant_factors(), big(&[2, 4]));
        assert_eq!(f.u.mul(&m).mul(&f.v), f.d);
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = IntMatrix::identity(3);
        assert_eq!(smith_normal_form(&id).d, id);
        let z = IntMatrix::zeros(2, 3);
        assert!(smith_normal_form(&z).d.is_zero());
    }

    #[test]
    fn circle_and_point() {
        let h = homology_profile(&standard::boundary(2), false);
        assert_eq!(h.betti, vec![1, 1]);
        assert!(h.is_torsion_free());
        let h = homology_profile(&standard::simplex(0), true);
        assert_eq!(h.betti, vec![0]);
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let h = homology_profile(&standard::projective_plane(), false);
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], big(&[2]), vec![]]);
        assert_eq!(betti_numbers_mod2(&standard::projective_plane()), vec![1, 1, 1]);
    }

    #[test]
    fn empty_complex_has_empty_profile() {
        let h = homology_profile(&SimplicialComplex::empty(), true);
        assert!(h.betti.is_empty() && h.torsion.is_empty());
    }

    #[test]
    fn torus_from_power() {
        let k = barycentric_subdivision(&ordered_power(&standard::boundary(2), 2).unwrap());
        let h = homology_profile(&k, false);
        assert_eq!(h.betti, vec![1, 2, 1]);
        assert!(h.is_torsion_free());
        assert_eq!(betti_numbers_mod2(&k), vec![1, 2, 1]);
    }

    #[test]
    fn sparse_path_agrees_with_dense_snf() {
        let k = standard::projective_plane();
        let chains = chain_complex(&k);
        for dim in 1..=2 {
            let b = chains.boundary(dim).unwrap();
            let mut sparse = b.invariant_factors();
            sparse.sort();
            let mut dense: Vec<BigInt> =
                smith_normal_form(&b.to_dense()).invariant_factors().into_iter().filter(|x| !x.is_zero()).collect();
            dense.sort();
            assert_eq!(sparse, dense);
        }
    }
}
