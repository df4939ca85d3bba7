//! Frozen values for the configuration-space models, each recomputed here
//! by brute force from the definitions and compared to the library.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};

use common::*;
use simpconf_core::*;

type Column = Vec<VertexId>;
type PowerSimplex = Vec<Column>;

fn circle() -> SimplicialComplex {
    standard::boundary(2)
}

fn oracle_f_vector(simplices: &[PowerSimplex]) -> Vec<usize> {
    let mut f = Vec::new();
    for s in simplices {
        if f.len() < s.len() {
            f.resize(s.len(), 0);
        }
        f[s.len() - 1] += 1;
    }
    f
}

fn has_equal_rows(s: &PowerSimplex) -> bool {
    let n = s[0].len();
    // Columns are sorted lexicographically, which is the unique chain order.
    (0..n).any(|i| (i + 1..n).any(|j| s.iter().all(|c| c[i] == c[j])))
}

#[test]
fn circle_square_counts_from_the_oracle() {
    let x = circle();
    let simplices = oracle_power_simplices(&x, 2);
    assert_eq!(oracle_f_vector(&simplices), vec![9, 27, 18]);
    let power = ordered_power(&x, 2).unwrap();
    assert_eq!(power.f_vector(), [9, 27, 18]);
    assert_eq!(power.euler_characteristic(), 0);
    // Closed surface: every edge lies in exactly two triangles.
    for e in power.simplices(1) {
        assert_eq!(power.simplices(2).iter().filter(|t| e.is_face_of(t)).count(), 2);
    }
}

#[test]
fn power_family_equals_oracle_family() {
    for (x, n) in [
        (circle(), 2),
        (circle(), 3),
        (standard::simplex(1), 2),
        (standard::simplex(1), 3),
        (standard::simplex(2), 2),
        (standard::path(2), 2),
    ] {
        let power = ordered_power(&x, n).unwrap();
        let max = n * x.dim().unwrap() + 2;
        let mut accepted = 0;
        for cols in subsets(&tuples(x.vertex_count(), n), max) {
            let labels: Vec<VertexLabel> = cols.iter().map(|c| tuple_label(&x, c)).collect();
            let oracle = power_oracle(&x, &cols);
            assert_eq!(power.contains_simplex(&labels), oracle, "{labels:?}");
            assert_eq!(is_power_simplex(&x, n, &labels).unwrap(), oracle);
            accepted += oracle as usize;
        }
        assert_eq!(accepted, power.num_simplices());
    }
}

#[test]
fn membership_examples_checked_against_oracle() {
    let x = circle();
    let power = ordered_power(&x, 2).unwrap();
    let s = [tuple(&["0", "0"]), tuple(&["2", "1"])];
    assert!(power_oracle(&x, &[vec![0, 0], vec![2, 1]]));
    assert!(power.contains_simplex(&s));
    assert!(!power_oracle(&x, &[vec![0, 1], vec![1, 0]]));
}

#[test]
fn off_diagonal_part_of_the_square() {
    let x = circle();
    let simplices = oracle_power_simplices(&x, 2);
    let off: Vec<PowerSimplex> =
        simplices.into_iter().filter(|s| s.iter().all(|c| c[0] != c[1])).collect();
    assert_eq!(oracle_f_vector(&off), vec![6, 8, 2]);

    let power = ordered_power(&x, 2).unwrap();
    let labels: Vec<VertexLabel> = tuples(3, 2)
        .iter()
        .filter(|c| c[0] != c[1])
        .map(|c| tuple_label(&x, c))
        .collect();
    assert_eq!(power.induced_subcomplex(&labels).unwrap().f_vector(), [6, 8, 2]);
}

#[test]
fn fat_diagonal_and_minimal_nonfaces() {
    let x = circle();
    let power = ordered_power(&x, 2).unwrap();
    let fat = fat_diagonal(&x, 2).unwrap();
    let oracle_fat: Vec<PowerSimplex> =
        oracle_power_simplices(&x, 2).into_iter().filter(has_equal_rows).collect();
    assert_eq!(oracle_f_vector(&oracle_fat), vec![3, 3]);
    assert_eq!(fat.f_vector(), [3, 3]);
    assert!(power.is_subcomplex(&fat));
    assert!(power.is_full_subcomplex(&fat).unwrap());

    let minimal = power.minimal_nonfaces(&fat).unwrap();
    assert_eq!(minimal.len(), 6);
    assert!(minimal.iter().all(|s| s.dim() == 0));
}

#[test]
fn configuration_model_of_the_circle() {
    let x = circle();
    let c = conf_model(&x, 2).unwrap();
    assert_eq!(c.f_vector(), [6, 8, 2]);
    let h = homology_profile(&c, false);
    assert_eq!(h.betti, vec![1, 1, 0]);
    assert_eq!(h.euler, 0);

    let power = ordered_power(&x, 2).unwrap();
    let fat = fat_diagonal(&x, 2).unwrap();
    let complement = complement_model(&power, &fat).unwrap();
    assert!(complement.full);
    let relabelled = c.relabel(VertexLabel::unwrap_singleton_bary).unwrap();
    assert!(relabelled.label_eq(&complement.complex));
    assert!(nerve_matches_difference(&power, &fat).unwrap());
    assert!(minimal_nonface_nerve(&power, &fat).unwrap().label_eq(&c));
}

/// Chains of power simplices outside the fat diagonal, counted by length.
fn chain_counts(simplices: &[PowerSimplex]) -> Vec<Vec<Vec<usize>>> {
    let sets: Vec<BTreeSet<Column>> = simplices.iter().map(|s| s.iter().cloned().collect()).collect();
    let mut chains: Vec<Vec<usize>> = (0..sets.len()).map(|i| vec![i]).collect();
    let mut all = chains.clone();
    while !chains.is_empty() {
        let mut next = Vec::new();
        for chain in &chains {
            let top = &sets[*chain.last().unwrap()];
            for (j, s) in sets.iter().enumerate() {
                if s.len() > top.len() && top.is_subset(s) {
                    let mut c = chain.clone();
                    c.push(j);
                    next.push(c);
                }
            }
        }
        all.extend(next.iter().cloned());
        chains = next;
    }
    let mut by_len: Vec<Vec<Vec<usize>>> = Vec::new();
    for c in all {
        if by_len.len() < c.len() {
            by_len.resize(c.len(), Vec::new());
        }
        by_len[c.len() - 1].push(c);
    }
    by_len
}

#[test]
fn subdivided_square_counts() {
    let x = circle();
    let simplices = oracle_power_simplices(&x, 2);
    let counts: Vec<usize> = chain_counts(&simplices).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![54, 162, 108]);
    let bs = barycentric_subdivision(&ordered_power(&x, 2).unwrap());
    assert_eq!(bs.f_vector(), [54, 162, 108]);
    assert_eq!(bs.euler_characteristic(), 0);
}

#[test]
fn subdivided_configuration_model_counts() {
    let x = circle();
    let outside: Vec<PowerSimplex> =
        oracle_power_simplices(&x, 2).into_iter().filter(|s| !has_equal_rows(s)).collect();
    let counts: Vec<usize> = chain_counts(&outside).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![48, 112, 64]);
    let model = conf_model_bs(&x, 2).unwrap();
    assert_eq!(model.f_vector(), [48, 112, 64]);
    assert_eq!(model.vertex_count(), 54 - 6);
}

/// Orbits of chains under the coordinate swap. For a regular action these
/// are exactly the simplices of the quotient.
#[test]
fn unordered_model_counts_from_orbits() {
    let x = circle();
    let outside: Vec<PowerSimplex> =
        oracle_power_simplices(&x, 2).into_iter().filter(|s| !has_equal_rows(s)).collect();
    let position: HashMap<BTreeSet<Column>, usize> =
        outside.iter().enumerate().map(|(i, s)| (s.iter().cloned().collect(), i)).collect();
    let swap = |i: usize| -> usize {
        let image: BTreeSet<Column> = outside[i].iter().map(|c| vec![c[1], c[0]]).collect();
        position[&image]
    };
    let orbit_counts: Vec<usize> = chain_counts(&outside)
        .iter()
        .map(|chains| {
            let reps: HashSet<Vec<usize>> = chains
                .iter()
                .map(|c| {
                    let mut a = c.clone();
                    let mut b: Vec<usize> = c.iter().map(|&i| swap(i)).collect();
                    a.sort_unstable();
                    b.sort_unstable();
                    a.min(b)
                })
                .collect();
            reps.len()
        })
        .collect();
    // The figure this model is usually drawn from reports (25, 61, 36); the
    // definitions give the counts below.
    assert_eq!(orbit_counts, vec![24, 56, 32]);

    let act = symmetric_group_action(&x, 2).unwrap();
    let bs = barycentric_subdivision(act.complex());
    let on_bs = induced_action(&act, &bs, ActionKind::Subdivision).unwrap();
    let model = conf_model_bs(&x, 2).unwrap();
    let on_model = induced_action(&on_bs, &model, ActionKind::Restriction).unwrap();
    let q = quotient_complex(&on_model).unwrap();
    assert_eq!(q.complex.f_vector(), [24, 56, 32]);
    let h = homology_profile(&q.complex, false);
    assert_eq!(h.betti, vec![1, 1, 0]);
    assert!(h.is_torsion_free());
}

#[test]
fn subdivided_model_of_a_point_and_dimension_bound() {
    let pt = standard::simplex(0);
    assert_eq!(conf_model_bs(&pt, 1).unwrap().f_vector(), [1]);
    let model = conf_model_bs(&circle(), 3).unwrap();
    assert!(model.dim().unwrap() <= 3);
}
