#![allow(dead_code)]

use proptest::prelude::*;
use simpconf_core::{SimplicialComplex, VertexId, VertexLabel};

pub fn atoms(names: &[&str]) -> Vec<VertexLabel> {
    names.iter().map(|&n| VertexLabel::from(n)).collect()
}

pub fn complex(verts: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(atoms(verts), facets.iter().map(|f| atoms(f))).unwrap()
}

pub fn tuple(coords: &[&str]) -> VertexLabel {
    VertexLabel::tuple(atoms(coords))
}

/// Brute-force membership in `X^n`: distinct columns and SOME column order
/// making every row a non-decreasing sequence spanning a simplex of `X`.
/// Tries every permutation, so it shares nothing with the library's
/// lexicographic shortcut.
pub fn power_oracle(x: &SimplicialComplex, columns: &[Vec<VertexId>]) -> bool {
    let k = columns.len();
    for i in 0..k {
        for j in i + 1..k {
            if columns[i] == columns[j] {
                return false;
            }
        }
    }
    let n = columns[0].len();
    let mut order: Vec<usize> = (0..k).collect();
    loop {
        let ok = (0..n).all(|row| {
            let seq: Vec<VertexId> = order.iter().map(|&c| columns[c][row]).collect();
            let mut set = seq.clone();
            set.sort_unstable();
            set.dedup();
            seq.windows(2).all(|w| w[0] <= w[1]) && x.contains_ids(&set)
        });
        if ok {
            return true;
        }
        if !next_perm(&mut order) {
            return false;
        }
    }
}

pub fn next_perm(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All n-tuples over `0..m`.
pub fn tuples(m: usize, n: usize) -> Vec<Vec<VertexId>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| (0..m as VertexId).map(move |v| {
                let mut t = t.clone();
                t.push(v);
                t
            }))
            .collect();
    }
    out
}

/// Every subset of `items` with between 1 and `max` elements.
pub fn subsets<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], start: usize, max: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, i + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, max, &mut Vec::new(), &mut out);
    out
}

/// The power oracle's simplices of `X^n`, as column lists sorted
/// lexicographically.
pub fn oracle_power_simplices(x: &SimplicialComplex, n: usize) -> Vec<Vec<Vec<VertexId>>> {
    let max = n * x.dim().unwrap_or(0) + 2;
    subsets(&tuples(x.vertex_count(), n), max)
        .into_iter()
        .filter(|cols| power_oracle(x, cols))
        .collect()
}

pub fn tuple_label(x: &SimplicialComplex, coords: &[VertexId]) -> VertexLabel {
    VertexLabel::tuple(coords.iter().map(|&c| x.label(c).clone()).collect())
}

/// Random complexes on up to `max_vertices` atom-labelled vertices.
pub fn arb_complex(max_vertices: usize, max_facet: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_vertices).prop_flat_map(move |n| {
        let facet = prop::collection::btree_set(0..n, 1..=n.min(max_facet));
        prop::collection::vec(facet, 1..5).prop_map(move |facets| {
            let verts: Vec<VertexLabel> = (0..n).map(|i| VertexLabel::Atom(i.to_string())).collect();
            let fs: Vec<Vec<VertexLabel>> =
                facets.iter().map(|f| f.iter().map(|&i| verts[i].clone()).collect()).collect();
            SimplicialComplex::from_facets(verts, fs).unwrap()
        })
    })
}

/// A complex together with a random subcomplex: the closure of some of its
/// simplices.
pub fn arb_pair(max_vertices: usize, max_facet: usize) -> impl Strategy<Value = (SimplicialComplex, SimplicialComplex)> {
    arb_complex(max_vertices, max_facet).prop_flat_map(|x| {
        let n = x.num_simplices();
        prop::collection::vec(any::<bool>(), n).prop_map(move |mask| {
            let chosen: Vec<_> = x.iter().zip(&mask).filter(|e| *e.1).map(|e| e.0.clone()).collect();
            let a = x.subcomplex_where(|s| chosen.iter().any(|c| s.is_face_of(c)));
            (x.clone(), a)
        })
    })
}
