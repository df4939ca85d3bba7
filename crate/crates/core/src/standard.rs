//! A few standard complexes on atom-labelled vertices `0, 1, 2, ...`.

use crate::complex::SimplicialComplex;
use crate::label::VertexLabel;

fn atoms(n: usize) -> Vec<VertexLabel> {
    (0..n).map(|i| VertexLabel::Atom(i.to_string())).collect()
}

fn build(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let verts = atoms(n);
    let fs: Vec<Vec<VertexLabel>> =
        facets.iter().map(|f| f.iter().map(|&i| verts[i].clone()).collect()).collect();
    SimplicialComplex::from_facets(verts, fs).expect("well-formed standard complex")
}

/// The full d-simplex on vertices `0..=d`.
pub fn simplex(d: usize) -> SimplicialComplex {
    let all: Vec<usize> = (0..=d).collect();
    build(d + 1, &[&all])
}

/// The boundary of the d-simplex (d >= 1).
pub fn boundary(d: usize) -> SimplicialComplex {
    assert!(d >= 1, "the boundary of a point is empty");
    let facets: Vec<Vec<usize>> = (0..=d).map(|skip| (0..=d).filter(|&i| i != skip).collect()).collect();
    let refs: Vec<&[usize]> = facets.iter().map(Vec::as_slice).collect();
    build(d + 1, &refs)
}

/// The triangle `012` coned off at an interior vertex `c`; its boundary is
/// a full subcomplex.
pub fn subdivided_triangle() -> SimplicialComplex {
    let verts = vec![
        VertexLabel::Atom("0".into()),
        VertexLabel::Atom("1".into()),
        VertexLabel::Atom("2".into()),
        VertexLabel::Atom("c".into()),
    ];
    let f = |a: usize, b: usize| vec![verts[a].clone(), verts[b].clone(), verts[3].clone()];
    let facets = vec![f(0, 1), f(0, 2), f(1, 2)];
    SimplicialComplex::from_facets(verts, facets).expect("well-formed standard complex")
}

/// A path with `k` edges.
pub fn path(k: usize) -> SimplicialComplex {
    let facets: Vec<[usize; 2]> = (0..k).map(|i| [i, i + 1]).collect();
    let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
    build(k + 1, &refs)
}

/// A cycle with `k >= 3` edges.
pub fn cycle(k: usize) -> SimplicialComplex {
    let facets: Vec<[usize; 2]> = (0..k).map(|i| [i, (i + 1) % k]).collect();
    let refs: Vec<&[usize]> = facets.iter().map(|f| f.as_slice()).collect();
    build(k, &refs)
}

/// The six-vertex real projective plane (ten triangles).
pub fn projective_plane() -> SimplicialComplex {
    build(
        6,
        &[
            &[0, 1, 3], &[0, 1, 5], &[0, 2, 4], &[0, 2, 5], &[0, 3, 4],
            &[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[2, 3, 5], &[3, 4, 5],
        ],
    )
}
