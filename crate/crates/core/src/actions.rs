//! Finite groups acting simplicially on complexes.
//!
//! A group is materialized as an explicit list of vertex permutations of the
//! complex it acts on. Element 0 is always the identity. The list describes
//! an action of an abstract group, so two elements may act identically (for
//! instance after restricting to a fixed subcomplex).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::constructions::ordered_power;
use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// A bijection on the vertex ids of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation(Vec<VertexId>);

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation((0..n as VertexId).collect())
    }

    /// `None` unless `images` is a permutation of `0..images.len()`.
    pub fn new(images: Vec<VertexId>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let slot = seen.get_mut(v as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(VertexPermutation(images))
    }

    pub fn images(&self) -> &[VertexId] {
        &self.0
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.0[v as usize]
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.apply(v)).collect()).expect("bijection")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        VertexPermutation(other.0.iter().map(|&v| self.apply(v)).collect())
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w as usize] = v as VertexId;
        }
        VertexPermutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v as VertexId == w)
    }
}

/// A finite group acting on a complex by simplicial vertex permutations.
#[derive(Clone, Debug)]
pub struct SimplicialAction {
    complex: SimplicialComplex,
    elements: Vec<VertexPermutation>,
    names: Vec<String>,
}

fn check_simplicial(complex: &SimplicialComplex, name: &str, g: &VertexPermutation) -> Result<()> {
    if g.images().len() != complex.vertex_count() {
        return Err(Error::ActionMismatch(format!(
            "element {name} permutes {} vertices but the complex has {}",
            g.images().len(),
            complex.vertex_count()
        )));
    }
    // Facets suffice: faces of an image simplex are images of faces.
    for s in complex.facets() {
        if !complex.contains(&g.apply_simplex(&s)) {
            return Err(Error::NotSimplicial { name: name.to_string(), simplex: complex.format_simplex(&s) });
        }
    }
    Ok(())
}

impl SimplicialAction {
    /// The trivial group.
    pub fn trivial(complex: SimplicialComplex) -> Self {
        let id = VertexPermutation::identity(complex.vertex_count());
        SimplicialAction { complex, elements: vec![id], names: vec!["e".into()] }
    }

    /// The group generated by `generators`, enumerated breadth first.
    /// Element names are words in the generator names.
    pub fn from_generators(complex: SimplicialComplex, generators: Vec<(String, VertexPermutation)>) -> Result<Self> {
        for (name, g) in &generators {
            check_simplicial(&complex, name, g)?;
        }
        let mut elements = vec![VertexPermutation::identity(complex.vertex_count())];
        let mut names = vec!["e".to_string()];
        let mut seen: HashMap<VertexPermutation, usize> = HashMap::new();
        seen.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gname, g) in &generators {
                let h = g.compose(&elements[i]);
                if !seen.contains_key(&h) {
                    let name = if i == 0 { gname.clone() } else { format!("{gname}*{}", names[i]) };
                    seen.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                    names.push(name);
                }
            }
        }
        Ok(SimplicialAction { complex, elements, names })
    }

    /// An explicit element list; the group axioms are verified on the
    /// images (identity, closure under composition and inverses).
    pub fn from_elements(complex: SimplicialComplex, elements: Vec<(String, VertexPermutation)>) -> Result<Self> {
        for (name, g) in &elements {
            check_simplicial(&complex, name, g)?;
        }
        let (mut names, mut perms): (Vec<String>, Vec<VertexPermutation>) = elements.into_iter().unzip();
        let Some(id_pos) = perms.iter().position(VertexPermutation::is_identity) else {
            return Err(Error::NotAGroup("no identity element".into()));
        };
        perms.swap(0, id_pos);
        names.swap(0, id_pos);
        let present: HashSet<&VertexPermutation> = perms.iter().collect();
        for (i, g) in perms.iter().enumerate() {
            if !present.contains(&g.inverse()) {
                return Err(Error::NotAGroup(format!("inverse of {} is missing", names[i])));
            }
            for (j, h) in perms.iter().enumerate() {
                if !present.contains(&g.compose(h)) {
                    return Err(Error::NotAGroup(format!("{} * {} is missing", names[i], names[j])));
                }
            }
        }
        Ok(SimplicialAction { complex, elements: perms, names })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn elements(&self) -> &[VertexPermutation] {
        &self.elements
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Per vertex: the orbit, as a map from each orbit point `w` to the
    /// first element carrying the vertex to `w`.
    fn transporters(&self) -> Vec<HashMap<VertexId, usize>> {
        (0..self.complex.vertex_count() as VertexId)
            .map(|v| {
                let mut map = HashMap::new();
                for (i, g) in self.elements.iter().enumerate() {
                    map.entry(g.apply(v)).or_insert(i);
                }
                map
            })
            .collect()
    }

    /// Orbit index of every vertex.
    pub fn vertex_orbits(&self) -> Vec<usize> {
        let mut orbit = vec![usize::MAX; self.complex.vertex_count()];
        let mut next = 0;
        for v in 0..orbit.len() {
            if orbit[v] == usize::MAX {
                for g in &self.elements {
                    orbit[g.apply(v as VertexId) as usize] = next;
                }
                next += 1;
            }
        }
        orbit
    }
}

/// How a derived complex was obtained from the complex a group acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// Barycentric subdivision: vertices are `Bary` labels of simplices.
    Subdivision,
    /// Simplicial difference or minimal-non-face nerve: `Bary` labels of
    /// minimal non-faces.
    Difference,
    /// An invariant subcomplex (induced subcomplex, complement model, fat
    /// diagonal): vertices keep their labels.
    Restriction,
    /// The diagonal action on an ordered power: `Tuple` labels.
    Power,
}

/// The action of `parent`'s group on a complex derived from its complex.
pub fn induced_action(parent: &SimplicialAction, derived: &SimplicialComplex, kind: ActionKind) -> Result<SimplicialAction> {
    let base = &parent.complex;
    let lookup = |l: &VertexLabel| -> Result<VertexId> {
        base.id_of(l).ok_or_else(|| {
            Error::ActionMismatch(format!("label {l} does not name a vertex of the acted-on complex"))
        })
    };
    // Each derived vertex as a list of parent vertex ids.
    let parts: Vec<Vec<VertexId>> = derived
        .vertex_labels()
        .iter()
        .map(|label| match (kind, label) {
            (ActionKind::Subdivision | ActionKind::Difference, VertexLabel::Bary(m))
            | (ActionKind::Power, VertexLabel::Tuple(m)) => m.iter().map(lookup).collect(),
            (ActionKind::Restriction, l) => Ok(vec![lookup(l)?]),
            (_, l) => Err(Error::ActionMismatch(format!("label {l} does not fit a {kind:?} construction"))),
        })
        .collect::<Result<_>>()?;
    let rebuild = |ids: Vec<VertexId>| -> VertexLabel {
        let labels: Vec<VertexLabel> = ids.into_iter().map(|v| base.label(v).clone()).collect();
        match kind {
            ActionKind::Subdivision | ActionKind::Difference => VertexLabel::bary(labels),
            ActionKind::Power => VertexLabel::tuple(labels),
            ActionKind::Restriction => labels.into_iter().next().expect("one label"),
        }
    };
    let mut elements = Vec::with_capacity(parent.order());
    for (g, name) in parent.elements.iter().zip(&parent.names) {
        let images = parts
            .iter()
            .zip(derived.vertex_labels())
            .map(|(p, label)| {
                let image = rebuild(p.iter().map(|&v| g.apply(v)).collect());
                derived.id_of(&image).ok_or_else(|| {
                    Error::ActionMismatch(format!("{name} sends {label} to {image}, which is not a vertex"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let perm = VertexPermutation::new(images).ok_or_else(|| Error::NotBijective(name.clone()))?;
        check_simplicial(derived, name, &perm)?;
        elements.push(perm);
    }
    Ok(SimplicialAction { complex: derived.clone(), elements, names: parent.names.clone() })
}

/// Decodes a power vertex id into its coordinates.
fn power_coords(id: usize, base_len: usize, n: usize) -> Vec<usize> {
    let mut coords = vec![0; n];
    let mut rest = id;
    for slot in coords.iter_mut().rev() {
        *slot = rest % base_len;
        rest /= base_len;
    }
    coords
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The coordinate-permutation action of `S_n` on `X^n`.
///
/// Element names are one-line notation, e.g. `[2,1]` for the swap; a
/// permutation `π` sends `(v_1, ..., v_n)` to `(v_π(1), ..., v_π(n))`.
pub fn symmetric_group_action(base: &SimplicialComplex, n: usize) -> Result<SimplicialAction> {
    let power = ordered_power(base, n)?;
    let m = base.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut elements = Vec::new();
    loop {
        let images: Vec<VertexId> = (0..power.vertex_count())
            .map(|id| {
                let coords = power_coords(id, m, n);
                perm.iter().fold(0usize, |acc, &i| acc * m + coords[i]) as VertexId
            })
            .collect();
        let name = format!(
            "[{}]",
            perm.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
        );
        elements.push((name, VertexPermutation::new(images).expect("coordinate permutation")));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    for (name, g) in &elements {
        check_simplicial(&power, name, g)?;
    }
    let (names, elements) = elements.into_iter().unzip();
    Ok(SimplicialAction { complex: power, elements, names })
}

/// The `dim`-simplices partitioned into orbits. Each orbit is sorted and
/// orbits are ordered by their least element.
pub fn orbit_partition(act: &SimplicialAction, dim: usize) -> Vec<Vec<Simplex>> {
    let mut seen: HashSet<Simplex> = HashSet::new();
    let mut orbits = Vec::new();
    for s in act.complex.simplices(dim) {
        if seen.contains(s) {
            continue;
        }
        let mut orbit: Vec<Simplex> = act.elements.iter().map(|g| g.apply_simplex(s)).collect();
        orbit.sort();
        orbit.dedup();
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    orbits
}

/// No edge joins two vertices of the same orbit.
pub fn is_semiregular(act: &SimplicialAction) -> bool {
    let orbit = act.vertex_orbits();
    act.complex
        .simplices(1)
        .iter()
        .all(|e| orbit[e.vertices()[0] as usize] != orbit[e.vertices()[1] as usize])
}

/// A failure of regularity: the translates `elements[i] · simplex[i]` span
/// `image`, yet no single group element carries `simplex` onto `image`
/// vertex by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    pub simplex: Vec<VertexLabel>,
    pub elements: Vec<String>,
    pub image: Vec<VertexLabel>,
}

impl fmt::Display for RegularityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ls: &[VertexLabel]| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        write!(
            f,
            "translates of <{}> by ({}) span <{}> but no single element realizes them",
            join(&self.simplex),
            self.elements.join(", "),
            join(&self.image)
        )
    }
}

/// For the vertices of `s` (in order) and one element per vertex: `None` if
/// the translates do not span a simplex, otherwise whether a single element
/// realizes all of them.
pub fn translates_realized(act: &SimplicialAction, s: &Simplex, elements: &[usize]) -> Option<bool> {
    assert_eq!(s.len(), elements.len(), "one element per vertex");
    let images: Vec<VertexId> =
        s.vertices().iter().zip(elements).map(|(&v, &g)| act.elements[g].apply(v)).collect();
    let mut set = images.clone();
    set.sort_unstable();
    set.dedup();
    if !act.complex.contains_ids(&set) {
        return None;
    }
    Some(act.elements.iter().any(|g| s.vertices().iter().zip(&images).all(|(&v, &w)| g.apply(v) == w)))
}

/// Searches every simplex for a tuple of translates spanning a simplex that
/// no single element realizes. The first translate is normalized to the
/// identity, which loses nothing: `(g_i)` is a violation iff `(g_0⁻¹ g_i)` is.
pub fn regularity_violation(act: &SimplicialAction) -> Option<RegularityWitness> {
    let transport = act.transporters();
    let stabilizers: Vec<Vec<usize>> = (0..act.complex.vertex_count() as VertexId)
        .map(|v| (0..act.order()).filter(|&g| act.elements[g].apply(v) == v).collect())
        .collect();

    struct Search<'a> {
        act: &'a SimplicialAction,
        transport: &'a [HashMap<VertexId, usize>],
        verts: &'a [VertexId],
        images: Vec<VertexId>,
    }

    impl Search<'_> {
        fn spans_simplex(&self) -> bool {
            let mut set = self.images.clone();
            set.sort_unstable();
            set.dedup();
            self.act.complex.contains_ids(&set)
        }

        /// Returns the images of a violating completion, if any.
        fn descend(&mut self, candidates: &[usize]) -> Option<Vec<VertexId>> {
            let i = self.images.len();
            if i == self.verts.len() {
                return candidates.is_empty().then(|| self.images.clone());
            }
            let v = self.verts[i];
            let orbit: Vec<VertexId> = {
                let mut o: Vec<VertexId> = self.transport[v as usize].keys().copied().collect();
                o.sort_unstable();
                o
            };
            for w in orbit {
                self.images.push(w);
                if self.spans_simplex() {
                    let next: Vec<usize> =
                        candidates.iter().copied().filter(|&g| self.act.elements[g].apply(v) == w).collect();
                    if let Some(found) = self.descend(&next) {
                        return Some(found);
                    }
                }
                self.images.pop();
            }
            None
        }
    }

    for s in act.complex.iter().filter(|s| s.dim() >= 1) {
        let verts = s.vertices();
        let mut search = Search { act, transport: &transport, verts, images: vec![verts[0]] };
        if let Some(images) = search.descend(&stabilizers[verts[0] as usize]) {
            let elements = verts
                .iter()
                .zip(&images)
                .map(|(&v, w)| act.names[transport[v as usize][w]].clone())
                .collect();
            return Some(RegularityWitness {
                simplex: act.complex.labels_of(s),
                elements,
                image: images.iter().map(|&w| act.complex.label(w).clone()).collect(),
            });
        }
    }
    None
}

/// Whenever translates `g_0 v_0, ..., g_d v_d` of the vertices of a simplex
/// span a simplex, a single element `g` has `g v_i = g_i v_i` for all `i`.
pub fn is_regular(act: &SimplicialAction) -> bool {
    regularity_violation(act).is_none()
}

/// The elements fixing a simplex setwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropySubgroup {
    pub simplex: Simplex,
    /// Indices into the action's element list.
    pub elements: Vec<usize>,
}

pub fn isotropy_subgroup(act: &SimplicialAction, s: &Simplex) -> Result<IsotropySubgroup> {
    if !act.complex.contains(s) {
        return Err(Error::UnknownSimplex(s.to_string()));
    }
    let elements = (0..act.order()).filter(|&g| act.elements[g].apply_simplex(s) == *s).collect();
    Ok(IsotropySubgroup { simplex: s.clone(), elements })
}

/// The quotient of a regular action with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub complex: SimplicialComplex,
    /// Quotient vertex of every vertex of the acted-on complex.
    pub projection: Vec<VertexId>,
}

impl Quotient {
    pub fn project(&self, s: &Simplex) -> Simplex {
        let mut ids: Vec<VertexId> = s.vertices().iter().map(|&v| self.projection[v as usize]).collect();
        ids.sort_unstable();
        ids.dedup();
        Simplex::new(ids).expect("nonempty")
    }
}

/// Vertices are `Orbit` labels, simplices are the images of simplices.
/// Non-regular actions are rejected with a witness.
pub fn quotient_complex(act: &SimplicialAction) -> Result<Quotient> {
    if let Some(w) = regularity_violation(act) {
        return Err(Error::NotRegular(w));
    }
    let k = &act.complex;
    let orbit = act.vertex_orbits();
    let count = orbit.iter().copied().max().map_or(0, |m| m + 1);
    let mut members: Vec<Vec<VertexLabel>> = vec![Vec::new(); count];
    for (v, &o) in orbit.iter().enumerate() {
        members[o].push(k.label(v as VertexId).clone());
    }
    let labels: Vec<VertexLabel> = members.into_iter().map(VertexLabel::orbit).collect();
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
    let mut rank = vec![0 as VertexId; count];
    for (pos, &o) in order.iter().enumerate() {
        rank[o] = pos as VertexId;
    }
    let projection: Vec<VertexId> = orbit.iter().map(|&o| rank[o]).collect();
    let facets: Vec<Simplex> = k
        .facets()
        .iter()
        .map(|s| Simplex::new(s.vertices().iter().map(|&v| projection[v as usize]).collect()).expect("regular action"))
        .collect();
    let sorted_labels = order.into_iter().map(|o| labels[o].clone()).collect();
    Ok(Quotient { complex: SimplicialComplex::from_id_facets(sorted_labels, facets), projection })
}
