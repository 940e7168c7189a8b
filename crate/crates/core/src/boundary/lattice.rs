//! Observable lattices, their unbounded ultrafilters and the boundary they
//! define.

use std::fmt::Debug;

use petgraph::unionfind::UnionFind;

use crate::line::EpSet;
use crate::relation::{FiniteRelation, LineRelation};
use crate::set::PointSet;
use crate::{Error, Result};

/// Set operations needed by lattice computations.
pub trait Observable: Clone + Ord + Debug {
    fn union(&self, other: &Self) -> Self;
    fn intersection(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn is_subset(&self, other: &Self) -> bool;
}

impl Observable for PointSet {
    fn union(&self, other: &Self) -> Self {
        *self | *other
    }
    fn intersection(&self, other: &Self) -> Self {
        *self & *other
    }
    fn difference(&self, other: &Self) -> Self {
        *self - *other
    }
    fn is_subset(&self, other: &Self) -> bool {
        PointSet::is_subset(*self, *other)
    }
}

impl Observable for EpSet {
    fn union(&self, other: &Self) -> Self {
        EpSet::union(self, other)
    }
    fn intersection(&self, other: &Self) -> Self {
        EpSet::intersection(self, other)
    }
    fn difference(&self, other: &Self) -> Self {
        EpSet::difference(self, other)
    }
    fn is_subset(&self, other: &Self) -> bool {
        EpSet::is_subset(self, other)
    }
}

/// A relation seen through the sets of one observable type.
pub trait Observer {
    type Set: Observable;
    fn orth(&self, a: &Self::Set, c: &Self::Set) -> bool;
    fn full(&self) -> Self::Set;
    fn empty(&self) -> Self::Set;
    /// Singletons that are not bounded, with their point labels.
    fn unbounded_points(&self) -> Vec<(String, Self::Set)>;
    fn describe(&self, s: &Self::Set) -> String;

    fn is_bounded(&self, a: &Self::Set) -> bool {
        self.orth(a, &self.full())
    }
}

impl Observer for FiniteRelation {
    type Set = PointSet;
    fn orth(&self, a: &PointSet, c: &PointSet) -> bool {
        FiniteRelation::orth(self, *a, *c)
    }
    fn full(&self) -> PointSet {
        FiniteRelation::full(self)
    }
    fn empty(&self) -> PointSet {
        PointSet::EMPTY
    }
    fn unbounded_points(&self) -> Vec<(String, PointSet)> {
        (0..self.n())
            .filter(|&i| !FiniteRelation::is_bounded(self, PointSet::singleton(i)))
            .map(|i| (self.ground().name(i).to_string(), PointSet::singleton(i)))
            .collect()
    }
    fn describe(&self, s: &PointSet) -> String {
        self.ground().format(*s)
    }
}

impl Observer for LineRelation {
    type Set = EpSet;
    fn orth(&self, a: &EpSet, c: &EpSet) -> bool {
        LineRelation::orth(self, a, c)
    }
    fn full(&self) -> EpSet {
        EpSet::all()
    }
    fn empty(&self) -> EpSet {
        EpSet::empty()
    }
    fn unbounded_points(&self) -> Vec<(String, EpSet)> {
        // every rule on ℤ bounds finite sets
        Vec::new()
    }
    fn describe(&self, s: &EpSet) -> String {
        s.to_string()
    }
}

/// A finite family closed under union and intersection, containing `∅` and
/// the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservableLattice<S> {
    members: Vec<S>,
}

impl<S: Observable> ObservableLattice<S> {
    pub fn members(&self) -> &[S] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &S) -> bool {
        self.members.binary_search(s).is_ok()
    }
}

/// Closes `seeds ∪ {∅, X}` under pairwise union and intersection, failing
/// once more than `cap` members appear.
pub fn lattice_close<O: Observer>(
    rel: &O,
    seeds: impl IntoIterator<Item = O::Set>,
    cap: usize,
) -> Result<ObservableLattice<O::Set>> {
    let mut members: Vec<O::Set> = vec![rel.empty(), rel.full()];
    for s in seeds {
        if !members.contains(&s) {
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        if members.len() > cap {
            return Err(Error::budget("lattice members", members.len(), cap));
        }
        for j in 0..i {
            for w in [
                members[i].union(&members[j]),
                members[i].intersection(&members[j]),
            ] {
                if !members.contains(&w) {
                    members.push(w);
                }
            }
        }
        i += 1;
    }
    if members.len() > cap {
        return Err(Error::budget("lattice members", members.len(), cap));
    }
    members.sort();
    Ok(ObservableLattice { members })
}

/// A maximal filter of the lattice avoiding bounded members. In a finite
/// lattice every filter is generated by its smallest member, so maximal
/// unbounded filters correspond to minimal unbounded members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ultrafilter<S> {
    pub generator: S,
    /// Labels of the points at which the filter is principal: it contains
    /// every lattice member containing the point.
    pub principal_at: Vec<String>,
}

impl<S: Observable> Ultrafilter<S> {
    pub fn contains(&self, s: &S) -> bool {
        self.generator.is_subset(s)
    }

    pub fn is_principal(&self) -> bool {
        !self.principal_at.is_empty()
    }
}

pub fn ultrafilters<O: Observer>(
    lattice: &ObservableLattice<O::Set>,
    rel: &O,
) -> Vec<Ultrafilter<O::Set>> {
    let unbounded: Vec<&O::Set> = lattice
        .members
        .iter()
        .filter(|m| !rel.is_bounded(m))
        .collect();
    let minimal: Vec<O::Set> = unbounded
        .iter()
        .filter(|m| !unbounded.iter().any(|o| o != *m && o.is_subset(m)))
        .map(|m| (*m).clone())
        .collect();
    let points = rel.unbounded_points();
    minimal
        .into_iter()
        .map(|generator| {
            let principal_at = points
                .iter()
                .filter(|(_, p)| {
                    p.is_subset(&generator)
                        && lattice
                            .members
                            .iter()
                            .filter(|z| p.is_subset(z))
                            .all(|z| generator.is_subset(z))
                })
                .map(|(label, _)| label.clone())
                .collect();
            Ultrafilter {
                generator,
                principal_at,
            }
        })
        .collect()
}

/// `F₁ ∼ F₂`: no member of `F₁` is orthogonal to a member of `F₂`; by
/// heredity it suffices to compare generators.
pub fn similar<O: Observer>(rel: &O, f1: &Ultrafilter<O::Set>, f2: &Ultrafilter<O::Set>) -> bool {
    !rel.orth(&f1.generator, &f2.generator)
}

/// Three ultrafilters (indices) with `F₁ ∼ F₂ ∼ F₃` but not `F₁ ∼ F₃`.
pub fn transitivity_failure<O: Observer>(
    rel: &O,
    filters: &[Ultrafilter<O::Set>],
) -> Option<(usize, usize, usize)> {
    let k = filters.len();
    let sim: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| similar(rel, &filters[i], &filters[j]))
                .collect()
        })
        .collect();
    for i in 0..k {
        for j in 0..k {
            if !sim[i][j] {
                continue;
            }
            if let Some(l) = (0..k).find(|&l| sim[j][l] && !sim[i][l]) {
                return Some((i, j, l));
            }
        }
    }
    None
}

/// The quotient of the ultrafilters by `∼`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary<S> {
    pub lattice: ObservableLattice<S>,
    pub ultrafilters: Vec<Ultrafilter<S>>,
    /// Classes made only of non-principal ultrafilters: the points of `∂X`.
    pub classes: Vec<Vec<usize>>,
    /// Classes containing principal ultrafilters, with the points they
    /// identify.
    pub identifications: Vec<(Vec<String>, Vec<usize>)>,
}

impl<S: Observable> Boundary<S> {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Ultrafilters having a member inside `c` up to a bounded set.
    pub fn ultrafilters_near<O: Observer<Set = S>>(&self, rel: &O, c: &S) -> Vec<usize> {
        (0..self.ultrafilters.len())
            .filter(|&i| rel.is_bounded(&self.ultrafilters[i].generator.difference(c)))
            .collect()
    }

    /// Boundary classes in the closure of `c`.
    pub fn closure_classes<O: Observer<Set = S>>(&self, rel: &O, c: &S) -> Vec<usize> {
        let near = self.ultrafilters_near(rel, c);
        (0..self.classes.len())
            .filter(|&k| self.classes[k].iter().any(|i| near.contains(i)))
            .collect()
    }

    /// Class index containing ultrafilter `i`, if it is a boundary class.
    pub fn class_of(&self, i: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&i))
    }
}

/// Builds the boundary; a failure of transitivity is reported with the three
/// generators instead of quotienting.
pub fn boundary<O: Observer>(
    rel: &O,
    lattice: &ObservableLattice<O::Set>,
) -> Result<Boundary<O::Set>> {
    let filters = ultrafilters(lattice, rel);
    if let Some((i, j, l)) = transitivity_failure(rel, &filters) {
        return Err(Error::NotTransitive(
            "∼",
            format!(
                "{} ∼ {} and {} ∼ {} but {} ≁ {}",
                rel.describe(&filters[i].generator),
                rel.describe(&filters[j].generator),
                rel.describe(&filters[j].generator),
                rel.describe(&filters[l].generator),
                rel.describe(&filters[i].generator),
                rel.describe(&filters[l].generator)
            ),
        ));
    }
    let k = filters.len();
    let mut uf = UnionFind::<usize>::new(k);
    for i in 0..k {
        for j in i + 1..k {
            if similar(rel, &filters[i], &filters[j]) {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut roots = labels.clone();
    roots.sort_unstable();
    roots.dedup();
    let mut classes = Vec::new();
    let mut identifications = Vec::new();
    for r in roots {
        let members: Vec<usize> = (0..k).filter(|&i| labels[i] == r).collect();
        let mut points: Vec<String> = members
            .iter()
            .flat_map(|&i| filters[i].principal_at.iter().cloned())
            .collect();
        points.sort();
        points.dedup();
        if points.is_empty() {
            classes.push(members);
        } else {
            identifications.push((points, members));
        }
    }
    Ok(Boundary {
        lattice: lattice.clone(),
        ultrafilters: filters,
        classes,
        identifications,
    })
}

/// Members `C, D` for which taking closures fails to commute with
/// intersection or union.
pub fn closure_lattice_failure<O: Observer>(
    rel: &O,
    b: &Boundary<O::Set>,
) -> Option<(O::Set, O::Set)> {
    let near = |s: &O::Set| b.ultrafilters_near(rel, s);
    let ms = b.lattice.members();
    for c in ms {
        for d in ms {
            let (nc, nd) = (near(c), near(d));
            let meet: Vec<usize> = nc.iter().copied().filter(|i| nd.contains(i)).collect();
            let mut join: Vec<usize> = nc.iter().chain(nd.iter()).copied().collect();
            join.sort_unstable();
            join.dedup();
            if near(&c.intersection(d)) != meet || near(&c.union(d)) != join {
                return Some((c.clone(), d.clone()));
            }
        }
    }
    None
}

/// A map between boundaries induced by a map of spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    /// Image class of each boundary class of the source.
    pub images: Vec<usize>,
}

/// Sends the class of `F` to the class of the ultrafilters `G` of the target
/// with `F`'s generator inside `f⁻¹(G)` up to a bounded set. Errors when a
/// target lattice member pulls back to no source member up to a bounded set,
/// or when a class has no unique image.
pub fn induced_boundary_map<OX: Observer, OY: Observer>(
    rel_x: &OX,
    bx: &Boundary<OX::Set>,
    rel_y: &OY,
    by: &Boundary<OY::Set>,
    pullback: impl Fn(&OY::Set) -> OX::Set,
) -> Result<InducedMap> {
    for d in by.lattice.members() {
        let pd = pullback(d);
        let expressible =
            bx.lattice.members().iter().any(|l| {
                rel_x.is_bounded(&pd.difference(l)) && rel_x.is_bounded(&l.difference(&pd))
            });
        if !expressible {
            return Err(Error::pre(format!(
                "the pullback {} of {} is not a source lattice member up to a bounded set",
                rel_x.describe(&pd),
                rel_y.describe(d)
            )));
        }
    }
    let pulled: Vec<OX::Set> = by
        .ultrafilters
        .iter()
        .map(|g| pullback(&g.generator))
        .collect();
    let mut images = Vec::with_capacity(bx.classes.len());
    for class in &bx.classes {
        let mut targets: Vec<usize> = Vec::new();
        for &i in class {
            let m = &bx.ultrafilters[i].generator;
            for (j, p) in pulled.iter().enumerate() {
                if rel_x.is_bounded(&m.difference(p)) {
                    match by.class_of(j) {
                        Some(t) => targets.push(t),
                        None => {
                            return Err(Error::pre(format!(
                                "{} lands on a principal ultrafilter of the target",
                                rel_x.describe(m)
                            )))
                        }
                    }
                }
            }
        }
        targets.sort_unstable();
        targets.dedup();
        match targets.as_slice() {
            [t] => images.push(*t),
            _ => {
                return Err(Error::pre(format!(
                    "boundary class generated by {} has {} candidate images; the lattices are too coarse",
                    rel_x.describe(&bx.ultrafilters[class[0]].generator),
                    targets.len()
                )))
            }
        }
    }
    Ok(InducedMap { images })
}
