//! Black-box computations on finite permutation groups given by generators:
//! closure enumeration, derived series, normal subgroups, direct-product
//! detection. Everything works on the full element set; the target scale is
//! groups of order at most a few thousand, where breadth-first closure beats
//! any cleverer machinery.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Default bound on the number of elements `enumerate` will produce.
pub const DEFAULT_ENUM_CAP: usize = 10_000;

/// Default bound on the conjugacy class count in `normal_subgroups`.
///
/// Normal-subgroup enumeration closes class closures under joins, which is
/// exponential in the class count in the worst case. The largest catalog
/// groups have 42 classes, so the default leaves headroom for them while
/// still refusing genuinely class-rich input.
pub const DEFAULT_CLASS_LIMIT: usize = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("{classes} conjugacy classes exceed the normal-subgroup limit of {limit}")]
    TooManyClasses { classes: usize, limit: usize },
}

/// A finite permutation group with its full element set cached.
///
/// Elements are stored sorted by image list, so two enumerations of the same
/// group compare equal regardless of generator order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

fn compose_raw(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn invert_raw(a: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        out[v as usize] = i as u32;
    }
    out
}

fn conjugate_raw(g: &[u32], x: &[u32]) -> Vec<u32> {
    compose_raw(&compose_raw(g, x), &invert_raw(g))
}

/// Breadth-first closure of the identity under right multiplication.
fn closure_raw(
    degree: usize,
    gens: &[Vec<u32>],
    cap: Option<usize>,
) -> Result<HashSet<Vec<u32>>, GroupError> {
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose_raw(&x, g);
            if !seen.contains(&y) {
                if let Some(cap) = cap {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Extends `gens` until the generated set is closed under conjugation by
/// `ambient`, returning the closed element set and the extended generators.
fn normal_closure_raw(
    degree: usize,
    seeds: &[Vec<u32>],
    ambient: &[Vec<u32>],
) -> (HashSet<Vec<u32>>, Vec<Vec<u32>>) {
    let mut gens: Vec<Vec<u32>> = seeds.to_vec();
    let mut elements = closure_raw(degree, &gens, None).expect("uncapped");
    loop {
        let mut added = false;
        for g in ambient {
            for s in gens.clone() {
                let c = conjugate_raw(g, &s);
                if !elements.contains(&c) {
                    gens.push(c);
                    elements = closure_raw(degree, &gens, None).expect("uncapped");
                    added = true;
                }
            }
        }
        if !added {
            return (elements, gens);
        }
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` with the default cap.
    pub fn enumerate(generators: &[Permutation]) -> Result<Self, GroupError> {
        Self::enumerate_capped(generators, DEFAULT_ENUM_CAP)
    }

    /// Enumerates with an explicit cap on the element count; exceeding the
    /// cap is an error so that runaway generator input fails fast.
    pub fn enumerate_capped(generators: &[Permutation], cap: usize) -> Result<Self, GroupError> {
        let first = generators.first().ok_or(GroupError::NoGenerators)?;
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        let raw_gens: Vec<Vec<u32>> = generators.iter().map(|g| g.images().to_vec()).collect();
        let set = closure_raw(degree, &raw_gens, Some(cap))?;
        Ok(Self::from_element_set(degree, generators.to_vec(), set))
    }

    fn from_element_set(
        degree: usize,
        generators: Vec<Permutation>,
        set: HashSet<Vec<u32>>,
    ) -> Self {
        let mut elements: Vec<Vec<u32>> = set.into_iter().collect();
        elements.sort_unstable();
        let elements = elements
            .into_iter()
            .map(|images| Permutation::from_images(images).expect("closure preserves bijections"))
            .collect();
        FiniteGroup {
            degree,
            generators,
            elements,
        }
    }

    /// Rebuilds a group from a known element set, picking generators
    /// greedily from the sorted elements.
    fn from_closed_set(degree: usize, set: &BTreeSet<Vec<u32>>) -> Self {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        let mut have: HashSet<Vec<u32>> = HashSet::new();
        have.insert((0..degree as u32).collect());
        for el in set {
            if !have.contains(el) {
                gens.push(el.clone());
                have = closure_raw(degree, &gens, None).expect("uncapped");
                if have.len() == set.len() {
                    break;
                }
            }
        }
        if gens.is_empty() {
            gens.push((0..degree as u32).collect());
        }
        let generators = gens
            .into_iter()
            .map(|images| Permutation::from_images(images).expect("subgroup elements"))
            .collect();
        FiniteGroup {
            degree,
            generators,
            elements: set
                .iter()
                .map(|images| Permutation::from_images(images.clone()).expect("subgroup elements"))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image list.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree
            && self
                .elements
                .binary_search_by(|e| e.images().cmp(p.images()))
                .is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Direct product on disjoint supports: degree is the sum of degrees and
    /// the element set is the set of all pairs.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let degree = self.degree + other.degree;
        let mut generators: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.extended(degree, 0))
            .collect();
        generators.extend(other.generators.iter().map(|g| g.extended(degree, self.degree)));
        let mut elements = Vec::with_capacity(self.elements.len() * other.elements.len());
        for a in &self.elements {
            for b in &other.elements {
                let mut images = Vec::with_capacity(degree);
                images.extend_from_slice(a.images());
                images.extend(b.images().iter().map(|&v| v + self.degree as u32));
                elements.push(Permutation::from_images(images).expect("pairs are bijections"));
            }
        }
        FiniteGroup {
            degree,
            generators,
            elements,
        }
    }

    fn raw_generators(&self) -> Vec<Vec<u32>> {
        self.generators
            .iter()
            .map(|g| g.images().to_vec())
            .filter(|g| g.iter().enumerate().any(|(i, &v)| i as u32 != v))
            .collect()
    }

    /// Solvability via the derived series: each derived subgroup is the
    /// normal closure of the commutators of generator pairs, and the series
    /// either reaches the trivial group (solvable) or stalls (not).
    pub fn is_solvable(&self) -> bool {
        let mut gens = self.raw_generators();
        let mut order = self.order();
        let identity: Vec<u32> = (0..self.degree as u32).collect();
        loop {
            let mut commutators: BTreeSet<Vec<u32>> = BTreeSet::new();
            for a in &gens {
                for b in &gens {
                    let ab = compose_raw(a, b);
                    let ba = compose_raw(b, a);
                    let c = compose_raw(&invert_raw(&ba), &ab);
                    if c != identity {
                        commutators.insert(c);
                    }
                }
            }
            if commutators.is_empty() {
                return true;
            }
            let seeds: Vec<Vec<u32>> = commutators.into_iter().collect();
            let (derived, derived_gens) = normal_closure_raw(self.degree, &seeds, &gens);
            if derived.len() as u64 == order {
                return false;
            }
            gens = derived_gens;
            order = derived.len() as u64;
        }
    }

    /// Conjugacy classes as orbits under generator conjugation, each sorted,
    /// listed in order of their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        let index: HashMap<&[u32], usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.images(), i))
            .collect();
        let gens = self.raw_generators();
        let mut assigned = vec![false; self.elements.len()];
        let mut classes = Vec::new();
        for start in 0..self.elements.len() {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut members = vec![start];
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let c = conjugate_raw(g, self.elements[x].images());
                    let j = index[c.as_slice()];
                    if !assigned[j] {
                        assigned[j] = true;
                        members.push(j);
                        frontier.push(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(
                members
                    .into_iter()
                    .map(|i| self.elements[i].clone())
                    .collect(),
            );
        }
        classes
    }

    /// The complete list of normal subgroups, sorted by order then elements.
    ///
    /// Computed by closing the normal closures of single class
    /// representatives under pairwise join. Every normal subgroup is a union
    /// of classes and is the join of the closures of the classes it
    /// contains, so the list is complete.
    pub fn normal_subgroups(&self) -> Result<Vec<FiniteGroup>, GroupError> {
        self.normal_subgroups_bounded(DEFAULT_CLASS_LIMIT)
    }

    /// `normal_subgroups` with an explicit conjugacy-class bound.
    pub fn normal_subgroups_bounded(
        &self,
        class_limit: usize,
    ) -> Result<Vec<FiniteGroup>, GroupError> {
        let classes = self.conjugacy_classes();
        if classes.len() > class_limit {
            return Err(GroupError::TooManyClasses {
                classes: classes.len(),
                limit: class_limit,
            });
        }
        let gens = self.raw_generators();
        let mut subs: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::new();
        let identity: Vec<u32> = (0..self.degree as u32).collect();
        subs.insert(BTreeSet::from([identity]));
        for class in &classes {
            let (closure, _) =
                normal_closure_raw(self.degree, &[class[0].images().to_vec()], &gens);
            subs.insert(closure.into_iter().collect());
        }
        // close under joins; both factors are normal, so the product set is
        // already a subgroup
        loop {
            let snapshot: Vec<BTreeSet<Vec<u32>>> = subs.iter().cloned().collect();
            let mut added = false;
            for i in 0..snapshot.len() {
                for j in (i + 1)..snapshot.len() {
                    let (a, b) = (&snapshot[i], &snapshot[j]);
                    if a.is_subset(b) || b.is_subset(a) {
                        continue;
                    }
                    let mut join = BTreeSet::new();
                    for x in a {
                        for y in b {
                            join.insert(compose_raw(x, y));
                        }
                    }
                    if !subs.contains(&join) {
                        subs.insert(join);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let mut list: Vec<FiniteGroup> = subs
            .iter()
            .map(|set| FiniteGroup::from_closed_set(self.degree, set))
            .collect();
        list.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        Ok(list)
    }

    /// True when two proper nontrivial normal subgroups intersect trivially
    /// and their orders multiply to the group order.
    pub fn is_direct_product(&self) -> Result<bool, GroupError> {
        self.is_direct_product_bounded(DEFAULT_CLASS_LIMIT)
    }

    pub fn is_direct_product_bounded(&self, class_limit: usize) -> Result<bool, GroupError> {
        let subs = self.normal_subgroups_bounded(class_limit)?;
        let order = self.order();
        for a in &subs {
            if a.order() == 1 || a.order() == order {
                continue;
            }
            for b in &subs {
                if b.order() == 1 || b.order() == order || a.order() * b.order() != order {
                    continue;
                }
                let trivial_intersection = a
                    .elements()
                    .iter()
                    .filter(|e| !e.is_identity())
                    .all(|e| !b.contains(e));
                if trivial_intersection {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}
