//! Finite 2-group engine: permutation groups with the descending series
//! G^(n+1) = (G^(n))^2 [G^(n), G], quotients, exponent and nilpotency class.

pub mod catalog;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_POINTS: usize = 64;
pub const MAX_ORDER: usize = 1024;

/// A permutation on a fixed number of points (0-based images).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        if n > MAX_POINTS {
            return Err(Error::pre(format!("more than {MAX_POINTS} points")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::pre("not a permutation"));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Parse cycle notation with 1-based points, e.g. "(1 2 3 4)(5 6)".
    pub fn from_cycles(text: &str, n: usize) -> Result<Perm> {
        let mut images: Vec<u16> = (0..n as u16).collect();
        let text = text.trim();
        if text.is_empty() || text == "()" {
            return Perm::from_images(images);
        }
        for cycle in text.split(')') {
            let cycle = cycle.trim().trim_start_matches('(').trim();
            if cycle.is_empty() {
                continue;
            }
            let points: Vec<usize> = cycle
                .split(|c: char| c == ' ' || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point '{s}'")))
                })
                .collect::<Result<_>>()?;
            for p in &points {
                if *p == 0 || *p > n {
                    return Err(Error::Parse(format!("point {p} out of range 1..={n}")));
                }
            }
            for w in 0..points.len() {
                let from = points[w] - 1;
                let to = points[(w + 1) % points.len()] - 1;
                images[from] = to as u16;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// self followed by other: (other * self)(x) = other(self(x)).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite 2-group materialized as a full element list with composition by
/// index. Construction fails unless the order is a power of 2.
#[derive(Debug, Clone)]
pub struct FiniteTwoGroup {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
}

impl FiniteTwoGroup {
    pub fn from_generators(n: usize, gens: &[Perm]) -> Result<FiniteTwoGroup> {
        if n > MAX_POINTS {
            return Err(Error::pre(format!("more than {MAX_POINTS} points")));
        }
        for g in gens {
            if g.degree() != n {
                return Err(Error::pre("generator degree mismatch"));
            }
        }
        let mut elements = vec![Perm::identity(n)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let e = elements[i].clone();
            for g in gens {
                let prod = e.then(g);
                if !index.contains_key(&prod) {
                    if elements.len() >= MAX_ORDER {
                        return Err(Error::pre(format!("group order exceeds {MAX_ORDER}")));
                    }
                    index.insert(prod.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(prod);
                }
            }
        }
        if !elements.len().is_power_of_two() {
            return Err(Error::pre(format!(
                "order {} is not a power of 2",
                elements.len()
            )));
        }
        let generators = gens
            .iter()
            .map(|g| index[g])
            .collect();
        Ok(FiniteTwoGroup {
            elements,
            index,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        // product a*b acting as: first b, then a (left action composition)
        let p = self.elements[b].then(&self.elements[a]);
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        // [a, b] = a b a^-1 b^-1
        let ab = self.mul(a, b);
        let ai = self.inv(a);
        let bi = self.inv(b);
        self.mul(self.mul(ab, ai), bi)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut ord = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    /// Exponent: lcm of element orders (a power of 2 here, so the max).
    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|i| self.element_order(i))
            .max()
            .unwrap_or(1)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.commutator(a, b) == 0))
    }

    /// Histogram of element orders, as (order, count) pairs.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for i in 0..self.order() {
            *counts.entry(self.element_order(i)).or_default() += 1;
        }
        let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
        out.sort();
        out
    }

    /// Invariant factors 2^e1 >= 2^e2 >= ... for abelian groups, recovered
    /// from the element-order histogram.
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let profile = self.order_profile();
        let total_log = self.order().trailing_zeros() as usize;
        let max_log = self.exponent().trailing_zeros() as usize;
        // search multisets of exponents summing to total_log with max part max_log
        fn search(
            remaining: usize,
            max_part: usize,
            current: &mut Vec<usize>,
            profile: &[(usize, usize)],
        ) -> Option<Vec<usize>> {
            if remaining == 0 {
                // count elements of order dividing 2^k: prod 2^min(k, ei)
                let mut cumulative = Vec::new();
                let top = current.iter().copied().max().unwrap_or(0);
                for k in 0..=top {
                    let count: usize = current.iter().map(|&e| 1usize << e.min(k)).product();
                    cumulative.push(count);
                }
                let mut expected: HashMap<usize, usize> = HashMap::new();
                for k in 0..=top {
                    let below = if k == 0 { 0 } else { cumulative[k - 1] };
                    if cumulative[k] > below {
                        expected.insert(1 << k, cumulative[k] - below);
                    }
                }
                let mut exp: Vec<(usize, usize)> = expected.into_iter().collect();
                exp.sort();
                if exp == profile {
                    let mut inv: Vec<usize> = current.iter().map(|&e| 1 << e).collect();
                    inv.sort_unstable_by(|a, b| b.cmp(a));
                    return Some(inv);
                }
                return None;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                current.push(part);
                if let Some(found) = search(remaining - part, part, current, profile) {
                    return Some(found);
                }
                current.pop();
            }
            None
        }
        if total_log == 0 {
            return Some(Vec::new());
        }
        let mut current = Vec::new();
        search(total_log, max_log, &mut current, &profile)
    }

    /// Smallest subgroup containing the seeds, by orbit closure.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> Subgroup {
        let mut members = BTreeSet::new();
        members.insert(0usize);
        let mut frontier: Vec<usize> = vec![0];
        let mut seeds_inv: Vec<usize> = seeds.to_vec();
        seeds_inv.extend(seeds.iter().map(|&s| self.inv(s)));
        while let Some(x) = frontier.pop() {
            for &s in &seeds_inv {
                let y = self.mul(x, s);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup { members }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: [0usize].into_iter().collect(),
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|&g| {
            let gi = self.inv(g);
            h.members
                .iter()
                .all(|&x| h.members.contains(&self.mul(self.mul(g, x), gi)))
        })
    }

    /// H^2 [H, G]: the next term of the descending series.
    pub fn series_step(&self, h: &Subgroup) -> Result<Subgroup> {
        if !self.is_normal(h) {
            return Err(Error::pre("subgroup is not normal in the parent group"));
        }
        let mut seeds: BTreeSet<usize> = BTreeSet::new();
        for &x in &h.members {
            seeds.insert(self.mul(x, x));
        }
        for &x in &h.members {
            for g in 0..self.order() {
                seeds.insert(self.commutator(x, g));
            }
        }
        let seeds: Vec<usize> = seeds.into_iter().collect();
        let out = self.generated_subgroup(&seeds);
        debug_assert!(self.is_normal(&out));
        Ok(out)
    }

    /// Iterate the series from G until it stabilizes.
    pub fn tower_series(&self) -> Result<SeriesReport> {
        let mut chain = vec![self.full_subgroup()];
        loop {
            let next = self.series_step(chain.last().unwrap())?;
            if next == *chain.last().unwrap() {
                break;
            }
            chain.push(next);
        }
        let mut levels = Vec::new();
        for (i, h) in chain.iter().enumerate() {
            let quotient = self.quotient_group(h)?;
            levels.push(SeriesLevel {
                n: i + 1,
                subgroup_order: h.order(),
                quotient_order: quotient.order(),
                quotient_exponent: quotient.exponent(),
                quotient_class: quotient.nilpotency_class(),
            });
        }
        Ok(SeriesReport { chain, levels })
    }

    /// Coset group G/N acting on the cosets of N.
    pub fn quotient_group(&self, n: &Subgroup) -> Result<FiniteTwoGroup> {
        if !self.is_normal(n) {
            return Err(Error::pre("subgroup is not normal in the parent group"));
        }
        let count = self.order() / n.order();
        if count > MAX_POINTS {
            return Err(Error::pre(format!("quotient has more than {MAX_POINTS} cosets")));
        }
        // canonical coset representative: smallest member index
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            for &h in &n.members {
                coset_of[self.mul(x, h)] = id;
            }
            reps.push(x);
        }
        debug_assert_eq!(reps.len(), count);
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|&g| {
                let images = reps
                    .iter()
                    .map(|&r| coset_of[self.mul(g, r)] as u16)
                    .collect();
                Perm::from_images(images)
            })
            .collect::<Result<_>>()?;
        FiniteTwoGroup::from_generators(count, &gens)
    }

    /// Length of the lower central series down to the trivial subgroup.
    pub fn nilpotency_class(&self) -> usize {
        let mut gamma = self.full_subgroup();
        let mut class = 0;
        while gamma.order() > 1 {
            let mut seeds = BTreeSet::new();
            for &x in &gamma.members {
                for g in 0..self.order() {
                    seeds.insert(self.commutator(x, g));
                }
            }
            let seeds: Vec<usize> = seeds.into_iter().collect();
            let next = self.generated_subgroup(&seeds);
            assert!(next.order() < gamma.order(), "lower central series stalled");
            gamma = next;
            class += 1;
        }
        class
    }

    /// Frattini subgroup: intersection of all maximal subgroups. For a
    /// 2-group the maximal subgroups are exactly the index-2 subgroups,
    /// i.e. kernels of surjections onto Z/2. Feasible for order <= 32 by
    /// enumerating index-2 subgroups directly.
    pub fn frattini_subgroup(&self) -> Subgroup {
        let half = self.order() / 2;
        let mut intersection: BTreeSet<usize> = (0..self.order()).collect();
        // an index-2 subgroup is a union of squares and a maximal set closed
        // under multiplication; enumerate via homomorphisms G -> Z/2, which
        // factor through G/G^2[G,G] (elementary abelian)
        let step = self
            .series_step(&self.full_subgroup())
            .expect("full subgroup is normal");
        let quotient_dim = (self.order() / step.order()).trailing_zeros();
        // lift a basis of G/G^(2): pick elements giving distinct cosets
        let mut basis: Vec<usize> = Vec::new();
        let mut current = step.clone();
        for x in 0..self.order() {
            if current.members.contains(&x) {
                continue;
            }
            basis.push(x);
            let mut seeds: Vec<usize> = current.members.iter().copied().collect();
            seeds.push(x);
            current = self.generated_subgroup(&seeds);
            if basis.len() == quotient_dim as usize {
                break;
            }
        }
        // each nonzero F2 functional on the basis defines an index-2 subgroup
        for mask in 1..(1u32 << basis.len()) {
            let mut members = BTreeSet::new();
            for x in 0..self.order() {
                // value of x under the functional: parity of basis coords
                let coords = self.f2_coordinates(x, &basis, &step);
                let val = (coords & mask).count_ones() % 2;
                if val == 0 {
                    members.insert(x);
                }
            }
            debug_assert_eq!(members.len(), half);
            intersection = intersection.intersection(&members).copied().collect();
        }
        Subgroup {
            members: intersection,
        }
    }

    /// Coordinates of x in G/G^(2) with respect to a lifted basis.
    fn f2_coordinates(&self, x: usize, basis: &[usize], step: &Subgroup) -> u32 {
        // brute-force: find the combination b_S with x * b_S^-1 in G^(2)
        for mask in 0..(1u32 << basis.len()) {
            let mut prod = 0usize;
            for (i, &b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    prod = self.mul(prod, b);
                }
            }
            let diff = self.mul(x, self.inv(prod));
            if step.members.contains(&diff) {
                return mask;
            }
        }
        unreachable!("basis spans G/G^(2)")
    }

    /// Structural checks: commutator containment, centrality of the series,
    /// and the exponent / class bounds on the quotients.
    pub fn structural_checks(&self) -> Result<StructuralReport> {
        let series = self.tower_series()?;
        let chain = &series.chain;
        let level = |n: usize| -> &Subgroup {
            // G^(n) for n beyond the chain is the stable tail
            let idx = (n - 1).min(chain.len() - 1);
            &chain[idx]
        };
        // (i) [G^(2), G^(2)] <= G^(4)
        let g2 = level(2);
        let g4 = level(4);
        let commutators_in_g4 = g2.members.iter().all(|&a| {
            g2.members
                .iter()
                .all(|&b| g4.members.contains(&self.commutator(a, b)))
        });
        // (ii) [G^(n), G] <= G^(n+1)
        let mut series_central = true;
        for n in 1..=chain.len() {
            let gn = level(n);
            let gn1 = level(n + 1);
            for &a in &gn.members {
                for g in 0..self.order() {
                    if !gn1.members.contains(&self.commutator(a, g)) {
                        series_central = false;
                    }
                }
            }
        }
        // (iii) exponent(G/G^(n)) | 2^(n-1), (iv) class(G/G^(n)) <= n-1
        let mut exponent_bound = true;
        let mut class_bound = true;
        for lv in &series.levels {
            let bound = 1usize << (lv.n - 1);
            if lv.quotient_exponent > bound {
                exponent_bound = false;
            }
            if lv.quotient_class > lv.n - 1 {
                class_bound = false;
            }
        }
        Ok(StructuralReport {
            commutator_g2_in_g4: commutators_in_g4,
            series_central,
            quotient_exponent_bound: exponent_bound,
            quotient_class_bound: class_bound,
            series,
        })
    }
}

/// A subgroup as a member set of element indices in the parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: BTreeSet<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesLevel {
    pub n: usize,
    pub subgroup_order: usize,
    pub quotient_order: usize,
    pub quotient_exponent: usize,
    pub quotient_class: usize,
}

/// The computed series G = G^(1) >= G^(2) >= ... with per-level quotients.
#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub chain: Vec<Subgroup>,
    pub levels: Vec<SeriesLevel>,
}

impl SeriesReport {
    /// G^(n), with the stable tail extended indefinitely.
    pub fn level(&self, n: usize) -> &Subgroup {
        &self.chain[(n - 1).min(self.chain.len() - 1)]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralReport {
    pub commutator_g2_in_g4: bool,
    pub series_central: bool,
    pub quotient_exponent_bound: bool,
    pub quotient_class_bound: bool,
    #[serde(skip)]
    pub series: SeriesReport,
}

impl StructuralReport {
    pub fn all_pass(&self) -> bool {
        self.commutator_g2_in_g4
            && self.series_central
            && self.quotient_exponent_bound
            && self.quotient_class_bound
    }
}

/// Fingerprint of a finite 2-group: enough to pin the groups this crate
/// meets without a general isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub exponent: usize,
    pub class: usize,
    pub abelian_invariants: Option<Vec<usize>>,
    pub order_profile: Vec<(usize, usize)>,
}

impl GroupFingerprint {
    pub fn of(group: &FiniteTwoGroup) -> GroupFingerprint {
        GroupFingerprint {
            order: group.order(),
            exponent: group.exponent(),
            class: group.nilpotency_class(),
            abelian_invariants: group.abelian_invariants(),
            order_profile: group.order_profile(),
        }
    }

    pub fn is_dihedral_8(&self) -> bool {
        self.order == 8
            && self.exponent == 4
            && self.class == 2
            && self.order_profile == vec![(1, 1), (2, 5), (4, 2)]
    }

    pub fn is_cyclic(&self) -> bool {
        self.order == self.exponent
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::named_group;
    use super::*;

    fn d4() -> FiniteTwoGroup {
        named_group("D4").unwrap()
    }

    #[test]
    fn d4_basics() {
        let g = d4();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.nilpotency_class(), 2);
        assert!(!g.is_abelian());
    }

    #[test]
    fn generated_subgroup_examples() {
        let g = d4();
        // r^2 is the central involution
        let r = g.generator_indices()[0];
        let r2 = g.mul(r, r);
        let z = g.generated_subgroup(&[r2]);
        assert_eq!(z.order(), 2);
        assert_eq!(g.generated_subgroup(&[]).order(), 1);

        let q8 = named_group("Q8").unwrap();
        let i = q8.generator_indices()[0];
        assert_eq!(q8.generated_subgroup(&[i]).order(), 4);
    }

    #[test]
    fn series_step_examples() {
        let g = d4();
        let step1 = g.series_step(&g.full_subgroup()).unwrap();
        assert_eq!(step1.order(), 2); // the center {1, r^2}
        let step2 = g.series_step(&step1).unwrap();
        assert_eq!(step2.order(), 1);

        let z8 = named_group("Z8").unwrap();
        let s = z8.series_step(&z8.full_subgroup()).unwrap();
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn tower_series_examples() {
        let g = d4();
        let report = g.tower_series().unwrap();
        let orders: Vec<usize> = report.levels.iter().map(|l| l.quotient_order).collect();
        assert_eq!(orders, vec![1, 4, 8]);
        // G/G^(2) is elementary abelian of order 4
        assert_eq!(report.levels[1].quotient_exponent, 2);
        assert_eq!(report.levels[2].quotient_exponent, 4);

        let z8 = named_group("Z8").unwrap();
        let report = z8.tower_series().unwrap();
        let orders: Vec<usize> = report.levels.iter().map(|l| l.quotient_order).collect();
        assert_eq!(orders, vec![1, 2, 4, 8]);
        let exps: Vec<usize> = report.levels.iter().map(|l| l.quotient_exponent).collect();
        assert_eq!(exps, vec![1, 2, 4, 8]);

        let t = named_group("Z1");
        assert!(t.is_err()); // no such catalog name
    }

    #[test]
    fn quotient_examples() {
        let g = d4();
        let center = g.series_step(&g.full_subgroup()).unwrap();
        let q = g.quotient_group(&center).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2); // Klein four-group
        assert_eq!(g.quotient_group(&g.full_subgroup()).unwrap().order(), 1);
        let q = g.quotient_group(&g.trivial_subgroup()).unwrap();
        assert_eq!(GroupFingerprint::of(&q), GroupFingerprint::of(&g));
    }

    #[test]
    fn exponent_class_examples() {
        assert_eq!(d4().exponent(), 4);
        assert_eq!(d4().nilpotency_class(), 2);
        let e8 = named_group("C2^3").unwrap();
        assert_eq!(e8.exponent(), 2);
        assert_eq!(e8.nilpotency_class(), 1);
        let z16 = named_group("Z16").unwrap();
        assert_eq!(z16.exponent(), 16);
        assert_eq!(z16.nilpotency_class(), 1);
    }

    #[test]
    fn structural_checks_examples() {
        for name in ["D4", "Q8", "SD16"] {
            let g = named_group(name).unwrap();
            let r = g.structural_checks().unwrap();
            assert!(r.all_pass(), "structural checks failed for {name}");
        }
    }

    #[test]
    fn series_step_monotone() {
        let g = named_group("SD16").unwrap();
        let full = g.full_subgroup();
        let h1 = g.series_step(&full).unwrap();
        let h2 = g.series_step(&h1).unwrap();
        assert!(h2.is_subset_of(&h1));
        assert!(h1.is_subset_of(&full));
    }

    #[test]
    fn abelian_invariants_recovered() {
        assert_eq!(
            named_group("Z4xZ4").unwrap().abelian_invariants(),
            Some(vec![4, 4])
        );
        assert_eq!(
            named_group("C2^3").unwrap().abelian_invariants(),
            Some(vec![2, 2, 2])
        );
        assert_eq!(named_group("Z16").unwrap().abelian_invariants(), Some(vec![16]));
        assert_eq!(named_group("D4").unwrap().abelian_invariants(), None);
    }

    #[test]
    fn frattini_equals_series_step() {
        for name in ["D4", "Q8", "Z8", "C2^2", "SD16", "M4(2)", "Z4xZ4"] {
            let g = named_group(name).unwrap();
            let step = g.series_step(&g.full_subgroup()).unwrap();
            let frat = g.frattini_subgroup();
            assert_eq!(step, frat, "Frattini mismatch for {name}");
        }
    }

    #[test]
    fn parse_cycles() {
        let p = Perm::from_cycles("(1 2 3 4)", 4).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(3), 0);
        let g = FiniteTwoGroup::from_generators(
            4,
            &[
                Perm::from_cycles("(1 2 3 4)", 4).unwrap(),
                Perm::from_cycles("(2 4)", 4).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        assert!(Perm::from_cycles("(1 5)", 4).is_err());
    }

    #[test]
    fn rejects_non_two_group() {
        let p = Perm::from_cycles("(1 2 3)", 3).unwrap();
        assert!(FiniteTwoGroup::from_generators(3, &[p]).is_err());
    }
}
