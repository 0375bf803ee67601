//! Named catalog of small 2-groups as permutation groups.

use crate::error::{Error, Result};

use super::{FiniteTwoGroup, Perm};

/// Cyclic group of order 2^k on 2^k points.
fn cyclic(k: u32) -> FiniteTwoGroup {
    let n = 1usize << k;
    let images = (0..n).map(|i| ((i + 1) % n) as u16).collect();
    FiniteTwoGroup::from_generators(n, &[Perm::from_images(images).unwrap()])
        .expect("cyclic 2-group")
}

/// Elementary abelian (Z/2)^k: k disjoint transpositions.
fn elementary_abelian(k: u32) -> FiniteTwoGroup {
    let n = 2 * k as usize;
    let gens: Vec<Perm> = (0..k as usize)
        .map(|i| {
            let mut images: Vec<u16> = (0..n as u16).collect();
            images.swap(2 * i, 2 * i + 1);
            Perm::from_images(images).unwrap()
        })
        .collect();
    FiniteTwoGroup::from_generators(n, &gens).expect("elementary abelian 2-group")
}

/// Dihedral group of order 8 as symmetries of a square.
fn dihedral_8() -> FiniteTwoGroup {
    let r = Perm::from_cycles("(1 2 3 4)", 4).unwrap();
    let s = Perm::from_cycles("(2 4)", 4).unwrap();
    FiniteTwoGroup::from_generators(4, &[r, s]).expect("D4")
}

/// Quaternion group in its regular representation on
/// {1, -1, i, -i, j, -j, k, -k}.
fn quaternion_8() -> FiniteTwoGroup {
    let i = Perm::from_cycles("(1 3 2 4)(5 7 6 8)", 8).unwrap();
    let j = Perm::from_cycles("(1 5 2 6)(3 8 4 7)", 8).unwrap();
    FiniteTwoGroup::from_generators(8, &[i, j]).expect("Q8")
}

/// Affine group {x -> ux + b} on Z/8 with u in {1, m}: semidihedral for
/// m = 3, modular M4(2) for m = 5.
fn affine_mod8(m: usize) -> FiniteTwoGroup {
    let r = Perm::from_images((0..8).map(|x| ((x + 1) % 8) as u16).collect()).unwrap();
    let s = Perm::from_images((0..8).map(|x| ((x * m) % 8) as u16).collect()).unwrap();
    FiniteTwoGroup::from_generators(8, &[r, s]).expect("affine group on Z/8")
}

/// Direct product acting on the disjoint union of the factors' points.
fn direct_product(a: &FiniteTwoGroup, b: &FiniteTwoGroup) -> Result<FiniteTwoGroup> {
    let (na, nb) = (a.degree(), b.degree());
    let n = na + nb;
    let mut gens = Vec::new();
    for &gi in a.generator_indices() {
        let g = a.element(gi);
        let mut images: Vec<u16> = (0..n as u16).collect();
        for p in 0..na {
            images[p] = g.apply(p) as u16;
        }
        gens.push(Perm::from_images(images)?);
    }
    for &gi in b.generator_indices() {
        let g = b.element(gi);
        let mut images: Vec<u16> = (0..n as u16).collect();
        for p in 0..nb {
            images[na + p] = (na + g.apply(p)) as u16;
        }
        gens.push(Perm::from_images(images)?);
    }
    FiniteTwoGroup::from_generators(n, &gens)
}

/// Look up a catalog group by name.
pub fn named_group(name: &str) -> Result<FiniteTwoGroup> {
    match name {
        "C2" | "Z2" => Ok(cyclic(1)),
        "Z4" => Ok(cyclic(2)),
        "Z8" => Ok(cyclic(3)),
        "Z16" => Ok(cyclic(4)),
        "C2^2" | "C2xC2" => Ok(elementary_abelian(2)),
        "C2^3" => Ok(elementary_abelian(3)),
        "D4" => Ok(dihedral_8()),
        "Q8" => Ok(quaternion_8()),
        "SD16" => Ok(affine_mod8(3)),
        "M4(2)" => Ok(affine_mod8(5)),
        "D4xC2" | "D4xZ2" => direct_product(&dihedral_8(), &cyclic(1)),
        "Q8xC2" | "Q8xZ2" => direct_product(&quaternion_8(), &cyclic(1)),
        "Z4xZ4" => direct_product(&cyclic(2), &cyclic(2)),
        _ => Err(Error::Parse(format!("unknown catalog group '{name}'"))),
    }
}

/// The full catalog used by the verification suites.
pub fn catalog_names() -> &'static [&'static str] {
    &[
        "C2", "C2^2", "C2^3", "Z4", "Z8", "Z16", "D4", "Q8", "SD16", "M4(2)", "D4xC2", "Q8xC2",
        "Z4xZ4",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twogroup::GroupFingerprint;

    #[test]
    fn catalog_orders() {
        let expected = [
            ("C2", 2),
            ("C2^2", 4),
            ("C2^3", 8),
            ("Z4", 4),
            ("Z8", 8),
            ("Z16", 16),
            ("D4", 8),
            ("Q8", 8),
            ("SD16", 16),
            ("M4(2)", 16),
            ("D4xC2", 16),
            ("Q8xC2", 16),
            ("Z4xZ4", 16),
        ];
        for (name, order) in expected {
            assert_eq!(named_group(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn q8_structure() {
        let g = named_group("Q8").unwrap();
        let fp = GroupFingerprint::of(&g);
        assert_eq!(fp.order, 8);
        assert_eq!(fp.exponent, 4);
        assert_eq!(fp.class, 2);
        // exactly one involution
        assert_eq!(fp.order_profile, vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn sd16_and_m42_differ() {
        let sd = GroupFingerprint::of(&named_group("SD16").unwrap());
        let m = GroupFingerprint::of(&named_group("M4(2)").unwrap());
        assert_eq!(sd.order, 16);
        assert_eq!(m.order, 16);
        assert_ne!(sd.order_profile, m.order_profile);
        assert_eq!(m.class, 2);
        assert_eq!(sd.class, 3);
    }
}
