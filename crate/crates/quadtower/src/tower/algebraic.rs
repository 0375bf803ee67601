//! Nested quadratic extension towers Q = T_0 < T_1 < ... < T_m with
//! T_{i+1} = T_i(sqrt g_i), exact arithmetic, square detection, and
//! enumeration of the automorphisms fixing Q.

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::exactfield::multiquad::MultiquadElement;
use crate::exactfield::rational::{rational_text, sqrt_rational, Rational};
use crate::twogroup::{FiniteTwoGroup, GroupFingerprint, Perm};

/// An element of a tower level: a rational at level 0, a pair (u, v)
/// standing for u + v * sqrt(g) at each higher level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerElem {
    Rat(Rational),
    Ext(Box<TowerElem>, Box<TowerElem>),
}

impl TowerElem {
    pub fn rat(r: Rational) -> TowerElem {
        TowerElem::Rat(r)
    }

    pub fn int(n: i64) -> TowerElem {
        TowerElem::Rat(Rational::from_integer(BigInt::from(n)))
    }

    /// Depth of the nesting, i.e. the level this element lives at.
    pub fn level(&self) -> usize {
        match self {
            TowerElem::Rat(_) => 0,
            TowerElem::Ext(u, _) => u.level() + 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TowerElem::Rat(r) => r.is_zero(),
            TowerElem::Ext(u, v) => u.is_zero() && v.is_zero(),
        }
    }

    fn zero_at(level: usize) -> TowerElem {
        if level == 0 {
            TowerElem::Rat(Rational::zero())
        } else {
            let z = Self::zero_at(level - 1);
            TowerElem::Ext(Box::new(z.clone()), Box::new(z))
        }
    }

    /// Embed into the next level as u + 0 * sqrt(g).
    pub fn lift(&self) -> TowerElem {
        let z = Self::zero_at(self.level());
        TowerElem::Ext(Box::new(self.clone()), Box::new(z))
    }

    /// Embed into the given (>= current) level.
    pub fn lift_to(&self, level: usize) -> TowerElem {
        let mut out = self.clone();
        while out.level() < level {
            out = out.lift();
        }
        out
    }

    pub fn add(&self, other: &TowerElem) -> Result<TowerElem> {
        match (self, other) {
            (TowerElem::Rat(a), TowerElem::Rat(b)) => Ok(TowerElem::Rat(a + b)),
            (TowerElem::Ext(u1, v1), TowerElem::Ext(u2, v2)) => Ok(TowerElem::Ext(
                Box::new(u1.add(u2)?),
                Box::new(v1.add(v2)?),
            )),
            _ => Err(Error::pre("tower elements at different levels")),
        }
    }

    pub fn neg(&self) -> TowerElem {
        match self {
            TowerElem::Rat(a) => TowerElem::Rat(-a),
            TowerElem::Ext(u, v) => TowerElem::Ext(Box::new(u.neg()), Box::new(v.neg())),
        }
    }

    pub fn sub(&self, other: &TowerElem) -> Result<TowerElem> {
        self.add(&other.neg())
    }

    /// Coordinates over the full 2^level basis, flattened depth-first.
    pub fn flatten(&self) -> Vec<Rational> {
        match self {
            TowerElem::Rat(r) => vec![r.clone()],
            TowerElem::Ext(u, v) => {
                let mut out = u.flatten();
                out.extend(v.flatten());
                out
            }
        }
    }

    pub fn text(&self) -> String {
        let coords: Vec<String> = self.flatten().iter().map(rational_text).collect();
        format!("[{}]", coords.join(", "))
    }
}

/// A tower of quadratic extensions over Q. `gens[i]` is a level-i element,
/// verified to be a nonsquare at level i when adjoined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadTower {
    gens: Vec<TowerElem>,
}

impl QuadTower {
    pub fn rationals() -> QuadTower {
        QuadTower { gens: Vec::new() }
    }

    pub fn levels(&self) -> usize {
        self.gens.len()
    }

    pub fn degree(&self) -> usize {
        1 << self.gens.len()
    }

    pub fn gens(&self) -> &[TowerElem] {
        &self.gens
    }

    /// The adjoined square root of `gens[i]` as a top-level element.
    pub fn root(&self, i: usize) -> Result<TowerElem> {
        if i >= self.gens.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut out = TowerElem::Ext(
            Box::new(TowerElem::zero_at(i)),
            Box::new(TowerElem::zero_at(i).add(&one_at(i))?),
        );
        while out.level() < self.levels() {
            out = out.lift();
        }
        Ok(out)
    }

    /// Adjoin sqrt(g); `g` must be a nonsquare element of the current top
    /// level.
    pub fn extend(&self, g: &TowerElem) -> Result<QuadTower> {
        if g.level() != self.levels() {
            return Err(Error::pre(format!(
                "generator at level {} does not match tower top {}",
                g.level(),
                self.levels()
            )));
        }
        if g.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.sqrt(g)?.is_some() {
            return Err(Error::pre("generator is already a square in the tower"));
        }
        let mut gens = self.gens.clone();
        gens.push(g.clone());
        Ok(QuadTower { gens })
    }

    pub fn mul(&self, a: &TowerElem, b: &TowerElem) -> Result<TowerElem> {
        match (a, b) {
            (TowerElem::Rat(x), TowerElem::Rat(y)) => Ok(TowerElem::Rat(x * y)),
            (TowerElem::Ext(u1, v1), TowerElem::Ext(u2, v2)) => {
                let level = a.level();
                if level > self.levels() {
                    return Err(Error::IndexOutOfRange(level));
                }
                let g = &self.gens[level - 1];
                let uu = self.mul(u1, u2)?;
                let vv = self.mul(v1, v2)?;
                let u = uu.add(&self.mul(&vv, g)?)?;
                let v = self.mul(u1, v2)?.add(&self.mul(v1, u2)?)?;
                Ok(TowerElem::Ext(Box::new(u), Box::new(v)))
            }
            _ => Err(Error::pre("tower elements at different levels")),
        }
    }

    pub fn inverse(&self, a: &TowerElem) -> Result<TowerElem> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        match a {
            TowerElem::Rat(x) => Ok(TowerElem::Rat(x.recip())),
            TowerElem::Ext(u, v) => {
                let level = a.level();
                let g = &self.gens[level - 1];
                // (u + v r)^-1 = (u - v r) / (u^2 - g v^2)
                let norm = self
                    .mul(u, u)?
                    .sub(&self.mul(g, &self.mul(v, v)?)?)?;
                let ninv = self.inverse(&norm)?;
                Ok(TowerElem::Ext(
                    Box::new(self.mul(u, &ninv)?),
                    Box::new(self.mul(&v.neg(), &ninv)?),
                ))
            }
        }
    }

    pub fn div(&self, a: &TowerElem, b: &TowerElem) -> Result<TowerElem> {
        self.mul(a, &self.inverse(b)?)
    }

    /// Exact square root at the element's own level, if one exists.
    pub fn sqrt(&self, a: &TowerElem) -> Result<Option<TowerElem>> {
        if a.is_zero() {
            return Ok(Some(a.clone()));
        }
        Ok(self.sqrt_inner(a))
    }

    pub fn is_square(&self, a: &TowerElem) -> Result<bool> {
        Ok(self.sqrt(a)?.is_some())
    }

    fn sqrt_inner(&self, a: &TowerElem) -> Option<TowerElem> {
        match a {
            TowerElem::Rat(x) => sqrt_rational(x).map(TowerElem::Rat),
            TowerElem::Ext(u, v) => {
                let level = a.level();
                let g = &self.gens[level - 1];
                if v.is_zero() {
                    // root in the lower level, or t * sqrt(g) with t^2 = u/g
                    if let Some(s) = self.sqrt_inner(u) {
                        return Some(TowerElem::Ext(
                            Box::new(s),
                            Box::new(TowerElem::zero_at(level - 1)),
                        ));
                    }
                    let ug = self.div(u, g).ok()?;
                    if let Some(t) = self.sqrt_inner(&ug) {
                        return Some(TowerElem::Ext(
                            Box::new(TowerElem::zero_at(level - 1)),
                            Box::new(t),
                        ));
                    }
                    return None;
                }
                // y = s + t r with s^2 + g t^2 = u and 2 s t = v, so
                // s^2 = (u +/- n)/2 where n^2 = u^2 - g v^2
                let disc = self
                    .mul(u, u)
                    .ok()?
                    .sub(&self.mul(g, &self.mul(v, v).ok()?).ok()?)
                    .ok()?;
                if disc.is_zero() {
                    return None;
                }
                let n = self.sqrt_inner(&disc)?;
                let half = TowerElem::Rat(Rational::new(BigInt::from(1), BigInt::from(2)))
                    .lift_to(level - 1);
                for n_signed in [n.clone(), n.neg()] {
                    let s2 = self.mul(&u.add(&n_signed).ok()?, &half).ok()?;
                    if s2.is_zero() {
                        continue;
                    }
                    if let Some(s) = self.sqrt_inner(&s2) {
                        if s.is_zero() {
                            continue;
                        }
                        let t = self.div(&self.mul(v, &half).ok()?, &s).ok()?;
                        let y = TowerElem::Ext(Box::new(s), Box::new(t));
                        if self.mul(&y, &y).map(|sq| sq == *a).unwrap_or(false) {
                            return Some(y);
                        }
                    }
                }
                None
            }
        }
    }

    /// Build a level-1 element of this tower from a quadratic-field element,
    /// assuming gens[0] matches the field generator.
    pub fn from_quadratic(&self, x: &MultiquadElement) -> Result<TowerElem> {
        let coords = x.coords();
        match coords.len() {
            1 => Ok(TowerElem::Rat(coords[0].clone())),
            2 => {
                if self.gens.is_empty() {
                    return Err(Error::pre("tower has no quadratic level"));
                }
                let expected = TowerElem::Rat(Rational::from_integer(
                    x.field().generators()[0].clone(),
                ));
                if self.gens[0] != expected {
                    return Err(Error::pre("tower base generator mismatch"));
                }
                Ok(TowerElem::Ext(
                    Box::new(TowerElem::Rat(coords[0].clone())),
                    Box::new(TowerElem::Rat(coords[1].clone())),
                ))
            }
            _ => Err(Error::pre("only rational or quadratic elements embed here")),
        }
    }

    /// All field automorphisms fixing Q, found by extending generator-root
    /// images level by level.
    pub fn automorphisms(&self) -> Result<Vec<TowerHom>> {
        let mut partial: Vec<Vec<TowerElem>> = vec![Vec::new()];
        for i in 0..self.levels() {
            let mut next = Vec::new();
            for images in &partial {
                let hom = TowerHom {
                    images: images.clone(),
                };
                // image of g_i under the partial map (g_i only involves
                // earlier roots), then a square root of it at the top level
                let gi = self.apply_partial(&hom, &self.gens[i])?;
                if let Some(y) = self.sqrt(&gi)? {
                    let mut a = images.clone();
                    a.push(y.clone());
                    next.push(a);
                    let mut b = images.clone();
                    b.push(y.neg());
                    next.push(b);
                }
            }
            partial = next;
        }
        Ok(partial
            .into_iter()
            .map(|images| TowerHom { images })
            .collect())
    }

    /// Apply a (possibly partial) homomorphism; the element may only involve
    /// roots the hom has images for.
    fn apply_partial(&self, hom: &TowerHom, x: &TowerElem) -> Result<TowerElem> {
        let top = self.levels();
        match x {
            TowerElem::Rat(r) => Ok(TowerElem::Rat(r.clone()).lift_to(top)),
            TowerElem::Ext(u, v) => {
                let idx = x.level() - 1;
                if idx >= hom.images.len() {
                    return Err(Error::pre("homomorphism lacks an image for this root"));
                }
                let fu = self.apply_partial(hom, u)?;
                let fv = self.apply_partial(hom, v)?;
                self.mul(&fv, &hom.images[idx])?.add(&fu)
            }
        }
    }

    /// Apply a full automorphism to a top-level element.
    pub fn apply(&self, hom: &TowerHom, x: &TowerElem) -> Result<TowerElem> {
        if hom.images.len() != self.levels() {
            return Err(Error::pre("homomorphism does not cover the whole tower"));
        }
        self.apply_partial(hom, x)
    }

    /// Compose two automorphisms: (a . b)(x) = a(b(x)).
    pub fn compose(&self, a: &TowerHom, b: &TowerHom) -> Result<TowerHom> {
        let images = b
            .images
            .iter()
            .map(|img| self.apply(a, img))
            .collect::<Result<Vec<_>>>()?;
        Ok(TowerHom { images })
    }

    /// The automorphism group as a permutation group via its regular action
    /// on the automorphism list. Requires the extension to be Galois
    /// (automorphism count = degree).
    pub fn galois_group(&self) -> Result<FiniteTwoGroup> {
        Ok(self.galois_group_with_autos()?.0)
    }

    /// As `galois_group`, also returning the automorphism list and each
    /// automorphism's regular-action permutation (index-aligned).
    pub fn galois_group_with_autos(
        &self,
    ) -> Result<(FiniteTwoGroup, Vec<TowerHom>, Vec<Perm>)> {
        let autos = self.automorphisms()?;
        if autos.len() != self.degree() {
            return Err(Error::pre(format!(
                "not Galois: {} automorphisms for degree {}",
                autos.len(),
                self.degree()
            )));
        }
        let n = autos.len();
        let mut perms = Vec::with_capacity(n);
        for a in &autos {
            let mut images = Vec::with_capacity(n);
            for b in &autos {
                let ab = self.compose(a, b)?;
                let idx = autos
                    .iter()
                    .position(|c| c.images == ab.images)
                    .ok_or_else(|| Error::pre("composition left the automorphism set"))?;
                images.push(idx as u16);
            }
            perms.push(Perm::from_images(images)?);
        }
        let group = FiniteTwoGroup::from_generators(n, &perms)?;
        Ok((group, autos, perms))
    }

    pub fn galois_fingerprint(&self) -> Result<GroupFingerprint> {
        Ok(GroupFingerprint::of(&self.galois_group()?))
    }
}

fn one_at(level: usize) -> TowerElem {
    TowerElem::int(1).lift_to(level)
}

/// An automorphism given by the images of the adjoined roots, all expressed
/// at the top level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerHom {
    images: Vec<TowerElem>,
}

impl TowerHom {
    pub fn images(&self) -> &[TowerElem] {
        &self.images
    }

    pub fn is_identity(&self, tower: &QuadTower) -> Result<bool> {
        for (i, img) in self.images.iter().enumerate() {
            if *img != tower.root(i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
