//! Exact arithmetic in multiquadratic fields Q(sqrt a_1, ..., sqrt a_d),
//! d <= 3, with square detection by recursive descent.
//!
//! Elements are coordinate vectors over the 2^d basis elements
//! prod_{i in S} sqrt(a_i), indexed by the subset bitmask S.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sqclass::{Independence, SquareClassSpace, SquareClassVector};

use super::rational::{factor_int, rational_text, sqrt_rational, Rational};

/// A multiquadratic extension of Q given by squarefree integer generators
/// whose square classes are independent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiquadField {
    gens: Vec<BigInt>,
}

/// Square-class vector of a nonzero integer over prime labels and the sign.
fn int_class_vector(n: &BigInt) -> SquareClassVector {
    let mut labels: Vec<String> = factor_int(n)
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| format!("p:{p}"))
        .collect();
    if n.is_negative() {
        labels.push("sign:-".to_owned());
    }
    SquareClassVector::from_labels(labels)
}

impl MultiquadField {
    /// The rationals (d = 0).
    pub fn rationals() -> Self {
        MultiquadField { gens: Vec::new() }
    }

    pub fn new(gens: &[i64]) -> Result<Self> {
        Self::new_bigint(gens.iter().map(|&g| BigInt::from(g)).collect())
    }

    pub fn new_bigint(gens: Vec<BigInt>) -> Result<Self> {
        if gens.len() > 3 {
            return Err(Error::pre("at most 3 generators supported"));
        }
        let mut space = SquareClassSpace::new();
        for g in &gens {
            if g.is_zero() {
                return Err(Error::ZeroInput);
            }
            for (_, e) in factor_int(g) {
                if e >= 2 {
                    return Err(Error::pre(format!("generator {g} is not squarefree")));
                }
            }
            let (next, flag) = space.insert_and_test_independent(&int_class_vector(g));
            if flag == Independence::Dependent {
                return Err(Error::pre(format!(
                    "generator {g} is dependent on earlier generators mod squares"
                )));
            }
            space = next;
        }
        Ok(MultiquadField { gens })
    }

    pub fn degree_log2(&self) -> usize {
        self.gens.len()
    }

    pub fn degree(&self) -> usize {
        1 << self.gens.len()
    }

    pub fn generators(&self) -> &[BigInt] {
        &self.gens
    }

    /// The subfield omitting generator `i`.
    pub fn without_generator(&self, i: usize) -> Result<MultiquadField> {
        if i >= self.gens.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut gens = self.gens.clone();
        gens.remove(i);
        Ok(MultiquadField { gens })
    }

    /// The subfield dropping the last generator.
    fn top_subfield(&self) -> MultiquadField {
        MultiquadField {
            gens: self.gens[..self.gens.len() - 1].to_vec(),
        }
    }

    pub fn zero(&self) -> MultiquadElement {
        MultiquadElement {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> MultiquadElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> MultiquadElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = r;
        MultiquadElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<MultiquadElement> {
        if coords.len() != self.degree() {
            return Err(Error::pre(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(MultiquadElement {
            field: self.clone(),
            coords,
        })
    }

    /// sqrt(a_i) as an element.
    pub fn gen_sqrt(&self, i: usize) -> Result<MultiquadElement> {
        if i >= self.gens.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[1 << i] = Rational::one();
        Ok(MultiquadElement {
            field: self.clone(),
            coords,
        })
    }

    fn text(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| format!("sqrt {g}")).collect();
        format!("Q({})", gens.join(", "))
    }
}

/// An exact element of a multiquadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiquadElement {
    field: MultiquadField,
    coords: Vec<Rational>,
}

impl MultiquadElement {
    pub fn field(&self) -> &MultiquadField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.coords[0]
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &MultiquadElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::pre("elements belong to different fields"));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiquadElement) -> Result<MultiquadElement> {
        self.check_same_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(MultiquadElement {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn sub(&self, other: &MultiquadElement) -> Result<MultiquadElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiquadElement {
        MultiquadElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &MultiquadElement) -> Result<MultiquadElement> {
        self.check_same_field(other)?;
        let d = self.field.degree();
        let mut coords = vec![Rational::zero(); d];
        for s in 0..d {
            if self.coords[s].is_zero() {
                continue;
            }
            for t in 0..d {
                if other.coords[t].is_zero() {
                    continue;
                }
                // basis_S * basis_T = (prod_{i in S and T} a_i) * basis_{S xor T}
                let mut factor = BigInt::one();
                let common = s & t;
                for (i, g) in self.field.gens.iter().enumerate() {
                    if common >> i & 1 == 1 {
                        factor *= g;
                    }
                }
                coords[s ^ t] += &self.coords[s] * &other.coords[t] * Rational::from_integer(factor);
            }
        }
        Ok(MultiquadElement {
            field: self.field.clone(),
            coords,
        })
    }

    pub fn scale(&self, r: &Rational) -> MultiquadElement {
        MultiquadElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Split on the last generator: self = u + v * sqrt(a_d), with u, v in
    /// the subfield omitting a_d.
    fn split_top(&self) -> (MultiquadElement, MultiquadElement) {
        let sub = self.field.top_subfield();
        let half = sub.degree();
        let u = MultiquadElement {
            field: sub.clone(),
            coords: self.coords[..half].to_vec(),
        };
        let v = MultiquadElement {
            field: sub,
            coords: self.coords[half..].to_vec(),
        };
        (u, v)
    }

    fn join_top(field: &MultiquadField, u: &MultiquadElement, v: &MultiquadElement) -> MultiquadElement {
        let mut coords = u.coords.clone();
        coords.extend(v.coords.iter().cloned());
        MultiquadElement {
            field: field.clone(),
            coords,
        }
    }

    pub fn inverse(&self) -> Result<MultiquadElement> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.field.degree_log2() == 0 {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        let (u, v) = self.split_top();
        let a = self.field.gens.last().unwrap().clone();
        // (u + v s)^-1 = (u - v s) / (u^2 - a v^2)
        let norm = u
            .mul(&u)?
            .sub(&v.mul(&v)?.scale(&Rational::from_integer(a)))?;
        let ninv = norm.inverse()?;
        let iu = u.mul(&ninv)?;
        let iv = v.neg().mul(&ninv)?;
        Ok(Self::join_top(&self.field, &iu, &iv))
    }

    pub fn div(&self, other: &MultiquadElement) -> Result<MultiquadElement> {
        self.mul(&other.inverse()?)
    }

    /// Exact square root, canonicalized so the first nonzero coordinate is
    /// positive. Returns None when the element is not a square.
    pub fn sqrt_exact(&self) -> Result<Option<MultiquadElement>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self.sqrt_inner().map(|y| y.canonical_sign()))
    }

    pub fn is_square(&self) -> Result<bool> {
        Ok(self.sqrt_exact()?.is_some())
    }

    fn canonical_sign(self) -> MultiquadElement {
        for c in &self.coords {
            if !c.is_zero() {
                if c.is_negative() {
                    return self.neg();
                }
                return self;
            }
        }
        self
    }

    fn sqrt_inner(&self) -> Option<MultiquadElement> {
        if self.field.degree_log2() == 0 {
            return sqrt_rational(&self.coords[0]).map(|r| self.field.from_rational(r));
        }
        let (u, v) = self.split_top();
        let a = Rational::from_integer(self.field.gens.last().unwrap().clone());
        if v.is_zero() {
            // y in subfield, or y = t * sqrt(a) with t^2 = u / a
            if let Some(s) = u.sqrt_inner() {
                return Some(Self::join_top(&self.field, &s, &s.field.zero()));
            }
            let ua = u.scale(&a.recip());
            if let Some(t) = ua.sqrt_inner() {
                return Some(Self::join_top(&self.field, &t.field.zero(), &t));
            }
            return None;
        }
        // y = s + t sqrt(a): s^2 + a t^2 = u, 2 s t = v, so s^2 is a root of
        // z^2 - u z + a v^2 / 4, i.e. s^2 = (u +/- n) / 2 with n^2 = u^2 - a v^2
        let disc = u.mul(&u).ok()?.sub(&v.mul(&v).ok()?.scale(&a)).ok()?;
        if disc.is_zero() {
            return None;
        }
        let n = disc.sqrt_inner()?;
        let two = Rational::from_integer(BigInt::from(2));
        for n_signed in [n.clone(), n.neg()] {
            let s2 = u.add(&n_signed).ok()?.scale(&two.recip());
            if s2.is_zero() {
                continue;
            }
            if let Some(s) = s2.sqrt_inner() {
                if s.is_zero() {
                    continue;
                }
                let t = v.scale(&two.recip()).div(&s).ok()?;
                let y = Self::join_top(&self.field, &s, &t);
                if y.mul(&y).map(|sq| sq == *self).unwrap_or(false) {
                    return Some(y);
                }
            }
        }
        None
    }

    /// Images of the element under all sign patterns sqrt(a_i) -> +/- sqrt(a_i),
    /// in subset-bitmask order of the flipped generator set.
    pub fn galois_orbit(&self) -> Vec<MultiquadElement> {
        let d = self.field.degree();
        (0..d).map(|mask| self.apply_signs(mask)).collect()
    }

    /// The automorphism flipping exactly the generators in `mask`.
    pub fn apply_signs(&self, mask: usize) -> MultiquadElement {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(s, c)| {
                if (s & mask).count_ones() % 2 == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        MultiquadElement {
            field: self.field.clone(),
            coords,
        }
    }

    /// x * sigma_i(x), expressed in the subfield omitting generator i.
    pub fn norm_to_subfield(&self, i: usize) -> Result<MultiquadElement> {
        if i >= self.field.degree_log2() {
            return Err(Error::IndexOutOfRange(i));
        }
        let conj = self.apply_signs(1 << i);
        let prod = self.mul(&conj)?;
        let sub = self.field.without_generator(i)?;
        let mut coords = Vec::with_capacity(sub.degree());
        for (s, c) in prod.coords.iter().enumerate() {
            if s >> i & 1 == 1 {
                debug_assert!(c.is_zero(), "norm has nonzero sqrt(a_i) coordinate");
            } else {
                coords.push(c.clone());
            }
        }
        sub.from_coords(coords)
    }

    /// Embed into a larger multiquadratic field containing every generator.
    pub fn embed(&self, into: &MultiquadField) -> Result<MultiquadElement> {
        let mut gen_map = Vec::with_capacity(self.field.gens.len());
        for g in &self.field.gens {
            let pos = into
                .gens
                .iter()
                .position(|h| h == g)
                .ok_or_else(|| Error::pre(format!("target field lacks generator {g}")))?;
            gen_map.push(pos);
        }
        let mut coords = vec![Rational::zero(); into.degree()];
        for (s, c) in self.coords.iter().enumerate() {
            let mut t = 0usize;
            for (i, &pos) in gen_map.iter().enumerate() {
                if s >> i & 1 == 1 {
                    t |= 1 << pos;
                }
            }
            coords[t] = c.clone();
        }
        into.from_coords(coords)
    }

    /// Canonical text form, e.g. "[1, 1]@Q(sqrt 2)" for 1 + sqrt 2.
    pub fn text(&self) -> String {
        let coords: Vec<String> = self.coords.iter().map(rational_text).collect();
        format!("[{}]@{}", coords.join(", "), self.field.text())
    }
}

impl std::fmt::Display for MultiquadElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.text())
    }
}
