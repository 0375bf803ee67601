//! Hilbert symbols over Q at real and p-adic places, the C4/D4 embedding
//! predicates built on them, and exhaustive Witt data for small finite
//! fields.

use num::{BigInt, One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::finite::FiniteField;
use crate::exactfield::rational::{
    factor_int, is_square_rational, is_sum_of_two_squares, squarefree_part, Rational,
};

/// An evaluation site for symbol computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Place {
    Real,
    Prime(u64),
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "p={p}"),
        }
    }
}

fn legendre(a: i64, p: i64) -> i32 {
    // Euler's criterion; p an odd prime, a not divisible by p
    let a = a.rem_euclid(p);
    debug_assert!(a != 0);
    let mut acc = 1i64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// Squarefree integer representative of the square class, as i64.
fn squarefree_i64(x: &Rational) -> Result<i64> {
    let s = squarefree_part(x)?;
    s.to_i64()
        .ok_or_else(|| Error::pre("square class representative too large"))
}

/// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nonzero
/// solution in the completion at v.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sa = squarefree_i64(a)?;
    let sb = squarefree_i64(b)?;
    Ok(match v {
        Place::Real => {
            if sa < 0 && sb < 0 {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(sa, 2);
            let (beta, v) = split_valuation(sb, 2);
            let eps = |n: i64| (n.rem_euclid(8) - 1) / 2 % 2; // (n-1)/2 mod 2
            let omega = |n: i64| {
                let n8 = n.rem_euclid(8);
                if n8 == 1 || n8 == 7 {
                    0
                } else {
                    1
                }
            }; // (n^2-1)/8 mod 2
            let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let p = p as i64;
            if p < 3 || !is_prime_i64(p) {
                return Err(Error::pre(format!("{p} is not a prime")));
            }
            let (alpha, u) = split_valuation(sa, p);
            let (beta, v) = split_valuation(sb, p);
            let mut s = 1i32;
            if alpha % 2 == 1 && beta % 2 == 1 {
                s *= legendre(-1, p);
            }
            if beta % 2 == 1 {
                s *= legendre(u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(v, p);
            }
            s
        }
    })
}

fn is_prime_i64(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Split n = p^e * u with p not dividing u; returns (e, u).
fn split_valuation(mut n: i64, p: i64) -> (i64, i64) {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    (e, n)
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaceSymbol {
    pub place: Place,
    pub symbol: i32,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolBreakdown {
    pub places: Vec<PlaceSymbol>,
}

impl SymbolBreakdown {
    pub fn negative_places(&self) -> Vec<Place> {
        self.places
            .iter()
            .filter(|ps| ps.symbol == -1)
            .map(|ps| ps.place)
            .collect()
    }

    pub fn product(&self) -> i32 {
        self.places.iter().map(|ps| ps.symbol).product()
    }

    pub fn all_positive(&self) -> bool {
        self.places.iter().all(|ps| ps.symbol == 1)
    }
}

/// The finitely many places where the symbol can be -1: the real place, 2,
/// and the odd primes dividing the squarefree parts.
pub fn relevant_places(a: &Rational, b: &Rational) -> Result<Vec<Place>> {
    let sa = squarefree_part(a)?;
    let sb = squarefree_part(b)?;
    let mut places = vec![Place::Real, Place::Prime(2)];
    let prod: BigInt = &sa * &sb;
    for (p, _) in factor_int(&prod) {
        let p = p.to_u64().ok_or_else(|| Error::pre("prime too large"))?;
        if p != 2 && !places.contains(&Place::Prime(p)) {
            places.push(Place::Prime(p));
        }
    }
    places.sort();
    Ok(places)
}

/// Per-place symbol table; the product over all places must be +1.
pub fn global_product_check(a: &Rational, b: &Rational) -> Result<SymbolBreakdown> {
    let places = relevant_places(a, b)?;
    let mut out = Vec::new();
    for v in places {
        out.push(PlaceSymbol {
            place: v,
            symbol: hilbert_symbol(a, b, v)?,
        });
    }
    let breakdown = SymbolBreakdown { places: out };
    if breakdown.product() != 1 {
        return Err(Error::pre(format!(
            "product formula violated for ({a}, {b})"
        )));
    }
    Ok(breakdown)
}

/// Whether Q(sqrt a) embeds in a cyclic degree-4 Galois extension of Q.
pub fn embeds_in_c4(a: &Rational) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    if is_square_rational(a) {
        return Err(Error::pre("a must be a nonsquare"));
    }
    is_sum_of_two_squares(a)
}

/// Whether the biquadratic Q(sqrt a, sqrt b) embeds in a dihedral-of-order-8
/// extension whose cyclic quartic subgroup sits over Q(sqrt ab): all local
/// symbols (a, b)_v must be +1.
pub fn embeds_in_d4(a: &Rational, b: &Rational) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    if is_square_rational(a) || is_square_rational(b) {
        return Err(Error::pre("degenerate input: [a] and [b] must be nontrivial"));
    }
    Ok(global_product_check(a, b)?.all_positive())
}

/// A diagonal quadratic form <a_1, ..., a_n> over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    entries: Vec<Rational>,
}

impl DiagonalForm {
    pub fn new(entries: Vec<Rational>) -> Result<DiagonalForm> {
        if entries.iter().any(|e| e.is_zero()) {
            return Err(Error::ZeroInput);
        }
        Ok(DiagonalForm { entries })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Dimension parity, discriminant square class and Hasse symbols at the
    /// relevant places.
    pub fn witt_invariants(&self) -> Result<WittInvariants> {
        let dim_mod2 = (self.entries.len() % 2) as u8;
        let mut disc = Rational::one();
        for e in &self.entries {
            disc *= e;
        }
        let disc_class = squarefree_part(&disc)?;
        // places where any pairwise symbol could be -1
        let mut places = vec![Place::Real, Place::Prime(2)];
        for e in &self.entries {
            let s = squarefree_part(e)?;
            for (p, _) in factor_int(&s) {
                let p = p.to_u64().unwrap();
                if p != 2 && !places.contains(&Place::Prime(p)) {
                    places.push(Place::Prime(p));
                }
            }
        }
        places.sort();
        let mut hasse = Vec::new();
        for v in places {
            let mut s = 1i32;
            for i in 0..self.entries.len() {
                for j in i + 1..self.entries.len() {
                    s *= hilbert_symbol(&self.entries[i], &self.entries[j], v)?;
                }
            }
            hasse.push(PlaceSymbol { place: v, symbol: s });
        }
        Ok(WittInvariants {
            dim_mod2,
            disc_class,
            hasse,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WittInvariants {
    pub dim_mod2: u8,
    pub disc_class: BigInt,
    pub hasse: Vec<PlaceSymbol>,
}

/// The Witt-group data of a small odd finite field, computed exhaustively.
#[derive(Debug, Clone, Serialize)]
pub struct WittTable {
    pub q: u64,
    pub ring_size: usize,
    pub additive_exponent: u32,
    pub representatives: Vec<String>,
}

/// Representation-count fingerprint of a diagonal form over F_q: the number
/// of solutions of f(x) = v for each v. Equal fingerprints characterize
/// isometry for nondegenerate forms over a finite field.
fn representation_counts(field: &FiniteField, entries: &[u64]) -> Vec<u64> {
    let q = field.order();
    let mut counts = vec![0u64; q as usize];
    let dim = entries.len();
    let mut idx = vec![0u64; dim];
    loop {
        // evaluate sum a_i x_i^2 by index enumeration
        let mut val = field.zero();
        for (i, &a) in entries.iter().enumerate() {
            let x = field.element_by_index(idx[i]);
            let coeff = field.element_by_index(a);
            let term = coeff.mul(&x.mul(&x).unwrap()).unwrap();
            val = val.add(&term).unwrap();
        }
        // index of the value in enumeration order
        let mut vi = 0u64;
        for (pos, &c) in val.coeffs().iter().enumerate() {
            vi += c * field.p().pow(pos as u32);
        }
        counts[vi as usize] += 1;
        // increment odometer
        let mut carry = true;
        for d in idx.iter_mut() {
            if carry {
                *d += 1;
                if *d == q {
                    *d = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            break;
        }
    }
    counts
}

fn is_isotropic(field: &FiniteField, entries: &[u64]) -> bool {
    let counts = representation_counts(field, entries);
    counts[0] > 1
}

/// Compute W(F_q) by brute force for odd q: classify diagonal forms of
/// dimension <= 2 up to isometry via representation counts, and find the
/// additive order of <1>.
pub fn witt_table_finite_field(q: u64) -> Result<WittTable> {
    if q % 2 == 0 {
        return Err(Error::pre("even field size rejected"));
    }
    // split q into p^e
    let factors = factor_int(&BigInt::from(q));
    if factors.len() != 1 {
        return Err(Error::pre(format!("{q} is not a prime power")));
    }
    let (p, e) = (&factors[0].0, factors[0].1);
    let field = FiniteField::new(p.to_u64().unwrap(), e)?;
    // a fixed nonsquare
    let s = field
        .elements()
        .find(|x| !x.is_zero() && !x.is_square().unwrap())
        .expect("odd finite field has a nonsquare");
    let s_idx = {
        let mut vi = 0u64;
        for (pos, &c) in s.coeffs().iter().enumerate() {
            vi += c * field.p().pow(pos as u32);
        }
        vi
    };
    // anisotropic representatives by dimension
    let mut reps: Vec<(Vec<u64>, String)> = vec![(vec![], "0".to_owned())];
    reps.push((vec![1], "<1>".to_owned()));
    reps.push((vec![s_idx], "<s>".to_owned()));
    // dimension 2: candidates <1,1>, <1,s>, <s,s>; keep the anisotropic
    // ones, deduplicated by representation counts
    let mut seen: Vec<Vec<u64>> = Vec::new();
    for (cand, label) in [
        (vec![1, 1], "<1,1>"),
        (vec![1, s_idx], "<1,s>"),
        (vec![s_idx, s_idx], "<s,s>"),
    ] {
        if is_isotropic(&field, &cand) {
            continue;
        }
        let counts = representation_counts(&field, &cand);
        if seen.contains(&counts) {
            continue;
        }
        seen.push(counts);
        reps.push((cand, label.to_owned()));
    }
    // additive order of <1>: 2 if <1,1> is isotropic (hence hyperbolic),
    // else 4 once <1,1,1,1> is checked split (isotropic with square
    // discriminant over F_q forces the hyperbolic sum)
    let additive_exponent = if is_isotropic(&field, &[1, 1]) {
        2
    } else {
        let counts4 = representation_counts(&field, &[1, 1, 1, 1]);
        let hyper4 = representation_counts(&field, &[1, s_idx, 1, s_idx]);
        // <1,s> has discriminant s, so <1,s,1,s> has square discriminant
        // and is isotropic: it is the split class of dimension 4
        if counts4 != hyper4 {
            return Err(Error::pre("dimension-4 forms failed to match split class"));
        }
        4
    };
    Ok(WittTable {
        q,
        ring_size: reps.len(),
        additive_exponent,
        representatives: reps.into_iter().map(|(_, l)| l).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::rat_int;

    fn h(a: i64, b: i64, v: Place) -> i32 {
        hilbert_symbol(&rat_int(a), &rat_int(b), v).unwrap()
    }

    #[test]
    fn spot_values() {
        assert_eq!(h(-1, -1, Place::Real), -1);
        assert_eq!(h(2, 7, Place::Prime(7)), 1);
        assert_eq!(h(3, 5, Place::Prime(3)), -1);
        assert_eq!(h(-1, -1, Place::Prime(2)), -1);
    }

    #[test]
    fn global_products() {
        let b = global_product_check(&rat_int(3), &rat_int(5)).unwrap();
        assert_eq!(
            b.negative_places(),
            vec![Place::Prime(3), Place::Prime(5)]
        );
        let b = global_product_check(&rat_int(1), &rat_int(-30)).unwrap();
        assert!(b.all_positive());
        let b = global_product_check(&rat_int(-1), &rat_int(-1)).unwrap();
        assert_eq!(b.negative_places(), vec![Place::Real, Place::Prime(2)]);
    }

    #[test]
    fn c4_embedding() {
        assert!(embeds_in_c4(&rat_int(2)).unwrap());
        assert!(!embeds_in_c4(&rat_int(3)).unwrap());
        assert!(embeds_in_c4(&rat_int(5)).unwrap());
        assert!(embeds_in_c4(&rat_int(4)).is_err());
    }

    #[test]
    fn d4_embedding() {
        assert!(embeds_in_d4(&rat_int(2), &rat_int(7)).unwrap());
        assert!(!embeds_in_d4(&rat_int(2), &rat_int(3)).unwrap());
        assert!(!embeds_in_d4(&rat_int(-1), &rat_int(-1)).unwrap());
        assert!(embeds_in_d4(&rat_int(4), &rat_int(3)).is_err());
    }

    #[test]
    fn steinberg_relations() {
        for a in [-5i64, -2, -1, 2, 3, 7, 10] {
            for v in [Place::Real, Place::Prime(2), Place::Prime(3), Place::Prime(5)] {
                assert_eq!(h(a, -a, v), 1, "(a,-a) at {v} for a={a}");
                if a != 1 && 1 - a != 0 {
                    assert_eq!(h(a, 1 - a, v), 1, "(a,1-a) at {v} for a={a}");
                }
            }
        }
    }

    #[test]
    fn witt_tables_small() {
        for (q, exp) in [(3, 4), (5, 2), (7, 4), (9, 2), (11, 4), (13, 2)] {
            let t = witt_table_finite_field(q).unwrap();
            assert_eq!(t.ring_size, 4, "size at q={q}");
            assert_eq!(t.additive_exponent, exp, "exponent at q={q}");
        }
        assert!(witt_table_finite_field(4).is_err());
    }

    #[test]
    fn witt_invariants_product_formula() {
        let f = DiagonalForm::new(vec![rat_int(1), rat_int(-3), rat_int(10)]).unwrap();
        let inv = f.witt_invariants().unwrap();
        let product: i32 = inv.hasse.iter().map(|ps| ps.symbol).product();
        assert_eq!(product, 1);
        assert_eq!(inv.dim_mod2, 1);
        assert_eq!(inv.disc_class, BigInt::from(-30));
    }
}
