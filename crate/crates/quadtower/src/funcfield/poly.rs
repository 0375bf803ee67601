//! Dense univariate polynomials over a degree <= 2 number field, with exact
//! factorization for degree <= 4.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactfield::multiquad::{MultiquadElement, MultiquadField};
use crate::exactfield::rational::{rational_text, Rational};

/// A polynomial in t with coefficients in the constant field, low to high,
/// trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: MultiquadField,
    coeffs: Vec<MultiquadElement>,
}

impl Poly {
    pub fn new(field: &MultiquadField, mut coeffs: Vec<MultiquadElement>) -> Poly {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &MultiquadField) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: &MultiquadField, c: MultiquadElement) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn monomial(field: &MultiquadField, c: MultiquadElement, k: usize) -> Poly {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    /// t - root
    pub fn linear_from_root(field: &MultiquadField, root: &MultiquadElement) -> Poly {
        Poly::new(field, vec![root.neg(), field.one()])
    }

    pub fn field(&self) -> &MultiquadField {
        &self.field
    }

    pub fn coeffs(&self) -> &[MultiquadElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> MultiquadElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> MultiquadElement {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == self.field.one()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).add(&other.coeff(k)).expect("same field"))
            .collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.mul(b).expect("same field");
                coeffs[i + j] = coeffs[i + j].add(&prod).expect("same field");
            }
        }
        Poly::new(&self.field, coeffs)
    }

    pub fn scale(&self, c: &MultiquadElement) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs
                .iter()
                .map(|a| a.mul(c).expect("same field"))
                .collect(),
        )
    }

    pub fn eval(&self, x: &MultiquadElement) -> MultiquadElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).expect("same field").add(c).expect("same field");
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::ZeroInput);
        }
        let dlead_inv = divisor.leading().inverse()?;
        let mut rem = self.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len()];
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let shift = rem.degree() - divisor.degree();
            let factor = rem.leading().mul(&dlead_inv)?;
            quot[shift] = factor.clone();
            let sub = divisor.mul(&Poly::monomial(&self.field, factor, shift));
            rem = rem.sub(&sub);
        }
        Ok((Poly::new(&self.field, quot), rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other
            .divrem(self)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    /// (leading coefficient, monic polynomial).
    pub fn monic(&self) -> Result<(MultiquadElement, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let lead = self.leading();
        Ok((lead.clone(), self.scale(&lead.inverse()?)))
    }

    /// Apply the nontrivial automorphism of the constant field (identity on Q).
    pub fn conj(&self) -> Poly {
        if self.field.degree_log2() == 0 {
            return self.clone();
        }
        Poly::new(
            &self.field,
            self.coeffs.iter().map(|c| c.apply_signs(1)).collect(),
        )
    }

    /// Substitute t -> t + shift.
    pub fn shift(&self, shift: &MultiquadElement) -> Poly {
        let lin = Poly::new(&self.field, vec![shift.clone(), self.field.one()]);
        let mut acc = Poly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(&self.field, c.clone()));
        }
        acc
    }

    /// Canonical text form, e.g. "t^2+2*t+2" or "t-i".
    pub fn text(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_owned(),
                _ => format!("t^{k}"),
            };
            let (sign, mag) = coeff_text(c, &self.field);
            let body = if k == 0 {
                mag
            } else if mag == "1" {
                var
            } else {
                format!("{mag}*{var}")
            };
            if terms.is_empty() {
                terms.push(if sign { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{}{}", if sign { "-" } else { "+" }, body));
            }
        }
        terms.join("")
    }
}

/// Render a constant-field element as (is_negative, magnitude) where the
/// sign is pulled out only for single-component values.
fn coeff_text(c: &MultiquadElement, field: &MultiquadField) -> (bool, String) {
    let coords = c.coords();
    let gaussian = field.generators().first().map(|g| *g == BigInt::from(-1)).unwrap_or(false);
    let radical = if gaussian {
        "i".to_owned()
    } else if let Some(g) = field.generators().first() {
        format!("sqrt{g}")
    } else {
        String::new()
    };
    let part = |r: &Rational, with_rad: bool| -> String {
        if !with_rad {
            return rational_text(&r.abs());
        }
        if r.abs().is_one() {
            radical.clone()
        } else {
            format!("{}*{radical}", rational_text(&r.abs()))
        }
    };
    if coords.len() == 1 || coords[1].is_zero() {
        (coords[0].is_negative(), part(&coords[0], false))
    } else if coords[0].is_zero() {
        (coords[1].is_negative(), part(&coords[1], true))
    } else {
        // both components: keep the sign inside, e.g. "(1-2*i)"
        let a = rational_text(&coords[0]);
        let b = part(&coords[1], true);
        let op = if coords[1].is_negative() { "-" } else { "+" };
        (false, format!("({a}{op}{b})"))
    }
}

/// Parse a polynomial in t over the given constant field, e.g. "t^2+2*t+2",
/// "t-i", "t^2-2*i*t-1".
pub fn parse_poly(field: &MultiquadField, text: &str) -> Result<Poly> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".to_owned()));
    }
    // split into signed terms at top level
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut chars = text.chars().peekable();
    let mut prev: Option<char> = None;
    while let Some(ch) = chars.next() {
        if (ch == '+' || ch == '-') && prev.map(|p| p != '^' && p != '*' && p != '(').unwrap_or(false)
        {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if ch == '-' && prev.is_none() {
            negative = true;
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    terms.push((negative, current));

    let mut out = Poly::zero(field);
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(Error::Parse("dangling sign".to_owned()));
        }
        let mut coeff = field.one();
        let mut power = 0usize;
        for factor in term.split('*') {
            if let Some(rest) = factor.strip_prefix('t') {
                if rest.is_empty() {
                    power += 1;
                } else if let Some(exp) = rest.strip_prefix('^') {
                    power += exp
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent '{exp}'")))?;
                } else {
                    return Err(Error::Parse(format!("bad factor '{factor}'")));
                }
            } else if factor == "i" {
                if field.generators() != [BigInt::from(-1)] {
                    return Err(Error::Parse("'i' needs the Gaussian constant field".to_owned()));
                }
                coeff = coeff.mul(&field.gen_sqrt(0)?)?;
            } else {
                let r = parse_rational(factor)?;
                coeff = coeff.mul(&field.from_rational(r))?;
            }
        }
        if neg {
            coeff = coeff.neg();
        }
        out = out.add(&Poly::monomial(field, coeff, power));
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Result<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad number '{s}'")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad number '{s}'")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".to_owned()));
    }
    Ok(Rational::new(n, d))
}

/// All roots of `f` in the constant field, with multiplicity.
pub fn roots_in_field(f: &Poly) -> Result<Vec<MultiquadElement>> {
    let field = f.field().clone();
    let mut g = f.monic()?.1;
    let mut roots = Vec::new();
    'outer: loop {
        if g.degree() == 0 {
            break;
        }
        if g.degree() == 1 {
            roots.push(g.coeff(0).neg());
            break;
        }
        for cand in root_candidates(&g)? {
            if g.eval(&cand).is_zero() {
                let lin = Poly::linear_from_root(&field, &cand);
                let (q, r) = g.divrem(&lin)?;
                debug_assert!(r.is_zero());
                g = q;
                roots.push(cand);
                continue 'outer;
            }
        }
        break;
    }
    Ok(roots)
}

/// Candidate roots in the constant field: rational candidates from the
/// rational-root bound on the norm polynomial, and for quadratic constant
/// fields the roots of integer quadratic factors of the norm polynomial.
fn root_candidates(f: &Poly) -> Result<Vec<MultiquadElement>> {
    let field = f.field().clone();
    let norm = f.mul(&f.conj());
    // norm has rational coefficients
    let rat_coeffs: Vec<Rational> = norm
        .coeffs()
        .iter()
        .map(|c| {
            c.as_rational()
                .cloned()
                .ok_or_else(|| Error::pre("norm polynomial not rational"))
        })
        .collect::<Result<_>>()?;
    let (scale, int_coeffs) = clear_denominators(&rat_coeffs);
    let mut cands = Vec::new();
    // rational roots u/v of the integer norm polynomial
    let mut stripped = int_coeffs.clone();
    let mut zero_roots = false;
    while stripped.first().map(|c| c.is_zero()).unwrap_or(false) {
        stripped.remove(0);
        zero_roots = true;
    }
    if zero_roots {
        cands.push(field.zero());
    }
    if let (Some(c0), Some(lead)) = (stripped.first(), stripped.last()) {
        // the scaled polynomial is in u = scale * t, so divide back; any
        // root u/v satisfies |u| <= bound * |v| <= bound * |lead|
        let u_bound = fujiwara_root_bound(&stripped) * lead.abs();
        for u in bounded_divisors(c0, &u_bound) {
            for v in divisors(lead) {
                for sign in [1i64, -1] {
                    let r = Rational::new(&u * BigInt::from(sign), v.clone()) / &scale;
                    cands.push(field.from_rational(r));
                }
            }
        }
    }
    if field.degree_log2() == 1 {
        // irrational roots have a rational quadratic minimal polynomial
        // dividing the norm; enumerate integer quadratic factors
        for (p, q) in quadratic_factors(&int_coeffs) {
            // monic quadratic over Q in the scaled variable u = scale * t:
            // u^2 + p u + q corresponds to t^2 + (p/scale) t + q/scale^2
            let ps = Rational::from_integer(p.clone()) / &scale;
            let qs = Rational::from_integer(q.clone()) / (&scale * &scale);
            let disc = &ps * &ps - Rational::from_integer(BigInt::from(4)) * &qs;
            if disc.is_zero() {
                cands.push(field.from_rational(-&ps / Rational::from_integer(BigInt::from(2))));
                continue;
            }
            let disc_elem = field.from_rational(disc);
            if let Some(delta) = disc_elem.sqrt_exact()? {
                let half = field.from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
                let mp = field.from_rational(-ps.clone());
                for d in [delta.clone(), delta.neg()] {
                    let root = mp.add(&d)?.mul(&half)?;
                    cands.push(root);
                }
            }
        }
    }
    Ok(cands)
}

/// Fujiwara-style bound on the absolute value of any root of an integer
/// polynomial (low to high, nonzero leading and constant coefficients):
/// 2 max_k |c_{n-k}|^(1/k) + 1 rounded up.
fn fujiwara_root_bound(stripped: &[BigInt]) -> BigInt {
    let n = stripped.len() - 1;
    let mut root_max = BigInt::one();
    for k in 1..=n {
        let r = stripped[n - k].abs().nth_root(k as u32) + 1;
        root_max = root_max.max(r);
    }
    root_max * 2 + 1
}

/// Positive divisors of n that are at most `bound`, by whichever of the
/// direct 1..=bound scan or the sqrt(n) divisor-pair scan is cheaper.
fn bounded_divisors(n: &BigInt, bound: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let bound = bound.min(&n).clone();
    let mut out = Vec::new();
    if &bound * &bound <= n {
        let mut d = BigInt::one();
        while d <= bound {
            if (&n % &d).is_zero() {
                out.push(d.clone());
            }
            d += 1;
        }
    } else {
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                if d <= bound {
                    out.push(d.clone());
                }
                let e = &n / &d;
                if e <= bound {
                    out.push(e);
                }
            }
            d += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Scale a rational polynomial (low to high, monic) into a monic integer
/// polynomial via t -> u / scale; returns (scale, integer coefficients of
/// the polynomial in u). The scale is the smallest positive integer s with
/// denom(c_k) | s^(deg - k), computed prime by prime.
fn clear_denominators(coeffs: &[Rational]) -> (Rational, Vec<BigInt>) {
    let deg = coeffs.len() - 1;
    let mut prime_exps: std::collections::BTreeMap<BigInt, u32> = std::collections::BTreeMap::new();
    for (k, c) in coeffs.iter().enumerate() {
        if k == deg {
            continue;
        }
        let pow = (deg - k) as u32;
        for (p, e) in crate::exactfield::rational::factor_int(c.denom()) {
            let need = e.div_ceil(pow);
            let slot = prime_exps.entry(p).or_insert(0);
            *slot = (*slot).max(need);
        }
    }
    let mut scale = BigInt::one();
    for (p, e) in prime_exps {
        scale *= p.pow(e);
    }
    // substitute t = u / scale: coefficient k picks up scale^(deg - k)
    let s = Rational::from_integer(scale);
    let out = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut v = c.clone();
            for _ in 0..deg - k {
                v *= &s;
            }
            debug_assert!(v.denom().is_one());
            v.numer().clone()
        })
        .collect();
    (s, out)
}

/// Monic integer quadratic factors u^2 + p u + q of a monic integer
/// polynomial, found by bounded search over q | constant term.
fn quadratic_factors(coeffs: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let mut stripped = coeffs.to_vec();
    while stripped.first().map(|c| c.is_zero()).unwrap_or(false) {
        stripped.remove(0);
    }
    if stripped.len() < 3 {
        return Vec::new();
    }
    let c0 = stripped[0].clone();
    // the linear coefficient of a quadratic factor is a sum of two roots,
    // so |p| <= 2R; its constant term is a product of two roots, |q| <= R^2
    let root_bound = fujiwara_root_bound(&stripped);
    let bound: BigInt = &root_bound * 2;
    let q_bound = &root_bound * &root_bound;
    let mut out = Vec::new();
    for qd in bounded_divisors(&c0, &q_bound) {
        for qsign in [1i64, -1] {
            let q = &qd * BigInt::from(qsign);
            let mut p = -bound.clone();
            while p <= bound {
                if int_quadratic_divides(&stripped, &p, &q) {
                    out.push((p.clone(), q.clone()));
                }
                p += 1;
            }
        }
    }
    out
}

/// Does u^2 + p u + q divide the monic integer polynomial?
fn int_quadratic_divides(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> bool {
    // synthetic division from the top
    let mut rem: Vec<BigInt> = coeffs.to_vec();
    while rem.len() > 2 {
        let lead = rem.pop().unwrap();
        let n = rem.len();
        rem[n - 1] -= &lead * p;
        rem[n - 2] -= &lead * q;
    }
    rem.iter().all(|c| c.is_zero())
}

/// Complete factorization into monic irreducibles over the constant field,
/// for degree <= 4.
pub fn factor_poly(f: &Poly) -> Result<(MultiquadElement, Vec<(Poly, i64)>)> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.degree() > 4 {
        return Err(Error::pre("factorization supports degree <= 4 only"));
    }
    let (lead, mut g) = f.monic()?;
    let field = f.field().clone();
    let mut irreducibles: Vec<Poly> = Vec::new();
    // strip roots in the constant field
    for root in roots_in_field(&g)? {
        let lin = Poly::linear_from_root(&field, &root);
        let (q, r) = g.divrem(&lin)?;
        debug_assert!(r.is_zero());
        irreducibles.push(lin);
        g = q;
    }
    match g.degree() {
        0 => {}
        2 | 3 => irreducibles.push(g.clone()),
        4 => match split_quartic(&g)? {
            Some((a, b)) => {
                // the halves have no roots (g had none), so they are irreducible
                irreducibles.push(a);
                irreducibles.push(b);
            }
            None => irreducibles.push(g.clone()),
        },
        d => return Err(Error::pre(format!("unexpected residual degree {d}"))),
    }
    // collect exponents over canonical text
    let mut factors: Vec<(Poly, i64)> = Vec::new();
    for irr in irreducibles {
        match factors.iter_mut().find(|(p, _)| *p == irr) {
            Some((_, e)) => *e += 1,
            None => factors.push((irr, 1)),
        }
    }
    factors.sort_by_key(|(p, _)| (p.degree(), p.text()));
    Ok((lead, factors))
}

/// Split a monic quartic with no roots in the constant field into two monic
/// quadratics over the field, if possible.
fn split_quartic(g: &Poly) -> Result<Option<(Poly, Poly)>> {
    let field = g.field().clone();
    let quarter = field.from_rational(Rational::new(BigInt::from(-1), BigInt::from(4)));
    let e1 = g.coeff(3);
    let shift = e1.mul(&quarter)?; // t = u - e1/4
    let dep = g.shift(&shift);
    debug_assert!(dep.coeff(3).is_zero());
    let p = dep.coeff(2);
    let q = dep.coeff(1);
    let r = dep.coeff(0);
    let two = field.from_rational(Rational::from_integer(BigInt::from(2)));
    let four = field.from_rational(Rational::from_integer(BigInt::from(4)));
    let half = two.inverse()?;

    let assemble = |u_factors: (Poly, Poly)| -> Result<Option<(Poly, Poly)>> {
        // back-substitute u = t + e1/4
        let back = shift.neg();
        let fa = u_factors.0.shift(&back);
        let fb = u_factors.1.shift(&back);
        debug_assert_eq!(fa.mul(&fb), *g);
        Ok(Some((fa, fb)))
    };

    // biquadratic route: u^4 + p u^2 + r = (u^2 + alpha)(u^2 + beta)
    if q.is_zero() {
        let disc = p.mul(&p)?.sub(&four.mul(&r)?)?;
        let delta = if disc.is_zero() {
            Some(field.zero())
        } else {
            disc.sqrt_exact()?
        };
        if let Some(delta) = delta {
            let alpha = p.add(&delta)?.mul(&half)?;
            let beta = p.sub(&delta)?.mul(&half)?;
            let fa = Poly::new(&field, vec![alpha, field.zero(), field.one()]);
            let fb = Poly::new(&field, vec![beta, field.zero(), field.one()]);
            return assemble((fa, fb));
        }
    }
    // general route: w^2 = W, a nonzero root of the resolvent cubic
    // W^3 + 2 p W^2 + (p^2 - 4 r) W - q^2
    let resolvent = Poly::new(
        &field,
        vec![
            q.mul(&q)?.neg(),
            p.mul(&p)?.sub(&four.mul(&r)?)?,
            two.mul(&p)?,
            field.one(),
        ],
    );
    for w2 in roots_in_field(&resolvent)? {
        if w2.is_zero() {
            continue;
        }
        let Some(w) = w2.sqrt_exact()? else {
            continue;
        };
        // (u^2 + w u + s)(u^2 - w u + s') with s + s' = p + w^2, s' - s = q/w
        let qw = q.div(&w)?;
        let s = p.add(&w2)?.sub(&qw)?.mul(&half)?;
        let sp = p.add(&w2)?.add(&qw)?.mul(&half)?;
        let fa = Poly::new(&field, vec![s, w.clone(), field.one()]);
        let fb = Poly::new(&field, vec![sp, w.neg(), field.one()]);
        if fa.mul(&fb) == dep {
            return assemble((fa, fb));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::rat_int;

    fn gaussian() -> MultiquadField {
        MultiquadField::new(&[-1]).unwrap()
    }

    fn q() -> MultiquadField {
        MultiquadField::rationals()
    }

    #[test]
    fn parse_and_print() {
        let f = parse_poly(&q(), "t^2+2*t+2").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.text(), "t^2+2*t+2");
        let g = parse_poly(&gaussian(), "t-i").unwrap();
        assert_eq!(g.text(), "t-i");
        let h = parse_poly(&gaussian(), "t+2*i").unwrap();
        assert_eq!(h.text(), "t+2*i");
        assert!(parse_poly(&q(), "t+i").is_err());
        let k = parse_poly(&q(), "-t^3+1/2").unwrap();
        assert_eq!(k.degree(), 3);
    }

    #[test]
    fn factor_t2_plus_1() {
        let gi = gaussian();
        let f = parse_poly(&gi, "t^2+1").unwrap();
        let (lead, factors) = factor_poly(&f).unwrap();
        assert!(lead == gi.one());
        let texts: Vec<String> = factors.iter().map(|(p, _)| p.text()).collect();
        assert_eq!(texts, vec!["t+i", "t-i"]);

        // over Q the same polynomial is irreducible
        let f = parse_poly(&q(), "t^2+1").unwrap();
        let (_, factors) = factor_poly(&f).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.degree(), 2);
    }

    #[test]
    fn factor_with_multiplicity() {
        let gi = gaussian();
        // (t-i)^2 (t+2i)
        let ti = parse_poly(&gi, "t-i").unwrap();
        let t2i = parse_poly(&gi, "t+2*i").unwrap();
        let f = ti.mul(&ti).mul(&t2i);
        let (_, factors) = factor_poly(&f).unwrap();
        let mut found: Vec<(String, i64)> =
            factors.iter().map(|(p, e)| (p.text(), *e)).collect();
        found.sort();
        assert_eq!(found, vec![("t+2*i".to_owned(), 1), ("t-i".to_owned(), 2)]);
    }

    #[test]
    fn factor_quartic_over_gaussian() {
        let gi = gaussian();
        // t^4 + 1 splits into two quadratics over Q(i)
        let f = parse_poly(&gi, "t^4+1").unwrap();
        let (_, factors) = factor_poly(&f).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(p, _)| p.degree() == 2));
        let product = factors
            .iter()
            .fold(Poly::constant(&gi, gi.one()), |acc, (p, e)| {
                let mut acc = acc;
                for _ in 0..*e {
                    acc = acc.mul(p);
                }
                acc
            });
        assert_eq!(product, f);
    }

    #[test]
    fn factor_quartic_over_q() {
        // X^4 + 4 = (X^2 - 2X + 2)(X^2 + 2X + 2)
        let f = parse_poly(&q(), "t^4+4").unwrap();
        let (_, factors) = factor_poly(&f).unwrap();
        let texts: Vec<String> = factors.iter().map(|(p, _)| p.text()).collect();
        assert_eq!(texts, vec!["t^2+2*t+2", "t^2-2*t+2"]);
    }

    #[test]
    fn irreducible_cubic_stays() {
        let f = parse_poly(&q(), "t^3-2").unwrap();
        let (_, factors) = factor_poly(&f).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.degree(), 3);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2t - 1)(t + 3) = 2t^2 + 5t - 3
        let f = parse_poly(&q(), "2*t^2+5*t-3").unwrap();
        let (lead, factors) = factor_poly(&f).unwrap();
        assert_eq!(lead, q().from_rational(rat_int(2)));
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(p, _)| p.degree() == 1));
    }

    #[test]
    fn degree_cap() {
        let f = parse_poly(&q(), "t^5+1").unwrap();
        assert!(factor_poly(&f).is_err());
    }

    #[test]
    fn quadratic_roots_in_real_quadratic_field() {
        let k = MultiquadField::new(&[2]).unwrap();
        // t^2 - 2 = (t - sqrt2)(t + sqrt2) over Q(sqrt2)
        let f = parse_poly(&k, "t^2-2").unwrap();
        let (_, factors) = factor_poly(&f).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(p, _)| p.degree() == 1));
    }
}
