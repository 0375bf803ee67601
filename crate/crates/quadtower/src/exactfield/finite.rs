//! Odd-characteristic finite fields F_q, q <= 10^4, with exhaustive-friendly
//! square detection and discrete logarithms.

use std::sync::Arc;

use crate::error::{Error, Result};

/// F_{p^e} as F_p[x] modulo a fixed monic irreducible, chosen as the
/// lexicographically first irreducible of its degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    e: u32,
    /// monic modulus, degree e, coefficients low to high (length e + 1)
    modulus: Arc<Vec<u64>>,
}

fn is_prime(n: u64) -> bool {
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

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::pre(format!("{p} is not an odd prime")));
        }
        if e == 0 {
            return Err(Error::pre("extension degree must be positive"));
        }
        let q = p.checked_pow(e).filter(|&q| q <= 10_000);
        let Some(_) = q else {
            return Err(Error::pre("field size exceeds 10^4"));
        };
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, e)
        };
        Ok(FiniteField {
            p,
            e,
            modulus: Arc::new(modulus),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn zero(&self) -> FiniteFieldElement {
        FiniteFieldElement {
            field: self.clone(),
            coeffs: vec![0; self.e as usize],
        }
    }

    pub fn one(&self) -> FiniteFieldElement {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> FiniteFieldElement {
        let mut coeffs = vec![0; self.e as usize];
        coeffs[0] = n % self.p;
        FiniteFieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_i64(&self, n: i64) -> FiniteFieldElement {
        let p = self.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// Element with the given polynomial-basis coefficients (low to high).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FiniteFieldElement> {
        if coeffs.len() > self.e as usize {
            return Err(Error::pre("too many coefficients"));
        }
        let mut c = vec![0; self.e as usize];
        for (i, &x) in coeffs.iter().enumerate() {
            c[i] = x % self.p;
        }
        Ok(FiniteFieldElement {
            field: self.clone(),
            coeffs: c,
        })
    }

    /// The element whose index in the enumeration order is `idx` (base-p
    /// digits as coefficients).
    pub fn element_by_index(&self, mut idx: u64) -> FiniteFieldElement {
        let mut coeffs = vec![0; self.e as usize];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FiniteFieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FiniteFieldElement> + '_ {
        (0..self.order()).map(move |i| self.element_by_index(i))
    }

    /// The fixed multiplicative generator: the first element in enumeration
    /// order with full order q - 1.
    pub fn generator(&self) -> FiniteFieldElement {
        let q = self.order();
        'outer: for i in 1..q {
            let g = self.element_by_index(i);
            if g.is_zero() {
                continue;
            }
            // check order = q - 1 via maximal proper divisors
            let mut n = q - 1;
            let mut primes = Vec::new();
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    primes.push(d);
                    while n % d == 0 {
                        n /= d;
                    }
                }
                d += 1;
            }
            if n > 1 {
                primes.push(n);
            }
            for r in primes {
                if g.pow((q - 1) / r).is_one() {
                    continue 'outer;
                }
            }
            return g;
        }
        unreachable!("every finite field has a generator")
    }
}

/// Search monic polynomials of degree e in lexicographic coefficient order
/// for the first irreducible one, by trial division against all monic
/// polynomials of degree <= e/2.
fn find_irreducible(p: u64, e: u32) -> Vec<u64> {
    let e = e as usize;
    let count = p.pow(e as u32);
    for idx in 0..count {
        let mut poly = vec![0u64; e + 1];
        let mut n = idx;
        for c in poly.iter_mut().take(e) {
            *c = n % p;
            n /= p;
        }
        poly[e] = 1;
        if poly_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomial of every degree exists")
}

fn poly_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    if f[0] == 0 {
        return e == 1;
    }
    for deg in 1..=e / 2 {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut g = vec![0u64; deg + 1];
            let mut n = idx;
            for c in g.iter_mut().take(deg) {
                *c = n % p;
                n /= p;
            }
            g[deg] = 1;
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut r: Vec<u64> = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap() % p;
        if lead != 0 {
            let shift = r.len() - 1 - dg;
            for i in 0..=dg {
                r[shift + i] = (r[shift + i] + p * p - (lead * g[i]) % p) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&c| c % p == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteFieldElement {
    field: FiniteField,
    coeffs: Vec<u64>,
}

impl FiniteFieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, other: &FiniteFieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::pre("elements belong to different fields"));
        }
        Ok(())
    }

    pub fn add(&self, other: &FiniteFieldElement) -> Result<FiniteFieldElement> {
        self.check_same_field(other)?;
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(FiniteFieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FiniteFieldElement {
        let p = self.field.p;
        FiniteFieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    pub fn sub(&self, other: &FiniteFieldElement) -> Result<FiniteFieldElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FiniteFieldElement) -> Result<FiniteFieldElement> {
        self.check_same_field(other)?;
        let p = self.field.p;
        let e = self.field.e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        // reduce modulo the monic modulus
        let m = &self.field.modulus;
        for i in (e..prod.len()).rev() {
            let lead = prod[i];
            if lead != 0 {
                prod[i] = 0;
                for j in 0..e {
                    let idx = i - e + j;
                    prod[idx] = (prod[idx] + p * p - (lead * m[j]) % p) % p;
                }
            }
        }
        prod.truncate(e);
        Ok(FiniteFieldElement {
            field: self.field.clone(),
            coeffs: prod,
        })
    }

    pub fn pow(&self, mut n: u64) -> FiniteFieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            n >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Result<FiniteFieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    pub fn div(&self, other: &FiniteFieldElement) -> Result<FiniteFieldElement> {
        self.mul(&other.inverse()?)
    }

    /// Euler criterion: x^((q-1)/2) = 1.
    pub fn is_square(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self.pow((self.field.order() - 1) / 2).is_one())
    }

    /// Discrete logarithm with respect to the fixed generator.
    pub fn dlog(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let g = self.field.generator();
        let mut acc = self.field.one();
        for k in 0..self.field.order() - 1 {
            if acc == *self {
                return Ok(k);
            }
            acc = acc.mul(&g)?;
        }
        unreachable!("dlog of a nonzero element exists")
    }

    /// The even-logarithm square root, when the element is a square.
    pub fn sqrt_exact(&self) -> Result<Option<FiniteFieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !self.is_square()? {
            return Ok(None);
        }
        let l = self.dlog()?;
        debug_assert_eq!(l % 2, 0);
        let g = self.field.generator();
        let half = (self.field.order() - 1) >> 1;
        // the two roots have logarithms l/2 and l/2 + (q-1)/2; prefer the
        // even logarithm, falling back to the smaller one when parities agree
        let (e1, e2) = (l / 2, l / 2 + half);
        let exp = if e1 % 2 == 0 || e2 % 2 == 1 { e1 } else { e2 };
        Ok(Some(g.pow(exp)))
    }

    /// Frobenius x -> x^p iterated `k` times.
    pub fn frobenius(&self, k: u32) -> FiniteFieldElement {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.pow(self.field.p);
        }
        out
    }

    pub fn text(&self) -> String {
        format!(
            "[{}]@F{}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.field.order()
        )
    }
}
